#include "trileib/scalar.hpp"

#include <cctype>

#include "trileib/errors.hpp"

namespace trileib {

namespace {

bool valid_integer(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  if (!valid_integer(s))
    throw Error(ErrorCode::ParseError, "not a rational: \"" + std::string(whole) + "\"");
  if (s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return Scalar(parse_integer(s, text));
  const mpz_class num = parse_integer(s.substr(0, slash), text);
  const mpz_class den = parse_integer(s.substr(slash + 1), text);
  if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator: \"" + std::string(text) + "\"");
  Scalar q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Scalar& s) { return s.get_str(); }

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec basis_vec(std::size_t n, std::size_t i) {
  Vec v(n);
  v[i] = 1;
  return v;
}

std::vector<Vec> basis_vectors(std::size_t n) {
  std::vector<Vec> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(basis_vec(n, i));
  return out;
}

bool is_zero(std::span<const Scalar> v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

void axpy(Vec& y, const Scalar& a, std::span<const Scalar> x) {
  if (sgn(a) == 0) return;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (sgn(x[i]) != 0) y[i] += a * x[i];
}

Vec operator+(const Vec& x, const Vec& y) {
  Vec out(x);
  out += y;
  return out;
}

Vec operator-(const Vec& x, const Vec& y) {
  Vec out(x);
  out -= y;
  return out;
}

Vec& operator+=(Vec& x, const Vec& y) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (sgn(y[i]) != 0) x[i] += y[i];
  return x;
}

Vec& operator-=(Vec& x, const Vec& y) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (sgn(y[i]) != 0) x[i] -= y[i];
  return x;
}

Vec scaled(const Vec& x, const Scalar& a) {
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    if (sgn(x[i]) != 0) out[i] = a * x[i];
  return out;
}

Vec concat(const Vec& x, const Vec& y) {
  Vec out;
  out.reserve(x.size() + y.size());
  out.insert(out.end(), x.begin(), x.end());
  out.insert(out.end(), y.begin(), y.end());
  return out;
}

}  // namespace trileib
