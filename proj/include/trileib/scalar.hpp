#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace trileib {

/// Exact rational. gmpxx keeps every value canonical (lowest terms, positive
/// denominator) after each operation.
using Scalar = mpq_class;
using Vec = std::vector<Scalar>;

/// Parses "p", "p/q" or "-p/q" with optional surrounding whitespace. The
/// result is canonicalized; q = 0 and trailing garbage raise ParseError.
Scalar parse_scalar(std::string_view text);
std::string to_string(const Scalar& s);

inline bool is_zero(const Scalar& s) { return sgn(s) == 0; }

Vec zero_vec(std::size_t n);
Vec basis_vec(std::size_t n, std::size_t i);
std::vector<Vec> basis_vectors(std::size_t n);

bool is_zero(std::span<const Scalar> v);

/// y += a * x
void axpy(Vec& y, const Scalar& a, std::span<const Scalar> x);
Vec operator+(const Vec& x, const Vec& y);
Vec operator-(const Vec& x, const Vec& y);
Vec& operator+=(Vec& x, const Vec& y);
Vec& operator-=(Vec& x, const Vec& y);
Vec scaled(const Vec& x, const Scalar& a);

/// Concatenation (x, y) in a direct sum.
Vec concat(const Vec& x, const Vec& y);

}  // namespace trileib
