#include "trileib/tensor.hpp"

#include "trileib/errors.hpp"

namespace trileib {

TriTensor::TriTensor(std::array<std::size_t, 3> in, std::size_t out)
    : in_(in), out_(out), data_(in[0] * in[1] * in[2] * out) {}

namespace {

void require(bool ok) {
  if (!ok) throw Error(ErrorCode::DimMismatch, "argument length does not match tensor slot");
}

}  // namespace

Vec TriTensor::apply(const Vec& x, const Vec& y, const Vec& z) const {
  require(x.size() == in_[0] && y.size() == in_[1] && z.size() == in_[2]);
  Vec out(out_);
  Scalar xy;
  for (std::size_t i = 0; i < in_[0]; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < in_[1]; ++j) {
      if (sgn(y[j]) == 0) continue;
      xy = x[i] * y[j];
      for (std::size_t k = 0; k < in_[2]; ++k) {
        if (sgn(z[k]) == 0) continue;
        auto s = slice(i, j, k);
        for (std::size_t l = 0; l < out_; ++l)
          if (sgn(s[l]) != 0) out[l] += xy * z[k] * s[l];
      }
    }
  }
  return out;
}

Vec TriTensor::apply_e0(std::size_t i, const Vec& y, const Vec& z) const {
  require(i < in_[0] && y.size() == in_[1] && z.size() == in_[2]);
  Vec out(out_);
  Scalar yz;
  for (std::size_t j = 0; j < in_[1]; ++j) {
    if (sgn(y[j]) == 0) continue;
    for (std::size_t k = 0; k < in_[2]; ++k) {
      if (sgn(z[k]) == 0) continue;
      yz = y[j] * z[k];
      auto s = slice(i, j, k);
      for (std::size_t l = 0; l < out_; ++l)
        if (sgn(s[l]) != 0) out[l] += yz * s[l];
    }
  }
  return out;
}

Vec TriTensor::apply_e2(const Vec& x, const Vec& y, std::size_t k) const {
  require(x.size() == in_[0] && y.size() == in_[1] && k < in_[2]);
  Vec out(out_);
  Scalar xy;
  for (std::size_t i = 0; i < in_[0]; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < in_[1]; ++j) {
      if (sgn(y[j]) == 0) continue;
      xy = x[i] * y[j];
      auto s = slice(i, j, k);
      for (std::size_t l = 0; l < out_; ++l)
        if (sgn(s[l]) != 0) out[l] += xy * s[l];
    }
  }
  return out;
}

Vec TriTensor::lin0(const Vec& x, std::size_t j, std::size_t k) const {
  require(x.size() == in_[0] && j < in_[1] && k < in_[2]);
  Vec out(out_);
  for (std::size_t i = 0; i < in_[0]; ++i)
    if (sgn(x[i]) != 0) axpy(out, x[i], slice(i, j, k));
  return out;
}

Vec TriTensor::lin1(std::size_t i, const Vec& y, std::size_t k) const {
  require(i < in_[0] && y.size() == in_[1] && k < in_[2]);
  Vec out(out_);
  for (std::size_t j = 0; j < in_[1]; ++j)
    if (sgn(y[j]) != 0) axpy(out, y[j], slice(i, j, k));
  return out;
}

Vec TriTensor::lin2(std::size_t i, std::size_t j, const Vec& z) const {
  require(i < in_[0] && j < in_[1] && z.size() == in_[2]);
  Vec out(out_);
  for (std::size_t k = 0; k < in_[2]; ++k)
    if (sgn(z[k]) != 0) axpy(out, z[k], slice(i, j, k));
  return out;
}

bool TriTensor::is_zero() const { return trileib::is_zero(std::span<const Scalar>(data_)); }

bool has_signature(const TriTensor& t, Signature sig, std::size_t n, std::size_t m) {
  const TriTensor ref = make_action(sig, n, m);
  return t.in_dims() == ref.in_dims() && t.out_dim() == ref.out_dim();
}

}  // namespace trileib
