#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "trileib/scalar.hpp"

namespace trileib {

/// Trilinear map K^d0 x K^d1 x K^d2 -> K^out stored densely:
/// t(i,j,k)[l] lives at ((i*d1 + j)*d2 + k)*out + l.
class TriTensor {
 public:
  TriTensor() = default;
  TriTensor(std::array<std::size_t, 3> in, std::size_t out);

  const std::array<std::size_t, 3>& in_dims() const { return in_; }
  std::size_t in_dim(int slot) const { return in_[slot]; }
  std::size_t out_dim() const { return out_; }

  Scalar& at(std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    return data_[offset(i, j, k) + l];
  }
  const Scalar& at(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return data_[offset(i, j, k) + l];
  }

  /// Image of a basis triple.
  std::span<const Scalar> slice(std::size_t i, std::size_t j, std::size_t k) const {
    return {data_.data() + offset(i, j, k), out_};
  }
  std::span<Scalar> slice(std::size_t i, std::size_t j, std::size_t k) {
    return {data_.data() + offset(i, j, k), out_};
  }
  bool slice_is_zero(std::size_t i, std::size_t j, std::size_t k) const {
    for (const Scalar& s : slice(i, j, k))
      if (sgn(s) != 0) return false;
    return true;
  }
  Vec image(std::size_t i, std::size_t j, std::size_t k) const {
    auto s = slice(i, j, k);
    return Vec(s.begin(), s.end());
  }

  /// Multilinear evaluation; throws DimMismatch on wrong argument lengths.
  Vec apply(const Vec& x, const Vec& y, const Vec& z) const;

  // Mixed forms: one argument is a basis index, the others are vectors.
  Vec apply_e0(std::size_t i, const Vec& y, const Vec& z) const;
  Vec apply_e2(const Vec& x, const Vec& y, std::size_t k) const;
  // Linear in the one vector slot.
  Vec lin0(const Vec& x, std::size_t j, std::size_t k) const;
  Vec lin1(std::size_t i, const Vec& y, std::size_t k) const;
  Vec lin2(std::size_t i, std::size_t j, const Vec& z) const;

  bool is_zero() const;
  const std::vector<Scalar>& data() const { return data_; }

  friend bool operator==(const TriTensor& a, const TriTensor& b) {
    return a.in_ == b.in_ && a.out_ == b.out_ && a.data_ == b.data_;
  }

 private:
  std::size_t offset(std::size_t i, std::size_t j, std::size_t k) const {
    return ((i * in_[1] + j) * in_[2] + k) * out_;
  }

  std::array<std::size_t, 3> in_{0, 0, 0};
  std::size_t out_ = 0;
  std::vector<Scalar> data_;
};

/// Structure constants c[i][j][k][l] of a ternary bracket on K^n.
using Bracket3 = TriTensor;
inline Bracket3 make_bracket(std::size_t n) { return TriTensor({n, n, n}, n); }

/// Which slots of an action carry the algebra g (dim n) and which carry V (dim m).
enum class Signature { LL, MM, RR };

inline TriTensor make_action(Signature sig, std::size_t n, std::size_t m) {
  switch (sig) {
    case Signature::LL: return TriTensor({n, n, m}, m);
    case Signature::MM: return TriTensor({n, m, n}, m);
    case Signature::RR: return TriTensor({m, n, n}, m);
  }
  return {};
}

bool has_signature(const TriTensor& t, Signature sig, std::size_t n, std::size_t m);

}  // namespace trileib
