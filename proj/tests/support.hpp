#pragma once

#include <random>

#include "oracle.hpp"
#include "trileib/deformation.hpp"
#include "trileib/dialgebra.hpp"
#include "trileib/embedding.hpp"
#include "trileib/fixtures.hpp"

namespace support {

using namespace trileib;

inline oracle::Tri3 tri3(const TriTensor& t) {
  const auto& d = t.in_dims();
  oracle::Tri3 o{d[0], d[1], d[2], t.out_dim(), {}};
  for (const auto& s : t.data()) o.c.push_back(s);
  return o;
}

inline oracle::M dense(const LinMap& A) {
  oracle::M out(A.rows(), oracle::V(A.cols()));
  for (std::size_t r = 0; r < A.rows(); ++r)
    for (std::size_t c = 0; c < A.cols(); ++c) out[r][c] = A(r, c);
  return out;
}

inline bool oracle_rep(const ThreeLeibnizAlgebra& A, const Representation& R) {
  return oracle::representation(tri3(A.bracket), tri3(R.rho_l), tri3(R.rho_m), tri3(R.rho_r));
}

inline bool oracle_tri(const TriLeibnizAlgebra& T) {
  return oracle::tri_leibniz(tri3(T.vdash), tri3(T.dashv), tri3(T.perp));
}

inline bool oracle_et(const LinMap& T, const ThreeLeibnizAlgebra& A, const Representation& R) {
  return oracle::embedding_tensor(dense(T), tri3(A.bracket), tri3(R.rho_l), tri3(R.rho_m), tri3(R.rho_r));
}

class Rng {
 public:
  explicit Rng(unsigned seed) : gen_(seed) {}
  std::size_t index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(gen_); }
  int small(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
  Scalar nonzero() {
    int v = 0;
    while (v == 0) v = small(-2, 2);
    return Scalar(v);
  }
  bool coin() { return small(0, 1) == 1; }

  LinMap matrix(std::size_t rows, std::size_t cols, int lo = -2, int hi = 2) {
    LinMap M(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) M(r, c) = small(lo, hi);
    return M;
  }

  /// Unipotent upper-triangular times a signed permutation: always invertible.
  LinMap invertible(std::size_t n) {
    LinMap U = LinMap::identity(n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = r + 1; c < n; ++c) U(r, c) = small(-1, 1);
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), gen_);
    std::vector<int> signs(n);
    for (auto& s : signs) s = coin() ? 1 : -1;
    return U * fixtures::signed_permutation(perm, signs);
  }

  /// Adds a nonzero value to one random coefficient.
  void perturb(TriTensor& t) {
    const auto& d = t.in_dims();
    t.at(index(d[0]), index(d[1]), index(d[2]), index(t.out_dim())) += nonzero();
  }

  std::mt19937& engine() { return gen_; }

 private:
  std::mt19937 gen_;
};

/// rho'(.., u) = P rho(.., P^-1 u): the same representation in another basis of V.
inline Representation transport(const Representation& R, const LinMap& P) {
  const LinMap Pinv = *inverse(P);
  const std::size_t n = R.algebra_dim(), m = R.space_dim();
  Representation out = Representation::zero(n, m);
  const auto pc = Pinv.columns();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t u = 0; u < m; ++u) {
        const Vec l = P.apply(R.rho_l.apply_e0(a, basis_vec(n, b), pc[u]));
        const Vec mm = P.apply(R.rho_m.apply_e0(a, pc[u], basis_vec(n, b)));
        const Vec r = P.apply(R.rho_r.apply_e2(pc[u], basis_vec(n, a), b));
        std::copy(l.begin(), l.end(), out.rho_l.slice(a, b, u).begin());
        std::copy(mm.begin(), mm.end(), out.rho_m.slice(a, u, b).begin());
        std::copy(r.begin(), r.end(), out.rho_r.slice(u, a, b).begin());
      }
  return out;
}

/// [x,y,z]' = P[P^-1 x, P^-1 y, P^-1 z]
inline ThreeLeibnizAlgebra transport(const ThreeLeibnizAlgebra& A, const LinMap& P) {
  const LinMap Pinv = *inverse(P);
  const std::size_t n = A.dim();
  const auto pc = Pinv.columns();
  ThreeLeibnizAlgebra out = ThreeLeibnizAlgebra::zero(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Vec v = P.apply(A(pc[i], pc[j], pc[k]));
        std::copy(v.begin(), v.end(), out.bracket.slice(i, j, k).begin());
      }
  return out;
}

}  // namespace support
