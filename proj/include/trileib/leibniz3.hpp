#pragma once

#include <cstddef>

#include "trileib/check.hpp"
#include "trileib/linalg.hpp"
#include "trileib/tensor.hpp"

namespace trileib {

struct ThreeLeibnizAlgebra {
  Bracket3 bracket;

  ThreeLeibnizAlgebra() = default;
  explicit ThreeLeibnizAlgebra(Bracket3 b) : bracket(std::move(b)) {}
  static ThreeLeibnizAlgebra zero(std::size_t n) { return ThreeLeibnizAlgebra(make_bracket(n)); }

  std::size_t dim() const { return bracket.out_dim(); }
  Vec operator()(const Vec& x, const Vec& y, const Vec& z) const { return bracket.apply(x, y, z); }

  friend bool operator==(const ThreeLeibnizAlgebra&, const ThreeLeibnizAlgebra&) = default;
};

/// Binary algebra [e_i,e_j] = sum_l b[i][j][l] e_l.
struct BinaryAlgebra {
  std::size_t n = 0;
  std::vector<Scalar> b;

  BinaryAlgebra() = default;
  explicit BinaryAlgebra(std::size_t dim) : n(dim), b(dim * dim * dim) {}

  Scalar& at(std::size_t i, std::size_t j, std::size_t l) { return b[(i * n + j) * n + l]; }
  const Scalar& at(std::size_t i, std::size_t j, std::size_t l) const { return b[(i * n + j) * n + l]; }
  Vec operator()(const Vec& x, const Vec& y) const;

  friend bool operator==(const BinaryAlgebra&, const BinaryAlgebra&) = default;
};

/// Representation of an n-dim 3-Leibniz algebra on K^m.
struct Representation {
  TriTensor rho_l;  // g x g x V -> V
  TriTensor rho_m;  // g x V x g -> V
  TriTensor rho_r;  // V x g x g -> V

  static Representation zero(std::size_t n, std::size_t m);

  std::size_t algebra_dim() const { return rho_l.in_dim(0); }
  std::size_t space_dim() const { return rho_l.out_dim(); }
  /// Throws DimMismatch unless all three tensors have the signatures for (n, m).
  void require_dims(std::size_t n) const;

  friend bool operator==(const Representation&, const Representation&) = default;
};

CheckReport check_fundamental_identity(const ThreeLeibnizAlgebra& A, const CheckOptions& opts = {});
CheckReport check_homomorphism(const LinMap& phi, const ThreeLeibnizAlgebra& A,
                               const ThreeLeibnizAlgebra& B, const CheckOptions& opts = {});
CheckReport check_subalgebra(const Subspace& S, const ThreeLeibnizAlgebra& A, const CheckOptions& opts = {});
CheckReport check_ideal(const Subspace& I, const ThreeLeibnizAlgebra& A, const CheckOptions& opts = {});

struct Quotient {
  ThreeLeibnizAlgebra algebra;
  LinMap projection;  // dim(A/I) x dim(A)
  LinMap section;     // dim(A) x dim(A/I), standard basis lift of the kept coordinates
};

/// A/I on the standard coordinates that are not pivots of I's echelon basis.
Quotient quotient(const ThreeLeibnizAlgebra& A, const Subspace& I, const CheckOptions& opts = {});

CheckReport check_representation(const ThreeLeibnizAlgebra& A, const Representation& R,
                                 const CheckOptions& opts = {});
Representation adjoint_rep(const ThreeLeibnizAlgebra& A);
/// g + V with [(x,u),(y,v),(z,w)] = ([x,y,z], rho_l(x,y,w) + rho_m(x,v,z) + rho_r(u,y,z)).
ThreeLeibnizAlgebra semidirect_sum(const ThreeLeibnizAlgebra& A, const Representation& R);

/// Left Leibniz identity [x,[y,z]] = [[x,y],z] + [y,[x,z]].
CheckReport check_leibniz(const BinaryAlgebra& B, const CheckOptions& opts = {});
/// [x,y,z] = [[x,y],z]
ThreeLeibnizAlgebra three_from_binary(const BinaryAlgebra& B);
/// Leibniz algebra on g (x) g, basis e_i (x) e_j at index i*n + j.
BinaryAlgebra binary_on_tensor_square(const ThreeLeibnizAlgebra& A);

}  // namespace trileib
