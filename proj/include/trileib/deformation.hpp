#pragma once

#include <utility>
#include <vector>

#include "trileib/embedding.hpp"

namespace trileib {

/// Coefficients of t^0 .. t^3 in the embedding-tensor equations for T + t T1.
/// Passing every family means T + t T1 is an embedding tensor for all t.
CheckReport deformation_check(const LinMap& T, const LinMap& T1, const ThreeLeibnizAlgebra& A,
                              const Representation& R, const CheckOptions& opts = {});
/// The t^1 coefficient alone: the 1-cocycle condition on T1.
CheckReport cocycle_check(const LinMap& T1, const LinMap& T, const ThreeLeibnizAlgebra& A, const Representation& R,
                          const CheckOptions& opts = {});

/// delta(a,b)u = T rho_l(a,b,u) - [a,b,Tu]
LinMap coboundary(const Vec& a, const Vec& b, const LinMap& T, const ThreeLeibnizAlgebra& A, const Representation& R);

/// Maps V -> g are flattened row-major: entry (i, j) sits at i*m + j.
Vec flatten(const LinMap& M);
LinMap unflatten(const Vec& v, std::size_t rows, std::size_t cols);

struct CocycleSpace {
  Subspace Z1;
  Subspace B1;
  Subspace B1_cap_Z1;
  std::size_t h1_dim = 0;
};

/// Throws NotAnEmbeddingTensor.
CocycleSpace cocycle_space(const LinMap& T, const ThreeLeibnizAlgebra& A, const Representation& R,
                           const CheckOptions& opts = {});
/// The matrix whose kernel is Z1: one row per (variant, u, v, w, output coordinate).
LinMap cocycle_constraints(const LinMap& T, const ThreeLeibnizAlgebra& A, const Representation& R);

/// T1~ u - T1 u = delta(a,b)u
CheckReport equivalence_witness_check(const LinMap& T1, const LinMap& T1_tilde, const Vec& a, const Vec& b,
                                      const LinMap& T, const ThreeLeibnizAlgebra& A, const Representation& R,
                                      const CheckOptions& opts = {});

/// (phi, psi) from Tsrc to Tdst: phi a homomorphism, psi intertwining the
/// three actions, and Tdst psi = phi Tsrc.
CheckReport check_et_homomorphism(const LinMap& phi, const LinMap& psi, const LinMap& Tsrc, const LinMap& Tdst,
                                  const ThreeLeibnizAlgebra& A, const Representation& R,
                                  const CheckOptions& opts = {});

/// Coefficient families for (id + t[a,b,.], id + t rho_l(a,b,.)) being a
/// homomorphism from T + t T1~ to T + t T1.
CheckReport deformation_equivalence_check(const LinMap& T, const LinMap& T1, const LinMap& T1_tilde, const Vec& a,
                                          const Vec& b, const ThreeLeibnizAlgebra& A, const Representation& R,
                                          const CheckOptions& opts = {});

CheckReport check_nijenhuis_element(const Vec& a, const Vec& b, const LinMap& T, const ThreeLeibnizAlgebra& A,
                                    const Representation& R, const CheckOptions& opts = {});

using ElementPair = std::pair<Vec, Vec>;
std::vector<ElementPair> all_basis_pairs(std::size_t n);
std::vector<ElementPair> nijenhuis_element_scan(const LinMap& T, const ThreeLeibnizAlgebra& A,
                                                const Representation& R,
                                                const std::vector<ElementPair>& candidates,
                                                const CheckOptions& opts = {});

struct TrivialDeformation {
  LinMap T1;
  CheckReport report;
};

/// T1 = delta(a,b), certified by deformation_check and by the equivalence
/// families from T + t T1 to T. Throws NotANijenhuisElement.
TrivialDeformation trivial_deformation(const Vec& a, const Vec& b, const LinMap& T, const ThreeLeibnizAlgebra& A,
                                       const Representation& R, const CheckOptions& opts = {});

struct Conjugate {
  LinMap Tc;
  CheckReport report;
};

/// phi^-1 T psi. Throws NotInvertible or IntertwiningFailure.
Conjugate conjugate_et(const LinMap& T, const LinMap& phi, const LinMap& psi, const ThreeLeibnizAlgebra& A,
                       const Representation& R, const CheckOptions& opts = {});

}  // namespace trileib
