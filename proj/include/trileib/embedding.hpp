#pragma once

#include "trileib/trileibniz.hpp"

namespace trileib {

/// The three equalities [Tu,Tv,Tw] = T rho_l(Tu,Tv,w) = T rho_m(Tu,v,Tw) = T rho_r(u,Tv,Tw),
/// each reported as its own family.
CheckReport check_embedding_tensor(const LinMap& T, const ThreeLeibnizAlgebra& A, const Representation& R,
                                   const CheckOptions& opts = {});
/// Embedding tensor for the adjoint representation.
CheckReport check_averaging(const LinMap& T, const ThreeLeibnizAlgebra& A, const CheckOptions& opts = {});

CheckReport check_nijenhuis_operator(const LinMap& N, const TriLeibnizAlgebra& TA, const CheckOptions& opts = {});

struct NijenhuisLift {
  LinMap N;              // (x, u) -> (Tu, 0) on g + V
  TriLeibnizAlgebra TA;  // hemisemidirect product
};

NijenhuisLift lift_NT(const LinMap& T, const ThreeLeibnizAlgebra& A, const Representation& R);

/// Closure of Gr(T) = {(Tu, u)} under the three hemisemidirect brackets. The
/// residual is the g-part of a bracket minus T applied to its V-part.
CheckReport graph_check(const LinMap& T, const ThreeLeibnizAlgebra& A, const Representation& R,
                        const CheckOptions& opts = {});

/// [u,v,w]_vdash = rho_l(Tu,Tv,w), [u,v,w]_perp = rho_m(Tu,v,Tw), [u,v,w]_dashv = rho_r(u,Tv,Tw).
/// Throws NotAnEmbeddingTensor.
TriLeibnizAlgebra induced_tri_leibniz(const LinMap& T, const ThreeLeibnizAlgebra& A, const Representation& R,
                                      const CheckOptions& opts = {});
/// Same brackets without verifying T.
TriLeibnizAlgebra induced_brackets(const LinMap& T, const Representation& R);

/// T[u,v,w]_t = [Tu,Tv,Tw] for every t.
CheckReport check_tri_homomorphism(const LinMap& T, const TriLeibnizAlgebra& TA, const ThreeLeibnizAlgebra& A,
                                   const CheckOptions& opts = {});

/// g acting componentwise on k copies of itself; copy q occupies q*n .. q*n+n-1.
Representation copies_representation(const ThreeLeibnizAlgebra& A, std::size_t copies);
/// (z_1, ..., z_k) -> z_1 + ... + z_k
LinMap sum_map(std::size_t n, std::size_t copies);
/// (z_1, ..., z_k) -> z_i
LinMap copy_projection(std::size_t n, std::size_t copies, std::size_t i);

}  // namespace trileib
