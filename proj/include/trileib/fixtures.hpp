#pragma once

#include <vector>

#include "trileib/deformation.hpp"
#include "trileib/dialgebra.hpp"

namespace trileib::fixtures {

/// Zero bracket on K^n.
ThreeLeibnizAlgebra abelian(std::size_t n);
/// 4-dim vector product algebra: [e_i,e_j,e_k] = sum_l eps_ijkl e_l.
ThreeLeibnizAlgebra vp4();
/// [e0,e0,e0] = e1, everything else zero.
ThreeLeibnizAlgebra n2();
/// n2 with [e1,e0,e0] = e0 added; fails the fundamental identity.
ThreeLeibnizAlgebra broken_n2();

/// [e0,e0] = e1.
BinaryAlgebra n2_binary();
/// sl(2) on (e, f, h): [h,e] = 2e, [h,f] = -2f, [e,f] = h.
BinaryAlgebra sl2_binary();

/// Three 3-dim algebras carrying embedding tensors with nonzero coboundaries:
///   deform_a: [e0,e0,e0] = e1
///   deform_b: [e1,e0,e1] = e2, [e1,e1,e1] = -e2
///   deform_c: [e0,e0,e0] = -e2, [e0,e0,e2] = -e1 + e2
ThreeLeibnizAlgebra deform_a();
ThreeLeibnizAlgebra deform_b();
ThreeLeibnizAlgebra deform_c();
/// Averaging operators on the algebras above (adjoint representation).
LinMap deform_a_operator();
LinMap deform_b_operator();
LinMap deform_c_operator();

/// d(e0) = e1, d(e1) = 0 on n2.
LinMap n2_differential();

/// The ideal V of vp4 + V (semidirect sum with the adjoint representation),
/// acted on by restricting the bracket; T is the inclusion.
Action vp4_ideal_action();
LinMap vp4_ideal_inclusion();

/// n2 acting on itself through the adjoint representation.
Action n2_self_action();

/// [[alpha,0],[beta,alpha^3]]: an automorphism of n2 for alpha != 0.
LinMap n2_automorphism(const Scalar& alpha, const Scalar& beta);
/// Permutation matrix sending e_i to sign_i * e_perm[i].
LinMap signed_permutation(const std::vector<std::size_t>& perm, const std::vector<int>& signs);

}  // namespace trileib::fixtures
