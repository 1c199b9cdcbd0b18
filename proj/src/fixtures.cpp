#include "trileib/fixtures.hpp"

#include "trileib/errors.hpp"

namespace trileib::fixtures {

ThreeLeibnizAlgebra abelian(std::size_t n) { return ThreeLeibnizAlgebra::zero(n); }

namespace {

int permutation_sign(std::vector<std::size_t> p) {
  int sign = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    while (p[i] != i) {
      std::swap(p[i], p[p[i]]);
      sign = -sign;
    }
  return sign;
}

}  // namespace

ThreeLeibnizAlgebra vp4() {
  ThreeLeibnizAlgebra A = abelian(4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t k = 0; k < 4; ++k)
        for (std::size_t l = 0; l < 4; ++l) {
          if (i == j || i == k || i == l || j == k || j == l || k == l) continue;
          A.bracket.at(i, j, k, l) = permutation_sign({i, j, k, l});
        }
  return A;
}

ThreeLeibnizAlgebra n2() {
  ThreeLeibnizAlgebra A = abelian(2);
  A.bracket.at(0, 0, 0, 1) = 1;
  return A;
}

ThreeLeibnizAlgebra broken_n2() {
  ThreeLeibnizAlgebra A = n2();
  A.bracket.at(1, 0, 0, 0) = 1;
  return A;
}

BinaryAlgebra n2_binary() {
  BinaryAlgebra B(2);
  B.at(0, 0, 1) = 1;
  return B;
}

BinaryAlgebra sl2_binary() {
  enum { E, F, H };
  BinaryAlgebra B(3);
  B.at(H, E, E) = 2;
  B.at(E, H, E) = -2;
  B.at(H, F, F) = -2;
  B.at(F, H, F) = 2;
  B.at(E, F, H) = 1;
  B.at(F, E, H) = -1;
  return B;
}

ThreeLeibnizAlgebra deform_a() {
  ThreeLeibnizAlgebra A = abelian(3);
  A.bracket.at(0, 0, 0, 1) = 1;
  return A;
}

ThreeLeibnizAlgebra deform_b() {
  ThreeLeibnizAlgebra A = abelian(3);
  A.bracket.at(1, 0, 1, 2) = 1;
  A.bracket.at(1, 1, 1, 2) = -1;
  return A;
}

ThreeLeibnizAlgebra deform_c() {
  ThreeLeibnizAlgebra A = abelian(3);
  A.bracket.at(0, 0, 0, 2) = -1;
  A.bracket.at(0, 0, 2, 1) = -1;
  A.bracket.at(0, 0, 2, 2) = 1;
  return A;
}

LinMap deform_a_operator() { return LinMap::from_rows({{0, 0, 0}, {0, -1, 0}, {0, 0, 1}}, 3); }
LinMap deform_b_operator() { return LinMap::from_rows({{0, 0, 1}, {0, 0, 0}, {0, 0, 0}}, 3); }
LinMap deform_c_operator() { return LinMap::from_rows({{0, 0, 0}, {1, -1, 0}, {-1, 0, 1}}, 3); }

LinMap n2_differential() {
  LinMap d(2, 2);
  d(1, 0) = 1;
  return d;
}

Action vp4_ideal_action() {
  const ThreeLeibnizAlgebra g = semidirect_sum(vp4(), adjoint_rep(vp4()));
  const std::size_t n = g.dim(), m = 4, off = 4;
  Action act{g, abelian(m), Representation::zero(n, m)};
  // V sits at coordinates 4..7 of g and is an ideal, so restricting the
  // bracket to one V slot lands back in V.
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t u = 0; u < m; ++u)
        for (std::size_t l = 0; l < m; ++l) {
          act.rep.rho_l.at(x, y, u, l) = g.bracket.at(x, y, off + u, off + l);
          act.rep.rho_m.at(x, u, y, l) = g.bracket.at(x, off + u, y, off + l);
          act.rep.rho_r.at(u, x, y, l) = g.bracket.at(off + u, x, y, off + l);
        }
  return act;
}

LinMap vp4_ideal_inclusion() {
  LinMap T(8, 4);
  for (std::size_t u = 0; u < 4; ++u) T(4 + u, u) = 1;
  return T;
}

Action n2_self_action() { return {n2(), n2(), adjoint_rep(n2())}; }

LinMap n2_automorphism(const Scalar& alpha, const Scalar& beta) {
  LinMap phi(2, 2);
  phi(0, 0) = alpha;
  phi(1, 0) = beta;
  phi(1, 1) = alpha * alpha * alpha;
  return phi;
}

LinMap signed_permutation(const std::vector<std::size_t>& perm, const std::vector<int>& signs) {
  if (perm.size() != signs.size()) throw Error(ErrorCode::DimMismatch, "permutation and sign lengths differ");
  LinMap P(perm.size(), perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) P(perm[i], i) = signs[i];
  return P;
}

}  // namespace trileib::fixtures
