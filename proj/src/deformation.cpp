#include "trileib/deformation.hpp"

#include <bit>
#include <string>

#include "trileib/errors.hpp"

namespace trileib {

namespace {

void require_map(const LinMap& T, const ThreeLeibnizAlgebra& A, const Representation& R) {
  R.require_dims(A.dim());
  if (T.rows() != A.dim() || T.cols() != R.space_dim()) throw Error(ErrorCode::DimMismatch, "map must send V to g");
}

enum class Variant { L, M, R };
constexpr Variant kVariants[] = {Variant::L, Variant::M, Variant::R};

const char* variant_rhs(Variant v) {
  switch (v) {
    case Variant::L: return "Tt rho_l(Ttu,Ttv,w)";
    case Variant::M: return "Tt rho_m(Ttu,v,Ttw)";
    case Variant::R: return "Tt rho_r(u,Ttv,Ttw)";
  }
  return "";
}

// T (bit 0) and T1 (bit 1) with their columns precomputed.
struct Pencil {
  const LinMap* maps[2];
  std::vector<Vec> cols[2];

  Pencil(const LinMap& T, const LinMap& T1) : maps{&T, &T1}, cols{T.columns(), T1.columns()} {}
};

// Coefficient of t^k in [Ttu,Ttv,Ttw] minus the chosen right-hand side.
Vec coefficient(const Pencil& p, int k, Variant var, const ThreeLeibnizAlgebra& A, const Representation& R,
                std::size_t u, std::size_t v, std::size_t w) {
  const std::size_t m = R.space_dim();
  Vec r(A.dim());
  for (unsigned mask = 0; mask < 8; ++mask) {
    if (std::popcount(mask) != k) continue;
    const int b0 = mask & 1, b1 = (mask >> 1) & 1, b2 = (mask >> 2) & 1;
    r += A(p.cols[b0][u], p.cols[b1][v], p.cols[b2][w]);
    // b0 picks the outer map; b1, b2 the two inner ones.
    Vec inner;
    switch (var) {
      case Variant::L: inner = R.rho_l.apply_e2(p.cols[b1][u], p.cols[b2][v], w); break;
      case Variant::M: inner = R.rho_m.apply(p.cols[b1][u], basis_vec(m, v), p.cols[b2][w]); break;
      case Variant::R: inner = R.rho_r.apply_e0(u, p.cols[b1][v], p.cols[b2][w]); break;
    }
    r -= p.maps[b0]->apply(inner);
  }
  return r;
}

void coefficient_families(ReportBuilder& rb, const Pencil& p, int k, const ThreeLeibnizAlgebra& A,
                          const Representation& R) {
  const std::size_t m = R.space_dim();
  for (Variant var : kVariants)
    rb.family("t^" + std::to_string(k) + ": [Ttu,Ttv,Ttw] = " + variant_rhs(var), {m, m, m},
              [&, var](const std::size_t* t) { return coefficient(p, k, var, A, R, t[0], t[1], t[2]); });
}

// D = [a,b,.] on g and DV = rho_l(a,b,.) on V, as matrices.
struct Inner {
  LinMap D, DV;
};

Inner inner_derivations(const Vec& a, const Vec& b, const ThreeLeibnizAlgebra& A, const Representation& R) {
  const std::size_t n = A.dim(), m = R.space_dim();
  if (a.size() != n || b.size() != n) throw Error(ErrorCode::DimMismatch, "(a,b) must lie in g");
  Inner in{LinMap(n, n), LinMap(m, m)};
  for (std::size_t x = 0; x < n; ++x) {
    const Vec c = A.bracket.apply_e2(a, b, x);
    for (std::size_t l = 0; l < n; ++l) in.D(l, x) = c[l];
  }
  for (std::size_t u = 0; u < m; ++u) {
    const Vec c = R.rho_l.apply_e2(a, b, u);
    for (std::size_t l = 0; l < m; ++l) in.DV(l, u) = c[l];
  }
  return in;
}

// The families that make id + t[a,b,.] a homomorphism and id + t rho_l(a,b,.)
// intertwine the actions, coefficient by coefficient in t.
void inner_families(ReportBuilder& rb, const Vec& a, const Vec& b, const Inner& in, const ThreeLeibnizAlgebra& A,
                    const Representation& R) {
  const std::size_t n = A.dim(), m = R.space_dim();
  const auto Dc = in.D.columns();
  const auto Vc = in.DV.columns();
  const auto& g = A.bracket;
  const auto &L = R.rho_l, &M = R.rho_m, &Rr = R.rho_r;
  auto e = [](std::size_t dim, std::size_t i) { return basis_vec(dim, i); };

  rb.family("[Dx,Dy,z] + [Dx,y,Dz] + [x,Dy,Dz] = 0", {n, n, n}, [&](const std::size_t* t) {
    Vec r = g.apply_e2(Dc[t[0]], Dc[t[1]], t[2]);
    r += g.apply(Dc[t[0]], e(n, t[1]), Dc[t[2]]);
    r += g.apply_e0(t[0], Dc[t[1]], Dc[t[2]]);
    return r;
  });
  rb.family("[Dx,Dy,Dz] = 0", {n, n, n}, [&](const std::size_t* t) { return g.apply(Dc[t[0]], Dc[t[1]], Dc[t[2]]); });

  rb.family("rho_l(a,b,rho_l(x,y,u)) = rho_l(Dx,y,u) + rho_l(x,Dy,u) + rho_l(x,y,DVu)", {n, n, m},
            [&](const std::size_t* t) {
              Vec r = L.apply(a, b, L.image(t[0], t[1], t[2]));
              r -= L.lin0(Dc[t[0]], t[1], t[2]);
              r -= L.lin1(t[0], Dc[t[1]], t[2]);
              r -= L.lin2(t[0], t[1], Vc[t[2]]);
              return r;
            });
  rb.family("rho_l(a,b,rho_m(x,u,y)) = rho_m(Dx,u,y) + rho_m(x,DVu,y) + rho_m(x,u,Dy)", {n, n, m},
            [&](const std::size_t* t) {
              const std::size_t x = t[0], y = t[1], u = t[2];
              Vec r = L.apply(a, b, M.image(x, u, y));
              r -= M.lin0(Dc[x], u, y);
              r -= M.lin1(x, Vc[u], y);
              r -= M.lin2(x, u, Dc[y]);
              return r;
            });
  rb.family("rho_l(a,b,rho_r(u,x,y)) = rho_r(DVu,x,y) + rho_r(u,Dx,y) + rho_r(u,x,Dy)", {n, n, m},
            [&](const std::size_t* t) {
              const std::size_t x = t[0], y = t[1], u = t[2];
              Vec r = L.apply(a, b, Rr.image(u, x, y));
              r -= Rr.lin0(Vc[u], x, y);
              r -= Rr.lin1(u, Dc[x], y);
              r -= Rr.lin2(u, x, Dc[y]);
              return r;
            });

  rb.family("rho_l(x,Dy,DVu) + rho_l(Dx,y,DVu) + rho_l(Dx,Dy,u) = 0", {n, n, m}, [&](const std::size_t* t) {
    const std::size_t x = t[0], y = t[1], u = t[2];
    Vec r = L.apply(e(n, x), Dc[y], Vc[u]);
    r += L.apply(Dc[x], e(n, y), Vc[u]);
    r += L.apply_e2(Dc[x], Dc[y], u);
    return r;
  });
  rb.family("rho_m(x,DVu,Dy) + rho_m(Dx,u,Dy) + rho_m(Dx,DVu,y) = 0", {n, n, m}, [&](const std::size_t* t) {
    const std::size_t x = t[0], y = t[1], u = t[2];
    Vec r = M.apply_e0(x, Vc[u], Dc[y]);
    r += M.apply(Dc[x], e(m, u), Dc[y]);
    r += M.apply_e2(Dc[x], Vc[u], y);
    return r;
  });
  rb.family("rho_r(u,Dx,Dy) + rho_r(DVu,x,Dy) + rho_r(DVu,Dx,y) = 0", {n, n, m}, [&](const std::size_t* t) {
    const std::size_t x = t[0], y = t[1], u = t[2];
    Vec r = Rr.apply_e0(u, Dc[x], Dc[y]);
    r += Rr.apply(Vc[u], e(n, x), Dc[y]);
    r += Rr.apply_e2(Vc[u], Dc[x], y);
    return r;
  });

  rb.family("rho_l(Dx,Dy,DVu) = 0", {n, n, m},
            [&](const std::size_t* t) { return L.apply(Dc[t[0]], Dc[t[1]], Vc[t[2]]); });
  rb.family("rho_m(Dx,DVu,Dy) = 0", {n, n, m},
            [&](const std::size_t* t) { return M.apply(Dc[t[0]], Vc[t[2]], Dc[t[1]]); });
  rb.family("rho_r(DVu,Dx,Dy) = 0", {n, n, m},
            [&](const std::size_t* t) { return Rr.apply(Vc[t[2]], Dc[t[0]], Dc[t[1]]); });
}

void intertwining_families(ReportBuilder& rb, const LinMap& phi, const LinMap& psi, const ThreeLeibnizAlgebra& A,
                           const Representation& R, const CheckOptions& opts) {
  const std::size_t n = A.dim(), m = R.space_dim();
  if (phi.rows() != n || phi.cols() != n || psi.rows() != m || psi.cols() != m)
    throw Error(ErrorCode::DimMismatch, "phi must be square on g and psi square on V");
  rb.absorb(check_homomorphism(phi, A, A, opts));
  const auto pc = phi.columns();
  const auto sc = psi.columns();
  rb.family("psi(rho_l(x,y,u)) = rho_l(phi x,phi y,psi u)", {n, n, m}, [&](const std::size_t* t) {
    return psi.apply(R.rho_l.image(t[0], t[1], t[2])) - R.rho_l.apply(pc[t[0]], pc[t[1]], sc[t[2]]);
  });
  rb.family("psi(rho_m(x,u,y)) = rho_m(phi x,psi u,phi y)", {n, m, n}, [&](const std::size_t* t) {
    return psi.apply(R.rho_m.image(t[0], t[1], t[2])) - R.rho_m.apply(pc[t[0]], sc[t[1]], pc[t[2]]);
  });
  rb.family("psi(rho_r(u,x,y)) = rho_r(psi u,phi x,phi y)", {m, n, n}, [&](const std::size_t* t) {
    return psi.apply(R.rho_r.image(t[0], t[1], t[2])) - R.rho_r.apply(sc[t[0]], pc[t[1]], pc[t[2]]);
  });
}

}  // namespace

CheckReport deformation_check(const LinMap& T, const LinMap& T1, const ThreeLeibnizAlgebra& A,
                              const Representation& R, const CheckOptions& opts) {
  require_map(T, A, R);
  require_map(T1, A, R);
  const Pencil p(T, T1);
  ReportBuilder rb(opts);
  for (int k = 0; k <= 3; ++k) coefficient_families(rb, p, k, A, R);
  return rb.finish();
}

CheckReport cocycle_check(const LinMap& T1, const LinMap& T, const ThreeLeibnizAlgebra& A, const Representation& R,
                          const CheckOptions& opts) {
  require_map(T, A, R);
  require_map(T1, A, R);
  const Pencil p(T, T1);
  ReportBuilder rb(opts);
  coefficient_families(rb, p, 1, A, R);
  return rb.finish();
}

LinMap coboundary(const Vec& a, const Vec& b, const LinMap& T, const ThreeLeibnizAlgebra& A,
                  const Representation& R) {
  require_map(T, A, R);
  const std::size_t n = A.dim(), m = R.space_dim();
  if (a.size() != n || b.size() != n) throw Error(ErrorCode::DimMismatch, "(a,b) must lie in g");
  LinMap d(n, m);
  for (std::size_t u = 0; u < m; ++u) {
    const Vec col = T.apply(R.rho_l.apply_e2(a, b, u)) - A(a, b, T.column(u));
    for (std::size_t l = 0; l < n; ++l) d(l, u) = col[l];
  }
  return d;
}

Vec flatten(const LinMap& M) { return M.data(); }

LinMap unflatten(const Vec& v, std::size_t rows, std::size_t cols) {
  if (v.size() != rows * cols) throw Error(ErrorCode::DimMismatch, "flattened map has the wrong length");
  LinMap M(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) M(r, c) = v[r * cols + c];
  return M;
}

LinMap cocycle_constraints(const LinMap& T, const ThreeLeibnizAlgebra& A, const Representation& R) {
  require_map(T, A, R);
  const std::size_t n = A.dim(), m = R.space_dim(), unknowns = n * m;
  LinMap C(3 * m * m * m * n, unknowns);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      LinMap E(n, m);
      E(i, j) = 1;
      const Pencil p(T, E);
      std::size_t row = 0;
      for (Variant var : kVariants)
        for (std::size_t u = 0; u < m; ++u)
          for (std::size_t v = 0; v < m; ++v)
            for (std::size_t w = 0; w < m; ++w) {
              const Vec r = coefficient(p, 1, var, A, R, u, v, w);
              for (std::size_t l = 0; l < n; ++l) C(row++, i * m + j) = r[l];
            }
    }
  return C;
}

CocycleSpace cocycle_space(const LinMap& T, const ThreeLeibnizAlgebra& A, const Representation& R,
                           const CheckOptions& opts) {
  CheckReport rep = check_embedding_tensor(T, A, R, opts);
  if (!rep.passed()) throw Error(ErrorCode::NotAnEmbeddingTensor, "T is not an embedding tensor", std::move(rep));
  const std::size_t n = A.dim(), m = R.space_dim();
  CocycleSpace cs;
  cs.Z1 = kernel_basis(cocycle_constraints(T, A, R));
  std::vector<Vec> cobounds;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) cobounds.push_back(flatten(coboundary(basis_vec(n, i), basis_vec(n, j), T, A, R)));
  cs.B1 = Subspace::span(n * m, cobounds);
  cs.B1_cap_Z1 = intersect(cs.B1, cs.Z1);
  cs.h1_dim = quotient_dim(cs.Z1, cs.B1_cap_Z1);
  return cs;
}

CheckReport equivalence_witness_check(const LinMap& T1, const LinMap& T1_tilde, const Vec& a, const Vec& b,
                                      const LinMap& T, const ThreeLeibnizAlgebra& A, const Representation& R,
                                      const CheckOptions& opts) {
  require_map(T1, A, R);
  require_map(T1_tilde, A, R);
  const LinMap d = coboundary(a, b, T, A, R);
  ReportBuilder rb(opts);
  rb.family("T1~u - T1u = delta(a,b)u", {R.space_dim()},
            [&](const std::size_t* t) { return T1_tilde.column(t[0]) - T1.column(t[0]) - d.column(t[0]); });
  return rb.finish();
}

CheckReport check_et_homomorphism(const LinMap& phi, const LinMap& psi, const LinMap& Tsrc, const LinMap& Tdst,
                                  const ThreeLeibnizAlgebra& A, const Representation& R, const CheckOptions& opts) {
  require_map(Tsrc, A, R);
  require_map(Tdst, A, R);
  ReportBuilder rb(opts);
  intertwining_families(rb, phi, psi, A, R, opts);
  const LinMap lhs = Tdst * psi, rhs = phi * Tsrc;
  rb.family("Tdst psi(u) = phi(Tsrc u)", {R.space_dim()},
            [&](const std::size_t* t) { return lhs.column(t[0]) - rhs.column(t[0]); });
  return rb.finish();
}

CheckReport deformation_equivalence_check(const LinMap& T, const LinMap& T1, const LinMap& T1_tilde, const Vec& a,
                                          const Vec& b, const ThreeLeibnizAlgebra& A, const Representation& R,
                                          const CheckOptions& opts) {
  require_map(T, A, R);
  require_map(T1, A, R);
  require_map(T1_tilde, A, R);
  const Inner in = inner_derivations(a, b, A, R);
  ReportBuilder rb(opts);
  inner_families(rb, a, b, in, A, R);
  // t^1 and t^2 coefficients of (T + tT1)(id + tDV) = (id + tD)(T + tT1~).
  const LinMap t1 = T1 + T * in.DV - T1_tilde - in.D * T;
  const LinMap t2 = T1 * in.DV - in.D * T1_tilde;
  rb.family("T1u + T rho_l(a,b,u) = T1~u + [a,b,Tu]", {R.space_dim()},
            [&](const std::size_t* t) { return t1.column(t[0]); });
  rb.family("T1 rho_l(a,b,u) = [a,b,T1~u]", {R.space_dim()}, [&](const std::size_t* t) { return t2.column(t[0]); });
  return rb.finish();
}

CheckReport check_nijenhuis_element(const Vec& a, const Vec& b, const LinMap& T, const ThreeLeibnizAlgebra& A,
                                    const Representation& R, const CheckOptions& opts) {
  require_map(T, A, R);
  const Inner in = inner_derivations(a, b, A, R);
  ReportBuilder rb(opts);
  inner_families(rb, a, b, in, A, R);
  const LinMap d = coboundary(a, b, T, A, R);
  const LinMap killed = in.D * d;
  rb.family("[a,b,T rho_l(a,b,u) - [a,b,Tu]] = 0", {R.space_dim()},
            [&](const std::size_t* t) { return killed.column(t[0]); });
  return rb.finish();
}

std::vector<ElementPair> all_basis_pairs(std::size_t n) {
  std::vector<ElementPair> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.emplace_back(basis_vec(n, i), basis_vec(n, j));
  return out;
}

std::vector<ElementPair> nijenhuis_element_scan(const LinMap& T, const ThreeLeibnizAlgebra& A,
                                                const Representation& R,
                                                const std::vector<ElementPair>& candidates,
                                                const CheckOptions& opts) {
  CheckOptions quick = opts;
  quick.violation_cap = 1;
  std::vector<ElementPair> out;
  for (const auto& [a, b] : candidates)
    if (check_nijenhuis_element(a, b, T, A, R, quick).passed()) out.emplace_back(a, b);
  return out;
}

TrivialDeformation trivial_deformation(const Vec& a, const Vec& b, const LinMap& T, const ThreeLeibnizAlgebra& A,
                                       const Representation& R, const CheckOptions& opts) {
  CheckReport nij = check_nijenhuis_element(a, b, T, A, R, opts);
  if (!nij.passed()) throw Error(ErrorCode::NotANijenhuisElement, "(a,b) is not a Nijenhuis element", std::move(nij));
  LinMap T1 = coboundary(a, b, T, A, R);
  const LinMap zero(T.rows(), T.cols());
  ReportBuilder rb(opts);
  rb.absorb(deformation_check(T, T1, A, R, opts));
  // (id + t[a,b,.], id + t rho_l(a,b,.)) maps T + t T1 onto T.
  rb.absorb(deformation_equivalence_check(T, zero, T1, a, b, A, R, opts));
  return {std::move(T1), rb.finish()};
}

Conjugate conjugate_et(const LinMap& T, const LinMap& phi, const LinMap& psi, const ThreeLeibnizAlgebra& A,
                       const Representation& R, const CheckOptions& opts) {
  require_map(T, A, R);
  if (!phi.is_square() || !psi.is_square()) throw Error(ErrorCode::DimMismatch, "phi and psi must be square");
  const auto phi_inv = inverse(phi);
  if (!phi_inv) throw Error(ErrorCode::NotInvertible, "phi is not invertible");
  if (!inverse(psi)) throw Error(ErrorCode::NotInvertible, "psi is not invertible");
  ReportBuilder rb(opts);
  intertwining_families(rb, phi, psi, A, R, opts);
  CheckReport tw = rb.finish();
  if (!tw.passed())
    throw Error(ErrorCode::IntertwiningFailure, "(phi, psi) is not an automorphism pair", std::move(tw));
  LinMap Tc = *phi_inv * T * psi;
  CheckReport rep = check_embedding_tensor(Tc, A, R, opts);
  return {std::move(Tc), std::move(rep)};
}

}  // namespace trileib
