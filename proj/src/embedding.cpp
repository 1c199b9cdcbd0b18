#include "trileib/embedding.hpp"

#include <string>

#include "trileib/errors.hpp"

namespace trileib {

namespace {

void require_map(const LinMap& T, const ThreeLeibnizAlgebra& A, const Representation& R) {
  R.require_dims(A.dim());
  if (T.rows() != A.dim() || T.cols() != R.space_dim())
    throw Error(ErrorCode::DimMismatch, "T must map V to g");
}

}  // namespace

CheckReport check_embedding_tensor(const LinMap& T, const ThreeLeibnizAlgebra& A, const Representation& R,
                                   const CheckOptions& opts) {
  require_map(T, A, R);
  const std::size_t m = R.space_dim();
  const auto tc = T.columns();
  ReportBuilder rb(opts);
  rb.family("[Tu,Tv,Tw] = T rho_l(Tu,Tv,w)", {m, m, m}, [&](const std::size_t* t) {
    return A(tc[t[0]], tc[t[1]], tc[t[2]]) - T.apply(R.rho_l.apply_e2(tc[t[0]], tc[t[1]], t[2]));
  });
  rb.family("[Tu,Tv,Tw] = T rho_m(Tu,v,Tw)", {m, m, m}, [&](const std::size_t* t) {
    return A(tc[t[0]], tc[t[1]], tc[t[2]]) - T.apply(R.rho_m.apply(tc[t[0]], basis_vec(m, t[1]), tc[t[2]]));
  });
  rb.family("[Tu,Tv,Tw] = T rho_r(u,Tv,Tw)", {m, m, m}, [&](const std::size_t* t) {
    return A(tc[t[0]], tc[t[1]], tc[t[2]]) - T.apply(R.rho_r.apply_e0(t[0], tc[t[1]], tc[t[2]]));
  });
  return rb.finish();
}

CheckReport check_averaging(const LinMap& T, const ThreeLeibnizAlgebra& A, const CheckOptions& opts) {
  if (T.rows() != A.dim() || T.cols() != A.dim())
    throw Error(ErrorCode::DimMismatch, "averaging operator must be square of algebra size");
  return check_embedding_tensor(T, A, adjoint_rep(A), opts);
}

CheckReport check_nijenhuis_operator(const LinMap& N, const TriLeibnizAlgebra& TA, const CheckOptions& opts) {
  const std::size_t n = TA.dim();
  if (N.rows() != n || N.cols() != n) throw Error(ErrorCode::DimMismatch, "N must be square of algebra size");
  const LinMap N2 = N * N, N3 = N2 * N;
  const auto nc = N.columns();
  ReportBuilder rb(opts);
  for (Tri d : kAllTri) {
    const Bracket3& c = TA[d];
    const std::string s(tri_name(d));
    rb.family("[Nx,Ny,Nz]_" + s + " = N([x,Ny,Nz]_" + s + " + [Nx,y,Nz]_" + s + " + [Nx,Ny,z]_" + s +
                  ") - N^2([Nx,y,z]_" + s + " + [x,Ny,z]_" + s + " + [x,y,Nz]_" + s + ") + N^3[x,y,z]_" + s,
              {n, n, n}, [&](const std::size_t* t) {
                const std::size_t x = t[0], y = t[1], z = t[2];
                const Vec &Nx = nc[x], &Ny = nc[y], &Nz = nc[z];
                Vec two = c.apply_e0(x, Ny, Nz);
                two += c.apply(Nx, basis_vec(n, y), Nz);
                two += c.apply_e2(Nx, Ny, z);
                Vec one = c.lin0(Nx, y, z);
                one += c.lin1(x, Ny, z);
                one += c.lin2(x, y, Nz);
                Vec r = c.apply(Nx, Ny, Nz);
                r -= N.apply(two);
                r += N2.apply(one);
                r -= N3.apply(c.image(x, y, z));
                return r;
              });
  }
  return rb.finish();
}

NijenhuisLift lift_NT(const LinMap& T, const ThreeLeibnizAlgebra& A, const Representation& R) {
  require_map(T, A, R);
  const std::size_t n = A.dim(), m = R.space_dim();
  LinMap N(n + m, n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t u = 0; u < m; ++u) N(i, n + u) = T(i, u);
  return {std::move(N), hemisemidirect(A, R)};
}

CheckReport graph_check(const LinMap& T, const ThreeLeibnizAlgebra& A, const Representation& R,
                        const CheckOptions& opts) {
  require_map(T, A, R);
  const std::size_t n = A.dim(), m = R.space_dim();
  const TriLeibnizAlgebra H = hemisemidirect(A, R);
  std::vector<Vec> graph(m);
  for (std::size_t u = 0; u < m; ++u) graph[u] = concat(T.column(u), basis_vec(m, u));
  auto off_graph = [&](const Vec& p) {
    Vec g(p.begin(), p.begin() + n), v(p.begin() + n, p.end());
    return g - T.apply(v);
  };
  ReportBuilder rb(opts);
  for (Tri d : kAllTri) {
    const Bracket3& c = H[d];
    rb.family("[Gr(T),Gr(T),Gr(T)]_" + std::string(tri_name(d)) + " in Gr(T)", {m, m, m},
              [&](const std::size_t* t) { return off_graph(c.apply(graph[t[0]], graph[t[1]], graph[t[2]])); });
  }
  return rb.finish();
}

TriLeibnizAlgebra induced_brackets(const LinMap& T, const Representation& R) {
  const std::size_t m = R.space_dim();
  if (T.cols() != m || T.rows() != R.algebra_dim()) throw Error(ErrorCode::DimMismatch, "T must map V to g");
  const auto tc = T.columns();
  TriLeibnizAlgebra TA = TriLeibnizAlgebra::zero(m);
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = 0; v < m; ++v)
      for (std::size_t w = 0; w < m; ++w) {
        const Vec vdash = R.rho_l.apply_e2(tc[u], tc[v], w);
        const Vec perp = R.rho_m.apply(tc[u], basis_vec(m, v), tc[w]);
        const Vec dashv = R.rho_r.apply_e0(u, tc[v], tc[w]);
        std::copy(vdash.begin(), vdash.end(), TA.vdash.slice(u, v, w).begin());
        std::copy(perp.begin(), perp.end(), TA.perp.slice(u, v, w).begin());
        std::copy(dashv.begin(), dashv.end(), TA.dashv.slice(u, v, w).begin());
      }
  return TA;
}

TriLeibnizAlgebra induced_tri_leibniz(const LinMap& T, const ThreeLeibnizAlgebra& A, const Representation& R,
                                      const CheckOptions& opts) {
  CheckReport rep = check_embedding_tensor(T, A, R, opts);
  if (!rep.passed()) throw Error(ErrorCode::NotAnEmbeddingTensor, "T is not an embedding tensor", std::move(rep));
  return induced_brackets(T, R);
}

CheckReport check_tri_homomorphism(const LinMap& T, const TriLeibnizAlgebra& TA, const ThreeLeibnizAlgebra& A,
                                   const CheckOptions& opts) {
  const std::size_t m = TA.dim();
  if (T.cols() != m || T.rows() != A.dim()) throw Error(ErrorCode::DimMismatch, "T must map V to g");
  const auto tc = T.columns();
  ReportBuilder rb(opts);
  for (Tri d : kAllTri) {
    const Bracket3& c = TA[d];
    rb.family("T[u,v,w]_" + std::string(tri_name(d)) + " = [Tu,Tv,Tw]", {m, m, m}, [&](const std::size_t* t) {
      return T.apply(c.image(t[0], t[1], t[2])) - A(tc[t[0]], tc[t[1]], tc[t[2]]);
    });
  }
  return rb.finish();
}

Representation copies_representation(const ThreeLeibnizAlgebra& A, std::size_t copies) {
  const std::size_t n = A.dim(), m = n * copies;
  Representation R = Representation::zero(n, m);
  for (std::size_t q = 0; q < copies; ++q)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          for (std::size_t l = 0; l < n; ++l) {
            R.rho_l.at(i, j, q * n + k, q * n + l) = A.bracket.at(i, j, k, l);
            R.rho_m.at(i, q * n + j, k, q * n + l) = A.bracket.at(i, j, k, l);
            R.rho_r.at(q * n + i, j, k, q * n + l) = A.bracket.at(i, j, k, l);
          }
  return R;
}

LinMap sum_map(std::size_t n, std::size_t copies) {
  LinMap T(n, n * copies);
  for (std::size_t q = 0; q < copies; ++q)
    for (std::size_t i = 0; i < n; ++i) T(i, q * n + i) = 1;
  return T;
}

LinMap copy_projection(std::size_t n, std::size_t copies, std::size_t i) {
  if (i >= copies) throw Error(ErrorCode::IndexOutOfRange, "copy index out of range");
  LinMap T(n, n * copies);
  for (std::size_t k = 0; k < n; ++k) T(k, i * n + k) = 1;
  return T;
}

}  // namespace trileib
