#include "trileib/leibniz3.hpp"

#include "trileib/errors.hpp"

namespace trileib {

Vec BinaryAlgebra::operator()(const Vec& x, const Vec& y) const {
  if (x.size() != n || y.size() != n) throw Error(ErrorCode::DimMismatch, "binary bracket argument length");
  Vec out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(y[j]) == 0) continue;
      axpy(out, x[i] * y[j], std::span<const Scalar>(b.data() + (i * n + j) * n, n));
    }
  }
  return out;
}

Representation Representation::zero(std::size_t n, std::size_t m) {
  return {make_action(Signature::LL, n, m), make_action(Signature::MM, n, m),
          make_action(Signature::RR, n, m)};
}

void Representation::require_dims(std::size_t n) const {
  const std::size_t m = space_dim();
  if (!has_signature(rho_l, Signature::LL, n, m) || !has_signature(rho_m, Signature::MM, n, m) ||
      !has_signature(rho_r, Signature::RR, n, m))
    throw Error(ErrorCode::DimMismatch, "representation tensors do not match the algebra dimension");
}

CheckReport check_fundamental_identity(const ThreeLeibnizAlgebra& A, const CheckOptions& opts) {
  const auto& c = A.bracket;
  const std::size_t n = A.dim();
  ReportBuilder rb(opts);
  rb.family("[a,b,[x,y,z]] = [[a,b,x],y,z] + [x,[a,b,y],z] + [x,y,[a,b,z]]", {n, n, n, n, n},
            [&](const std::size_t* t) {
              const std::size_t a = t[0], b = t[1], x = t[2], y = t[3], z = t[4];
              if (c.slice_is_zero(x, y, z) && c.slice_is_zero(a, b, x) && c.slice_is_zero(a, b, y) &&
                  c.slice_is_zero(a, b, z))
                return Vec{};
              Vec r = c.lin2(a, b, c.image(x, y, z));
              r -= c.lin0(c.image(a, b, x), y, z);
              r -= c.lin1(x, c.image(a, b, y), z);
              r -= c.lin2(x, y, c.image(a, b, z));
              return r;
            });
  return rb.finish();
}

CheckReport check_homomorphism(const LinMap& phi, const ThreeLeibnizAlgebra& A, const ThreeLeibnizAlgebra& B,
                               const CheckOptions& opts) {
  if (phi.cols() != A.dim() || phi.rows() != B.dim())
    throw Error(ErrorCode::DimMismatch, "homomorphism shape does not match the algebras");
  const std::size_t n = A.dim();
  const auto cols = phi.columns();
  ReportBuilder rb(opts);
  rb.family("phi[x,y,z] = [phi x,phi y,phi z]", {n, n, n}, [&](const std::size_t* t) {
    return phi.apply(A.bracket.image(t[0], t[1], t[2])) - B(cols[t[0]], cols[t[1]], cols[t[2]]);
  });
  return rb.finish();
}

namespace {

void require_ambient(const Subspace& S, const ThreeLeibnizAlgebra& A) {
  if (S.ambient_dim() != A.dim()) throw Error(ErrorCode::AmbientMismatch, "subspace ambient differs from algebra");
}

}  // namespace

CheckReport check_subalgebra(const Subspace& S, const ThreeLeibnizAlgebra& A, const CheckOptions& opts) {
  require_ambient(S, A);
  const auto s = S.basis_vectors();
  const std::size_t r = s.size();
  ReportBuilder rb(opts);
  rb.family("[S,S,S] in S", {r, r, r},
            [&](const std::size_t* t) { return S.reduce(A(s[t[0]], s[t[1]], s[t[2]])); });
  return rb.finish();
}

CheckReport check_ideal(const Subspace& I, const ThreeLeibnizAlgebra& A, const CheckOptions& opts) {
  require_ambient(I, A);
  const auto s = I.basis_vectors();
  const std::size_t r = s.size(), n = A.dim();
  const auto& c = A.bracket;
  ReportBuilder rb(opts);
  rb.family("[I,g,g] in I", {r, n, n}, [&](const std::size_t* t) { return I.reduce(c.lin0(s[t[0]], t[1], t[2])); });
  rb.family("[g,I,g] in I", {n, r, n}, [&](const std::size_t* t) { return I.reduce(c.lin1(t[0], s[t[1]], t[2])); });
  rb.family("[g,g,I] in I", {n, n, r}, [&](const std::size_t* t) { return I.reduce(c.lin2(t[0], t[1], s[t[2]])); });
  return rb.finish();
}

Quotient quotient(const ThreeLeibnizAlgebra& A, const Subspace& I, const CheckOptions& opts) {
  CheckReport rep = check_ideal(I, A, opts);
  if (!rep.passed()) throw Error(ErrorCode::NotAnIdeal, "subspace is not an ideal", std::move(rep));
  const std::size_t n = A.dim();
  std::vector<bool> pivot(n, false);
  for (auto p : I.pivots()) pivot[p] = true;
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < n; ++i)
    if (!pivot[i]) kept.push_back(i);
  const std::size_t q = kept.size();

  Quotient out{ThreeLeibnizAlgebra::zero(q), LinMap(q, n), LinMap(n, q)};
  for (std::size_t i = 0; i < n; ++i) {
    const Vec red = I.reduce(basis_vec(n, i));
    for (std::size_t p = 0; p < q; ++p) out.projection(p, i) = red[kept[p]];
  }
  for (std::size_t p = 0; p < q; ++p) out.section(kept[p], p) = 1;
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j)
      for (std::size_t k = 0; k < q; ++k) {
        const Vec img = out.projection.apply(A.bracket.image(kept[i], kept[j], kept[k]));
        auto dst = out.algebra.bracket.slice(i, j, k);
        std::copy(img.begin(), img.end(), dst.begin());
      }
  return out;
}

CheckReport check_representation(const ThreeLeibnizAlgebra& A, const Representation& R, const CheckOptions& opts) {
  R.require_dims(A.dim());
  const std::size_t n = A.dim(), m = R.space_dim();
  const auto& c = A.bracket;
  const auto &L = R.rho_l, &M = R.rho_m, &Rr = R.rho_r;
  ReportBuilder rb(opts);
  rb.family("rho_l(a,b,rho_l(x,y,u)) = rho_l([a,b,x],y,u) + rho_l(x,[a,b,y],u) + rho_l(x,y,rho_l(a,b,u))",
            {n, n, n, n, m}, [&](const std::size_t* t) {
              const std::size_t a = t[0], b = t[1], x = t[2], y = t[3], u = t[4];
              Vec r = L.lin2(a, b, L.image(x, y, u));
              r -= L.lin0(c.image(a, b, x), y, u);
              r -= L.lin1(x, c.image(a, b, y), u);
              r -= L.lin2(x, y, L.image(a, b, u));
              return r;
            });
  rb.family("rho_l(a,b,rho_m(x,u,z)) = rho_m([a,b,x],u,z) + rho_m(x,rho_l(a,b,u),z) + rho_m(x,u,[a,b,z])",
            {n, n, n, m, n}, [&](const std::size_t* t) {
              const std::size_t a = t[0], b = t[1], x = t[2], u = t[3], z = t[4];
              Vec r = L.lin2(a, b, M.image(x, u, z));
              r -= M.lin0(c.image(a, b, x), u, z);
              r -= M.lin1(x, L.image(a, b, u), z);
              r -= M.lin2(x, u, c.image(a, b, z));
              return r;
            });
  rb.family("rho_l(a,b,rho_r(u,y,z)) = rho_r(rho_l(a,b,u),y,z) + rho_r(u,[a,b,y],z) + rho_r(u,y,[a,b,z])",
            {n, n, m, n, n}, [&](const std::size_t* t) {
              const std::size_t a = t[0], b = t[1], u = t[2], y = t[3], z = t[4];
              Vec r = L.lin2(a, b, Rr.image(u, y, z));
              r -= Rr.lin0(L.image(a, b, u), y, z);
              r -= Rr.lin1(u, c.image(a, b, y), z);
              r -= Rr.lin2(u, y, c.image(a, b, z));
              return r;
            });
  rb.family("rho_m(a,u,[x,y,z]) = rho_r(rho_m(a,u,x),y,z) + rho_m(x,rho_m(a,u,y),z) + rho_l(x,y,rho_m(a,u,z))",
            {n, m, n, n, n}, [&](const std::size_t* t) {
              const std::size_t a = t[0], u = t[1], x = t[2], y = t[3], z = t[4];
              Vec r = M.lin2(a, u, c.image(x, y, z));
              r -= Rr.lin0(M.image(a, u, x), y, z);
              r -= M.lin1(x, M.image(a, u, y), z);
              r -= L.lin2(x, y, M.image(a, u, z));
              return r;
            });
  rb.family("rho_r(u,b,[x,y,z]) = rho_r(rho_r(u,b,x),y,z) + rho_m(x,rho_r(u,b,y),z) + rho_l(x,y,rho_r(u,b,z))",
            {m, n, n, n, n}, [&](const std::size_t* t) {
              const std::size_t u = t[0], b = t[1], x = t[2], y = t[3], z = t[4];
              Vec r = Rr.lin2(u, b, c.image(x, y, z));
              r -= Rr.lin0(Rr.image(u, b, x), y, z);
              r -= M.lin1(x, Rr.image(u, b, y), z);
              r -= L.lin2(x, y, Rr.image(u, b, z));
              return r;
            });
  return rb.finish();
}

Representation adjoint_rep(const ThreeLeibnizAlgebra& A) { return {A.bracket, A.bracket, A.bracket}; }

ThreeLeibnizAlgebra semidirect_sum(const ThreeLeibnizAlgebra& A, const Representation& R) {
  R.require_dims(A.dim());
  const std::size_t n = A.dim(), m = R.space_dim();
  ThreeLeibnizAlgebra S = ThreeLeibnizAlgebra::zero(n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) S.bracket.at(i, j, k, l) = A.bracket.at(i, j, k, l);
      for (std::size_t w = 0; w < m; ++w)
        for (std::size_t l = 0; l < m; ++l) {
          S.bracket.at(i, j, n + w, n + l) = R.rho_l.at(i, j, w, l);
          S.bracket.at(i, n + w, j, n + l) = R.rho_m.at(i, w, j, l);
          S.bracket.at(n + w, i, j, n + l) = R.rho_r.at(w, i, j, l);
        }
    }
  return S;
}

CheckReport check_leibniz(const BinaryAlgebra& B, const CheckOptions& opts) {
  const std::size_t n = B.n;
  ReportBuilder rb(opts);
  rb.family("[x,[y,z]] = [[x,y],z] + [y,[x,z]]", {n, n, n}, [&](const std::size_t* t) {
    auto zero = [&](std::size_t i, std::size_t j) {
      for (std::size_t l = 0; l < n; ++l)
        if (sgn(B.at(i, j, l)) != 0) return false;
      return true;
    };
    if (zero(t[1], t[2]) && zero(t[0], t[1]) && zero(t[0], t[2])) return Vec{};
    const Vec x = basis_vec(n, t[0]), y = basis_vec(n, t[1]), z = basis_vec(n, t[2]);
    return B(x, B(y, z)) - B(B(x, y), z) - B(y, B(x, z));
  });
  return rb.finish();
}

ThreeLeibnizAlgebra three_from_binary(const BinaryAlgebra& B) {
  const std::size_t n = B.n;
  ThreeLeibnizAlgebra A = ThreeLeibnizAlgebra::zero(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t p = 0; p < n; ++p) {
          const Scalar& f = B.at(i, j, p);
          if (sgn(f) == 0) continue;
          for (std::size_t l = 0; l < n; ++l) A.bracket.at(i, j, k, l) += f * B.at(p, k, l);
        }
  return A;
}

BinaryAlgebra binary_on_tensor_square(const ThreeLeibnizAlgebra& A) {
  const std::size_t n = A.dim();
  BinaryAlgebra B(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          const std::size_t X = i * n + j, Y = k * n + l;
          for (std::size_t p = 0; p < n; ++p) {
            B.at(X, Y, p * n + l) += A.bracket.at(i, j, k, p);
            B.at(X, Y, k * n + p) += A.bracket.at(i, j, l, p);
          }
        }
  return B;
}

}  // namespace trileib
