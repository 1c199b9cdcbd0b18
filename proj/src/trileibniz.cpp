#include "trileib/trileibniz.hpp"

#include <string>

#include "trileib/errors.hpp"

namespace trileib {

std::string_view tri_name(Tri t) {
  switch (t) {
    case Tri::Vdash: return "vdash";
    case Tri::Dashv: return "dashv";
    case Tri::Perp: return "perp";
  }
  return "?";
}

TriLeibnizAlgebra TriLeibnizAlgebra::zero(std::size_t n) {
  return {make_bracket(n), make_bracket(n), make_bracket(n)};
}

const Bracket3& TriLeibnizAlgebra::operator[](Tri t) const {
  switch (t) {
    case Tri::Vdash: return vdash;
    case Tri::Dashv: return dashv;
    case Tri::Perp: return perp;
  }
  return vdash;
}

Bracket3& TriLeibnizAlgebra::operator[](Tri t) {
  return const_cast<Bracket3&>(static_cast<const TriLeibnizAlgebra&>(*this)[t]);
}

namespace {

// [a,b,[x,y,z]_in]_out = [[a,b,x]_p1,y,z]_q1 + [x,[a,b,y]_p2,z]_q2 + [x,y,[a,b,z]_p3]_q3
struct TriIdentity {
  Tri in, out, p1, q1, p2, q2, p3, q3;

  std::string name() const {
    auto s = [](Tri t) { return std::string(tri_name(t)); };
    return "[a,b,[x,y,z]_" + s(in) + "]_" + s(out) + " = [[a,b,x]_" + s(p1) + ",y,z]_" + s(q1) +
           " + [x,[a,b,y]_" + s(p2) + ",z]_" + s(q2) + " + [x,y,[a,b,z]_" + s(p3) + "]_" + s(q3);
  }
};

std::array<TriIdentity, 5> tri_identities(Tri d) {
  const Tri V = Tri::Vdash, D = Tri::Dashv, P = Tri::Perp;
  return {{
      {d, D, D, D, D, P, D, V},
      {D, V, V, D, d, D, d, D},
      {V, V, d, V, d, V, V, V},
      {P, V, d, P, V, P, d, P},
      {d, P, P, D, P, P, P, V},
  }};
}

}  // namespace

CheckReport check_tri_leibniz(const TriLeibnizAlgebra& TA, const CheckOptions& opts) {
  const std::size_t n = TA.dim();
  ReportBuilder rb(opts);
  for (int eq = 0; eq < 5; ++eq)
    for (Tri d : kAllTri) {
      const TriIdentity id = tri_identities(d)[eq];
      const auto &in = TA[id.in], &out = TA[id.out];
      const auto &p1 = TA[id.p1], &q1 = TA[id.q1], &p2 = TA[id.p2], &q2 = TA[id.q2], &p3 = TA[id.p3],
                 &q3 = TA[id.q3];
      rb.family(id.name(), {n, n, n, n, n}, [&](const std::size_t* t) {
        const std::size_t a = t[0], b = t[1], x = t[2], y = t[3], z = t[4];
        if (in.slice_is_zero(x, y, z) && p1.slice_is_zero(a, b, x) && p2.slice_is_zero(a, b, y) &&
            p3.slice_is_zero(a, b, z))
          return Vec{};
        Vec r = out.lin2(a, b, in.image(x, y, z));
        r -= q1.lin0(p1.image(a, b, x), y, z);
        r -= q2.lin1(x, p2.image(a, b, y), z);
        r -= q3.lin2(x, y, p3.image(a, b, z));
        return r;
      });
    }
  return rb.finish();
}

TriLeibnizAlgebra from_3leibniz(const ThreeLeibnizAlgebra& A) { return {A.bracket, A.bracket, A.bracket}; }

TriLeibnizAlgebra from_differential(const ThreeLeibnizAlgebra& A, const LinMap& d, const CheckOptions& opts) {
  const std::size_t n = A.dim();
  if (d.rows() != n || d.cols() != n) throw Error(ErrorCode::DimMismatch, "differential must be square of algebra size");
  const auto dc = d.columns();
  {
    ReportBuilder rb(opts);
    rb.family("d(d(x)) = 0", {n}, [&](const std::size_t* t) { return d.apply(dc[t[0]]); });
    CheckReport rep = rb.finish();
    if (!rep.passed()) throw Error(ErrorCode::NotSquareZero, "d^2 != 0", std::move(rep));
  }
  const auto& c = A.bracket;
  {
    ReportBuilder rb(opts);
    rb.family("d[x,y,z] = [dx,y,z] + [x,dy,z] + [x,y,dz]", {n, n, n}, [&](const std::size_t* t) {
      Vec r = d.apply(c.image(t[0], t[1], t[2]));
      r -= c.lin0(dc[t[0]], t[1], t[2]);
      r -= c.lin1(t[0], dc[t[1]], t[2]);
      r -= c.lin2(t[0], t[1], dc[t[2]]);
      return r;
    });
    CheckReport rep = rb.finish();
    if (!rep.passed()) throw Error(ErrorCode::NotADerivation, "d is not a derivation", std::move(rep));
  }
  TriLeibnizAlgebra TA = TriLeibnizAlgebra::zero(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Vec dashv = c.lin2(i, j, dc[k]), perp = c.lin1(i, dc[j], k), vdash = c.lin0(dc[i], j, k);
        std::copy(dashv.begin(), dashv.end(), TA.dashv.slice(i, j, k).begin());
        std::copy(perp.begin(), perp.end(), TA.perp.slice(i, j, k).begin());
        std::copy(vdash.begin(), vdash.end(), TA.vdash.slice(i, j, k).begin());
      }
  return TA;
}

CheckReport check_rep_morphism(const ThreeLeibnizAlgebra& A, const Representation& R, const LinMap& f,
                               const CheckOptions& opts) {
  R.require_dims(A.dim());
  const std::size_t n = A.dim(), m = R.space_dim();
  if (f.rows() != n || f.cols() != m) throw Error(ErrorCode::DimMismatch, "f must map V to g");
  const auto fc = f.columns();
  const auto& c = A.bracket;
  ReportBuilder rb(opts);
  rb.family("f(rho_l(x,y,u)) = [x,y,f(u)]", {n, n, m},
            [&](const std::size_t* t) { return f.apply(R.rho_l.image(t[0], t[1], t[2])) - c.lin2(t[0], t[1], fc[t[2]]); });
  rb.family("f(rho_m(x,u,y)) = [x,f(u),y]", {n, m, n},
            [&](const std::size_t* t) { return f.apply(R.rho_m.image(t[0], t[1], t[2])) - c.lin1(t[0], fc[t[1]], t[2]); });
  rb.family("f(rho_r(u,x,y)) = [f(u),x,y]", {m, n, n},
            [&](const std::size_t* t) { return f.apply(R.rho_r.image(t[0], t[1], t[2])) - c.lin0(fc[t[0]], t[1], t[2]); });
  return rb.finish();
}

TriLeibnizAlgebra from_rep_morphism(const ThreeLeibnizAlgebra& A, const Representation& R, const LinMap& f,
                                    const CheckOptions& opts) {
  CheckReport rep = check_rep_morphism(A, R, f, opts);
  if (!rep.passed()) throw Error(ErrorCode::NotAMorphism, "f is not a morphism of representations", std::move(rep));
  const std::size_t m = R.space_dim();
  const auto fc = f.columns();
  TriLeibnizAlgebra TA = TriLeibnizAlgebra::zero(m);
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = 0; v < m; ++v)
      for (std::size_t w = 0; w < m; ++w) {
        const Vec dashv = R.rho_r.apply_e0(u, fc[v], fc[w]);
        const Vec perp = R.rho_m.apply(fc[u], basis_vec(m, v), fc[w]);
        const Vec vdash = R.rho_l.apply_e2(fc[u], fc[v], w);
        std::copy(dashv.begin(), dashv.end(), TA.dashv.slice(u, v, w).begin());
        std::copy(perp.begin(), perp.end(), TA.perp.slice(u, v, w).begin());
        std::copy(vdash.begin(), vdash.end(), TA.vdash.slice(u, v, w).begin());
      }
  return TA;
}

TriLeibnizAlgebra direct_sum_tri(const ThreeLeibnizAlgebra& A, std::size_t copies) {
  if (copies == 0) throw Error(ErrorCode::DimMismatch, "direct sum needs at least one copy");
  const std::size_t n = A.dim(), N = copies * n;
  TriLeibnizAlgebra TA = TriLeibnizAlgebra::zero(N);
  for (std::size_t p = 0; p < copies; ++p)
    for (std::size_t q = 0; q < copies; ++q)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t k = 0; k < n; ++k)
            for (std::size_t l = 0; l < n; ++l) {
              const Scalar& c = A.bracket.at(i, j, k, l);
              if (sgn(c) == 0) continue;
              // vdash: the first argument's copy is summed away; y and z share copy q.
              TA.vdash.at(p * n + i, q * n + j, q * n + k, q * n + l) = c;
              TA.perp.at(q * n + i, p * n + j, q * n + k, q * n + l) = c;
              TA.dashv.at(q * n + i, q * n + j, p * n + k, q * n + l) = c;
            }
  return TA;
}

TriLeibnizAlgebra hemisemidirect(const ThreeLeibnizAlgebra& A, const Representation& R) {
  R.require_dims(A.dim());
  const std::size_t n = A.dim(), m = R.space_dim();
  TriLeibnizAlgebra TA = TriLeibnizAlgebra::zero(n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          const Scalar& c = A.bracket.at(i, j, k, l);
          TA.vdash.at(i, j, k, l) = c;
          TA.dashv.at(i, j, k, l) = c;
          TA.perp.at(i, j, k, l) = c;
        }
      for (std::size_t w = 0; w < m; ++w)
        for (std::size_t l = 0; l < m; ++l) {
          TA.vdash.at(i, j, n + w, n + l) = R.rho_l.at(i, j, w, l);
          TA.perp.at(i, n + w, j, n + l) = R.rho_m.at(i, w, j, l);
          TA.dashv.at(n + w, i, j, n + l) = R.rho_r.at(w, i, j, l);
        }
    }
  return TA;
}

Subspace associated_ideal(const TriLeibnizAlgebra& TA, const CheckOptions& opts) {
  const std::size_t n = TA.dim();
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Vec v = TA.vdash.image(i, j, k), d = TA.dashv.image(i, j, k), p = TA.perp.image(i, j, k);
        for (Vec diff : {v - d, d - p, v - p})
          if (!is_zero(std::span<const Scalar>(diff))) gens.push_back(std::move(diff));
      }
  Subspace I = Subspace::span(n, gens);
  CheckReport rep = check_ideal(I, ThreeLeibnizAlgebra(TA.vdash), opts);
  if (!rep.passed())
    throw Error(ErrorCode::IdealClosureFailure, "bracket differences do not span an ideal", std::move(rep));
  return I;
}

UniversalQuotient universal_quotient(const TriLeibnizAlgebra& TA, const CheckOptions& opts) {
  const std::size_t n = TA.dim();
  Subspace I = associated_ideal(TA, opts);
  Quotient q = quotient(ThreeLeibnizAlgebra(TA.vdash), I, opts);
  const std::size_t k = q.algebra.dim();

  // The actions below read brackets off chosen preimages; they must not
  // depend on the choice, i.e. I_g must be killed in the slots that get
  // projected.
  const auto gens = I.basis_vectors();
  const std::size_t r = gens.size();
  ReportBuilder rb(opts);
  rb.family("[I,y,z]_vdash = 0", {r, n, n}, [&](const std::size_t* t) { return TA.vdash.lin0(gens[t[0]], t[1], t[2]); });
  rb.family("[y,I,z]_vdash = 0", {n, r, n}, [&](const std::size_t* t) { return TA.vdash.lin1(t[0], gens[t[1]], t[2]); });
  rb.family("[I,z,y]_perp = 0", {r, n, n}, [&](const std::size_t* t) { return TA.perp.lin0(gens[t[0]], t[1], t[2]); });
  rb.family("[y,z,I]_perp = 0", {n, n, r}, [&](const std::size_t* t) { return TA.perp.lin2(t[0], t[1], gens[t[2]]); });
  rb.family("[z,I,y]_dashv = 0", {n, r, n}, [&](const std::size_t* t) { return TA.dashv.lin1(t[0], gens[t[1]], t[2]); });
  rb.family("[z,y,I]_dashv = 0", {n, n, r}, [&](const std::size_t* t) { return TA.dashv.lin2(t[0], t[1], gens[t[2]]); });
  CheckReport rep = rb.finish();
  if (!rep.passed()) throw Error(ErrorCode::NotWellDefined, "quotient actions depend on the representative", std::move(rep));

  std::vector<std::size_t> lift(k);
  for (std::size_t p = 0; p < k; ++p)
    for (std::size_t i = 0; i < n; ++i)
      if (sgn(q.section(i, p)) != 0) lift[p] = i;

  Representation R = Representation::zero(k, n);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      for (std::size_t z = 0; z < n; ++z) {
        const auto l = TA.vdash.slice(lift[a], lift[b], z);
        const auto mm = TA.perp.slice(lift[a], z, lift[b]);
        const auto rr = TA.dashv.slice(z, lift[a], lift[b]);
        std::copy(l.begin(), l.end(), R.rho_l.slice(a, b, z).begin());
        std::copy(mm.begin(), mm.end(), R.rho_m.slice(a, z, b).begin());
        std::copy(rr.begin(), rr.end(), R.rho_r.slice(z, a, b).begin());
      }
  return {std::move(q.algebra), std::move(R), std::move(q.projection), std::move(I), std::move(q.section)};
}

AveragingEmbedding averaging_embedding(const TriLeibnizAlgebra& TA, const CheckOptions& opts) {
  UniversalQuotient uq = universal_quotient(TA, opts);
  const std::size_t k = uq.algebra.dim(), n = TA.dim();
  AveragingEmbedding out{semidirect_sum(uq.algebra, uq.rep), LinMap(k + n, k + n), LinMap(k + n, n)};
  for (std::size_t p = 0; p < k; ++p)
    for (std::size_t y = 0; y < n; ++y) out.op(p, k + y) = uq.projection(p, y);
  for (std::size_t x = 0; x < n; ++x) out.inclusion(k + x, x) = 1;
  return out;
}

}  // namespace trileib
