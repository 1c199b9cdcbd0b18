#include "trileib/dialgebra.hpp"

#include <string>

#include "trileib/errors.hpp"

namespace trileib {

void Action::require_dims() const {
  rep.require_dims(base.dim());
  if (rep.space_dim() != target.dim())
    throw Error(ErrorCode::DimMismatch, "action tensors do not match the acted-on algebra");
}

CheckReport check_action(const Action& act, const CheckOptions& opts) {
  act.require_dims();
  const std::size_t n = act.base.dim(), m = act.target.dim();
  const auto& h = act.target.bracket;
  const auto &L = act.rep.rho_l, &M = act.rep.rho_m, &R = act.rep.rho_r;

  ReportBuilder rb(opts);
  rb.absorb(check_representation(act.base, act.rep, opts));
  rb.family("rho_l(a,b,[u,v,w]_h) = [rho_l(a,b,u),v,w]_h + [u,rho_l(a,b,v),w]_h + [u,v,rho_l(a,b,w)]_h",
            {n, n, m, m, m}, [&](const std::size_t* t) {
              const std::size_t a = t[0], b = t[1], u = t[2], v = t[3], w = t[4];
              Vec r = L.lin2(a, b, h.image(u, v, w));
              r -= h.lin0(L.image(a, b, u), v, w);
              r -= h.lin1(u, L.image(a, b, v), w);
              r -= h.lin2(u, v, L.image(a, b, w));
              return r;
            });
  // (a, s, x) fill the action slot; (p, q) are the two remaining h arguments.
  rb.family("[rho_m(a,s,x),p,q]_h = 0", {n, m, n, m, m},
            [&](const std::size_t* t) { return h.lin0(M.image(t[0], t[1], t[2]), t[3], t[4]); });
  rb.family("[p,rho_m(a,s,x),q]_h = 0", {n, m, n, m, m},
            [&](const std::size_t* t) { return h.lin1(t[3], M.image(t[0], t[1], t[2]), t[4]); });
  rb.family("[p,q,rho_m(a,s,x)]_h = 0", {n, m, n, m, m},
            [&](const std::size_t* t) { return h.lin2(t[3], t[4], M.image(t[0], t[1], t[2])); });
  rb.family("[rho_r(s,a,x),p,q]_h = 0", {m, n, n, m, m},
            [&](const std::size_t* t) { return h.lin0(R.image(t[0], t[1], t[2]), t[3], t[4]); });
  rb.family("[p,rho_r(s,a,x),q]_h = 0", {m, n, n, m, m},
            [&](const std::size_t* t) { return h.lin1(t[3], R.image(t[0], t[1], t[2]), t[4]); });
  rb.family("[p,q,rho_r(s,a,x)]_h = 0", {m, n, n, m, m},
            [&](const std::size_t* t) { return h.lin2(t[3], t[4], R.image(t[0], t[1], t[2])); });
  rb.family("rho_l(a,b,[u,v,w]_h) = [u,v,rho_l(a,b,w)]_h", {n, n, m, m, m}, [&](const std::size_t* t) {
    return L.lin2(t[0], t[1], h.image(t[2], t[3], t[4])) - h.lin2(t[2], t[3], L.image(t[0], t[1], t[4]));
  });
  rb.family("rho_m(a,[u,v,w]_h,b) = [u,v,rho_m(a,w,b)]_h", {n, m, m, m, n}, [&](const std::size_t* t) {
    return M.lin1(t[0], h.image(t[1], t[2], t[3]), t[4]) - h.lin2(t[1], t[2], M.image(t[0], t[3], t[4]));
  });
  rb.family("rho_r([u,v,w]_h,a,b) = [u,v,rho_r(w,a,b)]_h", {m, m, m, n, n}, [&](const std::size_t* t) {
    return R.lin0(h.image(t[0], t[1], t[2]), t[3], t[4]) - h.lin2(t[0], t[1], R.image(t[2], t[3], t[4]));
  });
  return rb.finish();
}

ThreeLeibnizAlgebra semidirect_bowtie(const Action& act) {
  act.require_dims();
  ThreeLeibnizAlgebra S = semidirect_sum(act.base, act.rep);
  const std::size_t n = act.base.dim(), m = act.target.dim();
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = 0; v < m; ++v)
      for (std::size_t w = 0; w < m; ++w)
        for (std::size_t l = 0; l < m; ++l) S.bracket.at(n + u, n + v, n + w, n + l) = act.target.bracket.at(u, v, w, l);
  return S;
}

CheckReport check_homomorphic_et(const LinMap& T, const Action& act, const CheckOptions& opts) {
  CheckReport ar = check_action(act, opts);
  if (!ar.passed()) throw Error(ErrorCode::NotAnAction, "not an action", std::move(ar));
  ReportBuilder rb(opts);
  rb.absorb(check_embedding_tensor(T, act.base, act.rep, opts));
  rb.absorb(check_homomorphism(T, act.target, act.base, opts));
  return rb.finish();
}

CheckReport check_crossed_module(const LinMap& T, const Action& act, const CheckOptions& opts) {
  act.require_dims();
  const std::size_t n = act.base.dim(), m = act.target.dim();
  if (T.rows() != n || T.cols() != m) throw Error(ErrorCode::DimMismatch, "T must map h to g");
  const auto& g = act.base.bracket;
  const auto& h = act.target.bracket;
  const auto &L = act.rep.rho_l, &M = act.rep.rho_m, &R = act.rep.rho_r;
  const auto tc = T.columns();

  ReportBuilder rb(opts);
  rb.absorb(check_action(act, opts));
  rb.absorb(check_homomorphism(T, act.target, act.base, opts));
  rb.family("T rho_l(x,y,u) = [x,y,Tu]", {n, n, m},
            [&](const std::size_t* t) { return T.apply(L.image(t[0], t[1], t[2])) - g.lin2(t[0], t[1], tc[t[2]]); });
  rb.family("T rho_m(x,u,y) = [x,Tu,y]", {n, m, n},
            [&](const std::size_t* t) { return T.apply(M.image(t[0], t[1], t[2])) - g.lin1(t[0], tc[t[1]], t[2]); });
  rb.family("T rho_r(u,x,y) = [Tu,x,y]", {m, n, n},
            [&](const std::size_t* t) { return T.apply(R.image(t[0], t[1], t[2])) - g.lin0(tc[t[0]], t[1], t[2]); });
  rb.family("rho_l(Tu,Tv,w) = [u,v,w]_h", {m, m, m},
            [&](const std::size_t* t) { return L.apply_e2(tc[t[0]], tc[t[1]], t[2]) - h.image(t[0], t[1], t[2]); });
  rb.family("rho_m(Tu,v,Tw) = [u,v,w]_h", {m, m, m}, [&](const std::size_t* t) {
    return M.apply(tc[t[0]], basis_vec(m, t[1]), tc[t[2]]) - h.image(t[0], t[1], t[2]);
  });
  rb.family("rho_r(u,Tv,Tw) = [u,v,w]_h", {m, m, m},
            [&](const std::size_t* t) { return R.apply_e0(t[0], tc[t[1]], tc[t[2]]) - h.image(t[0], t[1], t[2]); });
  return rb.finish();
}

CheckReport check_dialgebra(const TriLeibnizDialgebra& D, const CheckOptions& opts) {
  const std::size_t n = D.dim();
  if (D.tri.dim() != n) throw Error(ErrorCode::DimMismatch, "base and tri brackets of different dimension");
  const auto& g = D.base;
  const auto &V = D.tri.vdash, &Dv = D.tri.dashv, &P = D.tri.perp;
  const std::vector<std::size_t> box{n, n, n, n, n};

  ReportBuilder rb(opts);
  rb.absorb(check_fundamental_identity(ThreeLeibnizAlgebra(g), opts));
  rb.absorb(check_tri_leibniz(D.tri, opts));

  rb.family("[a,b,[x,y,z]]_vdash = [[a,b,x]_vdash,y,z] + [x,[a,b,y]_vdash,z] + [x,y,[a,b,z]_vdash]", box,
            [&](const std::size_t* t) {
              const std::size_t a = t[0], b = t[1], x = t[2], y = t[3], z = t[4];
              Vec r = V.lin2(a, b, g.image(x, y, z));
              r -= g.lin0(V.image(a, b, x), y, z);
              r -= g.lin1(x, V.image(a, b, y), z);
              r -= g.lin2(x, y, V.image(a, b, z));
              return r;
            });
  for (Tri k : {Tri::Perp, Tri::Dashv}) {
    const Bracket3& c = D.tri[k];
    const std::string s(tri_name(k));
    rb.family("[[a,b,x]_" + s + ",y,z] + [x,[a,b,y]_" + s + ",z] + [x,y,[a,b,z]_" + s + "] = 0", box,
              [&](const std::size_t* t) {
                const std::size_t a = t[0], b = t[1], x = t[2], y = t[3], z = t[4];
                Vec r = g.lin0(c.image(a, b, x), y, z);
                r += g.lin1(x, c.image(a, b, y), z);
                r += g.lin2(x, y, c.image(a, b, z));
                return r;
              });
  }
  rb.family("[a,b,[x,y,z]]_vdash = [x,y,[a,b,z]_vdash]", box, [&](const std::size_t* t) {
    return V.lin2(t[0], t[1], g.image(t[2], t[3], t[4])) - g.lin2(t[2], t[3], V.image(t[0], t[1], t[4]));
  });
  rb.family("[a,[x,y,z],b]_perp = [x,y,[a,z,b]_perp]", box, [&](const std::size_t* t) {
    return P.lin1(t[0], g.image(t[2], t[3], t[4]), t[1]) - g.lin2(t[2], t[3], P.image(t[0], t[4], t[1]));
  });
  rb.family("[[x,y,z],a,b]_dashv = [x,y,[z,a,b]_dashv]", box, [&](const std::size_t* t) {
    return Dv.lin0(g.image(t[2], t[3], t[4]), t[0], t[1]) - g.lin2(t[2], t[3], Dv.image(t[4], t[0], t[1]));
  });

  // [x,y,z] may be replaced by [x,y,z]_t inside these outer brackets.
  struct Slot {
    const char* name;
    const Bracket3* outer;
    int pos;
  };
  const Slot slots[] = {
      {"[[x,y,z],a,b]_vdash = [[x,y,z]_%,a,b]_vdash", &V, 0},
      {"[a,[x,y,z],b]_vdash = [a,[x,y,z]_%,b]_vdash", &V, 1},
      {"[[x,y,z],a,b]_perp = [[x,y,z]_%,a,b]_perp", &P, 0},
      {"[a,b,[x,y,z]]_perp = [a,b,[x,y,z]_%]_perp", &P, 2},
      {"[a,b,[x,y,z]]_dashv = [a,b,[x,y,z]_%]_dashv", &Dv, 2},
      {"[a,[x,y,z],b]_dashv = [a,[x,y,z]_%,b]_dashv", &Dv, 1},
  };
  for (const Slot& sl : slots)
    for (Tri k : kAllTri) {
      std::string name = sl.name;
      name.replace(name.find('%'), 1, tri_name(k));
      const Bracket3& c = D.tri[k];
      rb.family(name, box, [&](const std::size_t* t) {
        const std::size_t a = t[0], b = t[1], x = t[2], y = t[3], z = t[4];
        const Vec diff = g.image(x, y, z) - c.image(x, y, z);
        switch (sl.pos) {
          case 0: return sl.outer->lin0(diff, a, b);
          case 1: return sl.outer->lin1(a, diff, b);
          default: return sl.outer->lin2(a, b, diff);
        }
      });
    }
  return rb.finish();
}

TriLeibnizDialgebra induced_dialgebra(const LinMap& T, const Action& act, const CheckOptions& opts) {
  CheckReport rep = check_homomorphic_et(T, act, opts);
  if (!rep.passed()) throw Error(ErrorCode::NotHomomorphicET, "T is not a homomorphic embedding tensor", std::move(rep));
  return {act.target.bracket, induced_brackets(T, act.rep)};
}

}  // namespace trileib
