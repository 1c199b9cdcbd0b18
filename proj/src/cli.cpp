#include "trileib/cli.hpp"

#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "trileib/embedding.hpp"
#include "trileib/errors.hpp"
#include "trileib/io.hpp"

namespace trileib {

namespace {

using ojson = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool input_error(ErrorCode c) {
  return c == ErrorCode::ParseError || c == ErrorCode::SchemaError || c == ErrorCode::IndexOutOfRange ||
         c == ErrorCode::DimMismatch || c == ErrorCode::AmbientMismatch;
}

CheckReport single(const std::string& family) {
  CheckReport r;
  r.violations.push_back(Violation{family, {}, {}});
  return r;
}

/// All verdicts must coincide.
CheckReport agreement(const std::string& statement, std::initializer_list<std::pair<const char*, bool>> verdicts) {
  bool same = true;
  std::string detail;
  for (const auto& [name, v] : verdicts) {
    same = same && v == verdicts.begin()->second;
    detail += (detail.empty() ? "" : ", ") + std::string(name) + (v ? " holds" : " fails");
  }
  return same ? CheckReport{} : single(statement + ": " + detail);
}

CheckReport implies(const std::string& statement, bool premise, bool conclusion) {
  return !premise || conclusion ? CheckReport{} : single(statement + ": premise holds, conclusion fails");
}

/// Entrywise difference of two tensors of equal shape.
CheckReport tensor_diff(const std::string& family, const TriTensor& a, const TriTensor& b, const CheckOptions& opts) {
  if (a.in_dims() != b.in_dims() || a.out_dim() != b.out_dim()) return single(family + ": shapes differ");
  ReportBuilder rb(opts);
  const auto& d = a.in_dims();
  rb.family(family, {d[0], d[1], d[2]}, [&](const std::size_t* i) {
    Vec r = a.image(i[0], i[1], i[2]);
    axpy(r, Scalar(-1), b.slice(i[0], i[1], i[2]));
    return r;
  });
  return rb.finish();
}

struct Run {
  CheckOptions opts;
  std::vector<std::pair<std::string, CheckReport>> checks;
  ojson dims = ojson::object();
  ojson extra = ojson::object();
  std::optional<io::Document> output;

  bool add(std::string name, CheckReport r) {
    const bool ok = r.passed();
    checks.emplace_back(std::move(name), std::move(r));
    return ok;
  }

  bool passed() const {
    for (const auto& c : checks)
      if (!c.second.passed()) return false;
    return true;
  }

  // Library failures other than input errors become a failed check.
  template <class F>
  bool guard(const std::string& name, F&& f) {
    try {
      f();
      return true;
    } catch (const Error& e) {
      if (input_error(e.code())) throw;
      CheckReport r = e.report() ? *e.report() : CheckReport{};
      if (r.passed()) r = single(std::string(error_name(e.code())) + ": " + e.what());
      add(name, std::move(r));
      return false;
    }
  }
};

struct Context {
  const ThreeLeibnizAlgebra* A;
  const Representation* R;
  const LinMap* T;
};

Context scenario_context(const io::Document& doc, const char* command) {
  if (auto* s = std::get_if<io::EmbeddingScenario>(&doc.object)) return {&s->algebra, &s->rep, &s->map};
  if (auto* s = std::get_if<io::DeformationScenario>(&doc.object)) return {&s->algebra, &s->rep, &s->map};
  throw UsageError(std::string(command) + " needs an embedding_scenario or deformation_scenario file, got " +
                   io::kind_of(doc.object));
}

ojson vec_json(const Vec& v) {
  ojson out = ojson::array();
  for (const auto& s : v) out.push_back(to_string(s));
  return out;
}

std::string i2s(std::size_t i) { return std::to_string(i); }

// ---- check ----

void cmd_check(const io::Document& doc, Run& run) {
  const auto& o = run.opts;
  if (auto* A = std::get_if<ThreeLeibnizAlgebra>(&doc.object)) {
    run.dims["dim"] = A->dim();
    run.add("fundamental_identity", check_fundamental_identity(*A, o));
  } else if (auto* B = std::get_if<BinaryAlgebra>(&doc.object)) {
    run.dims["dim"] = B->n;
    run.add("leibniz_identity", check_leibniz(*B, o));
  } else if (auto* TA = std::get_if<TriLeibnizAlgebra>(&doc.object)) {
    run.dims["dim"] = TA->dim();
    run.add("tri_leibniz", check_tri_leibniz(*TA, o));
  } else if (auto* r = std::get_if<io::RepresentationDoc>(&doc.object)) {
    run.dims["algebra_dim"] = r->algebra.dim();
    run.dims["space_dim"] = r->rep.space_dim();
    run.add("representation", check_representation(r->algebra, r->rep, o));
  } else if (auto* act = std::get_if<Action>(&doc.object)) {
    run.dims["base_dim"] = act->base.dim();
    run.dims["target_dim"] = act->target.dim();
    run.add("action", check_action(*act, o));
  } else if (auto* M = std::get_if<LinMap>(&doc.object)) {
    run.dims["rows"] = M->rows();
    run.dims["cols"] = M->cols();
    run.dims["rank"] = rref(*M).rank;
  } else if (auto* s = std::get_if<io::EmbeddingScenario>(&doc.object)) {
    run.dims["algebra_dim"] = s->algebra.dim();
    run.dims["space_dim"] = s->rep.space_dim();
    if (s->action) {
      run.add("action", check_action(*s->action, o));
      run.add("embedding_tensor", check_embedding_tensor(s->map, s->algebra, s->rep, o));
      run.add("homomorphism", check_homomorphism(s->map, s->action->target, s->action->base, o));
      if (s->crossed_module) run.add("crossed_module", check_crossed_module(s->map, *s->action, o));
    } else {
      run.add("embedding_tensor", check_embedding_tensor(s->map, s->algebra, s->rep, o));
    }
  } else if (auto* D = std::get_if<TriLeibnizDialgebra>(&doc.object)) {
    run.dims["dim"] = D->dim();
    run.add("dialgebra", check_dialgebra(*D, o));
  } else if (auto* s = std::get_if<io::DeformationScenario>(&doc.object)) {
    run.dims["algebra_dim"] = s->algebra.dim();
    run.dims["space_dim"] = s->rep.space_dim();
    run.add("embedding_tensor", check_embedding_tensor(s->map, s->algebra, s->rep, o));
    if (s->t1) run.add("deformation", deformation_check(s->map, *s->t1, s->algebra, s->rep, o));
    if (s->candidates)
      for (std::size_t i = 0; i < s->candidates->size(); ++i) {
        const auto& [a, b] = (*s->candidates)[i];
        run.add("nijenhuis_element[" + i2s(i) + "]", check_nijenhuis_element(a, b, s->map, s->algebra, s->rep, o));
      }
    for (std::size_t i = 0; i < s->conjugations.size(); ++i) {
      const std::string name = "conjugation[" + i2s(i) + "]";
      run.guard(name, [&] {
        Conjugate c = conjugate_et(s->map, s->conjugations[i].phi, s->conjugations[i].psi, s->algebra, s->rep, o);
        run.add(name, std::move(c.report));
      });
    }
  }
}

// ---- construct ----

template <class T>
T load_as(const std::string& path) {
  io::Document doc = io::load(path);
  if (!std::holds_alternative<T>(doc.object)) {
    static const io::Object probe = T{};
    throw UsageError(path + ": expected a " + io::kind_of(probe) + " file, got " + io::kind_of(doc.object));
  }
  return std::get<T>(std::move(doc.object));
}

void arity(const std::vector<std::string>& in, std::size_t n, const std::string& usage) {
  if (in.size() != n) throw UsageError("usage: construct " + usage);
}

void cmd_construct(const std::string& what, const std::vector<std::string>& in, Run& run) {
  const auto& o = run.opts;
  if (what == "hemisemidirect" || what == "semidirect") {
    arity(in, 1, what + " <representation>");
    auto r = load_as<io::RepresentationDoc>(in[0]);
    if (!run.add("representation", check_representation(r.algebra, r.rep, o))) return;
    if (what == "semidirect") {
      ThreeLeibnizAlgebra S = semidirect_sum(r.algebra, r.rep);
      run.add("fundamental_identity", check_fundamental_identity(S, o));
      run.output = io::Document{S, {}};
    } else {
      TriLeibnizAlgebra H = hemisemidirect(r.algebra, r.rep);
      run.add("tri_leibniz", check_tri_leibniz(H, o));
      run.output = io::Document{H, {}};
    }
  } else if (what == "bowtie") {
    arity(in, 1, "bowtie <action>");
    auto act = load_as<Action>(in[0]);
    if (!run.add("action", check_action(act, o))) return;
    ThreeLeibnizAlgebra S = semidirect_bowtie(act);
    run.add("fundamental_identity", check_fundamental_identity(S, o));
    run.output = io::Document{S, {}};
  } else if (what == "quotient") {
    arity(in, 2, "quotient <algebra> <linmap whose rows span the ideal>");
    auto A = load_as<ThreeLeibnizAlgebra>(in[0]);
    auto M = load_as<LinMap>(in[1]);
    if (M.cols() != A.dim()) throw UsageError("ideal generators must have " + i2s(A.dim()) + " columns");
    Subspace I = Subspace::row_space(M);
    run.dims["ideal_dim"] = I.rank();
    run.guard("ideal", [&] {
      Quotient q = quotient(A, I, o);
      run.dims["quotient_dim"] = q.algebra.dim();
      run.add("fundamental_identity", check_fundamental_identity(q.algebra, o));
      run.output = io::Document{q.algebra, {}};
    });
  } else if (what == "universal-quotient" || what == "averaging-embedding") {
    arity(in, 1, what + " <trileibniz>");
    auto TA = load_as<TriLeibnizAlgebra>(in[0]);
    if (!run.add("tri_leibniz", check_tri_leibniz(TA, o))) return;
    if (what == "universal-quotient") {
      run.guard("universal_quotient", [&] {
        UniversalQuotient uq = universal_quotient(TA, o);
        run.dims["ideal_dim"] = uq.ideal.rank();
        run.dims["quotient_dim"] = uq.algebra.dim();
        run.add("embedding_tensor", check_embedding_tensor(uq.projection, uq.algebra, uq.rep, o));
        io::EmbeddingScenario s;
        s.algebra = uq.algebra;
        s.rep = uq.rep;
        s.map = uq.projection;
        run.output = io::Document{std::move(s), {}};
      });
    } else {
      run.guard("averaging_embedding", [&] {
        AveragingEmbedding ae = averaging_embedding(TA, o);
        run.dims["dim"] = ae.big.dim();
        run.add("averaging", check_averaging(ae.op, ae.big, o));
        io::EmbeddingScenario s;
        s.algebra = ae.big;
        s.rep = adjoint_rep(ae.big);
        s.adjoint = true;
        s.map = ae.op;
        run.output = io::Document{std::move(s), {}};
      });
    }
  } else if (what == "induced-tri") {
    arity(in, 1, "induced-tri <embedding_scenario>");
    auto s = load_as<io::EmbeddingScenario>(in[0]);
    run.guard("embedding_tensor", [&] {
      TriLeibnizAlgebra TA = induced_tri_leibniz(s.map, s.algebra, s.rep, o);
      run.add("tri_leibniz", check_tri_leibniz(TA, o));
      run.output = io::Document{TA, {}};
    });
  } else if (what == "induced-dialgebra") {
    arity(in, 1, "induced-dialgebra <embedding_scenario with an action>");
    auto s = load_as<io::EmbeddingScenario>(in[0]);
    if (!s.action) throw UsageError(in[0] + ": the scenario has no action");
    run.guard("homomorphic_embedding_tensor", [&] {
      TriLeibnizDialgebra D = induced_dialgebra(s.map, *s.action, o);
      run.add("dialgebra", check_dialgebra(D, o));
      run.output = io::Document{D, {}};
    });
  } else if (what == "direct-sum-tri") {
    arity(in, 2, "direct-sum-tri <algebra> <copies>");
    auto A = load_as<ThreeLeibnizAlgebra>(in[0]);
    std::size_t k = 0;
    try {
      std::size_t pos = 0;
      k = std::stoul(in[1], &pos);
      if (pos != in[1].size() || k == 0) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw UsageError("copies must be a positive integer, got '" + in[1] + "'");
    }
    if (!run.add("fundamental_identity", check_fundamental_identity(A, o))) return;
    TriLeibnizAlgebra TA = direct_sum_tri(A, k);
    run.add("tri_leibniz", check_tri_leibniz(TA, o));
    run.output = io::Document{TA, {}};
  } else if (what == "from-differential") {
    arity(in, 2, "from-differential <algebra> <linmap>");
    auto A = load_as<ThreeLeibnizAlgebra>(in[0]);
    auto d = load_as<LinMap>(in[1]);
    run.guard("differential", [&] {
      TriLeibnizAlgebra TA = from_differential(A, d, o);
      run.add("tri_leibniz", check_tri_leibniz(TA, o));
      run.output = io::Document{TA, {}};
    });
  } else {
    throw UsageError("unknown construction '" + what +
                     "' (hemisemidirect, semidirect, bowtie, quotient, universal-quotient, averaging-embedding, "
                     "induced-tri, induced-dialgebra, direct-sum-tri, from-differential)");
  }
}

// ---- cohomology, nijenhuis-scan ----

void cmd_cohomology(const io::Document& doc, Run& run) {
  const Context c = scenario_context(doc, "cohomology");
  run.dims["algebra_dim"] = c.A->dim();
  run.dims["space_dim"] = c.R->space_dim();
  if (!run.add("embedding_tensor", check_embedding_tensor(*c.T, *c.A, *c.R, run.opts))) return;
  CocycleSpace cs = cocycle_space(*c.T, *c.A, *c.R, run.opts);
  run.dims["Z1"] = cs.Z1.rank();
  run.dims["B1"] = cs.B1.rank();
  run.dims["B1_cap_Z1"] = cs.B1_cap_Z1.rank();
  run.dims["H1"] = cs.h1_dim;
}

void cmd_nijenhuis_scan(const io::Document& doc, Run& run) {
  const Context c = scenario_context(doc, "nijenhuis-scan");
  if (!run.add("embedding_tensor", check_embedding_tensor(*c.T, *c.A, *c.R, run.opts))) return;
  std::vector<ElementPair> candidates;
  auto* ds = std::get_if<io::DeformationScenario>(&doc.object);
  if (ds && ds->candidates)
    candidates = *ds->candidates;
  else
    candidates = all_basis_pairs(c.A->dim());
  const auto found = nijenhuis_element_scan(*c.T, *c.A, *c.R, candidates, run.opts);
  run.dims["candidates"] = candidates.size();
  run.dims["nijenhuis_elements"] = found.size();
  ojson list = ojson::array();
  for (std::size_t i = 0; i < found.size(); ++i) {
    const auto& [a, b] = found[i];
    list.push_back(ojson::array({vec_json(a), vec_json(b)}));
    const std::string name = "trivial_deformation[" + i2s(i) + "]";
    run.guard(name, [&] { run.add(name, trivial_deformation(a, b, *c.T, *c.A, *c.R, run.opts).report); });
  }
  run.extra["elements"] = list;
}

// ---- verify-theorems ----

void rep_suite(const ThreeLeibnizAlgebra& A, const Representation& R, Run& run) {
  const auto& o = run.opts;
  const bool rep = check_representation(A, R, o).passed();
  const bool semi = check_fundamental_identity(semidirect_sum(A, R), o).passed();
  const bool hemi = check_tri_leibniz(hemisemidirect(A, R), o).passed();
  run.add("representation <=> semidirect sum is 3-Leibniz",
          agreement("representation <=> semidirect sum is 3-Leibniz", {{"representation", rep}, {"semidirect", semi}}));
  run.add("representation <=> hemisemidirect product is 3-tri-Leibniz",
          agreement("representation <=> hemisemidirect product is 3-tri-Leibniz",
                    {{"representation", rep}, {"hemisemidirect", hemi}}));
}

void et_suite(const LinMap& T, const ThreeLeibnizAlgebra& A, const Representation& R, Run& run) {
  const auto& o = run.opts;
  if (!run.add("representation", check_representation(A, R, o))) return;
  const bool et = check_embedding_tensor(T, A, R, o).passed();
  const NijenhuisLift lift = lift_NT(T, A, R);
  const bool nij = check_nijenhuis_operator(lift.N, lift.TA, o).passed();
  const bool graph = graph_check(T, A, R, o).passed();
  run.add("embedding tensor <=> N_T is Nijenhuis <=> graph is a subalgebra",
          agreement("embedding tensor <=> N_T is Nijenhuis <=> graph is a subalgebra",
                    {{"embedding tensor", et}, {"Nijenhuis", nij}, {"graph", graph}}));
  if (!et) return;
  const TriLeibnizAlgebra TA = induced_brackets(T, R);
  run.add("embedding tensor => induced brackets are 3-tri-Leibniz", check_tri_leibniz(TA, o));
  run.add("embedding tensor => T is a tri-Leibniz homomorphism", check_tri_homomorphism(T, TA, A, o));
}

void cmd_verify(const io::Document& doc, Run& run) {
  const auto& o = run.opts;
  if (auto* A = std::get_if<ThreeLeibnizAlgebra>(&doc.object)) {
    rep_suite(*A, adjoint_rep(*A), run);
    const bool fi = check_fundamental_identity(*A, o).passed();
    run.add("3-Leibniz => identity brackets give a 3-tri-Leibniz algebra",
            implies("3-Leibniz => identity brackets give a 3-tri-Leibniz algebra", fi,
                    check_tri_leibniz(from_3leibniz(*A), o).passed()));
    if (fi) et_suite(LinMap::identity(A->dim()), *A, adjoint_rep(*A), run);
  } else if (auto* B = std::get_if<BinaryAlgebra>(&doc.object)) {
    const bool leib = check_leibniz(*B, o).passed();
    run.add("Leibniz => [x,y,z] = [[x,y],z] is 3-Leibniz",
            implies("Leibniz => [x,y,z] = [[x,y],z] is 3-Leibniz", leib,
                    check_fundamental_identity(three_from_binary(*B), o).passed()));
  } else if (auto* r = std::get_if<io::RepresentationDoc>(&doc.object)) {
    rep_suite(r->algebra, r->rep, run);
  } else if (auto* act = std::get_if<Action>(&doc.object)) {
    const bool ok = check_action(*act, o).passed();
    const bool bow = check_fundamental_identity(semidirect_bowtie(*act), o).passed();
    run.add("action <=> bowtie product is 3-Leibniz",
            agreement("action <=> bowtie product is 3-Leibniz", {{"action", ok}, {"bowtie", bow}}));
  } else if (auto* TA = std::get_if<TriLeibnizAlgebra>(&doc.object)) {
    if (!run.add("tri_leibniz", check_tri_leibniz(*TA, o))) return;
    run.guard("universal_quotient", [&] {
      UniversalQuotient uq = universal_quotient(*TA, o);
      run.dims["ideal_dim"] = uq.ideal.rank();
      run.add("quotient map is an embedding tensor", check_embedding_tensor(uq.projection, uq.algebra, uq.rep, o));
      const TriLeibnizAlgebra back = induced_brackets(uq.projection, uq.rep);
      for (Tri t : kAllTri)
        run.add("quotient map induces the original " + std::string(tri_name(t)) + " bracket",
                tensor_diff("induced - original", back[t], (*TA)[t], o));
    });
    run.guard("averaging_embedding", [&] {
      AveragingEmbedding ae = averaging_embedding(*TA, o);
      run.add("averaging embedding operator is averaging", check_averaging(ae.op, ae.big, o));
    });
  } else if (auto* s = std::get_if<io::EmbeddingScenario>(&doc.object)) {
    et_suite(s->map, s->algebra, s->rep, run);
    if (s->action) {
      const bool hom = check_action(*s->action, o).passed() &&
                       check_embedding_tensor(s->map, s->algebra, s->rep, o).passed() &&
                       check_homomorphism(s->map, s->action->target, s->action->base, o).passed();
      if (hom)
        run.add("homomorphic embedding tensor => induced dialgebra",
                check_dialgebra(induced_dialgebra(s->map, *s->action, o), o));
    }
  } else if (auto* s = std::get_if<io::DeformationScenario>(&doc.object)) {
    if (!run.add("embedding_tensor", check_embedding_tensor(s->map, s->algebra, s->rep, o))) return;
    if (s->t1) {
      const bool coeff = deformation_check(s->map, *s->t1, s->algebra, s->rep, o).passed();
      bool direct = true;
      for (int t = 1; t <= 3; ++t)
        direct = direct &&
                 check_embedding_tensor(s->map + scaled(*s->t1, Scalar(t)), s->algebra, s->rep, o).passed();
      run.add("coefficients vanish <=> T + t T1 is an embedding tensor at t = 1, 2, 3",
              agreement("coefficients vanish <=> T + t T1 is an embedding tensor at t = 1, 2, 3",
                        {{"coefficients", coeff}, {"direct", direct}}));
    }
    const auto found = nijenhuis_element_scan(s->map, s->algebra, s->rep,
                                              s->candidates ? *s->candidates : all_basis_pairs(s->algebra.dim()), o);
    run.dims["nijenhuis_elements"] = found.size();
    for (std::size_t i = 0; i < found.size(); ++i) {
      const std::string name = "Nijenhuis element " + i2s(i) + " => trivial deformation";
      run.guard(name, [&] {
        run.add(name, trivial_deformation(found[i].first, found[i].second, s->map, s->algebra, s->rep, o).report);
      });
    }
    for (std::size_t i = 0; i < s->conjugations.size(); ++i) {
      const std::string name = "conjugation " + i2s(i) + " gives an embedding tensor";
      run.guard(name, [&] {
        run.add(name,
                conjugate_et(s->map, s->conjugations[i].phi, s->conjugations[i].psi, s->algebra, s->rep, o).report);
      });
    }
  } else {
    throw UsageError("no theorem suite for kind " + io::kind_of(doc.object));
  }
}

// ---- output ----

std::string tuple_text(const std::vector<std::size_t>& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + i2s(t[i]);
  return s + ")";
}

std::string vec_text(const Vec& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
  return s + "]";
}

void print_text(std::ostream& out, const std::string& command, const std::vector<std::string>& args, const Run& run,
                std::optional<double> ms) {
  out << command;
  for (const auto& a : args) out << " " << a;
  out << "\n";
  for (const auto& [name, r] : run.checks) {
    out << "  " << (r.passed() ? "PASS" : "FAIL") << "  " << name;
    if (!r.passed()) out << " (" << r.violations.size() << (r.truncated ? "+" : "") << " violations)";
    out << "\n";
    for (const auto& v : r.violations) {
      out << "        " << v.family;
      if (!v.tuple.empty()) out << " at " << tuple_text(v.tuple);
      if (!v.residual.empty()) out << ": residual " << vec_text(v.residual);
      out << "\n";
    }
  }
  for (auto it = run.dims.begin(); it != run.dims.end(); ++it) out << "  " << it.key() << " = " << it.value() << "\n";
  if (run.extra.contains("elements"))
    for (const auto& e : run.extra["elements"]) out << "  element a = " << e[0].dump() << ", b = " << e[1].dump() << "\n";
  if (run.extra.contains("output_file")) out << "  wrote " << run.extra["output_file"].get<std::string>() << "\n";
  if (ms) out << "  wall time " << *ms << " ms\n";
  out << "result: " << (run.passed() ? "PASS" : "FAIL") << "\n";
  if (run.output && !run.extra.contains("output_file")) out << io::dump(*run.output);
}

void print_json(std::ostream& out, const std::string& command, const std::vector<std::string>& args, const Run& run,
                std::optional<double> ms) {
  ojson j;
  j["command"] = command;
  j["args"] = args;
  j["violation_cap"] = run.opts.violation_cap;
  ojson checks = ojson::array();
  for (const auto& [name, r] : run.checks) {
    ojson c;
    c["name"] = name;
    c["passed"] = r.passed();
    c["truncated"] = r.truncated;
    ojson vs = ojson::array();
    for (const auto& v : r.violations) {
      ojson x;
      x["family"] = v.family;
      x["tuple"] = v.tuple;
      x["residual"] = vec_json(v.residual);
      vs.push_back(std::move(x));
    }
    c["violations"] = std::move(vs);
    checks.push_back(std::move(c));
  }
  j["checks"] = std::move(checks);
  j["dimensions"] = run.dims;
  for (auto it = run.extra.begin(); it != run.extra.end(); ++it) j[it.key()] = it.value();
  if (run.output && !run.extra.contains("output_file")) j["output"] = ojson::parse(io::dump(*run.output));
  j["passed"] = run.passed();
  if (ms) j["wall_time_ms"] = *ms;
  out << j.dump(2) << "\n";
}

}  // namespace

int cli_dispatch(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Checks 3-Leibniz, 3-tri-Leibniz and embedding-tensor structures given by structure constants."};
  app.require_subcommand(1);
  std::string format = "text";
  std::size_t cap = 32;
  unsigned jobs = 1;
  bool timing = false;
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--violation-cap", cap, "Violations kept per check")->check(CLI::PositiveNumber);
  app.add_option("--jobs", jobs, "Worker threads for identity sweeps")->check(CLI::Range(1u, 256u));
  app.add_flag("--timing", timing, "Include wall time in JSON reports");

  std::string file, construction, out_path;
  std::vector<std::string> inputs;
  auto* check = app.add_subcommand("check", "Run the identity checks for the file's kind");
  check->add_option("file", file)->required();
  auto* construct = app.add_subcommand("construct", "Build a derived structure and check it");
  construct->add_option("construction", construction)->required();
  construct->add_option("inputs", inputs)->required();
  construct->add_option("-o,--output", out_path, "Write the result here instead of printing it");
  auto* cohomology = app.add_subcommand("cohomology", "Dimensions of Z1, B1 and H1 of a scenario");
  cohomology->add_option("scenario", file)->required();
  auto* scan = app.add_subcommand("nijenhuis-scan", "Find Nijenhuis elements among candidate pairs");
  scan->add_option("scenario", file)->required();
  auto* verify = app.add_subcommand("verify-theorems", "Run the equivalence suites on one instance");
  verify->add_option("file", file)->required();
  for (auto* sub : {check, construct, cohomology, scan, verify}) sub->fallthrough();

  try {
    std::vector<std::string> rev(argv.rbegin(), argv.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  Run run;
  run.opts.violation_cap = cap;
  run.opts.jobs = jobs;
  auto* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  std::vector<std::string> args;
  if (sub == construct) {
    args.push_back(construction);
    args.insert(args.end(), inputs.begin(), inputs.end());
  } else {
    args.push_back(file);
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    if (sub == construct) {
      cmd_construct(construction, inputs, run);
      if (run.output && !out_path.empty()) {
        io::save(*run.output, out_path);
        run.extra["output_file"] = out_path;
      }
    } else {
      const io::Document doc = io::load(file);
      if (sub == check)
        cmd_check(doc, run);
      else if (sub == cohomology)
        cmd_cohomology(doc, run);
      else if (sub == scan)
        cmd_nijenhuis_scan(doc, run);
      else
        cmd_verify(doc, run);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << error_name(e.code()) << ": " << e.what() << "\n";
    return 2;
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  // JSON reports stay byte-stable unless timing is asked for.
  if (format == "json")
    print_json(out, command, args, run, timing ? std::optional<double>(ms) : std::nullopt);
  else
    print_text(out, command, args, run, ms);
  return run.passed() ? 0 : 1;
}

int cli_dispatch(int argc, const char* const* argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cli_dispatch(args, std::cout, std::cerr);
}

}  // namespace trileib
