#include "trileib/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "trileib/errors.hpp"

namespace trileib::io {

namespace fs = std::filesystem;
using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

std::string kind_of(const Object& obj) {
  static const char* const names[] = {"leibniz3", "leibniz2", "trileibniz", "representation", "action",
                                      "linmap", "embedding_scenario", "dialgebra", "deformation_scenario"};
  return names[obj.index()];
}

namespace {

constexpr int kMaxDepth = 16;

[[noreturn]] void schema(const std::string& path, const std::string& msg) {
  throw Error(ErrorCode::SchemaError, path + ": " + msg);
}

std::size_t line_of(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

class Reader {
 public:
  Reader(fs::path base, int depth) : base_(std::move(base)), depth_(depth) {}

  Document document(const json& j, const std::string& path) {
    if (!j.is_object()) schema(path, "expected an object");
    const std::string kind = string_field(j, "kind", path);
    if (!j.contains("schema_version") || !j["schema_version"].is_number_integer() ||
        j["schema_version"].get<long long>() != kSchemaVersion)
      schema(path, "schema_version must be " + std::to_string(kSchemaVersion));
    Document doc;
    if (j.contains("labels")) {
      const json& l = j["labels"];
      if (!l.is_array()) schema(path + ".labels", "expected an array of strings");
      for (const auto& s : l) {
        if (!s.is_string()) schema(path + ".labels", "expected an array of strings");
        doc.labels.push_back(s.get<std::string>());
      }
    }
    doc.object = object(kind, j, path);
    return doc;
  }

 private:
  Object object(const std::string& kind, const json& j, const std::string& path) {
    if (kind == "leibniz3") {
      allow(j, {"dim", "entries"}, path);
      const std::size_t n = count(j, "dim", path);
      return ThreeLeibnizAlgebra(tensor(j, "entries", {n, n, n}, n, path));
    }
    if (kind == "leibniz2") {
      allow(j, {"dim", "entries"}, path);
      const std::size_t n = count(j, "dim", path);
      BinaryAlgebra B(n);
      for_entries(j, "entries", {n, n, n}, path, [&](const std::vector<std::size_t>& i, Scalar v) {
        B.at(i[0], i[1], i[2]) = std::move(v);
      });
      return B;
    }
    if (kind == "trileibniz") {
      allow(j, {"dim", "vdash", "dashv", "perp"}, path);
      const std::size_t n = count(j, "dim", path);
      return TriLeibnizAlgebra{tensor(j, "vdash", {n, n, n}, n, path), tensor(j, "dashv", {n, n, n}, n, path),
                               tensor(j, "perp", {n, n, n}, n, path)};
    }
    if (kind == "representation") {
      allow(j, {"algebra", "space_dim", "rho_l", "rho_m", "rho_r"}, path);
      ThreeLeibnizAlgebra A = ref<ThreeLeibnizAlgebra>(j, "algebra", path);
      const std::size_t m = count(j, "space_dim", path);
      return RepresentationDoc{A, rep_tensors(j, A.dim(), m, path)};
    }
    if (kind == "action") {
      allow(j, {"base", "target", "rho_l", "rho_m", "rho_r"}, path);
      ThreeLeibnizAlgebra g = ref<ThreeLeibnizAlgebra>(j, "base", path);
      ThreeLeibnizAlgebra h = ref<ThreeLeibnizAlgebra>(j, "target", path);
      Representation R = rep_tensors(j, g.dim(), h.dim(), path);
      return Action{std::move(g), std::move(h), std::move(R)};
    }
    if (kind == "linmap") {
      allow(j, {"rows", "cols", "entries"}, path);
      return linmap(j, path);
    }
    if (kind == "embedding_scenario") {
      allow(j, {"algebra", "representation", "action", "map", "crossed_module"}, path);
      EmbeddingScenario s;
      if (j.contains("action")) {
        if (j.contains("algebra") || j.contains("representation"))
          schema(path, "give either an action or an algebra with a representation");
        s.action = ref<Action>(j, "action", path);
        s.algebra = s.action->base;
        s.rep = s.action->rep;
      } else {
        context(j, path, s.algebra, s.rep, s.adjoint);
      }
      s.map = ref<LinMap>(j, "map", path);
      if (j.contains("crossed_module")) {
        if (!j["crossed_module"].is_boolean()) schema(path + ".crossed_module", "expected a boolean");
        s.crossed_module = j["crossed_module"].get<bool>();
        if (s.crossed_module && !s.action) schema(path + ".crossed_module", "a crossed module needs an action");
      }
      check_map(s.map, s.algebra.dim(), s.rep.space_dim(), path + ".map");
      return s;
    }
    if (kind == "dialgebra") {
      allow(j, {"dim", "base", "vdash", "dashv", "perp"}, path);
      const std::size_t n = count(j, "dim", path);
      return TriLeibnizDialgebra{tensor(j, "base", {n, n, n}, n, path),
                                 {tensor(j, "vdash", {n, n, n}, n, path), tensor(j, "dashv", {n, n, n}, n, path),
                                  tensor(j, "perp", {n, n, n}, n, path)}};
    }
    if (kind == "deformation_scenario") {
      allow(j, {"algebra", "representation", "map", "t1", "candidates", "conjugations"}, path);
      DeformationScenario s;
      context(j, path, s.algebra, s.rep, s.adjoint);
      const std::size_t n = s.algebra.dim(), m = s.rep.space_dim();
      s.map = ref<LinMap>(j, "map", path);
      check_map(s.map, n, m, path + ".map");
      if (j.contains("t1")) {
        s.t1 = ref<LinMap>(j, "t1", path);
        check_map(*s.t1, n, m, path + ".t1");
      }
      if (j.contains("candidates")) {
        const json& c = j["candidates"];
        const std::string cp = path + ".candidates";
        if (!c.is_array()) schema(cp, "expected an array of [a, b] pairs");
        s.candidates.emplace();
        for (std::size_t i = 0; i < c.size(); ++i) {
          const std::string ip = cp + "[" + std::to_string(i) + "]";
          if (!c[i].is_array() || c[i].size() != 2) schema(ip, "expected a pair [a, b]");
          s.candidates->emplace_back(vector(c[i][0], n, ip + "[0]"), vector(c[i][1], n, ip + "[1]"));
        }
      }
      if (j.contains("conjugations")) {
        const json& c = j["conjugations"];
        const std::string cp = path + ".conjugations";
        if (!c.is_array()) schema(cp, "expected an array");
        for (std::size_t i = 0; i < c.size(); ++i) {
          const std::string ip = cp + "[" + std::to_string(i) + "]";
          if (!c[i].is_object()) schema(ip, "expected an object with phi and psi");
          allow(c[i], {"phi", "psi"}, ip, false);
          Conjugation cj{ref<LinMap>(c[i], "phi", ip), ref<LinMap>(c[i], "psi", ip)};
          check_map(cj.phi, n, n, ip + ".phi");
          check_map(cj.psi, m, m, ip + ".psi");
          s.conjugations.push_back(std::move(cj));
        }
      }
      return s;
    }
    schema(path + ".kind", "unknown kind '" + kind + "'");
  }

  void context(const json& j, const std::string& path, ThreeLeibnizAlgebra& A, Representation& R, bool& adjoint) {
    A = ref<ThreeLeibnizAlgebra>(j, "algebra", path);
    if (!j.contains("representation")) schema(path, "missing field 'representation'");
    const json& r = j["representation"];
    if (r.is_string() && r.get<std::string>() == "adjoint") {
      R = adjoint_rep(A);
      adjoint = true;
      return;
    }
    RepresentationDoc doc = ref<RepresentationDoc>(j, "representation", path);
    if (!(doc.algebra == A)) schema(path + ".representation", "representation is of a different algebra");
    R = std::move(doc.rep);
  }

  static void check_map(const LinMap& M, std::size_t rows, std::size_t cols, const std::string& path) {
    if (M.rows() != rows || M.cols() != cols)
      schema(path, "expected a " + std::to_string(rows) + "x" + std::to_string(cols) + " map");
  }

  template <class T>
  T ref(const json& j, const char* key, const std::string& path) {
    const std::string p = path + "." + key;
    if (!j.contains(key)) schema(path, std::string("missing field '") + key + "'");
    const json& r = j[key];
    Document doc;
    if (r.is_string()) {
      if (depth_ >= kMaxDepth) schema(p, "references nested too deeply");
      const fs::path file = base_ / r.get<std::string>();
      doc = load_at(file, depth_ + 1);
    } else if (r.is_object()) {
      doc = document(r, p);
    } else {
      schema(p, "expected a file reference or an inline object");
    }
    if (!std::holds_alternative<T>(doc.object))
      schema(p, "referenced object has kind '" + kind_of(doc.object) + "'");
    return std::get<T>(std::move(doc.object));
  }

  static void allow(const json& j, std::initializer_list<const char*> keys, const std::string& path,
                    bool top = true) {
    std::set<std::string> ok(keys.begin(), keys.end());
    if (top) ok.insert({"schema_version", "kind", "labels"});
    for (auto it = j.begin(); it != j.end(); ++it)
      if (!ok.count(it.key())) schema(path, "unknown field '" + it.key() + "'");
  }

  static std::string string_field(const json& j, const char* key, const std::string& path) {
    if (!j.contains(key) || !j[key].is_string()) schema(path, std::string("missing string field '") + key + "'");
    return j[key].get<std::string>();
  }

  static std::size_t count(const json& j, const char* key, const std::string& path) {
    if (!j.contains(key) || !j[key].is_number_integer() || j[key].get<long long>() < 0)
      schema(path, std::string("field '") + key + "' must be a non-negative integer");
    return j[key].get<std::size_t>();
  }

  static Scalar scalar(const json& v, const std::string& path) {
    if (v.is_number_integer()) return Scalar(v.dump());
    if (!v.is_string()) schema(path, "expected a rational string \"p/q\"");
    try {
      return parse_scalar(v.get<std::string>());
    } catch (const Error& e) {
      throw Error(ErrorCode::ParseError, path + ": " + e.what());
    }
  }

  static Vec vector(const json& v, std::size_t n, const std::string& path) {
    if (!v.is_array() || v.size() != n) schema(path, "expected " + std::to_string(n) + " rationals");
    Vec out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = scalar(v[i], path + "[" + std::to_string(i) + "]");
    return out;
  }

  template <class F>
  static void for_entries(const json& j, const char* key, const std::vector<std::size_t>& dims,
                          const std::string& path, F&& f) {
    const std::string p = path + "." + key;
    if (!j.contains(key)) schema(path, std::string("missing field '") + key + "'");
    const json& e = j[key];
    if (!e.is_array()) schema(p, "expected an array of entries");
    std::set<std::vector<std::size_t>> seen;
    for (std::size_t r = 0; r < e.size(); ++r) {
      const std::string ep = p + "[" + std::to_string(r) + "]";
      if (!e[r].is_array() || e[r].size() != dims.size() + 1)
        schema(ep, "expected [" + std::to_string(dims.size()) + " indices, value]");
      std::vector<std::size_t> idx(dims.size());
      for (std::size_t k = 0; k < dims.size(); ++k) {
        const json& x = e[r][k];
        if (!x.is_number_integer() || x.get<long long>() < 0) schema(ep, "indices must be non-negative integers");
        idx[k] = x.get<std::size_t>();
        if (idx[k] >= dims[k])
          throw Error(ErrorCode::IndexOutOfRange, ep + ": index " + std::to_string(idx[k]) + " out of range for dimension " +
                                                      std::to_string(dims[k]));
      }
      if (!seen.insert(idx).second) schema(ep, "duplicate entry");
      f(idx, scalar(e[r][dims.size()], ep));
    }
  }

  static TriTensor tensor(const json& j, const char* key, std::array<std::size_t, 3> in, std::size_t out,
                          const std::string& path) {
    TriTensor t(in, out);
    for_entries(j, key, {in[0], in[1], in[2], out}, path,
                [&](const std::vector<std::size_t>& i, Scalar v) { t.at(i[0], i[1], i[2], i[3]) = std::move(v); });
    return t;
  }

  static Representation rep_tensors(const json& j, std::size_t n, std::size_t m, const std::string& path) {
    Representation R = Representation::zero(n, m);
    R.rho_l = tensor(j, "rho_l", R.rho_l.in_dims(), m, path);
    R.rho_m = tensor(j, "rho_m", R.rho_m.in_dims(), m, path);
    R.rho_r = tensor(j, "rho_r", R.rho_r.in_dims(), m, path);
    return R;
  }

  static LinMap linmap(const json& j, const std::string& path) {
    LinMap M(count(j, "rows", path), count(j, "cols", path));
    for_entries(j, "entries", {M.rows(), M.cols()}, path,
                [&](const std::vector<std::size_t>& i, Scalar v) { M(i[0], i[1]) = std::move(v); });
    return M;
  }

  static Document load_at(const fs::path& file, int depth);

  fs::path base_;
  int depth_;
};

Document parse_text(const std::string& text, const fs::path& base, int depth, const std::string& origin) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError,
                origin + ":" + std::to_string(line_of(text, e.byte == 0 ? 0 : e.byte - 1)) + ": " + e.what());
  }
  return Reader(base, depth).document(j, origin);
}

Document Reader::load_at(const fs::path& file, int depth) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, file.string() + ": cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str(), file.parent_path(), depth, file.string());
}

// ---- writing ----

ojson entries(const TriTensor& t) {
  ojson out = ojson::array();
  const auto& in = t.in_dims();
  for (std::size_t i = 0; i < in[0]; ++i)
    for (std::size_t j = 0; j < in[1]; ++j)
      for (std::size_t k = 0; k < in[2]; ++k)
        for (std::size_t l = 0; l < t.out_dim(); ++l)
          if (sgn(t.at(i, j, k, l)) != 0) out.push_back(ojson::array({i, j, k, l, to_string(t.at(i, j, k, l))}));
  return out;
}

ojson header(const char* kind) {
  ojson j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = kind;
  return j;
}

ojson write(const ThreeLeibnizAlgebra& A) {
  ojson j = header("leibniz3");
  j["dim"] = A.dim();
  j["entries"] = entries(A.bracket);
  return j;
}

ojson write(const BinaryAlgebra& B) {
  ojson j = header("leibniz2");
  j["dim"] = B.n;
  ojson e = ojson::array();
  for (std::size_t i = 0; i < B.n; ++i)
    for (std::size_t k = 0; k < B.n; ++k)
      for (std::size_t l = 0; l < B.n; ++l)
        if (sgn(B.at(i, k, l)) != 0) e.push_back(ojson::array({i, k, l, to_string(B.at(i, k, l))}));
  j["entries"] = e;
  return j;
}

ojson write(const TriLeibnizAlgebra& TA) {
  ojson j = header("trileibniz");
  j["dim"] = TA.dim();
  j["vdash"] = entries(TA.vdash);
  j["dashv"] = entries(TA.dashv);
  j["perp"] = entries(TA.perp);
  return j;
}

void write_rep(ojson& j, const Representation& R) {
  j["rho_l"] = entries(R.rho_l);
  j["rho_m"] = entries(R.rho_m);
  j["rho_r"] = entries(R.rho_r);
}

ojson write(const RepresentationDoc& d) {
  ojson j = header("representation");
  j["algebra"] = write(d.algebra);
  j["space_dim"] = d.rep.space_dim();
  write_rep(j, d.rep);
  return j;
}

ojson write(const Action& a) {
  ojson j = header("action");
  j["base"] = write(a.base);
  j["target"] = write(a.target);
  write_rep(j, a.rep);
  return j;
}

ojson write(const LinMap& M) {
  ojson j = header("linmap");
  j["rows"] = M.rows();
  j["cols"] = M.cols();
  ojson e = ojson::array();
  for (std::size_t r = 0; r < M.rows(); ++r)
    for (std::size_t c = 0; c < M.cols(); ++c)
      if (sgn(M(r, c)) != 0) e.push_back(ojson::array({r, c, to_string(M(r, c))}));
  j["entries"] = e;
  return j;
}

ojson write_vec(const Vec& v) {
  ojson out = ojson::array();
  for (const auto& s : v) out.push_back(to_string(s));
  return out;
}

ojson write_context(const ThreeLeibnizAlgebra& A, const Representation& R, bool adjoint) {
  if (adjoint) return "adjoint";
  return write(RepresentationDoc{A, R});
}

ojson write(const EmbeddingScenario& s) {
  ojson j = header("embedding_scenario");
  if (s.action) {
    j["action"] = write(*s.action);
  } else {
    j["algebra"] = write(s.algebra);
    j["representation"] = write_context(s.algebra, s.rep, s.adjoint);
  }
  j["map"] = write(s.map);
  if (s.crossed_module) j["crossed_module"] = true;
  return j;
}

ojson write(const TriLeibnizDialgebra& D) {
  ojson j = header("dialgebra");
  j["dim"] = D.dim();
  j["base"] = entries(D.base);
  j["vdash"] = entries(D.tri.vdash);
  j["dashv"] = entries(D.tri.dashv);
  j["perp"] = entries(D.tri.perp);
  return j;
}

ojson write(const DeformationScenario& s) {
  ojson j = header("deformation_scenario");
  j["algebra"] = write(s.algebra);
  j["representation"] = write_context(s.algebra, s.rep, s.adjoint);
  j["map"] = write(s.map);
  if (s.t1) j["t1"] = write(*s.t1);
  if (s.candidates) {
    ojson c = ojson::array();
    for (const auto& [a, b] : *s.candidates) c.push_back(ojson::array({write_vec(a), write_vec(b)}));
    j["candidates"] = c;
  }
  if (!s.conjugations.empty()) {
    ojson c = ojson::array();
    for (const auto& cj : s.conjugations) {
      ojson o;
      o["phi"] = write(cj.phi);
      o["psi"] = write(cj.psi);
      c.push_back(o);
    }
    j["conjugations"] = c;
  }
  return j;
}

bool flat(const ojson& j) {
  if (!j.is_array()) return false;
  for (const auto& x : j)
    if (x.is_structured()) return false;
  return true;
}

// Objects are indented; arrays of scalars stay on one line so entry lists
// read as one entry per line.
void print(std::ostream& out, const ojson& j, int indent) {
  const std::string pad(indent, ' '), inner(indent + 2, ' ');
  if (j.is_object()) {
    if (j.empty()) {
      out << "{}";
      return;
    }
    out << "{\n";
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!first) out << ",\n";
      first = false;
      out << inner << ojson(it.key()).dump() << ": ";
      print(out, it.value(), indent + 2);
    }
    out << "\n" << pad << "}";
  } else if (j.is_array() && !flat(j)) {
    out << "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out << inner;
      print(out, j[i], indent + 2);
      out << (i + 1 < j.size() ? ",\n" : "\n");
    }
    out << pad << "]";
  } else if (j.is_array()) {
    out << "[";
    for (std::size_t i = 0; i < j.size(); ++i) out << (i ? ", " : "") << j[i].dump();
    out << "]";
  } else {
    out << j.dump();
  }
}

}  // namespace

Document parse(const std::string& text, const fs::path& base_dir) { return parse_text(text, base_dir, 0, "<input>"); }

Document load(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, path.string() + ": cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str(), path.parent_path(), 0, path.string());
}

std::string dump(const Document& doc) {
  ojson j = std::visit([](const auto& o) { return write(o); }, doc.object);
  if (!doc.labels.empty()) j["labels"] = doc.labels;
  std::ostringstream out;
  print(out, j, 0);
  out << "\n";
  return out.str();
}

void save(const Document& doc, const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::ParseError, path.string() + ": cannot write file");
  out << dump(doc);
}

}  // namespace trileib::io
