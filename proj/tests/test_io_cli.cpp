#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "support.hpp"
#include "trileib/cli.hpp"
#include "trileib/errors.hpp"
#include "trileib/io.hpp"

using namespace trileib;
namespace fx = trileib::fixtures;
namespace fs = std::filesystem;

namespace {

const fs::path kCorpus = TRILEIB_CORPUS_DIR;

struct CliResult {
  int code;
  std::string out, err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli_dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

ErrorCode parse_error(const std::string& text) {
  try {
    io::parse(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "parsed: " << text;
  return ErrorCode::DimMismatch;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

template <class T>
void round_trip(const T& obj) {
  const io::Document doc{obj, {}};
  EXPECT_EQ(io::parse(io::dump(doc)), doc) << io::dump(doc);
}

}  // namespace

TEST(Io, RoundTrip) {
  round_trip(fx::vp4());
  round_trip(fx::abelian(3));
  round_trip(fx::n2_binary());
  round_trip(from_3leibniz(fx::vp4()));
  round_trip(io::RepresentationDoc{fx::n2(), adjoint_rep(fx::n2())});
  round_trip(fx::vp4_ideal_action());
  support::Rng rng(71);
  LinMap M = rng.matrix(3, 4);
  M(1, 2) = Scalar(-7, 3);
  round_trip(M);
  round_trip(TriLeibnizDialgebra{fx::n2().bracket, from_3leibniz(fx::n2())});

  io::EmbeddingScenario es{fx::n2(), adjoint_rep(fx::n2()), true, std::nullopt, fx::n2_differential(), false};
  round_trip(es);
  io::EmbeddingScenario crossed{fx::n2(), fx::n2_self_action().rep, false, fx::n2_self_action(),
                                LinMap::identity(2), true};
  round_trip(crossed);

  io::DeformationScenario ds;
  ds.algebra = fx::deform_a();
  ds.rep = adjoint_rep(ds.algebra);
  ds.adjoint = true;
  ds.map = fx::deform_a_operator();
  ds.t1 = LinMap::identity(3);
  ds.candidates = all_basis_pairs(3);
  ds.conjugations.push_back({LinMap::identity(3), LinMap::identity(3)});
  round_trip(ds);
}

TEST(Io, LabelsSurvive) {
  const io::Document doc{fx::n2(), {"x", "y"}};
  EXPECT_EQ(io::parse(io::dump(doc)).labels, doc.labels);
}

TEST(Io, CorpusVectorProductMatchesLeviCivita) {
  const io::Document doc = io::load(kCorpus / "vp4.alg");
  const auto& A = std::get<ThreeLeibnizAlgebra>(doc.object);
  const oracle::Tri3 o = oracle::vector_product4();
  EXPECT_EQ(support::tri3(A.bracket).c, o.c);
  EXPECT_EQ(doc.labels, (std::vector<std::string>{"e1", "e2", "e3", "e4"}));
}

TEST(Io, EmptyEntriesIsAbelian) {
  const auto doc = io::parse(R"({"schema_version": 1, "kind": "leibniz3", "dim": 3, "entries": []})");
  EXPECT_EQ(std::get<ThreeLeibnizAlgebra>(doc.object), fx::abelian(3));
}

TEST(Io, Errors) {
  EXPECT_EQ(parse_error(R"({"schema_version": 1, "kind": "leibniz3", "dim": 4, "entries": [[0, 1, 2, 5, "1"]]})"),
            ErrorCode::IndexOutOfRange);
  EXPECT_EQ(parse_error(R"({"schema_version": 1, "kind": "leibniz3", "dim": 2, "entries": [], "color": 1})"),
            ErrorCode::SchemaError);
  EXPECT_EQ(parse_error(R"({"schema_version": 1, "kind": "leibniz3", "dim": 2,
                            "entries": [[0, 0, 0, 1, "1"], [0, 0, 0, 1, "2"]]})"),
            ErrorCode::SchemaError);
  EXPECT_EQ(parse_error(R"({"schema_version": 1, "kind": "leibniz3", "dim": 2, "entries": [[0, 0, 0, 1, "1/0"]]})"),
            ErrorCode::ParseError);
  EXPECT_EQ(parse_error(R"({"schema_version": 1, "kind": "leibniz3", "dim": 2, "entries": [[0, 0, 0, 1, "x"]]})"),
            ErrorCode::ParseError);
  EXPECT_EQ(parse_error(R"({"schema_version": 1, "kind": "octonion", "dim": 2})"), ErrorCode::SchemaError);
  EXPECT_EQ(parse_error(R"({"kind": "leibniz3", "dim": 2, "entries": []})"), ErrorCode::SchemaError);
  EXPECT_EQ(parse_error(R"({"schema_version": 1, "kind": "linmap", "rows": 2, "cols": 2, "entries": [[2, 0, "1"]]})"),
            ErrorCode::IndexOutOfRange);
}

TEST(Io, ParseErrorCarriesLine) {
  try {
    io::parse("{\"schema_version\": 1,\n\"kind\": \"leibniz3\",\n\"dim\": 2,\n\"entries\": [[0,0,0,1,\"1\"]");
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
    EXPECT_NE(std::string(e.what()).find("<input>:4:"), std::string::npos) << e.what();
  }
}

TEST(Io, BadRationalNamesField) {
  try {
    io::parse(R"({"schema_version": 1, "kind": "leibniz3", "dim": 2, "entries": [[0, 0, 0, 1, "1/0"]]})");
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("entries[0]"), std::string::npos) << e.what();
  }
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"check", (kCorpus / "vp4.alg").string()}).code, 0);
  const CliResult broken = run({"check", (kCorpus / "broken_n2.alg").string()});
  EXPECT_EQ(broken.code, 1);
  EXPECT_NE(broken.out.find("FAIL  fundamental_identity"), std::string::npos) << broken.out;
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"check", (kCorpus / "missing.alg").string()}).code, 2);
  EXPECT_EQ(run({"--violation-cap", "0", "check", (kCorpus / "vp4.alg").string()}).code, 2);
  EXPECT_EQ(run({"construct", "no-such", (kCorpus / "vp4.alg").string()}).code, 2);
  EXPECT_EQ(run({"verify-theorems", (kCorpus / "maps/id2.map").string()}).code, 2);
}

TEST(Cli, CohomologyJson) {
  const CliResult r = run({"--format", "json", "cohomology", (kCorpus / "abelian_zero_rep.scn").string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["dimensions"]["H1"], 6);
  EXPECT_EQ(j["dimensions"]["Z1"], 6);
  EXPECT_EQ(j["passed"], true);
  EXPECT_FALSE(j.contains("wall_time_ms"));
}

TEST(Cli, ViolationCapTruncates) {
  const CliResult r = run({"--format", "json", "--violation-cap", "1", "check", (kCorpus / "broken_n2.alg").string()});
  ASSERT_EQ(r.code, 1);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["checks"][0]["violations"].size(), 1u);
  EXPECT_EQ(j["checks"][0]["truncated"], true);
}

TEST(Cli, ConstructRoundTrip) {
  const fs::path out = fs::temp_directory_path() / "trileib_test_semidirect.alg";
  const CliResult r = run({"construct", "semidirect", (kCorpus / "n2_adjoint.rep").string(), "-o", out.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto A = std::get<ThreeLeibnizAlgebra>(io::load(out).object);
  EXPECT_EQ(A, semidirect_sum(fx::n2(), adjoint_rep(fx::n2())));
  EXPECT_EQ(run({"check", out.string()}).code, 0);
  fs::remove(out);
}

TEST(Cli, ManifestVerdicts) {
  const auto manifest = nlohmann::json::parse(slurp(kCorpus / "manifest.json"));
  ASSERT_FALSE(manifest["files"].empty());
  for (const auto& f : manifest["files"]) {
    const std::string file = f["file"];
    const auto doc = io::load(kCorpus / file);
    EXPECT_EQ(io::kind_of(doc.object), f["kind"].get<std::string>()) << file;
    const int code = run({"check", (kCorpus / file).string()}).code;
    EXPECT_EQ(code, f["expect"] == "pass" ? 0 : 1) << file;
  }
}

TEST(Cli, JobsDoNotChangeReports) {
  for (const char* file : {"broken_n2.alg", "vp4_sum2.tri", "n2_double.scn", "deform_b.scn"}) {
    const std::string path = (kCorpus / file).string();
    const CliResult one = run({"--format", "json", "--jobs", "1", "check", path});
    const CliResult many = run({"--format", "json", "--jobs", "8", "check", path});
    EXPECT_EQ(one.code, many.code);
    EXPECT_EQ(one.out, many.out) << file;
  }
}

TEST(Corpus, GeneratorReproducesCommittedFiles) {
  const fs::path tmp = fs::temp_directory_path() / "trileib_gen_corpus";
  fs::remove_all(tmp);
  const std::string cmd = std::string(TRILEIB_GEN_CORPUS) + " " + tmp.string();
  ASSERT_EQ(std::system(cmd.c_str()), 0);
  std::size_t files = 0;
  for (const auto& e : fs::recursive_directory_iterator(tmp)) {
    if (!e.is_regular_file()) continue;
    const fs::path rel = fs::relative(e.path(), tmp);
    EXPECT_EQ(slurp(e.path()), slurp(kCorpus / rel)) << rel;
    ++files;
  }
  std::size_t committed = 0;
  for (const auto& e : fs::recursive_directory_iterator(kCorpus)) committed += e.is_regular_file();
  EXPECT_EQ(files, committed);
  fs::remove_all(tmp);
}
