// Writes the bundled example corpus and its manifest.
#include <filesystem>
#include <fstream>
#include <iostream>

#include <json.hpp>

#include "trileib/embedding.hpp"
#include "trileib/fixtures.hpp"
#include "trileib/io.hpp"

namespace fs = std::filesystem;
using namespace trileib;
using ojson = nlohmann::ordered_json;

namespace {

fs::path root;
ojson manifest = ojson::array();

void record(const std::string& file, const char* kind, bool pass) {
  manifest.push_back({{"file", file}, {"kind", kind}, {"expect", pass ? "pass" : "fail"}});
}

void put(const std::string& file, io::Object obj, bool pass = true, std::vector<std::string> labels = {}) {
  io::Document doc{std::move(obj), std::move(labels)};
  fs::create_directories((root / file).parent_path());
  io::save(doc, root / file);
  record(file, io::kind_of(doc.object).c_str(), pass);
}

// Files holding references are written by hand so the links stay visible.
void put_json(const std::string& file, ojson j, bool pass = true) {
  ojson out;
  out["schema_version"] = io::kSchemaVersion;
  out["kind"] = j["kind"];
  for (auto it = j.begin(); it != j.end(); ++it)
    if (it.key() != "kind") out[it.key()] = it.value();
  std::ofstream(root / file) << out.dump(2) << "\n";
  record(file, out["kind"].get<std::string>().c_str(), pass);
}

void map_file(const std::string& file, const LinMap& M) {
  fs::create_directories((root / file).parent_path());
  io::save(io::Document{M, {}}, root / file);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: gen_corpus <output-dir>\n";
    return 2;
  }
  root = argv[1];
  fs::create_directories(root);
  namespace fx = fixtures;

  for (std::size_t n = 1; n <= 4; ++n) put("a0_" + std::to_string(n) + ".alg", fx::abelian(n));
  put("vp4.alg", fx::vp4(), true, {"e1", "e2", "e3", "e4"});
  put("n2.alg", fx::n2());
  put("broken_n2.alg", fx::broken_n2(), false);
  put("deform_a.alg", fx::deform_a());
  put("deform_b.alg", fx::deform_b());
  put("deform_c.alg", fx::deform_c());

  put("n2.lb2", fx::n2_binary());
  put("sl2.lb2", fx::sl2_binary(), true, {"e", "f", "h"});
  put("n2_cubed.alg", three_from_binary(fx::n2_binary()));
  put("sl2_cubed.alg", three_from_binary(fx::sl2_binary()));
  put("tensor_square_n2.lb2", binary_on_tensor_square(fx::n2()));
  put("tensor_square_vp4.lb2", binary_on_tensor_square(fx::vp4()));

  put("vp4_sum1.tri", direct_sum_tri(fx::vp4(), 1));
  // Two copies of vp4 break the first tri-Leibniz identity.
  put("vp4_sum2.tri", direct_sum_tri(fx::vp4(), 2), false);
  for (std::size_t k = 1; k <= 3; ++k) put("a0_2_sum" + std::to_string(k) + ".tri", direct_sum_tri(fx::abelian(2), k));
  for (std::size_t k = 1; k <= 3; ++k) put("n2_sum" + std::to_string(k) + ".tri", direct_sum_tri(fx::n2(), k));
  put("vp4.tri", from_3leibniz(fx::vp4()));
  put("n2_diff.tri", from_differential(fx::n2(), fx::n2_differential()));
  put("n2_hemi.tri", hemisemidirect(fx::n2(), adjoint_rep(fx::n2())));

  put("n2_adjoint.rep", io::RepresentationDoc{fx::n2(), adjoint_rep(fx::n2())});
  put("vp4_adjoint.rep", io::RepresentationDoc{fx::vp4(), adjoint_rep(fx::vp4())});
  put("a0_2_zero3.rep", io::RepresentationDoc{fx::abelian(2), Representation::zero(2, 3)});
  put("vp4_copies2.rep", io::RepresentationDoc{fx::vp4(), copies_representation(fx::vp4(), 2)});

  put("vp4_ideal.act", fx::vp4_ideal_action());
  put("n2_self.act", fx::n2_self_action());

  map_file("maps/zero_2x3.map", LinMap::zero(2, 3));
  map_file("maps/id2.map", LinMap::identity(2));
  map_file("maps/double2.map", scaled(LinMap::identity(2), Scalar(2)));
  map_file("maps/id4.map", LinMap::identity(4));
  map_file("maps/vp4_inclusion.map", fx::vp4_ideal_inclusion());
  map_file("maps/n2_d.map", fx::n2_differential());
  map_file("maps/vp4_sum2.map", sum_map(4, 2));
  map_file("maps/deform_a_T.map", fx::deform_a_operator());
  map_file("maps/deform_b_T.map", fx::deform_b_operator());
  map_file("maps/deform_c_T.map", fx::deform_c_operator());

  put_json("abelian_zero_rep.scn", {{"kind", "embedding_scenario"},
                                    {"algebra", "a0_2.alg"},
                                    {"representation", "a0_2_zero3.rep"},
                                    {"map", "maps/zero_2x3.map"}});
  put_json("n2_identity.scn",
           {{"kind", "embedding_scenario"}, {"algebra", "n2.alg"}, {"representation", "adjoint"}, {"map", "maps/id2.map"}});
  put_json("vp4_identity.scn", {{"kind", "embedding_scenario"},
                                {"algebra", "vp4.alg"},
                                {"representation", "adjoint"},
                                {"map", "maps/id4.map"}});
  put_json("vp4_copies_sum.scn", {{"kind", "embedding_scenario"},
                                  {"algebra", "vp4.alg"},
                                  {"representation", "vp4_copies2.rep"},
                                  {"map", "maps/vp4_sum2.map"}});
  put_json("vp4_crossed.scn", {{"kind", "embedding_scenario"},
                               {"action", "vp4_ideal.act"},
                               {"map", "maps/vp4_inclusion.map"},
                               {"crossed_module", true}});
  put_json("n2_self.scn",
           {{"kind", "embedding_scenario"}, {"action", "n2_self.act"}, {"map", "maps/id2.map"}, {"crossed_module", true}});
  put_json("n2_self_d.scn", {{"kind", "embedding_scenario"}, {"action", "n2_self.act"}, {"map", "maps/n2_d.map"}});
  put_json("n2_double.scn", {{"kind", "embedding_scenario"}, {"action", "n2_self.act"}, {"map", "maps/double2.map"}},
           false);

  put("vp4_crossed.dia", induced_dialgebra(fx::vp4_ideal_inclusion(), fx::vp4_ideal_action()));
  put("n2_self.dia", induced_dialgebra(LinMap::identity(2), fx::n2_self_action()));
  put("n2_self_d.dia", induced_dialgebra(fx::n2_differential(), fx::n2_self_action()));

  // Deformations by the coboundary of a Nijenhuis element.
  const struct {
    const char* name;
    ThreeLeibnizAlgebra A;
    LinMap T;
    std::size_t a, b;
  } deforms[] = {{"deform_a", fx::deform_a(), fx::deform_a_operator(), 0, 0},
                 {"deform_b", fx::deform_b(), fx::deform_b_operator(), 1, 0},
                 {"deform_c", fx::deform_c(), fx::deform_c_operator(), 0, 0}};
  for (const auto& d : deforms) {
    const std::string name = d.name;
    const Vec a = basis_vec(3, d.a), b = basis_vec(3, d.b);
    map_file("maps/" + name + "_t1.map", coboundary(a, b, d.T, d.A, adjoint_rep(d.A)));
    put_json(name + ".scn", {{"kind", "deformation_scenario"},
                             {"algebra", name + ".alg"},
                             {"representation", "adjoint"},
                             {"map", "maps/" + name + "_T.map"},
                             {"t1", "maps/" + name + "_t1.map"}});
  }

  // Automorphism pairs (phi, phi) for adjoint scenarios.
  map_file("maps/n2_aut_2_1.map", fx::n2_automorphism(Scalar(2), Scalar(1)));
  map_file("maps/n2_aut_m1_3.map", fx::n2_automorphism(Scalar(-1), Scalar(3)));
  map_file("maps/vp4_swap.map", fx::signed_permutation({1, 0, 2, 3}, {1, -1, 1, 1}));
  map_file("maps/vp4_cycle.map", fx::signed_permutation({1, 2, 0, 3}, {1, 1, 1, 1}));
  put_json("n2_conjugations.scn",
           {{"kind", "deformation_scenario"},
            {"algebra", "n2.alg"},
            {"representation", "adjoint"},
            {"map", "maps/n2_d.map"},
            {"conjugations",
             {{{"phi", "maps/n2_aut_2_1.map"}, {"psi", "maps/n2_aut_2_1.map"}},
              {{"phi", "maps/n2_aut_m1_3.map"}, {"psi", "maps/n2_aut_m1_3.map"}}}}});
  put_json("vp4_conjugations.scn",
           {{"kind", "deformation_scenario"},
            {"algebra", "vp4.alg"},
            {"representation", "adjoint"},
            {"map", "maps/id4.map"},
            {"conjugations",
             {{{"phi", "maps/vp4_swap.map"}, {"psi", "maps/vp4_swap.map"}},
              {{"phi", "maps/vp4_cycle.map"}, {"psi", "maps/vp4_cycle.map"}}}}});

  std::ofstream(root / "manifest.json") << ojson{{"schema_version", io::kSchemaVersion}, {"files", manifest}}.dump(2)
                                        << "\n";
  return 0;
}
