#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "trileib/deformation.hpp"
#include "trileib/dialgebra.hpp"

namespace trileib::io {

inline constexpr int kSchemaVersion = 1;

struct RepresentationDoc {
  ThreeLeibnizAlgebra algebra;
  Representation rep;
  friend bool operator==(const RepresentationDoc&, const RepresentationDoc&) = default;
};

/// A map V -> g together with its context. With an action the representation
/// is the action's; `adjoint` marks V = g acted on by the bracket.
struct EmbeddingScenario {
  ThreeLeibnizAlgebra algebra;
  Representation rep;
  bool adjoint = false;
  std::optional<Action> action;
  LinMap map;
  bool crossed_module = false;
  friend bool operator==(const EmbeddingScenario&, const EmbeddingScenario&) = default;
};

struct Conjugation {
  LinMap phi;
  LinMap psi;
  friend bool operator==(const Conjugation&, const Conjugation&) = default;
};

struct DeformationScenario {
  ThreeLeibnizAlgebra algebra;
  Representation rep;
  bool adjoint = false;
  LinMap map;
  std::optional<LinMap> t1;
  std::optional<std::vector<ElementPair>> candidates;
  std::vector<Conjugation> conjugations;
  friend bool operator==(const DeformationScenario&, const DeformationScenario&) = default;
};

using Object = std::variant<ThreeLeibnizAlgebra, BinaryAlgebra, TriLeibnizAlgebra, RepresentationDoc, Action,
                            LinMap, EmbeddingScenario, TriLeibnizDialgebra, DeformationScenario>;

struct Document {
  Object object;
  std::vector<std::string> labels;  // optional basis labels
  friend bool operator==(const Document&, const Document&) = default;
};

/// File kind names: leibniz3, leibniz2, trileibniz, representation, action,
/// linmap, embedding_scenario, dialgebra, deformation_scenario.
std::string kind_of(const Object& obj);

/// Throws ParseError (with line number), SchemaError or IndexOutOfRange.
Document load(const std::filesystem::path& path);
Document parse(const std::string& text, const std::filesystem::path& base_dir = ".");
void save(const Document& doc, const std::filesystem::path& path);
std::string dump(const Document& doc);

}  // namespace trileib::io
