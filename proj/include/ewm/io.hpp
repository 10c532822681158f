#pragma once

// JSON input/output documents for the command line tool.
//
// Input files use 1-based simple-root indices. Weights are either dense
// arrays over all fundamental weights or sparse objects {"3": 1, "5": -2}.
// Characters are coordinate arrays in the relevant character space.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ewm/chevalley.hpp"
#include "ewm/core.hpp"
#include "ewm/solvable.hpp"

namespace ewm::io {

enum class Mode { General, Solvable, Roots, Check };
std::string_view to_string(Mode m);
Mode mode_from_string(std::string_view s);  // throws SchemaError

struct CheckRequest {
  std::shared_ptr<const ChevalleyAlgebra> alg;
  std::vector<int> alphas;
  std::vector<AlgVec> p_u;
  std::vector<AlgVec> h_u;
  std::vector<AlgVec> s_prime;
};

struct InputDocument {
  Mode mode = Mode::Roots;
  std::shared_ptr<const RootSystem> rs;
  std::optional<GeneralDatum> general;
  std::optional<SolvableDatum> solvable;
  std::optional<CheckRequest> check;
};

// Throws Error(SchemaError) whose message starts with a JSON pointer.
InputDocument parse_input(std::string_view text, std::optional<Mode> expected = std::nullopt);

struct GeneratorOut {
  IntVec lambda;
  IntVec chi;
  std::string origin;
  bool operator==(const GeneratorOut&) const = default;
};

struct Xi3Out {
  int mu = 0;  // 1-based
  IntVec lift;
  IntVec particular;
  std::vector<IntVec> relations;
  std::vector<IntVec> echelon;  // rows [coefficients | rhs]
  bool unique = true;
  bool operator==(const Xi3Out&) const = default;
};

struct RootOut {
  std::vector<int> root;
  IntVec weight;
  int height = 0;
  bool operator==(const RootOut&) const = default;
};

struct PiOut {
  std::vector<int> root;
  int pi = 0;  // 1-based
  bool operator==(const PiOut&) const = default;
};

struct AlgTermOut {
  std::vector<int> root;  // empty for a Cartan element
  int h = 0;              // 1-based when root is empty
  Rational coeff;
  bool operator==(const AlgTermOut&) const = default;
};

struct CheckOut {
  int alpha = 0;  // 1-based
  std::vector<std::vector<AlgTermOut>> ideal;
  bool ideal_in_h_u = false;
  bool commutes = false;
  std::string verdict;
  bool operator==(const CheckOut&) const = default;
};

struct OutputDocument {
  std::string mode;
  std::string status = "ok";
  std::string group;
  std::optional<CharSpace> chi_space;
  std::vector<GeneratorOut> generators;
  std::vector<IntVec> ker_iota;
  std::vector<IntVec> lambda_basis;
  std::vector<int> pi12;
  std::vector<std::vector<std::optional<Int>>> rho_table;
  std::vector<Xi3Out> xi3;
  std::vector<int> sigma_used;
  std::vector<PiOut> pi_map;
  std::vector<IntVec> phi;
  std::vector<RootOut> roots;
  std::vector<CheckOut> checks;
  std::vector<Diagnostic> diagnostics;
  std::string tool = "ewm";
  std::string version;
  std::string input_hash;
  bool operator==(const OutputDocument&) const = default;
};

enum class Format { Json, Text };

std::string emit_output(const OutputDocument& doc, Format format);
OutputDocument parse_output(std::string_view json_text);

// Rendering helpers for the text format.
std::string render_weight(const IntVec& w);
std::string render_character(const IntVec& chi, const CharSpace& space);
std::string render_biweight(const GeneratorOut& g, const CharSpace& space);

std::string fnv1a_hex(std::string_view bytes);

}  // namespace ewm::io
