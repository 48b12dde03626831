#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "deltak/delta_matroid.hpp"
#include "deltak/laurent.hpp"
#include "deltak/realization.hpp"
#include "deltak/unipoly.hpp"

namespace deltak {

using Json = nlohmann::json;

enum class InputKind { Family, Matrix, Graph };

struct ParsedInput {
  InputKind kind = InputKind::Family;
  DeltaMatroid dm;
  /// Present for Matrix and Graph inputs.
  std::optional<GroundMatrix> matrix;
};

/// Accepts {"n", "feasible"}, {"field", "n", "rows"} or {"n", "edges"}.
/// Feasible entries are subsets of [n]; signed entries (ī written -i) are
/// also accepted when they list a maximal admissible set.
/// Throws InvalidInputError on malformed input.
ParsedInput parse_input(const Json& j);
/// The "feasible" list without the delta-matroid check (for validation
/// reports); nullopt for matrix and graph inputs.
std::optional<std::pair<int, std::vector<Subset>>> raw_family(const Json& j);
Json read_json_file(const std::string& path);
ParsedInput read_input_file(const std::string& path);

Json to_json(const DeltaMatroid& d);
Json to_json(const GroundMatrix& m);
/// {"0": "4", "1": "8", ...}; zero coefficients are omitted.
Json poly_to_json(const UniPoly& p);
UniPoly poly_from_json(const Json& j);
/// [{"exp": [..], "coeff": "..."}]
Json laurent_to_json(const LaurentPoly& p);
Json vector_to_json(const IntVec& v);

}  // namespace deltak
