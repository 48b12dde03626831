#include "deltak/json_io.hpp"

#include <fstream>

#include "deltak/errors.hpp"

namespace deltak {
namespace {

int get_n(const Json& j) {
  if (!j.contains("n") || !j["n"].is_number_integer()) throw InvalidInputError("input needs an integer field \"n\"");
  const int n = j["n"].get<int>();
  if (n < 1 || n > kMaxGroundSize) throw InvalidInputError("n out of range: " + std::to_string(n));
  return n;
}

Subset parse_feasible_entry(int n, const Json& entry) {
  if (!entry.is_array()) throw InvalidInputError("feasible entries must be arrays");
  std::vector<int> pos;
  int count = 0;
  bool has_negative = false;
  Subset seen = 0;
  for (const auto& x : entry) {
    if (!x.is_number_integer()) throw InvalidInputError("feasible entries must hold integers");
    const int e = x.get<int>();
    if (e == 0 || e > n || e < -n) throw InvalidInputError("element out of range: " + std::to_string(e));
    const Subset bit = Subset{1} << (std::abs(e) - 1);
    if (seen & bit) throw InvalidInputError("entry repeats an element or contains both i and -i");
    seen |= bit;
    ++count;
    if (e > 0) pos.push_back(e);
    else has_negative = true;
  }
  if (has_negative && count != n) throw InvalidInputError("signed entries must list a maximal admissible set");
  return subset_from_elements(pos);
}

Rational parse_entry(const Json& x) {
  if (x.is_number_integer()) return Rational(x.get<long>());
  if (x.is_string()) return parse_rational(x.get<std::string>());
  throw InvalidInputError("matrix entries must be integers or rational strings");
}

}  // namespace

ParsedInput parse_input(const Json& j) {
  if (!j.is_object()) throw InvalidInputError("input must be a JSON object");
  const int n = get_n(j);
  if (auto raw = raw_family(j)) return {InputKind::Family, DeltaMatroid::create(n, std::move(raw->second)), std::nullopt};
  if (j.contains("rows")) {
    GroundMatrix m;
    m.n = n;
    const std::string field = j.value("field", "Q");
    if (field == "Q") m.field = Field::Rationals;
    else if (field == "F2") m.field = Field::GF2;
    else throw InvalidInputError("field must be \"Q\" or \"F2\"");
    for (const auto& row : j["rows"]) {
      if (!row.is_array() || static_cast<int>(row.size()) != 2 * n + 1)
        throw InvalidInputError("each row needs 2n+1 entries");
      std::vector<Rational> r;
      for (const auto& x : row) r.push_back(parse_entry(x));
      m.rows.push_back(std::move(r));
    }
    return {InputKind::Matrix, from_matrix(m), m};
  }
  if (j.contains("edges")) {
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2) throw InvalidInputError("edges must be pairs");
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    auto [dm, m] = from_graph(n, edges);
    return {InputKind::Graph, dm, m};
  }
  throw InvalidInputError("input needs \"feasible\", \"rows\" or \"edges\"");
}

std::optional<std::pair<int, std::vector<Subset>>> raw_family(const Json& j) {
  if (!j.is_object()) throw InvalidInputError("input must be a JSON object");
  const int n = get_n(j);
  if (!j.contains("feasible")) return std::nullopt;
  if (!j["feasible"].is_array()) throw InvalidInputError("\"feasible\" must be an array");
  std::vector<Subset> family;
  for (const auto& e : j["feasible"]) family.push_back(parse_feasible_entry(n, e));
  return std::make_pair(n, std::move(family));
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInputError("cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InvalidInputError(path + ": " + e.what());
  }
}

ParsedInput read_input_file(const std::string& path) { return parse_input(read_json_file(path)); }

Json to_json(const DeltaMatroid& d) {
  Json fam = Json::array();
  for (Subset s : d.feasible()) fam.push_back(subset_elements(s));
  return {{"n", d.n()}, {"feasible", fam}};
}

Json to_json(const GroundMatrix& m) {
  Json rows = Json::array();
  for (const auto& r : m.rows) {
    Json row = Json::array();
    for (const auto& x : r) row.push_back(to_string(x));
    rows.push_back(row);
  }
  return {{"field", m.field == Field::GF2 ? "F2" : "Q"}, {"n", m.n}, {"rows", rows}};
}

Json poly_to_json(const UniPoly& p) {
  Json out = Json::object();
  for (int i = 0; i <= p.degree(); ++i)
    if (p.coeff(i) != 0) out[std::to_string(i)] = to_string(p.coeff(i));
  return out;
}

UniPoly poly_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidInputError("polynomial must be an object");
  std::vector<Rational> coeffs;
  for (const auto& [k, v] : j.items()) {
    int deg = 0;
    try {
      deg = std::stoi(k);
    } catch (const std::exception&) {
      throw InvalidInputError("bad polynomial degree key: " + k);
    }
    if (deg < 0) throw InvalidInputError("negative polynomial degree");
    if (static_cast<int>(coeffs.size()) <= deg) coeffs.resize(deg + 1);
    coeffs[deg] = v.is_string() ? parse_rational(v.get<std::string>()) : Rational(v.get<long>());
  }
  return UniPoly(std::move(coeffs));
}

Json laurent_to_json(const LaurentPoly& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) out.push_back({{"exp", e}, {"coeff", to_string(c)}});
  return out;
}

Json vector_to_json(const IntVec& v) { return Json(v); }

}  // namespace deltak
