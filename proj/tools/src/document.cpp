#include "retoric_io/document.hpp"

#include <cstdlib>
#include <limits>

#include "json.hpp"
#include "retoric/errors.hpp"

namespace retoric::io {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void parse_fail(const std::string& detail) {
  fail(ErrorKind::ParseError, detail);
}

long long to_ll(const Int& v) {
  static const Int lo(std::numeric_limits<long long>::min());
  static const Int hi(std::numeric_limits<long long>::max());
  if (v < lo || v > hi) {
    fail(ErrorKind::ValidationError, "integer entry exceeds the serializable range");
  }
  return v.convert_to<long long>();
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    parse_fail(e.what());
  }
}

long long require_integer(const json& value, const std::string& where) {
  if (!value.is_number_integer()) {
    parse_fail("field '" + where + "' must be an integer");
  }
  return value.get<long long>();
}

IntVec require_vector(const json& value, std::size_t width, const std::string& where) {
  if (!value.is_array() || value.size() != width) {
    parse_fail("field '" + where + "' must be an integer vector of length " +
               std::to_string(width));
  }
  IntVec v(width);
  for (std::size_t i = 0; i < width; ++i) {
    v[i] = Int(require_integer(value[i], where + "[" + std::to_string(i) + "]"));
  }
  return v;
}

}  // namespace

std::size_t max_rank_from_env() {
  const char* raw = std::getenv("RETORIC_MAX_RANK");
  if (raw == nullptr) return kDefaultMaxRank;
  char* end = nullptr;
  unsigned long long parsed = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || parsed == 0) return kDefaultMaxRank;
  return static_cast<std::size_t>(parsed);
}

RealToricVariety parse_document(const std::string& text, std::size_t max_rank) {
  const json doc = parse_json(text);
  if (!doc.is_object()) parse_fail("top-level value must be an object");
  for (const auto& [key, unused] : doc.items()) {
    (void)unused;
    if (key != "rank" && key != "tau" && key != "cones" && key != "twist") {
      parse_fail("unknown field '" + key + "'");
    }
  }
  for (const char* key : {"rank", "tau", "cones"}) {
    if (!doc.contains(key)) parse_fail(std::string("missing field '") + key + "'");
  }

  const long long rank_ll = require_integer(doc["rank"], "rank");
  if (rank_ll < 1) parse_fail("field 'rank' must be a positive integer");
  const auto rank = static_cast<std::size_t>(rank_ll);
  if (rank > max_rank) {
    fail(ErrorKind::ValidationError,
         "rank " + std::to_string(rank) + " exceeds the maximum ambient rank " +
             std::to_string(max_rank));
  }

  const json& tau_rows = doc["tau"];
  if (!tau_rows.is_array() || tau_rows.size() != rank) {
    parse_fail("field 'tau' must be a " + std::to_string(rank) + " x " +
               std::to_string(rank) + " integer matrix");
  }
  IntMat tau(rank, rank);
  for (std::size_t i = 0; i < rank; ++i) {
    const IntVec row = require_vector(tau_rows[i], rank, "tau[" + std::to_string(i) + "]");
    for (std::size_t j = 0; j < rank; ++j) tau.at(i, j) = row[j];
  }

  const json& cone_list = doc["cones"];
  if (!cone_list.is_array()) parse_fail("field 'cones' must be a list of cones");

  std::optional<IntVec> twist;
  if (doc.contains("twist")) {
    twist = require_vector(doc["twist"], rank, "twist");
  }

  try {
    InvolutiveLattice lattice(rank, tau);

    std::vector<Cone> cones;
    cones.reserve(cone_list.size());
    for (std::size_t i = 0; i < cone_list.size(); ++i) {
      const json& gens = cone_list[i];
      const std::string where = "cones[" + std::to_string(i) + "]";
      if (!gens.is_array()) parse_fail("field '" + where + "' must be a list of generators");
      std::vector<IntVec> generators;
      generators.reserve(gens.size());
      for (std::size_t j = 0; j < gens.size(); ++j) {
        generators.push_back(
            require_vector(gens[j], rank, where + "[" + std::to_string(j) + "]"));
      }
      cones.emplace_back(rank, std::move(generators));
    }

    EquivariantFan fan = cones.empty() ? EquivariantFan::trivial(lattice)
                                       : EquivariantFan(lattice, std::move(cones));
    if (twist.has_value()) return RealToricVariety(std::move(fan), *twist);
    return RealToricVariety(std::move(fan));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ParseError || e.kind() == ErrorKind::ValidationError) throw;
    fail(ErrorKind::ValidationError,
         std::string(error_kind_name(e.kind())) + ": " + e.detail());
  }
}

std::string emit_document(const RealToricVariety& X) {
  const std::size_t rank = X.lattice().rank();
  json doc = json::object();
  doc["rank"] = rank;

  json tau_rows = json::array();
  for (std::size_t i = 0; i < rank; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < rank; ++j) row.push_back(to_ll(X.lattice().tau().at(i, j)));
    tau_rows.push_back(std::move(row));
  }
  doc["tau"] = std::move(tau_rows);

  json cone_list = json::array();
  for (const Cone& c : X.fan().maximal_cones()) {
    json gens = json::array();
    for (const IntVec& g : c.generators()) {
      json v = json::array();
      for (const Int& entry : g) v.push_back(to_ll(entry));
      gens.push_back(std::move(v));
    }
    cone_list.push_back(std::move(gens));
  }
  doc["cones"] = std::move(cone_list);

  if (!X.twist().is_zero()) {
    json v = json::array();
    for (const Int& entry : X.twist().canonical_form()) v.push_back(to_ll(entry));
    doc["twist"] = std::move(v);
  }
  return doc.dump(2) + "\n";
}

std::vector<IntVec> parse_vectors(const std::string& text, std::size_t width) {
  const json list = parse_json(text);
  if (!list.is_array()) parse_fail("generator list must be a JSON array of integer vectors");
  std::vector<IntVec> out;
  out.reserve(list.size());
  for (std::size_t i = 0; i < list.size(); ++i) {
    out.push_back(require_vector(list[i], width, "[" + std::to_string(i) + "]"));
  }
  return out;
}

IntMat parse_matrix_rows(const std::string& text, std::size_t cols) {
  const json rows = parse_json(text);
  if (!rows.is_array() || rows.empty()) {
    parse_fail("matrix must be a non-empty JSON array of rows");
  }
  IntMat m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const IntVec row = require_vector(rows[i], cols, "[" + std::to_string(i) + "]");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = row[j];
  }
  return m;
}

}  // namespace retoric::io
