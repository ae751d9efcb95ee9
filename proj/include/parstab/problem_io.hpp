#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "parstab/hodge.hpp"
#include "parstab/lowrank.hpp"
#include "parstab/rational.hpp"
#include "parstab/shifting.hpp"

namespace parstab {

enum class Schema { unitary, hodge1n, hodge12, hodge11, hodge111, chain };

inline const char* schema_name(Schema s) {
  switch (s) {
    case Schema::unitary: return "unitary";
    case Schema::hodge1n: return "hodge1n";
    case Schema::hodge12: return "hodge12";
    case Schema::hodge11: return "hodge11";
    case Schema::hodge111: return "hodge111";
    case Schema::chain: return "chain";
  }
  return "?";
}

/// Structured parse failure: a stable diagnostic code plus the offending
/// location, joined into what().
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string code, const std::string& detail)
      : std::runtime_error(code + ": " + detail), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

/// Validated problem file contents.  weight_rows holds one row per point in
/// schema layout: hodge1n rows are [alpha, beta_1..beta_n], hodge12 rows
/// [alpha, beta1, beta2], hodge11 rows [alpha, alpha_prime], hodge111 rows
/// [alpha_1..alpha_3], unitary and chain rows the plain weight lists.
struct ProblemFile {
  Schema schema = Schema::unitary;
  int n = 0;
  std::vector<std::string> labels;
  std::vector<std::vector<Rat>> weight_rows;
  long long deg_line = 0;
  long long deg_bulk = 0;
  std::vector<long long> degrees;
  bool strict = false;
};

namespace detail {

inline Rat parse_weight(const nlohmann::json& v, const std::string& where) {
  if (v.is_number_integer()) return Rat(static_cast<long long>(v.get<long long>()));
  if (!v.is_string()) throw ParseError("BAD_TYPE", where + " must be a string or integer");
  Rat out;
  switch (parse_rational(v.get<std::string>(), out)) {
    case RatParseStatus::ok: return out;
    case RatParseStatus::zero_denominator:
      throw ParseError("DEN_ZERO", where + " has denominator zero");
    case RatParseStatus::negative_denominator:
      throw ParseError("DEN_NEGATIVE", where + " must have a positive denominator");
    case RatParseStatus::malformed: break;
  }
  throw ParseError("BAD_RATIONAL", where + " is not a valid rational");
}

inline long long parse_integer(const nlohmann::json& v, const std::string& where) {
  if (!v.is_number_integer()) throw ParseError("BAD_TYPE", where + " must be an integer");
  return v.get<long long>();
}

inline void check_window(const std::vector<Rat>& row, const std::string& where) {
  Rat lo = row.front(), hi = row.front();
  for (const auto& x : row) {
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  if (hi - lo >= 1) throw ParseError("WINDOW", where + " weights span an interval of length >= 1");
}

}  // namespace detail

inline ProblemFile parse_problem_file(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("BAD_JSON", e.what());
  }
  if (!doc.is_object()) throw ParseError("BAD_JSON", "top level must be an object");

  ProblemFile pf;
  if (!doc.contains("schema")) throw ParseError("MISSING_FIELD", "schema");
  if (!doc["schema"].is_string()) throw ParseError("BAD_TYPE", "schema must be a string");
  const std::string schema = doc["schema"].get<std::string>();
  if (schema == "unitary")
    pf.schema = Schema::unitary;
  else if (schema == "hodge1n")
    pf.schema = Schema::hodge1n;
  else if (schema == "hodge12")
    pf.schema = Schema::hodge12;
  else if (schema == "hodge11")
    pf.schema = Schema::hodge11;
  else if (schema == "hodge111")
    pf.schema = Schema::hodge111;
  else if (schema == "chain")
    pf.schema = Schema::chain;
  else
    throw ParseError("UNKNOWN_SCHEMA", schema);

  if (!doc.contains("points")) throw ParseError("MISSING_FIELD", "points");
  if (!doc["points"].is_array() || doc["points"].empty())
    throw ParseError("BAD_TYPE", "points must be a nonempty array");

  std::set<std::string> seen;
  int idx = 0;
  for (const auto& pt : doc["points"]) {
    const std::string where = "points[" + std::to_string(idx) + "]";
    if (!pt.is_object()) throw ParseError("BAD_TYPE", where + " must be an object");
    if (!pt.contains("label")) throw ParseError("MISSING_FIELD", where + ".label");
    if (!pt["label"].is_string()) throw ParseError("BAD_TYPE", where + ".label must be a string");
    std::string label = pt["label"].get<std::string>();
    if (!seen.insert(label).second) throw ParseError("DUP_LABEL", label);
    if (!pt.contains("weights")) throw ParseError("MISSING_FIELD", where + ".weights");
    if (!pt["weights"].is_array() || pt["weights"].empty())
      throw ParseError("BAD_TYPE", where + ".weights must be a nonempty array");
    std::vector<Rat> row;
    int widx = 0;
    for (const auto& wv : pt["weights"])
      row.push_back(detail::parse_weight(wv, where + ".weights[" + std::to_string(widx++) + "]"));
    pf.labels.push_back(std::move(label));
    pf.weight_rows.push_back(std::move(row));
    ++idx;
  }

  if (doc.contains("options")) {
    const auto& opt = doc["options"];
    if (!opt.is_object()) throw ParseError("BAD_TYPE", "options must be an object");
    if (opt.contains("strict")) {
      if (!opt["strict"].is_boolean()) throw ParseError("BAD_TYPE", "options.strict must be a boolean");
      pf.strict = opt["strict"].get<bool>();
    }
  }

  auto degree_map = [&](std::initializer_list<const char*> keys) {
    if (!doc.contains("degrees")) throw ParseError("MISSING_FIELD", "degrees");
    if (!doc["degrees"].is_object()) throw ParseError("BAD_TYPE", "degrees must be an object");
    if (doc["degrees"].size() != keys.size())
      throw ParseError("BAD_DEGREES", "degrees must have exactly the expected keys");
    std::vector<long long> out;
    for (const char* k : keys) {
      if (!doc["degrees"].contains(k))
        throw ParseError("BAD_DEGREES", std::string("degrees missing key ") + k);
      out.push_back(detail::parse_integer(doc["degrees"][k], std::string("degrees.") + k));
    }
    return out;
  };

  const std::size_t s = pf.weight_rows.size();
  switch (pf.schema) {
    case Schema::unitary: {
      if (!doc.contains("n")) throw ParseError("MISSING_FIELD", "n");
      pf.n = static_cast<int>(detail::parse_integer(doc["n"], "n"));
      if (pf.n < 2) throw ParseError("BAD_RANK", "unitary rank n must be at least 2");
      if (s < 2) throw ParseError("TOO_FEW_POINTS", "unitary needs at least two points");
      for (std::size_t p = 0; p < s; ++p) {
        const auto& row = pf.weight_rows[p];
        const std::string where = "points[" + std::to_string(p) + "]";
        if (static_cast<int>(row.size()) != pf.n)
          throw ParseError("WEIGHT_COUNT", where + " must list exactly n weights");
        for (std::size_t i = 1; i < row.size(); ++i)
          if (row[i] < row[i - 1])
            throw ParseError("NOT_SORTED", where + " weights must be weakly increasing");
        detail::check_window(row, where);
      }
      break;
    }
    case Schema::hodge1n: {
      if (!doc.contains("n")) throw ParseError("MISSING_FIELD", "n");
      pf.n = static_cast<int>(detail::parse_integer(doc["n"], "n"));
      if (pf.n < 1) throw ParseError("BAD_RANK", "hodge1n rank n must be at least 1");
      if (s < 3) throw ParseError("TOO_FEW_POINTS", "hodge1n needs at least three points");
      auto deg = degree_map({"L", "V"});
      pf.deg_line = deg[0];
      pf.deg_bulk = deg[1];
      for (std::size_t p = 0; p < s; ++p) {
        const auto& row = pf.weight_rows[p];
        const std::string where = "points[" + std::to_string(p) + "]";
        if (static_cast<int>(row.size()) != pf.n + 1)
          throw ParseError("WEIGHT_COUNT", where + " must list alpha plus n betas");
        for (std::size_t i = 2; i < row.size(); ++i)
          if (!(row[i - 1] < row[i]))
            throw ParseError("NOT_SORTED", where + " betas must be strictly increasing");
        for (std::size_t i = 1; i < row.size(); ++i)
          if (row[0] == row[i]) throw ParseError("TIE", where + " alpha equals a beta weight");
        detail::check_window(row, where);
      }
      break;
    }
    case Schema::hodge12: {
      if (s < 3) throw ParseError("TOO_FEW_POINTS", "hodge12 needs at least three points");
      auto deg = degree_map({"L", "V"});
      pf.deg_line = deg[0];
      pf.deg_bulk = deg[1];
      for (std::size_t p = 0; p < s; ++p) {
        const auto& row = pf.weight_rows[p];
        const std::string where = "points[" + std::to_string(p) + "]";
        if (row.size() != 3)
          throw ParseError("WEIGHT_COUNT", where + " must list alpha, beta1, beta2");
        if (!(row[1] <= row[2]))
          throw ParseError("NOT_SORTED", where + " needs beta1 <= beta2");
        detail::check_window(row, where);
      }
      break;
    }
    case Schema::hodge11: {
      for (std::size_t p = 0; p < s; ++p)
        if (pf.weight_rows[p].size() != 2)
          throw ParseError("WEIGHT_COUNT",
                           "points[" + std::to_string(p) + "] must list alpha, alphaPrime");
      break;
    }
    case Schema::hodge111: {
      auto deg = degree_map({"1", "2", "3"});
      pf.degrees = std::move(deg);
      for (std::size_t p = 0; p < s; ++p)
        if (pf.weight_rows[p].size() != 3)
          throw ParseError("WEIGHT_COUNT",
                           "points[" + std::to_string(p) + "] must list three weights");
      break;
    }
    case Schema::chain: {
      if (!doc.contains("degrees")) throw ParseError("MISSING_FIELD", "degrees");
      if (!doc["degrees"].is_object()) throw ParseError("BAD_TYPE", "degrees must be an object");
      const std::size_t len = doc["degrees"].size();
      if (len < 1) throw ParseError("BAD_DEGREES", "chain needs at least one degree");
      for (std::size_t i = 1; i <= len; ++i) {
        std::string key = std::to_string(i);
        if (!doc["degrees"].contains(key))
          throw ParseError("BAD_DEGREES", "chain degrees must use keys 1..N; missing " + key);
        pf.degrees.push_back(detail::parse_integer(doc["degrees"][key], "degrees." + key));
      }
      for (std::size_t p = 0; p < s; ++p)
        if (pf.weight_rows[p].size() != len)
          throw ParseError("WEIGHT_COUNT",
                           "points[" + std::to_string(p) + "] must list N weights");
      break;
    }
  }
  return pf;
}

/// Canonical serialization; parse(emit(pf)) reproduces pf exactly.
inline std::string emit_problem_file(const ProblemFile& pf) {
  nlohmann::ordered_json doc;
  doc["schema"] = schema_name(pf.schema);
  if (pf.schema == Schema::unitary || pf.schema == Schema::hodge1n) doc["n"] = pf.n;
  doc["points"] = nlohmann::ordered_json::array();
  for (std::size_t p = 0; p < pf.weight_rows.size(); ++p) {
    nlohmann::ordered_json pt;
    pt["label"] = pf.labels[p];
    pt["weights"] = nlohmann::ordered_json::array();
    for (const auto& w : pf.weight_rows[p]) pt["weights"].push_back(format_rational(w));
    doc["points"].push_back(std::move(pt));
  }
  if (pf.schema == Schema::hodge1n || pf.schema == Schema::hodge12) {
    doc["degrees"]["L"] = pf.deg_line;
    doc["degrees"]["V"] = pf.deg_bulk;
  } else if (pf.schema == Schema::hodge111 || pf.schema == Schema::chain) {
    doc["degrees"] = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < pf.degrees.size(); ++i)
      doc["degrees"][std::to_string(i + 1)] = pf.degrees[i];
  }
  doc["options"]["strict"] = pf.strict;
  return doc.dump(2) + "\n";
}

inline HodgeProblem1N to_hodge1n(const ProblemFile& pf) {
  HodgeProblem1N prob;
  prob.n = pf.n;
  prob.labels = pf.labels;
  prob.deg_line = pf.deg_line;
  prob.deg_bulk = pf.deg_bulk;
  for (const auto& row : pf.weight_rows) {
    WeightedPoint1N pt;
    pt.alpha = row.front();
    pt.betas.assign(row.begin() + 1, row.end());
    prob.points.push_back(std::move(pt));
  }
  return prob;
}

inline HodgeProblem12 to_hodge12(const ProblemFile& pf) {
  HodgeProblem12 prob;
  prob.labels = pf.labels;
  prob.deg_line = pf.deg_line;
  prob.deg_bulk = pf.deg_bulk;
  for (const auto& row : pf.weight_rows) prob.points.push_back({row[0], row[1], row[2]});
  return prob;
}

inline std::vector<Weights11> to_hodge11(const ProblemFile& pf) {
  std::vector<Weights11> pts;
  for (const auto& row : pf.weight_rows) pts.push_back({row[0], row[1]});
  return pts;
}

inline HodgeProblem111 to_hodge111(const ProblemFile& pf) {
  HodgeProblem111 prob;
  prob.labels = pf.labels;
  prob.degrees = {pf.degrees[0], pf.degrees[1], pf.degrees[2]};
  for (const auto& row : pf.weight_rows) prob.points.push_back({row[0], row[1], row[2]});
  return prob;
}

inline ChainProblem to_chain(const ProblemFile& pf) {
  ChainProblem prob;
  prob.labels = pf.labels;
  prob.degrees = pf.degrees;
  prob.points = pf.weight_rows;
  return prob;
}

}  // namespace parstab
