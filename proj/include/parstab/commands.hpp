#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "parstab/hodge.hpp"
#include "parstab/lowrank.hpp"
#include "parstab/partition.hpp"
#include "parstab/problem_io.hpp"
#include "parstab/quantum.hpp"
#include "parstab/rational.hpp"
#include "parstab/report.hpp"
#include "parstab/shifting.hpp"

namespace parstab {

struct CommandResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

namespace cli_detail {

inline Partition parse_partition_arg(const std::string& text) {
  if (text.size() < 2 || text.front() != '(' || text.back() != ')')
    throw ParseError("BAD_PARTITION", text + " (expected form \"(a,b,...)\" or \"()\")");
  std::vector<int> parts;
  std::string body = text.substr(1, text.size() - 2);
  if (!body.empty()) {
    std::stringstream ss(body);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
      try {
        std::size_t used = 0;
        int v = std::stoi(piece, &used);
        if (used != piece.size()) throw std::invalid_argument(piece);
        parts.push_back(v);
      } catch (const std::exception&) {
        throw ParseError("BAD_PARTITION", text + " (part \"" + piece + "\" is not an integer)");
      }
    }
  }
  try {
    return Partition(std::move(parts));
  } catch (const std::exception& e) {
    throw ParseError("BAD_PARTITION", text + " (" + e.what() + ")");
  }
}

inline SchubertSubset parse_subset_arg(const std::string& text, int n) {
  if (text.size() < 2 || text.front() != '{' || text.back() != '}')
    throw ParseError("BAD_SUBSET", text + " (expected form \"{a,b,...}\" or \"{}\")");
  std::vector<int> elems;
  std::string body = text.substr(1, text.size() - 2);
  if (!body.empty()) {
    std::stringstream ss(body);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
      try {
        std::size_t used = 0;
        int v = std::stoi(piece, &used);
        if (used != piece.size()) throw std::invalid_argument(piece);
        elems.push_back(v);
      } catch (const std::exception&) {
        throw ParseError("BAD_SUBSET", text + " (element \"" + piece + "\" is not an integer)");
      }
    }
  }
  try {
    return SchubertSubset(n, std::move(elems));
  } catch (const std::exception& e) {
    throw ParseError("BAD_SUBSET", text + " (" + e.what() + ")");
  }
}

inline long long parse_int_arg(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw ParseError("BAD_INTEGER", what + " \"" + text + "\" is not an integer");
  }
}

inline std::string render_quantum(const QuantumClass& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [key, coeff] : x.terms()) {
    if (!out.empty()) out += " + ";
    const auto& [qdeg, lam] = key;
    if (qdeg == 1)
      out += "q*";
    else if (qdeg > 1)
      out += "q^" + std::to_string(qdeg) + "*";
    if (coeff != 1) out += coeff.str() + "*";
    out += "s[";
    const auto& parts = lam.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(parts[i]);
    }
    out += "]";
  }
  return out;
}

inline std::string render_subsets(const std::vector<SchubertSubset>& subsets) {
  std::string out = "(";
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    if (i) out += ",";
    out += subsets[i].to_string();
  }
  return out + ")";
}

inline std::string render_record_line(const InequalityRecord& rec, bool strict) {
  std::string line = "  [";
  line += rec.satisfied ? "ok" : "viol";
  line += "] ";
  line += record_kind_name(rec.kind);
  line += " r=" + std::to_string(rec.r);
  if (rec.kind == RecordKind::type_i || rec.kind == RecordKind::type_ii) {
    line += " delta=" + std::to_string(rec.delta);
    line += " D=" + std::to_string(rec.big_d);
    line += " gw=" + rec.gw.str();
    if (!rec.subsets.empty()) line += " subsets=" + render_subsets(rec.subsets);
  }
  const bool tight = strict && rec.strict_sensitive;
  line += " : " + format_rational(rec.lhs) + (tight ? " < " : " <= ") + format_rational(rec.rhs);
  return line + "\n";
}

struct ReportExtras {
  std::optional<NormalizeResult> normalization;  // rank-(1,n) input shifts
  bool k_window = false;                         // rank-(1,1) solution window
  bool suppress_ledger_text = false;
};

inline std::string render_report_text(const char* schema, const ExistenceReport& rep,
                                      bool show_mode, const ReportExtras& extras) {
  std::string out = std::string("schema: ") + schema + "\n";
  if (show_mode) out += std::string("mode: ") + (rep.strict ? "stable" : "semistable") + "\n";
  out += std::string("verdict: ") + (rep.exists ? "exists" : "not-exists") + "\n";
  if (extras.normalization) {
    const auto& nr = *extras.normalization;
    out += "normalized: degL=" + std::to_string(nr.deg_line) +
           " degV=" + std::to_string(nr.deg_bulk) +
           " shifts=" + std::to_string(nr.log.size()) + "\n";
  }
  if (extras.k_window && rep.ledger.size() == 1) {
    out += "k-window: [" + format_rational(rep.ledger.front().lhs) + ", " +
           format_rational(rep.ledger.front().rhs) + "]\n";
  }
  for (const auto& sol : rep.solutions) {
    out += "solution:";
    if (sol.k) out += " k=" + std::to_string(*sol.k);
    out += " degrees=(";
    for (std::size_t i = 0; i < sol.degrees.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(sol.degrees[i]);
    }
    out += ")\n";
  }
  if (!extras.suppress_ledger_text) {
    std::size_t violations = 0;
    for (const auto& rec : rep.ledger) violations += rec.satisfied ? 0 : 1;
    out += "records: " + std::to_string(rep.ledger.size()) +
           " (violations: " + std::to_string(violations) + ")\n";
    for (const auto& rec : rep.ledger) out += render_record_line(rec, rep.strict);
  }
  return out;
}

inline std::string render_report_json(const char* schema, const ExistenceReport& rep,
                                      const ReportExtras& extras) {
  nlohmann::ordered_json doc;
  doc["schema"] = schema;
  doc["mode"] = rep.strict ? "stable" : "semistable";
  doc["verdict"] = rep.exists ? "exists" : "not-exists";
  std::size_t violations = 0;
  for (const auto& rec : rep.ledger) violations += rec.satisfied ? 0 : 1;
  doc["summary"]["records"] = rep.ledger.size();
  doc["summary"]["violations"] = violations;
  if (extras.normalization) {
    const auto& nr = *extras.normalization;
    doc["normalization"]["degL"] = nr.deg_line;
    doc["normalization"]["degV"] = nr.deg_bulk;
    doc["normalization"]["shifts"] = nr.log.size();
  }
  doc["ledger"] = nlohmann::ordered_json::array();
  for (const auto& rec : rep.ledger) {
    nlohmann::ordered_json jr;
    jr["kind"] = record_kind_name(rec.kind);
    jr["r"] = rec.r;
    jr["delta"] = rec.delta;
    jr["D"] = rec.big_d;
    jr["gw"] = rec.gw.str();
    jr["subsets"] = nlohmann::ordered_json::array();
    for (const auto& sub : rec.subsets) jr["subsets"].push_back(sub.elems());
    jr["lhs"] = format_rational(rec.lhs);
    jr["rhs"] = format_rational(rec.rhs);
    jr["cmp"] = (rep.strict && rec.strict_sensitive) ? "<" : "<=";
    jr["satisfied"] = rec.satisfied;
    doc["ledger"].push_back(std::move(jr));
  }
  doc["solutions"] = nlohmann::ordered_json::array();
  for (const auto& sol : rep.solutions) {
    nlohmann::ordered_json js;
    if (sol.k) js["k"] = *sol.k;
    js["degrees"] = sol.degrees;
    doc["solutions"].push_back(std::move(js));
  }
  return doc.dump(2) + "\n";
}

struct ParsedArgs {
  std::vector<std::string> positional;
  bool strict = false;
  bool json = false;
  bool search_degrees = false;
  std::optional<long long> d;
  std::optional<long long> big_d;
};

inline ParsedArgs parse_flags(const std::vector<std::string>& args, std::size_t start) {
  ParsedArgs out;
  for (std::size_t i = start; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a == "--strict")
      out.strict = true;
    else if (a == "--json")
      out.json = true;
    else if (a == "--search-degrees")
      out.search_degrees = true;
    else if (a == "--d" || a == "--D") {
      if (i + 1 >= args.size()) throw ParseError("MISSING_VALUE", a + " needs an integer value");
      long long v = parse_int_arg(args[++i], a);
      if (a == "--d")
        out.d = v;
      else
        out.big_d = v;
    } else if (a.size() >= 2 && a[0] == '-' && a[1] == '-')
      throw ParseError("UNKNOWN_FLAG", a);
    else
      out.positional.push_back(a);
  }
  return out;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("IO", "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline ProblemFile load_problem(const ParsedArgs& args, Schema expected, const char* command) {
  if (args.positional.size() != 1)
    throw ParseError("USAGE", std::string(command) + " takes exactly one problem file");
  ProblemFile pf = parse_problem_file(read_file(args.positional[0]));
  if (pf.schema != expected)
    throw ParseError("SCHEMA_MISMATCH", std::string(command) + " requires schema " +
                                            schema_name(expected) + ", file has " +
                                            schema_name(pf.schema));
  return pf;
}

inline CommandResult report_result(const char* schema, const ExistenceReport& rep, bool json,
                                   bool show_mode, const ReportExtras& extras = {}) {
  CommandResult res;
  res.out = json ? render_report_json(schema, rep, extras)
                 : render_report_text(schema, rep, show_mode, extras);
  res.exit_code = rep.exists ? 0 : 1;
  return res;
}

inline const char* usage_text() {
  return "usage: parstab <command> [args]\n"
         "calculators:\n"
         "  qprod <r> <n> <partition> <partition>      quantum product, e.g. qprod 1 3 \"(2)\" \"(2)\"\n"
         "  gw <r> <n> <partition>... --d <int>        Gromov-Witten number\n"
         "  ggw <r> <n> <subset>... --d <int> [--D <int>]  twisted count, e.g. subsets \"{1,2}\"\n"
         "checkers (flags: --strict, --json):\n"
         "  check-1n <file>      rank-(1,n) semistability   [schema hodge1n]\n"
         "  check-12 <file>      rank-(1,2), ties allowed    [schema hodge12]\n"
         "  check-11 <file>      rank-(1,1) degree window    [schema hodge11]\n"
         "  check-111 <file>     rank-(1,1,1); --search-degrees scans degree triples\n"
         "                                                   [schema hodge111]\n"
         "  check-chain <file>   chain of line components    [schema chain]\n"
         "  check-unitary <file> irreducible unitary system  [schema unitary]\n"
         "  biswas <file>        rank-2 unitary criterion    [schema unitary, n=2]\n"
         "exit codes: 0 exists, 1 not-exists, 2 input error\n";
}

}  // namespace cli_detail

/// Executes one CLI invocation; pure apart from reading named problem files.
inline CommandResult run_command(const std::vector<std::string>& args) {
  using namespace cli_detail;
  CommandResult res;
  try {
    if (args.empty()) {
      res.err = usage_text();
      res.exit_code = 2;
      return res;
    }
    const std::string& cmd = args[0];
    ParsedArgs flags = parse_flags(args, 1);

    if (cmd == "qprod") {
      if (flags.positional.size() != 4)
        throw ParseError("USAGE", "qprod takes r n and two partitions");
      int r = static_cast<int>(parse_int_arg(flags.positional[0], "r"));
      int n = static_cast<int>(parse_int_arg(flags.positional[1], "n"));
      Partition a = parse_partition_arg(flags.positional[2]);
      Partition b = parse_partition_arg(flags.positional[3]);
      res.out = render_quantum(quantum_product(a, b, r, n)) + "\n";
      return res;
    }
    if (cmd == "gw") {
      if (flags.positional.size() < 4)
        throw ParseError("USAGE", "gw takes r n and at least two partitions");
      if (!flags.d) throw ParseError("USAGE", "gw requires --d");
      int r = static_cast<int>(parse_int_arg(flags.positional[0], "r"));
      int n = static_cast<int>(parse_int_arg(flags.positional[1], "n"));
      std::vector<Partition> classes;
      for (std::size_t i = 2; i < flags.positional.size(); ++i)
        classes.push_back(parse_partition_arg(flags.positional[i]));
      res.out = gw_number(classes, *flags.d, r, n).str() + "\n";
      return res;
    }
    if (cmd == "ggw") {
      if (flags.positional.size() < 4)
        throw ParseError("USAGE", "ggw takes r n and at least two subsets");
      if (!flags.d) throw ParseError("USAGE", "ggw requires --d");
      int r = static_cast<int>(parse_int_arg(flags.positional[0], "r"));
      int n = static_cast<int>(parse_int_arg(flags.positional[1], "n"));
      std::vector<SchubertSubset> subsets;
      for (std::size_t i = 2; i < flags.positional.size(); ++i) {
        SchubertSubset sub = parse_subset_arg(flags.positional[i], n);
        if (sub.r() != r)
          throw ParseError("BAD_SUBSET", sub.to_string() + " does not have r elements");
        subsets.push_back(std::move(sub));
      }
      res.out = generalized_gw(subsets, *flags.d, flags.big_d.value_or(0), r, n).str() + "\n";
      return res;
    }

    if (cmd == "check-1n") {
      ProblemFile pf = load_problem(flags, Schema::hodge1n, "check-1n");
      HodgeProblem1N prob = to_hodge1n(pf);
      NormalizeResult norm = normalize_weights_1n(prob.points, prob.deg_line, prob.deg_bulk);
      prob.points = norm.points;
      prob.deg_line = norm.deg_line;
      prob.deg_bulk = norm.deg_bulk;
      ExistenceReport rep = check_1n(prob, flags.strict || pf.strict);
      ReportExtras extras;
      extras.normalization = std::move(norm);
      return report_result("hodge1n", rep, flags.json, true, extras);
    }
    if (cmd == "check-12") {
      ProblemFile pf = load_problem(flags, Schema::hodge12, "check-12");
      ExistenceReport rep = check_12(to_hodge12(pf), flags.strict || pf.strict);
      return report_result("hodge12", rep, flags.json, true);
    }
    if (cmd == "check-11") {
      ProblemFile pf = load_problem(flags, Schema::hodge11, "check-11");
      ExistenceReport rep = check_11(to_hodge11(pf));
      ReportExtras extras;
      extras.k_window = true;
      extras.suppress_ledger_text = true;
      return report_result("hodge11", rep, flags.json, false, extras);
    }
    if (cmd == "check-111") {
      ProblemFile pf = load_problem(flags, Schema::hodge111, "check-111");
      bool strict = flags.strict || pf.strict;
      ExistenceReport rep;
      ReportExtras extras;
      if (flags.search_degrees) {
        HodgeProblem111 prob = to_hodge111(pf);
        rep = check_111_search(prob.points, strict);
        extras.suppress_ledger_text = true;
      } else {
        rep = check_111(to_hodge111(pf), strict);
      }
      return report_result("hodge111", rep, flags.json, true, extras);
    }
    if (cmd == "check-chain") {
      ProblemFile pf = load_problem(flags, Schema::chain, "check-chain");
      ExistenceReport rep = check_chain(to_chain(pf), flags.strict || pf.strict);
      return report_result("chain", rep, flags.json, true);
    }
    if (cmd == "check-unitary") {
      ProblemFile pf = load_problem(flags, Schema::unitary, "check-unitary");
      ExistenceReport rep = check_unitary(pf.weight_rows, pf.n, flags.strict || pf.strict);
      return report_result("unitary", rep, flags.json, true);
    }
    if (cmd == "biswas") {
      ProblemFile pf = load_problem(flags, Schema::unitary, "biswas");
      if (pf.n != 2) throw ParseError("BAD_RANK", "biswas requires rank n=2");
      std::vector<std::pair<Rat, Rat>> pairs;
      for (const auto& row : pf.weight_rows) pairs.emplace_back(row[1], row[0]);
      bool ok = biswas_check(pairs);
      if (flags.json) {
        nlohmann::ordered_json doc;
        doc["schema"] = "unitary";
        doc["verdict"] = ok ? "exists" : "not-exists";
        res.out = doc.dump(2) + "\n";
      } else {
        res.out = std::string("schema: unitary\nverdict: ") + (ok ? "exists" : "not-exists") + "\n";
      }
      res.exit_code = ok ? 0 : 1;
      return res;
    }

    throw ParseError("UNKNOWN_COMMAND", cmd);
  } catch (const std::exception& e) {
    res.out.clear();
    res.err = std::string("error: ") + e.what() + "\n";
    res.exit_code = 2;
    return res;
  }
}

}  // namespace parstab
