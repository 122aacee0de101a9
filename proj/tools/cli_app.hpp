#pragma once

// Command-line front end. `run` takes arguments without the program name
// and writes to the given streams, so tests can drive it in-process.
//
// Exit status: 0 = property holds / success, 1 = property fails,
// 2 = input or usage error.

#include <fstream>
#include <iomanip>
#include <iterator>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "treepark/treepark.hpp"

namespace treepark::cli {

inline constexpr int exit_holds = 0;
inline constexpr int exit_fails = 1;
inline constexpr int exit_input = 2;

using json = nlohmann::ordered_json;

// Inline payload, or the contents of a file when written as @path.
inline std::string payload(const std::string& text) {
  if (text.empty() || text[0] != '@') return text;
  std::ifstream in(text.substr(1));
  if (!in) throw error(errc::parse_error, "cannot read " + text.substr(1));
  std::string body((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  while (!body.empty() && (body.back() == '\n' || body.back() == '\r' || body.back() == ' ')) body.pop_back();
  return body;
}

inline std::string edges_to_text(const std::vector<Edge>& edges) {
  std::string out;
  for (const auto& e : edges) {
    if (!out.empty()) out += ' ';
    out += "(" + std::to_string(e.child) + "," + std::to_string(e.parent) + ")";
  }
  return out;
}

inline json edges_to_json(const std::vector<Edge>& edges) {
  json out = json::array();
  for (const auto& e : edges) out.push_back({e.child, e.parent});
  return out;
}

inline std::string spots_to_text(const std::vector<vertex>& spots) {
  std::string out;
  for (vertex v : spots) {
    if (!out.empty()) out += ' ';
    out += v == failed_to_park ? "-" : std::to_string(v);
  }
  return out;
}

// Big integers go to JSON as decimal strings so no digits are lost.
inline json big(const BigInt& v) { return v.str(); }

struct Options {
  std::string format = "text";
  std::string tree, seq, perm, ptree;
  bool distribution = false;
  bool check = false;
  int order = default_series_order;
  std::string identity = "all";
  int max = 5;
  std::string suite = "all";
  int max_n = 0;  // 0: each suite's default bound
  bool allow_large = false;
  unsigned threads = 1;
  std::uint64_t samples = 10000;
  std::uint64_t seed = 20240601;
  bool timing = false;
};

// ---------------------------------------------------------------------------
// Subcommands. Each returns an exit status.

inline int cmd_park(const Options& o, std::ostream& out) {
  const auto tree = parse_rooted_tree(payload(o.tree));
  const auto seq = parse_sequence(payload(o.seq));
  const auto result = park(tree, seq);
  if (o.format == "json") {
    json crossings = json::array();
    for (const auto& c : result.first_crossings) {
      crossings.push_back({{"edge", {c.edge.child, c.edge.parent}}, {"driver", c.driver}, {"step", c.step}});
    }
    out << json{{"spots", result.spot_of_driver}, {"all_parked", result.all_parked()}, {"crossings", crossings}}.dump()
        << '\n';
  } else {
    out << "spots: " << spots_to_text(result.spot_of_driver) << '\n';
    out << "crossings: " << edges_to_text(result.crossed_edges()) << '\n';
    out << "parked: " << (result.all_parked() ? "true" : "false") << '\n';
  }
  return result.all_parked() ? exit_holds : exit_fails;
}

inline int cmd_check(const Options& o, std::ostream& out) {
  const auto tree = parse_rooted_tree(payload(o.tree));
  const auto seq = parse_sequence(payload(o.seq));
  const bool holds = o.distribution ? is_parking_distribution(tree, seq) : is_parking_function(tree, seq);
  const char* key = o.distribution ? "parking_distribution" : "parking_function";
  if (o.format == "json") {
    out << json{{key, holds}}.dump() << '\n';
  } else {
    out << key << ": " << (holds ? "true" : "false") << '\n';
  }
  return holds ? exit_holds : exit_fails;
}

inline int cmd_prime(const Options& o, std::ostream& out) {
  const auto tree = parse_rooted_tree(payload(o.tree));
  const auto seq = parse_sequence(payload(o.seq));
  const bool holds = is_prime(tree, seq);
  if (o.format == "json") {
    out << json{{"prime", holds}}.dump() << '\n';
  } else {
    out << "prime: " << (holds ? "true" : "false") << '\n';
  }
  return holds ? exit_holds : exit_fails;
}

inline int cmd_used_edges(const Options& o, std::ostream& out) {
  const auto tree = parse_rooted_tree(payload(o.tree));
  const auto seq = parse_sequence(payload(o.seq));
  const auto edges = used_edges(tree, seq);
  if (o.format == "json") {
    out << json{{"used_edges", edges_to_json(edges)}}.dump() << '\n';
  } else {
    out << "used: " << edges_to_text(edges) << '\n';
  }
  return exit_holds;
}

inline int cmd_psi(const Options& o, std::ostream& out) {
  const auto tree = parse_rooted_tree(payload(o.tree));
  const auto seq = parse_sequence(payload(o.seq));
  const auto image = psi(tree, seq);
  if (o.format == "json") {
    out << json{{"sigma", image.sigma.word()}, {"tree", image.tree.to_text()}}.dump() << '\n';
  } else {
    out << "sigma: " << image.sigma.to_text() << '\n';
    out << "tree: " << image.tree.to_text() << '\n';
  }
  return exit_holds;
}

inline int cmd_psi_inv(const Options& o, std::ostream& out) {
  const auto sigma = parse_permutation(payload(o.perm));
  const auto ptree = parse_labeled_plane_tree(payload(o.ptree));
  const auto [tree, seq] = psi_inverse(sigma, ptree);
  bool roundtrip = true;
  if (o.check) roundtrip = psi(tree, seq) == PsiImage{sigma, ptree};
  if (o.format == "json") {
    json j{{"tree", tree.parents()}, {"seq", seq}};
    if (o.check) j["roundtrip"] = roundtrip;
    out << j.dump() << '\n';
  } else {
    out << "tree: " << tree.to_text() << '\n';
    out << "seq: " << sequence_to_text(seq) << '\n';
    if (o.check) out << "roundtrip: " << (roundtrip ? "true" : "false") << '\n';
  }
  return roundtrip ? exit_holds : exit_fails;
}

inline int cmd_borie(const Options& o, std::ostream& out) {
  const auto sigma = parse_permutation(payload(o.perm));
  const auto seq = borie_map(sigma);
  if (o.format == "json") {
    out << json{{"seq", seq}}.dump() << '\n';
  } else {
    out << "seq: " << sequence_to_text(seq) << '\n';
  }
  return exit_holds;
}

inline int cmd_series(const Options& o, std::ostream& out) {
  if (o.order < 1 || o.order > 64) throw error(errc::order_mismatch, "--order must be in [1, 64]");
  std::vector<IdentityResult> results;
  if (o.identity == "all") {
    results = check_all_identities(o.order);
  } else {
    results.push_back(check_identity(o.identity, o.order));
  }
  bool ok = true;
  json rows = json::array();
  for (const auto& r : results) {
    ok = ok && r.ok();
    const std::string status = r.first_bad ? (r.informational ? "INFO" : "FAIL") : "OK";
    if (o.format == "json") {
      json row{{"id", r.id}, {"statement", r.statement}, {"order", r.order}, {"status", status}};
      if (r.first_bad) {
        row["first_bad"] = *r.first_bad;
        row["value"] = r.bad_value.str();
      }
      rows.push_back(row);
    } else {
      out << r.id << '\t' << r.statement << '\t';
      if (r.first_bad) {
        out << status << " x^" << *r.first_bad << " = " << r.bad_value;
      } else {
        out << "OK";
      }
      out << '\n';
    }
  }
  if (o.format == "json") out << json{{"order", o.order}, {"identities", rows}}.dump() << '\n';
  return ok ? exit_holds : exit_fails;
}

inline int cmd_counts(const Options& o, std::ostream& out) {
  if (o.max < 1 || o.max > 64) throw error(errc::limit_exceeded, "--max must be in [1, 64]");
  const auto table = closed_counts(o.max);
  if (o.format == "json") {
    json rows = json::array();
    for (const auto& r : table.rows) {
      rows.push_back({{"n", r.n},
                      {"F", big(r.F)},
                      {"P", big(r.P)},
                      {"Ftilde", big(r.Ftilde)},
                      {"Ptilde", big(r.Ptilde)},
                      {"Pstar", big(r.Pstar)},
                      {"Fstar", big(r.Fstar)}});
    }
    out << rows.dump() << '\n';
  } else {
    out << "n\tF\tP\tFtilde\tPtilde\tPstar\tFstar\n";
    for (const auto& r : table.rows) {
      out << r.n << '\t' << r.F << '\t' << r.P << '\t' << r.Ftilde << '\t' << r.Ptilde << '\t' << r.Pstar << '\t'
          << r.Fstar << '\n';
    }
  }
  return exit_holds;
}

// One verify line: suite, n, item, counted, expected, status, detail.
struct VerifyRow {
  std::string suite;
  int n;
  std::string item;
  std::string counted;
  std::string expected;
  bool pass;
  std::string detail;
  double seconds;
};

inline std::vector<VerifyRow> rows_of(const CensusReport& r) {
  std::vector<VerifyRow> rows;
  for (const auto& c : r.columns) {
    rows.push_back({"census", r.n, c.name, c.counted.str(), c.expected.str(), c.pass(),
                    c.pass() ? "" : "count mismatch", r.seconds});
  }
  if (!r.counts.first_disagreement.empty()) {
    rows.push_back({"census", r.n, "criterion=simulation", std::to_string(r.counts.checked_by_simulation), "", false,
                    r.counts.first_disagreement, r.seconds});
  }
  return rows;
}

inline VerifyRow row_of(const SuiteReport& r) {
  return {r.suite, r.n, "all", std::to_string(r.checked), "", r.passed, r.detail, r.seconds};
}

inline int cmd_verify(const Options& o, std::ostream& out) {
  const std::vector<std::string> known{"census", "roundtrip", "thm53", "srp", "paths", "properties", "all"};
  if (std::find(known.begin(), known.end(), o.suite) == known.end()) {
    throw error(errc::parse_error, "unknown suite '" + o.suite + "'");
  }
  const bool all = o.suite == "all";
  auto wants = [&](const char* s) { return all || o.suite == s; };
  // Upper n for a suite: its default bound, or --max-n. A single explicit
  // suite passes --max-n through so its own limit check applies; "all"
  // clamps to each suite's bound instead.
  auto upper = [&](int default_bound, int hard_bound) {
    if (o.max_n <= 0) return default_bound;
    return all ? std::min(o.max_n, hard_bound) : o.max_n;
  };

  std::vector<VerifyRow> rows;
  if (wants("census")) {
    const int hi = upper(census_max_default, o.allow_large ? census_max_large : census_max_default);
    for (int n = 1; n <= hi; ++n) {
      for (auto& row : rows_of(census(n, {.allow_large = o.allow_large, .threads = o.threads}))) rows.push_back(row);
    }
  }
  if (wants("roundtrip")) {
    for (int n = 1; n <= upper(roundtrip_max, roundtrip_max); ++n) rows.push_back(row_of(roundtrip_suite(n)));
  }
  if (wants("thm53")) {
    for (int n = 1; n <= upper(6, theorem53_max); ++n) rows.push_back(row_of(theorem53_suite(n)));
  }
  if (wants("srp")) {
    for (int n = 1; n <= upper(census_max_default, census_max_default); ++n) rows.push_back(row_of(srp_suite(n)));
  }
  if (wants("paths")) {
    for (int n = 1; n <= upper(5, 5); ++n) rows.push_back(row_of(path_preimage_suite(n)));
  }
  if (wants("properties")) {
    for (int n = 1; n <= upper(4, 4); ++n) rows.push_back(row_of(property_suite_exhaustive(n)));
    if (o.samples > 0) {
      for (int n = 6; n <= 8; ++n) rows.push_back(row_of(property_suite_random(n, o.samples, o.seed + n)));
    }
  }

  bool ok = true;
  for (const auto& r : rows) ok = ok && r.pass;
  if (o.format == "json") {
    json arr = json::array();
    for (const auto& r : rows) {
      json j{{"suite", r.suite}, {"n", r.n},          {"item", r.item},
             {"counted", r.counted}, {"expected", r.expected}, {"status", r.pass ? "PASS" : "FAIL"},
             {"detail", r.detail}};
      if (o.timing) j["seconds"] = r.seconds;
      arr.push_back(j);
    }
    out << json{{"passed", ok}, {"rows", arr}}.dump() << '\n';
  } else {
    out << "suite\tn\titem\tcounted\texpected\tstatus\tdetail";
    if (o.timing) out << "\tseconds";
    out << '\n';
    for (const auto& r : rows) {
      out << r.suite << '\t' << r.n << '\t' << r.item << '\t' << r.counted << '\t' << r.expected << '\t'
          << (r.pass ? "PASS" : "FAIL") << '\t' << r.detail;
      if (o.timing) out << '\t' << std::fixed << std::setprecision(3) << r.seconds;
      out << '\n';
    }
  }
  return ok ? exit_holds : exit_fails;
}

// ---------------------------------------------------------------------------

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Parking functions on rooted trees: checks, bijections, series and exhaustive verification",
               "treepark"};
  app.require_subcommand(1);
  Options o;

  auto add_format = [&](CLI::App* sub, std::vector<std::string> formats) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats));
  };
  auto add_tree_seq = [&](CLI::App* sub) {
    sub->add_option("--tree", o.tree, "Parent list, 0 marks the root (or @file)")->required();
    sub->add_option("--seq", o.seq, "Preference sequence (or @file)")->required();
    add_format(sub, {"text", "json"});
  };

  auto* park_cmd = app.add_subcommand("park", "Run the parking procedure");
  add_tree_seq(park_cmd);
  auto* check_cmd = app.add_subcommand("check", "Is the sequence a parking function?");
  add_tree_seq(check_cmd);
  check_cmd->add_flag("--distribution", o.distribution, "Also require a weakly increasing sequence");
  auto* prime_cmd = app.add_subcommand("prime", "Is the sequence a prime parking function?");
  add_tree_seq(prime_cmd);
  auto* used_cmd = app.add_subcommand("used-edges", "Edges used by a parking function, in order of first use");
  add_tree_seq(used_cmd);
  auto* psi_cmd = app.add_subcommand("psi", "Map a prime parking function to (permutation, labeled plane tree)");
  add_tree_seq(psi_cmd);

  auto* psi_inv_cmd = app.add_subcommand("psi-inv", "Map (permutation, labeled plane tree) to a prime parking function");
  psi_inv_cmd->add_option("--perm", o.perm, "Permutation, e.g. 51243 or \"5 1 2 4 3\" (or @file)")->required();
  psi_inv_cmd->add_option("--ptree", o.ptree, "Labeled plane tree, e.g. *[2 1[3]] (or @file)")->required();
  psi_inv_cmd->add_flag("--check", o.check, "Map back with psi and fail on mismatch");
  add_format(psi_inv_cmd, {"text", "json"});

  auto* borie_cmd = app.add_subcommand("borie", "Increasing parking function of a 132-avoiding permutation");
  borie_cmd->add_option("--perm", o.perm, "Permutation (or @file)")->required();
  add_format(borie_cmd, {"text", "json"});

  auto* series_cmd = app.add_subcommand("series", "Check generating-function identities with exact coefficients");
  series_cmd->add_option("--order", o.order, "Truncation order");
  series_cmd->add_option("--identity", o.identity, "Identity id, or all");
  add_format(series_cmd, {"text", "json"});

  auto* counts_cmd = app.add_subcommand("counts", "Table of counts from the closed forms and series");
  counts_cmd->add_option("--max", o.max, "Largest n");
  add_format(counts_cmd, {"tsv", "json"});

  auto* verify_cmd = app.add_subcommand("verify", "Exhaustive censuses and bijection suites");
  verify_cmd->add_option("--suite", o.suite, "census|roundtrip|thm53|srp|paths|properties|all");
  verify_cmd->add_option("--max-n", o.max_n, "Largest n (default: each suite's bound)");
  verify_cmd->add_flag("--allow-large", o.allow_large, "Permit the n = 6 census");
  verify_cmd->add_option("--threads", o.threads, "Census worker threads")->check(CLI::Range(1u, 256u));
  verify_cmd->add_option("--samples", o.samples, "Random instances per n for the property suite at n = 6..8");
  verify_cmd->add_option("--seed", o.seed, "Seed for the random property suite");
  verify_cmd->add_flag("--timing", o.timing, "Add wall time per line");
  add_format(verify_cmd, {"tsv", "json"});

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_holds : exit_input;
  }

  try {
    if (*park_cmd) return cmd_park(o, out);
    if (*check_cmd) return cmd_check(o, out);
    if (*prime_cmd) return cmd_prime(o, out);
    if (*used_cmd) return cmd_used_edges(o, out);
    if (*psi_cmd) return cmd_psi(o, out);
    if (*psi_inv_cmd) return cmd_psi_inv(o, out);
    if (*borie_cmd) return cmd_borie(o, out);
    if (*series_cmd) return cmd_series(o, out);
    if (*counts_cmd) return cmd_counts(o, out);
    if (*verify_cmd) return cmd_verify(o, out);
  } catch (const error& e) {
    err << "error: " << e.what() << '\n';
    return exit_input;
  }
  return exit_input;
}

}  // namespace treepark::cli
