// Command-line front end. Kept in a header so the tests can drive it with
// in-memory streams.
//
// Exit codes: 0 success, 1 usage or input error, 2 a theorem check failed.
#pragma once

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "nakayama/nakayama.hpp"
#include "nakayama/serialize.hpp"

namespace nakayama::cli {

inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kViolation = 2;

inline int default_jobs() {
  if (const char* env = std::getenv("NAKAYAMA_JOBS")) {
    try {
      const int jobs = std::stoi(env);
      if (jobs >= 1) return jobs;
    } catch (const std::exception&) {
    }
  }
  return 1;
}

struct KindFlags {
  bool cyclic = false;
  bool linear = false;

  Kind kind() const { return linear ? Kind::Linear : Kind::Cyclic; }
};

inline void add_kind_flags(CLI::App* sub, KindFlags& flags) {
  auto* c = sub->add_flag("--cyclic", flags.cyclic, "Oriented cycle quiver (default)");
  auto* l = sub->add_flag("--linear", flags.linear, "Oriented line quiver");
  c->excludes(l);
}

inline std::string pd_list(const HomologyReport& report) {
  std::string out;
  for (std::size_t i = 0; i < report.pd_simple.size(); ++i) {
    if (i) out += ' ';
    out += "S" + std::to_string(i + 1) + "=" + report.pd_simple[i].to_string();
  }
  return out;
}

inline std::string set_list(const std::vector<int>& values) {
  std::string out = "{";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out + "}";
}

inline int analyze(const std::string& text, Kind kind, const std::string& fmt, std::ostream& out) {
  const KupischSeries k = parse_kupisch(kind, text);
  const HomologyReport report = homology_report(k);
  const RelationSystem relations = kupisch_to_relations(k);
  std::optional<EpsilonTower> tower;
  if (k.cyclic()) tower = epsilon_tower(k);

  if (fmt == "json") {
    const KupischSeries canonical = canonical_form(k);
    nlohmann::json j;
    j["canonical"] = std::vector<int>(canonical.entries().begin(), canonical.entries().end());
    j["selfinjective"] = k.selfinjective();
    j["report"] = to_json(report);
    j["relations"] = to_json(relations);
    j["tower"] = tower ? to_json(k, *tower) : nlohmann::json(nullptr);
    out << j.dump(2) << '\n';
    return kOk;
  }

  out << "kupisch        " << format(k) << " (" << to_string(kind) << ")\n";
  out << "canonical      " << format(canonical_form(k)) << '\n';
  out << "selfinjective  " << (k.selfinjective() ? "yes" : "no") << '\n';
  out << "relations      " << (relations.relations.empty() ? "-" : format(relations))
      << "  (r = " << relations.count() << ")\n";
  out << "pd simples     " << pd_list(report) << '\n';
  out << "gldim          " << report.gldim.to_string() << '\n';
  out << "O_A            " << set_list(report.o_set) << '\n';
  out << "lambda         " << (report.lambda.empty() ? "-" : "");
  bool first = true;
  for (const auto& [c, value] : report.lambda) {
    out << (first ? "" : " ") << "lambda_" << c << "=" << value;
    first = false;
  }
  out << '\n';
  out << "s-connected    " << to_string(report.s_connected) << '\n';
  out << "quasi-hered.   " << (report.quasi_hereditary ? "yes" : "no") << '\n';
  if (report.brown_slack) {
    out << "bound slack    " << *report.brown_slack << "  (a + min lambda_c - gldim)\n";
  }
  if (tower) {
    out << "epsilon tower  " << format(k);
    for (const auto& step : tower->steps) out << " -> " << format_entries(step.kupisch);
    out << "  (" << to_string(tower->terminal) << ", depth " << tower->depth() << ")\n";
    if (!k.selfinjective()) {
      const auto basis = base_set(k);
      const auto realized = delta_realization(k);
      out << "delta basis   ";
      for (std::size_t j = 0; j < basis.deltas.size(); ++j) {
        const auto& d = basis.deltas[j];
        out << " D" << j + 1 << "=M(" << d.top << "," << d.length << ")";
        if (realized[j]) out << "[Omega^2 S" << *realized[j] << "]";
      }
      out << '\n';
    }
  }
  return kOk;
}

inline int enumerate(int n, Kind kind, std::optional<int> cap, const std::string& filter_name, bool list,
                     int jobs, const std::string& fmt, std::ostream& out, std::ostream& err) {
  if (n < 2) {
    err << "enumerate: -n must be at least 2\n";
    return kUsage;
  }
  Filter filter = Filter::All;
  if (filter_name == "qh") filter = Filter::QuasiHereditary;
  if (filter_name == "maximal") filter = Filter::Maximal;
  const auto algebras = select_algebras(n, kind, cap, filter, jobs);

  if (fmt == "json") {
    nlohmann::json j;
    j["n"] = n;
    j["kind"] = std::string(to_string(kind));
    j["filter"] = filter_name;
    j["count"] = algebras.size();
    if (list) {
      auto series = nlohmann::json::array();
      for (const auto& k : algebras) series.push_back(std::vector<int>(k.entries().begin(), k.entries().end()));
      j["series"] = series;
    }
    out << j.dump(2) << '\n';
    return kOk;
  }
  out << algebras.size() << '\n';
  if (list) {
    for (const auto& k : algebras) out << format(k) << '\n';
  }
  return kOk;
}

inline int verify(const std::vector<std::string>& names, const VerifyOptions& options, const std::string& fmt,
                  std::ostream& out, std::ostream& err) {
  if (options.n_max < 2) {
    err << "verify: --n-max must be at least 2\n";
    return kUsage;
  }
  std::vector<Suite> suites;
  for (const auto& name : names) {
    if (name == "all") {
      suites.assign(std::begin(kAllSuites), std::end(kAllSuites));
      continue;
    }
    const auto suite = parse_suite(name);
    if (!suite) {
      err << "verify: unknown theorem suite '" << name << "'\n";
      return kUsage;
    }
    suites.push_back(*suite);
  }
  if (suites.empty()) suites.assign(std::begin(kAllSuites), std::end(kAllSuites));

  bool failed = false;
  nlohmann::json j = nlohmann::json::object();
  std::optional<CensusTable> census_table;
  for (Suite suite : suites) {
    SuiteReport report = run_suite(suite, options);
    failed = failed || !report.violations.empty();
    if (report.census) census_table = std::move(report.census);
    if (fmt == "json") {
      nlohmann::json entry;
      entry["checked"] = report.checked;
      entry["violations"] = report.violations;
      if (!report.summary.empty()) entry["summary"] = report.summary;
      if (census_table && suite == Suite::Fibonacci) entry["census"] = to_json(*census_table);
      j[std::string(to_string(suite))] = entry;
      continue;
    }
    if (fmt == "csv") continue;
    out << to_string(suite) << ": ";
    if (!report.summary.empty()) {
      out << report.summary;
    } else {
      out << report.checked << " algebras checked, " << report.violations.size() << " violations";
    }
    out << '\n';
    for (const auto& v : report.violations) out << "  " << v << '\n';
  }
  if (fmt == "json") out << j.dump(2) << '\n';
  if (fmt == "csv") {
    if (!census_table) {
      err << "verify: --format csv needs the fibonacci suite\n";
      return kUsage;
    }
    out << to_csv(*census_table);
  }
  return failed ? kViolation : kOk;
}

inline int convert(const std::optional<std::string>& relations_text, const std::optional<std::string>& kupisch_text,
                   std::optional<int> n, Kind kind, const std::string& fmt, std::ostream& out, std::ostream& err) {
  if (relations_text.has_value() == kupisch_text.has_value()) {
    err << "convert: give exactly one of --relations or --kupisch\n";
    return kUsage;
  }
  if (relations_text) {
    if (!n) {
      err << "convert: --relations needs -n\n";
      return kUsage;
    }
    const auto system = parse_relation_system(kind, *n, *relations_text);
    const auto k = relations_to_kupisch(system);
    const auto canonical = canonical_form(k);
    if (fmt == "json") {
      nlohmann::json j;
      j["kupisch"] = std::vector<int>(k.entries().begin(), k.entries().end());
      j["canonical"] = std::vector<int>(canonical.entries().begin(), canonical.entries().end());
      j["kind"] = std::string(to_string(kind));
      out << j.dump(2) << '\n';
    } else {
      out << format(canonical) << '\n';
    }
    return kOk;
  }
  const auto k = parse_kupisch(kind, *kupisch_text);
  const auto system = normalize(kupisch_to_relations(k));
  if (fmt == "json") {
    out << to_json(system).dump(2) << '\n';
  } else {
    out << format(system) << '\n';
  }
  return kOk;
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Nakayama algebras: homological invariants and exhaustive census"};
  app.require_subcommand(1);

  std::string fmt = "table";
  const auto formats = CLI::IsMember({"table", "json", "csv"});

  // analyze
  auto* analyze_cmd = app.add_subcommand("analyze", "Invariants of one algebra");
  KindFlags analyze_kind;
  std::string analyze_series;
  add_kind_flags(analyze_cmd, analyze_kind);
  analyze_cmd->add_option("kupisch", analyze_series, "Kupisch series, e.g. 3,4,4")->required();
  analyze_cmd->add_option("--format", fmt, "table or json")->check(formats);

  // enumerate
  auto* enumerate_cmd = app.add_subcommand("enumerate", "Isomorphism classes with n vertices");
  KindFlags enumerate_kind;
  int enumerate_n = 0;
  std::optional<int> cap;
  std::string filter = "all";
  bool list = false;
  int jobs = default_jobs();
  add_kind_flags(enumerate_cmd, enumerate_kind);
  enumerate_cmd->add_option("-n", enumerate_n, "Number of vertices")->required();
  enumerate_cmd->add_option("--cap", cap, "Largest cyclic Kupisch entry (default 2n-1)")
      ->check(CLI::PositiveNumber);
  enumerate_cmd->add_option("--filter", filter, "all, qh or maximal")->check(CLI::IsMember({"all", "qh", "maximal"}));
  enumerate_cmd->add_flag("--list", list, "Print the canonical series");
  enumerate_cmd->add_option("--jobs", jobs, "Worker threads (default $NAKAYAMA_JOBS or 1)")
      ->check(CLI::PositiveNumber);
  enumerate_cmd->add_option("--format", fmt, "table or json")->check(formats);

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Run theorem suites over every algebra up to --n-max");
  std::vector<std::string> theorems;
  VerifyOptions verify_options;
  verify_options.jobs = jobs;
  verify_cmd->add_option("--theorems", theorems,
                         "Comma-separated suites: sconnected-qh, brown, generalized-inequality, madsen, "
                         "parity, chain, fibonacci, epsilon, all")
      ->delimiter(',');
  verify_cmd->add_option("--n-max", verify_options.n_max, "Largest vertex count");
  verify_cmd->add_option("--cap", verify_options.cap, "Largest cyclic Kupisch entry (default 2n-1)")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--jobs", verify_options.jobs, "Worker threads (default $NAKAYAMA_JOBS or 1)")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--format", fmt, "table, json or csv (census table)")->check(formats);

  // convert
  auto* convert_cmd = app.add_subcommand("convert", "Convert between relations and Kupisch series");
  KindFlags convert_kind;
  std::optional<std::string> relations_text;
  std::optional<std::string> kupisch_text;
  std::optional<int> convert_n;
  add_kind_flags(convert_cmd, convert_kind);
  convert_cmd->add_option("--relations", relations_text, "Zero relations, e.g. \"1:2;2:3\"");
  convert_cmd->add_option("--kupisch", kupisch_text, "Kupisch series, e.g. 3,2,2");
  convert_cmd->add_option("-n", convert_n, "Number of vertices (with --relations)");
  convert_cmd->add_option("--format", fmt, "table or json")->check(formats);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*analyze_cmd) return analyze(analyze_series, analyze_kind.kind(), fmt, out);
    if (*enumerate_cmd) {
      return enumerate(enumerate_n, enumerate_kind.kind(), cap, filter, list, jobs, fmt, out, err);
    }
    if (*verify_cmd) return verify(theorems, verify_options, fmt, out, err);
    if (*convert_cmd) {
      return convert(relations_text, kupisch_text, convert_n, convert_kind.kind(), fmt, out, err);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace nakayama::cli
