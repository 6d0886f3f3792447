/**
 * @file theorems.hpp
 * @brief Exhaustive theorem suites over all Nakayama algebras up to a vertex
 * bound. Each suite returns the offending series as text.
 */
#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nakayama/enumeration.hpp"
#include "nakayama/homology.hpp"
#include "nakayama/kupisch.hpp"
#include "nakayama/relations.hpp"
#include "nakayama/syzygy_filtration.hpp"

namespace nakayama {

enum class Suite {
  SConnectedQh,
  Brown,
  GeneralizedInequality,
  Madsen,
  Parity,
  Chain,
  Fibonacci,
  Epsilon,
};

inline constexpr Suite kAllSuites[] = {Suite::SConnectedQh, Suite::Brown,  Suite::GeneralizedInequality,
                                       Suite::Madsen,       Suite::Parity, Suite::Chain,
                                       Suite::Fibonacci,    Suite::Epsilon};

constexpr std::string_view to_string(Suite s) {
  switch (s) {
    case Suite::SConnectedQh: return "sconnected-qh";
    case Suite::Brown: return "brown";
    case Suite::GeneralizedInequality: return "generalized-inequality";
    case Suite::Madsen: return "madsen";
    case Suite::Parity: return "parity";
    case Suite::Chain: return "chain";
    case Suite::Fibonacci: return "fibonacci";
    case Suite::Epsilon: return "epsilon";
  }
  return "";
}

inline std::optional<Suite> parse_suite(std::string_view name) {
  for (Suite s : kAllSuites) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

struct VerifyOptions {
  int n_max = 5;
  std::optional<int> cap;  // cyclic entry bound, default 2n - 1
  int jobs = 1;
};

struct SuiteReport {
  Suite suite = Suite::SConnectedQh;
  std::uint64_t checked = 0;
  std::vector<std::string> violations;
  std::string summary;
  std::optional<CensusTable> census;  // fibonacci suite only
};

// ---------------------------------------------------------------------------
// Per-algebra checks

/// S-connected <=> quasi-hereditary where S-connectedness is defined;
/// selfinjective algebras must not be quasi-hereditary.
inline std::vector<std::string> check_sconnected_qh(const KupischSeries& k, const HomologyReport& report) {
  std::vector<std::string> out;
  if (report.s_connected == SConnected::UndefinedInfiniteGldim) {
    if (report.quasi_hereditary) out.push_back(format(k) + ": quasi-hereditary with infinite gldim");
    return out;
  }
  if ((report.s_connected == SConnected::Yes) != report.quasi_hereditary) {
    out.push_back(format(k) + ": s-connected=" + std::string(to_string(report.s_connected)) +
                  " but quasi-hereditary=" + (report.quasi_hereditary ? "true" : "false"));
  }
  return out;
}

inline std::vector<std::string> describe(const KupischSeries& k,
                                         const std::vector<InequalityViolation>& violations,
                                         bool brown) {
  std::vector<std::string> out;
  for (const auto& v : violations) {
    const bool is_brown = v.rule.starts_with("brown") || v.rule.starts_with("qh-");
    if (is_brown != brown) continue;
    out.push_back(format(k) + ": " + v.rule + " fails with gldim " + std::to_string(v.gldim) +
                  " > " + std::to_string(v.bound));
  }
  return out;
}

/// Filtered-algebra facts for a cyclic non-selfinjective algebra: terminal
/// agreement, the drop by two, Delta tiling of second syzygies, vertex count
/// and the quasi-hereditary restatement.
inline std::vector<std::string> check_epsilon(const KupischSeries& k, const HomologyReport& report) {
  std::vector<std::string> out;
  if (!k.cyclic() || k.selfinjective()) return out;
  const std::string name = format(k);

  const EpsilonTower tower = epsilon_tower(k);
  if ((tower.terminal == Terminal::Linear) != report.gldim.is_finite()) {
    out.push_back(name + ": tower terminal " + std::string(to_string(tower.terminal)) +
                  " disagrees with gldim " + report.gldim.to_string());
  }

  const EpsilonStep step = epsilon(k);
  const PdValue reduced = global_dimension(step);
  if (report.gldim.is_finite()) {
    if (report.gldim.value() >= 2 &&
        (reduced.is_infinite() || reduced.value() + 2 != report.gldim.value())) {
      out.push_back(name + ": gldim " + report.gldim.to_string() + " but gldim of " +
                    format_entries(step.kupisch) + " is " + reduced.to_string());
    }
  } else if (reduced.is_finite()) {
    out.push_back(name + ": infinite gldim but filtered algebra has gldim " + reduced.to_string());
  }

  if (step.vertex_count() != report.count_pd_not_equal(1)) {
    out.push_back(name + ": filtered algebra has " + std::to_string(step.vertex_count()) +
                  " vertices, lambda_1 = " + std::to_string(report.count_pd_not_equal(1)));
  }
  if (report.quasi_hereditary != step.linear()) {
    out.push_back(name + ": quasi-hereditary=" + (report.quasi_hereditary ? "true" : "false") +
                  " but filtered algebra linear=" + (step.linear() ? "true" : "false"));
  }

  for (const auto& m : all_modules(k)) {
    auto first = syzygy(k, m);
    if (!first) continue;
    auto second = syzygy(k, *first);
    if (!second) continue;
    try {
      delta_filtration(k, *second);
    } catch (const Error&) {
      out.push_back(name + ": second syzygy " + format(*second) + " of " + format(m) +
                    " is not Delta-filtered");
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Suites

namespace detail {

inline std::vector<KupischSeries> algebras_up_to(const VerifyOptions& options) {
  std::vector<KupischSeries> all;
  for (int n = 1; n <= options.n_max; ++n) {
    for_each_algebra(n, Kind::Cyclic, options.cap, options.jobs,
                     [&](const KupischSeries& k) { all.push_back(k); });
  }
  for (int n = 2; n <= options.n_max; ++n) {
    for_each_linear(n, [&](const KupischSeries& k) { all.push_back(k); });
  }
  return all;
}

inline std::string join_counts(const CensusTable& table, Kind kind, int n_max) {
  std::string counts;
  bool ok = true;
  for (int n = 2; n <= n_max; ++n) {
    const auto& row = table.total(n, kind);
    if (!counts.empty()) counts += ',';
    counts += std::to_string(row.enumerated);
    ok = ok && row.fibonacci && row.enumerated == *row.fibonacci;
  }
  return std::string(to_string(kind)) + ": " + counts + (ok ? " ✓" : " ✗");
}

}  // namespace detail

inline SuiteReport run_fibonacci_suite(const VerifyOptions& options) {
  SuiteReport report;
  report.suite = Suite::Fibonacci;
  std::vector<int> ns;
  for (int n = 2; n <= options.n_max; ++n) ns.push_back(n);
  CensusOptions census_options{options.cap, options.jobs, false};
  CensusTable combined;
  std::vector<std::string> parts;
  for (Kind kind : {Kind::Cyclic, Kind::Linear}) {
    try {
      CensusTable table = census(ns, kind, census_options);
      parts.push_back(detail::join_counts(table, kind, options.n_max));
      for (auto& row : table.rows) {
        if (row.r) {
          combined.rows.push_back(std::move(row));
          continue;
        }
        report.checked += 1;
        if (row.violations) {
          report.violations.push_back(std::string(to_string(kind)) + " n=" + std::to_string(row.n) +
                                      ": " + std::to_string(row.violations) + " property violations");
        }
        combined.rows.push_back(std::move(row));
      }
    } catch (const Error& e) {
      parts.push_back(std::string(to_string(kind)) + ": ✗");
      report.violations.push_back(e.what());
    }
  }
  report.summary = parts.size() == 2 ? parts[0] + "; " + parts[1] : "";
  report.census = std::move(combined);
  return report;
}

inline SuiteReport run_suite(Suite suite, const VerifyOptions& options) {
  if (suite == Suite::Fibonacci) return run_fibonacci_suite(options);

  SuiteReport report;
  report.suite = suite;
  const auto algebras = detail::algebras_up_to(options);
  std::vector<std::vector<std::string>> found(algebras.size());
  parallel_for(algebras.size(), options.jobs, [&](std::size_t i, int) {
    const KupischSeries& k = algebras[i];
    const HomologyReport h = homology_report(k);
    auto& out = found[i];
    switch (suite) {
      case Suite::SConnectedQh:
        out = check_sconnected_qh(k, h);
        break;
      case Suite::Brown:
        out = describe(k, check_inequalities(k, h), true);
        break;
      case Suite::GeneralizedInequality:
        out = describe(k, check_inequalities(k, h), false);
        break;
      case Suite::Madsen:
        for (const auto& m : check_madsen(k)) {
          out.push_back(format(k) + ": " + format(m) + " has odd pd not attained by a composition factor");
        }
        break;
      case Suite::Parity:
        if (h.gldim.is_finite()) {
          for (const auto& v : check_parity_interpolation(h)) {
            out.push_back(format(k) + ": pd " + std::to_string(v.value) +
                          (v.type == ParityViolation::Type::OddMissing ? " (odd) missing" : " (even gap) missing"));
          }
        }
        break;
      case Suite::Chain:
        if (!k.selfinjective() && k.size() >= 2) {
          const bool chain = is_chain(kupisch_to_relations(k));
          if (chain != is_maximal(k, h)) {
            out.push_back(format(k) + (chain ? ": chain but not maximal" : ": maximal but not a chain"));
          }
        }
        break;
      case Suite::Epsilon:
        out = check_epsilon(k, h);
        break;
      case Suite::Fibonacci:
        break;
    }
  });
  report.checked = algebras.size();
  for (auto& list : found) {
    for (auto& v : list) report.violations.push_back(std::move(v));
  }

  if (suite == Suite::Chain) {
    for (int n = 2; n <= options.n_max; ++n) {
      for (Kind kind : {Kind::Cyclic, Kind::Linear}) {
        for (int r = 1; r <= n - 1; ++r) {
          const auto brute = enumerate_chains(n, r, kind).size();
          const auto closed = count_closed_form(n, r, kind);
          if (brute != closed) {
            report.violations.push_back(std::string(to_string(kind)) + " chains n=" + std::to_string(n) +
                                        " r=" + std::to_string(r) + ": " + std::to_string(brute) +
                                        " != " + std::to_string(closed));
          }
        }
      }
    }
  }
  return report;
}

}  // namespace nakayama
