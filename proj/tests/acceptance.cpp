// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "nakayama/nakayama.hpp"
#include "oracle.hpp"

using namespace nakayama;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;
};

int failures = 0;

void report(int id, const char* title, double limit_s, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome outcome;
  try {
    outcome = body();
  } catch (const std::exception& e) {
    outcome = {false, std::string("exception: ") + e.what()};
  }
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  bool ok = outcome.ok;
  std::string detail = outcome.detail;
  if (limit_s > 0 && seconds > limit_s) {
    ok = false;
    detail += " (over the " + std::to_string(limit_s) + " s limit)";
  }
  if (!ok) ++failures;
  std::printf("%s  %2d  %-34s %9.3f s  %s\n", ok ? "PASS" : "FAIL", id, title, seconds, detail.c_str());
}

/// Cyclic n = 1..n_max at cap 2n - 1 (or `cap`), and linear n = 2..linear_max.
std::vector<KupischSeries> algebras(int n_max, int linear_max, std::optional<int> cap = std::nullopt) {
  std::vector<KupischSeries> out;
  for (int n = 1; n <= n_max; ++n) {
    for (const auto& k : enumerate_cyclic(n, cap)) out.push_back(k);
  }
  for (int n = 2; n <= linear_max; ++n) {
    for (const auto& k : enumerate_linear(n)) out.push_back(k);
  }
  return out;
}

std::string series_list(const std::vector<std::uint64_t>& values) {
  std::string out;
  for (auto v : values) out += (out.empty() ? "" : ",") + std::to_string(v);
  return out;
}

Outcome criterion1() {
  const auto k = validate(Kind::Cyclic, {3, 4, 4});
  const auto start = Clock::now();
  const auto r = homology_report(k);
  const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  std::vector<int> pds;
  for (PdValue p : r.pd_simple) pds.push_back(p.is_finite() ? p.value() : -1);
  std::sort(pds.begin(), pds.end());
  const bool ok = pds == std::vector<int>{1, 3, 4} && r.gldim == PdValue::finite(4) &&
                  r.s_connected == SConnected::No && !r.quasi_hereditary && ms < 1.0;
  return {ok, "pds {1,3,4}, gldim " + r.gldim.to_string() + ", analysis " + std::to_string(ms) + " ms"};
}

Outcome fibonacci_census(Kind kind, int n_max, int offset, const std::vector<std::uint64_t>& expected) {
  std::vector<int> ns;
  for (int n = 2; n <= n_max; ++n) ns.push_back(n);
  const auto table = census(ns, kind, {std::nullopt, 1, false});
  std::vector<std::uint64_t> counts;
  bool ok = true;
  for (int n = 2; n <= n_max; ++n) {
    const auto& row = table.total(n, kind);
    counts.push_back(row.enumerated);
    ok = ok && row.enumerated == fibonacci(2 * n - offset) && row.violations == 0;
  }
  ok = ok && counts == expected;
  return {ok, series_list(counts)};
}

Outcome criterion4() {
  int checked = 0;
  for (int n = 2; n <= 8; ++n) {
    for (int r = 1; r <= n - 1; ++r) {
      for (Kind kind : {Kind::Cyclic, Kind::Linear}) {
        const auto brute = enumerate_chains(n, r, kind).size();
        const auto closed = kind == Kind::Cyclic ? binomial(n + r - 2, 2 * r - 1) : binomial(n + r - 3, 2 * r - 2);
        if (brute != closed) {
          return {false, std::string(to_string(kind)) + " n=" + std::to_string(n) + " r=" + std::to_string(r)};
        }
        ++checked;
      }
    }
  }
  const bool named = enumerate_chains(4, 2, Kind::Cyclic).size() == 4 &&
                     enumerate_chains(3, 1, Kind::Cyclic).size() == 2 &&
                     enumerate_chains(3, 2, Kind::Cyclic).size() == 1;
  return {named, std::to_string(checked) + " (n, r, kind) cases; E(4,2)=4 E(3,1)=2 E(3,2)=1"};
}

Outcome criterion5() {
  const auto all = algebras(6, 6);
  std::size_t bad = 0;
  for (const auto& k : all) bad += check_sconnected_qh(k, homology_report(k)).size();
  return {bad == 0, std::to_string(all.size()) + " algebras, " + std::to_string(bad) + " violations"};
}

Outcome criterion6() {
  const auto all = algebras(6, 6);
  std::size_t bad = 0;
  for (const auto& k : all) bad += check_inequalities(k).size();
  return {bad == 0, std::to_string(all.size()) + " algebras, " + std::to_string(bad) + " violations"};
}

Outcome criterion7() {
  const auto all = algebras(5, 5, 9);
  std::size_t bad = 0;
  std::size_t modules = 0;
  for (const auto& k : all) {
    const auto r = homology_report(k);
    if (r.gldim.is_finite()) bad += check_parity_interpolation(r).size();
    bad += check_madsen(k, FactorScope::Finite).size();
    bad += check_madsen(k, FactorScope::All).size();
    modules += static_cast<std::size_t>(k.total_length());
  }
  return {bad == 0, std::to_string(all.size()) + " algebras, " + std::to_string(modules) + " modules, " +
                        std::to_string(bad) + " violations"};
}

Outcome criterion8() {
  std::size_t checked = 0;
  std::size_t maximal = 0;
  std::string first_bad;
  for (const auto& k : algebras(6, 8)) {
    if (k.selfinjective()) continue;
    const bool max = is_maximal(k, homology_report(k));
    const bool chain = is_chain(kupisch_to_relations(k));
    ++checked;
    maximal += max ? 1 : 0;
    if (max != chain && first_bad.empty()) first_bad = format(k);
  }
  return {first_bad.empty(), std::to_string(checked) + " algebras, " + std::to_string(maximal) + " maximal" +
                                 (first_bad.empty() ? "" : ", first exception " + first_bad)};
}

Outcome criterion9() {
  std::size_t checked = 0;
  std::size_t bad = 0;
  for (int n = 1; n <= 6; ++n) {
    for (const auto& k : enumerate_cyclic(n)) {
      if (k.selfinjective()) continue;
      ++checked;
      bad += check_epsilon(k, homology_report(k)).size();
    }
  }
  return {bad == 0, std::to_string(checked) + " algebras, " + std::to_string(bad) + " violations"};
}

Outcome criterion10() {
  std::size_t algebras_checked = 0;
  std::size_t mismatches = 0;
  auto compare = [&](const KupischSeries& k) {
    ++algebras_checked;
    const std::vector<int> c(k.entries().begin(), k.entries().end());
    PdCalculator memo(k);
    for (const auto& m : all_modules(k)) {
      const auto got = syzygy(k, m);
      const auto want = oracle::kernel(c, k.cyclic(), {m.top, m.length});
      if (got.has_value() != want.has_value() || (got && !(oracle::Mod{got->top, got->length} == *want))) {
        ++mismatches;
      }
      const int expected = oracle::pd(c, k.cyclic(), {m.top, m.length});
      for (PdValue p : {projective_dimension(k, m), memo(m)}) {
        if ((p.is_finite() ? p.value() : -1) != expected) ++mismatches;
      }
    }
  };
  // Every admissible tuple, not only canonical representatives.
  for (int n = 1; n <= 4; ++n) {
    for (Kind kind : {Kind::Cyclic, Kind::Linear}) {
      std::vector<int> c(static_cast<std::size_t>(n), 1);
      while (true) {
        try {
          compare(validate(kind, c));
        } catch (const Error&) {
        }
        int i = 0;
        while (i < n && ++c[static_cast<std::size_t>(i)] > 7) c[static_cast<std::size_t>(i++)] = 1;
        if (i == n) break;
      }
    }
  }
  return {mismatches == 0,
          std::to_string(algebras_checked) + " algebras, " + std::to_string(mismatches) + " mismatches"};
}

}  // namespace

int main() {
  report(1, "example [3,4,4]", 0, criterion1);
  report(2, "cyclic Fibonacci census n<=7", 60, [] {
    return fibonacci_census(Kind::Cyclic, 7, 2, {1, 3, 8, 21, 55, 144});
  });
  report(3, "linear Fibonacci census n<=10", 10, [] {
    return fibonacci_census(Kind::Linear, 10, 3, {1, 2, 5, 13, 34, 89, 233, 610, 1597});
  });
  report(4, "chain counts n<=8", 0, criterion4);
  report(5, "S-connected <=> QH, n<=6", 0, criterion5);
  report(6, "inequalities, n<=6", 0, criterion6);
  report(7, "parity and Madsen, n<=5, c<=9", 0, criterion7);
  report(8, "chain <=> maximal", 0, criterion8);
  report(9, "epsilon tower, n<=6", 120, criterion9);
  report(10, "oracle equivalence, n<=4, c<=7", 0, criterion10);
  std::printf("%s: %d of 10 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
