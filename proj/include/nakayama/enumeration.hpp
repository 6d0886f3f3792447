/**
 * @file enumeration.hpp
 * @brief Exhaustive generation of Nakayama algebras up to isomorphism, chain
 * systems, closed-form counts and the census that ties them together.
 */
#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "nakayama/error.hpp"
#include "nakayama/homology.hpp"
#include "nakayama/kupisch.hpp"
#include "nakayama/relations.hpp"

namespace nakayama {

// ---------------------------------------------------------------------------
// Integer sequences

inline std::uint64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    std::uint64_t next = 0;
    if (__builtin_mul_overflow(result, static_cast<std::uint64_t>(n - i), &next)) {
      throw Error(ErrorCode::OutOfRange, "binomial overflows 64 bits");
    }
    result = next / static_cast<std::uint64_t>(i + 1);
  }
  return result;
}

/// F_0 = 0, F_1 = 1. Exact up to F_93.
inline std::uint64_t fibonacci(int k) {
  if (k < 0 || k > 93) throw Error(ErrorCode::OutOfRange, "fibonacci index " + std::to_string(k));
  std::uint64_t a = 0;
  std::uint64_t b = 1;
  for (int i = 0; i < k; ++i) {
    const std::uint64_t next = a + b;
    a = b;
    b = next;
  }
  return a;
}

inline std::uint64_t catalan(int m) {
  return binomial(2 * m, m) / static_cast<std::uint64_t>(m + 1);
}

/// Number of normalized chain systems with r relations: C(n+r-2, 2r-1) on a
/// cycle, C(n+r-3, 2r-2) on a line (where r counts alpha_n = 0).
inline std::uint64_t count_closed_form(int n, int r, Kind kind) {
  if (n < 2 || r < 1 || r > n - 1) {
    throw Error(ErrorCode::OutOfRange,
                "closed form needs n >= 2 and 1 <= r <= n-1, got n=" + std::to_string(n) +
                    " r=" + std::to_string(r));
  }
  return kind == Kind::Cyclic ? binomial(n + r - 2, 2 * r - 1) : binomial(n + r - 3, 2 * r - 2);
}

// ---------------------------------------------------------------------------
// Generation

/// Visits every connected linear series with n vertices (n >= 2). There are
/// Catalan(n-1) of them.
template <class Visitor>
void for_each_linear(int n, Visitor&& visit) {
  std::vector<int> c(static_cast<std::size_t>(n), 1);
  // Fill from the back: c_n = 1, c_i in [2, min(c_{i+1} + 1, n - i + 1)].
  std::function<void(int)> fill = [&](int i) {
    if (i == 0) {
      visit(validate(Kind::Linear, c));
      return;
    }
    const int upper = std::min(c[static_cast<std::size_t>(i)] + 1, n - i + 1);
    for (int value = 2; value <= upper; ++value) {
      c[static_cast<std::size_t>(i - 1)] = value;
      fill(i - 1);
    }
  };
  if (n == 1) {
    visit(validate(Kind::Linear, c));
    return;
  }
  fill(n - 1);
}

inline std::vector<KupischSeries> enumerate_linear(int n) {
  std::vector<KupischSeries> out;
  for_each_linear(n, [&](const KupischSeries& k) { out.push_back(k); });
  return out;
}

/// Work items for the cyclic generator: the first one or two entries.
inline std::vector<std::vector<int>> cyclic_prefixes(int n, int cap) {
  std::vector<std::vector<int>> out;
  for (int top = 2; top <= cap; ++top) {
    if (n == 1) {
      out.push_back({top});
      continue;
    }
    for (int second = std::max(2, top - 1); second <= top; ++second) out.push_back({top, second});
  }
  return out;
}

/// Visits the canonical (lexicographically greatest) representative of every
/// rotation class of cyclic series with entries <= cap that extends prefix.
/// A canonical series starts with its maximum, which bounds every entry.
template <class Visitor>
void for_each_cyclic_from(std::vector<int> prefix, int n, int cap, Visitor&& visit) {
  if (prefix.empty() || prefix.front() > cap) return;
  std::vector<int> c = std::move(prefix);
  const int top = c.front();
  std::function<void()> extend = [&]() {
    if (static_cast<int>(c.size()) == n) {
      if (c.front() >= c.back() - 1 && is_canonical(c)) visit(validate(Kind::Cyclic, c));
      return;
    }
    for (int value = std::max(2, c.back() - 1); value <= top; ++value) {
      c.push_back(value);
      extend();
      c.pop_back();
    }
  };
  extend();
}

template <class Visitor>
void for_each_cyclic(int n, int cap, Visitor&& visit) {
  for (auto& prefix : cyclic_prefixes(n, cap)) for_each_cyclic_from(prefix, n, cap, visit);
}

inline int default_cap(int n) { return 2 * n - 1; }

inline std::vector<KupischSeries> enumerate_cyclic(int n, std::optional<int> cap = std::nullopt) {
  std::vector<KupischSeries> out;
  for_each_cyclic(n, cap.value_or(default_cap(n)), [&](const KupischSeries& k) { out.push_back(k); });
  return out;
}

// ---------------------------------------------------------------------------
// Chains

/// Integer chain conditions on relations sorted by start:
///   (C1) increasing starts, the first at vertex 1 on a cycle;
///   (C2) increasing ends, all <= n on a cycle and < n on a line;
///   (C3) each relation starts no later than the previous one ends;
///   (C4) relations two apart are disjoint.
inline bool satisfies_chain_conditions(const std::vector<Relation>& rel, int n, Kind kind) {
  if (rel.empty()) return kind == Kind::Linear;
  if (kind == Kind::Cyclic ? rel.front().start != 1 : rel.front().start < 1) return false;
  if (kind == Kind::Cyclic ? rel.back().end > n : rel.back().end >= n) return false;
  for (std::size_t i = 0; i + 1 < rel.size(); ++i) {
    if (rel[i + 1].start <= rel[i].start || rel[i + 1].end <= rel[i].end) return false;
    if (rel[i + 1].start > rel[i].end) return false;
  }
  for (std::size_t i = 0; i + 2 < rel.size(); ++i) {
    if (rel[i].end >= rel[i + 2].start) return false;
  }
  return true;
}

/// A cyclic system is a chain when one of its rotations that puts a relation
/// start at vertex 1 satisfies the integer chain conditions.
inline bool is_chain(const RelationSystem& system) {
  relations_to_kupisch(system);  // rejects redundant systems
  if (system.kind == Kind::Linear) {
    return satisfies_chain_conditions(system.relations, system.n, Kind::Linear);
  }
  for (const auto& r : system.relations) {
    if (satisfies_chain_conditions(rotate(system, r.start - 1).relations, system.n, Kind::Cyclic)) {
      return true;
    }
  }
  return false;
}

namespace detail {

template <class Visitor>
void for_each_combination(int low, int high, int size, std::vector<int>& current, Visitor&& visit) {
  if (static_cast<int>(current.size()) == size) {
    visit(current);
    return;
  }
  const int start = current.empty() ? low : current.back() + 1;
  const int remaining = size - static_cast<int>(current.size());
  for (int value = start; value <= high - remaining + 1; ++value) {
    current.push_back(value);
    for_each_combination(low, high, size, current, visit);
    current.pop_back();
  }
}

}  // namespace detail

/// Brute-force list of normalized chain systems with r relations (r counts
/// alpha_n = 0 on a line). Cyclic systems have k_1 = 1 and all ends <= n.
inline std::vector<RelationSystem> enumerate_chains(int n, int r, Kind kind) {
  std::vector<RelationSystem> out;
  const int stored = kind == Kind::Cyclic ? r : r - 1;
  if (stored < 0) return out;
  const int max_start = kind == Kind::Cyclic ? n : n - 1;
  const int max_end = kind == Kind::Cyclic ? n : n - 1;
  std::vector<int> starts;
  detail::for_each_combination(1, max_start, stored, starts, [&](const std::vector<int>& s) {
    std::vector<int> ends;
    detail::for_each_combination(2, max_end, stored, ends, [&](const std::vector<int>& e) {
      std::vector<Relation> rel;
      for (int i = 0; i < stored; ++i) {
        const auto at = static_cast<std::size_t>(i);
        if (e[at] < s[at] + 1) return;
        rel.push_back({s[at], e[at]});
      }
      if (satisfies_chain_conditions(rel, n, kind)) out.push_back({kind, n, std::move(rel), false});
    });
  });
  return out;
}

// ---------------------------------------------------------------------------
// Classification helpers

/// Equality in Brown's bound: quasi-hereditary with gldim = lambda_1 + 1 on a
/// cycle, gldim = lambda_1 on a line.
inline bool is_maximal(const KupischSeries& k, const HomologyReport& report) {
  if (!report.quasi_hereditary || report.gldim.is_infinite()) return false;
  const int bound = report.count_pd_not_equal(1) + (k.cyclic() ? 1 : 0);
  return report.gldim.value() == bound;
}

enum class Filter { All, QuasiHereditary, Maximal };

template <class F>
void parallel_for(std::size_t count, int jobs, F&& body) {
  const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(count)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i, 0);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = next++; i < count; i = next++) body(i, w);
    });
  }
}

/// Every isomorphism class with n vertices, in generator order. Cyclic series
/// are capped at `cap` (default 2n - 1); work is split across `jobs` threads
/// by series prefix and merged back in prefix order.
template <class Visitor>
void for_each_algebra(int n, Kind kind, std::optional<int> cap, int jobs, Visitor&& visit) {
  if (kind == Kind::Linear) {
    for_each_linear(n, visit);
    return;
  }
  const auto prefixes = cyclic_prefixes(n, cap.value_or(default_cap(n)));
  std::vector<std::vector<KupischSeries>> buckets(prefixes.size());
  parallel_for(prefixes.size(), jobs, [&](std::size_t i, int) {
    for_each_cyclic_from(prefixes[i], n, cap.value_or(default_cap(n)),
                         [&](const KupischSeries& k) { buckets[i].push_back(k); });
  });
  for (const auto& bucket : buckets) {
    for (const auto& k : bucket) visit(k);
  }
}

inline std::vector<KupischSeries> select_algebras(int n, Kind kind, std::optional<int> cap,
                                                  Filter filter, int jobs = 1) {
  std::vector<KupischSeries> all;
  for_each_algebra(n, kind, cap, jobs, [&](const KupischSeries& k) { all.push_back(k); });
  std::vector<char> keep(all.size(), 0);
  parallel_for(all.size(), jobs, [&](std::size_t i, int) {
    const auto& k = all[i];
    if (filter == Filter::All) {
      keep[i] = 1;
      return;
    }
    if (k.selfinjective() || k.size() == 1) return;
    const auto report = homology_report(k);
    keep[i] = filter == Filter::QuasiHereditary ? report.quasi_hereditary : is_maximal(k, report);
  });
  std::vector<KupischSeries> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (keep[i]) out.push_back(all[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Census

struct CensusRow {
  int n = 0;
  Kind kind = Kind::Cyclic;
  std::optional<int> r;  // empty for the per-n total row
  std::uint64_t enumerated = 0;
  std::uint64_t chains = 0;
  std::uint64_t closed_form = 0;
  std::optional<std::uint64_t> fibonacci;
  std::uint64_t violations = 0;
  std::vector<std::vector<int>> members;  // canonical series, when requested
};

struct CensusTable {
  std::vector<CensusRow> rows;

  const CensusRow& total(int n, Kind kind) const {
    for (const auto& row : rows) {
      if (row.n == n && row.kind == kind && !row.r) return row;
    }
    throw Error(ErrorCode::OutOfRange, "no census row for n=" + std::to_string(n));
  }
};

struct CensusOptions {
  std::optional<int> cap;  // cyclic entry bound, default 2n - 1
  int jobs = 1;
  bool list_members = false;
};

namespace detail {

struct CensusAccumulator {
  std::vector<std::uint64_t> maximal;     // by r
  std::vector<std::uint64_t> violations;  // by r; slot 0 collects r outside 1..n-1
  std::vector<std::vector<int>> members;
  std::vector<std::string> mismatches;

  explicit CensusAccumulator(int n)
      : maximal(static_cast<std::size_t>(n + 1), 0), violations(static_cast<std::size_t>(n + 1), 0) {}

  void merge(CensusAccumulator&& other) {
    for (std::size_t i = 0; i < maximal.size(); ++i) {
      maximal[i] += other.maximal[i];
      violations[i] += other.violations[i];
    }
    for (auto& m : other.members) members.push_back(std::move(m));
    for (auto& m : other.mismatches) mismatches.push_back(std::move(m));
  }
};

/// Theorem checks on one algebra; returns the number of failed checks.
inline std::uint64_t property_violations(const KupischSeries& k, const HomologyReport& report) {
  std::uint64_t failures = check_madsen(k).size();
  if (report.gldim.is_finite()) failures += check_parity_interpolation(report).size();
  failures += check_inequalities(k, report).size();
  if (report.s_connected != SConnected::UndefinedInfiniteGldim &&
      (report.s_connected == SConnected::Yes) != report.quasi_hereditary) {
    ++failures;
  }
  return failures;
}

}  // namespace detail

/// For each n: counts maximal algebras by brute force, counts normalized
/// chains, and checks both against the closed forms and the Fibonacci
/// number; also checks chain <=> maximal per algebra and runs the property
/// checkers. Throws CensusMismatch on any disagreement.
inline CensusTable census(const std::vector<int>& n_values, Kind kind, const CensusOptions& options = {}) {
  CensusTable table;
  for (int n : n_values) {
    if (n < 2) throw Error(ErrorCode::OutOfRange, "census needs n >= 2");
    std::vector<KupischSeries> algebras;
    for_each_algebra(n, kind, options.cap, options.jobs,
                     [&](const KupischSeries& k) { algebras.push_back(k); });

    const int workers = std::max(1, options.jobs);
    std::vector<detail::CensusAccumulator> partial(static_cast<std::size_t>(workers),
                                                   detail::CensusAccumulator(n));
    parallel_for(algebras.size(), workers, [&](std::size_t i, int w) {
      const KupischSeries& k = algebras[i];
      auto& acc = partial[static_cast<std::size_t>(w)];
      const auto report = homology_report(k);
      const auto failures = detail::property_violations(k, report);
      if (k.selfinjective()) {
        acc.violations[0] += failures;
        return;
      }
      const int r = report.count_pd_not_equal(1);
      const auto slot = static_cast<std::size_t>(r >= 1 && r <= n - 1 ? r : 0);
      acc.violations[slot] += failures;
      if (slot == 0) acc.mismatches.push_back(format(k) + " has lambda_1 = " + std::to_string(r));
      const bool maximal = is_maximal(k, report);
      if (maximal) {
        ++acc.maximal[slot];
        acc.members.emplace_back(k.entries().begin(), k.entries().end());
      }
      if (is_chain(kupisch_to_relations(k)) != maximal) {
        acc.mismatches.push_back(format(k) + (maximal ? " is maximal but not a chain"
                                                       : " is a chain but not maximal"));
      }
    });
    detail::CensusAccumulator acc(n);
    for (auto& p : partial) acc.merge(std::move(p));
    std::sort(acc.members.begin(), acc.members.end());
    std::sort(acc.mismatches.begin(), acc.mismatches.end());

    // Chains map onto exactly the maximal classes.
    std::set<std::vector<int>> chain_classes;
    CensusRow total{n, kind, std::nullopt, 0, 0, 0, std::nullopt, acc.violations[0], {}};
    for (int r = 1; r <= n - 1; ++r) {
      const auto chains = enumerate_chains(n, r, kind);
      for (const auto& chain : chains) {
        const auto k = canonical_form(relations_to_kupisch(chain));
        chain_classes.emplace(k.entries().begin(), k.entries().end());
      }
      CensusRow row{n, kind, r, acc.maximal[static_cast<std::size_t>(r)], chains.size(),
                    count_closed_form(n, r, kind), std::nullopt,
                    acc.violations[static_cast<std::size_t>(r)], {}};
      if (row.enumerated != row.chains || row.chains != row.closed_form) {
        acc.mismatches.push_back("n=" + std::to_string(n) + " r=" + std::to_string(r) +
                                 ": enumerated " + std::to_string(row.enumerated) + ", chains " +
                                 std::to_string(row.chains) + ", closed form " +
                                 std::to_string(row.closed_form));
      }
      total.enumerated += row.enumerated;
      total.chains += row.chains;
      total.closed_form += row.closed_form;
      total.violations += row.violations;
      table.rows.push_back(std::move(row));
    }
    total.fibonacci = fibonacci(kind == Kind::Cyclic ? 2 * n - 2 : 2 * n - 3);
    if (total.enumerated != *total.fibonacci || total.closed_form != *total.fibonacci) {
      acc.mismatches.push_back("n=" + std::to_string(n) + ": total " +
                               std::to_string(total.enumerated) + " vs Fibonacci " +
                               std::to_string(*total.fibonacci));
    }
    if (std::set<std::vector<int>>(acc.members.begin(), acc.members.end()) != chain_classes) {
      acc.mismatches.push_back("n=" + std::to_string(n) +
                               ": chain systems and maximal algebras are different classes");
    }
    if (!acc.mismatches.empty()) {
      throw Error(ErrorCode::CensusMismatch, std::string(to_string(kind)) + " " + acc.mismatches.front());
    }
    if (options.list_members) total.members = std::move(acc.members);
    table.rows.push_back(std::move(total));
  }
  return table;
}

}  // namespace nakayama
