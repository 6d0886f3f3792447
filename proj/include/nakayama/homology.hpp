/**
 * @file homology.hpp
 * @brief Projective dimensions, global dimension and the simple-module
 * invariants built from them.
 *
 * The syzygy map on indecomposables is a function, so a minimal projective
 * resolution of M is the orbit M, Omega(M), Omega^2(M), ... . It either reaches
 * a projective (pd = number of steps taken) or revisits a module, in which
 * case pd M is infinite.
 */
#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nakayama/error.hpp"
#include "nakayama/kupisch.hpp"
#include "nakayama/module.hpp"

namespace nakayama {

class PdValue {
 public:
  static constexpr PdValue finite(int value) { return PdValue(value); }
  static constexpr PdValue infinite() { return PdValue(kInfinite); }

  constexpr bool is_finite() const noexcept { return value_ != kInfinite; }
  constexpr bool is_infinite() const noexcept { return value_ == kInfinite; }

  /// Only meaningful when is_finite().
  constexpr int value() const noexcept { return value_; }

  std::string to_string() const { return is_finite() ? std::to_string(value_) : "inf"; }

  friend constexpr bool operator==(PdValue, PdValue) = default;
  friend constexpr std::strong_ordering operator<=>(PdValue a, PdValue b) {
    if (a.is_infinite() || b.is_infinite()) {
      return a.is_infinite() <=> b.is_infinite();
    }
    return a.value_ <=> b.value_;
  }

 private:
  static constexpr int kInfinite = -1;
  constexpr explicit PdValue(int value) : value_(value) {}
  int value_;
};

/// Orbit walk with a visited set and no caching.
inline PdValue projective_dimension(const KupischSeries& k, UniserialModule m) {
  require_valid(k, m);
  std::vector<std::vector<bool>> seen(static_cast<std::size_t>(k.size()));
  for (int v = 1; v <= k.size(); ++v) {
    seen[static_cast<std::size_t>(v - 1)].assign(static_cast<std::size_t>(k.length(v)), false);
  }
  int steps = 0;
  while (true) {
    if (is_projective(k, m)) return PdValue::finite(steps);
    auto&& row = seen[static_cast<std::size_t>(m.top - 1)];
    const auto at = static_cast<std::size_t>(m.length - 1);
    if (row[at]) return PdValue::infinite();
    row[at] = true;
    m = *syzygy(k, m);
    ++steps;
  }
}

/// Memoized projective dimensions for one algebra. Each module's value is
/// written once and never changes, so query order does not matter. Not
/// thread-safe; use one calculator per thread.
class PdCalculator {
 public:
  explicit PdCalculator(KupischSeries k) : k_(std::move(k)) {
    offsets_.reserve(static_cast<std::size_t>(k_.size()));
    int offset = 0;
    for (int v = 1; v <= k_.size(); ++v) {
      offsets_.push_back(offset);
      offset += k_.length(v);
    }
    memo_.assign(static_cast<std::size_t>(offset), kUnknown);
    stamp_.assign(static_cast<std::size_t>(offset), 0);
  }

  const KupischSeries& series() const noexcept { return k_; }

  PdValue operator()(UniserialModule m) {
    require_valid(k_, m);
    ++walk_;
    path_.clear();
    int result = 0;
    while (true) {
      const std::size_t i = index(m);
      if (memo_[i] != kUnknown) {
        result = memo_[i];
        break;
      }
      if (stamp_[i] == walk_) {
        result = kInfinite;
        break;
      }
      if (is_projective(k_, m)) {
        memo_[i] = 0;
        result = 0;
        break;
      }
      stamp_[i] = walk_;
      path_.push_back(i);
      m = *syzygy(k_, m);
    }
    for (auto it = path_.rbegin(); it != path_.rend(); ++it) {
      if (result != kInfinite) ++result;
      memo_[*it] = result;
    }
    return result == kInfinite ? PdValue::infinite() : PdValue::finite(result);
  }

 private:
  static constexpr int kUnknown = -2;
  static constexpr int kInfinite = -1;

  std::size_t index(const UniserialModule& m) const {
    return static_cast<std::size_t>(offsets_[static_cast<std::size_t>(m.top - 1)] + m.length - 1);
  }

  KupischSeries k_;
  std::vector<int> offsets_;
  std::vector<int> memo_;
  std::vector<std::uint32_t> stamp_;
  std::vector<std::size_t> path_;
  std::uint32_t walk_ = 0;
};

enum class SConnected { Yes, No, UndefinedInfiniteGldim };

constexpr std::string_view to_string(SConnected s) {
  switch (s) {
    case SConnected::Yes: return "yes";
    case SConnected::No: return "no";
    case SConnected::UndefinedInfiniteGldim: return "undefined";
  }
  return "undefined";
}

struct HomologyReport {
  Kind kind = Kind::Cyclic;
  std::vector<int> kupisch;
  std::vector<PdValue> pd_simple;  // index v - 1 holds pd S_v
  PdValue gldim = PdValue::finite(0);
  std::vector<int> o_set;  // sorted finite pd values of simples
  std::optional<int> a_min;
  std::map<int, int> lambda;  // c -> lambda_c for c in o_set
  SConnected s_connected = SConnected::UndefinedInfiniteGldim;
  bool quasi_hereditary = false;
  std::optional<int> brown_slack;

  /// Number of simples whose pd differs from c, for any c.
  int count_pd_not_equal(int c) const {
    return static_cast<int>(std::count_if(pd_simple.begin(), pd_simple.end(), [c](PdValue p) {
      return p != PdValue::finite(c);
    }));
  }

  /// lambda_c, defined only for c in O_A.
  int lambda_at(int c) const {
    auto it = lambda.find(c);
    if (it == lambda.end()) {
      throw Error(ErrorCode::OutOfRange, "lambda_" + std::to_string(c) + " is defined only for c in O_A");
    }
    return it->second;
  }
};

inline HomologyReport homology_report(const KupischSeries& k, PdCalculator& pd) {
  HomologyReport report;
  report.kind = k.kind();
  report.kupisch.assign(k.entries().begin(), k.entries().end());
  report.pd_simple.reserve(static_cast<std::size_t>(k.size()));
  for (int v = 1; v <= k.size(); ++v) report.pd_simple.push_back(pd(simple(v)));

  report.gldim = *std::max_element(report.pd_simple.begin(), report.pd_simple.end());
  for (PdValue p : report.pd_simple) {
    if (p.is_finite()) report.o_set.push_back(p.value());
  }
  std::sort(report.o_set.begin(), report.o_set.end());
  report.o_set.erase(std::unique(report.o_set.begin(), report.o_set.end()), report.o_set.end());

  if (!report.o_set.empty()) report.a_min = report.o_set.front();
  for (int c : report.o_set) report.lambda[c] = report.count_pd_not_equal(c);

  const bool has0 = std::binary_search(report.o_set.begin(), report.o_set.end(), 0);
  const bool has2 = std::binary_search(report.o_set.begin(), report.o_set.end(), 2);
  report.quasi_hereditary = has0 || has2;

  if (report.gldim.is_infinite()) {
    report.s_connected = SConnected::UndefinedInfiniteGldim;
  } else {
    const int span = report.o_set.back() - report.o_set.front() + 1;
    report.s_connected =
        span == static_cast<int>(report.o_set.size()) ? SConnected::Yes : SConnected::No;
    int min_lambda = report.lambda.begin()->second;
    for (const auto& [c, value] : report.lambda) min_lambda = std::min(min_lambda, value);
    report.brown_slack = *report.a_min + min_lambda - report.gldim.value();
  }

  if (!k.cyclic()) {
    const bool interval = report.gldim.is_finite() && report.o_set.front() == 0 &&
                          report.s_connected == SConnected::Yes;
    if (!interval) {
      throw Error(ErrorCode::InvariantViolated,
                  "linear algebra " + format(k) + " has O_A different from [0, gldim]");
    }
  }
  return report;
}

inline HomologyReport homology_report(const KupischSeries& k) {
  PdCalculator pd(k);
  return homology_report(k, pd);
}

inline PdValue global_dimension(const KupischSeries& k) { return homology_report(k).gldim; }

enum class FactorScope {
  Finite,  // max over composition factors of finite pd
  All,     // sup over every composition factor; an infinite one breaks equality
};

/// Modules M of finite odd pd for which pd M is not the maximal pd of a
/// composition factor of M.
inline std::vector<UniserialModule> check_madsen(const KupischSeries& k,
                                                 FactorScope scope = FactorScope::Finite) {
  PdCalculator pd(k);
  std::vector<UniserialModule> violations;
  for (const auto& m : all_modules(k)) {
    const PdValue p = pd(m);
    if (p.is_infinite() || p.value() % 2 == 0) continue;
    std::optional<PdValue> best;
    for (int j = 0; j < m.length; ++j) {
      const int vertex = k.cyclic() ? k.wrap(m.top + j) : m.top + j;
      const PdValue factor = pd(simple(vertex));
      if (factor.is_infinite() && scope == FactorScope::Finite) continue;
      if (!best || factor > *best) best = factor;
    }
    if (!best || *best != p) violations.push_back(m);
  }
  return violations;
}

struct ParityViolation {
  enum class Type { OddMissing, EvenGap };
  Type type;
  int value;  // the projective dimension nobody attains

  friend bool operator==(const ParityViolation&, const ParityViolation&) = default;
};

/// Every odd value up to gldim, and every even value between two even simple
/// projective dimensions, must be the pd of some simple.
inline std::vector<ParityViolation> check_parity_interpolation(const HomologyReport& report) {
  if (report.gldim.is_infinite()) {
    throw Error(ErrorCode::InfiniteGldim, "parity interpolation needs finite global dimension");
  }
  const auto& o = report.o_set;
  auto attained = [&](int value) { return std::binary_search(o.begin(), o.end(), value); };
  std::vector<ParityViolation> violations;
  for (int l = 1; l <= report.gldim.value(); l += 2) {
    if (!attained(l)) violations.push_back({ParityViolation::Type::OddMissing, l});
  }
  std::optional<int> low;
  std::optional<int> high;
  for (int value : o) {
    if (value % 2 != 0) continue;
    if (!low) low = value;
    high = value;
  }
  if (low) {
    for (int even = *low; even <= *high; even += 2) {
      if (!attained(even)) violations.push_back({ParityViolation::Type::EvenGap, even});
    }
  }
  return violations;
}

inline std::vector<ParityViolation> check_parity_interpolation(const KupischSeries& k) {
  return check_parity_interpolation(homology_report(k));
}

struct InequalityViolation {
  std::string rule;
  int gldim;
  int bound;
};

inline std::vector<InequalityViolation> check_inequalities(const KupischSeries& k,
                                                           const HomologyReport& report) {
  std::vector<InequalityViolation> violations;
  if (report.gldim.is_infinite()) {
    if (report.quasi_hereditary) violations.push_back({"qh-finite-gldim", -1, -1});
    return violations;
  }
  const int g = report.gldim.value();
  if (report.s_connected == SConnected::Yes) {
    for (const auto& [c, lambda] : report.lambda) {
      if (g > *report.a_min + lambda) {
        violations.push_back({"gldim <= a + lambda_" + std::to_string(c), g, *report.a_min + lambda});
      }
    }
  }
  if (report.quasi_hereditary) {
    const int lambda1 = report.count_pd_not_equal(1);
    const int bound = k.cyclic() ? lambda1 + 1 : lambda1;
    if (g > bound) {
      violations.push_back({k.cyclic() ? "brown: gldim <= lambda_1 + 1" : "brown: gldim <= lambda_1",
                            g, bound});
    }
  }
  if (!k.cyclic() && g > k.size() - 1) violations.push_back({"gldim <= n - 1", g, k.size() - 1});
  return violations;
}

inline std::vector<InequalityViolation> check_inequalities(const KupischSeries& k) {
  return check_inequalities(k, homology_report(k));
}

}  // namespace nakayama
