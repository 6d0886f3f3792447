/**
 * @file syzygy_filtration.hpp
 * @brief Base set of a cyclic Nakayama algebra, the syzygy filtered algebra
 * and its iteration.
 *
 * The socles of the indecomposable projectives cut the cycle into intervals
 * Delta_1, ..., Delta_r. Second syzygies are exactly the modules tiled by
 * consecutive Delta intervals, and the category of such modules is again
 * uniserial. The filtered algebra is read off combinatorially: its j-th
 * projective has length equal to the number of Delta intervals tiling the
 * projective of A at the top of Delta_j.
 */
#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "nakayama/error.hpp"
#include "nakayama/homology.hpp"
#include "nakayama/kupisch.hpp"
#include "nakayama/module.hpp"

namespace nakayama {

struct Delta {
  int top = 1;
  int length = 1;
  int socle = 1;

  friend bool operator==(const Delta&, const Delta&) = default;
};

struct DeltaBasis {
  std::vector<int> socle_vertices;  // S(A), increasing
  std::vector<int> top_vertices;    // S'(A): socle_vertices[j] + 1 (mod n)
  std::vector<Delta> deltas;        // deltas[j] ends in socle_vertices[j]
};

namespace detail {

inline void require_cyclic_nonselfinjective(const KupischSeries& k) {
  if (!k.cyclic()) throw Error(ErrorCode::NotCyclic, format(k) + " is linear");
  if (k.selfinjective()) throw Error(ErrorCode::Selfinjective, format(k) + " is selfinjective");
}

}  // namespace detail

inline DeltaBasis base_set(const KupischSeries& k) {
  detail::require_cyclic_nonselfinjective(k);
  const int n = k.size();
  DeltaBasis basis;
  for (int v = 1; v <= n; ++v) basis.socle_vertices.push_back(k.wrap(v + k.length(v) - 1));
  auto& s = basis.socle_vertices;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());

  const std::size_t r = s.size();
  for (std::size_t j = 0; j < r; ++j) {
    basis.top_vertices.push_back(k.wrap(s[j] + 1));
    const int previous = s[(j + r - 1) % r];
    const int top = k.wrap(previous + 1);
    const int length = (r == 1) ? n : ((s[j] - previous) % n + n) % n;
    basis.deltas.push_back({top, length, s[j]});
  }
  return basis;
}

/// One application of the filtered-algebra construction.
///
/// `kupisch` is listed in Delta order and read cyclically. If one of its
/// entries is 1 the new algebra has no cycle and splits at those entries into
/// linear components; otherwise it is the single cyclic component.
struct EpsilonStep {
  std::vector<int> kupisch;
  std::vector<KupischSeries> components;
  std::vector<int> vertex_map;  // Delta index -> top vertex in the parent algebra

  bool linear() const noexcept { return components.front().kind() == Kind::Linear; }
  int vertex_count() const noexcept { return static_cast<int>(kupisch.size()); }
};

/// Splits a cyclically read vector at its 1-entries. Connected results are a
/// single cyclic series (no 1s) or a single linear series.
inline std::vector<KupischSeries> split_components(const std::vector<int>& raw) {
  const int m = static_cast<int>(raw.size());
  int last_one = -1;
  for (int i = 0; i < m; ++i) {
    if (raw[static_cast<std::size_t>(i)] == 1) last_one = i;
  }
  if (last_one < 0) return {validate(Kind::Cyclic, raw)};

  std::vector<KupischSeries> out;
  std::vector<int> current;
  for (int step = 1; step <= m; ++step) {
    const int value = raw[static_cast<std::size_t>((last_one + step) % m)];
    current.push_back(value);
    if (value == 1) {
      out.push_back(validate(Kind::Linear, std::move(current)));
      current.clear();
    }
  }
  return out;
}

inline EpsilonStep epsilon(const KupischSeries& k) {
  const DeltaBasis basis = base_set(k);
  const auto& deltas = basis.deltas;
  const std::size_t r = deltas.size();
  EpsilonStep step;
  for (std::size_t j = 0; j < r; ++j) {
    const int top = deltas[j].top;
    const int target = k.length(top);
    int covered = 0;
    int count = 0;
    while (covered < target) {
      covered += deltas[(j + static_cast<std::size_t>(count)) % r].length;
      ++count;
    }
    if (covered != target) {
      throw Error(ErrorCode::FiltrationMismatch,
                  "P_" + std::to_string(top) + " of " + format(k) + " is not tiled by Delta intervals");
    }
    step.kupisch.push_back(count);
    step.vertex_map.push_back(top);
  }
  step.components = split_components(step.kupisch);
  return step;
}

enum class Terminal { Linear, Selfinjective };

constexpr std::string_view to_string(Terminal t) {
  return t == Terminal::Linear ? "linear" : "selfinjective";
}

struct EpsilonTower {
  std::vector<EpsilonStep> steps;
  Terminal terminal = Terminal::Linear;

  int depth() const noexcept { return static_cast<int>(steps.size()); }
};

/// Iterates epsilon until the algebra is linear or selfinjective.
inline EpsilonTower epsilon_tower(const KupischSeries& k) {
  if (!k.cyclic()) throw Error(ErrorCode::NotCyclic, format(k) + " is linear");
  EpsilonTower tower;
  KupischSeries current = k;
  while (true) {
    if (current.selfinjective()) {
      tower.terminal = Terminal::Selfinjective;
      return tower;
    }
    tower.steps.push_back(epsilon(current));
    const EpsilonStep& step = tower.steps.back();
    if (step.linear()) {
      tower.terminal = Terminal::Linear;
      return tower;
    }
    current = step.components.front();
  }
}

/// Global dimension of a possibly disconnected step: max over components.
inline PdValue global_dimension(const EpsilonStep& step) {
  PdValue g = PdValue::finite(0);
  for (const auto& component : step.components) g = std::max(g, global_dimension(component));
  return g;
}

/// Positions (into base_set(k).deltas) of the consecutive Delta intervals
/// tiling m from the top down.
inline std::vector<std::size_t> delta_filtration(const KupischSeries& k, const UniserialModule& m) {
  require_valid(k, m);
  const DeltaBasis basis = base_set(k);
  const auto& deltas = basis.deltas;
  auto first = std::find_if(deltas.begin(), deltas.end(),
                            [&](const Delta& d) { return d.top == m.top; });
  if (first == deltas.end()) {
    throw Error(ErrorCode::NotFiltered, "no Delta interval has top " + std::to_string(m.top));
  }
  std::vector<std::size_t> out;
  std::size_t j = static_cast<std::size_t>(first - deltas.begin());
  int covered = 0;
  while (covered < m.length) {
    covered += deltas[j].length;
    out.push_back(j);
    j = (j + 1) % deltas.size();
  }
  if (covered != m.length) {
    throw Error(ErrorCode::NotFiltered, format(m) + " does not end at a Delta socle");
  }
  return out;
}

/// For each Delta interval, a simple S with Omega^2(S) isomorphic to it, if
/// one exists. Diagnostic only.
inline std::vector<std::optional<int>> delta_realization(const KupischSeries& k) {
  const DeltaBasis basis = base_set(k);
  std::vector<std::optional<int>> out(basis.deltas.size());
  for (int v = 1; v <= k.size(); ++v) {
    auto first = syzygy(k, simple(v));
    if (!first) continue;
    auto second = syzygy(k, *first);
    if (!second) continue;
    for (std::size_t j = 0; j < basis.deltas.size(); ++j) {
      const Delta& d = basis.deltas[j];
      if (!out[j] && second->top == d.top && second->length == d.length) out[j] = v;
    }
  }
  return out;
}

}  // namespace nakayama
