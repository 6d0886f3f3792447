/**
 * @file relations.hpp
 * @brief Irredundant zero-relation systems and their conversion to and from
 * Kupisch series.
 *
 * A relation (s, e) stands for the zero path alpha_e ... alpha_{s+1} alpha_s,
 * i.e. the path of e - s + 1 arrows leaving vertex s. Ends are kept as plain
 * integers; on a cycle they may exceed n when a relation wraps.
 */
#pragma once

#include <algorithm>
#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "nakayama/error.hpp"
#include "nakayama/kupisch.hpp"

namespace nakayama {

struct Relation {
  int start = 0;
  int end = 0;

  /// Number of arrows in the zero path.
  int length() const noexcept { return end - start + 1; }

  friend bool operator==(const Relation&, const Relation&) = default;
  friend auto operator<=>(const Relation&, const Relation&) = default;
};

struct RelationSystem {
  Kind kind = Kind::Cyclic;
  int n = 0;
  std::vector<Relation> relations;  // sorted by start
  // Set when the system describes a selfinjective algebra (one relation of
  // equal length at every vertex).
  bool selfinjective = false;

  /// Relation count in the usual convention: a linear algebra also counts the
  /// implicit relation alpha_n = 0.
  int count() const noexcept {
    return static_cast<int>(relations.size()) + (kind == Kind::Linear ? 1 : 0);
  }

  friend bool operator==(const RelationSystem&, const RelationSystem&) = default;
};

namespace detail {

inline int cyclic_offset(int from, int to, int n) { return ((to - from) % n + n) % n; }

/// True when the zero path of `inner` is a subpath of the one of `outer`.
inline bool contains(Kind kind, int n, const Relation& outer, const Relation& inner) {
  if (kind == Kind::Linear) return outer.start <= inner.start && inner.end <= outer.end;
  const int offset = cyclic_offset(outer.start, inner.start, n);
  return offset <= outer.length() - inner.length();
}

}  // namespace detail

/// Minimal zero paths of the algebra: one relation for every vertex v whose
/// projective does not shrink when moving to v + 1.
inline RelationSystem kupisch_to_relations(const KupischSeries& k) {
  RelationSystem out;
  out.kind = k.kind();
  out.n = k.size();
  out.selfinjective = k.selfinjective();
  const int n = k.size();
  const int last = k.cyclic() ? n : n - 1;
  for (int v = 1; v <= last; ++v) {
    const int next = k.cyclic() ? k.wrap(v + 1) : v + 1;
    if (k.length(v) <= k.length(next)) out.relations.push_back({v, v + k.length(v) - 1});
  }
  return out;
}

/// Rebuilds the Kupisch series of kQ/I. Rejects malformed or redundant
/// systems.
inline KupischSeries relations_to_kupisch(const RelationSystem& system) {
  const int n = system.n;
  if (n < 1) throw Error(ErrorCode::InvalidRelation, "vertex count must be positive");
  if (system.kind == Kind::Cyclic && system.relations.empty()) {
    throw Error(ErrorCode::EmptyCyclic, "a cyclic Nakayama algebra needs at least one relation");
  }

  auto describe = [](const Relation& r) {
    return std::to_string(r.start) + ":" + std::to_string(r.end);
  };

  std::vector<Relation> rel = system.relations;
  std::sort(rel.begin(), rel.end());
  for (const auto& r : rel) {
    if (r.start < 1 || r.start > n) {
      throw Error(ErrorCode::InvalidRelation, "start of " + describe(r) + " is not a vertex");
    }
    if (r.length() < 2) {
      throw Error(ErrorCode::InvalidRelation, describe(r) + " has fewer than two arrows");
    }
    if (system.kind == Kind::Linear && r.end >= n) {
      throw Error(ErrorCode::InvalidRelation,
                  describe(r) + " uses an arrow past vertex " + std::to_string(n));
    }
  }
  for (std::size_t i = 0; i < rel.size(); ++i) {
    for (std::size_t j = 0; j < rel.size(); ++j) {
      if (i != j && detail::contains(system.kind, n, rel[i], rel[j])) {
        throw Error(ErrorCode::Redundant,
                    "relation " + describe(rel[i]) + " contains " + describe(rel[j]));
      }
    }
  }

  std::vector<int> c(static_cast<std::size_t>(n));
  for (int v = 1; v <= n; ++v) {
    // First relation start at or after v in walk order.
    auto it = std::lower_bound(rel.begin(), rel.end(), v,
                               [](const Relation& r, int vertex) { return r.start < vertex; });
    int value = 0;
    if (it != rel.end()) {
      value = (it->start - v) + it->length();
    } else if (system.kind == Kind::Cyclic) {
      value = (rel.front().start + n - v) + rel.front().length();
    } else {
      value = n - v + 1;
    }
    c[static_cast<std::size_t>(v - 1)] = value;
  }

  auto series = validate(system.kind, std::move(c));
  if (kupisch_to_relations(series).relations != rel) {
    throw Error(ErrorCode::Redundant, "relations are not cyclically ordered compatibly");
  }
  return series;
}

/// Renumbers a cyclic system so that old vertex 1 + shift becomes vertex 1,
/// matching rotate() on Kupisch series.
inline RelationSystem rotate(const RelationSystem& system, int shift) {
  if (system.kind != Kind::Cyclic) throw Error(ErrorCode::NotCyclic, "only cyclic systems rotate");
  RelationSystem out = system;
  for (auto& r : out.relations) {
    const int start = detail::cyclic_offset(shift, r.start - 1, system.n) + 1;
    r = {start, start + r.length() - 1};
  }
  std::sort(out.relations.begin(), out.relations.end());
  return out;
}

/// Cyclic: the lexicographically smallest rotation that puts a relation start
/// at vertex 1. Linear: unchanged.
inline RelationSystem normalize(const RelationSystem& system) {
  if (system.kind == Kind::Linear || system.relations.empty()) return system;
  RelationSystem best = rotate(system, system.relations.front().start - 1);
  for (const auto& r : system.relations) {
    auto candidate = rotate(system, r.start - 1);
    if (candidate.relations < best.relations) best = std::move(candidate);
  }
  return best;
}

/// "s1:e1;s2:e2"; the empty string is the empty system.
inline std::vector<Relation> parse_relations(std::string_view text) {
  std::vector<Relation> out;
  std::string cleaned;
  for (char ch : text) {
    if (ch != ' ' && ch != '\t') cleaned.push_back(ch);
  }
  if (cleaned.empty()) return out;
  std::size_t pos = 0;
  while (pos <= cleaned.size()) {
    const std::size_t semi = std::min(cleaned.find(';', pos), cleaned.size());
    const std::string field = cleaned.substr(pos, semi - pos);
    const auto colon = field.find(':');
    if (colon == std::string::npos) {
      throw Error(ErrorCode::Parse, "relation '" + field + "' is not of the form start:end");
    }
    try {
      std::size_t used_a = 0;
      std::size_t used_b = 0;
      const std::string a = field.substr(0, colon);
      const std::string b = field.substr(colon + 1);
      Relation r{std::stoi(a, &used_a), std::stoi(b, &used_b)};
      if (used_a != a.size() || used_b != b.size()) throw std::invalid_argument(field);
      out.push_back(r);
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::Parse, "relation '" + field + "' is not of the form start:end");
    }
    pos = semi + 1;
  }
  return out;
}

inline RelationSystem parse_relation_system(Kind kind, int n, std::string_view text) {
  RelationSystem out{kind, n, parse_relations(text), false};
  std::sort(out.relations.begin(), out.relations.end());
  return out;
}

inline std::string format(const RelationSystem& system) {
  std::string out;
  for (std::size_t i = 0; i < system.relations.size(); ++i) {
    if (i) out += ';';
    out += std::to_string(system.relations[i].start) + ":" +
           std::to_string(system.relations[i].end);
  }
  return out;
}

}  // namespace nakayama
