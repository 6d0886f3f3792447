#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nakayama/error.hpp"
#include "nakayama/kupisch.hpp"

namespace nakayama {

/// The indecomposable module with top S_top and composition length `length`:
/// the quotient of P_top by its submodule of length c_top - length.
struct UniserialModule {
  int top = 1;
  int length = 1;

  friend bool operator==(const UniserialModule&, const UniserialModule&) = default;
  friend auto operator<=>(const UniserialModule&, const UniserialModule&) = default;
};

inline UniserialModule simple(int vertex) { return {vertex, 1}; }

inline std::string format(const UniserialModule& m) {
  return "M(" + std::to_string(m.top) + "," + std::to_string(m.length) + ")";
}

inline bool is_valid(const KupischSeries& k, const UniserialModule& m) noexcept {
  return m.top >= 1 && m.top <= k.size() && m.length >= 1 && m.length <= k.length(m.top);
}

inline bool is_projective(const KupischSeries& k, const UniserialModule& m) {
  return m.length == k.length(m.top);
}

inline void require_valid(const KupischSeries& k, const UniserialModule& m) {
  if (!is_valid(k, m)) {
    throw Error(ErrorCode::InvalidModule, format(m) + " is not a module over " + format(k));
  }
}

/// Socle vertex of a module (last composition factor).
inline int socle(const KupischSeries& k, const UniserialModule& m) {
  return k.cyclic() ? k.wrap(m.top + m.length - 1) : m.top + m.length - 1;
}

/// Empty optional means the zero module, which is what a projective input
/// produces.
using SyzygyResult = std::optional<UniserialModule>;

/// Kernel of the projective cover P_top -> M.
inline SyzygyResult syzygy(const KupischSeries& k, const UniserialModule& m) {
  require_valid(k, m);
  const int c = k.length(m.top);
  if (m.length == c) return std::nullopt;
  const int top = k.cyclic() ? k.wrap(m.top + m.length) : m.top + m.length;
  UniserialModule kernel{top, c - m.length};
  if (!is_valid(k, kernel)) {
    throw Error(ErrorCode::InvariantViolated, "syzygy of " + format(m) + " left the module range");
  }
  return kernel;
}

/// Every indecomposable module, ordered by (top, length).
inline std::vector<UniserialModule> all_modules(const KupischSeries& k) {
  std::vector<UniserialModule> out;
  out.reserve(static_cast<std::size_t>(k.total_length()));
  for (int v = 1; v <= k.size(); ++v) {
    for (int len = 1; len <= k.length(v); ++len) out.push_back({v, len});
  }
  return out;
}

}  // namespace nakayama
