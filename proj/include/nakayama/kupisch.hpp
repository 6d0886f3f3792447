/**
 * @file kupisch.hpp
 * @brief Kupisch series of connected Nakayama algebras.
 *
 * Vertices are numbered 1..n and the arrow alpha_i runs from i to i+1
 * (from n back to 1 when the quiver is an oriented cycle). The entry c_i
 * is the composition length of the indecomposable projective P_i, so the
 * composition factors of P_i read from the top are S_i, S_{i+1}, ...,
 * S_{i+c_i-1}.
 */
#pragma once

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nakayama/error.hpp"

namespace nakayama {

enum class Kind { Cyclic, Linear };

constexpr std::string_view to_string(Kind kind) {
  return kind == Kind::Cyclic ? "cyclic" : "linear";
}

class KupischSeries;
KupischSeries validate(Kind kind, std::vector<int> c);

/// A validated Kupisch series. Instances only come out of validate() (or
/// operations that call it), so every value satisfies the Nakayama
/// constraints for its kind.
class KupischSeries {
 public:
  Kind kind() const noexcept { return kind_; }
  bool cyclic() const noexcept { return kind_ == Kind::Cyclic; }
  int size() const noexcept { return static_cast<int>(c_.size()); }

  /// Length of the projective at a 1-based vertex.
  int length(int vertex) const { return c_[static_cast<std::size_t>(vertex - 1)]; }

  std::span<const int> entries() const noexcept { return c_; }

  /// Constant cyclic series. The one-vertex linear series [1] is semisimple,
  /// not selfinjective in the sense used here.
  bool selfinjective() const noexcept { return selfinjective_; }

  /// Wraps an arbitrary integer onto the vertex range. Only meaningful for
  /// cyclic series; linear callers must stay inside [1, n] themselves.
  int wrap(long vertex) const noexcept {
    const long n = size();
    return static_cast<int>(((vertex - 1) % n + n) % n + 1);
  }

  int total_length() const noexcept {
    int total = 0;
    for (int x : c_) total += x;
    return total;
  }

  friend bool operator==(const KupischSeries&, const KupischSeries&) = default;
  friend auto operator<=>(const KupischSeries& a, const KupischSeries& b) {
    if (auto cmp = a.kind_ <=> b.kind_; cmp != 0) return cmp;
    return a.c_ <=> b.c_;
  }

 private:
  friend KupischSeries validate(Kind kind, std::vector<int> c);

  KupischSeries(Kind kind, std::vector<int> c, bool selfinjective)
      : kind_(kind), c_(std::move(c)), selfinjective_(selfinjective) {}

  Kind kind_;
  std::vector<int> c_;
  bool selfinjective_;
};

inline KupischSeries validate(Kind kind, std::vector<int> c) {
  const int n = static_cast<int>(c.size());
  if (n == 0) throw Error(ErrorCode::EmptySeries, "a Kupisch series needs at least one entry");

  auto at = [&](int vertex) { return c[static_cast<std::size_t>(vertex - 1)]; };
  auto where = [](int vertex) { return "c_" + std::to_string(vertex); };

  if (kind == Kind::Cyclic) {
    for (int i = 1; i <= n; ++i) {
      if (at(i) < 2) {
        throw Error(ErrorCode::TooShortProjective,
                    where(i) + " = " + std::to_string(at(i)) + " < 2 in a cyclic series");
      }
    }
    for (int i = 1; i <= n; ++i) {
      const int next = i == n ? 1 : i + 1;
      if (at(next) < at(i) - 1) {
        throw Error(ErrorCode::ViolatesStep, where(next) + " = " + std::to_string(at(next)) +
                                                 " < " + where(i) + " - 1 = " +
                                                 std::to_string(at(i) - 1));
      }
    }
    const bool constant = std::adjacent_find(c.begin(), c.end(), std::not_equal_to<>()) == c.end();
    return KupischSeries(kind, std::move(c), constant);
  }

  if (at(n) != 1) {
    throw Error(ErrorCode::BadTail, "linear series must end in 1, got " + where(n) + " = " +
                                        std::to_string(at(n)));
  }
  for (int i = 1; i < n; ++i) {
    if (at(i) < 2) {
      throw Error(ErrorCode::TooShortProjective,
                  where(i) + " = " + std::to_string(at(i)) + " < 2 disconnects the line");
    }
    if (at(i) > n - i + 1) {
      throw Error(ErrorCode::BadTail, where(i) + " = " + std::to_string(at(i)) +
                                          " runs past vertex n (at most " +
                                          std::to_string(n - i + 1) + ")");
    }
  }
  for (int i = 1; i < n; ++i) {
    if (at(i + 1) < at(i) - 1) {
      throw Error(ErrorCode::ViolatesStep, where(i + 1) + " = " + std::to_string(at(i + 1)) +
                                               " < " + where(i) + " - 1 = " +
                                               std::to_string(at(i) - 1));
    }
  }
  return KupischSeries(kind, std::move(c), false);
}

inline std::vector<int> rotate_entries(std::span<const int> c, int shift) {
  const int n = static_cast<int>(c.size());
  std::vector<int> out(c.size());
  for (int i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(((i + shift) % n + n) % n)];
  }
  return out;
}

/// Renumbers a cyclic series so that old vertex 1 + shift becomes vertex 1.
inline KupischSeries rotate(const KupischSeries& k, int shift) {
  if (!k.cyclic()) throw Error(ErrorCode::NotCyclic, "only cyclic series can be rotated");
  return validate(Kind::Cyclic, rotate_entries(k.entries(), shift));
}

/// Lexicographically greatest rotation for cyclic series, identity for
/// linear ones. Equal canonical forms mean isomorphic algebras.
inline KupischSeries canonical_form(const KupischSeries& k) {
  if (!k.cyclic()) return k;
  const auto c = k.entries();
  std::vector<int> best(c.begin(), c.end());
  for (int shift = 1; shift < k.size(); ++shift) {
    auto candidate = rotate_entries(c, shift);
    if (candidate > best) best = std::move(candidate);
  }
  return validate(Kind::Cyclic, std::move(best));
}

inline bool is_canonical(std::span<const int> c) {
  const std::size_t n = c.size();
  for (std::size_t shift = 1; shift < n; ++shift) {
    for (std::size_t i = 0; i < n; ++i) {
      const int a = c[(i + shift) % n];
      const int b = c[i];
      if (a > b) return false;
      if (a < b) break;
    }
  }
  return true;
}

/// "3,4,4" or "[3,4,4]"; whitespace is ignored.
inline std::vector<int> parse_entries(std::string_view text) {
  std::string cleaned;
  for (char ch : text) {
    if (ch != ' ' && ch != '\t' && ch != '[' && ch != ']') cleaned.push_back(ch);
  }
  std::vector<int> out;
  if (cleaned.empty()) return out;
  std::size_t pos = 0;
  while (pos <= cleaned.size()) {
    const std::size_t comma = std::min(cleaned.find(',', pos), cleaned.size());
    const std::string_view field(cleaned.data() + pos, comma - pos);
    int value = 0;
    const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() || end != field.data() + field.size()) {
      throw Error(ErrorCode::Parse, "bad Kupisch entry '" + std::string(field) + "'");
    }
    out.push_back(value);
    pos = comma + 1;
  }
  return out;
}

inline KupischSeries parse_kupisch(Kind kind, std::string_view text) {
  return validate(kind, parse_entries(text));
}

inline std::string format_entries(std::span<const int> c) {
  std::string out = "[";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(c[i]);
  }
  return out + "]";
}

inline std::string format(const KupischSeries& k) { return format_entries(k.entries()); }

}  // namespace nakayama
