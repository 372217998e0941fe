#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hatperm/error.hpp"

namespace hatperm {

// A permutation of {1..n} in one-line notation. Values are 1-based, storage
// is 0-based. The empty permutation (n = 0) is valid.
class Permutation {
 public:
  using value_type = int;

  Permutation() = default;

  Permutation(std::initializer_list<int> values)
      : Permutation(std::vector<int>(values)) {}

  // Throws InvalidInput unless `values` is exactly {1..n} in some order.
  explicit Permutation(std::vector<int> values) : values_(std::move(values)) {
    if (!is_permutation(values_)) {
      throw InvalidInput("not a permutation of 1.." +
                         std::to_string(values_.size()));
    }
  }

  static Permutation identity(std::size_t n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    return unchecked(std::move(v));
  }

  // Caller guarantees the permutation invariant.
  static Permutation unchecked(std::vector<int> values) {
    Permutation p;
    p.values_ = std::move(values);
    return p;
  }

  static bool is_permutation(std::span<const int> values) {
    std::vector<bool> seen(values.size() + 1, false);
    for (int v : values) {
      if (v < 1 || static_cast<std::size_t>(v) > values.size() || seen[v]) {
        return false;
      }
      seen[v] = true;
    }
    return true;
  }

  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }

  // 0-based access.
  int operator[](std::size_t i) const { return values_[i]; }

  std::span<const int> values() const noexcept { return values_; }
  const std::vector<int>& vector() const noexcept { return values_; }
  operator std::span<const int>() const noexcept { return values_; }

  auto begin() const noexcept { return values_.begin(); }
  auto end() const noexcept { return values_.end(); }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> values_;
};

// ---------------------------------------------------------------------------
// Reduction

// Replaces the i-th smallest entry by i. Entries must be pairwise distinct.
inline Permutation reduce(std::span<const int> q) {
  std::vector<std::size_t> order(q.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return q[a] < q[b]; });
  std::vector<int> out(q.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    if (r > 0 && q[order[r]] == q[order[r - 1]]) {
      throw InvalidInput("reduce: duplicate value " +
                         std::to_string(q[order[r]]));
    }
    out[order[r]] = static_cast<int>(r) + 1;
  }
  return Permutation::unchecked(std::move(out));
}

// Reduction of a string with repeated values: equal values share a rank and
// ranks are dense, so 3 5 7 1 3 6 becomes 2 3 5 1 2 4. Only used for display;
// every algorithm in the library works on distinct values.
inline std::vector<int> multiset_reduce(std::span<const int> q) {
  std::vector<int> sorted(q.begin(), q.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> out;
  out.reserve(q.size());
  for (int v : q) {
    out.push_back(static_cast<int>(
        std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin() + 1));
  }
  return out;
}

// True iff a and b have the same length and the same relative order.
inline bool order_isomorphic(std::span<const int> a, std::span<const int> b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if ((a[i] < a[j]) != (b[i] < b[j])) return false;
    }
  }
  return true;
}

// The sequence with the entry at 0-based `index` removed, then reduced.
inline Permutation delete_and_reduce(std::span<const int> p, std::size_t index) {
  if (index >= p.size()) throw InvalidInput("delete_and_reduce: index out of range");
  std::vector<int> rest;
  rest.reserve(p.size());
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (j != index) rest.push_back(p[j]);
  }
  return reduce(rest);
}

// ---------------------------------------------------------------------------
// Trivial symmetries

enum class Symmetry { Reverse, Complement, Inverse };

inline Permutation reverse(const Permutation& p) {
  std::vector<int> v(p.begin(), p.end());
  std::reverse(v.begin(), v.end());
  return Permutation::unchecked(std::move(v));
}

inline Permutation complement(const Permutation& p) {
  const int n1 = static_cast<int>(p.size()) + 1;
  std::vector<int> v;
  v.reserve(p.size());
  for (int x : p) v.push_back(n1 - x);
  return Permutation::unchecked(std::move(v));
}

inline Permutation inverse(const Permutation& p) {
  std::vector<int> v(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) v[p[i] - 1] = static_cast<int>(i) + 1;
  return Permutation::unchecked(std::move(v));
}

inline Permutation apply(Symmetry which, const Permutation& p) {
  switch (which) {
    case Symmetry::Reverse:
      return reverse(p);
    case Symmetry::Complement:
      return complement(p);
    case Symmetry::Inverse:
      return inverse(p);
  }
  return p;
}

// ---------------------------------------------------------------------------
// Left-to-right minima

struct LtrmDecomposition {
  std::vector<std::vector<int>> blocks;
  // 1-based positions where each block starts.
  std::vector<std::size_t> ltrm_indices;
};

inline LtrmDecomposition ltrm_decompose(std::span<const int> p) {
  LtrmDecomposition d;
  int current_min = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i == 0 || p[i] < current_min) {
      current_min = p[i];
      d.blocks.emplace_back();
      d.ltrm_indices.push_back(i + 1);
    }
    d.blocks.back().push_back(p[i]);
  }
  return d;
}

// Block heads strictly decrease and every block strictly increases. Every
// 132-avoider satisfies this; the converse fails, e.g. (2 4)(1 3).
inline bool satisfies_ltrm_conditions(const LtrmDecomposition& d) {
  for (std::size_t b = 0; b < d.blocks.size(); ++b) {
    const auto& block = d.blocks[b];
    if (block.empty()) return false;
    if (b > 0 && d.blocks[b - 1].front() <= block.front()) return false;
    for (std::size_t j = 1; j < block.size(); ++j) {
      if (block[j - 1] >= block[j]) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Factors and run embedding

// True iff some adjacent pair reads a, a+1.
inline bool has_adjacent_consecutive_factor(std::span<const int> p) {
  for (std::size_t j = 0; j + 1 < p.size(); ++j) {
    if (p[j + 1] == p[j] + 1) return true;
  }
  return false;
}

// Replaces each value v by the increasing run vk-k+1, ..., vk.
inline Permutation run_embedding(const Permutation& p, int k) {
  if (k < 1) throw InvalidInput("run_embedding: k must be >= 1");
  std::vector<int> v;
  v.reserve(p.size() * static_cast<std::size_t>(k));
  for (int x : p) {
    for (int j = k - 1; j >= 0; --j) v.push_back(x * k - j);
  }
  return Permutation::unchecked(std::move(v));
}

// ---------------------------------------------------------------------------
// Text

// Accepts "5 4 6 2 1 3 7" (whitespace separated) or, when the text holds no
// whitespace, the compact digit form "5462137".
inline Permutation parse_permutation(std::string_view text) {
  std::vector<int> values;
  const bool spaced = text.find_first_of(" \t,") != std::string_view::npos;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == ' ' || c == '\t' || c == ',' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    if (c < '0' || c > '9') {
      throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
    const std::size_t start = i;
    long long v = 0;
    if (spaced) {
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        v = v * 10 + (text[i] - '0');
        if (v > 1'000'000) throw ParseError("value too large", start);
        ++i;
      }
    } else {
      v = c - '0';
      ++i;
    }
    if (v < 1) throw ParseError("values must be positive", start);
    if (std::find(values.begin(), values.end(), v) != values.end()) {
      throw ParseError("duplicate value " + std::to_string(v), start);
    }
    values.push_back(static_cast<int>(v));
  }
  for (int v : values) {
    if (static_cast<std::size_t>(v) > values.size()) {
      throw ParseError("value " + std::to_string(v) + " exceeds length " +
                           std::to_string(values.size()),
                       text.size());
    }
  }
  return Permutation::unchecked(std::move(values));
}

inline std::string to_string(std::span<const int> p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(p[i]);
  }
  return out;
}

inline std::string to_string(const Permutation& p) { return to_string(p.values()); }

}  // namespace hatperm
