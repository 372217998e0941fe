#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hatperm/error.hpp"
#include "hatperm/pattern.hpp"
#include "hatperm/paths.hpp"
#include "hatperm/permutation.hpp"

namespace hatperm {

inline bool avoids_132(std::span<const int> p) {
  static constexpr int kPattern[] = {1, 3, 2};
  return !contains_classical(p, kPattern);
}

inline bool avoids_123(std::span<const int> p) {
  static constexpr int kPattern[] = {1, 2, 3};
  return !contains_classical(p, kPattern);
}

namespace detail {

inline void require_132_avoiding(std::span<const int> p, const char* who) {
  if (!avoids_132(p)) throw DomainError(std::string(who) + ": input contains 132");
}

inline std::size_t max_position(std::span<const int> a) {
  return static_cast<std::size_t>(std::max_element(a.begin(), a.end()) - a.begin());
}

}  // namespace detail

// ---------------------------------------------------------------------------
// phi: 132-avoiders to Dyck paths

// Reads the permutation left to right. For each entry, rises until height
// h + 1, where h counts the later, larger entries, then takes one down step.
inline DyckWord phi(const Permutation& p) {
  detail::require_132_avoiding(p, "phi");
  std::vector<Step> w;
  w.reserve(2 * p.size());
  int height = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    int larger_after = 0;
    for (std::size_t j = i + 1; j < p.size(); ++j) larger_after += p[j] > p[i];
    for (; height < larger_after + 1; ++height) w.push_back(Step::Up);
    w.push_back(Step::Down);
    --height;
  }
  return DyckWord::unchecked(std::move(w));
}

namespace detail {

inline void phi_rec(std::span<const int> a, std::vector<Step>& out) {
  if (a.empty()) return;
  const std::size_t m = max_position(a);
  out.push_back(Step::Up);
  phi_rec(a.first(m), out);
  out.push_back(Step::Down);
  phi_rec(a.subspan(m + 1), out);
}

}  // namespace detail

// phi(A) = u phi(left of max) d phi(right of max).
inline DyckWord phi_recursive(const Permutation& p) {
  detail::require_132_avoiding(p, "phi_recursive");
  std::vector<Step> w;
  w.reserve(2 * p.size());
  detail::phi_rec(p.values(), w);
  return DyckWord::unchecked(std::move(w));
}

namespace detail {

// Index of the down step matching the up step at `open`.
inline std::size_t matching_down(std::span<const Step> s, std::size_t open) {
  int depth = 0;
  for (std::size_t i = open; i < s.size(); ++i) {
    depth += s[i] == Step::Up ? 1 : -1;
    if (depth == 0) return i;
  }
  return s.size();
}

// Writes into `out` the 132-avoider of the values lo..lo+|s|/2-1 whose
// recursive phi image is s. The first return splits s = u L d R; in a
// 132-avoider everything left of the maximum exceeds everything right of it.
inline void phi_inverse_rec(std::span<const Step> s, int lo, std::vector<int>& out) {
  if (s.empty()) return;
  const std::size_t close = matching_down(s, 0);
  const auto left = s.subspan(1, close - 1);
  const auto right = s.subspan(close + 1);
  const int right_size = static_cast<int>(right.size() / 2);
  const int left_size = static_cast<int>(left.size() / 2);
  phi_inverse_rec(left, lo + right_size, out);
  out.push_back(lo + right_size + left_size);
  phi_inverse_rec(right, lo, out);
}

}  // namespace detail

inline Permutation phi_inverse(const DyckWord& w) {
  std::vector<int> out;
  out.reserve(w.length());
  detail::phi_inverse_rec(w.steps(), 1, out);
  return Permutation::unchecked(std::move(out));
}

// ---------------------------------------------------------------------------
// theta: indexed Dyck paths

struct IndexedStep {
  Step direction;
  int label;
  friend bool operator==(const IndexedStep&, const IndexedStep&) = default;
};

class IndexedDyckPath {
 public:
  IndexedDyckPath() = default;
  explicit IndexedDyckPath(std::vector<IndexedStep> steps) : steps_(std::move(steps)) {}

  std::span<const IndexedStep> steps() const noexcept { return steps_; }
  std::size_t size() const noexcept { return steps_.size(); }

  DyckWord unlabeled() const {
    std::vector<Step> s;
    s.reserve(steps_.size());
    for (const auto& st : steps_) s.push_back(st.direction);
    return DyckWord(std::move(s));
  }

  // Labels of the up steps, left to right.
  std::vector<int> up_labels() const {
    std::vector<int> out;
    for (const auto& st : steps_) {
      if (st.direction == Step::Up) out.push_back(st.label);
    }
    return out;
  }

  std::string str() const {
    std::string out;
    for (std::size_t i = 0; i < steps_.size(); ++i) {
      if (i) out += ' ';
      out += static_cast<char>(steps_[i].direction);
      out += std::to_string(steps_[i].label);
    }
    return out;
  }

  // "u4 d4 u5 ..."; labels are not checked for consistency here.
  static IndexedDyckPath parse(std::string_view text) {
    std::vector<IndexedStep> steps;
    std::size_t i = 0;
    while (i < text.size()) {
      if (text[i] == ' ' || text[i] == '\t') {
        ++i;
        continue;
      }
      const std::size_t start = i;
      Step dir;
      if (text[i] == 'u') {
        dir = Step::Up;
      } else if (text[i] == 'd') {
        dir = Step::Down;
      } else {
        throw PathError(PathErrorKind::IllegalCharacter,
                        std::string("illegal character '") + text[i] + "'", i);
      }
      ++i;
      int label = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        label = label * 10 + (text[i] - '0');
        ++i;
      }
      if (i == start + 1) throw ParseError("missing step label", i);
      steps.push_back({dir, label});
    }
    IndexedDyckPath path(std::move(steps));
    (void)path.unlabeled();  // validates the underlying word
    return path;
  }

  friend bool operator==(const IndexedDyckPath&, const IndexedDyckPath&) = default;

 private:
  std::vector<IndexedStep> steps_;
};

struct IndexedPathProperties {
  bool well_matching = true;   // each label on one u and one later d, balanced between
  bool nested = true;          // overlapping pairs nest with the smaller label inside
  bool peaks_equal = true;     // every peak reads u_k d_k
  bool valleys_step = true;    // every valley reads d_(k-1) u_k
  bool all() const { return well_matching && nested && peaks_equal && valleys_step; }
};

inline IndexedPathProperties check_properties(const IndexedDyckPath& path) {
  IndexedPathProperties r;
  const auto s = path.steps();
  const std::size_t n = s.size() / 2;
  std::vector<std::size_t> up_at(n + 1, s.size()), down_at(n + 1, s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    const int label = s[i].label;
    if (label < 1 || static_cast<std::size_t>(label) > n) {
      r = {false, false, false, false};
      return r;
    }
    auto& slot = s[i].direction == Step::Up ? up_at[label] : down_at[label];
    if (slot != s.size()) r.well_matching = false;
    slot = i;
  }
  std::vector<Step> dirs;
  for (const auto& st : s) dirs.push_back(st.direction);
  for (std::size_t k = 1; k <= n && r.well_matching; ++k) {
    if (up_at[k] >= down_at[k] || down_at[k] == s.size()) {
      r.well_matching = false;
    } else if (detail::matching_down(dirs, up_at[k]) != down_at[k]) {
      r.well_matching = false;
    }
  }
  if (!r.well_matching) {
    r.nested = r.peaks_equal = r.valleys_step = false;
    return r;
  }
  for (std::size_t a = 1; a <= n; ++a) {
    for (std::size_t b = a + 1; b <= n; ++b) {
      const bool overlap = up_at[a] < down_at[b] && up_at[b] < down_at[a];
      if (!overlap) continue;
      // a < b, so a must sit inside b.
      if (!(up_at[b] < up_at[a] && down_at[a] < down_at[b])) r.nested = false;
    }
  }
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    if (s[i].direction == Step::Up && s[i + 1].direction == Step::Down &&
        s[i].label != s[i + 1].label) {
      r.peaks_equal = false;
    }
    if (s[i].direction == Step::Down && s[i + 1].direction == Step::Up &&
        s[i].label + 1 != s[i + 1].label) {
      r.valleys_step = false;
    }
  }
  return r;
}

namespace detail {

inline void theta_rec(std::span<const int> a, std::vector<IndexedStep>& out) {
  if (a.empty()) return;
  const std::size_t m = max_position(a);
  theta_rec(a.first(m), out);
  out.push_back({Step::Up, a[m]});
  theta_rec(a.subspan(m + 1), out);
  out.push_back({Step::Down, a[m]});
}

}  // namespace detail

// theta(A) = theta(left of max) u_m theta(right of max) d_m. Defined on any
// sequence of distinct integers; bijective on 132-avoiders.
inline IndexedDyckPath theta(std::span<const int> a) {
  std::vector<IndexedStep> out;
  out.reserve(2 * a.size());
  detail::theta_rec(a, out);
  return IndexedDyckPath(std::move(out));
}

namespace detail {

// Labels the word s = P u S d with the values lo..lo+|s|/2-1: the final pair
// takes the largest value, the inner segment S the smallest ones, P the rest.
inline void theta_label_rec(std::span<const Step> s, int lo, std::span<IndexedStep> out) {
  if (s.empty()) return;
  // The last up step at depth zero opens the final pair.
  std::size_t open = 0;
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (depth == 0 && s[i] == Step::Up) open = i;
    depth += s[i] == Step::Up ? 1 : -1;
  }
  const std::size_t close = s.size() - 1;
  const auto prefix = s.first(open);
  const auto inner = s.subspan(open + 1, close - open - 1);
  const int inner_size = static_cast<int>(inner.size() / 2);
  const int top = lo + static_cast<int>(s.size() / 2) - 1;
  out[open] = {Step::Up, top};
  out[close] = {Step::Down, top};
  theta_label_rec(inner, lo, out.subspan(open + 1, inner.size()));
  theta_label_rec(prefix, lo + inner_size, out.first(open));
}

}  // namespace detail

// The unique labelling of w as a theta image of a 132-avoider.
inline IndexedDyckPath theta_labels(const DyckWord& w) {
  std::vector<IndexedStep> out(w.size());
  detail::theta_label_rec(w.steps(), 1, out);
  return IndexedDyckPath(std::move(out));
}

inline Permutation theta_inverse(const DyckWord& w) {
  return Permutation::unchecked(theta_labels(w).up_labels());
}

// ---------------------------------------------------------------------------
// Simion-Schmidt: S_n(132) -> S_n(123)

// Left-to-right minima are copied; every other slot takes the largest unused
// value above the current minimum.
inline Permutation simion_schmidt(const Permutation& p) {
  detail::require_132_avoiding(p, "simion_schmidt");
  const std::size_t n = p.size();
  std::vector<int> sigma(n);
  std::vector<bool> used(n + 2, false);
  int x = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == 0 || p[i] < x) {
      sigma[i] = x = p[i];
      used[x] = true;
      continue;
    }
    int k = static_cast<int>(n);
    while (k > x && used[k]) --k;
    if (k <= x) throw DomainError("simion_schmidt: no value available");
    sigma[i] = k;
    used[k] = true;
  }
  return Permutation::unchecked(std::move(sigma));
}

// Minima are copied; every other slot takes the smallest unused value above
// the current minimum.
inline Permutation simion_schmidt_inverse(const Permutation& sigma) {
  if (!avoids_123(sigma)) throw DomainError("simion_schmidt_inverse: input contains 123");
  const std::size_t n = sigma.size();
  std::vector<int> p(n);
  std::vector<bool> used(n + 2, false);
  int x = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == 0 || sigma[i] < x) {
      p[i] = x = sigma[i];
      used[x] = true;
      continue;
    }
    int k = x + 1;
    while (k <= static_cast<int>(n) && used[k]) ++k;
    if (k > static_cast<int>(n)) throw DomainError("simion_schmidt_inverse: no value available");
    p[i] = k;
    used[k] = true;
  }
  return Permutation::unchecked(std::move(p));
}

// ---------------------------------------------------------------------------
// Geometric representation

struct Arc {
  int from;  // smaller endpoint
  int to;
  std::size_t block;
  friend bool operator==(const Arc&, const Arc&) = default;
};

// Each block (v1 .. vm) with m > 1 becomes the chained arcs (v1,v2), ...,
// (v(m-1),vm) above the number line; one-element blocks become single points.
struct GeometricRepresentation {
  std::vector<std::vector<int>> blocks;
  std::vector<Arc> arcs;
  std::vector<int> singles;  // increasing

  static GeometricRepresentation from_blocks(std::vector<std::vector<int>> blocks) {
    GeometricRepresentation g;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      const auto& block = blocks[b];
      if (block.size() == 1) g.singles.push_back(block.front());
      for (std::size_t j = 1; j < block.size(); ++j) {
        g.arcs.push_back({std::min(block[j - 1], block[j]), std::max(block[j - 1], block[j]), b});
      }
    }
    std::sort(g.singles.begin(), g.singles.end());
    g.blocks = std::move(blocks);
    return g;
  }

  bool is_arc_start(int v) const {
    return std::any_of(arcs.begin(), arcs.end(), [v](const Arc& a) { return a.from == v; });
  }
  bool is_arc_end(int v) const {
    return std::any_of(arcs.begin(), arcs.end(), [v](const Arc& a) { return a.to == v; });
  }
  bool is_single(int v) const {
    return std::binary_search(singles.begin(), singles.end(), v);
  }
};

// Requires the block heads to decrease and each block to increase.
inline GeometricRepresentation geometric_representation(const Permutation& p) {
  auto d = ltrm_decompose(p);
  if (!satisfies_ltrm_conditions(d)) {
    throw DomainError("geometric_representation: blocks are not increasing runs under decreasing heads");
  }
  return GeometricRepresentation::from_blocks(std::move(d.blocks));
}

// True iff two arcs from different blocks strictly interleave.
inline bool blocks_overlap(const GeometricRepresentation& g) {
  for (std::size_t i = 0; i < g.arcs.size(); ++i) {
    for (std::size_t j = i + 1; j < g.arcs.size(); ++j) {
      const Arc& a = g.arcs[i];
      const Arc& b = g.arcs[j];
      if (a.block == b.block) continue;
      if ((a.from < b.from && b.from < a.to && a.to < b.to) ||
          (b.from < a.from && a.from < b.to && b.to < a.to)) {
        return true;
      }
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// psi: Motzkin paths of length n to S_(n+1)(132, 2^13)

// Every maximal proper segment at every height contributes one block of touch
// abscissas; blocks are concatenated by decreasing first entry.
inline Permutation psi(const MotzkinWord& m) {
  const int top = stats(m).max_height;
  std::vector<std::vector<int>> blocks;
  for (int h = 0; h <= top; ++h) {
    for (auto& b : proper_segments(m, h)) blocks.push_back(std::move(b));
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() > b.front(); });
  std::vector<int> out;
  out.reserve(m.size() + 1);
  for (const auto& b : blocks) out.insert(out.end(), b.begin(), b.end());
  return Permutation::unchecked(std::move(out));
}

// Scans the points 1..n of the arc diagram: up at an arc start, otherwise down
// when the next point ends an arc and flat when it does not.
inline MotzkinWord psi_inverse(const Permutation& p) {
  if (p.empty()) throw DomainError("psi_inverse: empty permutation");
  detail::require_132_avoiding(p, "psi_inverse");
  if (has_adjacent_consecutive_factor(p)) {
    throw DomainError("psi_inverse: input has an adjacent factor a(a+1)");
  }
  const auto g = geometric_representation(p);
  const int last = static_cast<int>(p.size());
  std::vector<bool> start(last + 2, false), end(last + 2, false);
  for (const Arc& a : g.arcs) {
    start[a.from] = true;
    end[a.to] = true;
  }
  std::vector<Step> steps;
  steps.reserve(p.size() - 1);
  for (int i = 1; i < last; ++i) {
    if (start[i]) {
      steps.push_back(Step::Up);
    } else if (end[i + 1]) {
      steps.push_back(Step::Down);
    } else {
      steps.push_back(Step::Flat);
    }
  }
  return MotzkinWord(std::move(steps));
}

}  // namespace hatperm
