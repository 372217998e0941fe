#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hatperm/error.hpp"

namespace hatperm {

enum class Step : char { Up = 'u', Down = 'd', Flat = 'f' };

enum class PathAlphabet { Dyck, Motzkin };

enum class PathErrorKind { IllegalCharacter, NegativePrefix, Unbalanced };

class PathError : public ParseError {
 public:
  PathError(PathErrorKind kind, const std::string& what, std::size_t position)
      : ParseError(what, position), kind_(kind) {}

  PathErrorKind kind() const noexcept { return kind_; }

 private:
  PathErrorKind kind_;
};

namespace detail {

inline void validate_path(std::span<const Step> steps, PathAlphabet alphabet) {
  long height = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    switch (steps[i]) {
      case Step::Up:
        ++height;
        break;
      case Step::Down:
        if (--height < 0) {
          throw PathError(PathErrorKind::NegativePrefix, "path dips below the baseline", i);
        }
        break;
      case Step::Flat:
        if (alphabet == PathAlphabet::Dyck) {
          throw PathError(PathErrorKind::IllegalCharacter, "flat step in a Dyck path", i);
        }
        break;
      default:
        throw PathError(PathErrorKind::IllegalCharacter, "unknown step", i);
    }
  }
  if (height != 0) {
    throw PathError(PathErrorKind::Unbalanced,
                    "path ends at height " + std::to_string(height), steps.size());
  }
}

inline std::vector<Step> parse_steps(std::string_view text, PathAlphabet alphabet) {
  std::vector<Step> steps;
  steps.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case 'u':
        steps.push_back(Step::Up);
        break;
      case 'd':
        steps.push_back(Step::Down);
        break;
      case 'f':
        if (alphabet == PathAlphabet::Motzkin) {
          steps.push_back(Step::Flat);
          break;
        }
        [[fallthrough]];
      default:
        throw PathError(PathErrorKind::IllegalCharacter,
                        std::string("illegal character '") + text[i] + "'", i);
    }
  }
  return steps;
}

}  // namespace detail

// A word over {u, d, f} that never dips below its start and ends where it
// started. Dyck words additionally contain no flat steps.
template <PathAlphabet A>
class LatticeWord {
 public:
  static constexpr PathAlphabet alphabet = A;

  LatticeWord() = default;

  explicit LatticeWord(std::vector<Step> steps) : steps_(std::move(steps)) {
    detail::validate_path(steps_, A);
  }

  static LatticeWord parse(std::string_view text) {
    return LatticeWord(detail::parse_steps(text, A));
  }

  static LatticeWord unchecked(std::vector<Step> steps) {
    LatticeWord w;
    w.steps_ = std::move(steps);
    return w;
  }

  std::span<const Step> steps() const noexcept { return steps_; }
  std::size_t size() const noexcept { return steps_.size(); }
  bool empty() const noexcept { return steps_.empty(); }
  Step operator[](std::size_t i) const { return steps_[i]; }

  // Dyck words report their semilength, Motzkin words their step count.
  std::size_t length() const noexcept {
    return A == PathAlphabet::Dyck ? steps_.size() / 2 : steps_.size();
  }

  std::string str() const {
    std::string s;
    s.reserve(steps_.size());
    for (Step st : steps_) s += static_cast<char>(st);
    return s;
  }

  friend bool operator==(const LatticeWord&, const LatticeWord&) = default;
  // Lexicographic with u < d < f, the generation order.
  friend std::strong_ordering operator<=>(const LatticeWord& a, const LatticeWord& b) {
    auto rank = [](Step s) { return s == Step::Up ? 0 : s == Step::Down ? 1 : 2; };
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (a[i] != b[i]) return rank(a[i]) <=> rank(b[i]);
    }
    return a.size() <=> b.size();
  }

 private:
  std::vector<Step> steps_;
};

using DyckWord = LatticeWord<PathAlphabet::Dyck>;
using MotzkinWord = LatticeWord<PathAlphabet::Motzkin>;

inline std::string to_string(const DyckWord& w) { return w.str(); }
inline std::string to_string(const MotzkinWord& w) { return w.str(); }

// ---------------------------------------------------------------------------
// Statistics

struct Vertex {
  std::size_t position;  // number of steps taken before this vertex
  int height;
  friend bool operator==(const Vertex&, const Vertex&) = default;
};

struct PathStats {
  std::vector<Vertex> peaks;    // up step followed by down step
  std::vector<Vertex> valleys;  // down step followed by up step
  int max_height = 0;
};

inline std::vector<int> heights(std::span<const Step> steps) {
  std::vector<int> h(steps.size() + 1, 0);
  for (std::size_t i = 0; i < steps.size(); ++i) {
    h[i + 1] = h[i] + (steps[i] == Step::Up ? 1 : steps[i] == Step::Down ? -1 : 0);
  }
  return h;
}

inline PathStats stats(std::span<const Step> steps) {
  PathStats s;
  int h = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    h += steps[i] == Step::Up ? 1 : steps[i] == Step::Down ? -1 : 0;
    s.max_height = std::max(s.max_height, h);
    if (i + 1 < steps.size()) {
      if (steps[i] == Step::Up && steps[i + 1] == Step::Down) s.peaks.push_back({i + 1, h});
      if (steps[i] == Step::Down && steps[i + 1] == Step::Up) s.valleys.push_back({i + 1, h});
    }
  }
  return s;
}

template <PathAlphabet A>
PathStats stats(const LatticeWord<A>& w) {
  return stats(w.steps());
}

inline bool has_peak_at_height(const DyckWord& w, int p) {
  const auto s = stats(w);
  return std::any_of(s.peaks.begin(), s.peaks.end(),
                     [p](const Vertex& v) { return v.height == p; });
}

// True iff w has the contiguous factor u d^(p-2) u.
inline bool contains_u_dpow_u(const DyckWord& w, int p) {
  if (p < 3) throw InvalidInput("contains_u_dpow_u: p must be >= 3");
  const auto steps = w.steps();
  const std::size_t len = static_cast<std::size_t>(p);
  for (std::size_t i = 0; i + len <= steps.size(); ++i) {
    if (steps[i] != Step::Up || steps[i + len - 1] != Step::Up) continue;
    bool downs = true;
    for (std::size_t j = i + 1; j + 1 < i + len && downs; ++j) downs = steps[j] == Step::Down;
    if (downs) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Generation, lexicographic with u < d < f

namespace detail {

template <typename Visit>
bool dyck_rec(std::vector<Step>& w, int ups_left, int height, Visit& visit) {
  if (ups_left == 0 && height == 0) return visit(std::span<const Step>(w));
  if (ups_left > 0) {
    w.push_back(Step::Up);
    if (!dyck_rec(w, ups_left - 1, height + 1, visit)) return false;
    w.pop_back();
  }
  if (height > 0) {
    w.push_back(Step::Down);
    if (!dyck_rec(w, ups_left, height - 1, visit)) return false;
    w.pop_back();
  }
  return true;
}

template <typename Visit>
bool motzkin_rec(std::vector<Step>& w, int left, int height, Visit& visit) {
  if (left == 0) return height == 0 ? visit(std::span<const Step>(w)) : true;
  if (height + 1 <= left - 1) {
    w.push_back(Step::Up);
    if (!motzkin_rec(w, left - 1, height + 1, visit)) return false;
    w.pop_back();
  }
  if (height > 0) {
    w.push_back(Step::Down);
    if (!motzkin_rec(w, left - 1, height - 1, visit)) return false;
    w.pop_back();
  }
  if (height <= left - 1) {
    w.push_back(Step::Flat);
    if (!motzkin_rec(w, left - 1, height, visit)) return false;
    w.pop_back();
  }
  return true;
}

}  // namespace detail

// Streams every Dyck word of semilength n as a span of steps; `visit` returns
// false to stop. The span is only valid during the call.
template <typename Visit>
void for_each_dyck(int n, Visit&& visit) {
  std::vector<Step> w;
  w.reserve(2 * static_cast<std::size_t>(std::max(n, 0)));
  if (n >= 0) detail::dyck_rec(w, n, 0, visit);
}

template <typename Visit>
void for_each_motzkin(int n, Visit&& visit) {
  std::vector<Step> w;
  w.reserve(static_cast<std::size_t>(std::max(n, 0)));
  if (n >= 0) detail::motzkin_rec(w, n, 0, visit);
}

inline std::vector<DyckWord> enumerate_dyck(int n) {
  std::vector<DyckWord> out;
  for_each_dyck(n, [&](std::span<const Step> s) {
    out.push_back(DyckWord::unchecked({s.begin(), s.end()}));
    return true;
  });
  return out;
}

inline std::vector<MotzkinWord> enumerate_motzkin(int n) {
  std::vector<MotzkinWord> out;
  for_each_motzkin(n, [&](std::span<const Step> s) {
    out.push_back(MotzkinWord::unchecked({s.begin(), s.end()}));
    return true;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Proper segments

// The path is drawn from (1, 0) to (n+1, 0). Within each maximal stretch that
// stays at or above y = h, the abscissas where it touches y = h are grouped
// into runs; a flat step lying on y = h ends a run. Runs are returned left to
// right, each in increasing order.
inline std::vector<std::vector<int>> proper_segments(const MotzkinWord& m, int h) {
  const auto y = heights(m.steps());
  std::vector<std::vector<int>> blocks;
  bool open = false;  // the current run may still grow
  for (std::size_t x = 0; x < y.size(); ++x) {
    if (y[x] < h) {
      open = false;
      continue;
    }
    if (y[x] != h) continue;
    const bool flat_before = x > 0 && y[x - 1] == h;
    if (!open || flat_before) blocks.emplace_back();
    blocks.back().push_back(static_cast<int>(x) + 1);
    open = true;
  }
  return blocks;
}

// ---------------------------------------------------------------------------
// ASCII rendering, highest row first. Row r holds the up and down steps
// between heights r and r+1 and the flat steps lying on height r.

inline std::string render(std::span<const Step> steps) {
  const auto y = heights(steps);
  int top = 1;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    top = std::max(top, (steps[i] == Step::Down ? y[i + 1] : y[i]) + 1);
  }
  std::vector<std::string> rows(static_cast<std::size_t>(top), std::string(steps.size(), ' '));
  for (std::size_t i = 0; i < steps.size(); ++i) {
    switch (steps[i]) {
      case Step::Up:
        rows[static_cast<std::size_t>(y[i])][i] = '/';
        break;
      case Step::Down:
        rows[static_cast<std::size_t>(y[i + 1])][i] = '\\';
        break;
      case Step::Flat:
        rows[static_cast<std::size_t>(y[i])][i] = '_';
        break;
    }
  }
  std::string out;
  for (int r = top - 1; r >= 0; --r) {
    auto row = rows[static_cast<std::size_t>(r)];
    row.erase(row.find_last_not_of(' ') + 1);
    out += row;
    out += '\n';
  }
  return out;
}

// Parses either alphabet: words with an 'f' are Motzkin, others Dyck.
inline std::vector<Step> parse_any_path(std::string_view text) {
  const auto alphabet = text.find('f') == std::string_view::npos ? PathAlphabet::Dyck
                                                                 : PathAlphabet::Motzkin;
  auto steps = detail::parse_steps(text, alphabet);
  detail::validate_path(steps, alphabet);
  return steps;
}

}  // namespace hatperm
