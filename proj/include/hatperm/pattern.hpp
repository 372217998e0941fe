#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hatperm/error.hpp"
#include "hatperm/permutation.hpp"

namespace hatperm {

enum class Mark { None, Bar, Hat };

// A pattern with at most one marked entry. `marked_index` is 1-based and is
// present exactly when the mark is Bar or Hat.
class MarkedPattern {
 public:
  static MarkedPattern classical(Permutation pattern) {
    if (pattern.empty()) throw InvalidInput("pattern must be non-empty");
    MarkedPattern p;
    p.pattern_ = std::move(pattern);
    return p;
  }

  static MarkedPattern barred(Permutation pattern, std::size_t index) {
    return marked(std::move(pattern), index, Mark::Bar);
  }

  static MarkedPattern hatted(Permutation pattern, std::size_t index) {
    return marked(std::move(pattern), index, Mark::Hat);
  }

  static MarkedPattern marked(Permutation pattern, std::size_t index, Mark mark) {
    if (mark == Mark::None) return classical(std::move(pattern));
    if (index < 1 || index > pattern.size()) {
      throw InvalidInput("marked index " + std::to_string(index) +
                         " out of range for pattern of length " +
                         std::to_string(pattern.size()));
    }
    MarkedPattern p;
    p.pattern_ = std::move(pattern);
    p.mark_ = mark;
    p.index_ = index;
    p.remainder_ = delete_and_reduce(p.pattern_, index - 1);
    for (std::size_t s = 0; s < p.pattern_.size(); ++s) {
      if (delete_and_reduce(p.pattern_, s) == p.remainder_) {
        p.viable_slots_.push_back(s);
      }
    }
    return p;
  }

  const Permutation& pattern() const noexcept { return pattern_; }
  std::size_t size() const noexcept { return pattern_.size(); }
  Mark mark() const noexcept { return mark_; }
  std::optional<std::size_t> marked_index() const noexcept { return index_; }

  // red(pattern minus the marked entry); only meaningful when marked.
  const Permutation& remainder() const noexcept { return remainder_; }

  // 0-based slots s with red(pattern minus entry s) == remainder(). An entry
  // added to an occurrence of the remainder can only complete the pattern by
  // landing in one of these slots.
  const std::vector<std::size_t>& viable_slots() const noexcept {
    return viable_slots_;
  }

  friend bool operator==(const MarkedPattern& a, const MarkedPattern& b) {
    return a.pattern_ == b.pattern_ && a.mark_ == b.mark_ && a.index_ == b.index_;
  }

 private:
  MarkedPattern() = default;

  Permutation pattern_;
  Mark mark_ = Mark::None;
  std::optional<std::size_t> index_;
  Permutation remainder_;
  std::vector<std::size_t> viable_slots_;
};

// ---------------------------------------------------------------------------
// Occurrences

// Calls `visit(indices)` for every increasing index tuple of `text` whose
// values are order-isomorphic to `pattern`, in lexicographic order of the
// tuples. Stops early and returns false as soon as `visit` returns false.
// The empty pattern has exactly one (empty) occurrence.
template <typename Visitor>
bool for_each_occurrence(std::span<const int> text, std::span<const int> pattern,
                         Visitor&& visit) {
  const std::size_t k = pattern.size();
  const std::size_t n = text.size();
  if (k == 0) return visit(std::span<const std::size_t>{});
  if (k > n) return true;

  std::vector<std::size_t> idx(k);
  std::size_t depth = 0;
  idx[0] = 0;
  // Iterative backtracking: idx[depth] is the next candidate at this depth.
  while (true) {
    bool placed = false;
    while (idx[depth] + (k - depth) <= n) {
      const std::size_t pos = idx[depth];
      bool ok = true;
      for (std::size_t s = 0; s < depth; ++s) {
        if ((text[pos] < text[idx[s]]) != (pattern[depth] < pattern[s])) {
          ok = false;
          break;
        }
      }
      if (ok) {
        placed = true;
        break;
      }
      ++idx[depth];
    }
    if (placed) {
      if (depth + 1 == k) {
        if (!visit(std::span<const std::size_t>(idx))) return false;
        ++idx[depth];
      } else {
        idx[depth + 1] = idx[depth] + 1;
        ++depth;
      }
    } else {
      if (depth == 0) return true;
      --depth;
      ++idx[depth];
    }
  }
}

inline bool contains_classical(std::span<const int> text, std::span<const int> pattern) {
  return !for_each_occurrence(text, pattern,
                              [](std::span<const std::size_t>) { return false; });
}

// ---------------------------------------------------------------------------
// Barred and hatted avoidance

// Every occurrence of the remainder must extend to the full pattern by one
// entry placed strictly between the occurrence's slots i-1 and i.
inline bool avoids_barred(std::span<const int> text, const MarkedPattern& p) {
  if (p.mark() != Mark::Bar) throw InvalidInput("avoids_barred: pattern is not barred");
  const auto tau = p.pattern().values();
  const std::size_t k = tau.size();
  const std::size_t i = *p.marked_index() - 1;  // 0-based marked slot
  const int n = static_cast<int>(text.size());

  return for_each_occurrence(
      text, p.remainder().values(), [&](std::span<const std::size_t> occ) {
        const int lo = i == 0 ? -1 : static_cast<int>(occ[i - 1]);
        const int hi = i == k - 1 ? n : static_cast<int>(occ[i]);
        for (int pos = lo + 1; pos < hi; ++pos) {
          bool ok = true;
          for (std::size_t t = 0; t + 1 < k && ok; ++t) {
            const std::size_t role = t < i ? t : t + 1;
            ok = (text[pos] < text[occ[t]]) == (tau[i] < tau[role]);
          }
          if (ok) return true;
        }
        return false;
      });
}

// Every occurrence of the remainder must be a subset of some occurrence of the
// full pattern; the added entry may land in any slot.
inline bool avoids_hatted(std::span<const int> text, const MarkedPattern& p) {
  if (p.mark() != Mark::Hat) throw InvalidInput("avoids_hatted: pattern is not hatted");
  const auto tau = p.pattern().values();
  const std::size_t k = tau.size();
  const auto& slots = p.viable_slots();
  const std::size_t n = text.size();

  return for_each_occurrence(
      text, p.remainder().values(), [&](std::span<const std::size_t> occ) {
        std::size_t below = 0;  // number of occurrence indices < pos
        for (std::size_t pos = 0; pos < n; ++pos) {
          if (below < occ.size() && occ[below] == pos) {
            ++below;
            continue;
          }
          // The added entry sits in slot `below` of the merged k-tuple; the
          // occurrence entries keep their relative order, so only viable slots
          // can work and only the added entry's comparisons need checking.
          bool viable = false;
          for (std::size_t s : slots) viable = viable || s == below;
          if (!viable) continue;
          bool ok = true;
          for (std::size_t t = 0; t + 1 < k && ok; ++t) {
            const std::size_t role = t < below ? t : t + 1;
            ok = (text[pos] < text[occ[t]]) == (tau[below] < tau[role]);
          }
          if (ok) return true;
        }
        return false;
      });
}

// Dispatches on the mark: classical patterns are avoided when not contained.
inline bool avoids(std::span<const int> text, const MarkedPattern& p) {
  switch (p.mark()) {
    case Mark::None:
      return !contains_classical(text, p.pattern().values());
    case Mark::Bar:
      return avoids_barred(text, p);
    case Mark::Hat:
      return avoids_hatted(text, p);
  }
  return false;
}

inline bool avoids_all(std::span<const int> text, std::span<const MarkedPattern> ps) {
  for (const auto& p : ps) {
    if (!avoids(text, p)) return false;
  }
  return true;
}

// True iff the marked value differs by more than one from each existing
// neighbour. Exactly then the barred and hatted classes coincide.
inline bool neighbor_condition_holds(const MarkedPattern& p) {
  if (p.mark() == Mark::None) throw InvalidInput("neighbor condition needs a marked pattern");
  const auto tau = p.pattern().values();
  const std::size_t i = *p.marked_index() - 1;
  auto adjacent = [&](std::size_t j) { return tau[j] == tau[i] + 1 || tau[j] == tau[i] - 1; };
  if (i > 0 && adjacent(i - 1)) return false;
  if (i + 1 < tau.size() && adjacent(i + 1)) return false;
  return true;
}

// Moves a hat to the last slot that yields the same remainder. Such slots give
// the same avoidance class, so this is a canonical form for comparisons.
inline MarkedPattern normalize_hat(const MarkedPattern& p) {
  if (p.mark() != Mark::Hat) return p;
  return MarkedPattern::hatted(p.pattern(), p.viable_slots().back() + 1);
}

// The image of a marked pattern under a trivial symmetry. Reverse and
// complement keep the marked entry; inverse moves it to the position given by
// its value.
inline MarkedPattern apply(Symmetry which, const MarkedPattern& p) {
  Permutation image = apply(which, p.pattern());
  if (p.mark() == Mark::None) return MarkedPattern::classical(std::move(image));
  const std::size_t k = p.size();
  const std::size_t i = *p.marked_index();
  std::size_t j = i;
  switch (which) {
    case Symmetry::Reverse:
      j = k + 1 - i;
      break;
    case Symmetry::Complement:
      j = i;
      break;
    case Symmetry::Inverse:
      j = static_cast<std::size_t>(p.pattern()[i - 1]);
      break;
  }
  return MarkedPattern::marked(std::move(image), j, p.mark());
}

// ---------------------------------------------------------------------------
// Text forms
//
//   compact:  "213", "2^13" (hat on 1), "2-13" (bar on 1); k <= 9
//   long:     "hat@2: 2 1 3", "bar@2: 2 1 3", or plain "10 2 3 ..." for any k
//   class:    comma-separated patterns, e.g. "132,2^13"

inline MarkedPattern parse_pattern(std::string_view text) {
  auto trim = [](std::string_view s, std::size_t& offset) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
      s.remove_prefix(1);
      ++offset;
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  std::size_t offset = 0;
  text = trim(text, offset);
  if (text.empty()) throw ParseError("empty pattern", offset);

  const auto at = text.find('@');
  if (at != std::string_view::npos) {
    const auto kind = text.substr(0, at);
    Mark mark;
    if (kind == "hat") {
      mark = Mark::Hat;
    } else if (kind == "bar") {
      mark = Mark::Bar;
    } else {
      throw ParseError("mark kind must be 'hat' or 'bar'", offset);
    }
    const auto colon = text.find(':', at);
    if (colon == std::string_view::npos) throw ParseError("expected ':'", offset + text.size());
    std::size_t index = 0;
    for (std::size_t c = at + 1; c < colon; ++c) {
      if (text[c] < '0' || text[c] > '9') throw ParseError("bad mark position", offset + c);
      index = index * 10 + static_cast<std::size_t>(text[c] - '0');
    }
    Permutation perm;
    try {
      perm = parse_permutation(text.substr(colon + 1));
    } catch (const ParseError& e) {
      throw ParseError("bad pattern values", offset + colon + 1 + e.position());
    }
    if (perm.empty()) throw ParseError("empty pattern", offset + colon + 1);
    if (index < 1 || index > perm.size()) throw ParseError("mark position out of range", offset + at + 1);
    return MarkedPattern::marked(std::move(perm), index, mark);
  }

  if (text.find(' ') != std::string_view::npos) {
    Permutation perm;
    try {
      perm = parse_permutation(text);
    } catch (const ParseError& e) {
      throw ParseError("bad pattern values", offset + e.position());
    }
    return MarkedPattern::classical(std::move(perm));
  }

  std::vector<int> values;
  std::optional<std::size_t> index;
  Mark mark = Mark::None;
  for (std::size_t c = 0; c < text.size(); ++c) {
    const char ch = text[c];
    if (ch == '^' || ch == '-') {
      if (mark != Mark::None) throw ParseError("more than one marked entry", offset + c);
      if (c + 1 >= text.size() || text[c + 1] < '1' || text[c + 1] > '9') {
        throw ParseError("mark must precede a digit", offset + c);
      }
      mark = ch == '^' ? Mark::Hat : Mark::Bar;
      index = values.size() + 1;
      continue;
    }
    if (ch < '1' || ch > '9') {
      throw ParseError(std::string("unexpected character '") + ch + "'", offset + c);
    }
    values.push_back(ch - '0');
  }
  if (!Permutation::is_permutation(values)) {
    throw ParseError("pattern is not a permutation", offset);
  }
  Permutation perm = Permutation::unchecked(std::move(values));
  if (mark == Mark::None) return MarkedPattern::classical(std::move(perm));
  return MarkedPattern::marked(std::move(perm), *index, mark);
}

inline std::vector<MarkedPattern> parse_pattern_list(std::string_view text) {
  std::vector<MarkedPattern> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string_view::npos
                                              ? std::string_view::npos
                                              : comma - start);
    try {
      out.push_back(parse_pattern(piece));
    } catch (const ParseError& e) {
      throw ParseError("bad pattern", start + e.position());
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

// Compact form when every value is a single digit, long form otherwise.
inline std::string to_string(const MarkedPattern& p) {
  const auto tau = p.pattern().values();
  const bool compact = tau.size() <= 9;
  std::string out;
  if (compact) {
    for (std::size_t j = 0; j < tau.size(); ++j) {
      if (p.marked_index() && *p.marked_index() == j + 1) {
        out += p.mark() == Mark::Hat ? '^' : '-';
      }
      out += static_cast<char>('0' + tau[j]);
    }
    return out;
  }
  if (p.mark() != Mark::None) {
    out += p.mark() == Mark::Hat ? "hat@" : "bar@";
    out += std::to_string(*p.marked_index()) + ": ";
  }
  return out + to_string(tau);
}

}  // namespace hatperm
