#pragma once

#include <algorithm>
#include <cstdint>
#include <future>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "hatperm/error.hpp"
#include "hatperm/pattern.hpp"
#include "hatperm/paths.hpp"
#include "hatperm/permutation.hpp"

namespace hatperm {

// S_n(T): the permutations of length n avoiding every pattern of T.
struct AvoidanceClassSpec {
  int n = 0;
  std::vector<MarkedPattern> constraints;
};

// Streams the members of S_n(T) in lexicographic order. `visit` receives the
// values as a span (valid only during the call) and returns false to stop.
// This is a plain filter over all n! permutations and shares no code with the
// bijections it is used to check.
template <typename Visit>
void for_each_in_class(const AvoidanceClassSpec& spec, Visit&& visit) {
  if (spec.n < 0) throw InvalidInput("class length must be >= 0");
  std::vector<int> p(static_cast<std::size_t>(spec.n));
  std::iota(p.begin(), p.end(), 1);
  do {
    if (avoids_all(p, spec.constraints) && !visit(std::span<const int>(p))) return;
  } while (std::next_permutation(p.begin(), p.end()));
}

inline std::vector<Permutation> enumerate_class(const AvoidanceClassSpec& spec) {
  std::vector<Permutation> out;
  for_each_in_class(spec, [&](std::span<const int> p) {
    out.push_back(Permutation::unchecked({p.begin(), p.end()}));
    return true;
  });
  return out;
}

// |S_n(T)|, sharded by first entry across `threads` workers (0 = hardware
// concurrency). The result does not depend on the thread count.
inline std::uint64_t count_class(const AvoidanceClassSpec& spec, unsigned threads = 0) {
  if (spec.n < 0) throw InvalidInput("class length must be >= 0");
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  const int n = spec.n;
  if (n <= 1 || threads == 1) {
    std::uint64_t c = 0;
    for_each_in_class(spec, [&](std::span<const int>) { return ++c, true; });
    return c;
  }
  auto shard = [&spec, n](int first) {
    std::vector<int> p;
    p.reserve(static_cast<std::size_t>(n));
    p.push_back(first);
    for (int v = 1; v <= n; ++v) {
      if (v != first) p.push_back(v);
    }
    std::uint64_t c = 0;
    do {
      c += avoids_all(p, spec.constraints);
    } while (std::next_permutation(p.begin() + 1, p.end()));
    return c;
  };
  std::uint64_t total = 0;
  for (int base = 1; base <= n; base += static_cast<int>(threads)) {
    std::vector<std::future<std::uint64_t>> jobs;
    for (int first = base; first < base + static_cast<int>(threads) && first <= n; ++first) {
      jobs.push_back(std::async(std::launch::async, shard, first));
    }
    for (auto& j : jobs) total += j.get();
  }
  return total;
}

// ---------------------------------------------------------------------------
// Number sequences

namespace detail {

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b, const char* who) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError(std::string(who) + ": overflow");
  return r;
}

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b, const char* who) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError(std::string(who) + ": overflow");
  return r;
}

}  // namespace detail

// binom(2n, n) / (n+1), accumulated as C(k) = C(k-1) * 2(2k-1) / (k+1). The
// product is formed in 128 bits so only the result itself can overflow.
inline std::uint64_t catalan(int n) {
  if (n < 0) throw InvalidInput("catalan: n must be >= 0");
  unsigned __int128 c = 1;
  for (int k = 1; k <= n; ++k) {
    c = c * (4 * static_cast<unsigned>(k) - 2) / static_cast<unsigned>(k + 1);
    if (c > std::numeric_limits<std::uint64_t>::max()) throw OverflowError("catalan: overflow");
  }
  return static_cast<std::uint64_t>(c);
}

// M(n) = M(n-1) + sum_{k=0}^{n-2} M(k) M(n-2-k).
inline std::uint64_t motzkin_number(int n) {
  if (n < 0) throw InvalidInput("motzkin_number: n must be >= 0");
  std::vector<std::uint64_t> m(static_cast<std::size_t>(n) + 1, 1);
  for (int i = 2; i <= n; ++i) {
    std::uint64_t s = m[i - 1];
    for (int k = 0; k <= i - 2; ++k) {
      s = detail::checked_add(s, detail::checked_mul(m[k], m[i - 2 - k], "motzkin_number"),
                              "motzkin_number");
    }
    m[i] = s;
  }
  return m[n];
}

// Number of Dyck paths of semilength n with no peak at height 1, counted by
// filtering every Dyck path.
inline std::uint64_t fine_number(int n) {
  if (n < 0) throw InvalidInput("fine_number: n must be >= 0");
  if (n > 20) throw OverflowError("fine_number: exhaustive count beyond n = 20 is not supported");
  std::uint64_t c = 0;
  for_each_dyck(n, [&](std::span<const Step> s) {
    bool low_peak = false;
    int h = 0;
    for (std::size_t i = 0; i < s.size() && !low_peak; ++i) {
      h += s[i] == Step::Up ? 1 : -1;
      low_peak = h == 1 && s[i] == Step::Up && i + 1 < s.size() && s[i + 1] == Step::Down;
    }
    c += !low_peak;
    return true;
  });
  return c;
}

// ---------------------------------------------------------------------------
// Hatted vs barred experiments

// True iff "hatted class == barred class for every length <= n_max" agrees
// with the neighbour condition for (tau, i).
inline bool check_prop_equ(const Permutation& tau, std::size_t i, int n_max) {
  const auto hat = MarkedPattern::hatted(tau, i);
  const auto bar = MarkedPattern::barred(tau, i);
  bool equal = true;
  for (int n = 0; n <= n_max && equal; ++n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    do {
      if (avoids_hatted(p, hat) != avoids_barred(p, bar)) {
        equal = false;
        break;
      }
    } while (std::next_permutation(p.begin(), p.end()));
  }
  return equal == neighbor_condition_holds(hat);
}

struct GrowthRow {
  int n;
  std::uint64_t count;
  std::optional<double> ratio;  // count(n) / count(n-1) when defined
};

// |S_n(p)| for n = 1..n_max with successive ratios.
inline std::vector<GrowthRow> growth_table(const MarkedPattern& p, int n_max) {
  std::vector<GrowthRow> rows;
  for (int n = 1; n <= n_max; ++n) {
    GrowthRow row{n, count_class({n, {p}}), std::nullopt};
    if (!rows.empty() && rows.back().count != 0) {
      row.ratio = static_cast<double>(row.count) / static_cast<double>(rows.back().count);
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace hatperm
