#pragma once

// Exhaustive verification suites. Each check compares an implementation route
// (bijection, predicate, tree) against the brute-force filters in oracle.hpp
// and reports the first counterexample it meets.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hatperm/bijections.hpp"
#include "hatperm/eco_tree.hpp"
#include "hatperm/oracle.hpp"
#include "hatperm/paths.hpp"
#include "hatperm/pattern.hpp"
#include "hatperm/permutation.hpp"

namespace hatperm {

struct CheckResult {
  CheckResult() = default;
  explicit CheckResult(std::string n) : name(std::move(n)) {}

  std::string name;
  bool passed = true;
  std::uint64_t cases = 0;  // number of individual comparisons made
  std::string detail;       // first failure, empty on success

  void fail(const std::string& why) {
    if (passed) detail = why;
    passed = false;
  }
};

namespace detail {

inline MarkedPattern pattern_132() { return MarkedPattern::classical(Permutation{1, 3, 2}); }
inline MarkedPattern pattern_123() { return MarkedPattern::classical(Permutation{1, 2, 3}); }

// 1^ 2 ... (p+1)
inline MarkedPattern increasing_hat_first(int p) {
  return MarkedPattern::hatted(Permutation::identity(static_cast<std::size_t>(p) + 1), 1);
}

// 1 2 ... p^
inline MarkedPattern increasing_hat_last(int p) {
  return MarkedPattern::hatted(Permutation::identity(static_cast<std::size_t>(p)),
                               static_cast<std::size_t>(p));
}

// (p-1)(p-2)...2 1^ p
inline MarkedPattern decreasing_then_max(int p) {
  std::vector<int> v;
  for (int x = p - 1; x >= 1; --x) v.push_back(x);
  v.push_back(p);
  return MarkedPattern::hatted(Permutation(std::move(v)), static_cast<std::size_t>(p) - 1);
}

// 1 p^ (p-1) ... 2
inline MarkedPattern one_then_decreasing(int p) {
  std::vector<int> v{1};
  for (int x = p; x >= 2; --x) v.push_back(x);
  return MarkedPattern::hatted(Permutation(std::move(v)), p >= 2 ? 2 : 1);
}

inline MarkedPattern pattern_2hat13() { return MarkedPattern::hatted(Permutation{2, 1, 3}, 2); }

inline std::vector<Permutation> all_permutations(int n) {
  return enumerate_class({n, {}});
}

inline std::vector<Permutation> filter(const std::vector<Permutation>& in, const MarkedPattern& p) {
  std::vector<Permutation> out;
  for (const auto& x : in) {
    if (avoids(x.values(), p)) out.push_back(x);
  }
  return out;
}

template <typename Set>
std::string describe_difference(const Set& a, const Set& b) {
  for (const auto& x : a) {
    if (!b.count(x)) return "only in first: " + x;
  }
  for (const auto& x : b) {
    if (!a.count(x)) return "only in second: " + x;
  }
  return {};
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Counting identities

inline CheckResult check_count(const std::string& name, int n_lo, int n_hi,
                               const std::vector<MarkedPattern>& constraints,
                               std::uint64_t (*expected)(int), int shift) {
  CheckResult r{name};
  for (int n = n_lo; n <= n_hi; ++n) {
    const auto got = count_class({n, constraints});
    const auto want = expected(n + shift);
    ++r.cases;
    if (got != want) {
      r.fail("n=" + std::to_string(n) + ": class has " + std::to_string(got) + ", expected " +
             std::to_string(want));
    }
  }
  return r;
}

inline CheckResult check_count_132(int n_max) {
  return check_count("|S_n(132)| = Catalan(n)", 0, n_max, {detail::pattern_132()}, catalan, 0);
}

inline CheckResult check_count_motzkin_class(int n_max) {
  return check_count("|S_n(132, 2^13)| = Motzkin(n-1)", 1, n_max,
                     {detail::pattern_132(), detail::pattern_2hat13()}, motzkin_number, -1);
}

inline CheckResult check_count_catalan_class(int n_max) {
  return check_count("|S_n(132, ^123)| = Catalan(n-1)", 1, n_max,
                     {detail::pattern_132(), detail::increasing_hat_first(2)}, catalan, -1);
}

inline CheckResult check_count_fine_class(int n_max) {
  return check_count("|S_n(132, ^12)| = Fine(n)", 0, n_max,
                     {detail::pattern_132(), detail::increasing_hat_first(1)}, fine_number, 0);
}

// #{Dyck n-paths with `bad(w)` false} = expected(n + shift).
template <typename Bad>
CheckResult check_dyck_count(const std::string& name, int n_lo, int n_hi, Bad bad,
                             std::uint64_t (*expected)(int), int shift) {
  CheckResult r{name};
  for (int n = n_lo; n <= n_hi; ++n) {
    std::uint64_t c = 0;
    for (const auto& w : enumerate_dyck(n)) c += !bad(w);
    ++r.cases;
    if (c != expected(n + shift)) {
      r.fail("n=" + std::to_string(n) + ": " + std::to_string(c) + " paths, expected " +
             std::to_string(expected(n + shift)));
    }
  }
  return r;
}

inline CheckResult check_dyck_no_peak_h2(int n_max) {
  return check_dyck_count(
      "#Dyck(n) with no peak at height 2 = Catalan(n-1)", 1, n_max,
      [](const DyckWord& w) { return has_peak_at_height(w, 2); }, catalan, -1);
}

inline CheckResult check_dyck_no_udu(int n_max) {
  return check_dyck_count(
      "#Dyck(n) with no udu = Motzkin(n-1)", 1, n_max,
      [](const DyckWord& w) { return contains_u_dpow_u(w, 3); }, motzkin_number, -1);
}

inline CheckResult check_path_counts(int n_max) {
  CheckResult r{"#Dyck(n) = Catalan(n), #Motzkin(n) = Motzkin(n)"};
  for (int n = 0; n <= n_max; ++n) {
    r.cases += 2;
    if (enumerate_dyck(n).size() != catalan(n)) r.fail("Dyck count wrong at n=" + std::to_string(n));
    if (enumerate_motzkin(n).size() != motzkin_number(n)) {
      r.fail("Motzkin count wrong at n=" + std::to_string(n));
    }
  }
  return r;
}

// Catalan(n) = 2 Fine(n) + Fine(n-1).
inline CheckResult check_fine_identity(int n_max) {
  CheckResult r{"Catalan(n) = 2 Fine(n) + Fine(n-1)"};
  for (int n = 2; n <= n_max; ++n) {
    ++r.cases;
    if (catalan(n) != 2 * fine_number(n) + fine_number(n - 1)) {
      r.fail("n=" + std::to_string(n));
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Bijections

// phi maps S_n(132, 1^2..(p+1)) onto the Dyck n-paths without a peak at
// height p; for p > n the class is all of S_n(132).
inline CheckResult check_phi_peak_heights(int n_max) {
  CheckResult r{"phi: S_n(132, ^12..(p+1)) onto Dyck paths with no peak at height p"};
  for (int n = 1; n <= n_max; ++n) {
    const auto base = enumerate_class({n, {detail::pattern_132()}});
    const auto paths = enumerate_dyck(n);
    for (int p = 1; p <= n; ++p) {
      std::set<std::string> image, target;
      for (const auto& x : detail::filter(base, detail::increasing_hat_first(p))) {
        image.insert(phi(x).str());
      }
      for (const auto& w : paths) {
        if (!has_peak_at_height(w, p)) target.insert(w.str());
      }
      ++r.cases;
      if (image != target) {
        r.fail("n=" + std::to_string(n) + " p=" + std::to_string(p) + ": " +
               detail::describe_difference(image, target));
      }
    }
    for (int p = n + 1; p <= n + 2; ++p) {
      ++r.cases;
      if (detail::filter(base, detail::increasing_hat_first(p)).size() != base.size()) {
        r.fail("n=" + std::to_string(n) + " p=" + std::to_string(p) + ": class is not S_n(132)");
      }
    }
  }
  return r;
}

// theta maps S_n(132, (p-1)..2 1^ p) onto the Dyck n-paths without the factor
// u d^(p-2) u, for p in [p_lo, min(p_hi, n)].
inline CheckResult check_theta_udu_factor(int n_max, int p_lo = 3, int p_hi = 1 << 20) {
  CheckResult r{"theta: S_n(132, (p-1)..21^p) onto Dyck paths with no u d^(p-2) u"};
  for (int n = 1; n <= n_max; ++n) {
    const auto base = enumerate_class({n, {detail::pattern_132()}});
    const auto paths = enumerate_dyck(n);
    for (int p = p_lo; p <= std::min(p_hi, n); ++p) {
      std::set<std::string> image, target;
      for (const auto& x : detail::filter(base, detail::decreasing_then_max(p))) {
        image.insert(theta(x.values()).unlabeled().str());
      }
      for (const auto& w : paths) {
        if (!contains_u_dpow_u(w, p)) target.insert(w.str());
      }
      ++r.cases;
      if (image != target) {
        // Name a witness permutation: in S_n(132) where class membership and
        // the factor test disagree.
        std::string witness;
        const auto pat = detail::decreasing_then_max(p);
        for (const auto& x : base) {
          const bool in_class = avoids(x.values(), pat);
          const bool no_factor = !contains_u_dpow_u(theta(x.values()).unlabeled(), p);
          if (in_class != no_factor) {
            witness = to_string(x) + (in_class ? " (in class, image has factor)"
                                               : " (outside class, image has no factor)");
            break;
          }
        }
        r.fail("n=" + std::to_string(n) + " p=" + std::to_string(p) + ": image " +
               std::to_string(image.size()) + " vs " + std::to_string(target.size()) +
               " paths; witness " + witness);
      }
    }
  }
  return r;
}

// psi is a bijection Motzkin(len) -> S_(len+1)(132, 2^13); both round trips.
inline CheckResult check_psi_bijection(int len_max) {
  CheckResult r{"psi: Motzkin(n) <-> S_(n+1)(132, 2^13)"};
  for (int len = 0; len <= len_max; ++len) {
    const auto cls = enumerate_class({len + 1, {detail::pattern_132(), detail::pattern_2hat13()}});
    const std::set<Permutation> members(cls.begin(), cls.end());
    std::set<Permutation> image;
    for (const auto& m : enumerate_motzkin(len)) {
      ++r.cases;
      const auto p = psi(m);
      if (!members.count(p)) {
        r.fail("psi(" + m.str() + ") = " + to_string(p) + " is outside the class");
        continue;
      }
      image.insert(p);
      if (psi_inverse(p) != m) r.fail("psi_inverse(psi(" + m.str() + ")) != input");
    }
    if (image.size() != members.size()) {
      r.fail("len=" + std::to_string(len) + ": image size " + std::to_string(image.size()) +
             " vs class size " + std::to_string(members.size()));
    }
    for (const auto& p : cls) {
      ++r.cases;
      if (psi(psi_inverse(p)) != p) r.fail("psi(psi_inverse(" + to_string(p) + ")) != input");
    }
  }
  return r;
}

// Simion-Schmidt maps S_n(132, 12..p^) onto S_n(123, 1 p^ (p-1)..2).
inline CheckResult check_simion_schmidt_classes(int n_max, int p_max) {
  CheckResult r{"Simion-Schmidt: S_n(132, 12..p^) onto S_n(123, 1p^(p-1)..2)"};
  for (int n = 1; n <= n_max; ++n) {
    const auto s132 = enumerate_class({n, {detail::pattern_132()}});
    const auto s123 = enumerate_class({n, {detail::pattern_123()}});
    for (const auto& x : s132) {
      ++r.cases;
      if (simion_schmidt_inverse(simion_schmidt(x)) != x) r.fail("round trip fails on " + to_string(x));
    }
    for (int p = 2; p <= p_max; ++p) {
      std::set<Permutation> image;
      for (const auto& x : detail::filter(s132, detail::increasing_hat_last(p))) {
        image.insert(simion_schmidt(x));
      }
      const auto target_list = detail::filter(s123, detail::one_then_decreasing(p));
      const std::set<Permutation> target(target_list.begin(), target_list.end());
      ++r.cases;
      if (image != target) {
        r.fail("n=" + std::to_string(n) + " p=" + std::to_string(p) + ": image " +
               std::to_string(image.size()) + " vs " + std::to_string(target.size()));
      }
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Structural lemmas

// S_n(132, 2^13) is exactly the 132-avoiders without a factor a(a+1).
inline CheckResult check_factor_free_class(int n_max) {
  CheckResult r{"S_n(132, 2^13) = S_n(132) without factor a(a+1)"};
  for (int n = 0; n <= n_max; ++n) {
    const auto hatted = enumerate_class({n, {detail::pattern_132(), detail::pattern_2hat13()}});
    std::vector<Permutation> factor_free;
    for (const auto& x : enumerate_class({n, {detail::pattern_132()}})) {
      if (!has_adjacent_consecutive_factor(x.values())) factor_free.push_back(x);
    }
    ++r.cases;
    if (hatted != factor_free) {
      r.fail("n=" + std::to_string(n) + ": " + std::to_string(hatted.size()) + " vs " +
             std::to_string(factor_free.size()));
    }
  }
  return r;
}

// Peaks of phi(pi) are in order one-to-one with the left-to-right minima of pi;
// the minimum pi_i yields a peak at height h_i + 1 just before its down step.
inline CheckResult check_phi_peaks_minima(int n_max) {
  CheckResult r{"peaks of phi(pi) <-> LTR minima, height h_i + 1"};
  for (int n = 1; n <= n_max; ++n) {
    for (const auto& x : enumerate_class({n, {detail::pattern_132()}})) {
      ++r.cases;
      const auto w = phi(x);
      const auto peaks = stats(w).peaks;
      const auto d = ltrm_decompose(x.values());
      std::vector<std::size_t> down_index;
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == Step::Down) down_index.push_back(i);
      }
      bool ok = peaks.size() == d.ltrm_indices.size();
      for (std::size_t k = 0; ok && k < peaks.size(); ++k) {
        const std::size_t i = d.ltrm_indices[k] - 1;
        int larger_after = 0;
        for (std::size_t j = i + 1; j < x.size(); ++j) larger_after += x[j] > x[i];
        ok = peaks[k].height == larger_after + 1 && peaks[k].position == down_index[i];
      }
      if (!ok) r.fail("pi = " + to_string(x));
    }
  }
  return r;
}

// Among permutations whose blocks satisfy the LTRM conditions, 132-avoidance
// is equivalent to pairwise non-overlapping blocks.
inline CheckResult check_overlap_criterion(int n_max) {
  CheckResult r{"LTRM-conditioned pi avoids 132 iff blocks do not overlap"};
  for (int n = 0; n <= n_max; ++n) {
    for (const auto& x : detail::all_permutations(n)) {
      if (!satisfies_ltrm_conditions(ltrm_decompose(x.values()))) continue;
      ++r.cases;
      if (avoids_132(x.values()) == blocks_overlap(geometric_representation(x))) {
        r.fail("pi = " + to_string(x));
      }
    }
  }
  return r;
}

// Every theta image of a 132-avoider satisfies properties (i)-(iii), and the
// unlabelled word determines the labels.
inline CheckResult check_theta_properties(int n_max) {
  CheckResult r{"theta images: well matched, nested, peaks u_k d_k, valleys d_(k-1) u_k"};
  for (int n = 0; n <= n_max; ++n) {
    for (const auto& x : enumerate_class({n, {detail::pattern_132()}})) {
      ++r.cases;
      const auto path = theta(x.values());
      if (!check_properties(path).all()) r.fail("properties fail for " + to_string(x));
      if (theta_labels(path.unlabeled()) != path) r.fail("relabelling differs for " + to_string(x));
      if (theta_inverse(path.unlabeled()) != x) r.fail("theta_inverse fails for " + to_string(x));
    }
  }
  return r;
}

inline CheckResult check_phi_routes(int n_max) {
  CheckResult r{"phi non-recursive = phi recursive, phi_inverse round trip"};
  for (int n = 0; n <= n_max; ++n) {
    for (const auto& x : enumerate_class({n, {detail::pattern_132()}})) {
      ++r.cases;
      const auto w = phi(x);
      if (w != phi_recursive(x)) r.fail("routes differ on " + to_string(x));
      if (phi_inverse(w) != x) r.fail("phi_inverse fails on " + to_string(x));
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Hatted vs barred

// For every tau of the given lengths and every marked index, the hatted and
// barred classes agree up to n_max exactly when the neighbour condition holds.
inline CheckResult check_hat_bar_all(int k_lo, int k_hi, int n_max) {
  CheckResult r{"S_n(tau^_(i)) = S_n(tau-_(i)) iff neighbour condition"};
  for (int k = k_lo; k <= k_hi; ++k) {
    for (const auto& tau : detail::all_permutations(k)) {
      for (std::size_t i = 1; i <= tau.size(); ++i) {
        ++r.cases;
        if (!check_prop_equ(tau, i, n_max)) {
          r.fail("tau = " + to_string(tau) + ", i = " + std::to_string(i));
        }
      }
    }
  }
  return r;
}

inline std::vector<Permutation> class_members(int n, const MarkedPattern& p) {
  return enumerate_class({n, {p}});
}

// Slots with equal remainders give equal hatted classes.
inline CheckResult check_equal_remainders(int k_max, int n_max) {
  CheckResult r{"equal remainders give equal hatted classes"};
  for (int k = 2; k <= k_max; ++k) {
    for (const auto& tau : detail::all_permutations(k)) {
      for (std::size_t i = 1; i <= tau.size(); ++i) {
        const auto a = MarkedPattern::hatted(tau, i);
        for (std::size_t j = i + 1; j <= tau.size(); ++j) {
          const auto b = MarkedPattern::hatted(tau, j);
          if (a.remainder() != b.remainder()) continue;
          for (int n = 0; n <= n_max; ++n) {
            ++r.cases;
            if (class_members(n, a) != class_members(n, b)) {
              r.fail(to_string(a) + " vs " + to_string(b) + " at n=" + std::to_string(n));
            }
          }
        }
      }
    }
  }
  return r;
}

// Reverse, complement and inverse carry S_n(tau^_(i)) onto the class of the
// transformed marked pattern; plus the three cardinality chains for 1432.
inline CheckResult check_symmetry_images(int k_max, int n_max) {
  CheckResult r{"trivial symmetries carry hatted classes onto hatted classes"};
  for (int k = 2; k <= k_max; ++k) {
    for (const auto& tau : detail::all_permutations(k)) {
      for (std::size_t i = 1; i <= tau.size(); ++i) {
        const auto pat = MarkedPattern::hatted(tau, i);
        for (Symmetry chi : {Symmetry::Reverse, Symmetry::Complement, Symmetry::Inverse}) {
          const auto image_pattern = apply(chi, pat);
          for (int n = 0; n <= n_max; ++n) {
            ++r.cases;
            std::set<Permutation> image;
            for (const auto& x : class_members(n, pat)) image.insert(apply(chi, x));
            const auto target = class_members(n, image_pattern);
            if (image != std::set<Permutation>(target.begin(), target.end())) {
              r.fail(to_string(pat) + " -> " + to_string(image_pattern) + " at n=" + std::to_string(n));
            }
          }
        }
      }
    }
  }
  const std::vector<std::vector<const char*>> chains = {
      {"143^2", "^2341", "2^341", "23^41"},
      {"143^2", "412^3", "41^23", "4^123"},
      {"4^123", "^2341", "2^341", "23^41"},
  };
  for (const auto& chain : chains) {
    for (int n = 1; n <= n_max; ++n) {
      const auto first = count_class({n, {parse_pattern(chain.front())}});
      for (const char* text : chain) {
        ++r.cases;
        if (count_class({n, {parse_pattern(text)}}) != first) {
          r.fail(std::string("chain breaks at ") + text + ", n=" + std::to_string(n));
        }
      }
    }
  }
  return r;
}

// Every run-embedded image of S_n (runs of length |tau|) avoids tau^_(i).
inline CheckResult check_run_embedding_avoids(const MarkedPattern& pat, int n_max) {
  CheckResult r{"run_embedding(S_n, " + std::to_string(pat.size()) + ") inside S(" + to_string(pat) + ")"};
  const int k = static_cast<int>(pat.size());
  for (int n = 1; n <= n_max; ++n) {
    for (const auto& x : detail::all_permutations(n)) {
      ++r.cases;
      const auto image = run_embedding(x, k);
      if (!avoids_hatted(image.values(), pat)) {
        r.fail("f(" + to_string(x) + ") = " + to_string(image) + " contains " + to_string(pat));
      }
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Generating tree

inline CheckResult check_eco(int depth) {
  CheckResult r{"generating tree: Motzkin level sizes, rule (k) -> (k+1)(k-1)..(1), levels = classes"};
  const auto levels = expand_tree(depth);
  if (depth >= 2) {
    ++r.cases;
    const auto& root = levels[0][0];
    if (root.perm != Permutation{2, 1} || levels[1].size() != 2 ||
        levels[1][0].perm != Permutation{3, 2, 1} || levels[1][1].perm != Permutation{2, 1, 3}) {
      r.fail("root is not 21 with children 321, 213");
    }
  }
  for (int level = 1; level <= depth; ++level) {
    const auto& nodes = levels[static_cast<std::size_t>(level) - 1];
    ++r.cases;
    if (nodes.size() != motzkin_number(level)) {
      r.fail("level " + std::to_string(level) + " has " + std::to_string(nodes.size()) + " nodes");
    }
    for (const auto& node : nodes) {
      ++r.cases;
      if (node.active_sites.empty() || node.active_sites.front() != 1) {
        r.fail("site 1 inactive at " + to_string(node.perm));
      }
      if (!verify_succession(node)) r.fail("succession fails at " + to_string(node.perm));
    }
    std::vector<Permutation> perms;
    for (const auto& node : nodes) perms.push_back(node.perm);
    std::sort(perms.begin(), perms.end());
    ++r.cases;
    if (perms != enumerate_class({level + 1, {detail::pattern_132(), detail::pattern_2hat13()}})) {
      r.fail("level " + std::to_string(level) + " differs from S_" + std::to_string(level + 1) +
             "(132, 2^13)");
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Named suites, as exposed by the command line.

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"cat", "udu",  "fac",  "mot",  "equ",   "eco",
                                                 "sta", "ss",   "l132", "theta", "phi", "counts",
                                                 "hat1", "hat2", "embed"};
  return names;
}

// Runs the suite `name` with size bound n. Throws InvalidInput on an unknown
// name.
inline std::vector<CheckResult> run_suite(const std::string& name, int n) {
  if (name == "cat") return {check_phi_peak_heights(n)};
  if (name == "udu") return {check_theta_udu_factor(n)};
  if (name == "fac") return {check_factor_free_class(n)};
  if (name == "mot") return {check_psi_bijection(n)};
  if (name == "equ") return {check_hat_bar_all(2, 4, n)};
  if (name == "eco") return {check_eco(n)};
  if (name == "sta") return {check_phi_peaks_minima(n)};
  if (name == "ss") return {check_simion_schmidt_classes(n, 5)};
  if (name == "l132") return {check_overlap_criterion(n)};
  if (name == "theta") return {check_theta_properties(n)};
  if (name == "phi") return {check_phi_routes(n)};
  if (name == "counts") {
    return {check_count_132(n),         check_count_motzkin_class(n), check_count_catalan_class(n),
            check_count_fine_class(n),  check_dyck_no_peak_h2(n),     check_dyck_no_udu(n),
            check_path_counts(n),       check_fine_identity(n)};
  }
  if (name == "hat1") return {check_equal_remainders(4, n)};
  if (name == "hat2") return {check_symmetry_images(3, n)};
  if (name == "embed") {
    return {check_run_embedding_avoids(MarkedPattern::hatted(Permutation{3, 1, 2}, 2), n),
            check_run_embedding_avoids(MarkedPattern::hatted(Permutation{2, 1, 3}, 2), n)};
  }
  throw InvalidInput("unknown suite '" + name + "'");
}

}  // namespace hatperm
