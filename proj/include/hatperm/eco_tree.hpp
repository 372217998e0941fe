#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hatperm/bijections.hpp"
#include "hatperm/error.hpp"
#include "hatperm/permutation.hpp"

namespace hatperm {

// Label rewriting of a generating tree: the root label and, for each label,
// the ordered labels of the children.
struct SuccessionRule {
  int root_label;
  std::vector<int> (*produce)(int label);
};

// (2); (k) -> (k+1)(k-1)(k-2)...(2)(1)
inline SuccessionRule motzkin_rule() {
  return {2, [](int k) {
            std::vector<int> out;
            out.reserve(static_cast<std::size_t>(k));
            out.push_back(k + 1);
            for (int j = k - 1; j >= 1; --j) out.push_back(j);
            return out;
          }};
}

// Inserts n+1 into gap `site` of p (gaps numbered 1..n+1 from the left).
inline Permutation insert_max(const Permutation& p, std::size_t site) {
  if (site < 1 || site > p.size() + 1) {
    throw InvalidInput("insert_max: site " + std::to_string(site) + " out of range 1.." +
                       std::to_string(p.size() + 1));
  }
  std::vector<int> v(p.begin(), p.end());
  v.insert(v.begin() + static_cast<std::ptrdiff_t>(site - 1), static_cast<int>(p.size()) + 1);
  return Permutation::unchecked(std::move(v));
}

// Membership in the class that codes the tree: 132-avoiding with no factor
// a(a+1).
inline bool in_motzkin_class(std::span<const int> p) {
  return avoids_132(p) && !has_adjacent_consecutive_factor(p);
}

// Sites where inserting the new maximum stays inside the class, in order.
inline std::vector<std::size_t> active_sites(const Permutation& p) {
  std::vector<std::size_t> sites;
  for (std::size_t s = 1; s <= p.size() + 1; ++s) {
    if (in_motzkin_class(insert_max(p, s).values())) sites.push_back(s);
  }
  return sites;
}

struct TreeNode {
  Permutation perm;
  std::vector<std::size_t> active_sites;
  int label = 0;
  // Index of the parent within the previous level; empty for the root.
  std::optional<std::size_t> parent;
};

inline TreeNode make_node(Permutation p, std::optional<std::size_t> parent = std::nullopt) {
  TreeNode node;
  node.active_sites = active_sites(p);
  node.label = static_cast<int>(node.active_sites.size());
  node.perm = std::move(p);
  node.parent = parent;
  return node;
}

inline std::vector<TreeNode> children(const TreeNode& node, std::size_t self_index) {
  std::vector<TreeNode> out;
  out.reserve(node.active_sites.size());
  for (std::size_t s : node.active_sites) out.push_back(make_node(insert_max(node.perm, s), self_index));
  return out;
}

// Levels 1..depth of the tree rooted at 21, each in left-to-right order.
inline std::vector<std::vector<TreeNode>> expand_tree(int depth) {
  std::vector<std::vector<TreeNode>> levels;
  if (depth < 1) return levels;
  levels.push_back({make_node(Permutation{2, 1})});
  for (int level = 2; level <= depth; ++level) {
    const auto& prev = levels.back();
    std::vector<TreeNode> next;
    for (std::size_t i = 0; i < prev.size(); ++i) {
      for (auto& c : children(prev[i], i)) next.push_back(std::move(c));
    }
    levels.push_back(std::move(next));
  }
  return levels;
}

inline std::vector<TreeNode> expand_level(int level) {
  if (level < 1) throw InvalidInput("expand_level: level must be >= 1");
  return std::move(expand_tree(level).back());
}

// The children's labels, read in site order, are what the rule produces.
inline bool verify_succession(const TreeNode& node, const SuccessionRule& rule = motzkin_rule()) {
  if (node.label != static_cast<int>(node.active_sites.size())) return false;
  std::vector<int> labels;
  for (const auto& c : children(node, 0)) labels.push_back(c.label);
  return labels == rule.produce(node.label);
}

}  // namespace hatperm
