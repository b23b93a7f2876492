#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "ttree/error.hpp"
#include "ttree/tree.hpp"

namespace ttree {

enum class TreeOrdering { kLess, kEqual, kGreater };

// Counts node-pair comparisons, for cost measurements.
struct CompareStats {
  std::uint64_t comparisons = 0;
};

namespace detail {

inline TreeOrdering compare_lists(std::span<const TTree> a, std::span<const TTree> b, CompareStats* stats);

// Same-root order. Component types are visited in type order; for each, the
// shorter T-list is smaller and equal-length T-lists compare lexicographically.
inline TreeOrdering compare_same_root(const TTree& a, const TTree& b, CompareStats* stats) {
  if (stats) ++stats->comparisons;
  auto la = a.tlists();
  auto lb = b.tlists();
  std::size_t i = 0, j = 0;
  while (i < la.size() || j < lb.size()) {
    // A type present on one side only: the other side's list is empty.
    if (j == lb.size() || (i < la.size() && la[i].type < lb[j].type)) return TreeOrdering::kGreater;
    if (i == la.size() || lb[j].type < la[i].type) return TreeOrdering::kLess;
    if (auto r = compare_lists(la[i].trees, lb[j].trees, stats); r != TreeOrdering::kEqual) return r;
    ++i;
    ++j;
  }
  return TreeOrdering::kEqual;
}

inline TreeOrdering compare_lists(std::span<const TTree> a, std::span<const TTree> b, CompareStats* stats) {
  if (a.size() != b.size()) return a.size() < b.size() ? TreeOrdering::kLess : TreeOrdering::kGreater;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (auto r = compare_same_root(a[k], b[k], stats); r != TreeOrdering::kEqual) return r;
  }
  return TreeOrdering::kEqual;
}

}  // namespace detail

// Three-valued total order over trees with the same root type.
// Throws TypeMismatchError when the root labels differ.
inline TreeOrdering compare(const TTree& a, const TTree& b, CompareStats* stats = nullptr) {
  if (a.label() != b.label()) throw TypeMismatchError("compare: trees have different root types");
  return detail::compare_same_root(a, b, stats);
}

// True iff a precedes or equals b. A leaf precedes every tree of its type.
inline bool less(const TTree& a, const TTree& b, CompareStats* stats = nullptr) {
  return compare(a, b, stats) != TreeOrdering::kGreater;
}

// Extension to arbitrary root types: root type order first. Used for sorting
// mixed output, never inside canonicity checks.
inline TreeOrdering compare_any(const TTree& a, const TTree& b) {
  if (a.label() != b.label()) return a.label() < b.label() ? TreeOrdering::kLess : TreeOrdering::kGreater;
  return detail::compare_same_root(a, b, nullptr);
}

// Strict weak ordering for std::set / std::sort.
struct TreeLess {
  bool operator()(const TTree& a, const TTree& b) const { return compare_any(a, b) == TreeOrdering::kLess; }
};

// True iff every T-list at every node is sorted.
inline bool is_canonical(const TTree& tree, CompareStats* stats = nullptr) {
  for (const auto& l : tree.tlists()) {
    for (const auto& c : l.trees)
      if (!is_canonical(c, stats)) return false;
    for (std::size_t j = 0; j + 1 < l.trees.size(); ++j)
      if (!less(l.trees[j], l.trees[j + 1], stats)) return false;
  }
  return true;
}

// Minimal representative of the isomorphism class: canonicalizes children,
// then stably sorts each T-list.
inline TTree canonicalize(TTree tree) {
  for (auto& l : tree.mutable_tlists()) {
    for (auto& c : l.trees) c = canonicalize(std::move(c));
    std::stable_sort(l.trees.begin(), l.trees.end(), [](const TTree& a, const TTree& b) {
      return detail::compare_same_root(a, b, nullptr) == TreeOrdering::kLess;
    });
  }
  return tree;
}

inline bool isomorphic(const TTree& a, const TTree& b) {
  return a.label() == b.label() && canonicalize(a) == canonicalize(b);
}

// Isomorphism by direct search for a child bijection, without using the
// order. Exponential in the worst case; meant for small trees.
inline bool isomorphic_oracle(const TTree& a, const TTree& b) {
  if (a.label() != b.label() || a.child_count() != b.child_count()) return false;
  std::vector<const TTree*> xs, ys;
  for (const auto& l : a.tlists())
    for (const auto& c : l.trees) xs.push_back(&c);
  for (const auto& l : b.tlists())
    for (const auto& c : l.trees) ys.push_back(&c);
  std::vector<bool> used(ys.size(), false);
  auto match = [&](auto& self, std::size_t i) -> bool {
    if (i == xs.size()) return true;
    for (std::size_t j = 0; j < ys.size(); ++j) {
      if (used[j] || !isomorphic_oracle(*xs[i], *ys[j])) continue;
      used[j] = true;
      if (self(self, i + 1)) return true;
      used[j] = false;
    }
    return false;
  };
  return match(match, 0);
}

}  // namespace ttree
