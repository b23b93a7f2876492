#pragma once

#include <algorithm>
#include <cstddef>
#include <iterator>
#include <optional>
#include <vector>

#include "ttree/error.hpp"
#include "ttree/order.hpp"
#include "ttree/problem.hpp"
#include "ttree/tree.hpp"

namespace ttree {

// One step from a node to a child: the child's T-list and its position there.
struct PathStep {
  TypeId type;
  std::size_t position;

  friend bool operator==(const PathStep&, const PathStep&) = default;
};

// Where a unit extension adds its leaf: the node reached by `path` from the
// root gets a new `new_leaf_type` leaf at the end of that T-list.
struct ExtensionSite {
  std::vector<PathStep> path;
  TypeId new_leaf_type;

  friend bool operator==(const ExtensionSite&, const ExtensionSite&) = default;
};

inline const TTree& node_at(const TTree& tree, const std::vector<PathStep>& path) {
  const TTree* t = &tree;
  for (const auto& s : path) t = &t->child(s.type, s.position);
  return *t;
}

inline TTree& node_at(TTree& tree, const std::vector<PathStep>& path) {
  TTree* t = &tree;
  for (const auto& s : path) t = &t->child(s.type, s.position);
  return *t;
}

namespace detail {

inline bool height_allows(std::size_t depth, std::optional<std::size_t> bound) { return !bound || depth < *bound; }

inline std::optional<std::size_t> tighter(std::optional<std::size_t> a, std::optional<std::size_t> b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

inline void collect_sites(const TTree& t, const StructuralProblem& p, std::optional<std::size_t> bound,
                          std::vector<PathStep>& path, std::vector<ExtensionSite>& out) {
  if (height_allows(path.size(), bound)) {
    for (const auto& slot : p.component_types(t.label()))
      if (t.tlist(slot.type).size() < slot.max_cardinality) out.push_back({path, slot.type});
  }
  for (const auto& l : t.tlists()) {
    for (std::size_t i = 0; i < l.trees.size(); ++i) {
      path.push_back({l.type, i});
      collect_sites(l.trees[i], p, bound, path, out);
      path.pop_back();
    }
  }
}

// Sites s such that canonical_removal(extend(t, s)) == t. Canonical removal
// follows the first non-empty T-list, then its first non-leaf member, so an
// added leaf is removed again exactly when it lands on that spine.
inline void collect_generating_sites(const TTree& t, const StructuralProblem& p, std::optional<std::size_t> bound,
                                     std::vector<PathStep>& path, std::vector<ExtensionSite>& out) {
  const TTree::TList* first = t.is_leaf() ? nullptr : &t.tlists().front();
  std::size_t first_inner = 0;
  if (first) {
    while (first_inner < first->trees.size() && first->trees[first_inner].is_leaf()) ++first_inner;
  }
  if (height_allows(path.size(), bound)) {
    for (const auto& slot : p.component_types(t.label())) {
      if (first && slot.type > first->type) break;
      if (first && slot.type == first->type && first_inner < first->trees.size()) break;
      if (t.tlist(slot.type).size() < slot.max_cardinality) out.push_back({path, slot.type});
    }
  }
  if (!first) return;
  std::size_t last = std::min(first_inner, first->trees.size() - 1);
  for (std::size_t i = 0; i <= last; ++i) {
    path.push_back({first->type, i});
    collect_generating_sites(first->trees[i], p, bound, path, out);
    path.pop_back();
  }
}

}  // namespace detail

// Every site where a leaf can be added without exceeding a maximal cardinality
// (or the problem's height bound), in preorder and type order.
inline std::vector<ExtensionSite> extension_sites(const TTree& tree, const StructuralProblem& p,
                                                  std::optional<std::size_t> max_height = std::nullopt) {
  std::vector<ExtensionSite> out;
  std::vector<PathStep> path;
  detail::collect_sites(tree, p, detail::tighter(p.max_height(), max_height), path, out);
  return out;
}

// The legal sites whose extension maps back to `tree` under canonical_removal.
// Each tree with two or more nodes has exactly one such parent.
inline std::vector<ExtensionSite> generating_sites(const TTree& tree, const StructuralProblem& p,
                                                   std::optional<std::size_t> max_height = std::nullopt) {
  std::vector<ExtensionSite> out;
  std::vector<PathStep> path;
  detail::collect_generating_sites(tree, p, detail::tighter(p.max_height(), max_height), path, out);
  return out;
}

inline TTree extend(const TTree& tree, const ExtensionSite& site) {
  TTree out = tree;
  node_at(out, site.path).append(TTree(site.new_leaf_type));
  return out;
}

inline std::vector<TTree> unit_extensions(const TTree& tree, const StructuralProblem& p) {
  std::vector<TTree> out;
  for (const auto& s : extension_sites(tree, p)) out.push_back(extend(tree, s));
  return out;
}

// Equals is_canonical(tree) provided `tree` minus the leaf at `site` is
// canonical. Only the T-lists on the path to the new leaf are inspected.
inline bool is_canonical_incremental(const TTree& tree, const ExtensionSite& site, CompareStats* stats = nullptr) {
  const TTree* t = &tree;
  for (const auto& step : site.path) {
    // The subtree on the path strictly grew, so it still follows its left
    // neighbour; only the right neighbour can be out of order.
    auto list = t->tlist(step.type);
    if (step.position + 1 < list.size() && !less(list[step.position], list[step.position + 1], stats))
      return false;
    t = &list[step.position];
  }
  auto list = t->tlist(site.new_leaf_type);
  return list.size() < 2 || less(list[list.size() - 2], list.back(), stats);
}

// Unit extensions that are canonical. Throws PreconditionError if `tree` is not.
inline std::vector<TTree> canonical_unit_extensions(const TTree& tree, const StructuralProblem& p) {
  if (!is_canonical(tree)) throw PreconditionError("canonical_unit_extensions: tree is not canonical");
  std::vector<TTree> out;
  for (const auto& s : extension_sites(tree, p)) {
    TTree next = extend(tree, s);
    if (is_canonical_incremental(next, s)) out.push_back(std::move(next));
  }
  return out;
}

// Removes one terminal node: in the first non-empty T-list, recurse into the
// first non-leaf member if there is one, otherwise drop the last leaf.
inline TTree canonical_removal(TTree tree) {
  if (tree.is_leaf()) throw PreconditionError("canonical_removal: single-node tree");
  TTree* t = &tree;
  while (true) {
    auto& list = t->mutable_tlists().front();
    auto inner = std::find_if(list.trees.begin(), list.trees.end(), [](const TTree& c) { return !c.is_leaf(); });
    if (inner == list.trees.end()) {
      t->pop_back(list.type);
      return tree;
    }
    t = &*inner;
  }
}

enum class EnumerationMode { kAll, kCanonical };

// Lazy depth-first enumeration of the conforming trees of a problem. Each tree
// is generated from its canonical-removal parent only, so every tree is
// produced exactly once without a visited set. In canonical mode only
// canonical extensions are followed; canonical trees are closed under
// canonical removal, so no canonical tree is missed.
class TreeEnumerator {
 public:
  TreeEnumerator(const StructuralProblem& p, EnumerationMode mode,
                 std::optional<std::size_t> max_height = std::nullopt)
      : problem_(p), mode_(mode), bound_(detail::tighter(p.max_height(), max_height)) {
    if (p.cyclic() && !bound_) throw ValidationError("cyclic problem needs a height bound to enumerate");
  }

  std::optional<TTree> next() {
    if (!started_) {
      started_ = true;
      push(TTree(problem_.root()));
      return stack_.back().tree;
    }
    while (!stack_.empty()) {
      Frame& top = stack_.back();
      if (top.next_site == top.sites.size()) {
        stack_.pop_back();
        continue;
      }
      const ExtensionSite& site = top.sites[top.next_site++];
      TTree child = extend(top.tree, site);
      if (mode_ == EnumerationMode::kCanonical && !is_canonical_incremental(child, site)) continue;
      push(std::move(child));
      return stack_.back().tree;
    }
    return std::nullopt;
  }

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = TTree;
    using difference_type = std::ptrdiff_t;
    using pointer = const TTree*;
    using reference = const TTree&;

    iterator() = default;
    explicit iterator(TreeEnumerator* e) : e_(e) { ++*this; }

    reference operator*() const { return *current_; }
    pointer operator->() const { return &*current_; }
    iterator& operator++() {
      current_ = e_->next();
      if (!current_) e_ = nullptr;
      return *this;
    }
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& a, const iterator& b) { return a.e_ == b.e_; }

   private:
    TreeEnumerator* e_ = nullptr;
    std::optional<TTree> current_;
  };

  iterator begin() { return iterator(this); }
  iterator end() { return iterator(); }

 private:
  struct Frame {
    TTree tree;
    std::vector<ExtensionSite> sites;
    std::size_t next_site = 0;
  };

  void push(TTree t) {
    auto sites = generating_sites(t, problem_, bound_);
    stack_.push_back(Frame{std::move(t), std::move(sites), 0});
  }

  StructuralProblem problem_;
  EnumerationMode mode_;
  std::optional<std::size_t> bound_;
  bool started_ = false;
  std::vector<Frame> stack_;
};

inline TreeEnumerator enumerate_all(const StructuralProblem& p, std::optional<std::size_t> max_height = std::nullopt) {
  return TreeEnumerator(p, EnumerationMode::kAll, max_height);
}

inline TreeEnumerator enumerate_canonical(const StructuralProblem& p,
                                          std::optional<std::size_t> max_height = std::nullopt) {
  return TreeEnumerator(p, EnumerationMode::kCanonical, max_height);
}

// Drains an enumerator into a vector.
inline std::vector<TTree> collect(TreeEnumerator e, std::optional<std::size_t> limit = std::nullopt) {
  std::vector<TTree> out;
  while (!limit || out.size() < *limit) {
    auto t = e.next();
    if (!t) break;
    out.push_back(std::move(*t));
  }
  return out;
}

}  // namespace ttree
