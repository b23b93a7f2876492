#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "ttree/types.hpp"

namespace ttree {

// A rooted tree whose nodes are labeled by types. The children of a node are
// grouped into T-lists, one per component type, kept in increasing type order.
// Only non-empty T-lists are stored, so a tree does not need a problem to exist.
class TTree {
 public:
  struct TList {
    TypeId type;
    std::vector<TTree> trees;

    friend bool operator==(const TList&, const TList&) = default;
  };

  explicit TTree(TypeId label) : label_(label) {}

  // Children are grouped by label with a stable sort, so the relative order of
  // same-typed children is preserved.
  TTree(TypeId label, std::vector<TTree> children) : label_(label) {
    std::stable_sort(children.begin(), children.end(),
                     [](const TTree& a, const TTree& b) { return a.label_ < b.label_; });
    for (auto& child : children) append(std::move(child));
  }

  TypeId label() const noexcept { return label_; }
  bool is_leaf() const noexcept { return tlists_.empty(); }

  // Non-empty T-lists in increasing type order.
  std::span<const TList> tlists() const noexcept { return tlists_; }

  // The T-list of the given component type; empty if there is none.
  std::span<const TTree> tlist(TypeId type) const noexcept {
    auto it = find_list(type);
    if (it == tlists_.end() || it->type != type) return {};
    return it->trees;
  }

  std::size_t child_count() const noexcept {
    std::size_t n = 0;
    for (const auto& l : tlists_) n += l.trees.size();
    return n;
  }

  std::size_t node_count() const noexcept {
    std::size_t n = 1;
    for (const auto& l : tlists_)
      for (const auto& c : l.trees) n += c.node_count();
    return n;
  }

  std::size_t height() const noexcept {
    std::size_t h = 0;
    for (const auto& l : tlists_)
      for (const auto& c : l.trees) h = std::max(h, c.height() + 1);
    return h;
  }

  // Appends a child at the end of its T-list and returns it.
  TTree& append(TTree child) {
    auto it = find_list(child.label_);
    if (it == tlists_.end() || it->type != child.label_) {
      it = tlists_.insert(it, TList{child.label_, {}});
    }
    it->trees.push_back(std::move(child));
    return it->trees.back();
  }

  // Mutable access to an existing child.
  TTree& child(TypeId type, std::size_t position) { return mutable_list(type).at(position); }
  const TTree& child(TypeId type, std::size_t position) const { return tlist(type)[position]; }

  // Removes the last member of the T-list of `type`. The list must be non-empty.
  void pop_back(TypeId type) {
    auto it = find_list(type);
    it->trees.pop_back();
    if (it->trees.empty()) tlists_.erase(it);
  }

  // Mutable T-list; must exist.
  std::vector<TTree>& mutable_list(TypeId type) {
    auto it = find_list(type);
    if (it == tlists_.end() || it->type != type) throw PreconditionError("no such T-list");
    return it->trees;
  }

  std::span<TList> mutable_tlists() noexcept { return tlists_; }

  friend bool operator==(const TTree&, const TTree&) = default;

 private:
  std::vector<TList>::iterator find_list(TypeId type) {
    return std::lower_bound(tlists_.begin(), tlists_.end(), type,
                            [](const TList& l, TypeId t) { return l.type < t; });
  }
  std::vector<TList>::const_iterator find_list(TypeId type) const {
    return std::lower_bound(tlists_.begin(), tlists_.end(), type,
                            [](const TList& l, TypeId t) { return l.type < t; });
  }

  TypeId label_;
  std::vector<TList> tlists_;
};

}  // namespace ttree
