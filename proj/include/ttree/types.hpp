#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ttree/error.hpp"

namespace ttree {

// A type symbol, identified by its rank in the total order over types.
struct TypeId {
  std::uint32_t rank = 0;

  friend constexpr auto operator<=>(TypeId, TypeId) = default;
};

// Ordered set of type names. Rank i is the i-th name; rank order is the type order.
class TypeSystem {
 public:
  TypeSystem() = default;

  // Names in the given order. Throws ValidationError on duplicates.
  explicit TypeSystem(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::uint32_t i = 0; i < names_.size(); ++i) {
      if (!index_.emplace(names_[i], TypeId{i}).second) {
        throw ValidationError("duplicate type '" + names_[i] + "'");
      }
    }
  }

  // Type system whose order is the lexicographic order of the (deduplicated) names.
  static TypeSystem sorted(std::vector<std::string> names) {
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());
    return TypeSystem(std::move(names));
  }

  std::size_t size() const noexcept { return names_.size(); }
  bool contains(TypeId t) const noexcept { return t.rank < names_.size(); }

  std::optional<TypeId> find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  TypeId id(std::string_view name) const {
    if (auto t = find(name)) return *t;
    throw UnknownTypeError("unknown type '" + std::string(name) + "'");
  }

  const std::string& name(TypeId t) const {
    if (!contains(t)) throw UnknownTypeError("unknown type rank " + std::to_string(t.rank));
    return names_[t.rank];
  }

  const std::vector<std::string>& names() const noexcept { return names_; }

  friend bool operator==(const TypeSystem& a, const TypeSystem& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, TypeId> index_;
};

}  // namespace ttree
