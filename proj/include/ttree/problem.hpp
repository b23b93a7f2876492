#pragma once

#include <cstdint>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "ttree/error.hpp"
#include "ttree/tree.hpp"
#include "ttree/types.hpp"

namespace ttree {

// Unvalidated problem, as read from a file or built by hand.
struct ProblemDescription {
  struct Relation {
    std::string composite;
    std::string component;
    std::uint32_t max_cardinality = 1;
  };

  std::string root;
  std::vector<std::string> types;  // declaration order is the type order
  std::vector<Relation> relations;
};

struct RelationSchema {
  TypeId composite;
  TypeId component;
  std::uint32_t max_cardinality;

  friend bool operator==(const RelationSchema&, const RelationSchema&) = default;
};

// A component type of some composite type together with its maximal cardinality.
struct ComponentSlot {
  TypeId type;
  std::uint32_t max_cardinality;
};

// Validated structural problem: types, composition relations and maximal
// cardinalities. Only validate_problem() constructs one.
class StructuralProblem {
 public:
  const TypeSystem& types() const noexcept { return types_; }
  TypeId root() const noexcept { return root_; }
  const std::vector<RelationSchema>& relations() const noexcept { return relations_; }

  // Component types of `composite` in type order.
  const std::vector<ComponentSlot>& component_types(TypeId composite) const {
    return slots_.at(composite.rank);
  }
  std::size_t component_type_count(TypeId composite) const { return component_types(composite).size(); }

  // Maximal cardinality of the (composite, component) relation, if the relation exists.
  std::optional<std::uint32_t> max_cardinality(TypeId composite, TypeId component) const {
    for (const auto& s : component_types(composite))
      if (s.type == component) return s.max_cardinality;
    return std::nullopt;
  }

  bool cyclic() const noexcept { return cyclic_; }
  // Maximal tree height; required when the type graph has a cycle.
  std::optional<std::size_t> max_height() const noexcept { return max_height_; }

 private:
  friend StructuralProblem validate_problem(const ProblemDescription&, std::optional<std::size_t>);

  TypeSystem types_;
  TypeId root_;
  std::vector<RelationSchema> relations_;
  std::vector<std::vector<ComponentSlot>> slots_;
  bool cyclic_ = false;
  std::optional<std::size_t> max_height_;
};

namespace detail {

inline bool has_cycle(const std::vector<std::vector<ComponentSlot>>& slots) {
  enum class Mark { kNew, kActive, kDone };
  std::vector<Mark> mark(slots.size(), Mark::kNew);
  std::function<bool(std::size_t)> visit = [&](std::size_t v) {
    mark[v] = Mark::kActive;
    for (const auto& s : slots[v]) {
      if (mark[s.type.rank] == Mark::kActive) return true;
      if (mark[s.type.rank] == Mark::kNew && visit(s.type.rank)) return true;
    }
    mark[v] = Mark::kDone;
    return false;
  };
  for (std::size_t v = 0; v < slots.size(); ++v)
    if (mark[v] == Mark::kNew && visit(v)) return true;
  return false;
}

}  // namespace detail

// Checks every invariant of a structural problem and precomputes the component
// type tables. A cyclic type graph is accepted only with an explicit height bound.
inline StructuralProblem validate_problem(const ProblemDescription& raw,
                                          std::optional<std::size_t> max_height = std::nullopt) {
  StructuralProblem p;
  p.types_ = TypeSystem(raw.types);
  if (raw.root.empty()) throw ValidationError("missing root type");
  auto root = p.types_.find(raw.root);
  if (!root) throw ValidationError("root type '" + raw.root + "' is not declared");
  p.root_ = *root;

  p.slots_.assign(p.types_.size(), {});
  for (const auto& r : raw.relations) {
    auto composite = p.types_.find(r.composite);
    auto component = p.types_.find(r.component);
    if (!composite) throw ValidationError("relation uses undeclared type '" + r.composite + "'");
    if (!component) throw ValidationError("relation uses undeclared type '" + r.component + "'");
    if (*component == p.root_) throw ValidationError("root type '" + raw.root + "' cannot be a component");
    if (r.max_cardinality < 1)
      throw ValidationError("relation " + r.composite + "-" + r.component + " needs max >= 1");
    auto& slots = p.slots_[composite->rank];
    for (const auto& s : slots)
      if (s.type == *component)
        throw ValidationError("duplicate relation " + r.composite + "-" + r.component);
    slots.push_back({*component, r.max_cardinality});
    p.relations_.push_back({*composite, *component, r.max_cardinality});
  }
  for (auto& slots : p.slots_)
    std::sort(slots.begin(), slots.end(),
              [](const ComponentSlot& a, const ComponentSlot& b) { return a.type < b.type; });

  p.cyclic_ = detail::has_cycle(p.slots_);
  if (p.cyclic_ && !max_height)
    throw ValidationError("cyclic composition graph requires an explicit height bound");
  p.max_height_ = max_height;
  return p;
}

// Reads the line format
//   root <Type>
//   type <Type>
//   rel <Composite> <Component> max <n>
// with '#' comments. Errors report the 1-based line number as position.
inline ProblemDescription parse_problem(std::string_view text) {
  ProblemDescription d;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  bool have_root = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::vector<std::string> w;
    for (std::string s; words >> s;) w.push_back(s);
    if (w.empty()) continue;
    if (w[0] == "root" && w.size() == 2) {
      if (have_root) throw ParseError("root declared twice", line_no);
      d.root = w[1];
      have_root = true;
    } else if (w[0] == "type" && w.size() == 2) {
      d.types.push_back(w[1]);
    } else if (w[0] == "rel" && w.size() == 5 && w[3] == "max") {
      std::uint32_t n = 0;
      std::size_t used = 0;
      try {
        auto v = std::stoll(w[4], &used);
        if (used != w[4].size() || v < 1 || v > UINT32_MAX) throw std::out_of_range("max");
        n = static_cast<std::uint32_t>(v);
      } catch (const std::logic_error&) {
        throw ParseError("bad cardinality '" + w[4] + "'", line_no);
      }
      d.relations.push_back({w[1], w[2], n});
    } else {
      throw ParseError("unrecognized line '" + line + "'", line_no);
    }
  }
  if (!have_root) throw ParseError("missing 'root' line", line_no);
  return d;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline StructuralProblem load_problem(const std::string& path,
                                      std::optional<std::size_t> max_height = std::nullopt) {
  return validate_problem(parse_problem(read_file(path)), max_height);
}

// Types T0..Tp, each Ti holding 0..k components of type Ti+1; root T0.
inline StructuralProblem chain_problem(std::size_t p, std::uint32_t k) {
  ProblemDescription d;
  d.root = "T0";
  for (std::size_t i = 0; i <= p; ++i) d.types.push_back("T" + std::to_string(i));
  for (std::size_t i = 0; i < p; ++i) d.relations.push_back({d.types[i], d.types[i + 1], k});
  return validate_problem(d);
}

// True iff the root is the problem's root type, every edge matches a relation
// and no T-list exceeds its maximal cardinality. Throws UnknownTypeError on a
// label outside the problem's types.
inline bool ttree_conforms(const TTree& tree, const StructuralProblem& p) {
  std::function<bool(const TTree&, std::size_t)> check = [&](const TTree& t, std::size_t depth) {
    bool ok = true;
    for (const auto& l : t.tlists()) {
      if (!p.types().contains(l.type)) throw UnknownTypeError("label outside the problem types");
      auto max = p.max_cardinality(t.label(), l.type);
      if (!max || l.trees.size() > *max) ok = false;
      for (const auto& c : l.trees) ok = check(c, depth + 1) && ok;
    }
    if (p.max_height() && depth > *p.max_height()) ok = false;
    return ok;
  };
  if (!p.types().contains(tree.label())) throw UnknownTypeError("label outside the problem types");
  bool ok = check(tree, 0);
  return ok && tree.label() == p.root();
}

}  // namespace ttree
