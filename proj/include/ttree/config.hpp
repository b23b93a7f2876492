#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ttree/error.hpp"
#include "ttree/tree.hpp"
#include "ttree/types.hpp"

namespace ttree {

using ObjectId = std::uint64_t;

// A configuration seen as a tree of objects: every object but the root has
// exactly one composite, and every object is reachable from the root. The
// children of an object are kept sorted by type, then by object number.
class ConfigTree {
 public:
  struct Object {
    TypeId type;
    std::vector<ObjectId> children;
  };

  // Builds and validates a configuration from typed objects and
  // (composite, component) links.
  ConfigTree(const std::map<ObjectId, TypeId>& objects,
             const std::vector<std::pair<ObjectId, ObjectId>>& links) {
    if (objects.empty()) throw ValidationError("configuration has no objects");
    std::map<ObjectId, ObjectId> parent;
    for (const auto& [id, type] : objects) objects_[id] = Object{type, {}};
    for (const auto& [from, to] : links) {
      if (!objects_.count(from) || !objects_.count(to))
        throw ValidationError("link " + std::to_string(from) + " " + std::to_string(to) +
                              " names an undeclared object");
      if (!parent.emplace(to, from).second)
        throw ValidationError("object " + std::to_string(to) + " has more than one composite");
      objects_[from].children.push_back(to);
    }
    std::vector<ObjectId> roots;
    for (const auto& [id, obj] : objects_)
      if (!parent.count(id)) roots.push_back(id);
    if (roots.size() != 1) throw ValidationError("configuration must have exactly one root");
    root_ = roots.front();

    std::size_t reached = 0;
    std::vector<ObjectId> stack{root_};
    while (!stack.empty()) {
      ObjectId o = stack.back();
      stack.pop_back();
      ++reached;
      for (ObjectId c : objects_[o].children) stack.push_back(c);
    }
    if (reached != objects_.size()) throw ValidationError("some objects are not reachable from the root");

    for (auto& [id, obj] : objects_) {
      std::sort(obj.children.begin(), obj.children.end(), [this](ObjectId a, ObjectId b) {
        return std::pair(objects_[a].type, a) < std::pair(objects_[b].type, b);
      });
    }
  }

  ObjectId root() const noexcept { return root_; }
  const std::map<ObjectId, Object>& objects() const noexcept { return objects_; }
  const Object& object(ObjectId id) const { return objects_.at(id); }
  std::size_t size() const noexcept { return objects_.size(); }

  friend bool operator==(const ConfigTree& a, const ConfigTree& b) {
    if (a.root_ != b.root_ || a.objects_.size() != b.objects_.size()) return false;
    for (auto ia = a.objects_.begin(), ib = b.objects_.begin(); ia != a.objects_.end(); ++ia, ++ib) {
      if (ia->first != ib->first || ia->second.type != ib->second.type ||
          ia->second.children != ib->second.children)
        return false;
    }
    return true;
  }

 private:
  std::map<ObjectId, Object> objects_;
  ObjectId root_ = 0;
};

// Erases object numbers; T-list order follows object order.
inline TTree config_to_ttree(const ConfigTree& cfg) {
  auto build = [&cfg](auto& self, ObjectId id) -> TTree {
    const auto& obj = cfg.object(id);
    TTree t(obj.type);
    for (ObjectId c : obj.children) t.append(self(self, c));
    return t;
  };
  return build(build, cfg.root());
}

// Numbers nodes 0, 1, 2, ... in breadth-first order, visiting T-lists in type
// order and each T-list front to back.
inline ConfigTree ttree_to_config(const TTree& tree) {
  std::map<ObjectId, TypeId> objects;
  std::vector<std::pair<ObjectId, ObjectId>> links;
  std::deque<std::pair<const TTree*, ObjectId>> queue{{&tree, 0}};
  ObjectId next = 0;
  objects[next++] = tree.label();
  while (!queue.empty()) {
    auto [t, id] = queue.front();
    queue.pop_front();
    for (const auto& l : t->tlists()) {
      for (const auto& c : l.trees) {
        ObjectId cid = next++;
        objects[cid] = c.label();
        links.emplace_back(id, cid);
        queue.emplace_back(&c, cid);
      }
    }
  }
  return ConfigTree(objects, links);
}

// Line format: "obj <nat> <Type>" lines, then "link <composite> <component>"
// lines; '#' starts a comment. Errors report the 1-based line number.
inline ConfigTree parse_config(std::string_view text, const TypeSystem& types) {
  std::map<ObjectId, TypeId> objects;
  std::vector<std::pair<ObjectId, ObjectId>> links;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  auto number = [&](const std::string& s) -> ObjectId {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw ParseError("bad object number '" + s + "'", line_no);
    try {
      return std::stoull(s);
    } catch (const std::out_of_range&) {
      throw ParseError("object number out of range '" + s + "'", line_no);
    }
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::vector<std::string> w;
    for (std::string s; words >> s;) w.push_back(s);
    if (w.empty()) continue;
    if (w[0] == "obj" && w.size() == 3) {
      if (!links.empty()) throw ParseError("'obj' after 'link'", line_no);
      ObjectId id = number(w[1]);
      if (!objects.emplace(id, types.id(w[2])).second)
        throw ParseError("object " + w[1] + " declared twice", line_no);
    } else if (w[0] == "link" && w.size() == 3) {
      links.emplace_back(number(w[1]), number(w[2]));
    } else {
      throw ParseError("unrecognized line '" + line + "'", line_no);
    }
  }
  return ConfigTree(objects, links);
}

// Type names used by a configuration file, in lexicographic order.
inline TypeSystem infer_config_types(std::string_view text) {
  std::vector<std::string> names;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::string kw, id, name;
    if (words >> kw >> id >> name && kw == "obj") names.push_back(name);
  }
  return TypeSystem::sorted(std::move(names));
}

inline std::string render_config(const ConfigTree& cfg, const TypeSystem& types) {
  std::string out;
  for (const auto& [id, obj] : cfg.objects())
    out += "obj " + std::to_string(id) + " " + types.name(obj.type) + "\n";
  for (const auto& [id, obj] : cfg.objects())
    for (ObjectId c : obj.children) out += "link " + std::to_string(id) + " " + std::to_string(c) + "\n";
  return out;
}

}  // namespace ttree
