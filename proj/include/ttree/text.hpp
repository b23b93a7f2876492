#pragma once

#include <cctype>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ttree/error.hpp"
#include "ttree/tree.hpp"
#include "ttree/types.hpp"

namespace ttree {

// Grammar:  ttree := TYPE | TYPE "(" ttree ("," ttree)* ")"
// TYPE is [A-Za-z_][A-Za-z0-9_]*; whitespace between tokens is ignored.

namespace detail {

inline bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
inline bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class TreeParser {
 public:
  TreeParser(std::string_view text, const TypeSystem& types) : text_(text), types_(types) {}

  TTree parse() {
    TTree t = tree();
    skip_space();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
    return t;
  }

 private:
  TTree tree() {
    std::size_t at = 0;
    std::string_view name = identifier(at);
    auto label = types_.find(name);
    if (!label) throw UnknownTypeError("unknown type '" + std::string(name) + "' at position " + std::to_string(at));
    skip_space();
    if (pos_ == text_.size() || text_[pos_] != '(') return TTree(*label);
    ++pos_;
    std::vector<TTree> children;
    while (true) {
      children.push_back(tree());
      skip_space();
      if (pos_ == text_.size()) throw ParseError("expected ',' or ')'", pos_);
      if (text_[pos_] == ')') {
        ++pos_;
        break;
      }
      if (text_[pos_] != ',') throw ParseError("expected ',' or ')'", pos_);
      ++pos_;
    }
    return TTree(*label, std::move(children));
  }

  std::string_view identifier(std::size_t& at) {
    skip_space();
    at = pos_;
    if (pos_ == text_.size() || !is_ident_start(text_[pos_])) throw ParseError("expected type name", pos_);
    while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
    return text_.substr(at, pos_ - at);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  const TypeSystem& types_;
  std::size_t pos_ = 0;
};

inline void render_into(const TTree& t, const TypeSystem& types, std::string& out) {
  out += types.name(t.label());
  if (t.is_leaf()) return;
  out += '(';
  bool first = true;
  for (const auto& l : t.tlists()) {
    for (const auto& c : l.trees) {
      if (!first) out += ',';
      first = false;
      render_into(c, types, out);
    }
  }
  out += ')';
}

}  // namespace detail

// Children may appear in any order; they are stably grouped into T-lists.
inline TTree parse_ttree(std::string_view text, const TypeSystem& types) {
  return detail::TreeParser(text, types).parse();
}

inline std::string render_ttree(const TTree& tree, const TypeSystem& types) {
  std::string out;
  detail::render_into(tree, types, out);
  return out;
}

// Type system for expressions read without a problem: every identifier that
// occurs in `texts`, ordered lexicographically. Syntax is not checked here.
inline TypeSystem infer_type_system(std::span<const std::string> texts) {
  std::vector<std::string> names;
  for (const auto& text : texts) {
    for (std::size_t i = 0; i < text.size();) {
      if (detail::is_ident_start(text[i])) {
        std::size_t j = i;
        while (j < text.size() && detail::is_ident_char(text[j])) ++j;
        names.emplace_back(text.substr(i, j - i));
        i = j;
      } else {
        ++i;
      }
    }
  }
  return TypeSystem::sorted(std::move(names));
}

}  // namespace ttree
