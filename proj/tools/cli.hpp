#pragma once

#include <algorithm>
#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ttree/ttree.hpp"

namespace ttree::cli {

// Exit codes: 0 success, 1 a negative answer (non-canonical, not isomorphic,
// failed round trip), 2 usage, parse or validation errors.
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;
inline constexpr int kUsage = 2;

namespace detail {

inline TypeSystem types_for(const std::optional<StructuralProblem>& problem, const std::vector<std::string>& exprs) {
  return problem ? problem->types() : infer_type_system(exprs);
}

inline std::optional<StructuralProblem> maybe_problem(const std::string& path) {
  if (path.empty()) return std::nullopt;
  return load_problem(path);
}

}  // namespace detail

// Runs one command; `args` excludes the program name.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Canonical T-trees: canonicity, enumeration and counting", "ttree"};
  app.require_subcommand(1);

  unsigned depth = 0, branch = 0;
  bool approx = false;
  auto* count = app.add_subcommand("count", "exact N and M for the k-connected chain problem");
  count->add_option("--depth", depth, "maximal height p")->required();
  count->add_option("--branch", branch, "maximal number of children k")->required()->check(CLI::PositiveNumber);
  count->add_flag("--approx", approx, "also print the Stirling estimate of M");

  unsigned pmax = 0, kmax = 0;
  bool csv = false;
  auto* table = app.add_subcommand("table", "grid of N / M values");
  table->add_option("--pmax", pmax)->required()->check(CLI::PositiveNumber);
  table->add_option("--kmax", kmax)->required()->check(CLI::PositiveNumber);
  table->add_flag("--csv", csv, "emit p,k,N,M rows");

  std::string problem_file;
  bool canonical_only = false, sorted = false;
  std::optional<std::size_t> max_depth, limit;
  auto* enumerate = app.add_subcommand("enum", "enumerate the trees of a problem, one per line");
  enumerate->add_option("problem", problem_file)->required();
  enumerate->add_flag("--canonical", canonical_only, "canonical trees only");
  enumerate->add_flag("--sorted", sorted, "emit in increasing tree order");
  enumerate->add_option("--max-depth", max_depth, "maximal tree height");
  enumerate->add_option("--limit", limit, "stop after this many lines");

  std::string tree_a, tree_b, check_problem, context_problem;
  auto* check = app.add_subcommand("check", "test the canonicity of a tree");
  check->add_option("--problem", check_problem)->required();
  check->add_option("tree", tree_a)->required();

  auto* canon = app.add_subcommand("canon", "print the canonical form of a tree");
  canon->add_option("--problem", context_problem, "problem file giving the type order");
  canon->add_option("tree", tree_a)->required();

  auto* iso = app.add_subcommand("iso", "test whether two trees are isomorphic");
  iso->add_option("--problem", context_problem, "problem file giving the type order");
  iso->add_option("first", tree_a)->required();
  iso->add_option("second", tree_b)->required();

  auto* removal = app.add_subcommand("removal", "remove one terminal node canonically");
  removal->add_option("--problem", context_problem, "problem file giving the type order");
  removal->add_option("tree", tree_a)->required();

  std::string config_file;
  auto* roundtrip = app.add_subcommand("roundtrip", "configuration -> T-tree -> configuration");
  roundtrip->add_option("config", config_file)->required();
  roundtrip->add_option("--problem", context_problem, "problem file giving the type order");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (count->parsed()) {
      out << "N=" << count_all(depth, branch) << " M=" << count_canonical(depth, branch);
      if (approx) {
        if (depth < 1) throw PreconditionError("--approx needs --depth >= 1");
        char buf[64];
        std::snprintf(buf, sizeof buf, " M~%.6g", approx_canonical(depth, branch));
        out << buf;
      }
      out << "\n";
      return kOk;
    }
    if (table->parsed()) {
      auto t = comparison_table(pmax, kmax);
      out << (csv ? t.to_csv() : t.to_text());
      return kOk;
    }
    if (enumerate->parsed()) {
      auto problem = load_problem(problem_file, max_depth);
      auto mode = canonical_only ? EnumerationMode::kCanonical : EnumerationMode::kAll;
      TreeEnumerator e(problem, mode, max_depth);
      if (sorted) {
        auto trees = collect(std::move(e));
        std::sort(trees.begin(), trees.end(), TreeLess{});
        if (limit && trees.size() > *limit) trees.erase(trees.begin() + *limit, trees.end());
        for (const auto& t : trees) out << render_ttree(t, problem.types()) << "\n";
      } else {
        std::size_t emitted = 0;
        while (!limit || emitted < *limit) {
          auto t = e.next();
          if (!t) break;
          out << render_ttree(*t, problem.types()) << "\n";
          ++emitted;
        }
      }
      return kOk;
    }
    if (check->parsed()) {
      auto problem = load_problem(check_problem);
      auto t = parse_ttree(tree_a, problem.types());
      if (!ttree_conforms(t, problem)) {
        out << "non-conforming\n";
        return kNegative;
      }
      bool ok = is_canonical(t);
      out << (ok ? "canonical" : "non-canonical") << "\n";
      return ok ? kOk : kNegative;
    }
    auto problem = detail::maybe_problem(context_problem);
    if (canon->parsed()) {
      auto types = detail::types_for(problem, {tree_a});
      out << render_ttree(canonicalize(parse_ttree(tree_a, types)), types) << "\n";
      return kOk;
    }
    if (iso->parsed()) {
      auto types = detail::types_for(problem, {tree_a, tree_b});
      bool same = isomorphic(parse_ttree(tree_a, types), parse_ttree(tree_b, types));
      out << (same ? "isomorphic" : "not isomorphic") << "\n";
      return same ? kOk : kNegative;
    }
    if (removal->parsed()) {
      auto types = detail::types_for(problem, {tree_a});
      out << render_ttree(canonical_removal(parse_ttree(tree_a, types)), types) << "\n";
      return kOk;
    }
    if (roundtrip->parsed()) {
      auto text = read_file(config_file);
      auto types = problem ? problem->types() : infer_config_types(text);
      auto cfg = parse_config(text, types);
      auto t = config_to_ttree(cfg);
      if (problem && !ttree_conforms(t, *problem)) {
        err << "configuration does not conform to the problem\n";
        return kNegative;
      }
      auto rebuilt = ttree_to_config(t);
      out << render_ttree(t, types) << "\n" << render_config(rebuilt, types);
      if (config_to_ttree(rebuilt) != t) {
        err << "round trip changed the tree\n";
        return kNegative;
      }
      return kOk;
    }
  } catch (const ttree::Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace ttree::cli
