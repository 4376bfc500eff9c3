#pragma once

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "nspg/error.hpp"
#include "nspg/graph.hpp"
#include "nspg/group.hpp"
#include "nspg/harness.hpp"
#include "nspg/invariants.hpp"
#include "nspg/power_graph.hpp"
#include "nspg/subgroup.hpp"

namespace nspg::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // verify found a FAIL, or an internal error
inline constexpr int kExitUsage = 2;    // bad arguments, spec or subgroup
inline constexpr int kExitBudget = 3;   // analyze could not finish every solver

struct CliConfig {
  std::string command;
  std::string group;
  std::optional<std::string> subgroup;          // generator list "a,b"
  std::optional<std::size_t> subgroup_index;    // entry of list-normal-subgroups
  std::string format;                           // empty: command default
  SolverBudget budget;
  std::optional<std::string> catalog_path;
  std::optional<std::string> theorems;          // comma-separated ids
};

// "N" sets the search-node limit; otherwise a comma list of key=value with
// keys exact_vertices, perfect_vertices, search_nodes. Values must be > 0.
inline SolverBudget parse_budget(std::string_view text, SolverBudget base = {}) {
  const auto number = [&](std::string_view s) -> std::uint64_t {
    if (s.empty() || s.size() > 18 || s.find_first_not_of("0123456789") != std::string_view::npos)
      throw ParseError("invalid budget '" + std::string(text) + "'");
    const auto v = std::stoull(std::string(s));
    if (v == 0) throw ParseError("budget values must be positive");
    return v;
  };
  if (text.find('=') == std::string_view::npos) {
    base.search_nodes = number(text);
    return base;
  }
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const auto item = text.substr(pos, comma - pos);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw ParseError("invalid budget item '" + std::string(item) + "'");
    const auto key = item.substr(0, eq);
    const auto value = number(item.substr(eq + 1));
    if (key == "exact_vertices") base.exact_vertices = std::size_t(value);
    else if (key == "perfect_vertices") base.perfect_vertices = std::size_t(value);
    else if (key == "search_nodes") base.search_nodes = value;
    else throw ParseError("unknown budget key '" + std::string(key) + "'");
    pos = comma + 1;
  }
  return base;
}

namespace detail {

inline std::string resolve_format(const CliConfig& cfg, std::string fallback,
                                  std::initializer_list<std::string_view> allowed) {
  const std::string f = cfg.format.empty() ? std::move(fallback) : cfg.format;
  if (std::find(allowed.begin(), allowed.end(), f) == allowed.end())
    throw InvalidArgument("format '" + f + "' is not valid for " + cfg.command);
  return f;
}

inline SubgroupSet select_subgroup(const FiniteGroup& g, const CliConfig& cfg) {
  if (cfg.subgroup.has_value() == cfg.subgroup_index.has_value())
    throw InvalidArgument("give exactly one of --subgroup or --subgroup-index");
  const auto sel = cfg.subgroup ? SubgroupSelector::generated_by(parse_generator_list(*cfg.subgroup))
                                : SubgroupSelector::at_index(*cfg.subgroup_index);
  return resolve_selector(g, sel).front();
}

inline std::string join_elements(const std::vector<Element>& xs) {
  if (xs.empty()) return "-";
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(xs[i]);
  }
  return s;
}

inline int list_groups(std::ostream& out) {
  for (const auto& entry : default_catalog().entries) {
    const auto name = entry.group.to_string();
    out << std::left << std::setw(10) << name << spec_order(entry.group) << '\n';
  }
  return kExitOk;
}

inline int list_normal_subgroups(const CliConfig& cfg, std::ostream& out) {
  const auto format = resolve_format(cfg, "table", {"table", "json"});
  const auto g = make_group(parse_group_spec(cfg.group));
  const auto normals = all_normal_subgroups(g);
  if (format == "json") {
    auto arr = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < normals.size(); ++i) {
      nlohmann::ordered_json e;
      e["index"] = i;
      e["order"] = normals[i].order();
      e["generators"] = greedy_generators(normals[i]);
      e["subgroup"] = describe(normals[i]);
      e["elements"] = normals[i].elements();
      arr.push_back(std::move(e));
    }
    out << arr.dump(2) << '\n';
    return kExitOk;
  }
  out << std::left << std::setw(7) << "index" << std::setw(7) << "order" << std::setw(14) << "generators"
      << "subgroup\n";
  for (std::size_t i = 0; i < normals.size(); ++i)
    out << std::left << std::setw(7) << i << std::setw(7) << normals[i].order() << std::setw(14)
        << join_elements(greedy_generators(normals[i])) << describe(normals[i]) << '\n';
  return kExitOk;
}

inline void emit_graph(const SimpleGraph& graph, const std::string& name, const std::string& format,
                       nlohmann::ordered_json header, std::ostream& out) {
  if (format == "dot") {
    out << to_dot(graph, name);
    return;
  }
  const auto body = to_json(graph);
  for (const auto& [k, v] : body.items()) header[k] = v;
  out << header.dump(2) << '\n';
}

inline int build(const CliConfig& cfg, std::ostream& out) {
  const auto format = resolve_format(cfg, "dot", {"dot", "json"});
  const auto g = make_group(parse_group_spec(cfg.group));
  const auto h = select_subgroup(g, cfg);
  const auto nsb = nsb_power_graph(g, h);
  nlohmann::ordered_json header;
  header["group"] = nsb.group_name;
  header["subgroup"] = nsb.subgroup;
  emit_graph(nsb.graph, nsb.group_name + " relative to " + nsb.subgroup, format, std::move(header), out);
  return kExitOk;
}

inline int power_graph_cmd(const CliConfig& cfg, std::ostream& out) {
  const auto format = resolve_format(cfg, "dot", {"dot", "json"});
  const auto g = make_group(parse_group_spec(cfg.group));
  nlohmann::ordered_json header;
  header["group"] = g.name();
  emit_graph(power_graph(g), g.name(), format, std::move(header), out);
  return kExitOk;
}

inline int analyze(const CliConfig& cfg, std::ostream& out) {
  const auto format = resolve_format(cfg, "json", {"json", "table"});
  const auto g = make_group(parse_group_spec(cfg.group));
  const auto h = select_subgroup(g, cfg);
  const auto nsb = nsb_power_graph(g, h);
  const auto inv = compute_invariants(nsb.graph, cfg.budget);
  if (format == "table") {
    out << std::left << std::setw(22) << "group" << nsb.group_name << '\n'
        << std::setw(22) << "subgroup" << nsb.subgroup << '\n'
        << to_table(inv);
  } else {
    nlohmann::ordered_json j;
    j["group"] = nsb.group_name;
    j["subgroup"] = nsb.subgroup;
    const auto body = to_json(inv);
    for (const auto& [k, v] : body.items()) j[k] = v;
    out << j.dump(2) << '\n';
  }
  return inv.complete() ? kExitOk : kExitBudget;
}

inline int verify(const CliConfig& cfg, std::ostream& out) {
  const auto format = resolve_format(cfg, "json", {"json", "csv"});
  Catalog catalog;
  if (cfg.catalog_path) {
    std::ifstream in(*cfg.catalog_path);
    if (!in) throw InvalidArgument("cannot open catalog file '" + *cfg.catalog_path + "'");
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("catalog is not valid JSON: ") + e.what());
    }
    catalog = catalog_from_json(j, cfg.budget);
  } else {
    catalog = default_catalog();
    catalog.budget = cfg.budget;
  }
  if (cfg.theorems) {
    catalog.theorems.clear();
    std::string_view list = *cfg.theorems;
    std::size_t pos = 0;
    while (pos <= list.size()) {
      const std::size_t comma = std::min(list.find(',', pos), list.size());
      catalog.theorems.push_back(parse_theorem(list.substr(pos, comma - pos)));
      pos = comma + 1;
    }
  }
  const auto report = run_catalog(catalog);
  if (format == "csv") out << to_csv(report);
  else out << to_json(report).dump(2) << '\n';
  return report.has_failures() ? kExitFailure : kExitOk;
}

}  // namespace detail

inline int run(const CliConfig& cfg, std::ostream& out) {
  if (cfg.command == "list-groups") return detail::list_groups(out);
  if (cfg.command == "list-normal-subgroups") return detail::list_normal_subgroups(cfg, out);
  if (cfg.command == "build") return detail::build(cfg, out);
  if (cfg.command == "power-graph") return detail::power_graph_cmd(cfg, out);
  if (cfg.command == "analyze") return detail::analyze(cfg, out);
  if (cfg.command == "verify") return detail::verify(cfg, out);
  throw InvalidArgument("unknown command '" + cfg.command + "'");
}

// Parses `args` (without the program name) and runs the command. Returns
// the process exit status; diagnostics go to `err`.
inline int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
                   const char* env_budget = std::getenv("NSPG_BUDGET")) {
  CliConfig cfg;
  std::string budget_text;
  std::string subgroup_text;
  std::size_t subgroup_index = 0;
  std::string catalog_path;
  std::string theorems;

  CLI::App app{"Power graphs of finite groups relative to normal subgroups", "nspg"};
  app.require_subcommand(1);

  const auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--budget", budget_text,
                    "solver budget: N search nodes, or exact_vertices=..,perfect_vertices=..,search_nodes=..");
  };
  const auto add_subgroup = [&](CLI::App* sub) {
    auto* by_gens = sub->add_option("--subgroup", subgroup_text, "generator element indices, e.g. 2,3");
    auto* by_index = sub->add_option("--subgroup-index", subgroup_index, "index from list-normal-subgroups");
    by_gens->excludes(by_index);
  };

  app.add_subcommand("list-groups", "print the default catalog groups and their orders");

  auto* lns = app.add_subcommand("list-normal-subgroups", "enumerate normal subgroups with index and generators");
  lns->add_option("group", cfg.group, "group spec, e.g. D4 or Z2xZ4")->required();
  lns->add_option("--format", cfg.format, "table | json");

  auto* build = app.add_subcommand("build", "emit the power graph relative to a normal subgroup");
  build->add_option("group", cfg.group, "group spec")->required();
  add_subgroup(build);
  build->add_option("--format", cfg.format, "dot | json");

  auto* pg = app.add_subcommand("power-graph", "emit the power graph of a group");
  pg->add_option("group", cfg.group, "group spec")->required();
  pg->add_option("--format", cfg.format, "dot | json");

  auto* analyze = app.add_subcommand("analyze", "compute graph invariants");
  analyze->add_option("group", cfg.group, "group spec")->required();
  add_subgroup(analyze);
  analyze->add_option("--format", cfg.format, "json | table");
  add_budget(analyze);

  auto* verify = app.add_subcommand("verify", "check every theorem over a catalog");
  verify->add_option("--catalog", catalog_path, "catalog JSON file (default: built-in catalog)");
  verify->add_option("--theorems", theorems, "comma-separated theorem ids");
  verify->add_option("--format", cfg.format, "json | csv");
  add_budget(verify);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "nspg: " << e.what() << '\n';
    return kExitUsage;
  }

  for (auto* sub : app.get_subcommands()) cfg.command = sub->get_name();
  for (auto* sub : {build, analyze}) {
    if (sub->count("--subgroup")) cfg.subgroup = subgroup_text;
    if (sub->count("--subgroup-index")) cfg.subgroup_index = subgroup_index;
  }
  if (verify->count("--catalog")) cfg.catalog_path = catalog_path;
  if (verify->count("--theorems")) cfg.theorems = theorems;

  try {
    if (env_budget && *env_budget) cfg.budget = parse_budget(env_budget, cfg.budget);
    if (!budget_text.empty()) cfg.budget = parse_budget(budget_text, cfg.budget);
    return run(cfg, out);
  } catch (const ParseError& e) {
    err << "nspg: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidArgument& e) {
    err << "nspg: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidGroup& e) {
    err << "nspg: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    err << "nspg: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "nspg: internal error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace nspg::cli
