#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "nspg/algorithms/basic.hpp"
#include "nspg/algorithms/clique.hpp"
#include "nspg/algorithms/coloring.hpp"
#include "nspg/algorithms/connectivity.hpp"
#include "nspg/algorithms/hamiltonian.hpp"
#include "nspg/algorithms/perfect.hpp"
#include "nspg/algorithms/planarity.hpp"
#include "nspg/error.hpp"
#include "nspg/group.hpp"
#include "nspg/power_degree.hpp"
#include "nspg/power_graph.hpp"
#include "nspg/subgroup.hpp"

namespace nspg {

// ---------------------------------------------------------------------------
// Theorem identifiers and verdicts
// ---------------------------------------------------------------------------

enum class TheoremId {
  COMPLETE_3_1,
  CAYLEY_3_3,
  DEGREE_4_1,
  EULERIAN_4_2,
  HAMILTONIAN_4_4,
  GIRTH_5_3,
  BIPARTITE_TREE_5_2,
  PLANAR_5_4,
  EDGES_6_1,
  CLIQUE_6_4,
  PERFECT_6_5,
  CHROMATIC_6_6,
  KAPPA_6_7,
};

inline constexpr std::array kAllTheorems = {
    TheoremId::COMPLETE_3_1,  TheoremId::CAYLEY_3_3,         TheoremId::DEGREE_4_1,
    TheoremId::EULERIAN_4_2,  TheoremId::HAMILTONIAN_4_4,    TheoremId::GIRTH_5_3,
    TheoremId::BIPARTITE_TREE_5_2, TheoremId::PLANAR_5_4,    TheoremId::EDGES_6_1,
    TheoremId::CLIQUE_6_4,    TheoremId::PERFECT_6_5,        TheoremId::CHROMATIC_6_6,
    TheoremId::KAPPA_6_7,
};

inline constexpr std::string_view theorem_name(TheoremId id) {
  switch (id) {
    case TheoremId::COMPLETE_3_1: return "COMPLETE_3_1";
    case TheoremId::CAYLEY_3_3: return "CAYLEY_3_3";
    case TheoremId::DEGREE_4_1: return "DEGREE_4_1";
    case TheoremId::EULERIAN_4_2: return "EULERIAN_4_2";
    case TheoremId::HAMILTONIAN_4_4: return "HAMILTONIAN_4_4";
    case TheoremId::GIRTH_5_3: return "GIRTH_5_3";
    case TheoremId::BIPARTITE_TREE_5_2: return "BIPARTITE_TREE_5_2";
    case TheoremId::PLANAR_5_4: return "PLANAR_5_4";
    case TheoremId::EDGES_6_1: return "EDGES_6_1";
    case TheoremId::CLIQUE_6_4: return "CLIQUE_6_4";
    case TheoremId::PERFECT_6_5: return "PERFECT_6_5";
    case TheoremId::CHROMATIC_6_6: return "CHROMATIC_6_6";
    case TheoremId::KAPPA_6_7: return "KAPPA_6_7";
  }
  return "?";
}

inline TheoremId parse_theorem(std::string_view name) {
  for (auto id : kAllTheorems)
    if (theorem_name(id) == name) return id;
  throw InvalidArgument("unknown theorem id '" + std::string(name) + "'");
}

// Report-only theorems are FLAGGED on disagreement and never FAIL.
inline constexpr bool is_report_only(TheoremId id) { return id == TheoremId::KAPPA_6_7; }

enum class Verdict { pass, fail, skipped, flagged };

inline constexpr std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "PASS";
    case Verdict::fail: return "FAIL";
    case Verdict::skipped: return "SKIPPED";
    case Verdict::flagged: return "FLAGGED";
  }
  return "?";
}

// Predicted or observed quantity of a theorem check.
using Value = std::variant<std::monostate, bool, std::int64_t, std::vector<std::int64_t>, std::string>;

inline std::string to_string(const Value& v) {
  struct Visitor {
    std::string operator()(std::monostate) const { return "null"; }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(std::int64_t x) const { return std::to_string(x); }
    std::string operator()(const std::vector<std::int64_t>& xs) const {
      std::string s = "[";
      for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(xs[i]);
      }
      return s + "]";
    }
    std::string operator()(const std::string& s) const { return s; }
  };
  return std::visit(Visitor{}, v);
}

inline nlohmann::ordered_json to_json(const Value& v) {
  struct Visitor {
    nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
    nlohmann::ordered_json operator()(bool b) const { return b; }
    nlohmann::ordered_json operator()(std::int64_t x) const { return x; }
    nlohmann::ordered_json operator()(const std::vector<std::int64_t>& xs) const { return xs; }
    nlohmann::ordered_json operator()(const std::string& s) const { return s; }
  };
  return std::visit(Visitor{}, v);
}

struct InstanceResult {
  TheoremId theorem = TheoremId::COMPLETE_3_1;
  std::string group;
  std::string subgroup;
  bool hypothesis_met = true;
  Value predicted;
  Value actual;
  Verdict verdict = Verdict::skipped;
  std::string note;
};

// ---------------------------------------------------------------------------
// Per-instance context: every derived object is computed at most once.
// ---------------------------------------------------------------------------

class InstanceContext {
 public:
  InstanceContext(FiniteGroup g, SubgroupSet h, SolverBudget budget = {})
      : g_(std::move(g)), h_(std::move(h)), budget_(budget) {
    if (!h_.parent().same_table(g_)) throw InvalidArgument("subgroup does not belong to this group");
  }

  const FiniteGroup& group() const noexcept { return g_; }
  const SubgroupSet& subgroup() const noexcept { return h_; }
  const SolverBudget& budget() const noexcept { return budget_; }

  const QuotientGroup& quotient_group() {
    if (!quotient_) quotient_ = nspg::quotient(g_, h_);
    return *quotient_;
  }
  const StructureFlags& quotient_flags() {
    if (!flags_) flags_ = recognize(quotient_group().group);
    return *flags_;
  }
  const NsbPowerGraph& graph() {
    if (!graph_) graph_ = nsb_power_graph(g_, h_);
    return *graph_;
  }
  const SimpleGraph& quotient_graph() {
    if (!quotient_graph_) quotient_graph_ = power_graph(quotient_group().group);
    return *quotient_graph_;
  }
  const BasicInvariants& basic() {
    if (!basic_) basic_ = basic_invariants(graph().graph);
    return *basic_;
  }
  std::size_t clique() {
    if (!clique_) clique_ = clique_number(graph().graph, budget_).size;
    return *clique_;
  }
  std::size_t quotient_clique() {
    if (!quotient_clique_) quotient_clique_ = clique_number(quotient_graph(), budget_).size;
    return *quotient_clique_;
  }

 private:
  FiniteGroup g_;
  SubgroupSet h_;
  SolverBudget budget_;
  std::optional<QuotientGroup> quotient_;
  std::optional<StructureFlags> flags_;
  std::optional<NsbPowerGraph> graph_;
  std::optional<SimpleGraph> quotient_graph_;
  std::optional<BasicInvariants> basic_;
  std::optional<std::size_t> clique_;
  std::optional<std::size_t> quotient_clique_;
};

namespace detail {

inline std::int64_t to_i64(std::size_t x) { return static_cast<std::int64_t>(x); }

inline Verdict agree(const Value& predicted, const Value& actual) {
  return predicted == actual ? Verdict::pass : Verdict::fail;
}

inline void check_into(TheoremId id, InstanceContext& ctx, InstanceResult& r) {
  const auto& g = ctx.group();
  const auto& h = ctx.subgroup();
  const std::int64_t order_g = to_i64(g.order());
  const std::int64_t order_h = to_i64(h.order());
  const bool nontrivial = !h.is_trivial();

  const auto require = [&](bool hypothesis, const char* why) {
    r.hypothesis_met = hypothesis;
    if (!hypothesis) {
      r.verdict = Verdict::skipped;
      r.note = why;
    }
    return hypothesis;
  };

  switch (id) {
    case TheoremId::COMPLETE_3_1: {
      r.predicted = ctx.quotient_flags().is_cyclic_p_group_or_trivial;
      r.actual = ctx.basic().is_complete;
      r.verdict = agree(r.predicted, r.actual);
      return;
    }
    case TheoremId::CAYLEY_3_3: {
      // Cayley graphs are regular; with the identity dominating, regular
      // means complete. Checked as: regular <=> quotient cyclic p-group.
      r.predicted = ctx.quotient_flags().is_cyclic_p_group_or_trivial;
      r.actual = ctx.basic().is_regular;
      r.note = std::string("regular=") + (ctx.basic().is_regular ? "true" : "false") +
               " complete=" + (ctx.basic().is_complete ? "true" : "false");
      r.verdict = agree(r.predicted, r.actual);
      return;
    }
    case TheoremId::DEGREE_4_1: {
      const auto& q = ctx.quotient_group();
      const auto& nsb = ctx.graph();
      std::vector<std::int64_t> predicted;
      for (std::size_t v = 0; v < nsb.vertex_element.size(); ++v) {
        if (v == 0) predicted.push_back(order_g - order_h);
        else
          predicted.push_back(order_h *
                              std::int64_t(degree_in_power_graph_formula(q.group, nsb.coset_of[v])));
      }
      std::vector<std::int64_t> actual;
      for (auto d : ctx.basic().degree_sequence) actual.push_back(to_i64(d));
      r.predicted = predicted;
      r.actual = actual;
      r.verdict = agree(r.predicted, r.actual);
      // The plain power-graph degree formula, vertex by vertex.
      const SimpleGraph full = power_graph(g);
      for (Element a = 0; a < g.order(); ++a) {
        if (degree_in_power_graph_formula(g, a) != full.degree(a)) {
          r.verdict = Verdict::fail;
          r.note = "power-graph degree formula disagrees at element " + g.label(a);
          break;
        }
      }
      return;
    }
    case TheoremId::EULERIAN_4_2: {
      r.predicted = (order_g - order_h) % 2 == 0;
      r.actual = ctx.basic().is_eulerian;
      r.verdict = agree(r.predicted, r.actual);
      return;
    }
    case TheoremId::HAMILTONIAN_4_4: {
      // One direction only: Hamiltonian quotient graph => Hamiltonian graph.
      const auto quotient_cycle = hamiltonian_cycle(ctx.quotient_graph(), ctx.budget());
      const auto cycle = hamiltonian_cycle(ctx.graph().graph, ctx.budget());
      if (cycle && !is_hamiltonian_cycle(ctx.graph().graph, *cycle))
        throw Error("hamiltonian_cycle returned an invalid witness");
      r.predicted = quotient_cycle.has_value();
      r.actual = cycle.has_value();
      r.verdict = (!quotient_cycle || cycle) ? Verdict::pass : Verdict::fail;
      return;
    }
    case TheoremId::GIRTH_5_3: {
      if (!require(nontrivial, "requires nontrivial H")) return;
      const auto gr = girth(ctx.graph().graph);
      r.predicted = std::int64_t{3};
      r.actual = gr == kInfiniteGirth ? Value(std::string("infinite")) : Value(to_i64(gr));
      r.verdict = agree(r.predicted, r.actual);
      return;
    }
    case TheoremId::BIPARTITE_TREE_5_2: {
      if (!require(nontrivial, "requires nontrivial H")) return;
      r.predicted = false;  // bipartite or tree
      r.actual = ctx.basic().is_bipartite || ctx.basic().is_tree;
      r.verdict = agree(r.predicted, r.actual);
      return;
    }
    case TheoremId::PLANAR_5_4: {
      if (!require(nontrivial, "requires nontrivial H")) return;
      r.predicted = (order_h == 2 || order_h == 3) && ctx.quotient_flags().is_elementary_abelian_2;
      r.actual = is_planar(ctx.graph().graph, ctx.budget()).planar;
      r.verdict = agree(r.predicted, r.actual);
      return;
    }
    case TheoremId::EDGES_6_1: {
      if (!require(nontrivial, "requires nontrivial H")) return;
      // t = edges of the quotient power graph, from element orders alone:
      // (1/2) sum over d | n of phi(d)(2d - phi(d) - 1) for a cyclic quotient,
      // (1/2) sum over elements a of (2 o(a) - phi(o(a)) - 1) otherwise.
      const auto& q = ctx.quotient_group().group;
      const std::int64_t n = to_i64(q.order());
      std::int64_t twice_t = 0;
      if (ctx.quotient_flags().is_cyclic) {
        for (std::int64_t d = 1; d <= n; ++d)
          if (n % d == 0) {
            const auto phi = std::int64_t(euler_phi(std::uint64_t(d)));
            twice_t += phi * (2 * d - phi - 1);
          }
      } else {
        for (Element a = 0; a < q.order(); ++a) {
          const auto o = std::int64_t(element_order(q, a));
          twice_t += 2 * o - std::int64_t(euler_phi(std::uint64_t(o))) - 1;
        }
      }
      const std::int64_t t = twice_t / 2;
      r.note = "t=" + std::to_string(t);
      r.predicted = (t - n + 1) * order_h * order_h + order_h * (order_h - 1) / 2 * (order_g / order_h - 1) +
                    (order_g - order_h);
      r.actual = to_i64(ctx.basic().edge_count);
      r.verdict = agree(r.predicted, r.actual);
      return;
    }
    case TheoremId::CLIQUE_6_4: {
      r.predicted = order_h * (to_i64(ctx.quotient_clique()) - 1) + 1;
      r.actual = to_i64(ctx.clique());
      r.verdict = agree(r.predicted, r.actual);
      return;
    }
    case TheoremId::PERFECT_6_5: {
      const auto result = is_perfect(ctx.graph().graph, ctx.budget());
      r.predicted = true;
      r.actual = result.perfect;
      r.verdict = agree(r.predicted, r.actual);
      return;
    }
    case TheoremId::CHROMATIC_6_6: {
      r.predicted = order_h * (to_i64(ctx.quotient_clique()) - 1) + 1;
      r.actual = to_i64(chromatic_number(ctx.graph().graph, ctx.budget()).chromatic_number);
      r.verdict = agree(r.predicted, r.actual);
      return;
    }
    case TheoremId::KAPPA_6_7: {
      const std::int64_t k = to_i64(vertex_connectivity(ctx.quotient_graph()).kappa);
      r.predicted = (k - 1) * order_h + 1;
      r.actual = to_i64(vertex_connectivity(ctx.graph().graph).kappa);
      r.note = ctx.basic().is_complete ? "complete" : "non-complete";
      r.verdict = r.predicted == r.actual ? Verdict::pass : Verdict::flagged;
      return;
    }
  }
}

}  // namespace detail

// Runs one theorem check. Budget refusals become SKIPPED with the reason in
// `note`; nothing is approximated.
inline InstanceResult check_theorem(TheoremId id, InstanceContext& ctx) {
  InstanceResult r;
  r.theorem = id;
  r.group = ctx.group().name();
  r.subgroup = describe(ctx.subgroup());
  try {
    detail::check_into(id, ctx, r);
  } catch (const BudgetExceeded& e) {
    r.verdict = Verdict::skipped;
    r.predicted = std::monostate{};
    r.actual = std::monostate{};
    r.note = e.what();
  }
  return r;
}

inline InstanceResult check_theorem(TheoremId id, const FiniteGroup& g, const SubgroupSet& h,
                                    const SolverBudget& budget = {}) {
  InstanceContext ctx(g, h, budget);
  return check_theorem(id, ctx);
}

// ---------------------------------------------------------------------------
// Catalogs
// ---------------------------------------------------------------------------

// Which subgroups of a catalog group to check.
struct SubgroupSelector {
  enum class Kind { all_normal, generators, index };
  Kind kind = Kind::all_normal;
  std::vector<Element> generators;
  std::size_t index = 0;

  static SubgroupSelector all_normal() { return {}; }
  static SubgroupSelector generated_by(std::vector<Element> gens) {
    return {Kind::generators, std::move(gens), 0};
  }
  static SubgroupSelector at_index(std::size_t i) { return {Kind::index, {}, i}; }
};

struct CatalogEntry {
  GroupSpec group;
  SubgroupSelector selector;
};

struct Catalog {
  std::vector<CatalogEntry> entries;
  SolverBudget budget;
  std::vector<TheoremId> theorems{kAllTheorems.begin(), kAllTheorems.end()};
};

// Every normal subgroup of each group except the group itself, so the
// trivial subgroup rides along as the plain power graph case.
inline Catalog default_catalog() {
  Catalog c;
  const auto add = [&](GroupSpec s) { c.entries.push_back({std::move(s), SubgroupSelector::all_normal()}); };
  for (std::size_t n = 2; n <= 24; ++n) add(GroupSpec::cyclic(n));
  for (std::size_t n = 3; n <= 8; ++n) add(GroupSpec::dihedral(n));
  for (std::size_t k = 2; k <= 4; ++k) add(GroupSpec::elementary_abelian(2, k));
  add(GroupSpec::elementary_abelian(3, 2));
  add(parse_group_spec("Z2xZ4"));
  add(parse_group_spec("Z2xZ6"));
  add(parse_group_spec("Z3xZ3"));
  add(parse_group_spec("Z4xZ4"));
  add(GroupSpec::quaternion8());
  add(GroupSpec::symmetric(3));
  add(GroupSpec::symmetric(4));
  return c;
}

// Parses a generator list "a,b,c" of element indices.
inline std::vector<Element> parse_generator_list(std::string_view text) {
  std::vector<Element> gens;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const auto token = text.substr(pos, comma - pos);
    if (token.empty() || token.find_first_not_of("0123456789") != std::string_view::npos ||
        token.size() > 9)
      throw ParseError("invalid generator list '" + std::string(text) + "'");
    gens.push_back(Element(std::stoul(std::string(token))));
    pos = comma + 1;
  }
  return gens;
}

// Schema: {"instances": [{"group": spec, "subgroups": "all-normal" |
// [selector, ...]}], "theorems": [id, ...]}. A selector is a generator
// list (array of element indices or "a,b" string) or {"index": k}.
inline Catalog catalog_from_json(const nlohmann::json& j, const SolverBudget& budget = {}) {
  Catalog c;
  c.budget = budget;
  try {
    for (const auto& inst : j.at("instances")) {
      const auto spec = parse_group_spec(inst.at("group").get<std::string>());
      const auto& subs = inst.contains("subgroups") ? inst.at("subgroups") : nlohmann::json("all-normal");
      if (subs.is_string()) {
        if (subs.get<std::string>() != "all-normal")
          throw InvalidArgument("subgroups must be \"all-normal\" or a selector list");
        c.entries.push_back({spec, SubgroupSelector::all_normal()});
        continue;
      }
      for (const auto& sel : subs) {
        if (sel.is_object())
          c.entries.push_back({spec, SubgroupSelector::at_index(sel.at("index").get<std::size_t>())});
        else if (sel.is_string())
          c.entries.push_back({spec, SubgroupSelector::generated_by(parse_generator_list(sel.get<std::string>()))});
        else
          c.entries.push_back({spec, SubgroupSelector::generated_by(sel.get<std::vector<Element>>())});
      }
    }
    if (j.contains("theorems")) {
      c.theorems.clear();
      for (const auto& t : j.at("theorems")) c.theorems.push_back(parse_theorem(t.get<std::string>()));
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed catalog: ") + e.what());
  }
  return c;
}

struct CatalogInstance {
  FiniteGroup group;
  SubgroupSet subgroup;
};

// Resolves a selector against g. Selected subgroups must be normal and
// proper.
inline std::vector<SubgroupSet> resolve_selector(const FiniteGroup& g, const SubgroupSelector& sel) {
  std::vector<SubgroupSet> out;
  switch (sel.kind) {
    case SubgroupSelector::Kind::all_normal:
      for (auto& h : all_normal_subgroups(g))
        if (!h.is_whole_group()) out.push_back(std::move(h));
      return out;
    case SubgroupSelector::Kind::generators: out.push_back(generated_subgroup(g, sel.generators)); break;
    case SubgroupSelector::Kind::index: {
      auto normals = all_normal_subgroups(g);
      if (sel.index >= normals.size())
        throw InvalidArgument("subgroup index " + std::to_string(sel.index) + " out of range (" +
                              std::to_string(normals.size()) + " normal subgroups)");
      out.push_back(std::move(normals[sel.index]));
      break;
    }
  }
  const auto& h = out.front();
  if (!h.is_normal()) throw InvalidArgument("subgroup " + describe(h) + " is not normal in " + g.name());
  if (h.is_whole_group()) throw InvalidArgument("subgroup must be proper");
  return out;
}

inline std::vector<CatalogInstance> resolve(const Catalog& c) {
  std::vector<CatalogInstance> out;
  for (const auto& entry : c.entries) {
    const auto g = make_group(entry.group);
    for (auto& h : resolve_selector(g, entry.selector)) out.push_back({g, std::move(h)});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

struct TheoremCounts {
  std::size_t pass = 0, fail = 0, flagged = 0, skipped = 0;
};

// KAPPA agreement split by whether the graph is complete.
struct KappaSplit {
  std::size_t complete_agree = 0, complete_disagree = 0;
  std::size_t non_complete_agree = 0, non_complete_disagree = 0;
};

struct Report {
  std::size_t instance_count = 0;
  std::vector<TheoremId> theorems;
  std::vector<InstanceResult> results;  // instance-major, theorem order within

  std::map<TheoremId, TheoremCounts> counts() const {
    std::map<TheoremId, TheoremCounts> out;
    for (auto id : theorems) out[id];
    for (const auto& r : results) {
      auto& c = out[r.theorem];
      switch (r.verdict) {
        case Verdict::pass: ++c.pass; break;
        case Verdict::fail: ++c.fail; break;
        case Verdict::flagged: ++c.flagged; break;
        case Verdict::skipped: ++c.skipped; break;
      }
    }
    return out;
  }

  KappaSplit kappa_split() const {
    KappaSplit k;
    for (const auto& r : results) {
      if (r.theorem != TheoremId::KAPPA_6_7 || r.verdict == Verdict::skipped) continue;
      const bool agree = r.verdict == Verdict::pass;
      if (r.note == "complete") ++(agree ? k.complete_agree : k.complete_disagree);
      else ++(agree ? k.non_complete_agree : k.non_complete_disagree);
    }
    return k;
  }

  bool has_failures() const {
    return std::any_of(results.begin(), results.end(),
                       [](const InstanceResult& r) { return r.verdict == Verdict::fail; });
  }
};

// Instances are checked on worker threads; results land in fixed slots, so
// the report does not depend on scheduling.
inline Report run_catalog(const Catalog& c, unsigned threads = 0) {
  Report report;
  report.theorems = c.theorems;
  const auto instances = resolve(c);
  report.instance_count = instances.size();
  std::vector<std::vector<InstanceResult>> slots(instances.size());
  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    for (std::size_t i = next++; i < instances.size(); i = next++) {
      InstanceContext ctx(instances[i].group, instances[i].subgroup, c.budget);
      for (auto id : c.theorems) slots[i].push_back(check_theorem(id, ctx));
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = unsigned(std::min<std::size_t>(threads, std::max<std::size_t>(1, instances.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  for (auto& s : slots)
    for (auto& r : s) report.results.push_back(std::move(r));
  return report;
}

inline nlohmann::ordered_json to_json(const InstanceResult& r) {
  nlohmann::ordered_json j;
  j["theorem"] = theorem_name(r.theorem);
  j["group"] = r.group;
  j["subgroup"] = r.subgroup;
  j["hypothesis_met"] = r.hypothesis_met;
  j["predicted"] = to_json(r.predicted);
  j["actual"] = to_json(r.actual);
  j["verdict"] = verdict_name(r.verdict);
  j["note"] = r.note;
  return j;
}

inline nlohmann::ordered_json to_json(const Report& report) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["instances"] = report.instance_count;
  auto ids = ordered_json::array();
  for (auto id : report.theorems) ids.push_back(theorem_name(id));
  j["theorems"] = std::move(ids);
  ordered_json summary = ordered_json::object();
  const auto counts = report.counts();
  for (auto id : report.theorems) {
    const auto& c = counts.at(id);
    summary[std::string(theorem_name(id))] = {
        {"pass", c.pass}, {"fail", c.fail}, {"flagged", c.flagged}, {"skipped", c.skipped}};
  }
  j["summary"] = std::move(summary);
  const auto k = report.kappa_split();
  j["kappa_split"] = {{"complete_agree", k.complete_agree},
                      {"complete_disagree", k.complete_disagree},
                      {"non_complete_agree", k.non_complete_agree},
                      {"non_complete_disagree", k.non_complete_disagree}};
  auto non_pass = ordered_json::array();
  auto all = ordered_json::array();
  for (const auto& r : report.results) {
    if (r.verdict != Verdict::pass) non_pass.push_back(to_json(r));
    all.push_back(to_json(r));
  }
  j["non_pass"] = std::move(non_pass);
  j["results"] = std::move(all);
  return j;
}

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace detail

// One row per result: theorem,group,subgroup,hypothesis_met,predicted,actual,verdict
inline std::string to_csv(const Report& report) {
  std::ostringstream os;
  os << "theorem,group,subgroup,hypothesis_met,predicted,actual,verdict\n";
  for (const auto& r : report.results) {
    os << theorem_name(r.theorem) << ',' << detail::csv_field(r.group) << ','
       << detail::csv_field(r.subgroup) << ',' << (r.hypothesis_met ? "true" : "false") << ','
       << detail::csv_field(to_string(r.predicted)) << ',' << detail::csv_field(to_string(r.actual))
       << ',' << verdict_name(r.verdict) << '\n';
  }
  return os.str();
}

}  // namespace nspg
