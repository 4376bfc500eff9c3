#include <gtest/gtest.h>

#include "nspg/graph.hpp"
#include "nspg/power_degree.hpp"
#include "nspg/power_graph.hpp"
#include "oracles.hpp"

using namespace nspg;

namespace {

std::size_t half_order_sum(const FiniteGroup& g) {
  // Edge count of a power graph: (1/2) sum over a of (2 o(a) - phi(o(a)) - 1).
  std::size_t twice = 0;
  for (Element a = 0; a < g.order(); ++a) {
    const auto o = element_order(g, a);
    twice += 2 * o - euler_phi(o) - 1;
  }
  return twice / 2;
}

SubgroupSet gen(const FiniteGroup& g, std::vector<Element> gens) { return generated_subgroup(g, gens); }

}  // namespace

TEST(SimpleGraph, Basics) {
  auto g = SimpleGraph::with_vertices(4);
  g.add_edge(0, 1);
  g.add_edge(1, 0);
  g.add_edge(2, 3);
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_TRUE(g.has_edge(1, 0));
  EXPECT_EQ(g.degree(1), 1u);
  EXPECT_THROW(g.add_edge(2, 2), InvalidArgument);
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {2, 3}}));
  EXPECT_EQ(g.complement().edge_count(), 4u);
  g.remove_edge(0, 1);
  EXPECT_FALSE(g.has_edge(0, 1));
}

TEST(SimpleGraph, JsonRoundTrip) {
  const auto z6 = make_group(GroupSpec::cyclic(6));
  const auto g = power_graph(z6);
  EXPECT_EQ(graph_from_json(to_json(g)), g);
}

TEST(SimpleGraph, Dot) {
  const auto g = SimpleGraph::from_edges(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(to_dot(g, "P3"),
            "graph \"P3\" {\n  0 [label=\"0\"];\n  1 [label=\"1\"];\n  2 [label=\"2\"];\n"
            "  0 -- 1;\n  1 -- 2;\n}\n");
}

TEST(PowerGraph, Small) {
  EXPECT_EQ(power_graph(make_group(GroupSpec::cyclic(2))).edge_count(), 1u);
  const auto z5 = power_graph(make_group(GroupSpec::cyclic(5)));
  EXPECT_EQ(z5.edge_count(), 10u);
  const auto z6 = power_graph(make_group(GroupSpec::cyclic(6)));
  EXPECT_EQ(z6.edge_count(), 13u);
  EXPECT_FALSE(z6.has_edge(3, 2));
  EXPECT_FALSE(z6.has_edge(3, 4));
  EXPECT_EQ(z6.complement().edge_count(), 2u);
}

TEST(PowerGraph, EdgeCountIdentity) {
  for (const char* spec : {"Z6", "Z12", "D4", "S4", "Q8", "E(3,2)", "Z2xZ6"}) {
    const auto g = make_group(parse_group_spec(spec));
    EXPECT_EQ(power_graph(g).edge_count(), half_order_sum(g)) << spec;
  }
}

TEST(PowerGraph, Reduced) {
  EXPECT_EQ(reduced_power_graph(make_group(GroupSpec::cyclic(2))).vertex_count(), 1u);
  EXPECT_EQ(reduced_power_graph(make_group(GroupSpec::cyclic(2))).edge_count(), 0u);
  EXPECT_EQ(reduced_power_graph(make_group(GroupSpec::cyclic(5))).edge_count(), 6u);
  EXPECT_EQ(reduced_power_graph(make_group(GroupSpec::cyclic(6))).edge_count(), 8u);
  EXPECT_THROW(reduced_power_graph(make_group(GroupSpec::cyclic(1))), InvalidArgument);
}

TEST(NsbPowerGraph, TrivialSubgroupIsPowerGraph) {
  for (const char* spec : {"Z6", "D4", "Q8", "S3"}) {
    const auto g = make_group(parse_group_spec(spec));
    EXPECT_EQ(nsb_power_graph(g, gen(g, {})).graph, power_graph(g)) << spec;
  }
}

TEST(NsbPowerGraph, Anchors) {
  const auto z4 = make_group(GroupSpec::cyclic(4));
  const auto k3 = nsb_power_graph(z4, gen(z4, {2}));
  EXPECT_EQ(k3.vertex_element, (std::vector<Element>{0, 1, 3}));
  EXPECT_EQ(k3.graph.edge_count(), 3u);

  const auto d4 = make_group(GroupSpec::dihedral(4));
  const auto center = nsb_power_graph(d4, gen(d4, {2}));
  EXPECT_EQ(center.graph.vertex_count(), 7u);
  EXPECT_EQ(center.graph.edge_count(), 9u);
  // Three coset pairs, each joined only to itself and e.
  for (std::size_t i = 1; i < 7; ++i)
    for (std::size_t j = i + 1; j < 7; ++j)
      EXPECT_EQ(center.graph.has_edge(i, j), center.coset_of[i] == center.coset_of[j]);

  const auto z12 = make_group(GroupSpec::cyclic(12));
  const auto g47 = nsb_power_graph(z12, gen(z12, {6}));
  EXPECT_EQ(g47.graph.vertex_count(), 11u);
  EXPECT_EQ(g47.graph.edge_count(), 47u);
}

TEST(NsbPowerGraph, Rejects) {
  const auto s3 = make_group(GroupSpec::symmetric(3));
  Element t = 1;
  while (element_order(s3, t) != 2) ++t;
  EXPECT_THROW(nsb_power_graph(s3, gen(s3, {t})), InvalidArgument);
  const auto z4 = make_group(GroupSpec::cyclic(4));
  EXPECT_THROW(nsb_power_graph(z4, gen(z4, {1})), InvalidArgument);
}

TEST(NsbPowerGraph, MatchesDefinitionOracle) {
  for (const char* spec : {"Z8", "Z12", "D4", "D6", "Q8", "S3", "S4", "Z2xZ4", "E(2,3)", "Z3xZ3"}) {
    const auto g = make_group(parse_group_spec(spec));
    for (const auto& h : all_normal_subgroups(g)) {
      if (h.is_whole_group()) continue;
      const auto nsb = nsb_power_graph(g, h);
      EXPECT_EQ(nsb.graph.edges(), oracle::nsb_by_definition(g, h).edges()) << spec << " " << describe(h);
      const auto q = quotient(g, h);
      EXPECT_EQ(expand_quotient_graph(q, h).graph, nsb.graph) << spec << " " << describe(h);
    }
  }
}

TEST(NsbPowerGraph, StructuralFacts) {
  for (const char* spec : {"Z12", "D6", "Z2xZ6", "Q8", "S4"}) {
    const auto g = make_group(parse_group_spec(spec));
    for (const auto& h : all_normal_subgroups(g)) {
      if (h.is_whole_group()) continue;
      const auto nsb = nsb_power_graph(g, h);
      const auto& gr = nsb.graph;
      EXPECT_EQ(gr.vertex_count(), g.order() - h.order() + 1);
      EXPECT_EQ(gr.degree(0), gr.vertex_count() - 1);  // identity dominates
      for (std::size_t i = 1; i < gr.vertex_count(); ++i)
        for (std::size_t j = i + 1; j < gr.vertex_count(); ++j) {
          if (nsb.coset_of[i] == nsb.coset_of[j]) EXPECT_TRUE(gr.has_edge(i, j));
          // Adjacency depends only on the pair of cosets.
          for (std::size_t k = 1; k < gr.vertex_count(); ++k)
            if (k != i && k != j && nsb.coset_of[k] == nsb.coset_of[j])
              ASSERT_EQ(gr.has_edge(i, j), gr.has_edge(i, k));
        }
    }
  }
}

TEST(DegreeFormula, PowerGraph) {
  const auto z6 = make_group(GroupSpec::cyclic(6));
  EXPECT_EQ(degree_in_power_graph_formula(z6, 2), 4u);
  EXPECT_EQ(power_graph(z6).degree(2), 4u);
  for (std::size_t n = 1; n <= 24; ++n) {
    const auto zn = make_group(GroupSpec::cyclic(n));
    EXPECT_EQ(degree_in_power_graph_formula(zn, 0), n - 1);
  }
  const auto z5 = make_group(GroupSpec::cyclic(5));
  for (Element a = 1; a < 5; ++a) EXPECT_EQ(degree_in_power_graph_formula(z5, a), 4u);
  for (const char* spec : {"D5", "S4", "Q8", "Z2xZ6", "Z4xZ4", "E(3,2)"}) {
    const auto g = make_group(parse_group_spec(spec));
    const auto pg = power_graph(g);
    for (Element a = 0; a < g.order(); ++a) EXPECT_EQ(degree_in_power_graph_formula(g, a), pg.degree(a)) << spec;
  }
}
