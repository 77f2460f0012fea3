#include <gtest/gtest.h>

#include <random>

#include "dblgpd/graph.hpp"
#include "support.hpp"

using namespace dblgpd;
using namespace testing_support;

namespace {

ReducedPath word(const ReflexiveGraph& g, const std::string& start, const std::string& text) {
  return reduce_path(g, g.vertex(start), parse_word(g, text));
}

}  // namespace

TEST(Graph, ConstructionRejectsBadNames) {
  ReflexiveGraph g;
  g.add_vertex("a");
  EXPECT_THROW(g.add_vertex("a"), InputError);
  EXPECT_THROW(g.add_edge("e", "a", "b"), InputError);
  g.add_edge("e", "a", "a");
  EXPECT_THROW(g.add_edge("e", "a", "a"), InputError);
  EXPECT_EQ(g.star(0).size(), 2u);
}

TEST(Graph, ReductionCancelsBacktracks) {
  const auto c = cycle_graph(3);
  const auto p = word(c, "v0", "e0.e1.~e1.~e0.e0");
  EXPECT_EQ(show_path(c, p), "v0:e0");
  const auto loop = word(c, "v0", "e0.e1.e2");
  EXPECT_EQ(loop.end, c.vertex("v0"));
  EXPECT_EQ(show_path(c, word(c, "v1", "")), "v1:id");
  EXPECT_THROW(word(c, "v0", "e1"), InputError);
  EXPECT_THROW(parse_word(c, "zz"), InputError);
}

TEST(Graph, ReductionMatchesNaiveOracle) {
  const auto g = random_covering(3, 11);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    // A random walk (with backtracks allowed) from a random vertex.
    VertexId x = static_cast<VertexId>(rng() % g.domain->vertex_count());
    const VertexId start = x;
    std::vector<SignedEdge> w;
    const int len = static_cast<int>(rng() % 10);
    for (int i = 0; i < len; ++i) {
      const auto& star = g.domain->star(x);
      const auto s = star[rng() % star.size()];
      w.push_back(s);
      x = g.domain->to(s);
    }
    const auto p = reduce_path(*g.domain, start, w);
    EXPECT_EQ(p.word, naive_reduce(w));
    EXPECT_EQ(p.end, x);
    EXPECT_EQ(map_path(g, p).word, naive_image(g, w));
  }
}

TEST(Graph, BoundedEnumerationMatchesBruteForce) {
  const auto g = random_covering(2, 3);
  for (VertexId x = 0; x < static_cast<VertexId>(g.domain->vertex_count()); ++x) {
    EXPECT_EQ(reduced_paths_from(*g.domain, x, 4), brute_paths(*g.domain, x, 4));
  }
}

TEST(Graph, FundamentalGroupoidAudit) {
  const auto c = share(cycle_graph(4));
  const auto g = pi1(c);
  EXPECT_TRUE(audit_groupoid(g, 3).ok());
  const auto e0 = word(*c, "v0", "e0");
  const auto back = word(*c, "v1", "~e0");
  EXPECT_EQ(*g.compose(e0, back), empty_path(0));
  EXPECT_FALSE(g.compose(e0, e0).has_value());
}

TEST(GraphMap, TypingAndComposition) {
  const auto p = cyclic_cover(2, 3);
  EXPECT_TRUE(map_problems(p).empty());
  EXPECT_TRUE(is_covering(p));
  const auto id = identity_map(p.domain);
  const auto q = compose_maps(id, p);
  EXPECT_EQ(q.vertex_map, p.vertex_map);
  EXPECT_EQ(q.edge_map, p.edge_map);
  EXPECT_TRUE(audit_functor(pi1_functor(p), 3).ok());

  auto bad = p;
  bad.vertex_map[1] = 0;
  EXPECT_FALSE(map_problems(bad).empty());
}

TEST(GraphMap, StarConditions) {
  // The inclusion of a path into a cycle is star-injective only.
  const auto path = share(path_graph(3, "v", "e"));
  const auto cycle = share(cycle_graph(4, "b", "c"));
  GraphMap inc{path, cycle, {0, 1, 2}, {0, 1}};
  EXPECT_TRUE(map_problems(inc).empty());
  EXPECT_FALSE(is_covering(inc));
  EXPECT_FALSE(is_star_surjective(inc));
  EXPECT_TRUE(star_condition_witness(inc, true).has_value());

  // A collapsed edge disqualifies a covering.
  const auto c4 = share(cycle_graph(4, "v", "e"));
  const auto c3 = share(cycle_graph(3, "b", "c"));
  GraphMap collapse{c4, c3, {0, 1, 2, 0}, {0, 1, 2, std::nullopt}};
  EXPECT_TRUE(map_problems(collapse).empty());
  EXPECT_FALSE(is_covering(collapse));
}

TEST(GraphMap, PathLifting) {
  const auto p = cyclic_cover(3, 3);
  const auto& base = *p.codomain;
  const auto w = parse_word(base, "c0.c1.c2.c0");
  const auto lift = lift_word(p, 0, w);
  ASSERT_TRUE(lift.has_value());
  EXPECT_EQ(map_word(p, *lift), w);
  EXPECT_EQ(reduce_path(*p.domain, 0, *lift).end, 4);
}

TEST(FiberProduct, KernelPairOfCoverHasExpectedSize) {
  const auto p = cyclic_cover(2, 3);
  const auto fp = fiber_product(p, p);
  // pairs of vertices in the same fibre: 3 * 2 * 2
  EXPECT_EQ(fp.graph->vertex_count(), 12u);
  EXPECT_TRUE(map_problems(fp.first).empty());
  EXPECT_TRUE(map_problems(fp.second).empty());
  for (VertexId v = 0; v < static_cast<VertexId>(fp.graph->vertex_count()); ++v) {
    EXPECT_EQ(p(fp.first(v)), p(fp.second(v)));
  }
}

TEST(FiberProduct, ProductGraphProjections) {
  const auto b = share(cycle_graph(3, "b", "c"));
  const auto f = share(path_graph(2, "f", "g"));
  const auto fp = product_graph(b, f);
  EXPECT_EQ(fp.graph->vertex_count(), 6u);
  EXPECT_TRUE(map_problems(fp.first).empty());
  EXPECT_TRUE(map_problems(fp.second).empty());
}

TEST(Foliation, PartitionChecks) {
  const auto c = share(cycle_graph(4));
  FoliatedGraph ok{c, {{0, 1, 2, 3}}, {{0, 1, 2, 3}}};
  EXPECT_TRUE(foliation_problems(ok).empty());
  FoliatedGraph overlap{c, {{0, 1}, {1, 2, 3}}, {{0}, {1, 2, 3}}};
  EXPECT_FALSE(foliation_problems(overlap).empty());
  EXPECT_THROW(foliation_space(overlap), InputError);
  FoliatedGraph leaky{c, {{0, 1}, {2, 3}}, {{0, 1}, {2, 3}}};
  EXPECT_FALSE(foliation_problems(leaky).empty());
}

TEST(Foliation, LeafSpaceKeepsNames) {
  const auto c = share(cycle_graph(3));
  FoliatedGraph f{c, {{0, 1, 2}}, {{0, 1, 2}}};
  const auto space = foliation_space(f);
  EXPECT_EQ(space.graph->vertex_count(), 3u);
  EXPECT_TRUE(map_problems(space.to_base).empty());
  for (VertexId v = 0; v < 3; ++v)
    EXPECT_EQ(space.graph->vertex_name(v), c->vertex_name(space.to_base(v)));
}
