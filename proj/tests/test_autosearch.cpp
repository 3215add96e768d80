#include <gtest/gtest.h>

#include <random>

#include "metacirc/autosearch.hpp"
#include "metacirc/cayley.hpp"
#include "oracles.hpp"

using namespace metacirc;

namespace {

std::vector<Graph> fixtures() {
  const GroupSpec G(7, 3, 2);
  const GroupSpec H(13, 3, 3);
  return {oracle::complete(5),
          oracle::cycle(6),
          oracle::petersen(),
          oracle::circulant(13, {1, -1, 5, -5}),
          build_cayley(standard_connection_set(1, G), G),
          build_cayley(standard_connection_set(1, H), H),
          Graph::from_edges(6, {{0, 1}, {2, 3}, {4, 5}}),
          Graph(4)};
}

bool equitable(const Graph& g, const std::vector<int>& color) {
  const int n = g.n();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (color[x] != color[y]) continue;
      std::map<int, int> cx, cy;
      for (int z : g.neighbors(x)) ++cx[color[z]];
      for (int z : g.neighbors(y)) ++cy[color[z]];
      if (cx != cy) return false;
    }
  return true;
}

}  // namespace

TEST(AutoSearch, KnownGroups) {
  EXPECT_EQ(automorphism_group(oracle::complete(5)).order(), 120u);
  EXPECT_EQ(automorphism_group(oracle::cycle(6)).order(), 12u);
  EXPECT_EQ(automorphism_group(oracle::petersen()).order(), 120u);
  EXPECT_EQ(automorphism_group(Graph(4)).order(), 24u);
  EXPECT_EQ(automorphism_group(Graph::from_edges(6, {{0, 1}, {2, 3}, {4, 5}})).order(), 48u);
  const GroupSpec G(7, 3, 2);
  EXPECT_EQ(automorphism_group(build_cayley(standard_connection_set(1, G), G)).order(), 336u);
}

TEST(AutoSearch, TinyGraphs) {
  EXPECT_EQ(automorphism_group(Graph(0)).order(), 1u);
  EXPECT_EQ(automorphism_group(Graph(1)).order(), 1u);
  EXPECT_EQ(canonical_form(Graph(1)), "@");
  EXPECT_EQ(canonical_form(Graph(0)), "?");
  EXPECT_TRUE(are_isomorphic(Graph(0), Graph(0)));
  EXPECT_THROW(automorphism_group(Graph(3, true)), std::invalid_argument);
}

TEST(AutoSearch, ColoursRestrictTheGroup) {
  const Graph k5 = oracle::complete(5);
  const std::vector<int> colors{0, 0, 1, 1, 1};
  EXPECT_EQ(automorphism_group(k5, colors).order(), 12u);
  const std::vector<int> c6{0, 1, 0, 1, 0, 1};
  EXPECT_EQ(automorphism_group(oracle::cycle(6), c6).order(), 6u);
}

TEST(AutoSearch, Isomorphism) {
  Graph k5e(5);
  for (int x = 0; x < 5; ++x)
    for (int y = x + 1; y < 5; ++y)
      if (!(x == 0 && y == 1)) k5e.add_edge(x, y);
  k5e.normalize();
  EXPECT_FALSE(are_isomorphic(oracle::complete(5), k5e));
  EXPECT_TRUE(are_isomorphic(oracle::circulant(13, {1, -1, 5, -5}), oracle::circulant(13, {2, -2, 3, -3})));
  // same degree sequence, different graphs: C6 versus two triangles
  EXPECT_FALSE(are_isomorphic(oracle::cycle(6), Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}})));
}

TEST(RefineColoring, EquitableAndNormalized) {
  for (const Graph& g : fixtures()) {
    const Coloring c = refine_coloring(g);
    ASSERT_TRUE(equitable(g, c.color));
    int next = 0;
    for (int x : c.color) {
      ASSERT_LE(x, next);
      if (x == next) ++next;
    }
    ASSERT_EQ(next, c.cells);
  }
  const Graph path = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  const Coloring c = refine_coloring(path);
  EXPECT_EQ(c.cells, 3);
  EXPECT_EQ(c.color[0], c.color[4]);
  EXPECT_EQ(c.color[1], c.color[3]);
  EXPECT_FALSE(c.is_discrete());
}

// Properties ----------------------------------------------------------------

TEST(AutoSearchProperty, OrderMatchesBruteForce) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 2 + trial % 7;
    const double p = trial % 3 == 0 ? 0.2 : trial % 3 == 1 ? 0.5 : 0.8;
    const Graph g = oracle::random_graph(n, p, rng);
    const PermGroup aut = automorphism_group(g);
    ASSERT_EQ(aut.order(), oracle::aut_count(g)) << to_graph6(g);
    for (const Perm& s : aut.generators()) ASSERT_TRUE(preserves_adjacency(s, g));
  }
  for (const Graph& g : {oracle::cycle(8), oracle::complete(7), Graph::from_edges(8, {{0, 1}, {2, 3}, {4, 5}, {6, 7}})})
    EXPECT_EQ(automorphism_group(g).order(), oracle::aut_count(g)) << to_graph6(g);
}

TEST(AutoSearchProperty, CanonicalFormIsInvariant) {
  std::mt19937_64 rng(32);
  for (const Graph& g : fixtures()) {
    const GraphAnalysis base = analyze_graph(g);
    for (int t = 0; t < 100; ++t) {
      const Graph h = g.relabeled(oracle::random_labeling(g.n(), rng));
      const GraphAnalysis other = analyze_graph(h);
      ASSERT_EQ(other.canonical, base.canonical) << to_graph6(g);
      ASSERT_EQ(other.aut.order(), base.aut.order());
      ASSERT_EQ(h.relabeled(other.labeling), from_graph6(base.canonical));
    }
  }
}

TEST(AutoSearchProperty, IsomorphismMatchesBruteForce) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 3 + trial % 6;
    const Graph a = oracle::random_graph(n, 0.5, rng);
    // half the time a relabelled copy with one edge toggled
    Graph b = a.relabeled(oracle::random_labeling(n, rng));
    if (trial % 2) {
      Graph c(n);
      const int x = 0, y = 1;
      for (int u = 0; u < n; ++u)
        for (int v : b.neighbors(u))
          if (u < v && !(u == x && v == y)) c.add_edge(u, v);
      if (!b.has_edge(x, y)) c.add_edge(x, y);
      c.normalize();
      b = c;
    }
    ASSERT_EQ(are_isomorphic(a, b), oracle::isomorphic(a, b)) << to_graph6(a) << " " << to_graph6(b);
  }
}
