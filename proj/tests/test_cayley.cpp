#include <gtest/gtest.h>

#include <random>
#include <set>

#include "metacirc/autparam.hpp"
#include "metacirc/cayley.hpp"
#include "metacirc/transitivity.hpp"
#include "oracles.hpp"

using namespace metacirc;

namespace {

const GroupSpec Z7Z3(7, 3, 2);

std::vector<std::vector<int>> components(const Graph& g) {
  std::vector<int> seen(g.n(), -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < g.n(); ++s) {
    if (seen[s] >= 0) continue;
    out.emplace_back();
    std::vector<int> stack{s};
    seen[s] = static_cast<int>(out.size()) - 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      out.back().push_back(x);
      for (int y : g.neighbors(x))
        if (seen[y] < 0) {
          seen[y] = seen[s];
          stack.push_back(y);
        }
    }
  }
  return out;
}

}  // namespace

TEST(ConnectionSet, StandardSetExamples) {
  const ConnectionSet S = standard_connection_set(1, Z7Z3);
  const std::set<Element> got(S.elements().begin(), S.elements().end());
  EXPECT_EQ(got, (std::set<Element>{{0, 1, 0}, {1, 1, 0}, {0, 2, 0}, {5, 2, 0}}));

  const GroupSpec G(23, 11, 2);
  const ConnectionSet T = standard_connection_set(2, G);
  for (const Element& x : T.elements()) EXPECT_TRUE(x.v == 2 || x.v == 9);
  for (const Element& x : T.elements()) EXPECT_TRUE(T.contains(inv(x, G)));

  EXPECT_THROW(standard_connection_set(3, Z7Z3), std::invalid_argument);
  EXPECT_THROW(standard_connection_set(0, Z7Z3), std::invalid_argument);
  EXPECT_THROW(standard_connection_set(3, GroupSpec(7, 9, 2)), std::invalid_argument);  // 3 >= n0 anyway
  EXPECT_THROW(standard_connection_set(3, GroupSpec(19, 9, 4)), std::invalid_argument);  // gcd(3, 9) != 1

  const GroupSpec H(7, 3, 2, 5);
  const ConnectionSet U = standard_connection_set(1, H);
  for (const Element& x : U.elements()) EXPECT_TRUE(x.w == 1 || x.w == 4);
}

TEST(ConnectionSet, Validation) {
  EXPECT_THROW(ConnectionSet({Element{1, 0, 0}, Element{6, 0, 0}, Element{2, 0, 0}}, Z7Z3), std::invalid_argument);
  EXPECT_THROW(ConnectionSet({Element{1, 0, 0}, Element{6, 0, 0}, Element{2, 0, 0}, Element{3, 0, 0}}, Z7Z3),
               std::invalid_argument);
  EXPECT_THROW(ConnectionSet({identity(), Element{6, 0, 0}, Element{1, 0, 0}, Element{2, 0, 0}}, Z7Z3),
               std::invalid_argument);
  EXPECT_THROW(ConnectionSet({Element{1, 0, 0}, Element{6, 0, 0}, Element{1, 0, 0}, Element{6, 0, 0}}, Z7Z3),
               std::invalid_argument);
  EXPECT_THROW(ConnectionSet({Element{9, 0, 0}, Element{6, 0, 0}, Element{1, 0, 0}, Element{2, 0, 0}}, Z7Z3),
               std::invalid_argument);
}

TEST(BuildCayley, Examples) {
  const GroupSpec Z5(5, 1, 1);
  const Graph k5 = build_cayley(ConnectionSet({{1, 0, 0}, {2, 0, 0}, {3, 0, 0}, {4, 0, 0}}, Z5), Z5);
  EXPECT_EQ(k5, oracle::complete(5));
  EXPECT_EQ(k5.edge_count(), 10);

  const Graph g = build_cayley(standard_connection_set(1, Z7Z3), Z7Z3);
  EXPECT_EQ(g.n(), 21);
  EXPECT_EQ(g.edge_count(), 42);
  EXPECT_TRUE(g.is_regular(4));
  EXPECT_TRUE(is_connected(g));

  const Graph split = build_cayley(ConnectionSet({{1, 0, 0}, {2, 0, 0}, {5, 0, 0}, {6, 0, 0}}, Z7Z3), Z7Z3);
  EXPECT_FALSE(is_connected(split));
  const auto comps = components(split);
  ASSERT_EQ(comps.size(), 3u);
  for (const auto& c : comps) EXPECT_EQ(c.size(), 7u);
}

TEST(Graph, ConnectivityEdgeCases) {
  EXPECT_TRUE(is_connected(Graph(1)));
  EXPECT_TRUE(is_connected(Graph(0)));
  EXPECT_FALSE(is_connected(Graph(2)));
  EXPECT_TRUE(is_connected(oracle::complete(5)));
  Graph g(3);
  EXPECT_THROW(g.add_edge(1, 1), std::invalid_argument);
  EXPECT_THROW(g.add_edge(0, 3), std::out_of_range);
}

TEST(QuotientGraph, Examples) {
  const Graph c15 = oracle::circulant(15, {1, -1, 4, -4});
  std::vector<std::vector<int>> residues(3);
  for (int x = 0; x < 15; ++x) residues[x % 3].push_back(x);
  EXPECT_EQ(quotient_graph(c15, residues), oracle::complete(3));

  std::vector<std::vector<int>> singletons;
  for (int x = 0; x < 15; ++x) singletons.push_back({x});
  EXPECT_EQ(quotient_graph(c15, singletons), c15);

  std::vector<std::vector<int>> one(1);
  for (int x = 0; x < 15; ++x) one[0].push_back(x);
  const Graph q = quotient_graph(c15, one);
  EXPECT_EQ(q.n(), 1);
  EXPECT_EQ(q.edge_count(), 0);

  EXPECT_THROW(quotient_graph(c15, {{0, 1}, {1, 2}}), std::invalid_argument);
  EXPECT_THROW(quotient_graph(c15, {{0, 1}}), std::invalid_argument);
  EXPECT_THROW(quotient_graph(c15, {{0, 99}}), std::invalid_argument);
}

TEST(OrbitalGraph, Examples) {
  const Perm rot = Perm::from_cycles(5, {{0, 1, 2, 3, 4}});
  const auto z5 = orbital_graph({rot}, {0, 1}, 5);
  EXPECT_FALSE(z5.self_paired);
  EXPECT_EQ(z5.digraph.arc_count(), 5);
  EXPECT_TRUE(z5.digraph.directed());
  for (int x = 0; x < 5; ++x) EXPECT_TRUE(z5.digraph.has_edge(x, (x + 1) % 5));

  const Perm flip = Perm::from_cycles(5, {{1, 4}, {2, 3}});
  const auto d5 = orbital_graph({rot, flip}, {0, 1}, 5);
  EXPECT_TRUE(d5.self_paired);
  EXPECT_EQ(d5.digraph.arc_count(), 10);

  const Perm a = Perm::from_cycles(4, {{0, 1, 2}});
  const Perm b = Perm::from_cycles(4, {{1, 2, 3}});
  const auto a4 = orbital_graph({a, b}, {0, 1}, 4);
  EXPECT_EQ(a4.digraph.arc_count(), 12);
  EXPECT_TRUE(a4.self_paired);
  EXPECT_THROW(orbital_graph({a}, {0, 9}, 4), std::out_of_range);
}

TEST(Graph6, Examples) {
  EXPECT_EQ(to_graph6(oracle::complete(5)), "D~{");
  EXPECT_EQ(to_graph6(Graph(1)), "@");
  EXPECT_EQ(to_graph6(Graph::from_edges(2, {{0, 1}})), "A_");
  EXPECT_EQ(export_graph(oracle::complete(5), ExportFormat::graph6), "D~{");
  EXPECT_EQ(from_graph6("D~{"), oracle::complete(5));
  EXPECT_EQ(from_graph6(">>graph6<<A_\n"), Graph::from_edges(2, {{0, 1}}));
  EXPECT_THROW(from_graph6("D~"), std::invalid_argument);
  EXPECT_THROW(from_graph6(""), std::invalid_argument);
}

TEST(Graph6, LargeSizeForm) {
  const Graph g = build_cayley(standard_connection_set(1, Z7Z3), Z7Z3);
  EXPECT_EQ(to_graph6(g)[0], static_cast<char>(21 + 63));
  const GroupSpec G(23, 11, 2);
  const Graph big = build_cayley(standard_connection_set(1, G), G);
  const std::string s = to_graph6(big);
  EXPECT_EQ(s.substr(0, 4), std::string("~") + static_cast<char>(63) + static_cast<char>(63 + 3) +
                                static_cast<char>(63 + 61));  // 253 = 3*64 + 61
  EXPECT_EQ(from_graph6(s), big);
}

TEST(Graph6, RoundTripAgainstIndependentDecoder) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + trial * 2;
    const Graph g = oracle::random_graph(n, 0.3, rng);
    const std::string s = to_graph6(g);
    ASSERT_EQ(oracle::decode_graph6(s), oracle::matrix(g)) << s;
    ASSERT_EQ(from_graph6(s), g);
  }
}

TEST(Export, DotAndJson) {
  const Graph p = Graph::from_edges(3, {{0, 1}, {1, 2}});
  const std::string dot = to_dot(p);
  EXPECT_NE(dot.find("graph G {"), std::string::npos);
  EXPECT_NE(dot.find("0 -- 1;"), std::string::npos);
  EXPECT_NE(dot.find("1 -- 2;"), std::string::npos);
  EXPECT_EQ(dot.find("2 -- 1;"), std::string::npos);
  const auto j = to_json(p);
  EXPECT_EQ(j["n"], 3);
  EXPECT_EQ(graph_from_json(j), p);
  EXPECT_EQ(graph_from_json(nlohmann::json::parse(export_graph(p, ExportFormat::json))), p);
  EXPECT_THROW(graph_from_json(nlohmann::json::parse(R"({"n":2,"adj":[[1],[]]})")), std::invalid_argument);
}

// Properties ----------------------------------------------------------------

TEST(CayleyProperty, RegularRepresentationActsAsAutomorphisms) {
  for (const GroupSpec& G : {GroupSpec(7, 3, 2), GroupSpec(13, 3, 3), GroupSpec(7, 3, 2, 5), GroupSpec(11, 5, 3)}) {
    for (i64 j = 1; j < G.n0(); ++j) {
      if (std::gcd(j, G.n()) != 1) continue;
      const Graph g = build_cayley(standard_connection_set(j, G), G);
      for (const Perm& p : regular_representation(G)) ASSERT_TRUE(preserves_adjacency(p, g));
    }
  }
}

TEST(CayleyProperty, ConnectedIffGenerating) {
  for (const GroupSpec& G : {GroupSpec(7, 3, 2), GroupSpec(13, 3, 3), GroupSpec(3, 3, 1), GroupSpec(15, 1, 1)}) {
    std::vector<Element> reps;
    for (i64 i = 1; i < G.order(); ++i)
      if (i < G.index(inv(G.element_at(i), G))) reps.push_back(G.element_at(i));
    for (std::size_t p = 0; p < reps.size(); ++p)
      for (std::size_t q = p + 1; q < reps.size(); ++q) {
        const ConnectionSet S({reps[p], inv(reps[p], G), reps[q], inv(reps[q], G)}, G);
        ASSERT_EQ(is_connected(build_cayley(S, G)), closure({reps[p], reps[q]}, G) == G.order());
      }
  }
}

TEST(CayleyProperty, AutomorphismsOfGInduceIsomorphisms) {
  const GroupSpec G(11, 5, 3);
  const ConnectionSet S = standard_connection_set(1, G);
  const Graph g = build_cayley(S, G);
  for (const AutoMap& f : enumerate_aut(G)) {
    const ConnectionSet T(image_of_set(f, S.elements(), G), G);
    const Graph h = build_cayley(T, G);
    std::vector<int> label(G.order());
    for (i64 i = 0; i < G.order(); ++i) label[i] = static_cast<int>(G.index(f.apply(G.element_at(i), G)));
    ASSERT_EQ(g.relabeled(label), h);
  }
}
