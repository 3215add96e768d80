#pragma once

// Orbit counts of a permutation group on the edges, arcs and s-arcs of a
// graph, and the normalizer of the right-regular copy of G.

#include <cstdint>
#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "metacirc/graph.hpp"
#include "metacirc/metagroup.hpp"
#include "metacirc/permgroup.hpp"

namespace metacirc {

namespace detail {

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x != y) parent[std::max(x, y)] = std::min(x, y);
  }
  std::size_t classes() {
    std::size_t k = 0;
    for (std::size_t i = 0; i < parent.size(); ++i) k += find(i) == i;
    return k;
  }
  std::vector<std::size_t> parent;
};

/// All s-arcs (v0, ..., vs) with v_{i+1} ~ v_i and v_{i+1} != v_{i-1}.
inline std::vector<std::vector<int>> s_arcs(const Graph& g, int s) {
  std::vector<std::vector<int>> out;
  std::vector<int> walk;
  auto extend = [&](auto&& self) -> void {
    if (static_cast<int>(walk.size()) == s + 1) {
      out.push_back(walk);
      return;
    }
    const int last = walk.back();
    const int prev = walk.size() >= 2 ? walk[walk.size() - 2] : -1;
    for (int y : g.neighbors(last)) {
      if (y == prev) continue;
      walk.push_back(y);
      self(self);
      walk.pop_back();
    }
  };
  for (int v = 0; v < g.n(); ++v) {
    walk.assign(1, v);
    extend(extend);
  }
  return out;
}

}  // namespace detail

/// Whether p maps edges to edges (hence non-edges to non-edges).
inline bool preserves_adjacency(const Perm& p, const Graph& g) {
  if (static_cast<int>(p.degree()) != g.n()) return false;
  for (int x = 0; x < g.n(); ++x) {
    if (g.degree(p[x]) != g.degree(x)) return false;
    for (int y : g.neighbors(x))
      if (!g.has_edge(p[x], p[y])) return false;
  }
  return true;
}

inline void require_automorphisms(const PermGroup& group, const Graph& g) {
  for (const Perm& p : group.generators())
    if (!preserves_adjacency(p, g))
      throw std::invalid_argument("generator " + p.to_cycle_string() + " does not preserve adjacency");
}

/// Orbits of the group on s-arcs; s = 0 counts vertex orbits, s = 1 arc orbits.
inline std::size_t s_arc_orbit_count(const PermGroup& group, const Graph& g, int s) {
  if (s < 0) throw std::invalid_argument("s_arc_orbit_count: s must be non-negative");
  require_automorphisms(group, g);
  const auto arcs = detail::s_arcs(g, s);
  if (arcs.empty()) return 0;
  // Mixed-radix key: v0, then the neighbour position of each later vertex.
  std::uint64_t radix = 1;
  for (int x = 0; x < g.n(); ++x) radix = std::max<std::uint64_t>(radix, g.degree(x));
  auto key = [&](const std::vector<int>& w) {
    std::uint64_t k = static_cast<std::uint64_t>(w[0]);
    for (std::size_t i = 1; i < w.size(); ++i) {
      const auto& row = g.neighbors(w[i - 1]);
      k = k * radix + static_cast<std::uint64_t>(std::lower_bound(row.begin(), row.end(), w[i]) - row.begin());
    }
    return k;
  };
  std::unordered_map<std::uint64_t, std::size_t> id;
  id.reserve(arcs.size() * 2);
  for (std::size_t i = 0; i < arcs.size(); ++i) id.emplace(key(arcs[i]), i);
  detail::DisjointSets dsu(arcs.size());
  std::vector<int> img(static_cast<std::size_t>(s) + 1);
  for (const Perm& p : group.generators())
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      for (std::size_t k = 0; k < img.size(); ++k) img[k] = p[arcs[i][k]];
      dsu.unite(i, id.at(key(img)));
    }
  return dsu.classes();
}

inline std::size_t vertex_orbit_count(const PermGroup& group, const Graph& g) {
  return s_arc_orbit_count(group, g, 0);
}

inline std::size_t arc_orbit_count(const PermGroup& group, const Graph& g) {
  return s_arc_orbit_count(group, g, 1);
}

/// Orbits on undirected edges {x, y}.
inline std::size_t edge_orbit_count(const PermGroup& group, const Graph& g) {
  if (g.directed()) throw std::invalid_argument("edge_orbit_count: undirected graphs only");
  require_automorphisms(group, g);
  std::vector<std::pair<int, int>> edges;
  for (int x = 0; x < g.n(); ++x)
    for (int y : g.neighbors(x))
      if (x < y) edges.emplace_back(x, y);
  if (edges.empty()) return 0;
  auto index_of = [&](int x, int y) {
    if (x > y) std::swap(x, y);
    return static_cast<std::size_t>(std::lower_bound(edges.begin(), edges.end(), std::pair{x, y}) - edges.begin());
  };
  detail::DisjointSets dsu(edges.size());
  for (const Perm& p : group.generators())
    for (std::size_t i = 0; i < edges.size(); ++i) dsu.unite(i, index_of(p[edges[i].first], p[edges[i].second]));
  return dsu.classes();
}

/// Largest s <= cap such that the group is transitive on s-arcs for every
/// s' <= s; 0 when the group is not arc-transitive.
inline int max_s_arc_transitive(const PermGroup& group, const Graph& g, int cap = 3) {
  if (g.n() == 0 || vertex_orbit_count(group, g) != 1 || arc_orbit_count(group, g) != 1) return 0;
  int s = 1;
  while (s < cap && s_arc_orbit_count(group, g, s + 1) == 1) ++s;
  return s;
}

/// Order of the normalizer of the right-regular copy of G inside `aut`,
/// by filtering group elements. Throws std::length_error above `limit`.
inline std::uint64_t normalizer_of_regular(const PermGroup& aut, const GroupSpec& G,
                                           std::uint64_t limit = 10'000'000) {
  if (aut.degree() != G.order()) throw std::invalid_argument("normalizer_of_regular: degree != |G|");
  std::vector<Perm> regular;
  for (Perm& p : regular_representation(G))
    if (!p.is_identity()) regular.push_back(std::move(p));
  // p is right multiplication by element_at(p[0]) iff it agrees with it everywhere.
  auto in_regular = [&G](const Perm& p) {
    const Element g = G.element_at(p[0]);
    for (i64 i = 0; i < G.order(); ++i)
      if (G.index(mul(G.element_at(i), g, G)) != p[static_cast<int>(i)]) return false;
    return true;
  };
  if (aut.chain().order_exact() > limit) throw std::length_error("normalizer_of_regular: group too large");
  std::uint64_t count = 0;
  aut.chain().for_each_element([&](const Perm& sigma) {
    const Perm sigma_inv = sigma.inverse();
    for (const Perm& rho : regular)
      if (!in_regular(sigma_inv * rho * sigma)) return;
    ++count;
  });
  return count;
}

}  // namespace metacirc
