#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "metacirc/graph.hpp"
#include "metacirc/metagroup.hpp"
#include "metacirc/perm.hpp"

namespace metacirc {

/// Inverse-closed, identity-free set of four distinct elements {x, x^-1, y, y^-1},
/// stored sorted by vertex index.
class ConnectionSet {
 public:
  ConnectionSet(std::vector<Element> elems, const GroupSpec& G) : elems_(std::move(elems)) {
    if (elems_.size() != 4) throw std::invalid_argument("ConnectionSet: need exactly 4 elements");
    for (const Element& x : elems_)
      if (!G.valid(x)) throw std::invalid_argument("ConnectionSet: element not in normal form");
    std::sort(elems_.begin(), elems_.end(),
              [&G](const Element& x, const Element& y) { return G.index(x) < G.index(y); });
    if (std::adjacent_find(elems_.begin(), elems_.end()) != elems_.end())
      throw std::invalid_argument("ConnectionSet: elements are not distinct");
    for (const Element& x : elems_) {
      if (x == identity()) throw std::invalid_argument("ConnectionSet: contains the identity");
      if (!contains(inv(x, G))) throw std::invalid_argument("ConnectionSet: not inverse-closed");
    }
  }

  const std::vector<Element>& elements() const { return elems_; }

  bool contains(const Element& x) const { return std::find(elems_.begin(), elems_.end(), x) != elems_.end(); }

  std::vector<i64> indices(const GroupSpec& G) const {
    std::vector<i64> out;
    for (const Element& x : elems_) out.push_back(G.index(x));
    return out;
  }

  friend bool operator==(const ConnectionSet&, const ConnectionSet&) = default;

 private:
  std::vector<Element> elems_;
};

/// S_j = {c b^j, c^-1 a b^j, c^-1 b^-j, c (a b^j)^-1}; without the central
/// factor (ell == 1) this is {b^j, a b^j, b^-j, (a b^j)^-1}.
/// Requires 1 <= j < n0 and gcd(j, n) == 1.
inline ConnectionSet standard_connection_set(i64 j, const GroupSpec& G) {
  if (j < 1 || j >= G.n0() || std::gcd(j, G.n()) != 1)
    throw std::invalid_argument("standard_connection_set: need 1 <= j < n0 and gcd(j, n) == 1");
  const Element bj{0, mod(j, G.n()), 0};
  const Element abj = mul(G.a(), bj, G);
  const Element c = G.c();
  const Element cinv = inv(c, G);
  return ConnectionSet({mul(c, bj, G), mul(cinv, abj, G), mul(cinv, inv(bj, G), G), mul(c, inv(abj, G), G)}, G);
}

/// Cay(G, S): x ~ y iff y x^-1 in S, so the neighbours of x are s x.
inline Graph build_cayley(const ConnectionSet& S, const GroupSpec& G) {
  const i64 N = G.order();
  Graph g(static_cast<int>(N));
  for (i64 i = 0; i < N; ++i) {
    const Element x = G.element_at(i);
    for (const Element& s : S.elements()) {
      const i64 j = G.index(mul(s, x, G));
      if (i < j) g.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  }
  g.normalize();
  return g;
}

struct OrbitalGraph {
  Graph digraph;
  bool self_paired = false;
};

/// Orbital digraph: arcs form the orbit of `seed` under <gens>.
inline OrbitalGraph orbital_graph(const std::vector<Perm>& gens, std::pair<int, int> seed, int degree) {
  if (seed.first < 0 || seed.second < 0 || seed.first >= degree || seed.second >= degree)
    throw std::out_of_range("orbital_graph: seed out of range");
  for (const Perm& p : gens)
    if (static_cast<int>(p.degree()) != degree) throw std::invalid_argument("orbital_graph: degree mismatch");
  std::set<std::pair<int, int>> arcs{seed};
  std::deque<std::pair<int, int>> queue{seed};
  while (!queue.empty()) {
    auto [x, y] = queue.front();
    queue.pop_front();
    for (const Perm& p : gens) {
      std::pair<int, int> img{p[x], p[y]};
      if (arcs.insert(img).second) queue.push_back(img);
    }
  }
  OrbitalGraph out{Graph(degree, true), arcs.count({seed.second, seed.first}) > 0};
  if (seed.first != seed.second)
    for (auto [x, y] : arcs) out.digraph.add_edge(x, y);
  out.digraph.normalize();
  return out;
}

enum class ExportFormat { graph6, dot, json };

inline std::string export_graph(const Graph& g, ExportFormat format) {
  switch (format) {
    case ExportFormat::graph6:
      return to_graph6(g);
    case ExportFormat::dot:
      return to_dot(g);
    case ExportFormat::json:
      return to_json(g).dump();
  }
  throw std::invalid_argument("export_graph: unknown format");
}

}  // namespace metacirc
