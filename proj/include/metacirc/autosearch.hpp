#pragma once

// Graph automorphism groups and canonical forms by equitable colour
// refinement plus individualization. Colours inside the search are ranks of
// labelling-invariant keys, so the search tree is itself invariant: relabel
// the graph and the tree is relabelled with it.

#include <algorithm>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "metacirc/graph.hpp"
#include "metacirc/permgroup.hpp"
#include "metacirc/transitivity.hpp"

namespace metacirc {

/// Equitable vertex colouring; colour ids in order of first occurrence.
struct Coloring {
  std::vector<int> color;
  int cells = 0;

  bool is_discrete() const { return cells == static_cast<int>(color.size()); }
};

namespace detail {

inline std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
  h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h * 0xff51afd7ed558ccdULL;
}

/// Replaces each key by its rank among the distinct keys; returns the count.
/// The trace absorbs the sorted distinct keys with multiplicities.
inline int rank_keys(const std::vector<std::vector<int>>& keys, std::vector<int>& color, std::uint64_t& trace) {
  const int n = static_cast<int>(keys.size());
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int x, int y) { return keys[x] < keys[y]; });
  int rank = -1;
  std::size_t run = 0;
  for (int k = 0; k < n; ++k) {
    if (k == 0 || keys[order[k]] != keys[order[k - 1]]) {
      if (k > 0) trace = mix(trace, run);
      ++rank;
      run = 0;
      for (int x : keys[order[k]]) trace = mix(trace, static_cast<std::uint64_t>(x) + 1);
    }
    ++run;
    color[order[k]] = rank;
  }
  trace = mix(trace, run);
  return rank + 1;
}

class Refiner {
 public:
  explicit Refiner(const Graph& g) : g_(g) {}

  /// Initial colours from (user colour, degree, distance-2 profile).
  int initial(std::span<const int> user, std::vector<int>& color, std::uint64_t& trace) const {
    const int n = g_.n();
    std::vector<std::vector<int>> keys(n);
    std::vector<int> mark(n, -1);
    for (int v = 0; v < n; ++v) {
      auto& key = keys[v];
      key.push_back(user.empty() ? 0 : user[v]);
      key.push_back(g_.degree(v));
      mark[v] = v;
      for (int x : g_.neighbors(v)) mark[x] = v;
      std::vector<int> far;
      for (int x : g_.neighbors(v))
        for (int y : g_.neighbors(x))
          if (mark[y] != v) {
            mark[y] = v;
            far.push_back(g_.degree(y));
          }
      std::sort(far.begin(), far.end());
      key.push_back(static_cast<int>(far.size()));
      key.insert(key.end(), far.begin(), far.end());
    }
    color.assign(n, 0);
    return rank_keys(keys, color, trace);
  }

  /// Refines to the coarsest equitable colouring finer than `color`.
  int refine(std::vector<int>& color, int cells, std::uint64_t& trace) const {
    const int n = g_.n();
    std::vector<std::vector<int>> keys(n);
    while (true) {
      for (int v = 0; v < n; ++v) {
        auto& key = keys[v];
        key.clear();
        key.push_back(color[v]);
        for (int x : g_.neighbors(v)) key.push_back(color[x]);
        std::sort(key.begin() + 1, key.end());
      }
      const int next = rank_keys(keys, color, trace);
      if (next == cells) return cells;
      cells = next;
    }
  }

 private:
  const Graph& g_;
};

struct Node {
  std::vector<int> color;
  int cells = 0;
  std::uint64_t trace = 0;
};

/// Individualizes v (it moves in front of the rest of its cell) and refines.
inline Node child(const Refiner& R, const Node& parent, int v) {
  Node out;
  out.color = parent.color;
  const int c = parent.color[v];
  for (int x = 0; x < static_cast<int>(out.color.size()); ++x)
    if (out.color[x] > c || (out.color[x] == c && x != v)) ++out.color[x];
  out.trace = mix(parent.trace, static_cast<std::uint64_t>(c) + 0x51);
  out.cells = R.refine(out.color, parent.cells + 1, out.trace);
  out.trace = mix(out.trace, static_cast<std::uint64_t>(out.cells));
  return out;
}

/// First smallest non-singleton cell, vertices in index order.
inline std::vector<int> target_cell(const Node& node) {
  std::vector<int> size(node.cells, 0);
  for (int c : node.color) ++size[c];
  int best = -1;
  for (int c = 0; c < node.cells; ++c)
    if (size[c] > 1 && (best < 0 || size[c] < size[best])) best = c;
  std::vector<int> cell;
  for (int x = 0; x < static_cast<int>(node.color.size()); ++x)
    if (node.color[x] == best) cell.push_back(x);
  return cell;
}

/// Flattened relabelled adjacency: per label, degree then sorted neighbour labels.
inline std::vector<int> certificate(const Graph& g, const std::vector<int>& label) {
  const int n = g.n();
  std::vector<int> vertex_at(n);
  for (int v = 0; v < n; ++v) vertex_at[label[v]] = v;
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n + g.arc_count()));
  std::vector<int> row;
  for (int L = 0; L < n; ++L) {
    const int v = vertex_at[L];
    row.clear();
    for (int y : g.neighbors(v)) row.push_back(label[y]);
    std::sort(row.begin(), row.end());
    out.push_back(static_cast<int>(row.size()));
    out.insert(out.end(), row.begin(), row.end());
  }
  return out;
}

inline std::vector<int> orbit_ids(int n, const std::vector<Perm>& gens) {
  DisjointSets dsu(static_cast<std::size_t>(n));
  for (const Perm& p : gens)
    for (int x = 0; x < n; ++x) dsu.unite(static_cast<std::size_t>(x), static_cast<std::size_t>(p[x]));
  std::vector<int> id(n);
  for (int x = 0; x < n; ++x) id[x] = static_cast<int>(dsu.find(static_cast<std::size_t>(x)));
  return id;
}

class Search {
 public:
  Search(const Graph& g, std::span<const int> user_colors) : g_(g), R_(g) {
    if (g.directed()) throw std::invalid_argument("autosearch: undirected graphs only");
    if (!user_colors.empty() && static_cast<int>(user_colors.size()) != g.n())
      throw std::invalid_argument("autosearch: colour vector has wrong length");
    root_.cells = g.n() == 0 ? 0 : R_.initial(user_colors, root_.color, root_.trace);
    if (g.n() > 0) root_.cells = R_.refine(root_.color, root_.cells, root_.trace);
  }

  const Node& root() const { return root_; }

  std::vector<Perm> automorphisms() {
    const int n = g_.n();
    path_.assign(1, root_);
    chosen_.clear();
    while (path_.back().cells < n) {
      const auto cell = target_cell(path_.back());
      chosen_.push_back(cell.front());
      path_.push_back(child(R_, path_.back(), cell.front()));
    }
    first_leaf_ = path_.back().color;
    first_cert_ = certificate(g_, first_leaf_);

    std::vector<Perm> gens;
    for (int i = static_cast<int>(chosen_.size()) - 1; i >= 0; --i) {
      const auto cell = target_cell(path_[i]);
      for (int w : cell) {
        if (w == chosen_[i]) continue;
        const auto id = orbit_ids(n, gens);
        if (id[w] == id[chosen_[i]]) continue;
        Perm gamma;
        if (match(child(R_, path_[i], w), static_cast<std::size_t>(i) + 1, gamma)) gens.push_back(std::move(gamma));
      }
    }
    return gens;
  }

  /// Canonical labelling (vertex -> label), pruned by orbits of the pointwise
  /// stabilizers of the individualized prefix in the group <aut>.
  std::vector<int> canonical_labeling(const std::vector<Perm>& aut) {
    best_cert_.clear();
    best_label_.clear();
    std::vector<int> prefix;
    explore(root_, prefix, aut);
    return best_label_;
  }

 private:
  bool match(const Node& node, std::size_t depth, Perm& gamma) const {
    const Node& ref = path_[depth];
    if (node.cells != ref.cells || node.trace != ref.trace) return false;
    if (node.cells == g_.n()) {
      if (certificate(g_, node.color) != first_cert_) return false;
      std::vector<int> vertex_at(g_.n());
      for (int v = 0; v < g_.n(); ++v) vertex_at[node.color[v]] = v;
      std::vector<int> img(g_.n());
      for (int x = 0; x < g_.n(); ++x) img[x] = vertex_at[first_leaf_[x]];
      gamma = Perm(std::move(img));
      return preserves_adjacency(gamma, g_);
    }
    for (int x : target_cell(node))
      if (match(child(R_, node, x), depth + 1, gamma)) return true;
    return false;
  }

  void explore(const Node& node, std::vector<int>& prefix, const std::vector<Perm>& aut) {
    if (node.cells == g_.n()) {
      auto cert = certificate(g_, node.color);
      if (best_label_.empty() || cert < best_cert_) {
        best_cert_ = std::move(cert);
        best_label_ = node.color;
      }
      return;
    }
    std::vector<int> id;
    if (prefix.empty()) {
      id = orbit_ids(g_.n(), aut);
    } else {
      StabilizerChain chain(g_.n(), aut, prefix);
      id = orbit_ids(g_.n(), chain.stabilizer_generators(prefix.size()));
    }
    std::vector<char> done(g_.n(), 0);
    for (int x : target_cell(node)) {
      if (done[id[x]]) continue;
      done[id[x]] = 1;
      prefix.push_back(x);
      explore(child(R_, node, x), prefix, aut);
      prefix.pop_back();
    }
  }

  const Graph& g_;
  Refiner R_;
  Node root_;
  std::vector<Node> path_;
  std::vector<int> chosen_;
  std::vector<int> first_leaf_;
  std::vector<int> first_cert_;
  std::vector<int> best_cert_;
  std::vector<int> best_label_;
};

}  // namespace detail

/// Coarsest equitable colouring refining the degree/distance-2 colouring (and
/// `initial`, when given).
inline Coloring refine_coloring(const Graph& g, std::span<const int> initial = {}) {
  detail::Search search(g, initial);
  Coloring out;
  out.cells = search.root().cells;
  out.color.assign(g.n(), -1);
  std::map<int, int> renumber;
  for (int v = 0; v < g.n(); ++v) {
    auto [it, fresh] = renumber.emplace(search.root().color[v], static_cast<int>(renumber.size()));
    out.color[v] = it->second;
  }
  return out;
}

struct GraphAnalysis {
  PermGroup aut;
  std::vector<int> labeling;  // vertex -> canonical label
  std::string canonical;      // graph6 of the canonically relabelled graph
};

/// Automorphism group and canonical form in one search.
inline GraphAnalysis analyze_graph(const Graph& g, std::span<const int> colors = {}) {
  detail::Search search(g, colors);
  GraphAnalysis out;
  auto gens = search.automorphisms();
  out.labeling = search.canonical_labeling(gens);
  out.canonical = to_graph6(g.relabeled(out.labeling));
  out.aut = PermGroup(g.n(), std::move(gens));
  return out;
}

inline PermGroup automorphism_group(const Graph& g, std::span<const int> colors = {}) {
  detail::Search search(g, colors);
  return PermGroup(g.n(), search.automorphisms());
}

inline std::string canonical_form(const Graph& g) { return analyze_graph(g).canonical; }

inline bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace metacirc
