#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

namespace metacirc {

/// Simple graph (or digraph, when `directed` is set) on vertices 0..n-1 with
/// sorted out-neighbour lists. Undirected graphs keep the lists symmetric.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n, bool directed = false) : adj_(n), directed_(directed) {}

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges, bool directed = false) {
    Graph g(n, directed);
    for (auto [x, y] : edges) g.add_edge(x, y);
    g.normalize();
    return g;
  }

  /// Adds x -> y (and y -> x when undirected). Loops are rejected; call
  /// normalize() afterwards to sort and drop duplicates.
  void add_edge(int x, int y) {
    if (x < 0 || y < 0 || x >= n() || y >= n()) throw std::out_of_range("Graph: vertex out of range");
    if (x == y) throw std::invalid_argument("Graph: loops are not allowed");
    adj_[x].push_back(y);
    if (!directed_) adj_[y].push_back(x);
  }

  void normalize() {
    for (auto& row : adj_) {
      std::sort(row.begin(), row.end());
      row.erase(std::unique(row.begin(), row.end()), row.end());
    }
  }

  int n() const { return static_cast<int>(adj_.size()); }
  bool directed() const { return directed_; }
  const std::vector<int>& neighbors(int x) const { return adj_[x]; }
  const std::vector<std::vector<int>>& adjacency() const { return adj_; }
  int degree(int x) const { return static_cast<int>(adj_[x].size()); }

  bool has_edge(int x, int y) const { return std::binary_search(adj_[x].begin(), adj_[x].end(), y); }

  /// Number of arcs (ordered adjacent pairs).
  long long arc_count() const {
    long long total = 0;
    for (const auto& row : adj_) total += static_cast<long long>(row.size());
    return total;
  }

  long long edge_count() const { return directed_ ? arc_count() : arc_count() / 2; }

  bool is_regular(int k) const {
    return std::all_of(adj_.begin(), adj_.end(), [k](const auto& row) { return static_cast<int>(row.size()) == k; });
  }

  /// The graph with vertex x renamed to label[x].
  Graph relabeled(const std::vector<int>& label) const {
    Graph g(n(), directed_);
    for (int x = 0; x < n(); ++x)
      for (int y : adj_[x]) g.adj_[label[x]].push_back(label[y]);
    for (auto& row : g.adj_) std::sort(row.begin(), row.end());
    return g;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<int>> adj_;
  bool directed_ = false;
};

inline bool is_connected(const Graph& g) {
  if (g.n() == 0) return true;
  std::vector<char> seen(g.n(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : g.neighbors(x))
      if (!seen[y]) {
        seen[y] = 1;
        ++count;
        stack.push_back(y);
      }
  }
  return count == g.n();
}

/// Graph on the blocks of a vertex partition; two blocks are adjacent iff an
/// edge joins them. Loops and multiplicities are dropped.
inline Graph quotient_graph(const Graph& g, const std::vector<std::vector<int>>& blocks) {
  std::vector<int> block_of(g.n(), -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw std::invalid_argument("quotient_graph: empty block");
    for (int x : blocks[b]) {
      if (x < 0 || x >= g.n()) throw std::invalid_argument("quotient_graph: vertex out of range");
      if (block_of[x] != -1) throw std::invalid_argument("quotient_graph: blocks overlap");
      block_of[x] = static_cast<int>(b);
    }
  }
  if (std::find(block_of.begin(), block_of.end(), -1) != block_of.end())
    throw std::invalid_argument("quotient_graph: blocks do not cover the vertex set");
  Graph q(static_cast<int>(blocks.size()), g.directed());
  for (int x = 0; x < g.n(); ++x)
    for (int y : g.neighbors(x))
      if (block_of[x] != block_of[y]) q.add_edge(block_of[x], block_of[y]);
  q.normalize();
  return q;
}

// ---------------------------------------------------------------------------
// graph6

namespace detail {

inline void append_graph6_size(std::string& out, long long n) {
  if (n <= 62) {
    out += static_cast<char>(n + 63);
  } else if (n <= 258047) {
    out += '~';
    for (int shift = 12; shift >= 0; shift -= 6) out += static_cast<char>(((n >> shift) & 63) + 63);
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6) out += static_cast<char>(((n >> shift) & 63) + 63);
  }
}

}  // namespace detail

/// graph6 encoding: size prefix, then the upper triangle x(i,j), i < j,
/// ordered by column j then row i, packed six bits per byte plus 63.
inline std::string to_graph6(const Graph& g) {
  if (g.directed()) throw std::invalid_argument("to_graph6: directed graphs are not supported");
  std::string out;
  detail::append_graph6_size(out, g.n());
  int acc = 0, nbits = 0;
  for (int j = 1; j < g.n(); ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out += static_cast<char>(acc + 63);
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out += static_cast<char>((acc << (6 - nbits)) + 63);
  return out;
}

inline Graph from_graph6(std::string_view text) {
  constexpr std::string_view header = ">>graph6<<";
  if (text.substr(0, header.size()) == header) text.remove_prefix(header.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
    text.remove_suffix(1);
  auto byte = [&](std::size_t k) {
    if (k >= text.size()) throw std::invalid_argument("graph6: truncated input");
    int v = static_cast<unsigned char>(text[k]) - 63;
    if (v < 0 || v > 63) throw std::invalid_argument("graph6: byte out of range");
    return v;
  };
  long long n = 0;
  std::size_t pos = 0;
  if (text.empty()) throw std::invalid_argument("graph6: empty input");
  if (text[0] != '~') {
    n = byte(0);
    pos = 1;
  } else if (text.size() > 1 && text[1] != '~') {
    for (std::size_t k = 1; k <= 3; ++k) n = (n << 6) | byte(k);
    pos = 4;
  } else {
    for (std::size_t k = 2; k <= 7; ++k) n = (n << 6) | byte(k);
    pos = 8;
  }
  const long long nbits = n * (n - 1) / 2;
  const std::size_t expected = pos + static_cast<std::size_t>((nbits + 5) / 6);
  if (text.size() != expected) throw std::invalid_argument("graph6: length does not match vertex count");
  Graph g(static_cast<int>(n));
  long long k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      int v = byte(pos + static_cast<std::size_t>(k / 6));
      if ((v >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  g.normalize();
  return g;
}

inline std::string to_dot(const Graph& g) {
  std::string out = g.directed() ? "digraph G {\n" : "graph G {\n";
  const char* arrow = g.directed() ? " -> " : " -- ";
  for (int x = 0; x < g.n(); ++x) out += "  " + std::to_string(x) + ";\n";
  for (int x = 0; x < g.n(); ++x)
    for (int y : g.neighbors(x))
      if (g.directed() || x < y) out += "  " + std::to_string(x) + arrow + std::to_string(y) + ";\n";
  out += "}\n";
  return out;
}

/// {"n": ..., "adj": [[...], ...]}
inline nlohmann::json to_json(const Graph& g) {
  nlohmann::json j;
  j["n"] = g.n();
  j["adj"] = g.adjacency();
  if (g.directed()) j["directed"] = true;
  return j;
}

inline Graph graph_from_json(const nlohmann::json& j) {
  const int n = j.at("n").get<int>();
  auto adj = j.at("adj").get<std::vector<std::vector<int>>>();
  for (auto& row : adj) std::sort(row.begin(), row.end());
  if (static_cast<int>(adj.size()) != n) throw std::invalid_argument("graph json: adj size != n");
  Graph g(n, j.value("directed", false));
  for (int x = 0; x < n; ++x)
    for (int y : adj[x])
      if (g.directed() || x < y) g.add_edge(x, y);
  g.normalize();
  if (!g.directed())
    for (int x = 0; x < n; ++x)
      if (g.neighbors(x) != adj[x]) throw std::invalid_argument("graph json: adjacency is not symmetric");
  return g;
}

}  // namespace metacirc
