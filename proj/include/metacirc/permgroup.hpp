#pragma once

// Permutation groups through a base and strong generating set. The chain is
// built by the deterministic Schreier-Sims algorithm: every Schreier
// generator at every level is sifted, and a non-trivial residue becomes a new
// strong generator (extending the base when it fixes every base point).

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "metacirc/perm.hpp"

namespace metacirc {

class StabilizerChain {
 public:
  struct Level {
    int base = 0;
    std::vector<Perm> generators;  // strong generators fixing all earlier base points
    std::vector<int> orbit;        // orbit of `base`, in discovery order
    std::vector<int> position;     // position[x] = index in orbit, or -1
    std::vector<Perm> transversal;      // transversal[k] maps base to orbit[k]
    std::vector<Perm> transversal_inv;  // inverses of the above
  };

  /// Builds a chain for <generators>; the base starts with `base_prefix`.
  StabilizerChain(int degree, const std::vector<Perm>& generators, std::span<const int> base_prefix = {})
      : degree_(degree) {
    for (const Perm& g : generators) {
      if (static_cast<int>(g.degree()) != degree) throw std::invalid_argument("StabilizerChain: degree mismatch");
      if (!g.is_identity()) strong_.push_back(g);
    }
    for (int p : base_prefix) {
      if (p < 0 || p >= degree) throw std::out_of_range("StabilizerChain: base point out of range");
      base_.push_back(p);
    }
    for (const Perm& g : strong_)
      if (fixes_base(g, base_.size())) base_.push_back(choose_base_point(g));
    levels_.resize(base_.size());
    for (std::size_t i = 0; i < base_.size(); ++i) rebuild_level(i);
    schreier_sims();
  }

  int degree() const { return degree_; }
  const std::vector<int>& base() const { return base_; }
  const std::vector<Level>& levels() const { return levels_; }
  const std::vector<Perm>& strong_generators() const { return strong_; }

  /// Strong generators of the pointwise stabilizer of the first k base points.
  const std::vector<Perm>& stabilizer_generators(std::size_t k) const {
    static const std::vector<Perm> none;
    return k < levels_.size() ? levels_[k].generators : none;
  }

  /// Sifts g through levels [from, end). Returns the residue and the level at
  /// which sifting stopped (== number of levels when it went all the way).
  std::pair<Perm, std::size_t> strip(Perm g, std::size_t from = 0) const {
    for (std::size_t l = from; l < levels_.size(); ++l) {
      const Level& L = levels_[l];
      const int x = g[L.base];
      const int k = L.position[x];
      if (k < 0) return {std::move(g), l};
      g = g * L.transversal_inv[k];
    }
    return {std::move(g), levels_.size()};
  }

  bool contains(const Perm& g) const {
    if (static_cast<int>(g.degree()) != degree_) return false;
    auto [residue, level] = strip(g);
    return level == levels_.size() && residue.is_identity();
  }

  /// Exact group order as a big integer.
  boost::multiprecision::cpp_int order_exact() const {
    boost::multiprecision::cpp_int result = 1;
    for (const Level& L : levels_) result *= L.orbit.size();
    return result;
  }

  /// Group order; throws std::overflow_error above 2^64 - 1.
  std::uint64_t order() const {
    const auto exact = order_exact();
    if (exact > std::numeric_limits<std::uint64_t>::max()) throw std::overflow_error("group order exceeds 64 bits");
    return static_cast<std::uint64_t>(exact);
  }

  /// Visits every group element once (as products of transversal elements).
  void for_each_element(const std::function<void(const Perm&)>& visit) const {
    Perm id(static_cast<std::size_t>(degree_));
    if (levels_.empty()) {
      visit(id);
      return;
    }
    // g = u_{k-1} ... u_1 u_0, built from the deepest level outwards.
    std::function<void(std::size_t, const Perm&)> rec = [&](std::size_t l, const Perm& prefix) {
      for (const Perm& u : levels_[l].transversal) {
        Perm g = prefix * u;
        if (l == 0)
          visit(g);
        else
          rec(l - 1, g);
      }
    };
    rec(levels_.size() - 1, id);
  }

 private:
  bool fixes_base(const Perm& g, std::size_t k) const {
    for (std::size_t i = 0; i < k; ++i)
      if (g[base_[i]] != base_[i]) return false;
    return true;
  }

  /// A point moved by g, taken from one of its longest cycles.
  int choose_base_point(const Perm& g) const {
    std::vector<char> seen(degree_, 0);
    int best = -1, best_len = 0;
    for (int i = 0; i < degree_; ++i) {
      if (seen[i] || g[i] == i) continue;
      int len = 0;
      for (int j = i; !seen[j]; j = g[j]) {
        seen[j] = 1;
        ++len;
      }
      if (len > best_len) {
        best_len = len;
        best = i;
      }
    }
    if (best < 0) throw std::logic_error("choose_base_point: identity");
    return best;
  }

  void rebuild_level(std::size_t i) {
    Level& L = levels_[i];
    L.base = base_[i];
    L.generators.clear();
    for (const Perm& g : strong_)
      if (fixes_base(g, i)) L.generators.push_back(g);
    L.orbit.assign(1, L.base);
    L.position.assign(degree_, -1);
    L.position[L.base] = 0;
    L.transversal.assign(1, Perm(static_cast<std::size_t>(degree_)));
    L.transversal_inv.assign(1, Perm(static_cast<std::size_t>(degree_)));
    for (std::size_t k = 0; k < L.orbit.size(); ++k) {
      for (const Perm& s : L.generators) {
        const int y = s[L.orbit[k]];
        if (L.position[y] >= 0) continue;
        L.position[y] = static_cast<int>(L.orbit.size());
        L.orbit.push_back(y);
        L.transversal.push_back(L.transversal[k] * s);
        L.transversal_inv.push_back(L.transversal.back().inverse());
      }
    }
  }

  void schreier_sims() {
    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
    while (i >= 0) {
      bool restarted = false;
      const Level& L = levels_[i];
      for (std::size_t k = 0; k < L.orbit.size() && !restarted; ++k) {
        for (std::size_t gi = 0; gi < L.generators.size(); ++gi) {
          const Perm& s = L.generators[gi];
          const int y = s[L.orbit[k]];
          Perm h = L.transversal[k] * s * L.transversal_inv[L.position[y]];
          if (h.is_identity()) continue;
          auto [residue, j] = strip(std::move(h), static_cast<std::size_t>(i) + 1);
          if (j == levels_.size() && residue.is_identity()) continue;
          if (j == levels_.size()) {
            base_.push_back(choose_base_point(residue));
            levels_.emplace_back();
          }
          strong_.push_back(std::move(residue));
          for (std::size_t l = static_cast<std::size_t>(i) + 1; l <= j; ++l) rebuild_level(l);
          i = static_cast<std::ptrdiff_t>(j);
          restarted = true;
          break;
        }
      }
      if (!restarted) --i;
    }
  }

  int degree_;
  std::vector<Perm> strong_;
  std::vector<int> base_;
  std::vector<Level> levels_;
};

/// A permutation group given by generators; the stabilizer chain is built on
/// first use. Not safe to share across threads until the chain exists.
class PermGroup {
 public:
  PermGroup() = default;
  PermGroup(int degree, std::vector<Perm> generators) : degree_(degree), generators_(std::move(generators)) {
    for (const Perm& g : generators_)
      if (static_cast<int>(g.degree()) != degree) throw std::invalid_argument("PermGroup: degree mismatch");
  }

  int degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return generators_; }

  const StabilizerChain& chain() const {
    if (!chain_) chain_ = std::make_shared<StabilizerChain>(degree_, generators_);
    return *chain_;
  }

  std::uint64_t order() const { return chain().order(); }
  std::string order_string() const { return chain().order_exact().str(); }
  bool contains(const Perm& g) const { return chain().contains(g); }

  std::vector<int> orbit(int point) const {
    if (point < 0 || point >= degree_) throw std::out_of_range("PermGroup::orbit: point out of range");
    std::vector<char> seen(degree_, 0);
    std::vector<int> out{point};
    seen[point] = 1;
    for (std::size_t k = 0; k < out.size(); ++k)
      for (const Perm& g : generators_) {
        const int y = g[out[k]];
        if (!seen[y]) {
          seen[y] = 1;
          out.push_back(y);
        }
      }
    std::sort(out.begin(), out.end());
    return out;
  }

  /// orbit id per point (ids in order of first point).
  std::vector<int> orbit_partition() const {
    std::vector<int> id(degree_, -1);
    int next = 0;
    for (int p = 0; p < degree_; ++p) {
      if (id[p] >= 0) continue;
      std::vector<int> stack{p};
      id[p] = next;
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (const Perm& g : generators_)
          if (id[g[x]] < 0) {
            id[g[x]] = next;
            stack.push_back(g[x]);
          }
      }
      ++next;
    }
    return id;
  }

  bool is_transitive() const { return degree_ == 0 || static_cast<int>(orbit(0).size()) == degree_; }

  /// Pointwise stabilizer of `points`.
  PermGroup pointwise_stabilizer(std::span<const int> points) const {
    for (int p : points)
      if (p < 0 || p >= degree_) throw std::out_of_range("PermGroup: point out of range");
    StabilizerChain c(degree_, generators_, points);
    PermGroup out(degree_, c.stabilizer_generators(points.size()));
    return out;
  }

  PermGroup point_stabilizer(int point) const {
    const int pts[1] = {point};
    return pointwise_stabilizer(pts);
  }

  /// All elements; throws std::length_error when the order exceeds `limit`.
  std::vector<Perm> elements(std::uint64_t limit = 10'000'000) const {
    const auto& c = chain();
    if (c.order_exact() > limit) throw std::length_error("PermGroup::elements: group too large to enumerate");
    std::vector<Perm> out;
    out.reserve(static_cast<std::size_t>(c.order()));
    c.for_each_element([&out](const Perm& g) { out.push_back(g); });
    return out;
  }

 private:
  int degree_ = 0;
  std::vector<Perm> generators_;
  mutable std::shared_ptr<StabilizerChain> chain_;
};

inline PermGroup group_of(std::size_t degree, std::vector<Perm> gens) {
  return PermGroup(static_cast<int>(degree), std::move(gens));
}

}  // namespace metacirc
