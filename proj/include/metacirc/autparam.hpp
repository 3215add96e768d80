#pragma once

// Automorphisms of G = <c> x (<a> : <b>). Under the parametrized hypotheses
// every automorphism has the form
//   a -> a^s,  b -> a^t b^(1 + l n0),  c -> c^s_c
// with gcd(s, m) = 1, t mod m, 0 <= l < n / n0 and gcd(s_c, ell) = 1.

#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "metacirc/metagroup.hpp"

namespace metacirc {

struct AutoParams {
  i64 s = 1;
  i64 t = 0;
  i64 l = 0;
  i64 s_c = 1;

  friend bool operator==(const AutoParams&, const AutoParams&) = default;
};

/// A group endomorphism given by the images of the standard generators.
/// Equality compares those images, never parameters.
class AutoMap {
 public:
  AutoMap() = default;
  AutoMap(Element image_a, Element image_b, Element image_c)
      : img_{image_a, image_b, image_c} {}

  static AutoMap identity_map(const GroupSpec& G) { return AutoMap(G.a(), G.b(), G.c()); }

  static AutoMap from_params(const AutoParams& p, const GroupSpec& G) {
    const Element ia{mod(p.s, G.m()), 0, 0};
    const Element ib{mod(p.t, G.m()), mod(1 + p.l * G.n0(), G.n()), 0};
    const Element ic{0, 0, mod(p.s_c, G.ell())};
    return AutoMap(ia, ib, ic);
  }

  const Element& image_a() const { return img_[0]; }
  const Element& image_b() const { return img_[1]; }
  const Element& image_c() const { return img_[2]; }

  /// Reads the (s, t, l, s_c) description back, if the map has that shape.
  std::optional<AutoParams> params(const GroupSpec& G) const {
    const Element &ia = img_[0], &ib = img_[1], &ic = img_[2];
    if (ia.v != 0 || ia.w != 0 || ib.w != 0 || ic.u != 0 || ic.v != 0) return std::nullopt;
    const i64 shift = mod(ib.v - 1, G.n());
    if (shift % G.n0() != 0) return std::nullopt;
    return AutoParams{ia.u, ib.u, shift / G.n0(), ic.w};
  }

  Element apply(const Element& g, const GroupSpec& G) const {
    Element x = pow(img_[0], g.u, G);
    x = mul(x, pow(img_[1], g.v, G), G);
    return mul(x, pow(img_[2], g.w, G), G);
  }

  /// Composition "this first, then f": x -> f(this(x)).
  AutoMap then(const AutoMap& f, const GroupSpec& G) const {
    return AutoMap(f.apply(img_[0], G), f.apply(img_[1], G), f.apply(img_[2], G));
  }

  /// Checks that the images satisfy the defining relations and generate G,
  /// which makes the map a well-defined bijective homomorphism.
  bool is_automorphism(const GroupSpec& G) const {
    const Element &A = img_[0], &B = img_[1], &C = img_[2];
    if (!G.valid(A) || !G.valid(B) || !G.valid(C)) return false;
    if (pow(A, G.m(), G) != identity() || pow(B, G.n(), G) != identity() ||
        pow(C, G.ell(), G) != identity())
      return false;
    if (mul(mul(inv(B, G), A, G), B, G) != pow(A, G.r(), G)) return false;
    if (mul(A, C, G) != mul(C, A, G) || mul(B, C, G) != mul(C, B, G)) return false;
    return closure({A, B, C}, G) == G.order();
  }

  bool is_identity(const GroupSpec& G) const { return *this == identity_map(G); }

  friend bool operator==(const AutoMap&, const AutoMap&) = default;
  friend auto operator<=>(const AutoMap&, const AutoMap&) = default;

 private:
  std::array<Element, 3> img_{};
};

/// All automorphisms through the (s, t, l, s_c) parametrization, each checked
/// against the relations. Throws std::domain_error when the parametrization is
/// not known to cover Aut(G); use brute_force_aut there.
inline std::vector<AutoMap> enumerate_aut(const GroupSpec& G) {
  if (!G.parametrized_aut())
    throw std::domain_error("enumerate_aut: " + G.to_string() +
                            " is outside the parametrized case; use brute_force_aut");
  std::set<AutoMap> found;
  const i64 lmax = G.n() / G.n0();
  for (i64 s = 0; s < G.m(); ++s) {
    if (std::gcd(s, G.m()) != 1) continue;
    for (i64 t = 0; t < G.m(); ++t)
      for (i64 l = 0; l < lmax; ++l)
        for (i64 sc = 0; sc < G.ell(); ++sc) {
          if (std::gcd(sc, G.ell()) != 1) continue;
          AutoMap f = AutoMap::from_params({s, t, l, sc}, G);
          if (f.is_automorphism(G)) found.insert(f);
        }
  }
  return {found.begin(), found.end()};
}

/// Aut(G) by exhaustive search over images of a, b, c. Cubic in |G| in the
/// worst case; meant for |G| in the low hundreds.
inline std::vector<AutoMap> brute_force_aut(const GroupSpec& G) {
  const auto elems = all_elements(G);
  std::vector<Element> cand_a, cand_b, cand_c;
  for (const Element& x : elems) {
    if (pow(x, G.m(), G) == identity()) cand_a.push_back(x);
    if (pow(x, G.n(), G) == identity()) cand_b.push_back(x);
    if (pow(x, G.ell(), G) == identity()) cand_c.push_back(x);
  }
  std::vector<AutoMap> out;
  for (const Element& A : cand_a) {
    const Element Ar = pow(A, G.r(), G);
    for (const Element& B : cand_b) {
      if (mul(mul(inv(B, G), A, G), B, G) != Ar) continue;
      for (const Element& C : cand_c) {
        if (mul(A, C, G) != mul(C, A, G) || mul(B, C, G) != mul(C, B, G)) continue;
        if (closure({A, B, C}, G) == G.order()) out.emplace_back(A, B, C);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Aut(G) by whichever route applies.
inline std::vector<AutoMap> automorphisms_of(const GroupSpec& G) {
  return G.parametrized_aut() ? enumerate_aut(G) : brute_force_aut(G);
}

inline AutoMap power_of(const AutoMap& f, int k, const GroupSpec& G) {
  AutoMap x = AutoMap::identity_map(G);
  for (int i = 0; i < k; ++i) x = x.then(f, G);
  return x;
}

/// Automorphisms of order exactly 2 in the parametrized Aut(G).
inline std::vector<AutoMap> involutions(const GroupSpec& G) {
  std::vector<AutoMap> out;
  for (const AutoMap& f : enumerate_aut(G))
    if (!f.is_identity(G) && f.then(f, G).is_identity(G)) out.push_back(f);
  return out;
}

/// Sorted vertex indices of a set of elements.
inline std::vector<i64> sorted_indices(const std::vector<Element>& S, const GroupSpec& G) {
  std::vector<i64> idx;
  idx.reserve(S.size());
  for (const Element& x : S) idx.push_back(G.index(x));
  std::sort(idx.begin(), idx.end());
  return idx;
}

inline std::vector<Element> image_of_set(const AutoMap& f, const std::vector<Element>& S,
                                         const GroupSpec& G) {
  std::vector<Element> out;
  out.reserve(S.size());
  for (const Element& x : S) out.push_back(f.apply(x, G));
  return out;
}

/// Aut(G, S) = {f in Aut(G) : S^f = S}, searched over the supplied Aut(G).
inline std::vector<AutoMap> aut_stabilizer(const std::vector<Element>& S, const GroupSpec& G,
                                           const std::vector<AutoMap>& aut) {
  const auto key = sorted_indices(S, G);
  std::vector<AutoMap> out;
  for (const AutoMap& f : aut)
    if (sorted_indices(image_of_set(f, S, G), G) == key) out.push_back(f);
  return out;
}

inline std::vector<AutoMap> aut_stabilizer(const std::vector<Element>& S, const GroupSpec& G) {
  return aut_stabilizer(S, G, automorphisms_of(G));
}

/// Images of every group element under every automorphism, as index tables;
/// table[k][i] is the index of f_k(element i).
class AutAction {
 public:
  AutAction(const GroupSpec& G, const std::vector<AutoMap>& aut) {
    table_.reserve(aut.size());
    for (const AutoMap& f : aut) {
      std::vector<i64> row(G.order());
      for (i64 i = 0; i < G.order(); ++i) row[i] = G.index(f.apply(G.element_at(i), G));
      table_.push_back(std::move(row));
    }
  }

  std::size_t size() const { return table_.size(); }

  /// Lexicographically least sorted index tuple in the Aut(G)-orbit of S.
  std::vector<i64> canonical(const std::vector<i64>& S) const {
    std::vector<i64> best = S;
    std::sort(best.begin(), best.end());
    std::vector<i64> img(S.size());
    for (const auto& row : table_) {
      for (std::size_t k = 0; k < S.size(); ++k) img[k] = row[S[k]];
      std::sort(img.begin(), img.end());
      if (img < best) best = img;
    }
    return best;
  }

 private:
  std::vector<std::vector<i64>> table_;
};

/// Lexicographically least image of S under Aut(G) (elements compared by
/// vertex index, sets by sorted index tuple).
inline std::vector<Element> set_orbit_canonical(const std::vector<Element>& S, const GroupSpec& G,
                                                const std::vector<AutoMap>& aut) {
  std::vector<i64> best = sorted_indices(S, G);
  for (const AutoMap& f : aut) best = std::min(best, sorted_indices(image_of_set(f, S, G), G));
  std::vector<Element> out;
  for (i64 i : best) out.push_back(G.element_at(i));
  return out;
}

inline std::vector<Element> set_orbit_canonical(const std::vector<Element>& S, const GroupSpec& G) {
  return set_orbit_canonical(S, G, automorphisms_of(G));
}

}  // namespace metacirc
