#pragma once

// Exact arithmetic in split metacyclic groups
//   G = <c> x (<a> : <b>),  a^m = b^n = c^ell = 1,  b^-1 a b = a^r,
// of odd order. Every element is held in the normal form a^u b^v c^w.

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "metacirc/numtheory.hpp"
#include "metacirc/perm.hpp"

namespace metacirc {

struct Element {
  i64 u = 0;  // exponent of a, in [0, m)
  i64 v = 0;  // exponent of b, in [0, n)
  i64 w = 0;  // exponent of c, in [0, ell)

  friend bool operator==(const Element&, const Element&) = default;
  friend auto operator<=>(const Element&, const Element&) = default;
};

class GroupSpec {
 public:
  /// Validates and builds a presentation. Throws std::invalid_argument on
  /// even or non-positive moduli, gcd(r, m) != 1 or r^n != 1 (mod m).
  GroupSpec(i64 m, i64 n, i64 r, i64 ell = 1) : m_(m), n_(n), ell_(ell) {
    if (m < 1 || n < 1 || ell < 1) throw std::invalid_argument("GroupSpec: moduli must be positive");
    if (m % 2 == 0 || n % 2 == 0 || ell % 2 == 0)
      throw std::invalid_argument("GroupSpec: m, n and ell must be odd");
    if (m == 1) {
      r_ = 1;
    } else {
      r_ = mod(r, m);
      if (std::gcd(r_, m) != 1) throw std::invalid_argument("GroupSpec: gcd(r, m) != 1");
      if (powmod(r_, n, m) != 1 % m) throw std::invalid_argument("GroupSpec: r^n != 1 (mod m)");
    }
    n0_ = multiplicative_order(r_, m_);
    rpow_.resize(n_);
    for (i64 v = 0; v < n_; ++v) rpow_[v] = powmod(r_, v, m_);
  }

  i64 m() const { return m_; }
  i64 n() const { return n_; }
  i64 r() const { return r_; }
  i64 ell() const { return ell_; }
  /// Multiplicative order of r modulo m (1 when m == 1); <b^n0> is central.
  i64 n0() const { return n0_; }
  i64 order() const { return m_ * n_ * ell_; }

  /// r^v mod m for any integer v (negative allowed, since r^n == 1).
  i64 rpow(i64 v) const { return rpow_[mod(v, n_)]; }

  bool is_abelian() const { return m_ == 1 || r_ == 1; }

  /// All Sylow subgroups cyclic.
  bool sylow_cyclic() const {
    return std::gcd(m_, n_) == 1 && std::gcd(ell_, m_ * n_) == 1;
  }

  /// All Sylow subgroups cyclic, and no Sylow p-subgroup of <b> is central:
  /// for each prime p | n with p^e || n, r^(n / p^e) != 1 (mod m).
  bool hypothesis_star() const {
    if (!sylow_cyclic()) return false;
    for (i64 p : prime_factors(n_)) {
      i64 rest = n_;
      while (rest % p == 0) rest /= p;
      if (powmod(r_, rest, m_) == 1 % m_) return false;
    }
    return true;
  }

  /// <a> meets the centre trivially, i.e. gcd(r - 1, m) == 1. When this fails
  /// the central part of <a> belongs in the <c> factor.
  bool a_centre_trivial() const { return std::gcd(mod(r_ - 1, m_), m_) == 1; }

  /// G is cyclic (abelian with pairwise coprime factors).
  bool is_cyclic() const {
    return is_abelian() && std::gcd(m_, n_) == 1 && std::gcd(ell_, m_ * n_) == 1;
  }

  /// The parameter ranges of the (s, t, l, s_c) description cover Aut(G):
  /// either G is cyclic with one of <a>, <b> trivial, or G is non-abelian,
  /// satisfies hypothesis (*), has <a> meeting the centre trivially and
  /// gcd(ell, mn) == 1.
  bool parametrized_aut() const {
    if (n_ == 1 || m_ == 1) return is_cyclic();
    return !is_abelian() && hypothesis_star() && a_centre_trivial() &&
           std::gcd(ell_, m_ * n_) == 1;
  }

  /// Vertex index u + m*v + m*n*w (external contract).
  i64 index(const Element& g) const { return g.u + m_ * (g.v + n_ * g.w); }

  Element element_at(i64 idx) const {
    return Element{idx % m_, (idx / m_) % n_, idx / (m_ * n_)};
  }

  bool valid(const Element& g) const {
    return g.u >= 0 && g.u < m_ && g.v >= 0 && g.v < n_ && g.w >= 0 && g.w < ell_;
  }

  Element a() const { return Element{1 % m_, 0, 0}; }
  Element b() const { return Element{0, 1 % n_, 0}; }
  Element c() const { return Element{0, 0, 1 % ell_}; }

  std::string to_string() const {
    return "(m=" + std::to_string(m_) + ", n=" + std::to_string(n_) + ", r=" + std::to_string(r_) +
           ", ell=" + std::to_string(ell_) + ")";
  }

  friend bool operator==(const GroupSpec& x, const GroupSpec& y) {
    return x.m_ == y.m_ && x.n_ == y.n_ && x.r_ == y.r_ && x.ell_ == y.ell_;
  }

 private:
  i64 m_, n_, r_ = 1, ell_, n0_ = 1;
  std::vector<i64> rpow_;
};

inline Element identity() { return Element{}; }

/// g * h in normal form. (a^u1 b^v1)(a^u2 b^v2) = b^(v1+v2) a^(u1 r^(v1+v2) + u2 r^v2),
/// moved back to a-first form with a^x b^y = b^y a^(x r^y).
inline Element mul(const Element& g, const Element& h, const GroupSpec& G) {
  const i64 m = G.m();
  const i64 v = mod(g.v + h.v, G.n());
  const i64 x = mod(mulmod(g.u, G.rpow(v), m) + mulmod(h.u, G.rpow(h.v), m), m);
  return Element{mulmod(x, G.rpow(-v), m), v, mod(g.w + h.w, G.ell())};
}

inline Element inv(const Element& g, const GroupSpec& G) {
  return Element{mod(-mulmod(g.u, G.rpow(g.v), G.m()), G.m()), mod(-g.v, G.n()), mod(-g.w, G.ell())};
}

/// Sum of x^i for i = 1..k modulo m (the bracket [x]_k).
inline i64 rsum(i64 x, i64 k, const GroupSpec& G) { return geometric_sum(x, k, G.m()); }

/// g^k via (a^u b^v)^k = b^(kv) a^(u (r^v + r^2v + ... + r^kv)).
inline Element pow(const Element& g, i64 k, const GroupSpec& G) {
  if (k < 0) return pow(inv(g, G), -k, G);
  const i64 m = G.m();
  const i64 v = mod(mulmod(k, g.v, G.n()), G.n());
  const i64 x = mulmod(g.u, rsum(G.rpow(g.v), k, G), m);
  return Element{mulmod(x, G.rpow(-v), m), v, mulmod(k, g.w, G.ell())};
}

inline i64 order(const Element& g, const GroupSpec& G) {
  for (i64 d : divisors(G.order()))
    if (pow(g, d, G) == identity()) return d;
  throw std::logic_error("order: element order does not divide |G|");
}

/// Size of the subgroup generated by gens (breadth-first closure).
inline i64 closure(const std::vector<Element>& gens, const GroupSpec& G) {
  std::vector<char> seen(G.order(), 0);
  std::vector<Element> queue{identity()};
  seen[0] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const Element& s : gens) {
      Element y = mul(queue[head], s, G);
      i64 idx = G.index(y);
      if (!seen[idx]) {
        seen[idx] = 1;
        queue.push_back(y);
      }
    }
  }
  return static_cast<i64>(queue.size());
}

/// Closed-form test that {a^i1 b^j, a^i2 b^j} generates G = <a> : <b>:
/// gcd(j, n) == 1 and gcd(i2 - i1, i1 [r]_n, m) == 1. Requires ell == 1.
inline bool is_generating_pair(i64 i1, i64 i2, i64 j, const GroupSpec& G) {
  if (G.ell() != 1) throw std::invalid_argument("is_generating_pair: requires ell == 1");
  if (std::gcd(mod(j, G.n()), G.n()) != 1) return false;
  const i64 m = G.m();
  return gcd3(mod(i2 - i1, m), mulmod(i1, rsum(G.r(), G.n(), G), m), m) == 1;
}

/// Right-multiplication permutations of a, b and c on the vertex indexing.
/// Built from the action x a = a^(u + r^-v) b^v c^w, x b = a^u b^(v+1) c^w,
/// x c = a^u b^v c^(w+1) directly, independent of mul().
inline std::vector<Perm> regular_representation(const GroupSpec& G) {
  const i64 N = G.order();
  std::vector<int> ra(N), rb(N), rc(N);
  for (i64 i = 0; i < N; ++i) {
    const Element x = G.element_at(i);
    ra[i] = static_cast<int>(G.index({mod(x.u + G.rpow(-x.v), G.m()), x.v, x.w}));
    rb[i] = static_cast<int>(G.index({x.u, mod(x.v + 1, G.n()), x.w}));
    rc[i] = static_cast<int>(G.index({x.u, x.v, mod(x.w + 1, G.ell())}));
  }
  return {Perm(std::move(ra)), Perm(std::move(rb)), Perm(std::move(rc))};
}

/// Right multiplication by an arbitrary element.
inline Perm right_multiplication(const Element& g, const GroupSpec& G) {
  const i64 N = G.order();
  std::vector<int> img(N);
  for (i64 i = 0; i < N; ++i) img[i] = static_cast<int>(G.index(mul(G.element_at(i), g, G)));
  return Perm(std::move(img));
}

inline std::vector<Element> all_elements(const GroupSpec& G) {
  std::vector<Element> out;
  out.reserve(G.order());
  for (i64 i = 0; i < G.order(); ++i) out.push_back(G.element_at(i));
  return out;
}

}  // namespace metacirc
