#pragma once

#include <cstddef>
#include <compare>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace metacirc {

/// A permutation of {0, ..., degree-1} acting on the right: point p goes to
/// (*this)[p]. Products compose left to right, so (f * g)[p] == g[f[p]].
class Perm {
 public:
  Perm() = default;

  explicit Perm(std::size_t degree) : images_(degree) {
    std::iota(images_.begin(), images_.end(), 0);
  }

  explicit Perm(std::vector<int> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size(), 0);
    for (int x : images_) {
      if (x < 0 || static_cast<std::size_t>(x) >= images_.size() || seen[x])
        throw std::invalid_argument("Perm: images do not form a bijection");
      seen[x] = 1;
    }
  }

  /// Builds a permutation from disjoint cycles, e.g. {{0,1,2},{3,4}}.
  static Perm from_cycles(std::size_t degree, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> img(degree);
    std::iota(img.begin(), img.end(), 0);
    for (const auto& cyc : cycles)
      for (std::size_t i = 0; i < cyc.size(); ++i) img.at(cyc[i]) = cyc[(i + 1) % cyc.size()];
    return Perm(std::move(img));
  }

  std::size_t degree() const { return images_.size(); }
  int operator[](int p) const { return images_[p]; }
  std::span<const int> images() const { return images_; }

  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != static_cast<int>(i)) return false;
    return true;
  }

  Perm inverse() const {
    std::vector<int> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<int>(i);
    Perm p;
    p.images_ = std::move(inv);
    return p;
  }

  friend Perm operator*(const Perm& f, const Perm& g) {
    if (f.degree() != g.degree()) throw std::invalid_argument("Perm: degree mismatch");
    Perm h;
    h.images_.resize(f.degree());
    for (std::size_t i = 0; i < f.degree(); ++i) h.images_[i] = g.images_[f.images_[i]];
    return h;
  }

  Perm pow(long long k) const {
    Perm base = k < 0 ? inverse() : *this;
    if (k < 0) k = -k;
    Perm result(degree());
    while (k > 0) {
      if (k & 1) result = result * base;
      base = base * base;
      k >>= 1;
    }
    return result;
  }

  /// Order of the permutation (lcm of cycle lengths).
  long long order() const {
    std::vector<char> seen(degree(), 0);
    long long result = 1;
    for (std::size_t i = 0; i < degree(); ++i) {
      if (seen[i]) continue;
      long long len = 0;
      for (int j = static_cast<int>(i); !seen[j]; j = images_[j]) {
        seen[j] = 1;
        ++len;
      }
      result = std::lcm(result, len);
    }
    return result;
  }

  std::string to_cycle_string() const {
    std::string out;
    std::vector<char> seen(degree(), 0);
    for (std::size_t i = 0; i < degree(); ++i) {
      if (seen[i] || images_[i] == static_cast<int>(i)) continue;
      out += '(';
      for (int j = static_cast<int>(i); !seen[j]; j = images_[j]) {
        seen[j] = 1;
        if (out.back() != '(') out += ' ';
        out += std::to_string(j);
      }
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<int> images_;
};

}  // namespace metacirc
