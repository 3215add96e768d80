#include <gtest/gtest.h>

#include <set>

#include "metacirc/autparam.hpp"
#include "metacirc/cayley.hpp"
#include "oracles.hpp"

using namespace metacirc;

namespace {

const GroupSpec Z7Z3(7, 3, 2);

std::vector<GroupSpec> parametrized_specs(i64 bound) {
  std::vector<GroupSpec> out;
  for (i64 m = 3; m <= bound; m += 2)
    for (i64 n = 3; m * n <= bound; n += 2)
      for (i64 r = 2; r < m; ++r)
        if (std::gcd(r, m) == 1 && powmod(r, n, m) == 1) {
          GroupSpec G(m, n, r);
          if (G.parametrized_aut()) out.push_back(G);
        }
  return out;
}

}  // namespace

TEST(AutoMap, ApplyExamples) {
  const AutoMap id = AutoMap::from_params({1, 0, 0, 1}, Z7Z3);
  EXPECT_TRUE(id.is_identity(Z7Z3));
  for (const Element& g : all_elements(Z7Z3)) EXPECT_EQ(id.apply(g, Z7Z3), g);
  const AutoMap f = AutoMap::from_params({6, 0, 0, 1}, Z7Z3);
  EXPECT_EQ(f.apply(Element{1, 1, 0}, Z7Z3), (Element{6, 1, 0}));
  EXPECT_EQ(f.apply(identity(), Z7Z3), identity());
  EXPECT_TRUE(f.is_automorphism(Z7Z3));
  EXPECT_EQ(f.params(Z7Z3), (AutoParams{6, 0, 0, 0}));  // s_c lives mod ell = 1
}

TEST(AutoMap, RejectsNonAutomorphisms) {
  // b -> b^2 breaks b^-1 a b = a^r since 2^2 = 4 != 2 (mod 7)
  EXPECT_FALSE(AutoMap(Z7Z3.a(), Element{0, 2, 0}, identity()).is_automorphism(Z7Z3));
  // a -> identity is not injective
  EXPECT_FALSE(AutoMap(identity(), Z7Z3.b(), identity()).is_automorphism(Z7Z3));
}

TEST(EnumerateAut, Counts) {
  EXPECT_EQ(enumerate_aut(Z7Z3).size(), 42u);
  EXPECT_EQ(enumerate_aut(GroupSpec(23, 11, 2)).size(), 506u);
  EXPECT_EQ(enumerate_aut(GroupSpec(5, 1, 1)).size(), 4u);
  EXPECT_EQ(enumerate_aut(GroupSpec(1, 9, 1)).size(), 6u);
  EXPECT_EQ(enumerate_aut(GroupSpec(7, 3, 2, 5)).size(), 42u * 4u);
}

TEST(EnumerateAut, OutsideDomainThrows) {
  EXPECT_THROW(enumerate_aut(GroupSpec(3, 3, 1)), std::domain_error);
  EXPECT_THROW(enumerate_aut(GroupSpec(35, 3, 11)), std::domain_error);
  EXPECT_NO_THROW(automorphisms_of(GroupSpec(3, 3, 1)));
  EXPECT_EQ(automorphisms_of(GroupSpec(3, 3, 1)).size(), 48u);  // |GL(2,3)|
}

TEST(EnumerateAut, BruteForceOracleAgreesWithFullHomomorphismCheck) {
  for (const GroupSpec& G : {GroupSpec(5, 1, 1), GroupSpec(7, 3, 2), GroupSpec(3, 3, 1), GroupSpec(1, 9, 1),
                             GroupSpec(3, 1, 1, 5), GroupSpec(9, 1, 1)})
    EXPECT_EQ(brute_force_aut(G).size(), oracle::full_homomorphism_aut_count(G)) << G.to_string();
}

TEST(EnumerateAut, MatchesBruteForceAndFormula) {
  for (const GroupSpec& G : parametrized_specs(120)) {
    const auto fast = enumerate_aut(G);
    const auto slow = brute_force_aut(G);
    ASSERT_EQ(fast, slow) << G.to_string();
    ASSERT_EQ(static_cast<i64>(fast.size()), euler_phi(G.m()) * G.m() * (G.n() / G.n0()) * euler_phi(G.ell()));
  }
}

TEST(Involutions, Examples) {
  const auto inv7 = involutions(Z7Z3);
  EXPECT_EQ(inv7.size(), 7u);
  const AutoMap f = AutoMap::from_params({6, 0, 0, 1}, Z7Z3);
  EXPECT_NE(std::find(inv7.begin(), inv7.end(), f), inv7.end());
  for (const AutoMap& g : inv7) {
    EXPECT_FALSE(g.is_identity(Z7Z3));
    auto p = g.params(Z7Z3);
    ASSERT_TRUE(p.has_value());
    EXPECT_EQ(p->l, 0);
    EXPECT_EQ(mulmod(p->s, p->s, 7), 1);
  }
}

TEST(AutStabilizer, Examples) {
  const ConnectionSet S1 = standard_connection_set(1, Z7Z3);
  EXPECT_EQ(aut_stabilizer(S1.elements(), Z7Z3).size(), 2u);
  const GroupSpec Z5(5, 1, 1);
  const std::vector<Element> all5{{1, 0, 0}, {2, 0, 0}, {3, 0, 0}, {4, 0, 0}};
  EXPECT_EQ(aut_stabilizer(all5, Z5).size(), 4u);
  // orbit-stabilizer over every connection set of Z13:Z3
  const GroupSpec G13(13, 3, 3);
  const auto aut = enumerate_aut(G13);
  for (const ConnectionSet& S : [&] {
         std::vector<ConnectionSet> out;
         std::vector<Element> reps;
         for (i64 i = 1; i < G13.order(); ++i)
           if (i < G13.index(inv(G13.element_at(i), G13))) reps.push_back(G13.element_at(i));
         for (std::size_t p = 0; p < reps.size(); ++p)
           for (std::size_t q = p + 1; q < reps.size(); ++q)
             out.emplace_back(std::vector<Element>{reps[p], inv(reps[p], G13), reps[q], inv(reps[q], G13)}, G13);
         return out;
       }()) {
    std::set<std::vector<i64>> orbit;
    for (const AutoMap& f : aut) orbit.insert(sorted_indices(image_of_set(f, S.elements(), G13), G13));
    ASSERT_EQ(orbit.size() * aut_stabilizer(S.elements(), G13, aut).size(), aut.size());
  }
}

TEST(SetOrbitCanonical, Examples) {
  const auto aut = enumerate_aut(Z7Z3);
  const ConnectionSet S1 = standard_connection_set(1, Z7Z3);
  const Element a3b{3, 1, 0};
  const std::vector<Element> T{Z7Z3.b(), a3b, inv(Z7Z3.b(), Z7Z3), inv(a3b, Z7Z3)};
  EXPECT_EQ(set_orbit_canonical(T, Z7Z3, aut), set_orbit_canonical(S1.elements(), Z7Z3, aut));
  const auto c = set_orbit_canonical(S1.elements(), Z7Z3, aut);
  EXPECT_EQ(set_orbit_canonical(c, Z7Z3, aut), c);
  for (const AutoMap& f : aut)
    EXPECT_EQ(set_orbit_canonical(image_of_set(f, S1.elements(), Z7Z3), Z7Z3, aut), c);
  const AutAction act(Z7Z3, aut);
  EXPECT_EQ(act.canonical(S1.indices(Z7Z3)), sorted_indices(c, Z7Z3));
}

// Properties ----------------------------------------------------------------

TEST(AutProperty, CompositionClosure) {
  for (const GroupSpec& G : {GroupSpec(7, 3, 2), GroupSpec(13, 3, 3), GroupSpec(11, 5, 3), GroupSpec(7, 9, 2)}) {
    const auto aut = enumerate_aut(G);
    const std::set<AutoMap> all(aut.begin(), aut.end());
    for (std::size_t i = 0; i < aut.size(); i += 3)
      for (std::size_t j = 0; j < aut.size(); j += 5) ASSERT_TRUE(all.count(aut[i].then(aut[j], G))) << G.to_string();
  }
}

TEST(AutProperty, HomomorphismOnAllPairs) {
  const GroupSpec G(7, 9, 2);
  const auto elems = all_elements(G);
  const auto aut = enumerate_aut(G);
  for (std::size_t k = 0; k < aut.size(); k += 17)
    for (const Element& x : elems)
      for (std::size_t j = 0; j < elems.size(); j += 7)
        ASSERT_EQ(aut[k].apply(mul(x, elems[j], G), G), mul(aut[k].apply(x, G), aut[k].apply(elems[j], G), G));
}

TEST(AutProperty, ConjugacyOfBj) {
  for (const GroupSpec& G : {GroupSpec(7, 3, 2), GroupSpec(7, 9, 2), GroupSpec(19, 9, 4), GroupSpec(11, 5, 3)}) {
    const AutAction act(G, enumerate_aut(G));
    for (i64 j = 1; j < G.n(); ++j) {
      if (std::gcd(j, G.n()) != 1) continue;
      const i64 bj = G.index(Element{0, j, 0});
      for (i64 t = 0; t < G.m(); ++t)
        for (i64 l = 0; l < G.n() / G.n0(); ++l) {
          const i64 other = G.index(Element{t, mod(j + l * G.n0(), G.n()), 0});
          ASSERT_EQ(act.canonical({bj}), act.canonical({other})) << G.to_string();
        }
      if (j % G.n0() != 0) {
        const i64 bmj = G.index(Element{0, G.n() - j, 0});
        ASSERT_NE(act.canonical({bj}), act.canonical({bmj})) << G.to_string() << " j=" << j;
      }
    }
  }
}
