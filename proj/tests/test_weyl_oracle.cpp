#include <filesystem>
#include <random>
#include <set>

#include "doctest.h"
#include "rootforge/moset.hpp"
#include "rootforge/weyl_oracle.hpp"

using namespace rootforge;

namespace {

long long fact(int n) { return n <= 1 ? 1 : n * fact(n - 1); }

}  // namespace

TEST_CASE("Weyl group orders") {
  for (int n = 1; n <= 5; ++n)
    CHECK(WeylGroup::enumerate(RootSystem::build(Series::A, n)).order() == static_cast<std::size_t>(fact(n + 1)));
  for (int n = 4; n <= 6; ++n)
    CHECK(WeylGroup::enumerate(RootSystem::build(Series::D, n)).order() ==
          static_cast<std::size_t>((1LL << (n - 1)) * fact(n)));
  CHECK(WeylGroup::enumerate(RootSystem::build(Series::E, 6)).order() == 51840);
  CHECK_THROWS_AS(WeylGroup::enumerate(RootSystem::build(Series::E, 6), 1000), Error);
}

TEST_CASE("every element preserves pairings") {
  std::mt19937 rng(1);
  for (auto t : {CartanType{Series::A, 3}, CartanType{Series::D, 4}, CartanType{Series::E, 6}}) {
    const auto s = RootSystem::build(t);
    const auto w = WeylGroup::enumerate(s);
    for (std::size_t e = 0; e < w.order(); ++e) {
      const auto p = w.permutation(e);
      for (int k = 0; k < 8; ++k) {
        const int a = static_cast<int>(rng() % s.size()), b = static_cast<int>(rng() % s.size());
        CHECK(s.pairing(p[a], p[b]) == s.pairing(a, b));
      }
    }
  }
}

TEST_CASE("orbits and stabilizers") {
  const auto a2 = RootSystem::build(Series::A, 2);
  const auto w2 = WeylGroup::enumerate(a2);
  CHECK(subset_orbit(w2, a2.simple_basis()).size() == 6);
  const auto a1 = RootSystem::build(Series::A, 1);
  const auto w1 = WeylGroup::enumerate(a1);
  CHECK(subset_orbit(w1, {0, 1}).size() == 1);

  RootSet everything(a2.size());
  for (int i = 0; i < a2.size(); ++i) everything[i] = i;
  CHECK(set_stabilizer(w2, everything).elements.size() == w2.order());

  const auto d4 = RootSystem::build(Series::D, 4);
  const auto w4 = WeylGroup::enumerate(d4);
  const Moset m = extend_to_moset(d4);
  const auto st = set_stabilizer(w4, m.members, true);
  CHECK(st.induced.size() == 4);
  const auto mosets = enumerate_mosets(d4);
  CHECK(subset_orbit(w4, m.members, true) == std::set<RootSet>(mosets.begin(), mosets.end()));
  // Only the identity fixes every moset member.
  int pointwise = 0;
  for (std::size_t e = 0; e < w4.order(); ++e)
    if (w4.image(e, m.members) == m.members) ++pointwise;
  CHECK(pointwise == 1);
}

TEST_CASE("appendix facts at small rank") {
  for (auto t : {CartanType{Series::A, 4}, CartanType{Series::D, 4}, CartanType{Series::D, 5}}) {
    const auto s = RootSystem::build(t);
    const auto w = WeylGroup::enumerate(s);
    // All roots conjugate; all bases conjugate (every simple system arises as w(basis)).
    CHECK(subset_orbit(w, {0}).size() == static_cast<std::size_t>(s.size()));
    // Bases from random generic functionals all lie in the orbit of the simple basis.
    const auto basis_orbit = subset_orbit(w, s.simple_basis());
    std::mt19937 rng(9);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<long long> f(s.ambient_dim());
      for (auto& x : f) x = static_cast<long long>(rng() % 2001) - 1000;
      auto value = [&](RootIndex r) {
        long long v = 0;
        for (int d = 0; d < s.ambient_dim(); ++d) v += f[d] * s.coords(r)[d];
        return v;
      };
      RootSet positive;
      bool generic = true;
      for (int r = 0; r < s.size(); ++r) {
        if (value(r) == 0) generic = false;
        if (value(r) > 0) positive.push_back(r);
      }
      if (!generic) continue;
      RootSet simple;
      for (RootIndex r : positive) {
        bool decomposable = false;
        for (RootIndex x : positive)
          for (RootIndex y : positive)
            if (x < y && add(s.coords(x), s.coords(y)) == s.coords(r)) decomposable = true;
        if (!decomposable) simple.push_back(r);
      }
      CHECK(basis_orbit.count(normalized(simple)) == 1);
    }
    CHECK(subset_orbit(w, s.simple_basis()).size() == w.order());
    // Point stabilizer of a root is generated by reflections in roots orthogonal to it.
    const RootIndex a = s.simple_basis()[0];
    const auto stab = set_stabilizer(w, {a});
    const RootSet orth = orthogonal_complement(s, {a});
    std::set<std::vector<RootIndex>> generated{w.permutation(w.find(s.simple_basis()))};
    std::vector<std::vector<RootIndex>> frontier(generated.begin(), generated.end());
    while (!frontier.empty()) {
      std::vector<std::vector<RootIndex>> next;
      for (const auto& p : frontier)
        for (RootIndex b : orth) {
          std::vector<RootIndex> q(p.size());
          for (std::size_t r = 0; r < p.size(); ++r) q[r] = s.reflect(b, p[r]);
          if (generated.insert(q).second) next.push_back(q);
        }
      frontier = std::move(next);
    }
    CHECK(generated.size() == stab.elements.size());
    // Extended basis: some element maps its minimal root to any chosen node while preserving the set.
    const RootSet ext = extended_pi_system(s, s.simple_basis());
    const auto ext_stab = set_stabilizer(w, ext);
    std::set<RootIndex> moved;
    for (std::size_t e : ext_stab.elements) moved.insert(w.apply(e, ext.back()));
    CHECK(moved.size() == (t.series == Series::A ? static_cast<std::size_t>(t.rank + 1) : 4U));
  }
}

TEST_CASE("cache round trip") {
  const auto dir = std::filesystem::temp_directory_path() / "rootforge-cache-test";
  std::filesystem::remove_all(dir);
  setenv("ROOTFORGE_CACHE_DIR", dir.c_str(), 1);
  const auto d4 = RootSystem::build(Series::D, 4);
  const auto first = WeylGroup::enumerate(d4);
  const auto second = WeylGroup::enumerate(d4);
  unsetenv("ROOTFORGE_CACHE_DIR");
  CHECK(std::filesystem::exists(dir / "weyl-D4-v1.bin"));
  CHECK(first.order() == second.order());
  for (std::size_t e = 0; e < first.order(); ++e) CHECK(first.permutation(e) == second.permutation(e));
  std::filesystem::remove_all(dir);
}
