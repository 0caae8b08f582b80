#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "rootforge/completion.hpp"
#include "rootforge/moset.hpp"
#include "rootforge/weyl_oracle.hpp"

using namespace rootforge;

namespace {

RootSet all_roots(const RootSystem& s) {
  RootSet r(s.size());
  for (int i = 0; i < s.size(); ++i) r[i] = i;
  return r;
}

// Reference moset sizes.
const std::map<std::string, int> kMuTable = {
    {"A1", 1}, {"A2", 1}, {"A3", 2}, {"A4", 2}, {"A5", 3}, {"A6", 3}, {"A7", 4}, {"A8", 4},
    {"D4", 4}, {"D5", 4}, {"D6", 6}, {"D7", 6}, {"D8", 8}, {"E6", 4}, {"E7", 7}, {"E8", 8}};

}  // namespace

TEST_CASE("moset cardinality table") {
  for (const auto& [name, expected] : kMuTable) {
    const auto s = RootSystem::build(CartanType::parse(name));
    CHECK_MESSAGE(mu(s) == expected, name);
    CHECK(static_cast<int>(extend_to_moset(s).members.size()) == expected);
  }
}

TEST_CASE("greedy extension") {
  const auto a2 = RootSystem::build(Series::A, 2);
  CHECK(extend_to_moset(a2).members.size() == 1);
  const auto e8 = RootSystem::build(Series::E, 8);
  const Moset m = extend_to_moset(e8);
  CHECK(m.members.size() == 8);
  CHECK(extend_to_moset(e8, m.members).members == m.members);
  const auto& pi = a2.simple_basis();
  CHECK_THROWS_AS(extend_to_moset(a2, {pi[0], pi[1]}), Error);
  // Seeds are kept and completed.
  const auto d6 = RootSystem::build(Series::D, 6);
  const RootIndex x = d6.simple_basis()[2];
  const Moset seeded = extend_to_moset(d6, {x});
  CHECK(seeded.members.front() == x);
  CHECK(is_moset(d6, seeded.members, all_roots(d6)));
}

TEST_CASE("all mosets have mu elements") {
  for (const char* name : {"A2", "A3", "A4", "A5", "A6", "D4", "D5", "D6", "E6"}) {
    const auto s = RootSystem::build(CartanType::parse(name));
    const auto all = enumerate_mosets(s);
    REQUIRE_FALSE(all.empty());
    for (const auto& m : all) CHECK_MESSAGE(static_cast<int>(m.size()) == mu(s), name);
  }
  CHECK(enumerate_mosets(RootSystem::build(Series::A, 2)).size() == 3);
  CHECK(enumerate_mosets(RootSystem::build(Series::A, 1)).size() == 1);
}

TEST_CASE("moset minus a root is a moset of its complement") {
  const auto d5 = RootSystem::build(Series::D, 5);
  RootSet proj;
  for (int a = 0; a < d5.size(); ++a)
    if (d5.is_canonical(a)) proj.push_back(a);
  for (const auto& m : enumerate_mosets(d5)) {
    const RootSet rest(m.begin() + 1, m.end());
    CHECK(is_moset(d5, rest, orthogonal_complement(d5, {m.front()}, proj)));
  }
}

TEST_CASE("mosets of reducible systems meet each component in a moset") {
  // A2+A1 and D4+A2 as subsystems of larger systems.
  const auto a4 = RootSystem::build(Series::A, 4);
  const auto& p4 = a4.simple_basis();
  const auto e8 = RootSystem::build(Series::E, 8);
  const auto& p8 = e8.simple_basis();
  struct Case {
    const RootSystem* sys;
    RootSet pi;
  };
  // E8 nodes in label order: 2,3,4,5 form D4; 7,8 form A2.
  for (const Case& c : {Case{&a4, {p4[0], p4[1], p4[3]}}, Case{&e8, {p8[1], p8[2], p8[3], p8[4], p8[6], p8[7]}}}) {
    const RootSet sub = subsystem_generated(*c.sys, c.pi);
    const auto comps = subsystem_components(*c.sys, sub);
    REQUIRE(comps.size() == 2);
    RootSet proj = projectivize(*c.sys, sub);
    const Moset m = extend_to_moset(*c.sys, {}, proj);
    for (const auto& comp : comps) {
      RootSet part;
      for (RootIndex r : m.members)
        if (std::count(comp.begin(), comp.end(), r)) part.push_back(r);
      CHECK(is_moset(*c.sys, part, projectivize(*c.sys, comp)));
    }
  }
}

TEST_CASE("complement of an orthogonal set has at most one non-A1 component") {
  std::mt19937 rng(5);
  for (const char* name : {"A5", "D5", "D6", "E6", "E7", "E8"}) {
    const auto s = RootSystem::build(CartanType::parse(name));
    const bool full = s.rank() <= 6;
    const auto mosets = full ? enumerate_mosets(s) : std::vector<RootSet>{};
    auto check = [&](const RootSet& o) {
      int big = 0;
      for (const auto& comp : subsystem_components(s, orthogonal_complement(s, o)))
        if (comp.size() > 2) ++big;
      CHECK_MESSAGE(big <= 1, name);
    };
    if (full) {
      std::set<RootSet> seen;
      for (const auto& m : mosets)
        for (unsigned mask = 0; mask < (1U << m.size()); ++mask) {
          RootSet o;
          for (std::size_t i = 0; i < m.size(); ++i)
            if (mask >> i & 1U) o.push_back(m[i]);
          if (seen.insert(o).second) check(o);
        }
    } else {
      for (int t = 0; t < 200; ++t) {
        const Moset m = extend_to_moset(s, {static_cast<RootIndex>(rng() % s.size())});
        RootSet o;
        for (RootIndex r : m.members)
          if (rng() % 2) o.push_back(r);
        check(o);
      }
    }
  }
}

TEST_CASE("perfect mosets") {
  const auto a3 = RootSystem::build(Series::A, 3);
  const auto& p3 = a3.simple_basis();
  CHECK(perfect_moset(a3, p3).members == RootSet{p3[0], p3[2]});
  const auto d4 = RootSystem::build(Series::D, 4);
  const auto& p4 = d4.simple_basis();
  CHECK(perfect_moset(d4, p4).members == RootSet{p4[0], p4[2], p4[3]});
  const auto a2 = RootSystem::build(Series::A, 2);
  const auto& p2 = a2.simple_basis();
  CHECK(perfect_moset(a2, p2).members == RootSet{std::min(p2[0], p2[1])});
  CHECK_THROWS_AS(perfect_moset(a2, {p2[0], a2.negate(p2[0])}), Error);
  // Definition check on every Pi-subset of the E7 basis.
  const auto e7 = RootSystem::build(Series::E, 7);
  const auto& p7 = e7.simple_basis();
  for (unsigned mask = 1; mask < 128; ++mask) {
    RootSet l;
    for (int i = 0; i < 7; ++i)
      if (mask >> i & 1U) l.push_back(p7[i]);
    const Moset o = perfect_moset(e7, l);
    RootSet rest;
    for (RootIndex r : l)
      if (!std::count(o.members.begin(), o.members.end(), r)) rest.push_back(r);
    CHECK(is_orthogonal_set(e7, o.members));
    CHECK(is_orthogonal_set(e7, rest));
    CHECK(o.members.size() >= rest.size());
  }
}

TEST_CASE("bold nodes of enhanced diagrams form a moset") {
  for (const char* name : {"A4", "A7", "D4", "D7", "D8", "E6", "E7", "E8"}) {
    const auto s = RootSystem::build(CartanType::parse(name));
    const EnhancedBasis b = enhanced_basis(s);
    RootSet proj;
    for (int a = 0; a < s.size(); ++a)
      if (s.is_canonical(a)) proj.push_back(a);
    CHECK_MESSAGE(is_moset(s, b.roots_of(b.moset), proj), name);
    CHECK(popcount(b.moset) == mu(s));
  }
}

TEST_CASE("all mosets are conjugate") {
  for (const char* name : {"A1", "A2", "A3", "A4", "D4", "D5"}) {
    const auto s = RootSystem::build(CartanType::parse(name));
    CHECK_MESSAGE(all_mosets_conjugate_check(s, WeylGroup::enumerate(s)), name);
  }
}
