#include <algorithm>
#include <set>

#include "doctest.h"
#include "rootforge/diagram.hpp"
#include "rootforge/root_system.hpp"

using namespace rootforge;

namespace {

RootIndex root(const RootSystem& s, std::initializer_list<int> halves) {
  return s.index_of(Coords(halves));
}

// Independent expectation for the complement of a root, written from the ADE table.
std::string complement_expected(Series s, int n) {
  auto a = [](int k) -> std::string { return k <= 0 ? "" : "A" + std::to_string(k); };
  auto join = [](std::string x, std::string y) {
    if (x.empty()) return y;
    if (y.empty()) return x;
    return x + "+" + y;
  };
  switch (s) {
    case Series::A: return a(n - 2);
    case Series::D: {
      const int k = n - 2;
      if (k == 2) return "3A1";
      if (k == 3) return "A3+A1";
      return "D" + std::to_string(k) + "+A1";
    }
    case Series::E: return n == 6 ? "A5" : (n == 7 ? "D6" : "E7");
  }
  return join("", "");
}

}  // namespace

TEST_CASE("root counts follow the coordinate models") {
  for (int n = 1; n <= 8; ++n) CHECK(RootSystem::build(Series::A, n).size() == n * (n + 1));
  for (int n = 4; n <= 8; ++n) CHECK(RootSystem::build(Series::D, n).size() == 2 * n * (n - 1));
  CHECK(RootSystem::build(Series::E, 6).size() == 72);
  CHECK(RootSystem::build(Series::E, 7).size() == 126);
  CHECK(RootSystem::build(Series::E, 8).size() == 240);
  CHECK_THROWS_AS(RootSystem::build(Series::D, 3), Error);
  CHECK_THROWS_AS(RootSystem::build(Series::E, 5), Error);
  CHECK_THROWS_AS(RootSystem::build(Series::A, 0), Error);
}

TEST_CASE("roots are sorted lexicographically with norm 2") {
  for (auto t : {CartanType{Series::A, 4}, CartanType{Series::D, 5}, CartanType{Series::E, 7}}) {
    const auto s = RootSystem::build(t);
    CHECK(std::is_sorted(s.roots().begin(), s.roots().end()));
    for (const auto& r : s.roots()) CHECK(dot_doubled(r, r) == 8);
  }
}

TEST_CASE("closure under negation and reflections, full scan") {
  for (auto t : {CartanType{Series::A, 5}, CartanType{Series::D, 6}, CartanType{Series::E, 6},
                 CartanType{Series::E, 7}, CartanType{Series::E, 8}}) {
    const auto s = RootSystem::build(t);
    for (int a = 0; a < s.size(); ++a) {
      CHECK(s.negate(s.negate(a)) == a);
      for (int b = 0; b < s.size(); ++b) {
        const int p = s.pairing(a, b);
        const Coords expect = sub(s.coords(a), scale(s.coords(b), p));
        REQUIRE(s.find(expect).has_value());
        CHECK(s.reflect(b, a) == *s.find(expect));
        CHECK(s.reflect(b, s.reflect(b, a)) == a);
        if (a != b && a != s.negate(b)) CHECK(std::abs(p) <= 1);
      }
    }
  }
}

TEST_CASE("simple basis expansions are sign-coherent and the basis generates everything") {
  for (auto t : {CartanType{Series::A, 3}, CartanType{Series::D, 5}, CartanType{Series::E, 6},
                 CartanType{Series::E, 8}}) {
    const auto s = RootSystem::build(t);
    const auto& pi = s.simple_basis();
    CHECK(static_cast<int>(pi.size()) == t.rank);
    CHECK(is_pi_system(s, pi));
    CHECK(static_cast<int>(subsystem_generated(s, pi).size()) == s.size());
    for (int r = 0; r < s.size(); ++r) {
      const auto& c = s.simple_coefficients(r);
      const bool nonneg = std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; });
      const bool nonpos = std::all_of(c.begin(), c.end(), [](int x) { return x <= 0; });
      CHECK((nonneg || nonpos));
      CHECK(nonneg == s.is_positive(r));
    }
    CHECK(pi_system_type(s, pi).str() == t.name());
  }
}

TEST_CASE("pairing and reflection examples") {
  const auto a2 = RootSystem::build(Series::A, 2);
  const RootIndex x = root(a2, {2, -2, 0}), y = root(a2, {0, 2, -2});
  CHECK(a2.pairing(x, x) == 2);
  CHECK(a2.pairing(x, y) == -1);
  CHECK(a2.reflect(x, x) == a2.negate(x));
  CHECK(a2.reflect(x, y) == root(a2, {2, 0, -2}));
  const auto d4 = RootSystem::build(Series::D, 4);
  const RootIndex u = root(d4, {2, 2, 0, 0}), v = root(d4, {0, 0, 2, 2});
  CHECK(d4.pairing(u, v) == 0);
  CHECK(d4.reflect(u, v) == v);
}

TEST_CASE("Pi-system recognition") {
  const auto a2 = RootSystem::build(Series::A, 2);
  const RootIndex x = root(a2, {2, -2, 0}), y = root(a2, {0, 2, -2});
  const RootIndex xy = root(a2, {2, 0, -2});
  CHECK(is_pi_system(a2, {x, y}));
  CHECK_FALSE(is_pi_system(a2, {x, a2.negate(x)}));
  CHECK_FALSE(is_pi_system(a2, {x, xy}));
  CHECK(is_pi_system(a2, {x}));
}

TEST_CASE("extended Pi-systems") {
  const auto a2 = RootSystem::build(Series::A, 2);
  const auto& pi = a2.simple_basis();
  const RootSet ext = extended_pi_system(a2, pi);
  REQUIRE(ext.size() == 3);
  CHECK(a2.coords(ext[2]) == scale(add(a2.coords(pi[0]), a2.coords(pi[1])), -1));

  for (auto t : {CartanType{Series::A, 5}, CartanType{Series::D, 4}, CartanType{Series::D, 7},
                 CartanType{Series::E, 6}, CartanType{Series::E, 7}, CartanType{Series::E, 8}}) {
    const auto s = RootSystem::build(t);
    const RootSet e = extended_pi_system(s, s.simple_basis());
    CHECK(e.size() == s.simple_basis().size() + 1);
    const TypeLabel type = classify_components(gamma_diagram(s, e).graph);
    CHECK(type.str() == Component{t.series, t.rank, true}.str());
    for (std::size_t i = 0; i < e.size(); ++i) {
      RootSet drop(e);
      drop.erase(drop.begin() + static_cast<long>(i));
      CHECK(is_pi_system(s, drop));
    }
  }

  // D4: ends plus twice the center of the extended set vanish.
  const auto d4 = RootSystem::build(Series::D, 4);
  const RootSet e = extended_pi_system(d4, d4.simple_basis());
  Coords sum = scale(d4.coords(e[1]), 2);
  for (int i : {0, 2, 3, 4}) sum = add(sum, d4.coords(e[i]));
  CHECK(std::all_of(sum.begin(), sum.end(), [](int v) { return v == 0; }));

  CHECK_THROWS_AS(extended_pi_system(a2, {pi[0], a2.negate(pi[0])}), Error);
  const auto a3 = RootSystem::build(Series::A, 3);
  CHECK_THROWS_AS(extended_pi_system(a3, {a3.simple_basis()[0], a3.simple_basis()[2]}), Error);
}

TEST_CASE("elementary transformations") {
  const auto a1 = RootSystem::build(Series::A, 1);
  const auto t1 = elementary_transformations(a1, a1.simple_basis());
  REQUIRE(t1.size() == 2);
  for (const auto& t : t1) {
    CHECK(t.trivial);
    CHECK(pi_system_type(a1, t.roots).str() == "A1");
  }
  const auto d4 = RootSystem::build(Series::D, 4);
  const auto t4 = elementary_transformations(d4, d4.simple_basis());
  CHECK(t4.size() == 5);
  int four_a1 = 0;
  for (const auto& t : t4) {
    CHECK(is_pi_system(d4, t.roots));
    if (pi_system_type(d4, t.roots).str() == "4A1") {
      ++four_a1;
      CHECK_FALSE(t.trivial);
    }
  }
  CHECK(four_a1 == 1);
}

TEST_CASE("subsystem generated by a set") {
  const auto e8 = RootSystem::build(Series::E, 8);
  // D8 inside E8: simple roots e_i - e_{i+1}, e7 + e8.
  RootSet d8;
  for (int i = 0; i < 7; ++i) {
    Coords v(8, 0);
    v[i] = 2;
    v[i + 1] = -2;
    d8.push_back(e8.index_of(v));
  }
  d8.push_back(e8.index_of({0, 0, 0, 0, 0, 0, 2, 2}));
  CHECK(pi_system_type(e8, d8).str() == "D8");
  CHECK(subsystem_generated(e8, d8).size() == 112);
  const RootIndex a = e8.simple_basis()[0];
  CHECK(subsystem_generated(e8, {a}) == normalized({a, e8.negate(a)}));
  CHECK(subsystem_generated(e8, {}).empty());
}

TEST_CASE("orthogonal complements of one root match the ADE table") {
  std::vector<CartanType> types;
  for (int n = 1; n <= 8; ++n) types.push_back({Series::A, n});
  for (int n = 4; n <= 8; ++n) types.push_back({Series::D, n});
  for (int n = 6; n <= 8; ++n) types.push_back({Series::E, n});
  for (const auto& t : types) {
    const auto s = RootSystem::build(t);
    const std::string expected = complement_expected(t.series, t.rank);
    std::set<std::string> seen;
    for (int a = 0; a < s.size(); ++a) seen.insert(subsystem_type(s, orthogonal_complement(s, {a})).str());
    CHECK_MESSAGE(seen == std::set<std::string>{expected}, t.name());

    // Second route: drop the minimal root and its neighbors from the extended diagram.
    const RootSet ext = extended_pi_system(s, s.simple_basis());
    const Graph g = gamma_diagram(s, ext).graph;
    const int m = static_cast<int>(ext.size()) - 1;
    const NodeMask keep = g.all() & ~bit(m) & ~g.neighbors(m);
    CHECK(classify_mask(g, keep).str() == expected);
  }
  const auto e8 = RootSystem::build(Series::E, 8);
  CHECK(orthogonal_complement(e8, {}).size() == 240);
}

TEST_CASE("theta component") {
  const auto e7 = RootSystem::build(Series::E, 7);
  CHECK(theta_component(e7, {}).size() == 126);
  CHECK(subsystem_type(e7, theta_component(e7, {0})).str() == "D6");
  const auto d4 = RootSystem::build(Series::D, 4);
  RootSet moset{d4.index_of({2, 2, 0, 0}), d4.index_of({2, -2, 0, 0}), d4.index_of({0, 0, 2, 2}),
                d4.index_of({0, 0, 2, -2})};
  CHECK(theta_component(d4, moset).empty());
  CHECK_THROWS_AS(theta_component(d4, {moset[0], d4.index_of({2, 0, 2, 0})}), Error);
}

TEST_CASE("type parsing round trip") {
  for (std::string s : {"A3+2A1", "E8", "D4+A2+A1", "2A3", "D̂4", "4A1"})
    CHECK(TypeLabel::parse(s).str() == s);
  CHECK(CartanType::parse("E7").name() == "E7");
  CHECK(CartanType::parse("d 5").name() == "D5");
  CHECK_THROWS_AS(CartanType::parse("B3"), Error);
}
