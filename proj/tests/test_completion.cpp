#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "rootforge/completion.hpp"

using namespace rootforge;

namespace {

std::set<std::string> neighbor_labels(const EnhancedBasis& b, const std::string& label) {
  std::set<std::string> out;
  for (int v : mask_nodes(b.graph.neighbors(b.node_of(label)))) out.insert(b.labels[v]);
  return out;
}

RootSet all_roots(const RootSystem& s) {
  RootSet r(s.size());
  for (int i = 0; i < s.size(); ++i) r[i] = i;
  return r;
}

}  // namespace

TEST_CASE("completeness examples") {
  const auto a5 = RootSystem::build(Series::A, 5);
  CHECK(is_complete(a5, symmetrize(a5, a5.simple_basis())));
  const auto d4 = RootSystem::build(Series::D, 4);
  CHECK_FALSE(is_complete(d4, symmetrize(d4, d4.simple_basis())));
  CHECK(is_complete(d4, all_roots(d4)));
  CHECK_THROWS_AS(is_complete(d4, d4.simple_basis()), Error);
}

TEST_CASE("extension root of a D4") {
  const auto d4 = RootSystem::build(Series::D, 4);
  const RootSet& pi = d4.simple_basis();
  const RootIndex delta = extension_root(d4, pi);
  const RootSet ext = extended_pi_system(d4, pi);
  CHECK(delta == ext.back());
  CHECK(d4.pairing(delta, pi[1]) == -1);
  Coords sum = scale(d4.coords(pi[1]), 2);
  for (RootIndex e : {pi[0], pi[2], pi[3], delta}) sum = add(sum, d4.coords(e));
  CHECK(std::all_of(sum.begin(), sum.end(), [](int x) { return x == 0; }));
  CHECK_THROWS_AS(extension_root(d4, {pi[0], pi[1], pi[2], d4.negate(pi[0])}), Error);
}

TEST_CASE("E7 completion follows the reference trace") {
  const auto e7 = RootSystem::build(Series::E, 7);
  const EnhancedBasis b = enhanced_basis(e7);
  CHECK(b.size() == 11);
  REQUIRE(b.trace.size() == 4);
  const auto& s1 = b.trace[0];
  std::set<std::string> d4;
  d4.insert(b.labels[s1.center]);
  for (int e : s1.ends) d4.insert(b.labels[e]);
  CHECK(d4 == std::set<std::string>{"2", "3", "4", "5"});
  CHECK(b.labels[s1.center] == "4");
  CHECK(neighbor_labels(b, "l1") == std::set<std::string>{"1", "4", "6", "l2"});
  CHECK(neighbor_labels(b, "l2") == std::set<std::string>{"2", "7", "l1", "l4"});
  CHECK(neighbor_labels(b, "l3") == std::set<std::string>{"1", "6"});
  CHECK(neighbor_labels(b, "l4") == std::set<std::string>{"1", "l2"});
  // The second step extends {1,4,6,l1}.
  std::set<std::string> d4b;
  d4b.insert(b.labels[b.trace[1].center]);
  for (int e : b.trace[1].ends) d4b.insert(b.labels[e]);
  CHECK(d4b == std::set<std::string>{"1", "4", "6", "l1"});
  CHECK(popcount(b.moset) == 7);
  CHECK(b.labels_of(b.moset) == std::vector<std::string>{"2", "3", "5", "7", "l1", "l3", "l4"});
}

TEST_CASE("E6 and E8 enhanced diagrams") {
  const auto e6 = RootSystem::build(Series::E, 6);
  const EnhancedBasis b6 = enhanced_basis(e6);
  CHECK(b6.size() == 8);
  CHECK(popcount(b6.moset) == 4);
  CHECK(is_complete(e6, b6.full(e6)));
  CHECK(neighbor_labels(b6, "l1") == std::set<std::string>{"1", "4", "6", "l2"});

  const auto e8 = RootSystem::build(Series::E, 8);
  const EnhancedBasis b8 = enhanced_basis(e8);
  CHECK(b8.size() == 16);
  CHECK(popcount(b8.moset) == 8);
  for (int v = 0; v < 16; ++v) CHECK(b8.graph.degree(v) == 4);
  CHECK(b8.labels_of(b8.moset) == std::vector<std::string>{"2", "3", "5", "7", "l1", "l3", "l4", "l5"});
  CHECK(neighbor_labels(b8, "l5") == std::set<std::string>{"8", "l6", "l7", "l8"});
  CHECK(neighbor_labels(b8, "l8") == std::set<std::string>{"3", "5", "l3", "l5"});
  // Vertex transitivity of the torus.
  const auto aut = automorphism_group(b8.graph);
  std::set<int> orbit;
  for (const auto& a : aut) orbit.insert(a[0]);
  CHECK(orbit.size() == 16);
}

TEST_CASE("D_n enhanced diagrams carry twin labels") {
  for (int n = 4; n <= 9; ++n) {
    const auto d = RootSystem::build(Series::D, n);
    const EnhancedBasis b = enhanced_basis(d);
    const int m = n / 2;
    CHECK(b.size() == (n % 2 == 0 ? 3 * m - 1 : 3 * m));
    for (int i = 1; i < n; i += 2) {
      const std::string p = std::to_string(i) + "'";
      // A node and its twin share the same coordinate support.
      const Coords& x = d.coords(b.nodes[b.node_of(std::to_string(i))]);
      const Coords& y = d.coords(b.nodes[b.node_of(p)]);
      for (int k = 0; k < n; ++k) CHECK((x[k] == 0) == (y[k] == 0));
    }
    CHECK(popcount(b.moset) == 2 * m);
    CHECK(is_complete(d, b.full(d)));
  }
}

TEST_CASE("A_n is already complete") {
  for (int n = 1; n <= 7; ++n) {
    const auto a = RootSystem::build(Series::A, n);
    const EnhancedBasis b = enhanced_basis(a);
    CHECK(b.size() == n);
    CHECK(popcount(b.moset) == (n + 1) / 2);
  }
}

TEST_CASE("extension policies give isomorphic diagrams") {
  for (auto t : {CartanType{Series::D, 6}, CartanType{Series::D, 7}, CartanType{Series::E, 6},
                 CartanType{Series::E, 7}, CartanType{Series::E, 8}}) {
    const auto s = RootSystem::build(t);
    const EnhancedBasis lex = enhanced_basis(s, ExtensionPolicy::Lex);
    const EnhancedBasis colex = enhanced_basis(s, ExtensionPolicy::Colex);
    const EnhancedBasis standard = enhanced_basis(s, ExtensionPolicy::Standard);
    CHECK(find_isomorphism(lex.graph, colex.graph).has_value());
    CHECK(find_isomorphism(lex.graph, standard.graph).has_value());
    CHECK(normalized(lex.nodes) == normalized(colex.nodes));
  }
}

TEST_CASE("completion is monotone on nested subsets") {
  std::mt19937 rng(3);
  for (auto t : {CartanType{Series::D, 5}, CartanType{Series::E, 6}, CartanType{Series::D, 6}}) {
    const auto s = RootSystem::build(t);
    for (int trial = 0; trial < 60; ++trial) {
      RootSet x, y;
      for (int i = 0; i < 4; ++i) x.push_back(static_cast<int>(rng() % s.size()));
      y = x;
      for (int i = 0; i < 2; ++i) y.push_back(static_cast<int>(rng() % s.size()));
      // Keep the sets small enough to stay inside 64 projective roots.
      const RootSet cx = normalized(complete(s, x).nodes);
      const RootSet cy = normalized(complete(s, y).nodes);
      CHECK(std::includes(cy.begin(), cy.end(), cx.begin(), cx.end()));
      CHECK(is_complete(s, symmetrize(s, cx)));
    }
  }
}

TEST_CASE("label grammar") {
  CHECK(canonical_label("ℓ3") == "l3");
  CHECK(canonical_label("3′") == "3'");
  CHECK(split_labels("{7,8,ℓ5}+{2,4,5}") == std::vector<std::string>{"7", "8", "l5", "2", "4", "5"});
  const auto e7 = RootSystem::build(Series::E, 7);
  const EnhancedBasis b = enhanced_basis(e7);
  CHECK_THROWS_AS(b.node_of("l9"), Error);
}
