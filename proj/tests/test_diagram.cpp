#include <random>
#include <set>

#include "doctest.h"
#include "rootforge/completion.hpp"
#include "rootforge/diagram.hpp"

using namespace rootforge;

namespace {

Graph path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.connect(i, i + 1);
  return g;
}

Graph star(int leaves) {
  Graph g(leaves + 1);
  for (int i = 1; i <= leaves; ++i) g.connect(0, i);
  return g;
}

Graph cycle(int n) {
  Graph g = path(n);
  g.connect(n - 1, 0);
  return g;
}

}  // namespace

TEST_CASE("gamma and delta diagrams") {
  const auto a3 = RootSystem::build(Series::A, 3);
  const Diagram g = gamma_diagram(a3, a3.simple_basis());
  CHECK(g.graph.edge_count() == 2);
  CHECK(classify_components(g.graph).str() == "A3");
  const RootIndex a = a3.simple_basis()[0];
  const Diagram q = gamma_diagram(a3, {a, a3.negate(a)});
  CHECK(q.graph.multiplicity(0, 1) == 4);
  CHECK(classify_components(q.graph).str() == std::string("A\u03021"));
  CHECK(gamma_diagram(a3, {a3.simple_basis()[0], a3.simple_basis()[2]}).graph.edge_count() == 0);
  const Diagram d = delta_diagram(a3, {a, a3.negate(a)});
  CHECK(d.graph.size() == 1);

  const auto a2 = RootSystem::build(Series::A, 2);
  RootSet all(a2.size());
  for (int i = 0; i < a2.size(); ++i) all[i] = i;
  const Diagram full = delta_diagram(a2, all);
  CHECK(full.graph.size() == 3);
  CHECK(full.graph.edge_count() == 3);
  CHECK(classify_components(full.graph).str() == std::string("A\u03022"));
}

TEST_CASE("shape recognition") {
  CHECK(classify_components(star(3)).str() == "D4");
  CHECK(classify_components(star(4)).str() == "D̂4");
  for (int k = 3; k <= 7; ++k) CHECK(classify_components(cycle(k)).str() == std::string("A\u0302") + std::to_string(k - 1));
  CHECK(classify_components(path(5)).str() == "A5");
  for (auto c : {Component{Series::E, 6, false}, Component{Series::E, 7, true},
                 Component{Series::D, 7, true}, Component{Series::E, 8, true},
                 Component{Series::D, 5, false}, Component{Series::E, 6, true}})
    CHECK(classify_components(dynkin_template(c)).str() == c.str());
  CHECK_THROWS_AS(classify_components(star(5)), Error);
  Graph theta = cycle(4);
  theta.connect(0, 2);
  CHECK_THROWS_AS(classify_components(theta), Error);
}

TEST_CASE("gamma and delta classifications agree on Pi-systems") {
  const auto e7 = RootSystem::build(Series::E, 7);
  const auto& pi = e7.simple_basis();
  for (int mask = 1; mask < (1 << 7); ++mask) {
    RootSet s;
    for (int i = 0; i < 7; ++i)
      if (mask >> i & 1) s.push_back(pi[i]);
    CHECK(classify_components(gamma_diagram(e7, s).graph) == classify_components(delta_diagram(e7, s).graph));
  }
}

TEST_CASE("delta diagram ignores signs") {
  const auto d5 = RootSystem::build(Series::D, 5);
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    RootSet s;
    for (int i = 0; i < 6; ++i) s.push_back(static_cast<int>(rng() % d5.size()));
    const Diagram a = delta_diagram(d5, s);
    const Diagram b = delta_diagram(d5, symmetrize(d5, s));
    CHECK(a.nodes == b.nodes);
    CHECK(a.graph == b.graph);
  }
}

TEST_CASE("random symmetric subsets classify when acyclic") {
  std::mt19937 rng(11);
  for (auto t : {CartanType{Series::D, 5}, CartanType{Series::E, 6}, CartanType{Series::A, 6}}) {
    const auto s = RootSystem::build(t);
    int checked = 0;
    for (int trial = 0; trial < 3000; ++trial) {
      RootSet pick;
      const int k = 1 + static_cast<int>(rng() % 6);
      for (int i = 0; i < k; ++i) pick.push_back(static_cast<int>(rng() % s.size()));
      const Diagram d = delta_diagram(s, pick);
      for (NodeMask c : d.graph.components(d.graph.all())) {
        int twice = 0;
        for (int v : mask_nodes(c)) twice += popcount(d.graph.neighbors(v) & c);
        if (twice / 2 != popcount(c) - 1) continue;
        CHECK_NOTHROW(classify_connected(d.graph, c));
        ++checked;
      }
    }
    CHECK(checked > 100);
  }
}

TEST_CASE("subdiagram search matches a naive scan") {
  const auto e7 = RootSystem::build(Series::E, 7);
  const EnhancedBasis phi = enhanced_basis(e7);
  for (auto c : {Component{Series::A, 1, false}, Component{Series::A, 3, false},
                 Component{Series::D, 4, false}, Component{Series::A, 5, false},
                 Component{Series::D, 5, false}, Component{Series::E, 6, false}}) {
    const auto fast = find_subdiagrams(phi.graph, c);
    const auto slow = find_subdiagrams_naive(phi.graph, c);
    REQUIRE(fast.size() == slow.size());
    for (std::size_t i = 0; i < fast.size(); ++i) CHECK(fast[i].nodes == slow[i].nodes);
    for (const auto& e : fast) {
      const Graph t = dynkin_template(c);
      for (int u = 0; u < t.size(); ++u)
        for (int v = 0; v < t.size(); ++v)
          CHECK(t.adjacent(u, v) == phi.graph.adjacent(e.map[u], e.map[v]));
    }
  }
  CHECK(find_subdiagrams(phi.graph, {Series::A, 1, false}).size() == 11);
  CHECK(find_subdiagrams(path(6), {Series::D, 4, false}).empty());

  const auto d4 = RootSystem::build(Series::D, 4);
  const Diagram ext = delta_diagram(d4, extended_pi_system(d4, d4.simple_basis()));
  const auto hits = find_subdiagrams(ext.graph, {Series::D, 4, false});
  CHECK(hits.size() == 4);  // one subset per choice of three ends out of four
}

TEST_CASE("isomorphisms and automorphisms") {
  const Graph s = star(3);
  auto id = find_isomorphism(s, s);
  REQUIRE(id);
  CHECK(*id == std::vector<int>{0, 1, 2, 3});
  Graph three_a1(3);
  CHECK_FALSE(find_isomorphism(path(3), three_a1));
  CHECK(automorphism_group(s).size() == 6);
  CHECK(automorphism_group(path(6)).size() == 2);
  CHECK_THROWS_AS(automorphism_group(path(30)), Error);

  const auto e8 = RootSystem::build(Series::E, 8);
  const EnhancedBasis phi = enhanced_basis(e8);
  const auto aut = automorphism_group(phi.graph);
  CHECK(aut.size() % 16 == 0);
}

TEST_CASE("DOT export marks bold nodes and quadruple bonds") {
  Graph g(2);
  g.connect(0, 1, 4);
  const std::string dot = to_dot(g, {"a", "b"}, 1);
  CHECK(dot.find("penwidth=3") != std::string::npos);
  CHECK(dot.find("label=\"4\"") != std::string::npos);
}
