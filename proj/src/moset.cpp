#include "rootforge/moset.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "rootforge/weyl_oracle.hpp"

namespace rootforge {

namespace {

RootSet all_roots(const RootSystem& sys) {
  RootSet r(sys.size());
  for (int i = 0; i < sys.size(); ++i) r[i] = i;
  return r;
}

bool orthogonal_to_all(const RootSystem& sys, RootIndex a, const RootSet& s) {
  return std::all_of(s.begin(), s.end(), [&](RootIndex b) { return sys.pairing(a, b) == 0; });
}

}  // namespace

bool is_moset(const RootSystem& sys, const RootSet& members, const RootSet& scope) {
  if (!is_orthogonal_set(sys, members)) return false;
  for (RootIndex m : members)
    if (std::find(scope.begin(), scope.end(), m) == scope.end()) return false;
  for (RootIndex a : scope)
    if (orthogonal_to_all(sys, a, members)) return false;
  return true;
}

Moset extend_to_moset(const RootSystem& sys, const RootSet& seed, const RootSet& scope) {
  if (!is_orthogonal_set(sys, seed))
    throw Error(Errc::NotOrthogonalSeed, "seed is not pairwise orthogonal");
  for (RootIndex s : seed)
    if (std::find(scope.begin(), scope.end(), s) == scope.end())
      throw Error(Errc::NotOrthogonalSeed, "seed is not inside the scope");
  Moset m{seed, scope};
  for (RootIndex a : normalized(scope))
    if (orthogonal_to_all(sys, a, m.members)) m.members.push_back(a);
  return m;
}

Moset extend_to_moset(const RootSystem& sys, const RootSet& seed) {
  return extend_to_moset(sys, seed, all_roots(sys));
}

int mu_table(const CartanType& t) {
  switch (t.series) {
    case Series::A: return (t.rank + 1) / 2;
    case Series::D: return 2 * (t.rank / 2);
    case Series::E: return t.rank == 6 ? 4 : t.rank;
  }
  return 0;
}

int mu_recursive(const RootSystem& sys, const RootSet& subsystem) {
  if (subsystem.empty()) return 0;
  return 1 + mu_recursive(sys, orthogonal_complement(sys, {subsystem.front()}, subsystem));
}

int mu(const RootSystem& sys) {
  const int table = mu_table(sys.type());
  if (mu_recursive(sys, all_roots(sys)) != table)
    throw std::logic_error("moset cardinality recursion disagrees with the table for " + sys.name());
  return table;
}

NodeMask perfect_moset(const Graph& g, NodeMask mask, const std::vector<RootIndex>& keys) {
  NodeMask out = 0;
  for (NodeMask comp : g.components(mask)) {
    NodeMask color[2] = {0, 0};
    std::vector<int> stack{lowest(comp)};
    color[0] |= bit(stack.back());
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      const int c = (color[0] & bit(v)) ? 0 : 1;
      for (int u : mask_nodes(g.neighbors(v) & comp)) {
        if ((color[c] & bit(u)) != 0)
          throw Error(Errc::NoPerfectMoset, "component is not bipartite");
        if (((color[0] | color[1]) & bit(u)) != 0) continue;
        color[1 - c] |= bit(u);
        stack.push_back(u);
      }
    }
    int pick = popcount(color[0]) >= popcount(color[1]) ? 0 : 1;
    if (popcount(color[0]) == popcount(color[1])) {
      int best = -1;
      for (int v : mask_nodes(comp))
        if (popcount(g.neighbors(v) & comp) <= 1 && (best < 0 || keys[v] < keys[best])) best = v;
      pick = (color[0] & bit(best)) ? 0 : 1;
    }
    out |= color[pick];
  }
  return out;
}

Moset perfect_moset(const RootSystem& sys, const RootSet& pi) {
  if (!is_pi_system(sys, pi)) throw Error(Errc::NotPiSystem, "perfect moset needs a Pi-system");
  const Diagram d = gamma_diagram(sys, pi);
  const NodeMask m = perfect_moset(d.graph, d.graph.all(), pi);
  Moset out{{}, pi};
  for (int v : mask_nodes(m)) out.members.push_back(pi[v]);
  return out;
}

std::vector<RootSet> enumerate_mosets(const RootSystem& sys) {
  RootSet proj;
  for (int a = 0; a < sys.size(); ++a)
    if (sys.is_canonical(a)) proj.push_back(a);
  std::vector<RootSet> out;
  RootSet current;
  // candidates: projective roots orthogonal to everything chosen so far
  auto rec = [&](auto&& self, const RootSet& candidates) -> void {
    if (candidates.empty()) {
      out.push_back(current);
      return;
    }
    const RootIndex last = current.empty() ? -1 : current.back();
    for (RootIndex a : candidates) {
      if (a <= last) continue;
      RootSet next;
      for (RootIndex b : candidates)
        if (b != a && sys.pairing(a, b) == 0) next.push_back(b);
      current.push_back(a);
      self(self, next);
      current.pop_back();
    }
  };
  // Leaves have no orthogonal candidate left, so each is maximal and is reached once.
  rec(rec, proj);
  return out;
}

bool all_mosets_conjugate_check(const RootSystem& sys, const WeylGroup& w) {
  const auto all = enumerate_mosets(sys);
  if (all.empty()) return false;
  const auto orbit = subset_orbit(w, all.front(), true);
  return orbit == std::set<RootSet>(all.begin(), all.end());
}

}  // namespace rootforge
