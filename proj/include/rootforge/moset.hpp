#pragma once

#include <vector>

#include "rootforge/diagram.hpp"
#include "rootforge/root_system.hpp"

namespace rootforge {

class WeylGroup;

// A maximal orthogonal subset of scope.
struct Moset {
  RootSet members;
  RootSet scope;
};

bool is_moset(const RootSystem& sys, const RootSet& members, const RootSet& scope);

// Greedy completion in root order.
Moset extend_to_moset(const RootSystem& sys, const RootSet& seed, const RootSet& scope);
Moset extend_to_moset(const RootSystem& sys, const RootSet& seed = {});

int mu_table(const CartanType& t);
// 1 + mu of the complement of a root, recursively, for any symmetric subsystem.
int mu_recursive(const RootSystem& sys, const RootSet& subsystem);
// Table value; throws std::logic_error if the recursion disagrees.
int mu(const RootSystem& sys);

// Per component of the induced forest: the larger color class; on a tie the one
// holding the end with the least key.
NodeMask perfect_moset(const Graph& g, NodeMask mask, const std::vector<RootIndex>& keys);
Moset perfect_moset(const RootSystem& sys, const RootSet& pi);

// All mosets of the projective system, members as canonical representatives.
std::vector<RootSet> enumerate_mosets(const RootSystem& sys);
bool all_mosets_conjugate_check(const RootSystem& sys, const WeylGroup& w);

}  // namespace rootforge
