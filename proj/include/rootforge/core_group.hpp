#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rootforge/completion.hpp"
#include "rootforge/perm.hpp"
#include "rootforge/root_system.hpp"

namespace rootforge {

enum class LabelKind { Plain, DnMatrix, F2Cube };

struct MosetLabeling {
  LabelKind kind = LabelKind::Plain;
  std::vector<int> column;  // DnMatrix: 0-based column of each member
  std::vector<int> row;     // DnMatrix: 0 for e_a - e_b, 1 for e_a + e_b
  std::vector<int> vec;     // F2Cube: label as a 3-bit integer

  std::string label(int i) const;
};

struct CoreGroupModel {
  CartanType type;
  RootSet moset;  // canonical representatives, in model order
  MosetLabeling labeling;
  std::vector<Perm> generators;
  std::vector<Perm> elements;  // sorted

  std::size_t order() const { return elements.size(); }
  int degree() const { return static_cast<int>(moset.size()); }
  bool contains(const Perm& p) const;
  // Position of +-r in the moset, or -1.
  int position(const RootSystem& sys, RootIndex r) const;
  std::vector<int> positions(const RootSystem& sys, const RootSet& o) const;  // throws NotInMoset
};

int nu_table(const CartanType& t);

// Permutations of a spanning moset realized by isometries that preserve the root system.
std::vector<Perm> isometry_stabilizer(const RootSystem& sys, const RootSet& moset);

// F2^3 labels for E7/E8 pinned by the line (E7) or plane (E8) orbit of the group;
// origin is the member labeled 0 for E8.
MosetLabeling derive_labeling(const RootSystem& sys, const RootSet& moset,
                              const std::vector<Perm>& group, int origin = -1);

CoreGroupModel core_group_model(const RootSystem& sys, const RootSet& moset,
                                const EnhancedBasis* phi = nullptr);
// Model on the bold nodes of the standard enhanced basis.
CoreGroupModel core_group_model(const RootSystem& sys);

// Sum of F2^3 labels of positions is zero -> 0, else 1.
int parity(const CoreGroupModel& model, const std::vector<int>& positions);
bool conjugate_in_moset(const CoreGroupModel& model, const std::vector<int>& o1,
                        const std::vector<int>& o2);
// A group element agreeing with domain[i] -> image[i], if any.
std::optional<Perm> extend_partial_map(const CoreGroupModel& model, const std::vector<int>& domain,
                                       const std::vector<int>& image);
// Setwise stabilizer of o restricted to o; permutations of indices into o.
std::vector<Perm> induced_group_on_O(const CoreGroupModel& model, const std::vector<int>& o);

}  // namespace rootforge
