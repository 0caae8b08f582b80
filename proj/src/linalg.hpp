#pragma once

#include <boost/rational.hpp>
#include <optional>
#include <vector>

#include "rootforge/root_system.hpp"

namespace rootforge::detail {

using Rat = boost::rational<long long>;

int rank(const std::vector<Coords>& rows);

// Coefficients c with sum c_i basis_i = v, for linearly independent basis; nullopt if v is
// outside the rational span.
std::optional<std::vector<Rat>> solve(const std::vector<Coords>& basis, const Coords& v);

// Integer lattice spanned by arbitrary generators, kept in row echelon (Hermite) form.
class Lattice {
 public:
  explicit Lattice(const std::vector<Coords>& generators);
  bool contains(const Coords& v) const;
  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  std::vector<std::vector<long long>> rows_;
  std::vector<int> pivots_;
};

}  // namespace rootforge::detail
