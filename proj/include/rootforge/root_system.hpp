#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "rootforge/error.hpp"

namespace rootforge {

// Coordinates are stored doubled so that half-integer E-type roots stay integral.
using Coords = std::vector<int>;
using RootIndex = int;
using RootSet = std::vector<RootIndex>;

enum class Series : char { A = 'A', D = 'D', E = 'E' };

struct CartanType {
  Series series = Series::A;
  int rank = 1;

  std::string name() const;
  static CartanType parse(const std::string& text);
  friend bool operator==(const CartanType&, const CartanType&) = default;
};

struct CoordsHash {
  std::size_t operator()(const Coords& c) const noexcept;
};

class RootSystem {
 public:
  static RootSystem build(Series series, int rank);
  static RootSystem build(const CartanType& type) { return build(type.series, type.rank); }

  CartanType type() const { return {series_, rank_}; }
  Series series() const { return series_; }
  int rank() const { return rank_; }
  int ambient_dim() const { return dim_; }
  std::string name() const { return type().name(); }
  int size() const { return static_cast<int>(roots_.size()); }

  const Coords& coords(RootIndex a) const { return roots_[a]; }
  const std::vector<Coords>& roots() const { return roots_; }
  const RootSet& simple_basis() const { return simple_; }

  // Cartan pairing (a|b); all roots have squared length 2.
  int pairing(RootIndex a, RootIndex b) const { return pairing_[a * size() + b]; }
  RootIndex negate(RootIndex a) const { return negation_[a]; }
  // s_b(a) = a - (a|b) b
  RootIndex reflect(RootIndex b, RootIndex a) const { return reflection_[b * size() + a]; }

  std::optional<RootIndex> find(const Coords& c) const;
  RootIndex index_of(const Coords& c) const;

  bool is_canonical(RootIndex a) const;
  RootIndex projective(RootIndex a) const { return is_canonical(a) ? a : negate(a); }
  // Nonnegative or nonpositive integer coefficients in the simple basis.
  const std::vector<int>& simple_coefficients(RootIndex a) const { return coeffs_[a]; }
  bool is_positive(RootIndex a) const { return is_canonical(a); }

 private:
  RootSystem() = default;
  void finish();

  Series series_ = Series::A;
  int rank_ = 0;
  int dim_ = 0;
  std::vector<Coords> roots_;
  std::unordered_map<Coords, RootIndex, CoordsHash> index_;
  std::vector<std::int8_t> pairing_;
  std::vector<RootIndex> negation_;
  std::vector<RootIndex> reflection_;
  RootSet simple_;
  std::vector<std::vector<int>> coeffs_;
};

int dot_doubled(const Coords& a, const Coords& b);
Coords add(const Coords& a, const Coords& b);
Coords sub(const Coords& a, const Coords& b);
Coords scale(const Coords& a, int k);

RootSet normalized(RootSet s);
RootSet symmetrize(const RootSystem& sys, const RootSet& s);
RootSet projectivize(const RootSystem& sys, const RootSet& s);
bool is_symmetric(const RootSystem& sys, const RootSet& s);

bool is_linearly_independent(const RootSystem& sys, const RootSet& s);
bool is_pi_system(const RootSystem& sys, const RootSet& s);
bool is_orthogonal_set(const RootSystem& sys, const RootSet& s);

// Roots of the system lying in the integer span of s.
RootSet subsystem_generated(const RootSystem& sys, const RootSet& s);
// Roots of scope orthogonal to every member of x.
RootSet orthogonal_complement(const RootSystem& sys, const RootSet& x, const RootSet& scope);
RootSet orthogonal_complement(const RootSystem& sys, const RootSet& x);

// Irreducible components of a symmetric subsystem, each symmetric.
std::vector<RootSet> subsystem_components(const RootSystem& sys, const RootSet& subsystem);
// Simple roots of a symmetric subsystem with respect to the lexicographic positivity.
RootSet subsystem_basis(const RootSystem& sys, const RootSet& subsystem);

// Integer coefficients of root b in the linearly independent set s, if b is in its integer span.
std::optional<std::vector<long long>> integer_coefficients(const RootSystem& sys,
                                                           const RootSet& s, RootIndex b);

RootSet extended_pi_system(const RootSystem& sys, const RootSet& pi);

struct ElementaryTransformation {
  RootSet roots;
  bool trivial = false;
};
std::vector<ElementaryTransformation> elementary_transformations(const RootSystem& sys,
                                                                 const RootSet& pi);

RootSet theta_component(const RootSystem& sys, const RootSet& orthogonal);

}  // namespace rootforge
