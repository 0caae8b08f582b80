#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "rootforge/perm.hpp"
#include "rootforge/root_system.hpp"

namespace rootforge {

// Brute-force Weyl group. Each element is kept as the images of the simple roots,
// packed one byte per image; full root permutations are derived on demand.
class WeylGroup {
 public:
  static constexpr std::size_t kDefaultCap = 10'000'000;

  // Honors ROOTFORGE_CACHE_DIR for a binary cache of the element list.
  static WeylGroup enumerate(const RootSystem& sys, std::size_t cap = kDefaultCap);

  const RootSystem& system() const { return sys_; }
  std::size_t order() const { return keys_.size(); }

  RootIndex apply(std::size_t w, RootIndex r) const;
  std::vector<RootIndex> permutation(std::size_t w) const;
  // Element-wise image, order kept.
  RootSet image(std::size_t w, const RootSet& s) const;
  // Index of the element with the given simple-root images.
  std::size_t find(const std::vector<RootIndex>& simple_images) const;

 private:
  explicit WeylGroup(const RootSystem& sys) : sys_(sys) {}
  RootIndex apply_slow(std::size_t w, RootIndex r) const;
  void build_permutations();

  RootSystem sys_;
  std::vector<std::uint64_t> keys_;  // sorted
  std::vector<std::uint8_t> perms_;  // order() x size() when small enough
};

// {w(s)} as sorted index sets; projective compares up to sign.
std::set<RootSet> subset_orbit(const WeylGroup& w, const RootSet& s, bool projective = false);

struct Stabilizer {
  std::vector<std::size_t> elements;
  std::vector<Perm> induced;  // distinct permutations of positions in s, sorted
};
Stabilizer set_stabilizer(const WeylGroup& w, const RootSet& s, bool projective = false);

}  // namespace rootforge
