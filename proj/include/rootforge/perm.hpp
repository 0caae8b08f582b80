#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace rootforge {

// Permutation of 0..n-1 given as its image list.
using Perm = std::vector<int>;

Perm identity_perm(int n);
// (a * b)(i) = a(b(i))
Perm compose(const Perm& a, const Perm& b);
Perm inverse(const Perm& p);
bool is_identity(const Perm& p);

// All products of the generators, sorted. Throws CapExceeded past cap elements.
std::vector<Perm> closure(const std::vector<Perm>& generators, int degree,
                          std::size_t cap = 1'000'000);

// Cycle notation with 1-based points, e.g. "(1 2)(3 4 5)"; "()" for the identity.
std::string cycle_string(const Perm& p);

}  // namespace rootforge
