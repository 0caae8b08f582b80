#pragma once

#include <optional>
#include <vector>

#include "rootforge/root_system.hpp"

namespace rootforge {

// Product of reflections; reflections[0] is applied first.
struct ReflectionWord {
  std::vector<RootIndex> reflections;

  RootIndex apply(const RootSystem& sys, RootIndex r) const;
  RootSet apply(const RootSystem& sys, const RootSet& s) const;
  void then(const ReflectionWord& other);
};

// Optional restriction on which reflections may be used (indexed by root).
using ReflectionScope = std::vector<char>;

// A w with w(from[i]) = +-to[i] for all i, built one root at a time inside the
// reflection subgroup fixing the roots already placed. Throws NotEmbedding if
// |pairings| are not preserved.
std::optional<ReflectionWord> realize_embedding(const RootSystem& sys, const RootSet& from,
                                                const RootSet& to,
                                                const ReflectionScope& scope = {});

// Conjugates an orthogonal set into the moset; images are canonical members of moset.
struct MosetImage {
  RootSet image;
  ReflectionWord word;
};
MosetImage conjugate_into_moset(const RootSystem& sys, const RootSet& orthogonal, const RootSet& moset);

}  // namespace rootforge
