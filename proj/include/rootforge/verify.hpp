#pragma once

#include <cstddef>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "rootforge/classify.hpp"
#include "rootforge/weyl_oracle.hpp"

namespace rootforge {

// Brute-force W-orbit ids of Pi-systems, via the subsystems they generate:
// sets with equal ids are conjugate. Explores orbits with simple reflections only.
std::vector<int> oracle_orbit_ids(const RootSystem& sys, const std::vector<RootSet>& pis);

// A random element of W as a word in simple reflections.
ReflectionWord random_weyl_word(const RootSystem& sys, std::mt19937& rng, int length = 40);

// w(from[i]) = +-to[i] for every i.
bool replays(const RootSystem& sys, const ReflectionWord& w, const RootSet& from, const RootSet& to);

// Random |pairing|-preserving maps between Pi-systems in general position, built
// from two same-type subdiagrams of the enhanced basis moved by random elements of W.
struct RandomEmbedding {
  RootSet source, image;
};
class EmbeddingSampler {
 public:
  explicit EmbeddingSampler(const Classifier& c);
  RandomEmbedding next(std::mt19937& rng) const;
  const std::vector<NodeMask>& forests() const { return forests_; }

 private:
  const Classifier& c_;
  std::vector<NodeMask> forests_;
  std::map<std::string, std::vector<NodeMask>> by_type_;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct VerifyOptions {
  bool slow = false;
  std::size_t cap = WeylGroup::kDefaultCap;
  unsigned seed = 1;
  int samples = 1000;  // random embeddings per system
};

std::vector<CriterionResult> run_acceptance(const VerifyOptions& options,
                                            const std::function<void(const CriterionResult&)>& progress = {});

}  // namespace rootforge
