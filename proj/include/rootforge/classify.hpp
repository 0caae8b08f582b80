#pragma once

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rootforge/completion.hpp"
#include "rootforge/core_group.hpp"
#include "rootforge/embedding.hpp"

namespace rootforge {

struct OrbitLabel {
  enum class Kind { Normal, DnTag, Special };

  TypeLabel type;
  Kind kind = Kind::Normal;
  int delta2 = 0;   // D_n: pairs of A1 components sharing their support
  int delta3 = 0;   // D_n: A3 components supported on three coordinates
  int side = -1;    // D_n distinguished diagrams only
  int charge = 0;   // E7/E8 special orbits
  int parity = -1;  // E7/E8 special orbits

  bool special() const { return kind == Kind::Special || side >= 0; }
  // "A5", "[A3+2A1]^1", "2A1{1,0}", "[A3+A1]^0" (distinguished side)
  std::string str() const;
  static OrbitLabel parse(const std::string& text, Series ambient);

  friend bool operator==(const OrbitLabel& a, const OrbitLabel& b) { return a.str() == b.str(); }
  friend bool operator<(const OrbitLabel& a, const OrbitLabel& b) { return a.str() < b.str(); }
};

struct DnTag {
  int delta2 = 0;
  int delta3 = 0;
  bool thin = true;
  int width = 0;  // coordinates in the support
  bool significant = false;
  bool distinguished = false;
};

// Signs making a set whose Delta diagram is a Dynkin forest into a Pi-system.
// Order is kept. Throws NotPiSystem when no choice of signs works.
RootSet orient(const RootSystem& sys, const RootSet& forest);

RootSet significant_part(const RootSystem& sys, const RootSet& pi);
DnTag dn_tag(const RootSystem& sys, const RootSet& pi);

struct EmbeddingVerdict {
  bool weyl = false;
  std::string reason;                     // empty when weyl
  RootSet moset_part;                     // perfect moset O of L
  RootSet source_in_moset, image_in_moset;  // f1(O) and f2(f(O))
  std::optional<ReflectionWord> witness;  // maps L onto f(L) up to signs
};

struct ConjugacyVerdict {
  bool conjugate = false;
  OrbitLabel first, second;
  std::string mode;  // "certificate" or "classification"
  std::optional<ReflectionWord> witness;
};

struct Orbit {
  OrbitLabel label;
  NodeMask representative = 0;  // nodes of the enhanced basis
  int subsets = 0;              // enhanced-basis subsets in this orbit
};

struct Hasse {
  std::vector<OrbitLabel> nodes;
  std::vector<std::pair<int, int>> edges;  // (upper, lower): lower precedes upper
};

// Classification engine for one irreducible ambient system.
class Classifier {
 public:
  explicit Classifier(const RootSystem& sys);

  const RootSystem& system() const { return sys_; }
  const EnhancedBasis& basis() const { return phi_; }
  const CoreGroupModel& core() const { return core_; }
  RootSet moset() const { return core_.moset; }

  // Roots for node labels such as "2,4,5,l5"; throws NotInEnhancedBasis.
  RootSet roots(const std::vector<std::string>& labels) const;
  std::vector<std::string> labels(const RootSet& nodes) const;

  // Images in the moset of an orthogonal subset of the enhanced basis, in input order.
  RootSet moset_embedding(const RootSet& orthogonal) const;
  // Parity of an orthogonal set (E7/E8).
  int parity(const RootSet& orthogonal);

  OrbitLabel orbit_label(const RootSet& pi);
  EmbeddingVerdict is_weyl_embedding(const RootSet& pi, const RootSet& image);
  ConjugacyVerdict are_conjugate(const RootSet& a, const RootSet& b, bool certificate = true);

  const std::vector<Orbit>& enumerate_pi_orbits();
  // Labels of all Pi-systems inside the subsystem generated by pi.
  const std::set<OrbitLabel>& labels_below(const OrbitLabel& label);
  bool precedes(const OrbitLabel& lower, const OrbitLabel& upper);
  Hasse hasse_diagram(bool special_only = false);

 private:
  RootSet orthogonal_to_moset(const RootSet& orthogonal, bool* used_tables) const;

  struct Standard;
  const Standard& standard(const TypeLabel& type) const;
  void embed(const RootSet& phi, const RootSet& moset, const RootSet& orthogonal,
             std::map<RootIndex, RootIndex>& out) const;

  RootSystem sys_;
  EnhancedBasis phi_;
  mutable std::map<std::string, std::shared_ptr<const Standard>> standards_;
  CoreGroupModel core_;
  std::map<RootSet, int> parity_cache_;
  std::optional<std::vector<Orbit>> orbits_;
  std::map<std::string, std::set<OrbitLabel>> below_;
};

std::string to_dot(const Hasse& h, const std::string& name = "order");

}  // namespace rootforge
