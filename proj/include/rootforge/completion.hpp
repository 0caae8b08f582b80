#pragma once

#include <string>
#include <vector>

#include "rootforge/diagram.hpp"
#include "rootforge/root_system.hpp"

namespace rootforge {

// Which missing D4 extension to add next.
enum class ExtensionPolicy {
  Lex,       // least sorted node-position tuple
  Colex,     // least tuple compared from its largest position down
  Standard,  // Colex, except E8 follows the fixed labeling script
};

struct ExtensionStep {
  int center = -1;
  std::vector<int> ends;
  int added = -1;  // position of the new node
};

struct Completion {
  RootSet nodes;  // canonical projective representatives in insertion order
  std::vector<ExtensionStep> trace;
  Graph graph;
};

// A D4 as center plus three pairwise orthogonal ends, all pairings with the center nonzero.
struct D4Set {
  RootIndex center;
  std::vector<RootIndex> ends;
};
D4Set as_d4(const RootSystem& sys, const RootSet& four);

// The root completing the D4 to an extended D4 (signs normalized so pairings are <= 0).
RootIndex extension_root(const RootSystem& sys, const RootSet& four);

// Adds the extension root of the D4 at the given node positions; verifies the 1-or-3 rule.
Completion elementary_extension(const RootSystem& sys, const Completion& current,
                                const SubdiagramEmbedding& d4);

bool is_complete(const RootSystem& sys, const RootSet& symmetric);

// A script lists, per step, the node positions of the D4 to extend (sorted).
using ExtensionScript = std::vector<std::vector<int>>;
Completion complete(const RootSystem& sys, const RootSet& x,
                    ExtensionPolicy policy = ExtensionPolicy::Colex,
                    const ExtensionScript& script = {});

struct EnhancedBasis {
  RootSet nodes;  // first rank() entries are the simple basis in label order
  std::vector<std::string> labels;
  int base_size = 0;
  Graph graph;
  NodeMask moset = 0;  // boldfaced nodes
  std::vector<ExtensionStep> trace;

  int size() const { return static_cast<int>(nodes.size()); }
  int node_of(const std::string& label) const;
  int position_of(RootIndex projective_root) const;  // -1 if absent
  NodeMask mask_of(const std::vector<std::string>& labels) const;
  RootSet roots_of(NodeMask m) const;
  std::vector<std::string> labels_of(NodeMask m) const;
  RootSet full(const RootSystem& sys) const { return symmetrize(sys, nodes); }
};

EnhancedBasis enhanced_basis(const RootSystem& sys,
                             ExtensionPolicy policy = ExtensionPolicy::Standard);

// Accepts "3", "3'", "3′", "l2", "ℓ2".
std::string canonical_label(const std::string& label);
std::vector<std::string> split_labels(const std::string& list);

}  // namespace rootforge
