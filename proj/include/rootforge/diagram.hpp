#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rootforge/root_system.hpp"

namespace rootforge {

using NodeMask = std::uint64_t;

inline int popcount(NodeMask m) { return __builtin_popcountll(m); }
inline int lowest(NodeMask m) { return __builtin_ctzll(m); }
inline NodeMask bit(int i) { return NodeMask{1} << i; }
std::vector<int> mask_nodes(NodeMask m);

// Simple graph on at most 64 nodes; bonds carry multiplicity 1 or 4.
class Graph {
 public:
  static constexpr int kMaxNodes = 64;

  explicit Graph(int n = 0);

  int size() const { return n_; }
  void connect(int a, int b, int multiplicity = 1);
  bool adjacent(int a, int b) const { return (adj_[a] >> b) & 1U; }
  int multiplicity(int a, int b) const;
  NodeMask neighbors(int a) const { return adj_[a]; }
  int degree(int a) const { return popcount(adj_[a]); }
  int edge_count() const;
  NodeMask all() const { return n_ == 64 ? ~NodeMask{0} : (bit(n_) - 1); }
  bool has_quadruple() const { return !quad_.empty(); }

  // Connected components of the subgraph induced on mask, in order of lowest node.
  std::vector<NodeMask> components(NodeMask mask) const;
  bool connected(NodeMask mask) const;
  Graph induced(const std::vector<int>& nodes) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<NodeMask> adj_;
  std::vector<std::pair<int, int>> quad_;
};

struct Component {
  Series series = Series::A;
  int rank = 1;
  bool extended = false;

  std::string str() const;
  int node_count() const { return rank + (extended ? 1 : 0); }
  friend bool operator==(const Component&, const Component&) = default;
};

class TypeLabel {
 public:
  TypeLabel() = default;
  explicit TypeLabel(std::vector<Component> parts);
  static TypeLabel parse(const std::string& text);

  const std::vector<Component>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  bool irreducible() const { return parts_.size() == 1; }
  bool has_extended() const;
  int rank() const;
  int count(const Component& c) const;
  std::string str() const;

  friend bool operator==(const TypeLabel&, const TypeLabel&) = default;
  friend bool operator<(const TypeLabel& a, const TypeLabel& b) { return a.str() < b.str(); }

 private:
  std::vector<Component> parts_;
};

// Gamma (bond multiplicities 0/1/4) or Delta (projective, simple graph) diagram of a root set.
struct Diagram {
  RootSet nodes;
  Graph graph;
};

Diagram gamma_diagram(const RootSystem& sys, const RootSet& s);
Diagram delta_diagram(const RootSystem& sys, const RootSet& s);

Component classify_connected(const Graph& g, NodeMask mask);
TypeLabel classify_mask(const Graph& g, NodeMask mask);
TypeLabel classify_components(const Graph& g);
// True iff every component of the induced subgraph is a non-extended Dynkin shape.
bool is_dynkin_forest(const Graph& g, NodeMask mask);

// Standard labeled shapes: A path, D fork at node 2, E with node 2 on node 4.
Graph dynkin_template(const Component& c);
// Type of the subsystem spanned by a symmetric subsystem.
TypeLabel subsystem_type(const RootSystem& sys, const RootSet& subsystem);
TypeLabel pi_system_type(const RootSystem& sys, const RootSet& pi);

struct SubdiagramEmbedding {
  NodeMask nodes = 0;
  std::vector<int> map;  // template node -> diagram node
};
std::vector<SubdiagramEmbedding> find_subdiagrams(const Graph& g, const Component& pattern);
std::vector<SubdiagramEmbedding> find_subdiagrams_naive(const Graph& g, const Component& pattern);

// Node colors are optional; when given, isomorphisms must preserve them.
using NodeColors = std::vector<int>;
std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b,
                                                 const NodeColors& ca = {},
                                                 const NodeColors& cb = {});
// Calls visit for each isomorphism until it returns false.
void for_each_isomorphism(const Graph& a, const Graph& b, const NodeColors& ca,
                          const NodeColors& cb,
                          const std::function<bool(const std::vector<int>&)>& visit);
std::vector<std::vector<int>> automorphism_group(const Graph& g, int max_nodes = 24,
                                                 std::size_t max_count = 1'000'000);

std::string to_dot(const Graph& g, const std::vector<std::string>& labels, NodeMask bold = 0,
                   const std::string& name = "G");

}  // namespace rootforge
