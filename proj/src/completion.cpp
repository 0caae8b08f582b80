#include "rootforge/completion.hpp"

#include <algorithm>
#include <sstream>

namespace rootforge {

D4Set as_d4(const RootSystem& sys, const RootSet& four) {
  if (four.size() != 4) throw Error(Errc::NotD4, "need four roots");
  for (int c = 0; c < 4; ++c) {
    std::vector<RootIndex> ends;
    bool ok = true;
    for (int i = 0; i < 4 && ok; ++i) {
      if (i == c) continue;
      if (sys.pairing(four[c], four[i]) == 0 || sys.projective(four[c]) == sys.projective(four[i])) ok = false;
      ends.push_back(four[i]);
    }
    if (!ok) continue;
    if (!is_orthogonal_set(sys, ends)) continue;
    return {four[c], ends};
  }
  throw Error(Errc::NotD4, "roots do not form a D4 star");
}

RootIndex extension_root(const RootSystem& sys, const RootSet& four) {
  const D4Set d = as_d4(sys, four);
  const RootIndex g = d.center;
  Coords sum = scale(sys.coords(g), 2);
  for (RootIndex e : d.ends) {
    const RootIndex signed_end = sys.pairing(e, g) > 0 ? sys.negate(e) : e;
    sum = add(sum, sys.coords(signed_end));
  }
  const auto delta = sys.find(scale(sum, -1));
  if (!delta) throw Error(Errc::NotD4, "extension vector is not a root");
  return *delta;
}

namespace {

Graph projective_graph(const RootSystem& sys, const RootSet& nodes) {
  Graph g(static_cast<int>(nodes.size()));
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = i + 1; j < nodes.size(); ++j)
      if (sys.pairing(nodes[i], nodes[j]) != 0) g.connect(static_cast<int>(i), static_cast<int>(j));
  return g;
}

struct Candidate {
  std::vector<int> positions;  // sorted
  SubdiagramEmbedding embedding;
  RootIndex root;
};

std::vector<Candidate> missing_extensions(const RootSystem& sys, const RootSet& nodes,
                                          const Graph& g) {
  std::vector<Candidate> out;
  for (const auto& emb : find_subdiagrams(g, {Series::D, 4, false})) {
    RootSet four;
    for (int p : mask_nodes(emb.nodes)) four.push_back(nodes[p]);
    const RootIndex d = sys.projective(extension_root(sys, four));
    if (std::find(nodes.begin(), nodes.end(), d) != nodes.end()) continue;
    out.push_back({mask_nodes(emb.nodes), emb, d});
  }
  return out;
}

}  // namespace

Completion elementary_extension(const RootSystem& sys, const Completion& current,
                                const SubdiagramEmbedding& d4) {
  RootSet four;
  const std::vector<int> pos = mask_nodes(d4.nodes);
  for (int p : pos) four.push_back(current.nodes[p]);
  const D4Set d = as_d4(sys, four);
  const RootIndex delta = sys.projective(extension_root(sys, four));
  if (std::find(current.nodes.begin(), current.nodes.end(), delta) != current.nodes.end())
    throw Error(Errc::InvalidArgument, "extension root already present");

  Completion next = current;
  next.nodes.push_back(delta);
  next.graph = projective_graph(sys, next.nodes);
  const int added = static_cast<int>(next.nodes.size()) - 1;

  auto position = [&](RootIndex r) {
    return static_cast<int>(std::find(current.nodes.begin(), current.nodes.end(), sys.projective(r)) -
                            current.nodes.begin());
  };
  ExtensionStep step;
  step.center = position(d.center);
  for (RootIndex e : d.ends) step.ends.push_back(position(e));
  step.added = added;

  // The new node sees the center and exactly those outside nodes with 1 or 3 end-neighbors.
  NodeMask ends = 0;
  for (int e : step.ends) ends |= bit(e);
  for (int v = 0; v < added; ++v) {
    bool expected;
    if (v == step.center) {
      expected = true;
    } else if (ends >> v & 1) {
      expected = false;
    } else {
      const int k = popcount(next.graph.neighbors(v) & ends);
      expected = k == 1 || k == 3;
    }
    if (next.graph.adjacent(v, added) != expected)
      throw Error(Errc::InvalidArgument, "extension adjacency violates the 1-or-3 rule");
  }
  next.trace.push_back(step);
  return next;
}

bool is_complete(const RootSystem& sys, const RootSet& symmetric) {
  if (!is_symmetric(sys, symmetric)) throw Error(Errc::NotSymmetric, "is_complete");
  const RootSet nodes = projectivize(sys, symmetric);
  if (nodes.size() > static_cast<std::size_t>(Graph::kMaxNodes))
    throw Error(Errc::TooLarge, "is_complete on more than 64 projective roots");
  return missing_extensions(sys, nodes, projective_graph(sys, nodes)).empty();
}

Completion complete(const RootSystem& sys, const RootSet& x, ExtensionPolicy policy,
                    const ExtensionScript& script) {
  Completion c;
  for (RootIndex a : x) {
    const RootIndex p = sys.projective(a);
    if (std::find(c.nodes.begin(), c.nodes.end(), p) == c.nodes.end()) c.nodes.push_back(p);
  }
  c.graph = projective_graph(sys, c.nodes);
  for (std::size_t step = 0;; ++step) {
    auto cands = missing_extensions(sys, c.nodes, c.graph);
    if (cands.empty()) break;
    const Candidate* chosen = nullptr;
    if (step < script.size()) {
      for (const auto& cand : cands)
        if (cand.positions == script[step]) chosen = &cand;
      if (!chosen) throw Error(Errc::InvalidArgument, "extension script names an unavailable D4");
    } else if (policy == ExtensionPolicy::Lex) {
      chosen = &*std::min_element(cands.begin(), cands.end(), [](const auto& a, const auto& b) {
        return a.positions < b.positions;
      });
    } else {
      chosen = &*std::min_element(cands.begin(), cands.end(), [](const auto& a, const auto& b) {
        return std::lexicographical_compare(a.positions.rbegin(), a.positions.rend(),
                                            b.positions.rbegin(), b.positions.rend());
      });
    }
    c = elementary_extension(sys, c, chosen->embedding);
  }
  return c;
}

std::string canonical_label(const std::string& label) {
  std::string s;
  for (std::size_t i = 0; i < label.size();) {
    if (label.compare(i, 3, "′") == 0) {
      s += '\'';
      i += 3;
    } else if (label.compare(i, 3, "ℓ") == 0) {
      s += 'l';
      i += 3;
    } else if (label[i] == 'L') {
      s += 'l';
      ++i;
    } else if (!std::isspace(static_cast<unsigned char>(label[i]))) {
      s += label[i++];
    } else {
      ++i;
    }
  }
  return s;
}

std::vector<std::string> split_labels(const std::string& list) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : list) {
    if (ch == ',' || ch == '+' || ch == '{' || ch == '}' || ch == ' ') {
      if (!cur.empty()) out.push_back(canonical_label(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(canonical_label(cur));
  return out;
}

int EnhancedBasis::node_of(const std::string& label) const {
  const std::string want = canonical_label(label);
  for (int i = 0; i < size(); ++i)
    if (labels[i] == want) return i;
  throw Error(Errc::NotInEnhancedBasis, "no node labeled '" + label + "'");
}

int EnhancedBasis::position_of(RootIndex projective_root) const {
  auto it = std::find(nodes.begin(), nodes.end(), projective_root);
  return it == nodes.end() ? -1 : static_cast<int>(it - nodes.begin());
}

NodeMask EnhancedBasis::mask_of(const std::vector<std::string>& ls) const {
  NodeMask m = 0;
  for (const auto& l : ls) m |= bit(node_of(l));
  return m;
}

RootSet EnhancedBasis::roots_of(NodeMask m) const {
  RootSet out;
  for (int p : mask_nodes(m)) out.push_back(nodes[p]);
  return out;
}

std::vector<std::string> EnhancedBasis::labels_of(NodeMask m) const {
  std::vector<std::string> out;
  for (int p : mask_nodes(m)) out.push_back(labels[p]);
  return out;
}

namespace {

// Positions of the D4 sets whose extensions become l1..l7 in E8; the last node is forced.
ExtensionScript e8_script() {
  const std::vector<std::vector<std::string>> steps = {
      {"2", "3", "4", "5"}, {"1", "4", "6", "l1"}, {"5", "6", "7", "l1"},
      {"2", "7", "l1", "l2"}, {"7", "8", "l3", "l4"}, {"1", "8", "l2", "l4"},
      {"2", "4", "l2", "l6"}};
  ExtensionScript out;
  for (const auto& s : steps) {
    std::vector<int> pos;
    for (const auto& l : s) pos.push_back(l[0] == 'l' ? 7 + std::stoi(l.substr(1)) : std::stoi(l) - 1);
    std::sort(pos.begin(), pos.end());
    out.push_back(pos);
  }
  return out;
}

NodeMask two_coloring_class(const Graph& g, int start) {
  std::vector<int> color(g.size(), -1);
  color[start] = 0;
  std::vector<int> queue{start};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const int v = queue[i];
    for (int u : mask_nodes(g.neighbors(v))) {
      if (color[u] < 0) {
        color[u] = 1 - color[v];
        queue.push_back(u);
      } else if (color[u] == color[v]) {
        throw Error(Errc::NotMoset, "enhanced diagram is not bipartite");
      }
    }
  }
  NodeMask m = 0;
  for (int v = 0; v < g.size(); ++v)
    if (color[v] == 0) m |= bit(v);
  return m;
}

}  // namespace

EnhancedBasis enhanced_basis(const RootSystem& sys, ExtensionPolicy policy) {
  const bool scripted = policy == ExtensionPolicy::Standard && sys.series() == Series::E && sys.rank() == 8;
  const ExtensionPolicy order = policy == ExtensionPolicy::Lex ? ExtensionPolicy::Lex : ExtensionPolicy::Colex;
  const Completion c = complete(sys, sys.simple_basis(), order, scripted ? e8_script() : ExtensionScript{});
  EnhancedBasis b;
  b.nodes = c.nodes;
  b.graph = c.graph;
  b.trace = c.trace;
  b.base_size = sys.rank();
  const int n = sys.rank();
  for (int i = 0; i < n; ++i) b.labels.push_back(std::to_string(i + 1));
  if (sys.series() == Series::D) {
    b.labels[n - 1] = "1'";
    // Added nodes are twins of odd basis nodes: same neighborhood in the final diagram.
    for (int v = n; v < b.size(); ++v) {
      std::string label;
      for (int i = 3; i <= n - 1 && label.empty(); i += 2) {
        const int u = i - 1;
        const NodeMask others = ~(bit(u) | bit(v));
        if ((b.graph.neighbors(u) & others) == (b.graph.neighbors(v) & others)) label = std::to_string(i) + "'";
      }
      if (label.empty() || std::find(b.labels.begin(), b.labels.end(), label) != b.labels.end())
        throw Error(Errc::InvalidArgument, "added D_n node has no unique twin");
      b.labels.push_back(label);
    }
  } else {
    for (int v = n; v < b.size(); ++v) b.labels.push_back("l" + std::to_string(v - n + 1));
  }
  b.moset = two_coloring_class(b.graph, sys.series() == Series::E ? 1 : 0);
  return b;
}

}  // namespace rootforge
