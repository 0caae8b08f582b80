#include "rootforge/diagram.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>

namespace rootforge {

std::vector<int> mask_nodes(NodeMask m) {
  std::vector<int> out;
  while (m) {
    out.push_back(lowest(m));
    m &= m - 1;
  }
  return out;
}

Graph::Graph(int n) : n_(n), adj_(n, 0) {
  if (n > kMaxNodes) throw Error(Errc::TooLarge, "diagram exceeds 64 nodes");
}

void Graph::connect(int a, int b, int multiplicity) {
  if (a == b) throw Error(Errc::InvalidArgument, "self bond");
  adj_[a] |= bit(b);
  adj_[b] |= bit(a);
  if (multiplicity == 4) quad_.emplace_back(std::min(a, b), std::max(a, b));
}

int Graph::multiplicity(int a, int b) const {
  if (!adjacent(a, b)) return 0;
  const auto key = std::make_pair(std::min(a, b), std::max(a, b));
  return std::find(quad_.begin(), quad_.end(), key) != quad_.end() ? 4 : 1;
}

int Graph::edge_count() const {
  int e = 0;
  for (NodeMask m : adj_) e += popcount(m);
  return e / 2;
}

std::vector<NodeMask> Graph::components(NodeMask mask) const {
  std::vector<NodeMask> out;
  NodeMask left = mask;
  while (left) {
    NodeMask comp = bit(lowest(left));
    NodeMask frontier = comp;
    while (frontier) {
      NodeMask next = 0;
      for (int v : mask_nodes(frontier)) next |= adj_[v];
      next &= mask & ~comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    left &= ~comp;
  }
  return out;
}

bool Graph::connected(NodeMask mask) const { return mask != 0 && components(mask).size() == 1; }

Graph Graph::induced(const std::vector<int>& nodes) const {
  Graph g(static_cast<int>(nodes.size()));
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = i + 1; j < nodes.size(); ++j)
      if (adjacent(nodes[i], nodes[j]))
        g.connect(static_cast<int>(i), static_cast<int>(j), multiplicity(nodes[i], nodes[j]));
  return g;
}

std::string Component::str() const {
  std::string s(1, static_cast<char>(series));
  if (extended) s += "̂";
  return s + std::to_string(rank);
}

namespace {

int series_order(Series s) {
  switch (s) {
    case Series::E: return 0;
    case Series::D: return 1;
    default: return 2;
  }
}

bool component_before(const Component& a, const Component& b) {
  if (a.extended != b.extended) return a.extended;
  if (series_order(a.series) != series_order(b.series))
    return series_order(a.series) < series_order(b.series);
  return a.rank > b.rank;
}

}  // namespace

TypeLabel::TypeLabel(std::vector<Component> parts) : parts_(std::move(parts)) {
  std::stable_sort(parts_.begin(), parts_.end(), component_before);
}

TypeLabel TypeLabel::parse(const std::string& text) {
  std::vector<Component> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, '+')) {
    if (item.empty()) continue;
    std::size_t i = 0;
    int mult = 0;
    while (i < item.size() && std::isdigit(static_cast<unsigned char>(item[i])))
      mult = mult * 10 + (item[i++] - '0');
    if (mult == 0) mult = 1;
    if (i >= item.size()) throw Error(Errc::InvalidArgument, "bad type '" + text + "'");
    Component c;
    c.series = static_cast<Series>(item[i++]);
    if (item.compare(i, 2, "̂") == 0) {
      c.extended = true;
      i += 2;
    } else if (i < item.size() && item[i] == '~') {
      c.extended = true;
      ++i;
    }
    c.rank = std::stoi(item.substr(i));
    for (int k = 0; k < mult; ++k) parts.push_back(c);
  }
  return TypeLabel(std::move(parts));
}

bool TypeLabel::has_extended() const {
  return std::any_of(parts_.begin(), parts_.end(), [](const Component& c) { return c.extended; });
}

int TypeLabel::rank() const {
  int r = 0;
  for (const auto& c : parts_) r += c.rank;
  return r;
}

int TypeLabel::count(const Component& c) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), c));
}

std::string TypeLabel::str() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size();) {
    std::size_t j = i;
    while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
    if (!out.empty()) out += "+";
    if (j - i > 1) out += std::to_string(j - i);
    out += parts_[i].str();
    i = j;
  }
  return out;
}

Diagram gamma_diagram(const RootSystem& sys, const RootSet& s) {
  Diagram d{s, Graph(static_cast<int>(s.size()))};
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      const int p = sys.pairing(s[i], s[j]);
      if (p == 0 || s[i] == s[j]) continue;
      d.graph.connect(static_cast<int>(i), static_cast<int>(j), sys.negate(s[i]) == s[j] ? 4 : 1);
    }
  return d;
}

Diagram delta_diagram(const RootSystem& sys, const RootSet& s) {
  const RootSet nodes = projectivize(sys, s);
  Diagram d{nodes, Graph(static_cast<int>(nodes.size()))};
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = i + 1; j < nodes.size(); ++j)
      if (sys.pairing(nodes[i], nodes[j]) != 0)
        d.graph.connect(static_cast<int>(i), static_cast<int>(j));
  return d;
}

namespace {

// Length of the arm starting at `start` after leaving `from`, within mask.
int arm_length(const Graph& g, NodeMask mask, int from, int start) {
  int len = 1;
  int prev = from, cur = start;
  while (true) {
    const NodeMask nb = g.neighbors(cur) & mask & ~bit(prev);
    if (popcount(nb) != 1) return popcount(nb) == 0 ? len : -1;
    prev = cur;
    cur = lowest(nb);
    ++len;
  }
}

[[noreturn]] void unrecognized(NodeMask mask) {
  throw Error(Errc::UnrecognizedComponent,
              "component with " + std::to_string(popcount(mask)) + " nodes matches no known shape");
}

}  // namespace

Component classify_connected(const Graph& g, NodeMask mask) {
  const int n = popcount(mask);
  int twice_edges = 0;
  std::vector<int> nodes = mask_nodes(mask);
  std::vector<int> branch;
  bool quad = false;
  for (int v : nodes) {
    const int deg = popcount(g.neighbors(v) & mask);
    twice_edges += deg;
    if (deg >= 3) branch.push_back(v);
    if (g.has_quadruple())
      for (int u : mask_nodes(g.neighbors(v) & mask))
        if (g.multiplicity(u, v) == 4) quad = true;
  }
  const int edges = twice_edges / 2;
  if (quad) {
    if (n == 2) return {Series::A, 1, true};
    unrecognized(mask);
  }
  if (edges == n) {
    for (int v : nodes)
      if (popcount(g.neighbors(v) & mask) != 2) unrecognized(mask);
    return {Series::A, n - 1, true};
  }
  if (edges != n - 1) unrecognized(mask);
  if (branch.empty()) return {Series::A, n, false};
  if (branch.size() == 1) {
    const int c = branch.front();
    std::vector<int> arms;
    for (int u : mask_nodes(g.neighbors(c) & mask)) arms.push_back(arm_length(g, mask, c, u));
    std::sort(arms.begin(), arms.end());
    if (arms.size() == 4) {
      if (arms == std::vector<int>{1, 1, 1, 1}) return {Series::D, 4, true};
      unrecognized(mask);
    }
    if (arms.size() != 3) unrecognized(mask);
    const int p = arms[0], q = arms[1], r = arms[2];
    if (p == 1 && q == 1) return {Series::D, r + 3, false};
    if (p == 1 && q == 2 && r >= 2 && r <= 4) return {Series::E, r + 4, false};
    if (p == 2 && q == 2 && r == 2) return {Series::E, 6, true};
    if (p == 1 && q == 3 && r == 3) return {Series::E, 7, true};
    if (p == 1 && q == 2 && r == 5) return {Series::E, 8, true};
    unrecognized(mask);
  }
  if (branch.size() == 2) {
    for (int c : branch) {
      if (popcount(g.neighbors(c) & mask) != 3) unrecognized(mask);
      int leaves = 0;
      for (int u : mask_nodes(g.neighbors(c) & mask))
        if (popcount(g.neighbors(u) & mask) == 1) ++leaves;
      if (leaves != 2) unrecognized(mask);
    }
    return {Series::D, n - 1, true};
  }
  unrecognized(mask);
}

TypeLabel classify_mask(const Graph& g, NodeMask mask) {
  std::vector<Component> parts;
  for (NodeMask c : g.components(mask)) parts.push_back(classify_connected(g, c));
  return TypeLabel(std::move(parts));
}

TypeLabel classify_components(const Graph& g) { return classify_mask(g, g.all()); }

bool is_dynkin_forest(const Graph& g, NodeMask mask) {
  for (NodeMask c : g.components(mask)) {
    const int n = popcount(c);
    int twice_edges = 0;
    int branches = 0, max_deg = 0;
    for (int v : mask_nodes(c)) {
      const int d = popcount(g.neighbors(v) & c);
      twice_edges += d;
      if (d >= 3) ++branches;
      max_deg = std::max(max_deg, d);
    }
    if (twice_edges != 2 * (n - 1)) return false;
    if (branches == 0) continue;
    if (branches > 1 || max_deg > 3) return false;
    try {
      if (classify_connected(g, c).extended) return false;
    } catch (const Error&) {
      return false;
    }
  }
  return true;
}

Graph dynkin_template(const Component& c) {
  const int k = c.rank;
  Graph g(c.node_count());
  switch (c.series) {
    case Series::A:
      for (int i = 0; i + 1 < k; ++i) g.connect(i, i + 1);
      if (c.extended) {
        if (k == 1) {
          g.connect(0, 1, 4);
        } else {
          g.connect(k - 1, k);
          g.connect(k, 0);
        }
      }
      break;
    case Series::D:
      for (int i = 0; i + 2 < k; ++i) g.connect(i, i + 1);
      g.connect(k - 1, 1);
      if (c.extended) g.connect(k, k == 4 ? 1 : k - 3);
      break;
    case Series::E:
      // Bourbaki labels 1..k become 0..k-1: chain 1-3-4-...-k, node 2 on node 4.
      g.connect(0, 2);
      for (int i = 2; i + 1 < k; ++i) g.connect(i, i + 1);
      g.connect(1, 3);
      if (c.extended) g.connect(k, k == 6 ? 1 : (k == 7 ? 0 : 7));
      break;
  }
  return g;
}

TypeLabel subsystem_type(const RootSystem& sys, const RootSet& subsystem) {
  return classify_components(gamma_diagram(sys, subsystem_basis(sys, subsystem)).graph);
}

TypeLabel pi_system_type(const RootSystem& sys, const RootSet& pi) {
  return classify_components(gamma_diagram(sys, pi).graph);
}

namespace {

struct IsoSearch {
  const Graph& a;
  const Graph& b;
  const NodeColors& ca;
  const NodeColors& cb;
  const std::function<bool(const std::vector<int>&)>& visit;
  std::vector<int> order;
  std::vector<int> map;
  NodeMask used = 0;
  bool stop = false;

  int color_a(int v) const { return ca.empty() ? 0 : ca[v]; }
  int color_b(int v) const { return cb.empty() ? 0 : cb[v]; }

  void run(std::size_t depth) {
    if (stop) return;
    if (depth == order.size()) {
      if (!visit(map)) stop = true;
      return;
    }
    const int v = order[depth];
    for (int w = 0; w < b.size() && !stop; ++w) {
      if (used >> w & 1) continue;
      if (a.degree(v) != b.degree(w) || color_a(v) != color_b(w)) continue;
      bool ok = true;
      for (std::size_t i = 0; i < depth && ok; ++i) {
        const int u = order[i];
        if (a.multiplicity(u, v) != b.multiplicity(map[u], w)) ok = false;
      }
      if (!ok) continue;
      map[v] = w;
      used |= bit(w);
      run(depth + 1);
      used &= ~bit(w);
    }
  }
};

// Search order: grow by adjacency so partial maps are checked early.
std::vector<int> search_order(const Graph& g) {
  std::vector<int> order;
  NodeMask seen = 0;
  for (int s = 0; s < g.size(); ++s) {
    if (seen >> s & 1) continue;
    std::vector<int> queue{s};
    seen |= bit(s);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      order.push_back(queue[i]);
      for (int u : mask_nodes(g.neighbors(queue[i]) & ~seen)) {
        seen |= bit(u);
        queue.push_back(u);
      }
    }
  }
  return order;
}

bool same_invariants(const Graph& a, const Graph& b, const NodeColors& ca, const NodeColors& cb) {
  if (a.size() != b.size() || a.edge_count() != b.edge_count()) return false;
  std::map<std::pair<int, int>, int> da, db;
  for (int v = 0; v < a.size(); ++v) ++da[{a.degree(v), ca.empty() ? 0 : ca[v]}];
  for (int v = 0; v < b.size(); ++v) ++db[{b.degree(v), cb.empty() ? 0 : cb[v]}];
  return da == db;
}

}  // namespace

void for_each_isomorphism(const Graph& a, const Graph& b, const NodeColors& ca,
                          const NodeColors& cb,
                          const std::function<bool(const std::vector<int>&)>& visit) {
  if (!same_invariants(a, b, ca, cb)) return;
  IsoSearch s{a, b, ca, cb, visit, search_order(a), std::vector<int>(a.size(), -1)};
  s.run(0);
}

std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b,
                                                 const NodeColors& ca, const NodeColors& cb) {
  std::optional<std::vector<int>> found;
  for_each_isomorphism(a, b, ca, cb, [&](const std::vector<int>& m) {
    found = m;
    return false;
  });
  return found;
}

std::vector<std::vector<int>> automorphism_group(const Graph& g, int max_nodes,
                                                 std::size_t max_count) {
  if (g.size() > max_nodes) throw Error(Errc::TooLarge, "automorphism search too large");
  std::vector<std::vector<int>> out;
  for_each_isomorphism(g, g, {}, {}, [&](const std::vector<int>& m) {
    out.push_back(m);
    if (out.size() > max_count) throw Error(Errc::TooLarge, "automorphism group too large");
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::optional<std::vector<int>> embed(const Graph& g, NodeMask mask, const Graph& tmpl) {
  const std::vector<int> nodes = mask_nodes(mask);
  const Graph sub = g.induced(nodes);
  auto iso = find_isomorphism(tmpl, sub);
  if (!iso) return std::nullopt;
  for (int& x : *iso) x = nodes[x];
  return iso;
}

void extend_connected(const Graph& g, int k, int root, NodeMask sub, NodeMask ext,
                      std::vector<NodeMask>& out) {
  if (popcount(sub) == k) {
    out.push_back(sub);
    return;
  }
  NodeMask closed = sub;
  for (int v : mask_nodes(sub)) closed |= g.neighbors(v);
  while (ext) {
    const int w = lowest(ext);
    ext &= ext - 1;
    NodeMask fresh = g.neighbors(w) & ~closed;
    fresh &= root >= 63 ? 0 : ~(bit(root + 1) - 1);
    extend_connected(g, k, root, sub | bit(w), ext | fresh, out);
  }
}

}  // namespace

std::vector<SubdiagramEmbedding> find_subdiagrams(const Graph& g, const Component& pattern) {
  const int k = pattern.node_count();
  std::vector<NodeMask> subsets;
  for (int v = 0; v < g.size(); ++v) {
    const NodeMask ext = v >= 63 ? 0 : g.neighbors(v) & ~(bit(v + 1) - 1);
    extend_connected(g, k, v, bit(v), ext, subsets);
  }
  const Graph tmpl = dynkin_template(pattern);
  std::vector<SubdiagramEmbedding> out;
  for (NodeMask m : subsets)
    if (auto map = embed(g, m, tmpl)) out.push_back({m, *map});
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return mask_nodes(x.nodes) < mask_nodes(y.nodes);
  });
  return out;
}

std::vector<SubdiagramEmbedding> find_subdiagrams_naive(const Graph& g, const Component& pattern) {
  const int k = pattern.node_count();
  const Graph tmpl = dynkin_template(pattern);
  std::vector<SubdiagramEmbedding> out;
  if (g.size() > 24) throw Error(Errc::TooLarge, "naive subset scan");
  for (NodeMask m = 0; m < bit(g.size()); ++m) {
    if (popcount(m) != k) continue;
    if (auto map = embed(g, m, tmpl)) out.push_back({m, *map});
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return mask_nodes(x.nodes) < mask_nodes(y.nodes);
  });
  return out;
}

std::string to_dot(const Graph& g, const std::vector<std::string>& labels, NodeMask bold,
                   const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (int v = 0; v < g.size(); ++v) {
    os << "  n" << v << " [label=\"" << (v < static_cast<int>(labels.size()) ? labels[v] : std::to_string(v))
       << "\"";
    if (bold >> v & 1) os << ", penwidth=3";
    os << "];\n";
  }
  for (int u = 0; u < g.size(); ++u)
    for (int v = u + 1; v < g.size(); ++v) {
      const int m = g.multiplicity(u, v);
      if (m == 0) continue;
      os << "  n" << u << " -- n" << v;
      if (m == 4) os << " [label=\"4\"]";
      os << ";\n";
    }
  os << "}\n";
  return os.str();
}

}  // namespace rootforge
