#include "rootforge/classify.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "rootforge/moset.hpp"

namespace rootforge {

namespace {

// Special types of E7 and E8 with their charge.
const std::map<std::string, int>& special_types(int rank) {
  static const std::map<std::string, int> e7 = {{"A5", 3},     {"A3+A1", 3},  {"3A1", 3},
                                                {"A5+A1", 4},  {"A3+2A1", 4}, {"4A1", 4}};
  static const std::map<std::string, int> e8 = {
      {"A7", 4}, {"2A3", 4}, {"A5+A1", 4}, {"A3+2A1", 4}, {"4A1", 4}};
  static const std::map<std::string, int> none;
  return rank == 7 ? e7 : (rank == 8 ? e8 : none);
}

// Fixed images of the non-bold nodes in the moset.
std::string table_image(const CartanType& t, const std::string& label) {
  if (t.series != Series::E) {
    const int k = std::stoi(label);
    return std::to_string(k - 1);
  }
  static const std::map<std::string, std::string> e67 = {{"1", "3"}, {"4", "l1"}, {"6", "5"}, {"l2", "2"}};
  static const std::map<std::string, std::string> e8 = {{"1", "3"},  {"4", "l1"}, {"6", "5"},
                                                        {"8", "l5"}, {"l2", "2"}, {"l6", "l4"},
                                                        {"l7", "7"}, {"l8", "l3"}};
  const auto& table = t.rank == 8 ? e8 : e67;
  const auto it = table.find(label);
  if (it == table.end()) throw std::logic_error("no table image for node " + label + " of " + t.name());
  return it->second;
}

std::vector<int> support(const Coords& c) {
  std::vector<int> s;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) s.push_back(static_cast<int>(i));
  return s;
}

bool significant_component(const Component& c) {
  return !c.extended && c.series == Series::A && c.rank % 2 == 1;
}

int charge_of(const TypeLabel& type) {
  int total = 0;
  for (const Component& c : type.parts()) {
    const Graph g = dynkin_template(c);
    std::vector<RootIndex> keys(g.size());
    for (int i = 0; i < g.size(); ++i) keys[i] = i;
    total += popcount(perfect_moset(g, g.all(), keys));
  }
  return total;
}

}  // namespace

// ---------------------------------------------------------------- labels

std::string OrbitLabel::str() const {
  const std::string t = type.empty() ? "0" : type.str();
  switch (kind) {
    case Kind::Normal: return t;
    case Kind::Special: return "[" + t + "]^" + std::to_string(parity);
    case Kind::DnTag:
      if (side >= 0) return "[" + t + "]^" + std::to_string(side);
      if (delta2 != 0 || delta3 != 0)
        return t + "{" + std::to_string(delta2) + "," + std::to_string(delta3) + "}";
      return t;
  }
  return t;
}

OrbitLabel OrbitLabel::parse(const std::string& text, Series ambient) {
  OrbitLabel l;
  std::string body = text;
  int sup = -1;
  if (!body.empty() && body.front() == '[') {
    const auto close = body.find("]^");
    if (close == std::string::npos) throw Error(Errc::InvalidArgument, "bad orbit label '" + text + "'");
    sup = std::stoi(body.substr(close + 2));
    body = body.substr(1, close - 1);
  }
  if (const auto brace = body.find('{'); brace != std::string::npos) {
    std::sscanf(body.c_str() + brace, "{%d,%d}", &l.delta2, &l.delta3);
    body = body.substr(0, brace);
  }
  l.type = TypeLabel::parse(body);
  if (ambient == Series::D) {
    l.kind = Kind::DnTag;
    l.side = sup;
  } else if (sup >= 0) {
    l.kind = Kind::Special;
    l.parity = sup;
    l.charge = charge_of(l.type);
  }
  return l;
}

RootSet orient(const RootSystem& sys, const RootSet& forest) {
  if (is_pi_system(sys, forest)) return forest;
  RootSet out(forest);
  std::vector<char> seen(out.size(), 0);
  for (std::size_t start = 0; start < out.size(); ++start) {
    if (seen[start]) continue;
    seen[start] = 1;
    std::vector<std::size_t> queue{start};
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const std::size_t u = queue[q];
      for (std::size_t v = 0; v < out.size(); ++v) {
        if (seen[v] || sys.pairing(out[u], out[v]) == 0) continue;
        if (sys.pairing(out[u], out[v]) > 0) out[v] = sys.negate(out[v]);
        seen[v] = 1;
        queue.push_back(v);
      }
    }
  }
  if (!is_pi_system(sys, out)) throw Error(Errc::NotPiSystem, "not a Pi-system up to signs");
  return out;
}

RootSet significant_part(const RootSystem& sys, const RootSet& pi) {
  const Diagram d = gamma_diagram(sys, pi);
  RootSet out;
  for (NodeMask c : d.graph.components(d.graph.all()))
    if (significant_component(classify_connected(d.graph, c)))
      for (int v : mask_nodes(c)) out.push_back(pi[v]);
  return out;
}

DnTag dn_tag(const RootSystem& sys, const RootSet& pi) {
  if (sys.series() != Series::D) throw Error(Errc::Unsupported, "tags are defined for D_n");
  const Diagram d = gamma_diagram(sys, pi);
  DnTag tag;
  std::vector<std::vector<int>> supports;
  std::set<int> all;
  for (RootIndex r : pi) {
    supports.push_back(support(sys.coords(r)));
    all.insert(supports.back().begin(), supports.back().end());
  }
  tag.width = static_cast<int>(all.size());
  for (std::size_t i = 0; i < pi.size(); ++i)
    for (std::size_t j = i + 1; j < pi.size(); ++j)
      if (supports[i] == supports[j]) tag.thin = false;
  tag.significant = true;
  std::vector<std::vector<int>> singles;
  for (NodeMask c : d.graph.components(d.graph.all())) {
    const Component comp = classify_connected(d.graph, c);
    if (!significant_component(comp)) tag.significant = false;
    std::set<int> s;
    for (int v : mask_nodes(c)) s.insert(supports[v].begin(), supports[v].end());
    if (comp.series == Series::A && comp.rank == 3 && s.size() == 3) ++tag.delta3;
    if (comp.series == Series::A && comp.rank == 1) singles.push_back(supports[lowest(c)]);
  }
  for (std::size_t i = 0; i < singles.size(); ++i)
    for (std::size_t j = i + 1; j < singles.size(); ++j)
      if (singles[i] == singles[j]) ++tag.delta2;
  tag.distinguished = tag.thin && tag.significant && tag.width == sys.rank();
  return tag;
}

// ---------------------------------------------------------------- engine

struct Classifier::Standard {
  explicit Standard(RootSystem s) : sys(std::move(s)), phi(enhanced_basis(sys)) {}
  RootSystem sys;
  EnhancedBasis phi;
};

Classifier::Classifier(const RootSystem& sys)
    : sys_(sys), phi_(enhanced_basis(sys_)), core_(core_group_model(sys_, phi_.roots_of(phi_.moset), &phi_)) {}

const Classifier::Standard& Classifier::standard(const TypeLabel& type) const {
  const std::string key = type.str();
  auto& slot = standards_[key];
  if (!slot) {
    const Component c = type.parts().front();
    slot = std::make_shared<Standard>(RootSystem::build(c.series, c.rank));
  }
  return *slot;
}

RootSet Classifier::roots(const std::vector<std::string>& labels) const {
  RootSet out;
  for (const auto& l : labels) {
    int node = -1;
    try {
      node = phi_.node_of(l);
    } catch (const Error&) {
      throw Error(Errc::NotInEnhancedBasis, "no node '" + l + "' in the enhanced diagram of " + sys_.name());
    }
    out.push_back(phi_.nodes[node]);
  }
  return out;
}

std::vector<std::string> Classifier::labels(const RootSet& nodes) const {
  std::vector<std::string> out;
  for (RootIndex r : nodes) {
    const int p = phi_.position_of(sys_.projective(r));
    if (p < 0) throw Error(Errc::NotInEnhancedBasis, "root is not a node of the enhanced basis");
    out.push_back(phi_.labels[p]);
  }
  return out;
}

void Classifier::embed(const RootSet& phi, const RootSet& moset, const RootSet& orthogonal,
                       std::map<RootIndex, RootIndex>& out) const {
  RootSet inside, outside;
  for (RootIndex o : orthogonal)
    (std::count(moset.begin(), moset.end(), o) ? inside : outside).push_back(o);
  for (RootIndex o : inside) out[o] = o;
  if (outside.empty()) return;
  if (!inside.empty()) {
    // Peel the part already in the moset: the rest lives in its orthogonal complement.
    RootSet phi1, m1;
    for (RootIndex x : phi)
      if (std::all_of(inside.begin(), inside.end(), [&](RootIndex o) { return sys_.pairing(x, o) == 0; }))
        phi1.push_back(x);
    for (RootIndex x : moset)
      if (std::count(phi1.begin(), phi1.end(), x)) m1.push_back(x);
    embed(phi1, m1, outside, out);
    return;
  }
  const Diagram d = delta_diagram(sys_, phi);
  for (NodeMask comp : d.graph.components(d.graph.all())) {
    RootSet nodes, here;
    for (int v : mask_nodes(comp)) nodes.push_back(d.nodes[v]);
    for (RootIndex o : orthogonal)
      if (std::count(nodes.begin(), nodes.end(), o)) here.push_back(o);
    if (here.empty()) continue;
    const TypeLabel type = subsystem_type(sys_, subsystem_generated(sys_, nodes));
    if (!type.irreducible()) throw std::logic_error("enhanced basis component is reducible");
    const Standard& std_basis = standard(type);
    const CartanType t{type.parts().front().series, type.parts().front().rank};

    std::vector<int> comp_nodes = mask_nodes(comp);
    Graph gc = d.graph.induced(comp_nodes);
    NodeColors cs(std_basis.phi.size()), cc(nodes.size());
    for (int v = 0; v < std_basis.phi.size(); ++v) cs[v] = (std_basis.phi.moset & bit(v)) ? 1 : 0;
    for (std::size_t v = 0; v < nodes.size(); ++v) cc[v] = std::count(moset.begin(), moset.end(), nodes[v]) ? 1 : 0;

    ReflectionScope scope(sys_.size(), 0);
    for (RootIndex r : subsystem_generated(sys_, nodes)) scope[r] = 1;

    auto images_for = [&](const std::vector<int>& iso) {
      // iso: standard node -> component node index
      RootSet img;
      for (RootIndex o : here) {
        const int local = static_cast<int>(std::find(nodes.begin(), nodes.end(), o) - nodes.begin());
        const int s = static_cast<int>(std::find(iso.begin(), iso.end(), local) - iso.begin());
        const std::string target = table_image(t, std_basis.phi.labels[s]);
        img.push_back(nodes[iso[std_basis.phi.node_of(target)]]);
      }
      return img;
    };
    std::optional<RootSet> chosen;
    // The ambient diagram itself: use its own labels first.
    if (t == sys_.type() && normalized(nodes) == normalized(phi_.nodes)) {
      std::vector<int> iso(std_basis.phi.size());
      for (int v = 0; v < std_basis.phi.size(); ++v)
        iso[v] = static_cast<int>(std::find(nodes.begin(), nodes.end(), phi_.nodes[v]) - nodes.begin());
      const RootSet img = images_for(iso);
      if (realize_embedding(sys_, here, img, scope)) chosen = img;
    }
    if (!chosen)
      for_each_isomorphism(std_basis.phi.graph, gc, cs, cc, [&](const std::vector<int>& iso) {
        const RootSet img = images_for(iso);
        if (!realize_embedding(sys_, here, img, scope)) return true;
        chosen = img;
        return false;
      });
    if (!chosen) throw std::logic_error("no valid transported embedding table for " + type.str());
    for (std::size_t i = 0; i < here.size(); ++i) out[here[i]] = (*chosen)[i];
  }
}

RootSet Classifier::moset_embedding(const RootSet& orthogonal) const {
  RootSet o;
  for (RootIndex r : orthogonal) {
    const RootIndex p = sys_.projective(r);
    if (phi_.position_of(p) < 0) throw Error(Errc::NotInEnhancedBasis, "root is not a node of the enhanced basis");
    o.push_back(p);
  }
  if (!is_orthogonal_set(sys_, o)) throw Error(Errc::NotOrthogonal, "set is not orthogonal");
  std::map<RootIndex, RootIndex> f;
  embed(phi_.nodes, core_.moset, o, f);
  RootSet out;
  for (RootIndex r : o) out.push_back(f.at(r));
  return out;
}

RootSet Classifier::orthogonal_to_moset(const RootSet& orthogonal, bool* used_tables) const {
  const bool in_phi = std::all_of(orthogonal.begin(), orthogonal.end(),
                                  [&](RootIndex r) { return phi_.position_of(sys_.projective(r)) >= 0; });
  if (used_tables) *used_tables = in_phi;
  if (in_phi) return moset_embedding(orthogonal);
  return conjugate_into_moset(sys_, orthogonal, core_.moset).image;
}

int Classifier::parity(const RootSet& orthogonal) {
  const RootSet key = projectivize(sys_, orthogonal);
  if (const auto it = parity_cache_.find(key); it != parity_cache_.end()) return it->second;
  const int p = rootforge::parity(core_, core_.positions(sys_, orthogonal_to_moset(key, nullptr)));
  parity_cache_[key] = p;
  return p;
}

OrbitLabel Classifier::orbit_label(const RootSet& input) {
  const RootSet pi = orient(sys_, input);
  OrbitLabel l;
  l.type = pi_system_type(sys_, pi);
  if (sys_.series() == Series::D) {
    const DnTag tag = dn_tag(sys_, pi);
    l.kind = OrbitLabel::Kind::DnTag;
    l.delta2 = tag.delta2;
    l.delta3 = tag.delta3;
    if (tag.distinguished) {
      int plus = 0;
      for (RootIndex r : perfect_moset(sys_, pi).members) {
        int product = 1;
        for (int x : sys_.coords(r))
          if (x != 0) product *= x > 0 ? 1 : -1;
        plus += product > 0;
      }
      l.side = plus % 2;
    }
    return l;
  }
  const auto& special = special_types(sys_.series() == Series::E ? sys_.rank() : 0);
  const auto it = special.find(l.type.str());
  if (it == special.end()) return l;
  const Moset o = perfect_moset(sys_, pi);
  if (static_cast<int>(o.members.size()) != it->second) return l;
  l.kind = OrbitLabel::Kind::Special;
  l.charge = it->second;
  l.parity = parity(o.members);
  return l;
}

EmbeddingVerdict Classifier::is_weyl_embedding(const RootSet& source, const RootSet& image) {
  const RootSet pi = orient(sys_, source);
  if (pi.size() != image.size()) throw Error(Errc::NotEmbedding, "source and image sizes differ");
  for (std::size_t i = 0; i < pi.size(); ++i)
    for (std::size_t j = 0; j < pi.size(); ++j)
      if (std::abs(sys_.pairing(pi[i], pi[j])) != std::abs(sys_.pairing(image[i], image[j])))
        throw Error(Errc::NotEmbedding, "map does not preserve |pairing|");

  EmbeddingVerdict v;
  const Diagram d = gamma_diagram(sys_, pi);
  const NodeMask o = perfect_moset(d.graph, d.graph.all(), pi);
  RootSet fo;
  for (int i : mask_nodes(o)) {
    v.moset_part.push_back(pi[i]);
    fo.push_back(image[i]);
  }
  v.source_in_moset = orthogonal_to_moset(v.moset_part, nullptr);
  v.image_in_moset = orthogonal_to_moset(fo, nullptr);
  const auto dom = core_.positions(sys_, v.source_in_moset);
  const auto img = core_.positions(sys_, v.image_in_moset);
  if (!extend_partial_map(core_, dom, img)) {
    v.weyl = false;
    const bool parity_rule = core_.labeling.kind == LabelKind::F2Cube;
    v.reason = parity_rule && rootforge::parity(core_, dom) != rootforge::parity(core_, img)
                   ? "parity mismatch"
                   : "no core group element extends the map";
    return v;
  }
  v.weyl = true;
  v.witness = realize_embedding(sys_, pi, image);
  if (!v.witness) throw std::logic_error("core group test and constructive search disagree");
  return v;
}

ConjugacyVerdict Classifier::are_conjugate(const RootSet& a, const RootSet& b, bool certificate) {
  ConjugacyVerdict v;
  v.first = orbit_label(a);
  v.second = orbit_label(b);
  v.conjugate = v.first == v.second;
  v.mode = "classification";
  if (!certificate || !v.conjugate) return v;
  const Graph ga = gamma_diagram(sys_, a).graph, gb = gamma_diagram(sys_, b).graph;
  int tries = 0;
  for_each_isomorphism(ga, gb, {}, {}, [&](const std::vector<int>& iso) {
    RootSet target;
    for (int i : iso) target.push_back(b[i]);
    if (auto w = realize_embedding(sys_, a, target)) {
      v.witness = std::move(w);
      v.mode = "certificate";
      return false;
    }
    return ++tries < 5000;
  });
  return v;
}

const std::vector<Orbit>& Classifier::enumerate_pi_orbits() {
  if (orbits_) return *orbits_;
  std::map<std::string, Orbit> by_label;
  const int n = phi_.size();
  for (NodeMask mask = 1; mask < bit(n); ++mask) {
    if (!is_dynkin_forest(phi_.graph, mask)) continue;
    const OrbitLabel l = orbit_label(phi_.roots_of(mask));
    auto [it, fresh] = by_label.try_emplace(l.str(), Orbit{l, mask, 0});
    ++it->second.subsets;
    if (!fresh && mask_nodes(mask) < mask_nodes(it->second.representative)) it->second.representative = mask;
  }
  std::vector<Orbit> out;
  for (auto& [k, o] : by_label) out.push_back(o);
  std::stable_sort(out.begin(), out.end(), [](const Orbit& x, const Orbit& y) {
    if (x.label.type.rank() != y.label.type.rank()) return x.label.type.rank() > y.label.type.rank();
    return x.label.str() < y.label.str();
  });
  orbits_ = std::move(out);
  return *orbits_;
}

const std::set<OrbitLabel>& Classifier::labels_below(const OrbitLabel& label) {
  const std::string key = label.str();
  if (const auto it = below_.find(key); it != below_.end()) return it->second;
  const auto& orbits = enumerate_pi_orbits();
  const auto it = std::find_if(orbits.begin(), orbits.end(), [&](const Orbit& o) { return o.label == label; });
  if (it == orbits.end()) throw Error(Errc::InvalidArgument, "no orbit labeled " + key + " in " + sys_.name());
  const Completion c = complete(sys_, phi_.roots_of(it->representative), ExtensionPolicy::Colex);
  std::set<OrbitLabel> out;
  for (NodeMask mask = 1; mask < bit(c.graph.size()); ++mask) {
    if (!is_dynkin_forest(c.graph, mask)) continue;
    RootSet r;
    for (int v : mask_nodes(mask)) r.push_back(c.nodes[v]);
    out.insert(orbit_label(r));
  }
  return below_[key] = std::move(out);
}

bool Classifier::precedes(const OrbitLabel& lower, const OrbitLabel& upper) {
  if (lower == upper) return true;
  return labels_below(upper).count(lower) > 0;
}

Hasse Classifier::hasse_diagram(bool special_only) {
  Hasse h;
  for (const Orbit& o : enumerate_pi_orbits())
    if (!special_only || o.label.special()) h.nodes.push_back(o.label);
  const int n = static_cast<int>(h.nodes.size());
  std::vector<std::vector<char>> less(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) less[i][j] = precedes(h.nodes[i], h.nodes[j]);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!less[i][j]) continue;
      bool covered = true;
      for (int k = 0; k < n && covered; ++k)
        if (k != i && k != j && less[i][k] && less[k][j]) covered = false;
      if (covered) h.edges.emplace_back(j, i);
    }
  return h;
}

std::string to_dot(const Hasse& h, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n  rankdir=TB;\n";
  for (std::size_t i = 0; i < h.nodes.size(); ++i) {
    const std::string s = h.nodes[i].str();
    std::string label = s;
    if (const auto caret = s.find("]^"); caret != std::string::npos && !s.empty() && s.front() == '[')
      label = "<" + s.substr(0, caret + 1) + "<SUP>" + s.substr(caret + 2) + "</SUP>>";
    else
      label = "\"" + s + "\"";
    out << "  n" << i << " [label=" << label << "];\n";
  }
  for (auto [u, l] : h.edges) out << "  n" << u << " -> n" << l << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace rootforge
