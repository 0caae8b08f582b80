#include "rootforge/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include "rootforge/moset.hpp"

namespace rootforge {

namespace {

using Bits = std::array<std::uint64_t, 4>;

struct BitsHash {
  std::size_t operator()(const Bits& b) const {
    std::size_t h = 0;
    for (auto w : b) h = h * 0x9E3779B97F4A7C15ull ^ (w + (h >> 7));
    return h;
  }
};

Bits to_bits(const RootSet& s) {
  Bits b{};
  for (RootIndex r : s) b[r >> 6] |= std::uint64_t{1} << (r & 63);
  return b;
}

RootSet from_bits(const Bits& b) {
  RootSet s;
  for (int i = 0; i < 256; ++i)
    if (b[i >> 6] >> (i & 63) & 1) s.push_back(i);
  return s;
}

std::vector<CartanType> all_types(int max_a = 8, int max_d = 8) {
  std::vector<CartanType> out;
  for (int n = 1; n <= max_a; ++n) out.push_back({Series::A, n});
  for (int n = 4; n <= max_d; ++n) out.push_back({Series::D, n});
  for (int n = 6; n <= 8; ++n) out.push_back({Series::E, n});
  return out;
}

// Expected complement of a root, with D2 = 2A1 and D3 = A3.
std::string expected_complement(const CartanType& t) {
  switch (t.series) {
    case Series::A: return t.rank <= 2 ? "" : "A" + std::to_string(t.rank - 2);
    case Series::D:
      if (t.rank == 4) return "3A1";
      if (t.rank == 5) return "A3+A1";
      return "D" + std::to_string(t.rank - 2) + "+A1";
    case Series::E: return t.rank == 6 ? "A5" : (t.rank == 7 ? "D6" : "E7");
  }
  return "";
}

const std::map<std::string, int> kMu = {{"A1", 1}, {"A2", 1}, {"A3", 2}, {"A4", 2}, {"A5", 3}, {"A6", 3},
                                        {"A7", 4}, {"A8", 4}, {"D4", 4}, {"D5", 4}, {"D6", 6}, {"D7", 6},
                                        {"D8", 8}, {"E6", 4}, {"E7", 7}, {"E8", 8}};
const std::map<std::string, int> kNu = {{"A1", 1},  {"A2", 1},  {"A3", 2},   {"A4", 2},   {"A5", 6},  {"A6", 6},
                                        {"A7", 24}, {"A8", 24}, {"D4", 4},   {"D5", 8},   {"D6", 24}, {"D7", 48},
                                        {"D8", 192}, {"E6", 24}, {"E7", 168}, {"E8", 1344}};

// Collects failures; a criterion passes when none were recorded.
struct Report {
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  void check(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  std::string detail() const {
    std::ostringstream out;
    if (failures.empty()) {
      for (std::size_t i = 0; i < notes.size(); ++i) out << (i ? "; " : "") << notes[i];
      return out.str();
    }
    out << failures.size() << " failure(s): ";
    for (std::size_t i = 0; i < failures.size() && i < 5; ++i) out << (i ? "; " : "") << failures[i];
    return out.str();
  }
};

std::set<std::string> special_types_of(int rank) {
  if (rank == 7) return {"A5", "A3+A1", "3A1", "A5+A1", "A3+2A1", "4A1"};
  if (rank == 8) return {"A7", "2A3", "A5+A1", "A3+2A1", "4A1"};
  return {};
}

// The word carries the set a onto the set b, up to signs and order.
bool replays_set(const RootSystem& sys, const ReflectionWord& w, const RootSet& a, const RootSet& b) {
  return projectivize(sys, w.apply(sys, a)) == projectivize(sys, b);
}

RootSet labelled(const Classifier& c, const std::string& list) { return c.roots(split_labels(list)); }

// ---------------------------------------------------------------- criteria

void mosets_table(Report& r) {
  for (const auto& [name, expected] : kMu) {
    const auto s = RootSystem::build(CartanType::parse(name));
    r.check(mu(s) == expected, name + " mu");
    r.check(static_cast<int>(extend_to_moset(s).members.size()) == expected, name + " greedy moset size");
  }
  r.notes.push_back("16 systems");
}

void complements_table(Report& r) {
  for (const auto& t : all_types()) {
    const auto s = RootSystem::build(t);
    const std::string expected = expected_complement(t);
    for (int a = 0; a < s.size(); ++a)
      if (subsystem_type(s, orthogonal_complement(s, {a})).str() != expected) {
        r.check(false, t.name() + " root " + std::to_string(a));
        break;
      }
  }
  r.notes.push_back("all roots of 16 systems");
}

void core_orders(Report& r, const VerifyOptions& o) {
  for (const auto& [name, expected] : kNu) {
    const auto s = RootSystem::build(CartanType::parse(name));
    r.check(static_cast<int>(core_group_model(s).order()) == expected, name + " core order");
  }
  std::vector<std::string> brute = {"D4", "D5", "D6", "E6"};
  if (o.slow) brute.push_back("E7");
  for (const auto& name : brute) {
    const auto s = RootSystem::build(CartanType::parse(name));
    const CoreGroupModel m = core_group_model(s);
    const auto st = set_stabilizer(WeylGroup::enumerate(s, o.cap), m.moset, true);
    r.check(st.induced == m.elements, name + " stabilizer differs from the model");
  }
  r.notes.push_back("brute force on " + std::to_string(brute.size()) + " systems" +
                    (o.slow ? "" : " (E7 needs --slow)"));
}

void enhanced_diagrams(Report& r) {
  const auto e7 = RootSystem::build(Series::E, 7);
  const EnhancedBasis b7 = enhanced_basis(e7);
  r.check(b7.size() == 11, "E7 node count");
  auto adjacent = [](const EnhancedBasis& b, const std::string& x, const std::string& y) {
    return b.graph.adjacent(b.node_of(x), b.node_of(y));
  };
  for (const char* n : {"1", "4", "6"}) r.check(adjacent(b7, "l1", n), std::string("E7 l1-") + n);
  for (const char* n : {"l1", "2", "7"}) r.check(adjacent(b7, "l2", n), std::string("E7 l2-") + n);
  r.check(b7.trace.size() == 4, "E7 trace length");

  const auto e8 = RootSystem::build(Series::E, 8);
  const EnhancedBasis b8 = enhanced_basis(e8);
  r.check(b8.size() == 16, "E8 node count");
  for (int v = 0; v < b8.size(); ++v) r.check(b8.graph.degree(v) == 4, "E8 degree");
  std::set<int> orbit;
  for (const auto& a : automorphism_group(b8.graph)) orbit.insert(a[0]);
  r.check(orbit.size() == 16, "E8 vertex transitivity");

  for (const auto& t : all_types()) {
    const auto s = RootSystem::build(t);
    const EnhancedBasis b = enhanced_basis(s);
    r.check(popcount(b.moset) == kMu.at(t.name()), t.name() + " bold count");
    RootSet all(s.size());
    for (int i = 0; i < s.size(); ++i) all[i] = i;
    r.check(is_moset(s, b.roots_of(b.moset), all), t.name() + " bold nodes form a moset");
    if (t.rank >= 5) {
      const EnhancedBasis lex = enhanced_basis(s, ExtensionPolicy::Lex);
      r.check(find_isomorphism(lex.graph, b.graph).has_value(), t.name() + " policies disagree");
    }
  }
}

void small_rank_partition(Report& r) {
  // Beyond the required small ranks: the subsystem-orbit oracle never enumerates W, so E8 is cheap.
  std::vector<CartanType> types;
  for (const auto& t : all_types())
    if (t.rank >= 2) types.push_back(t);
  int subsets = 0, orbits = 0;
  for (const auto& t : types) {
    const auto s = RootSystem::build(t);
    Classifier c(s);
    const EnhancedBasis& b = c.basis();
    std::vector<RootSet> pis;
    std::vector<std::string> labels, types_of;
    for (NodeMask m = 1; m < bit(b.size()); ++m) {
      if (!is_dynkin_forest(b.graph, m)) continue;
      pis.push_back(orient(s, b.roots_of(m)));
      labels.push_back(c.orbit_label(pis.back()).str());
      types_of.push_back(classify_mask(b.graph, m).str());
    }
    const std::vector<int> ids = oracle_orbit_ids(s, pis);
    std::map<std::string, std::set<int>> by_label;
    std::map<int, std::set<std::string>> by_id;
    std::map<std::string, std::set<int>> by_type;
    for (std::size_t i = 0; i < pis.size(); ++i) {
      by_label[labels[i]].insert(ids[i]);
      by_id[ids[i]].insert(labels[i]);
      by_type[types_of[i]].insert(ids[i]);
    }
    for (const auto& [l, set] : by_label) r.check(set.size() == 1, t.name() + " label " + l + " spans orbits");
    for (const auto& [id, set] : by_id) r.check(set.size() == 1, t.name() + " orbit has several labels");
    // Certificates: every same-label pair with the first representative.
    std::map<std::string, std::size_t> first;
    for (std::size_t i = 0; i < pis.size(); ++i) {
      auto [it, fresh] = first.try_emplace(labels[i], i);
      if (fresh) continue;
      const ConjugacyVerdict v = c.are_conjugate(pis[it->second], pis[i]);
      r.check(v.conjugate && v.witness && replays_set(s, *v.witness, pis[it->second], pis[i]),
              t.name() + " no certificate for " + labels[i]);
    }
    const auto& special = t.series == Series::E ? special_types_of(t.rank) : std::set<std::string>{};
    if (t.series != Series::D)
      for (const auto& [ty, set] : by_type)
        r.check(set.size() == (special.count(ty) ? 2u : 1u), t.name() + " type " + ty + " has " +
                                                                std::to_string(set.size()) + " orbits");
    if (t.series == Series::D && t.rank % 2 == 0) {
      // Each distinguished type splits into exactly two orbits.
      std::map<std::string, std::set<int>> split;
      for (std::size_t i = 0; i < pis.size(); ++i)
        if (dn_tag(s, pis[i]).distinguished) split[types_of[i]].insert(ids[i]);
      r.check(!split.empty(), t.name() + " has no distinguished diagrams");
      for (const auto& [ty, set] : split) r.check(set.size() == 2, t.name() + " " + ty + " does not split in two");
    }
    subsets += static_cast<int>(pis.size());
    orbits += static_cast<int>(by_id.size());
  }
  r.notes.push_back(std::to_string(subsets) + " subdiagrams in " + std::to_string(orbits) + " orbits");
}

const std::vector<std::tuple<std::string, std::string, std::string>> kE7Table = {
    {"3A1", "2,5,7", "3,5,7"},
    {"A3+A1", "5,6,7,2", "5,6,7,3"},
    {"A5", "2,4,5,6,7", "3,4,5,6,7"},
    {"4A1", "3,5,7,l4", "2,5,7,l4"},
    {"A3+2A1", "5,6,7,3,l4", "5,6,7,2,l4"},
    {"A5+A1", "3,4,5,6,7,l4", "2,4,5,6,7,l4"}};
const std::vector<std::tuple<std::string, std::string, std::string>> kE8Table = {
    {"4A1", "2,5,7,l5", "3,5,7,l5"},
    {"A3+2A1", "7,8,l5,5,2", "7,8,l5,5,3"},
    {"2A3", "7,8,l5,2,4,5", "7,8,l5,3,4,5"},
    {"A5+A1", "5,6,7,8,l5,2", "5,6,7,8,l5,3"},
    {"A7", "2,4,5,6,7,8,l5", "3,4,5,6,7,8,l5"}};

void special_tables(Report& r, unsigned seed) {
  std::mt19937 rng(seed);
  for (int rank : {7, 8}) {
    const auto s = RootSystem::build(Series::E, rank);
    Classifier c(s);
    const auto& table = rank == 7 ? kE7Table : kE8Table;
    std::set<std::string> expected, found;
    for (const auto& [type, p0, p1] : table) {
      expected.insert("[" + type + "]^0");
      expected.insert("[" + type + "]^1");
      const OrbitLabel l0 = c.orbit_label(labelled(c, p0)), l1 = c.orbit_label(labelled(c, p1));
      r.check(l0.str() == "[" + type + "]^0", "E" + std::to_string(rank) + " {" + p0 + "} gives " + l0.str());
      r.check(l1.str() == "[" + type + "]^1", "E" + std::to_string(rank) + " {" + p1 + "} gives " + l1.str());
    }
    for (const Orbit& o : c.enumerate_pi_orbits()) {
      if (!o.label.special()) continue;
      found.insert(o.label.str());
      // Parity is constant on sampled W-translates, which reach the moset by a different route.
      const RootSet pi = orient(s, c.basis().roots_of(o.representative));
      for (int k = 0; k < 8; ++k) {
        const RootSet moved = random_weyl_word(s, rng).apply(s, pi);
        r.check(c.orbit_label(moved) == o.label, "label of a translate of " + o.label.str() + " changed");
      }
    }
    r.check(found == expected, "E" + std::to_string(rank) + " special orbit set");
    r.notes.push_back("E" + std::to_string(rank) + ": " + std::to_string(found.size()) + " special orbits");
  }
}

void worked_examples(Report& r) {
  {
    const auto s = RootSystem::build(Series::E, 8);
    Classifier c(s);
    const EmbeddingVerdict v =
        c.is_weyl_embedding(labelled(c, "2,4,5,6,7,8,l5"), labelled(c, "3,1,l1,l2,2,l7,l5"));
    r.check(!v.weyl && v.reason == "parity mismatch", "E8 example: " + (v.weyl ? "Weyl" : v.reason));
  }
  {
    const auto s = RootSystem::build(Series::E, 7);
    Classifier c(s);
    const RootSet from = labelled(c, "7,6,l3,4"), to = labelled(c, "1,3,4,6");
    const EmbeddingVerdict v = c.is_weyl_embedding(from, to);
    r.check(v.weyl, "E7 example not Weyl: " + v.reason);
    r.check(v.witness && replays(s, *v.witness, orient(s, from), to), "E7 witness does not replay");
  }
}

void order_graphs(Report& r) {
  using Edges = std::set<std::pair<std::string, std::string>>;
  auto edges_of = [](Classifier& c) {
    const Hasse h = c.hasse_diagram(true);
    Edges e;
    for (auto [u, l] : h.edges) e.emplace(h.nodes[u].str(), h.nodes[l].str());
    return e;
  };
  // Reference grid: arrows run along each row and down (or up) between rows.
  const std::vector<std::vector<std::string>> grid = {{"[A5+A1]^0", "[A3+2A1]^0", "[4A1]^0"},
                                                      {"[A5]^1", "[A3+A1]^1", "[3A1]^1"},
                                                      {"[A5+A1]^1", "[A3+2A1]^1", "[4A1]^1"},
                                                      {"[A5]^0", "[A3+A1]^0", "[3A1]^0"}};
  Edges e7;
  for (const auto& row : grid)
    for (int j = 0; j + 1 < 3; ++j) e7.emplace(row[j], row[j + 1]);
  for (int j = 0; j < 3; ++j) {
    e7.emplace(grid[0][j], grid[1][j]);
    e7.emplace(grid[2][j], grid[3][j]);
  }
  for (int j = 1; j < 3; ++j) e7.emplace(grid[2][j], grid[1][j]);
  Edges e8;
  for (const std::string p : {"0", "1"}) {
    auto L = [&](const std::string& t) { return "[" + t + "]^" + p; };
    e8.emplace(L("A7"), L("2A3"));
    e8.emplace(L("A7"), L("A5+A1"));
    e8.emplace(L("2A3"), L("A3+2A1"));
    e8.emplace(L("A5+A1"), L("A3+2A1"));
    e8.emplace(L("A3+2A1"), L("4A1"));
  }
  Classifier c7(RootSystem::build(Series::E, 7));
  const Edges got7 = edges_of(c7);
  r.check(got7 == e7, "E7 special Hasse diagram has " + std::to_string(got7.size()) + " edges");
  Classifier c8(RootSystem::build(Series::E, 8));
  const Edges got8 = edges_of(c8);
  r.check(got8 == e8, "E8 special Hasse diagram has " + std::to_string(got8.size()) + " edges");
  const OrbitLabel e6 = OrbitLabel::parse("E6", Series::E);
  const OrbitLabel a0 = OrbitLabel::parse("[4A1]^0", Series::E), a1 = OrbitLabel::parse("[4A1]^1", Series::E);
  r.check(c8.precedes(a0, e6), "E8 [4A1]^0 does not precede E6");
  r.check(!c8.precedes(a1, e6) && !c8.precedes(e6, a1), "E8 [4A1]^1 comparable with E6");
  r.notes.push_back(std::to_string(got7.size()) + " + " + std::to_string(got8.size()) + " edges");
}

void property_suites(Report& r, const VerifyOptions& o) {
  std::mt19937 rng(o.seed);
  for (const auto& t : all_types()) {
    const auto s = RootSystem::build(t);
    bool ok = true;
    for (int a = 0; a < s.size() && ok; ++a) {
      ok = s.negate(s.negate(a)) == a;
      for (int b = 0; b < s.size() && ok; ++b) {
        const int p = s.pairing(a, b);
        const auto img = s.find(sub(s.coords(a), scale(s.coords(b), p)));
        ok = img && *img == s.reflect(b, a) && s.reflect(b, *img) == a &&
             (a == b || a == s.negate(b) || std::abs(p) <= 1);
      }
    }
    r.check(ok, t.name() + " closure axioms");
  }
  for (auto t : {CartanType{Series::D, 5}, CartanType{Series::E, 6}, CartanType{Series::D, 6}}) {
    const auto s = RootSystem::build(t);
    for (int trial = 0; trial < 40; ++trial) {
      RootSet x;
      for (int i = 0; i < 4; ++i) x.push_back(static_cast<int>(rng() % s.size()));
      RootSet y = x;
      for (int i = 0; i < 2; ++i) y.push_back(static_cast<int>(rng() % s.size()));
      const RootSet cx = normalized(complete(s, x).nodes), cy = normalized(complete(s, y).nodes);
      r.check(std::includes(cy.begin(), cy.end(), cx.begin(), cx.end()), t.name() + " completion not monotone");
    }
  }
  for (const auto& t : all_types(6, 6)) {
    if (t.rank > 6) continue;
    const auto s = RootSystem::build(t);
    for (const RootSet& m : enumerate_mosets(s))
      if (static_cast<int>(m.size()) != kMu.at(t.name())) {
        r.check(false, t.name() + " has a moset of size " + std::to_string(m.size()));
        break;
      }
  }
  int weyl = 0, total = 0;
  for (const auto& t : all_types()) {
    const auto s = RootSystem::build(t);
    Classifier c(s);
    const EmbeddingSampler sampler(c);
    for (int k = 0; k < o.samples; ++k) {
      const RandomEmbedding e = sampler.next(rng);
      const EmbeddingVerdict v = c.is_weyl_embedding(e.source, e.image);
      const bool constructive = realize_embedding(s, e.source, e.image).has_value();
      r.check(v.weyl == constructive, t.name() + " reduction and constructive search disagree");
      if (v.weyl) {
        ++weyl;
        r.check(v.witness && replays(s, *v.witness, e.source, e.image), t.name() + " witness fails to replay");
      }
      ++total;
    }
  }
  r.notes.push_back(std::to_string(total) + " random embeddings, " + std::to_string(weyl) + " Weyl");
}

}  // namespace

// ---------------------------------------------------------------- helpers

std::vector<int> oracle_orbit_ids(const RootSystem& sys, const std::vector<RootSet>& pis) {
  if (sys.size() > 256) throw Error(Errc::TooLarge, "oracle supports at most 256 roots");
  std::unordered_map<Bits, int, BitsHash> id_of;
  std::vector<int> out;
  int next = 0;
  for (const RootSet& pi : pis) {
    const Bits key = to_bits(subsystem_generated(sys, pi));
    if (const auto it = id_of.find(key); it != id_of.end()) {
      out.push_back(it->second);
      continue;
    }
    const int id = next++;
    std::vector<Bits> queue{key};
    id_of.emplace(key, id);
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const RootSet members = from_bits(queue[q]);
      for (RootIndex s : sys.simple_basis()) {
        RootSet img;
        img.reserve(members.size());
        for (RootIndex m : members) img.push_back(sys.reflect(s, m));
        const Bits b = to_bits(img);
        if (id_of.emplace(b, id).second) queue.push_back(b);
      }
    }
    out.push_back(id);
  }
  return out;
}

ReflectionWord random_weyl_word(const RootSystem& sys, std::mt19937& rng, int length) {
  ReflectionWord w;
  const auto& pi = sys.simple_basis();
  for (int i = 0; i < length; ++i) w.reflections.push_back(pi[rng() % pi.size()]);
  return w;
}

bool replays(const RootSystem& sys, const ReflectionWord& w, const RootSet& from, const RootSet& to) {
  if (from.size() != to.size()) return false;
  for (std::size_t i = 0; i < from.size(); ++i) {
    const RootIndex x = w.apply(sys, from[i]);
    if (x != to[i] && x != sys.negate(to[i])) return false;
  }
  return true;
}

EmbeddingSampler::EmbeddingSampler(const Classifier& c) : c_(c) {
  const EnhancedBasis& b = c.basis();
  for (NodeMask m = 1; m < bit(b.size()); ++m)
    if (is_dynkin_forest(b.graph, m)) {
      forests_.push_back(m);
      by_type_[classify_mask(b.graph, m).str()].push_back(m);
    }
}

RandomEmbedding EmbeddingSampler::next(std::mt19937& rng) const {
  const RootSystem& s = c_.system();
  const EnhancedBasis& b = c_.basis();
  const NodeMask m1 = forests_[rng() % forests_.size()];
  const auto& peers = by_type_.at(classify_mask(b.graph, m1).str());
  const NodeMask m2 = peers[rng() % peers.size()];
  const RootSet l1 = orient(s, b.roots_of(m1)), l2 = orient(s, b.roots_of(m2));
  std::vector<std::vector<int>> isos;
  for_each_isomorphism(gamma_diagram(s, l1).graph, gamma_diagram(s, l2).graph, {}, {},
                       [&](const std::vector<int>& iso) {
                         isos.push_back(iso);
                         return isos.size() < 64;
                       });
  const auto& iso = isos[rng() % isos.size()];
  RootSet target;
  for (int i : iso) target.push_back(l2[i]);
  RandomEmbedding e;
  e.source = random_weyl_word(s, rng).apply(s, l1);
  e.image = random_weyl_word(s, rng).apply(s, target);
  return e;
}

std::vector<CriterionResult> run_acceptance(const VerifyOptions& options,
                                            const std::function<void(const CriterionResult&)>& progress) {
  const std::vector<std::pair<std::string, std::function<void(Report&)>>> criteria = {
      {"moset cardinality table", mosets_table},
      {"root complement table", complements_table},
      {"core group orders", [&](Report& r) { core_orders(r, options); }},
      {"enhanced diagrams", enhanced_diagrams},
      {"orbit partition equals the oracle", small_rank_partition},
      {"E7/E8 special orbit tables", [&](Report& r) { special_tables(r, options.seed); }},
      {"worked embedding examples", worked_examples},
      {"special order graphs", order_graphs},
      {"property suites", [&](Report& r) { property_suites(r, options); }},
  };
  std::vector<CriterionResult> out;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    CriterionResult res;
    res.id = static_cast<int>(i) + 1;
    res.title = criteria[i].first;
    Report report;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].second(report);
    } catch (const std::exception& e) {
      report.failures.push_back(std::string("exception: ") + e.what());
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    res.pass = report.failures.empty();
    res.detail = report.detail();
    if (progress) progress(res);
    out.push_back(std::move(res));
  }
  return out;
}

}  // namespace rootforge
