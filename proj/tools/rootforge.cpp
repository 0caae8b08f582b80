// Command-line front end. Exit codes: 0 success, 1 verification failure, 2 usage error.
#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "rootforge/classify.hpp"
#include "rootforge/moset.hpp"
#include "rootforge/verify.hpp"

using namespace rootforge;
using Json = nlohmann::ordered_json;

namespace {

constexpr const char* kSchema = "rootforge/1";

struct Sink {
  std::string path;
  void write(const std::string& text) const {
    if (path.empty() || path == "-") {
      std::cout << text;
      return;
    }
    std::ofstream out(path);
    if (!out) throw Error(Errc::InvalidArgument, "cannot write " + path);
    out << text;
  }
};

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// "E7", "E 7" or the two words "E" "7".
RootSystem system_of(const std::vector<std::string>& words) {
  std::string text;
  for (const auto& w : words) text += w;
  return RootSystem::build(CartanType::parse(text));
}

Json coords_json(const Coords& c) {
  // Coordinates are stored doubled; print the true values.
  Json row = Json::array();
  for (int x : c) {
    if (x % 2 == 0)
      row.push_back(x / 2);
    else
      row.push_back(x / 2.0);
  }
  return row;
}

Json labels_json(const std::vector<std::string>& labels) {
  Json a = Json::array();
  for (const auto& l : labels) a.push_back(l);
  return a;
}

Json label_json(const OrbitLabel& l) {
  Json j;
  j["label"] = l.str();
  j["type"] = l.type.str();
  if (l.kind == OrbitLabel::Kind::Special) {
    j["charge"] = l.charge;
    j["parity"] = l.parity;
  }
  if (l.kind == OrbitLabel::Kind::DnTag) {
    j["tag"] = {l.delta2, l.delta3};
    if (l.side >= 0) j["side"] = l.side;
  }
  j["special"] = l.special();
  return j;
}

int cmd_roots(const RootSystem& s, const Sink& out) {
  Json j;
  j["schema"] = kSchema;
  j["type"] = s.name();
  j["count"] = s.size();
  j["simple"] = s.simple_basis();
  Json roots = Json::array();
  for (int r = 0; r < s.size(); ++r) roots.push_back(coords_json(s.coords(r)));
  j["roots"] = roots;
  out.write(dump(j));
  return 0;
}

int cmd_enhance(const RootSystem& s, bool dot, const Sink& out) {
  const EnhancedBasis b = enhanced_basis(s);
  if (dot) {
    out.write(to_dot(b.graph, b.labels, b.moset, s.name()));
    return 0;
  }
  Json j;
  j["schema"] = kSchema;
  j["type"] = s.name();
  Json nodes = Json::array();
  for (int v = 0; v < b.size(); ++v)
    nodes.push_back({{"label", b.labels[v]}, {"root", coords_json(s.coords(b.nodes[v]))},
                     {"bold", (b.moset & bit(v)) != 0}});
  j["nodes"] = nodes;
  Json edges = Json::array();
  for (int u = 0; u < b.size(); ++u)
    for (int v = u + 1; v < b.size(); ++v)
      if (b.graph.adjacent(u, v)) edges.push_back({b.labels[u], b.labels[v]});
  j["edges"] = edges;
  j["moset"] = labels_json(b.labels_of(b.moset));
  out.write(dump(j));
  return 0;
}

int cmd_moset(const RootSystem& s, const Sink& out) {
  const EnhancedBasis b = enhanced_basis(s);
  Json j;
  j["schema"] = kSchema;
  j["type"] = s.name();
  j["mu"] = mu(s);
  j["moset"] = labels_json(b.labels_of(b.moset));
  Json roots = Json::array();
  for (RootIndex r : b.roots_of(b.moset)) roots.push_back(coords_json(s.coords(r)));
  j["roots"] = roots;
  out.write(dump(j));
  return 0;
}

int cmd_coregroup(const RootSystem& s, const Sink& out) {
  Classifier c(s);
  const CoreGroupModel& m = c.core();
  Json j;
  j["schema"] = kSchema;
  j["type"] = s.name();
  j["order"] = m.order();
  j["members"] = labels_json(c.labels(m.moset));
  Json labels = Json::array();
  for (int i = 0; i < m.degree(); ++i) labels.push_back(m.labeling.label(i));
  j["labeling"] = labels;
  Json gens = Json::array();
  for (const Perm& g : m.generators) gens.push_back(cycle_string(g));
  j["generators"] = gens;
  out.write(dump(j));
  return 0;
}

int cmd_classify(const RootSystem& s, bool json, const Sink& out) {
  Classifier c(s);
  const auto& orbits = c.enumerate_pi_orbits();
  if (json) {
    Json rows = Json::array();
    for (const Orbit& o : orbits) {
      Json row = label_json(o.label);
      row["representative"] = labels_json(c.basis().labels_of(o.representative));
      rows.push_back(row);
    }
    out.write(dump({{"schema", kSchema}, {"type", s.name()}, {"orbits", rows}}));
    return 0;
  }
  std::ostringstream text;
  int special = 0;
  for (const Orbit& o : orbits) {
    special += o.label.special();
    std::string rep;
    for (const auto& l : c.basis().labels_of(o.representative)) rep += (rep.empty() ? "" : ",") + l;
    text << (o.label.special() ? "* " : "  ") << o.label.str() << "  {" << rep << "}\n";
  }
  text << orbits.size() << " orbits, " << special << " special\n";
  out.write(text.str());
  return 0;
}

int cmd_conjugate(const RootSystem& s, const std::string& l1, const std::string& l2, bool certificate,
                  bool json, const Sink& out) {
  Classifier c(s);
  const RootSet a = c.roots(split_labels(l1)), b = c.roots(split_labels(l2));
  const ConjugacyVerdict v = c.are_conjugate(a, b, certificate);
  std::string decision;
  if (v.conjugate) {
    decision = "conjugate";
  } else if (v.first.kind == OrbitLabel::Kind::Special && v.second.kind == OrbitLabel::Kind::Special &&
             v.first.type == v.second.type) {
    decision = "not conjugate (parity " + std::to_string(v.first.parity) + " vs " +
               std::to_string(v.second.parity) + ")";
  } else {
    decision = "not conjugate (" + v.first.str() + " vs " + v.second.str() + ")";
  }
  if (json) {
    Json j{{"schema", kSchema}, {"type", s.name()}, {"conjugate", v.conjugate}, {"decision", decision},
           {"mode", v.mode}, {"first", label_json(v.first)}, {"second", label_json(v.second)}};
    if (v.witness) j["witness"] = v.witness->reflections;
    out.write(dump(j));
    return 0;
  }
  std::ostringstream text;
  text << decision << "\nmode: " << v.mode << "\nlabels: " << v.first.str() << " / " << v.second.str() << "\n";
  if (v.witness) text << "witness: " << v.witness->reflections.size() << " reflections\n";
  out.write(text.str());
  return 0;
}

int cmd_embed(const RootSystem& s, const std::string& from, const std::string& to, bool json, const Sink& out) {
  Classifier c(s);
  const EmbeddingVerdict v = c.is_weyl_embedding(c.roots(split_labels(from)), c.roots(split_labels(to)));
  if (json) {
    Json j{{"schema", kSchema},
           {"type", s.name()},
           {"weyl", v.weyl},
           {"reason", v.reason},
           {"moset_part", labels_json(c.labels(v.moset_part))},
           {"source_in_moset", labels_json(c.labels(v.source_in_moset))},
           {"image_in_moset", labels_json(c.labels(v.image_in_moset))}};
    if (v.witness) j["witness"] = v.witness->reflections;
    out.write(dump(j));
    return 0;
  }
  out.write(v.weyl ? "Weyl\n" : "not Weyl (" + v.reason + ")\n");
  return 0;
}

int cmd_order(const RootSystem& s, bool special, bool json, const Sink& out) {
  Classifier c(s);
  const Hasse h = c.hasse_diagram(special);
  if (!json) {
    out.write(to_dot(h, s.name()));
    return 0;
  }
  Json nodes = Json::array(), edges = Json::array();
  for (const auto& l : h.nodes) nodes.push_back(l.str());
  for (auto [u, l] : h.edges) edges.push_back({h.nodes[u].str(), h.nodes[l].str()});
  out.write(dump({{"schema", kSchema}, {"type", s.name()}, {"nodes", nodes}, {"edges", edges}}));
  return 0;
}

int cmd_verify(const VerifyOptions& o, bool json, const Sink& out) {
  Json rows = Json::array();
  const auto results = run_acceptance(o, [&](const CriterionResult& r) {
    if (!json)
      std::cerr << (r.pass ? "PASS" : "FAIL") << " criterion " << r.id << ": " << r.title << " " << r.detail
                << "\n";
  });
  bool ok = true;
  std::ostringstream text;
  for (const auto& r : results) {
    ok = ok && r.pass;
    rows.push_back({{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}});
    text << (r.pass ? "PASS" : "FAIL") << " " << r.id << " " << r.title << "\n";
  }
  out.write(json ? dump({{"schema", kSchema}, {"criteria", rows}, {"pass", ok}}) : text.str());
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weyl orbits of Pi-systems in ADE root systems"};
  app.require_subcommand(1);
  std::vector<std::string> type;
  std::string output;
  bool json = false, dot = false, special = false, no_cert = false;
  std::string l1, l2, from, to;
  VerifyOptions vo;

  auto add_type = [&](CLI::App* sub) { sub->add_option("type", type, "Series and rank, e.g. E7 or E 7")->required(); };
  auto add_out = [&](CLI::App* sub) { sub->add_option("-o,--output", output, "Output file (default stdout)"); };

  auto* roots = app.add_subcommand("roots", "Root system as JSON");
  add_type(roots);
  add_out(roots);
  auto* enhance = app.add_subcommand("enhance", "Enhanced Dynkin diagram with the moset in bold");
  add_type(enhance);
  add_out(enhance);
  enhance->add_flag("--dot", dot, "Graphviz output instead of JSON");
  auto* moset = app.add_subcommand("moset", "Moset of the enhanced basis");
  add_type(moset);
  add_out(moset);
  auto* core = app.add_subcommand("coregroup", "Core group acting on the moset");
  add_type(core);
  add_out(core);
  auto* classify = app.add_subcommand("classify", "Table of W-orbits of Pi-systems");
  add_type(classify);
  add_out(classify);
  classify->add_flag("--json", json, "JSON orbit table");
  auto* conjugate = app.add_subcommand("conjugate", "Decide W-conjugacy of two Pi-systems");
  add_type(conjugate);
  add_out(conjugate);
  conjugate->add_option("--l1", l1, "Node labels, e.g. 2,4,5,l5")->required();
  conjugate->add_option("--l2", l2, "Node labels")->required();
  conjugate->add_flag("--no-certificate", no_cert, "Skip the witness search");
  conjugate->add_flag("--json", json, "JSON output");
  auto* embed = app.add_subcommand("embed", "Decide whether an embedding of a Pi-system comes from W");
  add_type(embed);
  add_out(embed);
  embed->add_option("--from", from, "Source node labels")->required();
  embed->add_option("--to", to, "Image node labels, same order")->required();
  embed->add_flag("--json", json, "JSON output");
  auto* order = app.add_subcommand("order", "Hasse diagram of the order between orbits");
  add_type(order);
  add_out(order);
  order->add_flag("--special", special, "Special orbits only");
  auto* fmt = order->add_flag("--json", json, "JSON instead of DOT");
  order->add_flag("--dot", dot, "DOT output (default)")->excludes(fmt);
  auto* verify = app.add_subcommand("verify", "Run the acceptance suite");
  add_out(verify);
  verify->add_flag("--slow", vo.slow, "Include the E7 brute-force stabilizer");
  verify->add_option("--cap", vo.cap, "Weyl group enumeration cap");
  verify->add_option("--seed", vo.seed, "Random seed");
  verify->add_option("--samples", vo.samples, "Random embeddings per system")->check(CLI::PositiveNumber);
  verify->add_flag("--json", json, "JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const Sink sink{output};
  try {
    if (*verify) return cmd_verify(vo, json, sink);
    const RootSystem s = system_of(type);
    if (*roots) return cmd_roots(s, sink);
    if (*enhance) return cmd_enhance(s, dot, sink);
    if (*moset) return cmd_moset(s, sink);
    if (*core) return cmd_coregroup(s, sink);
    if (*classify) return cmd_classify(s, json, sink);
    if (*conjugate) return cmd_conjugate(s, l1, l2, !no_cert, json, sink);
    if (*embed) return cmd_embed(s, from, to, json, sink);
    if (*order) return cmd_order(s, special, json, sink);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
