#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rootforge/classify.hpp"
#include "rootforge/moset.hpp"
#include "rootforge/verify.hpp"

namespace py = pybind11;
using namespace rootforge;

namespace {

RootSystem build(const std::string& type) { return RootSystem::build(CartanType::parse(type)); }

std::vector<double> coords(const RootSystem& s, RootIndex r) {
  std::vector<double> out;
  for (int x : s.coords(r)) out.push_back(x / 2.0);
  return out;
}

py::dict label_dict(const OrbitLabel& l) {
  py::dict d;
  d["label"] = l.str();
  d["type"] = l.type.str();
  d["special"] = l.special();
  if (l.kind == OrbitLabel::Kind::Special) {
    d["charge"] = l.charge;
    d["parity"] = l.parity;
  }
  if (l.kind == OrbitLabel::Kind::DnTag) {
    d["tag"] = py::make_tuple(l.delta2, l.delta3);
    if (l.side >= 0) d["side"] = l.side;
  }
  return d;
}

// Keeps the root system alive next to the classifier that copies it.
struct PyClassifier {
  explicit PyClassifier(const std::string& type) : c(build(type)) {}
  Classifier c;

  RootSet roots(const std::vector<std::string>& labels) const {
    std::vector<std::string> canon;
    for (const auto& l : labels) canon.push_back(canonical_label(l));
    return c.roots(canon);
  }
};

}  // namespace

PYBIND11_MODULE(rootforge, m) {
  m.doc() = "Weyl orbits of Pi-systems in ADE root systems";

  static py::exception<Error> error(m, "RootforgeError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  py::class_<RootSystem>(m, "RootSystem")
      .def(py::init(&build), py::arg("type"))
      .def_property_readonly("name", &RootSystem::name)
      .def_property_readonly("rank", &RootSystem::rank)
      .def("__len__", &RootSystem::size)
      .def("coords", &coords, py::arg("root"))
      .def("pairing", &RootSystem::pairing)
      .def("reflect", &RootSystem::reflect, py::arg("mirror"), py::arg("root"))
      .def("negate", &RootSystem::negate)
      .def_property_readonly("simple_basis", &RootSystem::simple_basis)
      .def("__repr__", [](const RootSystem& s) { return "RootSystem('" + s.name() + "')"; });

  m.def("mu", [](const std::string& t) { return mu(build(t)); }, py::arg("type"));
  m.def(
      "core_order", [](const std::string& t) { return core_group_model(build(t)).order(); }, py::arg("type"));
  m.def(
      "enhanced_basis",
      [](const std::string& t) {
        const RootSystem s = build(t);
        const EnhancedBasis b = enhanced_basis(s);
        py::list edges;
        for (int u = 0; u < b.size(); ++u)
          for (int v = u + 1; v < b.size(); ++v)
            if (b.graph.adjacent(u, v)) edges.append(py::make_tuple(b.labels[u], b.labels[v]));
        py::dict d;
        d["labels"] = b.labels;
        d["moset"] = b.labels_of(b.moset);
        d["edges"] = edges;
        return d;
      },
      py::arg("type"));

  py::class_<PyClassifier>(m, "Classifier")
      .def(py::init<const std::string&>(), py::arg("type"))
      .def_property_readonly("system", [](const PyClassifier& p) { return p.c.system(); })
      .def("roots", &PyClassifier::roots, py::arg("labels"))
      .def(
          "orbit_label", [](PyClassifier& p, const std::vector<std::string>& l) { return label_dict(p.c.orbit_label(p.roots(l))); },
          py::arg("labels"))
      .def(
          "are_conjugate",
          [](PyClassifier& p, const std::vector<std::string>& a, const std::vector<std::string>& b, bool certificate) {
            const ConjugacyVerdict v = p.c.are_conjugate(p.roots(a), p.roots(b), certificate);
            py::dict d;
            d["conjugate"] = v.conjugate;
            d["mode"] = v.mode;
            d["first"] = label_dict(v.first);
            d["second"] = label_dict(v.second);
            d["witness"] = v.witness ? py::cast(v.witness->reflections) : py::none();
            return d;
          },
          py::arg("first"), py::arg("second"), py::arg("certificate") = true)
      .def(
          "is_weyl_embedding",
          [](PyClassifier& p, const std::vector<std::string>& from, const std::vector<std::string>& to) {
            const EmbeddingVerdict v = p.c.is_weyl_embedding(p.roots(from), p.roots(to));
            py::dict d;
            d["weyl"] = v.weyl;
            d["reason"] = v.reason;
            d["source_in_moset"] = p.c.labels(v.source_in_moset);
            d["image_in_moset"] = p.c.labels(v.image_in_moset);
            d["witness"] = v.witness ? py::cast(v.witness->reflections) : py::none();
            return d;
          },
          py::arg("source"), py::arg("image"))
      .def("orbits",
           [](PyClassifier& p) {
             py::list out;
             for (const Orbit& o : p.c.enumerate_pi_orbits()) {
               py::dict d = label_dict(o.label);
               d["representative"] = p.c.basis().labels_of(o.representative);
               out.append(d);
             }
             return out;
           })
      .def(
          "precedes",
          [](PyClassifier& p, const std::string& lower, const std::string& upper) {
            const Series s = p.c.system().series();
            return p.c.precedes(OrbitLabel::parse(lower, s), OrbitLabel::parse(upper, s));
          },
          py::arg("lower"), py::arg("upper"))
      .def(
          "hasse",
          [](PyClassifier& p, bool special) {
            const Hasse h = p.c.hasse_diagram(special);
            std::vector<std::string> nodes;
            for (const auto& l : h.nodes) nodes.push_back(l.str());
            std::vector<std::pair<std::string, std::string>> edges;
            for (auto [u, l] : h.edges) edges.emplace_back(nodes[u], nodes[l]);
            return py::make_tuple(nodes, edges);
          },
          py::arg("special_only") = false)
      .def(
          "hasse_dot", [](PyClassifier& p, bool special) { return to_dot(p.c.hasse_diagram(special), p.c.system().name()); },
          py::arg("special_only") = false);

  m.def(
      "verify",
      [](bool slow, int samples, unsigned seed) {
        VerifyOptions o;
        o.slow = slow;
        o.samples = samples;
        o.seed = seed;
        py::list out;
        for (const auto& r : run_acceptance(o)) {
          py::dict d;
          d["id"] = r.id;
          d["title"] = r.title;
          d["pass"] = r.pass;
          d["detail"] = r.detail;
          out.append(d);
        }
        return out;
      },
      py::arg("slow") = false, py::arg("samples") = 1000, py::arg("seed") = 1);
}
