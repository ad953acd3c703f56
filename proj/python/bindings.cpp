#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "arboreal/builder.hpp"
#include "arboreal/cliques.hpp"
#include "arboreal/error.hpp"
#include "arboreal/io.hpp"
#include "arboreal/network.hpp"
#include "arboreal/oracle.hpp"
#include "arboreal/symbolic.hpp"

namespace py = pybind11;
using namespace arboreal;

namespace {

using NamePairs = std::vector<std::pair<std::string, std::string>>;

std::vector<std::vector<std::string>> family_names(const CliqueFamily& k) {
  std::vector<std::vector<std::string>> out;
  for (auto s : k) out.push_back(k.over().subset_names(s));
  return out;
}

// None when the map is arboreal, else {"kind", "witness", "obstruction"?}.
py::object violation_dict(const SymbolicMap& d, const std::optional<Violation>& v) {
  if (!v) return py::none();
  py::dict out;
  out["kind"] = std::string(to_string(v->kind));
  py::list w;
  for (auto i : v->witness) w.append(d.taxa().name(i));
  out["witness"] = w;
  if (v->obstruction) out["obstruction"] = *v->obstruction == PtolemaicObstruction::Kind::Hole ? "hole" : "gem";
  return out;
}

GenParams params(std::uint64_t seed, std::size_t leaf_max, std::size_t root_max, std::size_t symbols, double bias) {
  GenParams p;
  p.seed = seed;
  p.leaf_max = leaf_max;
  p.root_max = root_max;
  p.symbol_count = symbols;
  p.hybrid_bias = bias;
  return p;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Arboreal networks, Ptolemaic graphs and symbolic maps";
  py::register_exception<Error>(m, "ArborealError");

  py::class_<UGraph>(m, "Graph")
      .def(py::init([](std::vector<std::string> taxa, const NamePairs& edges) {
             return UGraph::from_named_edges(TaxonSet(std::move(taxa)), edges);
           }),
           py::arg("taxa"), py::arg("edges"))
      .def_static("from_json", &io::graph_from_json)
      .def("to_json", &io::graph_to_json)
      .def("to_dot", &io::graph_to_dot)
      .def_property_readonly("taxa", [](const UGraph& g) { return g.taxa().names(); })
      .def_property_readonly("edges",
                             [](const UGraph& g) {
                               NamePairs out;
                               for (auto [a, b] : g.edges()) out.emplace_back(g.taxa().name(a), g.taxa().name(b));
                               return out;
                             })
      .def("__eq__", [](const UGraph& a, const UGraph& b) { return a == b; })
      .def("__repr__", [](const UGraph& g) {
        return "<Graph " + std::to_string(g.order()) + " taxa, " + std::to_string(g.edge_count()) + " edges>";
      });

  py::class_<Network>(m, "Network")
      .def_static("from_json", &io::network_from_json)
      .def("to_json", &io::network_to_json)
      .def("to_dot", &io::network_to_dot)
      .def_property_readonly("taxa", [](const Network& n) { return n.taxa().names(); })
      .def_property_readonly("vertex_count", &Network::vertex_count)
      .def_property_readonly("arcs",
                             [](const Network& n) {
                               std::vector<std::pair<VertexId, VertexId>> out;
                               for (const auto& a : n.arcs()) out.emplace_back(a.tail, a.head);
                               return out;
                             })
      .def_property_readonly("roots", &Network::roots)
      .def_property_readonly("hybrids", &Network::hybrids)
      .def("cluster", [](const Network& n, VertexId v) { return n.taxa().subset_names(n.cluster(v)); })
      .def("__eq__", [](const Network& a, const Network& b) { return a == b; })
      .def("__repr__", [](const Network& n) {
        return "<Network " + std::to_string(n.vertex_count()) + " vertices, " + std::to_string(n.root_count()) +
               " roots>";
      });

  py::class_<LabelledNetwork>(m, "LabelledNetwork")
      .def_static("from_json", &io::labelled_from_json)
      .def("to_json", &io::labelled_to_json)
      .def("to_dot", &io::labelled_to_dot)
      .def_property_readonly("network", &LabelledNetwork::net)
      .def_property_readonly("labels", &LabelledNetwork::labels)
      .def("__eq__", [](const LabelledNetwork& a, const LabelledNetwork& b) { return a == b; });

  py::class_<SymbolicMap>(m, "SymbolicMap")
      .def(py::init([](std::vector<std::string> taxa,
                       const std::vector<std::tuple<std::string, std::string, std::optional<std::string>>>& values) {
             return SymbolicMap::from_named(TaxonSet(std::move(taxa)), values);
           }),
           py::arg("taxa"), py::arg("values"), "values: (x, y, symbol or None) once per pair")
      .def_static("from_json", &io::map_from_json)
      .def_static("from_text", &io::map_from_text, "JSON or the triangular text format")
      .def("to_json", &io::map_to_json)
      .def("to_text", &io::map_to_triangular)
      .def_property_readonly("taxa", [](const SymbolicMap& d) { return d.taxa().names(); })
      .def_property_readonly("symbols", &SymbolicMap::symbols)
      .def("__call__", py::overload_cast<const std::string&, const std::string&>(&SymbolicMap::value, py::const_))
      .def("__eq__", [](const SymbolicMap& a, const SymbolicMap& b) { return a == b; });

  // graphs
  m.def("is_chordal", &is_chordal);
  m.def("is_ptolemaic", &is_ptolemaic);
  m.def("ptolemy_inequality_holds", &ptolemy_inequality_holds);
  m.def("ptolemaic_obstruction", [](const UGraph& g) -> py::object {
    const auto o = find_ptolemaic_obstruction(g);
    if (!o) return py::none();
    py::list names;
    for (auto v : o->vertices) names.append(g.taxa().name(v));
    return py::make_tuple(o->kind == PtolemaicObstruction::Kind::Hole ? "hole" : "gem", names);
  });
  m.def("maximal_cliques", [](const UGraph& g) { return family_names(maximal_cliques(g)); });
  m.def("ecc_min", [](const UGraph& g) {
    const auto e = ecc_min(g);
    return py::make_tuple(e.size, family_names(e.cover));
  });

  // networks
  m.def("is_arboreal", &is_arboreal);
  m.def("h_tilde", &h_tilde);
  m.def("has_alternating_cycle", [](const Network& n) { return find_alternating_cycle(n).has_value(); });
  m.def("shared_ancestry_graph", &shared_ancestry_graph);
  m.def("naive_representation", &naive_representation);
  m.def("arboreal_representation", &arboreal_representation);
  m.def("represent_with_cover", [](const UGraph& g, const std::vector<std::vector<std::string>>& cover) {
    std::vector<TaxonSubset> sets;
    for (const auto& s : cover) sets.push_back(g.taxa().subset_of(s));
    return build_network_from_cover(g, CliqueFamily(g.taxa(), sets));
  });

  // symbolic maps
  m.def("graph_of_map", &graph_of_map);
  m.def("check_arboreal_conditions",
        [](const SymbolicMap& d) { return violation_dict(d, check_arboreal_conditions(d)); });
  m.def("explain", [](const SymbolicMap& d) -> py::object {
    auto out = explain(d);
    if (auto* ln = std::get_if<LabelledNetwork>(&out)) return py::cast(std::move(*ln));
    return violation_dict(d, std::get<Violation>(out));
  }, "A LabelledNetwork, or a violation dict when the map is not arboreal");
  m.def("evaluate_map", &evaluate_map);
  m.def("make_discriminating", &make_discriminating);
  m.def("is_discriminating", &is_discriminating);
  m.def("are_isomorphic", &are_isomorphic);
  m.def("strong_clique_modules", [](const SymbolicMap& d) { return family_names(strong_clique_modules(d)); });
  m.def("clique_modules", [](const SymbolicMap& d) { return family_names(clique_modules(d)); });

  // generators
  m.def("random_arboreal_network",
        [](std::uint64_t seed, std::size_t leaf_max, std::size_t root_max) {
          return random_arboreal_network(params(seed, leaf_max, root_max, 2, 0));
        },
        py::arg("seed"), py::arg("leaf_max") = 8, py::arg("root_max") = 3);
  m.def("random_labelled_network",
        [](std::uint64_t seed, std::size_t leaf_max, std::size_t root_max, std::size_t symbols) {
          return random_labelled_arboreal_network(params(seed, leaf_max, root_max, symbols, 0));
        },
        py::arg("seed"), py::arg("leaf_max") = 8, py::arg("root_max") = 3, py::arg("symbols") = 2);
  m.def("random_network",
        [](std::uint64_t seed, std::size_t leaf_max, std::size_t root_max, double bias) {
          return random_network(params(seed, leaf_max, root_max, 2, bias));
        },
        py::arg("seed"), py::arg("leaf_max") = 8, py::arg("root_max") = 3, py::arg("hybrid_bias") = 0.5);
}
