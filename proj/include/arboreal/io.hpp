#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "arboreal/cliques.hpp"
#include "arboreal/graph.hpp"
#include "arboreal/network.hpp"
#include "arboreal/symbolic.hpp"

// Text formats. Every reader throws Error(InputParse) with a line and column
// for syntax errors and a description for structural ones.
namespace arboreal::io {

// {"taxa": [...], "edges": [["a","b"], ...]}
std::string graph_to_json(const UGraph& g);
UGraph graph_from_json(std::string_view text);

// [["a","b"], ...] in canonical order; the taxon set is supplied when reading.
std::string family_to_json(const CliqueFamily& k);
CliqueFamily family_from_json(std::string_view text, const TaxonSet& over);

// {"vertices": n, "arcs": [[u,v], ...], "leaves": {"id": "taxon"}, "taxa": [...]}
// "taxa" fixes the taxon order and may be omitted; "names" is optional.
std::string network_to_json(const Network& n);
Network network_from_json(std::string_view text);

// Network JSON plus "labels": {"id": "symbol"}.
std::string labelled_to_json(const LabelledNetwork& ln);
LabelledNetwork labelled_from_json(std::string_view text);

// {"taxa": [...], "symbols": [...], "values": [["x","y","a"], ...]}, with
// null for the non-symbol.
std::string map_to_json(const SymbolicMap& d);
SymbolicMap map_from_json(std::string_view text);

// One row per taxon: its name, then its values against every earlier taxon.
// "-" is the non-symbol and "#" starts a comment.
std::string map_to_triangular(const SymbolicMap& d);
SymbolicMap map_from_triangular(std::string_view text);
// JSON when the first non-blank character is '{', triangular otherwise.
SymbolicMap map_from_text(std::string_view text);

std::string violation_to_json(const SymbolicMap& d, const Violation& v);

// Leaves are boxes and hybrids diamonds; output order is by vertex id.
std::string network_to_dot(const Network& n);
std::string labelled_to_dot(const LabelledNetwork& ln);
std::string graph_to_dot(const UGraph& g);
// Nodes are labelled by concatenated taxon names.
std::string cover_digraph_to_dot(const CoverDigraph& h);

enum class DocumentKind { Graph, Network, LabelledNetwork, SymbolicMap };
// Classifies a JSON document by its keys; triangular text is a map.
DocumentKind detect_kind(std::string_view text);

}  // namespace arboreal::io
