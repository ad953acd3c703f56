#pragma once

#include <optional>

#include "arboreal/cliques.hpp"
#include "arboreal/graph.hpp"
#include "arboreal/network.hpp"

namespace arboreal {

// One root per edge of `g` above the two endpoint leaves. Throws
// Disconnected and NoEdges.
Network naive_representation(const UGraph& g);

// N(K): the cover digraph of the intersection closure of K with leaves
// attached. Vertex names are the subset strings of the closure sets.
// Throws NotACover and Disconnected.
Network build_network_from_cover(const UGraph& g, const CliqueFamily& k);

// N(K(G)) when g is Ptolemaic, otherwise none. Throws Disconnected.
std::optional<Network> arboreal_representation(const UGraph& g);

// Contracts arcs (u, v) where u has outdegree at least 2 and v is a non-leaf
// tree-vertex, until none remain. Throws NotArboreal.
Network contract_tree_arcs(const Network& n);

}  // namespace arboreal
