#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arboreal/graph.hpp"
#include "arboreal/taxa.hpp"

namespace arboreal {

using VertexId = std::size_t;

struct Arc {
  VertexId tail;
  VertexId head;
  auto operator<=>(const Arc&) const = default;
};

// A validated multi-rooted network: connected, acyclic, roots of outdegree
// at least 2, leaves of indegree 1, no vertex of in- and outdegree 1, and the
// leaves in bijection with a taxon set of size at least 2.
class Network {
 public:
  // Checks run in a fixed order and the first failure is thrown:
  // MalformedArc, Cyclic, Disconnected, RootOutdegLt2, LeafIndegNe1,
  // Indeg1Outdeg1Vertex, LeafSetMismatch. Without `taxa`, the taxon order is
  // the order of the leaf vertex ids.
  static Network validate(std::size_t vertex_count, std::vector<Arc> arcs,
                          const std::map<VertexId, std::string>& leaf_names,
                          std::optional<TaxonSet> taxa = std::nullopt);

  const TaxonSet& taxa() const { return taxa_; }
  std::size_t vertex_count() const { return children_.size(); }
  const std::vector<Arc>& arcs() const { return arcs_; }  // sorted

  const std::vector<VertexId>& children(VertexId v) const;
  const std::vector<VertexId>& parents(VertexId v) const;
  std::size_t indegree(VertexId v) const { return parents(v).size(); }
  std::size_t outdegree(VertexId v) const { return children(v).size(); }

  bool is_root(VertexId v) const { return indegree(v) == 0; }
  bool is_leaf(VertexId v) const { return outdegree(v) == 0; }
  bool is_hybrid(VertexId v) const { return indegree(v) >= 2; }
  bool is_tree_vertex(VertexId v) const { return indegree(v) <= 1; }

  std::vector<VertexId> roots() const;
  std::vector<VertexId> hybrids() const;
  std::size_t root_count() const { return roots().size(); }

  VertexId leaf_of(std::size_t taxon) const { return leaf_of_.at(taxon); }
  std::optional<std::size_t> taxon_of(VertexId v) const;

  // C(v). Throws UnknownVertex.
  TaxonSubset cluster(VertexId v) const;
  // Parents before children; ties by id.
  const std::vector<VertexId>& topological_order() const { return topo_; }
  // Ancestor flags of `v`, including `v` itself.
  std::vector<bool> ancestors(VertexId v) const;

  // Optional display names (e.g. subset strings); empty when unnamed.
  const std::string& name(VertexId v) const;
  bool has_names() const { return !names_.empty(); }
  Network with_names(std::vector<std::string> names) const;

  // Structural equality; display names are ignored.
  bool operator==(const Network& o) const {
    return taxa_ == o.taxa_ && arcs_ == o.arcs_ && leaf_of_ == o.leaf_of_ && vertex_count() == o.vertex_count();
  }

 private:
  Network() = default;

  TaxonSet taxa_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<VertexId>> children_;
  std::vector<std::vector<VertexId>> parents_;
  std::vector<VertexId> leaf_of_;
  std::vector<std::optional<std::size_t>> taxon_of_;
  std::vector<TaxonSubset> clusters_;
  std::vector<VertexId> topo_;
  std::vector<std::string> names_;
};

// Leaf names keyed by vertex, as accepted by Network::validate.
std::map<VertexId, std::string> leaf_names(const Network& n);

// Sum over hybrids of (indegree - 1).
std::size_t h_tilde(const Network& n);
// The underlying undirected graph is a tree.
bool is_arboreal(const Network& n);

// v_1, h_1, ..., v_k, h_k with directed paths left_paths[i] from v_i to h_i
// and right_paths[i] from v_{i+1} to h_i (v_{k+1} = v_1). Paths include both
// endpoints.
struct AlternatingCycle {
  std::vector<VertexId> sources;
  std::vector<VertexId> hybrids;
  std::vector<std::vector<VertexId>> left_paths;
  std::vector<std::vector<VertexId>> right_paths;

  std::size_t k() const { return hybrids.size(); }
};

// Recovered from a cycle of the underlying graph; none iff arboreal.
std::optional<AlternatingCycle> find_alternating_cycle(const Network& n);
// Checks the witness against `n`. The paths must together form a simple
// cycle of the underlying graph.
bool is_alternating_cycle(const Network& n, const AlternatingCycle& c);

// Taxa joined when they share an ancestor.
UGraph shared_ancestry_graph(const Network& n);

// Unique least common ancestor; none when x and y share no ancestor.
// Throws NotArboreal and UnknownTaxon.
std::optional<VertexId> lca(const Network& n, std::size_t x, std::size_t y);
std::optional<VertexId> lca(const Network& n, const std::string& x, const std::string& y);

// Restriction to the taxa of `y`. Throws SubsetTooSmall when |Y| < 2, and the
// validation error when the result is not a network.
Network restrict(const Network& n, TaxonSubset y);

// N - r; none when the result is not a network. Throws NotARoot and
// SingleRooted.
std::optional<Network> remove_root(const Network& n, VertexId r);

}  // namespace arboreal
