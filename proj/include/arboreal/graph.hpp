#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "arboreal/taxa.hpp"

namespace arboreal {

using Edge = std::pair<std::size_t, std::size_t>;

// Simple undirected graph whose vertex set is a TaxonSet. Vertices are taxon
// positions; adjacency is held as one TaxonSubset per vertex.
class UGraph {
 public:
  explicit UGraph(TaxonSet taxa);
  UGraph(TaxonSet taxa, const std::vector<Edge>& edges);

  static UGraph from_named_edges(TaxonSet taxa, const std::vector<std::pair<std::string, std::string>>& edges);
  static UGraph complete(TaxonSet taxa);

  const TaxonSet& taxa() const { return taxa_; }
  std::size_t order() const { return taxa_.size(); }
  std::size_t edge_count() const;

  bool adjacent(std::size_t a, std::size_t b) const { return adjacency_.at(a).contains(b); }
  TaxonSubset neighbors(std::size_t v) const { return adjacency_.at(v); }
  std::size_t degree(std::size_t v) const { return adjacency_.at(v).size(); }

  // Edges (a, b) with a < b, sorted.
  std::vector<Edge> edges() const;

  bool is_clique(TaxonSubset s) const;

  bool operator==(const UGraph& o) const { return taxa_ == o.taxa_ && adjacency_ == o.adjacency_; }

 private:
  void add_edge(std::size_t a, std::size_t b);

  TaxonSet taxa_;
  std::vector<TaxonSubset> adjacency_;
};

bool is_connected(const UGraph& g);
std::vector<TaxonSubset> connected_components(const UGraph& g);
// Component containing vertex `v`, restricted to the vertices of `within`.
TaxonSubset component_of(const UGraph& g, std::size_t v, TaxonSubset within);

// Lexicographic BFS visit order (first visited first).
std::vector<std::size_t> lex_bfs_order(const UGraph& g);
bool is_perfect_elimination_ordering(const UGraph& g, const std::vector<std::size_t>& order);
bool is_chordal(const UGraph& g);

// An induced cycle of length at least 4, in cyclic order.
std::optional<std::vector<std::size_t>> find_induced_hole(const UGraph& g);

// A 5-set inducing a gem, returned as the induced path u-y-z-v followed by
// the vertex adjacent to all four.
std::optional<std::array<std::size_t, 5>> contains_gem(const UGraph& g);
bool is_gem(const UGraph& g, const std::array<std::size_t, 5>& w);

bool is_ptolemaic(const UGraph& g);

struct PtolemaicObstruction {
  enum class Kind { Hole, Gem };
  Kind kind;
  std::vector<std::size_t> vertices;
};
std::optional<PtolemaicObstruction> find_ptolemaic_obstruction(const UGraph& g);
bool is_induced_hole(const UGraph& g, const std::vector<std::size_t>& cycle);

// Unweighted shortest-path distances; -1 marks unreachable pairs.
std::vector<std::vector<int>> shortest_path_distances(const UGraph& g);

// Ptolemy's inequality over all ordered 4-tuples of the shortest-path metric.
// Throws Error(DisconnectedGraph) for a disconnected graph.
bool ptolemy_inequality_holds(const UGraph& g);

// G[Y]; the result's taxon set is Y in the parent order.
UGraph induced_subgraph(const UGraph& g, TaxonSubset y);

}  // namespace arboreal
