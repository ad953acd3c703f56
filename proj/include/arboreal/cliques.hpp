#pragma once

#include <cstddef>
#include <vector>

#include "arboreal/graph.hpp"
#include "arboreal/taxa.hpp"

namespace arboreal {

// A family of distinct non-empty subsets of a taxon set, kept in canonical
// order (size, then lexicographic).
class CliqueFamily {
 public:
  CliqueFamily() = default;
  CliqueFamily(TaxonSet over, std::vector<TaxonSubset> sets);

  const TaxonSet& over() const { return over_; }
  const std::vector<TaxonSubset>& sets() const { return sets_; }
  std::size_t size() const { return sets_.size(); }
  bool empty() const { return sets_.empty(); }
  const TaxonSubset& operator[](std::size_t i) const { return sets_[i]; }
  auto begin() const { return sets_.begin(); }
  auto end() const { return sets_.end(); }

  bool contains(TaxonSubset s) const;
  // Position of `s` in canonical order, or size() when absent.
  std::size_t index_of(TaxonSubset s) const;
  // No member is a proper subset of another.
  bool is_antichain() const;

  bool operator==(const CliqueFamily& o) const { return over_ == o.over_ && sets_ == o.sets_; }

 private:
  TaxonSet over_;
  std::vector<TaxonSubset> sets_;
};

struct CoverArc {
  std::size_t parent;  // index into nodes
  std::size_t child;
  bool operator==(const CoverArc&) const = default;
};

// Hasse digraph of strict containment: parent -> child when child is a
// maximal proper subset of parent within the family.
struct CoverDigraph {
  CliqueFamily nodes;
  std::vector<CoverArc> arcs;  // sorted by (parent, child)

  std::vector<std::size_t> children(std::size_t node) const;
  std::vector<std::size_t> parents(std::size_t node) const;
};

// All maximal cliques with at least two vertices.
CliqueFamily maximal_cliques(const UGraph& g);

bool is_edge_clique_cover(const UGraph& g, const CliqueFamily& k);

struct EdgeCliqueCover {
  std::size_t size;
  CliqueFamily cover;
};

inline constexpr std::size_t kEccEdgeCap = 24;

// Exact minimum edge clique cover. Throws NoEdges for an edgeless graph and
// TooLarge above kEccEdgeCap edges.
EdgeCliqueCover ecc_min(const UGraph& g);

CliqueFamily intersection_closure(const CliqueFamily& k);
CoverDigraph cover_digraph(const CliqueFamily& c);
// The underlying undirected graph of `h` is a forest.
bool underlying_acyclic(const CoverDigraph& h);

}  // namespace arboreal
