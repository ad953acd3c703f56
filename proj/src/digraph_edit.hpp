#pragma once

// Mutable digraph used while building or rewriting networks. Vertices are
// never renumbered until build(); removed vertices stay as dead slots.

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "arboreal/network.hpp"

namespace arboreal::detail {

class DigraphEdit {
 public:
  struct Vertex {
    bool alive = true;
    std::set<VertexId> children;
    std::set<VertexId> parents;
    std::optional<std::size_t> taxon;
    std::string name;
    std::optional<std::string> label;
  };

  DigraphEdit() = default;
  explicit DigraphEdit(TaxonSet taxa) : taxa_(std::move(taxa)) {}
  static DigraphEdit from(const Network& n);

  const TaxonSet& taxa() const { return taxa_; }
  std::size_t slots() const { return v_.size(); }
  Vertex& at(VertexId x) { return v_.at(x); }
  const Vertex& at(VertexId x) const { return v_.at(x); }
  bool alive(VertexId x) const { return v_.at(x).alive; }

  VertexId add_vertex(std::string name = {});
  void add_arc(VertexId a, VertexId b);
  void remove_arc(VertexId a, VertexId b);
  void remove_vertex(VertexId x);
  // x has one parent p and one child c: replaced by p -> c. An existing
  // p -> c arc absorbs the new one.
  void suppress(VertexId x);
  // Merge child w into its parent u: u adopts w's children, w disappears.
  void contract(VertexId u, VertexId w);

  // Removes outdegree-0 vertices not accepted by `keep`, indegree-0
  // outdegree-1 vertices, and suppresses indegree-1 outdegree-1 vertices,
  // until none remain.
  void cleanup(const std::function<bool(VertexId)>& keep);

  struct Built {
    Network net;
    std::vector<std::optional<VertexId>> new_id;  // old slot -> compact id
  };
  // Compacts live vertices in slot order. Outdegree-0 vertices must carry a
  // taxon. Validation errors propagate.
  Built build(std::optional<TaxonSet> taxa = std::nullopt) const;

 private:
  TaxonSet taxa_;
  std::vector<Vertex> v_;
};

}  // namespace arboreal::detail
