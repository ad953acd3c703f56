#include "arboreal/builder.hpp"

#include <algorithm>

#include "arboreal/error.hpp"
#include "digraph_edit.hpp"

namespace arboreal {

Network naive_representation(const UGraph& g) {
  if (!is_connected(g)) throw Error(ErrorCode::Disconnected, "the graph is not connected");
  if (g.edge_count() == 0) throw Error(ErrorCode::NoEdges, "the graph has no edges");
  detail::DigraphEdit edit(g.taxa());
  std::vector<VertexId> above(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) {
    above[x] = edit.add_vertex(g.taxa().name(x) + "_p");
    const VertexId leaf = edit.add_vertex(g.taxa().name(x));
    edit.at(leaf).taxon = x;
    edit.add_arc(above[x], leaf);
  }
  for (auto [a, b] : g.edges()) {
    const VertexId root = edit.add_vertex(g.taxa().name(a) + g.taxa().name(b));
    edit.add_arc(root, above[a]);
    edit.add_arc(root, above[b]);
  }
  edit.cleanup([&](VertexId v) { return edit.at(v).taxon.has_value(); });
  return edit.build(g.taxa()).net;
}

Network build_network_from_cover(const UGraph& g, const CliqueFamily& k) {
  if (!is_edge_clique_cover(g, k)) throw Error(ErrorCode::NotACover, "the family is not an edge clique cover");
  if (!is_connected(g)) throw Error(ErrorCode::Disconnected, "the graph is not connected");
  const CliqueFamily closure = intersection_closure(k);
  const CoverDigraph h = cover_digraph(closure);

  // Closure sets by decreasing size, then lexicographically.
  std::vector<std::size_t> order(closure.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return closure[a].size() > closure[b].size(); });

  detail::DigraphEdit edit(g.taxa());
  std::vector<VertexId> vertex_of(closure.size());
  for (std::size_t i : order) vertex_of[i] = edit.add_vertex(g.taxa().subset_string(closure[i]));
  for (const auto& arc : h.arcs) edit.add_arc(vertex_of[arc.parent], vertex_of[arc.child]);

  std::vector<VertexId> single(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) {
    const TaxonSubset sx = TaxonSubset::singleton(x);
    const std::size_t at = closure.index_of(sx);
    single[x] = at < closure.size() ? vertex_of[at] : edit.add_vertex(g.taxa().name(x));
  }
  for (std::size_t i = 0; i < closure.size(); ++i) {
    TaxonSubset below;
    for (std::size_t c : h.children(i)) below |= closure[c];
    for (std::size_t x : closure[i] - below) {
      if (closure[i] != TaxonSubset::singleton(x)) edit.add_arc(vertex_of[i], single[x]);
    }
  }
  for (std::size_t x = 0; x < g.order(); ++x) {
    const VertexId v = single[x];
    if (edit.at(v).parents.size() >= 2) {
      const VertexId leaf = edit.add_vertex(g.taxa().name(x));
      edit.add_arc(v, leaf);
      edit.at(leaf).taxon = x;
    } else {
      edit.at(v).taxon = x;
    }
  }
  Network net = edit.build(g.taxa()).net;

  if (!(shared_ancestry_graph(net) == g)) {
    throw Error(ErrorCode::ConstructionMismatch, "N(K) does not represent the graph");
  }
  std::vector<TaxonSubset> root_sets;
  for (VertexId r : net.roots()) {
    root_sets.push_back(net.cluster(r));
    if (!k.contains(net.cluster(r))) throw Error(ErrorCode::ConstructionMismatch, "a root of N(K) is not in K");
  }
  const bool roots_are_k = root_sets.size() == k.size();
  if (roots_are_k != k.is_antichain()) {
    throw Error(ErrorCode::ConstructionMismatch, "the roots of N(K) disagree with the antichain condition");
  }
  return net;
}

std::optional<Network> arboreal_representation(const UGraph& g) {
  if (!is_connected(g)) throw Error(ErrorCode::Disconnected, "the graph is not connected");
  if (!is_ptolemaic(g)) return std::nullopt;
  return build_network_from_cover(g, maximal_cliques(g));
}

Network contract_tree_arcs(const Network& n) {
  if (!is_arboreal(n)) throw Error(ErrorCode::NotArboreal, "contraction expects an arboreal network");
  auto edit = detail::DigraphEdit::from(n);
  const auto contractible = [&](VertexId v) {
    const auto& x = edit.at(v);
    return x.parents.size() <= 1 && !x.children.empty();
  };
  for (VertexId u : n.topological_order()) {
    if (!edit.alive(u)) continue;
    for (;;) {
      if (edit.at(u).children.size() < 2) break;
      const auto& kids = edit.at(u).children;
      auto it = std::find_if(kids.begin(), kids.end(), contractible);
      if (it == kids.end()) break;
      edit.contract(u, *it);
    }
  }
  Network out = edit.build(n.taxa()).net;
  if (!(shared_ancestry_graph(out) == shared_ancestry_graph(n)) || out.root_count() != n.root_count()) {
    throw Error(ErrorCode::ConstructionMismatch, "contraction changed the shared ancestry graph");
  }
  return out;
}

}  // namespace arboreal
