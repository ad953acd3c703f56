#include "arboreal/cliques.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "arboreal/error.hpp"

namespace arboreal {

CliqueFamily::CliqueFamily(TaxonSet over, std::vector<TaxonSubset> sets)
    : over_(std::move(over)), sets_(std::move(sets)) {
  for (auto s : sets_) {
    if (s.empty()) throw Error(ErrorCode::EmptySubset, "clique family members must be non-empty");
    if (!s.is_subset_of(over_.all())) throw Error(ErrorCode::UnknownTaxon, "set is not contained in the taxon set");
  }
  std::sort(sets_.begin(), sets_.end(), CanonicalLess{});
  if (std::adjacent_find(sets_.begin(), sets_.end()) != sets_.end()) {
    throw Error(ErrorCode::InvalidArgument, "duplicate set in clique family");
  }
}

std::size_t CliqueFamily::index_of(TaxonSubset s) const {
  auto it = std::lower_bound(sets_.begin(), sets_.end(), s, CanonicalLess{});
  if (it == sets_.end() || *it != s) return sets_.size();
  return static_cast<std::size_t>(it - sets_.begin());
}

bool CliqueFamily::contains(TaxonSubset s) const { return index_of(s) != sets_.size(); }

bool CliqueFamily::is_antichain() const {
  for (auto a : sets_)
    for (auto b : sets_)
      if (a.is_proper_subset_of(b)) return false;
  return true;
}

std::vector<std::size_t> CoverDigraph::children(std::size_t node) const {
  std::vector<std::size_t> out;
  for (const auto& a : arcs)
    if (a.parent == node) out.push_back(a.child);
  return out;
}

std::vector<std::size_t> CoverDigraph::parents(std::size_t node) const {
  std::vector<std::size_t> out;
  for (const auto& a : arcs)
    if (a.child == node) out.push_back(a.parent);
  return out;
}

namespace {

void bron_kerbosch(const UGraph& g, TaxonSubset r, TaxonSubset p, TaxonSubset x, std::vector<TaxonSubset>& out) {
  if (p.empty() && x.empty()) {
    if (r.size() >= 2) out.push_back(r);
    return;
  }
  // Pivot on the vertex of P ∪ X with the most neighbours in P.
  std::size_t pivot = (p | x).lowest();
  std::size_t best = 0;
  for (std::size_t u : p | x) {
    const std::size_t c = (g.neighbors(u) & p).size();
    if (c > best) {
      best = c;
      pivot = u;
    }
  }
  for (std::size_t v : p - g.neighbors(pivot)) {
    bron_kerbosch(g, r.with(v), p & g.neighbors(v), x & g.neighbors(v), out);
    p = p.without(v);
    x = x.with(v);
  }
}

}  // namespace

CliqueFamily maximal_cliques(const UGraph& g) {
  std::vector<TaxonSubset> out;
  bron_kerbosch(g, TaxonSubset{}, g.taxa().all(), TaxonSubset{}, out);
  return CliqueFamily(g.taxa(), std::move(out));
}

bool is_edge_clique_cover(const UGraph& g, const CliqueFamily& k) {
  if (!(k.over() == g.taxa())) return false;
  for (auto s : k) {
    if (s.size() < 2 || !g.is_clique(s)) return false;
  }
  for (auto [a, b] : g.edges()) {
    const TaxonSubset e = TaxonSubset::singleton(a).with(b);
    if (std::none_of(k.begin(), k.end(), [&](TaxonSubset s) { return e.is_subset_of(s); })) return false;
  }
  return true;
}

namespace {

struct CoverSearch {
  std::vector<TaxonSubset> edges;
  std::vector<TaxonSubset> cliques;
  std::size_t max_clique_edges = 1;
  std::vector<std::size_t> chosen;
  std::vector<std::size_t> best;

  void run(std::vector<bool>& covered, std::size_t uncovered) {
    if (uncovered == 0) {
      if (chosen.size() < best.size()) best = chosen;
      return;
    }
    const std::size_t bound = (uncovered + max_clique_edges - 1) / max_clique_edges;
    if (chosen.size() + bound >= best.size()) return;
    std::size_t first = 0;
    while (covered[first]) ++first;
    for (std::size_t c = 0; c < cliques.size(); ++c) {
      if (!edges[first].is_subset_of(cliques[c])) continue;
      std::vector<std::size_t> newly;
      for (std::size_t e = first; e < edges.size(); ++e) {
        if (!covered[e] && edges[e].is_subset_of(cliques[c])) {
          covered[e] = true;
          newly.push_back(e);
        }
      }
      chosen.push_back(c);
      run(covered, uncovered - newly.size());
      chosen.pop_back();
      for (std::size_t e : newly) covered[e] = false;
    }
  }
};

}  // namespace

EdgeCliqueCover ecc_min(const UGraph& g) {
  const std::size_t m = g.edge_count();
  if (m == 0) throw Error(ErrorCode::NoEdges, "edge clique cover of an edgeless graph");
  if (m > kEccEdgeCap) {
    throw Error(ErrorCode::TooLarge, std::to_string(m) + " edges exceed the exact-search cap of " +
                                         std::to_string(kEccEdgeCap));
  }
  const CliqueFamily k = maximal_cliques(g);
  CoverSearch search;
  for (auto [a, b] : g.edges()) search.edges.push_back(TaxonSubset::singleton(a).with(b));
  search.cliques = k.sets();
  for (auto c : k) search.max_clique_edges = std::max(search.max_clique_edges, c.size() * (c.size() - 1) / 2);
  search.best.resize(k.size());
  std::iota(search.best.begin(), search.best.end(), std::size_t{0});
  std::vector<bool> covered(search.edges.size(), false);
  search.run(covered, search.edges.size());
  std::vector<TaxonSubset> witness;
  for (std::size_t c : search.best) witness.push_back(search.cliques[c]);
  return {witness.size(), CliqueFamily(g.taxa(), std::move(witness))};
}

CliqueFamily intersection_closure(const CliqueFamily& k) {
  if (k.empty()) throw Error(ErrorCode::InvalidArgument, "intersection closure of an empty family");
  std::set<TaxonSubset, CanonicalLess> closed(k.begin(), k.end());
  std::vector<TaxonSubset> frontier(k.begin(), k.end());
  while (!frontier.empty()) {
    std::vector<TaxonSubset> next;
    const std::vector<TaxonSubset> snapshot(closed.begin(), closed.end());
    for (auto a : frontier) {
      for (auto b : snapshot) {
        const TaxonSubset c = a & b;
        if (!c.empty() && closed.insert(c).second) next.push_back(c);
      }
    }
    frontier = std::move(next);
  }
  return CliqueFamily(k.over(), {closed.begin(), closed.end()});
}

CoverDigraph cover_digraph(const CliqueFamily& c) {
  CoverDigraph h{c, {}};
  const auto& s = c.sets();
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b = 0; b < s.size(); ++b) {
      if (!s[b].is_proper_subset_of(s[a])) continue;
      bool between = false;
      for (std::size_t m = 0; m < s.size() && !between; ++m) {
        between = s[b].is_proper_subset_of(s[m]) && s[m].is_proper_subset_of(s[a]);
      }
      if (!between) h.arcs.push_back({a, b});
    }
  }
  return h;
}

bool underlying_acyclic(const CoverDigraph& h) {
  std::vector<std::size_t> parent(h.nodes.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& arc : h.arcs) {
    const std::size_t a = find(arc.parent);
    const std::size_t b = find(arc.child);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

}  // namespace arboreal
