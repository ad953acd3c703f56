#include "arboreal/graph.hpp"

#include <algorithm>
#include <deque>

#include "arboreal/error.hpp"

namespace arboreal {

UGraph::UGraph(TaxonSet taxa) : taxa_(std::move(taxa)), adjacency_(taxa_.size()) {}

UGraph::UGraph(TaxonSet taxa, const std::vector<Edge>& edges) : UGraph(std::move(taxa)) {
  for (auto [a, b] : edges) add_edge(a, b);
}

UGraph UGraph::from_named_edges(TaxonSet taxa, const std::vector<std::pair<std::string, std::string>>& edges) {
  UGraph g(std::move(taxa));
  for (const auto& [a, b] : edges) g.add_edge(g.taxa_.index_of(a), g.taxa_.index_of(b));
  return g;
}

UGraph UGraph::complete(TaxonSet taxa) {
  UGraph g(std::move(taxa));
  for (std::size_t v = 0; v < g.order(); ++v) g.adjacency_[v] = g.taxa_.all().without(v);
  return g;
}

void UGraph::add_edge(std::size_t a, std::size_t b) {
  if (a >= order() || b >= order()) throw Error(ErrorCode::UnknownTaxon, "edge endpoint out of range");
  if (a == b) throw Error(ErrorCode::InvalidArgument, "loops are not allowed");
  adjacency_[a] = adjacency_[a].with(b);
  adjacency_[b] = adjacency_[b].with(a);
}

std::size_t UGraph::edge_count() const {
  std::size_t twice = 0;
  for (auto n : adjacency_) twice += n.size();
  return twice / 2;
}

std::vector<Edge> UGraph::edges() const {
  std::vector<Edge> out;
  for (std::size_t a = 0; a < order(); ++a) {
    for (std::size_t b : adjacency_[a]) {
      if (a < b) out.emplace_back(a, b);
    }
  }
  return out;
}

bool UGraph::is_clique(TaxonSubset s) const {
  for (std::size_t v : s) {
    if (!s.without(v).is_subset_of(adjacency_[v])) return false;
  }
  return true;
}

TaxonSubset component_of(const UGraph& g, std::size_t v, TaxonSubset within) {
  TaxonSubset seen = TaxonSubset::singleton(v);
  TaxonSubset frontier = seen;
  while (!frontier.empty()) {
    TaxonSubset next;
    for (std::size_t u : frontier) next |= g.neighbors(u);
    next = (next & within) - seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

bool is_connected(const UGraph& g) {
  if (g.order() == 0) return true;
  return component_of(g, 0, g.taxa().all()) == g.taxa().all();
}

std::vector<TaxonSubset> connected_components(const UGraph& g) {
  std::vector<TaxonSubset> out;
  TaxonSubset rest = g.taxa().all();
  while (!rest.empty()) {
    TaxonSubset c = component_of(g, rest.lowest(), rest);
    out.push_back(c);
    rest = rest - c;
  }
  return out;
}

std::vector<std::size_t> lex_bfs_order(const UGraph& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<std::size_t>> label(n);
  std::vector<bool> visited(n, false);
  std::vector<std::size_t> order;
  order.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (visited[v]) continue;
      if (best == n || label[v] > label[best]) best = v;
    }
    visited[best] = true;
    order.push_back(best);
    for (std::size_t w : g.neighbors(best)) {
      if (!visited[w]) label[w].push_back(n - step);
    }
  }
  return order;
}

bool is_perfect_elimination_ordering(const UGraph& g, const std::vector<std::size_t>& order) {
  TaxonSubset later = g.taxa().all();
  for (std::size_t v : order) {
    later = later.without(v);
    if (!g.is_clique(g.neighbors(v) & later)) return false;
  }
  return true;
}

bool is_chordal(const UGraph& g) {
  auto order = lex_bfs_order(g);
  std::reverse(order.begin(), order.end());
  return is_perfect_elimination_ordering(g, order);
}

namespace {

// Shortest path from a to b using only vertices of `allowed`.
std::optional<std::vector<std::size_t>> shortest_path_within(const UGraph& g, std::size_t a, std::size_t b,
                                                             TaxonSubset allowed) {
  std::vector<std::size_t> parent(g.order(), g.order());
  std::deque<std::size_t> queue{a};
  TaxonSubset seen = TaxonSubset::singleton(a);
  while (!queue.empty()) {
    std::size_t u = queue.front();
    queue.pop_front();
    if (u == b) {
      std::vector<std::size_t> path;
      for (std::size_t w = b; w != a; w = parent[w]) path.push_back(w);
      path.push_back(a);
      std::reverse(path.begin(), path.end());
      return path;
    }
    for (std::size_t w : (g.neighbors(u) & allowed) - seen) {
      seen = seen.with(w);
      parent[w] = u;
      queue.push_back(w);
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<std::size_t>> find_induced_hole(const UGraph& g) {
  std::optional<std::vector<std::size_t>> best;
  for (std::size_t v = 0; v < g.order(); ++v) {
    const TaxonSubset nv = g.neighbors(v);
    for (std::size_t a : nv) {
      for (std::size_t b : nv) {
        if (b <= a || g.adjacent(a, b)) continue;
        const TaxonSubset allowed = ((g.taxa().all() - nv).without(v)).with(a).with(b);
        auto path = shortest_path_within(g, a, b, allowed);
        if (!path) continue;
        std::vector<std::size_t> cycle{v};
        cycle.insert(cycle.end(), path->begin(), path->end());
        if (!best || cycle.size() < best->size()) best = std::move(cycle);
      }
    }
  }
  return best;
}

bool is_induced_hole(const UGraph& g, const std::vector<std::size_t>& cycle) {
  const std::size_t k = cycle.size();
  if (k < 4) return false;
  TaxonSubset members;
  for (std::size_t v : cycle) {
    if (v >= g.order() || members.contains(v)) return false;
    members = members.with(v);
  }
  for (std::size_t i = 0; i < k; ++i) {
    TaxonSubset expected = TaxonSubset::singleton(cycle[(i + 1) % k]).with(cycle[(i + k - 1) % k]);
    if ((g.neighbors(cycle[i]) & members) != expected) return false;
  }
  return true;
}

bool is_gem(const UGraph& g, const std::array<std::size_t, 5>& w) {
  const auto [u, y, z, v, x] = w;
  TaxonSubset members;
  for (std::size_t a : w) {
    if (a >= g.order() || members.contains(a)) return false;
    members = members.with(a);
  }
  auto nb = [&](std::size_t a) { return g.neighbors(a) & members; };
  const auto s = [](std::initializer_list<std::size_t> l) {
    TaxonSubset t;
    for (auto e : l) t = t.with(e);
    return t;
  };
  return nb(x) == members.without(x) && nb(u) == s({y, x}) && nb(y) == s({u, z, x}) && nb(z) == s({y, v, x}) &&
         nb(v) == s({z, x});
}

std::optional<std::array<std::size_t, 5>> contains_gem(const UGraph& g) {
  const std::size_t n = g.order();
  if (n < 5) return std::nullopt;
  std::array<std::size_t, 5> pick{};
  std::optional<std::array<std::size_t, 5>> found;
  auto examine = [&]() {
    TaxonSubset members;
    for (auto a : pick) members = members.with(a);
    std::size_t twice_edges = 0;
    for (auto a : pick) twice_edges += (g.neighbors(a) & members).size();
    if (twice_edges != 14) return false;
    for (std::size_t x : pick) {
      if ((g.neighbors(x) & members).size() != 4) continue;
      const TaxonSubset rest = members.without(x);
      std::size_t end = n;
      bool degrees_ok = true;
      std::size_t ends = 0;
      for (std::size_t a : rest) {
        const std::size_t d = (g.neighbors(a) & rest).size();
        if (d == 1) {
          ++ends;
          if (end == n) end = a;
        } else if (d != 2) {
          degrees_ok = false;
        }
      }
      if (!degrees_ok || ends != 2) continue;
      std::array<std::size_t, 5> out{};
      out[0] = end;
      TaxonSubset used = TaxonSubset::singleton(end);
      for (std::size_t i = 1; i < 4; ++i) {
        const TaxonSubset next = (g.neighbors(out[i - 1]) & rest) - used;
        out[i] = next.lowest();
        used = used.with(out[i]);
      }
      out[4] = x;
      found = out;
      return true;
    }
    return false;
  };
  for (pick[0] = 0; pick[0] < n; ++pick[0])
    for (pick[1] = pick[0] + 1; pick[1] < n; ++pick[1])
      for (pick[2] = pick[1] + 1; pick[2] < n; ++pick[2])
        for (pick[3] = pick[2] + 1; pick[3] < n; ++pick[3])
          for (pick[4] = pick[3] + 1; pick[4] < n; ++pick[4])
            if (examine()) return found;
  return std::nullopt;
}

bool is_ptolemaic(const UGraph& g) { return is_chordal(g) && !contains_gem(g).has_value(); }

std::optional<PtolemaicObstruction> find_ptolemaic_obstruction(const UGraph& g) {
  if (!is_chordal(g)) {
    auto hole = find_induced_hole(g);
    if (!hole) throw Error(ErrorCode::ConstructionMismatch, "non-chordal graph without an induced hole");
    return PtolemaicObstruction{PtolemaicObstruction::Kind::Hole, std::move(*hole)};
  }
  if (auto gem = contains_gem(g)) {
    return PtolemaicObstruction{PtolemaicObstruction::Kind::Gem, {gem->begin(), gem->end()}};
  }
  return std::nullopt;
}

std::vector<std::vector<int>> shortest_path_distances(const UGraph& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
  for (std::size_t s = 0; s < n; ++s) {
    dist[s][s] = 0;
    TaxonSubset seen = TaxonSubset::singleton(s);
    TaxonSubset frontier = seen;
    for (int d = 1; !frontier.empty(); ++d) {
      TaxonSubset next;
      for (std::size_t u : frontier) next |= g.neighbors(u);
      next = next - seen;
      for (std::size_t v : next) dist[s][v] = d;
      seen |= next;
      frontier = next;
    }
  }
  return dist;
}

bool ptolemy_inequality_holds(const UGraph& g) {
  if (!is_connected(g)) throw Error(ErrorCode::DisconnectedGraph, "Ptolemy's inequality needs finite distances");
  const auto d = shortest_path_distances(g);
  const std::size_t n = g.order();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        for (std::size_t u = 0; u < n; ++u)
          if (d[x][y] * d[z][u] + d[x][u] * d[y][z] < d[x][z] * d[y][u]) return false;
  return true;
}

UGraph induced_subgraph(const UGraph& g, TaxonSubset y) {
  if (y.empty()) throw Error(ErrorCode::EmptySubset, "induced subgraph needs a non-empty vertex set");
  TaxonSet sub = g.taxa().restricted(y);
  const auto members = y.members();
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (g.adjacent(members[i], members[j])) edges.emplace_back(i, j);
  return UGraph(std::move(sub), edges);
}

}  // namespace arboreal
