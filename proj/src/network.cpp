#include "arboreal/network.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <queue>
#include <set>

#include "arboreal/error.hpp"
#include "digraph_edit.hpp"

namespace arboreal {

Network Network::validate(std::size_t vertex_count, std::vector<Arc> arcs,
                          const std::map<VertexId, std::string>& leaf_names, std::optional<TaxonSet> taxa) {
  const std::size_t n = vertex_count;
  if (n == 0) throw Error(ErrorCode::Disconnected, "a network needs at least one vertex");
  std::sort(arcs.begin(), arcs.end());
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const auto& a = arcs[i];
    if (a.tail >= n || a.head >= n) {
      throw Error(ErrorCode::MalformedArc,
                  "arc (" + std::to_string(a.tail) + "," + std::to_string(a.head) + ") names a missing vertex");
    }
    if (i > 0 && arcs[i - 1] == a) {
      throw Error(ErrorCode::MalformedArc,
                  "duplicate arc (" + std::to_string(a.tail) + "," + std::to_string(a.head) + ")");
    }
  }

  Network net;
  net.arcs_ = std::move(arcs);
  net.children_.assign(n, {});
  net.parents_.assign(n, {});
  for (const auto& a : net.arcs_) {
    if (a.tail == a.head) throw Error(ErrorCode::Cyclic, "loop at vertex " + std::to_string(a.tail));
    net.children_[a.tail].push_back(a.head);
    net.parents_[a.head].push_back(a.tail);
  }
  for (auto& p : net.parents_) std::sort(p.begin(), p.end());

  // Kahn's algorithm, smallest id first.
  std::vector<std::size_t> remaining(n);
  std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> ready;
  for (VertexId v = 0; v < n; ++v) {
    remaining[v] = net.parents_[v].size();
    if (remaining[v] == 0) ready.push(v);
  }
  while (!ready.empty()) {
    const VertexId v = ready.top();
    ready.pop();
    net.topo_.push_back(v);
    for (VertexId c : net.children_[v]) {
      if (--remaining[c] == 0) ready.push(c);
    }
  }
  if (net.topo_.size() != n) throw Error(ErrorCode::Cyclic, "the digraph contains a directed cycle");

  std::vector<VertexId> comp(n);
  std::iota(comp.begin(), comp.end(), VertexId{0});
  std::function<VertexId(VertexId)> find = [&](VertexId v) { return comp[v] == v ? v : comp[v] = find(comp[v]); };
  std::size_t components = n;
  for (const auto& a : net.arcs_) {
    const VertexId x = find(a.tail);
    const VertexId y = find(a.head);
    if (x != y) {
      comp[x] = y;
      --components;
    }
  }
  if (components != 1) throw Error(ErrorCode::Disconnected, "the underlying graph is not connected");

  for (VertexId v = 0; v < n; ++v) {
    if (net.parents_[v].empty() && net.children_[v].size() < 2) {
      throw Error(ErrorCode::RootOutdegLt2, "root " + std::to_string(v) + " has outdegree below 2");
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    if (net.children_[v].empty() && net.parents_[v].size() != 1) {
      throw Error(ErrorCode::LeafIndegNe1, "leaf " + std::to_string(v) + " does not have indegree 1");
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    if (net.parents_[v].size() == 1 && net.children_[v].size() == 1) {
      throw Error(ErrorCode::Indeg1Outdeg1Vertex, "vertex " + std::to_string(v) + " has indegree and outdegree 1");
    }
  }

  std::vector<VertexId> leaves;
  for (VertexId v = 0; v < n; ++v) {
    if (net.children_[v].empty()) leaves.push_back(v);
  }
  std::vector<std::string> names;
  std::set<std::string> distinct;
  for (VertexId v : leaves) {
    auto it = leaf_names.find(v);
    if (it == leaf_names.end()) {
      throw Error(ErrorCode::LeafSetMismatch, "leaf " + std::to_string(v) + " has no taxon");
    }
    if (it->second.empty() || !distinct.insert(it->second).second) {
      throw Error(ErrorCode::LeafSetMismatch, "taxon '" + it->second + "' is empty or repeated");
    }
    names.push_back(it->second);
  }
  if (leaf_names.size() != leaves.size()) {
    throw Error(ErrorCode::LeafSetMismatch, "a taxon is attached to a vertex that is not a leaf");
  }
  if (leaves.size() < 2) throw Error(ErrorCode::LeafSetMismatch, "a network needs at least two leaves");
  if (taxa) {
    if (taxa->size() != names.size() ||
        std::any_of(names.begin(), names.end(), [&](const std::string& s) { return !taxa->find(s); })) {
      throw Error(ErrorCode::LeafSetMismatch, "the leaves do not carry exactly the given taxa");
    }
    net.taxa_ = std::move(*taxa);
  } else {
    net.taxa_ = TaxonSet(names);
  }

  net.leaf_of_.assign(net.taxa_.size(), 0);
  net.taxon_of_.assign(n, std::nullopt);
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    const std::size_t t = net.taxa_.index_of(names[i]);
    net.leaf_of_[t] = leaves[i];
    net.taxon_of_[leaves[i]] = t;
  }
  net.clusters_.assign(n, TaxonSubset{});
  for (auto it = net.topo_.rbegin(); it != net.topo_.rend(); ++it) {
    const VertexId v = *it;
    if (net.taxon_of_[v]) net.clusters_[v] = TaxonSubset::singleton(*net.taxon_of_[v]);
    for (VertexId c : net.children_[v]) net.clusters_[v] |= net.clusters_[c];
  }
  return net;
}

const std::vector<VertexId>& Network::children(VertexId v) const {
  if (v >= vertex_count()) throw Error(ErrorCode::UnknownVertex, "no vertex " + std::to_string(v));
  return children_[v];
}

const std::vector<VertexId>& Network::parents(VertexId v) const {
  if (v >= vertex_count()) throw Error(ErrorCode::UnknownVertex, "no vertex " + std::to_string(v));
  return parents_[v];
}

std::vector<VertexId> Network::roots() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < vertex_count(); ++v)
    if (parents_[v].empty()) out.push_back(v);
  return out;
}

std::vector<VertexId> Network::hybrids() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < vertex_count(); ++v)
    if (parents_[v].size() >= 2) out.push_back(v);
  return out;
}

std::optional<std::size_t> Network::taxon_of(VertexId v) const {
  if (v >= vertex_count()) throw Error(ErrorCode::UnknownVertex, "no vertex " + std::to_string(v));
  return taxon_of_[v];
}

TaxonSubset Network::cluster(VertexId v) const {
  if (v >= vertex_count()) throw Error(ErrorCode::UnknownVertex, "no vertex " + std::to_string(v));
  return clusters_[v];
}

std::vector<bool> Network::ancestors(VertexId v) const {
  std::vector<bool> seen(vertex_count(), false);
  std::vector<VertexId> stack{v};
  seen.at(v) = true;
  while (!stack.empty()) {
    const VertexId u = stack.back();
    stack.pop_back();
    for (VertexId p : parents_[u]) {
      if (!seen[p]) {
        seen[p] = true;
        stack.push_back(p);
      }
    }
  }
  return seen;
}

const std::string& Network::name(VertexId v) const {
  static const std::string kNone;
  if (v >= vertex_count()) throw Error(ErrorCode::UnknownVertex, "no vertex " + std::to_string(v));
  return names_.empty() ? kNone : names_[v];
}

Network Network::with_names(std::vector<std::string> names) const {
  if (names.size() != vertex_count()) throw Error(ErrorCode::InvalidArgument, "one name per vertex is required");
  Network copy = *this;
  copy.names_ = std::move(names);
  return copy;
}

std::map<VertexId, std::string> leaf_names(const Network& n) {
  std::map<VertexId, std::string> out;
  for (std::size_t t = 0; t < n.taxa().size(); ++t) out[n.leaf_of(t)] = n.taxa().name(t);
  return out;
}

std::size_t h_tilde(const Network& n) {
  std::size_t sum = 0;
  for (VertexId h : n.hybrids()) sum += n.indegree(h) - 1;
  return sum;
}

bool is_arboreal(const Network& n) { return n.arcs().size() + 1 == n.vertex_count(); }

std::optional<AlternatingCycle> find_alternating_cycle(const Network& n) {
  if (is_arboreal(n)) return std::nullopt;
  const std::size_t count = n.vertex_count();
  std::vector<std::vector<VertexId>> adj(count);
  for (const auto& a : n.arcs()) {
    adj[a.tail].push_back(a.head);
    adj[a.head].push_back(a.tail);
  }
  // BFS spanning tree of the underlying graph.
  std::vector<VertexId> up(count, count);
  std::vector<std::size_t> depth(count, 0);
  std::vector<bool> seen(count, false);
  std::deque<VertexId> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    const VertexId u = queue.front();
    queue.pop_front();
    for (VertexId w : adj[u]) {
      if (seen[w]) continue;
      seen[w] = true;
      up[w] = u;
      depth[w] = depth[u] + 1;
      queue.push_back(w);
    }
  }
  const auto is_tree_edge = [&](VertexId a, VertexId b) { return up[b] == a || up[a] == b; };
  const auto non_tree =
      std::find_if(n.arcs().begin(), n.arcs().end(), [&](const Arc& a) { return !is_tree_edge(a.tail, a.head); });
  if (non_tree == n.arcs().end()) return std::nullopt;

  // Cycle a ... b through the tree, closed by the arc a -> b.
  VertexId a = non_tree->tail;
  VertexId b = non_tree->head;
  std::vector<VertexId> from_a{a};
  std::vector<VertexId> from_b{b};
  while (a != b) {
    if (depth[a] >= depth[b]) {
      a = up[a];
      from_a.push_back(a);
    } else {
      b = up[b];
      from_b.push_back(b);
    }
  }
  std::vector<VertexId> cycle = from_a;
  for (auto it = from_b.rbegin() + 1; it != from_b.rend(); ++it) cycle.push_back(*it);
  const std::size_t m = cycle.size();
  const auto has_arc = [&](VertexId x, VertexId y) {
    const auto& ch = n.children(x);
    return std::binary_search(ch.begin(), ch.end(), y);
  };
  // forward[i]: the edge between cycle[i] and cycle[i+1] points forward.
  std::vector<bool> forward(m);
  for (std::size_t i = 0; i < m; ++i) forward[i] = has_arc(cycle[i], cycle[(i + 1) % m]);
  std::size_t start = m;
  for (std::size_t i = 0; i < m && start == m; ++i) {
    if (forward[i] && !forward[(i + m - 1) % m]) start = i;
  }
  std::rotate(cycle.begin(), cycle.begin() + static_cast<std::ptrdiff_t>(start), cycle.end());
  std::rotate(forward.begin(), forward.begin() + static_cast<std::ptrdiff_t>(start), forward.end());

  AlternatingCycle out;
  std::size_t i = 0;
  while (i < m) {
    out.sources.push_back(cycle[i]);
    std::vector<VertexId> down{cycle[i]};
    while (forward[i]) {
      ++i;
      down.push_back(cycle[i % m]);
    }
    out.hybrids.push_back(cycle[i % m]);
    out.left_paths.push_back(std::move(down));
    std::vector<VertexId> climb{cycle[i % m]};
    while (i < m && !forward[i]) {
      ++i;
      climb.push_back(cycle[i % m]);
    }
    std::reverse(climb.begin(), climb.end());
    out.right_paths.push_back(std::move(climb));
  }
  return out;
}

bool is_alternating_cycle(const Network& n, const AlternatingCycle& c) {
  const std::size_t k = c.k();
  if (k == 0 || c.sources.size() != k || c.left_paths.size() != k || c.right_paths.size() != k) return false;
  std::map<VertexId, int> seen;
  std::set<Arc> used;
  const auto valid_path = [&](const std::vector<VertexId>& p, VertexId from, VertexId to) {
    if (p.size() < 2 || p.front() != from || p.back() != to) return false;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      if (p[i] >= n.vertex_count() || p[i + 1] >= n.vertex_count()) return false;
      const auto& ch = n.children(p[i]);
      if (!std::binary_search(ch.begin(), ch.end(), p[i + 1])) return false;
      if (!used.insert(Arc{p[i], p[i + 1]}).second) return false;
    }
    for (VertexId v : p) ++seen[v];
    return true;
  };
  for (std::size_t i = 0; i < k; ++i) {
    if (c.hybrids[i] >= n.vertex_count() || !n.is_hybrid(c.hybrids[i])) return false;
    if (!valid_path(c.left_paths[i], c.sources[i], c.hybrids[i])) return false;
    if (!valid_path(c.right_paths[i], c.sources[(i + 1) % k], c.hybrids[i])) return false;
  }
  std::set<VertexId> ends(c.sources.begin(), c.sources.end());
  ends.insert(c.hybrids.begin(), c.hybrids.end());
  if (ends.size() != 2 * k) return false;
  for (const auto& [v, times] : seen) {
    if (times != (ends.count(v) ? 2 : 1)) return false;
  }
  return true;
}

UGraph shared_ancestry_graph(const Network& n) {
  std::vector<Edge> edges;
  std::set<Edge> have;
  for (VertexId r : n.roots()) {
    const auto members = n.cluster(r).members();
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j)
        if (have.insert({members[i], members[j]}).second) edges.emplace_back(members[i], members[j]);
  }
  return UGraph(n.taxa(), edges);
}

std::optional<VertexId> lca(const Network& n, std::size_t x, std::size_t y) {
  if (!is_arboreal(n)) throw Error(ErrorCode::NotArboreal, "lca is only defined for arboreal networks");
  if (x >= n.taxa().size() || y >= n.taxa().size()) throw Error(ErrorCode::UnknownTaxon, "taxon out of range");
  const TaxonSubset pair = TaxonSubset::singleton(x).with(y);
  std::optional<VertexId> found;
  for (VertexId v = 0; v < n.vertex_count(); ++v) {
    if (!pair.is_subset_of(n.cluster(v))) continue;
    const auto& ch = n.children(v);
    if (std::any_of(ch.begin(), ch.end(), [&](VertexId c) { return pair.is_subset_of(n.cluster(c)); })) continue;
    if (found) throw Error(ErrorCode::ConstructionMismatch, "two least common ancestors in an arboreal network");
    found = v;
  }
  return found;
}

std::optional<VertexId> lca(const Network& n, const std::string& x, const std::string& y) {
  return lca(n, n.taxa().index_of(x), n.taxa().index_of(y));
}

Network restrict(const Network& n, TaxonSubset y) {
  if (!y.is_subset_of(n.taxa().all())) throw Error(ErrorCode::UnknownTaxon, "subset is not contained in the taxa");
  if (y.size() < 2) throw Error(ErrorCode::SubsetTooSmall, "restriction needs at least two taxa");
  if (y == n.taxa().all()) return n;
  auto edit = detail::DigraphEdit::from(n);
  for (std::size_t t : n.taxa().all() - y) edit.remove_vertex(n.leaf_of(t));
  edit.cleanup([&](VertexId v) {
    const auto& t = edit.at(v).taxon;
    return t && y.contains(*t);
  });
  return edit.build(n.taxa().restricted(y)).net;
}

std::optional<Network> remove_root(const Network& n, VertexId r) {
  if (r >= n.vertex_count() || !n.is_root(r)) throw Error(ErrorCode::NotARoot, "vertex is not a root");
  const auto roots = n.roots();
  if (roots.size() < 2) throw Error(ErrorCode::SingleRooted, "N - r needs at least two roots");
  std::vector<bool> keep(n.vertex_count(), false);
  std::vector<VertexId> stack;
  for (VertexId q : roots) {
    if (q != r) {
      keep[q] = true;
      stack.push_back(q);
    }
  }
  while (!stack.empty()) {
    const VertexId u = stack.back();
    stack.pop_back();
    for (VertexId c : n.children(u)) {
      if (!keep[c]) {
        keep[c] = true;
        stack.push_back(c);
      }
    }
  }
  auto edit = detail::DigraphEdit::from(n);
  for (VertexId v = 0; v < n.vertex_count(); ++v)
    if (!keep[v]) edit.remove_vertex(v);
  edit.cleanup([&](VertexId v) { return edit.at(v).taxon.has_value(); });
  try {
    return edit.build().net;
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace arboreal
