#pragma once

// Brute-force reference implementations. Each one works from definitions
// only and shares no code with the library routine it checks.

#include <algorithm>
#include <array>
#include <bit>
#include <optional>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "arboreal/graph.hpp"
#include "arboreal/network.hpp"
#include "arboreal/symbolic.hpp"

namespace oracle {

using namespace arboreal;

inline std::vector<std::vector<bool>> adjacency(const UGraph& g) {
  std::vector<std::vector<bool>> a(g.order(), std::vector<bool>(g.order()));
  for (auto [x, y] : g.edges()) a[x][y] = a[y][x] = true;
  return a;
}

inline std::size_t components(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t v) { return p[v] == v ? v : p[v] = find(p[v]); };
  std::size_t count = n;
  for (auto [a, b] : edges) {
    const auto x = find(a), y = find(b);
    if (x != y) {
      p[x] = y;
      --count;
    }
  }
  return count;
}

// Is the induced subgraph on `s` a single cycle of length >= 4?
inline bool induces_hole(const std::vector<std::vector<bool>>& a, const std::vector<std::size_t>& s) {
  if (s.size() < 4) return false;
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i < s.size(); ++i) {
    std::size_t deg = 0;
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (i != j && a[s[i]][s[j]]) {
        ++deg;
        if (i < j) e.emplace_back(i, j);
      }
    }
    if (deg != 2) return false;
  }
  return components(s.size(), e) == 1;
}

inline bool chordal(const UGraph& g) {
  const auto a = adjacency(g);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.order()); ++m) {
    if (induces_hole(a, TaxonSubset(m).members())) return false;
  }
  return true;
}

// Any ordering u,y,z,v,x with the P4 u-y-z-v induced and x joined to all.
inline bool has_gem(const UGraph& g) {
  const auto a = adjacency(g);
  const std::size_t n = g.order();
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    if (std::popcount(m) != 5) continue;
    auto p = TaxonSubset(m).members();
    do {
      const auto [u, y, z, v, x] = std::array{p[0], p[1], p[2], p[3], p[4]};
      if (a[u][y] && a[y][z] && a[z][v] && !a[u][z] && !a[u][v] && !a[y][v] && a[x][u] && a[x][y] && a[x][z] &&
          a[x][v]) {
        return true;
      }
    } while (std::next_permutation(p.begin(), p.end()));
  }
  return false;
}

inline std::vector<TaxonSubset> maximal_cliques(const UGraph& g) {
  std::vector<TaxonSubset> cl;
  const std::uint64_t full = std::uint64_t{1} << g.order();
  auto is_clique = [&](std::uint64_t m) {
    for (std::size_t i : TaxonSubset(m)) {
      for (std::size_t j : TaxonSubset(m)) {
        if (i < j && !g.adjacent(i, j)) return false;
      }
    }
    return true;
  };
  for (std::uint64_t m = 1; m < full; ++m) {
    if (std::popcount(m) < 2 || !is_clique(m)) continue;
    bool maximal = true;
    for (std::size_t v = 0; v < g.order() && maximal; ++v) {
      if (!((m >> v) & 1U) && is_clique(m | (std::uint64_t{1} << v))) maximal = false;
    }
    if (maximal) cl.push_back(TaxonSubset(m));
  }
  return cl;
}

// Every non-empty intersection of a non-empty subfamily.
inline std::set<std::uint64_t> closure(const std::vector<TaxonSubset>& k) {
  std::set<std::uint64_t> out;
  for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << k.size()); ++pick) {
    std::uint64_t meet = ~std::uint64_t{0};
    for (std::size_t i = 0; i < k.size(); ++i) {
      if ((pick >> i) & 1U) meet &= k[i].bits();
    }
    if (meet) out.insert(meet);
  }
  return out;
}

// Pairs (A, B) with B a proper subset of A and nothing strictly between.
inline std::set<std::pair<std::uint64_t, std::uint64_t>> hasse(const std::set<std::uint64_t>& family) {
  std::set<std::pair<std::uint64_t, std::uint64_t>> out;
  auto proper = [](std::uint64_t b, std::uint64_t a) { return b != a && (b & ~a) == 0; };
  for (auto a : family) {
    for (auto b : family) {
      if (!proper(b, a)) continue;
      bool between = false;
      for (auto c : family) between = between || (proper(b, c) && proper(c, a));
      if (!between) out.insert({a, b});
    }
  }
  return out;
}

// Vertices that reach v, v included, by walking arcs backwards.
inline std::vector<bool> reaching(const Network& n, VertexId v) {
  std::vector<bool> seen(n.vertex_count());
  std::vector<VertexId> stack = {v};
  seen[v] = true;
  while (!stack.empty()) {
    const VertexId x = stack.back();
    stack.pop_back();
    for (const auto& a : n.arcs()) {
      if (a.head == x && !seen[a.tail]) {
        seen[a.tail] = true;
        stack.push_back(a.tail);
      }
    }
  }
  return seen;
}

inline std::vector<std::pair<std::size_t, std::size_t>> shared_ancestry_pairs(const Network& n) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t t = n.taxa().size();
  for (std::size_t x = 0; x < t; ++x) {
    const auto ax = reaching(n, n.leaf_of(x));
    for (std::size_t y = x + 1; y < t; ++y) {
      const auto ay = reaching(n, n.leaf_of(y));
      for (VertexId v = 0; v < n.vertex_count(); ++v) {
        if (ax[v] && ay[v]) {
          out.emplace_back(x, y);
          break;
        }
      }
    }
  }
  return out;
}

// Leaves below v by forward search over the arc list.
inline TaxonSubset leaves_below(const Network& n, VertexId v) {
  TaxonSubset s;
  std::vector<VertexId> stack = {v};
  std::set<VertexId> seen = {v};
  while (!stack.empty()) {
    const VertexId x = stack.back();
    stack.pop_back();
    bool leaf = true;
    for (const auto& a : n.arcs()) {
      if (a.tail != x) continue;
      leaf = false;
      if (seen.insert(a.head).second) stack.push_back(a.head);
    }
    if (leaf) s = s.with(*n.taxon_of(x));
  }
  return s;
}

// d(x, y) as the label of the common ancestor whose cluster is smallest among
// those containing both, found without any lca routine. A vertex with one
// child is never the answer since its child is lower.
inline Symbol label_of_pair(const LabelledNetwork& ln, std::size_t x, std::size_t y) {
  const Network& n = ln.net();
  std::optional<VertexId> best;
  for (VertexId v = 0; v < n.vertex_count(); ++v) {
    if (n.outdegree(v) < 2) continue;
    const TaxonSubset c = leaves_below(n, v);
    if (!c.contains(x) || !c.contains(y)) continue;
    if (!best || c.size() < leaves_below(n, *best).size()) best = v;
  }
  if (!best) return std::nullopt;
  return ln.label(*best);
}

// Number of rooted tree shapes on n labelled leaves, counting multifurcations:
// the sum over set partitions of the leaf set into >= 2 blocks of the product
// of the block counts.
inline std::size_t rooted_tree_count(std::size_t n) {
  if (n == 1) return 1;
  std::size_t total = 0;
  std::vector<std::size_t> block_of(n);
  std::function<void(std::size_t, std::size_t)> assign = [&](std::size_t i, std::size_t blocks) {
    if (i == n) {
      if (blocks < 2) return;
      std::vector<std::size_t> sizes(blocks);
      for (auto b : block_of) ++sizes[b];
      std::size_t prod = 1;
      for (auto s : sizes) prod *= rooted_tree_count(s);
      total += prod;
      return;
    }
    for (std::size_t b = 0; b <= blocks; ++b) {
      block_of[i] = b;
      assign(i + 1, std::max(blocks, b + 1));
    }
  };
  assign(0, 0);
  return total;
}

}  // namespace oracle
