#pragma once

#include <string>
#include <utility>
#include <vector>

#include "arboreal/graph.hpp"
#include "arboreal/network.hpp"
#include "arboreal/symbolic.hpp"

namespace fx {

using namespace arboreal;

inline UGraph graph(std::size_t n, const std::vector<std::pair<std::string, std::string>>& edges) {
  return UGraph::from_named_edges(TaxonSet::numbered(n), edges);
}

inline UGraph cycle(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return UGraph(TaxonSet::numbered(n), e);
}

inline UGraph path(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return UGraph(TaxonSet::numbered(n), e);
}

// Two K4 blocks on {1,2,3,4} and {3,4,5,6}.
inline UGraph g6() {
  std::vector<Edge> e;
  for (std::size_t a = 0; a < 6; ++a) {
    for (std::size_t b = a + 1; b < 6; ++b) {
      if ((a < 4 && b < 4) || (a >= 2 && b >= 2)) e.emplace_back(a, b);
    }
  }
  return UGraph(TaxonSet::numbered(6), e);
}

// P4 u-y-z-v with x joined to all four.
inline UGraph gem() {
  return UGraph::from_named_edges(TaxonSet({"u", "y", "z", "v", "x"}), {{"u", "y"},
                                                                        {"y", "z"},
                                                                        {"z", "v"},
                                                                        {"x", "u"},
                                                                        {"x", "y"},
                                                                        {"x", "z"},
                                                                        {"x", "v"}});
}

// Roots v, w (0, 1); hybrids h1, h2 (2, 3) below both; h1 -> a, b (4, 5);
// a -> 1, 2; b -> 3, 4; h2 -> 5, 6. Leaves 6..11 carry taxa 1..6.
inline Network two_root_hybrids() {
  std::vector<Arc> arcs = {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 4}, {2, 5},
                           {4, 6}, {4, 7}, {5, 8}, {5, 9}, {3, 10}, {3, 11}};
  std::map<VertexId, std::string> leaves;
  for (VertexId v = 6; v < 12; ++v) leaves[v] = std::to_string(v - 5);
  return Network::validate(12, arcs, leaves);
}

// Root v (0) over a, b, c (1, 2, 3); hybrids h1 (4) below a, b; h2 (5) below
// b, c; h3 (6) below c, a; each hybrid has one leaf, taxa 1, 2, 3.
inline Network triangle_of_hybrids() {
  std::vector<Arc> arcs = {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {2, 5},
                           {3, 5}, {3, 6}, {1, 6}, {4, 7}, {5, 8}, {6, 9}};
  return Network::validate(10, arcs, {{7, "1"}, {8, "2"}, {9, "3"}});
}

// Two-rooted arboreal network on 1..7:
//   r1 (0, a) -> p, 1     p (1, b) -> 2, h     r2 (2, c) -> h, q
//   h (3, c) -> 3, s      s (4, b) -> 4, 5     q (5, a) -> 6, 7
inline LabelledNetwork seven_taxon_network() {
  std::vector<Arc> arcs = {{0, 1}, {0, 6}, {1, 7}, {1, 3}, {2, 3},  {2, 5},
                           {3, 8}, {3, 4}, {4, 9}, {4, 10}, {5, 11}, {5, 12}};
  std::map<VertexId, std::string> leaves;
  for (VertexId v = 6; v < 13; ++v) leaves[v] = std::to_string(v - 5);
  Network n = Network::validate(13, arcs, leaves);
  return LabelledNetwork(n, {{0, "a"}, {1, "b"}, {2, "c"}, {3, "c"}, {4, "b"}, {5, "a"}});
}

// The map the seven-taxon network explains, worked out by hand.
inline const char* seven_taxon_map_text() {
  return "# seven taxa, two roots\n"
         "1\n"
         "2 a\n"
         "3 a b\n"
         "4 a b c\n"
         "5 a b c b\n"
         "6 - - c c c\n"
         "7 - - c c c a\n";
}

// Worked example on x, y, z, t, u with symbols "•" and "◦".
inline SymbolicMap worked_example_map() {
  const std::string dot = "•", ring = "◦";
  return SymbolicMap::from_named(TaxonSet({"x", "y", "z", "t", "u"}), {{"x", "y", ring},
                                                                       {"x", "z", dot},
                                                                       {"x", "t", dot},
                                                                       {"x", "u", std::nullopt},
                                                                       {"y", "z", dot},
                                                                       {"y", "t", dot},
                                                                       {"y", "u", std::nullopt},
                                                                       {"z", "t", dot},
                                                                       {"z", "u", std::nullopt},
                                                                       {"t", "u", ring}});
}

inline TaxonSubset sub(const TaxonSet& t, std::vector<std::string> names) { return t.subset_of(names); }

}  // namespace fx
