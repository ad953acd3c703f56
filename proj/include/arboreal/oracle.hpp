#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "arboreal/graph.hpp"
#include "arboreal/network.hpp"
#include "arboreal/symbolic.hpp"

namespace arboreal {

struct GenParams {
  std::size_t leaf_min = 2;
  std::size_t leaf_max = 8;
  std::size_t root_min = 1;
  std::size_t root_max = 3;
  std::size_t symbol_count = 2;
  // Chance of adding each further extra arc in random_network.
  double hybrid_bias = 0.0;
  std::uint64_t seed = 0;

  // Throws InvalidArgument on empty ranges or a bias outside [0, 1].
  void check() const;
};

// mt19937_64 with portable integer and real draws, so a seed gives the same
// stream on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform in [lo, hi].
  std::size_t between(std::size_t lo, std::size_t hi);
  std::size_t below(std::size_t n) { return between(0, n - 1); }
  // Uniform in [0, 1).
  double real() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  bool chance(double p) { return real() < p; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

inline constexpr std::size_t kGenerationRetries = 1000;

// Arboreal network built component by component: a random rooted tree first,
// then each further root's tree is hung onto the existing network by one new
// arc. Taxa are "1".."L". Throws GenerationExhausted.
Network random_arboreal_network(const GenParams& p);
// Same network with labels drawn from the first symbol_count of a, b, c, ...
LabelledNetwork random_labelled_arboreal_network(const GenParams& p);
// An arboreal network plus extra arcs added while a hybrid_bias coin comes up.
Network random_network(const GenParams& p);

// Edge probability drawn from [0.2, 0.8] per graph; disconnected draws are
// rejected.
UGraph random_connected_graph(std::size_t n, Rng& rng);

// Every labelled connected graph on taxa "1".."n". Throws TooLarge for n > 6.
std::vector<UGraph> enumerate_connected_graphs(std::size_t n);

// Every rooted phylogenetic tree on `taxa` with every labelling of its
// internal vertices by `symbols`. Throws TooLarge beyond 4 taxa or 3 symbols.
std::vector<LabelledNetwork> enumerate_labelled_trees(const TaxonSet& taxa, const std::vector<std::string>& symbols);

// Common ancestors of the leaves x and y with no child that is also one,
// found by plain reachability.
std::vector<VertexId> brute_force_minimal_common_ancestors(const Network& n, std::size_t x, std::size_t y);

// Non-discriminating variants of `ln` that still explain the same map: a
// vertex of outdegree 3 or more split into two with equal labels, and a
// hybrid of outdegree 2 or more given a single child carrying its children.
std::vector<LabelledNetwork> uncollapsed_variants(const LabelledNetwork& ln);

}  // namespace arboreal
