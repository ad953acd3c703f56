#include <doctest.h>

#include "arboreal/cliques.hpp"
#include "arboreal/error.hpp"
#include "arboreal/oracle.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace arboreal;

namespace {

std::vector<TaxonSubset> subsets(const TaxonSet& t, const std::vector<std::vector<std::string>>& sets) {
  std::vector<TaxonSubset> out;
  for (const auto& s : sets) out.push_back(t.subset_of(s));
  return out;
}

CliqueFamily family(const TaxonSet& t, const std::vector<std::vector<std::string>>& sets) {
  return CliqueFamily(t, subsets(t, sets));
}

}  // namespace

TEST_SUITE("cliques") {

TEST_CASE("families are canonically ordered and validated") {
  const TaxonSet t = TaxonSet::numbered(4);
  const CliqueFamily k = family(t, {{"1", "2", "3"}, {"3", "4"}, {"2", "4"}});
  CHECK(t.subset_string(k[0]) == "24");
  CHECK(t.subset_string(k[1]) == "34");
  CHECK(t.subset_string(k[2]) == "123");
  CHECK(k.contains(t.subset_of({"3", "4"})));
  CHECK(k.index_of(t.subset_of({"1", "4"})) == k.size());
  CHECK_THROWS_AS(CliqueFamily(t, {TaxonSubset()}), Error);
  CHECK_THROWS_AS(CliqueFamily(t, {TaxonSubset(0b10000)}), Error);
  CHECK_THROWS_AS(family(t, {{"1", "2"}, {"2", "1"}}), Error);
}

TEST_CASE("maximal cliques of fixtures") {
  const UGraph g = fx::g6();
  CHECK(maximal_cliques(g) == family(g.taxa(), {{"1", "2", "3", "4"}, {"3", "4", "5", "6"}}));
  CHECK(maximal_cliques(fx::path(2)) == family(fx::path(2).taxa(), {{"1", "2"}}));
  const UGraph c4 = fx::cycle(4);
  CHECK(maximal_cliques(c4) == family(c4.taxa(), {{"1", "2"}, {"2", "3"}, {"3", "4"}, {"1", "4"}}));
}

TEST_CASE("Bron-Kerbosch agrees with subset maximality") {
  Rng rng(3);
  for (int i = 0; i < 300; ++i) {
    const UGraph g = random_connected_graph(rng.between(2, 9), rng);
    CHECK(maximal_cliques(g) == CliqueFamily(g.taxa(), oracle::maximal_cliques(g)));
  }
}

TEST_CASE("edge clique covers") {
  const UGraph g = fx::g6();
  const TaxonSet& t = g.taxa();
  CHECK(is_edge_clique_cover(g, family(t, {{"1", "2", "3", "4"}, {"3", "4", "5", "6"}})));
  CHECK(is_edge_clique_cover(g, family(t, {{"1", "2", "3"}, {"1", "2", "4"}, {"3", "4"}, {"3", "5", "6"}, {"4", "5", "6"}})));
  CHECK_FALSE(is_edge_clique_cover(g, family(t, {{"1", "2", "3", "4"}})));
  CHECK_FALSE(is_edge_clique_cover(g, family(t, {{"1", "2", "3", "4"}, {"3", "4", "5", "6"}, {"1", "5"}})));
}

TEST_CASE("minimum edge clique cover") {
  const UGraph g = fx::g6();
  const auto e = ecc_min(g);
  CHECK(e.size == 2);
  CHECK(e.cover == family(g.taxa(), {{"1", "2", "3", "4"}, {"3", "4", "5", "6"}}));
  CHECK(ecc_min(fx::path(2)).size == 1);
  const UGraph c5 = fx::cycle(5);
  const auto f = ecc_min(c5);
  CHECK(f.size == 5);
  for (auto s : f.cover) CHECK(s.size() == 2);
  CHECK_THROWS_AS(ecc_min(UGraph(TaxonSet::numbered(3))), Error);
}

TEST_CASE("ecc_min matches exhaustive search over clique subfamilies") {
  Rng rng(17);
  for (int i = 0; i < 60; ++i) {
    const UGraph g = random_connected_graph(rng.between(3, 6), rng);
    std::vector<TaxonSubset> cliques;
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << g.order()); ++m) {
      if (std::popcount(m) >= 2 && g.is_clique(TaxonSubset(m))) cliques.push_back(TaxonSubset(m));
    }
    // smallest k such that some k cliques cover every edge
    std::size_t best = g.edge_count();
    std::vector<std::size_t> pick;
    std::function<void(std::size_t, std::size_t)> go = [&](std::size_t from, std::size_t k) {
      if (pick.size() == k) {
        bool ok = true;
        for (auto [a, b] : g.edges()) {
          bool hit = false;
          for (auto p : pick) hit = hit || (cliques[p].contains(a) && cliques[p].contains(b));
          ok = ok && hit;
        }
        if (ok) best = std::min(best, k);
        return;
      }
      for (std::size_t i = from; i < cliques.size(); ++i) {
        pick.push_back(i);
        go(i + 1, k);
        pick.pop_back();
      }
    };
    for (std::size_t k = 1; k < best; ++k) go(0, k);
    CHECK(ecc_min(g).size == best);
  }
}

TEST_CASE("intersection closure") {
  const TaxonSet t = TaxonSet::numbered(6);
  CHECK(intersection_closure(family(t, {{"1", "2", "3", "4"}, {"3", "4", "5", "6"}})) ==
        family(t, {{"1", "2", "3", "4"}, {"3", "4", "5", "6"}, {"3", "4"}}));
  CHECK(intersection_closure(family(t, {{"1", "2"}})) == family(t, {{"1", "2"}}));
  const auto five = subsets(t, {{"1", "2", "3"}, {"1", "2", "4"}, {"3", "4"}, {"3", "5", "6"}, {"4", "5", "6"}});
  const CliqueFamily c = intersection_closure(CliqueFamily(t, five));
  for (auto s : {"12", "3", "4", "56"}) {
    std::vector<std::string> names;
    for (const char* p = s; *p; ++p) names.emplace_back(1, *p);
    CHECK(c.contains(t.subset_of(names)));
  }
  std::vector<TaxonSubset> expect;
  for (auto m : oracle::closure(five)) expect.push_back(TaxonSubset(m));
  CHECK(c == CliqueFamily(t, expect));
}

TEST_CASE("closure and cover digraph agree with definitions on random families") {
  Rng rng(23);
  const TaxonSet t = TaxonSet::numbered(7);
  for (int i = 0; i < 200; ++i) {
    std::set<std::uint64_t> raw;
    const std::size_t k = rng.between(1, 6);
    while (raw.size() < k) raw.insert(rng.between(1, 127));
    std::vector<TaxonSubset> sets;
    for (auto m : raw) sets.push_back(TaxonSubset(m));
    const CliqueFamily c = intersection_closure(CliqueFamily(t, sets));
    const auto expected = oracle::closure(sets);
    std::vector<TaxonSubset> e;
    for (auto m : expected) e.push_back(TaxonSubset(m));
    REQUIRE(c == CliqueFamily(t, e));
    const CoverDigraph h = cover_digraph(c);
    std::set<std::pair<std::uint64_t, std::uint64_t>> arcs;
    for (const auto& a : h.arcs) arcs.insert({h.nodes[a.parent].bits(), h.nodes[a.child].bits()});
    CHECK(arcs == oracle::hasse(expected));
    // acyclic iff a forest: arcs = nodes - components
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (const auto& a : h.arcs) edges.emplace_back(a.parent, a.child);
    const std::size_t comps = oracle::components(h.nodes.size(), edges);
    CHECK(underlying_acyclic(h) == (h.arcs.size() + comps == h.nodes.size()));
  }
}

TEST_CASE("cover digraph fixtures") {
  const TaxonSet t = TaxonSet::numbered(6);
  const CoverDigraph h = cover_digraph(family(t, {{"1", "2", "3", "4"}, {"3", "4", "5", "6"}, {"3", "4"}}));
  REQUIRE(h.arcs.size() == 2);
  for (const auto& a : h.arcs) CHECK(t.subset_string(h.nodes[a.child]) == "34");
  CHECK(underlying_acyclic(h));
  CHECK(cover_digraph(family(t, {{"1", "2"}, {"3", "4"}})).arcs.empty());
  const CoverDigraph chain = cover_digraph(family(t, {{"1"}, {"1", "2"}, {"1", "2", "3"}}));
  REQUIRE(chain.arcs.size() == 2);
  CHECK(t.subset_string(chain.nodes[chain.arcs[0].parent]) == "12");
  CHECK(t.subset_string(chain.nodes[chain.arcs[0].child]) == "1");
  CHECK(t.subset_string(chain.nodes[chain.arcs[1].parent]) == "123");
  CHECK(underlying_acyclic(cover_digraph(family(t, {{"1", "2"}}))));
  CHECK(h.children(h.nodes.index_of(t.subset_of({"1", "2", "3", "4"}))).size() == 1);
  CHECK(h.parents(h.nodes.index_of(t.subset_of({"3", "4"}))).size() == 2);
}

TEST_CASE("cover digraph of the closure separates C4 from G6") {
  const UGraph c4 = fx::cycle(4);
  CHECK_FALSE(underlying_acyclic(cover_digraph(intersection_closure(maximal_cliques(c4)))));
  CHECK(underlying_acyclic(cover_digraph(intersection_closure(maximal_cliques(fx::g6())))));
  // the maximal cliques alone never have arcs between them
  CHECK(cover_digraph(maximal_cliques(c4)).arcs.empty());
}

}  // TEST_SUITE
