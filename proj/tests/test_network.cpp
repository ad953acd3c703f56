#include <doctest.h>

#include "arboreal/builder.hpp"
#include "arboreal/error.hpp"
#include "arboreal/network.hpp"
#include "arboreal/oracle.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace arboreal;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InvalidArgument;
}

Network cherry() { return Network::validate(3, {{0, 1}, {0, 2}}, {{1, "x"}, {2, "y"}}); }

}  // namespace

TEST_SUITE("network") {

TEST_CASE("validation") {
  const Network c = cherry();
  CHECK(c.root_count() == 1);
  CHECK(c.taxa().names() == std::vector<std::string>{"x", "y"});
  CHECK(code_of([] { Network::validate(0, {}, {}); }) == ErrorCode::Disconnected);
  CHECK(code_of([] { Network::validate(3, {{0, 1}, {0, 5}}, {{1, "x"}, {2, "y"}}); }) == ErrorCode::MalformedArc);
  CHECK(code_of([] { Network::validate(3, {{0, 1}, {0, 1}}, {{1, "x"}, {2, "y"}}); }) == ErrorCode::MalformedArc);
  CHECK(code_of([] { Network::validate(3, {{0, 0}, {0, 1}, {0, 2}}, {{1, "x"}, {2, "y"}}); }) == ErrorCode::Cyclic);
  CHECK(code_of([] {
          Network::validate(5, {{0, 1}, {1, 2}, {2, 1}, {0, 3}, {2, 4}}, {{3, "x"}, {4, "y"}});
        }) == ErrorCode::Cyclic);
  CHECK(code_of([] { Network::validate(6, {{0, 1}, {0, 2}, {3, 4}, {3, 5}}, {{1, "a"}, {2, "b"}, {4, "c"}, {5, "d"}}); }) ==
        ErrorCode::Disconnected);
  CHECK(code_of([] { Network::validate(2, {{0, 1}}, {{1, "x"}}); }) == ErrorCode::RootOutdegLt2);
  CHECK(code_of([] {
          Network::validate(5, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 4}}, {{3, "x"}, {4, "y"}});
        }) == ErrorCode::LeafIndegNe1);
  CHECK(code_of([] { Network::validate(4, {{0, 1}, {0, 2}, {1, 3}}, {{2, "x"}, {3, "y"}}); }) ==
        ErrorCode::Indeg1Outdeg1Vertex);
  CHECK(code_of([] { Network::validate(3, {{0, 1}, {0, 2}}, {{1, "x"}}); }) == ErrorCode::LeafSetMismatch);
  CHECK(code_of([] { Network::validate(3, {{0, 1}, {0, 2}}, {{1, "x"}, {2, "x"}}); }) == ErrorCode::LeafSetMismatch);
  CHECK(code_of([] { Network::validate(3, {{0, 1}, {0, 2}}, {{0, "r"}, {1, "x"}, {2, "y"}}); }) ==
        ErrorCode::LeafSetMismatch);
  CHECK(code_of([] { Network::validate(3, {{0, 1}, {0, 2}}, {{1, "x"}, {2, "y"}}, TaxonSet({"x", "z"})); }) ==
        ErrorCode::LeafSetMismatch);
  CHECK_THROWS_AS(cherry().children(7), Error);
}

TEST_CASE("the two-root hybrid fixture") {
  const Network n = fx::two_root_hybrids();
  CHECK(n.root_count() == 2);
  CHECK(n.hybrids() == std::vector<VertexId>{2, 3});
  CHECK(h_tilde(n) == 2);
  CHECK_FALSE(is_arboreal(n));
  const auto c = find_alternating_cycle(n);
  REQUIRE(c.has_value());
  CHECK(c->k() == 2);
  CHECK(is_alternating_cycle(n, *c));
  std::vector<VertexId> src = c->sources, hyb = c->hybrids;
  std::sort(src.begin(), src.end());
  std::sort(hyb.begin(), hyb.end());
  CHECK(src == std::vector<VertexId>{0, 1});
  CHECK(hyb == std::vector<VertexId>{2, 3});
}

TEST_CASE("the triangle-of-hybrids fixture") {
  const Network n = fx::triangle_of_hybrids();
  CHECK(n.root_count() == 1);
  CHECK(h_tilde(n) == 3);
  const auto c = find_alternating_cycle(n);
  REQUIRE(c.has_value());
  CHECK(c->k() >= 1);
  CHECK(c->k() <= 3);
  CHECK(is_alternating_cycle(n, *c));
  // minimal common ancestors stay unique here
  for (std::size_t x = 0; x < 3; ++x) {
    for (std::size_t y = x + 1; y < 3; ++y) CHECK(brute_force_minimal_common_ancestors(n, x, y).size() == 1);
  }
}

TEST_CASE("trees and arboreal networks") {
  const Network c = cherry();
  CHECK(h_tilde(c) == 0);
  CHECK(is_arboreal(c));
  CHECK_FALSE(find_alternating_cycle(c).has_value());
  CHECK(shared_ancestry_graph(c) == UGraph::complete(c.taxa()));
  const Network r = *arboreal_representation(fx::g6());
  CHECK(is_arboreal(r));
  CHECK(h_tilde(r) == 1);
  CHECK_FALSE(find_alternating_cycle(r).has_value());
}

TEST_CASE("clusters") {
  const Network n = *arboreal_representation(fx::g6());
  const TaxonSet& t = n.taxa();
  CHECK(n.cluster(n.leaf_of(0)) == TaxonSubset::singleton(0));
  const VertexId h = n.hybrids().front();
  CHECK(n.cluster(h) == t.subset_of({"3", "4"}));
  for (VertexId v = 0; v < n.vertex_count(); ++v) CHECK(n.cluster(v) == oracle::leaves_below(n, v));
  CHECK(cherry().cluster(0) == cherry().taxa().all());
}

TEST_CASE("least common ancestors") {
  const Network c = cherry();
  CHECK(lca(c, "x", "y") == VertexId{0});
  const Network n = *arboreal_representation(fx::g6());
  CHECK_FALSE(lca(n, "1", "5").has_value());
  const auto h = lca(n, "3", "4");
  REQUIRE(h.has_value());
  CHECK(n.is_hybrid(*h));
  CHECK_THROWS_AS(lca(fx::two_root_hybrids(), 0, 1), Error);
  CHECK_THROWS_AS(lca(c, "x", "q"), Error);
}

TEST_CASE("lca agrees with brute force on random arboreal networks") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    GenParams p;
    p.seed = seed;
    p.leaf_max = 9;
    const Network n = random_arboreal_network(p);
    for (std::size_t x = 0; x < n.taxa().size(); ++x) {
      for (std::size_t y = x + 1; y < n.taxa().size(); ++y) {
        const auto brute = brute_force_minimal_common_ancestors(n, x, y);
        const auto got = lca(n, x, y);
        CHECK(brute.size() <= 1);
        CHECK(got.has_value() == (brute.size() == 1));
        if (got && brute.size() == 1) CHECK(*got == brute.front());
      }
    }
  }
}

TEST_CASE("shared ancestry graph agrees with reachability") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    GenParams p;
    p.seed = seed;
    p.hybrid_bias = 0.5;
    const Network n = random_network(p);
    CHECK(shared_ancestry_graph(n) == UGraph(n.taxa(), oracle::shared_ancestry_pairs(n)));
  }
}

TEST_CASE("restriction") {
  const Network n = fx::two_root_hybrids();
  CHECK(restrict(n, n.taxa().all()) == n);
  const Network r = restrict(n, fx::sub(n.taxa(), {"1", "2", "3", "4"}));
  CHECK(r.root_count() == 1);
  CHECK(r.hybrids().empty());
  CHECK(r.vertex_count() == 7);
  const auto a = lca(r, "1", "2");
  const auto b = lca(r, "3", "4");
  REQUIRE(a.has_value());
  REQUIRE(b.has_value());
  CHECK(*a != *b);
  CHECK(r.cluster(*a) == r.taxa().subset_of({"1", "2"}));
  CHECK(r.cluster(*b) == r.taxa().subset_of({"3", "4"}));
  const Network pair = restrict(fx::seven_taxon_network().net(), fx::sub(TaxonSet::numbered(7), {"4", "5"}));
  CHECK(pair.vertex_count() == 3);
  CHECK_THROWS_AS(restrict(n, TaxonSubset::singleton(0)), Error);
}

TEST_CASE("restriction keeps the networks consistent with induced ancestry") {
  // on arboreal inputs the restricted shared ancestry graph is the induced one
  Rng rng(7);
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    GenParams p;
    p.seed = seed;
    p.leaf_min = 3;
    const Network n = random_arboreal_network(p);
    std::uint64_t m = 0;
    while (std::popcount(m) < 2) m = rng.next() & n.taxa().all().bits();
    const TaxonSubset y(m);
    const UGraph induced = induced_subgraph(shared_ancestry_graph(n), y);
    if (!is_connected(induced)) continue;
    const Network r = restrict(n, y);
    CHECK(shared_ancestry_graph(r) == induced);
  }
}

TEST_CASE("root removal") {
  const Network n = *arboreal_representation(fx::g6());
  for (VertexId r : n.roots()) {
    const auto m = remove_root(n, r);
    REQUIRE(m.has_value());
    CHECK(m->root_count() == 1);
    CHECK(m->taxa().size() == 4);
  }
  CHECK_THROWS_AS(remove_root(n, n.leaf_of(0)), Error);
  CHECK_THROWS_AS(remove_root(cherry(), 0), Error);
  // a middle root whose removal splits the other two components
  const UGraph star = fx::graph(5, {{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "5"}});
  const Network p = *arboreal_representation(star);
  std::size_t none = 0;
  for (VertexId r : p.roots()) none += !remove_root(p, r).has_value();
  CHECK(none >= 1);
  // some root can always be dropped from an arboreal network
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    GenParams q;
    q.seed = seed;
    q.root_min = 2;
    q.leaf_min = 3;
    const Network a = random_arboreal_network(q);
    bool any = false;
    for (VertexId r : a.roots()) any = any || remove_root(a, r).has_value();
    CHECK(any);
  }
}

TEST_CASE("generator") {
  GenParams p;
  p.leaf_min = p.leaf_max = 2;
  const Network c = random_arboreal_network(p);
  CHECK(c.vertex_count() == 3);
  p = GenParams{};
  p.seed = 99;
  CHECK(random_arboreal_network(p) == random_arboreal_network(p));
  std::size_t multi = 0;
  for (std::uint64_t seed = 0; seed < 2000; ++seed) {
    GenParams q;
    q.seed = seed;
    const Network n = random_arboreal_network(q);
    CHECK(is_arboreal(n));
    CHECK(n.taxa().size() >= 2);
    CHECK(n.taxa().size() <= 8);
    multi += n.root_count() > 1;
  }
  CHECK(multi > 0);
  p.hybrid_bias = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    p.seed = seed;
    CHECK(is_arboreal(random_network(p)));
  }
  GenParams bad;
  bad.leaf_min = 9;
  bad.leaf_max = 3;
  CHECK_THROWS_AS(bad.check(), Error);
}

TEST_CASE("two roots sharing two hybrids turn up among small random networks") {
  bool seen = false;
  for (std::uint64_t seed = 0; seed < 5000 && !seen; ++seed) {
    GenParams p;
    p.seed = seed;
    p.leaf_max = 6;
    p.root_min = p.root_max = 2;
    p.hybrid_bias = 0.7;
    const Network n = random_network(p);
    const auto roots = n.roots();
    std::size_t shared = 0;
    for (VertexId h : n.hybrids()) {
      const auto& ps = n.parents(h);
      shared += ps.size() == 2 && n.is_root(ps[0]) && n.is_root(ps[1]);
    }
    seen = roots.size() == 2 && shared == 2;
  }
  CHECK(seen);
}

}  // TEST_SUITE
