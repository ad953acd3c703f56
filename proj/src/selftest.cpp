#include "arboreal/selftest.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <future>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

#include "arboreal/builder.hpp"
#include "arboreal/cliques.hpp"
#include "arboreal/error.hpp"
#include "arboreal/graph.hpp"
#include "arboreal/network.hpp"
#include "arboreal/oracle.hpp"
#include "arboreal/symbolic.hpp"

namespace arboreal {

namespace {

using Clock = std::chrono::steady_clock;

struct Ctx {
  CriterionResult& result;
  std::optional<Clock::time_point> deadline;
  std::uint64_t seed;
  std::size_t failures = 0;

  bool out_of_time() {
    if (deadline && Clock::now() > *deadline) {
      result.skipped = true;
      return true;
    }
    return false;
  }
  void fail(const std::string& what) {
    if (failures++ == 0) result.detail = what;
  }
  void count() { ++result.cases; }
};

std::string describe(const UGraph& g) {
  std::string s = "graph on " + std::to_string(g.order()) + " vertices, edges";
  for (auto [a, b] : g.edges()) s += " " + g.taxa().name(a) + g.taxa().name(b);
  return s;
}

std::string describe(const SymbolicMap& d) {
  std::string s = "map";
  for (std::size_t x = 0; x < d.size(); ++x) {
    for (std::size_t y = x + 1; y < d.size(); ++y) {
      const auto v = d.value(x, y);
      s += " " + d.taxa().name(x) + d.taxa().name(y) + "=" + (v ? *v : std::string("-"));
    }
  }
  return s;
}

// Pairs of distinct vertices numbered 0..n(n-1)/2-1, for edge bitmasks.
std::uint32_t edge_mask(const UGraph& g, TaxonSubset s) {
  std::uint32_t mask = 0;
  std::size_t bit = 0;
  for (std::size_t a = 0; a < g.order(); ++a) {
    for (std::size_t b = a + 1; b < g.order(); ++b, ++bit) {
      if (g.adjacent(a, b) && s.contains(a) && s.contains(b)) mask |= std::uint32_t{1} << bit;
    }
  }
  return mask;
}

std::vector<TaxonSubset> all_cliques(const UGraph& g) {
  std::vector<TaxonSubset> out;
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << g.order()); ++bits) {
    const TaxonSubset s(bits);
    if (s.size() >= 2 && g.is_clique(s)) out.push_back(s);
  }
  return out;
}

bool closure_cover_acyclic(const UGraph& g) {
  const CliqueFamily k = maximal_cliques(g);
  if (k.empty()) return true;
  return underlying_acyclic(cover_digraph(intersection_closure(k)));
}

void criterion_1(Ctx& ctx) {
  std::size_t ptolemaic = 0;
  auto check = [&](const UGraph& g) {
    ctx.count();
    const bool a = is_ptolemaic(g);
    const bool b = ptolemy_inequality_holds(g);
    const bool c = closure_cover_acyclic(g);
    ptolemaic += a;
    if (a != b || b != c) {
      ctx.fail(describe(g) + ": is_ptolemaic=" + std::to_string(a) + " ptolemy=" + std::to_string(b) +
               " cover_acyclic=" + std::to_string(c));
    }
  };
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& g : enumerate_connected_graphs(n)) {
      if (ctx.out_of_time()) return;
      check(g);
    }
  }
  Rng rng(ctx.seed);
  for (std::size_t i = 0; i < 10000; ++i) {
    if (ctx.out_of_time()) return;
    const std::size_t n = rng.between(6, 8);
    check(random_connected_graph(n, rng));
  }
  ctx.result.detail += (ctx.result.detail.empty() ? "" : "; ") + std::to_string(ptolemaic) + " Ptolemaic, " +
                       std::to_string(ctx.result.cases - ptolemaic) + " not";
}

// Every cover of g drawn from `cliques` with at most `limit` members that is
// irredundant in the order it was found. Any cover of size <= limit contains
// one of these.
std::set<std::vector<std::size_t>> small_covers(const UGraph& g, const std::vector<TaxonSubset>& cliques,
                                                std::size_t limit) {
  std::vector<std::uint32_t> masks;
  for (auto c : cliques) masks.push_back(edge_mask(g, c));
  const std::uint32_t all = edge_mask(g, g.taxa().all());
  std::set<std::vector<std::size_t>> found;
  std::vector<std::size_t> chosen;
  std::function<void(std::uint32_t)> go = [&](std::uint32_t covered) {
    if (covered == all) {
      auto f = chosen;
      std::sort(f.begin(), f.end());
      found.insert(f);
      return;
    }
    if (chosen.size() == limit) return;
    const std::uint32_t first = (all & ~covered) & (~(all & ~covered) + 1);
    for (std::size_t i = 0; i < masks.size(); ++i) {
      if (masks[i] & first) {
        chosen.push_back(i);
        go(covered | masks[i]);
        chosen.pop_back();
      }
    }
  };
  go(0);
  return found;
}

void criterion_2(Ctx& ctx) {
  for (std::size_t n = 2; n <= 6; ++n) {
    for (const auto& g : enumerate_connected_graphs(n)) {
      if (ctx.out_of_time()) return;
      if (!is_ptolemaic(g)) continue;
      ctx.count();
      const CliqueFamily k = maximal_cliques(g);
      const auto ecc = ecc_min(g);
      if (ecc.size != k.size() || ecc.cover.size() != ecc.size || !is_edge_clique_cover(g, ecc.cover)) {
        ctx.fail(describe(g) + ": ecc_min=" + std::to_string(ecc.size) + " but |K|=" + std::to_string(k.size()));
        continue;
      }
      const auto cliques = all_cliques(g);
      const auto covers = small_covers(g, cliques, k.size());
      std::vector<std::size_t> k_index;
      for (auto s : k) k_index.push_back(static_cast<std::size_t>(std::find(cliques.begin(), cliques.end(), s) - cliques.begin()));
      std::sort(k_index.begin(), k_index.end());
      if (covers.size() != 1 || *covers.begin() != k_index) {
        ctx.fail(describe(g) + ": " + std::to_string(covers.size()) + " covers of size <= |K| found");
      }
    }
  }
}

void for_each_antichain_cover(const UGraph& g, const std::function<void(const CliqueFamily&)>& f) {
  const auto cliques = all_cliques(g);
  std::vector<std::uint32_t> masks;
  for (auto c : cliques) masks.push_back(edge_mask(g, c));
  const std::uint32_t all = edge_mask(g, g.taxa().all());
  std::vector<TaxonSubset> chosen;
  std::function<void(std::size_t, std::uint32_t)> go = [&](std::size_t from, std::uint32_t covered) {
    if (from == cliques.size()) {
      if (covered == all) f(CliqueFamily(g.taxa(), chosen));
      return;
    }
    go(from + 1, covered);
    const TaxonSubset c = cliques[from];
    for (auto s : chosen) {
      if (s.is_subset_of(c) || c.is_subset_of(s)) return;
    }
    chosen.push_back(c);
    go(from + 1, covered | masks[from]);
    chosen.pop_back();
  };
  go(0, 0);
}

// Taxa sharing an ancestor, computed from per-leaf ancestor sets.
UGraph ancestry_by_reachability(const Network& n) {
  std::vector<std::vector<bool>> up;
  for (std::size_t t = 0; t < n.taxa().size(); ++t) up.push_back(n.ancestors(n.leaf_of(t)));
  std::vector<Edge> edges;
  for (std::size_t x = 0; x < up.size(); ++x) {
    for (std::size_t y = x + 1; y < up.size(); ++y) {
      for (VertexId v = 0; v < n.vertex_count(); ++v) {
        if (up[x][v] && up[y][v]) {
          edges.emplace_back(x, y);
          break;
        }
      }
    }
  }
  return UGraph(n.taxa(), edges);
}

CliqueFamily root_clusters(const Network& n) {
  std::vector<TaxonSubset> s;
  for (VertexId r : n.roots()) s.push_back(n.cluster(r));
  return CliqueFamily(n.taxa(), s);
}

void criterion_3(Ctx& ctx) {
  for (std::size_t n = 2; n <= 5; ++n) {
    for (const auto& g : enumerate_connected_graphs(n)) {
      if (ctx.out_of_time()) return;
      for_each_antichain_cover(g, [&](const CliqueFamily& k) {
        ctx.count();
        const Network net = build_network_from_cover(g, k);
        if (!(shared_ancestry_graph(net) == g) || !(ancestry_by_reachability(net) == g)) {
          ctx.fail(describe(g) + ": shared ancestry graph differs for a cover of size " + std::to_string(k.size()));
        } else if (!(root_clusters(net) == k)) {
          ctx.fail(describe(g) + ": root clusters differ from the cover");
        }
      });
    }
  }
}

bool undirected_tree(const Network& n) {
  std::vector<std::size_t> parent(n.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t v) {
    return parent[v] == v ? v : parent[v] = find(parent[v]);
  };
  for (const auto& a : n.arcs()) {
    const auto x = find(a.tail), y = find(a.head);
    if (x == y) return false;
    parent[x] = y;
  }
  return true;
}

void criterion_4(Ctx& ctx) {
  static constexpr std::array<double, 4> kBias = {0.0, 0.3, 0.6, 0.9};
  std::size_t arboreal_seen = 0;
  for (std::size_t i = 0; i < 10000; ++i) {
    if (ctx.out_of_time()) return;
    GenParams p;
    p.leaf_min = 2;
    p.leaf_max = 8;
    p.root_min = 1;
    p.root_max = 3;
    p.hybrid_bias = kBias[i % kBias.size()];
    p.seed = ctx.seed * 1000003 + i;
    const Network n = random_network(p);
    ctx.count();
    const std::size_t h = h_tilde(n);
    const std::size_t r = n.root_count();
    const bool tight = h + 1 == r;
    const bool arb = is_arboreal(n);
    const auto cycle = find_alternating_cycle(n);
    arboreal_seen += arb;
    const std::string tag = "seed " + std::to_string(p.seed) + ": ";
    if (h + 1 < r) ctx.fail(tag + "h~ < r - 1");
    if (tight != arb || arb == cycle.has_value() || arb != undirected_tree(n)) {
      ctx.fail(tag + "h~=" + std::to_string(h) + " r=" + std::to_string(r) + " arboreal=" + std::to_string(arb) +
               " cycle=" + std::to_string(cycle.has_value()));
    }
    if (cycle && !is_alternating_cycle(n, *cycle)) ctx.fail(tag + "returned alternating cycle does not re-validate");
  }
  if (arboreal_seen == 0 || arboreal_seen == ctx.result.cases) ctx.fail("sample did not cover both outcomes");
  ctx.result.detail += (ctx.result.detail.empty() ? "" : "; ") + std::to_string(arboreal_seen) + " arboreal, " +
                       std::to_string(ctx.result.cases - arboreal_seen) + " not";
}

void criterion_5(Ctx& ctx) {
  for (std::size_t n = 2; n <= 6; ++n) {
    for (const auto& g : enumerate_connected_graphs(n)) {
      if (ctx.out_of_time()) return;
      ctx.count();
      const bool pt = is_ptolemaic(g);
      const auto rep = arboreal_representation(g);
      if (pt != rep.has_value()) {
        ctx.fail(describe(g) + ": is_ptolemaic=" + std::to_string(pt) + " representation=" +
                 std::to_string(rep.has_value()));
        continue;
      }
      if (!rep) continue;
      if (!is_arboreal(*rep) || !undirected_tree(*rep)) ctx.fail(describe(g) + ": representation not arboreal");
      if (rep->root_count() != maximal_cliques(g).size()) ctx.fail(describe(g) + ": root count differs from |K|");
      if (!(ancestry_by_reachability(*rep) == g)) ctx.fail(describe(g) + ": shared ancestry graph differs");
    }
  }
}

void criterion_6(Ctx& ctx) {
  for (std::size_t i = 0; i < 1000; ++i) {
    if (ctx.out_of_time()) return;
    GenParams p;
    p.leaf_min = 2;
    p.leaf_max = 12;
    p.root_min = 1;
    p.root_max = 4;
    p.symbol_count = 1 + i % 4;
    p.seed = ctx.seed * 7919 + i;
    const LabelledNetwork ln = random_labelled_arboreal_network(p);
    ctx.count();
    const SymbolicMap d = evaluate_map(ln);
    const std::string tag = "seed " + std::to_string(p.seed) + ": ";
    if (auto v = check_arboreal_conditions(d)) {
      ctx.fail(tag + "evaluated map fails " + std::string(to_string(v->kind)));
      continue;
    }
    const auto out = explain(d);
    const auto* e = std::get_if<LabelledNetwork>(&out);
    if (!e) {
      ctx.fail(tag + "explain returned a violation");
    } else if (!(evaluate_map(*e) == d)) {
      ctx.fail(tag + "explanation evaluates to a different map");
    }
  }
}

void criterion_7(Ctx& ctx) {
  const std::vector<std::string> alphabet = {"a", "b"};
  std::size_t explained = 0;
  auto check = [&](const SymbolicMap& d) {
    ctx.count();
    const bool ok = !check_arboreal_conditions(d).has_value();
    const auto e = construct_explanation(d);
    explained += e.has_value();
    if (ok != e.has_value()) {
      ctx.fail(describe(d) + ": conditions=" + std::to_string(ok) + " explanation=" + std::to_string(e.has_value()));
    } else if (e && !(evaluate_map(*e) == d)) {
      ctx.fail(describe(d) + ": explanation does not round-trip");
    }
  };
  // Every map on up to five taxa, then random ones.
  for (std::size_t n = 2; n <= 5; ++n) {
    const TaxonSet taxa = TaxonSet::numbered(n);
    const std::size_t pairs = n * (n - 1) / 2;
    std::size_t total = 1;
    for (std::size_t i = 0; i < pairs; ++i) total *= 3;
    for (std::size_t code = 0; code < total; ++code) {
      if (ctx.out_of_time()) return;
      std::vector<Symbol> values;
      for (std::size_t i = 0, c = code; i < pairs; ++i, c /= 3) {
        values.push_back(c % 3 == 2 ? Symbol() : Symbol(alphabet[c % 3]));
      }
      check(SymbolicMap(taxa, values, alphabet));
    }
  }
  Rng rng(ctx.seed ^ 0x5bd1e995);
  for (std::size_t i = 0; i < 100000; ++i) {
    if (ctx.out_of_time()) return;
    const std::size_t n = rng.between(2, 5);
    const double blank = rng.real() * 0.6;
    std::vector<Symbol> values;
    for (std::size_t j = 0; j < n * (n - 1) / 2; ++j) {
      values.push_back(rng.chance(blank) ? Symbol() : Symbol(alphabet[rng.below(2)]));
    }
    check(SymbolicMap(TaxonSet::numbered(n), values, alphabet));
  }
  ctx.result.detail += (ctx.result.detail.empty() ? "" : "; ") + std::to_string(explained) + " explained";
}

void criterion_8(Ctx& ctx) {
  const std::vector<std::string> alphabet = {"a", "b"};
  const TaxonSet taxa = TaxonSet::numbered(4);
  std::set<std::vector<Symbol>> explainable;
  for (const auto& t : enumerate_labelled_trees(taxa, alphabet)) {
    const SymbolicMap d = evaluate_map(t);
    std::vector<Symbol> row;
    for (std::size_t x = 0; x < 4; ++x) {
      for (std::size_t y = x + 1; y < 4; ++y) row.push_back(d.value(x, y));
    }
    explainable.insert(row);
  }
  std::size_t successes = 0;
  for (std::size_t code = 0; code < 64; ++code) {
    if (ctx.out_of_time()) return;
    ctx.count();
    std::vector<Symbol> values;
    for (std::size_t i = 0; i < 6; ++i) values.push_back(alphabet[(code >> i) & 1U]);
    const SymbolicMap d(taxa, values, alphabet);
    bool built = false;
    try {
      const LabelledNetwork t = build_ultrametric_tree(d);
      built = true;
      if (!(evaluate_map(t) == d) || t.net().root_count() != 1 || !t.net().hybrids().empty()) {
        ctx.fail(describe(d) + ": built tree does not explain the map");
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotUltrametric && e.code() != ErrorCode::AmbiguousSplit) throw;
    }
    successes += built;
    if (built != (explainable.count(values) > 0)) {
      ctx.fail(describe(d) + ": builder=" + std::to_string(built) + " enumeration=" +
               std::to_string(explainable.count(values)));
    }
  }
  ctx.result.detail += (ctx.result.detail.empty() ? "" : "; ") + std::to_string(successes) + " of 64 ultrametric";
}

void criterion_9(Ctx& ctx) {
  std::size_t perturbed = 0;
  for (std::size_t i = 0; i < 1000; ++i) {
    if (ctx.out_of_time()) return;
    GenParams p;
    p.leaf_min = 2;
    p.leaf_max = 10;
    p.root_min = 1;
    p.root_max = 3;
    p.symbol_count = 1 + i % 4;
    p.seed = ctx.seed * 104729 + i;
    const LabelledNetwork ln = random_labelled_arboreal_network(p);
    ctx.count();
    const std::string tag = "seed " + std::to_string(p.seed) + ": ";
    const SymbolicMap d = evaluate_map(ln);
    const auto out = explain(d);
    const auto* e = std::get_if<LabelledNetwork>(&out);
    if (!e) {
      ctx.fail(tag + "explain returned a violation");
      continue;
    }
    const LabelledNetwork a = make_discriminating(ln);
    const LabelledNetwork b = make_discriminating(*e);
    if (!are_isomorphic(a, b)) ctx.fail(tag + "discriminating forms are not isomorphic");
    if (!(evaluate_map(a) == d) || !(evaluate_map(b) == d)) ctx.fail(tag + "discriminating form changes the map");
    for (const auto* x : {&ln, e, &a, &b}) {
      const bool disc = is_discriminating(*x);
      if (disc != verify_phi_bijection(*x)) ctx.fail(tag + "is_discriminating and the cluster bijection disagree");
    }
    if (!is_discriminating(a) || !is_discriminating(b)) ctx.fail(tag + "normal form is not discriminating");
    for (const auto& v : uncollapsed_variants(a)) {
      ++perturbed;
      if (!(evaluate_map(v) == d)) ctx.fail(tag + "perturbation changes the map");
      const bool disc = is_discriminating(v);
      if (disc || verify_phi_bijection(v)) ctx.fail(tag + "perturbation still passes as discriminating");
      if (!are_isomorphic(make_discriminating(v), a)) ctx.fail(tag + "perturbation does not collapse back");
    }
  }
  ctx.result.detail += (ctx.result.detail.empty() ? "" : "; ") + std::to_string(perturbed) + " perturbations";
}

void criterion_10(Ctx& ctx) {
  const TaxonSet taxa({"x", "y", "z", "t", "u"});
  const std::string dot = "•", ring = "◦";
  const SymbolicMap d = SymbolicMap::from_named(taxa, {{"x", "y", ring},
                                                       {"x", "z", dot},
                                                       {"x", "t", dot},
                                                       {"x", "u", std::nullopt},
                                                       {"y", "z", dot},
                                                       {"y", "t", dot},
                                                       {"y", "u", std::nullopt},
                                                       {"z", "t", dot},
                                                       {"z", "u", std::nullopt},
                                                       {"t", "u", ring}});
  ctx.count();
  const CliqueFamily got = strong_clique_modules(d);
  const CliqueFamily want(taxa, {taxa.subset_of({"x", "y", "z", "t"}), taxa.subset_of({"x", "y"}),
                                 taxa.subset_of({"t", "u"})});
  std::string listed;
  for (auto s : got) listed += " " + taxa.subset_string(s);
  if (!(got == want)) ctx.fail("got" + listed);
  else ctx.result.detail = "strong modules" + listed;
}

void criterion_11(Ctx& ctx) {
  const TaxonSet taxa = TaxonSet::numbered(6);
  const CliqueFamily blocks(taxa, {taxa.subset_of({"1", "2", "3", "4"}), taxa.subset_of({"3", "4", "5", "6"})});
  std::vector<Edge> edges;
  for (auto s : blocks) {
    for (std::size_t a : s) {
      for (std::size_t b : s) {
        if (a < b) edges.emplace_back(a, b);
      }
    }
  }
  const UGraph g6(taxa, edges);
  ctx.count();
  const Network n = build_network_from_cover(g6, blocks);
  const auto hybrids = n.hybrids();
  if (n.root_count() != 2) ctx.fail("two-block cover gives " + std::to_string(n.root_count()) + " roots");
  if (hybrids.size() != 1 || n.cluster(hybrids.front()) != taxa.subset_of({"3", "4"})) {
    ctx.fail("two-block cover does not give a single hybrid above 3 and 4");
  }
  if (!is_arboreal(n)) ctx.fail("two-block network is not arboreal");
  if (!(shared_ancestry_graph(n) == g6)) ctx.fail("two-block network does not represent the graph");

  ctx.count();
  const CliqueFamily five(taxa, {taxa.subset_of({"1", "2", "3"}), taxa.subset_of({"1", "2", "4"}),
                                 taxa.subset_of({"3", "4"}), taxa.subset_of({"3", "5", "6"}),
                                 taxa.subset_of({"4", "5", "6"})});
  const Network m = build_network_from_cover(g6, five);
  if (m.root_count() != 5) ctx.fail("five-set cover gives " + std::to_string(m.root_count()) + " roots");
  if (!(shared_ancestry_graph(m) == g6)) ctx.fail("five-set network does not represent the graph");
  if (ctx.failures == 0) {
    ctx.result.detail = "roots 2 and 5, hybrid cluster 34, h~=" + std::to_string(h_tilde(n)) + " and " +
                        std::to_string(h_tilde(m));
  }
}

struct Criterion {
  const char* title;
  void (*run)(Ctx&);
};

constexpr std::array<Criterion, kCriterionCount> kCriteria = {{
    {"Ptolemaic equivalences on graphs", criterion_1},
    {"ecc equals the number of maximal cliques", criterion_2},
    {"antichain covers are represented exactly", criterion_3},
    {"hybrid count bound and alternating cycles", criterion_4},
    {"arboreal representation exists iff Ptolemaic", criterion_5},
    {"round trip through evaluate and explain", criterion_6},
    {"explain succeeds iff the conditions hold", criterion_7},
    {"ultrametric builder against tree enumeration", criterion_8},
    {"discriminating normal form and cluster bijection", criterion_9},
    {"strong clique-modules of the worked example", criterion_10},
    {"two-block graph cover networks", criterion_11},
}};

CriterionResult run_one(int id, std::optional<Clock::time_point> deadline, std::uint64_t seed) {
  CriterionResult r;
  r.id = id;
  r.title = kCriteria[id - 1].title;
  const auto start = Clock::now();
  Ctx ctx{r, deadline, seed};
  try {
    kCriteria[id - 1].run(ctx);
  } catch (const std::exception& e) {
    ctx.fail(std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (ctx.failures > 1) r.detail += " (" + std::to_string(ctx.failures) + " failures)";
  if (r.skipped) r.detail = "budget exhausted after " + std::to_string(r.cases) + " cases";
  r.passed = !r.skipped && ctx.failures == 0 && r.cases > 0;
  return r;
}

}  // namespace

SelftestOptions SelftestOptions::from_environment() {
  SelftestOptions o;
  if (const char* b = std::getenv("ARBOREAL_SELFTEST_BUDGET")) {
    char* end = nullptr;
    const double v = std::strtod(b, &end);
    if (end != b && v > 0) o.budget_seconds = v;
  }
  return o;
}

std::vector<CriterionResult> run_acceptance(const SelftestOptions& options, std::ostream& out) {
  std::vector<int> ids = options.only;
  if (ids.empty()) {
    ids.resize(kCriterionCount);
    std::iota(ids.begin(), ids.end(), 1);
  }
  for (int id : ids) {
    if (id < 1 || id > kCriterionCount) throw Error(ErrorCode::InvalidArgument, "no criterion " + std::to_string(id));
  }
  std::optional<Clock::time_point> deadline;
  if (options.budget_seconds > 0) {
    deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                  std::chrono::duration<double>(options.budget_seconds));
  }
  std::vector<std::future<CriterionResult>> pending;
  for (int id : ids) {
    pending.push_back(std::async(options.parallel ? std::launch::async : std::launch::deferred, run_one, id,
                                 deadline, options.seed));
  }
  std::vector<CriterionResult> results;
  for (auto& f : pending) {
    CriterionResult r = f.get();
    out << "criterion " << std::setw(2) << r.id << ' ' << (r.passed ? "PASS" : r.skipped ? "SKIP" : "FAIL") << "  "
        << r.title << "  [" << r.cases << " cases, " << std::fixed << std::setprecision(2) << r.seconds << " s]";
    if (!r.detail.empty()) out << "  " << r.detail;
    out << std::endl;
    results.push_back(std::move(r));
  }
  return results;
}

bool all_passed(const std::vector<CriterionResult>& results) {
  return !results.empty() &&
         std::all_of(results.begin(), results.end(), [](const CriterionResult& r) { return r.passed; });
}

}  // namespace arboreal
