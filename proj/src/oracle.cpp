#include "arboreal/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "arboreal/error.hpp"
#include "digraph_edit.hpp"

namespace arboreal {

void GenParams::check() const {
  if (leaf_min < 2 || leaf_min > leaf_max) throw Error(ErrorCode::InvalidArgument, "leaf range must be within [2, max]");
  if (leaf_max > TaxonSubset::kCapacity) throw Error(ErrorCode::TooLarge, "too many leaves requested");
  if (root_min < 1 || root_min > root_max) throw Error(ErrorCode::InvalidArgument, "root range must be within [1, max]");
  if (symbol_count < 1 || symbol_count > 26) throw Error(ErrorCode::InvalidArgument, "symbol count must be in [1, 26]");
  if (!(hybrid_bias >= 0.0 && hybrid_bias <= 1.0)) throw Error(ErrorCode::InvalidArgument, "hybrid_bias must be in [0, 1]");
}

std::size_t Rng::between(std::size_t lo, std::size_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return lo + engine_();
  const std::uint64_t threshold = (0 - span) % span;
  for (;;) {
    const std::uint64_t r = engine_();
    if (r >= threshold) return lo + static_cast<std::size_t>(r % span);
  }
}

namespace {

using detail::DigraphEdit;

// Random rooted tree with `tips` tips added to `edit`; returns the tips.
std::vector<VertexId> grow_tree(DigraphEdit& edit, std::size_t tips, Rng& rng) {
  const VertexId root = edit.add_vertex();
  std::vector<VertexId> tip{edit.add_vertex(), edit.add_vertex()};
  std::vector<VertexId> inner{root};
  std::vector<Arc> arcs{{root, tip[0]}, {root, tip[1]}};
  edit.add_arc(root, tip[0]);
  edit.add_arc(root, tip[1]);
  while (tip.size() < tips) {
    const VertexId t = edit.add_vertex();
    if (rng.chance(0.5)) {
      const std::size_t i = rng.below(arcs.size());
      const Arc a = arcs[i];
      const VertexId s = edit.add_vertex();
      edit.remove_arc(a.tail, a.head);
      edit.add_arc(a.tail, s);
      edit.add_arc(s, a.head);
      edit.add_arc(s, t);
      arcs[i] = {a.tail, s};
      arcs.push_back({s, a.head});
      arcs.push_back({s, t});
      inner.push_back(s);
    } else {
      const VertexId w = inner[rng.below(inner.size())];
      edit.add_arc(w, t);
      arcs.push_back({w, t});
    }
    tip.push_back(t);
  }
  return tip;
}

Network shuffled(const DigraphEdit& edit, std::size_t leaves, Rng& rng) {
  const Network built = edit.build(TaxonSet::numbered(leaves)).net;
  std::vector<VertexId> perm(built.vertex_count());
  std::iota(perm.begin(), perm.end(), VertexId{0});
  rng.shuffle(perm);
  std::vector<Arc> arcs;
  for (const auto& a : built.arcs()) arcs.push_back({perm[a.tail], perm[a.head]});
  std::map<VertexId, std::string> names;
  for (const auto& [v, s] : leaf_names(built)) names[perm[v]] = s;
  return Network::validate(built.vertex_count(), std::move(arcs), names, built.taxa());
}

std::optional<Network> try_arboreal(const GenParams& p, Rng& rng) {
  const std::size_t leaves = rng.between(p.leaf_min, p.leaf_max);
  const std::size_t root_cap = std::min(p.root_max, leaves - 1);
  if (root_cap < p.root_min) return std::nullopt;
  const std::size_t roots = rng.between(p.root_min, root_cap);

  // Component 0 gets at least two leaves, the others at least one.
  std::vector<std::size_t> share(roots, 1);
  share[0] = 2;
  for (std::size_t extra = leaves - roots - 1; extra > 0; --extra) ++share[rng.below(roots)];

  DigraphEdit edit(TaxonSet::numbered(leaves));
  std::vector<VertexId> leaf_vertices = grow_tree(edit, share[0], rng);
  for (std::size_t c = 1; c < roots; ++c) {
    std::vector<VertexId> tips = grow_tree(edit, share[c] + 1, rng);
    const std::size_t pick = rng.below(tips.size());
    const VertexId connector = tips[pick];
    const VertexId above = *edit.at(connector).parents.begin();
    tips.erase(tips.begin() + static_cast<std::ptrdiff_t>(pick));

    // Attachment points in what was built so far: arcs and non-root
    // internal vertices.
    std::vector<Arc> arcs;
    std::vector<VertexId> inner;
    edit.remove_vertex(connector);
    for (VertexId v : leaf_vertices) {
      for (VertexId q : edit.at(v).parents) arcs.push_back({q, v});
    }
    // The rest of the existing part, found by walking up from its leaves.
    std::set<VertexId> seen(leaf_vertices.begin(), leaf_vertices.end());
    std::vector<VertexId> stack(leaf_vertices.begin(), leaf_vertices.end());
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      for (VertexId q : edit.at(v).parents) {
        if (seen.insert(q).second) {
          stack.push_back(q);
          if (!edit.at(q).parents.empty()) inner.push_back(q);
          for (VertexId g : edit.at(q).parents) arcs.push_back({g, q});
        }
      }
    }
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
    std::sort(inner.begin(), inner.end());
    const std::size_t choice = rng.below(arcs.size() + inner.size());
    if (choice < arcs.size()) {
      const Arc a = arcs[choice];
      const VertexId h = edit.add_vertex();
      edit.remove_arc(a.tail, a.head);
      edit.add_arc(a.tail, h);
      edit.add_arc(h, a.head);
      edit.add_arc(above, h);
    } else {
      edit.add_arc(above, inner[choice - arcs.size()]);
    }
    leaf_vertices.insert(leaf_vertices.end(), tips.begin(), tips.end());
  }
  std::vector<std::size_t> taxon(leaves);
  std::iota(taxon.begin(), taxon.end(), std::size_t{0});
  rng.shuffle(taxon);
  for (std::size_t i = 0; i < leaves; ++i) edit.at(leaf_vertices[i]).taxon = taxon[i];
  try {
    return shuffled(edit, leaves, rng);
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace

Network random_arboreal_network(const GenParams& p) {
  p.check();
  Rng rng(p.seed);
  for (std::size_t attempt = 0; attempt < kGenerationRetries; ++attempt) {
    if (auto n = try_arboreal(p, rng); n && is_arboreal(*n)) return *n;
  }
  throw Error(ErrorCode::GenerationExhausted, "no arboreal network after " + std::to_string(kGenerationRetries) + " attempts");
}

LabelledNetwork random_labelled_arboreal_network(const GenParams& p) {
  Network net = random_arboreal_network(p);
  Rng rng(p.seed ^ 0x9e3779b97f4a7c15ULL);
  std::map<VertexId, std::string> labels;
  for (VertexId v = 0; v < net.vertex_count(); ++v) {
    if (net.outdegree(v) >= 2) labels[v] = std::string(1, static_cast<char>('a' + rng.below(p.symbol_count)));
  }
  return LabelledNetwork(std::move(net), std::move(labels));
}

Network random_network(const GenParams& p) {
  const Network base = random_arboreal_network(p);
  Rng rng(p.seed ^ 0xc2b2ae3d27d4eb4fULL);
  auto edit = DigraphEdit::from(base);
  const std::size_t cap = 2 * base.taxa().size();
  for (std::size_t added = 0, tries = 0; added < cap && tries < 64 * cap && rng.chance(p.hybrid_bias); ++tries) {
    const std::size_t slots = edit.slots();
    const VertexId u = rng.below(slots);
    const VertexId t = rng.below(slots);
    if (u == t || edit.at(u).children.empty() || edit.at(u).children.count(t)) continue;
    // t must not be an ancestor of u.
    std::vector<VertexId> stack{u};
    std::set<VertexId> up{u};
    bool cyclic = false;
    while (!stack.empty() && !cyclic) {
      const VertexId v = stack.back();
      stack.pop_back();
      for (VertexId q : edit.at(v).parents) {
        if (q == t) cyclic = true;
        if (up.insert(q).second) stack.push_back(q);
      }
    }
    if (cyclic) continue;
    if (edit.at(t).children.empty()) {
      const VertexId parent = *edit.at(t).parents.begin();
      if (parent == u) continue;
      const VertexId s = edit.add_vertex();
      edit.remove_arc(parent, t);
      edit.add_arc(parent, s);
      edit.add_arc(s, t);
      edit.add_arc(u, s);
    } else {
      edit.add_arc(u, t);
    }
    ++added;
  }
  return edit.build(base.taxa()).net;
}

UGraph random_connected_graph(std::size_t n, Rng& rng) {
  const TaxonSet taxa = TaxonSet::numbered(n);
  for (std::size_t attempt = 0; attempt < kGenerationRetries; ++attempt) {
    const double p = 0.2 + 0.6 * rng.real();
    std::vector<Edge> edges;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (rng.chance(p)) edges.emplace_back(a, b);
    UGraph g(taxa, edges);
    if (is_connected(g)) return g;
  }
  throw Error(ErrorCode::GenerationExhausted, "no connected graph drawn");
}

std::vector<UGraph> enumerate_connected_graphs(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "graphs need at least one vertex");
  if (n > 6) throw Error(ErrorCode::TooLarge, "exhaustive enumeration is limited to 6 vertices");
  const TaxonSet taxa = TaxonSet::numbered(n);
  std::vector<Edge> pairs;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  std::vector<UGraph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if ((mask >> i) & 1U) edges.push_back(pairs[i]);
    UGraph g(taxa, edges);
    if (is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

std::vector<LabelledNetwork> enumerate_labelled_trees(const TaxonSet& taxa, const std::vector<std::string>& symbols) {
  const std::size_t n = taxa.size();
  if (n > 4 || symbols.size() > 3) throw Error(ErrorCode::TooLarge, "tree enumeration is limited to 4 taxa and 3 symbols");
  if (n < 2 || symbols.empty()) throw Error(ErrorCode::InvalidArgument, "need at least two taxa and one symbol");
  std::vector<TaxonSubset> candidates;
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n) - 1; ++bits) {
    if (TaxonSubset(bits).size() >= 2) candidates.emplace_back(bits);
  }
  const auto compatible = [](TaxonSubset a, TaxonSubset b) {
    const TaxonSubset c = a & b;
    return c.empty() || c == a || c == b;
  };
  std::vector<LabelledNetwork> out;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << candidates.size()); ++pick) {
    std::vector<TaxonSubset> clusters{taxa.all()};
    for (std::size_t i = 0; i < candidates.size(); ++i)
      if ((pick >> i) & 1U) clusters.push_back(candidates[i]);
    bool ok = true;
    for (std::size_t i = 0; i < clusters.size() && ok; ++i)
      for (std::size_t j = i + 1; j < clusters.size() && ok; ++j) ok = compatible(clusters[i], clusters[j]);
    if (!ok) continue;
    const std::size_t internal = clusters.size();
    for (std::size_t x = 0; x < n; ++x) clusters.push_back(TaxonSubset::singleton(x));
    // Parent of each cluster: the smallest cluster strictly containing it.
    std::vector<Arc> arcs;
    std::map<VertexId, std::string> leaves;
    for (std::size_t c = 1; c < clusters.size(); ++c) {
      std::size_t parent = 0;
      for (std::size_t q = 0; q < internal; ++q)
        if (clusters[c].is_proper_subset_of(clusters[q]) && clusters[q].size() < clusters[parent].size()) parent = q;
      arcs.push_back({parent, c});
      if (c >= internal) leaves[c] = taxa.name(c - internal);
    }
    const Network net = Network::validate(clusters.size(), arcs, leaves, taxa);
    std::size_t labellings = 1;
    for (std::size_t i = 0; i < internal; ++i) labellings *= symbols.size();
    for (std::size_t code = 0; code < labellings; ++code) {
      std::map<VertexId, std::string> labels;
      std::size_t rest = code;
      for (std::size_t i = 0; i < internal; ++i) {
        labels[i] = symbols[rest % symbols.size()];
        rest /= symbols.size();
      }
      out.emplace_back(net, std::move(labels));
    }
  }
  return out;
}

std::vector<VertexId> brute_force_minimal_common_ancestors(const Network& n, std::size_t x, std::size_t y) {
  const std::size_t count = n.vertex_count();
  const auto reaches = [&](VertexId from, VertexId to) {
    std::vector<bool> seen(count, false);
    std::vector<VertexId> stack{from};
    seen[from] = true;
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      if (v == to) return true;
      for (VertexId c : n.children(v)) {
        if (!seen[c]) {
          seen[c] = true;
          stack.push_back(c);
        }
      }
    }
    return false;
  };
  const VertexId lx = n.leaf_of(x);
  const VertexId ly = n.leaf_of(y);
  std::vector<bool> common(count);
  for (VertexId v = 0; v < count; ++v) common[v] = reaches(v, lx) && reaches(v, ly);
  std::vector<VertexId> out;
  for (VertexId v = 0; v < count; ++v) {
    if (!common[v]) continue;
    const auto& ch = n.children(v);
    if (std::none_of(ch.begin(), ch.end(), [&](VertexId c) { return common[c]; })) out.push_back(v);
  }
  return out;
}

std::vector<LabelledNetwork> uncollapsed_variants(const LabelledNetwork& ln) {
  const Network& net = ln.net();
  std::vector<LabelledNetwork> out;
  const auto finish = [&](DigraphEdit& edit, std::map<VertexId, std::string> labels) {
    auto built = edit.build(net.taxa());
    std::map<VertexId, std::string> relabelled;
    for (const auto& [v, s] : labels) relabelled[*built.new_id[v]] = s;
    out.emplace_back(std::move(built.net), std::move(relabelled));
  };
  for (VertexId v = 0; v < net.vertex_count(); ++v) {
    if (net.outdegree(v) < 3) continue;
    auto edit = DigraphEdit::from(net);
    const VertexId w = edit.add_vertex();
    const VertexId a = net.children(v)[0];
    const VertexId b = net.children(v)[1];
    edit.remove_arc(v, a);
    edit.remove_arc(v, b);
    edit.add_arc(v, w);
    edit.add_arc(w, a);
    edit.add_arc(w, b);
    auto labels = ln.labels();
    labels[w] = ln.label(v);
    finish(edit, std::move(labels));
    break;
  }
  for (VertexId h : net.hybrids()) {
    if (net.outdegree(h) < 2) continue;
    auto edit = DigraphEdit::from(net);
    const VertexId w = edit.add_vertex();
    for (VertexId c : net.children(h)) {
      edit.remove_arc(h, c);
      edit.add_arc(w, c);
    }
    edit.add_arc(h, w);
    auto labels = ln.labels();
    labels[w] = ln.label(h);
    labels.erase(h);
    finish(edit, std::move(labels));
    break;
  }
  return out;
}

}  // namespace arboreal
