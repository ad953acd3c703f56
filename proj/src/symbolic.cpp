#include "arboreal/symbolic.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "arboreal/builder.hpp"
#include "arboreal/error.hpp"
#include "digraph_edit.hpp"

namespace arboreal {

namespace {

void check_symbol_name(const std::string& s) {
  if (s.empty()) throw Error(ErrorCode::InvalidArgument, "symbol names must be non-empty");
  if (s == kNoSymbol) throw Error(ErrorCode::InvalidArgument, "the non-symbol cannot be used as a symbol name");
}

}  // namespace

SymbolicMap::SymbolicMap(TaxonSet taxa, const std::vector<Symbol>& values,
                         std::optional<std::vector<std::string>> alphabet)
    : taxa_(std::move(taxa)) {
  const std::size_t n = taxa_.size();
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "a symbolic map needs at least two taxa");
  if (values.size() != n * (n - 1) / 2) {
    throw Error(ErrorCode::InvalidArgument, "expected " + std::to_string(n * (n - 1) / 2) + " pair values, got " +
                                                std::to_string(values.size()));
  }
  std::set<std::string> range;
  for (const auto& v : values) {
    if (v) {
      check_symbol_name(*v);
      range.insert(*v);
    }
  }
  if (alphabet) {
    std::set<std::string> given;
    for (const auto& s : *alphabet) {
      check_symbol_name(s);
      if (!given.insert(s).second) throw Error(ErrorCode::InvalidArgument, "duplicate symbol '" + s + "'");
    }
    for (const auto& s : range) {
      if (!given.count(s)) throw Error(ErrorCode::InvalidArgument, "symbol '" + s + "' is not in the alphabet");
    }
    symbols_ = std::move(*alphabet);
  } else {
    symbols_.assign(range.begin(), range.end());
  }
  std::map<std::string, int> code_of;
  for (std::size_t i = 0; i < symbols_.size(); ++i) code_of[symbols_[i]] = static_cast<int>(i);
  codes_.assign(n * n, -1);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++k) {
      const int c = values[k] ? code_of.at(*values[k]) : -1;
      codes_[i * n + j] = c;
      codes_[j * n + i] = c;
    }
  }
}

SymbolicMap SymbolicMap::from_function(TaxonSet taxa, const std::function<Symbol(std::size_t, std::size_t)>& f,
                                       std::optional<std::vector<std::string>> alphabet) {
  std::vector<Symbol> values;
  for (std::size_t i = 0; i < taxa.size(); ++i)
    for (std::size_t j = i + 1; j < taxa.size(); ++j) values.push_back(f(i, j));
  return SymbolicMap(std::move(taxa), values, std::move(alphabet));
}

SymbolicMap SymbolicMap::from_named(TaxonSet taxa, const std::vector<std::tuple<std::string, std::string, Symbol>>& values,
                                    std::optional<std::vector<std::string>> alphabet) {
  const std::size_t n = taxa.size();
  std::vector<std::optional<Symbol>> table(n * n);
  for (const auto& [a, b, s] : values) {
    std::size_t i = taxa.index_of(a);
    std::size_t j = taxa.index_of(b);
    if (i == j) throw Error(ErrorCode::InvalidArgument, "a pair needs two distinct taxa");
    if (i > j) std::swap(i, j);
    if (table[i * n + j]) throw Error(ErrorCode::InvalidArgument, "pair {" + a + "," + b + "} given twice");
    table[i * n + j] = s;
  }
  return from_function(
      taxa,
      [&](std::size_t i, std::size_t j) -> Symbol {
        const auto& v = table[i * n + j];
        if (!v) {
          throw Error(ErrorCode::InvalidArgument,
                      "pair {" + taxa.name(i) + "," + taxa.name(j) + "} has no value");
        }
        return *v;
      },
      std::move(alphabet));
}

Symbol SymbolicMap::value(std::size_t x, std::size_t y) const {
  if (x >= size() || y >= size()) throw Error(ErrorCode::UnknownTaxon, "taxon out of range");
  if (x == y) throw Error(ErrorCode::InvalidArgument, "a pair needs two distinct taxa");
  const int c = code(x, y);
  if (c < 0) return std::nullopt;
  return symbols_[static_cast<std::size_t>(c)];
}

Symbol SymbolicMap::value(const std::string& x, const std::string& y) const {
  return value(taxa_.index_of(x), taxa_.index_of(y));
}

bool SymbolicMap::operator==(const SymbolicMap& o) const {
  if (!(taxa_ == o.taxa_)) return false;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = i + 1; j < size(); ++j)
      if (value(i, j) != o.value(i, j)) return false;
  return true;
}

LabelledNetwork::LabelledNetwork(Network net, std::map<VertexId, std::string> labels)
    : net_(std::move(net)), labels_(std::move(labels)) {
  for (const auto& [v, s] : labels_) {
    if (v >= net_.vertex_count()) throw Error(ErrorCode::UnknownVertex, "label on missing vertex " + std::to_string(v));
    if (net_.outdegree(v) < 2) {
      throw Error(ErrorCode::InvalidArgument, "vertex " + std::to_string(v) + " has outdegree below 2 but a label");
    }
    check_symbol_name(s);
  }
  for (VertexId v = 0; v < net_.vertex_count(); ++v) {
    if (net_.outdegree(v) >= 2 && !labels_.count(v)) {
      throw Error(ErrorCode::InvalidArgument, "vertex " + std::to_string(v) + " needs a label");
    }
  }
}

const std::string& LabelledNetwork::label(VertexId v) const {
  auto it = labels_.find(v);
  if (it == labels_.end()) throw Error(ErrorCode::UnknownVertex, "vertex " + std::to_string(v) + " has no label");
  return it->second;
}

std::string_view to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::NotConnected: return "NotConnected";
    case ViolationKind::NotPtolemaic: return "NotPtolemaic";
    case ViolationKind::Delta: return "Delta";
    case ViolationKind::Pi: return "Pi";
    case ViolationKind::A4: return "A4";
  }
  return "Unknown";
}

UGraph graph_of_map(const SymbolicMap& d) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j)
      if (d.defined(i, j)) edges.emplace_back(i, j);
  return UGraph(d.taxa(), edges);
}

namespace {

bool distinct(std::initializer_list<std::size_t> xs, std::size_t n) {
  std::set<std::size_t> s;
  for (auto x : xs) {
    if (x >= n || !s.insert(x).second) return false;
  }
  return true;
}

bool is_delta(const SymbolicMap& d, std::size_t x, std::size_t y, std::size_t z) {
  const int a = d.code(x, y), b = d.code(x, z), c = d.code(y, z);
  return a >= 0 && b >= 0 && c >= 0 && a != b && a != c && b != c;
}

// Path x-y-z-u carries one symbol and the complementary path z-x-u-y another.
bool is_pi(const SymbolicMap& d, std::size_t x, std::size_t y, std::size_t z, std::size_t u) {
  const int alpha = d.code(x, y);
  const int beta = d.code(z, x);
  return alpha >= 0 && beta >= 0 && alpha != beta && d.code(y, z) == alpha && d.code(z, u) == alpha &&
         d.code(x, u) == beta && d.code(u, y) == beta;
}

bool is_a4(const SymbolicMap& d, std::size_t x, std::size_t y, std::size_t z, std::size_t u) {
  if (d.defined(z, u)) return false;
  for (auto [a, b] : {std::pair{x, y}, {x, z}, {x, u}, {y, z}, {y, u}}) {
    if (!d.defined(a, b)) return false;
  }
  return d.code(x, z) != d.code(y, z) || d.code(x, u) != d.code(y, u);
}

}  // namespace

std::optional<std::array<std::size_t, 3>> find_delta_violation(const SymbolicMap& d) {
  const std::size_t n = d.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      for (std::size_t z = y + 1; z < n; ++z)
        if (is_delta(d, x, y, z)) return std::array{x, y, z};
  return std::nullopt;
}

std::optional<std::array<std::size_t, 4>> find_pi_violation(const SymbolicMap& d) {
  const std::size_t n = d.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        for (std::size_t e = c + 1; e < n; ++e) {
          std::array<std::size_t, 4> p{a, b, c, e};
          do {
            if (is_pi(d, p[0], p[1], p[2], p[3])) return p;
          } while (std::next_permutation(p.begin(), p.end()));
        }
  return std::nullopt;
}

std::optional<std::array<std::size_t, 4>> find_a4_violation(const SymbolicMap& d) {
  const std::size_t n = d.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        for (std::size_t e = c + 1; e < n; ++e) {
          const std::array<std::size_t, 4> q{a, b, c, e};
          // Choose the pair {z, u}; x, y are the other two.
          for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = i + 1; j < 4; ++j) {
              std::array<std::size_t, 2> rest{};
              std::size_t r = 0;
              for (std::size_t k = 0; k < 4; ++k)
                if (k != i && k != j) rest[r++] = q[k];
              if (is_a4(d, rest[0], rest[1], q[i], q[j])) return std::array{rest[0], rest[1], q[i], q[j]};
            }
        }
  return std::nullopt;
}

std::optional<Violation> check_arboreal_conditions(const SymbolicMap& d) {
  const UGraph g = graph_of_map(d);
  const auto components = connected_components(g);
  if (components.size() > 1) {
    return Violation{ViolationKind::NotConnected, {components[0].lowest(), components[1].lowest()}, std::nullopt};
  }
  if (auto obstruction = find_ptolemaic_obstruction(g)) {
    return Violation{ViolationKind::NotPtolemaic, obstruction->vertices, obstruction->kind};
  }
  if (auto w = find_delta_violation(d)) return Violation{ViolationKind::Delta, {w->begin(), w->end()}, std::nullopt};
  if (auto w = find_pi_violation(d)) return Violation{ViolationKind::Pi, {w->begin(), w->end()}, std::nullopt};
  if (auto w = find_a4_violation(d)) return Violation{ViolationKind::A4, {w->begin(), w->end()}, std::nullopt};
  return std::nullopt;
}

bool violation_holds(const SymbolicMap& d, const Violation& v) {
  const auto& w = v.witness;
  const std::size_t n = d.size();
  switch (v.kind) {
    case ViolationKind::NotConnected: {
      if (w.size() != 2 || !distinct({w[0], w[1]}, n)) return false;
      const UGraph g = graph_of_map(d);
      return !component_of(g, w[0], g.taxa().all()).contains(w[1]);
    }
    case ViolationKind::NotPtolemaic: {
      if (!v.obstruction) return false;
      const UGraph g = graph_of_map(d);
      if (*v.obstruction == PtolemaicObstruction::Kind::Hole) {
        return std::all_of(w.begin(), w.end(), [&](std::size_t x) { return x < n; }) && is_induced_hole(g, w);
      }
      return w.size() == 5 && is_gem(g, {w[0], w[1], w[2], w[3], w[4]});
    }
    case ViolationKind::Delta:
      return w.size() == 3 && distinct({w[0], w[1], w[2]}, n) && is_delta(d, w[0], w[1], w[2]);
    case ViolationKind::Pi:
      return w.size() == 4 && distinct({w[0], w[1], w[2], w[3]}, n) && is_pi(d, w[0], w[1], w[2], w[3]);
    case ViolationKind::A4:
      return w.size() == 4 && distinct({w[0], w[1], w[2], w[3]}, n) && is_a4(d, w[0], w[1], w[2], w[3]);
  }
  return false;
}

SymbolicMap evaluate_map(const LabelledNetwork& ln) {
  const Network& net = ln.net();
  if (!is_arboreal(net)) throw Error(ErrorCode::NotArboreal, "evaluation expects an arboreal network");
  const std::size_t n = net.taxa().size();
  std::vector<const std::string*> at(n * n, nullptr);
  for (const auto& [v, label] : ln.labels()) {
    const auto& kids = net.children(v);
    for (std::size_t a = 0; a < kids.size(); ++a)
      for (std::size_t b = a + 1; b < kids.size(); ++b)
        for (std::size_t x : net.cluster(kids[a]))
          for (std::size_t y : net.cluster(kids[b])) {
            const std::size_t i = std::min(x, y), j = std::max(x, y);
            if (i == j || at[i * n + j]) {
              throw Error(ErrorCode::ConstructionMismatch, "a pair of taxa has two least common ancestors");
            }
            at[i * n + j] = &label;
          }
  }
  return SymbolicMap::from_function(net.taxa(), [&](std::size_t i, std::size_t j) -> Symbol {
    if (const std::string* s = at[i * n + j]) return *s;
    return std::nullopt;
  });
}

LabelledNetwork build_ultrametric_tree(const SymbolicMap& d) {
  const std::size_t n = d.size();
  const std::size_t m = d.symbols().size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!d.defined(i, j)) throw Error(ErrorCode::NotUltrametric, "the map uses the non-symbol");
  // apart[s][x]: taxa y with d(x, y) != symbol s.
  std::vector<std::vector<TaxonSubset>> apart(m, std::vector<TaxonSubset>(n));
  for (std::size_t s = 0; s < m; ++s)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (x != y && d.code(x, y) != static_cast<int>(s)) apart[s][x] = apart[s][x].with(y);

  detail::DigraphEdit edit(d.taxa());
  std::map<VertexId, std::string> labels;
  std::function<VertexId(TaxonSubset)> grow = [&](TaxonSubset y) -> VertexId {
    if (y.size() == 1) {
      const VertexId leaf = edit.add_vertex();
      edit.at(leaf).taxon = y.lowest();
      return leaf;
    }
    std::optional<std::size_t> split;
    std::vector<TaxonSubset> parts;
    for (std::size_t s = 0; s < m; ++s) {
      std::vector<TaxonSubset> comps;
      TaxonSubset rest = y;
      while (!rest.empty()) {
        TaxonSubset seen = TaxonSubset::singleton(rest.lowest());
        TaxonSubset frontier = seen;
        while (!frontier.empty()) {
          TaxonSubset next;
          for (std::size_t x : frontier) next |= apart[s][x];
          next = (next & y) - seen;
          seen |= next;
          frontier = next;
        }
        comps.push_back(seen);
        rest = rest - seen;
      }
      if (comps.size() < 2) continue;
      if (split) throw Error(ErrorCode::AmbiguousSplit, "two symbols split the same taxon set");
      split = s;
      parts = std::move(comps);
    }
    if (!split) throw Error(ErrorCode::NotUltrametric, "no symbol splits {" + d.taxa().subset_string(y) + "}");
    const VertexId v = edit.add_vertex();
    labels[v] = d.symbols()[*split];
    for (TaxonSubset part : parts) edit.add_arc(v, grow(part));
    return v;
  };
  grow(d.taxa().all());
  auto built = edit.build(d.taxa());
  std::map<VertexId, std::string> relabelled;
  for (const auto& [v, s] : labels) relabelled[*built.new_id[v]] = s;
  LabelledNetwork tree(std::move(built.net), std::move(relabelled));
  if (!(evaluate_map(tree) == d)) throw Error(ErrorCode::NotUltrametric, "no labelled tree explains the map");
  return tree;
}

std::optional<LabelledNetwork> construct_explanation(const SymbolicMap& d) {
  const UGraph g = graph_of_map(d);
  if (!is_connected(g)) return std::nullopt;
  const auto rep = arboreal_representation(g);
  if (!rep) return std::nullopt;
  const Network hat = contract_tree_arcs(*rep);

  auto edit = detail::DigraphEdit::from(hat);
  std::map<VertexId, std::string> labels;
  for (VertexId v = 0; v < hat.vertex_count(); ++v) {
    const auto& kids = hat.children(v);
    if (kids.size() < 2) continue;
    const std::size_t k = kids.size();
    std::vector<std::string> names;
    for (std::size_t i = 0; i < k; ++i) names.push_back(std::to_string(i));
    // Every leaf pair below two children must agree with the representatives.
    std::vector<Symbol> local;
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = a + 1; b < k; ++b) {
        const TaxonSubset ca = hat.cluster(kids[a]);
        const TaxonSubset cb = hat.cluster(kids[b]);
        const int rep_code = d.code(ca.lowest(), cb.lowest());
        if (rep_code < 0) return std::nullopt;
        for (std::size_t x : ca)
          for (std::size_t y : cb)
            if (d.code(x, y) != rep_code) return std::nullopt;
        local.push_back(d.symbols()[static_cast<std::size_t>(rep_code)]);
      }
    }
    std::optional<LabelledNetwork> tree;
    try {
      tree = build_ultrametric_tree(SymbolicMap(TaxonSet(names), local));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::NotUltrametric) return std::nullopt;
      throw;
    }
    for (VertexId c : kids) edit.remove_arc(v, c);
    const Network& t = tree->net();
    std::vector<VertexId> slot(t.vertex_count());
    for (VertexId tv = 0; tv < t.vertex_count(); ++tv) {
      if (t.is_root(tv)) {
        slot[tv] = v;
      } else if (auto taxon = t.taxon_of(tv)) {
        slot[tv] = kids[std::stoul(t.taxa().name(*taxon))];
      } else {
        slot[tv] = edit.add_vertex();
      }
    }
    for (const auto& arc : t.arcs()) edit.add_arc(slot[arc.tail], slot[arc.head]);
    for (const auto& [tv, s] : tree->labels()) labels[slot[tv]] = s;
  }
  auto built = edit.build(d.taxa());
  std::map<VertexId, std::string> relabelled;
  for (const auto& [v, s] : labels) relabelled[*built.new_id[v]] = s;
  LabelledNetwork out(std::move(built.net), std::move(relabelled));
  if (!is_arboreal(out.net()) || !(evaluate_map(out) == d)) return std::nullopt;
  return out;
}

std::variant<LabelledNetwork, Violation> explain(const SymbolicMap& d) {
  if (auto v = check_arboreal_conditions(d)) return *v;
  auto ln = construct_explanation(d);
  if (!ln) throw Error(ErrorCode::ConstructionMismatch, "the conditions hold but no explanation was constructed");
  return *ln;
}

namespace {

bool is_clique_module(const SymbolicMap& d, const UGraph& g, TaxonSubset y) {
  if (y.size() < 2) return true;
  if (!g.is_clique(y)) return false;
  for (std::size_t z : d.taxa().all() - y) {
    int seen = -1;
    for (std::size_t x : y) {
      const int c = d.code(x, z);
      if (c < 0) continue;
      if (seen >= 0 && c != seen) return false;
      seen = c;
    }
  }
  return true;
}

}  // namespace

CliqueFamily clique_modules(const SymbolicMap& d) {
  const std::size_t n = d.size();
  if (n > kModuleTaxonCap) {
    throw Error(ErrorCode::TooLarge, "clique-module enumeration is limited to " + std::to_string(kModuleTaxonCap) + " taxa");
  }
  const UGraph g = graph_of_map(d);
  std::vector<TaxonSubset> out;
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
    const TaxonSubset y(bits);
    if (y.size() >= 2 && is_clique_module(d, g, y)) out.push_back(y);
  }
  return CliqueFamily(d.taxa(), std::move(out));
}

CliqueFamily strong_clique_modules(const SymbolicMap& d) {
  const CliqueFamily modules = clique_modules(d);
  const UGraph g = graph_of_map(d);
  std::vector<TaxonSubset> out;
  for (TaxonSubset y : modules) {
    bool strong = true;
    for (TaxonSubset other : modules) {
      const TaxonSubset both = y & other;
      if (both.empty() || both == y || both == other) continue;
      if (g.is_clique(y | other)) {
        strong = false;
        break;
      }
    }
    if (strong) out.push_back(y);
  }
  return CliqueFamily(d.taxa(), std::move(out));
}

LabelledNetwork make_discriminating(const LabelledNetwork& ln) {
  if (!is_arboreal(ln.net())) throw Error(ErrorCode::NotArboreal, "collapsing expects an arboreal network");
  auto edit = detail::DigraphEdit::from(ln.net());
  std::map<VertexId, std::string> labels = ln.labels();
  const auto find_arc = [&](bool first_rule) -> std::optional<std::pair<VertexId, VertexId>> {
    for (VertexId u = 0; u < edit.slots(); ++u) {
      if (!edit.alive(u)) continue;
      for (VertexId v : edit.at(u).children) {
        if (edit.at(v).children.empty()) continue;
        if (first_rule) {
          if (edit.at(u).children.size() == 1) return std::pair{u, v};
        } else if (edit.at(v).parents.size() == 1 && labels.count(u) && labels.count(v) && labels[u] == labels[v]) {
          return std::pair{u, v};
        }
      }
    }
    return std::nullopt;
  };
  for (;;) {
    auto arc = find_arc(true);
    if (!arc) arc = find_arc(false);
    if (!arc) break;
    const auto [u, v] = *arc;
    auto label = labels.count(v) ? std::optional<std::string>(labels[v]) : std::nullopt;
    edit.contract(u, v);
    labels.erase(v);
    if (label) {
      labels[u] = *label;
    } else {
      labels.erase(u);
    }
  }
  auto built = edit.build(ln.net().taxa());
  std::map<VertexId, std::string> relabelled;
  for (const auto& [v, s] : labels) relabelled[*built.new_id[v]] = s;
  LabelledNetwork out(std::move(built.net), std::move(relabelled));
  if (!(evaluate_map(out) == evaluate_map(ln))) {
    throw Error(ErrorCode::ConstructionMismatch, "collapsing changed the symbolic map");
  }
  return out;
}

bool is_discriminating(const LabelledNetwork& ln) {
  const Network& net = ln.net();
  for (const auto& arc : net.arcs()) {
    if (net.is_leaf(arc.head)) continue;
    if (net.outdegree(arc.tail) == 1) return false;
    if (net.indegree(arc.head) == 1 && ln.labels().count(arc.tail) && ln.labels().count(arc.head) &&
        ln.label(arc.tail) == ln.label(arc.head)) {
      return false;
    }
  }
  if (is_arboreal(net)) {
    for (VertexId v = 0; v < net.vertex_count(); ++v) {
      if ((net.outdegree(v) >= 2) != (net.cluster(v).size() >= 2)) {
        throw Error(ErrorCode::ConstructionMismatch, "discriminating network with a vertex whose outdegree and cluster size disagree");
      }
    }
  }
  return true;
}

std::string canonical_form(const LabelledNetwork& ln) {
  const Network& net = ln.net();
  if (!is_arboreal(net)) throw Error(ErrorCode::NotArboreal, "canonical forms need an arboreal network");
  const auto& names = net.taxa().names();
  const std::size_t first =
      static_cast<std::size_t>(std::min_element(names.begin(), names.end()) - names.begin());
  const auto field = [](char tag, const std::string& s) { return tag + std::to_string(s.size()) + ":" + s; };
  std::function<std::string(VertexId, VertexId)> encode = [&](VertexId v, VertexId from) {
    std::string s = "(";
    if (auto t = net.taxon_of(v)) s += field('L', names[*t]);
    if (ln.labels().count(v)) s += field('T', ln.label(v));
    std::vector<std::string> parts;
    for (VertexId c : net.children(v))
      if (c != from) parts.push_back("d" + encode(c, v));
    for (VertexId p : net.parents(v))
      if (p != from) parts.push_back("u" + encode(p, v));
    std::sort(parts.begin(), parts.end());
    for (const auto& p : parts) s += p;
    return s + ")";
  };
  return encode(net.leaf_of(first), net.vertex_count());
}

bool are_isomorphic(const LabelledNetwork& a, const LabelledNetwork& b) {
  return canonical_form(a) == canonical_form(b);
}

bool verify_phi_bijection(const LabelledNetwork& ln) {
  const Network& net = ln.net();
  if (!is_arboreal(net)) throw Error(ErrorCode::NotArboreal, "the bijection test expects an arboreal network");
  const SymbolicMap d = evaluate_map(ln);
  std::set<TaxonSubset, CanonicalLess> target;
  for (TaxonSubset s : intersection_closure(maximal_cliques(graph_of_map(d)))) target.insert(s);
  for (TaxonSubset s : strong_clique_modules(d)) target.insert(s);
  std::set<TaxonSubset, CanonicalLess> image;
  for (VertexId v = 0; v < net.vertex_count(); ++v) {
    if (net.is_leaf(v)) continue;
    if (!image.insert(net.cluster(v)).second) return false;
  }
  return image == target;
}

LabelledNetwork canonically_numbered(const LabelledNetwork& ln) {
  const Network& net = ln.net();
  std::vector<std::size_t> topo_pos(net.vertex_count());
  for (std::size_t i = 0; i < net.topological_order().size(); ++i) topo_pos[net.topological_order()[i]] = i;
  std::vector<VertexId> inner;
  for (VertexId v = 0; v < net.vertex_count(); ++v)
    if (!net.is_leaf(v)) inner.push_back(v);
  std::sort(inner.begin(), inner.end(), [&](VertexId a, VertexId b) {
    const TaxonSubset ca = net.cluster(a), cb = net.cluster(b);
    if (ca.size() != cb.size()) return ca.size() > cb.size();
    if (ca != cb) return canonical_less(ca, cb);
    return topo_pos[a] < topo_pos[b];
  });
  std::vector<VertexId> order = inner;
  for (std::size_t t = 0; t < net.taxa().size(); ++t) order.push_back(net.leaf_of(t));
  std::vector<VertexId> new_id(net.vertex_count());
  for (std::size_t i = 0; i < order.size(); ++i) new_id[order[i]] = i;

  std::vector<Arc> arcs;
  for (const auto& a : net.arcs()) arcs.push_back({new_id[a.tail], new_id[a.head]});
  std::map<VertexId, std::string> leaves;
  for (std::size_t t = 0; t < net.taxa().size(); ++t) leaves[new_id[net.leaf_of(t)]] = net.taxa().name(t);
  Network out = Network::validate(net.vertex_count(), std::move(arcs), leaves, net.taxa());
  if (net.has_names()) {
    std::vector<std::string> names(net.vertex_count());
    for (VertexId v = 0; v < net.vertex_count(); ++v) names[new_id[v]] = net.name(v);
    out = out.with_names(std::move(names));
  }
  std::map<VertexId, std::string> labels;
  for (const auto& [v, s] : ln.labels()) labels[new_id[v]] = s;
  return LabelledNetwork(std::move(out), std::move(labels));
}

}  // namespace arboreal
