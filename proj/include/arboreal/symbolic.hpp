#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include "arboreal/cliques.hpp"
#include "arboreal/graph.hpp"
#include "arboreal/network.hpp"

namespace arboreal {

// Printable stand-in for the non-symbol; never accepted as a symbol name.
inline constexpr const char* kNoSymbol = "⊙";

using Symbol = std::optional<std::string>;  // nullopt is the non-symbol

// A total symmetric map from pairs of distinct taxa to symbols or the
// non-symbol.
class SymbolicMap {
 public:
  // `values` lists the pairs (i, j), i < j, row by row: (0,1), (0,2), ...,
  // (1,2), ... An explicit alphabet must contain every value used; without
  // one the alphabet is the sorted range.
  SymbolicMap(TaxonSet taxa, const std::vector<Symbol>& values,
              std::optional<std::vector<std::string>> alphabet = std::nullopt);

  static SymbolicMap from_function(TaxonSet taxa, const std::function<Symbol(std::size_t, std::size_t)>& f,
                                   std::optional<std::vector<std::string>> alphabet = std::nullopt);
  // Every unordered pair must appear exactly once.
  static SymbolicMap from_named(TaxonSet taxa, const std::vector<std::tuple<std::string, std::string, Symbol>>& values,
                                std::optional<std::vector<std::string>> alphabet = std::nullopt);

  const TaxonSet& taxa() const { return taxa_; }
  std::size_t size() const { return taxa_.size(); }
  const std::vector<std::string>& symbols() const { return symbols_; }

  // Index into symbols(), or -1 for the non-symbol.
  int code(std::size_t x, std::size_t y) const { return codes_[x * size() + y]; }
  bool defined(std::size_t x, std::size_t y) const { return code(x, y) >= 0; }
  Symbol value(std::size_t x, std::size_t y) const;
  Symbol value(const std::string& x, const std::string& y) const;

  // Compares taxa and values; the alphabets may differ.
  bool operator==(const SymbolicMap& o) const;

 private:
  TaxonSet taxa_;
  std::vector<std::string> symbols_;
  std::vector<int> codes_;  // full matrix, diagonal unused
};

// A network with a symbol on every vertex of outdegree at least 2, and on no
// other vertex.
class LabelledNetwork {
 public:
  LabelledNetwork(Network net, std::map<VertexId, std::string> labels);

  const Network& net() const { return net_; }
  const std::map<VertexId, std::string>& labels() const { return labels_; }
  const std::string& label(VertexId v) const;

  bool operator==(const LabelledNetwork& o) const { return net_ == o.net_ && labels_ == o.labels_; }

 private:
  Network net_;
  std::map<VertexId, std::string> labels_;
};

enum class ViolationKind { NotConnected, NotPtolemaic, Delta, Pi, A4 };
std::string_view to_string(ViolationKind k);

// Witness layout by kind:
//   NotConnected  two taxa in different components of G_d
//   NotPtolemaic  the obstruction's vertices (an induced hole, or a gem as
//                 path u-y-z-v then the universal vertex)
//   Delta         x, y, z with three distinct symbols
//   Pi            x, y, z, u with d(x,y)=d(y,z)=d(z,u) != d(z,x)=d(x,u)=d(u,y)
//   A4            x, y, z, u with d(z,u) the only non-symbol and
//                 d(x,z) != d(y,z) or d(x,u) != d(y,u)
struct Violation {
  ViolationKind kind;
  std::vector<std::size_t> witness;
  std::optional<PtolemaicObstruction::Kind> obstruction;  // NotPtolemaic only

  bool operator==(const Violation&) const = default;
};

// Re-checks a witness against `d`.
bool violation_holds(const SymbolicMap& d, const Violation& v);

UGraph graph_of_map(const SymbolicMap& d);
std::optional<std::array<std::size_t, 3>> find_delta_violation(const SymbolicMap& d);
std::optional<std::array<std::size_t, 4>> find_pi_violation(const SymbolicMap& d);
std::optional<std::array<std::size_t, 4>> find_a4_violation(const SymbolicMap& d);

// First failing condition in the order connected, Ptolemaic, Delta, Pi, A4.
std::optional<Violation> check_arboreal_conditions(const SymbolicMap& d);

// d(x,y) = label of lca(x,y), or the non-symbol. Throws NotArboreal.
SymbolicMap evaluate_map(const LabelledNetwork& ln);

// Labelled phylogenetic tree explaining a map without non-symbols. Throws
// NotUltrametric when no tree explains `d`.
LabelledNetwork build_ultrametric_tree(const SymbolicMap& d);

// Runs the explanation construction without checking the conditions first:
// contract the arboreal representation of G_d, then replace every vertex of
// outdegree at least 2 by a tree for the map induced on its children. None
// when any step fails or the result does not reproduce `d`.
std::optional<LabelledNetwork> construct_explanation(const SymbolicMap& d);

// The violated condition, or a labelled arboreal network explaining `d`.
// Throws ConstructionMismatch if the conditions hold but the construction
// fails.
std::variant<LabelledNetwork, Violation> explain(const SymbolicMap& d);

inline constexpr std::size_t kModuleTaxonCap = 16;

// Clique-modules of size at least 2. Throws TooLarge above kModuleTaxonCap.
CliqueFamily clique_modules(const SymbolicMap& d);
// Strong clique-modules of size at least 2.
CliqueFamily strong_clique_modules(const SymbolicMap& d);

// Applies both collapse rules until none applies; the merged vertex keeps
// the upper vertex's id. Throws NotArboreal.
LabelledNetwork make_discriminating(const LabelledNetwork& ln);
bool is_discriminating(const LabelledNetwork& ln);

// Canonical string of an arboreal labelled network, independent of vertex
// ids. Throws NotArboreal.
std::string canonical_form(const LabelledNetwork& ln);
bool are_isomorphic(const LabelledNetwork& a, const LabelledNetwork& b);

// v -> C(v) on non-leaf vertices is injective with image equal to the closure
// of K(G_d) together with the strong non-trivial clique-modules.
bool verify_phi_bijection(const LabelledNetwork& ln);

// Renumbers vertices: non-leaf vertices by cluster (larger first, then
// canonical order), then leaves in taxon order.
LabelledNetwork canonically_numbered(const LabelledNetwork& ln);

}  // namespace arboreal
