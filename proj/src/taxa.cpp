#include "arboreal/taxa.hpp"

#include "arboreal/error.hpp"

namespace arboreal {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::EmptySubset: return "EmptySubset";
    case ErrorCode::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorCode::NoEdges: return "NoEdges";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotACover: return "NotACover";
    case ErrorCode::MalformedArc: return "MalformedArc";
    case ErrorCode::Cyclic: return "Cyclic";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::RootOutdegLt2: return "RootOutdegLt2";
    case ErrorCode::LeafIndegNe1: return "LeafIndegNe1";
    case ErrorCode::Indeg1Outdeg1Vertex: return "Indeg1Outdeg1Vertex";
    case ErrorCode::LeafSetMismatch: return "LeafSetMismatch";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::UnknownTaxon: return "UnknownTaxon";
    case ErrorCode::NotArboreal: return "NotArboreal";
    case ErrorCode::SubsetTooSmall: return "SubsetTooSmall";
    case ErrorCode::NotARoot: return "NotARoot";
    case ErrorCode::SingleRooted: return "SingleRooted";
    case ErrorCode::NotUltrametric: return "NotUltrametric";
    case ErrorCode::AmbiguousSplit: return "AmbiguousSplit";
    case ErrorCode::ConstructionMismatch: return "ConstructionMismatch";
    case ErrorCode::GenerationExhausted: return "GenerationExhausted";
    case ErrorCode::InputParse: return "InputParse";
  }
  return "Unknown";
}

TaxonSet::TaxonSet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw Error(ErrorCode::InvalidArgument, "taxon set is empty");
  if (names_.size() > TaxonSubset::kCapacity) {
    throw Error(ErrorCode::TooLarge, "at most " + std::to_string(TaxonSubset::kCapacity) + " taxa are supported");
  }
  index_.reserve(names_.size());
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw Error(ErrorCode::InvalidArgument, "taxon names must be non-empty");
    if (!index_.emplace(names_[i], i).second) {
      throw Error(ErrorCode::InvalidArgument, "duplicate taxon '" + names_[i] + "'");
    }
  }
}

TaxonSet TaxonSet::numbered(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) names.push_back(std::to_string(i));
  return TaxonSet(std::move(names));
}

std::optional<std::size_t> TaxonSet::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t TaxonSet::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw Error(ErrorCode::UnknownTaxon, "unknown taxon '" + std::string(name) + "'");
}

std::string TaxonSet::subset_string(TaxonSubset s) const {
  std::string out;
  for (std::size_t i : s) out += names_.at(i);
  return out;
}

std::vector<std::string> TaxonSet::subset_names(TaxonSubset s) const {
  std::vector<std::string> out;
  for (std::size_t i : s) out.push_back(names_.at(i));
  return out;
}

TaxonSubset TaxonSet::subset_of(const std::vector<std::string>& names) const {
  TaxonSubset s;
  for (const auto& n : names) s = s.with(index_of(n));
  return s;
}

TaxonSet TaxonSet::restricted(TaxonSubset s) const {
  if (s.empty()) throw Error(ErrorCode::EmptySubset, "cannot restrict to an empty subset");
  if (!s.is_subset_of(all())) throw Error(ErrorCode::UnknownTaxon, "subset is not contained in the taxon set");
  return TaxonSet(subset_names(s));
}

}  // namespace arboreal
