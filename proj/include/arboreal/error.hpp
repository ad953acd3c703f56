#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace arboreal {

enum class ErrorCode {
  InvalidArgument,
  EmptySubset,
  DisconnectedGraph,
  NoEdges,
  TooLarge,
  NotACover,
  // Network validation, in the order the checks are applied.
  MalformedArc,
  Cyclic,
  Disconnected,
  RootOutdegLt2,
  LeafIndegNe1,
  Indeg1Outdeg1Vertex,
  LeafSetMismatch,
  UnknownVertex,
  UnknownTaxon,
  NotArboreal,
  SubsetTooSmall,
  NotARoot,
  SingleRooted,
  NotUltrametric,
  AmbiguousSplit,
  ConstructionMismatch,
  GenerationExhausted,
  InputParse,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace arboreal
