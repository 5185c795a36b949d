#include "kgraph/error.hpp"

namespace kgraph {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::DuplicateVertex: return "DuplicateVertex";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::UnknownVertex: return "UnknownVertex";
    case Errc::UnknownEdge: return "UnknownEdge";
    case Errc::MalformedRule: return "MalformedRule";
    case Errc::MissingRule: return "MissingRule";
    case Errc::DuplicateRule: return "DuplicateRule";
    case Errc::RuleNotRangeSourcePreserving: return "RuleNotRangeSourcePreserving";
    case Errc::NotBijective: return "NotBijective";
    case Errc::SourceAtVertex: return "SourceAtVertex";
    case Errc::InvalidInput: return "InvalidInput";
    case Errc::NotComposable: return "NotComposable";
    case Errc::DegreeOutOfRange: return "DegreeOutOfRange";
    case Errc::EnumerationCapExceeded: return "EnumerationCapExceeded";
    case Errc::NotHereditary: return "NotHereditary";
    case Errc::NotSaturatedHereditary: return "NotSaturatedHereditary";
    case Errc::EmptyQuotient: return "EmptyQuotient";
    case Errc::EmptyRestriction: return "EmptyRestriction";
    case Errc::TrivialH: return "TrivialH";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NotASubgroup: return "NotASubgroup";
    case Errc::NonCommuting: return "NonCommuting";
    case Errc::RankNotTwo: return "RankNotTwo";
    case Errc::UnknownExample: return "UnknownExample";
    case Errc::BadParams: return "BadParams";
    case Errc::CrossCheckFailure: return "CrossCheckFailure";
  }
  return "UnknownError";
}

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::EnumerationCapExceeded:
      return 3;
    case Errc::CrossCheckFailure:
      return 4;
    case Errc::DuplicateVertex:
    case Errc::DuplicateEdge:
    case Errc::UnknownVertex:
    case Errc::UnknownEdge:
    case Errc::MalformedRule:
    case Errc::MissingRule:
    case Errc::DuplicateRule:
    case Errc::RuleNotRangeSourcePreserving:
    case Errc::NotBijective:
    case Errc::SourceAtVertex:
    case Errc::InvalidInput:
    case Errc::UnknownExample:
    case Errc::BadParams:
      return 2;
    default:
      // Anything else escaping to the CLI is a broken internal precondition.
      return 4;
  }
}

}  // namespace kgraph
