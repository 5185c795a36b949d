#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kgraph {

// Every failure the library reports carries one of these codes. The CLI maps
// them onto process exit codes (see exit_code_for).
enum class Errc {
  // input graph / factorisation data
  DuplicateVertex,
  DuplicateEdge,
  UnknownVertex,
  UnknownEdge,
  MalformedRule,
  MissingRule,
  DuplicateRule,
  RuleNotRangeSourcePreserving,
  NotBijective,
  SourceAtVertex,
  InvalidInput,
  // path algebra
  NotComposable,
  DegreeOutOfRange,
  EnumerationCapExceeded,
  // vertex-set combinatorics
  NotHereditary,
  NotSaturatedHereditary,
  EmptyQuotient,
  EmptyRestriction,
  TrivialH,
  // linear algebra
  DimensionMismatch,
  NotASubgroup,
  // chain complexes
  NonCommuting,
  RankNotTwo,
  // generators
  UnknownExample,
  BadParams,
  // runtime cross-checks between independent routes
  CrossCheckFailure,
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// 2 invalid input graph, 3 cap exceeded, 4 internal cross-check failure.
int exit_code_for(Errc code);

}  // namespace kgraph
