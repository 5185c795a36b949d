#pragma once

#include <optional>
#include <variant>
#include <string>
#include <vector>

#include "kgraph/ideal_lattice.hpp"
#include "kgraph/two_graph.hpp"

namespace kgraph {

enum class Truth { Yes, No, Unknown };
std::string to_string(Truth t);

/// Tri-state outcome. `conditional` marks a No that rests only on
/// finite-depth periodicity evidence.
struct TriVerdict {
  Truth state = Truth::Unknown;
  bool conditional = false;
  std::string criterion;
  std::vector<std::string> notes;
};

struct SearchBounds {
  Degree max_degree{3, 3};
  unsigned depth = 4;
  std::size_t cap = kDefaultEnumerationCap;
  /// When set, periodicity evidence is gathered at this depth and accepted
  /// as a (conditional) refutation of aperiodicity.
  std::optional<unsigned> accept_depth_evidence;

  unsigned evidence_depth() const { return accept_depth_evidence.value_or(depth); }
};

/// Distinct blue cycles alpha1, alpha2 of degree (a,0) and distinct red
/// cycles beta1, beta2 of degree (0,b) at one vertex with
///   beta2 alpha1 = alpha1 beta2,  beta2 alpha2 = alpha2 beta2,
///   beta1 alpha1 = alpha2 beta1,  beta1 alpha2 = alpha1 beta1.
struct Quartet {
  VertexId vertex = 0;
  Path alpha1, alpha2, beta1, beta2;
};

/// Re-checks all quartet conditions from scratch through normal forms.
bool verify_quartet(const TwoGraph& g, const Quartet& q);

/// Exhaustive search, a + b increasing then lexicographic in the path lists.
std::optional<Quartet> find_quartet(const TwoGraph& g, VertexId u, Degree max_degree,
                                    std::size_t cap = kDefaultEnumerationCap);

/// All paths lambda in v Lambda^{(m v n) + depth(1,1)} satisfy
/// lambda(m, m + depth(1,1)) == lambda(n, n + depth(1,1)).
struct PeriodicityWitness {
  VertexId vertex = 0;
  Degree m, n;
  unsigned depth = 0;
  bool all_paths_agree = true;
  std::size_t paths_checked = 0;
};

/// A pair (m, n) refuted by an explicit path whose two shifted segments differ.
struct PeriodicityRefutation {
  VertexId vertex = 0;
  Degree m, n;
  unsigned depth = 0;
  Path path;
};

struct PeriodicityScan {
  std::vector<PeriodicityWitness> witnesses;
  std::vector<PeriodicityRefutation> refutations;
};

/// Checks one pair; returns the witness or the refuting path.
std::variant<PeriodicityWitness, PeriodicityRefutation> check_periodicity(
    const TwoGraph& g, VertexId v, Degree m, Degree n, unsigned depth,
    std::size_t cap = kDefaultEnumerationCap);

/// Every unordered pair m != n with m, n <= max_degree, checked at `depth`.
PeriodicityScan periodicity_scan(const TwoGraph& g, VertexId v, Degree max_degree,
                                 unsigned depth, std::size_t cap = kDefaultEnumerationCap);

struct AperiodicityResult {
  TriVerdict verdict;
  std::vector<Quartet> quartets;                 // one per vertex that has one
  std::vector<VertexId> vertices_without_quartet;
  std::vector<PeriodicityWitness> witnesses;     // evidence, vertex ids of the scanned graph
};

/// Yes when every vertex carries a quartet within bounds; otherwise Unknown
/// with periodicity evidence from the vertices lacking one. Never No.
AperiodicityResult aperiodicity_verdict(const TwoGraph& g, const SearchBounds& bounds);

struct QuotientAperiodicity {
  VertexSet h;         // subset of the ambient graph
  TwoGraph quotient;   // vertex ids in `result` refer to this graph
  AperiodicityResult result;
};

struct StrongAperiodicityResult {
  TriVerdict verdict;
  bool via_vertex_quartets = false;
  std::vector<Quartet> quartets;
  std::vector<QuotientAperiodicity> quotients;   // filled when quartets do not cover g
  std::vector<VertexSet> blocking;               // H whose quotient verdict is not Yes
  bool evidence_found = false;                   // some blocking quotient has a witness
};

/// Yes when every vertex has a quartet, or every proper saturated hereditary
/// quotient is certified aperiodic. With bounds.accept_depth_evidence set, a
/// periodicity witness in some quotient gives a conditional No.
StrongAperiodicityResult strong_aperiodicity_verdict(const TwoGraph& g,
                                                     const SearchBounds& bounds);

/// Same, reusing an already computed lattice and per-vertex quartets.
StrongAperiodicityResult strong_aperiodicity_verdict(const TwoGraph& g,
                                                     const SearchBounds& bounds,
                                                     const SatHereditaryLattice& lattice,
                                                     const AperiodicityResult& own);

}  // namespace kgraph
