#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kgraph/aperiodicity.hpp"
#include "kgraph/ideal_lattice.hpp"
#include "kgraph/khomology.hpp"
#include "kgraph/linalg.hpp"
#include "kgraph/two_graph.hpp"

namespace kgraph {

/// Matrix form of H_1 injectivity for one saturated hereditary H, with
/// A = M1^t, B = M2^t split along H u T:
///   K  = ker(A_T - 1) n ker(B_T - 1)          in Z T
///   L2 = (A_{H,T}; B_{H,T}) K                   in Z H (+) Z H
///   L1 = image of (A_H - 1; B_H - 1)            in Z H (+) Z H
/// and the condition is L2 <= L1.
struct ConditionIII {
  bool holds = true;
  Lattice common_fixed{0};  // K
  Lattice l1{0};
  Lattice l2{0};
  std::optional<IntVector> witness;  // a basis vector of L2 outside L1
};

ConditionIII condition_iii(const TwoGraph& g, const VertexSet& h);

/// Everything computed for one nonempty proper saturated hereditary H.
struct IdealRecord {
  VertexSet h;
  BlockDecomposition blocks;
  ConditionIII condition;
  H1Injectivity h1;
};

/// Builds the record and cross-checks condition (iii) against the direct
/// homology computation; disagreement throws CrossCheckFailure.
IdealRecord analyse_ideal(const TwoGraph& g, const VertexSet& h);

TriVerdict td0_from(const StrongAperiodicityResult& strong);
TriVerdict pi_from(const AperiodicityResult& own);
TriVerdict rr0_from(const TwoGraph& g, const TriVerdict& pi,
                    const StrongAperiodicityResult& strong,
                    const std::vector<IdealRecord>& ideals);

TriVerdict td0_verdict(const TwoGraph& g, const SearchBounds& bounds);
TriVerdict pi_verdict(const TwoGraph& g, const SearchBounds& bounds);
TriVerdict rr0_verdict(const TwoGraph& g, const SearchBounds& bounds);

/// K <= H saturated hereditary, H \ K saturated hereditary in the quotient by
/// K, and the subquotient on H \ K cofinal.
struct ReductionPair {
  VertexSet k;
  VertexSet h;
  std::vector<std::string> subquotient_vertices;
  bool difference_sat_hereditary = false;
  bool subquotient_cofinal = false;
};

std::vector<ReductionPair> reduction_report(const TwoGraph& g,
                                            const SatHereditaryLattice& lattice);
std::vector<ReductionPair> reduction_report(const TwoGraph& g);

struct AnalysisReport {
  TwoGraph graph;
  SearchBounds bounds;
  SatHereditaryLattice lattice;
  MaximalTails tails;
  std::vector<IdealRecord> ideals;  // nonempty proper members, lattice order
  AperiodicityResult aperiodicity;
  StrongAperiodicityResult strong;
  KInvariants k;
  TriVerdict td0, pi, rr0;
  std::vector<ReductionPair> reductions;
};

AnalysisReport analyse(const TwoGraph& g, const SearchBounds& bounds);

}  // namespace kgraph
