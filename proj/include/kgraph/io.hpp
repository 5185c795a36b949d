#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "kgraph/verdict.hpp"

namespace kgraph {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "kgraph-report/1";

/// {"k": 2, "vertices": [...], "edges": [{"id", "colour", "source", "range"}],
///  "factorisation": [{"blue", "red", "red_out", "blue_out"}]}
/// Structural problems throw InvalidInput; graph-level problems throw the
/// validation error codes.
TwoGraph graph_from_json(const Json& j);
TwoGraph read_graph(std::istream& in);
Json graph_to_json(const TwoGraph& g);

Json integer_json(const Integer& x);  // number when it fits in 64 bits, else string
Json matrix_json(const IntMatrix& m); // list of rows
Json lattice_json(const Lattice& l);  // HNF basis vectors
Json group_json(const AbelianGroup& a);
Json verdict_json(const TriVerdict& v);
Json path_json(const TwoGraph& g, const Path& p);

Json summary_json(const TwoGraph& g);
Json bounds_json(const SearchBounds& b);
Json lattice_section(const TwoGraph& g, const SatHereditaryLattice& lattice,
                     const MaximalTails& tails);
Json ideal_json(const TwoGraph& g, const IdealRecord& r);
Json aperiodicity_json(const TwoGraph& g, const AperiodicityResult& r);
Json strong_json(const TwoGraph& g, const StrongAperiodicityResult& r);
Json k_json(const KInvariants& k);
Json reduction_json(const TwoGraph& g, const ReductionPair& p);

/// Full report with a fixed field order.
Json report_json(const AnalysisReport& r);

std::string summary_text(const TwoGraph& g);
std::string lattice_text(const TwoGraph& g, const SatHereditaryLattice& lattice,
                         const MaximalTails& tails);
std::string aperiodicity_text(const TwoGraph& g, const AperiodicityResult& own,
                              const StrongAperiodicityResult& strong);
std::string k_text(const KInvariants& k);
std::string verdicts_text(const AnalysisReport& r);
std::string report_text(const AnalysisReport& r);

}  // namespace kgraph
