#include "kgraph/verdict.hpp"

#include "kgraph/error.hpp"

namespace kgraph {

namespace {

IntMatrix minus_identity(const IntMatrix& m) {
  return m - IntMatrix::identity(m.rows());
}

std::string vector_string(const IntVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i].get_str();
  }
  return out + ")";
}

}  // namespace

ConditionIII condition_iii(const TwoGraph& g, const VertexSet& h) {
  if (!is_saturated_hereditary(g, h)) {
    throw Error(Errc::NotSaturatedHereditary, to_string(g, h));
  }
  if (h.empty()) throw Error(Errc::TrivialH, "H must be nonempty");

  const BlockDecomposition b = block_decomposition(g, h);
  ConditionIII out;
  out.common_fixed = kernel_basis(vstack(minus_identity(b.blue.t), minus_identity(b.red.t)));
  out.l2 = Lattice(vstack(b.blue.h_to_t, b.red.h_to_t) * out.common_fixed.basis());
  out.l1 = image_lattice(vstack(minus_identity(b.blue.h), minus_identity(b.red.h)));

  const IntMatrix& gens = out.l2.basis();
  for (std::size_t c = 0; c < gens.cols(); ++c) {
    IntVector v = gens.column(c);
    if (!out.l1.contains(v)) {
      out.holds = false;
      out.witness = std::move(v);
      break;
    }
  }
  return out;
}

IdealRecord analyse_ideal(const TwoGraph& g, const VertexSet& h) {
  IdealRecord r{h, block_decomposition(g, h), condition_iii(g, h), h1_map_injective(g, h)};
  if (r.condition.holds != r.h1.injective) {
    throw Error(Errc::CrossCheckFailure,
                "condition (iii) says " + std::string(r.condition.holds ? "true" : "false") +
                    " but H_1 injectivity says " + (r.h1.injective ? "true" : "false") +
                    " at H = " + to_string(g, h));
  }
  return r;
}

TriVerdict td0_from(const StrongAperiodicityResult& strong) {
  TriVerdict v = strong.verdict;
  v.criterion = "topological dimension zero <=> strong aperiodicity; " + v.criterion;
  return v;
}

TriVerdict pi_from(const AperiodicityResult& own) {
  TriVerdict v;
  if (own.verdict.state == Truth::Yes) {
    v.state = Truth::Yes;
    v.criterion = "aperiodic quartet at every vertex => strongly purely infinite";
  } else {
    v.state = Truth::Unknown;
    v.criterion = "no quartet certificate at some vertex; pure infiniteness not decided";
    v.notes = own.verdict.notes;
  }
  return v;
}

TriVerdict rr0_from(const TwoGraph& g, const TriVerdict& pi,
                    const StrongAperiodicityResult& strong,
                    const std::vector<IdealRecord>& ideals) {
  TriVerdict v;
  for (const IdealRecord& r : ideals) {
    if (r.condition.holds) continue;
    v.state = Truth::No;
    v.criterion = "real rank zero forces every H_1(j^H) injective; fails at H = " +
                  to_string(g, r.h);
    v.notes.push_back("L2 element outside L1: " + vector_string(*r.condition.witness));
    if (r.h1.witness) {
      v.notes.push_back("H_1 cycle of the restriction bounding in the graph: " +
                        vector_string(*r.h1.witness));
    }
    return v;
  }

  if (strong.verdict.state == Truth::No) {
    v.state = Truth::No;
    v.conditional = strong.verdict.conditional;
    v.criterion = "real rank zero forces strong aperiodicity; " + strong.verdict.criterion;
    v.notes = strong.verdict.notes;
    return v;
  }

  if (pi.state == Truth::Yes && strong.verdict.state == Truth::Yes) {
    v.state = Truth::Yes;
    v.criterion =
        "purely infinite, strongly aperiodic and every H_1(j^H) injective => real rank zero";
    return v;
  }

  v.state = Truth::Unknown;
  v.criterion = "no certificate either way";
  if (pi.state != Truth::Yes) v.notes.push_back("pure infiniteness not certified");
  if (strong.verdict.state != Truth::Yes) {
    v.notes.push_back("strong aperiodicity not certified");
    for (const VertexSet& h : strong.blocking)
      v.notes.push_back("quotient by " + to_string(g, h) + " lacks a certificate");
  }
  return v;
}

TriVerdict td0_verdict(const TwoGraph& g, const SearchBounds& bounds) {
  return td0_from(strong_aperiodicity_verdict(g, bounds));
}

TriVerdict pi_verdict(const TwoGraph& g, const SearchBounds& bounds) {
  return pi_from(aperiodicity_verdict(g, bounds));
}

TriVerdict rr0_verdict(const TwoGraph& g, const SearchBounds& bounds) {
  return analyse(g, bounds).rr0;
}

std::vector<ReductionPair> reduction_report(const TwoGraph& g,
                                            const SatHereditaryLattice& lattice) {
  std::vector<ReductionPair> out;
  for (const VertexSet& k : lattice.members) {
    if (k.is_full()) continue;
    const TwoGraph q = quotient_graph(g, k);
    for (const VertexSet& h : lattice.members) {
      if (h == k || !k.is_subset_of(h)) continue;
      const VertexSet diff = restrict_vertices(g, h - k, q);
      ReductionPair p{k, h, vertex_names(g, h - k), is_saturated_hereditary(q, diff), false};
      if (!p.difference_sat_hereditary) continue;
      p.subquotient_cofinal = is_cofinal(restriction_graph(q, diff));
      if (p.subquotient_cofinal) out.push_back(std::move(p));
    }
  }
  return out;
}

std::vector<ReductionPair> reduction_report(const TwoGraph& g) {
  return reduction_report(g, enumerate_sat_hereditary(g));
}

AnalysisReport analyse(const TwoGraph& g, const SearchBounds& bounds) {
  AnalysisReport r{g, bounds, enumerate_sat_hereditary(g), maximal_tails(g), {}, {}, {}, {},
                   {}, {}, {}, {}};
  for (const VertexSet& h : r.lattice.members) {
    if (h.empty() || h.is_full()) continue;
    r.ideals.push_back(analyse_ideal(g, h));
  }
  r.aperiodicity = aperiodicity_verdict(g, bounds);
  r.strong = strong_aperiodicity_verdict(g, bounds, r.lattice, r.aperiodicity);
  r.k = k1_of_two_graph(g);
  r.td0 = td0_from(r.strong);
  r.pi = pi_from(r.aperiodicity);
  r.rr0 = rr0_from(g, r.pi, r.strong, r.ideals);
  // Only an exhaustive lattice lets "every H passes" stand as a certificate.
  if (!r.lattice.exhaustive && r.rr0.state == Truth::Yes) {
    r.rr0.state = Truth::Unknown;
    r.rr0.criterion = "saturated hereditary lattice not enumerated exhaustively";
  }
  r.reductions = reduction_report(g, r.lattice);
  return r;
}

}  // namespace kgraph
