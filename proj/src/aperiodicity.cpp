#include "kgraph/aperiodicity.hpp"

#include <map>

#include "kgraph/error.hpp"

namespace kgraph {

std::string to_string(Truth t) {
  switch (t) {
    case Truth::Yes: return "Yes";
    case Truth::No: return "No";
    case Truth::Unknown: return "Unknown";
  }
  return "Unknown";
}

namespace {

bool is_cycle_of_degree(const Path& p, VertexId u, Degree d) {
  return p.range == u && p.source == u && p.degree == d;
}

}  // namespace

bool verify_quartet(const TwoGraph& g, const Quartet& q) {
  if (q.alpha1.degree.red != 0 || q.alpha1.degree.blue == 0) return false;
  if (q.beta1.degree.blue != 0 || q.beta1.degree.red == 0) return false;
  const Degree a = q.alpha1.degree;
  const Degree b = q.beta1.degree;
  for (const Path* p : {&q.alpha1, &q.alpha2})
    if (!is_cycle_of_degree(*p, q.vertex, a)) return false;
  for (const Path* p : {&q.beta1, &q.beta2})
    if (!is_cycle_of_degree(*p, q.vertex, b)) return false;
  if (q.alpha1 == q.alpha2 || q.beta1 == q.beta2) return false;
  // each path must itself be a normal-form word of g
  for (const Path* p : {&q.alpha1, &q.alpha2, &q.beta1, &q.beta2})
    if (normal_form(g, p->edges) != *p) return false;
  return compose(g, q.beta2, q.alpha1) == compose(g, q.alpha1, q.beta2) &&
         compose(g, q.beta2, q.alpha2) == compose(g, q.alpha2, q.beta2) &&
         compose(g, q.beta1, q.alpha1) == compose(g, q.alpha2, q.beta1) &&
         compose(g, q.beta1, q.alpha2) == compose(g, q.alpha1, q.beta1);
}

std::optional<Quartet> find_quartet(const TwoGraph& g, VertexId u, Degree max_degree,
                                    std::size_t cap) {
  if (max_degree.blue < 1 || max_degree.red < 1) {
    throw Error(Errc::DegreeOutOfRange, "quartet search needs max degree >= (1,1)");
  }
  for (std::uint32_t total = 2; total <= max_degree.length(); ++total) {
    for (std::uint32_t a = 1; a <= max_degree.blue && a < total; ++a) {
      const std::uint32_t b = total - a;
      if (b > max_degree.red) continue;
      const auto alphas = enumerate_paths(g, u, u, {a, 0}, cap);
      if (alphas.size() < 2) continue;
      const auto betas = enumerate_paths(g, u, u, {0, b}, cap);
      if (betas.size() < 2) continue;

      std::map<std::vector<EdgeId>, std::size_t> alpha_index;
      for (std::size_t i = 0; i < alphas.size(); ++i) alpha_index.emplace(alphas[i].edges, i);

      // after[j][i] = i' when beta_j alpha_i = alpha_i' beta_j, else npos
      constexpr std::size_t npos = ~std::size_t{0};
      std::vector<std::vector<std::size_t>> after(betas.size(),
                                                  std::vector<std::size_t>(alphas.size(), npos));
      for (std::size_t j = 0; j < betas.size(); ++j) {
        for (std::size_t i = 0; i < alphas.size(); ++i) {
          const Path p = compose(g, betas[j], alphas[i]);
          const std::vector<EdgeId> blue(p.edges.begin(), p.edges.begin() + a);
          const std::vector<EdgeId> red(p.edges.begin() + a, p.edges.end());
          if (red == betas[j].edges) after[j][i] = alpha_index.at(blue);
        }
      }

      for (std::size_t i1 = 0; i1 < alphas.size(); ++i1) {
        for (std::size_t i2 = 0; i2 < alphas.size(); ++i2) {
          if (i1 == i2) continue;
          for (std::size_t j1 = 0; j1 < betas.size(); ++j1) {
            if (after[j1][i1] != i2 || after[j1][i2] != i1) continue;
            for (std::size_t j2 = 0; j2 < betas.size(); ++j2) {
              if (j2 == j1) continue;
              if (after[j2][i1] != i1 || after[j2][i2] != i2) continue;
              return Quartet{u, alphas[i1], alphas[i2], betas[j1], betas[j2]};
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

namespace {

std::vector<Colour> segment_pattern(Degree total, Degree m, Degree n) {
  std::vector<Colour> pattern;
  pattern.reserve(total.length());
  auto push = [&](std::uint32_t count, Colour c) { pattern.insert(pattern.end(), count, c); };
  push(m.blue, Colour::Blue);
  push(m.red, Colour::Red);
  push(n.blue - m.blue, Colour::Blue);
  push(n.red - m.red, Colour::Red);
  push(total.blue - n.blue, Colour::Blue);
  push(total.red - n.red, Colour::Red);
  return pattern;
}

}  // namespace

std::variant<PeriodicityWitness, PeriodicityRefutation> check_periodicity(
    const TwoGraph& g, VertexId v, Degree m, Degree n, unsigned depth, std::size_t cap) {
  if (depth < 1) throw Error(Errc::DegreeOutOfRange, "periodicity depth must be >= 1");
  if (m == n) throw Error(Errc::DegreeOutOfRange, "periodicity pair needs m != n");
  const Degree shift{depth, depth};
  const Degree total = join(m, n) + shift;
  const auto pattern_m = segment_pattern(total, m, m + shift);
  const auto pattern_n = segment_pattern(total, n, n + shift);
  const auto len = static_cast<std::ptrdiff_t>(shift.length());
  const auto at_m = static_cast<std::ptrdiff_t>(m.length());
  const auto at_n = static_cast<std::ptrdiff_t>(n.length());

  std::optional<Path> failing;
  const std::size_t visited = for_each_path(
      g, v, total,
      [&](const Path& p) {
        const auto wm = reshape(g, p.edges, pattern_m);
        const auto wn = reshape(g, p.edges, pattern_n);
        if (!std::equal(wm.begin() + at_m, wm.begin() + at_m + len, wn.begin() + at_n)) {
          failing = p;
          return false;
        }
        return true;
      },
      cap);
  if (failing) return PeriodicityRefutation{v, m, n, depth, std::move(*failing)};
  return PeriodicityWitness{v, m, n, depth, true, visited};
}

PeriodicityScan periodicity_scan(const TwoGraph& g, VertexId v, Degree max_degree,
                                 unsigned depth, std::size_t cap) {
  std::vector<Degree> degrees;
  for (std::uint32_t a = 0; a <= max_degree.blue; ++a)
    for (std::uint32_t b = 0; b <= max_degree.red; ++b) degrees.push_back({a, b});
  PeriodicityScan scan;
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    for (std::size_t j = i + 1; j < degrees.size(); ++j) {
      auto r = check_periodicity(g, v, degrees[i], degrees[j], depth, cap);
      if (auto* w = std::get_if<PeriodicityWitness>(&r))
        scan.witnesses.push_back(*w);
      else
        scan.refutations.push_back(std::get<PeriodicityRefutation>(std::move(r)));
    }
  }
  return scan;
}

AperiodicityResult aperiodicity_verdict(const TwoGraph& g, const SearchBounds& bounds) {
  AperiodicityResult out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (auto q = find_quartet(g, v, bounds.max_degree, bounds.cap))
      out.quartets.push_back(std::move(*q));
    else
      out.vertices_without_quartet.push_back(v);
  }
  if (out.vertices_without_quartet.empty()) {
    out.verdict.state = Truth::Yes;
    out.verdict.criterion = "aperiodic quartet at every vertex";
    return out;
  }
  out.verdict.state = Truth::Unknown;
  out.verdict.criterion = "no quartet certificate; periodicity is not decidable by finite search";
  for (VertexId v : out.vertices_without_quartet) {
    out.verdict.notes.push_back("no aperiodic quartet at " + g.graph().vertex_name(v) +
                                " up to degree " + to_string(bounds.max_degree));
    auto scan = periodicity_scan(g, v, bounds.max_degree, bounds.evidence_depth(), bounds.cap);
    for (auto& w : scan.witnesses) {
      out.verdict.notes.push_back("periodicity witness at " + g.graph().vertex_name(v) + ": " +
                                  to_string(w.m) + " ~ " + to_string(w.n) + " to depth " +
                                  std::to_string(w.depth));
      out.witnesses.push_back(w);
    }
  }
  return out;
}

StrongAperiodicityResult strong_aperiodicity_verdict(const TwoGraph& g,
                                                     const SearchBounds& bounds,
                                                     const SatHereditaryLattice& lattice,
                                                     const AperiodicityResult& own) {
  StrongAperiodicityResult out;
  out.quartets = own.quartets;
  if (own.verdict.state == Truth::Yes) {
    // Quartet loops at v avoid every H not containing v, so they certify
    // every quotient at once.
    out.via_vertex_quartets = true;
    out.verdict.state = Truth::Yes;
    out.verdict.criterion = "aperiodic quartet at every vertex (covers every quotient)";
    return out;
  }

  for (const VertexSet& h : lattice.members) {
    if (h.is_full()) continue;
    QuotientAperiodicity qa{h, h.empty() ? g : quotient_graph(g, h), {}};
    qa.result = h.empty() ? own : aperiodicity_verdict(qa.quotient, bounds);
    if (qa.result.verdict.state != Truth::Yes) {
      out.blocking.push_back(h);
      if (!qa.result.witnesses.empty()) out.evidence_found = true;
    }
    out.quotients.push_back(std::move(qa));
  }

  if (out.blocking.empty()) {
    out.verdict.state = Truth::Yes;
    out.verdict.criterion = "every proper saturated hereditary quotient certified aperiodic";
    return out;
  }
  for (const QuotientAperiodicity& qa : out.quotients) {
    if (qa.result.verdict.state == Truth::Yes) continue;
    for (const auto& note : qa.result.verdict.notes)
      out.verdict.notes.push_back("quotient by " + to_string(g, qa.h) + ": " + note);
  }
  if (bounds.accept_depth_evidence && out.evidence_found) {
    out.verdict.state = Truth::No;
    out.verdict.conditional = true;
    out.verdict.criterion = "periodicity witness in a quotient, accepted at depth " +
                            std::to_string(*bounds.accept_depth_evidence);
  } else {
    out.verdict.state = Truth::Unknown;
    out.verdict.criterion = "some quotient lacks an aperiodicity certificate";
  }
  return out;
}

StrongAperiodicityResult strong_aperiodicity_verdict(const TwoGraph& g,
                                                     const SearchBounds& bounds) {
  return strong_aperiodicity_verdict(g, bounds, enumerate_sat_hereditary(g),
                                     aperiodicity_verdict(g, bounds));
}

}  // namespace kgraph
