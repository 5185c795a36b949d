#include <doctest.h>

#include "kgraph/aperiodicity.hpp"
#include "kgraph/error.hpp"
#include "support.hpp"

using namespace kgraph;

namespace {

bool has_witness(const PeriodicityScan& scan, Degree m, Degree n) {
  for (const auto& w : scan.witnesses)
    if ((w.m == m && w.n == n) || (w.m == n && w.n == m)) return true;
  return false;
}

}  // namespace

TEST_CASE("quartets at every vertex of the three-vertex graph") {
  for (unsigned n = 1; n <= 3; ++n) {
    const TwoGraph g = ex63(n);
    for (VertexId x = 0; x < 3; ++x) {
      const auto q = find_quartet(g, x, {1, 1});
      REQUIRE(q.has_value());
      CHECK(verify_quartet(g, *q));
      const std::string name = g.graph().vertex_name(x);
      CHECK(g.describe(q->alpha1) == "a_" + name + "_1");
      CHECK(g.describe(q->alpha2) == "a_" + name + "_2");
      CHECK(g.describe(q->beta1) == "b_" + name + "_1");
      CHECK(g.describe(q->beta2) == "b_" + name + "_2");
    }
  }
}

TEST_CASE("no quartet where none can exist") {
  CHECK_FALSE(find_quartet(torus(), 0, {3, 3}).has_value());
  CHECK_FALSE(find_quartet(ex64(), 0, {2, 2}).has_value());
  CHECK_FALSE(find_quartet(ex64(), 0, {3, 3}).has_value());
  CHECK_THROWS_AS(find_quartet(ex64(), 0, {0, 2}), Error);
}

TEST_CASE("quartet verification rejects tampered certificates") {
  const TwoGraph g = ex63(1);
  auto q = *find_quartet(g, 0, {1, 1});
  Quartet swapped = q;
  std::swap(swapped.beta1, swapped.beta2);
  CHECK_FALSE(verify_quartet(g, swapped));
  Quartet same = q;
  same.alpha2 = same.alpha1;
  CHECK_FALSE(verify_quartet(g, same));
}

TEST_CASE("quartets found on random graphs verify") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const TwoGraph g = random_two_graph(seed, 1 + seed % 4);
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      if (auto q = find_quartet(g, v, {2, 2})) CHECK(verify_quartet(g, *q));
  }
}

TEST_CASE("periodicity evidence for the flip graph and the torus") {
  const TwoGraph f = ex64();
  for (unsigned d = 1; d <= 5; ++d) {
    const auto r = check_periodicity(f, 0, {1, 0}, {0, 1}, d);
    REQUIRE(std::holds_alternative<PeriodicityWitness>(r));
    CHECK(std::get<PeriodicityWitness>(r).paths_checked ==
          (std::size_t{1} << (2 * (d + 1))));
  }
  const auto refuted = check_periodicity(f, 0, {1, 0}, {0, 0}, 2);
  REQUIRE(std::holds_alternative<PeriodicityRefutation>(refuted));
  // fresh enumeration at the same depth reproduces the failing path
  const Path bad = std::get<PeriodicityRefutation>(refuted).path;
  const Degree shift{2, 2};
  CHECK(segment(f, bad, {1, 0}, Degree{1, 0} + shift) !=
        segment(f, bad, {0, 0}, shift));
  CHECK(std::get<PeriodicityRefutation>(check_periodicity(f, 0, {1, 0}, {0, 0}, 2)).path == bad);

  const TwoGraph t = torus();
  for (unsigned d = 1; d <= 4; ++d) {
    const auto scan = periodicity_scan(t, 0, {2, 2}, d);
    CHECK(scan.refutations.empty());
    CHECK(has_witness(scan, {1, 0}, {0, 1}));
  }
  CHECK_THROWS_AS(check_periodicity(t, 0, {1, 0}, {1, 0}, 2), Error);
  CHECK_THROWS_AS(periodicity_scan(t, 0, {1, 1}, 0), Error);
}

TEST_CASE("witnesses are monotone in depth") {
  for (const TwoGraph& g : {ex64(), random_two_graph(3, 2), random_two_graph(8, 3)}) {
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      const auto deep = periodicity_scan(g, v, {1, 1}, 3);
      const auto shallow = periodicity_scan(g, v, {1, 1}, 2);
      for (const auto& w : deep.witnesses) CHECK(has_witness(shallow, w.m, w.n));
    }
  }
}

TEST_CASE("the three-vertex graph admits no periodicity witness") {
  const TwoGraph g = ex63(1);
  const auto scan = periodicity_scan(g, g.graph().vertex("u"), {2, 2}, 2);
  CHECK(scan.witnesses.empty());
  CHECK(scan.refutations.size() == 36);
}

TEST_CASE("aperiodicity verdicts") {
  SearchBounds b;
  const auto yes = aperiodicity_verdict(ex63(2), b);
  CHECK(yes.verdict.state == Truth::Yes);
  CHECK(yes.quartets.size() == 3);

  const auto flip = aperiodicity_verdict(ex64(), b);
  CHECK(flip.verdict.state == Truth::Unknown);
  bool found = false;
  for (const auto& w : flip.witnesses) found = found || (w.m == Degree{0, 1} && w.n == Degree{1, 0});
  CHECK(found);

  const auto t = aperiodicity_verdict(torus(), b);
  CHECK(t.verdict.state == Truth::Unknown);
  CHECK_FALSE(t.witnesses.empty());
}

TEST_CASE("strong aperiodicity verdicts") {
  SearchBounds b;
  const auto s = strong_aperiodicity_verdict(ex63(3), b);
  CHECK(s.verdict.state == Truth::Yes);
  CHECK(s.via_vertex_quartets);

  const auto flip = strong_aperiodicity_verdict(ex64(), b);
  CHECK(flip.verdict.state == Truth::Unknown);
  CHECK(flip.evidence_found);
  b.accept_depth_evidence = 5;
  const auto accepted = strong_aperiodicity_verdict(ex64(), b);
  CHECK(accepted.verdict.state == Truth::No);
  CHECK(accepted.verdict.conditional);

  const auto t = strong_aperiodicity_verdict(torus(), SearchBounds{});
  CHECK(t.verdict.state == Truth::Unknown);
}

TEST_CASE("quartet loops survive every quotient avoiding their vertex") {
  for (unsigned n = 1; n <= 3; ++n) {
    const TwoGraph g = ex63(n);
    const auto own = aperiodicity_verdict(g, SearchBounds{});
    for (const VertexSet& h : enumerate_sat_hereditary(g).members) {
      if (h.is_full()) continue;
      const TwoGraph q = quotient_graph(g, h);
      for (const Quartet& quartet : own.quartets) {
        if (h.contains(quartet.vertex)) continue;
        const std::string name = g.graph().vertex_name(quartet.vertex);
        auto carry = [&](const Path& p) {
          std::vector<EdgeId> w;
          for (EdgeId e : p.edges) w.push_back(q.graph().edge_id(g.edge(e).name));
          return normal_form(q, w);
        };
        const Quartet moved{q.graph().vertex(name), carry(quartet.alpha1), carry(quartet.alpha2),
                            carry(quartet.beta1), carry(quartet.beta2)};
        CHECK(verify_quartet(q, moved));
      }
    }
  }
}
