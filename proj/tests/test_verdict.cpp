#include <doctest.h>

#include <sstream>

#include "kgraph/error.hpp"
#include "kgraph/examples.hpp"
#include "kgraph/io.hpp"
#include "kgraph/verdict.hpp"

using namespace kgraph;

namespace {

VertexSet only(const TwoGraph& g, const char* name) {
  VertexSet s(g.vertex_count());
  s.insert(g.graph().vertex(name));
  return s;
}

Errc error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return Errc::InvalidInput;
}

}  // namespace

TEST_CASE("condition (iii) on the three-vertex graph") {
  for (long n = 1; n <= 5; ++n) {
    const TwoGraph g = ex63(static_cast<unsigned>(n));
    const ConditionIII c = condition_iii(g, only(g, "w"));
    CHECK(c.common_fixed == Lattice(IntMatrix{{1}, {-1}}));
    CHECK(c.l2 == Lattice(IntMatrix{{1}, {1}}));
    CHECK(c.l1 == Lattice(IntMatrix{{n}, {n}}));
    CHECK(c.holds == (n == 1));
    CHECK(c.witness.has_value() == (n != 1));
  }
  const TwoGraph g = ex63(1);
  CHECK(error_of([&] { condition_iii(g, only(g, "v")); }) == Errc::NotSaturatedHereditary);
  CHECK(error_of([&] { condition_iii(g, VertexSet(3)); }) == Errc::TrivialH);
  CHECK(condition_iii(g, VertexSet::all(3)).holds);
}

TEST_CASE("condition (iii) with no common fixed vector") {
  // u has two loops of each colour, so M_T^t - 1 = (1) and K = 0; w is an
  // isolated torus, making {w} saturated hereditary.
  ColouredGraph d;
  d.add_vertex("u");
  d.add_vertex("w");
  d.add_edge("eu1", Colour::Blue, "u", "u");
  d.add_edge("eu2", Colour::Blue, "u", "u");
  d.add_edge("fu1", Colour::Red, "u", "u");
  d.add_edge("fu2", Colour::Red, "u", "u");
  d.add_edge("ew", Colour::Blue, "w", "w");
  d.add_edge("fw", Colour::Red, "w", "w");
  FactorisationRules rules;
  for (const char* e : {"eu1", "eu2"})
    for (const char* f : {"fu1", "fu2"})
      rules.push_back({d.edge_id(e), d.edge_id(f), d.edge_id(f), d.edge_id(e)});
  rules.push_back({d.edge_id("ew"), d.edge_id("fw"), d.edge_id("fw"), d.edge_id("ew")});
  const TwoGraph g = validate(std::move(d), std::move(rules));
  const ConditionIII cond = condition_iii(g, only(g, "w"));
  CHECK(cond.common_fixed.rank() == 0);
  CHECK(cond.l2.rank() == 0);
  CHECK(cond.holds);
}

TEST_CASE("condition (iii) agrees with the homology computation") {
  for (std::uint64_t seed = 100; seed < 140; ++seed) {
    const TwoGraph g = random_two_graph(seed, 2 + seed % 5);
    for (const VertexSet& h : enumerate_sat_hereditary(g).members) {
      if (h.empty()) continue;
      CHECK(condition_iii(g, h).holds == h1_map_injective(g, h).injective);
    }
  }
}

TEST_CASE("verdicts on the fixtures") {
  SearchBounds b;
  for (unsigned n = 1; n <= 3; ++n) {
    const TwoGraph g = ex63(n);
    CHECK(td0_verdict(g, b).state == Truth::Yes);
    CHECK(pi_verdict(g, b).state == Truth::Yes);
    const TriVerdict rr0 = rr0_verdict(g, b);
    CHECK(rr0.state == (n == 1 ? Truth::Yes : Truth::No));
    CHECK_FALSE(rr0.conditional);
    if (n > 1) CHECK_FALSE(rr0.notes.empty());
  }
  CHECK(td0_verdict(ex64(), b).state == Truth::Unknown);
  CHECK(pi_verdict(ex64(), b).state == Truth::Unknown);
  CHECK(rr0_verdict(ex64(), b).state == Truth::Unknown);
  CHECK(pi_verdict(torus(), b).state == Truth::Unknown);
  CHECK(td0_verdict(torus(), b).state == Truth::Unknown);
  b.accept_depth_evidence = 4;
  const TriVerdict flip = rr0_verdict(ex64(), b);
  CHECK(flip.state == Truth::No);
  CHECK(flip.conditional);
  CHECK(td0_verdict(ex64(), b).state == Truth::No);
}

TEST_CASE("verdict rules replayed against stored facts") {
  SearchBounds b;
  b.max_degree = {1, 1};
  b.depth = 2;
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const AnalysisReport r = analyse(random_two_graph(seed, 1 + seed % 4), b);
    bool all_hold = true;
    for (const IdealRecord& rec : r.ideals) {
      CHECK(rec.condition.holds == rec.h1.injective);
      all_hold = all_hold && rec.condition.holds;
    }
    if (!all_hold) {
      CHECK(r.rr0.state == Truth::No);
      CHECK_FALSE(r.rr0.conditional);
    } else if (r.strong.verdict.state == Truth::No) {
      CHECK(r.rr0.state == Truth::No);
    } else if (r.pi.state == Truth::Yes && r.strong.verdict.state == Truth::Yes) {
      CHECK(r.rr0.state == Truth::Yes);
    } else {
      CHECK(r.rr0.state == Truth::Unknown);
    }
    if (r.rr0.state == Truth::Yes) {
      CHECK(r.pi.state == Truth::Yes);
      CHECK(r.td0.state == Truth::Yes);
    }
    CHECK(r.pi.state != Truth::No);
  }
}

TEST_CASE("reduction pairs") {
  const auto flip = reduction_report(ex64());
  REQUIRE(flip.size() == 1);
  CHECK(flip[0].k.empty());
  CHECK(flip[0].h.is_full());

  const TwoGraph g = ex63(2);
  const auto pairs = reduction_report(g);
  REQUIRE(pairs.size() == 2);
  CHECK(pairs[0].k.empty());
  CHECK(pairs[0].h == only(g, "w"));
  CHECK(pairs[1].k == only(g, "w"));
  CHECK(pairs[1].h.is_full());
  for (const auto& p : pairs) {
    CHECK(p.difference_sat_hereditary);
    CHECK(p.subquotient_cofinal);
  }

  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const TwoGraph r = random_two_graph(seed, 1 + seed % 6);
    CHECK_FALSE(reduction_report(r).empty());
  }
}

TEST_CASE("example generators") {
  CHECK(generate_example("ex63", {1}).vertex_count() == 3);
  CHECK(generate_example("ex64", {}).edge_count() == 4);
  CHECK(generate_example("torus", {}).rules().size() == 1);
  const TwoGraph t = generate_example("ex65-truncation", {4});
  CHECK(t.vertex_count() == 4);
  CHECK(t.edge_count() == 4 + 2 + 8 + 32 + 1);
  CHECK(error_of([] { generate_example("ex99", {}); }) == Errc::UnknownExample);
  CHECK(error_of([] { generate_example("ex63", {0}); }) == Errc::BadParams);
  CHECK(error_of([] { generate_example("ex63", {}); }) == Errc::BadParams);
  CHECK(error_of([] { generate_example("ex65-truncation", {9}); }) == Errc::BadParams);
  for (std::int64_t seed = 0; seed < 50; ++seed) {
    const TwoGraph g = generate_example("random", {seed, 4});
    CHECK(g.vertex_count() == 4);
    const IntMatrix m1 = g.connectivity(Colour::Blue), m2 = g.connectivity(Colour::Red);
    CHECK(m1 * m2 == m2 * m1);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) CHECK(m1(i, j) <= 3);
  }
  // the same seed gives the same graph
  CHECK(graph_to_json(random_two_graph(7, 5)) == graph_to_json(random_two_graph(7, 5)));
}

TEST_CASE("graph files") {
  const TwoGraph g = ex63(2);
  std::istringstream in(graph_to_json(g).dump());
  const TwoGraph back = read_graph(in);
  CHECK(graph_to_json(back) == graph_to_json(g));

  auto parse = [](const std::string& text) {
    std::istringstream s(text);
    return read_graph(s);
  };
  CHECK(error_of([&] { parse("{"); }) == Errc::InvalidInput);
  CHECK(error_of([&] { parse(R"({"k":3,"vertices":[],"edges":[],"factorisation":[]})"); }) ==
        Errc::InvalidInput);
  CHECK(error_of([&] { parse(R"({"k":2,"vertices":["v"],"edges":[]})"); }) ==
        Errc::InvalidInput);
  CHECK(error_of([&] {
          parse(R"({"k":2,"vertices":["v"],"edges":[{"id":"e","colour":3,"source":"v","range":"v"}],"factorisation":[]})");
        }) == Errc::InvalidInput);
  CHECK(error_of([&] {
          parse(R"({"k":2,"vertices":["v"],"edges":[{"id":"e","colour":1,"source":"v","range":"v"}],"factorisation":[]})");
        }) == Errc::SourceAtVertex);
  CHECK(parse(R"({"k":2,"vertices":["v"],
                  "edges":[{"id":"e","colour":1,"source":"v","range":"v"},
                           {"id":"f","colour":2,"source":"v","range":"v"}],
                  "factorisation":[{"blue":"e","red":"f","red_out":"f","blue_out":"e"}]})")
            .edge_count() == 2);
}

TEST_CASE("reports are deterministic and carry the fixed field order") {
  SearchBounds b;
  const Json a = report_json(analyse(ex63(3), b));
  const Json c = report_json(analyse(ex63(3), b));
  CHECK(a.dump() == c.dump());
  std::vector<std::string> keys;
  for (const auto& item : a.items()) keys.push_back(item.key());
  CHECK(keys == std::vector<std::string>{"schema", "graph", "bounds", "lattice", "ideals",
                                         "aperiodicity", "strong_aperiodicity", "k_theory",
                                         "verdicts", "reduction_pairs", "decisions"});
  CHECK(a["schema"] == kReportSchema);
  CHECK(a["verdicts"]["RR0"]["state"] == "No");
  CHECK(a["ideals"][0]["condition_iii"]["L1"] == Json::parse("[[3,3]]"));
  CHECK(a["ideals"][0]["condition_iii"]["L2"] == Json::parse("[[1,1]]"));
}
