#include <doctest.h>

#include "kgraph/error.hpp"
#include "kgraph/khomology.hpp"
#include "support.hpp"

using namespace kgraph;

namespace {

VertexSet only(const TwoGraph& g, const char* name) {
  VertexSet s(g.vertex_count());
  s.insert(g.graph().vertex(name));
  return s;
}

}  // namespace

TEST_CASE("differentials of the one-vertex fixtures") {
  const ChainComplex t = complex_of(torus());
  CHECK(t.boundary(1) == IntMatrix{{0, 0}});
  CHECK(t.boundary(2) == IntMatrix{{0}, {0}});
  const ChainComplex f = complex_of(ex64());
  CHECK(f.boundary(1) == IntMatrix{{-1, -1}});
  CHECK(f.boundary(2) == IntMatrix{{1}, {-1}});

  const ChainComplex c3 = build_complex({IntMatrix::identity(2), IntMatrix::identity(2),
                                         IntMatrix::identity(2)});
  for (std::size_t a = 0; a <= 4; ++a) CHECK(c3.boundary(a).is_zero());
  CHECK(c3.dimension(2) == 6);
  CHECK_THROWS_AS(build_complex({IntMatrix{{0, 1}, {0, 0}}, IntMatrix{{0, 0}, {1, 0}}}), Error);
  CHECK_THROWS_AS(build_complex({IntMatrix::identity(2), IntMatrix::identity(3)}), Error);
}

TEST_CASE("homology of the fixtures") {
  const KInvariants t = k1_of_two_graph(torus());
  CHECK(t.h0 == AbelianGroup{1, {}});
  CHECK(t.h1 == AbelianGroup{2, {}});
  CHECK(t.h2 == AbelianGroup{1, {}});
  const KInvariants f = k1_of_two_graph(ex64());
  CHECK(f.h0.is_trivial());
  CHECK(f.k1().is_trivial());
  CHECK(f.h2.is_trivial());

  // one vertex, M1 = (1), M2 = (2): d1 = (0,-1), d2 = (1;0)
  const ChainComplex c = build_complex({IntMatrix{{1}}, IntMatrix{{2}}});
  CHECK(c.boundary(1) == IntMatrix{{0, -1}});
  CHECK(c.boundary(2) == IntMatrix{{1}, {0}});
  CHECK(homology(c)[1].is_trivial());
}

TEST_CASE("complexes are complexes") {
  std::vector<TwoGraph> graphs{torus(), ex64(), ex63(1), ex63(4), ex65_truncation(4)};
  for (std::uint64_t seed = 0; seed < 25; ++seed) graphs.push_back(random_two_graph(seed, 5));
  for (const TwoGraph& g : graphs) {
    const ChainComplex c = complex_of(g);
    CHECK((c.boundary(1) * c.boundary(2)).is_zero());
    const auto h = homology(c);
    CHECK(static_cast<long>(h[0].rank) - static_cast<long>(h[1].rank) +
              static_cast<long>(h[2].rank) ==
          0);
  }
}

TEST_CASE("chain map of a saturated hereditary set") {
  const TwoGraph g = ex63(2);
  const ChainMap j = chain_map(g, only(g, "w"));
  REQUIRE(j.components.size() == 3);
  // Z{w} (+) Z{w} -> Z^3 (+) Z^3 padding u, v with zeros
  CHECK(j.components[1] == IntMatrix{{0, 0}, {0, 0}, {1, 0}, {0, 0}, {0, 0}, {0, 1}});
  const ChainComplex source = complex_of(restriction_graph(g, only(g, "w")));
  const ChainComplex target = complex_of(g);
  CHECK(j.components[0] * source.boundary(1) == target.boundary(1) * j.components[1]);
  CHECK(commutes(j, source, target));

  const ChainMap id = chain_map(g, VertexSet::all(3));
  for (std::size_t a = 0; a <= 2; ++a) CHECK(id.components[a] == IntMatrix::identity(target.dimension(a)));
}

TEST_CASE("H1 injectivity") {
  for (unsigned n = 1; n <= 5; ++n) {
    const TwoGraph g = ex63(n);
    const H1Injectivity r = h1_map_injective(g, only(g, "w"));
    CHECK(r.injective == (n == 1));
    if (n > 1) {
      REQUIRE(r.witness.has_value());
      const ChainComplex target = complex_of(g);
      const ChainComplex source = complex_of(restriction_graph(g, only(g, "w")));
      CHECK(kernel_basis(source.boundary(1)).contains(*r.witness));
      CHECK_FALSE(image_lattice(source.boundary(2)).contains(*r.witness));
      CHECK(image_lattice(target.boundary(2)).contains(*r.witness_image));
    }
    CHECK(h1_map_injective(g, VertexSet::all(3)).injective);
  }
  const TwoGraph g = ex63(1);
  CHECK_THROWS_AS(h1_map_injective(g, only(g, "u")), Error);
  CHECK_THROWS_AS(h1_map_injective(g, VertexSet(3)), Error);
}
