#include <doctest.h>

#include <numeric>

#include "kgraph/error.hpp"
#include "kgraph/linalg.hpp"
#include "support.hpp"

using namespace kgraph;
using kgraph::testing::for_each_box_vector;
using kgraph::testing::is_identity;
using kgraph::testing::laplace_determinant;
using kgraph::testing::random_matrix;

namespace {

void check_smith(const IntMatrix& a) {
  const SmithDecomposition d = smith_normal_form(a);
  CHECK(d.U * d.S * d.V == a);
  CHECK(is_identity(d.U * d.U_inv));
  CHECK(is_identity(d.V * d.V_inv));
  CHECK(d.U_inv * a * d.V_inv == d.S);
  for (std::size_t i = 0; i < d.S.rows(); ++i)
    for (std::size_t j = 0; j < d.S.cols(); ++j)
      if (i != j) CHECK(d.S(i, j) == 0);
  const IntVector diag = d.diagonal();
  for (std::size_t i = 0; i < diag.size(); ++i) {
    CHECK(diag[i] >= 0);
    if (i + 1 < diag.size() && diag[i] != 0) CHECK(diag[i + 1] % diag[i] == 0);
    if (i + 1 < diag.size() && diag[i] == 0) CHECK(diag[i + 1] == 0);
  }
}

}  // namespace

TEST_CASE("smith form of small fixed matrices") {
  const auto d = smith_normal_form(IntMatrix{{2, 4}, {6, 8}});
  // d1 = gcd of entries, d1 * d2 = |det|
  CHECK(d.diagonal() == IntVector{2, 4});
  CHECK(smith_normal_form(IntMatrix::identity(3)).S == IntMatrix::identity(3));
  CHECK(smith_normal_form(IntMatrix(2, 3)).S == IntMatrix(2, 3));
  CHECK(smith_normal_form(IntMatrix(0, 3)).rank() == 0);
  check_smith(IntMatrix(3, 0));
}

TEST_CASE("smith decomposition on random matrices") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::size_t> dim(1, 8);
  for (int trial = 0; trial < 200; ++trial) {
    const IntMatrix a = random_matrix(rng, dim(rng), dim(rng), -10, 10);
    check_smith(a);
  }
}

TEST_CASE("invariant factors match determinant and entry gcd") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const IntMatrix a = random_matrix(rng, n, n, -6, 6);
    const IntVector diag = smith_normal_form(a).diagonal();
    Integer product = 1;
    for (const Integer& x : diag) product *= x;
    const Integer det = laplace_determinant(a);
    CHECK(product == abs(det));
    CHECK(determinant(a) == det);
    Integer g = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) g = gcd(g, a(i, j));
    CHECK(diag[0] == g);
  }
}

TEST_CASE("kernel basis") {
  CHECK(kernel_basis(IntMatrix::identity(3)).rank() == 0);
  const Lattice k = kernel_basis(IntMatrix{{-1, -1}});
  CHECK(k == Lattice(IntMatrix{{1}, {-1}}));
  CHECK(kernel_basis(IntMatrix{{1, 1}, {1, 1}, {1, 1}, {1, 1}}) == Lattice(IntMatrix{{1}, {-1}}));

  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = 1 + trial % 3, cols = 2 + trial % 3;
    const IntMatrix a = random_matrix(rng, rows, cols, -3, 3);
    const Lattice ker = kernel_basis(a);
    CHECK((a * ker.basis()).is_zero());
    CHECK(ker.rank() == cols - smith_normal_form(a).rank());
    for_each_box_vector(cols, 3, [&](const std::vector<long>& x) {
      const IntVector v = kgraph::testing::to_int_vector(x);
      const IntVector ax = a * v;
      bool zero = true;
      for (const Integer& y : ax) zero = zero && y == 0;
      if (zero) CHECK(ker.contains(v));
    });
  }
}

TEST_CASE("solve") {
  const IntVector b{4, -7, 2};
  CHECK(solve(IntMatrix::identity(3), b) == b);
  CHECK_FALSE(solve(IntMatrix{{2}}, IntVector{3}).has_value());
  // condition (iii) at H = {w} for the n = 2 three-vertex graph
  CHECK_FALSE(solve(IntMatrix{{2}, {2}}, IntVector{1, 1}).has_value());
  CHECK(solve(IntMatrix{{2}, {2}}, IntVector{2, 2}) == IntVector{1});
  CHECK_THROWS_AS(solve(IntMatrix{{1, 2}}, IntVector{1, 2}), Error);
}

TEST_CASE("hermite form generates the same lattice") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 80; ++trial) {
    const IntMatrix a = random_matrix(rng, 1 + trial % 5, 1 + (trial / 5) % 5, -8, 8);
    const IntMatrix h = column_hermite_form(a);
    CHECK(h.cols() == smith_normal_form(a).rank());
    for (std::size_t c = 0; c < a.cols(); ++c) CHECK(solve(h, a.column(c)).has_value());
    for (std::size_t c = 0; c < h.cols(); ++c) CHECK(solve(a, h.column(c)).has_value());
    // lower echelon with positive pivots, reduced entries left of each pivot
    std::size_t prev = 0;
    for (std::size_t c = 0; c < h.cols(); ++c) {
      std::size_t pivot = 0;
      while (pivot < h.rows() && h(pivot, c) == 0) ++pivot;
      REQUIRE(pivot < h.rows());
      if (c > 0) CHECK(pivot > prev);
      CHECK(h(pivot, c) > 0);
      for (std::size_t l = 0; l < c; ++l) {
        CHECK(h(pivot, l) >= 0);
        CHECK(h(pivot, l) < h(pivot, c));
      }
      prev = pivot;
    }
  }
}

TEST_CASE("lattice containment and intersection") {
  const Lattice z = Lattice::full(1);
  const Lattice two(IntMatrix{{2}});
  CHECK(lattice_contains(z, two));
  CHECK_FALSE(lattice_contains(two, z));
  CHECK(lattice_contains(two, Lattice::zero(1)));
  for (long n = 1; n <= 5; ++n) {
    const Lattice l1(IntMatrix{{n}, {n}});
    const Lattice l2(IntMatrix{{1}, {1}});
    CHECK(lattice_contains(l1, l2) == (n == 1));
  }
  const Lattice a(IntMatrix{{2, 0}, {0, 3}});
  const Lattice b(IntMatrix{{3, 0}, {0, 2}});
  CHECK(intersect(a, b) == Lattice(IntMatrix{{6, 0}, {0, 6}}));
}

TEST_CASE("quotient groups") {
  CHECK(quotient_group(Lattice::full(2), Lattice::zero(2)) == AbelianGroup{2, {}});
  for (long n = 2; n <= 6; ++n) {
    const AbelianGroup g = quotient_group(Lattice::full(1), Lattice(IntMatrix{{n}}));
    CHECK(g.rank == 0);
    CHECK(g.torsion == IntVector{n});
  }
  // one vertex with n + 1 loops of each colour: ker d1 = Z(1,-1), im d2 = nZ(1,-1)
  for (long n = 1; n <= 4; ++n) {
    const IntMatrix d1{{-n, -n}};
    const IntMatrix d2{{n}, {-n}};
    const AbelianGroup h1 = quotient_group(kernel_basis(d1), image_lattice(d2));
    if (n == 1)
      CHECK(h1.is_trivial());
    else
      CHECK(h1.torsion == IntVector{n});
  }
  CHECK(to_string(AbelianGroup{2, {3}}) == "Z^2 + Z/3");
  CHECK(to_string(AbelianGroup{0, {}}) == "0");
  CHECK_THROWS_AS(quotient_group(Lattice(IntMatrix{{2}}), Lattice::full(1)), Error);
}
