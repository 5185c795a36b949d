// Independent checkers used by the unit and acceptance suites. Nothing here
// calls into the library's elimination or path machinery.
#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "kgraph/examples.hpp"
#include "kgraph/int_matrix.hpp"
#include "kgraph/two_graph.hpp"

namespace kgraph::testing {

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                               long lo, long hi) {
  std::uniform_int_distribution<long> entry(lo, hi);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = entry(rng);
  return m;
}

/// Cofactor expansion along the first row.
inline Integer laplace_determinant(const IntMatrix& a) {
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  if (n == 1) return a(0, 0);
  Integer det = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (a(0, j) == 0) continue;
    std::vector<std::size_t> rows, cols;
    for (std::size_t i = 1; i < n; ++i) rows.push_back(i);
    for (std::size_t c = 0; c < n; ++c)
      if (c != j) cols.push_back(c);
    const Integer minor = laplace_determinant(a.select(rows, cols));
    det += (j % 2 == 0 ? 1 : -1) * a(0, j) * minor;
  }
  return det;
}

inline bool is_identity(const IntMatrix& m) {
  return m.rows() == m.cols() && m == IntMatrix::identity(m.rows());
}

/// Calls f on every vector of `dim` entries in [-bound, bound].
inline void for_each_box_vector(std::size_t dim, long bound,
                                const std::function<void(const std::vector<long>&)>& f) {
  std::vector<long> x(dim, -bound);
  while (true) {
    f(x);
    std::size_t i = 0;
    while (i < dim && x[i] == bound) x[i++] = -bound;
    if (i == dim) return;
    ++x[i];
  }
}

inline IntVector to_int_vector(const std::vector<long>& x) {
  return IntVector(x.begin(), x.end());
}

/// Number of edge words blue^a red^b (written order, range end first) from
/// u to v, by depth-first search over raw edges.
inline std::uint64_t count_words(const TwoGraph& g, VertexId u, VertexId v, unsigned a,
                                 unsigned b) {
  const auto& edges = g.graph().edges();
  std::function<std::uint64_t(VertexId, unsigned)> walk = [&](VertexId at, unsigned step) {
    if (step == a + b) return std::uint64_t{at == v};
    const Colour want = step < a ? Colour::Blue : Colour::Red;
    std::uint64_t total = 0;
    for (const Edge& e : edges)
      if (e.colour == want && e.range == at) total += walk(e.source, step + 1);
    return total;
  };
  return walk(u, 0);
}

/// M_i(u, v) counted straight from the edge list.
inline IntMatrix edge_count_matrix(const TwoGraph& g, Colour c) {
  IntMatrix m(g.vertex_count(), g.vertex_count());
  for (const Edge& e : g.graph().edges())
    if (e.colour == c) m(e.range, e.source) += 1;
  return m;
}

inline IntMatrix matrix_power(const IntMatrix& m, unsigned p) {
  IntMatrix out = IntMatrix::identity(m.rows());
  for (unsigned i = 0; i < p; ++i) out = out * m;
  return out;
}

/// Fixtures shared by several suites, with names for diagnostics.
struct Fixture {
  std::string name;
  TwoGraph graph;
};

inline std::vector<Fixture> named_fixtures() {
  std::vector<Fixture> out;
  for (unsigned n = 1; n <= 3; ++n) out.push_back({"ex63(" + std::to_string(n) + ")", ex63(n)});
  out.push_back({"ex64", ex64()});
  out.push_back({"torus", torus()});
  out.push_back({"ex65-truncation(3)", ex65_truncation(3)});
  return out;
}

}  // namespace kgraph::testing
