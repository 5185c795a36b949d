#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kgraph/ideal_lattice.hpp"
#include "kgraph/linalg.hpp"
#include "kgraph/two_graph.hpp"

namespace kgraph {

/// D_a = (wedge^a Z^k) (x) Z Lambda^0 for 0 <= a <= k. Basis of D_a: the
/// increasing index tuples i_1 < ... < i_a in lexicographic order, each
/// followed by the vertices in vertex order.
class ChainComplex {
 public:
  ChainComplex(std::size_t k, std::size_t vertices, std::vector<IntMatrix> boundaries);

  std::size_t rank() const { return k_; }
  std::size_t vertex_count() const { return n_; }
  std::size_t dimension(std::size_t a) const;
  /// d_a : D_a -> D_{a-1}; d_0 and d_{k+1} are the zero maps of the right shape.
  IntMatrix boundary(std::size_t a) const;

  /// Index tuples labelling the wedge factor of D_a.
  static std::vector<std::vector<std::size_t>> wedge_basis(std::size_t k, std::size_t a);

 private:
  std::size_t k_;
  std::size_t n_;
  std::vector<IntMatrix> boundaries_;  // boundaries_[a-1] = d_a
};

/// d_a(eps_I (x) delta_v) = sum_j (-1)^(j+1) eps_{I \ i_j} (x) (1 - M_{i_j}^t) delta_v.
/// Takes the transposed matrices M_i^t; they must be square of one size and
/// pairwise commuting.
ChainComplex build_complex(const std::vector<IntMatrix>& transposed);

/// The complex of a 2-graph, from M1^t and M2^t.
ChainComplex complex_of(const TwoGraph& g);

/// H_a = ker d_a / im d_{a+1}, for a = 0..k.
std::vector<AbelianGroup> homology(const ChainComplex& c);

struct ChainMap {
  std::vector<IntMatrix> components;  // components[a] : D_a^source -> D_a^target
};

/// Inclusion of the complex of H Lambda into the complex of Lambda: identity
/// on the wedge factor, extension by zero on the vertex factor. The
/// commuting squares are checked on construction.
ChainMap chain_map(const TwoGraph& g, const VertexSet& h);

/// j_{a-1} d_a^source == d_a^target j_a for every a.
bool commutes(const ChainMap& j, const ChainComplex& source, const ChainComplex& target);

struct H1Injectivity {
  bool injective = true;
  /// Pulled-back lattice {a in ker d1^Gamma : j1(a) in im d2^Lambda}.
  Lattice pulled_back{0};
  /// On failure: a in ker d1^Gamma with j1(a) in im d2^Lambda but a not in
  /// im d2^Gamma.
  std::optional<IntVector> witness;
  std::optional<IntVector> witness_image;
};

/// Decides injectivity of H_1(j) for a chain map between rank-2 complexes.
H1Injectivity h1_injective(const ChainComplex& source, const ChainComplex& target,
                           const ChainMap& j);

/// H_1(j^H) : H_1(D^{H Lambda}) -> H_1(D^Lambda) is injective.
H1Injectivity h1_map_injective(const TwoGraph& g, const VertexSet& h);

struct KInvariants {
  AbelianGroup h0, h1, h2;
  const AbelianGroup& k1() const { return h1; }
};

/// K_1(C*(Lambda)) = H_1(D^Lambda); H_0 and H_2 are reported alongside.
KInvariants k1_of_two_graph(const TwoGraph& g);

}  // namespace kgraph
