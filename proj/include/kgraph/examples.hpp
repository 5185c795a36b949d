#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kgraph/two_graph.hpp"

namespace kgraph {

/// Three vertices u, v, w; two loops of each colour at u and v, n + 1 at w;
/// one edge of each colour u -> v, v -> u and w -> v (source -> range).
/// Quartet rules at every vertex, the straight swap elsewhere.
TwoGraph ex63(unsigned n);

/// One vertex, blue loops e1, e2, red loops f1, f2, rules e_i f_j = f_i e_j.
TwoGraph ex64();

/// One vertex, one loop of each colour commuting.
TwoGraph torus();

/// Stages v1..vN with a blue loop e_n at each and 2^(2n-1) red edges
/// v_{n+1} -> v_n whose first 2^(n-1) are cycled by the blue loop. The last
/// stage gets a red loop commuting with e_N so that no vertex is a source.
/// A modified truncation for machinery tests; carries no verdict claims.
TwoGraph ex65_truncation(unsigned stages);

/// M1 = p(A), M2 = q(A) for a random 0/1 matrix A and small polynomials
/// p, q, so the matrices commute; entries <= 3, no sources. Rules are a
/// random bijection per vertex pair between blue-red and red-blue paths.
TwoGraph random_two_graph(std::uint64_t seed, std::size_t vertices);

/// Dispatch by name: ex63 (n), ex64, torus, ex65-truncation (N),
/// random (seed, size). Unknown names throw UnknownExample, bad parameters
/// BadParams.
TwoGraph generate_example(const std::string& name, const std::vector<std::int64_t>& params);

}  // namespace kgraph
