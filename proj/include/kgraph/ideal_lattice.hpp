#pragma once

#include <string>
#include <vector>

#include "kgraph/int_matrix.hpp"
#include "kgraph/two_graph.hpp"

namespace kgraph {

/// A subset of the vertices of a fixed graph.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : bits_(universe, false) {}
  VertexSet(std::size_t universe, std::initializer_list<VertexId> members);
  static VertexSet all(std::size_t universe);
  static VertexSet from_mask(std::size_t universe, std::uint64_t mask);

  std::size_t universe() const { return bits_.size(); }
  bool contains(VertexId v) const { return bits_[v]; }
  void insert(VertexId v) { bits_[v] = true; }
  void erase(VertexId v) { bits_[v] = false; }
  std::size_t size() const;
  bool empty() const { return size() == 0; }
  bool is_full() const { return size() == universe(); }
  std::vector<VertexId> members() const;

  bool is_subset_of(const VertexSet& other) const;
  VertexSet complement() const;
  VertexSet operator|(const VertexSet& o) const;
  VertexSet operator&(const VertexSet& o) const;
  VertexSet operator-(const VertexSet& o) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<bool> bits_;
};

/// Cardinality first, then lexicographic on the sorted member lists.
bool canonical_less(const VertexSet& a, const VertexSet& b);

std::vector<std::string> vertex_names(const TwoGraph& g, const VertexSet& s);
std::string to_string(const TwoGraph& g, const VertexSet& s);  // "{u,v}"

bool is_hereditary(const TwoGraph& g, const VertexSet& s);
bool is_saturated(const TwoGraph& g, const VertexSet& s);
inline bool is_saturated_hereditary(const TwoGraph& g, const VertexSet& s) {
  return is_hereditary(g, s) && is_saturated(g, s);
}

/// Least hereditary superset.
VertexSet hereditary_closure(const TwoGraph& g, const VertexSet& s);
/// Least saturated superset of a hereditary set (stays hereditary).
VertexSet saturation(const TwoGraph& g, const VertexSet& s);

inline constexpr std::size_t kExhaustiveVertexCap = 20;

struct SatHereditaryLattice {
  std::vector<VertexSet> members;  // canonical order; front() is empty
  bool exhaustive = true;          // false: closure-generated, maybe incomplete

  bool is_trivial() const { return members.size() <= 2; }
  bool contains(const VertexSet& s) const;
};

/// Every saturated hereditary set. Scans all subsets when the graph has at
/// most `exhaustive_cap` vertices; otherwise closes the saturated hereditary
/// closures of single vertices under joins and meets.
SatHereditaryLattice enumerate_sat_hereditary(
    const TwoGraph& g, std::size_t exhaustive_cap = kExhaustiveVertexCap);

/// The graph on the complement of H with the edges and rules avoiding H.
TwoGraph quotient_graph(const TwoGraph& g, const VertexSet& h);
/// The graph on H with every edge whose range lies in H.
TwoGraph restriction_graph(const TwoGraph& g, const VertexSet& h);
/// Vertex set of `sub` (a quotient or restriction of g) as a subset of g.
VertexSet embed_vertices(const TwoGraph& g, const TwoGraph& sub);
/// Re-express a subset of g's vertices inside `sub` (names must exist there).
VertexSet restrict_vertices(const TwoGraph& g, const VertexSet& s,
                            const TwoGraph& sub);

/// reach[w] = { v : v Lambda w != empty }, i.e. vertices reachable from w
/// following edges from source to range (w itself included).
std::vector<VertexSet> reachability(const TwoGraph& g);

bool is_maximal_tail(const TwoGraph& g, const VertexSet& t);

struct MaximalTails {
  std::vector<VertexSet> tails;  // canonical order
  bool exhaustive = true;
};
MaximalTails maximal_tails(const TwoGraph& g,
                           std::size_t exhaustive_cap = kExhaustiveVertexCap);

/// Operative cofinality criterion: the saturated hereditary lattice is
/// {empty, all vertices}.
bool is_cofinal(const TwoGraph& g);

/// M_i^t split along Lambda^0 = H u T, H listed first (both in vertex order):
///   M_i^t = [ top_left  top_right    ]
///           [ bottom_left bottom_right ]
/// with bottom_left == 0 whenever H is hereditary.
struct TransposeBlocks {
  IntMatrix h;            // M^t_{i,H}
  IntMatrix h_to_t;       // M^t_{i,H,T}
  IntMatrix t_to_h;       // lower-left block
  IntMatrix t;            // M^t_{i,T}
};

struct BlockDecomposition {
  std::vector<VertexId> h_vertices;
  std::vector<VertexId> t_vertices;
  TransposeBlocks blue, red;

  const TransposeBlocks& for_colour(Colour c) const {
    return c == Colour::Blue ? blue : red;
  }
  /// M_i^t in the original vertex order, rebuilt from the four blocks.
  IntMatrix reassemble(Colour c) const;
};

BlockDecomposition block_decomposition(const TwoGraph& g, const VertexSet& h);

}  // namespace kgraph
