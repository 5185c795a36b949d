#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "kgraph/int_matrix.hpp"

namespace kgraph {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

// Colour 1 (blue) and colour 2 (red).
enum class Colour : std::uint8_t { Blue = 1, Red = 2 };

inline constexpr std::size_t kDefaultEnumerationCap = 1'000'000;

struct Edge {
  std::string name;
  Colour colour;
  VertexId source;
  VertexId range;
};

/// A finite directed graph whose edges carry one of two colours. Vertex and
/// edge names are unique; insertion order is the canonical order.
class ColouredGraph {
 public:
  VertexId add_vertex(const std::string& name);
  EdgeId add_edge(const std::string& name, Colour colour, VertexId source,
                  VertexId range);
  EdgeId add_edge(const std::string& name, Colour colour,
                  const std::string& source, const std::string& range);

  std::size_t vertex_count() const { return vertex_names_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::string& vertex_name(VertexId v) const { return vertex_names_[v]; }
  const std::vector<std::string>& vertex_names() const { return vertex_names_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }

  VertexId vertex(const std::string& name) const;  // throws UnknownVertex
  EdgeId edge_id(const std::string& name) const;   // throws UnknownEdge
  bool has_vertex(const std::string& name) const {
    return vertex_index_.contains(name);
  }
  bool has_edge(const std::string& name) const {
    return edge_index_.contains(name);
  }

 private:
  std::vector<std::string> vertex_names_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, VertexId> vertex_index_;
  std::unordered_map<std::string, EdgeId> edge_index_;
};

/// One factorisation rule: the path blue.red (red traversed first) equals the
/// path red_out.blue_out (blue_out traversed first).
struct FactorisationRule {
  EdgeId blue;
  EdgeId red;
  EdgeId red_out;
  EdgeId blue_out;
};

using FactorisationRules = std::vector<FactorisationRule>;

struct Degree {
  std::uint32_t blue = 0;
  std::uint32_t red = 0;

  std::uint32_t length() const { return blue + red; }
  friend auto operator<=>(const Degree&, const Degree&) = default;
};

inline Degree operator+(Degree a, Degree b) {
  return {a.blue + b.blue, a.red + b.red};
}
// Componentwise order; operator< from <=> is lexicographic and only used for
// sorting, so the partial order gets its own name.
inline bool degree_leq(Degree a, Degree b) {
  return a.blue <= b.blue && a.red <= b.red;
}
inline Degree join(Degree a, Degree b) {
  return {std::max(a.blue, b.blue), std::max(a.red, b.red)};
}
std::string to_string(Degree d);

/// A path in normal form. Edges are stored in written order: edges.front()
/// has range `range`, edges.back() has source `source`, and
/// source(edges[k]) == range(edges[k+1]). The normal form lists the
/// `degree.blue` blue edges first, then the red ones. Vertices are the paths
/// of degree (0,0).
struct Path {
  VertexId range = 0;
  VertexId source = 0;
  Degree degree;
  std::vector<EdgeId> edges;

  bool is_vertex() const { return edges.empty(); }
  friend bool operator==(const Path&, const Path&) = default;
};

/// A validated 2-coloured graph with a complete bijective set of
/// factorisation rules, i.e. a finite row-finite 2-graph with no sources.
/// Immutable once built; build through validate().
class TwoGraph {
 public:
  const ColouredGraph& graph() const { return graph_; }
  const FactorisationRules& rules() const { return rules_; }
  std::size_t vertex_count() const { return graph_.vertex_count(); }
  std::size_t edge_count() const { return graph_.edge_count(); }
  const Edge& edge(EdgeId e) const { return graph_.edge(e); }

  /// M_i(u, v) = number of colour-i edges with range u and source v.
  const IntMatrix& connectivity(Colour c) const {
    return c == Colour::Blue ? m1_ : m2_;
  }

  /// Colour-c edges with range v, in edge order.
  const std::vector<EdgeId>& edges_into(VertexId v, Colour c) const {
    return into_[2 * v + (c == Colour::Blue ? 0 : 1)];
  }

  /// theta(blue.red) = red'.blue'
  std::pair<EdgeId, EdgeId> blue_red_to_red_blue(EdgeId blue, EdgeId red) const;
  /// theta^{-1}(red.blue) = blue'.red'
  std::pair<EdgeId, EdgeId> red_blue_to_blue_red(EdgeId red, EdgeId blue) const;

  Path vertex_path(VertexId v) const;

  std::string describe(const Path& p) const;

 private:
  friend TwoGraph validate(ColouredGraph graph, FactorisationRules rules);

  std::size_t slot(EdgeId first, EdgeId second) const {
    return offset_[first] + position_[second];
  }

  ColouredGraph graph_;
  FactorisationRules rules_;
  IntMatrix m1_, m2_;
  std::vector<std::vector<EdgeId>> into_;
  // For the pair (x, y) with source(x) == range(y), the rule output lives at
  // table[offset_[x] + position_[y]], position_ being y's index inside
  // edges_into(range(y), colour(y)).
  std::vector<std::size_t> offset_;
  std::vector<std::uint32_t> position_;
  std::vector<std::pair<EdgeId, EdgeId>> theta_;
  std::vector<std::pair<EdgeId, EdgeId>> theta_inv_;
};

/// Checks totality, bijectivity and range/source preservation of the rules
/// and the no-sources condition; computes M1 and M2.
TwoGraph validate(ColouredGraph graph, FactorisationRules rules);

/// Rewrites a composable word (written order) into normal form by repeatedly
/// replacing adjacent red.blue factors with theta^{-1}.
Path normal_form(const TwoGraph& g, std::span<const EdgeId> word);

/// Rearranges a composable word so that its colour sequence matches
/// `pattern`, using theta / theta^{-1} on adjacent pairs. The pattern must
/// contain the same number of each colour as the word.
std::vector<EdgeId> reshape(const TwoGraph& g, std::span<const EdgeId> word,
                            std::span<const Colour> pattern);

/// lambda(m, n): the factor of degree n - m sitting after a prefix (at the
/// range end) of degree m.
Path segment(const TwoGraph& g, const Path& p, Degree m, Degree n);

/// Composition mu.nu (nu traversed first), normalised.
Path compose(const TwoGraph& g, const Path& mu, const Path& nu);

/// All paths in u Lambda^d v (range u, source v), in lexicographic order of
/// their normal-form words.
std::vector<Path> enumerate_paths(const TwoGraph& g, VertexId u, VertexId v,
                                  Degree d,
                                  std::size_t cap = kDefaultEnumerationCap);

/// Visits every normal-form path of degree d with range u. The visitor
/// returns false to stop early. Throws EnumerationCapExceeded once more than
/// `cap` paths would be visited. Returns the number of paths visited.
std::size_t for_each_path(const TwoGraph& g, VertexId u, Degree d,
                          const std::function<bool(const Path&)>& visit,
                          std::size_t cap = kDefaultEnumerationCap);

/// (M1^a M2^b)(u, v), the expected size of u Lambda^(a,b) v.
IntMatrix path_count_matrix(const TwoGraph& g, Degree d);

}  // namespace kgraph
