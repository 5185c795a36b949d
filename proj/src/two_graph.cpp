#include "kgraph/two_graph.hpp"

#include <cassert>
#include <sstream>

#include "kgraph/error.hpp"

namespace kgraph {

namespace {

std::size_t colour_slot(Colour c) { return c == Colour::Blue ? 0 : 1; }

const char* colour_name(Colour c) { return c == Colour::Blue ? "blue" : "red"; }

[[maybe_unused]] std::size_t inversions(const TwoGraph& g,
                                        const std::vector<EdgeId>& w) {
  std::size_t reds = 0, inv = 0;
  for (EdgeId e : w) {
    if (g.edge(e).colour == Colour::Red)
      ++reds;
    else
      inv += reds;
  }
  return inv;
}

void check_composable(const TwoGraph& g, std::span<const EdgeId> word) {
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (word[k] >= g.edge_count()) {
      throw Error(Errc::UnknownEdge, "edge id " + std::to_string(word[k]));
    }
  }
  for (std::size_t k = 0; k + 1 < word.size(); ++k) {
    if (g.edge(word[k]).source != g.edge(word[k + 1]).range) {
      throw Error(Errc::NotComposable,
                  "position " + std::to_string(k) + ": source of " +
                      g.edge(word[k]).name + " is not the range of " +
                      g.edge(word[k + 1]).name);
    }
  }
}

Path make_path(const TwoGraph& g, VertexId at, std::vector<EdgeId> edges) {
  Path p;
  p.range = edges.empty() ? at : g.edge(edges.front()).range;
  p.source = edges.empty() ? at : g.edge(edges.back()).source;
  for (EdgeId e : edges) {
    if (g.edge(e).colour == Colour::Blue)
      ++p.degree.blue;
    else
      ++p.degree.red;
  }
  p.edges = std::move(edges);
  return p;
}

// Swaps the colours of the adjacent pair at (k, k+1) of a composable word.
void swap_adjacent(const TwoGraph& g, std::vector<EdgeId>& w, std::size_t k) {
  const EdgeId x = w[k];
  const EdgeId y = w[k + 1];
  std::pair<EdgeId, EdgeId> out;
  if (g.edge(x).colour == Colour::Blue) {
    assert(g.edge(y).colour == Colour::Red);
    out = g.blue_red_to_red_blue(x, y);
  } else {
    assert(g.edge(y).colour == Colour::Blue);
    out = g.red_blue_to_blue_red(x, y);
  }
  w[k] = out.first;
  w[k + 1] = out.second;
}

}  // namespace

std::string to_string(Degree d) {
  return "(" + std::to_string(d.blue) + "," + std::to_string(d.red) + ")";
}

VertexId ColouredGraph::add_vertex(const std::string& name) {
  if (vertex_index_.contains(name)) {
    throw Error(Errc::DuplicateVertex, "vertex '" + name + "' declared twice");
  }
  const auto id = static_cast<VertexId>(vertex_names_.size());
  vertex_names_.push_back(name);
  vertex_index_.emplace(name, id);
  return id;
}

EdgeId ColouredGraph::add_edge(const std::string& name, Colour colour,
                               VertexId source, VertexId range) {
  if (edge_index_.contains(name)) {
    throw Error(Errc::DuplicateEdge, "edge '" + name + "' declared twice");
  }
  if (source >= vertex_count() || range >= vertex_count()) {
    throw Error(Errc::UnknownVertex, "edge '" + name + "' has an undeclared endpoint");
  }
  const auto id = static_cast<EdgeId>(edges_.size());
  edges_.push_back(Edge{name, colour, source, range});
  edge_index_.emplace(name, id);
  return id;
}

EdgeId ColouredGraph::add_edge(const std::string& name, Colour colour,
                               const std::string& source,
                               const std::string& range) {
  return add_edge(name, colour, vertex(source), vertex(range));
}

VertexId ColouredGraph::vertex(const std::string& name) const {
  auto it = vertex_index_.find(name);
  if (it == vertex_index_.end()) {
    throw Error(Errc::UnknownVertex, "no vertex named '" + name + "'");
  }
  return it->second;
}

EdgeId ColouredGraph::edge_id(const std::string& name) const {
  auto it = edge_index_.find(name);
  if (it == edge_index_.end()) {
    throw Error(Errc::UnknownEdge, "no edge named '" + name + "'");
  }
  return it->second;
}

std::pair<EdgeId, EdgeId> TwoGraph::blue_red_to_red_blue(EdgeId blue,
                                                         EdgeId red) const {
  assert(edge(blue).colour == Colour::Blue && edge(red).colour == Colour::Red);
  assert(edge(blue).source == edge(red).range);
  return theta_[slot(blue, red)];
}

std::pair<EdgeId, EdgeId> TwoGraph::red_blue_to_blue_red(EdgeId red,
                                                         EdgeId blue) const {
  assert(edge(red).colour == Colour::Red && edge(blue).colour == Colour::Blue);
  assert(edge(red).source == edge(blue).range);
  return theta_inv_[slot(red, blue)];
}

Path TwoGraph::vertex_path(VertexId v) const {
  Path p;
  p.range = p.source = v;
  return p;
}

std::string TwoGraph::describe(const Path& p) const {
  if (p.is_vertex()) return graph_.vertex_name(p.range);
  std::string out;
  for (std::size_t k = 0; k < p.edges.size(); ++k) {
    if (k) out += '.';
    out += edge(p.edges[k]).name;
  }
  return out;
}

TwoGraph validate(ColouredGraph graph, FactorisationRules rules) {
  TwoGraph g;
  const std::size_t nv = graph.vertex_count();
  const std::size_t ne = graph.edge_count();

  g.into_.assign(2 * nv, {});
  g.position_.assign(ne, 0);
  for (EdgeId e = 0; e < ne; ++e) {
    const Edge& ed = graph.edge(e);
    auto& bucket = g.into_[2 * ed.range + colour_slot(ed.colour)];
    g.position_[e] = static_cast<std::uint32_t>(bucket.size());
    bucket.push_back(e);
  }
  for (VertexId v = 0; v < nv; ++v) {
    for (Colour c : {Colour::Blue, Colour::Red}) {
      if (g.into_[2 * v + colour_slot(c)].empty()) {
        throw Error(Errc::SourceAtVertex,
                    "vertex '" + graph.vertex_name(v) + "' receives no " +
                        colour_name(c) + " edge");
      }
    }
  }

  // Slot tables: blue x pairs with the reds into source(x); red x with the
  // blues into source(x).
  g.offset_.assign(ne, 0);
  std::size_t blue_slots = 0, red_slots = 0;
  for (EdgeId e = 0; e < ne; ++e) {
    const Edge& ed = graph.edge(e);
    const Colour other = ed.colour == Colour::Blue ? Colour::Red : Colour::Blue;
    const std::size_t n = g.into_[2 * ed.source + colour_slot(other)].size();
    if (ed.colour == Colour::Blue) {
      g.offset_[e] = blue_slots;
      blue_slots += n;
    } else {
      g.offset_[e] = red_slots;
      red_slots += n;
    }
  }

  constexpr EdgeId kUnset = ~EdgeId{0};
  g.theta_.assign(blue_slots, {kUnset, kUnset});
  g.theta_inv_.assign(red_slots, {kUnset, kUnset});

  auto pair_name = [&](EdgeId a, EdgeId b) {
    return "(" + graph.edge(a).name + ", " + graph.edge(b).name + ")";
  };

  for (const FactorisationRule& r : rules) {
    for (EdgeId e : {r.blue, r.red, r.red_out, r.blue_out}) {
      if (e >= ne) throw Error(Errc::UnknownEdge, "rule names edge id " + std::to_string(e));
    }
    const Edge& e = graph.edge(r.blue);
    const Edge& f = graph.edge(r.red);
    const Edge& f2 = graph.edge(r.red_out);
    const Edge& e2 = graph.edge(r.blue_out);
    if (e.colour != Colour::Blue || f.colour != Colour::Red ||
        f2.colour != Colour::Red || e2.colour != Colour::Blue) {
      throw Error(Errc::MalformedRule,
                  "rule " + pair_name(r.blue, r.red) + " -> " +
                      pair_name(r.red_out, r.blue_out) + " has wrong colours");
    }
    if (e.source != f.range || f2.source != e2.range || e.range != f2.range ||
        f.source != e2.source) {
      throw Error(Errc::RuleNotRangeSourcePreserving,
                  "rule " + pair_name(r.blue, r.red) + " -> " +
                      pair_name(r.red_out, r.blue_out));
    }
    auto& fwd = g.theta_[g.slot(r.blue, r.red)];
    if (fwd.first != kUnset) {
      throw Error(Errc::DuplicateRule, "two rules for " + pair_name(r.blue, r.red));
    }
    fwd = {r.red_out, r.blue_out};
    auto& back = g.theta_inv_[g.slot(r.red_out, r.blue_out)];
    if (back.first != kUnset) {
      throw Error(Errc::NotBijective,
                  pair_name(r.red_out, r.blue_out) + " is the output of two rules");
    }
    back = {r.blue, r.red};
  }

  for (EdgeId e = 0; e < ne; ++e) {
    const Edge& ed = graph.edge(e);
    const Colour other = ed.colour == Colour::Blue ? Colour::Red : Colour::Blue;
    for (EdgeId f : g.into_[2 * ed.source + colour_slot(other)]) {
      if (ed.colour == Colour::Blue && g.theta_[g.slot(e, f)].first == kUnset) {
        throw Error(Errc::MissingRule, "no rule for " + pair_name(e, f));
      }
      if (ed.colour == Colour::Red && g.theta_inv_[g.slot(e, f)].first == kUnset) {
        throw Error(Errc::NotBijective,
                    pair_name(e, f) + " is not the output of any rule");
      }
    }
  }

  g.m1_ = IntMatrix(nv, nv);
  g.m2_ = IntMatrix(nv, nv);
  for (const Edge& ed : graph.edges()) {
    IntMatrix& m = ed.colour == Colour::Blue ? g.m1_ : g.m2_;
    m(ed.range, ed.source) += 1;
  }
  // Forced by bijectivity; a failure here means the checks above are wrong.
  if (!(g.m1_ * g.m2_ == g.m2_ * g.m1_)) {
    throw Error(Errc::CrossCheckFailure, "M1 M2 != M2 M1 after rule validation");
  }

  g.graph_ = std::move(graph);
  g.rules_ = std::move(rules);
  return g;
}

Path normal_form(const TwoGraph& g, std::span<const EdgeId> word) {
  if (word.empty()) {
    throw Error(Errc::NotComposable, "empty word; use TwoGraph::vertex_path");
  }
  check_composable(g, word);
  std::vector<EdgeId> w(word.begin(), word.end());
#ifndef NDEBUG
  std::size_t budget = inversions(g, w);
#endif
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (g.edge(w[i]).colour != Colour::Blue) continue;
    for (std::size_t k = i; k > 0 && g.edge(w[k - 1]).colour == Colour::Red; --k) {
      swap_adjacent(g, w, k - 1);
#ifndef NDEBUG
      // each theta^{-1} application removes exactly one red-before-blue pair
      assert(budget > 0);
      --budget;
      assert(inversions(g, w) == budget);
#endif
    }
  }
  return make_path(g, 0, std::move(w));
}

std::vector<EdgeId> reshape(const TwoGraph& g, std::span<const EdgeId> word,
                            std::span<const Colour> pattern) {
  if (pattern.size() != word.size()) {
    throw Error(Errc::DegreeOutOfRange, "pattern length differs from word length");
  }
  std::vector<EdgeId> w(word.begin(), word.end());
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (g.edge(w[i]).colour == pattern[i]) continue;
    std::size_t j = i + 1;
    while (j < w.size() && g.edge(w[j]).colour != pattern[i]) ++j;
    if (j == w.size()) {
      throw Error(Errc::DegreeOutOfRange, "pattern has the wrong colour counts");
    }
    for (std::size_t k = j; k > i; --k) swap_adjacent(g, w, k - 1);
  }
  return w;
}

Path segment(const TwoGraph& g, const Path& p, Degree m, Degree n) {
  if (!degree_leq(m, n) || !degree_leq(n, p.degree)) {
    throw Error(Errc::DegreeOutOfRange,
                "segment " + to_string(m) + ".." + to_string(n) + " of a path of degree " +
                    to_string(p.degree));
  }
  std::vector<Colour> pattern;
  pattern.reserve(p.edges.size());
  auto push = [&](std::uint32_t count, Colour c) { pattern.insert(pattern.end(), count, c); };
  push(m.blue, Colour::Blue);
  push(m.red, Colour::Red);
  push(n.blue - m.blue, Colour::Blue);
  push(n.red - m.red, Colour::Red);
  push(p.degree.blue - n.blue, Colour::Blue);
  push(p.degree.red - n.red, Colour::Red);

  const std::vector<EdgeId> w = reshape(g, p.edges, pattern);
  const std::size_t lo = m.length();
  const std::size_t hi = n.length();
  const VertexId at = lo == 0 ? p.range : g.edge(w[lo - 1]).source;
  return make_path(g, at, std::vector<EdgeId>(w.begin() + static_cast<std::ptrdiff_t>(lo),
                                               w.begin() + static_cast<std::ptrdiff_t>(hi)));
}

Path compose(const TwoGraph& g, const Path& mu, const Path& nu) {
  if (mu.source != nu.range) {
    throw Error(Errc::NotComposable, "source of the left factor is not the range of the right");
  }
  if (mu.is_vertex()) return nu;
  if (nu.is_vertex()) return mu;
  std::vector<EdgeId> w = mu.edges;
  w.insert(w.end(), nu.edges.begin(), nu.edges.end());
  return normal_form(g, w);
}

namespace {

// Depth-first walk over normal-form words of degree d starting at range u.
template <class Visit>
void walk_paths(const TwoGraph& g, VertexId u, Degree d, Visit&& visit) {
  const std::size_t len = d.length();
  Path p;
  p.range = u;
  p.degree = d;
  p.edges.assign(len, 0);
  if (len == 0) {
    p.source = u;
    visit(p);
    return;
  }
  auto colour_at = [&](std::size_t k) { return k < d.blue ? Colour::Blue : Colour::Red; };
  std::vector<std::size_t> choice(len, 0);
  std::vector<VertexId> at(len + 1, u);
  std::size_t depth = 0;
  for (;;) {
    const auto& options = g.edges_into(at[depth], colour_at(depth));
    if (choice[depth] < options.size()) {
      const EdgeId e = options[choice[depth]];
      p.edges[depth] = e;
      at[depth + 1] = g.edge(e).source;
      if (depth + 1 == len) {
        p.source = at[len];
        if (!visit(p)) return;
        ++choice[depth];
      } else {
        ++depth;
        choice[depth] = 0;
      }
    } else {
      if (depth == 0) return;
      --depth;
      ++choice[depth];
    }
  }
}

}  // namespace

std::vector<Path> enumerate_paths(const TwoGraph& g, VertexId u, VertexId v,
                                  Degree d, std::size_t cap) {
  std::vector<Path> out;
  walk_paths(g, u, d, [&](const Path& p) {
    if (p.source != v) return true;
    if (out.size() == cap) {
      throw Error(Errc::EnumerationCapExceeded,
                  "more than " + std::to_string(cap) + " paths of degree " + to_string(d));
    }
    out.push_back(p);
    return true;
  });
  return out;
}

std::size_t for_each_path(const TwoGraph& g, VertexId u, Degree d,
                          const std::function<bool(const Path&)>& visit,
                          std::size_t cap) {
  std::size_t visited = 0;
  walk_paths(g, u, d, [&](const Path& p) {
    if (visited == cap) {
      throw Error(Errc::EnumerationCapExceeded,
                  "more than " + std::to_string(cap) + " paths of degree " + to_string(d));
    }
    ++visited;
    return visit(p);
  });
  return visited;
}

IntMatrix path_count_matrix(const TwoGraph& g, Degree d) {
  IntMatrix acc = IntMatrix::identity(g.vertex_count());
  for (std::uint32_t i = 0; i < d.blue; ++i) acc = acc * g.connectivity(Colour::Blue);
  for (std::uint32_t i = 0; i < d.red; ++i) acc = acc * g.connectivity(Colour::Red);
  return acc;
}

}  // namespace kgraph
