#include "kgraph/ideal_lattice.hpp"

#include <algorithm>
#include <deque>

#include "kgraph/error.hpp"

namespace kgraph {

VertexSet::VertexSet(std::size_t universe, std::initializer_list<VertexId> members)
    : bits_(universe, false) {
  for (VertexId v : members) bits_.at(v) = true;
}

VertexSet VertexSet::all(std::size_t universe) {
  VertexSet s(universe);
  s.bits_.assign(universe, true);
  return s;
}

VertexSet VertexSet::from_mask(std::size_t universe, std::uint64_t mask) {
  VertexSet s(universe);
  for (std::size_t v = 0; v < universe; ++v) s.bits_[v] = (mask >> v) & 1U;
  return s;
}

std::size_t VertexSet::size() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

std::vector<VertexId> VertexSet::members() const {
  std::vector<VertexId> out;
  for (std::size_t v = 0; v < bits_.size(); ++v)
    if (bits_[v]) out.push_back(static_cast<VertexId>(v));
  return out;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  for (std::size_t v = 0; v < bits_.size(); ++v)
    if (bits_[v] && !other.bits_[v]) return false;
  return true;
}

VertexSet VertexSet::complement() const {
  VertexSet s = *this;
  s.bits_.flip();
  return s;
}

VertexSet VertexSet::operator|(const VertexSet& o) const {
  VertexSet s = *this;
  for (std::size_t v = 0; v < bits_.size(); ++v) s.bits_[v] = bits_[v] || o.bits_[v];
  return s;
}

VertexSet VertexSet::operator&(const VertexSet& o) const {
  VertexSet s = *this;
  for (std::size_t v = 0; v < bits_.size(); ++v) s.bits_[v] = bits_[v] && o.bits_[v];
  return s;
}

VertexSet VertexSet::operator-(const VertexSet& o) const {
  VertexSet s = *this;
  for (std::size_t v = 0; v < bits_.size(); ++v) s.bits_[v] = bits_[v] && !o.bits_[v];
  return s;
}

bool canonical_less(const VertexSet& a, const VertexSet& b) {
  const std::size_t sa = a.size(), sb = b.size();
  if (sa != sb) return sa < sb;
  return a.members() < b.members();
}

std::vector<std::string> vertex_names(const TwoGraph& g, const VertexSet& s) {
  std::vector<std::string> out;
  for (VertexId v : s.members()) out.push_back(g.graph().vertex_name(v));
  return out;
}

std::string to_string(const TwoGraph& g, const VertexSet& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& name : vertex_names(g, s)) {
    if (!first) out += ',';
    out += name;
    first = false;
  }
  return out + "}";
}

bool is_hereditary(const TwoGraph& g, const VertexSet& s) {
  for (const Edge& e : g.graph().edges())
    if (s.contains(e.range) && !s.contains(e.source)) return false;
  return true;
}

bool is_saturated(const TwoGraph& g, const VertexSet& s) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (s.contains(v)) continue;
    for (Colour c : {Colour::Blue, Colour::Red}) {
      const auto& in = g.edges_into(v, c);
      if (std::all_of(in.begin(), in.end(),
                      [&](EdgeId e) { return s.contains(g.edge(e).source); }))
        return false;
    }
  }
  return true;
}

VertexSet hereditary_closure(const TwoGraph& g, const VertexSet& s) {
  VertexSet out = s;
  std::deque<VertexId> work;
  for (VertexId v : s.members()) work.push_back(v);
  while (!work.empty()) {
    const VertexId v = work.front();
    work.pop_front();
    for (Colour c : {Colour::Blue, Colour::Red}) {
      for (EdgeId e : g.edges_into(v, c)) {
        const VertexId src = g.edge(e).source;
        if (!out.contains(src)) {
          out.insert(src);
          work.push_back(src);
        }
      }
    }
  }
  return out;
}

VertexSet saturation(const TwoGraph& g, const VertexSet& s) {
  if (!is_hereditary(g, s)) {
    throw Error(Errc::NotHereditary, to_string(g, s) + " is not hereditary");
  }
  VertexSet out = s;
  bool grew = true;
  while (grew) {
    grew = false;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (out.contains(v)) continue;
      for (Colour c : {Colour::Blue, Colour::Red}) {
        const auto& in = g.edges_into(v, c);
        if (std::all_of(in.begin(), in.end(),
                        [&](EdgeId e) { return out.contains(g.edge(e).source); })) {
          out.insert(v);
          grew = true;
          break;
        }
      }
    }
  }
  return out;
}

bool SatHereditaryLattice::contains(const VertexSet& s) const {
  return std::find(members.begin(), members.end(), s) != members.end();
}

namespace {

struct MaskTables {
  std::vector<std::uint64_t> preds;        // sources of all edges into v
  std::vector<std::uint64_t> colour_srcs;  // [2v + c]
  std::vector<std::uint64_t> reach;        // reach[w]
};

MaskTables mask_tables(const TwoGraph& g) {
  const std::size_t n = g.vertex_count();
  MaskTables t;
  t.preds.assign(n, 0);
  t.colour_srcs.assign(2 * n, 0);
  for (const Edge& e : g.graph().edges()) {
    const std::uint64_t bit = std::uint64_t{1} << e.source;
    t.preds[e.range] |= bit;
    t.colour_srcs[2 * e.range + (e.colour == Colour::Blue ? 0 : 1)] |= bit;
  }
  const auto reach = reachability(g);
  t.reach.assign(n, 0);
  for (std::size_t w = 0; w < n; ++w)
    for (VertexId v : reach[w].members()) t.reach[w] |= std::uint64_t{1} << v;
  return t;
}

void sort_canonical(std::vector<VertexSet>& sets) {
  std::sort(sets.begin(), sets.end(), canonical_less);
}

}  // namespace

SatHereditaryLattice enumerate_sat_hereditary(const TwoGraph& g,
                                              std::size_t exhaustive_cap) {
  const std::size_t n = g.vertex_count();
  SatHereditaryLattice lat;
  if (n <= std::min<std::size_t>(exhaustive_cap, 30)) {
    const MaskTables t = mask_tables(g);
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t s = 0; s < limit; ++s) {
      bool ok = true;
      for (std::size_t v = 0; v < n && ok; ++v) {
        const bool in = (s >> v) & 1U;
        if (in) {
          ok = (t.preds[v] & ~s) == 0;
        } else {
          ok = (t.colour_srcs[2 * v] & ~s) != 0 && (t.colour_srcs[2 * v + 1] & ~s) != 0;
        }
      }
      if (ok) lat.members.push_back(VertexSet::from_mask(n, s));
    }
    sort_canonical(lat.members);
    return lat;
  }

  lat.exhaustive = false;
  std::vector<VertexSet> found{VertexSet(n)};
  auto add = [&](VertexSet s) {
    if (std::find(found.begin(), found.end(), s) == found.end()) {
      found.push_back(std::move(s));
      return true;
    }
    return false;
  };
  for (VertexId v = 0; v < n; ++v) {
    add(saturation(g, hereditary_closure(g, VertexSet(n, {v}))));
  }
  for (bool grew = true; grew;) {
    grew = false;
    const std::size_t count = found.size();
    for (std::size_t i = 0; i < count; ++i) {
      for (std::size_t j = i + 1; j < count; ++j) {
        grew |= add(saturation(g, found[i] | found[j]));
        grew |= add(found[i] & found[j]);
      }
    }
  }
  lat.members = std::move(found);
  sort_canonical(lat.members);
  return lat;
}

namespace {

TwoGraph induced_graph(const TwoGraph& g, const VertexSet& keep_vertices,
                       const std::vector<bool>& keep_edge) {
  const ColouredGraph& src = g.graph();
  ColouredGraph out;
  for (VertexId v : keep_vertices.members()) out.add_vertex(src.vertex_name(v));
  std::vector<EdgeId> remap(src.edge_count(), 0);
  for (EdgeId e = 0; e < src.edge_count(); ++e) {
    if (!keep_edge[e]) continue;
    const Edge& ed = src.edge(e);
    remap[e] = out.add_edge(ed.name, ed.colour, src.vertex_name(ed.source),
                            src.vertex_name(ed.range));
  }
  FactorisationRules rules;
  for (const FactorisationRule& r : g.rules()) {
    if (keep_edge[r.blue] && keep_edge[r.red] && keep_edge[r.red_out] &&
        keep_edge[r.blue_out]) {
      rules.push_back({remap[r.blue], remap[r.red], remap[r.red_out], remap[r.blue_out]});
    }
  }
  return validate(std::move(out), std::move(rules));
}

}  // namespace

TwoGraph quotient_graph(const TwoGraph& g, const VertexSet& h) {
  if (!is_saturated_hereditary(g, h)) {
    throw Error(Errc::NotSaturatedHereditary, to_string(g, h));
  }
  if (h.is_full()) {
    throw Error(Errc::EmptyQuotient, "quotient by the whole vertex set");
  }
  std::vector<bool> keep(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    keep[e] = !h.contains(g.edge(e).source) && !h.contains(g.edge(e).range);
  return induced_graph(g, h.complement(), keep);
}

TwoGraph restriction_graph(const TwoGraph& g, const VertexSet& h) {
  if (!is_hereditary(g, h)) {
    throw Error(Errc::NotHereditary, to_string(g, h));
  }
  if (h.empty()) {
    throw Error(Errc::EmptyRestriction, "restriction to the empty set");
  }
  std::vector<bool> keep(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) keep[e] = h.contains(g.edge(e).range);
  return induced_graph(g, h, keep);
}

VertexSet embed_vertices(const TwoGraph& g, const TwoGraph& sub) {
  VertexSet s(g.vertex_count());
  for (const auto& name : sub.graph().vertex_names()) s.insert(g.graph().vertex(name));
  return s;
}

VertexSet restrict_vertices(const TwoGraph& g, const VertexSet& s, const TwoGraph& sub) {
  VertexSet out(sub.vertex_count());
  for (VertexId v : s.members()) out.insert(sub.graph().vertex(g.graph().vertex_name(v)));
  return out;
}

std::vector<VertexSet> reachability(const TwoGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<VertexId>> out_nbrs(n);
  for (const Edge& e : g.graph().edges()) out_nbrs[e.source].push_back(e.range);
  std::vector<VertexSet> reach;
  reach.reserve(n);
  for (VertexId w = 0; w < n; ++w) {
    VertexSet seen(n, {w});
    std::deque<VertexId> work{w};
    while (!work.empty()) {
      const VertexId x = work.front();
      work.pop_front();
      for (VertexId y : out_nbrs[x]) {
        if (!seen.contains(y)) {
          seen.insert(y);
          work.push_back(y);
        }
      }
    }
    reach.push_back(std::move(seen));
  }
  return reach;
}

namespace {

bool is_maximal_tail_with(const TwoGraph& g, const VertexSet& t,
                          const std::vector<VertexSet>& reach) {
  if (t.empty()) return false;
  const auto members = t.members();
  // (c) closed under moving to ranges of paths leaving T
  for (VertexId w : members)
    if (!reach[w].is_subset_of(t)) return false;
  // (b) every vertex of T receives an edge of each colour from T
  for (VertexId v : members) {
    for (Colour c : {Colour::Blue, Colour::Red}) {
      const auto& in = g.edges_into(v, c);
      if (std::none_of(in.begin(), in.end(),
                       [&](EdgeId e) { return t.contains(g.edge(e).source); }))
        return false;
    }
  }
  // (a) any two vertices of T share a common source vertex in T
  for (VertexId v1 : members) {
    for (VertexId v2 : members) {
      if (v2 < v1) continue;
      bool found = false;
      for (VertexId w : members) {
        if (reach[w].contains(v1) && reach[w].contains(v2)) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
  }
  return true;
}

}  // namespace

bool is_maximal_tail(const TwoGraph& g, const VertexSet& t) {
  return is_maximal_tail_with(g, t, reachability(g));
}

MaximalTails maximal_tails(const TwoGraph& g, std::size_t exhaustive_cap) {
  const std::size_t n = g.vertex_count();
  MaximalTails out;
  if (n <= std::min<std::size_t>(exhaustive_cap, 30)) {
    const MaskTables t = mask_tables(g);
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t s = 1; s < limit; ++s) {
      bool ok = true;
      for (std::size_t v = 0; v < n && ok; ++v) {
        if (!((s >> v) & 1U)) continue;
        ok = (t.reach[v] & ~s) == 0 && (t.colour_srcs[2 * v] & s) != 0 &&
             (t.colour_srcs[2 * v + 1] & s) != 0;
      }
      // (a): for each v1 the reach sets (inside T) of sources of v1 must
      // jointly cover T.
      for (std::size_t v1 = 0; v1 < n && ok; ++v1) {
        if (!((s >> v1) & 1U)) continue;
        std::uint64_t cover = 0;
        for (std::size_t w = 0; w < n; ++w)
          if (((s >> w) & 1U) && ((t.reach[w] >> v1) & 1U)) cover |= t.reach[w];
        ok = (s & ~cover) == 0;
      }
      if (ok) out.tails.push_back(VertexSet::from_mask(n, s));
    }
  } else {
    out.exhaustive = false;
    const auto reach = reachability(g);
    for (const VertexSet& h : enumerate_sat_hereditary(g, exhaustive_cap).members) {
      VertexSet t = h.complement();
      if (is_maximal_tail_with(g, t, reach)) out.tails.push_back(std::move(t));
    }
  }
  sort_canonical(out.tails);
  return out;
}

bool is_cofinal(const TwoGraph& g) {
  return enumerate_sat_hereditary(g).is_trivial();
}

BlockDecomposition block_decomposition(const TwoGraph& g, const VertexSet& h) {
  BlockDecomposition b;
  b.h_vertices = h.members();
  b.t_vertices = h.complement().members();
  std::vector<std::size_t> hi(b.h_vertices.begin(), b.h_vertices.end());
  std::vector<std::size_t> ti(b.t_vertices.begin(), b.t_vertices.end());
  for (Colour c : {Colour::Blue, Colour::Red}) {
    const IntMatrix mt = g.connectivity(c).transpose();
    TransposeBlocks& blk = c == Colour::Blue ? b.blue : b.red;
    blk.h = mt.select(hi, hi);
    blk.h_to_t = mt.select(hi, ti);
    blk.t_to_h = mt.select(ti, hi);
    blk.t = mt.select(ti, ti);
  }
  return b;
}

IntMatrix BlockDecomposition::reassemble(Colour c) const {
  const TransposeBlocks& blk = for_colour(c);
  const std::size_t n = h_vertices.size() + t_vertices.size();
  IntMatrix m(n, n);
  auto place = [&](const IntMatrix& src, const std::vector<VertexId>& rows,
                   const std::vector<VertexId>& cols) {
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) m(rows[i], cols[j]) = src(i, j);
  };
  place(blk.h, h_vertices, h_vertices);
  place(blk.h_to_t, h_vertices, t_vertices);
  place(blk.t_to_h, t_vertices, h_vertices);
  place(blk.t, t_vertices, t_vertices);
  return m;
}

}  // namespace kgraph
