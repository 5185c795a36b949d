#include "kgraph/io.hpp"

#include <istream>
#include <sstream>

#include "kgraph/error.hpp"

namespace kgraph {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(Errc::InvalidInput, std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

std::string string_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) {
    throw Error(Errc::InvalidInput, std::string("field \"") + key + "\" must be a string");
  }
  return v.get<std::string>();
}

Json names_json(const TwoGraph& g, const VertexSet& s) { return Json(vertex_names(g, s)); }

Json optional_vector(const std::optional<IntVector>& v) {
  if (!v) return nullptr;
  Json out = Json::array();
  for (const Integer& x : *v) out.push_back(integer_json(x));
  return out;
}

std::string vector_text(const IntVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].get_str();
  return out + ")";
}

std::string lattice_text_short(const Lattice& l) {
  if (l.rank() == 0) return "0";
  std::string out;
  const IntMatrix& b = l.basis();
  for (std::size_t c = 0; c < b.cols(); ++c) out += (c ? " + " : "") + std::string("Z") + vector_text(b.column(c));
  return out;
}

std::string verdict_line(const std::string& label, const TriVerdict& v) {
  std::string out = label + ": " + to_string(v.state);
  if (v.conditional) out += " (conditional)";
  out += "  [" + v.criterion + "]\n";
  for (const auto& note : v.notes) out += "    - " + note + "\n";
  return out;
}

}  // namespace

TwoGraph graph_from_json(const Json& j) {
  if (!j.is_object()) throw Error(Errc::InvalidInput, "top level must be an object");
  const Json& k = field(j, "k");
  if (!k.is_number_integer() || k.get<long long>() != 2) {
    throw Error(Errc::InvalidInput, "only k = 2 is supported");
  }
  ColouredGraph graph;
  const Json& vertices = field(j, "vertices");
  if (!vertices.is_array()) throw Error(Errc::InvalidInput, "\"vertices\" must be an array");
  for (const Json& v : vertices) {
    if (!v.is_string()) throw Error(Errc::InvalidInput, "vertex names must be strings");
    graph.add_vertex(v.get<std::string>());
  }
  const Json& edges = field(j, "edges");
  if (!edges.is_array()) throw Error(Errc::InvalidInput, "\"edges\" must be an array");
  for (const Json& e : edges) {
    const Json& colour = field(e, "colour");
    if (!colour.is_number_integer() || (colour.get<long long>() != 1 && colour.get<long long>() != 2)) {
      throw Error(Errc::InvalidInput, "edge colour must be 1 or 2");
    }
    graph.add_edge(string_field(e, "id"), colour.get<long long>() == 1 ? Colour::Blue : Colour::Red,
                   string_field(e, "source"), string_field(e, "range"));
  }
  const Json& rules = field(j, "factorisation");
  if (!rules.is_array()) throw Error(Errc::InvalidInput, "\"factorisation\" must be an array");
  FactorisationRules out;
  for (const Json& r : rules) {
    out.push_back({graph.edge_id(string_field(r, "blue")), graph.edge_id(string_field(r, "red")),
                   graph.edge_id(string_field(r, "red_out")),
                   graph.edge_id(string_field(r, "blue_out"))});
  }
  return validate(std::move(graph), std::move(out));
}

TwoGraph read_graph(std::istream& in) {
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::InvalidInput, e.what());
  }
  return graph_from_json(j);
}

Json graph_to_json(const TwoGraph& g) {
  Json j;
  j["k"] = 2;
  j["vertices"] = g.graph().vertex_names();
  Json edges = Json::array();
  for (const Edge& e : g.graph().edges()) {
    Json x;
    x["id"] = e.name;
    x["colour"] = static_cast<int>(e.colour);
    x["source"] = g.graph().vertex_name(e.source);
    x["range"] = g.graph().vertex_name(e.range);
    edges.push_back(std::move(x));
  }
  j["edges"] = std::move(edges);
  Json rules = Json::array();
  for (const FactorisationRule& r : g.rules()) {
    Json x;
    x["blue"] = g.edge(r.blue).name;
    x["red"] = g.edge(r.red).name;
    x["red_out"] = g.edge(r.red_out).name;
    x["blue_out"] = g.edge(r.blue_out).name;
    rules.push_back(std::move(x));
  }
  j["factorisation"] = std::move(rules);
  return j;
}

Json integer_json(const Integer& x) {
  if (x.fits_slong_p()) return static_cast<long long>(x.get_si());
  return x.get_str();
}

Json matrix_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(integer_json(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

Json lattice_json(const Lattice& l) {
  Json out = Json::array();
  const IntMatrix& b = l.basis();
  for (std::size_t c = 0; c < b.cols(); ++c) out.push_back(optional_vector(b.column(c)));
  return out;
}

Json group_json(const AbelianGroup& a) {
  Json j;
  j["rank"] = a.rank;
  Json t = Json::array();
  for (const Integer& d : a.torsion) t.push_back(integer_json(d));
  j["torsion"] = std::move(t);
  j["text"] = to_string(a);
  return j;
}

Json verdict_json(const TriVerdict& v) {
  Json j;
  j["state"] = to_string(v.state);
  j["conditional"] = v.conditional;
  j["criterion"] = v.criterion;
  j["notes"] = v.notes;
  return j;
}

Json path_json(const TwoGraph& g, const Path& p) {
  Json j;
  j["range"] = g.graph().vertex_name(p.range);
  j["source"] = g.graph().vertex_name(p.source);
  j["degree"] = {p.degree.blue, p.degree.red};
  j["edges"] = g.describe(p);
  return j;
}

Json summary_json(const TwoGraph& g) {
  std::size_t blue = 0;
  for (const Edge& e : g.graph().edges()) blue += e.colour == Colour::Blue;
  Json j;
  j["vertices"] = g.graph().vertex_names();
  j["blue_edges"] = blue;
  j["red_edges"] = g.edge_count() - blue;
  j["rules"] = g.rules().size();
  j["M1"] = matrix_json(g.connectivity(Colour::Blue));
  j["M2"] = matrix_json(g.connectivity(Colour::Red));
  return j;
}

Json bounds_json(const SearchBounds& b) {
  Json j;
  j["max_degree"] = {b.max_degree.blue, b.max_degree.red};
  j["depth"] = b.depth;
  j["cap"] = b.cap;
  j["accept_depth_evidence"] =
      b.accept_depth_evidence ? Json(*b.accept_depth_evidence) : Json(nullptr);
  return j;
}

Json lattice_section(const TwoGraph& g, const SatHereditaryLattice& lattice,
                     const MaximalTails& tails) {
  Json j;
  j["exhaustive"] = lattice.exhaustive;
  Json members = Json::array();
  for (const VertexSet& h : lattice.members) members.push_back(names_json(g, h));
  j["saturated_hereditary"] = std::move(members);
  j["cofinal"] = lattice.is_trivial();
  Json t = Json::array();
  for (const VertexSet& s : tails.tails) t.push_back(names_json(g, s));
  j["maximal_tails"] = std::move(t);
  j["maximal_tails_exhaustive"] = tails.exhaustive;
  return j;
}

Json ideal_json(const TwoGraph& g, const IdealRecord& r) {
  Json j;
  j["H"] = names_json(g, r.h);
  j["T"] = names_json(g, r.h.complement());
  Json blocks;
  for (Colour c : {Colour::Blue, Colour::Red}) {
    const TransposeBlocks& b = r.blocks.for_colour(c);
    Json x;
    x["H"] = matrix_json(b.h);
    x["H_T"] = matrix_json(b.h_to_t);
    x["T"] = matrix_json(b.t);
    blocks[c == Colour::Blue ? "M1t" : "M2t"] = std::move(x);
  }
  j["blocks"] = std::move(blocks);
  Json c;
  c["holds"] = r.condition.holds;
  c["common_fixed"] = lattice_json(r.condition.common_fixed);
  c["L1"] = lattice_json(r.condition.l1);
  c["L2"] = lattice_json(r.condition.l2);
  c["witness"] = optional_vector(r.condition.witness);
  j["condition_iii"] = std::move(c);
  Json h;
  h["injective"] = r.h1.injective;
  h["pulled_back"] = lattice_json(r.h1.pulled_back);
  h["witness"] = optional_vector(r.h1.witness);
  h["witness_image"] = optional_vector(r.h1.witness_image);
  j["h1_injective"] = std::move(h);
  return j;
}

Json aperiodicity_json(const TwoGraph& g, const AperiodicityResult& r) {
  Json j;
  j["verdict"] = verdict_json(r.verdict);
  Json qs = Json::array();
  for (const Quartet& q : r.quartets) {
    Json x;
    x["vertex"] = g.graph().vertex_name(q.vertex);
    x["alpha1"] = g.describe(q.alpha1);
    x["alpha2"] = g.describe(q.alpha2);
    x["beta1"] = g.describe(q.beta1);
    x["beta2"] = g.describe(q.beta2);
    qs.push_back(std::move(x));
  }
  j["quartets"] = std::move(qs);
  Json missing = Json::array();
  for (VertexId v : r.vertices_without_quartet) missing.push_back(g.graph().vertex_name(v));
  j["vertices_without_quartet"] = std::move(missing);
  Json ws = Json::array();
  for (const PeriodicityWitness& w : r.witnesses) {
    Json x;
    x["vertex"] = g.graph().vertex_name(w.vertex);
    x["m"] = {w.m.blue, w.m.red};
    x["n"] = {w.n.blue, w.n.red};
    x["depth"] = w.depth;
    x["paths_checked"] = w.paths_checked;
    ws.push_back(std::move(x));
  }
  j["periodicity_witnesses"] = std::move(ws);
  return j;
}

Json strong_json(const TwoGraph& g, const StrongAperiodicityResult& r) {
  Json j;
  j["verdict"] = verdict_json(r.verdict);
  j["via_vertex_quartets"] = r.via_vertex_quartets;
  Json qs = Json::array();
  for (const QuotientAperiodicity& q : r.quotients) {
    Json x;
    x["H"] = names_json(g, q.h);
    x["verdict"] = verdict_json(q.result.verdict);
    x["witnesses"] = q.result.witnesses.size();
    qs.push_back(std::move(x));
  }
  j["quotients"] = std::move(qs);
  Json blocking = Json::array();
  for (const VertexSet& h : r.blocking) blocking.push_back(names_json(g, h));
  j["blocking"] = std::move(blocking);
  j["evidence_found"] = r.evidence_found;
  return j;
}

Json k_json(const KInvariants& k) {
  Json j;
  j["H0"] = group_json(k.h0);
  j["H1"] = group_json(k.h1);
  j["H2"] = group_json(k.h2);
  j["K1"] = to_string(k.k1());
  return j;
}

Json reduction_json(const TwoGraph& g, const ReductionPair& p) {
  Json j;
  j["K"] = names_json(g, p.k);
  j["H"] = names_json(g, p.h);
  j["subquotient_vertices"] = p.subquotient_vertices;
  j["difference_saturated_hereditary"] = p.difference_sat_hereditary;
  j["subquotient_cofinal"] = p.subquotient_cofinal;
  j["obligation"] = "real rank zero of this cofinal subquotient must be established separately";
  return j;
}

Json report_json(const AnalysisReport& r) {
  const TwoGraph& g = r.graph;
  Json j;
  j["schema"] = kReportSchema;
  j["graph"] = summary_json(g);
  j["bounds"] = bounds_json(r.bounds);
  j["lattice"] = lattice_section(g, r.lattice, r.tails);
  Json ideals = Json::array();
  for (const IdealRecord& rec : r.ideals) ideals.push_back(ideal_json(g, rec));
  j["ideals"] = std::move(ideals);
  j["aperiodicity"] = aperiodicity_json(g, r.aperiodicity);
  j["strong_aperiodicity"] = strong_json(g, r.strong);
  j["k_theory"] = k_json(r.k);
  Json v;
  v["TD0"] = verdict_json(r.td0);
  v["PI"] = verdict_json(r.pi);
  v["RR0"] = verdict_json(r.rr0);
  j["verdicts"] = std::move(v);
  Json red = Json::array();
  for (const ReductionPair& p : r.reductions) red.push_back(reduction_json(g, p));
  j["reduction_pairs"] = std::move(red);
  j["decisions"] = {
      "verdicts are tri-state; finite periodicity evidence never yields an unconditional No",
      "pure infiniteness is certified only by aperiodic quartets at every vertex",
      "cofinality is read as a trivial saturated hereditary lattice",
  };
  return j;
}

std::string summary_text(const TwoGraph& g) {
  std::size_t blue = 0;
  for (const Edge& e : g.graph().edges()) blue += e.colour == Colour::Blue;
  std::ostringstream out;
  out << "vertices: " << g.vertex_count() << "  blue edges: " << blue
      << "  red edges: " << g.edge_count() - blue << "  rules: " << g.rules().size() << "\n";
  out << "M1 = " << g.connectivity(Colour::Blue) << "\nM2 = " << g.connectivity(Colour::Red) << "\n";
  return out.str();
}

std::string lattice_text(const TwoGraph& g, const SatHereditaryLattice& lattice,
                         const MaximalTails& tails) {
  std::string out = "saturated hereditary sets";
  out += lattice.exhaustive ? ":\n" : " (closure-generated, may be incomplete):\n";
  for (const VertexSet& h : lattice.members) out += "  " + to_string(g, h) + "\n";
  out += "maximal tails:\n";
  for (const VertexSet& t : tails.tails) out += "  " + to_string(g, t) + "\n";
  return out;
}

std::string aperiodicity_text(const TwoGraph& g, const AperiodicityResult& own,
                              const StrongAperiodicityResult& strong) {
  std::string out = verdict_line("aperiodic", own.verdict);
  for (const Quartet& q : own.quartets) {
    out += "  quartet at " + g.graph().vertex_name(q.vertex) + ": alpha = " +
           g.describe(q.alpha1) + ", " + g.describe(q.alpha2) + "; beta = " +
           g.describe(q.beta1) + ", " + g.describe(q.beta2) + "\n";
  }
  out += verdict_line("strongly aperiodic", strong.verdict);
  return out;
}

std::string k_text(const KInvariants& k) {
  return "H0 = " + to_string(k.h0) + "\nH1 = K1 = " + to_string(k.h1) + "\nH2 = " +
         to_string(k.h2) + "\n";
}

std::string verdicts_text(const AnalysisReport& r) {
  std::string out;
  for (const IdealRecord& rec : r.ideals) {
    out += "H = " + to_string(r.graph, rec.h) + ": condition (iii) " +
           (rec.condition.holds ? "holds" : "fails") + ", H1 map " +
           (rec.h1.injective ? "injective" : "not injective") + "\n";
    out += "    L1 = " + lattice_text_short(rec.condition.l1) +
           "    L2 = " + lattice_text_short(rec.condition.l2) + "\n";
  }
  out += verdict_line("TD0", r.td0);
  out += verdict_line("PI", r.pi);
  out += verdict_line("RR0", r.rr0);
  return out;
}

std::string report_text(const AnalysisReport& r) {
  std::string out = summary_text(r.graph);
  out += lattice_text(r.graph, r.lattice, r.tails);
  out += aperiodicity_text(r.graph, r.aperiodicity, r.strong);
  out += k_text(r.k);
  out += verdicts_text(r);
  out += "reduction pairs (K, H) with cofinal subquotient:\n";
  for (const ReductionPair& p : r.reductions)
    out += "  (" + to_string(r.graph, p.k) + ", " + to_string(r.graph, p.h) + ")\n";
  return out;
}

}  // namespace kgraph
