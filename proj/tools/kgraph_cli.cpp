#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "kgraph/error.hpp"
#include "kgraph/examples.hpp"
#include "kgraph/io.hpp"
#include "kgraph/verdict.hpp"

using namespace kgraph;

namespace {

struct Options {
  std::string input = "-";
  std::string output;
  std::string format = "text";
  std::vector<unsigned> max_degree{3, 3};
  unsigned depth = 4;
  std::optional<unsigned> accept_depth;
  std::size_t cap = kDefaultEnumerationCap;
  std::optional<std::uint64_t> seed;
  std::string example;
  std::vector<std::int64_t> params;
};

SearchBounds bounds_of(const Options& o) {
  SearchBounds b;
  b.max_degree = {o.max_degree[0], o.max_degree[1]};
  b.depth = o.depth;
  b.cap = o.cap;
  b.accept_depth_evidence = o.accept_depth;
  return b;
}

TwoGraph load(const Options& o) {
  if (o.input == "-") return read_graph(std::cin);
  std::ifstream in(o.input);
  if (!in) throw Error(Errc::InvalidInput, "cannot open " + o.input);
  return read_graph(in);
}

void emit(const Options& o, const std::string& text, const Json& json) {
  const std::string body = o.format == "json" ? json.dump(2) + "\n" : text;
  if (o.output.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream out(o.output);
  if (!out) throw Error(Errc::InvalidInput, "cannot write " + o.output);
  out << body;
}

void add_graph_options(CLI::App* cmd, Options& o, bool search) {
  cmd->add_option("input", o.input, "graph JSON file, or - for stdin");
  cmd->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("-o,--output", o.output, "write to this file instead of stdout");
  if (!search) return;
  cmd->add_option("--max-degree", o.max_degree, "quartet/periodicity degree bound A B")
      ->expected(2);
  cmd->add_option("--depth", o.depth, "periodicity scan depth")->check(CLI::PositiveNumber);
  cmd->add_option("--accept-depth-evidence", o.accept_depth,
                  "scan at depth D and accept witnesses as conditional refutations")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--cap", o.cap, "path enumeration cap")->check(CLI::PositiveNumber);
}

int run(CLI::App& app, const Options& o) {
  const std::string cmd = app.get_subcommands().front()->get_name();
  if (cmd == "gen") {
    std::vector<std::int64_t> params = o.params;
    if (o.example == "random") {
      if (params.size() == 1) params.insert(params.begin(), static_cast<std::int64_t>(o.seed.value_or(0)));
    }
    const TwoGraph g = generate_example(o.example, params);
    Json j = graph_to_json(g);
    if (o.example == "ex65-truncation") {
      j["note"] = "modified truncation: machinery tests only, no verdicts";
    }
    Options json_out = o;
    json_out.format = "json";
    emit(json_out, "", j);
    return 0;
  }

  const TwoGraph g = load(o);
  const SearchBounds bounds = bounds_of(o);
  if (cmd == "validate") {
    Json j;
    j["valid"] = true;
    j["graph"] = summary_json(g);
    emit(o, "valid 2-graph\n" + summary_text(g), j);
  } else if (cmd == "ideals") {
    const auto lattice = enumerate_sat_hereditary(g);
    const auto tails = maximal_tails(g);
    emit(o, lattice_text(g, lattice, tails), lattice_section(g, lattice, tails));
  } else if (cmd == "aperiodicity") {
    const auto own = aperiodicity_verdict(g, bounds);
    const auto strong =
        strong_aperiodicity_verdict(g, bounds, enumerate_sat_hereditary(g), own);
    Json j;
    j["bounds"] = bounds_json(bounds);
    j["aperiodicity"] = aperiodicity_json(g, own);
    j["strong_aperiodicity"] = strong_json(g, strong);
    emit(o, aperiodicity_text(g, own, strong), j);
  } else if (cmd == "ktheory") {
    const auto k = k1_of_two_graph(g);
    emit(o, k_text(k), k_json(k));
  } else {
    const AnalysisReport r = analyse(g, bounds);
    if (cmd == "rr0") {
      Json j;
      j["bounds"] = bounds_json(bounds);
      Json ideals = Json::array();
      for (const auto& rec : r.ideals) ideals.push_back(ideal_json(g, rec));
      j["ideals"] = std::move(ideals);
      j["TD0"] = verdict_json(r.td0);
      j["PI"] = verdict_json(r.pi);
      j["RR0"] = verdict_json(r.rr0);
      emit(o, verdicts_text(r), j);
    } else {
      emit(o, report_text(r), report_json(r));
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ideal structure, K_1 and real-rank-zero verdicts for finite 2-graphs"};
  app.require_subcommand(1);
  Options o;

  add_graph_options(app.add_subcommand("validate", "check a graph file"), o, false);
  add_graph_options(app.add_subcommand("ideals", "saturated hereditary sets and maximal tails"),
                    o, false);
  add_graph_options(app.add_subcommand("aperiodicity", "quartet search and periodicity scans"),
                    o, true);
  add_graph_options(app.add_subcommand("ktheory", "homology of the chain complex"), o, false);
  add_graph_options(app.add_subcommand("rr0", "condition (iii) per ideal and TD0/PI/RR0"), o,
                    true);
  add_graph_options(app.add_subcommand("report", "full analysis report"), o, true);

  auto* gen = app.add_subcommand("gen", "write an example graph as JSON");
  gen->add_option("name", o.example, "ex63, ex64, torus, ex65-truncation, random")->required();
  gen->add_option("params", o.params, "n for ex63, N for ex65-truncation, [seed] size for random");
  gen->add_option("--seed", o.seed, "seed for random");
  gen->add_option("-o,--output", o.output, "write to this file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    return run(app, o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
}
