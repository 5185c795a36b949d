#include "kgraph/examples.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>

#include "kgraph/error.hpp"

namespace kgraph {

namespace {

struct Builder {
  ColouredGraph graph;
  FactorisationRules rules;

  void rule(const std::string& blue, const std::string& red, const std::string& red_out,
            const std::string& blue_out) {
    rules.push_back({graph.edge_id(blue), graph.edge_id(red), graph.edge_id(red_out),
                     graph.edge_id(blue_out)});
  }
  TwoGraph finish() { return validate(std::move(graph), std::move(rules)); }
};

std::string pow2_name(const std::string& stem, unsigned n, std::uint64_t i) {
  return stem + std::to_string(n) + "_" + std::to_string(i);
}

}  // namespace

TwoGraph ex63(unsigned n) {
  if (n < 1) throw Error(Errc::BadParams, "ex63 needs n >= 1");
  const std::array<std::string, 3> names{"u", "v", "w"};
  // count[x][y]: edges of each colour with range x and source y
  std::array<std::array<unsigned, 3>, 3> count{};
  count[0][0] = 2;
  count[1][1] = 2;
  count[2][2] = n + 1;
  count[0][1] = 1;
  count[1][0] = 1;
  count[1][2] = 1;

  auto label = [&](char stem, int x, int y, unsigned i) {
    std::string s(1, stem);
    s += "_" + names[x];
    if (x != y) s += names[y];
    return s + "_" + std::to_string(i);
  };

  Builder b;
  for (const auto& name : names) b.graph.add_vertex(name);
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      for (unsigned i = 1; i <= count[x][y]; ++i) {
        b.graph.add_edge(label('a', x, y, i), Colour::Blue, names[y], names[x]);
        b.graph.add_edge(label('b', x, y, i), Colour::Red, names[y], names[x]);
      }

  for (int x = 0; x < 3; ++x) {
    const auto a = [&](unsigned i) { return label('a', x, x, i); };
    const auto r = [&](unsigned i) { return label('b', x, x, i); };
    b.rule(a(1), r(2), r(2), a(1));
    b.rule(a(2), r(2), r(2), a(2));
    b.rule(a(2), r(1), r(1), a(1));
    b.rule(a(1), r(1), r(1), a(2));
  }
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      for (int z = 0; z < 3; ++z)
        for (unsigned i = 1; i <= count[x][y]; ++i)
          for (unsigned j = 1; j <= count[y][z]; ++j) {
            if (x == y && y == z && i <= 2 && j <= 2) continue;
            b.rule(label('a', x, y, i), label('b', y, z, j), label('b', x, y, i),
                   label('a', y, z, j));
          }
  return b.finish();
}

TwoGraph ex64() {
  Builder b;
  b.graph.add_vertex("v");
  for (const char* e : {"e1", "e2"}) b.graph.add_edge(e, Colour::Blue, "v", "v");
  for (const char* f : {"f1", "f2"}) b.graph.add_edge(f, Colour::Red, "v", "v");
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j)
      b.rule("e" + std::to_string(i), "f" + std::to_string(j), "f" + std::to_string(i),
             "e" + std::to_string(j));
  return b.finish();
}

TwoGraph torus() {
  Builder b;
  b.graph.add_vertex("v");
  b.graph.add_edge("e", Colour::Blue, "v", "v");
  b.graph.add_edge("f", Colour::Red, "v", "v");
  b.rule("e", "f", "f", "e");
  return b.finish();
}

TwoGraph ex65_truncation(unsigned stages) {
  if (stages < 1 || stages > 8) throw Error(Errc::BadParams, "ex65-truncation needs 1 <= N <= 8");
  Builder b;
  for (unsigned n = 1; n <= stages; ++n) b.graph.add_vertex("v" + std::to_string(n));
  for (unsigned n = 1; n <= stages; ++n) {
    const std::string vn = "v" + std::to_string(n);
    b.graph.add_edge("e" + std::to_string(n), Colour::Blue, vn, vn);
  }
  for (unsigned n = 1; n < stages; ++n) {
    const std::uint64_t edges = std::uint64_t{1} << (2 * n - 1);
    for (std::uint64_t i = 0; i < edges; ++i)
      b.graph.add_edge(pow2_name("f", n, i), Colour::Red, "v" + std::to_string(n + 1),
                       "v" + std::to_string(n));
  }
  const std::string last = "v" + std::to_string(stages);
  b.graph.add_edge("g", Colour::Red, last, last);

  for (unsigned n = 1; n < stages; ++n) {
    const std::uint64_t edges = std::uint64_t{1} << (2 * n - 1);
    const std::uint64_t cycle = std::uint64_t{1} << (n - 1);
    for (std::uint64_t i = 0; i < edges; ++i) {
      const std::uint64_t image = i < cycle ? (i + 1) % cycle : i;
      b.rule("e" + std::to_string(n), pow2_name("f", n, i), pow2_name("f", n, image),
             "e" + std::to_string(n + 1));
    }
  }
  const std::string e_last = "e" + std::to_string(stages);
  b.rule(e_last, "g", "g", e_last);
  return b.finish();
}

TwoGraph random_two_graph(std::uint64_t seed, std::size_t vertices) {
  if (vertices < 1 || vertices > 64) throw Error(Errc::BadParams, "random needs 1 <= size <= 64");
  std::mt19937_64 rng(seed);
  const std::size_t n = vertices;

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  std::bernoulli_distribution forward(0.45), backward(0.12), loop(0.7);

  // Entries pointing "down" the random order are rarer, which leaves room
  // for nontrivial hereditary sets.
  IntMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const bool hit = i == j ? loop(rng) : order[i] < order[j] ? forward(rng) : backward(rng);
      if (hit) a(i, j) = 1;
    }
    bool empty_row = true;
    for (std::size_t j = 0; j < n; ++j) empty_row = empty_row && sgn(a(i, j)) == 0;
    if (empty_row) a(i, i) = 1;
  }

  const IntMatrix id = IntMatrix::identity(n);
  const IntMatrix a2 = a * a;
  const std::vector<IntMatrix> pool{a, id + a, a2, id, a + a2, id + a2, Integer(2) * id + a};
  auto admissible = [&](const IntMatrix& m) {
    for (std::size_t i = 0; i < n; ++i) {
      bool nonzero = false;
      for (std::size_t j = 0; j < n; ++j) {
        if (m(i, j) > 3) return false;
        nonzero = nonzero || sgn(m(i, j)) != 0;
      }
      if (!nonzero) return false;
    }
    return true;
  };
  std::vector<std::size_t> usable;
  for (std::size_t p = 0; p < pool.size(); ++p)
    if (admissible(pool[p])) usable.push_back(p);
  std::uniform_int_distribution<std::size_t> pick(0, usable.size() - 1);
  const IntMatrix& m1 = pool[usable[pick(rng)]];
  const IntMatrix& m2 = pool[usable[pick(rng)]];

  Builder b;
  for (std::size_t v = 0; v < n; ++v) b.graph.add_vertex("v" + std::to_string(v));
  std::size_t blue_count = 0, red_count = 0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      for (long k = 0; k < m1(x, y).get_si(); ++k)
        b.graph.add_edge("b" + std::to_string(blue_count++), Colour::Blue,
                         static_cast<VertexId>(y), static_cast<VertexId>(x));
      for (long k = 0; k < m2(x, y).get_si(); ++k)
        b.graph.add_edge("r" + std::to_string(red_count++), Colour::Red,
                         static_cast<VertexId>(y), static_cast<VertexId>(x));
    }

  // Two-edge paths grouped by (range, source); first edge is the range end.
  const auto& edges = b.graph.edges();
  std::map<std::pair<VertexId, VertexId>, std::vector<std::pair<EdgeId, EdgeId>>> blue_red,
      red_blue;
  for (EdgeId first = 0; first < edges.size(); ++first)
    for (EdgeId second = 0; second < edges.size(); ++second) {
      if (edges[first].source != edges[second].range) continue;
      if (edges[first].colour == edges[second].colour) continue;
      auto& bucket = edges[first].colour == Colour::Blue ? blue_red : red_blue;
      bucket[{edges[first].range, edges[second].source}].push_back({first, second});
    }
  for (auto& [key, paths] : blue_red) {
    auto& targets = red_blue[key];
    std::shuffle(targets.begin(), targets.end(), rng);
    for (std::size_t i = 0; i < paths.size(); ++i)
      b.rules.push_back({paths[i].first, paths[i].second, targets[i].first, targets[i].second});
  }
  return b.finish();
}

TwoGraph generate_example(const std::string& name, const std::vector<std::int64_t>& params) {
  auto expect = [&](std::size_t count) {
    if (params.size() != count) {
      throw Error(Errc::BadParams, name + " takes " + std::to_string(count) + " parameter(s)");
    }
  };
  if (name == "ex63") {
    expect(1);
    if (params[0] < 1 || params[0] > 1000) throw Error(Errc::BadParams, "ex63 needs 1 <= n <= 1000");
    return ex63(static_cast<unsigned>(params[0]));
  }
  if (name == "ex64") {
    expect(0);
    return ex64();
  }
  if (name == "torus") {
    expect(0);
    return torus();
  }
  if (name == "ex65-truncation") {
    expect(1);
    if (params[0] < 1 || params[0] > 8) throw Error(Errc::BadParams, "ex65-truncation needs 1 <= N <= 8");
    return ex65_truncation(static_cast<unsigned>(params[0]));
  }
  if (name == "random") {
    expect(2);
    if (params[1] < 1 || params[1] > 64) throw Error(Errc::BadParams, "random needs 1 <= size <= 64");
    return random_two_graph(static_cast<std::uint64_t>(params[0]),
                            static_cast<std::size_t>(params[1]));
  }
  throw Error(Errc::UnknownExample, name);
}

}  // namespace kgraph
