#pragma once

// Glue between the brute-force oracles and library types, plus fixtures
// shared by several test binaries.

#include "oracles.hpp"
#include "spancol/colouring.hpp"
#include "spancol/graph.hpp"

namespace testing_support {

inline spancol::Graph to_graph(const oracle::Adj& a) {
  std::vector<spancol::Edge> es;
  for (auto [u, v] : oracle::edges(a)) es.emplace_back(u, v);
  return spancol::graph_from_edges(static_cast<int>(a.size()), es);
}

inline oracle::Adj to_adj(const spancol::Graph& g) {
  oracle::Adj a = oracle::empty_adj(g.size());
  for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = true;
  return a;
}

inline spancol::FVector e(int n, int i) { return spancol::unit_vector(spancol::make_field(2, 1), n, i); }

// Hexagon with vertices at angles 0, 60, ..., 300 degrees and a chord
// between 120 and 240.
inline spancol::Graph hexagon_with_chord() {
  return spancol::graph_from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {2, 4}});
}

inline spancol::SpanColouring lines_of(const std::vector<int>& axes, int n = 3) {
  const auto& f2 = spancol::make_field(2, 1);
  std::vector<spancol::Subspace> ls;
  for (int a : axes) {
    std::vector<spancol::FVector> v{e(n, a)};
    ls.push_back(spancol::span(v));
  }
  return spancol::SpanColouring::intermediate(f2, n, std::move(ls));
}

// Axis labels per vertex for the two figure colourings (0-based axes).
inline spancol::SpanColouring figure_mixed() { return lines_of({1, 0, 1, 0, 2, 0}); }
inline spancol::SpanColouring figure_all_planes() { return lines_of({0, 2, 1, 0, 2, 1}); }

}  // namespace testing_support
