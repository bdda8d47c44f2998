#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

#include "orientdia/graph.hpp"

namespace testing {

using orientdia::Arc;
using orientdia::Digraph;
using orientdia::Edge;
using orientdia::MultiGraph;
using orientdia::Vertex;

inline MultiGraph graph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
  std::vector<Edge> es;
  for (auto [u, v] : edges) es.push_back({u, v});
  return MultiGraph(n, std::move(es));
}

inline Digraph digraph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> arcs) {
  std::vector<Arc> as;
  for (auto [u, v] : arcs) as.push_back({u, v});
  return Digraph(n, std::move(as));
}

inline MultiGraph cycle(std::size_t n) {
  std::vector<Edge> es;
  for (Vertex i = 0; i < n; ++i) es.push_back({i, static_cast<Vertex>((i + 1) % n)});
  return MultiGraph(n, std::move(es));
}

inline Digraph directed_cycle(std::size_t n) {
  std::vector<Arc> as;
  for (Vertex i = 0; i < n; ++i) as.push_back({i, static_cast<Vertex>((i + 1) % n)});
  return Digraph(n, std::move(as));
}

inline MultiGraph complete(std::size_t n) {
  std::vector<Edge> es;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) es.push_back({i, j});
  }
  return MultiGraph(n, std::move(es));
}

// Two triangles sharing vertex 0.
inline MultiGraph bowtie() { return graph(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}}); }

// Two vertices joined by three internally disjoint paths of length 2.
inline MultiGraph theta() { return graph(5, {{0, 2}, {2, 1}, {0, 3}, {3, 1}, {0, 4}, {4, 1}}); }

// Connected simple graph, not necessarily bridgeless: random tree plus extras.
inline MultiGraph random_connected(std::size_t n, std::size_t extra, std::mt19937_64& rng) {
  std::vector<Edge> es;
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  auto add = [&](Vertex a, Vertex b) {
    es.push_back({a, b});
    adj[a][b] = adj[b][a] = true;
  };
  for (Vertex v = 1; v < n; ++v) add(static_cast<Vertex>(rng() % v), v);
  for (std::size_t i = 0; i < extra; ++i) {
    const auto a = static_cast<Vertex>(rng() % n), b = static_cast<Vertex>(rng() % n);
    if (a != b && !adj[a][b]) add(a, b);
  }
  return MultiGraph(n, std::move(es));
}

}  // namespace testing
