#include <algorithm>

#include "internal/checks.hpp"
#include "orientdia/bounds.hpp"
#include "orientdia/errors.hpp"
#include "orientdia/orient.hpp"

namespace orientdia {

Digraph robbins_orientation(const MultiGraph& g) {
  detail::require_bridgeless(g);
  const std::size_t n = g.vertex_count();
  constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> disc(n, kUnvisited);
  std::vector<bool> tree_edge(g.edge_count(), false);

  struct Frame {
    Vertex v;
    std::size_t next;
  };
  std::size_t time = 0;
  std::vector<Frame> stack{{0, 0}};
  disc[0] = time++;
  while (!stack.empty()) {
    Frame& f = stack.back();
    auto inc = g.incident(f.v);
    if (f.next == inc.size()) {
      stack.pop_back();
      continue;
    }
    auto [w, e] = inc[f.next++];
    if (disc[w] == kUnvisited) {
      disc[w] = time++;
      tree_edge[e] = true;
      stack.push_back({w, 0});
    }
  }

  // Tree edges point away from the root, every other edge towards the
  // endpoint discovered first (its ancestor).
  std::vector<bool> reversed(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    const bool u_first = disc[ed.u] < disc[ed.v];
    reversed[e] = tree_edge[e] ? !u_first : u_first;
  }
  Digraph d = Digraph::orient(g, reversed);
  if (!is_strongly_connected(d)) {
    throw ContractViolation("DFS orientation of a bridgeless graph is not strong");
  }
  return d;
}

OrientationReport make_report(std::string strategy, const Digraph& d, std::uint32_t bound,
                              std::string bound_name, std::vector<std::string> trace) {
  auto dist = all_pairs_distances(d);
  OrientationReport r;
  r.strategy = std::move(strategy);
  r.diameter = diameter(dist);
  r.bound = bound;
  r.bound_name = std::move(bound_name);
  r.satisfied = r.diameter.is_finite() && r.diameter.value() <= bound;
  r.witness_pair = diametral_pair(dist);
  r.case_trace = std::move(trace);
  return r;
}

OrientationResult robbins_strategy(const MultiGraph& g) {
  Digraph d = robbins_orientation(g);
  const auto n = static_cast<std::uint32_t>(g.vertex_count());
  auto report = make_report("robbins", d, n == 0 ? 0 : n - 1, "strong", {"dfs"});
  return {std::move(d), std::move(report)};
}

}  // namespace orientdia
