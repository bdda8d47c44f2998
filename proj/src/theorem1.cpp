#include <algorithm>
#include <optional>

#include "internal/checks.hpp"
#include "orientdia/bounds.hpp"
#include "orientdia/decomposition.hpp"
#include "orientdia/errors.hpp"
#include "orientdia/orient.hpp"

namespace orientdia {

namespace {

struct Case2Blocks {
  BlockId a, b;
  Vertex x, y, z;
};

class Theorem1Builder {
 public:
  std::vector<std::string> trace;

  // Reversal flags for the edges of g. `labels` maps g's vertices to the
  // caller's vertex ids for the trace.
  std::vector<bool> solve(const MultiGraph& g, const std::vector<Vertex>& labels, std::size_t depth) {
    const auto dec = decompose(g);
    const std::size_t p = dec.block_count();
    const std::string level = std::to_string(depth) + ":";
    std::vector<bool> reversed;

    if (p <= 3) {
      trace.push_back(level + "base(p=" + std::to_string(p) + ")");
      reversed = flags_of(g, robbins_orientation(g));
    } else if (auto v = crowded_cut_vertex(dec)) {
      trace.push_back(level + "case1(v=" + std::to_string(labels[*v]) + ")");
      reversed = case1(g, labels, *v, depth);
    } else if (auto c2 = case2_blocks(dec)) {
      trace.push_back(level + "case2(y=" + std::to_string(labels[c2->y]) +
                      ",x=" + std::to_string(labels[c2->x]) + ",z=" + std::to_string(labels[c2->z]) + ")");
      reversed = case2(g, dec, labels, *c2, depth);
    } else {
      trace.push_back(level + "case3");
      reversed = flags_of(g, robbins_orientation(g));
    }

    const Digraph d = Digraph::orient(g, reversed);
    const Hops diam = diameter(d);
    const std::uint32_t bound = theorem1_bound(g.vertex_count(), p);
    if (diam.is_infinite() || diam.value() > bound) {
      throw ContractViolation("orientation at recursion depth " + std::to_string(depth) +
                              " exceeds n - floor(p/2) = " + std::to_string(bound));
    }
    return reversed;
  }

 private:
  static std::vector<bool> flags_of(const MultiGraph& g, const Digraph& d) {
    std::vector<bool> out(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) out[e] = d.arcs()[e].tail != g.edge(e).u;
    return out;
  }

  static std::optional<Vertex> crowded_cut_vertex(const BlockDecomposition& dec) {
    for (Vertex c : dec.cut_vertices) {
      if (dec.blocks_of_vertex[c].size() > 2) return c;
    }
    return std::nullopt;
  }

  static std::optional<Case2Blocks> case2_blocks(const BlockDecomposition& dec) {
    for (Vertex y : dec.cut_vertices) {
      const auto& bs = dec.blocks_of_vertex[y];
      if (bs.size() != 2) continue;
      const auto ca = dec.cut_vertices_of(bs[0]);
      const auto cb = dec.cut_vertices_of(bs[1]);
      if (ca.size() != 2 || cb.size() != 2) continue;
      const Vertex x = ca[0] == y ? ca[1] : ca[0];
      const Vertex z = cb[0] == y ? cb[1] : cb[0];
      return Case2Blocks{bs[0], bs[1], x, y, z};
    }
    return std::nullopt;
  }

  void solve_sub(const Subgraph& sub, const std::vector<Vertex>& labels, std::size_t depth,
                 std::vector<bool>& into) {
    std::vector<Vertex> sub_labels;
    for (Vertex v : sub.vertex_to_parent) sub_labels.push_back(labels[v]);
    auto flags = solve(sub.graph, sub_labels, depth + 1);
    for (EdgeId e = 0; e < flags.size(); ++e) into[sub.edge_to_parent[e]] = flags[e];
  }

  // Q1, Q2 are the two largest branches at v, Q3 the union of the rest.
  std::vector<bool> case1(const MultiGraph& g, const std::vector<Vertex>& labels, Vertex v,
                          std::size_t depth) {
    auto branches = branches_at(g, v);
    std::stable_sort(branches.begin(), branches.end(), [](const Subgraph& a, const Subgraph& b) {
      return a.graph.vertex_count() > b.graph.vertex_count();
    });
    std::vector<EdgeId> rest;
    for (std::size_t i = 2; i < branches.size(); ++i) {
      rest.insert(rest.end(), branches[i].edge_to_parent.begin(), branches[i].edge_to_parent.end());
    }
    std::sort(rest.begin(), rest.end());

    std::vector<bool> reversed(g.edge_count());
    solve_sub(branches[0], labels, depth, reversed);
    solve_sub(branches[1], labels, depth, reversed);
    solve_sub(edge_subgraph(g, rest), labels, depth, reversed);
    return reversed;
  }

  // Orient the graph with A and B contracted to y' recursively, then give A
  // and B the cross-block orientation for x and z.
  std::vector<bool> case2(const MultiGraph& g, const BlockDecomposition& dec,
                          const std::vector<Vertex>& labels, const Case2Blocks& c, std::size_t depth) {
    const std::size_t n = g.vertex_count();
    std::vector<bool> in_ab(n, false);
    for (Vertex v : dec.blocks[c.a]) in_ab[v] = true;
    for (Vertex v : dec.blocks[c.b]) in_ab[v] = true;

    std::vector<Vertex> to_contracted(n);
    std::vector<Vertex> contracted_labels;
    for (Vertex v = 0; v < n; ++v) {
      if (in_ab[v]) continue;
      to_contracted[v] = static_cast<Vertex>(contracted_labels.size());
      contracted_labels.push_back(labels[v]);
    }
    const auto y_prime = static_cast<Vertex>(contracted_labels.size());
    contracted_labels.push_back(labels[c.y]);
    for (Vertex v = 0; v < n; ++v) {
      if (in_ab[v]) to_contracted[v] = y_prime;
    }

    std::vector<Edge> outer_edges;
    std::vector<EdgeId> outer_ids;
    std::vector<EdgeId> ab_edges;
    std::vector<bool> touches_x(n, false), touches_z(n, false);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const BlockId blk = dec.block_of_edge[e];
      if (blk == c.a || blk == c.b) {
        ab_edges.push_back(e);
        continue;
      }
      const Edge& ed = g.edge(e);
      const Vertex u = to_contracted[ed.u], w = to_contracted[ed.v];
      if (u == w) throw ContractViolation("identifying A and B produced a loop");
      for (auto [end, other] : {std::pair{ed.u, ed.v}, std::pair{ed.v, ed.u}}) {
        if (end == c.x) touches_x[other] = true;
        if (end == c.z) touches_z[other] = true;
      }
      outer_edges.push_back({u, w});
      outer_ids.push_back(e);
    }
    for (Vertex v = 0; v < n; ++v) {
      if (touches_x[v] && touches_z[v]) {
        throw ContractViolation("vertex " + std::to_string(labels[v]) +
                                " is adjacent to both x and z; identification would create parallel edges");
      }
    }

    std::vector<bool> reversed(g.edge_count());
    // Stored endpoint order survives the identification, so reversal flags
    // lift edge by edge.
    const MultiGraph contracted(contracted_labels.size(), std::move(outer_edges));
    const auto flags = solve(contracted, contracted_labels, depth + 1);
    for (EdgeId e = 0; e < flags.size(); ++e) reversed[outer_ids[e]] = flags[e];

    const Subgraph ab = edge_subgraph(g, ab_edges);
    auto local = [&](Vertex v) {
      return static_cast<Vertex>(std::find(ab.vertex_to_parent.begin(), ab.vertex_to_parent.end(), v) -
                                 ab.vertex_to_parent.begin());
    };
    const Digraph dab = lemma1_orientation(ab.graph, local(c.x), local(c.z));
    const auto ab_flags = flags_of(ab.graph, dab);
    for (EdgeId e = 0; e < ab_flags.size(); ++e) reversed[ab.edge_to_parent[e]] = ab_flags[e];
    return reversed;
  }
};

}  // namespace

OrientationResult theorem1_orientation(const MultiGraph& g) {
  const auto dec = detail::require_bridgeless(g);
  const std::size_t n = g.vertex_count();
  if (n == 1) {
    Digraph d(1, {});
    return {d, make_report("theorem1", d, 1, "theorem1", {"0:base(p=1)"})};
  }
  std::vector<Vertex> labels(n);
  for (Vertex v = 0; v < n; ++v) labels[v] = v;
  Theorem1Builder builder;
  const auto reversed = builder.solve(g, labels, 0);
  Digraph d = Digraph::orient(g, reversed);
  auto report = make_report("theorem1", d, theorem1_bound(n, dec.block_count()), "theorem1",
                            std::move(builder.trace));
  if (!report.satisfied) throw ContractViolation("theorem1 orientation exceeds its bound");
  return {std::move(d), std::move(report)};
}

}  // namespace orientdia
