#include <algorithm>
#include <limits>

#include "internal/checks.hpp"
#include "orientdia/bounds.hpp"
#include "orientdia/decomposition.hpp"
#include "orientdia/errors.hpp"
#include "orientdia/orient.hpp"

namespace orientdia {

namespace {

constexpr std::int8_t kUnset = -1;

EdgeId edge_between(const MultiGraph& g, Vertex a, Vertex b) {
  for (const auto& inc : g.incident(a)) {
    if (inc.neighbor == b) return inc.edge;
  }
  throw ContractViolation("no edge joins " + std::to_string(a) + " and " + std::to_string(b));
}

void set_arc(std::vector<std::int8_t>& dir, const MultiGraph& g, EdgeId e, Vertex tail) {
  const std::int8_t want = g.edge(e).u == tail ? 0 : 1;
  if (dir[e] != kUnset && dir[e] != want) {
    throw ContractViolation("edge " + detail::describe_edge(g, e) + " oriented twice");
  }
  dir[e] = want;
}

// Orients the block on `verts` like a tournament of diameter 2 (or the K_4
// table with `special` of eccentricity 2).
void orient_clique(std::vector<std::int8_t>& dir, const MultiGraph& g, const std::vector<Vertex>& verts,
                   std::optional<Vertex> special) {
  std::optional<Vertex> local;
  if (special) {
    local = static_cast<Vertex>(std::find(verts.begin(), verts.end(), *special) - verts.begin());
  }
  const Digraph t = complete_orientation(verts.size(), local);
  for (const Arc& a : t.arcs()) {
    const Vertex tail = verts[a.tail], head = verts[a.head];
    set_arc(dir, g, edge_between(g, tail, head), tail);
  }
}

// Spanning tree of G[S] by BFS from the smallest cut vertex.
std::vector<EdgeId> cut_vertex_tree(const MultiGraph& g, const BlockDecomposition& dec) {
  std::vector<bool> in_s(g.vertex_count(), false);
  for (Vertex c : dec.cut_vertices) in_s[c] = true;
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<EdgeId> tree;
  std::vector<Vertex> queue{dec.cut_vertices.front()};
  seen[queue.front()] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& inc : g.incident(queue[head])) {
      if (!in_s[inc.neighbor] || seen[inc.neighbor]) continue;
      seen[inc.neighbor] = true;
      tree.push_back(inc.edge);
      queue.push_back(inc.neighbor);
    }
  }
  if (queue.size() != dec.cut_vertices.size()) {
    throw ContractViolation("the cut vertices do not induce a connected subgraph");
  }
  return tree;
}

}  // namespace

OrientationResult blockgraph_orientation(const MultiGraph& g) {
  const auto dec = detail::require_bridgeless(g);
  if (!is_block_graph(g)) throw InputError("graph is not a block graph: some block is not complete");
  const std::size_t n = g.vertex_count();
  const std::uint32_t bound = blockgraph_bound(n);
  std::vector<std::int8_t> dir(g.edge_count(), kUnset);
  std::vector<std::string> trace;

  if (dec.cut_vertices.empty()) {
    if (n == 1) {
      Digraph d(1, {});
      return {d, make_report("blockgraph", d, bound, "blockgraph", {"single vertex"})};
    }
    orient_clique(dir, g, dec.blocks.front(), std::nullopt);
    trace.push_back("complete(n=" + std::to_string(n) + ")");
  } else {
    TreeExtension ext{g, dec.cut_vertices, cut_vertex_tree(g, dec), {}, 2};
    std::vector<std::vector<bool>> tree_adjacent(n, std::vector<bool>(n, false));
    for (EdgeId e : ext.tree_edges) {
      tree_adjacent[g.edge(e).u][g.edge(e).v] = tree_adjacent[g.edge(e).v][g.edge(e).u] = true;
    }
    for (BlockId b = 0; b < dec.block_count(); ++b) {
      const auto cuts = dec.cut_vertices_of(b);
      if (cuts.size() == 2) {
        const auto& verts = dec.blocks[b];
        auto inner = std::find_if(verts.begin(), verts.end(), [&](Vertex v) { return !dec.is_cut_vertex(v); });
        if (inner == verts.end()) throw ContractViolation("block without an internal vertex");
        const Vertex u = cuts[0], v = *inner, w = cuts[1];
        ext.paths.push_back({{u, v, w}, {edge_between(g, u, v), edge_between(g, v, w)}});
      } else if (cuts.size() > 2) {
        for (std::size_t i = 0; i < cuts.size(); ++i) {
          for (std::size_t j = i + 1; j < cuts.size(); ++j) {
            if (tree_adjacent[cuts[i]][cuts[j]]) continue;
            ext.paths.push_back({{cuts[i], cuts[j]}, {edge_between(g, cuts[i], cuts[j])}});
          }
        }
      }
    }
    const auto core = tree_extension_orientation(ext);
    for (std::size_t i = 0; i < core.included_edges.size(); ++i) {
      set_arc(dir, g, core.included_edges[i], core.orientation.arcs()[i].tail);
    }
    trace.push_back("tree(s=" + std::to_string(dec.cut_vertex_count()) + ",paths=" +
                    std::to_string(ext.paths.size()) + ",kept=" + std::to_string(core.kept_paths.size()) + ")");

    std::vector<bool> in_core(n, false);
    for (Vertex v : core.vertices) in_core[v] = true;
    for (BlockId b : dec.end_blocks) orient_clique(dir, g, dec.blocks[b], dec.cut_vertices_of(b).front());
    std::size_t hung = 0;
    for (BlockId b = 0; b < dec.block_count(); ++b) {
      const auto cuts = dec.cut_vertices_of(b);
      if (cuts.size() < 2) continue;
      for (Vertex v : dec.blocks[b]) {
        if (dec.is_cut_vertex(v) || in_core[v]) continue;
        set_arc(dir, g, edge_between(g, cuts[0], v), cuts[0]);
        set_arc(dir, g, edge_between(g, v, cuts[1]), v);
        ++hung;
      }
    }
    trace.push_back("end_blocks=" + std::to_string(dec.end_blocks.size()));
    trace.push_back("two_paths=" + std::to_string(hung));
  }

  std::vector<bool> reversed(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) reversed[e] = dir[e] == 1;
  Digraph d = Digraph::orient(g, reversed);
  const auto dist = all_pairs_distances(d);

  if (!dec.cut_vertices.empty()) {
    // Every vertex reaches some cut vertex, and is reached from one, within two steps.
    for (Vertex v = 0; v < n; ++v) {
      Hops to = Hops::infinite(), from = Hops::infinite();
      for (Vertex c : dec.cut_vertices) {
        to = std::min(to, dist.at(v, c));
        from = std::min(from, dist.at(c, v));
      }
      if (!(to <= Hops(2)) || !(from <= Hops(2))) {
        throw ContractViolation("vertex " + std::to_string(v) + " is more than two steps from the cut-vertex tree");
      }
    }
  }
  auto report = make_report("blockgraph", d, bound, "blockgraph", std::move(trace));
  if (!report.satisfied) {
    throw ContractViolation("block graph orientation has diameter above " + std::to_string(bound));
  }
  return {std::move(d), std::move(report)};
}

}  // namespace orientdia
