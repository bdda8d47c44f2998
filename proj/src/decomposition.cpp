#include "orientdia/decomposition.hpp"

#include <algorithm>
#include <numeric>

#include "orientdia/errors.hpp"

namespace orientdia {

namespace {

constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
constexpr EdgeId kNoEdge = static_cast<EdgeId>(-1);

struct Frame {
  Vertex v;
  EdgeId parent_edge;
  std::size_t next;
};

}  // namespace

std::vector<Vertex> BlockDecomposition::cut_vertices_of(BlockId b) const {
  std::vector<Vertex> out;
  for (Vertex v : blocks.at(b)) {
    if (is_cut_vertex(v)) out.push_back(v);
  }
  return out;
}

BlockDecomposition decompose(const MultiGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw InputError("cannot decompose an empty graph");
  if (!is_connected(g)) throw InputError("graph is disconnected");

  BlockDecomposition dec;
  dec.vertex_count = n;
  dec.edge_count = g.edge_count();

  // (discovery key, edges) pairs, sorted afterwards.
  std::vector<std::pair<std::size_t, std::vector<EdgeId>>> found;

  if (g.edge_count() == 0) {
    dec.blocks.push_back({0});
    dec.block_edges.push_back({});
  } else {
    std::vector<std::size_t> disc(n, kUnvisited);
    std::vector<std::size_t> low(n, 0);
    std::vector<EdgeId> edge_stack;
    std::vector<Frame> stack;
    std::size_t time = 0;
    disc[0] = low[0] = time++;
    stack.push_back({0, kNoEdge, 0});

    while (!stack.empty()) {
      Frame& f = stack.back();
      auto inc = g.incident(f.v);
      if (f.next < inc.size()) {
        auto [w, e] = inc[f.next++];
        if (e == f.parent_edge) continue;
        if (disc[w] == kUnvisited) {
          edge_stack.push_back(e);
          disc[w] = low[w] = time++;
          stack.push_back({w, e, 0});
        } else if (disc[w] < disc[f.v]) {
          edge_stack.push_back(e);
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      const Vertex w = f.v;
      const EdgeId tree_edge = f.parent_edge;
      stack.pop_back();
      if (stack.empty()) break;
      const Vertex v = stack.back().v;
      low[v] = std::min(low[v], low[w]);
      if (low[w] >= disc[v]) {
        std::vector<EdgeId> block;
        while (true) {
          EdgeId top = edge_stack.back();
          edge_stack.pop_back();
          block.push_back(top);
          if (top == tree_edge) break;
        }
        std::sort(block.begin(), block.end());
        found.emplace_back(disc[w], std::move(block));
      }
    }
    std::sort(found.begin(), found.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [key, edges] : found) {
      std::vector<Vertex> verts;
      for (EdgeId e : edges) {
        verts.push_back(g.edge(e).u);
        verts.push_back(g.edge(e).v);
      }
      std::sort(verts.begin(), verts.end());
      verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
      dec.blocks.push_back(std::move(verts));
      dec.block_edges.push_back(std::move(edges));
    }
  }

  dec.block_of_edge.assign(g.edge_count(), 0);
  dec.blocks_of_vertex.assign(n, {});
  for (BlockId b = 0; b < dec.blocks.size(); ++b) {
    for (EdgeId e : dec.block_edges[b]) dec.block_of_edge[e] = b;
    for (Vertex v : dec.blocks[b]) dec.blocks_of_vertex[v].push_back(b);
    if (dec.block_edges[b].size() == 1) dec.bridges.push_back(dec.block_edges[b][0]);
  }
  std::sort(dec.bridges.begin(), dec.bridges.end());
  for (Vertex v = 0; v < n; ++v) {
    if (dec.blocks_of_vertex[v].size() > 1) dec.cut_vertices.push_back(v);
  }
  for (BlockId b = 0; b < dec.blocks.size(); ++b) {
    if (dec.cut_vertices_of(b).size() == 1) dec.end_blocks.push_back(b);
  }
  return dec;
}

bool is_bridgeless(const MultiGraph& g) {
  if (g.vertex_count() == 0 || !is_connected(g)) return false;
  return decompose(g).is_bridgeless();
}

Subgraph block_subgraph(const MultiGraph& g, const BlockDecomposition& dec, BlockId b) {
  return edge_subgraph(g, dec.block_edges.at(b));
}

std::vector<Subgraph> branches_at(const MultiGraph& g, Vertex v) {
  const std::size_t n = g.vertex_count();
  if (v >= n) throw InputError("vertex " + std::to_string(v) + " out of range");
  if (!is_connected(g)) throw InputError("graph is disconnected");

  std::vector<std::size_t> comp(n, kUnvisited);
  std::size_t count = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (s == v || comp[s] != kUnvisited) continue;
    std::vector<Vertex> todo{s};
    comp[s] = count;
    while (!todo.empty()) {
      Vertex x = todo.back();
      todo.pop_back();
      for (const auto& inc : g.incident(x)) {
        if (inc.neighbor != v && comp[inc.neighbor] == kUnvisited) {
          comp[inc.neighbor] = count;
          todo.push_back(inc.neighbor);
        }
      }
    }
    ++count;
  }
  if (count < 2) throw InputError("vertex " + std::to_string(v) + " is not a cut vertex");

  std::vector<Subgraph> out;
  for (std::size_t c = 0; c < count; ++c) {
    std::vector<Vertex> verts;
    for (Vertex x = 0; x < n; ++x) {
      if (x == v || comp[x] == c) verts.push_back(x);
    }
    out.push_back(induced_subgraph(g, verts));
  }
  return out;
}

MultiGraph block_graph(const BlockDecomposition& dec) {
  std::vector<Edge> edges;
  for (Vertex c : dec.cut_vertices) {
    const auto& bs = dec.blocks_of_vertex[c];
    for (std::size_t i = 0; i < bs.size(); ++i) {
      for (std::size_t j = i + 1; j < bs.size(); ++j) {
        edges.push_back({static_cast<Vertex>(bs[i]), static_cast<Vertex>(bs[j])});
      }
    }
  }
  return MultiGraph(dec.block_count(), std::move(edges));
}

BlockTreeCheck block_graph_is_tree(const MultiGraph& g) {
  auto dec = decompose(g);
  for (Vertex c : dec.cut_vertices) {
    if (dec.blocks_of_vertex[c].size() > 2) return {false, c};
  }
  auto bg = block_graph(dec);
  if (bg.edge_count() + 1 != bg.vertex_count() || !is_connected(bg)) {
    throw ContractViolation("block graph is not a tree although no cut vertex lies in three blocks");
  }
  return {true, std::nullopt};
}

LeafBound leaf_lower_bound(const MultiGraph& tree) {
  const std::size_t n = tree.vertex_count();
  if (n < 2) throw InputError("leaf bound needs a tree with at least two vertices");
  if (tree.edge_count() + 1 != n || !is_connected(tree)) throw InputError("input is not a tree");
  LeafBound lb;
  lb.vertex_count = n;
  for (Vertex v = 0; v < n; ++v) {
    if (tree.degree(v) == 1) ++lb.leaf_count;
  }
  for (const Edge& e : tree.edges()) {
    if (tree.degree(e.u) == 2 && tree.degree(e.v) == 2) {
      throw InputError("tree has adjacent degree-2 vertices " + std::to_string(e.u) + " and " +
                       std::to_string(e.v));
    }
  }
  lb.bound = (n + 5 + 3) / 4;
  lb.holds = 4 * lb.leaf_count >= n + 5;
  return lb;
}

bool StructuralReport::all_hold() const {
  return std::all_of(checks.begin(), checks.end(), [](const Inequality& i) { return i.holds; });
}

StructuralReport structural_inequalities(const BlockDecomposition& dec, bool bridgeless) {
  if (!bridgeless || !dec.is_bridgeless()) {
    throw InputError("structural inequalities require a bridgeless graph");
  }
  if (dec.vertex_count < 3) throw InputError("structural inequalities require at least 3 vertices");
  StructuralReport r;
  r.n = dec.vertex_count;
  r.p = dec.block_count();
  r.s = dec.cut_vertex_count();
  auto add = [&](std::string name, long lhs, long rhs) {
    r.checks.push_back({std::move(name), lhs, rhs, lhs - rhs, lhs >= rhs});
  };
  const long n = static_cast<long>(r.n), p = static_cast<long>(r.p), s = static_cast<long>(r.s);
  add("n >= 2p+1", n, 2 * p + 1);
  add("n >= 2s+3", n, 2 * s + 3);
  add("p-1 >= s", p - 1, s);
  std::size_t min_block = dec.blocks.front().size();
  for (const auto& b : dec.blocks) min_block = std::min(min_block, b.size());
  add("min block size >= 3", static_cast<long>(min_block), 3);
  return r;
}

bool is_block_graph(const MultiGraph& g) {
  auto dec = decompose(g);
  for (const auto& b : dec.blocks) {
    for (std::size_t i = 0; i < b.size(); ++i) {
      for (std::size_t j = i + 1; j < b.size(); ++j) {
        if (!g.adjacent(b[i], b[j])) return false;
      }
    }
  }
  return true;
}

}  // namespace orientdia
