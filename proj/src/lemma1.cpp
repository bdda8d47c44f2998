#include <algorithm>
#include <limits>

#include "internal/checks.hpp"
#include "orientdia/decomposition.hpp"
#include "orientdia/errors.hpp"
#include "orientdia/orient.hpp"

namespace orientdia {

namespace {

bool share_block(const BlockDecomposition& dec, Vertex a, Vertex b) {
  for (BlockId x : dec.blocks_of_vertex[a]) {
    const auto& other = dec.blocks_of_vertex[b];
    if (std::find(other.begin(), other.end(), x) != other.end()) return true;
  }
  return false;
}

// Vertices reachable from `from` in g - removed.
std::vector<bool> reach_avoiding(const MultiGraph& g, Vertex from, Vertex removed) {
  std::vector<bool> seen(g.vertex_count(), false);
  seen[from] = true;
  std::vector<Vertex> todo{from};
  while (!todo.empty()) {
    Vertex v = todo.back();
    todo.pop_back();
    for (const auto& inc : g.incident(v)) {
      if (inc.neighbor == removed || seen[inc.neighbor]) continue;
      seen[inc.neighbor] = true;
      todo.push_back(inc.neighbor);
    }
  }
  return seen;
}

// The separating cut vertex nearest to x. Separators lie on every x-z path,
// so their distances from x are pairwise distinct.
Vertex first_separator(const MultiGraph& g, const BlockDecomposition& dec, Vertex x, Vertex z) {
  auto from_x = bfs_distances(g, x);
  Vertex best = std::numeric_limits<Vertex>::max();
  for (Vertex c : dec.cut_vertices) {
    if (c == x || c == z) continue;
    if (reach_avoiding(g, x, c)[z]) continue;
    if (best == std::numeric_limits<Vertex>::max() || from_x[c] < from_x[best]) best = c;
  }
  if (best == std::numeric_limits<Vertex>::max()) {
    throw ContractViolation("no cut vertex separates " + std::to_string(x) + " and " +
                            std::to_string(z));
  }
  return best;
}

const Subgraph& branch_holding(const std::vector<Subgraph>& branches, Vertex v) {
  for (const auto& b : branches) {
    if (std::find(b.vertex_to_parent.begin(), b.vertex_to_parent.end(), v) !=
        b.vertex_to_parent.end()) {
      return b;
    }
  }
  throw ContractViolation("vertex " + std::to_string(v) + " lies in no branch");
}

Vertex local_id(const Subgraph& s, Vertex v) {
  auto it = std::find(s.vertex_to_parent.begin(), s.vertex_to_parent.end(), v);
  return static_cast<Vertex>(it - s.vertex_to_parent.begin());
}

// Fixes the edges of `path` (local to `s`) as a directed walk along it, or
// against it when `backwards` is set.
void fix_path(PartialOrientation& partial, const Subgraph& s, const std::vector<Vertex>& vertices,
              const std::vector<EdgeId>& edges, bool backwards) {
  for (std::size_t i = 0; i < edges.size(); ++i) {
    Vertex a = s.vertex_to_parent[vertices[i]];
    Vertex b = s.vertex_to_parent[vertices[i + 1]];
    if (backwards) std::swap(a, b);
    partial.assign(s.edge_to_parent[edges[i]], a, b);
  }
}

}  // namespace

Digraph lemma1_orientation(const MultiGraph& g, Vertex x, Vertex z) {
  const std::size_t k = g.vertex_count();
  if (x >= k || z >= k) throw InputError("vertex out of range");
  auto dec = detail::require_bridgeless(g);
  if (x == z || share_block(dec, x, z)) {
    throw InputError("vertices " + std::to_string(x) + " and " + std::to_string(z) +
                     " lie in a common block");
  }

  const Vertex y = first_separator(g, dec, x, z);
  const auto branches = branches_at(g, y);
  const Subgraph& b1 = branch_holding(branches, x);
  const Subgraph& b2 = branch_holding(branches, z);

  const PathPair p1 = two_disjoint_paths(b1.graph, local_id(b1, x), local_id(b1, y));
  const PathPair p2 = two_disjoint_paths(b2.graph, local_id(b2, z), local_id(b2, y));

  PartialOrientation partial(g);
  fix_path(partial, b1, p1.shorter, p1.shorter_edges, false);  // x -> y
  fix_path(partial, b1, p1.longer, p1.longer_edges, true);     // y -> x
  fix_path(partial, b2, p2.shorter, p2.shorter_edges, false);  // z -> y
  fix_path(partial, b2, p2.longer, p2.longer_edges, true);     // y -> z
  Digraph d = extend_orientation(partial);

  const auto from_x = bfs_distances(d, x);
  const auto from_z = bfs_distances(d, z);
  const Hops limit(static_cast<std::uint32_t>(k - 2));
  if (!(from_x[z] <= limit) || !(from_z[x] <= limit)) {
    throw ContractViolation("lemma orientation misses the k-2 distance bound between " +
                            std::to_string(x) + " and " + std::to_string(z));
  }
  return d;
}

}  // namespace orientdia
