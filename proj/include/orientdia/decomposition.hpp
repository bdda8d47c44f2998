#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "orientdia/graph.hpp"

namespace orientdia {

using BlockId = std::size_t;

/// Blocks, cut vertices and bridges of a connected multigraph.
///
/// Blocks appear in DFS discovery order (DFS from vertex 0, incidences in
/// edge order); each block's vertex list is sorted. A lone bridge edge is a
/// two-vertex block of its own.
struct BlockDecomposition {
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  std::vector<std::vector<Vertex>> blocks;
  std::vector<std::vector<EdgeId>> block_edges;
  std::vector<BlockId> block_of_edge;
  std::vector<std::vector<BlockId>> blocks_of_vertex;
  std::vector<Vertex> cut_vertices;  // ascending
  std::vector<EdgeId> bridges;       // ascending
  std::vector<BlockId> end_blocks;   // blocks holding exactly one cut vertex

  std::size_t block_count() const noexcept { return blocks.size(); }
  std::size_t cut_vertex_count() const noexcept { return cut_vertices.size(); }
  bool is_cut_vertex(Vertex v) const { return blocks_of_vertex.at(v).size() > 1; }
  bool is_bridgeless() const noexcept { return bridges.empty(); }

  /// Cut vertices of G lying in block b, ascending.
  std::vector<Vertex> cut_vertices_of(BlockId b) const;
};

/// Throws InputError when `g` is empty or disconnected.
BlockDecomposition decompose(const MultiGraph& g);

/// Connected and free of bridges.
bool is_bridgeless(const MultiGraph& g);

/// The block as a subgraph of its source graph.
Subgraph block_subgraph(const MultiGraph& g, const BlockDecomposition& dec, BlockId b);

/// One branch per component of g - v, each including v. Branch vertices are
/// listed in ascending parent order; branches are ordered by smallest
/// non-v vertex. Throws InputError when v is not a cut vertex.
std::vector<Subgraph> branches_at(const MultiGraph& g, Vertex v);

/// Graph on block indices; blocks sharing a cut vertex are adjacent.
MultiGraph block_graph(const BlockDecomposition& dec);

struct BlockTreeCheck {
  bool is_tree = false;
  std::optional<Vertex> witness;  // a cut vertex in more than two blocks
};

/// True when no cut vertex lies in more than two blocks. In that case the
/// block graph is additionally checked to be a tree; a failure of that check
/// raises ContractViolation.
BlockTreeCheck block_graph_is_tree(const MultiGraph& g);

struct LeafBound {
  std::size_t vertex_count = 0;
  std::size_t leaf_count = 0;
  std::size_t bound = 0;  // ceil((vertex_count + 5) / 4)
  bool holds = false;     // 4 * leaf_count >= vertex_count + 5
};

/// Leaf count of a tree with at least two vertices and no two adjacent
/// degree-2 vertices. Trees violating the hypothesis are rejected with
/// InputError.
LeafBound leaf_lower_bound(const MultiGraph& tree);

struct Inequality {
  std::string name;
  long lhs = 0;
  long rhs = 0;
  long slack = 0;  // lhs - rhs
  bool holds = false;
};

struct StructuralReport {
  std::size_t n = 0;
  std::size_t p = 0;
  std::size_t s = 0;
  std::vector<Inequality> checks;
  bool all_hold() const;
};

/// Checks n >= 2p+1, n >= 2s+3, s <= p-1 and that every block has at least
/// three vertices. Rejects graphs with bridges (or bridgeless == false).
StructuralReport structural_inequalities(const BlockDecomposition& dec, bool bridgeless);

/// Every block induces a complete graph.
bool is_block_graph(const MultiGraph& g);

}  // namespace orientdia
