#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orientdia/graph.hpp"

namespace orientdia {

/// A mixed graph: some edges of `base` carry a fixed direction, the rest are free.
class PartialOrientation {
 public:
  explicit PartialOrientation(MultiGraph base);

  const MultiGraph& base() const noexcept { return base_; }

  /// Fixes edge e as tail->head. Throws InputError if {tail, head} is not the
  /// edge's endpoint set or the edge is already fixed the other way.
  void assign(EdgeId e, Vertex tail, Vertex head);

  bool is_free(EdgeId e) const { return !reversed_.at(e).has_value(); }
  /// Reversal flag of a fixed edge relative to its stored endpoints.
  std::optional<bool> fixed(EdgeId e) const { return reversed_.at(e); }
  std::vector<EdgeId> free_edges() const;

 private:
  MultiGraph base_;
  std::vector<std::optional<bool>> reversed_;
};

/// Any strong orientation of a connected bridgeless graph (DFS tree arcs away
/// from the root, remaining edges towards the ancestor). Arc i orients edge i.
Digraph robbins_orientation(const MultiGraph& g);

/// Completes `partial` to a strong orientation agreeing with every fixed
/// edge. Failure to find one raises ContractViolation.
Digraph extend_orientation(const PartialOrientation& partial);

/// Two edge-disjoint x-y paths, shorter first.
struct PathPair {
  std::vector<Vertex> shorter;
  std::vector<Vertex> longer;
  std::vector<EdgeId> shorter_edges;
  std::vector<EdgeId> longer_edges;
  bool vertex_disjoint = false;  // internally vertex-disjoint

  std::size_t shorter_length() const { return shorter_edges.size(); }
  std::size_t longer_length() const { return longer_edges.size(); }
};

/// Minimum-total-length pair of internally vertex-disjoint x-y paths, falling
/// back to edge-disjoint paths when a cut vertex separates x and y. The
/// result is checked against shorter <= |V|-2 and longer <= |V|-1.
PathPair two_disjoint_paths(const MultiGraph& branch, Vertex x, Vertex y);

/// Strong orientation of a bridgeless graph of order k with d(x,z) <= k-2 and
/// d(z,x) <= k-2, for x and z not sharing a block.
Digraph lemma1_orientation(const MultiGraph& g, Vertex x, Vertex z);

/// Tournament on n >= 3 vertices of diameter 2, or diameter 3 with
/// ecc(special) = 2 when n = 4. Arcs follow the pair order (0,1), (0,2), ...,
/// (n-2,n-1). `seed` drives the randomised fallback for even n.
Digraph complete_orientation(std::size_t n, std::optional<Vertex> special = std::nullopt,
                             std::uint64_t seed = 0);

/// A T-path (distinct ends in T) or T-cycle (front == back, in T).
struct TreePath {
  std::vector<Vertex> vertices;
  std::vector<EdgeId> edges;  // edges[i] joins vertices[i] and vertices[i+1]

  bool is_cycle() const { return vertices.size() > 1 && vertices.front() == vertices.back(); }
  std::size_t length() const { return edges.size(); }
};

/// A subtree T of `host` together with a k-extension of T.
struct TreeExtension {
  MultiGraph host;
  std::vector<Vertex> tree_vertices;
  std::vector<EdgeId> tree_edges;
  std::vector<TreePath> paths;
  std::uint32_t k = 1;
};

struct TreeExtensionResult {
  Digraph orientation;                // on host vertices; arc i orients included_edges[i]
  std::vector<EdgeId> included_edges;
  std::vector<Vertex> vertices;       // V(D), ascending
  std::vector<std::size_t> kept_paths;
  std::uint32_t tree_pair_bound = 0;  // bound (i) for pairs of tree vertices
  std::uint32_t all_pair_bound = 0;   // bound (ii) for pairs of V(D)
  std::uint32_t tree_pair_max = 0;
  std::uint32_t all_pair_max = 0;
};

/// Both distance bounds of the tree-extension contract for a tree of order p.
std::pair<std::uint32_t, std::uint32_t> tree_extension_bounds(std::size_t p, std::uint32_t k);

/// Strong orientation of a sub-multigraph of T plus the extension that
/// contains T and meets both bounds. Implemented as a bounded search; raises
/// ContractViolation when the search is exhausted.
TreeExtensionResult tree_extension_orientation(const TreeExtension& ext);

struct OrientationReport {
  std::string strategy;
  Hops diameter;
  std::uint32_t bound = 0;
  std::string bound_name;
  bool satisfied = false;
  std::optional<std::pair<Vertex, Vertex>> witness_pair;
  std::vector<std::string> case_trace;
};

struct OrientationResult {
  Digraph orientation;
  OrientationReport report;
};

/// Robbins orientation reported against the trivial bound n - 1.
OrientationResult robbins_strategy(const MultiGraph& g);

/// Strong orientation of diameter at most n - floor(p/2).
OrientationResult theorem1_orientation(const MultiGraph& g);

/// Strong orientation of a bridgeless block graph within floor(3n/4) (n
/// even) or floor(3(n+1)/4) (n odd).
OrientationResult blockgraph_orientation(const MultiGraph& g);

/// Fills diameter, witness pair and `satisfied` from `d`.
OrientationReport make_report(std::string strategy, const Digraph& d, std::uint32_t bound,
                              std::string bound_name, std::vector<std::string> trace = {});

}  // namespace orientdia
