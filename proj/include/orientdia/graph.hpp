#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace orientdia {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
  Vertex u;
  Vertex v;
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Arc {
  Vertex tail;
  Vertex head;
  friend bool operator==(const Arc&, const Arc&) = default;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Hop count along a shortest path, or "unreachable".
///
/// Unreachable compares greater than every finite distance and absorbs
/// addition, so `max` over a row yields unreachable iff some vertex is.
class Hops {
 public:
  constexpr Hops() noexcept = default;
  constexpr explicit Hops(std::uint32_t hops) noexcept : value_(hops) {}

  static constexpr Hops infinite() noexcept { return Hops{}; }

  constexpr bool is_finite() const noexcept { return value_ != kUnreachable; }
  constexpr bool is_infinite() const noexcept { return value_ == kUnreachable; }

  // Precondition: is_finite().
  constexpr std::uint32_t value() const noexcept { return value_; }

  friend constexpr Hops operator+(Hops a, Hops b) noexcept {
    if (a.is_infinite() || b.is_infinite()) return infinite();
    return Hops(a.value_ + b.value_);
  }
  friend constexpr bool operator==(Hops, Hops) noexcept = default;
  friend constexpr auto operator<=>(Hops, Hops) noexcept = default;

 private:
  static constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();
  std::uint32_t value_ = kUnreachable;
};

/// Undirected multigraph on dense vertices 0..n-1. Parallel edges are
/// allowed, loops are not. Edge i keeps identity i for the graph's lifetime.
class MultiGraph {
 public:
  struct Incidence {
    Vertex neighbor;
    EdgeId edge;
  };

  MultiGraph() = default;
  MultiGraph(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }

  std::span<const Incidence> incident(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  bool adjacent(Vertex u, Vertex v) const;

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
};

/// Directed graph. When built by `orient`, arc i is the orientation of edge i.
class Digraph {
 public:
  Digraph() = default;
  Digraph(std::size_t vertex_count, std::vector<Arc> arcs);

  /// Orients every edge u-v of `g` as u->v, or v->u where `reversed[e]` is set.
  static Digraph orient(const MultiGraph& g, const std::vector<bool>& reversed);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t arc_count() const noexcept { return arcs_.size(); }
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }
  std::span<const Vertex> out_neighbors(Vertex v) const { return out_.at(v); }
  std::span<const Vertex> in_neighbors(Vertex v) const { return in_.at(v); }

  Digraph reversed() const;

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
};

class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t vertex_count)
      : vertex_count_(vertex_count), entries_(vertex_count * vertex_count) {}

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  Hops at(Vertex u, Vertex v) const { return entries_.at(u * vertex_count_ + v); }
  void set(Vertex u, Vertex v, Hops d) { entries_.at(u * vertex_count_ + v) = d; }
  std::span<const Hops> row(Vertex u) const {
    return std::span<const Hops>(entries_).subspan(u * vertex_count_, vertex_count_);
  }

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Hops> entries_;
};

std::vector<Hops> bfs_distances(const MultiGraph& g, Vertex source);
std::vector<Hops> bfs_distances(const Digraph& d, Vertex source);

DistanceMatrix all_pairs_distances(const MultiGraph& g);
DistanceMatrix all_pairs_distances(const Digraph& d);

/// Largest finite distance over ordered pairs; infinite iff not strongly connected.
Hops diameter(const Digraph& d);
Hops diameter(const DistanceMatrix& dist);

/// Lexicographically smallest ordered pair realising the diameter.
/// Empty for graphs with fewer than two vertices.
std::optional<std::pair<Vertex, Vertex>> diametral_pair(const DistanceMatrix& dist);

bool is_strongly_connected(const Digraph& d);
bool is_connected(const MultiGraph& g);

struct Eccentricities {
  std::uint32_t out_ecc;
  std::uint32_t in_ecc;
  std::uint32_t ecc;
};

/// Throws ContractViolation when `d` is not strongly connected.
Eccentricities eccentricities(const Digraph& d, Vertex v);

/// True iff `d` orients exactly the edge multiset of `g` (arcs matched to
/// edges by endpoint set, multiplicities respected).
bool is_orientation_of(const Digraph& d, const MultiGraph& g);

/// A subgraph carrying maps back to the graph it was cut from.
struct Subgraph {
  MultiGraph graph;
  std::vector<Vertex> vertex_to_parent;
  std::vector<EdgeId> edge_to_parent;
};

/// Subgraph induced by `vertices` (kept in the given order).
Subgraph induced_subgraph(const MultiGraph& g, std::span<const Vertex> vertices);

/// Subgraph formed by `edge_ids` and their endpoints (vertices in ascending order).
Subgraph edge_subgraph(const MultiGraph& g, std::span<const EdgeId> edge_ids);

}  // namespace orientdia
