#pragma once

// Bitmask digraph for exhaustive searches over orientations of small graphs
// (at most 64 vertices). Not part of the public API.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "orientdia/errors.hpp"
#include "orientdia/graph.hpp"

namespace orientdia::detail {

using Mask = std::uint64_t;

inline constexpr std::size_t kMaxBitVertices = 64;
inline constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

class BitDigraph {
 public:
  explicit BitDigraph(std::size_t n) : n_(n), out_(n, 0), in_(n, 0) {
    if (n > kMaxBitVertices) {
      throw ResourceError("exhaustive search limited to " + std::to_string(kMaxBitVertices) +
                          " vertices");
    }
    all_ = n == 64 ? ~Mask{0} : ((Mask{1} << n) - 1);
  }

  std::size_t vertex_count() const noexcept { return n_; }

  void clear() {
    std::fill(out_.begin(), out_.end(), 0);
    std::fill(in_.begin(), in_.end(), 0);
  }
  void add_arc(Vertex u, Vertex v) {
    out_[u] |= Mask{1} << v;
    in_[v] |= Mask{1} << u;
  }

  bool is_strongly_connected() const {
    if (n_ <= 1) return true;
    return closure(0, out_) == all_ && closure(0, in_) == all_;
  }

  /// Out-eccentricity of s, or kUnreached if some vertex is unreachable or
  /// the eccentricity exceeds `cap`.
  std::uint32_t out_eccentricity(Vertex s, std::uint32_t cap) const {
    Mask reached = Mask{1} << s;
    Mask frontier = reached;
    std::uint32_t level = 0;
    while (reached != all_) {
      Mask next = 0;
      for (Mask f = frontier; f; f &= f - 1) next |= out_[std::countr_zero(f)];
      next &= ~reached;
      if (!next) return kUnreached;
      if (++level > cap) return kUnreached;
      reached |= next;
      frontier = next;
    }
    return level;
  }

  /// Diameter if strongly connected and at most `cap`, else kUnreached.
  std::uint32_t diameter_within(std::uint32_t cap) const {
    std::uint32_t diam = 0;
    for (Vertex s = 0; s < n_; ++s) {
      std::uint32_t e = out_eccentricity(s, cap);
      if (e == kUnreached) return kUnreached;
      diam = std::max(diam, e);
    }
    return diam;
  }

  /// Row-major n x n hop counts (kUnreached where unreachable).
  void distances(std::vector<std::uint32_t>& dist) const {
    dist.assign(n_ * n_, kUnreached);
    for (Vertex s = 0; s < n_; ++s) {
      Mask reached = Mask{1} << s;
      Mask frontier = reached;
      std::uint32_t level = 0;
      dist[s * n_ + s] = 0;
      while (frontier) {
        Mask next = 0;
        for (Mask f = frontier; f; f &= f - 1) next |= out_[std::countr_zero(f)];
        next &= ~reached;
        ++level;
        for (Mask f = next; f; f &= f - 1) dist[s * n_ + std::countr_zero(f)] = level;
        reached |= next;
        frontier = next;
      }
    }
  }

 private:
  static Mask closure(Vertex s, const std::vector<Mask>& adj) {
    Mask reached = Mask{1} << s;
    Mask frontier = reached;
    while (frontier) {
      Mask next = 0;
      for (Mask f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
      next &= ~reached;
      reached |= next;
      frontier = next;
    }
    return reached;
  }

  std::size_t n_;
  Mask all_;
  std::vector<Mask> out_;
  std::vector<Mask> in_;
};

/// Orientations of a multigraph that can possibly be strong, parametrised by
/// one bit per forced class.
///
/// At a vertex of degree exactly two a strong orientation has one incoming
/// and one outgoing arc, so the directions of its two edges determine each
/// other. Edges linked through such vertices form a class; a bitmask over
/// classes (class j ordered by smallest edge id) fixes every edge. The
/// smallest edge of a class is reversed iff its class bit is set.
class OrientationSpace {
 public:
  explicit OrientationSpace(const MultiGraph& g) : graph_(&g) {
    const std::size_t m = g.edge_count();
    parent_.resize(m);
    parity_.assign(m, 0);
    for (EdgeId e = 0; e < m; ++e) parent_[e] = e;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (g.degree(v) != 2) continue;
      auto inc = g.incident(v);
      const EdgeId e1 = inc[0].edge, e2 = inc[1].edge;
      const std::uint8_t rel =
          1 ^ static_cast<std::uint8_t>(g.edge(e1).u == v) ^ static_cast<std::uint8_t>(g.edge(e2).u == v);
      unite(e1, e2, rel);
    }
    // Relabel so that each class is rooted at its smallest edge.
    std::vector<std::size_t> class_of_root(m, static_cast<std::size_t>(-1));
    class_of_edge_.resize(m);
    edge_parity_.resize(m);
    std::vector<std::uint8_t> root_parity_of_min(m, 0);
    for (EdgeId e = 0; e < m; ++e) {
      auto [root, par] = find(e);
      if (class_of_root[root] == static_cast<std::size_t>(-1)) {
        class_of_root[root] = members_.size();
        members_.emplace_back();
        root_parity_of_min[root] = par;
      }
      const std::size_t c = class_of_root[root];
      class_of_edge_[e] = c;
      edge_parity_[e] = par ^ root_parity_of_min[root];
      members_[c].push_back(e);
    }
  }

  std::size_t class_count() const noexcept { return members_.size(); }
  bool consistent() const noexcept { return consistent_; }

  bool reversed(EdgeId e, Mask class_bits) const {
    return (((class_bits >> class_of_edge_[e]) & 1) ^ edge_parity_[e]) != 0;
  }

  void fill(Mask class_bits, BitDigraph& d) const {
    d.clear();
    const auto& edges = graph_->edges();
    for (EdgeId e = 0; e < edges.size(); ++e) {
      if (reversed(e, class_bits)) {
        d.add_arc(edges[e].v, edges[e].u);
      } else {
        d.add_arc(edges[e].u, edges[e].v);
      }
    }
  }

  std::vector<bool> flags(Mask class_bits) const {
    std::vector<bool> out(graph_->edge_count());
    for (EdgeId e = 0; e < out.size(); ++e) out[e] = reversed(e, class_bits);
    return out;
  }

 private:
  std::pair<EdgeId, std::uint8_t> find(EdgeId e) {
    std::uint8_t par = 0;
    while (parent_[e] != e) {
      par ^= parity_[e];
      e = parent_[e];
    }
    return {e, par};
  }

  void unite(EdgeId a, EdgeId b, std::uint8_t rel) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) {
      if ((pa ^ pb) != rel) consistent_ = false;
      return;
    }
    parent_[rb] = ra;
    parity_[rb] = pa ^ pb ^ rel;
  }

  const MultiGraph* graph_;
  std::vector<EdgeId> parent_;
  std::vector<std::uint8_t> parity_;
  std::vector<std::size_t> class_of_edge_;
  std::vector<std::uint8_t> edge_parity_;
  std::vector<std::vector<EdgeId>> members_;
  bool consistent_ = true;
};

}  // namespace orientdia::detail
