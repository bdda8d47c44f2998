#include <algorithm>
#include <limits>
#include <optional>

#include "orientdia/errors.hpp"
#include "orientdia/orient.hpp"

namespace orientdia {

namespace {

constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();

// Successive shortest paths min-cost flow on a tiny network.
class FlowNetwork {
 public:
  struct Arc {
    std::size_t to;
    int cap;
    int cost;
    EdgeId edge;  // graph edge carried by this arc, or kNoEdge
    Vertex from_vertex;
    Vertex to_vertex;
  };

  explicit FlowNetwork(std::size_t nodes) : adj_(nodes) {}

  void add(std::size_t from, std::size_t to, int cap, int cost, EdgeId edge = kNoEdge,
           Vertex fv = 0, Vertex tv = 0) {
    adj_[from].push_back(arcs_.size());
    arcs_.push_back({to, cap, cost, edge, fv, tv});
    adj_[to].push_back(arcs_.size());
    arcs_.push_back({from, 0, -cost, kNoEdge, 0, 0});
  }

  // Pushes up to `want` units; returns the amount pushed.
  int push(std::size_t source, std::size_t sink, int want) {
    int pushed = 0;
    const std::size_t nodes = adj_.size();
    while (pushed < want) {
      constexpr int kInf = std::numeric_limits<int>::max();
      std::vector<int> dist(nodes, kInf);
      std::vector<std::size_t> via(nodes, arcs_.size());
      dist[source] = 0;
      for (std::size_t round = 0; round < nodes; ++round) {
        bool changed = false;
        for (std::size_t u = 0; u < nodes; ++u) {
          if (dist[u] == kInf) continue;
          for (std::size_t a : adj_[u]) {
            const Arc& arc = arcs_[a];
            if (arc.cap > 0 && dist[u] + arc.cost < dist[arc.to]) {
              dist[arc.to] = dist[u] + arc.cost;
              via[arc.to] = a;
              changed = true;
            }
          }
        }
        if (!changed) break;
      }
      if (dist[sink] == kInf) break;
      for (std::size_t v = sink; v != source;) {
        const std::size_t a = via[v];
        arcs_[a].cap -= 1;
        arcs_[a ^ 1].cap += 1;
        v = arcs_[a ^ 1].to;
      }
      ++pushed;
    }
    return pushed;
  }

  // Graph-edge arcs carrying flow, as (from, to, edge).
  std::vector<Arc> used_edge_arcs() const {
    std::vector<Arc> out;
    for (std::size_t a = 0; a < arcs_.size(); a += 2) {
      if (arcs_[a].edge != kNoEdge && arcs_[a ^ 1].cap > 0) out.push_back(arcs_[a]);
    }
    return out;
  }

 private:
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<Arc> arcs_;
};

struct Walk {
  std::vector<Vertex> vertices;
  std::vector<EdgeId> edges;
};

std::optional<std::pair<Walk, Walk>> min_cost_pair(const MultiGraph& g, Vertex x, Vertex y,
                                                   bool split_vertices) {
  const std::size_t n = g.vertex_count();
  // Split mode: v_in = 2v, v_out = 2v + 1.
  auto in_node = [&](Vertex v) { return split_vertices ? 2 * std::size_t{v} : std::size_t{v}; };
  auto out_node = [&](Vertex v) { return split_vertices ? 2 * std::size_t{v} + 1 : std::size_t{v}; };
  FlowNetwork net(split_vertices ? 2 * n : n);
  if (split_vertices) {
    for (Vertex v = 0; v < n; ++v) net.add(in_node(v), out_node(v), (v == x || v == y) ? 2 : 1, 0);
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    net.add(out_node(ed.u), in_node(ed.v), 1, 1, e, ed.u, ed.v);
    net.add(out_node(ed.v), in_node(ed.u), 1, 1, e, ed.v, ed.u);
  }
  if (net.push(out_node(x), in_node(y), 2) < 2) return std::nullopt;

  auto used = net.used_edge_arcs();
  std::vector<bool> consumed(used.size(), false);
  auto trace = [&]() {
    Walk w{{x}, {}};
    Vertex at = x;
    while (at != y) {
      bool moved = false;
      for (std::size_t i = 0; i < used.size(); ++i) {
        if (!consumed[i] && used[i].from_vertex == at) {
          consumed[i] = true;
          w.edges.push_back(used[i].edge);
          at = used[i].to_vertex;
          w.vertices.push_back(at);
          moved = true;
          break;
        }
      }
      if (!moved) throw ContractViolation("flow decomposition lost its path");
    }
    return w;
  };
  Walk a = trace();
  Walk b = trace();
  return std::pair{std::move(a), std::move(b)};
}

}  // namespace

PathPair two_disjoint_paths(const MultiGraph& branch, Vertex x, Vertex y) {
  const std::size_t n = branch.vertex_count();
  if (x >= n || y >= n) throw InputError("path endpoints out of range");
  if (x == y) throw InputError("two_disjoint_paths needs distinct endpoints");

  bool vertex_disjoint = true;
  auto found = min_cost_pair(branch, x, y, true);
  if (!found) {
    vertex_disjoint = false;
    found = min_cost_pair(branch, x, y, false);
  }
  if (!found) {
    throw InputError("vertices " + std::to_string(x) + " and " + std::to_string(y) +
                     " are not joined by two edge-disjoint paths");
  }
  auto& [a, b] = *found;
  if (std::make_pair(b.edges.size(), b.vertices) < std::make_pair(a.edges.size(), a.vertices)) {
    std::swap(a, b);
  }
  PathPair pp{std::move(a.vertices), std::move(b.vertices), std::move(a.edges), std::move(b.edges),
              vertex_disjoint};
  if (n >= 3 && (pp.shorter_length() + 2 > n || pp.longer_length() + 1 > n)) {
    throw ContractViolation("disjoint paths of lengths " + std::to_string(pp.shorter_length()) +
                            " and " + std::to_string(pp.longer_length()) + " in a branch of order " +
                            std::to_string(n) + " violate the length bounds");
  }
  return pp;
}

}  // namespace orientdia
