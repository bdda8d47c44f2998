#include "orientdia/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <string>

#include "orientdia/errors.hpp"

namespace orientdia {

namespace {

void check_vertex(std::size_t n, Vertex v, const char* what) {
  if (v >= n) {
    throw InputError(std::string(what) + " " + std::to_string(v) + " out of range for " +
                     std::to_string(n) + " vertices");
  }
}

template <typename Neighbors>
std::vector<Hops> bfs(std::size_t n, Vertex source, Neighbors&& neighbors) {
  check_vertex(n, source, "source vertex");
  std::vector<Hops> dist(n);
  std::deque<Vertex> queue{source};
  dist[source] = Hops(0);
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    Hops next = dist[v] + Hops(1);
    neighbors(v, [&](Vertex w) {
      if (dist[w].is_infinite()) {
        dist[w] = next;
        queue.push_back(w);
      }
    });
  }
  return dist;
}

}  // namespace

MultiGraph::MultiGraph(std::size_t vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)), adjacency_(vertex_count) {
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    const Edge& ed = edges_[e];
    check_vertex(vertex_count_, ed.u, "edge endpoint");
    check_vertex(vertex_count_, ed.v, "edge endpoint");
    if (ed.u == ed.v) {
      throw InputError("loop at vertex " + std::to_string(ed.u) + " (edge " + std::to_string(e) +
                       ")");
    }
    adjacency_[ed.u].push_back({ed.v, e});
    adjacency_[ed.v].push_back({ed.u, e});
  }
}

bool MultiGraph::adjacent(Vertex u, Vertex v) const {
  const auto& inc = adjacency_.at(u);
  return std::any_of(inc.begin(), inc.end(), [v](const Incidence& i) { return i.neighbor == v; });
}

Digraph::Digraph(std::size_t vertex_count, std::vector<Arc> arcs)
    : vertex_count_(vertex_count), arcs_(std::move(arcs)), out_(vertex_count), in_(vertex_count) {
  for (const Arc& a : arcs_) {
    check_vertex(vertex_count_, a.tail, "arc endpoint");
    check_vertex(vertex_count_, a.head, "arc endpoint");
    if (a.tail == a.head) throw InputError("loop arc at vertex " + std::to_string(a.tail));
    out_[a.tail].push_back(a.head);
    in_[a.head].push_back(a.tail);
  }
}

Digraph Digraph::orient(const MultiGraph& g, const std::vector<bool>& reversed) {
  if (reversed.size() != g.edge_count()) {
    throw InputError("orientation has " + std::to_string(reversed.size()) + " flags for " +
                     std::to_string(g.edge_count()) + " edges");
  }
  std::vector<Arc> arcs;
  arcs.reserve(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    arcs.push_back(reversed[e] ? Arc{ed.v, ed.u} : Arc{ed.u, ed.v});
  }
  return Digraph(g.vertex_count(), std::move(arcs));
}

Digraph Digraph::reversed() const {
  std::vector<Arc> arcs;
  arcs.reserve(arcs_.size());
  for (const Arc& a : arcs_) arcs.push_back({a.head, a.tail});
  return Digraph(vertex_count_, std::move(arcs));
}

std::vector<Hops> bfs_distances(const MultiGraph& g, Vertex source) {
  return bfs(g.vertex_count(), source, [&](Vertex v, auto&& visit) {
    for (const auto& inc : g.incident(v)) visit(inc.neighbor);
  });
}

std::vector<Hops> bfs_distances(const Digraph& d, Vertex source) {
  return bfs(d.vertex_count(), source, [&](Vertex v, auto&& visit) {
    for (Vertex w : d.out_neighbors(v)) visit(w);
  });
}

namespace {

template <typename G>
DistanceMatrix all_pairs(const G& g) {
  const std::size_t n = g.vertex_count();
  DistanceMatrix dist(n);
  for (Vertex s = 0; s < n; ++s) {
    auto row = bfs_distances(g, s);
    for (Vertex t = 0; t < n; ++t) dist.set(s, t, row[t]);
  }
  return dist;
}

}  // namespace

DistanceMatrix all_pairs_distances(const MultiGraph& g) { return all_pairs(g); }
DistanceMatrix all_pairs_distances(const Digraph& d) { return all_pairs(d); }

Hops diameter(const DistanceMatrix& dist) {
  Hops best(0);
  for (Vertex u = 0; u < dist.vertex_count(); ++u) {
    for (Hops h : dist.row(u)) best = std::max(best, h);
  }
  return best;
}

Hops diameter(const Digraph& d) { return diameter(all_pairs_distances(d)); }

std::optional<std::pair<Vertex, Vertex>> diametral_pair(const DistanceMatrix& dist) {
  const std::size_t n = dist.vertex_count();
  if (n < 2) return std::nullopt;
  const Hops diam = diameter(dist);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v && dist.at(u, v) == diam) return std::pair{u, v};
    }
  }
  return std::nullopt;
}

bool is_strongly_connected(const Digraph& d) {
  const std::size_t n = d.vertex_count();
  if (n <= 1) return true;
  auto all_reached = [](const std::vector<Hops>& row) {
    return std::all_of(row.begin(), row.end(), [](Hops h) { return h.is_finite(); });
  };
  return all_reached(bfs_distances(d, 0)) && all_reached(bfs_distances(d.reversed(), 0));
}

bool is_connected(const MultiGraph& g) {
  if (g.vertex_count() <= 1) return true;
  auto row = bfs_distances(g, 0);
  return std::all_of(row.begin(), row.end(), [](Hops h) { return h.is_finite(); });
}

Eccentricities eccentricities(const Digraph& d, Vertex v) {
  check_vertex(d.vertex_count(), v, "vertex");
  if (!is_strongly_connected(d)) {
    throw ContractViolation("eccentricities requested on a digraph that is not strongly connected");
  }
  auto out_row = bfs_distances(d, v);
  auto in_row = bfs_distances(d.reversed(), v);
  Eccentricities e{0, 0, 0};
  for (Hops h : out_row) e.out_ecc = std::max(e.out_ecc, h.value());
  for (Hops h : in_row) e.in_ecc = std::max(e.in_ecc, h.value());
  e.ecc = std::max(e.out_ecc, e.in_ecc);
  return e;
}

bool is_orientation_of(const Digraph& d, const MultiGraph& g) {
  if (d.vertex_count() != g.vertex_count() || d.arc_count() != g.edge_count()) return false;
  std::map<std::pair<Vertex, Vertex>, long> balance;
  for (const Edge& e : g.edges()) ++balance[std::minmax(e.u, e.v)];
  for (const Arc& a : d.arcs()) {
    if (--balance[std::minmax(a.tail, a.head)] < 0) return false;
  }
  return true;
}

Subgraph induced_subgraph(const MultiGraph& g, std::span<const Vertex> vertices) {
  constexpr Vertex kAbsent = std::numeric_limits<Vertex>::max();
  std::vector<Vertex> local(g.vertex_count(), kAbsent);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    check_vertex(g.vertex_count(), vertices[i], "vertex");
    local[vertices[i]] = static_cast<Vertex>(i);
  }
  Subgraph sub;
  sub.vertex_to_parent.assign(vertices.begin(), vertices.end());
  std::vector<Edge> edges;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (local[ed.u] != kAbsent && local[ed.v] != kAbsent) {
      edges.push_back({local[ed.u], local[ed.v]});
      sub.edge_to_parent.push_back(e);
    }
  }
  sub.graph = MultiGraph(vertices.size(), std::move(edges));
  return sub;
}

Subgraph edge_subgraph(const MultiGraph& g, std::span<const EdgeId> edge_ids) {
  std::vector<Vertex> verts;
  for (EdgeId e : edge_ids) {
    verts.push_back(g.edge(e).u);
    verts.push_back(g.edge(e).v);
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  Subgraph sub;
  sub.vertex_to_parent = verts;
  auto local = [&](Vertex v) {
    return static_cast<Vertex>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
  };
  std::vector<Edge> edges;
  for (EdgeId e : edge_ids) {
    edges.push_back({local(g.edge(e).u), local(g.edge(e).v)});
    sub.edge_to_parent.push_back(e);
  }
  sub.graph = MultiGraph(verts.size(), std::move(edges));
  return sub;
}

}  // namespace orientdia
