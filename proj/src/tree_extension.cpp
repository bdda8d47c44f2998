#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>
#include <set>

#include "internal/bitgraph.hpp"
#include "orientdia/decomposition.hpp"
#include "orientdia/errors.hpp"
#include "orientdia/orient.hpp"

namespace orientdia {

std::pair<std::uint32_t, std::uint32_t> tree_extension_bounds(std::size_t p, std::uint32_t k) {
  if (p < 1 || k < 1) throw InputError("tree extension bounds need p >= 1 and k >= 1");
  const std::size_t kk = k;
  if (p % 2 == 0) {
    return {static_cast<std::uint32_t>((kk + 1) * p / 2 - 1),
            static_cast<std::uint32_t>((kk + 1) * p / 2 + kk - 2)};
  }
  return {static_cast<std::uint32_t>((kk + 1) * (p - 1) / 2),
          static_cast<std::uint32_t>(((kk + 1) * p + kk - 3) / 2)};
}

namespace {

constexpr std::uint64_t kEvaluationBudget = 1u << 21;

void validate(const TreeExtension& ext) {
  const MultiGraph& h = ext.host;
  const std::size_t n = h.vertex_count();
  if (ext.k < 1) throw InputError("extension length k must be at least 1");
  if (ext.tree_vertices.empty()) throw InputError("tree has no vertices");

  std::vector<bool> in_tree(n, false);
  for (Vertex v : ext.tree_vertices) {
    if (v >= n) throw InputError("tree vertex " + std::to_string(v) + " out of range");
    if (in_tree[v]) throw InputError("tree vertex " + std::to_string(v) + " listed twice");
    in_tree[v] = true;
  }
  if (ext.tree_edges.size() + 1 != ext.tree_vertices.size()) {
    throw InputError("a tree on p vertices has p - 1 edges");
  }
  std::vector<Vertex> root(n);
  std::iota(root.begin(), root.end(), Vertex{0});
  auto find = [&](Vertex v) {
    while (root[v] != v) v = root[v] = root[root[v]];
    return v;
  };
  std::set<EdgeId> tree_edge_set;
  for (EdgeId e : ext.tree_edges) {
    if (e >= h.edge_count()) throw InputError("tree edge " + std::to_string(e) + " out of range");
    const Edge& ed = h.edge(e);
    if (!in_tree[ed.u] || !in_tree[ed.v]) throw InputError("tree edge leaves the tree vertex set");
    if (!tree_edge_set.insert(e).second) throw InputError("tree edge listed twice");
    const Vertex a = find(ed.u), b = find(ed.v);
    if (a == b) throw InputError("tree edges contain a cycle");
    root[a] = b;
  }

  for (std::size_t i = 0; i < ext.paths.size(); ++i) {
    const TreePath& path = ext.paths[i];
    const std::string where = "path " + std::to_string(i);
    if (path.edges.empty() || path.vertices.size() != path.edges.size() + 1) {
      throw InputError(where + " is malformed");
    }
    if (path.length() > ext.k) throw InputError(where + " is longer than k");
    for (std::size_t j = 0; j < path.edges.size(); ++j) {
      const EdgeId e = path.edges[j];
      if (e >= h.edge_count()) throw InputError(where + " uses an unknown edge");
      if (tree_edge_set.count(e)) throw InputError(where + " uses a tree edge");
      const Edge& ed = h.edge(e);
      const Vertex a = path.vertices[j], b = path.vertices[j + 1];
      if (!((ed.u == a && ed.v == b) || (ed.u == b && ed.v == a))) {
        throw InputError(where + " lists an edge that does not join consecutive vertices");
      }
    }
    const Vertex front = path.vertices.front(), back = path.vertices.back();
    if (!in_tree[front] || !in_tree[back]) throw InputError(where + " must end in the tree");
    std::vector<Vertex> inner(path.vertices.begin() + 1, path.vertices.end() - 1);
    for (Vertex v : inner) {
      if (in_tree[v]) throw InputError(where + " has an internal tree vertex");
    }
    std::sort(inner.begin(), inner.end());
    if (std::adjacent_find(inner.begin(), inner.end()) != inner.end()) {
      throw InputError(where + " repeats a vertex");
    }
  }

  std::vector<EdgeId> all(ext.tree_edges.begin(), ext.tree_edges.end());
  for (const auto& path : ext.paths) all.insert(all.end(), path.edges.begin(), path.edges.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  if (!all.empty() && !is_bridgeless(edge_subgraph(h, all).graph)) {
    throw InputError("tree plus extension is not bridgeless");
  }
}

struct Evaluation {
  std::uint32_t tree_max = 0;
  std::uint32_t all_max = 0;
};

// Distances of the digraph on the endpoints of `arcs` plus the tree vertices.
class Evaluator {
 public:
  Evaluator(std::size_t host_n, const std::vector<Vertex>& tree_vertices)
      : local_(host_n, kAbsent), tree_(tree_vertices) {}

  std::optional<Evaluation> operator()(const std::vector<Arc>& arcs, std::vector<Vertex>& vertices) {
    vertices = tree_;
    for (const Arc& a : arcs) {
      vertices.push_back(a.tail);
      vertices.push_back(a.head);
    }
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    for (std::size_t i = 0; i < vertices.size(); ++i) local_[vertices[i]] = static_cast<Vertex>(i);
    const std::size_t n = vertices.size();

    std::vector<std::uint32_t> dist;
    if (n <= detail::kMaxBitVertices) {
      detail::BitDigraph d(n);
      for (const Arc& a : arcs) d.add_arc(local_[a.tail], local_[a.head]);
      if (!d.is_strongly_connected()) return reset(vertices);
      d.distances(dist);
    } else {
      std::vector<Arc> local_arcs;
      for (const Arc& a : arcs) local_arcs.push_back({local_[a.tail], local_[a.head]});
      const auto m = all_pairs_distances(Digraph(n, std::move(local_arcs)));
      dist.assign(n * n, detail::kUnreached);
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = 0; v < n; ++v) {
          if (m.at(u, v).is_finite()) dist[u * n + v] = m.at(u, v).value();
        }
      }
      if (std::find(dist.begin(), dist.end(), detail::kUnreached) != dist.end()) {
        return reset(vertices);
      }
    }

    Evaluation ev;
    ev.all_max = *std::max_element(dist.begin(), dist.end());
    for (Vertex a : tree_) {
      for (Vertex b : tree_) ev.tree_max = std::max(ev.tree_max, dist[local_[a] * n + local_[b]]);
    }
    reset(vertices);
    return ev;
  }

 private:
  static constexpr Vertex kAbsent = std::numeric_limits<Vertex>::max();

  std::nullopt_t reset(const std::vector<Vertex>& vertices) {
    for (Vertex v : vertices) local_[v] = kAbsent;
    return std::nullopt;
  }

  std::vector<Vertex> local_;
  std::vector<Vertex> tree_;
};

// Fixes edge e to leave `tail`; false when it is already fixed the other way.
bool place(std::vector<std::int8_t>& dir, const MultiGraph& h, EdgeId e, Vertex tail) {
  const std::int8_t want = h.edge(e).u == tail ? 0 : 1;
  if (dir[e] >= 0 && dir[e] != want) return false;
  dir[e] = want;
  return true;
}

bool place_path(std::vector<std::int8_t>& dir, const MultiGraph& h, const TreePath& path,
                bool backwards) {
  for (std::size_t j = 0; j < path.edges.size(); ++j) {
    const Vertex tail = backwards ? path.vertices[j + 1] : path.vertices[j];
    if (!place(dir, h, path.edges[j], tail)) return false;
  }
  return true;
}

// Calls `visit` on each size-`r` subset of {0..n-1} in lexicographic order
// until it returns true.
template <typename Visit>
bool for_each_subset(std::size_t n, std::size_t r, Visit&& visit) {
  std::vector<std::size_t> idx(r);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  for (;;) {
    if (visit(idx)) return true;
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == n - r + (i - 1)) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

TreeExtensionResult tree_extension_orientation(const TreeExtension& ext) {
  validate(ext);
  const MultiGraph& h = ext.host;
  const std::size_t p = ext.tree_vertices.size();
  const auto [tree_bound, all_bound] = tree_extension_bounds(p, ext.k);
  Evaluator evaluate(h.vertex_count(), ext.tree_vertices);
  std::uint64_t spent = 0;

  TreeExtensionResult result;
  bool accepted = false;
  result.tree_pair_bound = tree_bound;
  result.all_pair_bound = all_bound;

  auto accept = [&](const std::vector<std::int8_t>& dir) {
    std::vector<Arc> arcs;
    std::vector<EdgeId> included;
    for (EdgeId e = 0; e < dir.size(); ++e) {
      if (dir[e] < 0) continue;
      included.push_back(e);
      const Edge& ed = h.edge(e);
      arcs.push_back(dir[e] == 0 ? Arc{ed.u, ed.v} : Arc{ed.v, ed.u});
    }
    ++spent;
    std::vector<Vertex> vertices;
    auto ev = evaluate(arcs, vertices);
    if (!ev || ev->tree_max > tree_bound || ev->all_max > all_bound) return false;
    result.orientation = Digraph(h.vertex_count(), std::move(arcs));
    result.included_edges = std::move(included);
    result.vertices = std::move(vertices);
    result.tree_pair_max = ev->tree_max;
    result.all_pair_max = ev->all_max;
    accepted = true;
    return true;
  };

  // Phase 1: tree edges in either sense, each path dropped or traversed as a
  // directed path in one of its two senses. Fewer drops are tried first, and
  // the first unit is pinned since reversing everything preserves the bounds.
  const std::size_t t_units = ext.tree_edges.size();
  const std::size_t path_count = ext.paths.size();
  auto try_kept = [&](const std::vector<std::size_t>& kept) {
    const std::size_t units = t_units + kept.size();
    if (units >= 63) return false;
    const std::uint64_t masks = units == 0 ? 1 : std::uint64_t{1} << (units - 1);
    for (std::uint64_t mask = 0; mask < masks && spent < kEvaluationBudget; ++mask) {
      std::vector<std::int8_t> dir(h.edge_count(), -1);
      bool ok = true;
      for (std::size_t u = 0; u < t_units; ++u) {
        const Edge& ed = h.edge(ext.tree_edges[u]);
        const bool rev = ((mask >> u) & 1) != 0;
        place(dir, h, ext.tree_edges[u], rev ? ed.v : ed.u);
      }
      for (std::size_t i = 0; i < kept.size() && ok; ++i) {
        ok = place_path(dir, h, ext.paths[kept[i]], ((mask >> (t_units + i)) & 1) != 0);
      }
      if (ok && accept(dir)) {
        result.kept_paths = kept;
        return true;
      }
    }
    return false;
  };
  for (std::size_t drops = 0; drops <= path_count && spent < kEvaluationBudget; ++drops) {
    for_each_subset(path_count, path_count - drops, [&](const std::vector<std::size_t>& kept) {
      return spent >= kEvaluationBudget || try_kept(kept);
    });
    if (accepted) return result;
  }

  // Phase 2: edge by edge, every non-tree edge dropped or in either sense.
  std::vector<EdgeId> extra;
  for (const auto& path : ext.paths) extra.insert(extra.end(), path.edges.begin(), path.edges.end());
  std::sort(extra.begin(), extra.end());
  extra.erase(std::unique(extra.begin(), extra.end()), extra.end());
  std::uint64_t space = std::uint64_t{1} << std::min<std::size_t>(t_units, 40);
  for (std::size_t i = 0; i < extra.size() && space <= kEvaluationBudget; ++i) space *= 3;
  if (space <= kEvaluationBudget) {
    spent = 0;
    for (std::uint64_t code = 0; code < space; ++code) {
      std::vector<std::int8_t> dir(h.edge_count(), -1);
      std::uint64_t c = code;
      for (EdgeId e : ext.tree_edges) {
        dir[e] = static_cast<std::int8_t>(c & 1);
        c >>= 1;
      }
      for (EdgeId e : extra) {
        dir[e] = static_cast<std::int8_t>(c % 3) - 1;
        c /= 3;
      }
      if (accept(dir)) {
        for (std::size_t i = 0; i < ext.paths.size(); ++i) {
          const auto& es = ext.paths[i].edges;
          if (std::all_of(es.begin(), es.end(), [&](EdgeId e) { return dir[e] >= 0; })) {
            result.kept_paths.push_back(i);
          }
        }
        return result;
      }
    }
  }
  throw ContractViolation("tree extension search found no orientation within the bounds (p = " +
                          std::to_string(p) + ", k = " + std::to_string(ext.k) + ")");
}

}  // namespace orientdia
