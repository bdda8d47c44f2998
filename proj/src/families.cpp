#include "orientdia/families.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "orientdia/errors.hpp"

namespace orientdia {

namespace {

constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

std::uint64_t mix(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

template <typename T>
void shuffle(std::vector<T>& items, CounterRng& rng) {
  for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[rng.below(i)]);
}

MultiGraph relabel(std::size_t n, const std::vector<Edge>& edges, CounterRng& rng) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  shuffle(perm, rng);
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (const Edge& e : edges) out.push_back({perm[e.u], perm[e.v]});
  return MultiGraph(n, std::move(out));
}

// Gadget and cycle edges of G_{n,p} with their canonical directions.
struct Chain {
  std::vector<Edge> edges;
  std::vector<Arc> arcs;
};

Chain chain(std::size_t n, std::size_t p) {
  Chain c;
  auto add = [&](Vertex tail, Vertex head, bool stored_as_arc) {
    c.edges.push_back(stored_as_arc ? Edge{tail, head} : Edge{head, tail});
    c.arcs.push_back({tail, head});
  };
  for (Vertex i = 0; i + 1 < p; ++i) {
    const Vertex a = i, a_next = i + 1, b = static_cast<Vertex>(p + i);
    // Senses alternate: b_0 -> a_0 -> a_1 -> b_0, then reversed.
    const bool even = i % 2 == 0;
    if (even) {
      add(a, a_next, true);
      add(b, a, false);
      add(a_next, b, false);
    } else {
      add(a_next, a, false);
      add(a, b, true);
      add(b, a_next, true);
    }
  }
  const Vertex hub = static_cast<Vertex>(p - 1);
  Vertex prev = hub;
  for (Vertex v = static_cast<Vertex>(2 * p - 1); v < n; ++v) {
    add(prev, v, true);
    prev = v;
  }
  add(prev, hub, true);
  return c;
}

void require_gnp(std::size_t n, std::size_t p) {
  if (p < 2) throw InputError("G_{n,p} needs p >= 2");
  if (n < 2 * p + 1) {
    throw InputError("G_{n,p} needs n >= 2p+1 (n = " + std::to_string(n) + ", 2p+1 = " +
                     std::to_string(2 * p + 1) + ")");
  }
}

// Ear-grown 2-connected graph on `size` vertices using ids from `ids`.
void grow_block(const std::vector<Vertex>& ids, CounterRng& rng, std::vector<Edge>& edges) {
  const std::size_t size = ids.size();
  std::set<std::pair<Vertex, Vertex>> present;
  auto link = [&](Vertex a, Vertex b) {
    edges.push_back({a, b});
    present.insert(std::minmax(a, b));
  };
  const std::size_t cycle = 3 + rng.below(size - 2);
  for (std::size_t i = 0; i < cycle; ++i) link(ids[i], ids[(i + 1) % cycle]);
  std::size_t placed = cycle;
  while (placed < size) {
    const std::size_t len = 1 + rng.below(std::min<std::size_t>(3, size - placed));
    const Vertex from = ids[rng.below(placed)];
    Vertex to = ids[rng.below(placed - 1)];
    if (to == from) to = ids[placed - 1];
    Vertex prev = from;
    for (std::size_t j = 0; j < len; ++j) {
      link(prev, ids[placed + j]);
      prev = ids[placed + j];
    }
    link(prev, to);
    placed += len;
  }
  const std::size_t chords = rng.below(3);
  for (std::size_t c = 0; c < chords; ++c) {
    const Vertex a = ids[rng.below(size)], b = ids[rng.below(size)];
    if (a != b && !present.count(std::minmax(a, b))) link(a, b);
  }
}

std::size_t clique_size(CounterRng& rng) {
  const std::uint64_t r = rng.below(10);
  return r < 6 ? 3 : r < 9 ? 4 : 5;
}

}  // namespace

std::uint64_t CounterRng::next() noexcept { return mix(seed_ + kGamma * ++counter_); }

std::uint64_t CounterRng::below(std::uint64_t bound) noexcept {
  const std::uint64_t limit = bound * (~std::uint64_t{0} / bound);
  for (;;) {
    const std::uint64_t x = next();
    if (x < limit) return x % bound;
  }
}

CounterRng CounterRng::split(std::uint64_t stream) const noexcept {
  return CounterRng(mix(seed_ ^ mix(stream + kGamma)));
}

GeneratedGraph gen_gnp_extremal(std::size_t n, std::size_t p) {
  require_gnp(n, p);
  Chain c = chain(n, p);
  MultiGraph g(n, std::move(c.edges));
  return {std::move(g), Digraph(n, std::move(c.arcs))};
}

GeneratedGraph gen_block_extremal(std::size_t n) {
  if (n < 5) throw InputError("G'_n needs n >= 5");
  if (n % 2 == 1) return gen_gnp_extremal(n, (n - 1) / 2);
  const std::size_t p = (n - 2) / 2;
  Chain c = chain(n, p);
  // Terminal 4-cycle a -> c1 -> c2 -> c3 -> a; chords a -> c2 and c1 -> c3
  // give a K_4 in which a has eccentricity 2.
  const auto a = static_cast<Vertex>(p - 1);
  const auto c1 = static_cast<Vertex>(n - 3), c3 = static_cast<Vertex>(n - 1);
  const auto c2 = static_cast<Vertex>(n - 2);
  c.edges.push_back({a, c2});
  c.arcs.push_back({a, c2});
  c.edges.push_back({c1, c3});
  c.arcs.push_back({c1, c3});
  MultiGraph g(n, std::move(c.edges));
  return {std::move(g), Digraph(n, std::move(c.arcs))};
}

MultiGraph gen_random_bridgeless(std::size_t n, std::size_t p, std::uint64_t seed) {
  if (p < 1) throw InputError("need p >= 1");
  if (n < 2 * p + 1) {
    throw InputError("a bridgeless graph with p blocks needs n >= 2p+1 (n = " + std::to_string(n) +
                     ", 2p+1 = " + std::to_string(2 * p + 1) + ")");
  }
  CounterRng rng(seed);
  std::vector<std::size_t> sizes(p, 3);
  for (std::size_t extra = n - 2 * p - 1; extra > 0; --extra) ++sizes[rng.below(p)];

  std::vector<Edge> edges;
  Vertex next = 0;
  for (std::size_t b = 0; b < p; ++b) {
    std::vector<Vertex> ids;
    if (b > 0) ids.push_back(static_cast<Vertex>(rng.below(next)));
    while (ids.size() < sizes[b]) ids.push_back(next++);
    shuffle(ids, rng);
    grow_block(ids, rng, edges);
  }
  return relabel(n, edges, rng);
}

MultiGraph gen_random_block_graph(std::size_t n, std::uint64_t seed) {
  if (n < 3) throw InputError("a bridgeless block graph needs n >= 3");
  CounterRng rng(seed);
  std::vector<Edge> edges;
  auto clique = [&](const std::vector<Vertex>& ids) {
    for (std::size_t i = 0; i < ids.size(); ++i) {
      for (std::size_t j = i + 1; j < ids.size(); ++j) edges.push_back({ids[i], ids[j]});
    }
  };
  // A remainder of one vertex would need a bridge, so sizes avoid it.
  auto pick = [&](std::size_t remaining, std::size_t offset) {
    for (;;) {
      const std::size_t k = clique_size(rng);
      if (k - offset <= remaining && remaining - (k - offset) != 1) return k;
    }
  };
  Vertex next = 0;
  std::vector<Vertex> first(pick(n, 0));
  for (Vertex& v : first) v = next++;
  clique(first);
  while (next < n) {
    const std::size_t k = pick(n - next, 1);
    std::vector<Vertex> ids{static_cast<Vertex>(rng.below(next))};
    while (ids.size() < k) ids.push_back(next++);
    clique(ids);
  }
  return relabel(n, edges, rng);
}

MultiGraph gen_random_subdivided_tree(std::size_t growth, std::uint64_t seed) {
  CounterRng rng(seed);
  std::vector<Edge> edges{{0, 1}, {0, 2}, {0, 3}};
  std::vector<Vertex> leaves{1, 2, 3};
  Vertex next = 4;
  for (std::size_t step = 0; step < growth; ++step) {
    const std::size_t at = rng.below(leaves.size());
    const Vertex v = leaves[at];
    leaves.erase(leaves.begin() + static_cast<std::ptrdiff_t>(at));
    const std::size_t children = 2 + rng.below(2);
    for (std::size_t c = 0; c < children; ++c) {
      edges.push_back({v, next});
      leaves.push_back(next++);
    }
  }
  std::vector<Edge> out;
  for (const Edge& e : edges) {
    if (rng.below(2) == 0) {
      out.push_back(e);
    } else {
      out.push_back({e.u, next});
      out.push_back({next++, e.v});
    }
  }
  return relabel(next, out, rng);
}

Family parse_family(std::string_view name) {
  if (name == "gnp" || name == "gnp_extremal") return Family::gnp_extremal;
  if (name == "block" || name == "block_extremal") return Family::block_extremal;
  if (name == "random" || name == "random_bridgeless") return Family::random_bridgeless;
  if (name == "random-block" || name == "random_block_graph") return Family::random_block_graph;
  throw InputError("unknown family '" + std::string(name) + "'");
}

std::string family_name(Family f) {
  switch (f) {
    case Family::gnp_extremal: return "gnp_extremal";
    case Family::block_extremal: return "block_extremal";
    case Family::random_bridgeless: return "random_bridgeless";
    case Family::random_block_graph: return "random_block_graph";
  }
  return "unknown";
}

GeneratedGraph generate(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::gnp_extremal: return gen_gnp_extremal(spec.n, spec.p);
    case Family::block_extremal: return gen_block_extremal(spec.n);
    case Family::random_bridgeless: return {gen_random_bridgeless(spec.n, spec.p, spec.seed), std::nullopt};
    case Family::random_block_graph: return {gen_random_block_graph(spec.n, spec.seed), std::nullopt};
  }
  throw InputError("unknown family");
}

}  // namespace orientdia
