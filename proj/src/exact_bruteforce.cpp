#include <algorithm>
#include <thread>

#include "internal/bitgraph.hpp"
#include "internal/checks.hpp"
#include "orientdia/errors.hpp"
#include "orientdia/exact.hpp"

namespace orientdia {

namespace {

using detail::BitDigraph;
using detail::kUnreached;
using detail::Mask;
using detail::OrientationSpace;

struct ChunkResult {
  std::uint32_t value = kUnreached;
  Mask mask = 0;
};

// Scans pinned masks (x << 1) for x in [begin, end).
ChunkResult scan(const MultiGraph& g, const OrientationSpace& space, Mask begin, Mask end) {
  ChunkResult best;
  BitDigraph d(g.vertex_count());
  for (Mask x = begin; x < end; ++x) {
    const Mask mask = x << 1;
    space.fill(mask, d);
    if (!d.is_strongly_connected()) continue;
    const std::uint32_t cap = best.value == kUnreached ? kUnreached - 1 : best.value - 1;
    const std::uint32_t diam = d.diameter_within(cap);
    if (diam != kUnreached) {
      best.value = diam;
      best.mask = mask;
      if (diam <= 1) break;
    }
  }
  return best;
}

}  // namespace

OrientationCertificate oriented_diameter_bruteforce(const MultiGraph& g, const ExactOptions& options) {
  detail::require_bridgeless(g);
  if (g.edge_count() > options.edge_budget) {
    throw ResourceError("graph has " + std::to_string(g.edge_count()) +
                        " edges, brute force budget is " + std::to_string(options.edge_budget) +
                        "; use the decomposed method");
  }
  OrientationCertificate cert;
  cert.method = ExactMethod::brute;
  if (g.edge_count() == 0) {
    cert.value = Hops(0);
    cert.witness = Digraph(g.vertex_count(), {});
    cert.explored = 1;
    return cert;
  }

  OrientationSpace space(g);
  if (!space.consistent()) {
    throw InfeasibleError("degree-2 constraints admit no strong orientation");
  }
  const Mask total = Mask{1} << (space.class_count() - 1);
  const unsigned threads =
      static_cast<unsigned>(std::clamp<Mask>(options.threads == 0 ? 1 : options.threads, 1, total));

  std::vector<ChunkResult> results(threads);
  if (threads == 1) {
    results[0] = scan(g, space, 0, total);
  } else {
    std::vector<std::thread> workers;
    for (unsigned t = 0; t < threads; ++t) {
      const Mask begin = total * t / threads;
      const Mask end = total * (t + 1) / threads;
      workers.emplace_back([&, t, begin, end] { results[t] = scan(g, space, begin, end); });
    }
    for (auto& w : workers) w.join();
  }
  // Chunks are in mask order, so the first strict minimum is the sequential answer.
  ChunkResult best;
  for (const auto& r : results) {
    if (r.value < best.value) best = r;
  }
  if (best.value == kUnreached) {
    throw ContractViolation("bridgeless graph without a strong orientation");
  }
  cert.value = Hops(best.value);
  cert.witness = Digraph::orient(g, space.flags(best.mask));
  cert.explored = total;
  return cert;
}

std::uint64_t for_each_strong_orientation(const MultiGraph& g, const StrongOrientationVisitor& visit,
                                          const ExactOptions& options) {
  if (g.vertex_count() == 0 || !is_connected(g)) throw InputError("graph must be connected");
  if (g.edge_count() > options.edge_budget) {
    throw ResourceError("graph has " + std::to_string(g.edge_count()) + " edges, budget is " +
                        std::to_string(options.edge_budget));
  }
  const std::size_t n = g.vertex_count();
  if (g.edge_count() == 0) {
    visit({}, DistanceMatrix(n));
    return 1;
  }
  OrientationSpace space(g);
  if (!space.consistent()) return 0;
  BitDigraph d(n);
  std::vector<std::uint32_t> raw;
  std::uint64_t visited = 0;
  const Mask total = Mask{1} << space.class_count();
  for (Mask mask = 0; mask < total; ++mask) {
    space.fill(mask, d);
    if (!d.is_strongly_connected()) continue;
    d.distances(raw);
    DistanceMatrix dist(n);
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = 0; v < n; ++v) dist.set(u, v, Hops(raw[u * n + v]));
    }
    visit(space.flags(mask), dist);
    ++visited;
  }
  return visited;
}

}  // namespace orientdia
