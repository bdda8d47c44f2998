#include <algorithm>
#include <deque>
#include <optional>

#include "internal/bitgraph.hpp"
#include "internal/checks.hpp"
#include "orientdia/decomposition.hpp"
#include "orientdia/errors.hpp"
#include "orientdia/exact.hpp"

namespace orientdia {

namespace {

using detail::BitDigraph;
using detail::kUnreached;
using detail::Mask;
using detail::OrientationSpace;

bool dominates_or_equals(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

void insert_pareto(std::vector<BlockProfile>& front, std::vector<std::vector<std::uint32_t>>& keys,
                   BlockProfile&& cand) {
  auto key = cand.key();
  for (const auto& k : keys) {
    if (dominates_or_equals(k, key)) return;
  }
  for (std::size_t i = front.size(); i-- > 0;) {
    if (dominates_or_equals(key, keys[i])) {
      front.erase(front.begin() + static_cast<std::ptrdiff_t>(i));
      keys.erase(keys.begin() + static_cast<std::ptrdiff_t>(i));
    }
  }
  front.push_back(std::move(cand));
  keys.push_back(std::move(key));
}

BlockProfile make_profile(const std::vector<std::uint32_t>& dist, std::size_t n,
                          std::span<const Vertex> attachments, bool transpose) {
  auto at = [&](Vertex u, Vertex v) { return transpose ? dist[v * n + u] : dist[u * n + v]; };
  const std::size_t k = attachments.size();
  BlockProfile p;
  p.attachments.assign(attachments.begin(), attachments.end());
  p.out_ecc.assign(k, 0);
  p.in_ecc.assign(k, 0);
  p.between.assign(k * k, 0);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) p.diameter = std::max(p.diameter, at(u, v));
  }
  for (std::size_t a = 0; a < k; ++a) {
    for (Vertex v = 0; v < n; ++v) {
      p.out_ecc[a] = std::max(p.out_ecc[a], at(attachments[a], v));
      p.in_ecc[a] = std::max(p.in_ecc[a], at(v, attachments[a]));
    }
    for (std::size_t b = 0; b < k; ++b) p.between[a * k + b] = at(attachments[a], attachments[b]);
  }
  return p;
}

std::vector<BlockProfile> compute_profiles(const MultiGraph& block, std::span<const Vertex> attachments,
                                           const ExactOptions& options, std::uint64_t& explored) {
  const std::size_t n = block.vertex_count();
  for (Vertex a : attachments) {
    if (a >= n) throw InputError("attachment vertex " + std::to_string(a) + " outside block");
  }
  detail::require_bridgeless(block);
  if (block.edge_count() == 0) {
    explored += 1;
    std::vector<std::uint32_t> dist(n * n, 0);
    return {make_profile(dist, n, attachments, false)};
  }
  OrientationSpace space(block);
  if (!space.consistent()) throw InfeasibleError("block admits no strong orientation");
  if (space.class_count() > options.block_budget_log2) {
    throw ResourceError("block with " + std::to_string(block.edge_count()) + " edges needs 2^" +
                        std::to_string(space.class_count()) + " orientations, budget is 2^" +
                        std::to_string(options.block_budget_log2));
  }
  const Mask all_classes = (Mask{1} << space.class_count()) - 1;
  const Mask half = Mask{1} << (space.class_count() - 1);
  BitDigraph d(n);
  std::vector<std::uint32_t> dist;
  std::vector<BlockProfile> front;
  std::vector<std::vector<std::uint32_t>> keys;
  for (Mask x = 0; x < half; ++x) {
    const Mask mask = x << 1;
    space.fill(mask, d);
    if (!d.is_strongly_connected()) continue;
    d.distances(dist);
    auto forward = make_profile(dist, n, attachments, false);
    forward.witness = space.flags(mask);
    auto backward = make_profile(dist, n, attachments, true);
    backward.witness = space.flags(mask ^ all_classes);
    insert_pareto(front, keys, std::move(forward));
    insert_pareto(front, keys, std::move(backward));
  }
  explored += 2 * half;
  return front;
}

// Pareto front entry over (out, in) reach of a rooted subtree.
struct Entry {
  std::uint32_t out = 0;
  std::uint32_t in = 0;
  std::size_t profile = 0;         // block entries only
  std::vector<std::size_t> picks;  // per child (cut entries: per child block)
};

void insert_entry(std::vector<Entry>& front, Entry&& e) {
  for (const auto& f : front) {
    if (f.out <= e.out && f.in <= e.in) return;
  }
  std::erase_if(front, [&](const Entry& f) { return e.out <= f.out && e.in <= f.in; });
  front.push_back(std::move(e));
}

class TreeSolver {
 public:
  TreeSolver(const MultiGraph& g, const BlockDecomposition& dec, const ExactOptions& options)
      : g_(g), dec_(dec) {
    const std::size_t p = dec.block_count();
    blocks_.resize(p);
    for (BlockId b = 0; b < p; ++b) {
      auto& info = blocks_[b];
      info.sub = block_subgraph(g, dec, b);
      info.attach = dec.cut_vertices_of(b);
      std::vector<Vertex> local;
      const auto& verts = info.sub.vertex_to_parent;
      for (Vertex c : info.attach) {
        local.push_back(
            static_cast<Vertex>(std::lower_bound(verts.begin(), verts.end(), c) - verts.begin()));
      }
      info.profiles = compute_profiles(info.sub.graph, local, options, explored_);
      for (auto& prof : info.profiles) prof.block = b;
    }
    root();
  }

  std::uint64_t explored() const { return explored_; }

  std::uint32_t lower_bound() const {
    std::uint32_t lb = 0;
    for (const auto& info : blocks_) {
      std::uint32_t best = kUnreached;
      for (const auto& prof : info.profiles) best = std::min(best, prof.diameter);
      lb = std::max(lb, best);
    }
    return lb;
  }

  bool feasible(std::uint32_t limit) {
    limit_ = limit;
    block_front_.assign(blocks_.size(), {});
    cut_front_.assign(g_.vertex_count(), {});
    for (auto it = order_.rbegin(); it != order_.rend(); ++it) {
      for (Vertex c : blocks_[*it].child_cuts) solve_cut(c);
      solve_block(*it);
    }
    return !block_front_[order_.front()].empty();
  }

  std::vector<bool> reconstruct() const {
    std::vector<bool> flags(g_.edge_count(), false);
    assign(order_.front(), 0, flags);
    return flags;
  }

 private:
  struct BlockInfo {
    Subgraph sub;
    std::vector<Vertex> attach;  // global ids, ascending
    std::vector<BlockProfile> profiles;
    std::optional<std::size_t> parent_slot;  // index into attach
    std::vector<Vertex> child_cuts;
    std::vector<std::size_t> child_slots;
  };

  std::size_t slot_of(BlockId b, Vertex c) const {
    const auto& a = blocks_[b].attach;
    return static_cast<std::size_t>(std::lower_bound(a.begin(), a.end(), c) - a.begin());
  }

  void root() {
    child_blocks_.assign(g_.vertex_count(), {});
    std::vector<bool> seen(blocks_.size(), false);
    std::deque<BlockId> queue{0};
    seen[0] = true;
    while (!queue.empty()) {
      BlockId b = queue.front();
      queue.pop_front();
      order_.push_back(b);
      auto& info = blocks_[b];
      for (std::size_t slot = 0; slot < info.attach.size(); ++slot) {
        if (info.parent_slot && *info.parent_slot == slot) continue;
        const Vertex c = info.attach[slot];
        info.child_cuts.push_back(c);
        info.child_slots.push_back(slot);
        for (BlockId nb : dec_.blocks_of_vertex[c]) {
          if (nb == b || seen[nb]) continue;
          seen[nb] = true;
          blocks_[nb].parent_slot = slot_of(nb, c);
          child_blocks_[c].push_back(nb);
          queue.push_back(nb);
        }
      }
    }
  }

  void solve_cut(Vertex c) {
    std::vector<Entry> acc{Entry{}};
    for (BlockId cb : child_blocks_[c]) {
      std::vector<Entry> next;
      const auto& front = block_front_[cb];
      for (const auto& a : acc) {
        for (std::size_t idx = 0; idx < front.size(); ++idx) {
          const auto& e = front[idx];
          if (a.in + e.out > limit_ || e.in + a.out > limit_) continue;
          Entry merged{std::max(a.out, e.out), std::max(a.in, e.in), 0, a.picks};
          merged.picks.push_back(idx);
          insert_entry(next, std::move(merged));
        }
      }
      acc = std::move(next);
      if (acc.empty()) break;
    }
    cut_front_[c] = std::move(acc);
  }

  void solve_block(BlockId b) {
    const auto& info = blocks_[b];
    auto& out = block_front_[b];
    std::vector<std::size_t> picks(info.child_cuts.size());
    for (std::size_t pi = 0; pi < info.profiles.size(); ++pi) {
      const auto& prof = info.profiles[pi];
      if (prof.diameter > limit_) continue;
      std::uint32_t base_out = 0, base_in = 0;
      if (info.parent_slot) {
        base_out = prof.out_ecc[*info.parent_slot];
        base_in = prof.in_ecc[*info.parent_slot];
      }
      choose(info, prof, pi, 0, base_out, base_in, picks, out);
    }
  }

  void choose(const BlockInfo& info, const BlockProfile& prof, std::size_t pi, std::size_t j,
              std::uint32_t reach_out, std::uint32_t reach_in, std::vector<std::size_t>& picks,
              std::vector<Entry>& out) const {
    if (j == info.child_cuts.size()) {
      insert_entry(out, Entry{reach_out, reach_in, pi, picks});
      return;
    }
    const std::size_t sj = info.child_slots[j];
    const auto& front = cut_front_[info.child_cuts[j]];
    for (std::size_t idx = 0; idx < front.size(); ++idx) {
      const auto& e = front[idx];
      if (e.in + prof.out_ecc[sj] > limit_ || e.out + prof.in_ecc[sj] > limit_) continue;
      bool ok = true;
      for (std::size_t l = 0; l < j && ok; ++l) {
        const auto& el = cut_front_[info.child_cuts[l]][picks[l]];
        const std::size_t sl = info.child_slots[l];
        ok = el.in + prof.distance(sl, sj) + e.out <= limit_ &&
             e.in + prof.distance(sj, sl) + el.out <= limit_;
      }
      if (!ok) continue;
      std::uint32_t next_out = reach_out, next_in = reach_in;
      if (info.parent_slot) {
        next_out = std::max(next_out, prof.distance(*info.parent_slot, sj) + e.out);
        next_in = std::max(next_in, e.in + prof.distance(sj, *info.parent_slot));
        if (next_out > limit_ || next_in > limit_) continue;
      }
      picks[j] = idx;
      choose(info, prof, pi, j + 1, next_out, next_in, picks, out);
    }
  }

  void assign(BlockId b, std::size_t entry_idx, std::vector<bool>& flags) const {
    const auto& info = blocks_[b];
    const auto& entry = block_front_[b][entry_idx];
    const auto& prof = info.profiles[entry.profile];
    for (EdgeId le = 0; le < info.sub.edge_to_parent.size(); ++le) {
      flags[info.sub.edge_to_parent[le]] = prof.witness[le];
    }
    for (std::size_t j = 0; j < info.child_cuts.size(); ++j) {
      const Vertex c = info.child_cuts[j];
      const auto& centry = cut_front_[c][entry.picks[j]];
      for (std::size_t t = 0; t < child_blocks_[c].size(); ++t) {
        assign(child_blocks_[c][t], centry.picks[t], flags);
      }
    }
  }

  const MultiGraph& g_;
  const BlockDecomposition& dec_;
  std::vector<BlockInfo> blocks_;
  std::vector<BlockId> order_;  // BFS from the root block
  std::vector<std::vector<BlockId>> child_blocks_;
  std::vector<std::vector<Entry>> block_front_;
  std::vector<std::vector<Entry>> cut_front_;
  std::uint32_t limit_ = 0;
  std::uint64_t explored_ = 0;
};

}  // namespace

std::vector<std::uint32_t> BlockProfile::key() const {
  std::vector<std::uint32_t> k;
  k.reserve(1 + out_ecc.size() + in_ecc.size() + between.size());
  k.push_back(diameter);
  k.insert(k.end(), out_ecc.begin(), out_ecc.end());
  k.insert(k.end(), in_ecc.begin(), in_ecc.end());
  k.insert(k.end(), between.begin(), between.end());
  return k;
}

std::vector<BlockProfile> block_profiles(const MultiGraph& block, std::span<const Vertex> attachments,
                                         const ExactOptions& options) {
  std::uint64_t explored = 0;
  return compute_profiles(block, attachments, options, explored);
}

OrientationCertificate oriented_diameter_decomposed(const MultiGraph& g, const ExactOptions& options) {
  auto dec = detail::require_bridgeless(g);
  OrientationCertificate cert;
  cert.method = ExactMethod::decomposed;
  if (g.edge_count() == 0) {
    cert.value = Hops(0);
    cert.witness = Digraph(g.vertex_count(), {});
    cert.explored = 1;
    return cert;
  }
  TreeSolver solver(g, dec, options);
  cert.explored = solver.explored();
  const auto n = static_cast<std::uint32_t>(g.vertex_count());
  for (std::uint32_t limit = solver.lower_bound(); limit <= n; ++limit) {
    if (!solver.feasible(limit)) continue;
    cert.witness = Digraph::orient(g, solver.reconstruct());
    cert.value = Hops(limit);
    if (diameter(cert.witness) != cert.value) {
      throw ContractViolation("decomposed witness diameter disagrees with its certificate value");
    }
    return cert;
  }
  throw ContractViolation("no block profile combination is feasible");
}

}  // namespace orientdia
