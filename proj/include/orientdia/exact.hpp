#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "orientdia/graph.hpp"

namespace orientdia {

enum class ExactMethod { brute, decomposed };

struct ExactOptions {
  std::size_t edge_budget = 22;        // brute force: max edges
  std::size_t block_budget_log2 = 20;  // decomposed: max log2(orientations) per block
  unsigned threads = 1;
};

/// Oriented diameter with a witness orientation.
///
/// For the brute-force method `explored` counts orientations examined; for
/// the decomposed method it sums the per-block counts.
struct OrientationCertificate {
  Hops value;
  Digraph witness;
  ExactMethod method = ExactMethod::brute;
  std::uint64_t explored = 0;
};

/// Minimum diameter over all strong orientations of a connected bridgeless
/// graph with at most `edge_budget` edges.
///
/// Orientations are enumerated by increasing bitmask over the forced edge
/// classes with the first class pinned (reversing every arc preserves the
/// diameter, so pinning loses nothing). The witness is the first minimum in
/// that order, independent of `threads`.
OrientationCertificate oriented_diameter_bruteforce(const MultiGraph& g,
                                                    const ExactOptions& options = {});

/// Pareto-minimal distance profile of one strong orientation of a block
/// relative to its attachment (cut) vertices.
struct BlockProfile {
  std::size_t block = 0;
  std::vector<Vertex> attachments;  // local vertex ids within the block
  std::uint32_t diameter = 0;
  std::vector<std::uint32_t> out_ecc;  // per attachment, over all block vertices
  std::vector<std::uint32_t> in_ecc;
  std::vector<std::uint32_t> between;  // k x k row-major, attachment to attachment
  std::vector<bool> witness;           // edge reversal flags in block edge order

  std::uint32_t distance(std::size_t from, std::size_t to) const {
    return between[from * attachments.size() + to];
  }
  /// Flattened profile vector used for domination.
  std::vector<std::uint32_t> key() const;
};

/// All Pareto-minimal profiles over strong orientations of `block`. Identical
/// profiles are reported once (first witness kept).
std::vector<BlockProfile> block_profiles(const MultiGraph& block, std::span<const Vertex> attachments,
                                         const ExactOptions& options = {});

/// Exact oriented diameter by choosing one profile per block over the
/// block-cut tree. Distances between vertices of different blocks are sums
/// of in-block distances through the cut vertices on the tree path.
OrientationCertificate oriented_diameter_decomposed(const MultiGraph& g,
                                                    const ExactOptions& options = {});

using StrongOrientationVisitor =
    std::function<void(const std::vector<bool>& reversed, const DistanceMatrix& dist)>;

/// Calls `visit` for every strong orientation of `g` (no symmetry reduction).
/// Returns the number of strong orientations visited.
std::uint64_t for_each_strong_orientation(const MultiGraph& g, const StrongOrientationVisitor& visit,
                                          const ExactOptions& options = {});

}  // namespace orientdia
