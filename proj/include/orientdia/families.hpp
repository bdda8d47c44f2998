#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "orientdia/graph.hpp"

namespace orientdia {

/// Counter-based SplitMix64 stream: output i depends only on (seed, i), so a
/// corpus is identical on every platform for a given seed.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) noexcept : seed_(seed) {}

  std::uint64_t next() noexcept;
  /// Uniform in [0, bound) by rejection; bound must be positive.
  std::uint64_t below(std::uint64_t bound) noexcept;
  /// Independent stream derived from this one's seed and `stream`.
  CounterRng split(std::uint64_t stream) const noexcept;

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

struct GeneratedGraph {
  MultiGraph graph;
  std::optional<Digraph> canonical;  // orientation attaining the extremal diameter
};

/// G_{n,p}: triangles a_i b_i a_{i+1} along the spine a_0..a_{p-1}, then a
/// cycle of length n - 2(p-1) through a_{p-1}. Labels: a_i = i, b_i = p + i,
/// cycle vertices 2p-1..n-1 in cycle order. Needs p >= 2 and n >= 2p+1.
GeneratedGraph gen_gnp_extremal(std::size_t n, std::size_t p);

/// G'_n: G_{n,(n-1)/2} for odd n; for even n, G_{n,(n-2)/2} with its
/// terminal 4-cycle completed to K_4. Needs n >= 5.
GeneratedGraph gen_block_extremal(std::size_t n);

/// Connected bridgeless graph with exactly p blocks, each grown from a cycle
/// by ears plus a few chords, glued along a random block tree.
MultiGraph gen_random_bridgeless(std::size_t n, std::size_t p, std::uint64_t seed);

/// Tree of cliques of sizes 3 to 5 (mostly 3) on n >= 3 vertices.
MultiGraph gen_random_block_graph(std::size_t n, std::uint64_t seed);

/// Tree whose branching vertices have degree >= 3, with each edge subdivided
/// at most once, so no two degree-2 vertices are adjacent. `growth` counts
/// leaf expansions after the initial K_{1,3}.
MultiGraph gen_random_subdivided_tree(std::size_t growth, std::uint64_t seed);

enum class Family { gnp_extremal, block_extremal, random_bridgeless, random_block_graph };

struct FamilySpec {
  Family family = Family::gnp_extremal;
  std::size_t n = 0;
  std::size_t p = 0;
  std::uint64_t seed = 0;
};

/// Accepts "gnp", "block", "random", "random-block" and the enum spellings.
Family parse_family(std::string_view name);
std::string family_name(Family f);

GeneratedGraph generate(const FamilySpec& spec);

}  // namespace orientdia
