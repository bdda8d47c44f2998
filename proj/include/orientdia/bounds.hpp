#pragma once

#include <cstddef>
#include <cstdint>

namespace orientdia {

/// Closed-form upper bounds on the oriented diameter.
struct BoundSet {
  std::size_t n = 0;
  std::size_t p = 0;
  std::size_t s = 0;
  std::uint32_t theorem1 = 0;    // n - floor(p/2), bridgeless graph with p blocks
  std::uint32_t corollary = 0;   // n - floor((s+1)/2), bridgeless graph with s cut vertices
  std::uint32_t blockgraph = 0;  // floor(3n/4) for even n, floor(3(n+1)/4) for odd n
};

std::uint32_t theorem1_bound(std::size_t n, std::size_t p);
std::uint32_t corollary_bound(std::size_t n, std::size_t s);
std::uint32_t blockgraph_bound(std::size_t n);

/// Requires n >= 1, p >= 1 and s <= p - 1 (InputError otherwise).
BoundSet bounds(std::size_t n, std::size_t p, std::size_t s);

}  // namespace orientdia
