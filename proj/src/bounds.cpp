#include "orientdia/bounds.hpp"

#include <string>

#include "orientdia/errors.hpp"

namespace orientdia {

std::uint32_t theorem1_bound(std::size_t n, std::size_t p) {
  return static_cast<std::uint32_t>(n - p / 2);
}

std::uint32_t corollary_bound(std::size_t n, std::size_t s) {
  return static_cast<std::uint32_t>(n - (s + 1) / 2);
}

std::uint32_t blockgraph_bound(std::size_t n) {
  return static_cast<std::uint32_t>(n % 2 == 0 ? 3 * n / 4 : 3 * (n + 1) / 4);
}

BoundSet bounds(std::size_t n, std::size_t p, std::size_t s) {
  if (n < 1 || p < 1) throw InputError("bounds need n >= 1 and p >= 1");
  if (s + 1 > p) {
    throw InputError("s = " + std::to_string(s) + " exceeds p - 1 = " + std::to_string(p - 1) +
                     ": p blocks have at most p - 1 cut vertices");
  }
  if (p / 2 > n) throw InputError("p too large for n");
  return {n, p, s, theorem1_bound(n, p), corollary_bound(n, s), blockgraph_bound(n)};
}

}  // namespace orientdia
