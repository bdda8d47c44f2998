#include <random>

#include "orientdia/errors.hpp"
#include "orientdia/orient.hpp"

namespace orientdia {

namespace {

using Tournament = std::vector<std::vector<bool>>;  // beats[i][j]: arc i -> j

Tournament circulant(std::size_t n) {
  Tournament t(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 1; j <= (n - 1) / 2; ++j) t[i][(i + j) % n] = true;
  }
  return t;
}

Digraph to_digraph(const Tournament& t) {
  const std::size_t n = t.size();
  std::vector<Arc> arcs;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) arcs.push_back(t[i][j] ? Arc{i, j} : Arc{j, i});
  }
  return Digraph(n, std::move(arcs));
}

bool has_diameter_two(const Tournament& t) {
  const Hops d = diameter(to_digraph(t));
  return d.is_finite() && d.value() <= 2;
}

}  // namespace

Digraph complete_orientation(std::size_t n, std::optional<Vertex> special, std::uint64_t seed) {
  if (n < 3) throw InputError("complete orientation needs n >= 3, got " + std::to_string(n));
  if (special && *special >= n) throw InputError("special vertex out of range");

  if (n == 4) {
    // Diameter 3 with ecc(0) = 2; relabel so the special vertex plays 0.
    const Vertex s = special.value_or(0);
    auto label = [s](Vertex v) -> Vertex { return v == 0 ? s : v == s ? 0 : v; };
    Tournament t(4, std::vector<bool>(4, false));
    constexpr Vertex kArcs[6][2] = {{0, 1}, {0, 2}, {3, 0}, {1, 2}, {2, 3}, {1, 3}};
    for (const auto& a : kArcs) t[label(a[0])][label(a[1])] = true;
    return to_digraph(t);
  }

  if (n % 2 == 1) return to_digraph(circulant(n));

  // Even n: extend the circulant on n-1 vertices by a vertex beating the even
  // residues 0, 2, ..., n-4 and losing to the rest.
  Tournament t(n, std::vector<bool>(n, false));
  const Tournament base = circulant(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = 0; j + 1 < n; ++j) t[i][j] = base[i][j];
  }
  const std::size_t w = n - 1;
  for (std::size_t r = 0; r + 1 < n; ++r) {
    const bool out = r % 2 == 0 && r + 3 < n;
    t[w][r] = out;
    t[r][w] = !out;
  }
  if (has_diameter_two(t)) return to_digraph(t);

  std::mt19937_64 rng(seed);
  for (;;) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const bool fwd = (rng() & 1) != 0;
        t[i][j] = fwd;
        t[j][i] = !fwd;
      }
    }
    if (has_diameter_two(t)) return to_digraph(t);
  }
}

}  // namespace orientdia
