#include <doctest.h>

#include <algorithm>

#include "oracle.hpp"
#include "orientdia/bounds.hpp"
#include "orientdia/decomposition.hpp"
#include "orientdia/errors.hpp"
#include "orientdia/families.hpp"
#include "support.hpp"

using namespace orientdia;

namespace {

std::size_t max_degree_two_run(const MultiGraph& t) {
  // Longest path of adjacent degree-2 vertices, counted in vertices.
  std::size_t best = 0;
  for (const Edge& e : t.edges()) {
    if (t.degree(e.u) == 2 && t.degree(e.v) == 2) best = 2;
  }
  for (Vertex v = 0; v < t.vertex_count() && best == 0; ++v) {
    if (t.degree(v) == 2) best = 1;
  }
  return best;
}

}  // namespace

TEST_CASE("closed-form bounds") {
  auto a = bounds(12, 5, 4);
  CHECK(a.theorem1 == 10);
  CHECK(a.corollary == 10);
  CHECK(a.blockgraph == 9);
  auto b = bounds(7, 3, 2);
  CHECK(b.theorem1 == 6);
  CHECK(b.corollary == 6);
  CHECK(b.blockgraph == 6);
  auto c = bounds(5, 1, 0);
  CHECK(c.theorem1 == 5);
  CHECK(c.corollary == 5);
  CHECK(c.blockgraph == 4);
  CHECK_THROWS_AS(bounds(12, 5, 5), InputError);
  CHECK_THROWS_AS(bounds(0, 1, 0), InputError);
  CHECK_THROWS_AS(bounds(5, 0, 0), InputError);
  CHECK(blockgraph_bound(11) == 9);
  CHECK(blockgraph_bound(4) == 3);
}

TEST_CASE("counter rng") {
  CounterRng zero(0);
  CHECK(zero.next() == 0xe220a8397b1dcdafULL);
  CounterRng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
  CounterRng c(7);
  for (int i = 0; i < 1000; ++i) CHECK(c.below(6) < 6);
  CHECK(CounterRng(3).split(1).next() != CounterRng(3).split(2).next());
}

TEST_CASE("extremal chain family") {
  for (std::size_t p = 2; p <= 5; ++p) {
    for (std::size_t n = 2 * p + 1; n <= 12; ++n) {
      auto gen = gen_gnp_extremal(n, p);
      const auto& g = gen.graph;
      CHECK(g.vertex_count() == n);
      CHECK(g.edge_count() == 3 * (p - 1) + n - 2 * (p - 1));
      auto dec = decompose(g);
      CHECK(dec.block_count() == p);
      CHECK(dec.cut_vertex_count() == p - 1);
      CHECK(dec.bridges.empty());
      REQUIRE(gen.canonical);
      CHECK(is_orientation_of(*gen.canonical, g));
      CHECK(diameter(*gen.canonical).value() == theorem1_bound(n, p));
    }
  }
  CHECK_THROWS_AS(gen_gnp_extremal(8, 4), InputError);
  CHECK_THROWS_AS(gen_gnp_extremal(5, 1), InputError);
}

TEST_CASE("extremal block graph family") {
  for (std::size_t n = 5; n <= 14; ++n) {
    auto gen = gen_block_extremal(n);
    CHECK(gen.graph.vertex_count() == n);
    CHECK(is_block_graph(gen.graph));
    CHECK(is_bridgeless(gen.graph));
    REQUIRE(gen.canonical);
    CHECK(is_orientation_of(*gen.canonical, gen.graph));
    CHECK(diameter(*gen.canonical).value() == blockgraph_bound(n));
  }
  CHECK_THROWS_AS(gen_block_extremal(4), InputError);
}

TEST_CASE("random bridgeless graphs") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t p = 1 + seed % 6;
    const std::size_t n = 2 * p + 1 + seed % 7;
    auto g = gen_random_bridgeless(n, p, seed);
    CHECK(g.vertex_count() == n);
    CHECK(is_connected(g));
    CHECK(oracle::bridges(n, g.edges()).empty());
    CHECK(oracle::block_count(n, g.edges()) == p);
  }
  auto a = gen_random_bridgeless(14, 4, 9), b = gen_random_bridgeless(14, 4, 9);
  CHECK(a.edges() == b.edges());
  CHECK_THROWS_AS(gen_random_bridgeless(6, 3, 0), InputError);
}

TEST_CASE("random block graphs") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t n = 3 + seed % 16;
    auto g = gen_random_block_graph(n, seed);
    CHECK(g.vertex_count() == n);
    CHECK(is_block_graph(g));
    CHECK(oracle::bridges(n, g.edges()).empty());
  }
  CHECK_THROWS_AS(gen_random_block_graph(2, 0), InputError);
}

TEST_CASE("random subdivided trees") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    auto t = gen_random_subdivided_tree(seed % 6, seed);
    CHECK(is_connected(t));
    CHECK(t.edge_count() + 1 == t.vertex_count());
    CHECK(max_degree_two_run(t) <= 1);
    CHECK(leaf_lower_bound(t).holds);
  }
}

TEST_CASE("family dispatch") {
  CHECK(parse_family("gnp") == Family::gnp_extremal);
  CHECK(parse_family("random-block") == Family::random_block_graph);
  CHECK(parse_family(family_name(Family::block_extremal)) == Family::block_extremal);
  CHECK_THROWS_AS(parse_family("cubes"), InputError);
  auto gen = generate({Family::gnp_extremal, 12, 5, 0});
  CHECK(gen.canonical.has_value());
  auto rnd = generate({Family::random_bridgeless, 10, 3, 4});
  CHECK_FALSE(rnd.canonical.has_value());
  CHECK(rnd.graph.edges() == gen_random_bridgeless(10, 3, 4).edges());
}
