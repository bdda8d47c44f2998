#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracle.hpp"
#include "orientdia/decomposition.hpp"
#include "orientdia/errors.hpp"
#include "orientdia/families.hpp"
#include "support.hpp"

using namespace orientdia;
using testing::graph;

namespace {

MultiGraph three_triangles_at_zero() {
  return graph(7, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}, {0, 5}, {5, 6}, {6, 0}});
}

}  // namespace

TEST_CASE("decompose small graphs") {
  auto tri = decompose(testing::complete(3));
  CHECK(tri.block_count() == 1);
  CHECK(tri.cut_vertex_count() == 0);
  CHECK(tri.blocks.front() == std::vector<Vertex>{0, 1, 2});

  auto g73 = decompose(gen_gnp_extremal(7, 3).graph);
  CHECK(g73.block_count() == 3);
  CHECK(g73.cut_vertex_count() == 2);

  auto bow = decompose(testing::bowtie());
  CHECK(bow.block_count() == 2);
  CHECK(bow.cut_vertices == std::vector<Vertex>{0});
  CHECK(bow.bridges.empty());
  CHECK(bow.end_blocks.size() == 2);

  auto single = decompose(MultiGraph(1, {}));
  CHECK(single.block_count() == 1);

  CHECK_THROWS_AS(decompose(graph(4, {{0, 1}, {2, 3}})), InputError);
  CHECK_THROWS_AS(decompose(MultiGraph(0, {})), InputError);
}

TEST_CASE("bridges are two-vertex blocks") {
  auto g = graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {3, 4}});
  auto dec = decompose(g);
  CHECK(dec.bridges == std::vector<EdgeId>{4});
  CHECK(dec.block_count() == 2);
  CHECK_FALSE(is_bridgeless(g));
  CHECK(is_bridgeless(testing::cycle(4)));
}

TEST_CASE("parallel edges are not bridges") {
  auto g = graph(3, {{0, 1}, {0, 1}, {1, 2}, {1, 2}});
  auto dec = decompose(g);
  CHECK(dec.bridges.empty());
  CHECK(dec.block_count() == 2);
  CHECK(dec.cut_vertices == std::vector<Vertex>{1});
}

TEST_CASE("decomposition agrees with the naive oracle") {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 300; ++round) {
    auto g = testing::random_connected(2 + rng() % 11, rng() % 12, rng);
    auto dec = decompose(g);
    const std::size_t n = g.vertex_count();
    CHECK(dec.cut_vertices == oracle::cut_vertices(n, g.edges()));
    const auto br = oracle::bridges(n, g.edges());
    CHECK(std::vector<std::size_t>(dec.bridges.begin(), dec.bridges.end()) == br);
    CHECK(dec.block_count() == oracle::block_count(n, g.edges()));

    // Every edge in exactly one block; blocks meet only in cut vertices.
    std::vector<int> seen(g.edge_count(), 0);
    for (const auto& es : dec.block_edges) {
      for (EdgeId e : es) ++seen[e];
    }
    CHECK(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));
    std::size_t total = 0;
    for (BlockId a = 0; a < dec.block_count(); ++a) {
      total += dec.blocks[a].size();
      CHECK(std::is_sorted(dec.blocks[a].begin(), dec.blocks[a].end()));
      for (BlockId b = a + 1; b < dec.block_count(); ++b) {
        std::vector<Vertex> common;
        std::set_intersection(dec.blocks[a].begin(), dec.blocks[a].end(), dec.blocks[b].begin(),
                              dec.blocks[b].end(), std::back_inserter(common));
        CHECK(common.size() <= 1);
        if (common.size() == 1) CHECK(dec.is_cut_vertex(common.front()));
      }
    }
    std::size_t extra = 0;
    for (Vertex c : dec.cut_vertices) extra += dec.blocks_of_vertex[c].size() - 1;
    CHECK(total == n + extra);
    for (BlockId b = 0; b < dec.block_count(); ++b) {
      const bool end = std::find(dec.end_blocks.begin(), dec.end_blocks.end(), b) != dec.end_blocks.end();
      CHECK(end == (dec.cut_vertices_of(b).size() == 1));
    }
  }
}

TEST_CASE("decomposition is deterministic") {
  auto g = gen_random_bridgeless(14, 4, 3);
  auto a = decompose(g);
  auto b = decompose(g);
  CHECK(a.blocks == b.blocks);
  CHECK(a.block_of_edge == b.block_of_edge);
}

TEST_CASE("branches") {
  auto bow = branches_at(testing::bowtie(), 0);
  REQUIRE(bow.size() == 2);
  CHECK(bow[0].vertex_to_parent == std::vector<Vertex>{0, 1, 2});
  CHECK(bow[1].vertex_to_parent == std::vector<Vertex>{0, 3, 4});

  // G_{7,3} at a_1: the first triangle and the two triangles beyond a_1.
  auto g73 = gen_gnp_extremal(7, 3).graph;
  auto br = branches_at(g73, 1);
  REQUIRE(br.size() == 2);
  std::vector<std::size_t> sizes{br[0].graph.vertex_count(), br[1].graph.vertex_count()};
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{3, 5});

  // G_{12,5} at a_4: the 9-vertex triangle chain and the cycle.
  auto g12 = gen_gnp_extremal(12, 5).graph;
  auto b12 = branches_at(g12, 4);
  REQUIRE(b12.size() == 2);
  std::vector<std::size_t> s12{b12[0].graph.vertex_count(), b12[1].graph.vertex_count()};
  std::sort(s12.begin(), s12.end());
  CHECK(s12 == std::vector<std::size_t>{4, 9});
  CHECK(decompose(b12[0].graph.vertex_count() == 9 ? b12[0].graph : b12[1].graph).block_count() == 4);

  CHECK_THROWS_AS(branches_at(testing::cycle(5), 0), InputError);
}

TEST_CASE("branches partition the graph") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto g = gen_random_bridgeless(13, 4, seed);
    auto dec = decompose(g);
    for (Vertex c : dec.cut_vertices) {
      auto br = branches_at(g, c);
      CHECK(br.size() == dec.blocks_of_vertex[c].size());
      std::size_t vertices = 0, edges = 0;
      for (const auto& b : br) {
        vertices += b.graph.vertex_count() - 1;
        edges += b.graph.edge_count();
        CHECK(std::count(b.vertex_to_parent.begin(), b.vertex_to_parent.end(), c) == 1);
      }
      CHECK(vertices + 1 == g.vertex_count());
      CHECK(edges == g.edge_count());
    }
  }
}

TEST_CASE("block graph") {
  auto path = block_graph(decompose(gen_gnp_extremal(7, 3).graph));
  CHECK(path.vertex_count() == 3);
  CHECK(path.edge_count() == 2);
  auto one = block_graph(decompose(testing::complete(5)));
  CHECK(one.vertex_count() == 1);
  CHECK(one.edge_count() == 0);
  auto tri = block_graph(decompose(three_triangles_at_zero()));
  CHECK(tri.vertex_count() == 3);
  CHECK(tri.edge_count() == 3);
}

TEST_CASE("block graph tree check") {
  for (std::size_t p = 2; p <= 5; ++p) CHECK(block_graph_is_tree(gen_gnp_extremal(2 * p + 3, p).graph).is_tree);
  auto star = block_graph_is_tree(three_triangles_at_zero());
  CHECK_FALSE(star.is_tree);
  REQUIRE(star.witness);
  CHECK(*star.witness == 0);
  CHECK(block_graph_is_tree(testing::complete(4)).is_tree);

  // When the check passes, B(G) has p - 1 edges and is acyclic.
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto g = gen_random_bridgeless(15, 5, seed);
    if (!block_graph_is_tree(g).is_tree) continue;
    auto bg = block_graph(decompose(g));
    CHECK(bg.edge_count() + 1 == bg.vertex_count());
    CHECK(is_connected(bg));
  }
}

TEST_CASE("leaf lower bound") {
  auto p3 = leaf_lower_bound(graph(3, {{0, 1}, {1, 2}}));
  CHECK(p3.leaf_count == 2);
  CHECK(p3.bound == 2);
  CHECK(p3.holds);
  auto star = leaf_lower_bound(graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}));
  CHECK(star.leaf_count == 4);
  CHECK(star.holds);
  auto spider = leaf_lower_bound(graph(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}}));
  CHECK(spider.leaf_count == 3);
  CHECK(spider.bound == 3);
  CHECK(spider.holds);

  CHECK_THROWS_AS(leaf_lower_bound(graph(4, {{0, 1}, {1, 2}, {2, 3}})), InputError);
  CHECK_THROWS_AS(leaf_lower_bound(testing::cycle(3)), InputError);
  CHECK_THROWS_AS(leaf_lower_bound(MultiGraph(1, {})), InputError);
}

TEST_CASE("structural inequalities") {
  auto g73 = structural_inequalities(decompose(gen_gnp_extremal(7, 3).graph), true);
  CHECK(g73.all_hold());
  CHECK(g73.checks.front().name == "n >= 2p+1");
  CHECK(g73.checks.front().slack == 0);

  auto k5 = structural_inequalities(decompose(testing::complete(5)), true);
  CHECK(k5.s == 0);
  CHECK(k5.all_hold());

  auto g12 = structural_inequalities(decompose(gen_gnp_extremal(12, 5).graph), true);
  CHECK(g12.p == 5);
  CHECK(g12.s == 4);
  CHECK(g12.checks[0].slack == 1);
  CHECK(g12.checks[1].slack == 1);

  auto bridged = graph(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}});
  CHECK_THROWS_AS(structural_inequalities(decompose(bridged), true), InputError);
}

TEST_CASE("block graph predicate") {
  CHECK(is_block_graph(gen_block_extremal(12).graph));
  CHECK_FALSE(is_block_graph(testing::cycle(5)));
  CHECK(is_block_graph(testing::bowtie()));
  CHECK_FALSE(is_block_graph(gen_gnp_extremal(12, 5).graph));
}

TEST_CASE("removing an end block's interior drops one block") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto g = gen_random_bridgeless(14, 4, seed);
    auto dec = decompose(g);
    const BlockId end = dec.end_blocks.front();
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      const auto& blk = dec.blocks[end];
      const bool interior = std::binary_search(blk.begin(), blk.end(), v) && !dec.is_cut_vertex(v);
      if (!interior) keep.push_back(v);
    }
    auto rest = induced_subgraph(g, keep);
    CHECK(decompose(rest.graph).block_count() + 1 == dec.block_count());
  }
}
