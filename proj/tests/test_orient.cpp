#include <doctest.h>

#include <algorithm>

#include "oracle.hpp"
#include "orientdia/bounds.hpp"
#include "orientdia/decomposition.hpp"
#include "orientdia/errors.hpp"
#include "orientdia/exact.hpp"
#include "orientdia/families.hpp"
#include "orientdia/orient.hpp"
#include "support.hpp"

using namespace orientdia;
using testing::graph;

namespace {

std::uint32_t dist(const Digraph& d, Vertex a, Vertex b) {
  const Hops h = bfs_distances(d, a)[b];
  REQUIRE(h.is_finite());
  return h.value();
}

// Oracle: least max(d(x,z), d(z,x)) over all strong orientations.
int best_pair_distance(const MultiGraph& g, Vertex x, Vertex z) {
  int best = oracle::kInf;
  oracle::for_each_strong(g.vertex_count(), g.edges(), [&](std::uint64_t, const oracle::Matrix& d) {
    best = std::min(best, std::max(d[x][z], d[z][x]));
  });
  return best;
}

MultiGraph two_squares() {
  // Two 4-cycles sharing vertex 0; 2 and 5 are antipodal to it.
  return graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 5}, {5, 6}, {6, 0}});
}

}  // namespace

TEST_CASE("robbins orientation") {
  auto c4 = robbins_orientation(testing::cycle(4));
  CHECK(is_strongly_connected(c4));
  CHECK(diameter(c4).value() == 3);
  auto k4 = robbins_orientation(testing::complete(4));
  CHECK(is_strongly_connected(k4));
  CHECK(diameter(k4).value() <= 3);

  auto th = testing::theta();
  CHECK(oracle::oriented_diameter(th.vertex_count(), th.edges()) < oracle::kInf);
  auto d = robbins_orientation(th);
  CHECK(is_orientation_of(d, th));
  CHECK(diameter(d).value() <= 4);

  CHECK_THROWS_AS(robbins_orientation(graph(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}})), InfeasibleError);
}

TEST_CASE("extend orientation") {
  PartialOrientation free_c3(testing::cycle(3));
  auto tri = extend_orientation(free_c3);
  CHECK(is_strongly_connected(tri));

  PartialOrientation c4(testing::cycle(4));
  c4.assign(2, 3, 2);
  auto d = extend_orientation(c4);
  CHECK(is_strongly_connected(d));
  CHECK(d.arcs()[2].tail == 3);
  CHECK(d.arcs()[0].tail == 1);

  // Cross-block path arcs on the bowtie for x = 1, z = 3, y = 0.
  PartialOrientation bow(testing::bowtie());
  bow.assign(0, 1, 0);  // x -> y along the short path
  bow.assign(2, 0, 2);  // y -> 2 -> x
  bow.assign(1, 2, 1);
  bow.assign(3, 3, 0);  // z -> y
  bow.assign(5, 0, 4);  // y -> 4 -> z
  bow.assign(4, 4, 3);
  CHECK(is_strongly_connected(extend_orientation(bow)));

  PartialOrientation bad(testing::cycle(3));
  bad.assign(0, 0, 1);
  bad.assign(1, 2, 1);
  CHECK_THROWS_AS(extend_orientation(bad), ContractViolation);
  CHECK_THROWS_AS(bad.assign(0, 1, 0), InputError);
  CHECK_THROWS_AS(bad.assign(2, 0, 1), InputError);
}

TEST_CASE("extension keeps every fixed arc") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto g = gen_random_bridgeless(10, 2, seed);
    const Digraph target = robbins_orientation(g);
    PartialOrientation partial(g);
    for (EdgeId e = 0; e < g.edge_count(); e += 2) {
      partial.assign(e, target.arcs()[e].tail, target.arcs()[e].head);
    }
    auto d = extend_orientation(partial);
    CHECK(is_strongly_connected(d));
    for (EdgeId e = 0; e < g.edge_count(); e += 2) CHECK(d.arcs()[e] == target.arcs()[e]);
  }
}

TEST_CASE("two disjoint paths") {
  auto tri = two_disjoint_paths(testing::complete(3), 0, 2);
  CHECK(tri.shorter == std::vector<Vertex>{0, 2});
  CHECK(tri.longer == std::vector<Vertex>{0, 1, 2});
  CHECK(tri.vertex_disjoint);

  auto c5 = two_disjoint_paths(testing::cycle(5), 0, 1);
  CHECK(c5.shorter_length() == 1);
  CHECK(c5.longer_length() == 4);

  auto k4 = two_disjoint_paths(testing::complete(4), 1, 3);
  CHECK(k4.shorter_length() == 1);
  CHECK(k4.longer_length() == 2);

  // Across a cut vertex only edge-disjoint paths exist.
  auto bow = two_disjoint_paths(testing::bowtie(), 1, 3);
  CHECK_FALSE(bow.vertex_disjoint);
  CHECK(bow.shorter_length() == 2);

  CHECK_THROWS_AS(two_disjoint_paths(graph(3, {{0, 1}, {1, 2}}), 0, 2), InputError);
  CHECK_THROWS_AS(two_disjoint_paths(testing::complete(3), 1, 1), InputError);
}

TEST_CASE("disjoint paths respect the length bounds") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto g = gen_random_bridgeless(9, 1, seed);
    for (Vertex y = 1; y < g.vertex_count(); ++y) {
      auto pp = two_disjoint_paths(g, 0, y);
      CHECK(pp.vertex_disjoint);
      CHECK(pp.shorter_length() <= pp.longer_length());
      CHECK(pp.shorter_length() + pp.longer_length() <= g.vertex_count());
      std::vector<EdgeId> all = pp.shorter_edges;
      all.insert(all.end(), pp.longer_edges.begin(), pp.longer_edges.end());
      std::sort(all.begin(), all.end());
      CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
    }
  }
}

TEST_CASE("lemma one orientation") {
  auto bow = testing::bowtie();
  CHECK(best_pair_distance(bow, 1, 3) == 3);
  auto d = lemma1_orientation(bow, 1, 3);
  CHECK(is_strongly_connected(d));
  CHECK(dist(d, 1, 3) <= 3);
  CHECK(dist(d, 3, 1) <= 3);

  auto sq = two_squares();
  CHECK(best_pair_distance(sq, 2, 5) <= 5);
  auto e = lemma1_orientation(sq, 2, 5);
  CHECK(dist(e, 2, 5) <= 5);
  CHECK(dist(e, 5, 2) <= 5);

  auto g73 = gen_gnp_extremal(7, 3).graph;
  CHECK(best_pair_distance(g73, 0, 2) <= 5);
  auto f = lemma1_orientation(g73, 0, 2);
  CHECK(dist(f, 0, 2) <= 5);
  CHECK(dist(f, 2, 0) <= 5);

  CHECK_THROWS_AS(lemma1_orientation(bow, 1, 2), InputError);
  CHECK_THROWS_AS(lemma1_orientation(bow, 0, 3), InputError);
  CHECK_THROWS_AS(lemma1_orientation(graph(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}}), 0, 3), InfeasibleError);
}

TEST_CASE("complete orientations") {
  auto t3 = complete_orientation(3);
  CHECK(diameter(t3).value() == 2);
  for (Vertex s = 0; s < 4; ++s) {
    auto k4 = complete_orientation(4, s);
    CHECK(diameter(k4).value() == 3);
    CHECK(eccentricities(k4, s).ecc == 2);
    CHECK(is_orientation_of(k4, testing::complete(4)));
  }
  auto t5 = complete_orientation(5);
  const std::vector<Arc> circulant{{0, 1}, {0, 2}, {3, 0}, {4, 0}, {1, 2}, {1, 3}, {4, 1}, {2, 3}, {2, 4}, {3, 4}};
  CHECK(t5.arcs() == circulant);
  for (std::size_t n = 3; n <= 16; ++n) {
    if (n == 4) continue;
    auto t = complete_orientation(n);
    CHECK(is_orientation_of(t, testing::complete(n)));
    CHECK(diameter(t).value() == 2);
  }
  CHECK_THROWS_AS(complete_orientation(2), InputError);
  CHECK_THROWS_AS(complete_orientation(5, 5), InputError);
}

TEST_CASE("tree extension bounds") {
  CHECK(tree_extension_bounds(2, 2) == std::pair<std::uint32_t, std::uint32_t>{2, 3});
  CHECK(tree_extension_bounds(1, 3) == std::pair<std::uint32_t, std::uint32_t>{0, 2});
  CHECK(tree_extension_bounds(3, 2).first == 3);
  CHECK(tree_extension_bounds(3, 2).second == 4);
  CHECK(tree_extension_bounds(4, 1) == std::pair<std::uint32_t, std::uint32_t>{3, 3});
}

TEST_CASE("tree extension orientation") {
  // T = edge uv, one T-path u,w,v.
  {
    auto h = graph(3, {{0, 1}, {0, 2}, {2, 1}});
    TreeExtension ext{h, {0, 1}, {0}, {{{0, 2, 1}, {1, 2}}}, 2};
    auto r = tree_extension_orientation(ext);
    CHECK(is_strongly_connected(r.orientation));
    CHECK(r.tree_pair_max <= 2);
    CHECK(r.included_edges.size() == 3);
  }
  // T = single vertex, one T-cycle of length 3.
  {
    auto h = testing::cycle(3);
    TreeExtension ext{h, {0}, {}, {{{0, 1, 2, 0}, {0, 1, 2}}}, 3};
    auto r = tree_extension_orientation(ext);
    CHECK(r.all_pair_bound == 2);
    CHECK(r.all_pair_max == 2);
  }
  // T = path u-v-w with T-paths u,x,v and v,y,w.
  {
    auto h = graph(5, {{0, 1}, {1, 2}, {0, 3}, {3, 1}, {1, 4}, {4, 2}});
    TreeExtension ext{h, {0, 1, 2}, {0, 1}, {{{0, 3, 1}, {2, 3}}, {{1, 4, 2}, {4, 5}}}, 2};
    int best = oracle::kInf;
    oracle::for_each_strong(5, h.edges(), [&](std::uint64_t, const oracle::Matrix& d) {
      int worst = 0;
      for (int a : {0, 1, 2}) {
        for (int b : {0, 1, 2}) worst = std::max(worst, d[a][b]);
      }
      best = std::min(best, worst);
    });
    CHECK(best <= 3);
    auto r = tree_extension_orientation(ext);
    CHECK(r.tree_pair_bound == 3);
    CHECK(r.tree_pair_max <= 3);
    CHECK(r.all_pair_max <= r.all_pair_bound);
  }
}

TEST_CASE("tree extension rejects malformed input") {
  auto h = graph(3, {{0, 1}, {0, 2}, {2, 1}});
  CHECK_THROWS_AS(tree_extension_orientation({h, {0, 1}, {0}, {{{0, 2, 1}, {1, 2}}}, 1}), InputError);
  CHECK_THROWS_AS(tree_extension_orientation({h, {0, 1}, {0}, {}, 2}), InputError);
  CHECK_THROWS_AS(tree_extension_orientation({h, {0, 1}, {}, {}, 2}), InputError);
  CHECK_THROWS_AS(tree_extension_orientation({h, {0, 1, 2}, {0, 1}, {}, 2}), InputError);
}

TEST_CASE("theorem one orientation") {
  auto g12 = theorem1_orientation(gen_gnp_extremal(12, 5).graph);
  CHECK(g12.report.satisfied);
  CHECK(g12.report.diameter.value() <= 10);
  CHECK(g12.report.bound == 10);
  CHECK(!g12.report.case_trace.empty());

  auto k6 = theorem1_orientation(testing::complete(6));
  CHECK(k6.report.bound == 6);
  CHECK(k6.report.diameter.value() <= 5);
  CHECK(oriented_diameter_bruteforce(testing::complete(6)).value.value() == 2);

  auto g73 = gen_gnp_extremal(7, 3).graph;
  auto r73 = theorem1_orientation(g73);
  CHECK(r73.report.diameter.value() == 6);
  CHECK(oracle::oriented_diameter(7, g73.edges()) == 6);

  CHECK_THROWS_AS(theorem1_orientation(graph(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}})), InfeasibleError);
}

TEST_CASE("theorem one case one routes through the shared cut vertex") {
  // Four triangles at vertex 0 plus one more block on a branch.
  auto g = graph(11, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}, {0, 5}, {5, 6}, {6, 0},
                      {0, 7}, {7, 8}, {8, 0}, {8, 9}, {9, 10}, {10, 8}});
  auto r = theorem1_orientation(g);
  CHECK(r.report.case_trace.front().rfind("0:case1(v=0)", 0) == 0);
  CHECK(r.report.satisfied);
  const auto all = all_pairs_distances(r.orientation);
  auto branch = [](Vertex v) { return v == 0 ? 0 : v <= 2 ? 1 : v <= 4 ? 2 : v <= 6 ? 3 : 4; };
  for (Vertex a = 1; a < 11; ++a) {
    for (Vertex b = 1; b < 11; ++b) {
      if (branch(a) == branch(b)) continue;
      CHECK(all.at(a, b) == all.at(a, 0) + all.at(0, b));
    }
  }
}

TEST_CASE("theorem one on random graphs") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const std::size_t p = 1 + seed % 5;
    auto g = gen_random_bridgeless(2 * p + 1 + seed % 5, p, seed);
    auto r = theorem1_orientation(g);
    CHECK(is_orientation_of(r.orientation, g));
    CHECK(r.report.satisfied);
    CHECK(r.report.diameter.value() <= theorem1_bound(g.vertex_count(), p));
    CHECK(r.report.diameter.value() + 1 <= g.vertex_count());
  }
}

TEST_CASE("block graph orientation") {
  auto b12 = blockgraph_orientation(gen_block_extremal(12).graph);
  CHECK(b12.report.bound == 9);
  CHECK(b12.report.diameter.value() <= 9);
  auto k7 = blockgraph_orientation(testing::complete(7));
  CHECK(k7.report.diameter.value() == 2);
  CHECK(k7.report.bound == 6);
  auto b11 = blockgraph_orientation(gen_block_extremal(11).graph);
  CHECK(b11.report.bound == 9);
  CHECK(b11.report.diameter.value() <= 9);

  CHECK_THROWS_AS(blockgraph_orientation(testing::cycle(5)), InputError);
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    auto g = gen_random_block_graph(3 + seed % 14, seed);
    auto r = blockgraph_orientation(g);
    CHECK(is_orientation_of(r.orientation, g));
    CHECK(r.report.satisfied);
  }
}

TEST_CASE("report fields") {
  auto r = robbins_strategy(testing::cycle(5));
  CHECK(r.report.strategy == "robbins");
  CHECK(r.report.bound == 4);
  CHECK(r.report.diameter.value() == 4);
  REQUIRE(r.report.witness_pair);
  CHECK(all_pairs_distances(r.orientation).at(r.report.witness_pair->first, r.report.witness_pair->second) ==
        r.report.diameter);
}
