#include <doctest.h>

#include <string>
#include <vector>

#include "orientdia/orientdia.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  od_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("graph handles") {
  const uint32_t ends[] = {0, 1, 1, 2, 2, 0};
  od_graph* g = nullptr;
  REQUIRE(od_graph_create(3, 3, ends, &g) == OD_OK);
  CHECK(od_graph_vertex_count(g) == 3);
  CHECK(od_graph_edge_count(g) == 3);
  char* text = nullptr;
  REQUIRE(od_graph_to_edge_list(g, &text) == OD_OK);
  CHECK(take(text) == "3 3\n0 1\n1 2\n2 0\n");
  od_graph_free(g);

  od_graph* bad = nullptr;
  CHECK(od_graph_parse("3 1\nx y z\n", &bad) == OD_ERR_INPUT);
  CHECK(bad == nullptr);
  CHECK(std::string(od_last_error()).find("line 2") != std::string::npos);
  CHECK(od_graph_load("/nonexistent/graph.txt", &bad) == OD_ERR_INPUT);
  const uint32_t loop[] = {1, 1};
  CHECK(od_graph_create(2, 1, loop, &bad) == OD_ERR_INPUT);
  CHECK(od_graph_create(2, 1, nullptr, &bad) == OD_ERR_INPUT);
  CHECK(std::string(od_status_name(OD_ERR_INFEASIBLE)) == "infeasible");
}

TEST_CASE("orient and verify through the C API") {
  od_graph* g = nullptr;
  REQUIRE(od_generate(OD_FAMILY_GNP, 12, 5, 0, &g, nullptr) == OD_OK);
  od_strategy strategy;
  REQUIRE(od_strategy_parse("theorem1", &strategy) == OD_OK);
  od_digraph* d = nullptr;
  char* report = nullptr;
  REQUIRE(od_orient(g, strategy, &d, &report) == OD_OK);
  CHECK(take(report).find("\"satisfied\":true") != std::string::npos);
  uint32_t dia = 0;
  int inf = 1;
  REQUIRE(od_digraph_diameter(d, &dia, &inf) == OD_OK);
  CHECK(inf == 0);
  CHECK(dia <= 10);

  std::vector<uint32_t> tails(od_digraph_arc_count(d)), heads(tails.size());
  REQUIRE(od_digraph_arcs(d, tails.data(), heads.data()) == OD_OK);
  CHECK(tails.size() == od_graph_edge_count(g));

  int ok = 0;
  char* verdict = nullptr;
  REQUIRE(od_verify(g, d, "theorem1", &ok, &verdict) == OD_OK);
  CHECK(ok == 1);
  CHECK(take(verdict).find("\"ok\":true") != std::string::npos);

  char* dot = nullptr;
  REQUIRE(od_digraph_to_dot(d, &dot) == OD_OK);
  CHECK(take(dot).rfind("digraph {", 0) == 0);
  od_digraph_free(d);
  od_graph_free(g);

  CHECK(od_strategy_parse("greedy", &strategy) == OD_ERR_INPUT);
}

TEST_CASE("infeasible and exact") {
  od_graph* bridged = nullptr;
  REQUIRE(od_graph_parse("4 4\n0 1\n1 2\n2 0\n2 3\n", &bridged) == OD_OK);
  od_digraph* d = nullptr;
  CHECK(od_orient(bridged, OD_STRATEGY_ROBBINS, &d, nullptr) == OD_ERR_INFEASIBLE);
  CHECK(d == nullptr);
  CHECK(od_exact(bridged, OD_EXACT_BRUTE, nullptr, &d, nullptr) == OD_ERR_INFEASIBLE);
  od_graph_free(bridged);

  od_graph* k4 = nullptr;
  REQUIRE(od_graph_parse("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n", &k4) == OD_OK);
  od_exact_options opts;
  od_exact_options_default(&opts);
  opts.threads = 2;
  char* cert = nullptr;
  REQUIRE(od_exact(k4, OD_EXACT_DECOMPOSED, &opts, &d, &cert) == OD_OK);
  CHECK(take(cert).find("\"value\":3") != std::string::npos);
  od_digraph_free(d);
  opts.edge_budget = 3;
  CHECK(od_exact(k4, OD_EXACT_BRUTE, &opts, nullptr, nullptr) == OD_ERR_RESOURCE);
  od_graph_free(k4);
}

TEST_CASE("tournaments, lemma and bounds") {
  od_digraph* t = nullptr;
  REQUIRE(od_complete_orientation(7, -1, 0, &t) == OD_OK);
  uint32_t dia = 0;
  int inf = 0;
  REQUIRE(od_digraph_diameter(t, &dia, &inf) == OD_OK);
  CHECK(dia == 2);
  od_digraph_free(t);
  CHECK(od_complete_orientation(2, -1, 0, &t) == OD_ERR_INPUT);

  od_graph* bow = nullptr;
  REQUIRE(od_graph_parse("5 6\n0 1\n1 2\n2 0\n0 3\n3 4\n4 0\n", &bow) == OD_OK);
  od_digraph* l = nullptr;
  REQUIRE(od_lemma1_orientation(bow, 1, 3, &l) == OD_OK);
  od_digraph_free(l);
  CHECK(od_lemma1_orientation(bow, 1, 2, &l) == OD_ERR_INPUT);

  char* json = nullptr;
  REQUIRE(od_decompose_json(bow, &json) == OD_OK);
  CHECK(take(json).find("\"cut_vertices\":[0]") != std::string::npos);
  REQUIRE(od_graph_bounds_json(bow, &json) == OD_OK);
  CHECK(take(json).find("\"theorem1\":4") != std::string::npos);
  od_graph_free(bow);

  REQUIRE(od_bounds_json(12, 5, 4, &json) == OD_OK);
  CHECK(take(json).find("\"blockgraph\":9") != std::string::npos);
  CHECK(od_bounds_json(12, 5, 5, &json) == OD_ERR_INPUT);

  od_digraph* parsed = nullptr;
  REQUIRE(od_digraph_parse("3 3\n0 1\n1 2\n2 0\n", &parsed) == OD_OK);
  char* arcs = nullptr;
  REQUIRE(od_digraph_to_arc_list(parsed, &arcs) == OD_OK);
  CHECK(take(arcs) == "3 3\n0 1\n1 2\n2 0\n");
  od_digraph_free(parsed);
}
