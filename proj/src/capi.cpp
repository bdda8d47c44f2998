#include "orientdia/orientdia.h"

#include <cstring>
#include <new>
#include <string>

#include "internal/report.hpp"
#include "orientdia/bounds.hpp"
#include "orientdia/decomposition.hpp"
#include "orientdia/errors.hpp"
#include "orientdia/exact.hpp"
#include "orientdia/families.hpp"
#include "orientdia/io.hpp"
#include "orientdia/orient.hpp"

struct od_graph {
  orientdia::MultiGraph value;
};

struct od_digraph {
  orientdia::Digraph value;
};

namespace {

thread_local std::string last_error;

od_status status_of(orientdia::ErrorKind kind) {
  switch (kind) {
    case orientdia::ErrorKind::input: return OD_ERR_INPUT;
    case orientdia::ErrorKind::infeasible: return OD_ERR_INFEASIBLE;
    case orientdia::ErrorKind::contract_violation: return OD_ERR_CONTRACT;
    case orientdia::ErrorKind::resource: return OD_ERR_RESOURCE;
  }
  return OD_ERR_INTERNAL;
}

template <typename F>
od_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return OD_OK;
  } catch (const orientdia::Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return OD_ERR_RESOURCE;
  } catch (const std::exception& e) {
    last_error = e.what();
    return OD_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw orientdia::InputError(std::string(what) + " is null");
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(char** out, const std::string& s) {
  if (out != nullptr) *out = copy_string(s);
}

void emit(od_digraph** out, orientdia::Digraph d) {
  if (out != nullptr) *out = new od_digraph{std::move(d)};
}

}  // namespace

extern "C" {

const char* od_last_error(void) { return last_error.c_str(); }

const char* od_status_name(od_status status) {
  switch (status) {
    case OD_OK: return "ok";
    case OD_ERR_INPUT: return "input error";
    case OD_ERR_INFEASIBLE: return "infeasible";
    case OD_ERR_CONTRACT: return "contract violation";
    case OD_ERR_RESOURCE: return "resource limit";
    case OD_ERR_INTERNAL: return "internal error";
  }
  return "unknown";
}

void od_string_free(char* s) { delete[] s; }

od_status od_graph_create(size_t n, size_t m, const uint32_t* endpoints, od_graph** out) {
  return guarded([&] {
    require(out, "output handle");
    if (m > 0) require(endpoints, "endpoints");
    std::vector<orientdia::Edge> edges;
    edges.reserve(m);
    for (size_t i = 0; i < m; ++i) edges.push_back({endpoints[2 * i], endpoints[2 * i + 1]});
    *out = new od_graph{orientdia::MultiGraph(n, std::move(edges))};
  });
}

od_status od_graph_parse(const char* text, od_graph** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "output handle");
    *out = new od_graph{orientdia::parse_edge_list(text)};
  });
}

od_status od_graph_load(const char* path, od_graph** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "output handle");
    *out = new od_graph{orientdia::load_edge_list(path)};
  });
}

void od_graph_free(od_graph* g) { delete g; }

size_t od_graph_vertex_count(const od_graph* g) { return g ? g->value.vertex_count() : 0; }
size_t od_graph_edge_count(const od_graph* g) { return g ? g->value.edge_count() : 0; }

od_status od_graph_to_edge_list(const od_graph* g, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "output string");
    emit(out, orientdia::to_edge_list(g->value));
  });
}

od_status od_digraph_parse(const char* text, od_digraph** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "output handle");
    emit(out, orientdia::parse_arc_list(text));
  });
}

od_status od_digraph_load(const char* path, od_digraph** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "output handle");
    emit(out, orientdia::load_arc_list(path));
  });
}

void od_digraph_free(od_digraph* d) { delete d; }

size_t od_digraph_vertex_count(const od_digraph* d) { return d ? d->value.vertex_count() : 0; }
size_t od_digraph_arc_count(const od_digraph* d) { return d ? d->value.arc_count() : 0; }

od_status od_digraph_arcs(const od_digraph* d, uint32_t* tails, uint32_t* heads) {
  return guarded([&] {
    require(d, "digraph");
    if (d->value.arc_count() == 0) return;
    require(tails, "tails");
    require(heads, "heads");
    const auto& arcs = d->value.arcs();
    for (size_t i = 0; i < arcs.size(); ++i) {
      tails[i] = arcs[i].tail;
      heads[i] = arcs[i].head;
    }
  });
}

od_status od_digraph_to_arc_list(const od_digraph* d, char** out) {
  return guarded([&] {
    require(d, "digraph");
    require(out, "output string");
    emit(out, orientdia::to_arc_list(d->value));
  });
}

od_status od_digraph_to_dot(const od_digraph* d, char** out) {
  return guarded([&] {
    require(d, "digraph");
    require(out, "output string");
    emit(out, orientdia::to_dot(d->value));
  });
}

od_status od_digraph_diameter(const od_digraph* d, uint32_t* diameter, int* infinite) {
  return guarded([&] {
    require(d, "digraph");
    require(diameter, "diameter");
    require(infinite, "infinite");
    const auto h = orientdia::diameter(d->value);
    *infinite = h.is_infinite() ? 1 : 0;
    *diameter = h.is_finite() ? h.value() : 0;
  });
}

od_status od_decompose_json(const od_graph* g, char** json) {
  return guarded([&] {
    require(g, "graph");
    require(json, "output string");
    emit(json, orientdia::detail::decomposition_json(g->value, orientdia::decompose(g->value)));
  });
}

od_status od_structural_json(const od_graph* g, char** json) {
  return guarded([&] {
    require(g, "graph");
    require(json, "output string");
    const auto dec = orientdia::decompose(g->value);
    emit(json, orientdia::detail::structural_json(
                   orientdia::structural_inequalities(dec, dec.is_bridgeless())));
  });
}

od_status od_bounds_json(size_t n, size_t p, size_t s, char** json) {
  return guarded([&] {
    require(json, "output string");
    emit(json, orientdia::detail::bounds_json(orientdia::bounds(n, p, s)));
  });
}

od_status od_graph_bounds_json(const od_graph* g, char** json) {
  return guarded([&] {
    require(g, "graph");
    require(json, "output string");
    const auto dec = orientdia::decompose(g->value);
    emit(json, orientdia::detail::bounds_json(
                   orientdia::bounds(dec.vertex_count, dec.block_count(), dec.cut_vertex_count())));
  });
}

od_status od_strategy_parse(const char* name, od_strategy* out) {
  return guarded([&] {
    require(name, "name");
    require(out, "output");
    const std::string s = name;
    if (s == "robbins") {
      *out = OD_STRATEGY_ROBBINS;
    } else if (s == "theorem1") {
      *out = OD_STRATEGY_THEOREM1;
    } else if (s == "blockgraph") {
      *out = OD_STRATEGY_BLOCKGRAPH;
    } else {
      throw orientdia::InputError("unknown strategy '" + s + "'");
    }
  });
}

od_status od_orient(const od_graph* g, od_strategy strategy, od_digraph** orientation,
                    char** report_json) {
  return guarded([&] {
    require(g, "graph");
    orientdia::OrientationResult r;
    switch (strategy) {
      case OD_STRATEGY_ROBBINS: r = orientdia::robbins_strategy(g->value); break;
      case OD_STRATEGY_THEOREM1: r = orientdia::theorem1_orientation(g->value); break;
      case OD_STRATEGY_BLOCKGRAPH: r = orientdia::blockgraph_orientation(g->value); break;
      default: throw orientdia::InputError("unknown strategy");
    }
    emit(report_json, orientdia::detail::orientation_json(r.report));
    emit(orientation, std::move(r.orientation));
  });
}

od_status od_complete_orientation(size_t n, int64_t special, uint64_t seed, od_digraph** out) {
  return guarded([&] {
    require(out, "output handle");
    std::optional<orientdia::Vertex> sp;
    if (special >= 0) sp = static_cast<orientdia::Vertex>(special);
    emit(out, orientdia::complete_orientation(n, sp, seed));
  });
}

od_status od_lemma1_orientation(const od_graph* g, uint32_t x, uint32_t z, od_digraph** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "output handle");
    emit(out, orientdia::lemma1_orientation(g->value, x, z));
  });
}

void od_exact_options_default(od_exact_options* options) {
  if (options == nullptr) return;
  const orientdia::ExactOptions defaults;
  options->edge_budget = defaults.edge_budget;
  options->block_budget_log2 = defaults.block_budget_log2;
  options->threads = defaults.threads;
}

od_status od_exact_method_parse(const char* name, od_exact_method* out) {
  return guarded([&] {
    require(name, "name");
    require(out, "output");
    const std::string s = name;
    if (s == "brute") {
      *out = OD_EXACT_BRUTE;
    } else if (s == "decomposed") {
      *out = OD_EXACT_DECOMPOSED;
    } else {
      throw orientdia::InputError("unknown exact method '" + s + "'");
    }
  });
}

od_status od_exact(const od_graph* g, od_exact_method method, const od_exact_options* options,
                   od_digraph** witness, char** certificate_json) {
  return guarded([&] {
    require(g, "graph");
    orientdia::ExactOptions opts;
    if (options != nullptr) {
      opts.edge_budget = options->edge_budget;
      opts.block_budget_log2 = options->block_budget_log2;
      opts.threads = options->threads == 0 ? 1 : options->threads;
    }
    auto cert = method == OD_EXACT_DECOMPOSED ? orientdia::oriented_diameter_decomposed(g->value, opts)
                                              : orientdia::oriented_diameter_bruteforce(g->value, opts);
    emit(certificate_json, orientdia::detail::certificate_json(cert));
    emit(witness, std::move(cert.witness));
  });
}

od_status od_family_parse(const char* name, od_family* out) {
  return guarded([&] {
    require(name, "name");
    require(out, "output");
    switch (orientdia::parse_family(name)) {
      case orientdia::Family::gnp_extremal: *out = OD_FAMILY_GNP; break;
      case orientdia::Family::block_extremal: *out = OD_FAMILY_BLOCK; break;
      case orientdia::Family::random_bridgeless: *out = OD_FAMILY_RANDOM; break;
      case orientdia::Family::random_block_graph: *out = OD_FAMILY_RANDOM_BLOCK; break;
    }
  });
}

od_status od_generate(od_family family, size_t n, size_t p, uint64_t seed, od_graph** graph,
                      od_digraph** canonical) {
  return guarded([&] {
    require(graph, "output handle");
    orientdia::FamilySpec spec;
    switch (family) {
      case OD_FAMILY_GNP: spec.family = orientdia::Family::gnp_extremal; break;
      case OD_FAMILY_BLOCK: spec.family = orientdia::Family::block_extremal; break;
      case OD_FAMILY_RANDOM: spec.family = orientdia::Family::random_bridgeless; break;
      case OD_FAMILY_RANDOM_BLOCK: spec.family = orientdia::Family::random_block_graph; break;
      default: throw orientdia::InputError("unknown family");
    }
    spec.n = n;
    spec.p = p;
    spec.seed = seed;
    auto out = orientdia::generate(spec);
    if (canonical != nullptr) {
      *canonical = out.canonical ? new od_digraph{std::move(*out.canonical)} : nullptr;
    }
    *graph = new od_graph{std::move(out.graph)};
  });
}

od_status od_verify(const od_graph* g, const od_digraph* d, const char* bound_name, int* ok,
                    char** report_json) {
  return guarded([&] {
    require(g, "graph");
    require(d, "digraph");
    const auto r = orientdia::detail::verify_orientation(g->value, d->value,
                                                         bound_name ? bound_name : "none");
    if (ok != nullptr) *ok = r.ok ? 1 : 0;
    emit(report_json, orientdia::detail::verify_json(r));
  });
}

}  // extern "C"
