#include "internal/report.hpp"

#include <json.hpp>

#include "orientdia/errors.hpp"

namespace orientdia::detail {

namespace {

using nlohmann::json;

std::string finish(const json& j) { return j.dump() + "\n"; }

json hops(Hops h) { return h.is_finite() ? json(h.value()) : json(nullptr); }

json arcs_of(const Digraph& d) {
  json out = json::array();
  for (const Arc& a : d.arcs()) out.push_back({a.tail, a.head});
  return out;
}

}  // namespace

std::string decomposition_json(const MultiGraph& g, const BlockDecomposition& dec) {
  json bridges = json::array();
  for (EdgeId e : dec.bridges) bridges.push_back({g.edge(e).u, g.edge(e).v});
  return finish({{"n", dec.vertex_count},
                 {"m", dec.edge_count},
                 {"p", dec.block_count()},
                 {"s", dec.cut_vertex_count()},
                 {"blocks", dec.blocks},
                 {"cut_vertices", dec.cut_vertices},
                 {"bridges", bridges},
                 {"is_block_graph", is_block_graph(g)}});
}

std::string orientation_json(const OrientationReport& r) {
  json pair = nullptr;
  if (r.witness_pair) pair = {r.witness_pair->first, r.witness_pair->second};
  return finish({{"strategy", r.strategy},
                 {"diameter", hops(r.diameter)},
                 {"bound", r.bound},
                 {"bound_name", r.bound_name},
                 {"satisfied", r.satisfied},
                 {"witness_pair", pair},
                 {"case_trace", r.case_trace}});
}

std::string certificate_json(const OrientationCertificate& c) {
  return finish({{"value", hops(c.value)},
                 {"method", c.method == ExactMethod::brute ? "brute" : "decomposed"},
                 {"witness_arcs", arcs_of(c.witness)},
                 {"explored", c.explored}});
}

std::string bounds_json(const BoundSet& b) {
  return finish({{"n", b.n},
                 {"p", b.p},
                 {"s", b.s},
                 {"theorem1", b.theorem1},
                 {"corollary", b.corollary},
                 {"blockgraph", b.blockgraph}});
}

std::string structural_json(const StructuralReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"slack", c.slack}, {"holds", c.holds}});
  }
  return finish({{"n", r.n}, {"p", r.p}, {"s", r.s}, {"checks", checks}, {"all_hold", r.all_hold()}});
}

VerifyReport verify_orientation(const MultiGraph& g, const Digraph& d, const std::string& bound_name) {
  if (!is_orientation_of(d, g)) throw InputError("arc list is not an orientation of the graph");
  const auto dec = decompose(g);
  VerifyReport r;
  r.n = g.vertex_count();
  r.p = dec.block_count();
  r.s = dec.cut_vertex_count();
  r.diameter = diameter(d);
  r.strong = r.n <= 1 || r.diameter.is_finite();
  r.bound_name = bound_name;
  if (bound_name == "none") {
    r.within_bound = true;
  } else {
    if (bound_name == "theorem1") {
      r.bound = theorem1_bound(r.n, r.p);
    } else if (bound_name == "corollary") {
      r.bound = corollary_bound(r.n, r.s);
    } else if (bound_name == "blockgraph") {
      r.bound = blockgraph_bound(r.n);
    } else if (bound_name == "strong") {
      r.bound = r.n == 0 ? 0 : static_cast<std::uint32_t>(r.n - 1);
    } else {
      throw InputError("unknown bound '" + bound_name + "'");
    }
    r.within_bound = r.diameter.is_finite() && r.diameter.value() <= r.bound;
  }
  r.ok = r.strong && r.within_bound;
  return r;
}

std::string verify_json(const VerifyReport& r) {
  json bound = r.bound_name == "none" ? json(nullptr) : json(r.bound);
  return finish({{"n", r.n},
                 {"p", r.p},
                 {"s", r.s},
                 {"strong", r.strong},
                 {"diameter", hops(r.diameter)},
                 {"bound_name", r.bound_name},
                 {"bound", bound},
                 {"within_bound", r.within_bound},
                 {"ok", r.ok}});
}

}  // namespace orientdia::detail
