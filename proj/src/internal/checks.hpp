#pragma once

#include <string>

#include "orientdia/decomposition.hpp"
#include "orientdia/errors.hpp"
#include "orientdia/graph.hpp"

namespace orientdia::detail {

inline std::string describe_edge(const MultiGraph& g, EdgeId e) {
  return "(" + std::to_string(g.edge(e).u) + "," + std::to_string(g.edge(e).v) + ")";
}

/// Decomposes `g`, rejecting disconnected input (InputError) and bridges
/// (InfeasibleError naming the first bridge).
inline BlockDecomposition require_bridgeless(const MultiGraph& g) {
  auto dec = decompose(g);
  if (!dec.bridges.empty()) {
    throw InfeasibleError("graph has a bridge " + describe_edge(g, dec.bridges.front()) +
                          "; no strong orientation exists");
  }
  return dec;
}

}  // namespace orientdia::detail
