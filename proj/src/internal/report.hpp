#pragma once

#include <string>

#include "orientdia/bounds.hpp"
#include "orientdia/decomposition.hpp"
#include "orientdia/exact.hpp"
#include "orientdia/graph.hpp"
#include "orientdia/orient.hpp"

namespace orientdia::detail {

// All outputs are single key-sorted JSON objects ending in a newline.

std::string decomposition_json(const MultiGraph& g, const BlockDecomposition& dec);
std::string orientation_json(const OrientationReport& r);
std::string certificate_json(const OrientationCertificate& c);
std::string bounds_json(const BoundSet& b);
std::string structural_json(const StructuralReport& r);

struct VerifyReport {
  std::size_t n = 0;
  std::size_t p = 0;
  std::size_t s = 0;
  bool strong = false;
  Hops diameter;
  std::string bound_name;  // "none" when no bound was requested
  std::uint32_t bound = 0;
  bool within_bound = false;
  bool ok = false;  // strong and within the bound
};

/// Checks that `d` orients `g` (InputError otherwise) and measures it
/// against the named bound: theorem1, corollary, blockgraph, strong or none.
VerifyReport verify_orientation(const MultiGraph& g, const Digraph& d, const std::string& bound_name);
std::string verify_json(const VerifyReport& r);

}  // namespace orientdia::detail
