#include <algorithm>

#include "orientdia/errors.hpp"
#include "orientdia/orient.hpp"

namespace orientdia {

PartialOrientation::PartialOrientation(MultiGraph base)
    : base_(std::move(base)), reversed_(base_.edge_count()) {}

void PartialOrientation::assign(EdgeId e, Vertex tail, Vertex head) {
  const Edge& ed = base_.edge(e);
  bool rev;
  if (ed.u == tail && ed.v == head) {
    rev = false;
  } else if (ed.v == tail && ed.u == head) {
    rev = true;
  } else {
    throw InputError("arc " + std::to_string(tail) + "->" + std::to_string(head) +
                     " does not match edge " + std::to_string(e));
  }
  if (reversed_[e].has_value() && *reversed_[e] != rev) {
    throw InputError("edge " + std::to_string(e) + " already fixed in the opposite direction");
  }
  reversed_[e] = rev;
}

std::vector<EdgeId> PartialOrientation::free_edges() const {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < reversed_.size(); ++e) {
    if (!reversed_[e]) out.push_back(e);
  }
  return out;
}

namespace {

enum class State : std::uint8_t { free, forward, backward };

// Strong connectivity of the mixed graph, free edges usable both ways.
bool mixed_strong(const MultiGraph& g, const std::vector<State>& state) {
  const std::size_t n = g.vertex_count();
  if (n <= 1) return true;
  auto sweep = [&](bool along) {
    std::vector<bool> seen(n, false);
    std::vector<Vertex> todo{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!todo.empty()) {
      Vertex v = todo.back();
      todo.pop_back();
      for (const auto& [w, e] : g.incident(v)) {
        if (seen[w]) continue;
        const Edge& ed = g.edge(e);
        bool usable = true;
        if (state[e] != State::free) {
          // Arc tail -> head; along the arcs we need tail == v, against them head == v.
          const Vertex tail = state[e] == State::forward ? ed.u : ed.v;
          usable = along ? tail == v : tail != v;
        }
        if (usable) {
          seen[w] = true;
          ++count;
          todo.push_back(w);
        }
      }
    }
    return count == n;
  };
  return sweep(true) && sweep(false);
}

}  // namespace

Digraph extend_orientation(const PartialOrientation& partial) {
  const MultiGraph& g = partial.base();
  std::vector<State> state(g.edge_count(), State::free);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (auto f = partial.fixed(e)) state[e] = *f ? State::backward : State::forward;
  }
  if (!mixed_strong(g, state)) {
    throw ContractViolation("fixed arcs admit no strong completion");
  }
  // Backtracking over free edges in index order; each partial assignment must
  // keep the mixed graph strongly connected. On bridgeless inputs one of the
  // two directions always survives, so this rarely backtracks.
  const auto free = partial.free_edges();
  std::vector<std::uint8_t> tried(free.size(), 0);
  std::size_t i = 0;
  while (i < free.size()) {
    const EdgeId e = free[i];
    bool placed = false;
    while (tried[i] < 2 && !placed) {
      state[e] = tried[i] == 0 ? State::forward : State::backward;
      ++tried[i];
      placed = mixed_strong(g, state);
    }
    if (placed) {
      ++i;
      continue;
    }
    state[e] = State::free;
    tried[i] = 0;
    if (i == 0) throw ContractViolation("no strong completion of the partial orientation");
    --i;
  }
  std::vector<bool> reversed(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) reversed[e] = state[e] == State::backward;
  return Digraph::orient(g, reversed);
}

}  // namespace orientdia
