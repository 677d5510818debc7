#pragma once

#include "vsg/gauss_code.hpp"
#include "vsg/laurent.hpp"

namespace vsg {

struct YamadaOptions {
  // Crossing count past which the exponential resolution throws BudgetError.
  int max_crossings = 12;
  // 0 resolves crossings smallest id first; anything else shuffles the
  // resolution order with that seed. The result never depends on the order.
  unsigned resolve_seed = 0;
};

// Yamada polynomial of the diagram. Every classical crossing resolves three
// ways: the two smoothings, weighted A and 1/A with the orientation-respecting
// one taking the sign's side, plus the crossing turned into a degree-4 vertex.
// Crossing-free states evaluate through yamada_flat on the underlying graph.
// Kinks multiply the value by exactly A^2 or A^-2, so comparisons across
// diagrams usually go through Laurent::equals_up_to_unit.
Laurent yamada(const GaussCode& code, const YamadaOptions& opt = {});

// The crossing-free evaluation: deletion/contraction over non-loop edges with
// bouquets of n loops worth -(-sigma)^n, sigma = A + 1 + 1/A. Cut edges make
// it vanish; subdividing an edge never changes it.
Laurent yamada_flat(const AbstractGraph& g);

}  // namespace vsg
