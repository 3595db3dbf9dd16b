#pragma once

#include <cstddef>

#include "hcb/hypergraph.hpp"
#include "hcb/rng.hpp"
#include "hcb/trades.hpp"

namespace hcb {

struct ShuffleOutcome {
  bool accepted = false;
  Sides ce;  // new contents of the first edge
  Sides cf;  // new contents of the second edge
};

// Repartitions e (+) f at stub level (directed: tails and heads
// independently). Edge and node degrees are preserved.
ShuffleOutcome hyperedge_shuffle(const Hypergraph& h, int e, int f,
                                 RngStream& rng);

// Exchanges exactly one incidence: e loses a and gains b, f the reverse.
// Directed: applied to the chosen side only.
enum class EdgeSide { tail, head };
Hypergraph simple_shuffle(const Hypergraph& h, int e, int f, int a, int b,
                          EdgeSide side = EdgeSide::tail);

// True iff installing the proposed contents of e and f would create a
// forbidden hyperedge type. A shuffle can only damage the two shuffled
// edges, so only those are re-examined.
bool shuffle_violates(const Hypergraph& h, int e, int f, const Sides& ce,
                      const Sides& cf, const SpaceSpec& spec);

// Runs N shuffle steps from h0; constrained spaces use propose-then-reject
// on the two touched edges. Rejections consume a step.
Hypergraph run_shuffle(const Hypergraph& h0, const SpaceSpec& spec,
                       std::size_t n_steps, RngStream& rng,
                       const StepObserver& observer = {},
                       bool paranoid = false);

}  // namespace hcb
