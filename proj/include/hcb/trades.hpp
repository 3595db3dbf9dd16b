#pragma once

#include <cstddef>
#include <functional>
#include <utility>

#include "hcb/hypergraph.hpp"
#include "hcb/rng.hpp"

namespace hcb {

struct TradeOutcome {
  bool accepted = false;
  Sides iv;  // new incidence of the first node
  Sides iw;  // new incidence of the second node
};

// Uniform stub-level split: the combined multiset is expanded to a list
// with repeats, shuffled, and cut at k. Every one of the C(n, k) stub
// splits is equally likely.
std::pair<Multiset, Multiset> uniform_split(const Multiset& combined,
                                            std::size_t k, RngStream& rng);

// Repartitions I_v (+) I_w (directed: tails first, then heads
// independently). Always accepted; may create any hyperedge type.
TradeOutcome hypertrade(const Hypergraph& h, int v, int w, RngStream& rng);

// Keeps shared labels in both incidences and splits only the symmetric
// difference, so no label ends up with multiplicity above one. Requires
// that no degenerate hyperedge touches v or w.
TradeOutcome hypertrade_nodeg(const Hypergraph& h, int v, int w,
                              RngStream& rng);

// Undirected only, for the space with no degenerate and no
// multi-hyperedges: potential multi-pairs get one label per side, the
// remaining symmetric difference is split as in hypertrade_nodeg.
TradeOutcome hypertrade_simple(const Hypergraph& h, int v, int w,
                               RngStream& rng);

// Labels of the symmetric difference of I_v and I_w whose hyperedges agree
// outside {v, w}: exactly the pairs that hypertrade_simple resolves by coin
// flip. (Shared labels keep both nodes through any trade and cannot
// collide.) Undirected only; throws when one label would sit in two pairs,
// i.e. the input already has multi-hyperedges.
std::vector<std::pair<int, int>> potential_multi_pairs(const Hypergraph& h,
                                                       int v, int w);

enum class TradeVariant { plain, nodeg, simple };

// Space-dependent choice of move and of the propose-then-reject checks,
// shared by the sampler and the exact transition-matrix builder.
struct TradeDispatch {
  TradeVariant variant = TradeVariant::plain;
  bool check_multi = false;
  bool check_self_loop = false;
};

TradeDispatch trade_dispatch(const SpaceSpec& spec);

// True iff installing the proposed incidences of v and w would put a
// forbidden hyperedge type into the hypergraph. Only the labels touched
// by the trade are re-examined.
bool trade_violates(const Hypergraph& h, int v, int w, const Sides& iv,
                    const Sides& iw, const SpaceSpec& spec);

using StepObserver =
    std::function<void(std::size_t step, const Hypergraph& state)>;

// Runs N trade steps from h0. Rejected proposals leave the state
// unchanged but consume a step. The observer, when set, sees every step.
// paranoid enables a full-hypergraph space recheck after every step.
Hypergraph run_hypercurveball(const Hypergraph& h0, const SpaceSpec& spec,
                              std::size_t n_steps, RngStream& rng,
                              const StepObserver& observer = {},
                              bool paranoid = false);

}  // namespace hcb
