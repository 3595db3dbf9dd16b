#include "hcb/shuffles.hpp"

#include <map>
#include <set>

namespace hcb {

ShuffleOutcome hyperedge_shuffle(const Hypergraph& h, int e, int f,
                                 RngStream& rng) {
  if (e == f) throw std::invalid_argument("shuffle requires two distinct edges");
  if (e < 0 || f < 0 || e >= h.edge_count() || f >= h.edge_count())
    throw std::out_of_range("unknown edge label");
  const Sides& ce = h.edge(e);
  const Sides& cf = h.edge(f);
  ShuffleOutcome out;
  out.accepted = true;
  std::tie(out.ce.tail, out.cf.tail) = uniform_split(
      mset_union(ce.tail, cf.tail), cardinality(ce.tail), rng);
  if (h.directed()) {
    std::tie(out.ce.head, out.cf.head) = uniform_split(
        mset_union(ce.head, cf.head), cardinality(ce.head), rng);
  }
  return out;
}

Hypergraph simple_shuffle(const Hypergraph& h, int e, int f, int a, int b,
                          EdgeSide side) {
  if (e == f) throw std::invalid_argument("shuffle requires two distinct edges");
  const bool head = side == EdgeSide::head;
  if (head && !h.directed())
    throw std::invalid_argument("head side requires a directed hypergraph");
  Sides ce = h.edge(e);
  Sides cf = h.edge(f);
  Multiset& me = head ? ce.head : ce.tail;
  Multiset& mf = head ? cf.head : cf.tail;
  if (multiplicity(me, a) < 1 || multiplicity(mf, b) < 1)
    throw std::invalid_argument("node not on the chosen side of its edge");
  if (--me[a] == 0) me.erase(a);
  ++me[b];
  if (--mf[b] == 0) mf.erase(b);
  ++mf[a];
  Hypergraph out = h;
  out.set_edge_pair(e, f, ce, cf);
  return out;
}

bool shuffle_violates(const Hypergraph& h, int e, int f, const Sides& ce,
                      const Sides& cf, const SpaceSpec& spec) {
  const bool forbid_degen = !spec.allow_degenerate;
  const bool forbid_self = spec.directed && !spec.allow_self_loops;
  for (const Sides* s : {&ce, &cf}) {
    if (forbid_self && s->tail == s->head) return true;
    if (forbid_degen) {
      for (const auto& [node, c] : s->tail)
        if (c >= 2) return true;
      for (const auto& [node, c] : s->head)
        if (c >= 2) return true;
    }
  }
  if (!spec.allow_multi) {
    if (ce == cf) return true;
    for (int g = 0; g < h.edge_count(); ++g) {
      if (g == e || g == f) continue;
      if (h.edge(g) == ce || h.edge(g) == cf) return true;
    }
  }
  return false;
}

Hypergraph run_shuffle(const Hypergraph& h0, const SpaceSpec& spec,
                       std::size_t n_steps, RngStream& rng,
                       const StepObserver& observer, bool paranoid) {
  if (!in_space(h0, spec))
    throw std::invalid_argument("initial hypergraph outside the space");
  if (h0.edge_count() < 2)
    throw std::invalid_argument("need at least two edges to shuffle");
  Hypergraph h = h0;
  const std::size_t m = static_cast<std::size_t>(h.edge_count());
  const bool needs_check =
      !spec.allow_multi || !spec.allow_degenerate ||
      (spec.directed && !spec.allow_self_loops);
  for (std::size_t step = 1; step <= n_steps; ++step) {
    std::size_t e = rng.below(m);
    std::size_t f = rng.below(m - 1);
    if (f >= e) ++f;
    ShuffleOutcome outcome =
        hyperedge_shuffle(h, static_cast<int>(e), static_cast<int>(f), rng);
    if (!needs_check ||
        !shuffle_violates(h, static_cast<int>(e), static_cast<int>(f),
                          outcome.ce, outcome.cf, spec)) {
      h.set_edge_pair(static_cast<int>(e), static_cast<int>(f), outcome.ce,
                      outcome.cf);
    }
    if (paranoid && !in_space(h, spec))
      throw std::logic_error("state left the space");
    if (observer) observer(step, h);
  }
  return h;
}

}  // namespace hcb
