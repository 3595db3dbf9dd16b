#include "hcb/trades.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace hcb {
namespace {

void check_nodes(const Hypergraph& h, int v, int w) {
  if (v == w) throw std::invalid_argument("trade requires two distinct nodes");
  if (v < 0 || w < 0 || v >= h.node_count() || w >= h.node_count())
    throw std::out_of_range("unknown node");
}

// Splits the symmetric difference as sets and re-attaches the shared
// labels, so no label can end up duplicated in one incidence.
std::pair<Multiset, Multiset> nodeg_split(const Multiset& i, const Multiset& j,
                                          RngStream& rng) {
  const Multiset only_i = mset_difference(i, j);
  const Multiset only_j = mset_difference(j, i);
  const Multiset shared = mset_intersection(i, j);
  auto [a, b] = uniform_split(mset_union(only_i, only_j), cardinality(only_i),
                              rng);
  return {mset_union(a, shared), mset_union(b, shared)};
}

}  // namespace

std::pair<Multiset, Multiset> uniform_split(const Multiset& combined,
                                            std::size_t k, RngStream& rng) {
  std::vector<int> stubs = to_stubs(combined);
  if (k > stubs.size())
    throw std::invalid_argument("split size exceeds multiset cardinality");
  rng.shuffle(stubs);
  Multiset first, second;
  for (std::size_t i = 0; i < stubs.size(); ++i)
    ++(i < k ? first : second)[stubs[i]];
  return {first, second};
}

TradeOutcome hypertrade(const Hypergraph& h, int v, int w, RngStream& rng) {
  check_nodes(h, v, w);
  const Sides& iv = h.incidence(v);
  const Sides& iw = h.incidence(w);
  TradeOutcome out;
  out.accepted = true;
  std::tie(out.iv.tail, out.iw.tail) = uniform_split(
      mset_union(iv.tail, iw.tail), cardinality(iv.tail), rng);
  if (h.directed()) {
    std::tie(out.iv.head, out.iw.head) = uniform_split(
        mset_union(iv.head, iw.head), cardinality(iv.head), rng);
  }
  return out;
}

TradeOutcome hypertrade_nodeg(const Hypergraph& h, int v, int w,
                              RngStream& rng) {
  check_nodes(h, v, w);
  const Sides& iv = h.incidence(v);
  const Sides& iw = h.incidence(w);
  for (const Sides* inc : {&iv, &iw}) {
    for (const auto& [e, c] : inc->tail)
      if (c >= 2) throw std::invalid_argument(
          "hypertrade_nodeg on a node with a degenerate hyperedge");
    for (const auto& [e, c] : inc->head)
      if (c >= 2) throw std::invalid_argument(
          "hypertrade_nodeg on a node with a degenerate hyperedge");
  }
  TradeOutcome out;
  out.accepted = true;
  std::tie(out.iv.tail, out.iw.tail) = nodeg_split(iv.tail, iw.tail, rng);
  if (h.directed())
    std::tie(out.iv.head, out.iw.head) = nodeg_split(iv.head, iw.head, rng);
  return out;
}

std::vector<std::pair<int, int>> potential_multi_pairs(const Hypergraph& h,
                                                       int v, int w) {
  if (h.directed())
    throw std::invalid_argument("potential_multi_pairs is undirected-only");
  const Multiset& iv = h.incidence(v).tail;
  const Multiset& iw = h.incidence(w).tail;

  // Pairs of labels in I_v u I_w whose edges agree on every other node;
  // exactly those could become multi-hyperedges after the trade.  Labels
  // shared by both incidences keep both nodes through any trade, so they
  // can never collide with a one-side label and are left out.
  std::vector<int> support;
  for (const auto& [e, c] : iv)
    if (!iw.count(e)) support.push_back(e);
  for (const auto& [e, c] : iw)
    if (!iv.count(e)) support.push_back(e);
  std::sort(support.begin(), support.end());
  auto rest = [&](int e) {
    Multiset m = h.edge(e).tail;
    m.erase(v);
    m.erase(w);
    return m;
  };
  std::vector<std::pair<int, int>> pairs;
  std::set<int> paired;
  for (std::size_t i = 0; i < support.size(); ++i) {
    for (std::size_t j = i + 1; j < support.size(); ++j) {
      if (rest(support[i]) == rest(support[j])) {
        if (paired.count(support[i]) || paired.count(support[j]))
          throw std::logic_error(
              "label in two potential multi-pairs; input has multi-hyperedges");
        pairs.emplace_back(support[i], support[j]);
        paired.insert(support[i]);
        paired.insert(support[j]);
      }
    }
  }
  return pairs;
}

TradeOutcome hypertrade_simple(const Hypergraph& h, int v, int w,
                               RngStream& rng) {
  check_nodes(h, v, w);
  if (h.directed())
    throw std::invalid_argument("hypertrade_simple is undirected-only");
  const Multiset& iv = h.incidence(v).tail;
  const Multiset& iw = h.incidence(w).tail;
  const std::vector<std::pair<int, int>> pairs = potential_multi_pairs(h, v, w);

  Multiset pv, pw;  // pair assignments
  for (const auto& [x, y] : pairs) {
    if (rng.coin()) {
      ++pv[x];
      ++pw[y];
    } else {
      ++pv[y];
      ++pw[x];
    }
  }
  Multiset paired_labels;
  for (const auto& [x, y] : pairs) {
    paired_labels[x] = 1;
    paired_labels[y] = 1;
  }
  const Multiset shared = mset_intersection(iv, iw);
  const Multiset free_v =
      mset_difference(mset_difference(iv, iw), paired_labels);
  const Multiset free_w =
      mset_difference(mset_difference(iw, iv), paired_labels);
  auto [a, b] =
      uniform_split(mset_union(free_v, free_w), cardinality(free_v), rng);

  TradeOutcome out;
  out.accepted = true;
  out.iv.tail = mset_union(mset_union(pv, a), shared);
  out.iw.tail = mset_union(mset_union(pw, b), shared);
  return out;
}

TradeDispatch trade_dispatch(const SpaceSpec& spec) {
  TradeDispatch d;
  if (!spec.directed && !spec.allow_degenerate && !spec.allow_multi) {
    d.variant = TradeVariant::simple;
    return d;
  }
  d.variant =
      spec.allow_degenerate ? TradeVariant::plain : TradeVariant::nodeg;
  d.check_multi = !spec.allow_multi;
  d.check_self_loop = spec.directed && !spec.allow_self_loops;
  return d;
}

bool trade_violates(const Hypergraph& h, int v, int w, const Sides& iv,
                    const Sides& iw, const SpaceSpec& spec) {
  // Labels whose contents can change.
  std::set<int> touched;
  for (const Sides* s : {&h.incidence(v), &h.incidence(w), &iv, &iw}) {
    for (const auto& [e, c] : s->tail) touched.insert(e);
    for (const auto& [e, c] : s->head) touched.insert(e);
  }
  std::map<int, Sides> contents;
  for (int e : touched) {
    Sides s = h.edge(e);
    s.tail.erase(v);
    s.tail.erase(w);
    s.head.erase(v);
    s.head.erase(w);
    contents[e] = std::move(s);
  }
  auto install = [&](int node, const Sides& inc) {
    for (const auto& [e, c] : inc.tail) contents[e].tail[node] = c;
    for (const auto& [e, c] : inc.head) contents[e].head[node] = c;
  };
  install(v, iv);
  install(w, iw);

  const bool forbid_degen = !spec.allow_degenerate;
  const bool forbid_self = spec.directed && !spec.allow_self_loops;
  for (const auto& [e, s] : contents) {
    if (forbid_self && s.tail == s.head) return true;
    if (forbid_degen) {
      for (const auto& [node, c] : s.tail)
        if (c >= 2) return true;
      for (const auto& [node, c] : s.head)
        if (c >= 2) return true;
    }
  }
  if (!spec.allow_multi) {
    std::map<Sides, int> seen;
    for (const auto& [e, s] : contents)
      if (++seen[s] >= 2) return true;
    for (int e = 0; e < h.edge_count(); ++e) {
      if (touched.count(e)) continue;
      if (seen.count(h.edge(e))) return true;
    }
  }
  return false;
}

Hypergraph run_hypercurveball(const Hypergraph& h0, const SpaceSpec& spec,
                              std::size_t n_steps, RngStream& rng,
                              const StepObserver& observer, bool paranoid) {
  if (!in_space(h0, spec))
    throw std::invalid_argument("initial hypergraph outside the space");
  if (h0.node_count() < 2)
    throw std::invalid_argument("need at least two nodes to trade");
  const TradeDispatch dispatch = trade_dispatch(spec);
  Hypergraph h = h0;
  const std::size_t n = static_cast<std::size_t>(h.node_count());
  for (std::size_t step = 1; step <= n_steps; ++step) {
    // Unordered distinct pair, uniform over C(|V|, 2).
    std::size_t v = rng.below(n);
    std::size_t w = rng.below(n - 1);
    if (w >= v) ++w;
    TradeOutcome outcome;
    switch (dispatch.variant) {
      case TradeVariant::plain:
        outcome = hypertrade(h, static_cast<int>(v), static_cast<int>(w), rng);
        break;
      case TradeVariant::nodeg:
        outcome =
            hypertrade_nodeg(h, static_cast<int>(v), static_cast<int>(w), rng);
        break;
      case TradeVariant::simple:
        outcome =
            hypertrade_simple(h, static_cast<int>(v), static_cast<int>(w), rng);
        break;
    }
    const bool needs_check = dispatch.check_multi || dispatch.check_self_loop;
    if (!needs_check ||
        !trade_violates(h, static_cast<int>(v), static_cast<int>(w),
                        outcome.iv, outcome.iw, spec)) {
      h.set_incidence_pair(static_cast<int>(v), static_cast<int>(w),
                           outcome.iv, outcome.iw);
    }
    if (paranoid && !in_space(h, spec))
      throw std::logic_error("state left the space");
    if (observer) observer(step, h);
  }
  return h;
}

}  // namespace hcb
