#include "hcb/chainlab.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>

#include <boost/math/special_functions/gamma.hpp>

#include "hcb/shuffles.hpp"
#include "hcb/trades.hpp"

namespace hcb {
namespace {

BigInt binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  BigInt out = 1;
  for (long long i = 0; i < k; ++i) {
    out *= n - i;
    out /= i + 1;
  }
  return out;
}

long long binomial_ll(long long n, long long k) {
  return binomial(n, k).convert_to<long long>();
}

// Incidence matrices with fixed row/column sums, entries capped at maxent.
// Filled row-major; the callback gets the flat matrix (rows * cols).
class MatrixEnumerator {
 public:
  MatrixEnumerator(std::vector<long long> rows, std::vector<long long> cols,
                   long long maxent, long long max_matrices)
      : rows_(std::move(rows)),
        cols_(std::move(cols)),
        maxent_(maxent),
        budget_(max_matrices) {}

  std::vector<std::vector<long long>> run() {
    if (std::accumulate(rows_.begin(), rows_.end(), 0LL) !=
        std::accumulate(cols_.begin(), cols_.end(), 0LL))
      return {};
    cell_.assign(rows_.size() * cols_.size(), 0);
    col_rem_ = cols_;
    fill(0, 0, rows_.empty() ? 0 : rows_[0]);
    return std::move(found_);
  }

 private:
  void fill(std::size_t r, std::size_t c, long long row_rem) {
    if (r == rows_.size()) {
      if (--budget_ < 0)
        throw EnumLimitError("incidence-matrix enumeration budget exceeded");
      found_.push_back(cell_);
      return;
    }
    if (c == cols_.size()) {
      if (row_rem != 0) return;
      // Each remaining row can absorb at most maxent per column.
      const long long rows_left = static_cast<long long>(rows_.size() - r - 1);
      for (long long rem : col_rem_)
        if (rem > rows_left * maxent_) return;
      fill(r + 1, 0, r + 1 < rows_.size() ? rows_[r + 1] : 0);
      return;
    }
    const long long hi = std::min({maxent_, row_rem, col_rem_[c]});
    for (long long x = hi; x >= 0; --x) {
      cell_[r * cols_.size() + c] = x;
      col_rem_[c] -= x;
      fill(r, c + 1, row_rem - x);
      col_rem_[c] += x;
    }
    cell_[r * cols_.size() + c] = 0;
  }

  std::vector<long long> rows_, cols_;
  long long maxent_;
  long long budget_;
  std::vector<long long> cell_;
  std::vector<long long> col_rem_;
  std::vector<std::vector<long long>> found_;
};

// One split per k-combination of stub positions.
template <class Fn>
void for_each_split(const Multiset& combined, std::size_t k, Fn&& fn) {
  const std::vector<int> stubs = to_stubs(combined);
  const std::size_t n = stubs.size();
  if (k > n) throw std::invalid_argument("split size exceeds cardinality");
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  while (true) {
    Multiset first;
    std::vector<bool> taken(n, false);
    for (std::size_t i : idx) {
      ++first[stubs[i]];
      taken[i] = true;
    }
    Multiset second;
    for (std::size_t i = 0; i < n; ++i)
      if (!taken[i]) ++second[stubs[i]];
    fn(first, second);
    if (k == 0) return;
    // next combination
    std::size_t j = k;
    while (j > 0 && idx[j - 1] == n - k + (j - 1)) --j;
    if (j == 0) return;
    ++idx[j - 1];
    for (std::size_t i = j; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
}

struct SplitOption {
  Multiset first, second;
};

// All equally likely per-side outcomes for one trade side under the given
// variant (plain splits everything; nodeg pins the shared labels).
std::vector<SplitOption> side_options(const Multiset& mi, const Multiset& mj,
                                      TradeVariant variant) {
  std::vector<SplitOption> out;
  if (variant == TradeVariant::plain) {
    for_each_split(mset_union(mi, mj), cardinality(mi),
                   [&](const Multiset& a, const Multiset& b) {
                     out.push_back({a, b});
                   });
  } else {
    const Multiset only_i = mset_difference(mi, mj);
    const Multiset only_j = mset_difference(mj, mi);
    const Multiset shared = mset_intersection(mi, mj);
    for_each_split(mset_union(only_i, only_j), cardinality(only_i),
                   [&](const Multiset& a, const Multiset& b) {
                     out.push_back(
                         {mset_union(a, shared), mset_union(b, shared)});
                   });
  }
  return out;
}

// All equally likely (I_v', I_w') proposals for one node pair.
std::vector<std::pair<Sides, Sides>> trade_options(const Hypergraph& h, int v,
                                                   int w,
                                                   const TradeDispatch& disp) {
  const Sides& iv = h.incidence(v);
  const Sides& iw = h.incidence(w);
  std::vector<std::pair<Sides, Sides>> out;

  if (disp.variant == TradeVariant::simple) {
    const auto pairs = potential_multi_pairs(h, v, w);
    Multiset paired_labels;
    for (const auto& [x, y] : pairs) {
      paired_labels[x] = 1;
      paired_labels[y] = 1;
    }
    const Multiset shared = mset_intersection(iv.tail, iw.tail);
    const Multiset free_v =
        mset_difference(mset_difference(iv.tail, iw.tail), paired_labels);
    const Multiset free_w =
        mset_difference(mset_difference(iw.tail, iv.tail), paired_labels);
    const std::size_t np = pairs.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << np); ++mask) {
      Multiset pv, pw;
      for (std::size_t i = 0; i < np; ++i) {
        if (mask & (std::size_t{1} << i)) {
          ++pv[pairs[i].first];
          ++pw[pairs[i].second];
        } else {
          ++pv[pairs[i].second];
          ++pw[pairs[i].first];
        }
      }
      for_each_split(mset_union(free_v, free_w), cardinality(free_v),
                     [&](const Multiset& a, const Multiset& b) {
                       Sides nv, nw;
                       nv.tail = mset_union(mset_union(pv, a), shared);
                       nw.tail = mset_union(mset_union(pw, b), shared);
                       out.emplace_back(std::move(nv), std::move(nw));
                     });
    }
    return out;
  }

  const auto tails = side_options(iv.tail, iw.tail, disp.variant);
  if (!h.directed()) {
    out.reserve(tails.size());
    for (const auto& t : tails) {
      Sides nv, nw;
      nv.tail = t.first;
      nw.tail = t.second;
      out.emplace_back(std::move(nv), std::move(nw));
    }
    return out;
  }
  const auto heads = side_options(iv.head, iw.head, disp.variant);
  out.reserve(tails.size() * heads.size());
  for (const auto& t : tails) {
    for (const auto& hh : heads) {
      Sides nv, nw;
      nv.tail = t.first;
      nv.head = hh.first;
      nw.tail = t.second;
      nw.head = hh.second;
      out.emplace_back(std::move(nv), std::move(nw));
    }
  }
  return out;
}

std::vector<std::pair<Sides, Sides>> shuffle_options(const Hypergraph& h,
                                                     int e, int f) {
  const Sides& ce = h.edge(e);
  const Sides& cf = h.edge(f);
  const auto tails = side_options(ce.tail, cf.tail, TradeVariant::plain);
  std::vector<std::pair<Sides, Sides>> out;
  if (!h.directed()) {
    out.reserve(tails.size());
    for (const auto& t : tails) {
      Sides ne, nf;
      ne.tail = t.first;
      nf.tail = t.second;
      out.emplace_back(std::move(ne), std::move(nf));
    }
    return out;
  }
  const auto heads = side_options(ce.head, cf.head, TradeVariant::plain);
  out.reserve(tails.size() * heads.size());
  for (const auto& t : tails) {
    for (const auto& hh : heads) {
      Sides ne, nf;
      ne.tail = t.first;
      ne.head = hh.first;
      nf.tail = t.second;
      nf.head = hh.second;
      out.emplace_back(std::move(ne), std::move(nf));
    }
  }
  return out;
}

template <class Scalar>
std::vector<std::vector<Scalar>> build_transitions(const StateSpace& space,
                                                   Method method) {
  const std::size_t n_states = space.states.size();
  std::map<CanonicalState, std::size_t> index;
  for (std::size_t i = 0; i < n_states; ++i) index[space.states[i]] = i;

  std::vector<std::vector<Scalar>> p(
      n_states, std::vector<Scalar>(n_states, Scalar(0)));
  const SpaceSpec& spec = space.spec;
  const TradeDispatch disp = trade_dispatch(spec);
  const bool shuffle_checks = !spec.allow_multi || !spec.allow_degenerate ||
                              (spec.directed && !spec.allow_self_loops);

  for (std::size_t i = 0; i < n_states; ++i) {
    const Hypergraph& rep = space.reps[i];
    if (method == Method::trade) {
      const long long n = rep.node_count();
      if (n < 2) {
        p[i][i] = Scalar(1);
        continue;
      }
      const long long npairs = n * (n - 1) / 2;
      const bool needs_check = disp.check_multi || disp.check_self_loop;
      for (int v = 0; v < n; ++v) {
        for (int w = v + 1; w < n; ++w) {
          const auto options = trade_options(rep, v, w, disp);
          const Scalar weight =
              Scalar(1) /
              Scalar(npairs * static_cast<long long>(options.size()));
          for (const auto& [iv, iw] : options) {
            if (needs_check && trade_violates(rep, v, w, iv, iw, spec)) {
              p[i][i] += weight;
              continue;
            }
            Hypergraph next = rep;
            next.set_incidence_pair(v, w, iv, iw);
            auto it = index.find(canonicalize(next));
            if (it == index.end())
              throw std::logic_error("trade left the enumerated space");
            p[i][it->second] += weight;
          }
        }
      }
    } else {
      const long long m = rep.edge_count();
      if (m < 2) {
        p[i][i] = Scalar(1);
        continue;
      }
      const long long mpairs = m * (m - 1) / 2;
      for (int e = 0; e < m; ++e) {
        for (int f = e + 1; f < m; ++f) {
          const auto options = shuffle_options(rep, e, f);
          const Scalar weight =
              Scalar(1) /
              Scalar(mpairs * static_cast<long long>(options.size()));
          for (const auto& [ce, cf] : options) {
            if (shuffle_checks && shuffle_violates(rep, e, f, ce, cf, spec)) {
              p[i][i] += weight;
              continue;
            }
            Hypergraph next = rep;
            next.set_edge_pair(e, f, ce, cf);
            auto it = index.find(canonicalize(next));
            if (it == index.end())
              throw std::logic_error("shuffle left the enumerated space");
            p[i][it->second] += weight;
          }
        }
      }
    }
  }
  return p;
}

void tarjan(const std::vector<std::vector<int>>& adj, int& count) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> low(n, -1), num(n, -1), stack;
  std::vector<bool> on_stack(n, false);
  int timer = 0;
  count = 0;
  // Explicit stack: (node, next child index).
  for (int root = 0; root < n; ++root) {
    if (num[root] != -1) continue;
    std::vector<std::pair<int, std::size_t>> call{{root, 0}};
    while (!call.empty()) {
      auto& [u, child] = call.back();
      if (child == 0) {
        num[u] = low[u] = timer++;
        stack.push_back(u);
        on_stack[u] = true;
      }
      if (child < adj[u].size()) {
        const int v = adj[u][child++];
        if (num[v] == -1) {
          call.emplace_back(v, 0);
        } else if (on_stack[v]) {
          low[u] = std::min(low[u], num[v]);
        }
      } else {
        if (low[u] == num[u]) {
          ++count;
          while (true) {
            const int v = stack.back();
            stack.pop_back();
            on_stack[v] = false;
            if (v == u) break;
          }
        }
        const int done = u;
        call.pop_back();
        if (!call.empty())
          low[call.back().first] = std::min(low[call.back().first], low[done]);
      }
    }
  }
}

}  // namespace

std::string method_name(Method m) {
  return m == Method::trade ? "trade" : "shuffle";
}

std::string verdict_name(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::uniform: return "uniform";
    case VerdictStatus::biased: return "biased";
    case VerdictStatus::disconnected: return "disconnected";
  }
  return "?";
}

std::vector<std::pair<Multiset, Multiset>> all_stub_splits(
    const Multiset& combined, std::size_t k) {
  std::vector<std::pair<Multiset, Multiset>> out;
  for_each_split(combined, k, [&](const Multiset& a, const Multiset& b) {
    out.emplace_back(a, b);
  });
  return out;
}

StateSpace enumerate_space(const DegreeSequence& d, const SpaceSpec& spec,
                           const EnumLimits& limits) {
  if (d.directed != spec.directed)
    throw std::invalid_argument("degree sequence / space directedness clash");
  for (const auto& [t, h] : d.edge_degrees)
    if (t + h <= 0) throw std::invalid_argument("empty hyperedge degree");
  long long sum_t = 0, sum_h = 0;
  for (const auto& [t, h] : d.node_degrees) {
    sum_t += t;
    sum_h += h;
  }
  if (std::max(sum_t, sum_h) > limits.max_degree_sum)
    throw EnumLimitError("degree sum above the enumeration limit");

  const long long maxent =
      spec.allow_degenerate ? limits.max_degree_sum : 1;
  auto margins = [&](bool head) {
    std::vector<long long> rows, cols;
    for (const auto& [t, h] : d.node_degrees) rows.push_back(head ? h : t);
    for (const auto& [t, h] : d.edge_degrees) cols.push_back(head ? h : t);
    return std::pair{rows, cols};
  };

  auto [rows_t, cols_t] = margins(false);
  long long budget = limits.max_matrices;
  const auto tails = MatrixEnumerator(rows_t, cols_t, maxent, budget).run();
  std::vector<std::vector<long long>> heads;
  if (spec.directed) {
    auto [rows_h, cols_h] = margins(true);
    heads = MatrixEnumerator(rows_h, cols_h, maxent, budget).run();
    if (!tails.empty() && !heads.empty() &&
        static_cast<long long>(tails.size()) >
            budget / static_cast<long long>(heads.size()))
      throw EnumLimitError("tail/head matrix pairing budget exceeded");
  }

  const std::size_t n = d.node_degrees.size();
  const std::size_t m = d.edge_degrees.size();
  auto to_edges = [&](const std::vector<long long>& tail,
                      const std::vector<long long>* head) {
    std::vector<Sides> edges(m);
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t v = 0; v < n; ++v) {
        if (tail[v * m + j] > 0)
          edges[j].tail[static_cast<int>(v)] =
              static_cast<int>(tail[v * m + j]);
        if (head && (*head)[v * m + j] > 0)
          edges[j].head[static_cast<int>(v)] =
              static_cast<int>((*head)[v * m + j]);
      }
    }
    return edges;
  };

  StateSpace space;
  space.degrees = d;
  space.spec = spec;
  std::set<CanonicalState> seen;
  auto consider = [&](std::vector<Sides> edges) {
    for (const Sides& s : edges)
      if (s.tail.empty() && s.head.empty()) return;
    Hypergraph h =
        Hypergraph::from_edges(spec.directed, static_cast<int>(n),
                               std::move(edges));
    if (!in_space(h, spec)) return;
    CanonicalState c = canonicalize(h);
    if (!seen.insert(c).second) return;
    space.stub_counts.push_back(stub_count(h));
    space.states.push_back(std::move(c));
    space.reps.push_back(std::move(h));
  };

  if (!spec.directed) {
    for (const auto& t : tails) consider(to_edges(t, nullptr));
  } else {
    for (const auto& t : tails)
      for (const auto& hd : heads) consider(to_edges(t, &hd));
  }

  // Deterministic order independent of the enumeration path.
  std::vector<std::size_t> order(space.states.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return space.states[a] < space.states[b];
  });
  StateSpace sorted;
  sorted.degrees = space.degrees;
  sorted.spec = space.spec;
  for (std::size_t i : order) {
    sorted.states.push_back(std::move(space.states[i]));
    sorted.reps.push_back(std::move(space.reps[i]));
    sorted.stub_counts.push_back(std::move(space.stub_counts[i]));
  }
  return sorted;
}

TransitionMatrix transition_matrix(const StateSpace& space, Method method) {
  TransitionMatrix t;
  t.method = method;
  t.p = build_transitions<double>(space, method);
  return t;
}

std::vector<std::vector<Rational>> transition_matrix_exact(
    const StateSpace& space, Method method) {
  return build_transitions<Rational>(space, method);
}

std::vector<double> stationary(const TransitionMatrix& t, double residual) {
  const std::size_t n = t.size();
  if (n == 0) return {};
  std::vector<double> pi(n, 1.0 / static_cast<double>(n)), next(n);
  for (long long iter = 0; iter < 2000000; ++iter) {
    std::fill(next.begin(), next.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) next[j] += pi[i] * t.p[i][j];
    double total = std::accumulate(next.begin(), next.end(), 0.0);
    for (double& x : next) x /= total;
    double delta = 0.0;
    for (std::size_t j = 0; j < n; ++j)
      delta = std::max(delta, std::abs(next[j] - pi[j]));
    pi.swap(next);
    if (delta <= residual) return pi;
  }
  throw std::runtime_error("power iteration did not converge");
}

std::vector<Rational> stationary_exact(
    const std::vector<std::vector<Rational>>& t) {
  const std::size_t n = t.size();
  if (n == 0) return {};
  // pi (P - I) = 0 with the last balance equation replaced by sum = 1.
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1, 0));
  for (std::size_t j = 0; j + 1 < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      a[j][i] = t[i][j];
      if (i == j) a[j][i] -= 1;
    }
  }
  for (std::size_t i = 0; i < n; ++i) a[n - 1][i] = 1;
  a[n - 1][n] = 1;

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw std::runtime_error("singular stationary system");
    std::swap(a[col], a[piv]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c <= n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  std::vector<Rational> pi(n);
  for (std::size_t i = 0; i < n; ++i) pi[i] = a[i][n] / a[i][i];
  return pi;
}

int scc_count(const TransitionMatrix& t) {
  const std::size_t n = t.size();
  std::vector<std::vector<int>> adj(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && t.p[i][j] > 0.0) adj[i].push_back(static_cast<int>(j));
  int count = 0;
  tarjan(adj, count);
  return count;
}

UniformityVerdict uniformity_verdict(const DegreeSequence& d,
                                     const SpaceSpec& spec, Method method,
                                     const EnumLimits& limits,
                                     double tolerance) {
  const StateSpace space = enumerate_space(d, spec, limits);
  if (space.states.empty())
    throw std::invalid_argument("degree sequence has no realization");
  UniformityVerdict v;
  v.n_states = space.states.size();
  const TransitionMatrix t = transition_matrix(space, method);
  v.sccs = scc_count(t);
  const std::vector<double> pi = stationary(t);
  BigInt total = 0;
  for (const BigInt& c : space.stub_counts) total += c;
  for (std::size_t i = 0; i < pi.size(); ++i) {
    const double target =
        Rational(space.stub_counts[i], total).convert_to<double>();
    v.max_deviation = std::max(v.max_deviation, std::abs(pi[i] / target - 1));
    v.flat_deviation = std::max(
        v.flat_deviation,
        std::abs(pi[i] * static_cast<double>(pi.size()) - 1));
  }
  if (v.sccs > 1)
    v.status = VerdictStatus::disconnected;
  else
    v.status = v.max_deviation <= tolerance ? VerdictStatus::uniform
                                            : VerdictStatus::biased;
  return v;
}

namespace {

// Non-increasing sequences over the given value set (values pre-sorted
// descending), all lengths 1..max_len.
void gen_sequences(const std::vector<std::pair<long long, long long>>& values,
                   int max_len,
                   std::vector<std::vector<std::pair<long long, long long>>>&
                       out) {
  std::vector<std::pair<long long, long long>> cur;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (!cur.empty()) out.push_back(cur);
    if (static_cast<int>(cur.size()) == max_len) return;
    for (std::size_t i = from; i < values.size(); ++i) {
      cur.push_back(values[i]);
      self(self, i);
      cur.pop_back();
    }
  };
  rec(rec, 0);
}

}  // namespace

std::vector<SearchHit> bias_search(const SearchBounds& bounds,
                                   const std::vector<SpaceSpec>& spaces,
                                   const std::vector<Method>& methods,
                                   const EnumLimits& limits,
                                   const SearchVisitor& visit) {
  std::vector<std::pair<long long, long long>> values;
  if (bounds.directed) {
    for (long long t = bounds.max_degree; t >= 0; --t)
      for (long long h = bounds.max_degree; h >= 0; --h)
        if (t + h > 0) values.emplace_back(t, h);
  } else {
    for (long long t = bounds.max_degree; t >= 1; --t)
      values.emplace_back(t, 0);
  }
  std::sort(values.begin(), values.end(), std::greater<>());

  std::vector<std::vector<std::pair<long long, long long>>> node_seqs,
      edge_seqs;
  gen_sequences(values, bounds.max_nodes, node_seqs);
  gen_sequences(values, bounds.max_edges, edge_seqs);

  auto sums = [](const std::vector<std::pair<long long, long long>>& s) {
    long long t = 0, h = 0;
    for (const auto& [a, b] : s) {
      t += a;
      h += b;
    }
    return std::pair{t, h};
  };
  std::map<std::pair<long long, long long>,
           std::vector<const std::vector<std::pair<long long, long long>>*>>
      edges_by_sum;
  for (const auto& e : edge_seqs) edges_by_sum[sums(e)].push_back(&e);

  std::stable_sort(node_seqs.begin(), node_seqs.end(),
                   [&](const auto& a, const auto& b) {
                     const auto sa = sums(a), sb = sums(b);
                     return sa.first + sa.second != sb.first + sb.second
                                ? sa.first + sa.second < sb.first + sb.second
                                : a < b;
                   });

  std::vector<SearchHit> hits;
  for (const auto& nodes : node_seqs) {
    auto it = edges_by_sum.find(sums(nodes));
    if (it == edges_by_sum.end()) continue;
    for (const auto* edges : it->second) {
      DegreeSequence d;
      d.directed = bounds.directed;
      d.node_degrees = nodes;
      d.edge_degrees = *edges;
      for (const SpaceSpec& spec : spaces) {
        if (spec.directed != bounds.directed)
          throw std::invalid_argument("space directedness outside the bounds");
        for (Method method : methods) {
          SearchHit hit;
          hit.degrees = d;
          hit.spec = spec;
          hit.method = method;
          try {
            hit.verdict = uniformity_verdict(d, spec, method, limits);
          } catch (const EnumLimitError&) {
            continue;
          } catch (const std::invalid_argument&) {
            continue;  // unrealizable sequence
          }
          if (hit.verdict.status != VerdictStatus::uniform)
            hits.push_back(hit);
          if (visit && !visit(hit)) return hits;
        }
      }
    }
  }
  return hits;
}

std::vector<ConstrainedPartition> enumerate_constrained_partitions(
    const Multiset& combined, std::size_t k,
    const std::vector<PartitionConstraint>& constraints) {
  std::vector<std::pair<int, int>> elems(combined.begin(), combined.end());
  auto ok = [&](const Multiset& part1) {
    for (const PartitionConstraint& c : constraints) {
      bool sat = false;
      for (const auto& [x, y] : c.unequal_any)
        if (multiplicity(part1, x) != multiplicity(part1, y)) {
          sat = true;
          break;
        }
      if (!sat) return false;
    }
    return true;
  };
  std::vector<ConstrainedPartition> out;
  Multiset part1;
  auto rec = [&](auto&& self, std::size_t pos, std::size_t rem,
                 BigInt splits) -> void {
    if (pos == elems.size()) {
      if (rem == 0 && ok(part1)) out.push_back({part1, splits});
      return;
    }
    const auto [elem, mult] = elems[pos];
    const long long hi =
        std::min<long long>(mult, static_cast<long long>(rem));
    for (long long c = 0; c <= hi; ++c) {
      if (c > 0) part1[elem] = static_cast<int>(c);
      self(self, pos + 1, rem - static_cast<std::size_t>(c),
           splits * binomial(mult, c));
      part1.erase(elem);
    }
  };
  rec(rec, 0, k, BigInt(1));
  return out;
}

std::map<Multiset, Rational> sequential_partition_bias(
    const Multiset& combined, std::size_t k,
    const std::vector<PartitionConstraint>& constraints,
    const std::vector<int>& element_order) {
  {
    std::set<int> order(element_order.begin(), element_order.end());
    if (order.size() != element_order.size() ||
        order.size() != combined.size())
      throw std::invalid_argument("element order must list each element once");
    for (const auto& [e, c] : combined)
      if (!order.count(e))
        throw std::invalid_argument("element order must list each element once");
  }

  auto satisfied = [&](const Multiset& part1) {
    for (const PartitionConstraint& c : constraints) {
      bool sat = false;
      for (const auto& [x, y] : c.unequal_any)
        if (multiplicity(part1, x) != multiplicity(part1, y)) {
          sat = true;
          break;
        }
      if (!sat) return false;
    }
    return true;
  };

  Multiset part1;
  auto completable = [&](auto&& self, std::size_t pos,
                         std::size_t rem) -> bool {
    if (pos == element_order.size()) return rem == 0 && satisfied(part1);
    const int elem = element_order[pos];
    const long long hi = std::min<long long>(multiplicity(combined, elem),
                                             static_cast<long long>(rem));
    for (long long c = 0; c <= hi; ++c) {
      if (c > 0) part1[elem] = static_cast<int>(c);
      const bool found =
          self(self, pos + 1, rem - static_cast<std::size_t>(c));
      part1.erase(elem);
      if (found) return true;
    }
    return false;
  };

  std::map<Multiset, Rational> dist;
  auto rec = [&](auto&& self, std::size_t pos, std::size_t rem,
                 Rational prob) -> void {
    if (pos == element_order.size()) {
      dist[part1] += prob;
      return;
    }
    const int elem = element_order[pos];
    const long long hi = std::min<long long>(multiplicity(combined, elem),
                                             static_cast<long long>(rem));
    std::vector<long long> feasible;
    for (long long c = 0; c <= hi; ++c) {
      if (c > 0) part1[elem] = static_cast<int>(c);
      if (completable(completable, pos + 1,
                      rem - static_cast<std::size_t>(c)))
        feasible.push_back(c);
      part1.erase(elem);
    }
    if (feasible.empty())
      throw std::invalid_argument("no valid partition exists");
    const Rational share = prob / Rational(feasible.size());
    for (long long c : feasible) {
      if (c > 0) part1[elem] = static_cast<int>(c);
      self(self, pos + 1, rem - static_cast<std::size_t>(c), share);
      part1.erase(elem);
    }
  };
  rec(rec, 0, k, Rational(1));
  return dist;
}

EmpiricalResult empirical_distribution(const Hypergraph& h0,
                                       const SpaceSpec& spec, Method method,
                                       int samples, int steps_per_sample,
                                       std::uint64_t seed,
                                       const EnumLimits& limits) {
  const StateSpace space = enumerate_space(degrees(h0), spec, limits);
  std::map<CanonicalState, std::size_t> index;
  for (std::size_t i = 0; i < space.states.size(); ++i)
    index[space.states[i]] = i;
  if (!index.count(canonicalize(h0)))
    throw std::invalid_argument("initial hypergraph outside the space");

  EmpiricalResult r;
  r.states = space.states;
  r.counts.assign(space.states.size(), 0);
  const TransitionMatrix t = transition_matrix(space, method);
  r.expected = stationary(t);

  RngStream base(seed);
  for (int s = 0; s < samples; ++s) {
    RngStream rng = base.derive(static_cast<std::uint64_t>(s));
    const Hypergraph end =
        method == Method::trade
            ? run_hypercurveball(h0, spec, steps_per_sample, rng)
            : run_shuffle(h0, spec, steps_per_sample, rng);
    ++r.counts[index.at(canonicalize(end))];
  }

  r.frequencies.resize(r.counts.size());
  int df = -1;
  for (std::size_t i = 0; i < r.counts.size(); ++i) {
    r.frequencies[i] =
        static_cast<double>(r.counts[i]) / static_cast<double>(samples);
    const double expect = r.expected[i] * samples;
    if (expect > 1e-9 * samples) {
      const double diff = static_cast<double>(r.counts[i]) - expect;
      r.chi_square += diff * diff / expect;
      ++df;
    } else if (r.counts[i] > 0) {
      r.chi_square = std::numeric_limits<double>::infinity();
    }
  }
  if (df <= 0 || !std::isfinite(r.chi_square))
    r.p_value = std::isfinite(r.chi_square) ? 1.0 : 0.0;
  else
    r.p_value = boost::math::gamma_q(df / 2.0, r.chi_square / 2.0);
  return r;
}

RegularityReport regularity_check(const TransitionMatrix& t,
                                  const std::vector<BigInt>& stub_counts) {
  const std::size_t n = t.size();
  if (stub_counts.size() != n)
    throw std::invalid_argument("stub count / matrix size mismatch");
  RegularityReport r;
  r.min_diagonal = n ? 1.0 : 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double row =
        std::accumulate(t.p[i].begin(), t.p[i].end(), 0.0);
    r.max_row_error = std::max(r.max_row_error, std::abs(row - 1.0));
    r.min_diagonal = std::min(r.min_diagonal, t.p[i][i]);
  }
  for (std::size_t j = 0; j < n; ++j) {
    double col = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      col += t.p[i][j] *
             Rational(stub_counts[i], stub_counts[j]).convert_to<double>();
    r.max_col_error = std::max(r.max_col_error, std::abs(col - 1.0));
  }
  return r;
}

}  // namespace hcb
