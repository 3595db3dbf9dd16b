// End-to-end acceptance checks. Each criterion prints exactly one
// PASS/FAIL line; a FAIL marked "(expected)" documents a check that is
// kept faithful to its reference value even though the value
// itself is inconsistent (see the line's note) and does not affect the
// exit code.

#include <chrono>
#include <cstdio>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hcb/chainlab.hpp"
#include "hcb/datagen.hpp"
#include "hcb/hypergraph.hpp"
#include "hcb/mixbench.hpp"

using namespace hcb;

namespace {

int unexpected_failures = 0;

void report(int number, const std::string& name, bool pass, double seconds,
            const std::string& detail, bool expected_fail = false) {
  const char* tag = pass ? "PASS" : (expected_fail ? "FAIL (expected)" : "FAIL");
  std::printf("criterion %2d [%s]: %s (%.1fs) %s\n", number, name.c_str(), tag,
              seconds, detail.c_str());
  std::fflush(stdout);
  if (!pass && !expected_fail) ++unexpected_failures;
}

double now() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

std::string two(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

// ---------------------------------------------------------------- oracle --
// Independent stub-count oracle (same idea as in the unit suite): sum the
// per-node stub multinomials over every labeled content matrix compatible
// with the margins whose column multiset equals the edge multiset, then
// divide by |E|!.

BigInt factorial_big(long long n) {
  BigInt out = 1;
  for (long long i = 2; i <= n; ++i) out *= i;
  return out;
}

void oracle_rec(const Hypergraph& h, bool head, int v, std::vector<Sides>& cols,
                std::vector<BigInt>& weights,
                const std::function<void(BigInt)>& done) {
  const int n = h.node_count();
  const int m = h.edge_count();
  if (v == n) {
    BigInt w = 1;
    for (const BigInt& x : weights) w *= x;
    done(w);
    return;
  }
  const Multiset& inc = head ? h.incidence(v).head : h.incidence(v).tail;
  const long long dv = static_cast<long long>(cardinality(inc));
  std::vector<long long> cnt(m, 0);
  auto place = [&](auto&& self, int label, long long rem) -> void {
    if (label == m) {
      if (rem != 0) return;
      BigInt w = factorial_big(dv);
      for (int j = 0; j < m; ++j) {
        w /= factorial_big(cnt[j]);
        if (cnt[j] > 0)
          (head ? cols[j].head : cols[j].tail)[v] = static_cast<int>(cnt[j]);
      }
      weights.push_back(w);
      oracle_rec(h, head, v + 1, cols, weights, done);
      weights.pop_back();
      for (int j = 0; j < m; ++j)
        if (cnt[j] > 0) (head ? cols[j].head : cols[j].tail).erase(v);
      return;
    }
    for (long long c = 0; c <= rem; ++c) {
      cnt[label] = c;
      self(self, label + 1, rem - c);
    }
    cnt[label] = 0;
  };
  place(place, 0, dv);
}

BigInt stub_count_oracle(const Hypergraph& h) {
  const int m = h.edge_count();
  std::vector<Sides> target(h.edges());
  std::sort(target.begin(), target.end());
  std::vector<Sides> cols(m);
  std::vector<BigInt> weights;
  BigInt total = 0;
  auto tail_done = [&](BigInt w_tail) {
    if (!h.directed()) {
      std::vector<Sides> got = cols;
      std::sort(got.begin(), got.end());
      if (got == target) total += w_tail;
      return;
    }
    std::vector<BigInt> head_weights;
    oracle_rec(h, true, 0, cols, head_weights, [&](BigInt w_head) {
      std::vector<Sides> got = cols;
      std::sort(got.begin(), got.end());
      if (got == target) total += w_tail * w_head;
    });
  };
  oracle_rec(h, false, 0, cols, weights, tail_done);
  return total / factorial_big(m);
}

// ------------------------------------------------------ sequence helpers --

using Pair = std::pair<long long, long long>;

// Non-increasing sequences over `values` (descending) of length 1..max_len.
void gen_seqs(const std::vector<Pair>& values, int max_len,
              std::vector<Pair>& cur, std::size_t start,
              std::vector<std::vector<Pair>>& out) {
  if (!cur.empty()) out.push_back(cur);
  if (static_cast<int>(cur.size()) == max_len) return;
  for (std::size_t i = start; i < values.size(); ++i) {
    cur.push_back(values[i]);
    gen_seqs(values, max_len, cur, i, out);
    cur.pop_back();
  }
}

std::vector<std::vector<Pair>> sequences(bool directed, long long max_degree,
                                         int max_len) {
  std::vector<Pair> values;
  if (directed) {
    for (long long t = max_degree; t >= 0; --t)
      for (long long h = max_degree; h >= 0; --h)
        if (t + h > 0) values.emplace_back(t, h);
  } else {
    for (long long t = max_degree; t >= 1; --t) values.emplace_back(t, 0);
  }
  std::sort(values.begin(), values.end(), std::greater<>());
  std::vector<std::vector<Pair>> out;
  std::vector<Pair> cur;
  gen_seqs(values, max_len, cur, 0, out);
  return out;
}

Pair sums(const std::vector<Pair>& s) {
  Pair out{0, 0};
  for (const auto& [t, h] : s) {
    out.first += t;
    out.second += h;
  }
  return out;
}

// --------------------------------------------------------------- criteria --

void criterion_1() {
  const double t0 = now();
  struct Row {
    const char* mean;
    const char* med_nodes;
    const char* med_edges;
    const char* emin_nodes;
    const char* emin_edges;
  };
  const Row want[3] = {{"16.27", "16.00", "30.00", "16.00", "9.14"},
                       {"50.05", "99.00", "50.00", "25.52", "50.00"},
                       {"25.05", "49.00", "25.00", "13.02", "25.00"}};
  bool ok = true;
  std::string detail;
  for (int i = 0; i < 3; ++i) {
    const StatsReport r = stats_report(gen_artificial(i + 1));
    const Row& w = want[i];
    const bool row_ok =
        two(r.node_stats.mean) == w.mean && two(r.edge_stats.mean) == w.mean &&
        two(r.node_stats.median) == w.med_nodes &&
        two(r.edge_stats.median) == w.med_edges &&
        two(*r.node_stats.expected_min_pair) == w.emin_nodes &&
        two(*r.edge_stats.expected_min_pair) == w.emin_edges;
    ok &= row_ok;
    if (!row_ok)
      detail += " dataset" + std::to_string(i + 1) + ": mean " +
                two(r.node_stats.mean) + "/" + two(r.edge_stats.mean) +
                " med " + two(r.node_stats.median) + "/" +
                two(r.edge_stats.median) + " emin " +
                two(*r.node_stats.expected_min_pair) + "/" +
                two(*r.edge_stats.expected_min_pair) + ";";
  }
  const double dt = now() - t0;
  ok &= dt < 1.0;
  report(1, "dataset statistics", ok, dt,
         detail.empty() ? "all three synthetic datasets match the reference "
                          "table to 2 decimals"
                        : detail);
}

void criterion_2() {
  const double t0 = now();
  long long checked = 0, mismatches = 0;
  const EnumLimits limits{18, 1000000};

  auto sweep = [&](bool directed, long long max_side_sum, int max_len,
                   const char* letters) {
    const auto node_seqs = sequences(directed, max_side_sum, max_len);
    const auto edge_seqs = node_seqs;
    std::map<Pair, std::vector<const std::vector<Pair>*>> by_sum;
    for (const auto& e : edge_seqs) by_sum[sums(e)].push_back(&e);
    for (const auto& nodes : node_seqs) {
      const Pair s = sums(nodes);
      if (s.first > max_side_sum || s.second > max_side_sum) continue;
      if (s.first + s.second > 8) continue;  // total stub budget
      auto it = by_sum.find(s);
      if (it == by_sum.end()) continue;
      for (const auto* edges : it->second) {
        DegreeSequence d;
        d.directed = directed;
        d.node_degrees = nodes;
        d.edge_degrees = *edges;
        StateSpace space;
        try {
          space = enumerate_space(d, SpaceSpec::parse(letters, directed),
                                  limits);
        } catch (const std::invalid_argument&) {
          continue;
        }
        for (std::size_t i = 0; i < space.reps.size(); ++i) {
          ++checked;
          if (space.stub_counts[i] != stub_count_oracle(space.reps[i]))
            ++mismatches;
        }
      }
    }
  };
  sweep(false, 8, 4, "dm");
  sweep(true, 4, 3, "sdm");

  const double dt = now() - t0;
  const bool ok = mismatches == 0 && checked >= 200 && dt < 60.0;
  std::ostringstream d;
  d << checked << " states checked against the exhaustive stub-matching "
    << "oracle, " << mismatches << " mismatches";
  report(2, "stub-count oracle", ok, dt, d.str());
}

struct SweepResult {
  long long spaces_checked = 0;
  long long max_states = 0;
  int max_sccs = 1;
  double max_deviation = 0.0;
  double max_row_error = 0.0;
  double max_col_error = 0.0;
  double min_diagonal = 1.0;
  std::string worst;
};

// Shared by criteria 3 and 12: every degree sequence within the bounds,
// trade chain, the four spaces of the exactness statement. Each space is
// enumerated and its transition matrix built exactly once.
SweepResult uniformity_sweep() {
  SweepResult res;
  const EnumLimits limits{18, 1000000};
  const struct {
    bool directed;
    const char* letters;
  } spaces[] = {{false, "dm"}, {false, "m"}, {true, "sdm"}, {true, "sm"}};

  for (const auto& sp : spaces) {
    const SpaceSpec spec = SpaceSpec::parse(sp.letters, sp.directed);
    const auto node_seqs = sequences(sp.directed, 3, 3);
    const auto edge_seqs = node_seqs;
    std::map<Pair, std::vector<const std::vector<Pair>*>> by_sum;
    for (const auto& e : edge_seqs) by_sum[sums(e)].push_back(&e);
    for (const auto& nodes : node_seqs) {
      auto it = by_sum.find(sums(nodes));
      if (it == by_sum.end()) continue;
      for (const auto* edges : it->second) {
        DegreeSequence d;
        d.directed = sp.directed;
        d.node_degrees = nodes;
        d.edge_degrees = *edges;
        StateSpace space;
        try {
          space = enumerate_space(d, spec, limits);
        } catch (const std::invalid_argument&) {
          continue;
        }
        if (space.states.empty()) continue;

        const TransitionMatrix t = transition_matrix(space, Method::trade);
        const int sccs = scc_count(t);
        const std::vector<double> pi = stationary(t);
        BigInt total = 0;
        for (const BigInt& c : space.stub_counts) total += c;
        double dev = 0.0;
        for (std::size_t i = 0; i < pi.size(); ++i) {
          const double target =
              static_cast<double>(Rational(space.stub_counts[i], total));
          dev = std::max(dev, std::abs(pi[i] / target - 1.0));
        }
        const RegularityReport reg = regularity_check(t, space.stub_counts);

        ++res.spaces_checked;
        res.max_states =
            std::max(res.max_states, static_cast<long long>(pi.size()));
        res.max_deviation = std::max(res.max_deviation, dev);
        res.max_row_error = std::max(res.max_row_error, reg.max_row_error);
        res.max_col_error = std::max(res.max_col_error, reg.max_col_error);
        res.min_diagonal = std::min(res.min_diagonal, reg.min_diagonal);
        if (sccs > res.max_sccs || dev >= 1e-9) {
          res.max_sccs = std::max(res.max_sccs, sccs);
          res.worst = d.to_string() + " space " + sp.letters;
        }
      }
    }
  }
  return res;
}

SweepResult criterion_3() {
  const double t0 = now();
  const SweepResult r = uniformity_sweep();
  const double dt = now() - t0;
  const bool ok = r.max_sccs == 1 && r.max_deviation < 1e-9 && dt < 600.0;
  std::ostringstream d;
  d << r.spaces_checked << " spaces (largest " << r.max_states
    << " states), all single-component, max stationary deviation "
    << r.max_deviation;
  if (!ok && !r.worst.empty()) d << "; first offender " << r.worst;
  report(3, "exact uniformity sweep", ok, dt, d.str());
  return r;
}

void criterion_12(const SweepResult& r) {
  const bool ok =
      r.min_diagonal > 0 && r.max_row_error < 1e-9 && r.max_col_error < 1e-9;
  std::ostringstream d;
  d << "min diagonal " << r.min_diagonal << ", max row-sum error "
    << r.max_row_error << ", max stub-weighted column-sum error "
    << r.max_col_error << " over the criterion-3 sweep";
  report(12, "chain regularity diagnostics", ok, 0.0, d.str());
}

void criterion_4() {
  const double t0 = now();
  const SearchBounds undirected{4, 4, 4, false};
  const SearchBounds directed{4, 4, 4, true};
  const struct {
    const SearchBounds* bounds;
    const char* letters;
  } targets[] = {{&undirected, "d"},
                 {&directed, "sd"},
                 {&directed, "dm"},
                 {&directed, "d"}};
  bool ok = true;
  std::string detail;
  for (const auto& t : targets) {
    const SpaceSpec spec = SpaceSpec::parse(t.letters, t.bounds->directed);
    bool found = false;
    std::string where;
    bias_search(*t.bounds, {spec}, {Method::trade}, {},
                [&](const SearchHit& hit) {
                  if (hit.verdict.status != VerdictStatus::uniform) {
                    found = true;
                    where = hit.degrees.to_string();
                    return false;
                  }
                  return true;
                });
    ok &= found;
    detail += std::string(t.bounds->directed ? " directed " : " undirected ") +
              t.letters + ": " +
              (found ? "non-uniform at " + where : "none found") + ";";
  }
  const double dt = now() - t0;
  ok &= dt < 1800.0;
  report(4, "bias existence search", ok, dt, detail);
}

void criterion_5() {
  const double t0 = now();
  const SearchBounds bounds{4, 4, 4, true};
  const std::vector<SpaceSpec> spaces = {SpaceSpec::parse("d", true),
                                         SpaceSpec::parse("dm", true)};
  auto find_gap = [&](Method broken, Method clean) -> std::string {
    std::string where;
    bias_search(bounds, spaces, {broken}, {}, [&](const SearchHit& hit) {
      if (hit.verdict.status == VerdictStatus::uniform) return true;
      UniformityVerdict other;
      try {
        other = uniformity_verdict(hit.degrees, hit.spec, clean);
      } catch (const EnumLimitError&) {
        return true;
      }
      if (other.status == VerdictStatus::uniform) {
        where = hit.degrees.to_string() + " space " + hit.spec.letters();
        return false;
      }
      return true;
    });
    return where;
  };
  const std::string shuffle_gap = find_gap(Method::shuffle, Method::trade);
  const std::string trade_gap = find_gap(Method::trade, Method::shuffle);
  const double dt = now() - t0;
  const bool ok = !shuffle_gap.empty() && !trade_gap.empty() && dt < 1800.0;
  std::string detail =
      " trade-uniform/shuffle-broken: " +
      (shuffle_gap.empty() ? std::string("none") : shuffle_gap) +
      "; shuffle-uniform/trade-broken: " +
      (trade_gap.empty() ? std::string("none") : trade_gap);
  report(5, "method non-equivalence search", ok, dt, detail);
}

void criterion_6() {
  const double t0 = now();
  // Three nodes of in/out degree one, three unit directed edges, no
  // self-loops: exactly the two rotation states.
  DegreeSequence d;
  d.directed = true;
  d.node_degrees = {{1, 1}, {1, 1}, {1, 1}};
  d.edge_degrees = {{1, 1}, {1, 1}, {1, 1}};
  const SpaceSpec spec = SpaceSpec::parse("dm", true);
  const StateSpace space = enumerate_space(d, spec);
  bool ok = space.states.size() == 2;
  std::string detail = std::to_string(space.states.size()) + " states";
  if (ok) {
    const TransitionMatrix trade = transition_matrix(space, Method::trade);
    const TransitionMatrix shuffle = transition_matrix(space, Method::shuffle);
    const bool trade_connects =
        trade.p[0][1] > 0 && trade.p[1][0] > 0 && scc_count(trade) == 1;
    const bool shuffle_stuck =
        shuffle.p[0][1] == 0 && shuffle.p[1][0] == 0 &&
        scc_count(shuffle) == 2;
    ok = trade_connects && shuffle_stuck;
    detail += trade_connects ? ", trade connects them"
                             : ", trade does NOT connect them";
    detail += shuffle_stuck ? ", shuffle cannot leave either"
                            : ", shuffle moves (it should not)";
  }
  const double dt = now() - t0;
  ok &= dt < 1.0;
  report(6, "rotation pair connectivity", ok, dt, detail);
}

void criterion_7() {
  const double t0 = now();
  std::vector<Sides> edges(2);
  edges[0].tail = {{0, 1}, {1, 1}};
  edges[1].tail = {{0, 1}, {1, 1}};
  const Hypergraph h0 = Hypergraph::from_edges(false, 2, std::move(edges));
  const EmpiricalResult r = empirical_distribution(
      h0, SpaceSpec::parse("dm", false), Method::trade, 100000, 50, 20260823);
  bool ok = r.states.size() == 2;
  std::string detail;
  if (ok) {
    // The doubled-edge state carries 2/3 of the stub mass.
    const std::size_t major = r.expected[0] > r.expected[1] ? 0 : 1;
    ok = std::abs(r.frequencies[major] - 2.0 / 3) <= 0.01 &&
         std::abs(r.frequencies[1 - major] - 1.0 / 3) <= 0.01 &&
         r.p_value > 0.01;
    std::ostringstream d;
    d << "frequencies " << r.frequencies[major] << "/"
      << r.frequencies[1 - major] << " vs 2/3 and 1/3, chi-square p "
      << r.p_value;
    detail = d.str();
  } else {
    detail = "expected a 2-state space";
  }
  const double dt = now() - t0;
  ok &= dt < 30.0;
  report(7, "empirical vs exact law", ok, dt, detail);
}

void criterion_8() {
  const double t0 = now();
  // Combined incidence {x,x,y,a,a,b,z}, |I'_v| = 3, with the constraints
  // m(x) != m(y) and m(a) != m(b).
  Multiset combined;
  combined[0] = 2;  // x
  combined[1] = 1;  // y
  combined[2] = 2;  // a
  combined[3] = 1;  // b
  combined[4] = 1;  // z
  const std::vector<PartitionConstraint> constraints = {{{{0, 1}}},
                                                        {{{2, 3}}}};
  auto part = [](std::initializer_list<std::pair<int, int>> items) {
    Multiset m;
    for (const auto& [k, c] : items) m[k] = c;
    return m;
  };

  const auto parts = enumerate_constrained_partitions(combined, 3, constraints);
  std::map<int, int> by_x_copies;
  for (const auto& p : parts) ++by_x_copies[multiplicity(p.part1, 0)];
  const bool counts_ok = parts.size() == 8 && by_x_copies[0] == 3 &&
                         by_x_copies[1] == 3 && by_x_copies[2] == 2;

  const auto dist1 =
      sequential_partition_bias(combined, 3, constraints, {0, 1, 2, 3, 4});
  bool order1_ok = dist1.size() == 8 &&
                   dist1.at(part({{0, 2}, {2, 1}})) == Rational(1, 6) &&
                   dist1.at(part({{0, 2}, {3, 1}})) == Rational(1, 6);
  int ninths = 0;
  for (const auto& [p, q] : dist1)
    if (q == Rational(1, 9)) ++ninths;
  order1_ok &= ninths == 6;

  const auto dist2 =
      sequential_partition_bias(combined, 3, constraints, {2, 1, 0, 3, 4});
  const bool aax_ok = dist2.at(part({{2, 2}, {0, 1}})) == Rational(1, 6);
  // Reference value kept as given: probability 1/6 for {a,a,b}. That
  // part violates the m(x) != m(y) constraint (x and y both get count 0),
  // so the scheme assigns it probability 0 and this sub-check stays red.
  const bool aab_ok = dist2.count(part({{2, 2}, {3, 1}})) != 0 &&
                      dist2.count(part({{2, 2}, {3, 1}})) &&
                      dist2.at(part({{2, 2}, {3, 1}})) == Rational(1, 6);

  const double dt = now() - t0;
  const bool pass = counts_ok && order1_ok && aax_ok && aab_ok && dt < 1.0;
  std::ostringstream d;
  d << "partition counts " << by_x_copies[0] << "/" << by_x_copies[1] << "/"
    << by_x_copies[2] << (counts_ok ? " ok" : " WRONG")
    << "; first order 1/6,1/6 + six 1/9 " << (order1_ok ? "ok" : "WRONG")
    << "; second order {a,a,x}=1/6 " << (aax_ok ? "ok" : "WRONG")
    << "; second order {a,a,b}=1/6 "
    << (aab_ok ? "ok" : "unmet: that part is constraint-infeasible and has "
                        "probability 0");
  report(8, "sequential partition bias demos", pass, dt, d.str(),
         /*expected_fail=*/counts_ok && order1_ok && aax_ok && !aab_ok);
}

struct MixOutcome {
  Method measured_faster = Method::trade;
  bool separated = false;
  bool mixed = false;
  std::size_t mixing_step = 0;
  std::string detail;
};

MixOutcome compare_methods(const Hypergraph& h0, const std::string& name,
                           std::size_t steps, int runs,
                           std::size_t record_every, std::uint64_t seed) {
  const SpaceSpec spec = SpaceSpec::parse("dm", false);
  const MixCurve trade = run_mixing_experiment(h0, spec, Method::trade, steps,
                                               runs, record_every, seed, 8);
  const MixCurve shuffle = run_mixing_experiment(
      h0, spec, Method::shuffle, steps, runs, record_every, seed + 1, 8);

  const auto mt_trade = estimate_mixing_time(trade);
  const auto mt_shuffle = estimate_mixing_time(shuffle);

  MixOutcome out;
  const MixCurve* fast = nullptr;
  const MixCurve* slow = nullptr;
  std::optional<std::size_t> mt_fast;
  if (mt_trade && (!mt_shuffle || *mt_trade <= *mt_shuffle)) {
    out.measured_faster = Method::trade;
    fast = &trade;
    slow = &shuffle;
    mt_fast = mt_trade;
  } else if (mt_shuffle) {
    out.measured_faster = Method::shuffle;
    fast = &shuffle;
    slow = &trade;
    mt_fast = mt_shuffle;
  }
  std::ostringstream d;
  d << name << ": mixing trade ";
  if (mt_trade) d << *mt_trade; else d << ">" << steps;
  d << " shuffle ";
  if (mt_shuffle) d << *mt_shuffle; else d << ">" << steps;
  if (mt_fast) {
    out.mixed = true;
    out.mixing_step = *mt_fast;
    std::size_t idx = 0;
    while (idx + 1 < fast->steps.size() && fast->steps[idx] < *mt_fast) ++idx;
    const double half = 1.96 / std::sqrt(static_cast<double>(runs));
    const double lo_fast = fast->mean[idx] - half * fast->stddev[idx];
    const double hi_slow = slow->mean[idx] + half * slow->stddev[idx];
    out.separated = lo_fast > hi_slow;
    d << ", at step " << fast->steps[idx] << " fast "
      << method_name(out.measured_faster) << " band low " << lo_fast
      << " vs slow band high " << hi_slow;
  }
  out.detail = d.str();
  return out;
}

std::vector<MixOutcome> criterion_9() {
  const double t0 = now();
  std::vector<MixOutcome> out;
  out.push_back(compare_methods(gen_artificial(1), "dataset1", 4000, 24, 25,
                                90001));
  out.push_back(compare_methods(gen_artificial(2), "dataset2", 60000, 20, 300,
                                90002));
  out.push_back(compare_methods(gen_artificial(3), "dataset3", 30000, 20, 150,
                                90003));
  const bool ok = out[0].mixed && out[0].separated &&
                  out[0].measured_faster == Method::trade && out[1].mixed &&
                  out[1].separated &&
                  out[1].measured_faster == Method::shuffle && out[2].mixed &&
                  out[2].separated &&
                  out[2].measured_faster == Method::shuffle;
  std::string detail;
  for (const auto& o : out) detail += " " + o.detail + ";";
  report(9, "mixing-speed ordering", ok, now() - t0, detail);
  return out;
}

void criterion_10(const std::vector<MixOutcome>& measured) {
  const double t0 = now();
  bool ok = true;
  std::string detail;
  for (int i = 0; i < 3; ++i) {
    const FasterMethod pred = predict_faster(gen_artificial(i + 1));
    const FasterMethod got = measured[i].measured_faster == Method::trade
                                 ? FasterMethod::hypercurveball
                                 : FasterMethod::shuffle;
    const bool agree = measured[i].mixed && pred == got;
    ok &= agree;
    detail += " dataset" + std::to_string(i + 1) + ": predicted " +
              faster_name(pred) + ", measured " +
              (measured[i].mixed ? faster_name(got) : "inconclusive") + ";";
  }
  detail += " real datasets: none supplied, skipped";
  report(10, "faster-method prediction", ok, now() - t0, detail);
}

void criterion_11() {
  const double t0 = now();
  // Planted curve: exact samples of L - a e^{-bx} - c e^{-dx}.
  const double L = 0.85, a = 0.40, b = 0.008, c = 0.25, dd = 0.0015;
  std::vector<double> xs, ys;
  for (int i = 0; i <= 120; ++i) {
    const double x = 25.0 * i;
    xs.push_back(x);
    ys.push_back(L - a * std::exp(-b * x) - c * std::exp(-dd * x));
  }
  const FitResult fit = fit_double_exponential(xs, ys);
  auto rel = [](double got, double want) {
    return std::abs(got - want) / std::abs(want);
  };
  // The two exponential terms are interchangeable; order by rate.
  double fa = fit.a, fb = fit.b, fc = fit.c, fd = fit.d;
  if (fb < fd) {
    std::swap(fa, fc);
    std::swap(fb, fd);
  }
  const bool planted_ok = fit.converged && rel(fit.L, L) <= 1e-4 &&
                          rel(fa, a) <= 1e-4 && rel(fb, b) <= 1e-4 &&
                          rel(fc, c) <= 1e-4 && rel(fd, dd) <= 1e-4;

  // Exact power-law points: t = 5.46 * f^1.07.
  std::vector<std::pair<double, double>> pts;
  for (double f : {10.0, 20.0, 50.0, 100.0, 200.0, 500.0, 1000.0, 2000.0})
    pts.emplace_back(f, 5.46 * std::pow(f, 1.07));
  const auto [slope, intercept] = fit_loglog_scaling(pts);
  const bool loglog_ok = std::abs(slope - 1.07) < 1e-10 &&
                         std::abs(intercept - std::log(5.46)) < 1e-10;

  const double dt = now() - t0;
  std::ostringstream d;
  d << "planted recovery " << (planted_ok ? "ok" : "off") << " (rmse "
    << fit.rmse << "), log-log slope " << slope << " intercept " << intercept;
  report(11, "fit machinery", planted_ok && loglog_ok, dt, d.str());
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  const SweepResult sweep = criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  const std::vector<MixOutcome> measured = criterion_9();
  criterion_10(measured);
  criterion_11();
  criterion_12(sweep);

  if (unexpected_failures > 0) {
    std::printf("%d criterion(s) failed\n", unexpected_failures);
    return 1;
  }
  std::printf("all criteria satisfied (one documented red sub-check)\n");
  return 0;
}
