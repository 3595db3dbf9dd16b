#include "hcb/mixbench.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <thread>

#include "hcb/shuffles.hpp"
#include "hcb/trades.hpp"

namespace hcb {
namespace {

double side_diff(const Multiset& a, const Multiset& b) {
  double acc = 0.0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      acc += ia->second;
      ++ia;
    } else if (ia == a.end() || ib->first < ia->first) {
      acc += ib->second;
      ++ib;
    } else {
      acc += std::abs(ia->second - ib->second);
      ++ia;
      ++ib;
    }
  }
  return acc;
}

// Solves the square system a * x = rhs in place; returns false when
// (numerically) singular.
bool solve_dense(std::vector<std::vector<double>> a, std::vector<double> rhs,
                 std::vector<double>& x) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    if (std::abs(a[piv][col]) < 1e-14) return false;
    std::swap(a[col], a[piv]);
    std::swap(rhs[col], rhs[piv]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const double f = a[r][col] / a[col][col];
      if (f == 0.0) continue;
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  x.resize(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = rhs[i] / a[i][i];
  return true;
}

double model(double L, double a, double b, double c, double d, double x) {
  return L - a * std::exp(-b * x) - c * std::exp(-d * x);
}

double rmse_of(const std::vector<double>& x, const std::vector<double>& y,
               const double* th) {
  double acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = model(th[0], th[1], th[2], th[3], th[4], x[i]) - y[i];
    acc += r * r;
  }
  return std::sqrt(acc / static_cast<double>(x.size()));
}

// Exact least squares in (L, a, c) for fixed rates.
bool linear_subproblem(const std::vector<double>& x,
                       const std::vector<double>& y, double b, double d,
                       double out[3]) {
  std::vector<std::vector<double>> ata(3, std::vector<double>(3, 0.0));
  std::vector<double> aty(3, 0.0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double phi[3] = {1.0, -std::exp(-b * x[i]), -std::exp(-d * x[i])};
    for (int r = 0; r < 3; ++r) {
      aty[r] += phi[r] * y[i];
      for (int c = 0; c < 3; ++c) ata[r][c] += phi[r] * phi[c];
    }
  }
  std::vector<double> sol;
  if (!solve_dense(ata, aty, sol)) return false;
  out[0] = sol[0];
  out[1] = sol[1];
  out[2] = sol[2];
  return true;
}

// Damped Gauss-Newton polish of all five parameters.
void refine(const std::vector<double>& x, const std::vector<double>& y,
            double th[5]) {
  double lambda = 1e-3;
  double best = rmse_of(x, y, th);
  for (int iter = 0; iter < 200; ++iter) {
    std::vector<std::vector<double>> jtj(5, std::vector<double>(5, 0.0));
    std::vector<double> jtr(5, 0.0);
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double eb = std::exp(-th[2] * x[i]);
      const double ed = std::exp(-th[4] * x[i]);
      const double r =
          model(th[0], th[1], th[2], th[3], th[4], x[i]) - y[i];
      const double j[5] = {1.0, -eb, th[1] * x[i] * eb, -ed,
                           th[3] * x[i] * ed};
      for (int a = 0; a < 5; ++a) {
        jtr[a] += j[a] * r;
        for (int b = 0; b < 5; ++b) jtj[a][b] += j[a] * j[b];
      }
    }
    auto damped = jtj;
    for (int a = 0; a < 5; ++a) damped[a][a] += lambda * (jtj[a][a] + 1e-12);
    std::vector<double> delta;
    std::vector<double> neg(5);
    for (int a = 0; a < 5; ++a) neg[a] = -jtr[a];
    if (!solve_dense(damped, neg, delta)) break;
    double trial[5];
    for (int a = 0; a < 5; ++a) trial[a] = th[a] + delta[a];
    trial[2] = std::max(trial[2], 1e-12);
    trial[4] = std::max(trial[4], 1e-12);
    const double score = rmse_of(x, y, trial);
    if (score < best) {
      std::copy(trial, trial + 5, th);
      if (best - score < 1e-14 * (1.0 + best)) break;
      best = score;
      lambda = std::max(lambda * 0.3, 1e-12);
    } else {
      lambda *= 10.0;
      if (lambda > 1e12) break;
    }
  }
}

}  // namespace

double perturbation_degree(const Hypergraph& g, const Hypergraph& h) {
  if (g.directed() != h.directed() || g.node_count() != h.node_count() ||
      g.edge_count() != h.edge_count())
    throw std::invalid_argument("perturbation needs matching shapes");
  double acc = 0.0;
  double degree_sum = 0.0;
  for (int v = 0; v < g.node_count(); ++v) {
    acc += side_diff(g.incidence(v).tail, h.incidence(v).tail);
    degree_sum += static_cast<double>(cardinality(g.incidence(v).tail));
    if (g.directed()) {
      acc += side_diff(g.incidence(v).head, h.incidence(v).head);
      degree_sum += static_cast<double>(cardinality(g.incidence(v).head));
    }
  }
  if (degree_sum == 0.0) return 0.0;
  return acc / (2.0 * degree_sum);
}

MixCurve run_mixing_experiment(const Hypergraph& h0, const SpaceSpec& spec,
                               Method method, std::size_t steps, int runs,
                               std::size_t record_every, std::uint64_t seed,
                               int jobs) {
  if (runs < 1) throw std::invalid_argument("need at least one run");
  if (record_every == 0) throw std::invalid_argument("record_every must be > 0");
  MixCurve curve;
  curve.runs = runs;
  curve.method = method;
  curve.seed = seed;
  curve.steps.push_back(0);
  for (std::size_t s = record_every; s <= steps; s += record_every)
    curve.steps.push_back(s);
  if (curve.steps.back() != steps) curve.steps.push_back(steps);
  const std::size_t n_points = curve.steps.size();

  RngStream base(seed);
  std::vector<std::vector<double>> per_run(
      runs, std::vector<double>(n_points, 0.0));
  auto one_run = [&](int r) {
    RngStream rng = base.derive(static_cast<std::uint64_t>(r));
    std::size_t next = 1;  // index 0 is step 0, perturbation 0
    StepObserver obs = [&](std::size_t step, const Hypergraph& h) {
      if (next < n_points && step == curve.steps[next]) {
        per_run[r][next] = perturbation_degree(h0, h);
        ++next;
      }
    };
    if (method == Method::trade)
      run_hypercurveball(h0, spec, steps, rng, obs);
    else
      run_shuffle(h0, spec, steps, rng, obs);
  };

  const int workers = std::max(1, std::min(jobs, runs));
  if (workers == 1) {
    for (int r = 0; r < runs; ++r) one_run(r);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (int r = w; r < runs; r += workers) one_run(r);
      });
    for (auto& t : pool) t.join();
  }

  curve.mean.resize(n_points);
  curve.stddev.resize(n_points);
  for (std::size_t i = 0; i < n_points; ++i) {
    double m = 0.0;
    for (int r = 0; r < runs; ++r) m += per_run[r][i];
    m /= runs;
    curve.mean[i] = m;
    double var = 0.0;
    if (runs >= 2) {
      for (int r = 0; r < runs; ++r) {
        const double d = per_run[r][i] - m;
        var += d * d;
      }
      var /= runs - 1;
    }
    curve.stddev[i] = std::sqrt(var);
  }
  return curve;
}

std::optional<std::size_t> estimate_mixing_time(const MixCurve& curve,
                                                double band,
                                                double tail_frac) {
  const std::size_t n = curve.mean.size();
  if (n < 3) return std::nullopt;
  const std::size_t tail = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::ceil(tail_frac * n)));
  const double L =
      std::accumulate(curve.mean.end() - tail, curve.mean.end(), 0.0) / tail;
  if (L <= 0.0) return std::nullopt;
  // Still rising: the tail mean clearly exceeds the preceding window.
  if (n >= 2 * tail) {
    const double prev = std::accumulate(curve.mean.end() - 2 * tail,
                                        curve.mean.end() - tail, 0.0) /
                        tail;
    if (L - prev > band * L) return std::nullopt;
  }
  for (std::size_t i = 0; i < n; ++i) {
    bool inside = true;
    for (std::size_t j = i; j < n; ++j)
      if (std::abs(curve.mean[j] - L) > band * L) {
        inside = false;
        break;
      }
    if (inside) return curve.steps[i];
  }
  return std::nullopt;
}

FitResult fit_double_exponential(const std::vector<double>& x,
                                 const std::vector<double>& y, double band) {
  if (x.size() != y.size() || x.size() < 5)
    throw std::invalid_argument("need at least five points to fit");
  const double xmax = *std::max_element(x.begin(), x.end());
  const double scale = xmax > 0.0 ? xmax : 1.0;

  double best[5] = {0, 0, 1, 0, 1};
  double best_rmse = std::numeric_limits<double>::infinity();
  const double grid[4] = {0.5, 2.0, 8.0, 32.0};
  for (double gb : grid) {
    for (double gd : grid) {
      double th[5] = {0, 0, gb / scale, 0, gd / scale};
      double lin[3];
      if (!linear_subproblem(x, y, th[2], th[4], lin)) continue;
      th[0] = lin[0];
      th[1] = lin[1];
      th[3] = lin[2];
      refine(x, y, th);
      const double score = rmse_of(x, y, th);
      if (score < best_rmse) {
        best_rmse = score;
        std::copy(th, th + 5, best);
      }
    }
  }

  FitResult r;
  r.L = best[0];
  r.a = best[1];
  r.b = best[2];
  r.c = best[3];
  r.d = best[4];
  r.rmse = best_rmse;
  r.converged = std::isfinite(best_rmse);
  if (r.converged && r.L > 0.0) {
    // |f(t) - L| <= |a| e^{-bt} + |c| e^{-dt}, which is decreasing.
    auto envelope = [&](double t) {
      return std::abs(r.a) * std::exp(-r.b * t) +
             std::abs(r.c) * std::exp(-r.d * t);
    };
    const double target = band * r.L;
    if (envelope(0.0) <= target) {
      r.mixing_time = 0.0;
    } else {
      double hi = scale;
      while (envelope(hi) > target && hi < scale * 1e9) hi *= 2.0;
      if (envelope(hi) <= target) {
        double lo = 0.0;
        for (int it = 0; it < 200; ++it) {
          const double mid = 0.5 * (lo + hi);
          (envelope(mid) > target ? lo : hi) = mid;
        }
        r.mixing_time = hi;
      }
    }
  }
  return r;
}

std::pair<double, double> fit_loglog_scaling(
    const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 2)
    throw std::invalid_argument("need at least two points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [px, py] : points) {
    if (px <= 0.0 || py <= 0.0)
      throw std::invalid_argument("log-log fit needs positive values");
    const double lx = std::log(px);
    const double ly = std::log(py);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double n = static_cast<double>(points.size());
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  const double intercept = (sy - slope * sx) / n;
  return {slope, intercept};
}

std::string faster_name(FasterMethod f) {
  switch (f) {
    case FasterMethod::hypercurveball: return "hypercurveball";
    case FasterMethod::shuffle: return "shuffle";
    case FasterMethod::tie: return "tie";
  }
  return "?";
}

FasterMethod predict_faster(const Hypergraph& h) {
  const DegreeSequence d = degrees(h);
  double ev, ee;
  if (!h.directed()) {
    std::vector<long long> nd, ed;
    for (const auto& [t, hh] : d.node_degrees) nd.push_back(t);
    for (const auto& [t, hh] : d.edge_degrees) ed.push_back(t);
    const DegreeStats ns = degree_stats(nd);
    const DegreeStats es = degree_stats(ed);
    if (!ns.expected_min_pair || !es.expected_min_pair)
      return FasterMethod::tie;
    ev = *ns.expected_min_pair;
    ee = *es.expected_min_pair;
  } else {
    const DirectedDegreeStats ns = degree_stats_directed(d.node_degrees);
    const DirectedDegreeStats es = degree_stats_directed(d.edge_degrees);
    if (!ns.tail.expected_min_pair || !es.tail.expected_min_pair)
      return FasterMethod::tie;
    ev = (*ns.tail.expected_min_pair + *ns.head.expected_min_pair) / 2.0;
    ee = (*es.tail.expected_min_pair + *es.head.expected_min_pair) / 2.0;
  }
  if (std::abs(ev - ee) <= 1e-12 * (1.0 + std::abs(ev) + std::abs(ee)))
    return FasterMethod::tie;
  return ev > ee ? FasterMethod::hypercurveball : FasterMethod::shuffle;
}

}  // namespace hcb
