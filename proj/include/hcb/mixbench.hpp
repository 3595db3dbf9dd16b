#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hcb/chainlab.hpp"
#include "hcb/hypergraph.hpp"

namespace hcb {

// Normalized sum of absolute incidence-multiplicity differences between H
// and G under the identity label mapping. 0 = identical, 1 = maximally
// perturbed. Both hypergraphs must share node set, labels and per-label
// edge degrees (guaranteed along any trade or shuffle trajectory).
double perturbation_degree(const Hypergraph& g, const Hypergraph& h);

struct MixCurve {
  std::vector<std::size_t> steps;
  std::vector<double> mean;    // per-step mean perturbation over runs
  std::vector<double> stddev;  // per-step sample standard deviation
  int runs = 0;
  Method method = Method::trade;
  std::string dataset;
  std::uint64_t seed = 0;
};

// Independent chains with seeds derived from the base seed; perturbation
// w.r.t. h0 recorded every record_every steps (step 0 included).
MixCurve run_mixing_experiment(const Hypergraph& h0, const SpaceSpec& spec,
                               Method method, std::size_t steps, int runs,
                               std::size_t record_every, std::uint64_t seed,
                               int jobs = 1);

// First recorded step within the band around the limiting value L (mean of
// the final tail_frac of recorded points, band relative to L). Empty when
// the tail is still rising.
std::optional<std::size_t> estimate_mixing_time(const MixCurve& curve,
                                                double band = 0.02,
                                                double tail_frac = 0.10);

struct FitResult {
  // f(x) = L - a*exp(-b x) - c*exp(-d x), b, d > 0.
  double L = 0.0, a = 0.0, b = 0.0, c = 0.0, d = 0.0;
  double rmse = 0.0;
  bool converged = false;
  // First x with |f(x) - L| <= band * L for the fitted curve.
  std::optional<double> mixing_time;
};

// Multi-start damped least squares (16 deterministic starts over
// log-spaced rate pairs; linear subproblem solved exactly per start).
FitResult fit_double_exponential(const std::vector<double>& x,
                                 const std::vector<double>& y,
                                 double band = 0.02);

// OLS of ln(mixing_time) on ln(f_min); returns (slope, intercept).
std::pair<double, double> fit_loglog_scaling(
    const std::vector<std::pair<double, double>>& points);

enum class FasterMethod { hypercurveball, shuffle, tie };
std::string faster_name(FasterMethod f);

// Min-degree conjecture: hypercurveball iff E_V[min{d1,d2}] exceeds
// E_E[min{d1,d2}] (directed: tail/head averages).
FasterMethod predict_faster(const Hypergraph& h);

}  // namespace hcb
