#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hcb/hypergraph.hpp"

namespace hcb {

enum class Method { trade, shuffle };
std::string method_name(Method m);

struct EnumLimits {
  long long max_degree_sum = 16;       // sum of node degrees (per side)
  long long max_matrices = 50000;      // incidence matrices examined
};

struct StateSpace {
  DegreeSequence degrees;
  SpaceSpec spec;
  std::vector<CanonicalState> states;
  std::vector<Hypergraph> reps;     // one representative per state
  std::vector<BigInt> stub_counts;  // stub configurations per state
};

// All canonical states with the given degrees in the given space, found by
// enumerating nonnegative incidence matrices with fixed margins. Throws
// when a limit is exceeded.
StateSpace enumerate_space(const DegreeSequence& d, const SpaceSpec& spec,
                           const EnumLimits& limits = {});

struct TransitionMatrix {
  Method method = Method::trade;
  // Row-stochastic over the canonical states of the originating space.
  std::vector<std::vector<double>> p;

  std::size_t size() const { return p.size(); }
};

// Exact per-state transitions: every node pair (edge pair for shuffle) and
// every stub split is enumerated; rejected proposals land on the diagonal.
TransitionMatrix transition_matrix(const StateSpace& space, Method method);

// Same enumeration with exact rational arithmetic; intended for spaces of
// at most a few dozen states.
std::vector<std::vector<Rational>> transition_matrix_exact(
    const StateSpace& space, Method method);

// Left fixed vector by power iteration to the given residual. The chains
// built here have positive diagonals, so iteration converges.
std::vector<double> stationary(const TransitionMatrix& t,
                               double residual = 1e-12);
std::vector<Rational> stationary_exact(
    const std::vector<std::vector<Rational>>& t);

// Number of strongly connected components of the positive-transition graph.
int scc_count(const TransitionMatrix& t);

enum class VerdictStatus { uniform, biased, disconnected };
std::string verdict_name(VerdictStatus s);

struct UniformityVerdict {
  VerdictStatus status = VerdictStatus::uniform;
  std::size_t n_states = 0;
  int sccs = 1;
  // max_S |pi(S)/pi*(S) - 1| against the stub-weighted target.
  double max_deviation = 0.0;
  // Deviation against the flat-over-canonical-states target; reported for
  // transparency, never used for the verdict.
  double flat_deviation = 0.0;
};

UniformityVerdict uniformity_verdict(const DegreeSequence& d,
                                     const SpaceSpec& spec, Method method,
                                     const EnumLimits& limits = {},
                                     double tolerance = 1e-9);

struct SearchBounds {
  int max_nodes = 3;
  int max_edges = 3;
  long long max_degree = 3;
  bool directed = false;
};

struct SearchHit {
  DegreeSequence degrees;
  SpaceSpec spec;
  Method method;
  UniformityVerdict verdict;
};

// Called for every examined (sequence, space, method); return false to stop.
using SearchVisitor = std::function<bool(const SearchHit&)>;

// Iterates degree sequences within the bounds (sorted to skip relabelings,
// ordered by total degree) and reports every non-uniform verdict.
// Sequences whose spaces exceed the limits are skipped.
std::vector<SearchHit> bias_search(const SearchBounds& bounds,
                                   const std::vector<SpaceSpec>& spaces,
                                   const std::vector<Method>& methods,
                                   const EnumLimits& limits = {},
                                   const SearchVisitor& visit = {});

// A constraint holds if any of its pairs has differing multiplicities in
// the first part of the partition.
struct PartitionConstraint {
  std::vector<std::pair<int, int>> unequal_any;
};

struct ConstrainedPartition {
  Multiset part1;
  BigInt stub_splits;  // number of stub-level splits landing on part1
};

// All multiset-distinct splits of the given cardinality satisfying every
// constraint, with their stub-split multiplicities.
std::vector<ConstrainedPartition> enumerate_constrained_partitions(
    const Multiset& combined, std::size_t k,
    const std::vector<PartitionConstraint>& constraints);

// Exact distribution induced by assigning element counts one element at a
// time in the given order, uniformly over the counts that still admit a
// valid completion. This is the biased sequential scheme; it is provided
// as a diagnostic and is never used by the samplers.
std::map<Multiset, Rational> sequential_partition_bias(
    const Multiset& combined, std::size_t k,
    const std::vector<PartitionConstraint>& constraints,
    const std::vector<int>& element_order);

struct EmpiricalResult {
  std::vector<CanonicalState> states;
  std::vector<std::int64_t> counts;
  std::vector<double> frequencies;
  std::vector<double> expected;  // exact stationary probabilities
  double chi_square = 0.0;
  double p_value = 1.0;
};

// Runs `samples` independent chains for `steps_per_sample` steps each and
// compares end-state frequencies against the exact stationary distribution.
EmpiricalResult empirical_distribution(const Hypergraph& h0,
                                       const SpaceSpec& spec, Method method,
                                       int samples, int steps_per_sample,
                                       std::uint64_t seed,
                                       const EnumLimits& limits = {});

// Row sums of P and column sums of the stub-weighted conjugate
// M(S,S') = P(S->S') * N(S) / N(S'). At canonical-state level the plain
// column sums of P need not be 1 (multi-hyperedge label symmetries); the
// stub-weighted sums are the regularity statement that survives.
struct RegularityReport {
  double max_row_error = 0.0;
  double max_col_error = 0.0;  // stub-weighted
  double min_diagonal = 0.0;
};

RegularityReport regularity_check(const TransitionMatrix& t,
                                  const std::vector<BigInt>& stub_counts);

// Every stub-level split of the combined multiset into parts of
// cardinality k and n-k, one entry per split (entries repeat when stubs
// coincide). Exactly C(n, k) entries.
std::vector<std::pair<Multiset, Multiset>> all_stub_splits(
    const Multiset& combined, std::size_t k);

struct EnumLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace hcb
