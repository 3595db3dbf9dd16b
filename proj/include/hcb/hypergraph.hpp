#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hcb/multiset.hpp"

namespace hcb {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// A pair of multisets. Used both for hyperedges (contents over node ids,
// head empty when undirected) and for node incidences (over edge labels).
struct Sides {
  Multiset tail;
  Multiset head;

  bool operator==(const Sides& o) const = default;
  auto operator<=>(const Sides& o) const = default;
};

// Which hyperedge types a hypergraph space allows. The letters follow the
// usual s (self-loop), d (degenerate), m (multi-hyperedge) convention.
struct SpaceSpec {
  bool directed = false;
  bool allow_self_loops = false;  // meaningful only when directed
  bool allow_degenerate = false;
  bool allow_multi = false;

  // Subset of "sdm", e.g. "dm"; "-" or "" means no types allowed.
  static SpaceSpec parse(const std::string& letters, bool directed);
  std::string letters() const;
};

struct DegreeSequence {
  bool directed = false;
  // Undirected degrees live in .first; .second is 0.
  std::vector<std::pair<long long, long long>> node_degrees;
  std::vector<std::pair<long long, long long>> edge_degrees;

  bool operator==(const DegreeSequence& o) const = default;
  std::string to_string() const;  // e.g. "v:2+2|e:2+2", directed "v:1:1+..."
};

struct EdgeTypeReport {
  std::vector<int> self_loop_labels;
  std::vector<int> degenerate_labels;
  // Groups of labels whose derived hyperedges are equal; every group has
  // size >= 2. Labels ascending within a group, groups ordered by first label.
  std::vector<std::vector<int>> multi_edge_groups;
};

// Label-order-independent normal form: the sorted list of derived
// hyperedges, each serialized as sorted (node, multiplicity) runs.
struct CanonicalState {
  using Content = std::vector<std::pair<int, int>>;
  bool directed = false;
  int node_count = 0;
  std::vector<std::pair<Content, Content>> edges;

  bool operator==(const CanonicalState& o) const = default;
  auto operator<=>(const CanonicalState& o) const = default;
};

// Node-incidence hypergraph. The incidence view is authoritative; the
// derived edge view is kept in sync through the mutating operations.
class Hypergraph {
 public:
  Hypergraph() = default;

  static Hypergraph from_edges(bool directed, int node_count,
                               std::vector<Sides> edges);
  static Hypergraph from_incidence(bool directed, std::vector<Sides> incidence,
                                   int edge_count);

  bool directed() const { return directed_; }
  int node_count() const { return static_cast<int>(incidence_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const Sides& edge(int e) const { return edges_[e]; }
  const Sides& incidence(int v) const { return incidence_[v]; }
  const std::vector<Sides>& edges() const { return edges_; }
  const std::vector<Sides>& incidences() const { return incidence_; }

  // Replaces the incidences of two nodes and updates the touched edges.
  // The new incidences must preserve all node and edge degrees.
  void set_incidence_pair(int v, int w, const Sides& iv, const Sides& iw);

  // Replaces the contents of two edges and updates the touched incidences.
  void set_edge_pair(int e, int f, const Sides& ce, const Sides& cf);

  // External node tokens, in first-seen order. Empty when constructed
  // programmatically; then v<i> naming applies.
  const std::vector<std::string>& node_names() const { return node_names_; }
  void set_node_names(std::vector<std::string> names);
  std::string node_name(int v) const;

 private:
  bool directed_ = false;
  std::vector<Sides> edges_;      // per label: contents over node ids
  std::vector<Sides> incidence_;  // per node: labels it participates in
  std::vector<std::string> node_names_;
};

// --- core operations ---

DegreeSequence degrees(const Hypergraph& h);
EdgeTypeReport classify_edges(const Hypergraph& h);
bool in_space(const Hypergraph& h, const SpaceSpec& spec);
CanonicalState canonicalize(const Hypergraph& h);
// A representative hypergraph with the given canonical state.
Hypergraph representative(const CanonicalState& s);

// Number of stub configurations realizing the hypergraph, under the
// stub-labeled convention with unlabeled hyperedges.
BigInt stub_count(const Hypergraph& h);

struct DegreeStats {
  std::size_t count = 0;
  double mean = 0.0;
  double median = 0.0;
  // E[min{d1,d2}] over unordered pairs of two distinct items; empty when
  // the sequence has fewer than two entries.
  std::optional<double> expected_min_pair;
  // n * mean / (2 * E[min]); empty when E[min] is empty or zero.
  std::optional<double> f_min;
};

DegreeStats degree_stats(const std::vector<long long>& degs);

struct DirectedDegreeStats {
  DegreeStats tail;
  DegreeStats head;
  std::optional<double> f_min_avg;  // mean of the two per-side f_min values
};

DirectedDegreeStats degree_stats_directed(
    const std::vector<std::pair<long long, long long>>& degs);

}  // namespace hcb
