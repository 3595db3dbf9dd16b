#include <algorithm>
#include <numeric>

#include "hcb/hypergraph.hpp"

namespace hcb {
namespace {

BigInt factorial(long long n) {
  BigInt out = 1;
  for (long long i = 2; i <= n; ++i) out *= i;
  return out;
}

}  // namespace

DegreeStats degree_stats(const std::vector<long long>& degs) {
  if (degs.empty()) throw std::invalid_argument("empty degree sequence");
  DegreeStats st;
  st.count = degs.size();
  std::vector<long long> sorted = degs;
  std::sort(sorted.begin(), sorted.end());
  const long long total = std::accumulate(sorted.begin(), sorted.end(), 0LL);
  st.mean = static_cast<double>(total) / static_cast<double>(st.count);
  // Lower middle element for even-length sequences.
  st.median = static_cast<double>(sorted[(st.count - 1) / 2]);
  if (st.count >= 2) {
    // E[min{d1,d2}] over unordered pairs of distinct items. With the
    // sequence ascending, element i is the minimum of its pairs with all
    // later elements.
    long long acc = 0;
    const long long n = static_cast<long long>(st.count);
    for (long long i = 0; i < n; ++i) acc += sorted[i] * (n - 1 - i);
    const double pairs = static_cast<double>(n) * (n - 1) / 2.0;
    st.expected_min_pair = static_cast<double>(acc) / pairs;
    if (*st.expected_min_pair > 0.0) {
      st.f_min = static_cast<double>(n) * st.mean /
                 (2.0 * *st.expected_min_pair);
    }
  }
  return st;
}

DirectedDegreeStats degree_stats_directed(
    const std::vector<std::pair<long long, long long>>& degs) {
  std::vector<long long> tails, heads;
  tails.reserve(degs.size());
  heads.reserve(degs.size());
  for (const auto& [t, h] : degs) {
    tails.push_back(t);
    heads.push_back(h);
  }
  DirectedDegreeStats st{degree_stats(tails), degree_stats(heads), {}};
  if (st.tail.f_min && st.head.f_min)
    st.f_min_avg = (*st.tail.f_min + *st.head.f_min) / 2.0;
  return st;
}

BigInt stub_count(const Hypergraph& h) {
  // (prod_v d_v!) / (prod_e prod_v m_e(v)! * prod_groups group_size!),
  // tail and head factors separately for directed hypergraphs, with the
  // multi-edge group factor counted once per full directed edge.
  BigInt num = 1, den = 1;
  for (int v = 0; v < h.node_count(); ++v) {
    num *= factorial(static_cast<long long>(cardinality(h.incidence(v).tail)));
    if (h.directed())
      num *=
          factorial(static_cast<long long>(cardinality(h.incidence(v).head)));
  }
  for (int e = 0; e < h.edge_count(); ++e) {
    for (const auto& [v, c] : h.edge(e).tail) den *= factorial(c);
    for (const auto& [v, c] : h.edge(e).head) den *= factorial(c);
  }
  for (const auto& group : classify_edges(h).multi_edge_groups)
    den *= factorial(static_cast<long long>(group.size()));
  return num / den;
}

}  // namespace hcb
