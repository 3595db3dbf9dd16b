#include "hcb/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace hcb {

SpaceSpec SpaceSpec::parse(const std::string& letters, bool directed) {
  SpaceSpec spec;
  spec.directed = directed;
  for (char c : letters) {
    switch (c) {
      case 's': spec.allow_self_loops = true; break;
      case 'd': spec.allow_degenerate = true; break;
      case 'm': spec.allow_multi = true; break;
      case '-': break;
      default:
        throw std::invalid_argument("unknown hyperedge type letter: " +
                                    std::string(1, c));
    }
  }
  if (!directed) spec.allow_self_loops = false;
  return spec;
}

std::string SpaceSpec::letters() const {
  std::string out;
  if (directed && allow_self_loops) out += 's';
  if (allow_degenerate) out += 'd';
  if (allow_multi) out += 'm';
  return out.empty() ? "-" : out;
}

std::string DegreeSequence::to_string() const {
  auto side = [&](const std::vector<std::pair<long long, long long>>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) os << '+';
      os << v[i].first;
      if (directed) os << ':' << v[i].second;
    }
    return os.str();
  };
  return "v:" + side(node_degrees) + "|e:" + side(edge_degrees);
}

Hypergraph Hypergraph::from_edges(bool directed, int node_count,
                                  std::vector<Sides> edges) {
  Hypergraph h;
  h.directed_ = directed;
  h.incidence_.assign(static_cast<std::size_t>(node_count), Sides{});
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const Sides& s = edges[e];
    if (!directed && !s.head.empty())
      throw std::invalid_argument("undirected edge with head contents");
    if (s.tail.empty() && s.head.empty())
      throw std::invalid_argument("empty hyperedge");
    for (const auto& [v, c] : s.tail) {
      if (v < 0 || v >= node_count)
        throw std::out_of_range("edge references unknown node");
      h.incidence_[v].tail[static_cast<int>(e)] = c;
    }
    for (const auto& [v, c] : s.head) {
      if (v < 0 || v >= node_count)
        throw std::out_of_range("edge references unknown node");
      h.incidence_[v].head[static_cast<int>(e)] = c;
    }
  }
  h.edges_ = std::move(edges);
  return h;
}

Hypergraph Hypergraph::from_incidence(bool directed,
                                      std::vector<Sides> incidence,
                                      int edge_count) {
  std::vector<Sides> edges(static_cast<std::size_t>(edge_count));
  for (std::size_t v = 0; v < incidence.size(); ++v) {
    for (const auto& [e, c] : incidence[v].tail) {
      if (e < 0 || e >= edge_count)
        throw std::out_of_range("incidence references unknown edge label");
      edges[e].tail[static_cast<int>(v)] = c;
    }
    for (const auto& [e, c] : incidence[v].head) {
      if (e < 0 || e >= edge_count)
        throw std::out_of_range("incidence references unknown edge label");
      edges[e].head[static_cast<int>(v)] = c;
    }
  }
  Hypergraph h = from_edges(directed, static_cast<int>(incidence.size()),
                            std::move(edges));
  return h;
}

void Hypergraph::set_incidence_pair(int v, int w, const Sides& iv,
                                    const Sides& iw) {
  auto apply = [&](int node, const Sides& inc) {
    // Clear the node's multiplicity from every previously touched edge,
    // then install the new one.
    for (const auto& [e, c] : incidence_[node].tail) {
      (void)c;
      edges_[e].tail.erase(node);
    }
    for (const auto& [e, c] : incidence_[node].head) {
      (void)c;
      edges_[e].head.erase(node);
    }
    for (const auto& [e, c] : inc.tail) edges_[e].tail[node] = c;
    for (const auto& [e, c] : inc.head) edges_[e].head[node] = c;
    incidence_[node] = inc;
  };
  apply(v, iv);
  apply(w, iw);
}

void Hypergraph::set_edge_pair(int e, int f, const Sides& ce,
                               const Sides& cf) {
  auto apply = [&](int label, const Sides& content) {
    for (const auto& [v, c] : edges_[label].tail) {
      (void)c;
      incidence_[v].tail.erase(label);
    }
    for (const auto& [v, c] : edges_[label].head) {
      (void)c;
      incidence_[v].head.erase(label);
    }
    for (const auto& [v, c] : content.tail) incidence_[v].tail[label] = c;
    for (const auto& [v, c] : content.head) incidence_[v].head[label] = c;
    edges_[label] = content;
  };
  apply(e, ce);
  apply(f, cf);
}

void Hypergraph::set_node_names(std::vector<std::string> names) {
  if (!names.empty() && names.size() != incidence_.size())
    throw std::invalid_argument("node name count mismatch");
  node_names_ = std::move(names);
}

std::string Hypergraph::node_name(int v) const {
  if (!node_names_.empty()) return node_names_[v];
  return "v" + std::to_string(v);
}

DegreeSequence degrees(const Hypergraph& h) {
  DegreeSequence d;
  d.directed = h.directed();
  d.node_degrees.reserve(h.node_count());
  for (int v = 0; v < h.node_count(); ++v) {
    const Sides& inc = h.incidence(v);
    d.node_degrees.emplace_back(
        static_cast<long long>(cardinality(inc.tail)),
        static_cast<long long>(cardinality(inc.head)));
  }
  d.edge_degrees.reserve(h.edge_count());
  for (int e = 0; e < h.edge_count(); ++e) {
    const Sides& s = h.edge(e);
    d.edge_degrees.emplace_back(static_cast<long long>(cardinality(s.tail)),
                                static_cast<long long>(cardinality(s.head)));
  }
  return d;
}

EdgeTypeReport classify_edges(const Hypergraph& h) {
  EdgeTypeReport report;
  std::map<Sides, std::vector<int>> groups;
  for (int e = 0; e < h.edge_count(); ++e) {
    const Sides& s = h.edge(e);
    if (h.directed() && s.tail == s.head)
      report.self_loop_labels.push_back(e);
    bool degen = false;
    for (const auto& [v, c] : s.tail) degen = degen || c >= 2;
    for (const auto& [v, c] : s.head) degen = degen || c >= 2;
    if (degen) report.degenerate_labels.push_back(e);
    groups[s].push_back(e);
  }
  for (auto& [content, labels] : groups) {
    if (labels.size() >= 2) report.multi_edge_groups.push_back(labels);
  }
  std::sort(report.multi_edge_groups.begin(), report.multi_edge_groups.end());
  return report;
}

bool in_space(const Hypergraph& h, const SpaceSpec& spec) {
  if (h.directed() != spec.directed)
    throw std::invalid_argument("directedness mismatch between graph and space");
  EdgeTypeReport r = classify_edges(h);
  if (!spec.allow_degenerate && !r.degenerate_labels.empty()) return false;
  if (!spec.allow_multi && !r.multi_edge_groups.empty()) return false;
  if (spec.directed && !spec.allow_self_loops && !r.self_loop_labels.empty())
    return false;
  return true;
}

CanonicalState canonicalize(const Hypergraph& h) {
  CanonicalState s;
  s.directed = h.directed();
  s.node_count = h.node_count();
  s.edges.reserve(h.edge_count());
  auto runs = [](const Multiset& m) {
    return CanonicalState::Content(m.begin(), m.end());
  };
  for (int e = 0; e < h.edge_count(); ++e)
    s.edges.emplace_back(runs(h.edge(e).tail), runs(h.edge(e).head));
  std::sort(s.edges.begin(), s.edges.end());
  return s;
}

Hypergraph representative(const CanonicalState& s) {
  std::vector<Sides> edges;
  edges.reserve(s.edges.size());
  for (const auto& [t, hd] : s.edges) {
    Sides e;
    for (const auto& [v, c] : t) e.tail[v] = c;
    for (const auto& [v, c] : hd) e.head[v] = c;
    edges.push_back(std::move(e));
  }
  return Hypergraph::from_edges(s.directed, s.node_count, std::move(edges));
}

}  // namespace hcb
