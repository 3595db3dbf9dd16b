#include "hcb/datagen.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace hcb {
namespace {

void add(Sides& e, int node, int mult) {
  if (mult > 0) e.tail[node] += mult;
}

void check_degrees(const Hypergraph& h,
                   std::map<long long, long long> want_nodes,
                   std::map<long long, long long> want_edges,
                   int which) {
  std::map<long long, long long> nodes, edges;
  const DegreeSequence d = degrees(h);
  for (const auto& [t, hh] : d.node_degrees) ++nodes[t];
  for (const auto& [t, hh] : d.edge_degrees) ++edges[t];
  if (nodes != want_nodes || edges != want_edges)
    throw std::logic_error("artificial dataset " + std::to_string(which) +
                           " violates its advertised degree sequence");
}

// The two larger datasets share one template: `blocks` unit-membership
// hyperedges covering the low-degree nodes, one full-multiplicity loop per
// mid node, a band of (mult, single-node) edges, and one giant loop.
Hypergraph gen_banded(int low, int blocks, int mult, int band_i, int giant) {
  // low = number of degree-1 nodes, mult = per-edge multiplicity of the
  // mid-node loops, band_i = i-range of the band family.
  std::vector<Sides> edges;
  const int block = low / blocks;
  for (int i = 0; i < blocks; ++i) {
    Sides e;
    for (int k = 0; k < block; ++k) add(e, block * i + k, 1);
    edges.push_back(std::move(e));
  }
  for (int i = 0; i < low; ++i) {
    Sides e;
    add(e, low + i, mult);
    edges.push_back(std::move(e));
  }
  for (int j = 0; j < 10; ++j) {
    for (int i = 0; i < band_i; ++i) {
      Sides e;
      add(e, low + i + band_i * j, mult - 1);
      add(e, 2 * low - 1 - j, 1);
      edges.push_back(std::move(e));
    }
  }
  Sides e;
  add(e, 2 * low, giant);
  edges.push_back(std::move(e));
  return Hypergraph::from_edges(false, 2 * low + 1, std::move(edges));
}

}  // namespace

Hypergraph gen_artificial(int which) {
  switch (which) {
    case 1: {
      std::vector<Sides> edges;
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 8; ++j) {
          Sides e;
          add(e, i, 2);
          edges.push_back(std::move(e));
        }
      }
      {
        Sides e;
        add(e, 3, 2);
        edges.push_back(std::move(e));
      }
      for (int i = 0; i < 4; ++i) {
        Sides e;
        add(e, 3 + i, 14);
        add(e, 7 + 8 * i, 16);
        edges.push_back(std::move(e));
      }
      for (int i = 0; i < 3; ++i) {
        Sides e;
        add(e, 4 + i, 2);
        add(e, 14 + 8 * i, 16);
        add(e, 47 + i, 12);
        edges.push_back(std::move(e));
      }
      for (int i = 0; i <= 5; ++i) {
        for (int j = 0; j < 3; ++j) {
          Sides e;
          add(e, 8 * (j + 1) + i, 16);
          add(e, 29 + j + 3 * i, 2 * i);
          add(e, 32 + j + 3 * i, 14 - 2 * i);
          edges.push_back(std::move(e));
        }
      }
      {
        Sides e;
        add(e, 50, 30);
        edges.push_back(std::move(e));
      }
      Hypergraph h = Hypergraph::from_edges(false, 51, std::move(edges));
      check_degrees(h, {{16, 50}, {30, 1}}, {{2, 25}, {30, 26}}, 1);
      return h;
    }
    case 2: {
      Hypergraph h = gen_banded(500, 10, 50, 49, 99);
      check_degrees(h, {{1, 500}, {99, 501}}, {{50, 1000}, {99, 1}}, 2);
      return h;
    }
    case 3: {
      Hypergraph h = gen_banded(250, 10, 25, 24, 49);
      check_degrees(h, {{1, 250}, {49, 251}}, {{25, 500}, {49, 1}}, 3);
      return h;
    }
    default:
      throw std::invalid_argument("artificial dataset index must be 1, 2 or 3");
  }
}

Hypergraph read_hypergraph(const std::string& path, bool directed) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(path + ": cannot open");
  return read_hypergraph(in, directed, path);
}

Hypergraph read_hypergraph(std::istream& in, bool directed,
                           const std::string& origin) {
  std::map<std::string, int> ids;
  std::vector<std::string> names;
  auto id_of = [&](const std::string& token) {
    auto [it, fresh] = ids.try_emplace(token, static_cast<int>(names.size()));
    if (fresh) names.push_back(token);
    return it->second;
  };

  std::vector<Sides> edges;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto at = origin + ":" + std::to_string(lineno) + ": ";
    std::istringstream ss(line);
    std::string token;
    if (!(ss >> token)) continue;  // blank
    if (token[0] == '#') {
      // An optional "# nodes: ..." header pins the node numbering, so a
      // written file reads back with the same ids (and keeps isolated
      // nodes). Any other comment line is skipped.
      std::string word;
      if (ss >> word && word == "nodes:")
        while (ss >> word) id_of(word);
      continue;
    }

    Sides e;
    bool seen_sep = false;
    std::size_t n_tokens = 0;
    do {
      if (token == "->") {
        if (!directed) throw std::runtime_error(at + "'->' in undirected file");
        if (seen_sep) throw std::runtime_error(at + "second '->' separator");
        seen_sep = true;
        continue;
      }
      ++n_tokens;
      ++(seen_sep ? e.head : e.tail)[id_of(token)];
    } while (ss >> token);

    if (directed && !seen_sep)
      throw std::runtime_error(at + "missing '->' separator");
    if (n_tokens == 0) throw std::runtime_error(at + "empty hyperedge");
    edges.push_back(std::move(e));
  }
  if (edges.empty()) throw std::runtime_error(origin + ": no hyperedges");

  Hypergraph h = Hypergraph::from_edges(directed,
                                        static_cast<int>(names.size()),
                                        std::move(edges));
  h.set_node_names(std::move(names));
  return h;
}

void write_hypergraph(const Hypergraph& h, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error(path + ": cannot open for writing");
  write_hypergraph(h, out);
}

void write_hypergraph(const Hypergraph& h, std::ostream& out) {
  out << "# nodes:";
  for (int v = 0; v < h.node_count(); ++v) out << " " << h.node_name(v);
  out << "\n";
  auto side_tokens = [&](const Multiset& m) {
    std::vector<std::string> tokens;
    for (const auto& [v, c] : m)
      for (int k = 0; k < c; ++k) tokens.push_back(h.node_name(v));
    std::sort(tokens.begin(), tokens.end());
    return tokens;
  };
  for (int e = 0; e < h.edge_count(); ++e) {
    std::string sep;
    for (const std::string& t : side_tokens(h.edge(e).tail)) {
      out << sep << t;
      sep = " ";
    }
    if (h.directed()) {
      out << sep << "->";
      sep = " ";
      for (const std::string& t : side_tokens(h.edge(e).head)) out << sep << t;
    }
    out << "\n";
  }
}

StatsReport stats_report(const Hypergraph& h) {
  StatsReport r;
  r.directed = h.directed();
  const DegreeSequence d = degrees(h);
  if (r.directed) {
    r.node_stats_dir = degree_stats_directed(d.node_degrees);
    r.edge_stats_dir = degree_stats_directed(d.edge_degrees);
  } else {
    std::vector<long long> nd, ed;
    for (const auto& [t, hh] : d.node_degrees) nd.push_back(t);
    for (const auto& [t, hh] : d.edge_degrees) ed.push_back(t);
    r.node_stats = degree_stats(nd);
    r.edge_stats = degree_stats(ed);
  }
  r.types = classify_edges(h);
  return r;
}

namespace {

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

void stats_row(std::ostringstream& out, const std::string& dataset,
               const std::string& kind, const DegreeStats& s) {
  out << dataset << "," << kind << "," << s.count << "," << num(s.mean) << ","
      << num(s.median) << ",";
  if (s.expected_min_pair) out << num(*s.expected_min_pair);
  out << "\n";
}

}  // namespace

std::string stats_csv(const StatsReport& r, const std::string& dataset) {
  std::ostringstream out;
  out << "dataset,kind,count,mean,median,expected_min\n";
  if (r.directed) {
    stats_row(out, dataset, "nodes_tail", r.node_stats_dir.tail);
    stats_row(out, dataset, "nodes_head", r.node_stats_dir.head);
    stats_row(out, dataset, "edges_tail", r.edge_stats_dir.tail);
    stats_row(out, dataset, "edges_head", r.edge_stats_dir.head);
  } else {
    stats_row(out, dataset, "nodes", r.node_stats);
    stats_row(out, dataset, "edges", r.edge_stats);
  }
  return out.str();
}

}  // namespace hcb
