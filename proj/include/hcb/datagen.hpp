#pragma once

#include <iosfwd>
#include <string>

#include "hcb/hypergraph.hpp"

namespace hcb {

// The three synthetic benchmark hypergraphs (undirected, with degenerate
// hyperedges by construction). The advertised degree sequence is asserted
// before returning.
Hypergraph gen_artificial(int which);

// Text format: one hyperedge per line, whitespace-separated node tokens,
// multiplicity encoded by repetition, '#' starts a comment line; directed
// lines contain the separator token "->" exactly once.
Hypergraph read_hypergraph(const std::string& path, bool directed);
Hypergraph read_hypergraph(std::istream& in, bool directed,
                           const std::string& origin = "<stream>");
void write_hypergraph(const Hypergraph& h, const std::string& path);
void write_hypergraph(const Hypergraph& h, std::ostream& out);

struct StatsReport {
  bool directed = false;
  DegreeStats node_stats, edge_stats;                    // undirected
  DirectedDegreeStats node_stats_dir, edge_stats_dir;    // directed
  EdgeTypeReport types;
};

StatsReport stats_report(const Hypergraph& h);

// CSV mirroring the dataset-statistics table layout (one row for nodes,
// one for edges).
std::string stats_csv(const StatsReport& r, const std::string& dataset);

}  // namespace hcb
