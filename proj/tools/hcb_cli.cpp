// hcb: degree-preserving hypergraph randomization toolkit.
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hcb/chainlab.hpp"
#include "hcb/datagen.hpp"
#include "hcb/mixbench.hpp"
#include "hcb/shuffles.hpp"
#include "hcb/trades.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

using namespace hcb;

std::vector<std::pair<long long, long long>> parse_degree_list(
    const std::string& text, bool directed) {
  std::vector<std::pair<long long, long long>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw CLI::ValidationError("empty degree entry");
    const auto colon = item.find(':');
    if (directed) {
      if (colon == std::string::npos)
        throw CLI::ValidationError("directed degrees need t:h pairs");
      out.emplace_back(std::stoll(item.substr(0, colon)),
                       std::stoll(item.substr(colon + 1)));
    } else {
      if (colon != std::string::npos)
        throw CLI::ValidationError("undirected degrees must be plain counts");
      out.emplace_back(std::stoll(item), 0);
    }
  }
  if (out.empty()) throw CLI::ValidationError("empty degree list");
  return out;
}

std::vector<Method> parse_methods(const std::string& text) {
  if (text == "trade") return {Method::trade};
  if (text == "shuffle") return {Method::shuffle};
  if (text == "both") return {Method::trade, Method::shuffle};
  throw CLI::ValidationError("method must be trade, shuffle or both");
}

// Output sink: --out path or standard output.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::runtime_error(path + ": cannot open for writing");
    }
  }
  std::ostream& out() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::uint64_t default_seed() {
  if (const char* env = std::getenv("HCB_SEED")) {
    return std::stoull(env);
  }
  return 1;
}

void banner(const std::string& cmdline, std::uint64_t seed) {
  std::cerr << "hcb " << kVersion << " seed=" << seed << " argv:" << cmdline
            << "\n";
}

std::string verdict_csv_header() {
  return "degree_seq,space,method,n_states,scc_count,max_deviation,verdict";
}

void verdict_csv_row(std::ostream& out, const DegreeSequence& d,
                     const SpaceSpec& spec, Method method,
                     const UniformityVerdict& v) {
  out << d.to_string() << "," << spec.letters() << "," << method_name(method)
      << "," << v.n_states << "," << v.sccs << "," << v.max_deviation << ","
      << verdict_name(v.status) << "\n";
}

void curve_csv(std::ostream& out, const MixCurve& c, bool header) {
  if (header) out << "step,mean,std,method,dataset,runs,seed\n";
  for (std::size_t i = 0; i < c.steps.size(); ++i) {
    out << c.steps[i] << "," << c.mean[i] << "," << c.stddev[i] << ","
        << method_name(c.method) << "," << c.dataset << "," << c.runs << ","
        << c.seed << "\n";
  }
}

struct PartitionTokens {
  Multiset combined;
  std::map<std::string, int> ids;
  std::vector<std::string> names;

  int id_of(const std::string& token) {
    auto it = ids.find(token);
    if (it == ids.end())
      throw std::runtime_error("unknown element '" + token + "'");
    return it->second;
  }
};

PartitionTokens parse_combined(const std::string& text) {
  PartitionTokens pt;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto [it, fresh] =
        pt.ids.try_emplace(item, static_cast<int>(pt.names.size()));
    if (fresh) pt.names.push_back(item);
    ++pt.combined[it->second];
  }
  if (pt.combined.empty()) throw std::runtime_error("empty combined multiset");
  return pt;
}

std::string part_to_string(const PartitionTokens& pt, const Multiset& part) {
  std::string out;
  for (const auto& [id, c] : part) {
    for (int k = 0; k < c; ++k) {
      if (!out.empty()) out += ' ';
      out += pt.names[id];
    }
  }
  return out.empty() ? "(empty)" : out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Degree-preserving hypergraph randomization toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  std::uint64_t seed = default_seed();
  app.add_option("--seed", seed, "RNG seed (default: HCB_SEED or 1)")
      ->capture_default_str();

  // --- sample ---
  auto* sample = app.add_subcommand("sample", "Randomize a hypergraph");
  std::string s_in, s_out, s_space = "sdm", s_method = "trade";
  bool s_directed = false;
  std::size_t s_steps = 10000;
  sample->add_option("--in", s_in, "input hypergraph")->required();
  sample->add_option("--out", s_out, "output file (default: stdout)");
  sample->add_option("--space", s_space, "allowed types, subset of sdm");
  sample->add_option("--method", s_method, "trade or shuffle");
  sample->add_option("--steps", s_steps, "number of moves");
  sample->add_flag("--directed", s_directed, "directed input");

  // --- bench ---
  auto* bench = app.add_subcommand("bench", "Mixing curves");
  std::string b_in, b_out, b_space = "sdm", b_method = "both", b_dataset;
  int b_artificial = 0, b_runs = 20, b_jobs = 1;
  bool b_directed = false;
  std::size_t b_steps = 10000, b_record = 100;
  bench->add_option("--in", b_in, "input hypergraph");
  bench->add_option("--artificial", b_artificial, "built-in dataset 1|2|3");
  bench->add_option("--out", b_out, "output CSV (default: stdout)");
  bench->add_option("--space", b_space, "allowed types, subset of sdm");
  bench->add_option("--method", b_method, "trade, shuffle or both");
  bench->add_option("--steps", b_steps, "steps per run");
  bench->add_option("--runs", b_runs, "independent runs");
  bench->add_option("--record-every", b_record, "recording interval");
  bench->add_option("--jobs", b_jobs, "parallel workers");
  bench->add_option("--dataset", b_dataset, "dataset label for the CSV");
  bench->add_flag("--directed", b_directed, "directed input");

  // --- verify ---
  auto* verify = app.add_subcommand("verify", "Exact uniformity verdict");
  std::string v_nodes, v_edges, v_space = "dm", v_method = "trade", v_out;
  bool v_directed = false, v_expect_uniform = false;
  verify->add_option("--nodes", v_nodes, "node degrees, e.g. 2,2 or 2:2,1:1")
      ->required();
  verify->add_option("--edges", v_edges, "edge degrees")->required();
  verify->add_option("--space", v_space, "allowed types, subset of sdm");
  verify->add_option("--method", v_method, "trade, shuffle or both");
  verify->add_option("--out", v_out, "output CSV (default: stdout)");
  verify->add_flag("--directed", v_directed, "directed degrees");
  verify->add_flag("--expect-uniform", v_expect_uniform,
                   "exit 3 unless every verdict is uniform");

  // --- search ---
  auto* search = app.add_subcommand("search", "Search for biased spaces");
  std::string se_spaces = "d", se_method = "trade", se_out;
  int se_nodes = 3, se_edges = 3;
  long long se_degree = 3;
  bool se_directed = false, se_first = false;
  search->add_option("--max-nodes", se_nodes, "node count bound");
  search->add_option("--max-edges", se_edges, "edge count bound");
  search->add_option("--max-degree", se_degree, "degree bound");
  search->add_option("--spaces", se_spaces,
                     "comma list of type subsets, e.g. d,dm");
  search->add_option("--method", se_method, "trade, shuffle or both");
  search->add_option("--out", se_out, "output CSV (default: stdout)");
  search->add_flag("--directed", se_directed, "directed sequences");
  search->add_flag("--first", se_first, "stop after the first hit");

  // --- gen ---
  auto* gen = app.add_subcommand("gen", "Write a built-in dataset");
  int g_artificial = 1;
  std::string g_out;
  gen->add_option("--artificial", g_artificial, "dataset 1|2|3")->required();
  gen->add_option("--out", g_out, "output file (default: stdout)");

  // --- stats ---
  auto* stats = app.add_subcommand("stats", "Degree statistics");
  std::string st_in, st_out, st_dataset;
  int st_artificial = 0;
  bool st_directed = false;
  stats->add_option("--in", st_in, "input hypergraph");
  stats->add_option("--artificial", st_artificial, "built-in dataset 1|2|3");
  stats->add_option("--dataset", st_dataset, "dataset label for the CSV");
  stats->add_option("--out", st_out, "output CSV (default: stdout)");
  stats->add_flag("--directed", st_directed, "directed input");

  // --- fit ---
  auto* fit = app.add_subcommand("fit", "Fit mixing curves");
  std::string f_in, f_out;
  double f_band = 0.02;
  fit->add_option("--in", f_in, "mixing-curve CSV from bench")->required();
  fit->add_option("--band", f_band, "mixing band (relative)");
  fit->add_option("--out", f_out, "output CSV (default: stdout)");

  // --- partitions ---
  auto* partitions =
      app.add_subcommand("partitions", "Constrained-partition diagnostics");
  std::string p_combined, p_order, p_out;
  std::size_t p_k = 0;
  std::vector<std::string> p_constraints;
  partitions->add_option("--combined", p_combined, "elements, e.g. x,x,y,a")
      ->required();
  partitions->add_option("--k", p_k, "size of the first part")->required();
  partitions->add_option("--constraint", p_constraints,
                         "pair with unequal multiplicities, e.g. x!=y");
  partitions->add_option("--order", p_order,
                         "element order for the sequential scheme; omitted: "
                         "enumerate valid partitions");
  partitions->add_option("--out", p_out, "output CSV (default: stdout)");

  // Let --seed (and any future global flag) appear after the subcommand.
  for (CLI::App* sc : app.get_subcommands([](CLI::App*) { return true; }))
    sc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  std::string cmdline;
  for (int i = 1; i < argc; ++i) cmdline += std::string(" ") + argv[i];
  banner(cmdline, seed);

  try {
    if (*sample) {
      const SpaceSpec spec = SpaceSpec::parse(s_space, s_directed);
      const Hypergraph h0 = read_hypergraph(s_in, s_directed);
      RngStream rng(seed);
      const Hypergraph h =
          parse_methods(s_method).at(0) == Method::trade
              ? run_hypercurveball(h0, spec, s_steps, rng)
              : run_shuffle(h0, spec, s_steps, rng);
      Sink sink(s_out);
      write_hypergraph(h, sink.out());
    } else if (*bench) {
      if (b_in.empty() == (b_artificial == 0))
        throw std::runtime_error("bench needs exactly one of --in/--artificial");
      const Hypergraph h0 = b_artificial ? gen_artificial(b_artificial)
                                         : read_hypergraph(b_in, b_directed);
      const bool directed = b_artificial ? false : b_directed;
      const SpaceSpec spec = SpaceSpec::parse(b_space, directed);
      if (b_dataset.empty())
        b_dataset = b_artificial
                        ? "artificial_" + std::to_string(b_artificial)
                        : b_in;
      Sink sink(b_out);
      bool header = true;
      for (Method m : parse_methods(b_method)) {
        MixCurve c = run_mixing_experiment(h0, spec, m, b_steps, b_runs,
                                           b_record, seed, b_jobs);
        c.dataset = b_dataset;
        curve_csv(sink.out(), c, header);
        header = false;
      }
    } else if (*verify) {
      DegreeSequence d;
      d.directed = v_directed;
      d.node_degrees = parse_degree_list(v_nodes, v_directed);
      d.edge_degrees = parse_degree_list(v_edges, v_directed);
      const SpaceSpec spec = SpaceSpec::parse(v_space, v_directed);
      Sink sink(v_out);
      sink.out() << verdict_csv_header() << "\n";
      bool all_uniform = true;
      for (Method m : parse_methods(v_method)) {
        const UniformityVerdict verdict = uniformity_verdict(d, spec, m);
        verdict_csv_row(sink.out(), d, spec, m, verdict);
        all_uniform &= verdict.status == VerdictStatus::uniform;
      }
      if (v_expect_uniform && !all_uniform) return 3;
    } else if (*search) {
      SearchBounds bounds;
      bounds.max_nodes = se_nodes;
      bounds.max_edges = se_edges;
      bounds.max_degree = se_degree;
      bounds.directed = se_directed;
      std::vector<SpaceSpec> specs;
      {
        std::stringstream ss(se_spaces);
        std::string item;
        while (std::getline(ss, item, ','))
          specs.push_back(SpaceSpec::parse(item, se_directed));
      }
      Sink sink(se_out);
      sink.out() << verdict_csv_header() << "\n";
      const SearchVisitor visit = [&](const SearchHit& hit) {
        if (hit.verdict.status == VerdictStatus::uniform) return true;
        verdict_csv_row(sink.out(), hit.degrees, hit.spec, hit.method,
                        hit.verdict);
        return !se_first;
      };
      bias_search(bounds, specs, parse_methods(se_method), {}, visit);
    } else if (*gen) {
      const Hypergraph h = gen_artificial(g_artificial);
      Sink sink(g_out);
      write_hypergraph(h, sink.out());
    } else if (*stats) {
      if (st_in.empty() == (st_artificial == 0))
        throw std::runtime_error("stats needs exactly one of --in/--artificial");
      const Hypergraph h = st_artificial
                               ? gen_artificial(st_artificial)
                               : read_hypergraph(st_in, st_directed);
      if (st_dataset.empty())
        st_dataset = st_artificial
                         ? "artificial_" + std::to_string(st_artificial)
                         : st_in;
      Sink sink(st_out);
      sink.out() << stats_csv(stats_report(h), st_dataset);
    } else if (*fit) {
      std::ifstream in(f_in);
      if (!in) throw std::runtime_error(f_in + ": cannot open");
      std::string line;
      if (!std::getline(in, line))
        throw std::runtime_error(f_in + ": empty file");
      // Group curve rows by (dataset, method).
      std::map<std::pair<std::string, std::string>,
               std::pair<std::vector<double>, std::vector<double>>>
          series;
      while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string step, mean, std_col, method, dataset;
        std::getline(ss, step, ',');
        std::getline(ss, mean, ',');
        std::getline(ss, std_col, ',');
        std::getline(ss, method, ',');
        std::getline(ss, dataset, ',');
        auto& [xs, ys] = series[{dataset, method}];
        xs.push_back(std::stod(step));
        ys.push_back(std::stod(mean));
      }
      Sink sink(f_out);
      sink.out()
          << "dataset,method,L,a,b,c,d,rmse,mixing_time,extrapolated\n";
      for (const auto& [key, data] : series) {
        const FitResult r =
            fit_double_exponential(data.first, data.second, f_band);
        sink.out() << key.first << "," << key.second << "," << r.L << ","
                   << r.a << "," << r.b << "," << r.c << "," << r.d << ","
                   << r.rmse << ",";
        if (r.mixing_time) {
          sink.out() << *r.mixing_time << ","
                     << (*r.mixing_time >
                                 *std::max_element(data.first.begin(),
                                                   data.first.end())
                             ? "true"
                             : "false");
        } else {
          sink.out() << ",";
        }
        sink.out() << "\n";
      }
    } else if (*partitions) {
      PartitionTokens pt = parse_combined(p_combined);
      std::vector<PartitionConstraint> constraints;
      for (const std::string& c : p_constraints) {
        const auto pos = c.find("!=");
        if (pos == std::string::npos)
          throw std::runtime_error("constraint must look like x!=y");
        PartitionConstraint pc;
        pc.unequal_any.emplace_back(pt.id_of(c.substr(0, pos)),
                                    pt.id_of(c.substr(pos + 2)));
        constraints.push_back(pc);
      }
      Sink sink(p_out);
      if (p_order.empty()) {
        sink.out() << "partition,stub_splits\n";
        for (const auto& part :
             enumerate_constrained_partitions(pt.combined, p_k, constraints))
          sink.out() << part_to_string(pt, part.part1) << ","
                     << part.stub_splits << "\n";
      } else {
        std::vector<int> order;
        std::stringstream ss(p_order);
        std::string item;
        while (std::getline(ss, item, ','))
          if (!item.empty()) order.push_back(pt.id_of(item));
        sink.out() << "partition,probability\n";
        for (const auto& [part, prob] :
             sequential_partition_bias(pt.combined, p_k, constraints, order))
          sink.out() << part_to_string(pt, part) << "," << prob << "\n";
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
