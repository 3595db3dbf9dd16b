// Python surface of the toolkit: datasets, file I/O, randomization runs,
// exact chain diagnostics and the mixing benchmark. Big integers cross the
// boundary as Python ints via their decimal form.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "hcb/chainlab.hpp"
#include "hcb/datagen.hpp"
#include "hcb/hypergraph.hpp"
#include "hcb/mixbench.hpp"
#include "hcb/rng.hpp"
#include "hcb/shuffles.hpp"
#include "hcb/trades.hpp"

namespace py = pybind11;
using namespace hcb;

namespace {

py::object to_py_int(const BigInt& x) {
  std::ostringstream os;
  os << x;
  return py::int_(py::str(os.str()));
}

SpaceSpec parse_space(const std::string& letters, bool directed) {
  return SpaceSpec::parse(letters, directed);
}

std::vector<std::vector<int>> edge_list(const Hypergraph& h, bool head) {
  std::vector<std::vector<int>> out;
  for (int e = 0; e < h.edge_count(); ++e) {
    std::vector<int> side;
    const Multiset& m = head ? h.edge(e).head : h.edge(e).tail;
    for (const auto& [v, c] : m)
      for (int k = 0; k < c; ++k) side.push_back(v);
    out.push_back(std::move(side));
  }
  return out;
}

Hypergraph from_lists(bool directed, int node_count,
                      const std::vector<std::vector<int>>& tails,
                      const std::vector<std::vector<int>>& heads) {
  if (directed && heads.size() != tails.size())
    throw std::invalid_argument("tails and heads must have equal length");
  std::vector<Sides> edges(tails.size());
  for (std::size_t e = 0; e < tails.size(); ++e) {
    for (int v : tails[e]) ++edges[e].tail[v];
    if (directed)
      for (int v : heads[e]) ++edges[e].head[v];
  }
  return Hypergraph::from_edges(directed, node_count, std::move(edges));
}

}  // namespace

PYBIND11_MODULE(_hcb, m) {
  m.doc() = "degree-preserving hypergraph randomization core";

  py::class_<Hypergraph>(m, "Hypergraph")
      .def(py::init(&from_lists), py::arg("directed"), py::arg("node_count"),
           py::arg("tails"),
           py::arg("heads") = std::vector<std::vector<int>>{})
      .def_property_readonly("directed", &Hypergraph::directed)
      .def_property_readonly("node_count", &Hypergraph::node_count)
      .def_property_readonly("edge_count", &Hypergraph::edge_count)
      .def("tails", [](const Hypergraph& h) { return edge_list(h, false); })
      .def("heads", [](const Hypergraph& h) { return edge_list(h, true); })
      .def("node_name", &Hypergraph::node_name)
      .def("__eq__", [](const Hypergraph& a, const Hypergraph& b) {
        return canonicalize(a) == canonicalize(b);
      });

  m.def("gen_artificial", &gen_artificial, py::arg("which"));
  m.def(
      "read_hypergraph",
      [](const std::string& path, bool directed) {
        return read_hypergraph(path, directed);
      },
      py::arg("path"), py::arg("directed") = false);
  m.def(
      "write_hypergraph",
      [](const Hypergraph& h, const std::string& path) {
        write_hypergraph(h, path);
      },
      py::arg("h"), py::arg("path"));
  m.def("loads", [](const std::string& text, bool directed) {
    std::istringstream in(text);
    return read_hypergraph(in, directed, "<string>");
  }, py::arg("text"), py::arg("directed") = false);
  m.def("dumps", [](const Hypergraph& h) {
    std::ostringstream out;
    write_hypergraph(h, out);
    return out.str();
  });

  m.def("node_degrees", [](const Hypergraph& h) {
    return degrees(h).node_degrees;
  });
  m.def("edge_degrees", [](const Hypergraph& h) {
    return degrees(h).edge_degrees;
  });
  m.def("canonical_key", [](const Hypergraph& h) {
    const CanonicalState s = canonicalize(h);
    return py::make_tuple(s.directed, s.node_count, s.edges);
  });
  m.def("stub_count",
        [](const Hypergraph& h) { return to_py_int(stub_count(h)); });
  m.def("in_space", [](const Hypergraph& h, const std::string& space) {
    return in_space(h, parse_space(space, h.directed()));
  });

  m.def(
      "randomize",
      [](const Hypergraph& h, const std::string& space,
         const std::string& method, std::size_t steps, std::uint64_t seed) {
        const SpaceSpec spec = parse_space(space, h.directed());
        RngStream rng(seed);
        if (method == "trade")
          return run_hypercurveball(h, spec, steps, rng);
        if (method == "shuffle") return run_shuffle(h, spec, steps, rng);
        throw std::invalid_argument("method must be 'trade' or 'shuffle'");
      },
      py::arg("h"), py::arg("space"), py::arg("method"), py::arg("steps"),
      py::arg("seed"));

  m.def(
      "verify_uniform",
      [](const std::vector<std::pair<long long, long long>>& nodes,
         const std::vector<std::pair<long long, long long>>& edges,
         bool directed, const std::string& space, const std::string& method) {
        DegreeSequence d;
        d.directed = directed;
        d.node_degrees = nodes;
        d.edge_degrees = edges;
        const UniformityVerdict v = uniformity_verdict(
            d, parse_space(space, directed),
            method == "shuffle" ? Method::shuffle : Method::trade);
        py::dict out;
        out["verdict"] = verdict_name(v.status);
        out["n_states"] = v.n_states;
        out["scc_count"] = v.sccs;
        out["max_deviation"] = v.max_deviation;
        return out;
      },
      py::arg("nodes"), py::arg("edges"), py::arg("directed"),
      py::arg("space"), py::arg("method") = "trade");

  m.def(
      "mixing_curve",
      [](const Hypergraph& h, const std::string& space,
         const std::string& method, std::size_t steps, int runs,
         std::size_t record_every, std::uint64_t seed, int jobs) {
        const MixCurve c = run_mixing_experiment(
            h, parse_space(space, h.directed()),
            method == "shuffle" ? Method::shuffle : Method::trade, steps,
            runs, record_every, seed, jobs);
        py::dict out;
        out["steps"] = c.steps;
        out["mean"] = c.mean;
        out["stddev"] = c.stddev;
        const auto mt = estimate_mixing_time(c);
        out["mixing_time"] = mt ? py::cast(*mt) : py::none();
        return out;
      },
      py::arg("h"), py::arg("space"), py::arg("method"), py::arg("steps"),
      py::arg("runs"), py::arg("record_every"), py::arg("seed"),
      py::arg("jobs") = 1);

  m.def("perturbation_degree", &perturbation_degree, py::arg("g"),
        py::arg("h"));
  m.def("predict_faster", [](const Hypergraph& h) {
    return faster_name(predict_faster(h));
  });
}
