#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cycsec/bench.hpp"
#include "cycsec/cutgen.hpp"
#include "cycsec/instance_io.hpp"
#include "cycsec/oracle.hpp"
#include "cycsec/separation.hpp"

namespace py = pybind11;
using namespace cycsec;

namespace {

Algo parse_algo(const std::string& name) {
  auto a = algo_from_name(name);
  if (!a) throw std::invalid_argument("unknown algorithm: " + name);
  return *a;
}

Strategy parse_strategy(const std::string& name) {
  auto s = strategy_from_name(name);
  if (!s) throw std::invalid_argument("unknown strategy: " + name);
  return *s;
}

py::dict oracle_to_dict(const OracleResult& r) {
  py::dict d;
  d["max_violation"] = r.max_violation;
  if (r.witness) {
    py::dict w;
    w["q"] = r.witness->q;
    w["u"] = r.witness->u;
    w["v"] = r.witness->v;
    w["slack"] = r.witness->slack;
    d["witness"] = w;
  } else {
    d["witness"] = py::none();
  }
  d["all_violated_q"] = r.all_violated_q;
  return d;
}

}  // namespace

PYBIND11_MODULE(_cycsec, m) {
  m.doc() = "SEC separation engine for cycle problems";

  py::class_<FractionalPoint>(m, "FractionalPoint")
      .def(py::init<>())
      .def_readwrite("n_vertices", &FractionalPoint::n_vertices)
      .def_readwrite("depot", &FractionalPoint::depot)
      .def("set_y", &FractionalPoint::set_y)
      .def("add_x", &FractionalPoint::add_x)
      .def("y_of", &FractionalPoint::y_of)
      .def("x_of", &FractionalPoint::x_of)
      .def("support", &FractionalPoint::support);

  m.def("parse_instance", &parse_instance);
  m.def("write_instance", &write_instance);
  m.def(
      "generate_synthetic",
      [](int n, int clusters, int cycles, double perturbation,
         std::uint64_t seed) {
        SyntheticParams p{n, clusters, cycles, perturbation, seed};
        return generate_synthetic(p);
      },
      py::arg("n"), py::arg("clusters") = 1, py::arg("cycles") = 1,
      py::arg("perturbation") = 0.0, py::arg("seed") = 0);

  m.def("validate_point", [](const FractionalPoint& p) {
    Diagnostics d = validate_point(p);
    py::dict out;
    out["ok"] = d.empty();
    out["degree_violations"] = d.degree_violations.size();
    out["logical_violations"] = d.logical_violations.size();
    out["bound_violations"] = d.bound_violations.size();
    return out;
  });
  m.def("cut_value", [](const FractionalPoint& p, const std::vector<Vertex>& q) {
    return cut_value(p, {q.begin(), q.end()});
  });
  m.def("sec_slack", [](const FractionalPoint& p, const std::vector<Vertex>& q,
                        Vertex u, Vertex v) {
    return sec_slack(p, {q.begin(), q.end()}, u, v);
  });

  m.def(
      "run_strategy",
      [](const FractionalPoint& p, const std::string& strategy,
         std::uint64_t seed) {
        SupportGraph g = SupportGraph::from_point(p);
        QRepository repo(g.support_universe());
        Rng rng(seed);
        ShrinkReport rep = run_strategy(g, parse_strategy(strategy), repo, rng);
        py::dict out;
        out["final_vertices"] = rep.final_vertices;
        out["final_edges"] = rep.final_edges;
        out["c1"] = rep.counts.c1;
        out["c2"] = rep.counts.c2;
        out["c3"] = rep.counts.c3;
        out["s1"] = rep.counts.s1;
        out["s2"] = rep.counts.s2;
        std::vector<std::vector<Vertex>> qs;
        for (const auto& e : repo.entries()) qs.push_back(e.q);
        out["q_sets"] = qs;
        return out;
      },
      py::arg("point"), py::arg("strategy"), py::arg("seed") = 0);

  m.def(
      "separate",
      [](const FractionalPoint& p, const std::string& algo,
         const std::string& strategy, std::uint64_t seed, bool pair_scan,
         bool skip_if_preprocess) {
        Rng rng(seed);
        SeparationResult res = separate(p, parse_algo(algo),
                                        parse_strategy(strategy), rng,
                                        pair_scan, skip_if_preprocess);
        py::dict out;
        std::vector<std::vector<Vertex>> qs;
        std::vector<double> slacks;
        for (const auto& e : res.repo.entries()) {
          qs.push_back(e.q);
          slacks.push_back(e.slack);
        }
        out["q_sets"] = qs;
        out["slacks"] = slacks;
        out["mincut_solves"] = res.stats.mincut_solves;
        out["preprocess_q"] = res.stats.preprocess_q;
        out["separation_q"] = res.stats.separation_q;
        out["shrunk_vertices"] = res.stats.shrunk_vertices;
        out["shrunk_edges"] = res.stats.shrunk_edges;
        out["dhi_extra"] = res.stats.dhi_extra;
        return out;
      },
      py::arg("point"), py::arg("algo"), py::arg("strategy"),
      py::arg("seed") = 0, py::arg("pair_scan") = false,
      py::arg("skip_if_preprocess") = false);

  m.def(
      "generate_cuts",
      [](const FractionalPoint& p, const std::vector<std::vector<Vertex>>& qs,
         int k_in, int k_out, bool depot_aware, std::uint64_t seed) {
        SupportGraph g = SupportGraph::from_point(p);
        QRepository repo(g.support_universe());
        for (const auto& q : qs) repo.add({q.begin(), q.end()}, 0.0);
        Rng rng(seed);
        CutGenPolicy policy{k_in, k_out, depot_aware};
        std::vector<py::tuple> out;
        for (const SEC& sec : generate_cuts(repo, p, p.depot, policy, rng))
          out.push_back(py::make_tuple(sec.q, sec.u, sec.v, sec.slack));
        return out;
      },
      py::arg("point"), py::arg("q_sets"), py::arg("k_in") = 1,
      py::arg("k_out") = 1, py::arg("depot_aware") = false,
      py::arg("seed") = 0);

  m.def("oracle_pairwise",
        [](const FractionalPoint& p) { return oracle_to_dict(oracle_pairwise(p)); });
  m.def("oracle_enumerate",
        [](const FractionalPoint& p) { return oracle_to_dict(oracle_enumerate(p)); });
}
