#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dqls/decision.hpp"
#include "dqls/dynamics.hpp"
#include "dqls/hamiltonian.hpp"
#include "dqls/harness.hpp"
#include "dqls/reconstruction.hpp"
#include "dqls/tripartite.hpp"

namespace py = pybind11;
using namespace dqls;

namespace {

NeighborhoodStructure make_ns(int n, const std::vector<std::vector<int>>& nbs) {
  std::vector<Neighborhood> out;
  for (const auto& m : nbs) out.push_back(Neighborhood{m});
  return NeighborhoodStructure(n, out);
}

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::DQLS: return "dqls";
    case Outcome::NotDQLS: return "not_dqls";
    default: return "inconclusive";
  }
}

const char* prediction_name(Prediction p) {
  switch (p) {
    case Prediction::DQLS: return "dqls";
    case Prediction::NotDQLS: return "not_dqls";
    default: return "unknown";
  }
}

}  // namespace

PYBIND11_MODULE(_dqls, m) {
  m.doc() = "Dissipative quasi-local stabilizability toolkit";

  py::register_exception<DqlsError>(m, "DqlsError");

  py::class_<PureState>(m, "PureState")
      .def(py::init([](std::vector<Index> dims, CVector amp) {
             return PureState{std::move(dims), std::move(amp), false};
           }),
           py::arg("dims"), py::arg("amplitudes"))
      .def_readonly("dims", &PureState::dims)
      .def_readonly("amplitudes", &PureState::amplitudes);

  m.def("random_state", &random_state, py::arg("dims"), py::arg("seed"),
        py::arg("stream") = 0);
  m.def("ghz_state", &ghz_state, py::arg("n"), py::arg("d") = 2);
  m.def("w_state", &w_state, py::arg("n"));
  m.def("dicke_state", &dicke_state, py::arg("n"), py::arg("k"));
  m.def("graph_state", &graph_state, py::arg("adjacency"));

  m.def(
      "schmidt_span",
      [](const PureState& s, const std::vector<int>& subset) {
        return schmidt_span(s, subset, default_tolerance()).basis;
      },
      py::arg("state"), py::arg("subset"),
      "Orthonormal basis (columns) of the reduced-state support");

  m.def(
      "dqls_subspace",
      [](const PureState& s, int n, const std::vector<std::vector<int>>& nbs) {
        auto v = dqls_subspace(s, make_ns(n, nbs), default_tolerance());
        py::dict d;
        d["dim_h0"] = v.dim_h0;
        d["is_dqls"] = v.is_dqls;
        d["basis"] = v.h0_basis.basis;
        return d;
      },
      py::arg("state"), py::arg("n"), py::arg("neighborhoods"),
      "H0 intersection; neighborhoods are 0-based index lists");

  m.def(
      "decide",
      [](const PureState& s, int n, const std::vector<std::vector<int>>& nbs) {
        auto t = decide(s, make_ns(n, nbs), default_tolerance());
        py::dict d;
        d["outcome"] = outcome_name(t.outcome);
        d["reasons"] = t.reasons;
        return d;
      },
      py::arg("state"), py::arg("n"), py::arg("neighborhoods"));

  m.def(
      "predict",
      [](const std::vector<Index>& dims) {
        auto p = predict(dims);
        py::dict d;
        d["verdict"] = prediction_name(p.verdict);
        d["conjectural"] = p.conjectural;
        d["reason"] = p.reason;
        return d;
      },
      py::arg("dims"), "Closed-form / conjectural tripartite prediction");

  m.def(
      "analyze_tripartite",
      [](const PureState& s) {
        auto r = analyze(s, default_tolerance());
        py::dict d;
        d["dims"] = r.dims;
        d["permuted"] = r.permuted;
        d["nogo_applies"] = r.nogo_applies;
        d["dim_h0_algebraic"] = r.dim_h0_algebraic;
        d["dim_h0_geometric"] = r.dim_h0_geometric;
        d["determinant_value"] = r.determinant_value;
        d["predicted"] = prediction_name(r.predicted.verdict);
        return d;
      },
      py::arg("state"));

  m.def(
      "parent_hamiltonian",
      [](const PureState& s, int n, const std::vector<std::vector<int>>& nbs) {
        auto h = parent_hamiltonian(s, make_ns(n, nbs), default_tolerance());
        py::dict d;
        d["terms"] = h.terms;
        d["frustration_free"] = frustration_free_check(h, default_tolerance());
        d["kernel_dim"] = h.kernel_space(default_tolerance()).dim();
        return d;
      },
      py::arg("state"), py::arg("n"), py::arg("neighborhoods"));

  m.def(
      "build_stabilizer",
      [](const PureState& s, int n, const std::vector<std::vector<int>>& nbs,
         std::uint64_t seed) {
        GasCertificate cert;
        auto l = build_stabilizer(s, make_ns(n, nbs), seed, default_tolerance(), &cert);
        py::dict d;
        d["superoperator"] = l.superop;
        d["n_lindblad"] = l.lindblad_terms.size();
        d["kernel_dim"] = cert.kernel_dim;
        d["gap"] = cert.gap;
        d["steady_state_fidelity"] = cert.steady_state_fidelity;
        return d;
      },
      py::arg("state"), py::arg("n"), py::arg("neighborhoods"), py::arg("seed") = 0);

  m.def(
      "ghz_epsilon",
      [](double epsilon, std::uint64_t seed) {
        auto r = practical_stabilization_experiment(epsilon, seed, default_tolerance());
        py::dict d;
        d["epsilon"] = r.epsilon;
        d["fidelity"] = r.fidelity;
        d["bound"] = r.bound;
        d["target_was_dqls"] = r.target_was_dqls;
        d["bound_satisfied"] = r.bound_satisfied;
        return d;
      },
      py::arg("epsilon"), py::arg("seed") = 0);

  m.def(
      "reconstruct",
      [](const std::vector<Index>& dims,
         const std::vector<std::pair<std::vector<int>, CMatrix>>& supports) {
        std::vector<SupportInput> in;
        for (const auto& [members, basis] : supports)
          in.push_back({Neighborhood{members},
                        Subspace::from_span(basis, default_tolerance())});
        auto res = reconstruct(dims, in, default_tolerance());
        py::dict d;
        d["status"] = res.status == ReconStatus::Unique
                          ? "unique"
                          : (res.status == ReconStatus::NotUnique ? "not_unique"
                                                                  : "inconsistent");
        d["candidate_dim"] = res.candidate_space.dim();
        if (res.state) d["amplitudes"] = res.state->amplitudes;
        return d;
      },
      py::arg("dims"), py::arg("supports"),
      "supports: list of (members, basis-matrix) pairs, 0-based members");

  m.def(
      "run_table",
      [](Index d_b, const std::vector<Index>& d_a_values,
         const std::vector<Index>& d_bar_values, int seeds, std::uint64_t base_seed) {
        auto t = run_table(d_b, d_a_values, d_bar_values, seeds, base_seed,
                           default_tolerance());
        py::dict d;
        d["csv"] = t.to_csv();
        d["mixed_cells"] = t.mixed_cells;
        d["mismatches"] = t.mismatches;
        return d;
      },
      py::arg("d_b"), py::arg("d_a_values"), py::arg("d_bar_values"),
      py::arg("seeds") = 5, py::arg("base_seed") = 0);
}
