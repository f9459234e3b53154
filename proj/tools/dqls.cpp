#include <CLI11.hpp>
#include <json.hpp>

#include "dqls/decision.hpp"
#include "dqls/dynamics.hpp"
#include "dqls/hamiltonian.hpp"
#include "dqls/harness.hpp"
#include "dqls/json_io.hpp"
#include "dqls/reconstruction.hpp"

#include <fstream>
#include <iostream>

using nlohmann::json;
using namespace dqls;

namespace {

RankTolerance tolerance_from(double tol_flag) {
  if (tol_flag > 0) return RankTolerance::relative(tol_flag);
  return default_tolerance();
}

const char* prediction_name(Prediction p) {
  switch (p) {
    case Prediction::DQLS: return "DQLS";
    case Prediction::NotDQLS: return "notDQLS";
    default: return "unknown";
  }
}

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::DQLS: return "DQLS";
    case Outcome::NotDQLS: return "notDQLS";
    default: return "inconclusive";
  }
}

json nb_json(const Neighborhood& nb) {
  json row = json::array();
  for (int a : nb.members) row.push_back(a + 1);
  return row;
}

int cmd_check(const std::string& state_path, const std::string& ns_path, double tol_flag) {
  auto tol = tolerance_from(tol_flag);
  PureState s = load_state_json(state_path);
  NeighborhoodStructure ns = load_ns_json(ns_path);
  auto v = dqls_subspace(s, ns, tol);
  json out;
  out["dim_h0"] = v.dim_h0;
  out["is_dqls"] = v.is_dqls;
  json per_method;
  per_method["geometric"] = v.dim_h0;
  if (s.n_subsystems() == 3 && ns.size() == 2) {
    auto rep = analyze(s, tol);
    if (rep.dim_h0_algebraic >= 0) per_method["algebraic"] = rep.dim_h0_algebraic;
    if (rep.determinant_value >= 0)
      per_method["determinant_dqls"] = rep.determinant_value > rep.determinant_threshold;
  }
  out["h0_dim_per_method"] = per_method;
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_tri(Index da, Index db, Index dc, int seeds, std::uint64_t base_seed,
            double tol_flag) {
  auto tol = tolerance_from(tol_flag);
  std::vector<Index> dims{da, db, dc};
  json out;
  out["dims"] = dims;
  out["seeds"] = seeds;
  out["base_seed"] = base_seed;
  auto pred = predict(dims);
  out["prediction"] = prediction_name(pred.verdict);
  out["prediction_conjectural"] = pred.conjectural;
  out["prediction_reason"] = pred.reason;
  int yes = 0;
  json runs = json::array();
  for (int k = 0; k < seeds; ++k) {
    bool dq = measure_dqls(dims, base_seed + k, tol);
    if (dq) ++yes;
    runs.push_back({{"seed", base_seed + k}, {"dqls", dq}});
  }
  out["dqls_count"] = yes;
  out["verdict"] = (yes == seeds) ? "Y" : (yes == 0 ? "N" : "mixed");
  out["runs"] = runs;
  std::cout << out.dump(2) << "\n";
  return yes == 0 || yes == seeds ? 0 : 1;
}

int cmd_table(Index db, Index da_max, Index dbar_max, int seeds,
              std::uint64_t base_seed, const std::string& out_path, double tol_flag) {
  auto tol = tolerance_from(tol_flag);
  std::vector<Index> das, dbars;
  for (Index a = 2; a <= da_max; ++a) das.push_back(a);
  for (Index b = 0; b <= dbar_max; ++b) dbars.push_back(b);
  auto res = run_table(db, das, dbars, seeds, base_seed, tol);
  if (!out_path.empty()) {
    std::ofstream f(out_path, std::ios::binary);
    f << res.to_csv();
  } else {
    std::cout << res.to_csv();
  }
  json summary;
  summary["d_b"] = db;
  summary["seeds"] = seeds;
  summary["base_seed"] = base_seed;
  summary["mixed_cells"] = res.mixed_cells;
  summary["prediction_mismatches"] = res.mismatches;
  json flagged = json::array();
  for (const auto& c : res.cells)
    if (!c.matches_prediction)
      flagged.push_back({{"d_a", c.d_a},
                         {"d_bar", c.d_bar},
                         {"verdict", std::string(1, c.verdict)},
                         {"prediction", prediction_name(c.prediction)}});
  summary["flagged"] = flagged;
  std::cout << summary.dump(2) << "\n";
  return res.mixed_cells == 0 ? 0 : 1;
}

int cmd_decide(const std::string& state_path, const std::string& ns_path, double tol_flag) {
  auto tol = tolerance_from(tol_flag);
  PureState s = load_state_json(state_path);
  NeighborhoodStructure ns = load_ns_json(ns_path);
  auto trace = decide(s, ns, tol);
  json out;
  out["outcome"] = outcome_name(trace.outcome);
  out["reasons"] = trace.reasons;
  json ignored = json::array();
  for (const auto& nb : trace.ignored_neighborhoods) ignored.push_back(nb_json(nb));
  out["ignored_neighborhoods"] = ignored;
  json leftover = json::array();
  for (int a : trace.leftover_subsystems) leftover.push_back(a + 1);
  out["leftover_subsystems"] = leftover;
  if (trace.pair_found)
    out["pair_found"] = {nb_json(trace.pair_found->first), nb_json(trace.pair_found->second)};
  if (trace.coarse_grained_pair)
    out["coarse_grained_pair"] = {nb_json(trace.coarse_grained_pair->first),
                                  nb_json(trace.coarse_grained_pair->second)};
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_parent(const std::string& state_path, const std::string& ns_path, double tol_flag) {
  auto tol = tolerance_from(tol_flag);
  PureState s = load_state_json(state_path);
  NeighborhoodStructure ns = load_ns_json(ns_path);
  auto h = parent_hamiltonian(s, ns, tol);
  json out;
  json ranks = json::array();
  for (const auto& t : h.terms) ranks.push_back(svd_rank(t, tol));
  out["term_ranks"] = ranks;
  out["kernel_dim"] = h.kernel_space(tol).dim();
  out["ff"] = frustration_free_check(h, tol);
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_stabilize(const std::string& state_path, const std::string& ns_path,
                  double t_final, double dt, std::uint64_t seed,
                  const std::string& traj_path, double tol_flag) {
  auto tol = tolerance_from(tol_flag);
  PureState s = load_state_json(state_path);
  NeighborhoodStructure ns = load_ns_json(ns_path);
  GasCertificate cert;
  Liouvillian l = build_stabilizer(s, ns, seed, tol, &cert);
  json out;
  out["kernel_dim"] = cert.kernel_dim;
  out["spectral_abscissa"] = cert.spectral_abscissa;
  out["gap"] = cert.gap;
  out["steady_state_fidelity"] = cert.steady_state_fidelity;
  out["certificate_passes"] = cert.passes();
  out["seed"] = seed;

  Index d = l.dim();
  DensityMatrix rho0{s.dims,
                     CMatrix::Identity(d, d) / static_cast<double>(d)};
  auto traj = evolve(l, rho0, s, t_final, dt);
  out["final_fidelity"] = traj.back().fidelity;
  std::cout << out.dump(2) << "\n";
  if (!traj_path.empty()) {
    std::ofstream f(traj_path, std::ios::binary);
    f << "t,fidelity,trace\r\n";
    for (const auto& p : traj)
      f << p.t << "," << p.fidelity << "," << p.trace << "\r\n";
  }
  return cert.passes() ? 0 : 1;
}

int cmd_ghz_eps(double epsilon, int seeds, std::uint64_t base_seed, double tol_flag) {
  auto tol = tolerance_from(tol_flag);
  json out;
  out["epsilon"] = epsilon;
  out["seeds"] = seeds;
  out["base_seed"] = base_seed;
  json runs = json::array();
  int dqls_count = 0, bound_count = 0;
  for (int k = 0; k < seeds; ++k) {
    auto rep = practical_stabilization_experiment(epsilon, base_seed + k, tol);
    if (rep.target_was_dqls) ++dqls_count;
    if (rep.bound_satisfied) ++bound_count;
    runs.push_back({{"seed", base_seed + k},
                    {"fidelity", rep.fidelity},
                    {"bound", rep.bound},
                    {"h_norm", rep.h_norm},
                    {"dqls", rep.target_was_dqls},
                    {"bound_satisfied", rep.bound_satisfied}});
  }
  out["dqls_count"] = dqls_count;
  out["bound_satisfied_count"] = bound_count;
  out["runs"] = runs;
  std::cout << out.dump(2) << "\n";
  return (dqls_count == seeds && bound_count == seeds) ? 0 : 1;
}

int cmd_reconstruct(const std::string& dims_str,
                    const std::vector<std::string>& support_paths,
                    const std::vector<std::string>& nb_strs, double tol_flag) {
  auto tol = tolerance_from(tol_flag);
  std::vector<Index> dims;
  {
    std::stringstream ss(dims_str);
    std::string tok;
    while (std::getline(ss, tok, ',')) dims.push_back(std::stol(tok));
  }
  if (support_paths.size() != nb_strs.size())
    throw InvalidParameter("need one --nb per --support");
  std::vector<SupportInput> inputs;
  for (size_t i = 0; i < support_paths.size(); ++i) {
    Neighborhood nb;
    std::stringstream ss(nb_strs[i]);
    std::string tok;
    while (std::getline(ss, tok, ',')) nb.members.push_back(std::stoi(tok) - 1);
    inputs.push_back({nb, load_subspace_json(support_paths[i])});
  }
  auto res = reconstruct(dims, inputs, tol);
  json out;
  out["status"] = res.status == ReconStatus::Unique
                      ? "Unique"
                      : (res.status == ReconStatus::NotUnique ? "NotUnique"
                                                              : "Inconsistent");
  out["candidate_dim"] = res.candidate_space.dim();
  if (res.state) out["state"] = json::parse(state_to_json(*res.state));
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_selftest(double tol_flag) {
  auto tol = tolerance_from(tol_flag);
  int failures = 0;
  auto report = [&](const std::string& name, bool ok) {
    std::cout << (ok ? "PASS " : "FAIL ") << name << "\n";
    if (!ok) ++failures;
  };

  NeighborhoodStructure pair3(3, {Neighborhood{{0, 1}}, Neighborhood{{1, 2}}});
  report("ghz3 dim H0 == 2", dqls_subspace(ghz_state(3), pair3, tol).dim_h0 == 2);
  report("w3 dim H0 == 2", dqls_subspace(w_state(3), pair3, tol).dim_h0 == 2);
  NeighborhoodStructure three4(4, {Neighborhood{{0, 1, 2}}, Neighborhood{{1, 2, 3}}});
  report("dicke(4,2) DQLS", dqls_subspace(dicke_state(4, 2), three4, tol).is_dqls);
  report("random (2,2,3) DQLS",
         measure_dqls({2, 2, 3}, 7, tol));
  report("no-go (2,2,4)",
         dqls_subspace(random_state({2, 2, 4}, 3), pair3, tol).dim_h0 == 4);
  auto battery = uda_battery(tol);
  report("uda battery dicke Unique", battery[0].status == ReconStatus::Unique);
  report("uda battery ghz3 NotUnique", battery[1].status == ReconStatus::NotUnique);
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"DQLS toolkit: quasi-local stabilizability of multipartite pure states"};
  app.require_subcommand(1);
  double tol_flag = 0;
  app.add_option("--tol", tol_flag, "relative rank tolerance (overrides DQLS_TOL)");

  std::string state_path, ns_path, out_path, traj_path, dims_str;
  std::vector<std::string> support_paths, nb_strs;
  Index da = 2, db = 2, dc = 3, da_max = 5, dbar_max = 9;
  int seeds = 20;
  std::uint64_t seed = 0;
  double t_final = 50, dt = 0.01, epsilon = 0.01;

  auto* check = app.add_subcommand("check", "compute the DQLS subspace");
  check->add_option("--state", state_path)->required();
  check->add_option("--ns", ns_path)->required();

  auto* tri = app.add_subcommand("tri", "tripartite Monte Carlo at one cell");
  tri->add_option("--da", da)->required();
  tri->add_option("--db", db)->required();
  tri->add_option("--dc", dc)->required();
  tri->add_option("--seeds", seeds);
  tri->add_option("--seed", seed);

  auto* table = app.add_subcommand("table", "tripartite Monte Carlo table sweep");
  table->add_option("--db", db)->required();
  table->add_option("--da-max", da_max);
  table->add_option("--dbar-max", dbar_max);
  table->add_option("--seeds", seeds);
  table->add_option("--seed", seed);
  table->add_option("--out", out_path);

  auto* dec = app.add_subcommand("decide", "multipartite decision procedure");
  dec->add_option("--state", state_path)->required();
  dec->add_option("--ns", ns_path)->required();

  auto* parent = app.add_subcommand("parent", "canonical parent Hamiltonian");
  parent->add_option("--state", state_path)->required();
  parent->add_option("--ns", ns_path)->required();

  auto* stab = app.add_subcommand("stabilize", "build and integrate a stabilizer");
  stab->add_option("--state", state_path)->required();
  stab->add_option("--ns", ns_path)->required();
  stab->add_option("--t", t_final);
  stab->add_option("--dt", dt);
  stab->add_option("--seed", seed);
  stab->add_option("--traj", traj_path);

  auto* ghz = app.add_subcommand("ghz-eps", "perturbed-GHZ stabilization experiment");
  ghz->add_option("--epsilon", epsilon);
  ghz->add_option("--seeds", seeds);
  ghz->add_option("--seed", seed);

  auto* rec = app.add_subcommand("reconstruct", "state from RDM supports");
  rec->add_option("--dims", dims_str)->required();
  rec->add_option("--support", support_paths)->required();
  rec->add_option("--nb", nb_strs)->required();

  app.add_subcommand("selftest", "quick built-in battery");

  // Let --tol be given either before or after the subcommand.
  for (auto* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (check->parsed()) return cmd_check(state_path, ns_path, tol_flag);
    if (tri->parsed()) return cmd_tri(da, db, dc, seeds, seed, tol_flag);
    if (table->parsed())
      return cmd_table(db, da_max, dbar_max, seeds, seed, out_path, tol_flag);
    if (dec->parsed()) return cmd_decide(state_path, ns_path, tol_flag);
    if (parent->parsed()) return cmd_parent(state_path, ns_path, tol_flag);
    if (stab->parsed())
      return cmd_stabilize(state_path, ns_path, t_final, dt, seed, traj_path, tol_flag);
    if (ghz->parsed()) return cmd_ghz_eps(epsilon, seeds, seed, tol_flag);
    if (rec->parsed()) return cmd_reconstruct(dims_str, support_paths, nb_strs, tol_flag);
    return cmd_selftest(tol_flag);
  } catch (const DqlsError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
