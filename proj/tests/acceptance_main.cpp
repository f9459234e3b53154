// Acceptance gate: one pass/fail line per criterion, exit status 0 only if
// every criterion passes.

#include "dqls/decision.hpp"
#include "dqls/dynamics.hpp"
#include "dqls/hamiltonian.hpp"
#include "dqls/harness.hpp"
#include "dqls/reconstruction.hpp"
#include "dqls/rng.hpp"

#include <cstdio>
#include <string>
#include <vector>

using namespace dqls;

namespace {

const RankTolerance tol = RankTolerance::relative(1e-10);
int failures = 0;

void report(int idx, const std::string& name, bool ok, const std::string& detail = "") {
  std::printf("[%2d/10] %-52s %s%s%s\n", idx, name.c_str(), ok ? "PASS" : "FAIL",
              detail.empty() ? "" : "  -- ", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

NeighborhoodStructure chain2(int n) {
  std::vector<Neighborhood> nbs;
  for (int i = 0; i + 1 < n; ++i) nbs.push_back(Neighborhood{{i, i + 1}});
  return NeighborhoodStructure(n, nbs);
}

NeighborhoodStructure tri_ns() {
  return NeighborhoodStructure(3, {Neighborhood{{0, 1}}, Neighborhood{{1, 2}}});
}

// Unanimous Monte Carlo verdict over `seeds` random states at the given dims.
char mc_verdict(const std::vector<Index>& dims, int seeds, std::uint64_t base) {
  int yes = 0;
  for (int k = 0; k < seeds; ++k)
    if (measure_dqls(dims, base + 7919ull * k, tol)) ++yes;
  return yes == seeds ? 'Y' : (yes == 0 ? 'N' : 'M');
}

// ---- 1: full d_b = 3 table ------------------------------------------------

void criterion1() {
  // Expected verdicts for d_a = 2..5, d_bar = 0..9 (d_c = d_a + d_bar):
  // Y up to the boundary, N from d_a*3 (d_a <= 3) resp. 11 / 14 (d_a = 4, 5).
  auto expected = [](Index da, Index dc) {
    Index boundary = da <= 3 ? 3 * da : (da == 4 ? 11 : 14);
    return dc < boundary ? 'Y' : 'N';
  };
  auto table = run_table(3, {2, 3, 4, 5}, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9}, 20,
                         20260823ull, tol, 2000);
  bool ok = table.mixed_cells == 0;
  std::string detail;
  for (Index da = 2; da <= 5; ++da)
    for (Index dbar = 0; dbar <= 9; ++dbar) {
      char got = table.at(da, dbar).verdict;
      char want = expected(da, da + dbar);
      if (got != want) {
        ok = false;
        detail = "cell (" + std::to_string(da) + "," + std::to_string(dbar) +
                 ") got " + got + " want " + want;
      }
    }
  report(1, "d_b = 3 table, 20 seeds per cell, exact match", ok, detail);
}

// ---- 2: d_b = 4 spot checks ----------------------------------------------

void criterion2() {
  struct Spot { Index da, dbar; char want; };
  // (d_a, d_bar) with d_c = d_a + d_bar; boundary at 4*d_a - floor(d_a/4).
  std::vector<Spot> spots = {
      {5, 13, 'Y'}, {5, 14, 'N'}, {6, 17, 'N'}, {7, 19, 'Y'}, {7, 20, 'N'}};
  bool ok = true;
  std::string detail;
  for (const auto& s : spots) {
    char got = mc_verdict({s.da, 4, s.da + s.dbar}, 20, 111ull * s.da + s.dbar);
    if (got != s.want) {
      ok = false;
      detail = "cell (" + std::to_string(s.da) + "," + std::to_string(s.dbar) +
               ") got " + got + " want " + s.want;
    }
  }
  report(2, "d_b = 4 spot cells, 20 seeds each", ok, detail);
}

// ---- 3: qubit-bridge dimension law ---------------------------------------

void criterion3() {
  struct Case { std::vector<Index> dims; Index want; };
  std::vector<Case> cases = {
      {{2, 2, 2}, 2}, {{3, 2, 3}, 3}, {{4, 2, 4}, 4}, {{2, 2, 3}, 1},
      {{3, 2, 4}, 1}, {{4, 2, 5}, 1}, {{5, 2, 6}, 1}, {{3, 2, 5}, 4},
      {{4, 2, 6}, 4}, {{4, 2, 7}, 9}, {{5, 2, 7}, 4}, {{5, 2, 8}, 9},
      {{5, 2, 9}, 16}};
  bool ok = true;
  std::string detail;
  for (const auto& c : cases)
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      Index got = coefficient_nullity(build_slices(random_state(c.dims, seed, 301)), tol);
      if (got != c.want) {
        ok = false;
        detail = "dims (" + std::to_string(c.dims[0]) + ",2," +
                 std::to_string(c.dims[2]) + ") got " + std::to_string(got) +
                 " want " + std::to_string(c.want);
      }
    }
  report(3, "d_b = 2 closed-form dimensions, exact integers", ok, detail);
}

// ---- 4: no-go regimes -----------------------------------------------------

void criterion4() {
  bool ok = true;
  std::string detail;
  // d_a*d_b <= d_c: dim H0 = d_a^2, geometrically.
  for (const auto& dims :
       std::vector<std::vector<Index>>{{2, 2, 4}, {2, 2, 5}, {3, 2, 7}})
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      Index got = dqls_subspace(random_state(dims, seed, 302), tri_ns(), tol).dim_h0;
      if (got != dims[0] * dims[0]) {
        ok = false;
        detail = "tripartite no-go dim " + std::to_string(got);
      }
    }
  // Extended no-go: two-body neighborhoods on 4 and 5 generic qubits give
  // H0 = everything.
  for (int n : {4, 5})
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      PureState s = random_state(std::vector<Index>(n, 2), seed, 303);
      if (!extended_nogo(s, chain2(n), tol)) { ok = false; detail = "surrogate"; }
      Index got = dqls_subspace(s, chain2(n), tol).dim_h0;
      if (got != (Index(1) << n)) {
        ok = false;
        detail = "extended no-go dim " + std::to_string(got);
      }
    }
  report(4, "no-go and extended no-go dimensions", ok, detail);
}

// ---- 5: cross-method agreement -------------------------------------------

void criterion5() {
  int disagreements = 0;
  for (const auto& dims : std::vector<std::vector<Index>>{
           {2, 2, 2}, {2, 2, 3}, {2, 2, 4}, {3, 2, 4}, {3, 2, 5}, {2, 3, 4},
           {2, 3, 5}, {3, 3, 4}})
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      PureState s = random_state(dims, seed, 304);
      Index geo = dqls_subspace(s, tri_ns(), tol).dim_h0;
      if (dims[0] * dims[1] > dims[2]) {
        Index alg = coefficient_nullity(build_slices(s), tol);
        if (alg != geo) ++disagreements;
        if (dims[0] <= dims[2] &&
            determinant_test(s, tol).is_dqls() != (geo == 1))
          ++disagreements;
      }
    }
  report(5, "algebraic / geometric / determinant agreement",
         disagreements == 0, disagreements ? std::to_string(disagreements) : "");
}

// ---- 6: known-state battery ----------------------------------------------

void criterion6() {
  bool ok = true;
  std::string detail;
  auto check_dim = [&](const PureState& s, const NeighborhoodStructure& ns,
                       Index want, const char* name) {
    Index got = dqls_subspace(s, ns, tol).dim_h0;
    if (got != want) {
      ok = false;
      detail = std::string(name) + " dim " + std::to_string(got);
    }
  };
  NeighborhoodStructure three(4, {Neighborhood{{0, 1, 2}}, Neighborhood{{1, 2, 3}}});
  check_dim(ghz_state(3), tri_ns(), 2, "ghz3");
  check_dim(ghz_state(4), three, 2, "ghz4");
  check_dim(w_state(3), tri_ns(), 2, "w3");
  check_dim(dicke_state(4, 2), three, 1, "dicke42");

  // Ring graph state with edge neighborhoods: every edge RDM is full rank, so
  // each canonical parent term vanishes and H0 is the whole space.
  std::vector<std::vector<int>> ring = {
      {0, 1, 0, 1}, {1, 0, 1, 0}, {0, 1, 0, 1}, {1, 0, 1, 0}};
  PureState g = graph_state(ring);
  NeighborhoodStructure edges(4, {Neighborhood{{0, 1}}, Neighborhood{{1, 2}},
                                  Neighborhood{{2, 3}}, Neighborhood{{0, 3}}});
  auto h = parent_hamiltonian(g, edges, tol);
  for (const auto& t : h.terms)
    if (t.norm() > 1e-10) { ok = false; detail = "graph parent term nonzero"; }
  check_dim(g, edges, 16, "ring graph");
  report(6, "known-state battery (GHZ, W, Dicke, graph)", ok, detail);
}

// ---- 7: certified stabilization dynamics ---------------------------------

void criterion7() {
  bool ok = true;
  std::string detail;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    PureState s = random_state({2, 2, 3}, seed, 305);
    GasCertificate cert;
    try {
      auto l = build_stabilizer(s, tri_ns(), seed, tol, &cert);
      DensityMatrix rho0{{2, 2, 3}, CMatrix::Identity(12, 12) / 12.0};
      CVector psi = s.amplitudes;
      double t_final = 20.0 / cert.gap;
      for (int chk = 1; chk <= 10; ++chk) {
        DensityMatrix rho = propagate(l, rho0, t_final * chk / 10.0);
        if (std::abs(std::real(rho.matrix.trace()) - 1.0) > 1e-8) {
          ok = false;
          detail = "trace drift";
        }
        double fid = std::real(psi.dot(rho.matrix * psi));
        if (chk == 10 && fid <= 1 - 1e-6) {
          ok = false;
          detail = "fidelity " + std::to_string(fid);
        }
      }
    } catch (const DqlsError& e) {
      ok = false;
      detail = e.what();
    }
  }
  report(7, "10 certified (2,2,3) stabilizers converge", ok, detail);
}

// ---- 8: perturbed GHZ ----------------------------------------------------

void criterion8() {
  bool ok = true;
  std::string detail;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto rep = practical_stabilization_experiment(0.01, seed, tol);
    if (!rep.target_was_dqls) { ok = false; detail = "not DQLS at seed " + std::to_string(seed); }
    if (!rep.bound_satisfied) { ok = false; detail = "bound violated at seed " + std::to_string(seed); }
  }
  report(8, "50 perturbed-GHZ runs at epsilon = 0.01", ok, detail);
}

// ---- 9: reconstruction ---------------------------------------------------

void criterion9() {
  bool ok = true;
  std::string detail;
  auto run = [&](const std::vector<Index>& dims, const std::vector<int>& nb1,
                 const std::vector<int>& nb2, std::uint64_t stream) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      PureState s = random_state(dims, seed, stream);
      std::vector<SupportInput> in = {
          {Neighborhood{nb1}, schmidt_span(s, nb1, tol)},
          {Neighborhood{nb2}, schmidt_span(s, nb2, tol)}};
      auto res = reconstruct(dims, in, tol);
      if (res.status != ReconStatus::Unique ||
          std::norm(inner(s, *res.state)) < 1 - 1e-9) {
        ok = false;
        detail = "seed " + std::to_string(seed);
      }
    }
  };
  run({2, 2, 2, 2}, {0, 1, 2}, {1, 2, 3}, 306);
  run({2, 2, 2, 2, 2}, {0, 1, 2}, {1, 2, 3, 4}, 307);

  PureState g = ghz_state(4);
  std::vector<SupportInput> in = {
      {Neighborhood{{0, 1, 2}}, schmidt_span(g, {0, 1, 2}, tol)},
      {Neighborhood{{1, 2, 3}}, schmidt_span(g, {1, 2, 3}, tol)}};
  auto res = reconstruct(g.dims, in, tol);
  if (res.status != ReconStatus::NotUnique || res.candidate_space.dim() != 2) {
    ok = false;
    detail = "GHZ candidate dim " + std::to_string(res.candidate_space.dim());
  }
  report(9, "support reconstruction, 4 and 5 qubits", ok, detail);
}

// ---- 10: structural invariants -------------------------------------------

void criterion10() {
  bool ok = true;
  std::string detail;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    PureState s = random_state({2, 2, 3}, seed, 308);
    Index base = dqls_subspace(s, tri_ns(), tol).dim_h0;

    // Invariance under invertible local operations.
    auto rng = make_rng(seed, 309);
    std::vector<CMatrix> ops = {CMatrix::Identity(2, 2) + 0.3 * ginibre(2, 2, rng),
                                CMatrix::Identity(2, 2) + 0.3 * ginibre(2, 2, rng),
                                CMatrix::Identity(3, 3) + 0.3 * ginibre(3, 3, rng)};
    if (dqls_subspace(slocc_transform(s, ops), tri_ns(), tol).dim_h0 != base) {
      ok = false;
      detail = "SLOCC invariance";
    }

    // Invariance under reversing the chain.
    PureState rev = permute_subsystems(s, {2, 1, 0});
    if (dqls_subspace(rev, NeighborhoodStructure(
            3, {Neighborhood{{0, 1}}, Neighborhood{{1, 2}}}), tol).dim_h0 != base) {
      ok = false;
      detail = "permutation symmetry";
    }

    // Scaling invariance.
    PureState scaled = s;
    scaled.amplitudes *= Complex(0, 0.37);
    scaled.normalized = false;
    if (dqls_subspace(scaled, tri_ns(), tol).dim_h0 != base) {
      ok = false;
      detail = "scaling invariance";
    }

    // Parent-Hamiltonian consistency and target membership.
    auto v = dqls_subspace(s, tri_ns(), tol);
    if (subspace_overlap(v.h0_basis, normalize(s).amplitudes) < 1 - 1e-9) {
      ok = false;
      detail = "target membership";
    }
    auto h = parent_hamiltonian(s, tri_ns(), tol);
    if (h.kernel_space(tol).dim() != base || !frustration_free_check(h, tol)) {
      ok = false;
      detail = "parent Hamiltonian";
    }
  }
  report(10, "invariance and consistency properties", ok, detail);
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  if (failures) {
    std::printf("%d criterion(s) FAILED\n", failures);
    return 1;
  }
  std::printf("all 10 criteria PASSED\n");
  return 0;
}
