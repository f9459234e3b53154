#include <doctest.h>

#include "dqls/quantum_state.hpp"

using namespace dqls;

TEST_CASE("random_state is normalized and deterministic") {
  PureState a = random_state({2}, 42);
  CHECK(a.amplitudes.norm() == doctest::Approx(1.0).epsilon(1e-12));
  PureState b = random_state({2}, 42);
  CHECK((a.amplitudes - b.amplitudes).norm() == 0.0);
  PureState c = random_state({2}, 43);
  CHECK((a.amplitudes - c.amplitudes).norm() > 1e-3);
}

TEST_CASE("single-qudit purity matches the Haar moment") {
  // dims (2,2,3), keep subsystem 1: mean purity (d_a + d_bc)/(1 + d_a*d_bc).
  double acc = 0;
  const int n = 500;
  for (int k = 0; k < n; ++k) {
    auto rho = partial_trace(random_state({2, 2, 3}, 1000 + k), {0});
    acc += std::real((rho.matrix * rho.matrix).trace());
  }
  CHECK(acc / n == doctest::Approx(8.0 / 13.0).epsilon(0.03));
}

TEST_CASE("partial trace basics") {
  PureState s00{{2, 2}, CVector::Zero(4), true};
  s00.amplitudes(0) = 1.0;
  auto rho = partial_trace(s00, {0});
  CHECK(std::abs(rho.matrix(0, 0) - 1.0) < 1e-14);
  CHECK(std::abs(rho.matrix(1, 1)) < 1e-14);

  PureState bell{{2, 2}, CVector::Zero(4), true};
  bell.amplitudes(0) = bell.amplitudes(3) = 1.0 / std::sqrt(2.0);
  auto rb = partial_trace(bell, {0});
  CHECK((rb.matrix - 0.5 * CMatrix::Identity(2, 2)).norm() < 1e-14);

  auto rg = partial_trace(ghz_state(3), {0, 1});
  CMatrix expect = CMatrix::Zero(4, 4);
  expect(0, 0) = expect(3, 3) = 0.5;
  CHECK((rg.matrix - expect).norm() < 1e-14);
}

TEST_CASE("partial trace errors") {
  CHECK_THROWS_AS(partial_trace(ghz_state(3), {}), InvalidIndexSet);
  CHECK_THROWS_AS(partial_trace(ghz_state(3), {3}), InvalidIndexSet);
  CHECK_THROWS_AS(partial_trace(ghz_state(3), {1, 0}), InvalidIndexSet);
}

TEST_CASE("Schmidt symmetry of complementary partial traces") {
  PureState s = random_state({2, 3, 2}, 5);
  auto r1 = partial_trace(s, {0});
  auto r2 = partial_trace(s, {1, 2});
  Eigen::SelfAdjointEigenSolver<CMatrix> e1(r1.matrix), e2(r2.matrix);
  // Non-zero spectra coincide; r2 has extra zeros.
  auto ev1 = e1.eigenvalues();
  auto ev2 = e2.eigenvalues();
  CHECK(ev1(1) == doctest::Approx(ev2(5)).epsilon(1e-10));
  CHECK(ev1(0) == doctest::Approx(ev2(4)).epsilon(1e-10));
  for (int k = 0; k < 4; ++k) CHECK(std::abs(ev2(k)) < 1e-10);
}

TEST_CASE("partial inner product slices and reassembles") {
  PureState s01{{2, 2}, CVector::Zero(4), true};
  s01.amplitudes(1) = 1.0;  // |01>
  PureState hit = partial_inner(s01, 1, 1);
  CHECK(std::abs(hit.amplitudes(0) - 1.0) < 1e-15);
  PureState miss = partial_inner(s01, 1, 0);
  CHECK(miss.amplitudes.norm() < 1e-15);

  PureState r = random_state({2, 2, 2}, 77);
  // Reassemble over the middle subsystem.
  CVector rebuilt = CVector::Zero(8);
  for (Index i = 0; i < 2; ++i) {
    PureState slice = partial_inner(r, 1, i);
    for (Index h = 0; h < 2; ++h)
      for (Index j = 0; j < 2; ++j)
        rebuilt((h * 2 + i) * 2 + j) = slice.amplitudes(h * 2 + j);
  }
  CHECK((rebuilt - r.amplitudes).norm() < 1e-15);
}

TEST_CASE("named states") {
  PureState g = ghz_state(3);
  CHECK(std::abs(g.amplitudes(0) - 1.0 / std::sqrt(2.0)) < 1e-14);
  CHECK(std::abs(g.amplitudes(7) - 1.0 / std::sqrt(2.0)) < 1e-14);
  CHECK(g.amplitudes.squaredNorm() == doctest::Approx(1.0));

  PureState w = w_state(3);
  for (Index i : {1, 2, 4})
    CHECK(std::abs(w.amplitudes(i) - 1.0 / std::sqrt(3.0)) < 1e-14);
  CHECK(std::abs(w.amplitudes(0)) < 1e-15);

  PureState d = dicke_state(4, 2);
  int nonzero = 0;
  for (Index i = 0; i < 16; ++i)
    if (std::abs(d.amplitudes(i)) > 1e-15) {
      ++nonzero;
      CHECK(std::abs(d.amplitudes(i) - 1.0 / std::sqrt(6.0)) < 1e-14);
    }
  CHECK(nonzero == 6);

  CHECK_THROWS_AS(ghz_state(1), InvalidName);
  CHECK_THROWS_AS(dicke_state(4, 5), InvalidName);
}

TEST_CASE("random states have maximal Schmidt rank across bipartitions") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    PureState s = random_state({2, 2, 3}, seed, 2);
    CMatrix m(2, 6);
    for (Index i = 0; i < 2; ++i)
      for (Index j = 0; j < 6; ++j) m(i, j) = s.amplitudes(i * 6 + j);
    CHECK(svd_rank(m, RankTolerance::relative(1e-10)) == 2);
    CMatrix m2(4, 3);
    for (Index i = 0; i < 4; ++i)
      for (Index j = 0; j < 3; ++j) m2(i, j) = s.amplitudes(i * 3 + j);
    CHECK(svd_rank(m2, RankTolerance::relative(1e-10)) == 3);
  }
}

TEST_CASE("ring graph state has maximally mixed edge RDMs") {
  std::vector<std::vector<int>> ring = {
      {0, 1, 0, 1}, {1, 0, 1, 0}, {0, 1, 0, 1}, {1, 0, 1, 0}};
  PureState g = graph_state(ring);
  std::vector<std::vector<int>> edges = {{0, 1}, {1, 2}, {2, 3}, {0, 3}};
  for (const auto& e : edges) {
    auto rho = partial_trace(g, e);
    CHECK((rho.matrix - 0.25 * CMatrix::Identity(4, 4)).norm() < 1e-12);
  }
}

TEST_CASE("permute and regroup round trip") {
  PureState s = random_state({2, 3, 2}, 21);
  PureState p = permute_subsystems(s, {2, 0, 1});
  CHECK(p.dims == std::vector<Index>{2, 2, 3});
  PureState back = permute_subsystems(p, {1, 2, 0});
  CHECK((back.amplitudes - s.amplitudes).norm() < 1e-15);

  PureState r = regroup(s, {1, 2});
  CHECK(r.dims == std::vector<Index>{2, 6});
  CHECK((r.amplitudes - s.amplitudes).norm() == 0.0);
  CHECK_THROWS_AS(regroup(s, {1, 1}), InvalidIndexSet);
}
