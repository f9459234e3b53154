#include <doctest.h>

#include "dqls/engine.hpp"
#include "dqls/rng.hpp"

using namespace dqls;

namespace {
const RankTolerance tol = RankTolerance::relative(1e-10);

NeighborhoodStructure chain2(int n) {
  std::vector<Neighborhood> nbs;
  for (int i = 0; i + 1 < n; ++i) nbs.push_back(Neighborhood{{i, i + 1}});
  return NeighborhoodStructure(n, nbs);
}

PureState basis_state(const std::vector<Index>& dims, Index flat) {
  PureState s{dims, CVector::Zero(product_dim(dims)), true};
  s.amplitudes(flat) = 1.0;
  return s;
}
}  // namespace

TEST_CASE("schmidt_span examples") {
  Subspace prod = schmidt_span(basis_state({2, 2, 2}, 0), {0, 1}, tol);
  CHECK(prod.dim() == 1);
  CHECK(std::abs(std::abs(prod.basis(0, 0)) - 1.0) < 1e-12);

  Subspace g = schmidt_span(ghz_state(3), {0, 1}, tol);
  CHECK(g.dim() == 2);
  CMatrix expect = CMatrix::Zero(4, 4);
  expect(0, 0) = expect(3, 3) = 1.0;
  CHECK((g.projector() - expect).norm() < 1e-12);

  // Middle subsystem of the GHZ chain still has a rank-2 span.
  CHECK(schmidt_span(ghz_state(3), {1}, tol).dim() == 2);

  // Generic states take the maximal rank min(d_subset, d_complement).
  CHECK(schmidt_span(random_state({2, 2, 3}, 4), {0}, tol).dim() == 2);
  CHECK(schmidt_span(random_state({2, 2, 3}, 4), {0, 1}, tol).dim() == 3);
}

TEST_CASE("extend_span respects the subsystem layout") {
  CMatrix one(2, 1);
  one << 0, 1;
  Subspace span{2, one, 1e-10};
  Subspace ext = extend_span(span, {2, 2}, {1});
  REQUIRE(ext.dim() == 2);
  CMatrix p = ext.projector();
  CHECK(std::abs(p(1, 1) - 1.0) < 1e-12);
  CHECK(std::abs(p(3, 3) - 1.0) < 1e-12);
  CHECK(std::abs(p(0, 0)) < 1e-12);
  CHECK(std::abs(p(2, 2)) < 1e-12);
}

TEST_CASE("embed_operator places factors correctly") {
  CMatrix x(2, 2);
  x << 0, 1, 1, 0;
  CMatrix i2 = CMatrix::Identity(2, 2);
  CHECK((embed_operator(x, {2, 2}, {0}) - kron(x, i2)).norm() < 1e-14);
  CHECK((embed_operator(x, {2, 2}, {1}) - kron(i2, x)).norm() < 1e-14);
  CMatrix xx = kron(x, x);
  CHECK((embed_operator(xx, {2, 2, 2}, {0, 2}) - kron(x, kron(i2, x))).norm() < 1e-14);
}

TEST_CASE("dqls_subspace on known states") {
  auto ns = chain2(3);

  auto prod = dqls_subspace(basis_state({2, 2, 2}, 0), ns, tol);
  CHECK(prod.dim_h0 == 1);
  CHECK(prod.is_dqls);

  auto g = dqls_subspace(ghz_state(3), ns, tol);
  CHECK(g.dim_h0 == 2);
  CHECK(!g.is_dqls);
  // H0 = span{|000>, |111>}.
  CMatrix p = g.h0_basis.projector();
  CHECK(std::abs(p(0, 0) - 1.0) < 1e-10);
  CHECK(std::abs(p(7, 7) - 1.0) < 1e-10);
  for (Index k = 1; k < 7; ++k) CHECK(std::abs(p(k, k)) < 1e-10);

  // |000> lies in every two-body Schmidt span of W_3, so H0 is two
  // dimensional and the state is not DQLS for this structure.
  auto w = dqls_subspace(w_state(3), ns, tol);
  CHECK(w.dim_h0 == 2);
  CHECK(!w.is_dqls);
  CVector e0 = CVector::Zero(8);
  e0(0) = 1.0;
  CHECK(subspace_overlap(w.h0_basis, e0) >= 1 - 1e-9);

  auto g4 = dqls_subspace(ghz_state(4), chain2(4), tol);
  CHECK(g4.dim_h0 == 2);
}

TEST_CASE("the target always lies in its own H0") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    PureState s = random_state({2, 2, 2, 2}, seed, 31);
    auto v = dqls_subspace(s, chain2(4), tol);
    CHECK(subspace_overlap(v.h0_basis, s.amplitudes) >= 1 - 1e-9);
  }
  PureState d = dicke_state(4, 2);
  NeighborhoodStructure ns3(4, {Neighborhood{{0, 1, 2}}, Neighborhood{{1, 2, 3}}});
  auto v = dqls_subspace(d, ns3, tol);
  CHECK(subspace_overlap(v.h0_basis, d.amplitudes) >= 1 - 1e-9);
  CHECK(v.dim_h0 == 1);  // Dicke(4,2) is DQLS for overlapping 3-body sets
}

TEST_CASE("H0 shrinks under coarse graining") {
  NeighborhoodStructure fine = chain2(4);
  NeighborhoodStructure coarse(4, {Neighborhood{{0, 1, 2}}, Neighborhood{{1, 2, 3}}});
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    PureState s = random_state({2, 2, 2, 2}, seed, 37);
    auto vf = dqls_subspace(s, fine, tol);
    auto vc = dqls_subspace(s, coarse, tol);
    CHECK(vc.dim_h0 <= vf.dim_h0);
    CMatrix pf = vf.h0_basis.projector(), pc = vc.h0_basis.projector();
    CHECK((pf * pc - pc).norm() < 1e-8);  // containment
  }
}

TEST_CASE("H0 dimension is invariant under scaling and SLOCC") {
  NeighborhoodStructure ns = chain2(3);
  PureState s = random_state({2, 2, 3}, 99);
  Index base = dqls_subspace(s, ns, tol).dim_h0;

  for (Complex alpha : {Complex(2, 0), Complex(0, 1), Complex(0.01, 0)}) {
    PureState scaled = s;
    scaled.amplitudes *= alpha;
    scaled.normalized = false;
    CHECK(dqls_subspace(scaled, ns, tol).dim_h0 == base);
  }

  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto rng = make_rng(seed, 41);
    std::vector<CMatrix> ops = {
        CMatrix::Identity(2, 2) + 0.3 * ginibre(2, 2, rng),
        CMatrix::Identity(2, 2) + 0.3 * ginibre(2, 2, rng),
        CMatrix::Identity(3, 3) + 0.3 * ginibre(3, 3, rng)};
    PureState t = slocc_transform(s, ops);
    CHECK(dqls_subspace(t, ns, tol).dim_h0 ==
          dqls_subspace(s, ns, tol).dim_h0);
  }
}

TEST_CASE("slocc_transform rejects singular operators") {
  PureState s = random_state({2, 2}, 1);
  CMatrix sing = CMatrix::Zero(2, 2);
  sing(0, 0) = 1.0;
  CHECK_THROWS_AS(slocc_transform(s, {sing, CMatrix::Identity(2, 2)}), SingularSLOCC);
  CHECK_THROWS_AS(slocc_transform(s, {CMatrix::Identity(2, 2)}), DimensionMismatch);
}

TEST_CASE("membership witnesses") {
  NeighborhoodStructure ns = chain2(3);
  PureState g = ghz_state(3);

  auto self = membership_witnesses(g, g, ns, tol);
  CHECK(self.member);
  for (double r : self.residuals) CHECK(r < 1e-9);

  // (|000> - |111>)/sqrt(2) is reachable from GHZ via Z on one subsystem.
  PureState flipped = g;
  flipped.amplitudes(7) = -flipped.amplitudes(7);
  auto reach = membership_witnesses(g, flipped, ns, tol);
  CHECK(reach.member);

  // |111> is not reachable from |000> with single-complement operators.
  auto miss = membership_witnesses(basis_state({2, 2, 2}, 0),
                                   basis_state({2, 2, 2}, 7), ns, tol);
  CHECK(!miss.member);
}

TEST_CASE("dqls_subspace enforces the size ceiling") {
  PureState big = random_state({4, 4, 4, 4, 4, 4, 4}, 0);
  CHECK_THROWS_AS(dqls_subspace(big, chain2(7), tol), TooLarge);
}
