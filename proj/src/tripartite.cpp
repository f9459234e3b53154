#include "dqls/tripartite.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace dqls {

namespace {

void require_tripartite(const PureState& s) {
  if (s.n_subsystems() != 3)
    throw InvalidState("tripartite pipeline needs exactly 3 subsystems");
}

// Provable-DQLS closure over the closed-form dimension results, memoized.
// Dims are normalized so the first entry is the smaller outer dimension;
// the DQLS property is symmetric under swapping the outer subsystems.
bool provably_dqls(Index da, Index db, Index dc,
                   std::map<std::tuple<Index, Index, Index>, bool>& memo) {
  Index lo = std::min(da, dc), hi = std::max(da, dc);
  auto key = std::make_tuple(lo, db, hi);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  memo[key] = false;  // break cycles pessimistically

  bool ok = false;
  if (lo == 1) {
    ok = true;  // effectively bipartite: dim H0 = 1 in every closed form
  } else if (lo * db <= hi) {
    ok = false;  // dim H0 = lo^2 > 1
  } else if (db == 2) {
    ok = (hi == lo + 1);  // dim = lo for hi==lo, else min{lo^2, (hi-lo)^2}
  } else {
    if (hi == lo || hi == lo + 1) ok = true;
    if (!ok && hi % lo == 0) {
      Index n = hi / lo;
      if (n > 1 && n < db) ok = true;
    }
    if (!ok) ok = provably_dqls(lo, db - 1, hi, memo);  // monotone in db
    if (!ok) {
      Index dbar = hi - lo;
      if (dbar > 0 && dbar < lo * (db - 1))
        ok = provably_dqls(lo, db - 1, dbar, memo);  // recursion on (lo, db-1, dbar)
    }
  }
  memo[key] = ok;
  return ok;
}

}  // namespace

std::vector<CMatrix> build_slices(const PureState& s) {
  require_tripartite(s);
  const Index da = s.dims[0], db = s.dims[1], dc = s.dims[2];
  std::vector<CMatrix> slices(db, CMatrix(da, dc));
  for (Index i = 0; i < db; ++i)
    for (Index h = 0; h < da; ++h)
      for (Index j = 0; j < dc; ++j)
        slices[i](h, j) = s.amplitudes((h * db + i) * dc + j);
  return slices;
}

SloccCanonical slocc_canonical(const std::vector<CMatrix>& slices) {
  if (slices.empty()) throw InvalidState("no slices");
  const CMatrix& a0 = slices[0];
  const Index da = a0.rows(), dc = a0.cols();
  if (da > dc) throw PreconditionFailed("slocc_canonical expects d_a <= d_c");
  Eigen::BDCSVD<CMatrix> svd(a0, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  RankTolerance tol = default_tolerance();
  double thr = sv.size() ? tol.threshold(da, dc, sv(0)) : 0.0;
  for (Index k = 0; k < da; ++k)
    if (!(sv(k) > thr))
      throw SloccDegenerate("A_0 is rank-deficient; use the geometric decider");

  CMatrix m_a = sv.head(da).cwiseInverse().asDiagonal() *
                svd.matrixU().adjoint();
  CMatrix m_c = svd.matrixV().transpose();

  SloccCanonical out;
  out.m_a = m_a;
  out.m_c = m_c;
  for (const auto& a : slices) out.slices.push_back(m_a * a * m_c.transpose());
  return out;
}

Index coefficient_nullity(const std::vector<CMatrix>& slices, const RankTolerance& tol) {
  if (slices.empty()) throw InvalidState("no slices");
  const Index da = slices[0].rows(), dc = slices[0].cols();
  const Index db = static_cast<Index>(slices.size());
  CMatrix eye_a = CMatrix::Identity(da, da);
  CMatrix eye_c = CMatrix::Identity(dc, dc);
  CMatrix stacked(db * da * dc, da * da + dc * dc);
  for (Index i = 0; i < db; ++i) {
    // vec(X_a A_i) = (A_i^T x I) vec X_a ; vec(A_i X_c^T) = (I x A_i) vec X_c^T
    stacked.block(i * da * dc, 0, da * dc, da * da) =
        kron(slices[i].transpose(), eye_a);
    stacked.block(i * da * dc, da * da, da * dc, dc * dc) =
        -kron(eye_c, slices[i]);
  }
  return da * da + dc * dc - svd_rank(stacked, tol);
}

NogoResult nogo_check(const std::vector<Index>& dims) {
  if (dims.size() != 3) throw InvalidState("nogo_check needs 3 dims");
  Index da = std::min(dims[0], dims[2]), db = dims[1];
  Index dc = std::max(dims[0], dims[2]);
  NogoResult r;
  r.applies = (da * db <= dc);
  if (r.applies) r.predicted_dim = da * da;
  return r;
}

DeterminantResult determinant_test(const PureState& s, const RankTolerance& tol) {
  require_tripartite(s);
  const Index da = s.dims[0], db = s.dims[1], dc = s.dims[2];
  if (da > dc) throw PreconditionFailed("determinant test expects d_a <= d_c");
  if (da * db <= dc)
    throw PreconditionFailed("determinant test needs d_a*d_b > d_c");
  const Index d = s.dim();
  const Index k = da * da + dc * dc - 1;
  CMatrix a = CMatrix::Zero(d, k);

  auto idx = [&](Index h, Index i, Index j) { return (h * db + i) * dc + j; };
  Index col = 0;

  // Off-diagonal matrix units on subsystem a: (E_pq x I)|psi>, HS-normalized.
  double na = 1.0 / std::sqrt(static_cast<double>(db * dc));
  for (Index p = 0; p < da; ++p)
    for (Index q = 0; q < da; ++q) {
      if (p == q) continue;
      for (Index i = 0; i < db; ++i)
        for (Index j = 0; j < dc; ++j)
          a(idx(p, i, j), col) = na * s.amplitudes(idx(q, i, j));
      ++col;
    }
  // Off-diagonal matrix units on subsystem c.
  double nc = 1.0 / std::sqrt(static_cast<double>(da * db));
  for (Index r = 0; r < dc; ++r)
    for (Index t = 0; t < dc; ++t) {
      if (r == t) continue;
      for (Index h = 0; h < da; ++h)
        for (Index i = 0; i < db; ++i)
          a(idx(h, i, r), col) = nc * s.amplitudes(idx(h, i, t));
      ++col;
    }

  // Diagonal sector: orthonormalize span{E_pp x I, I x E_rr} through its
  // (da+dc)^2 Gram matrix; rank is da+dc-1 (shared identity direction).
  const Index m = da + dc;
  Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(m, m);
  for (Index p = 0; p < da; ++p) gram(p, p) = static_cast<double>(db * dc);
  for (Index r = 0; r < dc; ++r) gram(da + r, da + r) = static_cast<double>(da * db);
  for (Index p = 0; p < da; ++p)
    for (Index r = 0; r < dc; ++r) {
      gram(p, da + r) = static_cast<double>(db);
      gram(da + r, p) = static_cast<double>(db);
    }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram);
  double gthr = tol.threshold(m, m, es.eigenvalues()(m - 1));
  for (Index e = 0; e < m; ++e) {
    double lam = es.eigenvalues()(e);
    if (lam <= gthr) continue;
    Eigen::VectorXd c = es.eigenvectors().col(e) / std::sqrt(lam);
    for (Index h = 0; h < da; ++h)
      for (Index i = 0; i < db; ++i)
        for (Index j = 0; j < dc; ++j)
          a(idx(h, i, j), col) = (c(h) + c(da + j)) * s.amplitudes(idx(h, i, j));
    ++col;
  }
  if (col != k) throw ConstructionError("operator basis dimension mismatch");

  Eigen::BDCSVD<CMatrix> svd(a);
  const auto& sv = svd.singularValues();
  DeterminantResult r;
  // More operators than ambient dimensions forces a null combination; the
  // square case occurs exactly at the d_b = 2 stabilizability boundary.
  r.sigma_min = a.cols() > a.rows() ? 0.0 : sv(sv.size() - 1);
  r.threshold = tol.threshold(a.rows(), a.cols(), sv(0));
  return r;
}

PredictionResult predict(const std::vector<Index>& dims) {
  if (dims.size() != 3) throw InvalidState("predict needs 3 dims");
  Index da = std::min(dims[0], dims[2]), db = dims[1];
  Index dc = std::max(dims[0], dims[2]);

  thread_local std::map<std::tuple<Index, Index, Index>, bool> memo;
  PredictionResult r;
  if (provably_dqls(da, db, dc, memo)) {
    r.verdict = Prediction::DQLS;
    r.conjectural = false;
    r.reason = "closed-form dimension result";
    return r;
  }
  if (da * db <= dc) {
    r.verdict = Prediction::NotDQLS;
    r.conjectural = false;
    r.reason = "no-go: d_a*d_b <= d_c forces dim d_a^2";
    return r;
  }
  if (db == 2) {
    r.verdict = Prediction::NotDQLS;
    r.conjectural = false;
    r.reason = "closed-form d_b=2 dimension law";
    return r;
  }
  if (da <= db) {
    // conjectured: DQLS exactly below the no-go boundary
    r.verdict = Prediction::DQLS;
    r.conjectural = true;
    r.reason = "conjecture, d_a <= d_b regime";
    return r;
  }
  Index bound = da * db - da / db;
  if (dc >= bound) {
    r.verdict = Prediction::NotDQLS;
    r.conjectural = true;
    r.reason = "conjecture, exceptional band at the boundary";
  } else if (dc == bound - 1) {
    r.verdict = Prediction::Unknown;
    r.conjectural = true;
    r.reason = "within one of the conjectured boundary";
  } else {
    r.verdict = Prediction::DQLS;
    r.conjectural = true;
    r.reason = "conjecture, d_a > d_b regime";
  }
  return r;
}

TripartiteReport analyze(const PureState& s, const RankTolerance& tol, Index geo_cap) {
  require_tripartite(s);
  PureState t = s;
  TripartiteReport rep;
  if (t.dims[0] > t.dims[2]) {
    t = permute_subsystems(t, {2, 1, 0});
    rep.permuted = true;
  }
  rep.dims = t.dims;
  rep.d_bar = t.dims[2] - t.dims[0];
  rep.a_slices = build_slices(t);

  auto nogo = nogo_check(t.dims);
  rep.nogo_applies = nogo.applies;

  try {
    auto canon = slocc_canonical(rep.a_slices);
    rep.slocc_applied = true;
    rep.m_a = canon.m_a;
    rep.m_c = canon.m_c;
  } catch (const SloccDegenerate&) {
    rep.slocc_applied = false;
  }

  rep.coeff_nullity = coefficient_nullity(rep.a_slices, tol);
  if (!nogo.applies) rep.dim_h0_algebraic = rep.coeff_nullity;

  if (t.dim() <= geo_cap) {
    NeighborhoodStructure ns(3, {Neighborhood{{0, 1}}, Neighborhood{{1, 2}}});
    rep.dim_h0_geometric = dqls_subspace(t, ns, tol).dim_h0;
  }

  if (!nogo.applies) {
    auto det = determinant_test(t, tol);
    rep.determinant_value = det.sigma_min;
    rep.determinant_threshold = det.threshold;
  }

  rep.predicted = predict(t.dims);
  return rep;
}

}  // namespace dqls
