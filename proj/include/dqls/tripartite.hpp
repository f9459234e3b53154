#pragma once

#include "dqls/engine.hpp"
#include "dqls/quantum_state.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dqls {

enum class Prediction { DQLS, NotDQLS, Unknown };

struct PredictionResult {
  Prediction verdict = Prediction::Unknown;
  bool conjectural = false;
  std::string reason;
};

struct SloccCanonical {
  std::vector<CMatrix> slices;
  CMatrix m_a;
  CMatrix m_c;
};

struct TripartiteReport {
  std::vector<Index> dims;  // (d_a, d_b, d_c) with d_a <= d_c after permutation
  bool permuted = false;    // subsystems 1 and 3 swapped to enforce d_a <= d_c
  Index d_bar = 0;
  std::vector<CMatrix> a_slices;
  bool slocc_applied = false;
  CMatrix m_a, m_c;
  bool nogo_applies = false;
  Index coeff_nullity = -1;      // -1 when not computed
  Index dim_h0_algebraic = -1;   // valid when d_a*d_b > d_c
  Index dim_h0_geometric = -1;   // -1 when skipped (size ceiling)
  double determinant_value = -1; // sigma_min surrogate, -1 when precondition fails
  double determinant_threshold = 0;
  PredictionResult predicted;
};

/// A_i(h,j) = psi[h,i,j]: the d_b partial-inner slices, each d_a x d_c.
std::vector<CMatrix> build_slices(const PureState& s);

/// SLOCC transform bringing A_0 to [I | 0] exactly (Schmidt-rank-maximal A_0).
SloccCanonical slocc_canonical(const std::vector<CMatrix>& slices);

/// Nullity of the stacked system X_a A_i = A_i X_c^T over (vec X_a, vec X_c^T).
/// Equals dim H0 when d_a*d_b > d_c.
Index coefficient_nullity(const std::vector<CMatrix>& slices, const RankTolerance& tol);

struct NogoResult {
  bool applies = false;
  Index predicted_dim = 0;
};

/// d_a*d_b <= d_c forces dim H0 = d_a^2 for states of maximal Schmidt rank.
NogoResult nogo_check(const std::vector<Index>& dims);

struct DeterminantResult {
  double sigma_min = 0;
  double threshold = 0;
  bool is_dqls() const { return sigma_min > threshold; }
};

/// Smallest singular value of [t_1|psi> ... t_k|psi>] over an orthonormal
/// basis of span{X_a x I x I, I x I x X_c}; nonzero iff the state is DQLS.
/// Requires d_a*d_b > d_c and d_a <= d_c.
DeterminantResult determinant_test(const PureState& s, const RankTolerance& tol);

/// Closed-form / conjectural DQLS prediction for generic states at the given
/// tripartite dimensions (d_a <= d_c assumed after internal normalization).
PredictionResult predict(const std::vector<Index>& dims);

/// Full report for one state; geometric cross-check only when dim <= geo_cap.
TripartiteReport analyze(const PureState& s, const RankTolerance& tol,
                         Index geo_cap = 4096);

}  // namespace dqls
