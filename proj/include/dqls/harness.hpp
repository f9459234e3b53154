#pragma once

#include "dqls/tripartite.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace dqls {

struct TableCell {
  Index d_a = 0;
  Index d_bar = 0;
  char verdict = '?';  // 'Y', 'N', 'M' (mixed), '?' (skipped)
  int agreement_count = 0;
  int seeds = 0;
  Prediction prediction = Prediction::Unknown;
  bool prediction_conjectural = false;
  bool matches_prediction = true;  // Unknown never mismatches
};

struct TableResult {
  Index d_b = 0;
  std::vector<Index> d_a_values;
  std::vector<Index> d_bar_values;
  std::vector<TableCell> cells;  // row-major over (d_a, d_bar)
  int mixed_cells = 0;
  int mismatches = 0;

  const TableCell& at(Index d_a, Index d_bar) const;
  std::string to_csv() const;
};

/// Measured DQLS verdict for a single random state at the given dims:
/// coefficient-matrix nullity when d_a*d_b > d_c, rank bookkeeping in the
/// no-go regime.
bool measure_dqls(const std::vector<Index>& dims, std::uint64_t seed,
                  const RankTolerance& tol);

/// Monte Carlo sweep over (d_a, d_bar) cells at fixed d_b; cell verdicts by
/// unanimity over seeds, compared against the closed-form predictor.
TableResult run_table(Index d_b, const std::vector<Index>& d_a_values,
                      const std::vector<Index>& d_bar_values, int seeds,
                      std::uint64_t base_seed, const RankTolerance& tol,
                      Index size_cap = 1u << 20);

}  // namespace dqls
