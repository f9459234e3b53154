#include "dqls/harness.hpp"

#include <sstream>

namespace dqls {

const TableCell& TableResult::at(Index d_a, Index d_bar) const {
  for (const auto& c : cells)
    if (c.d_a == d_a && c.d_bar == d_bar) return c;
  throw InvalidParameter("no such table cell");
}

std::string TableResult::to_csv() const {
  std::ostringstream out;
  out << "d_a";
  for (Index db : d_bar_values) out << "," << db;
  out << "\r\n";
  for (Index da : d_a_values) {
    out << da;
    for (Index dbar : d_bar_values) out << "," << at(da, dbar).verdict;
    out << "\r\n";
  }
  return out.str();
}

bool measure_dqls(const std::vector<Index>& dims, std::uint64_t seed,
                  const RankTolerance& tol) {
  if (dims.size() != 3) throw InvalidState("measure_dqls needs 3 dims");
  PureState s = random_state(dims, seed);
  if (dims[0] > dims[2]) s = permute_subsystems(s, {2, 1, 0});
  const Index da = s.dims[0], db = s.dims[1], dc = s.dims[2];
  if (da * db > dc) return coefficient_nullity(build_slices(s), tol) == 1;
  // No-go regime: dim H0 = d_a * rank(rho_a) once Sigma_ab is full.
  Index r_ab = schmidt_span(s, {0, 1}, tol).dim();
  Index r_a = schmidt_span(s, {0}, tol).dim();
  if (r_ab != da * db)
    throw PreconditionFailed("random state missed maximal Schmidt rank");
  return da * r_a == 1;
}

TableResult run_table(Index d_b, const std::vector<Index>& d_a_values,
                      const std::vector<Index>& d_bar_values, int seeds,
                      std::uint64_t base_seed, const RankTolerance& tol,
                      Index size_cap) {
  if (seeds < 1) throw InvalidParameter("need at least one seed");
  TableResult res;
  res.d_b = d_b;
  res.d_a_values = d_a_values;
  res.d_bar_values = d_bar_values;
  for (Index da : d_a_values)
    for (Index dbar : d_bar_values) {
      TableCell cell;
      cell.d_a = da;
      cell.d_bar = dbar;
      cell.seeds = seeds;
      std::vector<Index> dims{da, d_b, da + dbar};
      auto pred = predict(dims);
      cell.prediction = pred.verdict;
      cell.prediction_conjectural = pred.conjectural;
      if (product_dim(dims) > size_cap) {
        cell.verdict = '?';
        res.cells.push_back(cell);
        continue;
      }
      int yes = 0;
      for (int k = 0; k < seeds; ++k) {
        std::uint64_t seed = base_seed + 1000003ull * (da * 131 + dbar * 17) + k;
        if (measure_dqls(dims, seed, tol)) ++yes;
      }
      if (yes == seeds)
        cell.verdict = 'Y';
      else if (yes == 0)
        cell.verdict = 'N';
      else
        cell.verdict = 'M';
      cell.agreement_count = std::max(yes, seeds - yes);
      if (cell.verdict == 'M') ++res.mixed_cells;
      bool mismatch =
          (cell.verdict == 'Y' && cell.prediction == Prediction::NotDQLS) ||
          (cell.verdict == 'N' && cell.prediction == Prediction::DQLS) ||
          cell.verdict == 'M';
      cell.matches_prediction = !mismatch;
      if (mismatch) ++res.mismatches;
      res.cells.push_back(cell);
    }
  return res;
}

}  // namespace dqls
