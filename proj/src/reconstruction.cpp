#include "dqls/reconstruction.hpp"

#include <set>

namespace dqls {

ReconstructionResult reconstruct(const std::vector<Index>& dims,
                                 const std::vector<SupportInput>& inputs,
                                 const RankTolerance& tol) {
  if (inputs.empty()) throw IncompleteNeighborhoods("no supports given");
  const Index n = static_cast<Index>(dims.size());
  std::set<int> covered;
  for (const auto& in : inputs)
    covered.insert(in.neighborhood.members.begin(), in.neighborhood.members.end());
  if (static_cast<Index>(covered.size()) != n)
    throw IncompleteNeighborhoods("supports do not jointly cover all subsystems");

  std::vector<Subspace> extended;
  for (const auto& in : inputs) {
    Index d_nb = 1;
    for (int a : in.neighborhood.members) d_nb *= dims[a];
    if (in.support.ambient_dim != d_nb)
      throw DimensionMismatch("support ambient dimension mismatch");
    extended.push_back(extend_span(in.support, dims, in.neighborhood.members));
  }
  Subspace candidate = intersect(extended, tol);

  ReconstructionResult res;
  res.candidate_space = candidate;
  if (candidate.dim() == 0) {
    res.status = ReconStatus::Inconsistent;
  } else if (candidate.dim() > 1) {
    res.status = ReconStatus::NotUnique;
  } else {
    res.status = ReconStatus::Unique;
    CVector amp = candidate.basis.col(0);
    Index imax = 0;
    for (Index i = 1; i < amp.size(); ++i)
      if (std::abs(amp(i)) > std::abs(amp(imax))) imax = i;
    if (std::abs(amp(imax)) > 0) amp *= std::abs(amp(imax)) / amp(imax);
    res.state = PureState{dims, amp, true};
  }
  return res;
}

namespace {

UdaCase run_case(const std::string& name, const PureState& s,
                 const std::vector<Neighborhood>& nbs, const RankTolerance& tol,
                 const std::string& note = "") {
  std::vector<SupportInput> inputs;
  for (const auto& nb : nbs)
    inputs.push_back({nb, schmidt_span(s, nb.members, tol)});
  auto res = reconstruct(s.dims, inputs, tol);
  UdaCase c;
  c.name = name;
  c.status = res.status;
  c.candidate_dim = res.candidate_space.dim();
  c.note = note;
  if (res.state) {
    PureState truth = normalize(s);
    c.fidelity = std::norm(inner(truth, *res.state));
  }
  return c;
}

}  // namespace

std::vector<UdaCase> uda_battery(const RankTolerance& tol) {
  std::vector<UdaCase> out;
  std::vector<Neighborhood> three_body{Neighborhood{{0, 1, 2}}, Neighborhood{{1, 2, 3}}};
  std::vector<Neighborhood> two_body{Neighborhood{{0, 1}}, Neighborhood{{1, 2}}};

  out.push_back(run_case("dicke(4,2)", dicke_state(4, 2), three_body, tol,
                         "DQLS target: supports alone determine the state"));
  out.push_back(run_case("ghz3", ghz_state(3), two_body, tol,
                         "two-dimensional candidate space: not determined"));
  out.push_back(run_case(
      "w3", w_state(3), two_body, tol,
      "supports alone leave a two-dimensional candidate; determination would "
      "need full RDM values, which this procedure does not consume"));
  out.push_back(run_case("random(2,2,2,2)", random_state({2, 2, 2, 2}, 424242),
                         three_body, tol, "generic four-qubit state"));
  return out;
}

}  // namespace dqls
