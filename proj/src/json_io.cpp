#include "dqls/json_io.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>

namespace dqls {

namespace {

using nlohmann::json;

json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidParameter("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw InvalidParameter("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

}  // namespace

PureState load_state_json(const std::string& path) {
  json j = load_file(path);
  if (!j.contains("dims") || !j.contains("re") || !j.contains("im"))
    throw InvalidParameter("state JSON needs dims, re, im");
  std::vector<Index> dims;
  for (auto& d : j["dims"]) {
    Index v = d.get<Index>();
    if (v < 2) throw InvalidParameter("every dimension must be >= 2");
    dims.push_back(v);
  }
  if (dims.empty()) throw InvalidParameter("dims must be non-empty");
  auto re = j["re"].get<std::vector<double>>();
  auto im = j["im"].get<std::vector<double>>();
  Index full = product_dim(dims);
  if (static_cast<Index>(re.size()) != full || static_cast<Index>(im.size()) != full)
    throw InvalidParameter("amplitude length does not match prod(dims)");
  CVector amp(full);
  for (Index i = 0; i < full; ++i) {
    if (!std::isfinite(re[i]) || !std::isfinite(im[i]))
      throw InvalidParameter("non-finite amplitude");
    amp(i) = Complex(re[i], im[i]);
  }
  bool normed = std::abs(amp.norm() - 1.0) < 1e-10;
  return {dims, amp, normed};
}

std::string state_to_json(const PureState& s) {
  json j;
  j["dims"] = s.dims;
  std::vector<double> re, im;
  for (Index i = 0; i < s.amplitudes.size(); ++i) {
    re.push_back(s.amplitudes(i).real());
    im.push_back(s.amplitudes(i).imag());
  }
  j["re"] = re;
  j["im"] = im;
  return j.dump();
}

NeighborhoodStructure load_ns_json(const std::string& path) {
  json j = load_file(path);
  if (!j.contains("n") || !j.contains("neighborhoods"))
    throw InvalidParameter("neighborhood JSON needs n and neighborhoods");
  int n = j["n"].get<int>();
  std::vector<Neighborhood> nbs;
  for (auto& row : j["neighborhoods"]) {
    Neighborhood nb;
    for (auto& v : row) {
      int a = v.get<int>();
      if (a < 1 || a > n)
        throw InvalidParameter("neighborhood index out of range (1-based)");
      nb.members.push_back(a - 1);
    }
    nbs.push_back(nb);
  }
  return NeighborhoodStructure(n, nbs);
}

std::string ns_to_json(const NeighborhoodStructure& ns) {
  json j;
  j["n"] = ns.n_subsystems();
  json rows = json::array();
  for (const auto& nb : ns.neighborhoods()) {
    json row = json::array();
    for (int a : nb.members) row.push_back(a + 1);
    rows.push_back(row);
  }
  j["neighborhoods"] = rows;
  return j.dump();
}

Subspace load_subspace_json(const std::string& path) {
  json j = load_file(path);
  if (!j.contains("ambient_dim") || !j.contains("re") || !j.contains("im"))
    throw InvalidParameter("subspace JSON needs ambient_dim, re, im");
  Index n = j["ambient_dim"].get<Index>();
  auto re = j["re"].get<std::vector<std::vector<double>>>();
  auto im = j["im"].get<std::vector<std::vector<double>>>();
  if (re.size() != im.size() || static_cast<Index>(re.size()) != n)
    throw InvalidParameter("subspace basis row count mismatch");
  Index k = n ? static_cast<Index>(re[0].size()) : 0;
  CMatrix basis(n, k);
  for (Index i = 0; i < n; ++i) {
    if (static_cast<Index>(re[i].size()) != k ||
        static_cast<Index>(im[i].size()) != k)
      throw InvalidParameter("ragged subspace basis");
    for (Index c = 0; c < k; ++c) basis(i, c) = Complex(re[i][c], im[i][c]);
  }
  // Re-orthonormalize defensively; external input may be a raw span.
  return Subspace::from_span(basis, default_tolerance());
}

std::string subspace_to_json(const Subspace& s) {
  json j;
  j["ambient_dim"] = s.ambient_dim;
  std::vector<std::vector<double>> re, im;
  for (Index i = 0; i < s.basis.rows(); ++i) {
    std::vector<double> r, m;
    for (Index c = 0; c < s.basis.cols(); ++c) {
      r.push_back(s.basis(i, c).real());
      m.push_back(s.basis(i, c).imag());
    }
    re.push_back(r);
    im.push_back(m);
  }
  j["re"] = re;
  j["im"] = im;
  return j.dump();
}

}  // namespace dqls
