#include <doctest.h>

#include "dqls/harness.hpp"
#include "dqls/json_io.hpp"

#include <filesystem>
#include <fstream>

using namespace dqls;

namespace {
const RankTolerance tol = RankTolerance::relative(1e-10);

std::string write_temp(const std::string& name, const std::string& content) {
  auto path = (std::filesystem::temp_directory_path() / name).string();
  std::ofstream(path) << content;
  return path;
}
}  // namespace

TEST_CASE("state JSON round trip") {
  PureState s = random_state({2, 3}, 5);
  auto path = write_temp("dqls_state.json", state_to_json(s));
  PureState back = load_state_json(path);
  CHECK(back.dims == s.dims);
  CHECK((back.amplitudes - s.amplitudes).norm() < 1e-14);
}

TEST_CASE("state JSON validation") {
  auto bad_len = write_temp("dqls_bad1.json",
                            R"({"dims":[2,2],"re":[1,0,0],"im":[0,0,0]})");
  CHECK_THROWS_AS(load_state_json(bad_len), InvalidParameter);
  auto bad_dims = write_temp("dqls_bad2.json",
                             R"({"dims":[2,0],"re":[],"im":[]})");
  CHECK_THROWS_AS(load_state_json(bad_dims), InvalidParameter);
  CHECK_THROWS_AS(load_state_json("/nonexistent/no.json"), DqlsError);
}

TEST_CASE("neighborhood JSON uses 1-based indices") {
  auto path = write_temp("dqls_ns.json",
                         R"({"n":4,"neighborhoods":[[1,2,3],[2,3,4]]})");
  NeighborhoodStructure ns = load_ns_json(path);
  CHECK(ns.n_subsystems() == 4);
  REQUIRE(ns.size() == 2);
  CHECK(ns.neighborhoods()[0].members == std::vector<int>{0, 1, 2});
  CHECK(ns.neighborhoods()[1].members == std::vector<int>{1, 2, 3});

  // Round trip restores the 1-based external form.
  std::string txt = ns_to_json(ns);
  auto path2 = write_temp("dqls_ns2.json", txt);
  NeighborhoodStructure back = load_ns_json(path2);
  CHECK(back.n_subsystems() == 4);
  CHECK(back.neighborhoods()[0].members == ns.neighborhoods()[0].members);
  CHECK(txt.find("[1,2,3]") != std::string::npos);

  auto zero = write_temp("dqls_ns0.json", R"({"n":3,"neighborhoods":[[0,1],[2,3]]})");
  CHECK_THROWS_AS(load_ns_json(zero), InvalidParameter);
}

TEST_CASE("subspace JSON round trip re-orthonormalizes") {
  Subspace s = schmidt_span(ghz_state(3), {0, 1}, tol);
  auto path = write_temp("dqls_sub.json", subspace_to_json(s));
  Subspace back = load_subspace_json(path);
  CHECK(back.ambient_dim == 4);
  CHECK(back.dim() == 2);
  CHECK(subspace_distance(back, s) < 1e-10);
}

TEST_CASE("table CSV shape") {
  auto table = run_table(2, {2}, {0, 1}, 2, 1000, tol);
  std::string csv = table.to_csv();
  CHECK(csv == "d_a,0,1\r\n2,N,Y\r\n");
  CHECK(table.at(2, 1).verdict == 'Y');
  CHECK(table.at(2, 0).verdict == 'N');
  CHECK(table.mismatches == 0);
  CHECK(table.mixed_cells == 0);
  CHECK_THROWS_AS(table.at(3, 0), InvalidParameter);
}
