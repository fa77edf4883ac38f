#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "test_support.hpp"
#include "websterlab/cli_app.hpp"

using namespace websterlab;

namespace {

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
};

CliResult cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  std::streambuf* saved = std::cerr.rdbuf(err.rdbuf());
  CliResult r;
  r.code = run_cli(args, out);
  std::cerr.rdbuf(saved);
  r.out = out.str();
  r.err = err.str();
  return r;
}

}  // namespace

TEST_CASE("derive reports the family invariants exactly") {
  auto r = cli({"derive", "--model", "rossi", "--s", "3/4", "--json"});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["R"].get<std::string>() == "17/8");
  CHECK(j["h11bar"].get<std::string>() == "16/25");
  CHECK(j["omega11"]["c_theta"].get<std::string>() == "-17/8 i");
  CHECK(j["residual_report"]["is_critical"].get<bool>());
}

TEST_CASE("derive pretty output names the fields") {
  auto r = cli({"derive"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("R = 1\n") != std::string::npos);
  CHECK(r.out.find("critical = yes") != std::string::npos);
}

TEST_CASE("structure JSON round-trips") {
  auto r = cli({"derive", "--model", "rossi", "--s", "5/12", "--json"});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  auto S = rossi_structure(frac(5, 12));
  CHECK(poly_field_from_json(j["h11bar"]) == S.h11);
  CHECK(poly_field_from_json(j["A11"]) == S.A11);
  CHECK(poly_field_from_json(j["R"]) == S.Rcurv);
  CHECK(poly_field_from_json(j["omega11"]["c_theta"]) == S.omega.c_theta);
}

TEST_CASE("scalar and polynomial JSON encodings invert") {
  Scalar tricky = Scalar(frac(-3, 4)) + Scalar(frac(5, 7)) * Scalar::i() +
                  Scalar(frac(2, 9)) * Scalar::sqrt2() -
                  Scalar(6) * Scalar::i() * Scalar::sqrt2();
  CHECK(scalar_from_json(scalar_to_json(tricky)) == tricky);
  CHECK(scalar_from_string(tricky.to_string()) == tricky);
  CHECK(scalar_from_string(Scalar(0).to_string()) == Scalar(0));

  for (int k = 0; k < 10; ++k) {
    auto p = testing::random_poly();
    CHECK(poly_from_json(poly_to_json(p)) == p);
  }
}

TEST_CASE("energy prints the exact closed value") {
  auto r = cli({"energy", "--model", "rossi", "--s", "5/12"});
  REQUIRE(r.code == 0);
  CHECK(r.out == "16 * pi^2\n");
  CHECK(cli({"energy"}).out == "16 * pi^2\n");
}

TEST_CASE("exact mode rejects a non-Pythagorean parameter") {
  auto r = cli({"energy", "--model", "rossi", "--s", "1/3"});
  CHECK(r.code == 2);
  CHECK(r.err.find("irrational Levi normalization") != std::string::npos);
}

TEST_CASE("float mode accepts the same parameter as a diagnostic") {
  auto r = cli({"derive", "--model", "rossi", "--s", "1/3", "--float"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("R = 1.2222222222222") != std::string::npos);  // 1 + 2/9
  CHECK(r.out.find("critical = yes") != std::string::npos);

  // The float route carries honest roundoff, so parse the coefficient
  // instead of pinning its digits.
  auto e = cli({"energy", "--model", "rossi", "--s", "1/3", "--float"});
  REQUIRE(e.code == 0);
  auto star = e.out.find(" * pi^2");
  REQUIRE(star != std::string::npos);
  CHECK(std::abs(std::stod(e.out.substr(0, star)) - 16.0) < 1e-9);
}

TEST_CASE("float mode is rejected on exact-only verbs") {
  CHECK(cli({"scan", "--float"}).code == 2);
  CHECK(cli({"hessian", "--float"}).code == 2);
  CHECK(cli({"jet-check", "--float"}).code == 2);
}

TEST_CASE("unknown model exits with a usage error") {
  auto r = cli({"derive", "--model", "torus"});
  CHECK(r.code == 2);
  CHECK(r.err.find("unknown model") != std::string::npos);
}

TEST_CASE("residuals verb reports criticality") {
  auto r = cli({"residuals", "--model", "rossi", "--s", "3/4", "--json"});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["pe"].get<std::string>() == "0");
  CHECK(j["el_J"].get<std::string>() == "0");
  CHECK(j["el_theta"].get<std::string>() == "0");
  CHECK(j["is_critical"].get<bool>());
}

TEST_CASE("first variation vanishes at critical structures") {
  auto theta = cli({"first-variation", "--mode", "2,1", "--kind", "theta"});
  REQUIRE(theta.code == 0);
  CHECK(theta.out == "0\n");
  auto J = cli({"first-variation", "--model", "rossi", "--s", "3/4", "--mode", "2,0",
                "--kind", "J"});
  REQUIRE(J.code == 0);
  CHECK(J.out == "0\n");
}

TEST_CASE("hessian verb carries the per-mode report") {
  auto r = cli({"hessian", "--mode", "2,0", "--json"});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["theta"]["quad"].get<std::string>() == "128 * pi^2");
  CHECK(j["theta"]["jet_match"].get<bool>());
  CHECK(j["J"]["raw"].get<std::string>() == "-32 * pi^2");
  CHECK(j["J"]["reduced"].get<std::string>() == "-32 * pi^2");
  CHECK(j["J"]["closed_form"].get<std::string>() == "-6");
  CHECK(j["J"]["slice_residual_zero"].get<bool>());
  CHECK(j["J"]["jet_match"].get<bool>());

  auto up = cli({"hessian", "--mode", "0,2", "--json"});
  REQUIRE(up.code == 0);
  Json ju = Json::parse(up.out);
  CHECK(ju["J"]["raw"].get<std::string>() == "32 * pi^2");
  CHECK(ju["J"]["reduced"].get<std::string>() == "32/3 * pi^2");
  CHECK_FALSE(ju["J"]["slice_residual_zero"].get<bool>());
}

TEST_CASE("scan emits the frozen reference rows") {
  auto r = cli({"scan", "--max-degree", "2", "--csv"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("p,q,kind,closed_form,sign,quad_form,jet_match") == 0);
  CHECK(r.out.find("1,1,theta,36,1,512 * pi^2,true") != std::string::npos);
  CHECK(r.out.find("2,0,J,-6,-1,-32 * pi^2,true") != std::string::npos);
  CHECK(r.out.find("0,2,J,2,1,32 * pi^2,true") != std::string::npos);
  CHECK(r.out.find("1,0,theta,-21/4,-1,0,true") != std::string::npos);
}

TEST_CASE("scan output is byte-identical across thread counts") {
  auto set_threads = [](const char* v) { setenv("WEBSTERLAB_THREADS", v, 1); };
  set_threads("1");
  auto one = cli({"scan", "--max-degree", "2", "--csv"});
  set_threads("4");
  auto four = cli({"scan", "--max-degree", "2", "--csv"});
  unsetenv("WEBSTERLAB_THREADS");
  REQUIRE(one.code == 0);
  REQUIRE(four.code == 0);
  CHECK(one.out == four.out);

  auto again = cli({"scan", "--max-degree", "2", "--csv"});
  CHECK(again.out == one.out);
}

TEST_CASE("jet-check verifies the variational identities") {
  auto r = cli({"jet-check", "--mode", "1,1"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("first_variation_theta == jet eps^1: ok") != std::string::npos);
  CHECK(r.out.find("hess_theta == 2 x jet eps^2: ok") != std::string::npos);
  CHECK(r.out.find("hess_J_raw == 2 x jet eps^2: ok") != std::string::npos);
  CHECK(r.out.find("hess_mixed == jet eps1 eps2: ok") != std::string::npos);
  CHECK(r.out.find("MISMATCH") == std::string::npos);

  auto rossi = cli({"jet-check", "--model", "rossi", "--s", "3/4", "--mode", "2,0"});
  CHECK(rossi.code == 0);
}

TEST_CASE("catalog lists the homogeneous models") {
  auto r = cli({"catalog", "--csv"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("name,params,R,A11,density,checks_passed") == 0);
  CHECK(r.out.find("e2,,1/2,1/2 i,0,true") != std::string::npos);
  CHECK(r.out.find("sl2r,1,-1,0,1,true") != std::string::npos);
  CHECK(r.out.find("sl2r,1/4,-41/20,9/20 i,4,true") != std::string::npos);
  CHECK(r.out.find("rossi,3/4,17/8,-15/8 i,1,true") != std::string::npos);

  auto j = cli({"catalog", "--json"});
  REQUIRE(j.code == 0);
  Json arr = Json::parse(j.out);
  REQUIRE(arr.is_array());
  CHECK(arr.size() == 6);
  CHECK(arr[0]["name"].get<std::string>() == "standard");
  CHECK(arr[0]["checks_passed"].get<bool>());
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({"derive", "--model", "rossi"}).code == 2);  // missing --s
  CHECK(cli({"first-variation", "--kind", "sideways"}).code == 2);
  CHECK(cli({}).code == 2);
}

TEST_CASE("help is a successful run") {
  auto r = cli({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("derive") != std::string::npos);
  CHECK(r.out.find("catalog") != std::string::npos);
}
