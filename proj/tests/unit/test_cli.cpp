#include <json.hpp>
#include <sstream>

#include "doctest.h"
#include "heun/coeff.hpp"
#include "heun/poly.hpp"
#include "heun_cli/cli.hpp"

using namespace heun;
using json = nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  json j() const { return json::parse(out); }
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str()};
}

std::vector<std::string> strings(const EPolynomial& p) {
  std::vector<std::string> v;
  for (const auto& c : p.coeffs()) v.push_back(c.to_string());
  return v;
}

}  // namespace

TEST_CASE("spectral 2,0,0,0") {
  const auto r = call({"spectral", "--l", "2,0,0,0"});
  REQUIRE(r.code == cli::ok);
  const json j = r.j();
  CHECK(j["schema"] == 1);
  CHECK(j["g"] == 2);
  const CoeffScalar e1 = CoeffScalar::e1(), e2 = CoeffScalar::e2(), e3 = CoeffScalar::e3();
  const CoeffScalar g2 = CoeffScalar(-4) * (e1 * e2 + e2 * e3 + e3 * e1);
  const EPolynomial E = EPolynomial::x();
  const EPolynomial Q = (E * E - EPolynomial(CoeffScalar(3) * g2)) * (E - EPolynomial(CoeffScalar(3) * e1)) *
                        (E - EPolynomial(CoeffScalar(3) * e2)) * (E - EPolynomial(CoeffScalar(3) * e3));
  CHECK(j["Q"].get<std::vector<std::string>>() == strings(Q));
  CHECK(j["P"] == j["Q"]);
  for (const auto& [k, v] : j["checks"].items()) {
    CAPTURE(k);
    CHECK(v == true);
  }
  CHECK(j["a_squared_plus_sign"] == false);
}

TEST_CASE("spectral 0,0,0,0") {
  const json j = call({"spectral", "--l", "0,0,0,0"}).j();
  CHECK(j["g"] == 0);
  CHECK(j["P"] == json({"0", "1"}));
  CHECK(j["A"] == "[(1)] D");
}

TEST_CASE("partners 2,0,0,0") {
  const auto r = call({"partners", "--l", "2,0,0,0"});
  REQUIRE(r.code == cli::ok);
  bool found = false;
  const json j = r.j();
  for (const auto& m : j["members"]) {
    CHECK(m["verified"] == true);
    found = found || (m["member"] == json({1, 1, 1, 0}) && m["witness"] == json({-2, 1, 1, 0}));
  }
  CHECK(found);
}

TEST_CASE("darboux and spaces") {
  auto r = call({"darboux", "--l", "2,0,0,0", "--alpha", "-2,1,1,0"});
  CHECK(r.code == cli::ok);
  CHECK(r.j()["checks"]["intertwine"] == true);
  r = call({"spaces", "--l", "1,1,1,0"});
  CHECK(r.code == cli::ok);
  CHECK(r.j()["genus"] == 2);
  CHECK(r.j()["dim_V"] == 5);
  r = call({"spaces", "--n", "2,1,1,0", "--checks", "fast"});
  CHECK(r.code == cli::ok);
  CHECK(r.j()["spaces"].size() == 8);
}

TEST_CASE("generic and the degenerate nome") {
  CHECK(call({"generic", "--l", "2,0,0,0", "--seed", "11"}).code == cli::ok);
  const auto r = call({"generic", "--l", "2,0,0,0", "--p", "0"});
  CHECK(r.code == cli::check_failed);
  CHECK(r.j()["reports"][0]["distinct"] == false);
}

TEST_CASE("errors carry codes") {
  auto r = call({"spectral", "--l", "1/2,0,0,0"});
  CHECK(r.code == cli::library_error);
  CHECK(r.j()["error"]["code"] == "mixed_parity");
  r = call({"darboux", "--alpha", "-1,0,0,0"});
  CHECK(r.j()["error"]["code"] == "invalid_tuple");
  r = call({"spectral", "--l", "9,0,0,0"});
  CHECK(r.j()["error"]["code"] == "work_limit");
  CHECK(call({"spectral", "--l", "1,0,0,0", "--format", "yaml"}).code == cli::usage);
  CHECK(call({}).code == cli::usage);
}

TEST_CASE("output is deterministic") {
  for (std::vector<std::string> args : {std::vector<std::string>{"spectral", "--l", "2,1,0,0"},
                                        std::vector<std::string>{"generic", "--l", "2,1,1,0", "--seed", "5"},
                                        std::vector<std::string>{"partners", "--l", "3,1,0,0", "--format", "text"}})
    CHECK(call(args).out == call(args).out);
}
