#include "doctest.h"

#include "cli.hpp"
#include "json.hpp"

#include <sstream>

namespace {

struct Result {
  int code;
  std::string out, err;
  nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = marf::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("liftable") {
  auto r = call({"liftable", "-g", "0", "-p", "5,5,5", "-m", "2"});
  CHECK(r.code == 0);
  CHECK(r.json()["liftable"] == true);
  CHECK_FALSE(r.json().contains("reason"));

  r = call({"liftable", "-g", "0", "-p", "2,3,7", "-m", "2"});
  CHECK(r.code == 1);
  CHECK(r.json()["liftable"] == false);
  CHECK(r.json()["reason"] == "gcd");

  r = call({"liftable", "-g", "2", "-m", "3"});
  CHECK(r.json()["reason"] == "congruence");

  CHECK(call({"liftable", "-g", "2", "-m", "1"}).json()["liftable"] == true);
}

TEST_CASE("components") {
  auto r = call({"components", "-g", "2", "-m", "2", "--brute-force"});
  CHECK(r.code == 0);
  auto comps = r.json()["components"];
  REQUIRE(comps.size() == 2);
  CHECK(comps[0]["orbit_size"] == 10);
  CHECK(comps[1]["orbit_size"] == 6);
  CHECK(comps[0]["teich_dimension"] == 6);

  r = call({"components", "-g", "1", "-p", "5", "-m", "4", "--brute-force"});
  std::vector<int> sizes;
  const auto j = r.json();
  for (const auto& c : j["components"]) sizes.push_back(c["orbit_size"].get<int>());
  CHECK(sizes == std::vector<int>{1, 3, 12});

  r = call({"components", "-g", "0", "-p", "2,3,7", "-m", "2"});
  CHECK(r.code == 1);
  CHECK(r.json()["components"].empty());

  r = call({"components", "-g", "0", "-p", "5,5,5", "-m", "2", "--table"});
  CHECK(r.code == 0);
  CHECK(r.out.find("teich_dimension") != std::string::npos);
}

TEST_CASE("orbits and counts") {
  auto r = call({"orbits", "-g", "1", "-p", "5", "-m", "2"});
  CHECK(r.code == 0);
  auto o = r.json()["orbits"];
  REQUIRE(o.size() == 2);
  CHECK(o[0]["delta"] == 2);
  CHECK(o[0]["size"] == 1);
  CHECK(o[1]["size"] == 3);

  r = call({"arf-count", "-g", "2", "-m", "2"});
  CHECK(r.json()["count"] == 16);
  CHECK(call({"arf-count", "-g", "0", "-p", "2,3,7", "-m", "2"}).code == 1);
}

TEST_CASE("normalize") {
  auto r = call({"normalize", "-g", "1", "-p", "5", "-m", "4", "--alpha", "0", "--beta", "2"});
  CHECK(r.code == 0);
  CHECK(r.json()["normal_form"] == std::vector<int>{2, 0});
  CHECK(r.json()["delta"] == 2);

  r = call({"normalize", "-g", "1", "-p", "5", "-m", "4", "--alpha", "2", "--beta", "0"});
  CHECK(r.json()["twist_word"].empty());

  r = call({"normalize", "-g", "4", "-m", "3", "--alpha", "1,2,0,1", "--beta", "0,0,2,1", "--budget", "10"});
  CHECK(r.code == 2);
  CHECK(r.err.find("BudgetExceeded") != std::string::npos);
}

TEST_CASE("verify-numeric") {
  auto r = call({"verify-numeric", "-g", "1", "-p", "5", "-m", "4"});
  CHECK(r.code == 0);
  CHECK(r.json()["allPassed"] == true);
  CHECK(r.json()["relationResidual"].get<double>() < 1e-6);

  r = call({"verify-numeric", "-g", "0", "-p", "5,5,5", "-m", "2"});
  CHECK(r.json()["canonicalProductLevel"] == 1);

  r = call({"verify-numeric", "-g", "0", "-p", "2,2,3,3", "-m", "1"});
  CHECK(r.code == 2);
  CHECK(r.err.find("Unsupported") != std::string::npos);
}

TEST_CASE("argument errors") {
  CHECK(call({"liftable", "-p", "5"}).code == 2);
  CHECK(call({}).code == 2);
  CHECK(call({"liftable", "-g", "0", "-p", "2,3,5", "-m", "2"}).code == 2);
}
