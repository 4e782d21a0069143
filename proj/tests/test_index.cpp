#include "numrad/index.hpp"

#include <doctest.h>

#include <cmath>

using namespace numrad;

TEST_CASE("estimate_index hits the documented values") {
  SUBCASE("real euclidean plane: zero") {
    auto est = estimate_index(parse_space("l2:2"), Mode::Linear, 400, 7);
    CHECK(est.upper <= 5e-3);
  }
  SUBCASE("complex euclidean plane: one half") {
    auto est = estimate_index(parse_space("cl2:2"), Mode::Linear, 400, 7);
    CHECK(est.upper == doctest::Approx(0.5).epsilon(5e-3));
  }
  SUBCASE("sup-norm plane: one") {
    auto est = estimate_index(parse_space("linf:2"), Mode::Linear, 200, 7);
    CHECK(est.upper >= 1.0 - 5e-3);
    CHECK(est.upper <= 1.0 + 1e-9);
  }
  SUBCASE("lipschitz pool dominates the linear pool") {
    auto lin = estimate_index(parse_space("linf:2"), Mode::Linear, 150, 3);
    auto lip = estimate_index(parse_space("linf:2"), Mode::Lipschitz, 150, 3);
    CHECK(lip.upper <= lin.upper + 1e-9);
  }
}

TEST_CASE("witness reproduces its reported value") {
  for (const char* spec : {"l2:2", "cl2:2", "linf:3", "l1:2"}) {
    auto est = estimate_index(parse_space(spec), Mode::Linear, 120, 11);
    double re = reevaluate_witness(parse_space(spec), est.witness);
    CHECK(re == doctest::Approx(est.upper).epsilon(1e-6));
  }
  auto est = estimate_index(parse_space("linf:2"), Mode::Lipschitz, 150, 13);
  double re = reevaluate_witness(parse_space("linf:2"), est.witness);
  CHECK(re == doctest::Approx(est.upper).epsilon(1e-6));
}

TEST_CASE("estimate bounds stay in the documented ranges") {
  for (const char* spec : {"l2:2", "l1:2", "linf:3"}) {
    auto est = estimate_index(parse_space(spec), Mode::Linear, 100, 5);
    CHECK(est.upper >= -1e-12);
    CHECK(est.upper <= 1.0 + 1e-9);
  }
  auto est = estimate_index(parse_space("cl2:2"), Mode::Linear, 100, 5);
  CHECK(est.upper >= 1.0 / std::exp(1.0) - 1e-6);
}

TEST_CASE("bk suite passes on small complex spaces") {
  for (const char* spec : {"cl2:2", "cl1:2"}) {
    auto rep = bk_suite(parse_space(spec), 40, 1);
    CHECK(rep.cases.size() >= 30);
    CHECK_FALSE(rep.any_failed());
    for (const auto& c : rep.cases) CHECK(c.status == "pass");
  }
}

TEST_CASE("bk suite report format") {
  auto rep = bk_suite(parse_space("cl2:2"), 5, 2);
  json j = rep.to_json();
  CHECK(j["suite"] == "bk");
  CHECK(j["cases"].size() == rep.cases.size());
  for (const auto& c : j["cases"]) {
    CHECK(c.contains("name"));
    CHECK(c.contains("status"));
    CHECK(c.contains("value"));
    CHECK(c.contains("expected"));
    CHECK(c.contains("tol"));
    CHECK(c.contains("witness"));
  }
  std::string csv = rep.to_csv();
  CHECK(csv.find("suite,seed,name,status") == 0);
  CHECK_THROWS_AS(bk_suite(parse_space("l2:2"), 5, 2), InputError);
}

TEST_CASE("rnp equality suite") {
  for (const char* spec : {"l2:2", "linf:3"}) {
    auto rep = rnp_equality_suite(parse_space(spec), 150, 3);
    CHECK_FALSE(rep.any_failed());
  }
}

TEST_CASE("sum stability suite") {
  SUBCASE("R sum R under l1 is the l1 plane") {
    auto rep = sum_stability_suite(NormedSpace::pnorm(1, 2.0), NormedSpace::pnorm(1, 2.0),
                                   SumKind::L1, 200, 5);
    CHECK_FALSE(rep.any_failed());
    REQUIRE(!rep.cases.empty());
    CHECK(rep.cases[0].value == doctest::Approx(1.0).epsilon(2e-2));
  }
  SUBCASE("euclidean plane sum R under linf vanishes") {
    auto rep = sum_stability_suite(parse_space("l2:2"), NormedSpace::pnorm(1, 2.0),
                                   SumKind::Linf, 250, 5);
    CHECK_FALSE(rep.any_failed());
    REQUIRE(!rep.cases.empty());
    CHECK(rep.cases[0].value <= 2e-2);
  }
}

TEST_CASE("known values suite") {
  auto rep = known_values_suite(3);
  CHECK_FALSE(rep.any_failed());
  CHECK(rep.cases.size() == 8);
}

TEST_CASE("ck suite") {
  auto rep = ck_suite(3, 20, 1e-2, 5);
  CHECK(static_cast<int>(rep.cases.size()) == 20);
  CHECK_FALSE(rep.any_failed());
}
