#include "numrad/spaces.hpp"

#include <doctest.h>

#include <cmath>

using namespace numrad;

namespace {

Vec cv(std::initializer_list<double> xs) {
  Vec v(static_cast<int>(xs.size()));
  int i = 0;
  for (double x : xs) v[i++] = x;
  return v;
}

RVec rv(std::initializer_list<double> xs) {
  RVec v(static_cast<int>(xs.size()));
  int i = 0;
  for (double x : xs) v[i++] = x;
  return v;
}

NormedSpace hexagon() {
  std::vector<RVec> verts = {rv({1, 0}),  rv({1, 1}),   rv({0, 1}),
                             rv({-1, 0}), rv({-1, -1}), rv({0, -1})};
  std::vector<RVec> facets = {rv({1, 0}),  rv({0, 1}),  rv({-1, 1}),
                              rv({-1, 0}), rv({0, -1}), rv({1, -1})};
  return NormedSpace::polyhedral(verts, facets);
}

// Brute-force sup over sampled members of D; a discretization oracle for
// duality_sup_abs on small spaces.
double brute_sup_abs(const DualitySet& D, const Vec& v, int steps = 8) {
  double best = 0.0;
  for (const Vec& f : D.sample_members(steps)) {
    best = std::max(best, std::abs(f.cwiseProduct(v).sum()));
  }
  return best;
}

}  // namespace

TEST_CASE("norm examples per kind") {
  CHECK(NormedSpace::pnorm(3, INFINITY).norm(cv({1, -2, 0.5})) == doctest::Approx(2.0));
  CHECK(NormedSpace::pnorm(2, 1.0).norm(cv({3, -4})) == doctest::Approx(7.0));
  CHECK(NormedSpace::pnorm(2, 2.0).norm(cv({3, 4})) == doctest::Approx(5.0));
}

TEST_CASE("norm axioms sampled") {
  auto spaces = {NormedSpace::pnorm(3, 1.0), NormedSpace::pnorm(3, 2.0),
                 NormedSpace::pnorm(3, INFINITY), NormedSpace::pnorm(3, 1.5),
                 NormedSpace::pnorm(2, 2.0, Field::Complex),
                 NormedSpace::sum(NormedSpace::pnorm(2, 2.0), NormedSpace::pnorm(1, 1.0),
                                  SumKind::Linf),
                 hexagon()};
  for (const NormedSpace& sp : spaces) {
    Rng rng(7);
    for (int i = 0; i < 50; ++i) {
      Vec x = rng.gaussian_vec(sp.dim(), sp.field());
      Vec y = rng.gaussian_vec(sp.dim(), sp.field());
      double lam = rng.uniform(-3.0, 3.0);
      CHECK(sp.norm(Vec(lam * x)) ==
            doctest::Approx(std::abs(lam) * sp.norm(x)).epsilon(1e-9));
      CHECK(sp.norm(Vec(x + y)) <= sp.norm(x) + sp.norm(y) + 1e-9);
    }
  }
}

TEST_CASE("dual norm examples") {
  CHECK(NormedSpace::pnorm(2, 1.0).dual_norm(cv({3, -3})) == doctest::Approx(3.0));
  CHECK(NormedSpace::pnorm(2, INFINITY).dual_norm(cv({1, 1})) == doctest::Approx(2.0));
  CHECK(NormedSpace::pnorm(2, 2.0).dual_norm(cv({3, 4})) == doctest::Approx(5.0));
}

TEST_CASE("dimension mismatch raises input error") {
  CHECK_THROWS_AS(NormedSpace::pnorm(3, 2.0).norm(cv({1, 2})), InputError);
  CHECK_THROWS_AS(NormedSpace::pnorm(3, 2.0).dual_norm(cv({1, 2})), InputError);
}

TEST_CASE("duality set examples") {
  SUBCASE("linf unique attaining coordinate") {
    auto D = NormedSpace::pnorm(2, INFINITY).duality_set(cv({2, 1}));
    CHECK(D.scale() == doctest::Approx(2.0));
    Vec f = D.argmax_functional(cv({1, 0}));
    CHECK(std::abs(f[0] - Complex(2, 0)) < 1e-12);
    CHECK(std::abs(f[1]) < 1e-12);
  }
  SUBCASE("l1 forced signs") {
    auto D = NormedSpace::pnorm(2, 1.0).duality_set(cv({1, -2}));
    Vec f = D.argmax_functional(cv({1, 0}));
    CHECK(std::abs(f[0] - Complex(3, 0)) < 1e-12);
    CHECK(std::abs(f[1] - Complex(-3, 0)) < 1e-12);
  }
  SUBCASE("l2 self dual") {
    auto D = NormedSpace::pnorm(2, 2.0).duality_set(cv({3, 4}));
    Vec f = D.argmax_functional(cv({3, 4}));
    CHECK(std::abs(f[0] - Complex(3, 0)) < 1e-9);
    CHECK(std::abs(f[1] - Complex(4, 0)) < 1e-9);
  }
  SUBCASE("D(0) is rejected") {
    CHECK_THROWS_AS(NormedSpace::pnorm(2, 2.0).duality_set(cv({0, 0})), DomainError);
  }
}

TEST_CASE("duality_sup_abs examples") {
  auto linf2 = NormedSpace::pnorm(2, INFINITY);
  CHECK(linf2.duality_set(cv({1, 1})).sup_abs(cv({1, -1})) == doctest::Approx(1.0));
  auto l12 = NormedSpace::pnorm(2, 1.0);
  CHECK(l12.duality_set(cv({1, 0})).sup_abs(cv({0, 2})) == doctest::Approx(2.0));
  CHECK(l12.duality_set(cv({1, -2})).sup_abs(cv({1, 1})) == doctest::Approx(0.0));
}

TEST_CASE("duality set membership invariants") {
  auto spaces = {NormedSpace::pnorm(3, 1.0), NormedSpace::pnorm(3, INFINITY),
                 NormedSpace::pnorm(3, 2.0), NormedSpace::pnorm(2, 1.7),
                 NormedSpace::pnorm(2, 1.0, Field::Complex),
                 NormedSpace::pnorm(2, 2.0, Field::Complex),
                 NormedSpace::pnorm(2, INFINITY, Field::Complex), hexagon(),
                 NormedSpace::sum(NormedSpace::pnorm(2, 2.0), NormedSpace::pnorm(1, 1.0),
                                  SumKind::L1),
                 NormedSpace::sum(NormedSpace::pnorm(2, 1.0), NormedSpace::pnorm(1, 1.0),
                                  SumKind::Linf)};
  for (const NormedSpace& sp : spaces) {
    for (const Vec& x : sp.sample_sphere(25, 11)) {
      double nx = sp.norm(x);
      DualitySet D = sp.duality_set(x);
      for (const Vec& f : D.sample_members(2)) {
        Complex fx = f.cwiseProduct(x).sum();
        CHECK(std::abs(fx - Complex(nx * nx, 0)) < 1e-9);
        CHECK(sp.dual_norm(f) == doctest::Approx(nx).epsilon(1e-9));
      }
      // |f(v)| <= ||f||_* ||v||, equality when v = x
      for (const Vec& v : sp.sample_sphere(5, 23)) {
        double sup = D.sup_abs(v);
        CHECK(sup <= nx * sp.norm(v) + 1e-9);
        Vec fmax = D.argmax_functional(v);
        CHECK(std::abs(fmax.cwiseProduct(v).sum()) == doctest::Approx(sup).epsilon(1e-9));
        CHECK(sp.dual_norm(fmax) <= nx * (1 + 1e-9));
      }
      CHECK(D.sup_abs(x) == doctest::Approx(nx * nx).epsilon(1e-9));
    }
  }
}

TEST_CASE("duality_sup_abs matches brute force on dim <= 3") {
  auto spaces = {NormedSpace::pnorm(3, 1.0), NormedSpace::pnorm(3, INFINITY),
                 NormedSpace::pnorm(2, 2.0), hexagon(),
                 NormedSpace::sum(NormedSpace::pnorm(1, 1.0), NormedSpace::pnorm(2, 1.0),
                                  SumKind::L1)};
  for (const NormedSpace& sp : spaces) {
    for (const Vec& x : sp.sample_sphere(12, 5)) {
      DualitySet D = sp.duality_set(x);
      for (const Vec& v : sp.sample_sphere(6, 29)) {
        double sup = D.sup_abs(v);
        double brute = brute_sup_abs(D, v);
        CHECK(brute <= sup + 1e-12);
        CHECK(sup <= brute + 1e-6);
      }
    }
  }
}

TEST_CASE("ball extreme points") {
  SUBCASE("l1") {
    auto pts = NormedSpace::pnorm(2, 1.0).ball_extreme_points();
    CHECK(pts.size() == 4);
  }
  SUBCASE("linf") {
    auto pts = NormedSpace::pnorm(2, INFINITY).ball_extreme_points();
    CHECK(pts.size() == 4);
    for (const Vec& p : pts) CHECK(NormedSpace::pnorm(2, INFINITY).norm(p) == doctest::Approx(1.0));
  }
  SUBCASE("R sum_1 R equals l1^2") {
    auto sum = NormedSpace::sum(NormedSpace::pnorm(1, 2.0), NormedSpace::pnorm(1, 2.0),
                                SumKind::L1);
    auto pts = sum.ball_extreme_points();
    CHECK(pts.size() == 4);
    for (const Vec& p : pts) CHECK(p.cwiseAbs().sum() == doctest::Approx(1.0));
  }
  SUBCASE("smooth kinds are unsupported") {
    CHECK_THROWS_AS(NormedSpace::pnorm(2, 2.0).ball_extreme_points(), UnsupportedKindError);
    CHECK_THROWS_AS(NormedSpace::pnorm(2, 1.0, Field::Complex).ball_extreme_points(),
                    UnsupportedKindError);
  }
}

TEST_CASE("sphere sampling contract") {
  auto l12 = NormedSpace::pnorm(2, 1.0);
  auto pts = l12.sample_sphere(1000, 3);
  for (const Vec& p : pts) CHECK(std::abs(l12.norm(p) - 1.0) <= 1e-12);

  auto linf3 = NormedSpace::pnorm(3, INFINITY);
  auto a = linf3.sample_sphere(10, 1);
  auto b = linf3.sample_sphere(10, 1);
  for (int i = 0; i < 10; ++i) CHECK((a[i] - b[i]).cwiseAbs().maxCoeff() == 0.0);
  auto c = linf3.sample_sphere(10, 2);
  bool same = true;
  for (int i = 0; i < 10; ++i) same = same && (a[i] - c[i]).cwiseAbs().maxCoeff() == 0.0;
  CHECK_FALSE(same);
}

TEST_CASE("polyhedral bipolar consistency") {
  NormedSpace hex = hexagon();
  for (const RVec& v : hex.ball_vertices()) CHECK(std::abs(hex.norm(to_cvec(v)) - 1.0) <= 1e-12);
  for (const RVec& f : hex.facet_functionals())
    CHECK(std::abs(hex.dual_norm(to_cvec(f)) - 1.0) <= 1e-12);
}

TEST_CASE("polyhedral validation failures") {
  std::vector<RVec> verts = {rv({1, 0}), rv({0, 1})};  // not symmetric
  std::vector<RVec> facets = {rv({1, 0}), rv({-1, 0}), rv({0, 1}), rv({0, -1})};
  CHECK_THROWS_AS(NormedSpace::polyhedral(verts, facets), InputError);

  std::vector<RVec> verts2 = {rv({2, 0}), rv({-2, 0}), rv({0, 1}), rv({0, -1})};
  CHECK_THROWS_AS(NormedSpace::polyhedral(verts2, facets), InputError);
}

TEST_CASE("sum norm equals component formula") {
  auto X = NormedSpace::pnorm(2, 2.0);
  auto Y = NormedSpace::pnorm(2, 1.0);
  auto Z1 = NormedSpace::sum(X, Y, SumKind::L1);
  auto Zi = NormedSpace::sum(X, Y, SumKind::Linf);
  CHECK(Z1.dim() == 4);
  Rng rng(3);
  for (int i = 0; i < 30; ++i) {
    Vec z = rng.gaussian_vec(4, Field::Real);
    double nx = X.norm(Vec(z.head(2))), ny = Y.norm(Vec(z.tail(2)));
    CHECK(Z1.norm(z) == nx + ny);
    CHECK(Zi.norm(z) == std::max(nx, ny));
  }
}

TEST_CASE("stable norm_minus_one agrees with the direct formula at moderate t") {
  auto spaces = {NormedSpace::pnorm(3, 1.0), NormedSpace::pnorm(3, INFINITY),
                 NormedSpace::pnorm(3, 2.0), hexagon(),
                 NormedSpace::sum(NormedSpace::pnorm(2, 2.0), NormedSpace::pnorm(1, 1.0),
                                  SumKind::Linf)};
  for (const NormedSpace& sp : spaces) {
    Rng rng(19);
    for (const Vec& base : sp.sample_sphere(8, 101)) {
      Vec pert = rng.gaussian_vec(sp.dim(), sp.field());
      double t = 1e-4;
      double direct = sp.norm(Vec(base + t * pert)) - 1.0;
      double stable = sp.norm_minus_one(base, pert, t);
      CHECK(stable == doctest::Approx(direct).epsilon(1e-8));
    }
  }
}

TEST_CASE("space spec parser") {
  CHECK(parse_space("l2:3").dim() == 3);
  CHECK(parse_space("l2:3").p() == 2.0);
  CHECK(parse_space("cl2:2").field() == Field::Complex);
  CHECK(parse_space("linf:4").p() == std::numeric_limits<double>::infinity());
  CHECK(parse_space("lp:1.5:3").p() == doctest::Approx(1.5));
  auto s = parse_space("sum:linf(l2:2,l1:2)");
  CHECK(s.kind() == SpaceKind::Sum);
  CHECK(s.sum_kind() == SumKind::Linf);
  CHECK(s.dim() == 4);
  CHECK(s.spec_string() == "sum:linf(l2:2,l1:2)");

  auto expect_fail = [](const std::string& spec) {
    try {
      parse_space(spec);
      FAIL_CHECK("expected parse failure for " << spec);
    } catch (const InputError& e) {
      CHECK(std::string(e.what()).find("position") != std::string::npos);
    }
  };
  expect_fail("l2:nope");
  expect_fail("l3:2");
  expect_fail("sum:linf(l2:2");
  expect_fail("l2:2trailing");
}
