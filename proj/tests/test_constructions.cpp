#include "numrad/constructions.hpp"

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

RMat rm(int rows, int cols, std::initializer_list<double> xs) {
  RMat m(rows, cols);
  int i = 0;
  for (double x : xs) {
    m(i / cols, i % cols) = x;
    ++i;
  }
  return m;
}

const NormedSpace l2r = NormedSpace::pnorm(2, 2.0);
const NormedSpace linf2 = NormedSpace::pnorm(2, INFINITY);
const NormedSpace l1r2 = NormedSpace::pnorm(2, 1.0);

PwlOperator abs_on_R() {
  NormedSpace R1 = NormedSpace::pnorm(1, 2.0);
  Cell neg{rm(1, 1, {1}), RVec::Zero(1), rm(1, 1, {-1}), RVec::Zero(1)};
  Cell pos{rm(1, 1, {-1}), RVec::Zero(1), rm(1, 1, {1}), RVec::Zero(1)};
  return PwlOperator(R1, {neg, pos}, 4.0);
}

PwlOperator const_mult_on_R(double c) {
  NormedSpace R1 = NormedSpace::pnorm(1, 2.0);
  Cell all{RMat(0, 1), RVec(0), rm(1, 1, {c}), RVec::Zero(1)};
  return PwlOperator(R1, {all}, 4.0);
}

}  // namespace

TEST_CASE("mcshane extension") {
  Vec x1 = cv({0, 0}), x2 = cv({1, 0});
  auto f = mcshane_extend(x1, x2, l2r);
  SUBCASE("restriction to the segment is exact") {
    for (double t : {0.0, 0.25, 0.5, 0.9, 1.0}) {
      Vec p = x1 + t * (x2 - x1);
      CHECK(f(p)[0].real() == doctest::Approx(t).epsilon(1e-9));
    }
    CHECK(f(x1)[0].real() == 0.0);  // exact at the base point
  }
  SUBCASE("beyond the segment") { CHECK(f(cv({2, 0}))[0].real() == doctest::Approx(2.0)); }
  SUBCASE("one-lipschitz on sampled pairs") {
    Rng rng(3);
    for (int i = 0; i < 500; ++i) {
      Vec a = rng.gaussian_vec(2, Field::Real), b = rng.gaussian_vec(2, Field::Real);
      double nd = l2r.norm(Vec(a - b));
      if (nd < 1e-10) continue;
      CHECK(std::abs(f(a)[0].real() - f(b)[0].real()) <= nd * (1 + 1e-9));
    }
  }
}

TEST_CASE("segment extension") {
  Vec x1 = cv({0, 0}), x2 = cv({1, 0});
  Vec y1 = cv({0, 0}), y2 = cv({0, 1});
  auto F = segment_extension(x1, x2, y1, y2, 1.0, l2r, l2r);
  SUBCASE("interpolates the endpoints") {
    CHECK((F(x1) - y1).cwiseAbs().maxCoeff() == 0.0);
    CHECK((F(x2) - y2).cwiseAbs().maxCoeff() <= 1e-12);
  }
  SUBCASE("clamps beyond the far endpoint") {
    CHECK((F(cv({2, 0})) - y2).cwiseAbs().maxCoeff() <= 1e-12);
  }
  SUBCASE("M-lipschitz on sampled pairs") {
    Rng rng(7);
    for (int i = 0; i < 1000; ++i) {
      Vec a = 2.0 * rng.gaussian_vec(2, Field::Real), b = 2.0 * rng.gaussian_vec(2, Field::Real);
      double nd = l2r.norm(Vec(a - b));
      if (nd < 1e-10) continue;
      CHECK(l2r.norm(Vec(F(a) - F(b))) <= nd * (1 + 1e-9));
    }
  }
  SUBCASE("hypothesis violation is rejected") {
    CHECK_THROWS_AS(segment_extension(x1, x2, y1, cv({0, 3}), 1.0, l2r, l2r), InputError);
  }
}

TEST_CASE("midpoint join") {
  SUBCASE("sup-norm metric midpoint through the sphere") {
    Vec x = cv({1, 1}), y = cv({-1, -1});
    auto mj = midpoint_join(x, y, SetDescriptor::sphere(), 1e-9, linf2);
    REQUIRE(mj.has_value());
    CHECK(linf2.norm(mj->z) <= 1e-12);
    CHECK(linf2.norm(Vec(mj->z - y)) == doctest::Approx(1.0));
    CHECK(linf2.norm(Vec(mj->z - x)) == doctest::Approx(1.0));
  }
  SUBCASE("sphere case always bisects exactly") {
    Rng rng(5);
    for (const auto& sp : {l2r, linf2, l1r2}) {
      for (int i = 0; i < 20; ++i) {
        Vec x = rng.gaussian_vec(2, Field::Real), y = rng.gaussian_vec(2, Field::Real);
        if (sp.norm(Vec(x - y)) < 1e-6) continue;
        auto mj = midpoint_join(x, y, SetDescriptor::sphere(), 1e-9, sp);
        REQUIRE(mj.has_value());
        double half = sp.norm(Vec(x - y)) / 2;
        CHECK(sp.norm(Vec(mj->z - x)) == doctest::Approx(half).epsilon(1e-9));
        CHECK(sp.norm(Vec(mj->z - y)) == doctest::Approx(half).epsilon(1e-9));
        CHECK(mj->decomposition_dist <= 1e-12);
      }
    }
  }
  SUBCASE("vertex list on the sup-norm square") {
    std::vector<Vec> verts = {cv({1, 1}), cv({1, -1}), cv({-1, 1}), cv({-1, -1})};
    Vec x = cv({0.7, 0.1}), y = cv({-0.3, 0.1});
    // z0 = (1, 0) = midpoint of (1,1) and (1,-1)
    auto mj = midpoint_join(x, y, SetDescriptor::vertex_list(verts), 1e-6, linf2);
    REQUIRE(mj.has_value());
    CHECK(mj->decomposition_dist <= 1e-9);
    double half = linf2.norm(Vec(x - y)) / 2;
    CHECK(linf2.norm(Vec(mj->z - y)) <= (1 + 1e-6) * half + 1e-9);
  }
  SUBCASE("sphere cross ball splits the gap into the X component") {
    NormedSpace Z = NormedSpace::sum(l2r, NormedSpace::pnorm(1, 2.0), SumKind::Linf);
    Rng rng(9);
    for (int i = 0; i < 10; ++i) {
      Vec x = rng.gaussian_vec(3, Field::Real), y = rng.gaussian_vec(3, Field::Real);
      if (Z.norm(Vec(x - y)) < 1e-6) continue;
      auto mj = midpoint_join(x, y, SetDescriptor::sphere_cross_ball(2), 1e-9, Z);
      REQUIRE(mj.has_value());
      double half = Z.norm(Vec(x - y)) / 2;
      CHECK(Z.norm(Vec(mj->z - x)) == doctest::Approx(half).epsilon(1e-9));
      CHECK(Z.norm(Vec(mj->z - y)) == doctest::Approx(half).epsilon(1e-9));
      // the x-to-z gap is carried by the X component
      CHECK(l2r.norm(Vec((x - mj->z).head(2))) == doctest::Approx(half).epsilon(1e-9));
    }
  }
}

TEST_CASE("lush witness") {
  SUBCASE("sup-norm: x already in the slice") {
    auto w = lush_witness(linf2, cv({1, -1}), cv({1, 1}), 0.1, 100, 1);
    REQUIRE(w.has_value());
    CHECK(w->achieved_distance <= 1e-12);
    CHECK(w->ystar[0] == Complex(1, 0));
    CHECK(std::abs(w->ystar[1]) == 0.0);
  }
  SUBCASE("sup-norm: negative member via alpha = -1") {
    auto w = lush_witness(linf2, cv({-1, 0.5}), cv({1, 1}), 0.1, 100, 1);
    REQUIRE(w.has_value());
    CHECK(w->achieved_distance <= 1e-12);
    CHECK(w->lambda == doctest::Approx(0.0));
    CHECK(w->alpha2.real() == doctest::Approx(-1.0));
  }
  SUBCASE("complex sup-norm: exact witness with unit scalars") {
    NormedSpace clinf = NormedSpace::pnorm(2, INFINITY, Field::Complex);
    Rng rng(11);
    for (int i = 0; i < 10; ++i) {
      Vec x = clinf.sample_sphere(1, 100 + i)[0];
      Vec y = clinf.sample_sphere(1, 200 + i)[0];
      auto w = lush_witness(clinf, x, y, 0.05, 100, 1);
      REQUIRE(w.has_value());
      CHECK(w->achieved_distance <= 1e-9);
      CHECK(std::abs(std::abs(w->alpha1) - 1.0) <= 1e-12);
      CHECK(std::abs(std::abs(w->alpha2) - 1.0) <= 1e-12);
      // slice membership of both members
      CHECK((w->ystar.cwiseProduct(w->x1).sum()).real() > 1 - 0.05);
      CHECK((w->ystar.cwiseProduct(w->x2).sum()).real() > 1 - 0.05);
    }
  }
  SUBCASE("l1: exact two-group decomposition") {
    Rng rng(13);
    for (int i = 0; i < 10; ++i) {
      Vec x = l1r2.sample_sphere(1, 300 + i)[0];
      Vec y = l1r2.sample_sphere(1, 400 + i)[0];
      auto w = lush_witness(l1r2, x, y, 0.05, 100, 1);
      REQUIRE(w.has_value());
      CHECK(w->achieved_distance <= 1e-12);
    }
  }
  SUBCASE("euclidean plane has no witness for orthogonal directions") {
    auto w = lush_witness(l2r, cv({0, 1}), cv({1, 0}), 0.1, 400, 1);
    CHECK_FALSE(w.has_value());
    // oracle: for every slice functional (angle grid) containing y, the
    // absolutely convex hull of the slice stays in the bowtie between the
    // arc and its reflection; its support at x stays below 1 - margin
    const double eps = 0.1;
    double arc_halfwidth = std::acos(1.0 - eps);
    for (int k = 0; k < 720; ++k) {
      double th = 2 * M_PI * k / 720;
      double y_angle = std::abs(std::remainder(th - 0.0, 2 * M_PI));
      if (std::cos(y_angle) <= 1 - eps) continue;  // y = (1,0) not in this slice
      double x_angle = std::abs(std::remainder(M_PI / 2 - th, M_PI));
      double support = std::cos(std::max(0.0, x_angle - arc_halfwidth));
      CHECK(1.0 - support > eps);
    }
  }
}

TEST_CASE("ck witness boost") {
  SUBCASE("row matrix example") {
    LinearOperator T(linf2, to_cmat(rm(2, 2, {1, 1, 0, 0})));
    auto F = make_callable(T);
    auto r = ck_witness_boost(F, 2.0, cv({1, 1}), cv({-1, -1}), 1e-2);
    CHECK(r.s == 0);
    CHECK(linf2.norm(r.z) <= 1e-12);
    CHECK(r.value == doctest::Approx(2.0));
  }
  SUBCASE("contracts on random sup-norm operators") {
    NormedSpace linf3 = NormedSpace::pnorm(3, INFINITY);
    Rng rng(17);
    int produced = 0;
    for (int i = 0; i < 20; ++i) {
      Mat M = rng.gaussian_mat(3, 3, Field::Real);
      LinearOperator T(linf3, M);
      auto F = make_callable(T);
      double norm = op_norm(T);
      // norm-attaining pair from the row-aligned sign vector
      auto onr = op_norm_result(T);
      Vec x = onr.arg, y = -onr.arg;
      double eps = 1e-2;
      CkBoostResult r;
      try {
        r = ck_witness_boost(F, norm, x, y, eps);
      } catch (const InputError&) {
        continue;  // u(s) = 0 collision; skip
      }
      ++produced;
      double half = linf3.norm(Vec(x - y)) / 2;
      CHECK(linf3.norm(Vec(r.z - y)) == doctest::Approx(half).epsilon(1e-9));
      CHECK(r.value > (1 - 2 * eps) * norm - 1e-9);
      // the boost value is a genuine numerical-range value
      Vec d = r.z - x;
      double nd = linf3.norm(d);
      double w = linf3.duality_set(d).sup_abs(Vec(F(r.z) - F(x))) / (nd * nd);
      CHECK(w >= r.value / nd - 1e-9);
    }
    CHECK(produced >= 15);
  }
  SUBCASE("precondition is enforced") {
    LinearOperator T(linf2, to_cmat(rm(2, 2, {1, 0, 0, 1})));
    auto F = make_callable(T);
    // the pair (e1, -e1) attains the norm of I, but a bad norm estimate fails
    CHECK_THROWS_AS(ck_witness_boost(F, 5.0, cv({1, 0}), cv({-1, 0}), 1e-2), InputError);
  }
}

TEST_CASE("linf witness alignment") {
  NormedSpace Z = NormedSpace::sum(NormedSpace::pnorm(1, 2.0), NormedSpace::pnorm(1, 2.0),
                                   SumKind::Linf);
  SUBCASE("projection composed with a norm-one map") {
    LinearOperator T(Z, to_cmat(rm(2, 2, {1, 0, 0, 0})));
    auto F = make_callable(T);
    auto pair = linf_witness_align(F, 1e-3, 300, 5);
    REQUIRE(pair.found);
    double gap = Z.norm(Vec(pair.u - pair.v));
    CHECK(std::abs(pair.u[0] - pair.v[0]) == doctest::Approx(gap).epsilon(1e-9));
    CHECK(pair.quotient >= 1.0 - 1e-3);
  }
  SUBCASE("shift matrix") {
    LinearOperator T(Z, to_cmat(rm(2, 2, {0, 1, 0, 0})));
    auto F = make_callable(T);
    auto pair = linf_witness_align(F, 1e-3, 300, 5);
    REQUIRE(pair.found);
    double gap = Z.norm(Vec(pair.u - pair.v));
    double xgap = std::abs(pair.u[0] - pair.v[0]);
    CHECK(xgap == doctest::Approx(gap).epsilon(1e-9));
    CHECK(pair.quotient >= 1.0 - 1e-3);
  }
}

TEST_CASE("linf sum compression") {
  NormedSpace Z = NormedSpace::sum(NormedSpace::pnorm(1, 2.0), NormedSpace::pnorm(1, 2.0),
                                   SumKind::Linf);
  SUBCASE("shift compresses to a norm-preserving scalar map") {
    LinearOperator T(Z, to_cmat(rm(2, 2, {0, 1, 0, 0})));
    auto F = make_callable(T);
    AlignedPair pair;
    pair.u = cv({1, 1});
    pair.v = cv({-1, -1});
    pair.quotient = 1.0;
    pair.found = true;
    auto S = linf_sum_compress(F, pair);
    // S agrees with the identity on [-1, 1]
    for (double a : {-1.0, -0.4, 0.0, 0.3, 1.0}) {
      CHECK(S(Vec::Constant(1, Complex(a, 0)))[0].real() == doctest::Approx(a).epsilon(1e-9));
    }
    double lip = max_sampled_quotient(S, 2000, 3);
    CHECK(lip <= 1.0 + 1e-9);
    CHECK(lip >= 1.0 - 1e-3);
  }
  SUBCASE("block diagonal identity compresses to the identity") {
    LinearOperator T(Z, to_cmat(rm(2, 2, {1, 0, 0, 0})));
    auto F = make_callable(T);
    AlignedPair pair;
    pair.u = cv({1, 0});
    pair.v = cv({-1, 0});
    pair.quotient = 1.0;
    pair.found = true;
    auto S = linf_sum_compress(F, pair);
    for (double a : {-2.0, -0.4, 0.0, 0.3, 1.7}) {
      CHECK(S(Vec::Constant(1, Complex(a, 0)))[0].real() == doctest::Approx(a).epsilon(1e-9));
    }
  }
}

TEST_CASE("l1 sum compression") {
  NormedSpace Z = NormedSpace::sum(NormedSpace::pnorm(1, 2.0), NormedSpace::pnorm(1, 2.0),
                                   SumKind::L1);
  SUBCASE("block projection compresses to the identity") {
    LinearOperator T(Z, to_cmat(rm(2, 2, {1, 0, 0, 0})));
    auto F = make_callable(T);
    auto S = l1_sum_compress(F, cv({1, 0}), cv({-1, 0}), 1e-3);
    for (double a : {-1.0, 0.25, 2.0}) {
      CHECK(S(Vec::Constant(1, Complex(a, 0)))[0].real() == doctest::Approx(a).epsilon(1e-9));
    }
  }
  SUBCASE("increment re-verification") {
    LinearOperator T(Z, to_cmat(rm(2, 2, {1, 0, 0, 0})));
    auto F = make_callable(T);
    auto S = l1_sum_compress(F, cv({1, 0}), cv({-1, 0}), 1e-3);
    Vec s1 = S(Vec::Constant(1, Complex(1, 0))), s2 = S(Vec::Constant(1, Complex(-1, 0)));
    CHECK(NormedSpace::pnorm(1, 2.0).norm(Vec(s1 - s2)) >= (1 - 1e-3) * 2.0 - 1e-9);
  }
  SUBCASE("y-branch witnesses are rejected with guidance") {
    LinearOperator T(Z, to_cmat(rm(2, 2, {0, 0, 0, 1})));  // only acts on Y
    auto F = make_callable(T);
    CHECK_THROWS_WITH_AS(l1_sum_compress(F, cv({0, 1}), cv({0, -1}), 1e-3),
                         doctest::Contains("Y branch"), InputError);
  }
  SUBCASE("sampled compressed radius never exceeds the source radius") {
    Rng rng(23);
    int done = 0;
    for (int i = 0; i < 30 && done < 8; ++i) {
      Mat M = rng.gaussian_mat(2, 2, Field::Real);
      LinearOperator T(Z, M);
      auto F = make_callable(T);
      auto br = numerical_radius(T, 1e-6, 400, 7);
      auto qp = callable_lip_lower(F, 300, 31 + i);
      try {
        auto S = l1_sum_compress(F, qp.x, qp.y, 5e-2);
        // two-point sampled lower bound for omega(S)
        NormedSpace X = NormedSpace::pnorm(1, 2.0);
        double lo = 0;
        Rng r2(41);
        for (int k = 0; k < 400; ++k) {
          Vec a = r2.gaussian_vec(1, Field::Real), b = r2.gaussian_vec(1, Field::Real);
          double nd = X.norm(Vec(a - b));
          if (nd < 1e-10) continue;
          lo = std::max(lo, X.duality_set(Vec(a - b)).sup_abs(Vec(S(a) - S(b))) / (nd * nd));
        }
        CHECK(lo <= br.upper + 1e-6);
        ++done;
      } catch (const InputError&) {
        continue;  // wrong branch or degenerate increment; acceptable here
      }
    }
    CHECK(done >= 4);
  }
}

TEST_CASE("diagonal lift") {
  SUBCASE("identity lifts to the identity") {
    auto T = diagonal_lift(const_mult_on_R(1.0), 2);
    CHECK(T.space.dim() == 2);
    CHECK(lip_norm(T) == doctest::Approx(1.0));
    auto br = lip_radius(T, 1e-6, 200, 1);
    CHECK(br.lower == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(br.upper == doctest::Approx(1.0).epsilon(1e-6));
  }
  SUBCASE("negated identity, three copies") {
    auto T = diagonal_lift(const_mult_on_R(-1.0), 3);
    auto br = lip_radius(T, 1e-6, 200, 1);
    CHECK(br.lower == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(br.upper == doctest::Approx(1.0).epsilon(1e-6));
  }
  SUBCASE("abs lifts with radius one and preserved norm") {
    auto S = abs_on_R();
    auto T = diagonal_lift(S, 2);
    CHECK(T.cells.size() == 4);
    CHECK(validate(T).passed());
    CHECK(lip_norm(T) == lip_norm(S));
    auto br = lip_radius(T, 1e-3, 400, 1);
    CHECK(br.lower <= 1.0 + 1e-9);
    CHECK(br.upper >= 1.0 - 1e-9);
    CHECK(br.upper - br.lower <= 1e-3);
  }
  SUBCASE("lip norm and radius preserved on random complexes") {
    NormedSpace linf2s = NormedSpace::pnorm(2, INFINITY);
    for (uint64_t s = 1; s <= 3; ++s) {
      auto S = random_pwl(linf2s, 3, s);
      auto T = diagonal_lift(S, 2);
      CHECK(lip_norm(T) == doctest::Approx(lip_norm(S)).epsilon(1e-12));
      auto bs = lip_radius(S, 1e-3, 300, s);
      auto bt = lip_radius(T, 1e-3, 300, s);
      CHECK(bt.lower <= bs.upper + 1e-3);
      CHECK(bt.upper >= bs.lower - 1e-3);
    }
  }
}
