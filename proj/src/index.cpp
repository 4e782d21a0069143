#include "numrad/index.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace numrad {

namespace {

constexpr double kRadiusTol = 1e-6;

struct Ratio {
  double upper = std::numeric_limits<double>::infinity();  // certified
  double heuristic = std::numeric_limits<double>::infinity();
  RadiusBracket bracket;
  double norm_lower = 0.0;
};

Ratio normalized_radius(const NormedSpace& sp, const Mat& M, int radius_budget,
                        uint64_t seed) {
  Ratio r;
  LinearOperator T(sp, M);
  OpNormResult n = op_norm_result(T);
  if (n.lower < 1e-9) return r;
  r.norm_lower = n.lower;
  r.bracket = numerical_radius(T, kRadiusTol, radius_budget, seed);
  r.upper = r.bracket.upper / n.lower;
  r.heuristic = r.bracket.lower / n.upper;
  return r;
}

Ratio normalized_radius_pwl(const PwlOperator& T, int radius_budget, uint64_t seed) {
  Ratio r;
  double norm_lower = 0.0;
  for (const Cell& c : T.cells)
    norm_lower = std::max(norm_lower, op_norm_result(LinearOperator(T.space, to_cmat(c.A))).lower);
  if (norm_lower < 1e-9) return r;
  r.norm_lower = norm_lower;
  r.bracket = lip_radius(T, kRadiusTol, radius_budget, seed);
  r.upper = r.bracket.upper / norm_lower;
  r.heuristic = r.bracket.lower / lip_norm(T);
  return r;
}

}  // namespace

std::vector<Mat> operator_battery(const NormedSpace& space) {
  const int n = space.dim();
  const bool complex_field = space.field() == Field::Complex;
  std::vector<Mat> out;
  Mat I = Mat::Identity(n, n);
  out.push_back(I);
  out.push_back(-I);
  if (n >= 2) {
    Mat shift = Mat::Zero(n, n);
    for (int i = 0; i + 1 < n; ++i) shift(i, i + 1) = 1.0;
    out.push_back(shift);
    out.push_back(shift.transpose());
    Mat cyc = Mat::Zero(n, n);
    for (int i = 0; i < n; ++i) cyc((i + 1) % n, i) = 1.0;
    out.push_back(cyc);
    Mat rot = I;
    rot(0, 0) = 0;
    rot(0, 1) = -1;
    rot(1, 0) = 1;
    rot(1, 1) = 0;
    for (int i = 2; i < n; ++i) rot(i, i) = 0.0;  // rotation block padded by zero
    out.push_back(rot);
  }
  Mat alt = Mat::Zero(n, n);
  for (int i = 0; i < n; ++i) alt(i, i) = (i % 2 == 0) ? 1.0 : -1.0;
  out.push_back(alt);
  out.push_back(Mat::Ones(n, n) / static_cast<double>(n));
  Mat rank1 = Mat::Zero(n, n);
  rank1.col(0).setOnes();
  out.push_back(rank1);
  Mat rev = Mat::Zero(n, n);
  for (int i = 0; i < n; ++i) rev(i, n - 1 - i) = 1.0;
  out.push_back(rev);
  if (complex_field) {
    out.push_back(Complex(0, 1) * I);
    Mat phases = Mat::Zero(n, n);
    for (int i = 0; i < n; ++i) {
      double th = 2.0 * M_PI * i / std::max(1, n);
      phases(i, i) = Complex(std::cos(th), std::sin(th));
    }
    out.push_back(phases);
    if (n >= 2) {
      Mat shift_i = Mat::Zero(n, n);
      for (int i = 0; i + 1 < n; ++i) shift_i(i, i + 1) = Complex(0, 1);
      out.push_back(shift_i);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// estimate_index

IndexEstimate estimate_index(const NormedSpace& space, Mode mode, int budget, uint64_t seed) {
  if (budget < 1) throw InputError("estimate_index: budget must be >= 1");
  IndexEstimate est;
  est.space_spec = space.spec_string();
  est.mode = mode;
  est.stats.seed = seed;

  const int n = space.dim();
  const int radius_budget = 48;

  double best_upper = std::numeric_limits<double>::infinity();
  double best_heuristic = std::numeric_limits<double>::infinity();
  Mat best_mat;
  bool best_is_pwl = false;
  PwlOperator best_pwl(NormedSpace::pnorm(1, 2.0),
                       {Cell{RMat(0, 1), RVec(0), RMat::Identity(1, 1), RVec::Zero(1)}}, 1.0);
  Ratio best_ratio;
  int candidate_index = 0;

  auto consider_mat = [&](const Mat& M) {
    Ratio r = normalized_radius(space, M, radius_budget, substream(seed, candidate_index));
    if (r.upper < best_upper) {
      best_upper = r.upper;
      best_mat = M;
      best_is_pwl = false;
      best_ratio = r;
      est.stats.last_improvement = candidate_index;
    }
    best_heuristic = std::min(best_heuristic, r.heuristic);
    ++candidate_index;
  };
  auto consider_pwl = [&](const PwlOperator& T) {
    Ratio r = normalized_radius_pwl(T, radius_budget, substream(seed, candidate_index));
    if (r.upper < best_upper) {
      best_upper = r.upper;
      best_pwl = T;
      best_is_pwl = true;
      best_ratio = r;
      est.stats.last_improvement = candidate_index;
    }
    best_heuristic = std::min(best_heuristic, r.heuristic);
    ++candidate_index;
  };

  for (const Mat& M : operator_battery(space)) consider_mat(M);

  const bool lipschitz_pool = mode == Mode::Lipschitz && space.field() == Field::Real;
  int gaussian_budget = std::max(1, budget - candidate_index);
  int pwl_share = lipschitz_pool ? gaussian_budget / 3 : 0;
  int descent_share = std::max(8, gaussian_budget / 4);
  int plain_share = gaussian_budget - pwl_share - descent_share;

  Rng rng(splitmix64(seed));
  for (int i = 0; i < plain_share; ++i) consider_mat(rng.gaussian_mat(n, n, space.field()));
  if (lipschitz_pool) {
    int max_pieces = std::min(9, n <= 2 ? 9 : (n == 3 ? 9 : 3));
    for (int i = 0; i < pwl_share; ++i) {
      int pieces = 1 + rng.uniform_int(0, max_pieces - 1);
      try {
        consider_pwl(random_pwl(space, pieces, substream(seed, 7000 + i)));
      } catch (const GenerationError&) {
        continue;
      }
    }
  }

  // coordinatewise descent around the best linear incumbent
  if (!best_is_pwl && best_mat.size() > 0) {
    Mat cur = best_mat;
    double sigma = 0.5;
    int steps = 0;
    Rng rng2(substream(seed, 0xdecaf));
    while (steps < descent_share && sigma > 1e-7) {
      bool improved = false;
      for (int i = 0; i < n && steps < descent_share; ++i) {
        for (int k = 0; k < n && steps < descent_share; ++k) {
          for (int part = 0; part < (space.field() == Field::Complex ? 2 : 1); ++part) {
            for (double dir : {1.0, -1.0}) {
              Mat cand = cur;
              cand(i, k) += (part == 0 ? Complex(dir * sigma, 0) : Complex(0, dir * sigma));
              Ratio r = normalized_radius(space, cand, radius_budget,
                                          substream(seed, 9000 + steps));
              ++steps;
              ++est.stats.iterations;
              if (r.upper < best_upper) {
                best_upper = r.upper;
                best_mat = cand;
                best_ratio = r;
                cur = cand;
                improved = true;
              }
            }
          }
        }
      }
      if (!improved) sigma *= 0.5;
    }
  }

  est.stats.starts = candidate_index;
  est.upper = best_upper;
  est.heuristic_value = std::min(best_heuristic, best_upper);
  json w;
  if (best_is_pwl) {
    w["kind"] = "pwl";
    w["operator"] = pwl_to_json(best_pwl, space.spec_string());
  } else {
    w["kind"] = "matrix";
    w["operator"] = matrix_to_json(best_mat, space.field());
  }
  w["norm_lower"] = best_ratio.norm_lower;
  w["bracket"] = bracket_to_json(best_ratio.bracket, space.field());
  w["normalized_radius_upper"] = est.upper;
  est.witness = std::move(w);
  return est;
}

double reevaluate_witness(const NormedSpace& space, const json& witness) {
  std::string kind = witness.at("kind").get<std::string>();
  if (kind == "matrix") {
    auto [M, f] = matrix_from_json(witness.at("operator"));
    (void)f;
    Ratio r = normalized_radius(space, M, 256, 12345);
    return r.upper;
  }
  PwlOperator T = pwl_from_json(witness.at("operator"));
  Ratio r = normalized_radius_pwl(T, 256, 12345);
  return r.upper;
}

json IndexEstimate::to_json() const {
  json out;
  out["space"] = space_spec;
  out["mode"] = mode == Mode::Linear ? "linear" : "lipschitz";
  out["upper"] = upper;
  out["heuristic_value"] = heuristic_value;
  out["witness"] = witness;
  out["search_stats"] = json{{"starts", stats.starts},
                             {"iterations", stats.iterations},
                             {"seed", stats.seed},
                             {"last_improvement", stats.last_improvement}};
  return out;
}

// ---------------------------------------------------------------------------
// Reports

bool VerificationReport::any_failed() const {
  for (const CaseResult& c : cases)
    if (c.status == "fail") return true;
  return false;
}

bool VerificationReport::any_unconverged() const {
  for (const CaseResult& c : cases)
    if (c.status == "unconverged") return true;
  return false;
}

json VerificationReport::to_json() const {
  json out;
  out["suite"] = suite;
  out["seed"] = seed;
  json cs = json::array();
  for (const CaseResult& c : cases) {
    json jc;
    jc["name"] = c.name;
    jc["status"] = c.status;
    jc["value"] = c.value;
    jc["expected"] = c.expected;
    jc["tol"] = c.tol;
    jc["witness"] = c.witness.is_null() ? json("inline:none") : c.witness;
    cs.push_back(std::move(jc));
  }
  out["cases"] = std::move(cs);
  out["config"] = config;
  return out;
}

std::string VerificationReport::to_csv() const {
  std::ostringstream os;
  os << "suite,seed,name,status,value,expected,tol\n";
  for (const CaseResult& c : cases) {
    os << suite << "," << seed << "," << c.name << "," << c.status << "," << c.value << ","
       << c.expected << "," << c.tol << "\n";
  }
  return os.str();
}

namespace {

// One-sided floor check: pass iff value >= expected - tol; a violation with
// an unconverged bracket is reported as unconverged rather than fail.
CaseResult floor_case(const std::string& name, double value, double expected, double tol,
                      bool converged, json witness = {}) {
  CaseResult c;
  c.name = name;
  c.value = value;
  c.expected = expected;
  c.tol = tol;
  c.witness = std::move(witness);
  if (value >= expected - tol) c.status = "pass";
  else c.status = converged ? "fail" : "unconverged";
  return c;
}

CaseResult near_case(const std::string& name, double value, double expected, double tol,
                     bool converged, json witness = {}) {
  CaseResult c;
  c.name = name;
  c.value = value;
  c.expected = expected;
  c.tol = tol;
  c.witness = std::move(witness);
  if (std::abs(value - expected) <= tol) c.status = "pass";
  else c.status = converged ? "fail" : "unconverged";
  return c;
}

}  // namespace

VerificationReport bk_suite(const NormedSpace& space, int samples, uint64_t seed) {
  if (space.field() != Field::Complex)
    throw InputError("bk_suite: the space must be complex");
  VerificationReport rep;
  rep.suite = "bk";
  rep.seed = seed;
  rep.config = json{{"space", space.spec_string()}, {"samples", samples}};
  const double inv_e = 1.0 / std::exp(1.0);
  Rng rng(splitmix64(seed));
  std::vector<Mat> ops = operator_battery(space);
  while (static_cast<int>(ops.size()) < samples)
    ops.push_back(rng.gaussian_mat(space.dim(), space.dim(), Field::Complex));
  ops.resize(samples);
  for (int i = 0; i < samples; ++i) {
    LinearOperator T(space, ops[i]);
    OpNormResult nr = op_norm_result(T);
    if (nr.lower < 1e-9) continue;
    RadiusBracket br = numerical_radius(T, kRadiusTol, 96, substream(seed, i));
    std::ostringstream name;
    name << "bk/op" << i;
    json w;
    w["matrix"] = matrix_to_json(ops[i], Field::Complex);
    w["bracket"] = bracket_to_json(br, Field::Complex);
    rep.cases.push_back(floor_case(name.str(), br.lower, nr.lower * inv_e, 1e-6,
                                   br.converged, std::move(w)));
  }
  return rep;
}

VerificationReport rnp_equality_suite(const NormedSpace& space, int budget, uint64_t seed) {
  VerificationReport rep;
  rep.suite = "rnp";
  rep.seed = seed;
  rep.config = json{{"space", space.spec_string()}, {"budget", budget}};
  IndexEstimate lin = estimate_index(space, Mode::Linear, budget, seed);
  IndexEstimate lip = estimate_index(space, Mode::Lipschitz, budget, seed);
  {
    CaseResult c;
    c.name = "rnp/lipschitz-pool-dominates";
    c.value = lip.upper - lin.upper;
    c.expected = 0.0;
    c.tol = 1e-9;
    c.status = (c.value <= c.tol) ? "pass" : "fail";
    rep.cases.push_back(std::move(c));
  }
  {
    // a strictly smaller Lipschitz upper would be a counterexample candidate
    CaseResult c;
    c.name = "rnp/no-counterexample-candidate";
    c.value = lin.upper - lip.upper;
    c.expected = 0.0;
    c.tol = 1e-2;
    c.status = (c.value <= c.tol) ? "pass" : "fail";
    json w;
    w["linear"] = lin.to_json();
    w["lipschitz"] = lip.to_json();
    c.witness = std::move(w);
    rep.cases.push_back(std::move(c));
  }
  if (space.field() == Field::Real) {
    // per-operator check: CPWL radii stay above the linear index estimate
    double worst = std::numeric_limits<double>::infinity();
    bool all_converged = true;
    for (int i = 0; i < 12; ++i) {
      try {
        PwlOperator T = random_pwl(space, std::min(9, space.dim() <= 3 ? 9 : 3),
                                   substream(seed, 500 + i));
        double norm_lower = 0.0;
        for (const Cell& c : T.cells)
          norm_lower =
              std::max(norm_lower, op_norm_result(LinearOperator(T.space, to_cmat(c.A))).lower);
        if (norm_lower < 1e-9) continue;
        RadiusBracket br = lip_radius(T, 1e-3, 200, substream(seed, 600 + i));
        all_converged = all_converged && br.converged;
        worst = std::min(worst, br.lower / norm_lower);
      } catch (const GenerationError&) {
        continue;
      }
    }
    if (std::isfinite(worst)) {
      rep.cases.push_back(floor_case("rnp/cpwl-floor", worst, lin.upper - 2e-2, 5e-3,
                                     all_converged));
    }
  }
  return rep;
}

namespace {

LipschitzCallable swap_conjugate(const LipschitzCallable& T, int dx, int dy) {
  // conjugation by the summand swap isometry of X (+) Y
  NormedSpace Zs = NormedSpace::sum(T.domain.right(), T.domain.left(), T.domain.sum_kind());
  LipschitzCallable Tc = T;
  LipschitzCallable out;
  out.domain = Zs;
  out.codomain = Zs;
  out.lip_bound = T.lip_bound;
  out.certificate = T.certificate;
  out.map = [Tc, dx, dy](const Vec& z) {
    Vec zi(dx + dy);
    zi.head(dx) = z.tail(dx);
    zi.tail(dy) = z.head(dy);
    Vec w = Tc(zi);
    Vec out_v(dx + dy);
    out_v.head(dy) = w.tail(dy);
    out_v.tail(dx) = w.head(dx);
    return out_v;
  };
  return out;
}

// block-projected callable: the X component of T as a map Z -> X
LipschitzCallable project_left(const LipschitzCallable& T) {
  LipschitzCallable out;
  out.domain = T.domain;
  out.codomain = T.domain.left();
  out.lip_bound = T.lip_bound;
  out.certificate = T.certificate;
  LipschitzCallable Tc = T;
  int dx = T.domain.left().dim();
  out.map = [Tc, dx](const Vec& z) { return Vec(Tc(z).head(dx)); };
  return out;
}

double two_point_radius_lower(const LipschitzCallable& S, int budget, uint64_t seed,
                              const std::vector<std::pair<Vec, Vec>>& curated) {
  const NormedSpace& X = S.domain;
  double lo = 0.0;
  auto consider = [&](const Vec& a, const Vec& b) {
    double nd = X.norm(Vec(a - b));
    if (nd < 1e-10) return;
    lo = std::max(lo, X.duality_set(Vec(a - b)).sup_abs(Vec(S(a) - S(b))) / (nd * nd));
  };
  for (const auto& [a, b] : curated) consider(a, b);
  Rng rng(seed);
  for (int i = 0; i < budget; ++i) {
    Vec a = rng.gaussian_vec(X.dim(), X.field());
    Vec b = a + rng.uniform(0.01, 1.0) * rng.gaussian_vec(X.dim(), X.field());
    consider(a, b);
  }
  return lo;
}

}  // namespace

VerificationReport sum_stability_suite(const NormedSpace& X, const NormedSpace& Y,
                                       SumKind kind, int budget, uint64_t seed) {
  if (X.dim() + Y.dim() > 5)
    throw InputError("sum_stability_suite: combined dimension too large for search");
  VerificationReport rep;
  rep.suite = "sums";
  rep.seed = seed;
  NormedSpace Z = NormedSpace::sum(X, Y, kind);
  rep.config = json{{"space", Z.spec_string()}, {"budget", budget}};

  IndexEstimate ex = estimate_index(X, Mode::Lipschitz, budget, substream(seed, 1));
  IndexEstimate ey = estimate_index(Y, Mode::Lipschitz, budget, substream(seed, 2));
  IndexEstimate ez = estimate_index(Z, Mode::Lipschitz, budget, substream(seed, 3));
  double target = std::min(ex.upper, ey.upper);
  {
    json w;
    w["left"] = ex.to_json();
    w["right"] = ey.to_json();
    w["sum"] = ez.to_json();
    rep.cases.push_back(near_case("sums/index-formula", ez.upper, target, 2e-2, true,
                                  std::move(w)));
  }

  // compression demonstration on the sum witness
  try {
    LipschitzCallable T;
    double rho_T = ez.upper;
    if (ez.witness.at("kind").get<std::string>() == "matrix") {
      auto [M, f] = matrix_from_json(ez.witness.at("operator"));
      (void)f;
      T = make_callable(LinearOperator(Z, M));
    } else {
      T = make_callable(pwl_from_json(ez.witness.at("operator")));
    }
    const int dx = X.dim(), dy = Y.dim();
    double rho_S = std::numeric_limits<double>::infinity();
    if (kind == SumKind::Linf) {
      // compress toward the block whose component attains the norm
      LipschitzCallable Teff = T;
      QuotientPair qL = callable_lip_lower(project_left(T), 300, substream(seed, 11));
      LipschitzCallable Tsw = swap_conjugate(T, dx, dy);
      QuotientPair qR = callable_lip_lower(project_left(Tsw), 300, substream(seed, 12));
      if (qR.quotient > qL.quotient) Teff = Tsw;
      LipschitzCallable T1 = project_left(Teff);
      AlignedPair pair = linf_witness_align(T1, 2e-3, 400, substream(seed, 13));
      if (!pair.found && pair.quotient <= 0) throw InputError("alignment failed");
      LipschitzCallable S = linf_sum_compress(Teff, pair);
      std::vector<std::pair<Vec, Vec>> curated{{pair.u.head(S.domain.dim()),
                                                pair.v.head(S.domain.dim())}};
      double omega_S = two_point_radius_lower(S, 500, substream(seed, 14), curated);
      rho_S = omega_S / S.lip_bound;
      (void)rho_S;
      json w;
      w["aligned_quotient"] = pair.quotient;
      w["omega_S_lower"] = omega_S;
      w["lip_bound_S"] = S.lip_bound;
      rep.cases.push_back(floor_case("sums/compression-keeps-radius", rho_S, rho_T - 2e-2,
                                     1e-9, true, std::move(w)));
      rep.cases.push_back(floor_case("sums/compression-never-gains", rho_T,
                                     rho_S - 2e-2, 1e-9, true));
    } else {
      QuotientPair qp = callable_lip_lower(T, 600, substream(seed, 15));
      LipschitzCallable S;
      bool swapped = false;
      try {
        S = l1_sum_compress(T, qp.x, qp.y, 5e-2);
      } catch (const InputError&) {
        LipschitzCallable Tsw = swap_conjugate(T, dx, dy);
        Vec sx(Z.dim()), sy(Z.dim());
        sx.head(dy) = qp.x.tail(dy);
        sx.tail(dx) = qp.x.head(dx);
        sy.head(dy) = qp.y.tail(dy);
        sy.tail(dx) = qp.y.head(dx);
        S = l1_sum_compress(Tsw, sx, sy, 5e-2);
        swapped = true;
      }
      std::vector<std::pair<Vec, Vec>> curated{
          {swapped ? Vec(qp.x.tail(dy)) : Vec(qp.x.head(dx)),
           swapped ? Vec(qp.y.tail(dy)) : Vec(qp.y.head(dx))}};
      double omega_S = two_point_radius_lower(S, 500, substream(seed, 16), curated);
      rho_S = omega_S / S.lip_bound;
      json w;
      w["swapped"] = swapped;
      w["omega_S_lower"] = omega_S;
      w["lip_bound_S"] = S.lip_bound;
      rep.cases.push_back(floor_case("sums/compression-keeps-radius", rho_S, rho_T - 2e-2,
                                     1e-9, true, std::move(w)));
      rep.cases.push_back(floor_case("sums/compression-never-gains", rho_T,
                                     rho_S - 2e-2, 1e-9, true));
    }
  } catch (const std::exception& e) {
    CaseResult c;
    c.name = "sums/compression-demo";
    c.status = "unconverged";
    c.witness = json{{"error", e.what()}};
    rep.cases.push_back(std::move(c));
  }
  return rep;
}

VerificationReport known_values_suite(uint64_t seed) {
  VerificationReport rep;
  rep.suite = "known";
  rep.seed = seed;
  rep.config = json{{"battery", "l1/linf n=2..4, l2 real and complex"}};

  // index-one spaces: every battery operator pins omega = ||T||
  int spec_i = 0;
  for (const char* spec : {"l1:2", "l1:3", "l1:4", "linf:2", "linf:3", "linf:4"}) {
    NormedSpace sp = parse_space(spec);
    double worst = std::numeric_limits<double>::infinity();
    bool converged = true;
    int i = 0;
    for (const Mat& M : operator_battery(sp)) {
      LinearOperator T(sp, M);
      OpNormResult nr = op_norm_result(T);
      if (nr.lower < 1e-9) continue;
      RadiusBracket br = numerical_radius(T, kRadiusTol, 64, substream(seed, 31 * spec_i + i));
      converged = converged && br.converged;
      worst = std::min(worst, br.lower / nr.lower);
      ++i;
    }
    for (int k = 0; k < 6; ++k) {
      try {
        PwlOperator T = random_pwl(sp, sp.dim() <= 3 ? 9 : 3, substream(seed, 900 + 10 * spec_i + k));
        double nl = 0.0;
        for (const Cell& c : T.cells)
          nl = std::max(nl, op_norm_result(LinearOperator(sp, to_cmat(c.A))).lower);
        if (nl < 1e-9) continue;
        RadiusBracket br = lip_radius(T, 1e-3, 200, substream(seed, 950 + 10 * spec_i + k));
        converged = converged && br.converged;
        worst = std::min(worst, br.lower / nl);
      } catch (const GenerationError&) {
        continue;
      }
    }
    rep.cases.push_back(floor_case(std::string("known/") + spec + "/index-one", worst,
                                   1.0, 5e-3, converged));
    ++spec_i;
  }

  // real l2^2: the battery contains the rotation with omega = 0
  {
    NormedSpace sp = parse_space("l2:2");
    double best = std::numeric_limits<double>::infinity();
    for (const Mat& M : operator_battery(sp)) {
      LinearOperator T(sp, M);
      OpNormResult nr = op_norm_result(T);
      if (nr.lower < 1e-9) continue;
      best = std::min(best, numerical_radius(T, kRadiusTol).upper / nr.lower);
    }
    rep.cases.push_back(near_case("known/l2:2/rotation-pins-zero", best, 0.0, 1e-9, true));
  }

  // complex l2^2: the battery minimum is 1/2
  {
    NormedSpace sp = parse_space("cl2:2");
    double best = std::numeric_limits<double>::infinity();
    for (const Mat& M : operator_battery(sp)) {
      LinearOperator T(sp, M);
      OpNormResult nr = op_norm_result(T);
      if (nr.lower < 1e-9) continue;
      best = std::min(best, numerical_radius(T, kRadiusTol).upper / nr.lower);
    }
    rep.cases.push_back(near_case("known/cl2:2/half", best, 0.5, 1e-3, true));
  }
  return rep;
}

VerificationReport ck_suite(int n, int count, double eps, uint64_t seed) {
  VerificationReport rep;
  rep.suite = "ck";
  rep.seed = seed;
  rep.config = json{{"space", "linf:" + std::to_string(n)}, {"count", count}, {"eps", eps}};
  NormedSpace sp = NormedSpace::pnorm(n, INFINITY);
  Rng rng(splitmix64(seed ^ 0xcc));
  int made = 0;
  for (int attempt = 0; made < count && attempt < count * 4; ++attempt) {
    bool use_pwl = attempt % 3 == 2;
    LipschitzCallable F;
    double norm_lb = 0.0;
    Vec x, y;
    try {
      if (use_pwl) {
        PwlOperator T = random_pwl(sp, 9, substream(seed, 100 + attempt));
        F = make_callable(T);
        norm_lb = 0.0;
        for (const Cell& c : T.cells)
          norm_lb = std::max(norm_lb, op_norm_result(LinearOperator(sp, to_cmat(c.A))).lower);
        QuotientPair qp = callable_lip_lower(F, 400, substream(seed, 300 + attempt));
        if (qp.quotient < (1 - eps / 2) * norm_lb) continue;
        x = qp.x;
        y = qp.y;
        F.lip_bound = norm_lb;  // certified two-sided on sup-norm cells
      } else {
        Mat M = rng.gaussian_mat(n, n, Field::Real);
        LinearOperator T(sp, M);
        auto onr = op_norm_result(T);
        if (onr.lower < 1e-9) continue;
        F = make_callable(T);
        norm_lb = onr.lower;
        x = onr.arg;
        y = -onr.arg;
      }
      CkBoostResult r = ck_witness_boost(F, norm_lb, x, y, eps);
      std::ostringstream name;
      name << "ck/inst" << made;
      json w;
      w["s"] = r.s;
      w["value"] = r.value;
      w["norm"] = norm_lb;
      rep.cases.push_back(floor_case(name.str(), r.value, (1.0 - 2.0 * eps) * norm_lb, 1e-9,
                                     true, std::move(w)));
      ++made;
    } catch (const InputError&) {
      continue;  // e.g. u(s) = 0 collision; draw another instance
    } catch (const GenerationError&) {
      continue;
    }
  }
  return rep;
}

}  // namespace numrad
