#include "numrad/linop.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>

namespace numrad {

namespace {

Complex apply_func(const Vec& f, const Vec& v) { return f.cwiseProduct(v).sum(); }

Vec unit_vec(int dim, int k, Complex v = Complex(1.0, 0.0)) {
  Vec e = Vec::Zero(dim);
  e[k] = v;
  return e;
}

double lambda_max_hermitian(const Mat& H) {
  Eigen::SelfAdjointEigenSolver<Mat> es(H, Eigen::EigenvaluesOnly);
  return es.eigenvalues().maxCoeff();
}

double sigma_max(const Mat& M) {
  if (M.rows() == 0 || M.cols() == 0) return 0.0;
  return std::sqrt(std::max(0.0, lambda_max_hermitian(Mat(M.adjoint() * M))));
}

Mat hermitian_part(const Mat& A) { return 0.5 * (A + A.adjoint()); }

/// Certified global maximum of an L-Lipschitz function on [lo, hi]
/// (Piyavskii–Shubert). Returns {argmax, value, certified_upper}.
struct PiyavskiiResult {
  double arg;
  double value;
  double upper;
};

template <class F>
PiyavskiiResult piyavskii_max(F&& f, double L, double lo, double hi, double tol,
                              int init_cells = 64, int max_evals = 4000) {
  struct C2 {
    double a, b, fa, fb, bound;
  };
  auto mkcell = [&](double a, double b, double fa, double fb) {
    return C2{a, b, fa, fb, 0.5 * (fa + fb) + 0.5 * L * (b - a)};
  };
  auto cmp = [](const C2& x, const C2& y) { return x.bound < y.bound; };
  std::priority_queue<C2, std::vector<C2>, decltype(cmp)> heap(cmp);

  double best_arg = lo, best_val = -std::numeric_limits<double>::infinity();
  auto eval = [&](double x) {
    double v = f(x);
    if (v > best_val) {
      best_val = v;
      best_arg = x;
    }
    return v;
  };
  double h = (hi - lo) / init_cells;
  double prev = eval(lo);
  int evals = 1;
  for (int i = 1; i <= init_cells; ++i) {
    double x = lo + i * h;
    double fx = eval(x);
    ++evals;
    heap.push(mkcell(x - h, x, prev, fx));
    prev = fx;
  }
  while (!heap.empty() && evals < max_evals) {
    C2 top = heap.top();
    if (top.bound <= best_val + tol) break;
    heap.pop();
    double m = 0.5 * (top.a + top.b);
    double fm = eval(m);
    ++evals;
    heap.push(mkcell(top.a, m, top.fa, fm));
    heap.push(mkcell(m, top.b, fm, top.fb));
  }
  double upper = best_val;
  while (!heap.empty()) {
    upper = std::max(upper, heap.top().bound);
    heap.pop();
  }
  return {best_arg, best_val, std::max(upper, best_val)};
}

// -------------------------------------------------------------------------
// Unit-ball candidate points used by quotient maximization on spaces whose
// extremal structure is not finite (smooth factors inside sums).

struct BallCandidates {
  std::vector<Vec> pts;
  bool exact = false;
};

BallCandidates ball_candidates(const NormedSpace& sp, int smooth_grid) {
  if (sp.field() == Field::Real) {
    try {
      return {sp.ball_extreme_points(), true};
    } catch (const UnsupportedKindError&) {
    }
  }
  if (sp.kind() == SpaceKind::PNorm && sp.p() == 2.0 && sp.field() == Field::Real &&
      sp.dim() == 2) {
    std::vector<Vec> pts;
    pts.reserve(smooth_grid);
    for (int i = 0; i < smooth_grid; ++i) {
      double th = 2.0 * M_PI * i / smooth_grid;
      Vec v(2);
      v[0] = std::cos(th);
      v[1] = std::sin(th);
      pts.push_back(std::move(v));
    }
    return {std::move(pts), false};
  }
  if (sp.kind() == SpaceKind::Sum) {
    BallCandidates a = ball_candidates(sp.left(), smooth_grid);
    BallCandidates b = ball_candidates(sp.right(), smooth_grid);
    BallCandidates out;
    out.exact = a.exact && b.exact;
    if (sp.sum_kind() == SumKind::L1) {
      for (const Vec& v : a.pts) {
        Vec z = Vec::Zero(sp.dim());
        z.head(sp.left().dim()) = v;
        out.pts.push_back(std::move(z));
      }
      for (const Vec& v : b.pts) {
        Vec z = Vec::Zero(sp.dim());
        z.tail(sp.right().dim()) = v;
        out.pts.push_back(std::move(z));
      }
    } else {
      if (a.pts.size() * b.pts.size() > 300000)
        throw GenerationError("ball_candidates: product grid too large");
      for (const Vec& u : a.pts)
        for (const Vec& v : b.pts) {
          Vec z(sp.dim());
          z.head(sp.left().dim()) = u;
          z.tail(sp.right().dim()) = v;
          out.pts.push_back(std::move(z));
        }
    }
    return out;
  }
  // generic fallback: seeded sphere sample
  return {sp.sample_sphere(512, 0x9e3779b9ULL), false};
}

}  // namespace

// ---------------------------------------------------------------------------

LinearOperator::LinearOperator(NormedSpace sp, Mat m) : space(std::move(sp)), matrix(std::move(m)) {
  if (matrix.rows() != space.dim() || matrix.cols() != space.dim())
    throw InputError("LinearOperator: matrix shape does not match the space dimension");
  if (!matrix.allFinite()) throw InputError("LinearOperator: entries must be finite");
  if (space.field() == Field::Real && matrix.imag().cwiseAbs().maxCoeff() > 0.0)
    throw InputError("LinearOperator: complex entries on a real space");
}

AlphaGrid AlphaGrid::for_field(Field f, int complex_count) {
  AlphaGrid g;
  g.field = f;
  if (f == Field::Real) {
    g.values = {Complex(1, 0), Complex(-1, 0)};
  } else {
    g.values.reserve(complex_count);
    for (int k = 0; k < complex_count; ++k) {
      double th = 2.0 * M_PI * k / complex_count;
      g.values.emplace_back(std::cos(th), std::sin(th));
    }
  }
  return g;
}

// ---------------------------------------------------------------------------
// Operator norms

OpNormResult sup_image_norm(const NormedSpace& dom, const NormedSpace& cod, const Mat& M,
                            const Vec& offset, int ascent_starts, uint64_t seed) {
  if (M.cols() != dom.dim() || M.rows() != cod.dim() || offset.size() != cod.dim())
    throw InputError("sup_image_norm: shape mismatch");

  if (dom.field() == Field::Real) {
    try {
      auto ext = dom.ball_extreme_points();
      OpNormResult r;
      for (const Vec& v : ext) {
        double n = cod.norm(Vec(M * v + offset));
        if (n >= r.lower) {
          r.lower = n;
          r.arg = v;
        }
      }
      r.upper = r.lower;
      r.exact = true;
      return r;
    } catch (const UnsupportedKindError&) {
    }
  }

  if (dom.kind() == SpaceKind::PNorm && dom.p() == 2.0 && dom.field() == Field::Real &&
      dom.dim() == 2) {
    double L = cod.l2_upper_const() * sigma_max(M) + 1e-30;
    auto f = [&](double th) {
      Vec u(2);
      u[0] = std::cos(th);
      u[1] = std::sin(th);
      return cod.norm(Vec(M * u + offset));
    };
    auto res = piyavskii_max(f, L, 0.0, 2.0 * M_PI, 1e-10);
    Vec u(2);
    u[0] = std::cos(res.arg);
    u[1] = std::sin(res.arg);
    return {res.value, res.upper, u, false};
  }

  if (dom.kind() == SpaceKind::Sum && dom.sum_kind() == SumKind::L1) {
    const int dl = dom.left().dim();
    OpNormResult a = sup_image_norm(dom.left(), cod, M.leftCols(dl), offset, ascent_starts, seed);
    OpNormResult b = sup_image_norm(dom.right(), cod, M.rightCols(dom.right().dim()), offset,
                                    ascent_starts, splitmix64(seed));
    OpNormResult out;
    out.exact = a.exact && b.exact;
    out.lower = std::max(a.lower, b.lower);
    out.upper = std::max(a.upper, b.upper);
    out.arg = Vec::Zero(dom.dim());
    if (a.lower >= b.lower) out.arg.head(dl) = a.arg;
    else out.arg.tail(dom.right().dim()) = b.arg;
    return out;
  }

  if (dom.kind() == SpaceKind::Sum && dom.sum_kind() == SumKind::Linf) {
    const int dl = dom.left().dim(), dr = dom.right().dim();
    // enumerate the side with a finite extreme list, sweep/recurse the other
    for (int side = 1; side >= 0; --side) {
      const NormedSpace& enumerated = side ? dom.right() : dom.left();
      const NormedSpace& other = side ? dom.left() : dom.right();
      std::vector<Vec> ext;
      try {
        ext = enumerated.ball_extreme_points();
      } catch (const UnsupportedKindError&) {
        continue;
      }
      Mat Me = side ? M.rightCols(dr) : M.leftCols(dl);
      Mat Mo = side ? M.leftCols(dl) : M.rightCols(dr);
      OpNormResult out;
      out.exact = true;
      Vec best_e;
      OpNormResult best_sub;
      for (const Vec& e : ext) {
        OpNormResult sub =
            sup_image_norm(other, cod, Mo, Vec(offset + Me * e), ascent_starts, seed);
        out.exact = out.exact && sub.exact;
        if (sub.lower >= out.lower) {
          out.lower = sub.lower;
          best_e = e;
          best_sub = sub;
        }
        out.upper = std::max(out.upper, sub.upper);
      }
      out.arg = Vec(dom.dim());
      if (side) {
        out.arg.head(dl) = best_sub.arg;
        out.arg.tail(dr) = best_e;
      } else {
        out.arg.head(dl) = best_e;
        out.arg.tail(dr) = best_sub.arg;
      }
      return out;
    }
  }

  // Fallback: multi-start ascent for the lower bound, norm-equivalence upper.
  OpNormResult r;
  r.exact = false;
  r.lower = -1.0;
  auto value = [&](const Vec& x, Vec* renorm) -> double {
    double n = dom.norm(x);
    if (n < 1e-12) return -1.0;
    Vec xu = x / n;
    if (renorm) *renorm = xu;
    return cod.norm(Vec(M * xu + offset));
  };
  std::vector<Vec> starts = dom.sample_sphere(std::max(4, ascent_starts), seed);
  for (int k = 0; k < dom.dim(); ++k) starts.push_back(unit_vec(dom.dim(), k));
  for (Vec& s : starts) {
    Vec cur = s;
    double v = value(cur, &cur);
    if (v > r.lower) {
      r.lower = v;
      r.arg = cur;
    }
  }
  Vec x = r.arg;
  double best = r.lower;
  Rng rng(splitmix64(seed ^ 0xabcd1234ULL));
  double sigma = 0.3;
  for (int i = 0; i < 400 && sigma > 1e-12; ++i) {
    Vec cand = x + sigma * rng.gaussian_vec(dom.dim(), dom.field());
    Vec cu;
    double v = value(cand, &cu);
    if (v > best) {
      best = v;
      x = cu;
      sigma *= 1.25;
    } else {
      sigma *= 0.8;
    }
  }
  r.lower = std::max(0.0, best);
  r.arg = x;
  r.upper = cod.l2_upper_const() * (sigma_max(M) * dom.l2_lower_const() + offset.norm());
  r.upper = std::max(r.upper, r.lower);
  return r;
}

namespace {

// Riesz–Thorin style interpolation bound for square p-norm operators,
// p not in {1, 2, inf}.
double interp_upper(const Mat& M, double p, Field field, int dim) {
  auto norm1 = [&] {
    double m = 0;
    for (int k = 0; k < dim; ++k) m = std::max(m, M.col(k).cwiseAbs().sum());
    return m;
  }();
  auto norminf = [&] {
    double m = 0;
    for (int k = 0; k < dim; ++k) m = std::max(m, M.row(k).cwiseAbs().sum());
    return m;
  }();
  double norm2 = sigma_max(M);
  (void)field;
  if (p < 2.0) {
    double theta = 2.0 * (1.0 - 1.0 / p);
    return std::pow(norm1, 1.0 - theta) * std::pow(norm2, theta);
  }
  double theta = 1.0 - 2.0 / p;
  return std::pow(norm2, 1.0 - theta) * std::pow(norminf, theta);
}

}  // namespace

OpNormResult op_norm_result(const LinearOperator& T) {
  const NormedSpace& sp = T.space;
  const Mat& M = T.matrix;
  const int n = sp.dim();

  if (sp.kind() == SpaceKind::PNorm) {
    if (sp.p() == 1.0) {
      OpNormResult r;
      for (int k = 0; k < n; ++k) {
        double s = M.col(k).cwiseAbs().sum();
        if (s >= r.lower) {
          r.lower = s;
          r.arg = unit_vec(n, k);
        }
      }
      r.upper = r.lower;
      r.exact = true;
      return r;
    }
    if (std::isinf(sp.p())) {
      OpNormResult r;
      for (int k = 0; k < n; ++k) {
        double s = M.row(k).cwiseAbs().sum();
        if (s >= r.lower) {
          r.lower = s;
          Vec x(n);
          for (int j = 0; j < n; ++j) x[j] = conj_sign(M(k, j));
          r.arg = x;
        }
      }
      r.upper = r.lower;
      r.exact = true;
      return r;
    }
    if (sp.p() == 2.0) {
      Eigen::SelfAdjointEigenSolver<Mat> es(M.adjoint() * M);
      int top;
      es.eigenvalues().maxCoeff(&top);
      OpNormResult r;
      r.lower = r.upper = std::sqrt(std::max(0.0, es.eigenvalues()[top]));
      r.arg = es.eigenvectors().col(top);
      r.exact = true;
      return r;
    }
    // general p: ascent lower, interpolation upper
    OpNormResult r = sup_image_norm(sp, sp, M, Vec::Zero(n), 16, 0x51f15eedULL);
    r.upper = std::min(r.upper, interp_upper(M, sp.p(), sp.field(), n));
    r.upper = std::max(r.upper, r.lower);
    r.exact = false;
    return r;
  }
  return sup_image_norm(sp, sp, M, Vec::Zero(n), 16, 0x51f15eedULL);
}

double op_norm(const LinearOperator& T) { return op_norm_result(T).upper; }

// ---------------------------------------------------------------------------
// Limit quotients (||I + t a T|| - 1)/t, evaluated without cancellation.

namespace {

double limit_quotient_l2(const Mat& M, Complex alpha, double t) {
  Mat G = alpha * M + std::conj(alpha) * M.adjoint() + t * (M.adjoint() * M);
  double lam = lambda_max_hermitian(G);
  double s = std::sqrt(std::max(0.0, 1.0 + t * lam));
  return lam / (1.0 + s);
}

double quotient_at(const NormedSpace& sp, const Mat& M, Complex alpha, double t,
                   const Vec& z) {
  return sp.norm_minus_one(z, Vec(alpha * (M * z)), t) / t;
}

}  // namespace

double limit_quotient(const LinearOperator& T, Complex alpha, double t) {
  const NormedSpace& sp = T.space;
  const Mat& M = T.matrix;
  const int n = sp.dim();
  if (sp.kind() == SpaceKind::PNorm) {
    if (sp.p() == 2.0) return limit_quotient_l2(M, alpha, t);
    if (sp.p() == 1.0) {
      double best = -std::numeric_limits<double>::infinity();
      for (int k = 0; k < n; ++k) {
        double off = 0.0;
        for (int j = 0; j < n; ++j)
          if (j != k) off += std::abs(M(j, k));
        double val = mod_diff(Complex(1, 0), t * alpha * M(k, k)) / t + off;
        best = std::max(best, val);
      }
      return best;
    }
    if (std::isinf(sp.p())) {
      double best = -std::numeric_limits<double>::infinity();
      for (int k = 0; k < n; ++k) {
        double off = 0.0;
        for (int j = 0; j < n; ++j)
          if (j != k) off += std::abs(M(k, j));
        double val = mod_diff(Complex(1, 0), t * alpha * M(k, k)) / t + off;
        best = std::max(best, val);
      }
      return best;
    }
    // general p: certified upper via the op-norm bracket (loose, stays sound)
    Mat I = Mat::Identity(n, n);
    LinearOperator A(sp, I + t * alpha * M);
    return (op_norm(A) - 1.0) / t;
  }
  BallCandidates cands = ball_candidates(sp, 2048);
  double best = -std::numeric_limits<double>::infinity();
  for (const Vec& z : cands.pts) best = std::max(best, quotient_at(sp, M, alpha, t, z));
  return best;
}

std::vector<double> default_t_schedule() {
  std::vector<double> t;
  for (int k = 1; k <= 40; ++k) t.push_back(std::ldexp(1.0, -k));
  return t;
}

std::vector<double> radius_upper_limit(const LinearOperator& T,
                                       const std::vector<double>& t_schedule,
                                       const AlphaGrid& alphas) {
  if (t_schedule.empty()) throw InputError("radius_upper_limit: empty schedule");
  for (size_t i = 0; i < t_schedule.size(); ++i) {
    if (!(t_schedule[i] > 0.0))
      throw InputError("radius_upper_limit: schedule entries must be positive");
    if (i > 0 && !(t_schedule[i] < t_schedule[i - 1]))
      throw InputError("radius_upper_limit: schedule must be strictly decreasing");
  }
  std::vector<Complex> grid = alphas.values;
  if (alphas.field == Field::Complex && grid.size() >= 4) {
    // refine alpha near the argmax at the smallest t, then rerun the whole
    // schedule over the enlarged grid so the sequence stays self-consistent
    double t_last = t_schedule.back();
    size_t best_i = 0;
    double best = -std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < grid.size(); ++i) {
      double v = limit_quotient(T, grid[i], t_last);
      if (v > best) {
        best = v;
        best_i = i;
      }
    }
    double th0 = std::arg(grid[best_i]);
    double h = 2.0 * M_PI / static_cast<double>(grid.size());
    auto [tha, va] = golden_max(
        [&](double th) { return limit_quotient(T, Complex(std::cos(th), std::sin(th)), t_last); },
        th0 - h, th0 + h, 1e-10);
    (void)va;
    grid.emplace_back(std::cos(tha), std::sin(tha));
  }
  std::vector<double> out;
  out.reserve(t_schedule.size());
  for (double t : t_schedule) {
    double u = -std::numeric_limits<double>::infinity();
    for (const Complex& a : grid) u = std::max(u, limit_quotient(T, a, t));
    out.push_back(u);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Lower bounds

namespace {

std::vector<Vec> curated_starts(const LinearOperator& T) {
  const NormedSpace& sp = T.space;
  const Mat& M = T.matrix;
  const int n = sp.dim();
  std::vector<Vec> starts;
  if (sp.field() == Field::Real) {
    try {
      starts = sp.ball_extreme_points();
    } catch (const UnsupportedKindError&) {
    }
  }
  if (sp.kind() == SpaceKind::PNorm) {
    if (std::isinf(sp.p())) {
      for (int k = 0; k < n; ++k) {
        Vec x(n);
        for (int j = 0; j < n; ++j) x[j] = conj_sign(M(k, j));
        starts.push_back(std::move(x));
      }
    } else if (sp.p() == 1.0) {
      for (int k = 0; k < n; ++k) starts.push_back(unit_vec(n, k));
    } else if (sp.p() == 2.0) {
      if (sp.field() == Field::Real) {
        Eigen::SelfAdjointEigenSolver<Mat> es(hermitian_part(M));
        for (int k = 0; k < n; ++k) starts.push_back(es.eigenvectors().col(k));
      } else {
        for (int g = 0; g < 32; ++g) {
          double th = 2.0 * M_PI * g / 32;
          Mat H = hermitian_part(Complex(std::cos(th), std::sin(th)) * M);
          Eigen::SelfAdjointEigenSolver<Mat> es(H);
          int top;
          es.eigenvalues().maxCoeff(&top);
          starts.push_back(es.eigenvectors().col(top));
        }
      }
    }
  }
  if (sp.kind() == SpaceKind::Sum) {
    // embedded unit coordinate directions cover block structure
    for (int k = 0; k < n; ++k) starts.push_back(unit_vec(n, k));
  }
  return starts;
}

}  // namespace

std::pair<double, RadiusWitness> radius_lower(const LinearOperator& T, int budget,
                                              uint64_t seed) {
  if (budget < 1) throw InputError("radius_lower: budget must be >= 1");
  const NormedSpace& sp = T.space;
  auto value_unit = [&](const Vec& xu) -> double {
    return sp.duality_set(xu).sup_abs(T.apply(xu));
  };
  auto value = [&](const Vec& x, Vec* renorm) -> double {
    double nx = sp.norm(x);
    if (nx < 1e-10) return -1.0;
    Vec xu = x / nx;
    if (renorm) *renorm = xu;
    return value_unit(xu);
  };

  Vec best_x;
  double best = -1.0;
  auto consider = [&](const Vec& x) {
    Vec xu;
    double v = value(x, &xu);
    if (v > best) {
      best = v;
      best_x = xu;
    }
  };
  for (const Vec& x : curated_starts(T)) consider(x);
  for (const Vec& x : sp.sample_sphere(budget, seed)) consider(x);

  // local refinement around the incumbent
  Rng rng(substream(seed, 0xa11ce));
  Vec x = best_x;
  double sigma = 0.3;
  for (int i = 0; i < 300 && sigma > 1e-12; ++i) {
    Vec cand = x + sigma * rng.gaussian_vec(sp.dim(), sp.field());
    Vec cu;
    double v = value(cand, &cu);
    if (v > best) {
      best = v;
      x = cu;
      sigma *= 1.25;
    } else {
      sigma *= 0.8;
    }
  }
  if (sp.norm(x) > 0) best_x = x;

  RadiusWitness w;
  w.x = best_x;
  w.y = Vec::Zero(sp.dim());
  DualitySet D = sp.duality_set(best_x);
  w.f = D.argmax_functional(T.apply(best_x));
  w.value = apply_func(w.f, T.apply(best_x));
  return {std::abs(w.value), w};
}

// ---------------------------------------------------------------------------
// Radius brackets

namespace {

RadiusBracket radius_l2_closed_form(const LinearOperator& T, double tol) {
  const NormedSpace& sp = T.space;
  const Mat& M = T.matrix;
  RadiusBracket br;
  br.upper_method = UpperMethod::ClosedForm;
  br.tol = tol;
  if (sp.field() == Field::Real) {
    Eigen::SelfAdjointEigenSolver<Mat> es(hermitian_part(M));
    int top = 0;
    double best = -1;
    for (int k = 0; k < sp.dim(); ++k) {
      if (std::abs(es.eigenvalues()[k]) > best) {
        best = std::abs(es.eigenvalues()[k]);
        top = k;
      }
    }
    Vec x = es.eigenvectors().col(top);
    br.witness.x = x;
    br.witness.y = Vec::Zero(sp.dim());
    br.witness.f = x.conjugate();
    br.witness.value = apply_func(br.witness.f, T.apply(x));
    br.lower = std::abs(br.witness.value);
    br.upper = std::max(best, br.lower);
    br.alpha_count = 2;
    br.converged = true;
    return br;
  }
  // theta sweep of the largest eigenvalue of the Hermitian part of
  // e^{i theta} T, with golden refinement of the top grid basins
  const int N = 256;
  auto g = [&](double th) {
    return lambda_max_hermitian(hermitian_part(Complex(std::cos(th), std::sin(th)) * M));
  };
  std::vector<double> vals(N);
  for (int i = 0; i < N; ++i) vals[i] = g(2.0 * M_PI * i / N);
  std::vector<int> basins;
  for (int i = 0; i < N; ++i) {
    if (vals[i] >= vals[(i + N - 1) % N] && vals[i] >= vals[(i + 1) % N]) basins.push_back(i);
  }
  std::sort(basins.begin(), basins.end(), [&](int a, int b) { return vals[a] > vals[b]; });
  if (basins.size() > 3) basins.resize(3);
  double h = 2.0 * M_PI / N;
  double best_th = 0.0, best_val = -std::numeric_limits<double>::infinity();
  for (int i : basins) {
    double th0 = 2.0 * M_PI * i / N;
    auto [tha, va] = golden_max(g, th0 - h, th0 + h, 1e-12);
    if (va > best_val) {
      best_val = va;
      best_th = tha;
    }
  }
  Mat H = hermitian_part(Complex(std::cos(best_th), std::sin(best_th)) * M);
  Eigen::SelfAdjointEigenSolver<Mat> es(H);
  int top;
  es.eigenvalues().maxCoeff(&top);
  Vec x = es.eigenvectors().col(top);
  br.witness.x = x;
  br.witness.y = Vec::Zero(sp.dim());
  br.witness.f = x.conjugate();
  br.witness.value = apply_func(br.witness.f, T.apply(x));
  br.lower = std::abs(br.witness.value);
  br.upper = std::max(best_val, br.lower);
  br.alpha_count = N;
  br.converged = true;
  return br;
}

}  // namespace

RadiusBracket numerical_radius(const LinearOperator& T, double tol, int budget,
                               uint64_t seed) {
  if (!(tol > 0.0)) throw InputError("numerical_radius: tol must be positive");
  const NormedSpace& sp = T.space;
  if (sp.kind() == SpaceKind::PNorm && sp.p() == 2.0) return radius_l2_closed_form(T, tol);

  RadiusBracket br;
  br.tol = tol;
  br.upper_method = UpperMethod::LimitFormula;
  AlphaGrid alphas = AlphaGrid::for_field(sp.field());
  auto schedule = default_t_schedule();
  auto uppers = radius_upper_limit(T, schedule, alphas);
  br.upper = uppers.back();
  br.t_min = schedule.back();
  br.alpha_count = static_cast<int>(alphas.values.size());

  auto [lo, w] = radius_lower(T, budget, seed);
  br.lower = lo;
  br.witness = w;
  if (br.upper - br.lower > tol) {
    auto [lo2, w2] = radius_lower(T, budget * 3, splitmix64(seed));
    if (lo2 > br.lower) {
      br.lower = lo2;
      br.witness = w2;
    }
  }
  br.converged = (br.upper - br.lower) <= tol;
  return br;
}

std::vector<RangePoint> numerical_range_points(const LinearOperator& T, int count,
                                               uint64_t seed) {
  if (count < 1) throw InputError("numerical_range_points: count must be >= 1");
  std::vector<RangePoint> out;
  out.reserve(count);
  for (Vec& x : T.space.sample_sphere(count, seed)) {
    RangePoint p;
    p.x = x;
    DualitySet D = T.space.duality_set(x);
    p.f = D.argmax_functional(T.apply(x));
    p.value = apply_func(p.f, T.apply(x));
    out.push_back(std::move(p));
  }
  return out;
}

double daugavet_gap(const LinearOperator& T, const AlphaGrid& alphas) {
  const NormedSpace& sp = T.space;
  Mat I = Mat::Identity(sp.dim(), sp.dim());
  double tnorm = op_norm(T);
  double best = -std::numeric_limits<double>::infinity();
  for (const Complex& a : alphas.values)
    best = std::max(best, op_norm(LinearOperator(sp, I + a * T.matrix)));
  if (alphas.field == Field::Complex && alphas.values.size() >= 4) {
    double h = 2.0 * M_PI / static_cast<double>(alphas.values.size());
    size_t bi = 0;
    double bv = -std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < alphas.values.size(); ++i) {
      double v = op_norm(LinearOperator(sp, I + alphas.values[i] * T.matrix));
      if (v > bv) {
        bv = v;
        bi = i;
      }
    }
    double th0 = std::arg(alphas.values[bi]);
    auto [tha, va] = golden_max(
        [&](double th) {
          return op_norm(LinearOperator(sp, I + Complex(std::cos(th), std::sin(th)) * T.matrix));
        },
        th0 - h, th0 + h, 1e-10);
    (void)tha;
    best = std::max(best, va);
  }
  return (1.0 + tnorm) - best;
}

}  // namespace numrad
