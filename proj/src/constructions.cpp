#include "numrad/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace numrad {

namespace {

Complex fdot(const Vec& f, const Vec& v) { return f.cwiseProduct(v).sum(); }

Vec scalar1(double v) { return Vec::Constant(1, Complex(v, 0.0)); }

NormedSpace real_line() { return NormedSpace::pnorm(1, 1.0); }

/// Unit functional norming d (u(d) = ||d||); d must be nonzero.
Vec norming_functional(const NormedSpace& sp, const Vec& d) {
  DualitySet D = sp.duality_set(d);
  return D.argmax_functional(d) / D.scale();
}

}  // namespace

NormedSpace l1_power(const NormedSpace& X, int n) {
  if (n < 1) throw InputError("l1_power: n must be >= 1");
  NormedSpace out = X;
  for (int i = 1; i < n; ++i) out = NormedSpace::sum(out, X, SumKind::L1);
  return out;
}

LipschitzCallable make_callable(const LinearOperator& T) {
  LipschitzCallable F;
  F.domain = T.space;
  F.codomain = T.space;
  Mat M = T.matrix;
  F.map = [M](const Vec& x) { return Vec(M * x); };
  F.lip_bound = op_norm(T);
  F.certificate = LipschitzCallable::Certificate::PerCell;
  return F;
}

LipschitzCallable make_callable(const PwlOperator& T) {
  LipschitzCallable F;
  F.domain = T.space;
  F.codomain = T.space;
  PwlOperator copy = T;
  F.map = [copy](const Vec& x) { return to_cvec(eval(copy, re(x))); };
  F.lip_bound = lip_norm(T);
  F.certificate = LipschitzCallable::Certificate::PerCell;
  return F;
}

double max_sampled_quotient(const LipschitzCallable& F, int pairs, uint64_t seed,
                            double radius) {
  Rng rng(seed);
  double best = 0.0;
  for (int i = 0; i < pairs; ++i) {
    Vec x = radius * 0.5 * rng.gaussian_vec(F.domain.dim(), F.domain.field());
    Vec y = x + rng.uniform(1e-3, 1.0) * radius * rng.gaussian_vec(F.domain.dim(), F.domain.field());
    double nd = F.domain.norm(Vec(x - y));
    if (nd < 1e-12) continue;
    best = std::max(best, F.codomain.norm(Vec(F(x) - F(y))) / nd);
  }
  return best;
}

QuotientPair callable_lip_lower(const LipschitzCallable& F, int budget, uint64_t seed,
                                double radius) {
  Rng rng(seed);
  QuotientPair best;
  auto consider = [&](const Vec& x, const Vec& y) {
    double nd = F.domain.norm(Vec(x - y));
    if (nd < 1e-11) return;
    double q = F.codomain.norm(Vec(F(x) - F(y))) / nd;
    if (q > best.quotient) {
      best.quotient = q;
      best.x = x;
      best.y = y;
    }
  };
  for (int i = 0; i < budget; ++i) {
    Vec x = radius * 0.5 * rng.gaussian_vec(F.domain.dim(), F.domain.field());
    Vec y = x + rng.uniform(1e-3, 1.0) * radius * rng.gaussian_vec(F.domain.dim(), F.domain.field());
    consider(x, y);
  }
  // coordinate-direction pairs catch axis-aligned extremals
  for (int k = 0; k < F.domain.dim(); ++k) {
    Vec e = Vec::Zero(F.domain.dim());
    e[k] = 1.0;
    consider(e, Vec(-e));
    consider(e, Vec::Zero(F.domain.dim()));
  }
  Rng rng2(substream(seed, 55));
  double sigma = 0.3 * radius;
  for (int it = 0; it < 500 && sigma > 1e-12; ++it) {
    Vec nx = best.x + sigma * rng2.gaussian_vec(F.domain.dim(), F.domain.field());
    Vec ny = best.y + sigma * rng2.gaussian_vec(F.domain.dim(), F.domain.field());
    double nd = F.domain.norm(Vec(nx - ny));
    double q = nd < 1e-11 ? -1.0 : F.codomain.norm(Vec(F(nx) - F(ny))) / nd;
    if (q > best.quotient) {
      best.quotient = q;
      best.x = nx;
      best.y = ny;
      sigma *= 1.2;
    } else {
      sigma *= 0.8;
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// Extensions

LipschitzCallable mcshane_extend(const Vec& x1, const Vec& x2, const NormedSpace& space) {
  if (x1.size() != space.dim() || x2.size() != space.dim())
    throw InputError("mcshane_extend: dimension mismatch");
  if (space.norm(Vec(x1 - x2)) < 1e-14) throw InputError("mcshane_extend: x1 must differ from x2");
  const double a = space.norm(Vec(x1 - x2));
  NormedSpace sp = space;
  Vec p1 = x1, d = x2 - x1;
  LipschitzCallable F;
  F.domain = space;
  F.codomain = real_line();
  F.lip_bound = 1.0;
  F.map = [sp, p1, d, a](const Vec& x) {
    auto obj = [&](double t) { return t * a + sp.norm(Vec(x - p1 - t * d)); };
    auto [tmin, val] = golden_min(obj, 0.0, 1.0, 1e-10);
    (void)tmin;
    return scalar1(val);
  };
  return F;
}

LipschitzCallable segment_extension(const Vec& x1, const Vec& x2, const Vec& y1,
                                    const Vec& y2, double M, const NormedSpace& domain,
                                    const NormedSpace& codomain) {
  if (!(M > 0)) throw InputError("segment_extension: M must be positive");
  double a = domain.norm(Vec(x1 - x2));
  double dy = codomain.norm(Vec(y1 - y2));
  if (dy > M * a * (1.0 + 1e-9))
    throw InputError(
        "segment_extension: requires ||y1 - y2|| <= M ||x1 - x2|| (the extension "
        "hypothesis)");
  LipschitzCallable f = mcshane_extend(x1, x2, domain);
  Vec w1 = y1, w2 = y2;
  LipschitzCallable F;
  F.domain = domain;
  F.codomain = codomain;
  F.lip_bound = M;
  F.map = [f, w1, w2, a](const Vec& x) {
    double t = f(x)[0].real();
    t = std::min(t, a);  // pi_a clamp; f is nonnegative
    double r = t / a;
    return Vec(r * w2 + (1.0 - r) * w1);
  };
  return F;
}

// ---------------------------------------------------------------------------
// Midpoint join

namespace {

struct Decomposition {
  Vec x1, x2;
  double lambda;
  double dist;
};

std::optional<Decomposition> decompose(const Vec& z0, const SetDescriptor& A, double eps,
                                       const NormedSpace& space, int budget, uint64_t seed) {
  const int n = space.dim();
  switch (A.kind) {
    case SetDescriptor::Kind::Sphere: {
      return Decomposition{z0, z0, 0.0, 0.0};  // z0 is itself a sphere point
    }
    case SetDescriptor::Kind::SphereCrossBall: {
      const int dx = A.split_dim;
      if (dx < 1 || dx >= n) throw InputError("midpoint_join: bad split dimension");
      // the space must be an linf sum split at dx
      if (space.kind() != SpaceKind::Sum || space.sum_kind() != SumKind::Linf ||
          space.left().dim() != dx)
        throw InputError("midpoint_join: sphere-cross-ball needs an linf sum domain");
      Vec a = z0.head(dx), b = z0.tail(n - dx);
      double na = space.left().norm(a);
      Vec dir;
      if (na > 1e-13) {
        dir = a / na;
      } else {
        dir = Vec::Zero(dx);
        dir[0] = 1.0;
      }
      // a = (1-lambda) * dir*? decomposition along the line through a:
      // a = lambda (-dir) + (1 - lambda) dir with lambda = (1 - ||a||)/2
      double lambda = 0.5 * (1.0 - na);
      Vec u1(n), u2(n);
      u1.head(dx) = -dir;
      u1.tail(n - dx) = b;
      u2.head(dx) = dir;
      u2.tail(n - dx) = b;
      Vec combo = lambda * u1 + (1.0 - lambda) * u2;
      double dist = space.norm(Vec(z0 - combo));
      return Decomposition{u1, u2, lambda, dist};
    }
    case SetDescriptor::Kind::VertexList:
    case SetDescriptor::Kind::SliceUnion: {
      std::vector<Vec> members;
      if (A.kind == SetDescriptor::Kind::VertexList) {
        members = A.vertices;
      } else {
        // sampled slice members and their negatives
        for (const Vec& v : space.sample_sphere(std::max(32, budget / 8), seed)) {
          Complex val = fdot(A.ystar, v);
          if (val.real() > 1.0 - A.slice_eps) members.push_back(v);
          if ((-val).real() > 1.0 - A.slice_eps) members.push_back(Vec(-v));
        }
        if (fdot(A.ystar, z0).real() > 1.0 - A.slice_eps) members.push_back(z0);
        if (fdot(A.ystar, Vec(-z0)).real() > 1.0 - A.slice_eps) members.push_back(Vec(-z0));
      }
      if (members.empty()) return std::nullopt;
      std::optional<Decomposition> best;
      long long checked = 0;
      for (size_t i = 0; i < members.size(); ++i) {
        for (size_t j = 0; j < members.size(); ++j) {
          if (++checked > budget * 16LL) break;
          auto obj = [&](double lam) {
            return space.norm(Vec(z0 - (lam * members[i] + (1.0 - lam) * members[j])));
          };
          auto [lam, dist] = golden_min(obj, 0.0, 0.5, 1e-10);
          if (!best || dist < best->dist)
            best = Decomposition{members[i], members[j], lam, dist};
        }
      }
      if (best && best->dist < eps) return best;
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<MidpointJoin> midpoint_join(const Vec& x, const Vec& y, const SetDescriptor& A,
                                          double eps, const NormedSpace& space, int budget,
                                          uint64_t seed) {
  double gap = space.norm(Vec(x - y));
  if (gap < 1e-14) throw InputError("midpoint_join: x must differ from y");
  Vec z0 = (x - y) / gap;
  auto dec = decompose(z0, A, eps, space, budget, seed);
  if (!dec) return std::nullopt;
  MidpointJoin out;
  out.x1 = dec->x1;
  out.x2 = dec->x2;
  out.lambda = dec->lambda;
  out.decomposition_dist = dec->dist;
  out.z = x - (gap / 2.0) * dec->x2;
  // re-verify the midpoint estimate before returning
  double zy = space.norm(Vec(out.z - y));
  if (zy > (1.0 + std::max(eps, dec->dist)) * gap / 2.0 + 1e-9) return std::nullopt;
  return out;
}

// ---------------------------------------------------------------------------
// Lush witnesses

namespace {

std::optional<LushWitness> lush_witness_sup_norm(const NormedSpace& space, const Vec& x,
                                                 const Vec& y, double eps) {
  const int n = space.dim();
  int k = 0;
  double mx = 0;
  for (int i = 0; i < n; ++i) {
    if (std::abs(y[i]) > mx) {
      mx = std::abs(y[i]);
      k = i;
    }
  }
  Complex s = unit_phase(y[k]);
  LushWitness w;
  w.eps = eps;
  w.ystar = Vec::Zero(n);
  w.ystar[k] = conj_sign(y[k]);
  if (space.field() == Field::Real) {
    double wk = (x[k] * std::conj(s)).real();
    w.lambda = 0.5 * (1.0 + wk);
    w.alpha1 = Complex(1, 0);
    w.alpha2 = Complex(-1, 0);
    w.x1 = x;
    w.x1[k] = s;
    w.x2 = -x;
    w.x2[k] = s;
  } else {
    Complex wk = x[k] * std::conj(s);
    double r = std::abs(wk);
    Complex phase = unit_phase(wk);
    double q = std::sqrt(std::max(0.0, 1.0 - r * r));
    w.lambda = 0.5;
    w.alpha1 = phase * Complex(r, q);
    w.alpha2 = phase * Complex(r, -q);
    w.x1 = Vec(n);
    w.x2 = Vec(n);
    for (int j = 0; j < n; ++j) {
      if (j == k) {
        w.x1[j] = s;
        w.x2[j] = s;
      } else {
        w.x1[j] = x[j] * std::conj(w.alpha1);
        w.x2[j] = x[j] * std::conj(w.alpha2);
      }
    }
  }
  Vec combo = w.lambda * w.alpha1 * w.x1 + (1.0 - w.lambda) * w.alpha2 * w.x2;
  w.achieved_distance = space.norm(Vec(x - combo));
  if (w.achieved_distance >= eps) return std::nullopt;
  return w;
}

std::optional<LushWitness> lush_witness_l1(const NormedSpace& space, const Vec& x,
                                           const Vec& y, double eps) {
  const int n = space.dim();
  LushWitness w;
  w.eps = eps;
  w.ystar = Vec(n);
  for (int i = 0; i < n; ++i) {
    double yi = y[i].real();
    double xi = x[i].real();
    w.ystar[i] = yi != 0.0 ? (yi > 0 ? 1.0 : -1.0) : (xi >= 0 ? 1.0 : -1.0);
  }
  double lam = 0.0;
  Vec g1 = Vec::Zero(n), g2 = Vec::Zero(n);
  for (int i = 0; i < n; ++i) {
    double xi = x[i].real();
    if (xi * w.ystar[i].real() >= 0) {
      g1[i] = xi;
      lam += std::abs(xi);
    } else {
      g2[i] = xi;
    }
  }
  w.lambda = lam;
  w.alpha1 = Complex(1, 0);
  w.alpha2 = Complex(-1, 0);
  if (lam > 1e-12) {
    w.x1 = g1 / lam;
  } else {
    w.x1 = Vec::Zero(n);
    w.x1[0] = w.ystar[0];
  }
  if (1.0 - lam > 1e-12) {
    w.x2 = -g2 / (1.0 - lam);
  } else {
    w.x2 = Vec::Zero(n);
    w.x2[0] = w.ystar[0];
  }
  Vec combo = w.lambda * w.alpha1 * w.x1 + (1.0 - w.lambda) * w.alpha2 * w.x2;
  w.achieved_distance = space.norm(Vec(x - combo));
  if (w.achieved_distance >= eps) return std::nullopt;
  return w;
}

std::optional<LushWitness> lush_witness_search(const NormedSpace& space, const Vec& x,
                                               const Vec& y, double eps, int budget,
                                               uint64_t seed) {
  // candidate slice functionals: extremes of the duality face of y, then
  // sampled norming functionals whose slice still contains y
  std::vector<Vec> ystars;
  {
    DualitySet D = space.duality_set(y);
    for (const Vec& f : D.sample_members(1)) ystars.push_back(f);  // ||y|| = 1: unit functionals
  }
  for (const Vec& w : space.sample_sphere(std::max(16, budget / 64), substream(seed, 7))) {
    Vec f = norming_functional(space, w);
    if (fdot(f, y).real() > 1.0 - eps) ystars.push_back(f);
  }
  std::optional<LushWitness> best;
  int alpha_steps = space.field() == Field::Real ? 2 : 8;
  auto alpha_at = [&](int a) {
    if (space.field() == Field::Real) return Complex(a == 0 ? 1.0 : -1.0, 0.0);
    double th = 2.0 * M_PI * a / alpha_steps;
    return Complex(std::cos(th), std::sin(th));
  };
  for (const Vec& ystar : ystars) {
    // members of the slice among candidates
    std::vector<Vec> members;
    if (space.field() == Field::Real) {
      try {
        for (const Vec& v : space.ball_extreme_points())
          if (fdot(ystar, v).real() > 1.0 - eps) members.push_back(v);
      } catch (const UnsupportedKindError&) {
      }
    }
    for (const Vec& v : space.sample_sphere(std::max(24, budget / 32), substream(seed, 11)))
      if (fdot(ystar, v).real() > 1.0 - eps) members.push_back(v);
    if (fdot(ystar, y).real() > 1.0 - eps) members.push_back(y);
    if (members.empty()) continue;
    for (size_t i = 0; i < members.size(); ++i) {
      for (size_t j = 0; j < members.size(); ++j) {
        for (int a1 = 0; a1 < alpha_steps; ++a1) {
          for (int a2 = 0; a2 < alpha_steps; ++a2) {
            Complex al1 = alpha_at(a1), al2 = alpha_at(a2);
            auto obj = [&](double lam) {
              return space.norm(
                  Vec(x - (lam * al1 * members[i] + (1.0 - lam) * al2 * members[j])));
            };
            auto [lam, dist] = golden_min(obj, 0.0, 1.0, 1e-9);
            if (!best || dist < best->achieved_distance) {
              LushWitness w;
              w.eps = eps;
              w.ystar = ystar;
              w.x1 = members[i];
              w.x2 = members[j];
              w.lambda = lam;
              w.alpha1 = al1;
              w.alpha2 = al2;
              w.achieved_distance = dist;
              best = w;
            }
          }
        }
      }
    }
  }
  if (best && best->achieved_distance < eps) return best;
  return std::nullopt;
}

}  // namespace

std::optional<LushWitness> lush_witness(const NormedSpace& space, const Vec& x, const Vec& y,
                                        double eps, int budget, uint64_t seed) {
  if (std::abs(space.norm(x) - 1.0) > 1e-9 || std::abs(space.norm(y) - 1.0) > 1e-9)
    throw InputError("lush_witness: x and y must be unit vectors");
  if (space.kind() == SpaceKind::PNorm && std::isinf(space.p()))
    return lush_witness_sup_norm(space, x, y, eps);
  if (space.kind() == SpaceKind::PNorm && space.p() == 1.0 && space.field() == Field::Real)
    return lush_witness_l1(space, x, y, eps);
  return lush_witness_search(space, x, y, eps, budget, seed);
}

// ---------------------------------------------------------------------------
// Sup-norm boost

CkBoostResult ck_witness_boost(const LipschitzCallable& T, double lip_norm_T, const Vec& x,
                               const Vec& y, double eps) {
  const NormedSpace& sp = T.domain;
  if (sp.field() != Field::Real || sp.kind() != SpaceKind::PNorm || !std::isinf(sp.p()))
    throw InputError("ck_witness_boost: the domain must be a real sup-norm space");
  const int n = sp.dim();
  Vec u = x - y;
  double nu = sp.norm(u);
  if (nu < 1e-13) throw InputError("ck_witness_boost: x must differ from y");
  Vec diff = T(x) - T(y);
  double target = (1.0 - eps) * lip_norm_T * nu;
  if (sp.norm(diff) <= target)
    throw InputError("ck_witness_boost: the pair does not attain (1-eps) of the norm");
  int s = -1;
  double bs = target;
  for (int i = 0; i < n; ++i) {
    if (std::abs(u[i]) <= 1e-12 * nu) continue;
    if (std::abs(diff[i]) > bs) {
      bs = std::abs(diff[i]);
      s = i;
    }
  }
  if (s < 0)
    throw InputError(
        "ck_witness_boost: no coordinate both attains (1-eps) of the norm and separates x "
        "from y");
  Vec v(n);
  for (int i = 0; i < n; ++i) v[i] = -u[i] / std::max(std::abs(u[i]), std::abs(u[s]));
  CkBoostResult out;
  out.s = s;
  out.g = Vec::Zero(n);
  out.g[s] = std::conj(v[s]);  // g in D(v): g(v) = |v_s|^2 = 1
  out.z = x + (nu / 2.0) * v;
  double zx = sp.norm(Vec(out.z - x));
  double zy = sp.norm(Vec(out.z - y));
  if (std::abs(zx - nu / 2.0) > 1e-9 * nu || std::abs(zy - nu / 2.0) > 1e-9 * nu)
    throw InputError("ck_witness_boost: midpoint equalities failed on re-evaluation");
  Vec boost = T(out.z) - T(x);
  out.value = std::abs(fdot(out.g, boost)) / zx;
  return out;
}

// ---------------------------------------------------------------------------
// Sum alignment and compressions

AlignedPair linf_witness_align(const LipschitzCallable& T, double eps, int budget,
                               uint64_t seed) {
  const NormedSpace& Z = T.domain;
  if (Z.kind() != SpaceKind::Sum || Z.sum_kind() != SumKind::Linf)
    throw InputError("linf_witness_align: the domain must be an linf sum");
  const int dx = Z.left().dim();

  AlignedPair best;
  QuotientPair qp = callable_lip_lower(T, budget, seed);
  if (qp.quotient <= 0) return best;
  // with a per-cell certificate the bound is the computed norm; otherwise the
  // searched quotient is the best available reference
  double lref = T.certificate == LipschitzCallable::Certificate::PerCell
                    ? T.lip_bound
                    : std::max(qp.quotient, 0.0);

  Vec u = qp.x, w = qp.y;
  for (int round = 0; round < 40; ++round) {
    // keep the gap small (the norm is attained locally), then midpoint-align
    while (Z.norm(Vec(u - w)) > 1.0) {
      Vec mid = 0.5 * (u + w);
      double qa = Z.norm(Vec(u - mid)) < 1e-13
                      ? -1.0
                      : T.codomain.norm(Vec(T(u) - T(mid))) / Z.norm(Vec(u - mid));
      double qb = Z.norm(Vec(mid - w)) < 1e-13
                      ? -1.0
                      : T.codomain.norm(Vec(T(mid) - T(w))) / Z.norm(Vec(mid - w));
      if (qa >= qb) w = mid;
      else u = mid;
    }
    auto mj = midpoint_join(u, w, SetDescriptor::sphere_cross_ball(dx), eps, Z, budget,
                            substream(seed, 1000 + round));
    if (mj) {
      Vec v = mj->z;
      double gap = Z.norm(Vec(u - v));
      double xgap = Z.left().norm(Vec(u.head(dx) - v.head(dx)));
      double q = gap < 1e-13 ? -1.0 : T.codomain.norm(Vec(T(u) - T(v))) / gap;
      if (q > best.quotient) {
        best.u = u;
        best.v = v;
        best.quotient = q;
      }
      if (q >= (lref - eps) * (1.0 - 1e-9) && std::abs(gap - xgap) <= 1e-9 * (1.0 + gap)) {
        best.found = true;
        return best;
      }
    }
    // try again from a fresh high-quotient pair
    QuotientPair nq = callable_lip_lower(T, budget, substream(seed, 2000 + round));
    lref = std::max(lref, nq.quotient);
    u = nq.x;
    w = nq.y;
  }
  return best;
}

LipschitzCallable linf_sum_compress(const LipschitzCallable& T, const AlignedPair& pair) {
  const NormedSpace& Z = T.domain;
  if (Z.kind() != SpaceKind::Sum || Z.sum_kind() != SumKind::Linf)
    throw InputError("linf_sum_compress: the domain must be an linf sum");
  const int dx = Z.left().dim(), dy = Z.right().dim();
  Vec x1 = pair.u.head(dx), y1 = pair.u.tail(dy);
  Vec x2 = pair.v.head(dx), y2 = pair.v.tail(dy);
  double xgap = Z.left().norm(Vec(x1 - x2));
  if (xgap < 1e-13) throw InputError("linf_sum_compress: the pair must separate in X");
  if (Z.right().norm(Vec(y1 - y2)) > xgap * (1.0 + 1e-9))
    throw InputError("linf_sum_compress: the pair gap must be carried by the X component");
  LipschitzCallable F = segment_extension(x1, x2, y1, y2, 1.0, Z.left(), Z.right());
  NormedSpace X = Z.left();
  LipschitzCallable T_copy = T;
  Vec zero_im;
  {
    Vec z0(Z.dim());
    z0.head(dx) = Vec::Zero(dx);
    z0.tail(dy) = F(Vec::Zero(dx));
    zero_im = T_copy(z0).head(dx);
  }
  LipschitzCallable S;
  S.domain = X;
  S.codomain = X;
  S.lip_bound = T.lip_bound;
  const int dxc = dx, dyc = dy;
  Vec base = zero_im;
  S.map = [T_copy, F, dxc, dyc, base](const Vec& a) {
    Vec z(dxc + dyc);
    z.head(dxc) = a;
    z.tail(dyc) = F(a);
    return Vec(T_copy(z).head(dxc) - base);
  };
  return S;
}

LipschitzCallable l1_sum_compress(const LipschitzCallable& T, const Vec& z1, const Vec& z2,
                                  double eps) {
  const NormedSpace& Z = T.domain;
  if (Z.kind() != SpaceKind::Sum || Z.sum_kind() != SumKind::L1)
    throw InputError("l1_sum_compress: the domain must be an l1 sum");
  const int dx = Z.left().dim(), dy = Z.right().dim();
  const NormedSpace& X = Z.left();
  const NormedSpace& Y = Z.right();
  Vec x1 = z1.head(dx), y1 = z1.tail(dy);
  Vec x2 = z2.head(dx), y2 = z2.tail(dy);
  double xgap = X.norm(Vec(x1 - x2));
  double lref = T.lip_bound;

  LipschitzCallable Tc = T;
  auto at = [Tc, dx, dy](const Vec& xa, const Vec& ya) {
    Vec z(dx + dy);
    z.head(dx) = xa;
    z.tail(dy) = ya;
    return Tc(z);
  };
  if (xgap < 1e-13 ||
      T.codomain.norm(Vec(at(x1, y2) - at(x2, y2))) < (1.0 - eps) * lref * xgap) {
    double ygap = Y.norm(Vec(y1 - y2));
    if (ygap > 1e-13 &&
        T.codomain.norm(Vec(at(x1, y1) - at(x1, y2))) >= (1.0 - eps) * lref * ygap)
      throw InputError(
          "l1_sum_compress: the witness achieves only the Y branch; invoke with the roles "
          "swapped");
    throw InputError("l1_sum_compress: the witness achieves neither branch; find a better pair");
  }

  // T_{y2}(x) = T(x, y2) - T(0, y2) = (A x, B x)
  Vec t0 = at(Vec::Zero(dx), y2);
  auto A = [=](const Vec& xx) { return Vec(at(xx, y2).head(dx) - t0.head(dx)); };
  auto B = [=](const Vec& xx) { return Vec(at(xx, y2).tail(dy) - t0.tail(dy)); };

  Vec dA = A(x1) - A(x2);
  double ndA = X.norm(dA);
  if (ndA < 1e-12)
    throw InputError(
        "l1_sum_compress: degenerate witness (the X increment of the compression vanishes); "
        "the construction has no canonical direction");
  Vec x0 = dA / ndA;
  Vec dB = B(x1) - B(x2);
  Vec ystar;
  if (Y.norm(dB) > 1e-13) {
    ystar = norming_functional(Y, dB);
  } else {
    Vec e1 = Vec::Zero(dy);
    e1[0] = 1.0;
    ystar = norming_functional(Y, e1);
  }
  LipschitzCallable S;
  S.domain = X;
  S.codomain = X;
  S.lip_bound = T.lip_bound;
  S.map = [A, B, ystar, x0](const Vec& xx) { return Vec(A(xx) + fdot(ystar, B(xx)) * x0); };
  return S;
}

// ---------------------------------------------------------------------------
// Diagonal lift

PwlOperator diagonal_lift(const PwlOperator& S, int n) {
  if (n < 1) throw InputError("diagonal_lift: n must be >= 1");
  const int d = S.space.dim();
  size_t total = 1;
  for (int i = 0; i < n; ++i) {
    total *= S.cells.size();
    if (total > 20000) throw GenerationError("diagonal_lift: product cell complex too large");
  }
  NormedSpace Zn = l1_power(S.space, n);
  std::vector<Cell> cells;
  std::vector<RVec> seeds;
  bool have_seeds = !S.seed_points.empty();
  std::vector<size_t> idx(n, 0);
  while (true) {
    int rows = 0;
    for (int i = 0; i < n; ++i) rows += static_cast<int>(S.cells[idx[i]].C.rows());
    Cell c;
    c.C = RMat::Zero(rows, n * d);
    c.d = RVec(rows);
    c.A = RMat::Zero(n * d, n * d);
    c.b = RVec(n * d);
    RVec seed_pt(n * d);
    int r0 = 0;
    for (int i = 0; i < n; ++i) {
      const Cell& ci = S.cells[idx[i]];
      c.C.block(r0, i * d, ci.C.rows(), d) = ci.C;
      c.d.segment(r0, ci.C.rows()) = ci.d;
      r0 += static_cast<int>(ci.C.rows());
      c.A.block(i * d, i * d, d, d) = ci.A;
      c.b.segment(i * d, d) = ci.b;
      if (have_seeds) seed_pt.segment(i * d, d) = S.seed_points[idx[i]];
    }
    cells.push_back(std::move(c));
    if (have_seeds) seeds.push_back(std::move(seed_pt));
    int k = 0;
    while (k < n && ++idx[k] == S.cells.size()) idx[k++] = 0;
    if (k == n) break;
  }
  return PwlOperator(Zn, std::move(cells), S.box_radius, std::move(seeds));
}

}  // namespace numrad
