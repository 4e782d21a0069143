#include "numrad/lipop.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace numrad {

namespace {

constexpr double kContainTolBase = 1e-9;

double row_scale(const RMat& C, const RVec& d, int i, const RVec& x) {
  return 1.0 + std::abs(d[i]) + C.row(i).norm() * x.norm();
}

bool cell_contains(const Cell& c, const RVec& x, double tol_mult = 1.0) {
  for (int i = 0; i < c.C.rows(); ++i) {
    if (c.C.row(i).dot(x) > c.d[i] + tol_mult * kContainTolBase * row_scale(c.C, c.d, i, x))
      return false;
  }
  return true;
}

bool cell_contains_strictly(const Cell& c, const RVec& x, double margin) {
  for (int i = 0; i < c.C.rows(); ++i) {
    double rn = c.C.row(i).norm();
    if (c.C.row(i).dot(x) > c.d[i] - margin * std::max(rn, 1e-12)) return false;
  }
  return true;
}

LinearOperator cell_operator(const NormedSpace& sp, const Cell& c) {
  return LinearOperator(sp, to_cmat(c.A));
}

}  // namespace

PwlOperator::PwlOperator(NormedSpace sp, std::vector<Cell> cs, double box_r,
                         std::vector<RVec> seeds)
    : space(std::move(sp)), cells(std::move(cs)), box_radius(box_r),
      seed_points(std::move(seeds)) {
  if (space.field() != Field::Real)
    throw InputError("PwlOperator: the space must be real");
  if (cells.empty()) throw InputError("PwlOperator: at least one cell is required");
  if (!(box_radius > 0)) throw InputError("PwlOperator: box_radius must be positive");
  const int n = space.dim();
  for (const Cell& c : cells) {
    if (c.C.cols() != n || c.C.rows() != c.d.size() || c.A.rows() != n || c.A.cols() != n ||
        c.b.size() != n)
      throw InputError("PwlOperator: cell shape mismatch");
    if (!c.C.allFinite() || !c.d.allFinite() || !c.A.allFinite() || !c.b.allFinite())
      throw InputError("PwlOperator: cell entries must be finite");
  }
  if (!seed_points.empty() && seed_points.size() != cells.size())
    throw InputError("PwlOperator: seed point list must match the cell list");
}

// ---------------------------------------------------------------------------
// Interior points

std::optional<std::pair<RVec, double>> cell_interior_point(const RMat& C, const RVec& d,
                                                           double box_radius) {
  const int n = static_cast<int>(C.cols());
  const int m = static_cast<int>(C.rows());
  if (m == 0) return std::make_pair(RVec::Zero(n), box_radius);
  RMat Cn(m, n);
  RVec dn(m);
  for (int i = 0; i < m; ++i) {
    double rn = C.row(i).norm();
    if (rn < 1e-14) {
      // 0 <= d[i]: the raw slack is the margin
      Cn.row(i).setZero();
      dn[i] = d[i];
      continue;
    }
    Cn.row(i) = C.row(i) / rn;
    dn[i] = d[i] / rn;
  }
  auto margin = [&](const RVec& x) {
    double mmin = std::numeric_limits<double>::infinity();
    for (int i = 0; i < m; ++i) mmin = std::min(mmin, dn[i] - Cn.row(i).dot(x));
    return mmin;
  };
  // subgradient ascent on the concave margin function, multi-start
  RVec best_x = RVec::Zero(n);
  double best_m = margin(best_x);
  Rng rng(0x7e57ed);
  for (int start = 0; start < 4; ++start) {
    RVec x = start == 0 ? RVec::Zero(n) : RVec(box_radius * 0.25 * rng.gaussian_rvec(n));
    double step = std::max(1.0, box_radius * 0.25);
    for (int it = 0; it < 400; ++it) {
      int worst = 0;
      double mmin = std::numeric_limits<double>::infinity();
      for (int i = 0; i < m; ++i) {
        double mi = dn[i] - Cn.row(i).dot(x);
        if (mi < mmin) {
          mmin = mi;
          worst = i;
        }
      }
      RVec cand = x - step * Cn.row(worst).transpose();
      if (margin(cand) > mmin) {
        x = cand;
      } else {
        step *= 0.7;
        if (step < 1e-12) break;
      }
    }
    if (margin(x) > best_m) {
      best_m = margin(x);
      best_x = x;
    }
  }
  if (best_m <= 0) return std::nullopt;
  return std::make_pair(best_x, best_m);
}

int locate_cell(const PwlOperator& T, const RVec& x) {
  for (size_t i = 0; i < T.cells.size(); ++i) {
    if (cell_contains(T.cells[i], x)) return static_cast<int>(i);
  }
  double bi = x.cwiseAbs().maxCoeff();
  if (bi > T.box_radius) {
    RVec scaled = x * (T.box_radius / bi);
    for (size_t i = 0; i < T.cells.size(); ++i) {
      if (cell_contains(T.cells[i], scaled)) return static_cast<int>(i);
    }
  }
  return -1;
}

RVec eval(const PwlOperator& T, const RVec& x) {
  if (x.size() != T.space.dim()) throw InputError("eval: dimension mismatch");
  int idx = locate_cell(T, x);
  if (idx < 0) throw DomainError("eval: point is outside the covered domain");
  const Cell& c = T.cells[idx];
  return c.A * x + c.b;
}

std::optional<RMat> gateaux_derivative(const PwlOperator& T, const RVec& x) {
  if (x.size() != T.space.dim()) throw InputError("gateaux_derivative: dimension mismatch");
  RVec probe = x;
  double bi = x.cwiseAbs().maxCoeff();
  std::vector<int> containing;
  for (size_t i = 0; i < T.cells.size(); ++i)
    if (cell_contains(T.cells[i], probe)) containing.push_back(static_cast<int>(i));
  if (containing.empty() && bi > T.box_radius) {
    probe = x * (T.box_radius / bi);
    for (size_t i = 0; i < T.cells.size(); ++i)
      if (cell_contains(T.cells[i], probe)) containing.push_back(static_cast<int>(i));
  }
  if (containing.empty()) throw DomainError("gateaux_derivative: point outside the domain");
  const RMat& A0 = T.cells[containing.front()].A;
  for (int idx : containing) {
    if (((T.cells[idx].A - A0).cwiseAbs().maxCoeff()) >
        1e-12 * (1.0 + A0.cwiseAbs().maxCoeff()))
      return std::nullopt;  // non-smooth point
  }
  return A0;
}

// ---------------------------------------------------------------------------
// Validation

ValidationReport validate(const PwlOperator& T) {
  ValidationReport rep;
  const int n = T.space.dim();
  const double R = T.box_radius;

  // full-dimensionality + interior points
  std::vector<RVec> interior(T.cells.size());
  for (size_t i = 0; i < T.cells.size(); ++i) {
    if (!T.seed_points.empty()) {
      interior[i] = T.seed_points[i];
      continue;
    }
    auto ip = cell_interior_point(T.cells[i].C, T.cells[i].d, R);
    if (!ip || ip->second < 1e-9) {
      std::ostringstream os;
      os << "cell " << i << " has no interior point (margin "
         << (ip ? ip->second : -std::numeric_limits<double>::infinity()) << ")";
      rep.failures.push_back({"full-dimensional", os.str(), ip ? ip->first : RVec::Zero(n)});
      interior[i] = RVec::Zero(n);
    } else {
      interior[i] = ip->first;
    }
  }

  // coverage on a deterministic grid plus random points
  {
    std::vector<RVec> pts;
    int per_axis = n <= 3 ? 5 : 3;
    std::vector<int> idx(n, 0);
    while (true) {
      RVec p(n);
      for (int k = 0; k < n; ++k) p[k] = -R + 2.0 * R * idx[k] / (per_axis - 1);
      pts.push_back(p);
      int k = 0;
      while (k < n && ++idx[k] == per_axis) idx[k++] = 0;
      if (k == n) break;
    }
    Rng rng(0xc0ffee);
    for (int i = 0; i < 200; ++i) pts.push_back(RVec(R * rng.gaussian_rvec(n) * 0.45));
    for (const RVec& p : pts) {
      if (p.cwiseAbs().maxCoeff() > R) continue;
      bool covered = false;
      for (const Cell& c : T.cells)
        if (cell_contains(c, p)) {
          covered = true;
          break;
        }
      if (!covered) {
        rep.failures.push_back({"coverage", "point in the box not covered by any cell", p});
        break;
      }
    }
  }

  // pairwise disjoint interiors
  for (size_t i = 0; i < T.cells.size(); ++i) {
    for (size_t j = 0; j < T.cells.size(); ++j) {
      if (i == j) continue;
      if (cell_contains_strictly(T.cells[j], interior[i], 1e-7)) {
        std::ostringstream os;
        os << "interior point of cell " << i << " lies strictly inside cell " << j;
        rep.failures.push_back({"disjoint-interiors", os.str(), interior[i]});
      }
    }
  }

  // continuity across shared facets (algebraic check on the facet hyperplane)
  for (size_t i = 0; i < T.cells.size(); ++i) {
    for (size_t j = i + 1; j < T.cells.size(); ++j) {
      const Cell& a = T.cells[i];
      const Cell& b = T.cells[j];
      for (int ra = 0; ra < a.C.rows(); ++ra) {
        double na = a.C.row(ra).norm();
        if (na < 1e-14) continue;
        RVec ca = a.C.row(ra).transpose() / na;
        double da = a.d[ra] / na;
        for (int rb = 0; rb < b.C.rows(); ++rb) {
          double nb = b.C.row(rb).norm();
          if (nb < 1e-14) continue;
          RVec cb = b.C.row(rb).transpose() / nb;
          double db = b.d[rb] / nb;
          if ((ca + cb).norm() > 1e-9 || std::abs(da + db) > 1e-9) continue;
          // shared hyperplane ca.x = da; parametrize it as x = xh + V y and
          // look for a facet-interior point of each cell in y-coordinates
          RVec xh = ca * da;
          RMat V;
          {
            Eigen::HouseholderQR<RMat> qr(ca);
            RMat Q = qr.householderQ();
            V = Q.rightCols(n - 1);
          }
          // the shared facet is the intersection of both cells with H; it
          // must be (n-1)-dimensional for the continuity requirement to bind
          std::vector<std::pair<RVec, double>> rows;
          auto collect = [&](const Cell& c) {
            for (int r = 0; r < c.C.rows(); ++r) {
              double rn = c.C.row(r).norm();
              if (rn < 1e-14) continue;
              RVec cr = c.C.row(r).transpose() / rn;
              if ((cr - ca).norm() < 1e-9 || (cr + ca).norm() < 1e-9) continue;
              rows.emplace_back(RVec((c.C.row(r) * V).transpose() / rn),
                                (c.d[r] / rn) - cr.dot(xh));
            }
          };
          collect(a);
          collect(b);
          const double B = 4.0 * T.box_radius;
          RMat Cy(static_cast<int>(rows.size()) + 2 * (n - 1), n - 1);
          RVec dy(static_cast<int>(rows.size()) + 2 * (n - 1));
          for (size_t r = 0; r < rows.size(); ++r) {
            Cy.row(static_cast<int>(r)) = rows[r].first.transpose();
            dy[static_cast<int>(r)] = rows[r].second;
          }
          for (int k = 0; k < n - 1; ++k) {
            RVec e = RVec::Zero(n - 1);
            e[k] = 1.0;
            Cy.row(static_cast<int>(rows.size()) + 2 * k) = e.transpose();
            dy[static_cast<int>(rows.size()) + 2 * k] = B;
            Cy.row(static_cast<int>(rows.size()) + 2 * k + 1) = -e.transpose();
            dy[static_cast<int>(rows.size()) + 2 * k + 1] = B;
          }
          auto ip = cell_interior_point(Cy, dy, T.box_radius);
          if (!ip || ip->second < 1e-9) continue;
          RVec facet_pt = xh + V * ip->first;
          RMat dA = a.A - b.A;
          RVec dbv = a.b - b.b;
          double scale = 1.0 + a.A.cwiseAbs().maxCoeff() + b.A.cwiseAbs().maxCoeff();
          RMat proj = RMat::Identity(n, n) - ca * ca.transpose();
          double tangential = (dA * proj).cwiseAbs().maxCoeff();
          double at_point = (dA * facet_pt + dbv).cwiseAbs().maxCoeff();
          if (tangential > 1e-9 * scale || at_point > 1e-9 * scale) {
            std::ostringstream os;
            os << "cells " << i << " and " << j << " disagree across their shared facet";
            rep.failures.push_back({"continuity", os.str(), facet_pt});
          }
        }
      }
    }
  }

  // T(0) = 0 exactly on every cell containing the origin
  {
    RVec zero = RVec::Zero(n);
    for (size_t i = 0; i < T.cells.size(); ++i) {
      if (!cell_contains(T.cells[i], zero)) continue;
      if (T.cells[i].b.cwiseAbs().maxCoeff() != 0.0) {
        std::ostringstream os;
        os << "cell " << i << " contains 0 but has a nonzero offset";
        rep.failures.push_back({"fixes-origin", os.str(), zero});
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Norms and radii

double lip_norm(const PwlOperator& T) {
  double m = 0.0;
  for (const Cell& c : T.cells) m = std::max(m, op_norm(cell_operator(T.space, c)));
  return m;
}

namespace {

std::vector<RVec> cell_interiors(const PwlOperator& T) {
  std::vector<RVec> out(T.cells.size());
  for (size_t i = 0; i < T.cells.size(); ++i) {
    if (!T.seed_points.empty()) {
      out[i] = T.seed_points[i];
    } else {
      auto ip = cell_interior_point(T.cells[i].C, T.cells[i].d, T.box_radius);
      out[i] = ip ? ip->first : RVec::Zero(T.space.dim());
    }
  }
  return out;
}

double cell_margin(const Cell& c, const RVec& x) {
  double m = std::numeric_limits<double>::infinity();
  for (int i = 0; i < c.C.rows(); ++i) {
    double rn = c.C.row(i).norm();
    if (rn < 1e-14) continue;
    m = std::min(m, (c.d[i] - c.C.row(i).dot(x)) / rn);
  }
  return m;
}

}  // namespace

double lip_norm_sampled(const PwlOperator& T, double r, int budget, uint64_t seed) {
  if (!(r > 0)) throw InputError("lip_norm_sampled: r must be positive");
  if (budget < 1) throw InputError("lip_norm_sampled: budget must be >= 1");
  const NormedSpace& sp = T.space;
  const int n = sp.dim();
  auto quotient = [&](const RVec& x, const RVec& y) -> double {
    Vec diff = to_cvec(RVec(x - y));
    double nd = sp.norm(diff);
    if (nd < 1e-12 || nd > r * (1 + 1e-9)) return -1.0;
    return sp.norm(to_cvec(RVec(eval(T, x) - eval(T, y)))) / nd;
  };
  double best = 0.0;
  RVec bx = RVec::Zero(n), by = RVec::Zero(n);
  auto consider = [&](const RVec& x, const RVec& y) {
    double q = quotient(x, y);
    if (q > best) {
      best = q;
      bx = x;
      by = y;
    }
  };

  // per-cell pairs along the cell map's norm-attaining direction
  auto interiors = cell_interiors(T);
  for (size_t i = 0; i < T.cells.size(); ++i) {
    const Cell& c = T.cells[i];
    double m = cell_margin(c, interiors[i]);
    if (m <= 0) continue;
    OpNormResult onr = op_norm_result(cell_operator(sp, c));
    if (onr.arg.size() == 0) continue;
    RVec dir = re(onr.arg);
    double dn2 = dir.norm();
    if (dn2 < 1e-12) continue;
    double eps = std::min(r / std::max(sp.norm(to_cvec(dir)), 1e-12), 0.5 * m / dn2);
    consider(RVec(interiors[i] + eps * dir), interiors[i]);
  }

  // seeded random pairs
  Rng rng(substream(seed, 1));
  for (int k = 0; k < budget; ++k) {
    RVec x = T.box_radius * 0.4 * rng.gaussian_rvec(n);
    RVec d = rng.gaussian_rvec(n);
    double dn = sp.norm(to_cvec(d));
    if (dn < 1e-12) continue;
    double scale = rng.uniform(0.05, 1.0) * r / dn;
    consider(RVec(x + scale * d), x);
  }

  // local refinement of the incumbent pair
  Rng rng2(substream(seed, 2));
  double sigma = 0.2 * r;
  for (int it = 0; it < 400 && sigma > 1e-13; ++it) {
    RVec nx = bx + sigma * rng2.gaussian_rvec(n);
    RVec ny = by + sigma * rng2.gaussian_rvec(n);
    double q = quotient(nx, ny);
    if (q > best) {
      best = q;
      bx = nx;
      by = ny;
      sigma *= 1.2;
    } else {
      sigma *= 0.8;
    }
  }
  return best;
}

RadiusBracket lip_radius(const PwlOperator& T, double tol, int budget, uint64_t seed) {
  if (!(tol > 0)) throw InputError("lip_radius: tol must be positive");
  const NormedSpace& sp = T.space;
  const int n = sp.dim();

  RadiusBracket out;
  out.tol = tol;
  out.upper_method = UpperMethod::CellSup;

  // per-cell brackets give the upper bound and candidate directions
  std::vector<RadiusBracket> cell_brs;
  cell_brs.reserve(T.cells.size());
  double upper = 0.0;
  for (size_t i = 0; i < T.cells.size(); ++i) {
    RadiusBracket br = numerical_radius(cell_operator(sp, T.cells[i]), tol, budget,
                                        substream(seed, 100 + i));
    upper = std::max(upper, br.upper);
    cell_brs.push_back(std::move(br));
  }
  out.upper = upper;

  // two-point numerical-range values: W(T) entries evaluated from eval()
  auto two_point = [&](const RVec& x, const RVec& y) -> double {
    Vec diff = to_cvec(RVec(x - y));
    double nd = sp.norm(diff);
    if (nd < 1e-10) return -1.0;
    Vec tdiff = to_cvec(RVec(eval(T, x) - eval(T, y)));
    return sp.duality_set(diff).sup_abs(tdiff) / (nd * nd);
  };
  double lower = -1.0;
  RVec bx = RVec::Zero(n), by = RVec::Zero(n);
  auto consider = [&](const RVec& x, const RVec& y) {
    double v = two_point(x, y);
    if (v > lower) {
      lower = v;
      bx = x;
      by = y;
    }
  };

  auto interiors = cell_interiors(T);
  for (size_t i = 0; i < T.cells.size(); ++i) {
    double m = cell_margin(T.cells[i], interiors[i]);
    if (m <= 0) continue;
    RVec dir = re(cell_brs[i].witness.x);
    double dn2 = dir.norm();
    if (dn2 < 1e-12) continue;
    double eps = 0.5 * m / dn2;
    consider(RVec(interiors[i] + eps * dir), interiors[i]);
  }
  Rng rng(substream(seed, 3));
  for (int k = 0; k < budget; ++k) {
    RVec x = T.box_radius * 0.4 * rng.gaussian_rvec(n);
    RVec y = x + rng.uniform(0.01, 1.0) * RVec(rng.gaussian_rvec(n));
    consider(x, y);
  }
  Rng rng2(substream(seed, 4));
  double sigma = 0.3;
  for (int it = 0; it < 500 && sigma > 1e-13; ++it) {
    RVec nx = bx + sigma * rng2.gaussian_rvec(n);
    RVec ny = by + sigma * rng2.gaussian_rvec(n);
    double v = two_point(nx, ny);
    if (v > lower) {
      lower = v;
      bx = nx;
      by = ny;
      sigma *= 1.2;
    } else {
      sigma *= 0.8;
    }
  }

  out.lower = std::max(0.0, lower);
  Vec diff = to_cvec(RVec(bx - by));
  out.witness.x = to_cvec(bx);
  out.witness.y = to_cvec(by);
  if (sp.norm(diff) > 1e-10) {
    DualitySet D = sp.duality_set(diff);
    Vec tdiff = to_cvec(RVec(eval(T, bx) - eval(T, by)));
    out.witness.f = D.argmax_functional(tdiff);
    double nd = sp.norm(diff);
    out.witness.value = out.witness.f.cwiseProduct(tdiff).sum() / (nd * nd);
  }
  out.converged = (out.upper - out.lower) <= tol;
  return out;
}

std::vector<double> lip_radius_limit(const PwlOperator& T,
                                     const std::vector<double>& t_schedule,
                                     const AlphaGrid& alphas) {
  if (t_schedule.empty()) throw InputError("lip_radius_limit: empty schedule");
  for (double t : t_schedule)
    if (!(t > 0)) throw InputError("lip_radius_limit: schedule entries must be positive");
  std::vector<LinearOperator> cell_ops;
  cell_ops.reserve(T.cells.size());
  for (const Cell& c : T.cells) cell_ops.push_back(cell_operator(T.space, c));
  std::vector<double> out;
  out.reserve(t_schedule.size());
  for (double t : t_schedule) {
    double u = -std::numeric_limits<double>::infinity();
    for (const Complex& a : alphas.values) {
      for (const LinearOperator& op : cell_ops)
        u = std::max(u, limit_quotient(op, a, t));
    }
    out.push_back(u);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Generator

PwlOperator random_pwl(const NormedSpace& space, int pieces, uint64_t seed) {
  if (space.field() != Field::Real) throw InputError("random_pwl: the space must be real");
  if (pieces < 1) throw InputError("random_pwl: pieces must be >= 1");
  const int n = space.dim();
  int k = 0;
  int count = 1;
  while (count < pieces) {
    ++k;
    count *= 3;
  }
  if (k > n || count > 2000)
    throw GenerationError(
        "random_pwl: cell complex would explode; request fewer pieces for this dimension");

  Rng rng(splitmix64(seed ^ 0x9e3779b97f4a7c15ULL));
  double clamp = rng.uniform(0.4, 1.2);
  RMat A1(k, n), A2(n, k), A0(n, n);
  for (int attempt = 0;; ++attempt) {
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < n; ++j) A1(i, j) = rng.gaussian();
    if (k == 0 || Eigen::FullPivLU<RMat>(A1).rank() == k) break;
    if (attempt > 16) throw GenerationError("random_pwl: could not draw a full-rank layer");
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < k; ++j) A2(i, j) = rng.gaussian();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) A0(i, j) = 0.5 * rng.gaussian();

  std::vector<Cell> cells;
  std::vector<RVec> seeds;
  std::vector<int> pattern(std::max(k, 1), -1);
  int total = 1;
  for (int i = 0; i < k; ++i) total *= 3;
  for (int code = 0; code < total; ++code) {
    int c = code;
    for (int i = 0; i < k; ++i) {
      pattern[i] = (c % 3) - 1;  // -1: below, 0: inside, +1: above
      c /= 3;
    }
    int rows = 0;
    for (int i = 0; i < k; ++i) rows += (pattern[i] == 0) ? 2 : 1;
    Cell cell;
    cell.C = RMat(rows, n);
    cell.d = RVec(rows);
    int r = 0;
    for (int i = 0; i < k; ++i) {
      if (pattern[i] == 0) {
        cell.C.row(r) = A1.row(i);
        cell.d[r++] = clamp;
        cell.C.row(r) = -A1.row(i);
        cell.d[r++] = clamp;
      } else if (pattern[i] == 1) {
        cell.C.row(r) = -A1.row(i);
        cell.d[r++] = -clamp;
      } else {
        cell.C.row(r) = A1.row(i);
        cell.d[r++] = -clamp;
      }
    }
    RMat P = RMat::Zero(k, k);
    RVec s = RVec::Zero(k);
    for (int i = 0; i < k; ++i) {
      if (pattern[i] == 0) P(i, i) = 1.0;
      else s[i] = clamp * pattern[i];
    }
    cell.A = (k > 0 ? RMat(A2 * P * A1) : RMat::Zero(n, n)) + A0;
    cell.b = k > 0 ? RVec(A2 * s) : RVec::Zero(n);

    // interior seed: solve A1 x = 2*clamp*pattern (min-norm)
    RVec seed_pt = RVec::Zero(n);
    if (k > 0) {
      RVec target(k);
      for (int i = 0; i < k; ++i) target[i] = 2.0 * clamp * pattern[i];
      seed_pt = A1.completeOrthogonalDecomposition().solve(target);
    }
    cells.push_back(std::move(cell));
    seeds.push_back(std::move(seed_pt));
  }
  double reach = 1.0;
  for (const RVec& s : seeds) reach = std::max(reach, s.cwiseAbs().maxCoeff());
  return PwlOperator(space, std::move(cells), 2.0 * reach + 2.0, std::move(seeds));
}

}  // namespace numrad
