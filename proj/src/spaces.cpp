#include "numrad/spaces.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace numrad {

namespace {

// Functional application is bilinear; conjugation is baked into coefficients.
Complex fdot(const Vec& f, const Vec& v) { return f.cwiseProduct(v).sum(); }

void check_dim(int expect, Eigen::Index got, const char* what) {
  if (got != expect) {
    std::ostringstream os;
    os << what << ": dimension mismatch (expected " << expect << ", got " << got << ")";
    throw InputError(os.str());
  }
}

RVec real_part_checked(const Vec& x, const char* what) {
  double scale = 1.0 + x.cwiseAbs().maxCoeff();
  if (x.imag().cwiseAbs().maxCoeff() > 1e-9 * scale) {
    throw InputError(std::string(what) + ": complex input on a real-only space kind");
  }
  return x.real();
}

constexpr double kAttainTol = 1e-12;

}  // namespace

// ---------------------------------------------------------------------------
// DualitySet

double DualitySet::sup_abs(const Vec& v) const {
  check_dim(static_cast<int>(base_.size()), v.size(), "duality_sup_abs");
  double best = 0.0;
  for (const FaceCell& cell : cells_) {
    double free_part = 0.0;
    for (const FaceFreeGroup& g : cell.free) {
      free_part += g.bound * g.space->norm(Vec(v.segment(g.offset, g.space->dim())));
    }
    if (cell.choices.empty()) {
      best = std::max(best, std::abs(fdot(cell.fixed, v)) + free_part);
    } else {
      for (const Vec& c : cell.choices) {
        double val = std::abs(fdot(cell.fixed + c, v)) + free_part;
        best = std::max(best, val);
      }
    }
  }
  return scale_ * best;
}

Vec DualitySet::argmax_functional(const Vec& v) const {
  check_dim(static_cast<int>(base_.size()), v.size(), "duality argmax");
  double best = -1.0;
  Vec best_f;
  for (const FaceCell& cell : cells_) {
    std::vector<Vec> choices = cell.choices;
    if (choices.empty()) choices.push_back(Vec::Zero(base_.size()));
    for (const Vec& c : choices) {
      Vec f = cell.fixed + c;
      Complex base_val = fdot(f, v);
      Complex phase = unit_phase(base_val);
      double val = std::abs(base_val);
      for (const FaceFreeGroup& g : cell.free) {
        Vec block = v.segment(g.offset, g.space->dim());
        double bn = g.space->norm(block);
        if (bn > 0.0) {
          // unit functional norming the block, phase-aligned with the fixed part
          DualitySet sub = g.space->duality_set(block);
          Vec gf = sub.argmax_functional(block) / (sub.scale() * sub.scale());
          f.segment(g.offset, g.space->dim()) = g.bound * phase * gf * bn;
          val += g.bound * bn;
        }
      }
      if (val > best) {
        best = val;
        best_f = f;
      }
    }
  }
  return scale_ * best_f;
}

std::vector<Vec> DualitySet::sample_members(int free_steps) const {
  std::vector<Vec> out;
  const int n = static_cast<int>(base_.size());
  for (const FaceCell& cell : cells_) {
    std::vector<Vec> choices = cell.choices;
    if (choices.empty()) choices.push_back(Vec::Zero(n));
    for (const Vec& c : choices) {
      std::vector<Vec> partial{cell.fixed + c};
      for (const FaceFreeGroup& g : cell.free) {
        std::vector<Vec> next;
        Vec e1 = Vec::Zero(g.space->dim());
        e1[0] = 1.0;
        const double dn = g.space->dual_norm(e1);
        for (const Vec& f : partial) {
          for (int s = -free_steps; s <= free_steps; ++s) {
            Vec f2 = f;
            double frac = free_steps == 0 ? 0.0 : static_cast<double>(s) / free_steps;
            // extreme along the first block coordinate of the group
            f2[g.offset] += g.bound * frac / dn;
            next.push_back(f2);
          }
        }
        partial = next;
      }
      for (Vec& f : partial) out.push_back(scale_ * f);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// NormedSpace factories

NormedSpace NormedSpace::pnorm(int dim, double p, Field field) {
  if (dim < 1) throw InputError("pnorm: dim must be >= 1");
  if (!(p >= 1.0)) throw InputError("pnorm: p must be in [1, inf]");
  NormedSpace s;
  s.kind_ = SpaceKind::PNorm;
  s.field_ = field;
  s.dim_ = dim;
  s.p_ = p;
  return s;
}

NormedSpace NormedSpace::polyhedral(std::vector<RVec> ball_vertices,
                                    std::vector<RVec> facet_functionals) {
  if (ball_vertices.empty() || facet_functionals.empty())
    throw InputError("polyhedral: vertex and facet lists must be nonempty");
  const int n = static_cast<int>(ball_vertices.front().size());
  for (const RVec& v : ball_vertices) check_dim(n, v.size(), "polyhedral vertex");
  for (const RVec& f : facet_functionals) check_dim(n, f.size(), "polyhedral facet");

  auto contains_neg = [n](const std::vector<RVec>& list, const RVec& v) {
    for (const RVec& u : list)
      if ((u + v).cwiseAbs().maxCoeff() <= 1e-12 * (1.0 + v.cwiseAbs().maxCoeff())) return true;
    (void)n;
    return false;
  };
  for (const RVec& v : ball_vertices)
    if (!contains_neg(ball_vertices, v))
      throw InputError("polyhedral: vertex list is not symmetric");
  for (const RVec& f : facet_functionals)
    if (!contains_neg(facet_functionals, f))
      throw InputError("polyhedral: facet list is not symmetric");

  for (const RVec& v : ball_vertices) {
    double m = 0.0;
    for (const RVec& f : facet_functionals) m = std::max(m, std::abs(f.dot(v)));
    if (std::abs(m - 1.0) > 1e-9)
      throw InputError("polyhedral: vertex does not sit on the unit sphere of the facet norm");
  }

  RMat F(static_cast<int>(facet_functionals.size()), n);
  for (size_t i = 0; i < facet_functionals.size(); ++i) F.row(static_cast<int>(i)) = facet_functionals[i];
  if (Eigen::FullPivLU<RMat>(F).rank() < n)
    throw InputError("polyhedral: facet functionals do not span the dual space");
  RMat V(static_cast<int>(ball_vertices.size()), n);
  for (size_t i = 0; i < ball_vertices.size(); ++i) V.row(static_cast<int>(i)) = ball_vertices[i];
  if (Eigen::FullPivLU<RMat>(V).rank() < n)
    throw InputError("polyhedral: vertices do not span the space");

  NormedSpace s;
  s.kind_ = SpaceKind::Polyhedral;
  s.field_ = Field::Real;
  s.dim_ = n;
  s.vertices_ = std::move(ball_vertices);
  s.facets_ = std::move(facet_functionals);
  return s;
}

NormedSpace NormedSpace::sum(NormedSpace left, NormedSpace right, SumKind kind) {
  if (left.field() != right.field())
    throw InputError("sum: components must share the scalar field");
  NormedSpace s;
  s.kind_ = SpaceKind::Sum;
  s.field_ = left.field();
  s.dim_ = left.dim() + right.dim();
  s.sum_kind_ = kind;
  s.left_ = std::make_shared<NormedSpace>(std::move(left));
  s.right_ = std::make_shared<NormedSpace>(std::move(right));
  return s;
}

// ---------------------------------------------------------------------------
// Norms

double NormedSpace::norm(const Vec& x) const {
  check_dim(dim_, x.size(), "norm");
  switch (kind_) {
    case SpaceKind::PNorm: {
      if (std::isinf(p_)) return x.cwiseAbs().maxCoeff();
      if (p_ == 1.0) return x.cwiseAbs().sum();
      if (p_ == 2.0) return x.norm();
      double s = 0.0;
      for (Eigen::Index i = 0; i < x.size(); ++i) s += std::pow(std::abs(x[i]), p_);
      return std::pow(s, 1.0 / p_);
    }
    case SpaceKind::Polyhedral: {
      RVec xr = real_part_checked(x, "polyhedral norm");
      double m = 0.0;
      for (const RVec& f : facets_) m = std::max(m, std::abs(f.dot(xr)));
      return m;
    }
    case SpaceKind::Sum: {
      double a = left_->norm(Vec(x.head(left_->dim())));
      double b = right_->norm(Vec(x.tail(right_->dim())));
      return sum_kind_ == SumKind::L1 ? a + b : std::max(a, b);
    }
  }
  return 0.0;
}

double NormedSpace::dual_norm(const Vec& f) const {
  check_dim(dim_, f.size(), "dual_norm");
  switch (kind_) {
    case SpaceKind::PNorm: {
      double q;
      if (std::isinf(p_)) q = 1.0;
      else if (p_ == 1.0) q = std::numeric_limits<double>::infinity();
      else q = p_ / (p_ - 1.0);
      return pnorm(dim_, q, field_).norm(f);
    }
    case SpaceKind::Polyhedral: {
      RVec fr = real_part_checked(f, "polyhedral dual_norm");
      double m = 0.0;
      for (const RVec& v : vertices_) m = std::max(m, std::abs(fr.dot(v)));
      return m;
    }
    case SpaceKind::Sum: {
      double a = left_->dual_norm(Vec(f.head(left_->dim())));
      double b = right_->dual_norm(Vec(f.tail(right_->dim())));
      return sum_kind_ == SumKind::L1 ? std::max(a, b) : a + b;
    }
  }
  return 0.0;
}

// ---------------------------------------------------------------------------
// Duality sets

namespace {

FaceCell embed_cell(const FaceCell& cell, int offset, int total_dim) {
  FaceCell out;
  out.fixed = Vec::Zero(total_dim);
  out.fixed.segment(offset, cell.fixed.size()) = cell.fixed;
  for (const Vec& c : cell.choices) {
    Vec e = Vec::Zero(total_dim);
    e.segment(offset, c.size()) = c;
    out.choices.push_back(std::move(e));
  }
  for (FaceFreeGroup g : cell.free) {
    g.offset += offset;
    out.free.push_back(std::move(g));
  }
  return out;
}

// Combine cells of an l1-sum face: both component faces at full dual norm.
FaceCell combine_cells(const FaceCell& a, int dim_a, const FaceCell& b, int offset_b,
                       int total_dim) {
  FaceCell ea = embed_cell(a, 0, total_dim);
  FaceCell eb = embed_cell(b, offset_b, total_dim);
  (void)dim_a;
  FaceCell out;
  out.fixed = ea.fixed + eb.fixed;
  if (ea.choices.empty() && eb.choices.empty()) {
    // both singletons
  } else if (ea.choices.empty()) {
    out.choices = eb.choices;
  } else if (eb.choices.empty()) {
    out.choices = ea.choices;
  } else {
    for (const Vec& ca : ea.choices)
      for (const Vec& cb : eb.choices) out.choices.push_back(ca + cb);
  }
  out.free = ea.free;
  out.free.insert(out.free.end(), eb.free.begin(), eb.free.end());
  return out;
}

}  // namespace

DualitySet NormedSpace::duality_set(const Vec& x) const {
  check_dim(dim_, x.size(), "duality_set");
  const double nx = norm(x);
  if (nx == 0.0) throw DomainError("duality_set: D(0) is degenerate; x must be nonzero");

  std::vector<FaceCell> cells;
  switch (kind_) {
    case SpaceKind::PNorm: {
      if (std::isinf(p_)) {
        FaceCell cell;
        cell.fixed = Vec::Zero(dim_);
        for (int k = 0; k < dim_; ++k) {
          if (std::abs(x[k]) >= nx * (1.0 - kAttainTol)) {
            Vec e = Vec::Zero(dim_);
            e[k] = conj_sign(x[k]);
            cell.choices.push_back(std::move(e));
          }
        }
        cells.push_back(std::move(cell));
      } else if (p_ == 1.0) {
        FaceCell cell;
        cell.fixed = Vec::Zero(dim_);
        for (int k = 0; k < dim_; ++k) {
          if (std::abs(x[k]) > nx * 1e-14) {
            cell.fixed[k] = conj_sign(x[k]);
          } else {
            FaceFreeGroup g;
            g.offset = k;
            g.space = std::make_shared<NormedSpace>(pnorm(1, 1.0, field_));
            g.bound = 1.0;
            cell.free.push_back(std::move(g));
          }
        }
        cells.push_back(std::move(cell));
      } else {
        FaceCell cell;
        cell.fixed = Vec(dim_);
        for (int k = 0; k < dim_; ++k)
          cell.fixed[k] = conj_sign(x[k]) * std::pow(std::abs(x[k]) / nx, p_ - 1.0);
        cells.push_back(std::move(cell));
      }
      break;
    }
    case SpaceKind::Polyhedral: {
      RVec xr = real_part_checked(x, "duality_set");
      FaceCell cell;
      cell.fixed = Vec::Zero(dim_);
      for (const RVec& f : facets_) {
        for (double s : {1.0, -1.0}) {
          if (s * f.dot(xr) >= nx * (1.0 - kAttainTol)) cell.choices.push_back(to_cvec(RVec(s * f)));
        }
      }
      cells.push_back(std::move(cell));
      break;
    }
    case SpaceKind::Sum: {
      const int dl = left_->dim();
      Vec xl = x.head(dl), xr = x.tail(right_->dim());
      double nl = left_->norm(xl), nr = right_->norm(xr);
      if (sum_kind_ == SumKind::L1) {
        auto left_cells = [&]() -> std::vector<FaceCell> {
          if (nl > 0.0) return left_->duality_set(xl).cells();
          FaceCell c;
          c.fixed = Vec::Zero(dl);
          FaceFreeGroup g;
          g.offset = 0;
          g.space = left_;
          g.bound = 1.0;
          c.free.push_back(std::move(g));
          return {c};
        }();
        auto right_cells = [&]() -> std::vector<FaceCell> {
          if (nr > 0.0) return right_->duality_set(xr).cells();
          FaceCell c;
          c.fixed = Vec::Zero(right_->dim());
          FaceFreeGroup g;
          g.offset = 0;
          g.space = right_;
          g.bound = 1.0;
          c.free.push_back(std::move(g));
          return {c};
        }();
        for (const FaceCell& a : left_cells)
          for (const FaceCell& b : right_cells)
            cells.push_back(combine_cells(a, dl, b, dl, dim_));
      } else {
        if (nl >= nx * (1.0 - kAttainTol)) {
          DualitySet Dl = left_->duality_set(xl);
          for (const FaceCell& c : Dl.cells()) cells.push_back(embed_cell(c, 0, dim_));
        }
        if (nr >= nx * (1.0 - kAttainTol)) {
          DualitySet Dr = right_->duality_set(xr);
          for (const FaceCell& c : Dr.cells()) cells.push_back(embed_cell(c, dl, dim_));
        }
      }
      break;
    }
  }
  return DualitySet(x, nx, std::move(cells));
}

double duality_sup_abs(const DualitySet& D, const Vec& v) { return D.sup_abs(v); }

// ---------------------------------------------------------------------------
// Extreme points

std::vector<Vec> NormedSpace::ball_extreme_points() const {
  if (field_ == Field::Complex)
    throw UnsupportedKindError(
        "ball_extreme_points: complex unit balls have no finite extreme list");
  switch (kind_) {
    case SpaceKind::PNorm: {
      if (dim_ == 1) {
        return {Vec::Constant(1, Complex(1, 0)), Vec::Constant(1, Complex(-1, 0))};
      }
      if (p_ == 1.0) {
        std::vector<Vec> out;
        for (int i = 0; i < dim_; ++i)
          for (double s : {1.0, -1.0}) {
            Vec e = Vec::Zero(dim_);
            e[i] = s;
            out.push_back(std::move(e));
          }
        return out;
      }
      if (std::isinf(p_)) {
        std::vector<Vec> out;
        for (long long mask = 0; mask < (1LL << dim_); ++mask) {
          Vec v(dim_);
          for (int i = 0; i < dim_; ++i) v[i] = (mask >> i) & 1 ? 1.0 : -1.0;
          out.push_back(std::move(v));
        }
        return out;
      }
      throw UnsupportedKindError("ball_extreme_points: smooth p-norm ball");
    }
    case SpaceKind::Polyhedral: {
      std::vector<Vec> out;
      for (const RVec& v : vertices_) out.push_back(to_cvec(v));
      return out;
    }
    case SpaceKind::Sum: {
      std::vector<Vec> out;
      auto le = left_->ball_extreme_points();
      auto ri = right_->ball_extreme_points();
      if (sum_kind_ == SumKind::L1) {
        for (const Vec& v : le) {
          Vec z = Vec::Zero(dim_);
          z.head(left_->dim()) = v;
          out.push_back(std::move(z));
        }
        for (const Vec& v : ri) {
          Vec z = Vec::Zero(dim_);
          z.tail(right_->dim()) = v;
          out.push_back(std::move(z));
        }
      } else {
        for (const Vec& a : le)
          for (const Vec& b : ri) {
            Vec z(dim_);
            z.head(left_->dim()) = a;
            z.tail(right_->dim()) = b;
            out.push_back(std::move(z));
          }
      }
      return out;
    }
  }
  return {};
}

std::vector<Vec> NormedSpace::sample_sphere(int count, uint64_t seed) const {
  if (count < 1) throw InputError("sample_sphere: count must be >= 1");
  std::vector<Vec> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    Rng rng(substream(seed, static_cast<uint64_t>(i)));
    Vec v;
    double n = 0.0;
    do {
      v = rng.gaussian_vec(dim_, field_);
      n = norm(v);
    } while (n < 1e-12);
    out.push_back(v / n);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Stable norm differences

namespace {

double norm_diff_impl(const NormedSpace& sp, const Vec& a, const Vec& d, double t);

double norm_diff_pnorm(const NormedSpace& sp, const Vec& a, const Vec& d, double t) {
  const double p = sp.p();
  if (std::isinf(p)) {
    double m0 = a.cwiseAbs().maxCoeff();
    double best = -std::numeric_limits<double>::infinity();
    for (Eigen::Index k = 0; k < a.size(); ++k) {
      double val = (std::abs(a[k]) - m0) + mod_diff(a[k], t * d[k]);
      best = std::max(best, val);
    }
    return best;
  }
  if (p == 1.0) {
    double s = 0.0;
    for (Eigen::Index k = 0; k < a.size(); ++k) s += mod_diff(a[k], t * d[k]);
    return s;
  }
  if (p == 2.0) {
    double na = a.norm();
    double nad = (a + t * d).norm();
    double num = 2.0 * t * a.dot(d).real() + t * t * d.squaredNorm();
    double den = na + nad;
    return den == 0.0 ? 0.0 : num / den;
  }
  return sp.norm(Vec(a + t * d)) - sp.norm(a);  // no stable form needed for general p
}

double norm_diff_impl(const NormedSpace& sp, const Vec& a, const Vec& d, double t) {
  switch (sp.kind()) {
    case SpaceKind::PNorm:
      return norm_diff_pnorm(sp, a, d, t);
    case SpaceKind::Polyhedral: {
      RVec ar = a.real(), dr = d.real();
      double m0 = 0.0;
      for (const RVec& f : sp.facet_functionals()) m0 = std::max(m0, std::abs(f.dot(ar)));
      double best = -std::numeric_limits<double>::infinity();
      for (const RVec& f : sp.facet_functionals()) {
        for (double s : {1.0, -1.0}) {
          double val = (s * f.dot(ar) - m0) + t * s * f.dot(dr);
          best = std::max(best, val);
        }
      }
      return best;
    }
    case SpaceKind::Sum: {
      const int dl = sp.left().dim();
      Vec al = a.head(dl), ar = a.tail(sp.right().dim());
      Vec dL = d.head(dl), dR = d.tail(sp.right().dim());
      double ndl = norm_diff_impl(sp.left(), al, dL, t);
      double ndr = norm_diff_impl(sp.right(), ar, dR, t);
      if (sp.sum_kind() == SumKind::L1) return ndl + ndr;
      double nl = sp.left().norm(al), nr = sp.right().norm(ar);
      double m0 = std::max(nl, nr);
      return std::max((nl - m0) + ndl, (nr - m0) + ndr);
    }
  }
  return 0.0;
}

}  // namespace

double NormedSpace::norm_minus_one(const Vec& base, const Vec& pert, double t) const {
  return norm_diff_impl(*this, base, pert, t) + (norm(base) - 1.0);
}

double NormedSpace::l2_upper_const() const {
  switch (kind_) {
    case SpaceKind::PNorm: {
      if (std::isinf(p_) || p_ >= 2.0) return 1.0;
      return std::pow(static_cast<double>(dim_), 1.0 / p_ - 0.5);
    }
    case SpaceKind::Polyhedral: {
      double m = 0.0;
      for (const RVec& f : facets_) m = std::max(m, f.norm());
      return m;
    }
    case SpaceKind::Sum: {
      double a = left_->l2_upper_const(), b = right_->l2_upper_const();
      return sum_kind_ == SumKind::L1 ? std::hypot(a, b) : std::max(a, b);
    }
  }
  return 1.0;
}

double NormedSpace::l2_lower_const() const {
  switch (kind_) {
    case SpaceKind::PNorm: {
      if (p_ <= 2.0) return 1.0;
      if (std::isinf(p_)) return std::sqrt(static_cast<double>(dim_));
      return std::pow(static_cast<double>(dim_), 0.5 - 1.0 / p_);
    }
    case SpaceKind::Polyhedral: {
      double m = 0.0;
      for (const RVec& v : vertices_) m = std::max(m, v.norm());
      return m;
    }
    case SpaceKind::Sum: {
      double a = left_->l2_lower_const(), b = right_->l2_lower_const();
      return sum_kind_ == SumKind::L1 ? std::max(a, b) : std::hypot(a, b);
    }
  }
  return 1.0;
}

bool NormedSpace::is_atomic_l1_like() const {
  switch (kind_) {
    case SpaceKind::PNorm:
      return p_ == 1.0;
    case SpaceKind::Polyhedral:
      return true;
    case SpaceKind::Sum:
      return sum_kind_ == SumKind::L1 && left_->is_atomic_l1_like() &&
             right_->is_atomic_l1_like();
  }
  return false;
}

std::string NormedSpace::spec_string() const {
  std::ostringstream os;
  switch (kind_) {
    case SpaceKind::PNorm: {
      if (field_ == Field::Complex) os << "c";
      if (p_ == 1.0) os << "l1:" << dim_;
      else if (p_ == 2.0) os << "l2:" << dim_;
      else if (std::isinf(p_)) os << "linf:" << dim_;
      else os << "lp:" << p_ << ":" << dim_;
      break;
    }
    case SpaceKind::Polyhedral:
      os << "poly[dim=" << dim_ << ",v=" << vertices_.size() << ",f=" << facets_.size() << "]";
      break;
    case SpaceKind::Sum:
      os << "sum:" << (sum_kind_ == SumKind::L1 ? "l1" : "linf") << "("
         << left_->spec_string() << "," << right_->spec_string() << ")";
      break;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Parser

namespace {

struct SpecParser {
  const std::string& s;
  size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    std::ostringstream os;
    os << "space spec error at position " << pos << ": " << msg << " in \"" << s << "\"";
    throw InputError(os.str());
  }

  bool eat(const std::string& tok) {
    if (s.compare(pos, tok.size(), tok) == 0) {
      pos += tok.size();
      return true;
    }
    return false;
  }

  char peek() const { return pos < s.size() ? s[pos] : '\0'; }

  int parse_int() {
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected an integer");
    return std::stoi(s.substr(start, pos - start));
  }

  double parse_double() {
    size_t start = pos;
    while (pos < s.size() &&
           (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '.')) ++pos;
    if (pos == start) fail("expected a number");
    return std::stod(s.substr(start, pos - start));
  }

  NormedSpace parse() {
    NormedSpace sp = parse_spec();
    if (pos != s.size()) fail("trailing characters");
    return sp;
  }

  NormedSpace parse_spec() {
    if (eat("sum:")) {
      SumKind kind;
      if (eat("l1")) kind = SumKind::L1;
      else if (eat("linf")) kind = SumKind::Linf;
      else fail("expected 'l1' or 'linf' after 'sum:'");
      if (!eat("(")) fail("expected '('");
      NormedSpace a = parse_spec();
      if (!eat(",")) fail("expected ','");
      NormedSpace b = parse_spec();
      if (!eat(")")) fail("expected ')'");
      return NormedSpace::sum(std::move(a), std::move(b), kind);
    }
    if (eat("poly:")) {
      size_t start = pos;
      while (pos < s.size() && s[pos] != ',' && s[pos] != ')') ++pos;
      std::string path = s.substr(start, pos - start);
      if (path.empty()) fail("expected a file path after 'poly:'");
      return load_polyhedral(path);
    }
    Field field = Field::Real;
    if (peek() == 'c') {
      ++pos;
      field = Field::Complex;
    }
    double p;
    if (eat("linf")) p = std::numeric_limits<double>::infinity();
    else if (eat("lp")) {
      if (!eat(":")) fail("expected ':' after 'lp'");
      p = parse_double();
      if (!(p >= 1.0)) fail("p must be >= 1");
    } else if (eat("l1")) p = 1.0;
    else if (eat("l2")) p = 2.0;
    else fail("expected 'l1', 'l2', 'linf', 'lp', 'poly:' or 'sum:'");
    if (!eat(":")) fail("expected ':' before the dimension");
    int dim = parse_int();
    return NormedSpace::pnorm(dim, p, field);
  }

  NormedSpace load_polyhedral(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("cannot open polyhedral file '" + path + "'");
    nlohmann::json j;
    try {
      in >> j;
    } catch (const std::exception& e) {
      fail(std::string("polyhedral JSON parse failure: ") + e.what());
    }
    auto read_list = [&](const char* key) {
      std::vector<RVec> out;
      if (!j.contains(key)) fail(std::string("polyhedral JSON missing '") + key + "'");
      for (const auto& row : j.at(key)) {
        RVec v(row.size());
        for (size_t i = 0; i < row.size(); ++i) v[static_cast<int>(i)] = row[i].get<double>();
        out.push_back(std::move(v));
      }
      return out;
    };
    return NormedSpace::polyhedral(read_list("vertices"), read_list("facets"));
  }
};

}  // namespace

NormedSpace parse_space(const std::string& spec) {
  SpecParser p{spec};
  return p.parse();
}

}  // namespace numrad
