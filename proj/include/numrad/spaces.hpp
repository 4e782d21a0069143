#pragma once

#include "numrad/core.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace numrad {

enum class SpaceKind { PNorm, Polyhedral, Sum };
enum class SumKind { L1, Linf };

class NormedSpace;
class DualitySet;

/// One generator cell of a duality set, at unit (face) scale. The cell
/// describes the functionals
///
///   f = fixed + e + g,   e in conv(choices),  g = sum of free-group parts,
///
/// where the free part of group k ranges over bound_k * B_{Y_k^*} on the
/// group's coordinate block. Every functional so described is a unit dual
/// vector norming the base point. sup_{f} |f(v)| has a closed form: convexity
/// puts the sup at a choice extreme with the free parts phase-aligned.
struct FaceFreeGroup {
  int offset = 0;
  std::shared_ptr<const NormedSpace> space;  // predual norm of the block
  double bound = 1.0;
};

struct FaceCell {
  Vec fixed;                        // zero on free blocks
  std::vector<Vec> choices;         // empty means {0}
  std::vector<FaceFreeGroup> free;  // disjoint coordinate blocks
};

/// D(x) = scale * conv(union of cells); scale = ||x||. Supports exact
/// sup-of-modulus queries and extraction of the maximizing functional.
class DualitySet {
 public:
  DualitySet(Vec base_point, double scale, std::vector<FaceCell> cells)
      : base_(std::move(base_point)), scale_(scale), cells_(std::move(cells)) {}

  const Vec& base_point() const { return base_; }
  double scale() const { return scale_; }
  const std::vector<FaceCell>& cells() const { return cells_; }

  /// sup_{f in D} |f(v)|, exact per the cell closed form.
  double sup_abs(const Vec& v) const;

  /// The functional achieving sup_abs(v), at D-scale (i.e. ||f||_* = scale).
  Vec argmax_functional(const Vec& v) const;

  /// A finite sample of representable functionals at D-scale (extreme
  /// choices plus a few free-part assignments). Used by tests.
  std::vector<Vec> sample_members(int free_steps) const;

 private:
  Vec base_;
  double scale_;
  std::vector<FaceCell> cells_;
};

/// A finite-dimensional real or complex normed space. Value object:
/// construction validates, every query afterwards is pure and const.
///
/// Kinds: PNorm(p in [1, inf]), Polyhedral (real only, symmetric vertex and
/// facet lists), Sum (l1 or l-infinity sum of two spaces).
class NormedSpace {
 public:
  /// Placeholder (dim 0); assign a real space before use.
  NormedSpace() = default;

  static NormedSpace pnorm(int dim, double p, Field field = Field::Real);
  static NormedSpace polyhedral(std::vector<RVec> ball_vertices,
                                std::vector<RVec> facet_functionals);
  static NormedSpace sum(NormedSpace left, NormedSpace right, SumKind kind);

  int dim() const { return dim_; }
  Field field() const { return field_; }
  SpaceKind kind() const { return kind_; }
  double p() const { return p_; }  // PNorm only
  SumKind sum_kind() const { return sum_kind_; }
  const NormedSpace& left() const { return *left_; }
  const NormedSpace& right() const { return *right_; }
  const std::vector<RVec>& ball_vertices() const { return vertices_; }
  const std::vector<RVec>& facet_functionals() const { return facets_; }

  double norm(const Vec& x) const;
  double norm(const RVec& x) const { return norm(to_cvec(x)); }
  double dual_norm(const Vec& f) const;
  double dual_norm(const RVec& f) const { return dual_norm(to_cvec(f)); }

  /// D(x) for x != 0. Throws DomainError at x = 0.
  DualitySet duality_set(const Vec& x) const;

  /// Extreme points of the unit ball. Real polyhedral-like kinds only; the
  /// smooth and complex balls have no finite extreme list.
  std::vector<Vec> ball_extreme_points() const;

  /// `count` unit vectors, deterministic in (seed, count, space): Gaussian
  /// directions normalized in this norm.
  std::vector<Vec> sample_sphere(int count, uint64_t seed) const;

  /// ||base + t*pert|| - 1 evaluated without cancellation, assuming
  /// ||base|| = 1 holds structurally (base an extreme point, or any unit
  /// vector; accuracy degrades gracefully with the unit-norm residual).
  double norm_minus_one(const Vec& base, const Vec& pert, double t) const;

  /// c1 with ||x|| <= c1 ||x||_2 and c2 with ||x||_2 <= c2 ||x||.
  double l2_upper_const() const;
  double l2_lower_const() const;

  /// True if op norms over this space as a domain are exact (finite extreme
  /// enumeration or a closed form).
  bool is_atomic_l1_like() const;

  std::string spec_string() const;

  bool same_as(const NormedSpace& other) const {
    return spec_string() == other.spec_string();
  }

 private:
  SpaceKind kind_ = SpaceKind::PNorm;
  Field field_ = Field::Real;
  int dim_ = 0;
  double p_ = 2.0;
  std::vector<RVec> vertices_;
  std::vector<RVec> facets_;
  SumKind sum_kind_ = SumKind::L1;
  std::shared_ptr<const NormedSpace> left_, right_;
};

/// sup_{f in D} |f(v)| must match `v` in length; see DualitySet.
double duality_sup_abs(const DualitySet& D, const Vec& v);

/// Parse the space mini-language:
///   l1:<n> | l2:<n> | linf:<n> | lp:<p>:<n>      (prefix 'c' for complex)
///   poly:<path-to-json>                          ({"vertices":[[..]],"facets":[[..]]})
///   sum:l1(<spec>,<spec>) | sum:linf(<spec>,<spec>)
/// Errors carry the offending position.
NormedSpace parse_space(const std::string& spec);

}  // namespace numrad
