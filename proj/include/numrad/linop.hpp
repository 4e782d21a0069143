#pragma once

#include "numrad/spaces.hpp"

namespace numrad {

/// A square matrix acting on a NormedSpace. Entries must be finite and real
/// when the space is real.
struct LinearOperator {
  NormedSpace space;
  Mat matrix;

  LinearOperator(NormedSpace sp, Mat m);

  Vec apply(const Vec& x) const { return matrix * x; }
};

/// Unit scalars used for the max over the scalar sphere: {+1,-1} on the
/// reals, m-th roots of unity on the complex field.
struct AlphaGrid {
  Field field = Field::Real;
  std::vector<Complex> values;

  static AlphaGrid for_field(Field f, int complex_count = 64);
};

enum class UpperMethod { ClosedForm, LimitFormula, CellSup };

struct RadiusWitness {
  Vec x;
  Vec y;          // zero for linear one-point witnesses
  Vec f;          // functional in D(x - y), at D-scale
  Complex value;  // f(Tx - Ty)/||x-y||^2; |value| equals the certified lower bound
};

/// Certified two-sided interval for the numerical radius.
struct RadiusBracket {
  double lower = 0.0;
  double upper = 0.0;
  RadiusWitness witness;
  UpperMethod upper_method = UpperMethod::LimitFormula;
  double t_min = 0.0;
  int alpha_count = 0;
  double tol = 1e-6;
  bool converged = false;
};

/// Bracket for sup_{x in B_dom} ||M x + offset||_cod. `exact` means lower ==
/// upper comes from extreme-point enumeration or a closed form.
struct OpNormResult {
  double lower = 0.0;
  double upper = 0.0;
  Vec arg;
  bool exact = false;
};

OpNormResult sup_image_norm(const NormedSpace& dom, const NormedSpace& cod, const Mat& M,
                            const Vec& offset, int ascent_starts = 12, uint64_t seed = 17);

OpNormResult op_norm_result(const LinearOperator& T);

/// The certified upper value of the operator norm (exact where a closed form
/// or an extreme-point enumeration exists).
double op_norm(const LinearOperator& T);

struct RangePoint {
  Complex value;
  Vec x;
  Vec f;
};

/// Sampled numerical-range values f(Tx) over seeded unit points x with the
/// duality-set representative maximizing |f(Tx)|.
std::vector<RangePoint> numerical_range_points(const LinearOperator& T, int count,
                                               uint64_t seed);

/// Certified lower bound for omega(T) with a reproducible witness.
std::pair<double, RadiusWitness> radius_lower(const LinearOperator& T, int budget,
                                              uint64_t seed);

/// Difference-quotient upper bounds (||I + t a T|| - 1)/t, maximized over the
/// alpha grid (with golden refinement of alpha in the complex case),
/// evaluated along the given decreasing positive schedule. Nonincreasing on
/// spaces with exact operator norms.
std::vector<double> radius_upper_limit(const LinearOperator& T,
                                       const std::vector<double>& t_schedule,
                                       const AlphaGrid& alphas);

/// t_k = 2^-k for k = 1..40.
std::vector<double> default_t_schedule();

RadiusBracket numerical_radius(const LinearOperator& T, double tol, int budget = 4000,
                               uint64_t seed = 1);

/// (1 + ||T||) - max_alpha ||I + alpha T||; vanishes exactly when
/// omega(T) = ||T||.
double daugavet_gap(const LinearOperator& T, const AlphaGrid& alphas);

/// Stable evaluation of (||I + t a T|| - 1)/t. Exact extremal enumeration
/// where the space admits it, Gram-shifted eigensolve on l2; grid-based on
/// smooth factors inside sums (tight but heuristic).
double limit_quotient(const LinearOperator& T, Complex alpha, double t);

/// Caches the unit-ball candidate structure of a space so quotient sweeps
/// across schedules and cell complexes do not rebuild it per evaluation.
class LimitQuotientEvaluator {
 public:
  explicit LimitQuotientEvaluator(NormedSpace space);
  double eval(const Mat& M, Complex alpha, double t) const;
  const NormedSpace& space() const { return space_; }

 private:
  enum class Path { L1, L2, Linf, Candidates, OpNormFallback };
  NormedSpace space_;
  Path path_;
  std::shared_ptr<const std::vector<Vec>> candidates_;
};

/// numerical_radius with a caller-provided evaluator (shared across the cells
/// of one complex).
RadiusBracket numerical_radius_with(const LinearOperator& T, double tol, int budget,
                                    uint64_t seed, const LimitQuotientEvaluator* shared);

}  // namespace numrad
