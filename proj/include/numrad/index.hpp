#pragma once

#include "numrad/serialize.hpp"

namespace numrad {

enum class Mode { Linear, Lipschitz };

struct SearchStats {
  int starts = 0;
  int iterations = 0;
  uint64_t seed = 0;
  int last_improvement = 0;  // candidate index of the final incumbent
};

/// A certified upper estimate for the (Lipschitz) numerical index of a space:
/// the infimum is at most `upper`, witnessed by a concrete operator.
struct IndexEstimate {
  std::string space_spec;
  Mode mode = Mode::Linear;
  double upper = 1.0;
  json witness;  // serialized operator plus its normalized-radius bracket
  double heuristic_value = 1.0;
  SearchStats stats;

  json to_json() const;
};

IndexEstimate estimate_index(const NormedSpace& space, Mode mode, int budget, uint64_t seed);

/// Re-evaluate an estimate's witness from its serialized form; returns the
/// certified normalized radius (omega upper over norm lower).
double reevaluate_witness(const NormedSpace& space, const json& witness);

struct CaseResult {
  std::string name;
  std::string status;  // "pass" | "fail" | "unconverged"
  double value = 0.0;
  double expected = 0.0;
  double tol = 0.0;
  json witness;
};

struct VerificationReport {
  std::string suite;
  uint64_t seed = 0;
  std::vector<CaseResult> cases;
  json config;

  bool any_failed() const;
  bool any_unconverged() const;
  json to_json() const;
  std::string to_csv() const;
};

/// Complex-space floor omega >= ||T||/e, checked on sampled operators.
VerificationReport bk_suite(const NormedSpace& space, int samples, uint64_t seed);

/// Compares Linear and Lipschitz index estimates and flags any candidate
/// violation of their equality on finite-dimensional spaces.
VerificationReport rnp_equality_suite(const NormedSpace& space, int budget, uint64_t seed);

/// Index of a two-term sum against the minimum of the summands, plus the
/// compression-operator demonstration on the sum witness.
VerificationReport sum_stability_suite(const NormedSpace& X, const NormedSpace& Y,
                                       SumKind kind, int budget, uint64_t seed);

/// Documented index values over the fixed battery of spaces and operators.
VerificationReport known_values_suite(uint64_t seed);

/// Sup-norm witness boost battery on l_inf^n.
VerificationReport ck_suite(int n, int count, double eps, uint64_t seed);

/// Curated operators (shifts, rotations, rank-one, sign patterns) for the
/// given space; random search alone misses these extremals.
std::vector<Mat> operator_battery(const NormedSpace& space);

}  // namespace numrad
