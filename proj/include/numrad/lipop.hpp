#pragma once

#include "numrad/linop.hpp"

#include <optional>

namespace numrad {

/// One affine piece of a CPWL operator: the polyhedron {x : C x <= d} carries
/// the map x -> A x + b.
struct Cell {
  RMat C;
  RVec d;
  RMat A;
  RVec b;
};

/// A continuous piecewise-linear operator fixing 0, given as a cell complex
/// over a real space. Cells cover the box of radius `box_radius` (sup norm);
/// the outermost cells extend conically beyond it. Immutable after validate.
struct PwlOperator {
  NormedSpace space;
  std::vector<Cell> cells;
  double box_radius = 8.0;
  std::vector<RVec> seed_points;  // optional per-cell interior points

  PwlOperator(NormedSpace sp, std::vector<Cell> cs, double box_r,
              std::vector<RVec> seeds = {});
};

struct ValidationIssue {
  std::string check;
  std::string detail;
  RVec witness;
};

struct ValidationReport {
  std::vector<ValidationIssue> failures;
  bool passed() const { return failures.empty(); }
};

/// Runs all PwlOperator invariant checks; failures are data, not exceptions.
ValidationReport validate(const PwlOperator& T);

/// Locate the cell containing x (ties to the lowest index) and apply its
/// piece. Points beyond the box are handled by the conical extension of the
/// cell owning the ray's boundary point.
RVec eval(const PwlOperator& T, const RVec& x);

/// The derivative at x: the unique cell map when x avoids facets shared by
/// cells with different linear parts, nullopt (non-smooth) otherwise.
std::optional<RMat> gateaux_derivative(const PwlOperator& T, const RVec& x);

/// max over cells of the cell map's operator norm.
double lip_norm(const PwlOperator& T);

/// Sampled lower bound: best difference quotient over pairs at distance <= r,
/// seeded per-cell directions plus local refinement.
double lip_norm_sampled(const PwlOperator& T, double r, int budget, uint64_t seed);

/// Bracket for omega(T): per-cell radius upper bounds (CellSup) against
/// genuine two-point numerical-range values below.
RadiusBracket lip_radius(const PwlOperator& T, double tol, int budget = 600,
                         uint64_t seed = 1);

/// Difference-quotient bounds (||I + t a T||_L - 1)/t along the schedule.
std::vector<double> lip_radius_limit(const PwlOperator& T,
                                     const std::vector<double>& t_schedule,
                                     const AlphaGrid& alphas);

/// Seeded generator: one Gaussian affine layer, a coordinatewise clamp, and a
/// Gaussian skip term, compiled to the clamp's orthant cell complex. Fixes 0
/// exactly.
PwlOperator random_pwl(const NormedSpace& space, int pieces, uint64_t seed);

/// Interior point of {C x <= d} with its normalized margin, if one is found.
std::optional<std::pair<RVec, double>> cell_interior_point(const RMat& C, const RVec& d,
                                                           double box_radius);

/// The cell index eval would use at x, or -1 (outside the covered domain).
int locate_cell(const PwlOperator& T, const RVec& x);

}  // namespace numrad
