#pragma once

#include "numrad/lipop.hpp"

#include <functional>
#include <optional>

namespace numrad {

/// A Lipschitz map between two spaces given by an evaluation closure and a
/// Lipschitz bound, with the provenance of that bound. Closures are immutable
/// and safe to share.
struct LipschitzCallable {
  NormedSpace domain;
  NormedSpace codomain;
  std::function<Vec(const Vec&)> map;
  double lip_bound = 0.0;
  enum class Certificate { SampledQuotients, PerCell } certificate = Certificate::SampledQuotients;

  Vec operator()(const Vec& x) const { return map(x); }
};

LipschitzCallable make_callable(const LinearOperator& T);
LipschitzCallable make_callable(const PwlOperator& T);

/// Largest sampled difference quotient of F over `pairs` seeded pairs drawn
/// inside a ball of the given radius; also the certificate check for
/// lip_bound.
double max_sampled_quotient(const LipschitzCallable& F, int pairs, uint64_t seed,
                            double radius = 4.0);

/// Best (quotient, pair) found by seeded sampling plus refinement; a lower
/// bound for ||F||_L.
struct QuotientPair {
  Vec x, y;
  double quotient = -1.0;
};
QuotientPair callable_lip_lower(const LipschitzCallable& F, int budget, uint64_t seed,
                                double radius = 4.0);

/// 1-Lipschitz scalar extension of z -> ||z - x1|| off the segment [x1, x2]:
/// f(x) = inf_t ( t ||x2-x1|| + ||x - (x1 + t (x2-x1))|| ). Codomain is R.
LipschitzCallable mcshane_extend(const Vec& x1, const Vec& x2, const NormedSpace& space);

/// The M-Lipschitz map with F(x1) = y1, F(x2) = y2 built as phi . pi_a . f
/// with f the scalar extension above, pi_a the clamp to [0, a], and phi the
/// segment parametrization of [y1, y2]. Requires ||y1-y2|| <= M ||x1-x2||.
LipschitzCallable segment_extension(const Vec& x1, const Vec& x2, const Vec& y1,
                                    const Vec& y2, double M, const NormedSpace& domain,
                                    const NormedSpace& codomain);

/// Subsets A of the unit ball eligible for the join/midpoint step.
struct SetDescriptor {
  enum class Kind { Sphere, SliceUnion, VertexList, SphereCrossBall };
  Kind kind = Kind::Sphere;
  Vec ystar;                  // SliceUnion
  double slice_eps = 0.0;     // SliceUnion
  std::vector<Vec> vertices;  // VertexList
  int split_dim = 0;          // SphereCrossBall: dimension of the X part

  static SetDescriptor sphere() { return {}; }
  static SetDescriptor slice_union(Vec ys, double eps) {
    SetDescriptor d;
    d.kind = Kind::SliceUnion;
    d.ystar = std::move(ys);
    d.slice_eps = eps;
    return d;
  }
  static SetDescriptor vertex_list(std::vector<Vec> vs) {
    SetDescriptor d;
    d.kind = Kind::VertexList;
    d.vertices = std::move(vs);
    return d;
  }
  static SetDescriptor sphere_cross_ball(int split) {
    SetDescriptor d;
    d.kind = Kind::SphereCrossBall;
    d.split_dim = split;
    return d;
  }
};

struct MidpointJoin {
  Vec z;
  Vec x1, x2;  // members of A with z0 close to lambda x1 + (1-lambda) x2
  double lambda = 0.0;
  double decomposition_dist = 0.0;
};

/// Join/midpoint step: writes z0 = (x-y)/||x-y|| as a near-convex combination
/// of two members of A and returns z = x - (||x-y||/2) x2, which satisfies
/// ||y-z|| <= (1+eps) ||x-y||/2. Exact decompositions give the metric
/// midpoint equalities. NotFound (nullopt) is a search failure, not a proof.
std::optional<MidpointJoin> midpoint_join(const Vec& x, const Vec& y,
                                          const SetDescriptor& A, double eps,
                                          const NormedSpace& space, int budget = 4000,
                                          uint64_t seed = 1);

struct LushWitness {
  Vec ystar;
  double eps = 0.0;
  Vec x1, x2;
  double lambda = 0.0;
  Complex alpha1{1.0, 0.0}, alpha2{1.0, 0.0};
  double achieved_distance = 0.0;
};

/// Searches for a slice functional y* with y in S(y*, eps) and a two-term
/// absolutely-convex combination of slice members within eps of x.
std::optional<LushWitness> lush_witness(const NormedSpace& space, const Vec& x, const Vec& y,
                                        double eps, int budget, uint64_t seed);

struct CkBoostResult {
  Vec z;
  int s = 0;     // attaining coordinate
  Vec g;         // unit functional, the conjugate coordinate evaluation at s
  double value;  // |g(Tz - Tx)| / ||z - x||, > (1 - 2 eps) ||T||_L
};

/// The sup-norm witness boost: from a pair almost attaining the Lipschitz
/// norm, produce the half-step z and coordinate functional certifying a
/// numerical-range value above (1 - 2 eps) ||T||_L. Real sup-norm spaces.
CkBoostResult ck_witness_boost(const LipschitzCallable& T, double lip_norm_T, const Vec& x,
                               const Vec& y, double eps);

struct AlignedPair {
  Vec u, v;
  double quotient = 0.0;  // ||Tu - Tv|| / ||u - v||
  bool found = false;
};

/// On a domain X (+)_inf Y, finds a pair whose gap is carried entirely by the
/// X component while nearly attaining the Lipschitz norm: the midpoint step
/// over S_X x B_Y applied to a norm-attaining pair.
AlignedPair linf_witness_align(const LipschitzCallable& T, double eps, int budget,
                               uint64_t seed);

/// Compression to the X summand of an linf sum: S(u) = T1(u, F(u)) - T1(0, F(0))
/// with F the segment extension through the aligned pair. ||S||_L <= ||T||_L
/// and every two-point numerical-range value of S is one of T.
LipschitzCallable linf_sum_compress(const LipschitzCallable& T, const AlignedPair& pair);

/// Compression to the X summand of an l1 sum along the X branch of the proof
/// dichotomy: S(x) = A(x) + y*(Bx) x0 for T_{y2} = (A, B).
LipschitzCallable l1_sum_compress(const LipschitzCallable& T, const Vec& z1, const Vec& z2,
                                  double eps);

/// Blockwise application of S on the l1 sum of n copies of its space;
/// preserves the Lipschitz norm and the numerical radius.
PwlOperator diagonal_lift(const PwlOperator& S, int n);

/// The l1 sum of n copies of a space.
NormedSpace l1_power(const NormedSpace& X, int n);

}  // namespace numrad
