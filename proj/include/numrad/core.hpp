#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace numrad {

using Complex = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;
using RVec = Eigen::VectorXd;
using RMat = Eigen::MatrixXd;

enum class Field { Real, Complex };

/// Bad user input: dimension mismatch, malformed spec, violated precondition.
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Mathematically degenerate request (e.g. duality set of the zero vector).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Operation not available for this space kind (e.g. extreme points of a
/// smooth ball).
struct UnsupportedKindError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Generator refused to build an object (e.g. cell-count explosion).
struct GenerationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// conj(z)/|z| for z != 0 (plain sign on the reals), 1 at z = 0.
/// Chosen so that sum_i conj_sign(x_i) * x_i = sum_i |x_i| is real.
inline Complex conj_sign(Complex z) {
  double m = std::abs(z);
  if (m == 0.0) return Complex(1.0, 0.0);
  return std::conj(z) / m;
}

/// z/|z| for z != 0, 1 at z = 0.
inline Complex unit_phase(Complex z) {
  double m = std::abs(z);
  if (m == 0.0) return Complex(1.0, 0.0);
  return z / m;
}

inline Vec to_cvec(const RVec& v) { return v.cast<Complex>(); }
inline Mat to_cmat(const RMat& m) { return m.cast<Complex>(); }

inline RVec re(const Vec& v) { return v.real(); }

/// |a + d| - |a| without cancellation when d is small against a.
inline double mod_diff(Complex a, Complex d) {
  double s = std::abs(a + d) + std::abs(a);
  if (s == 0.0) return 0.0;
  double num = 2.0 * (a.real() * d.real() + a.imag() * d.imag()) + std::norm(d);
  return num / s;
}

/// |z| - 1 without cancellation when |z| is near 1, given r = |z|^2 - 1
/// precomputed exactly enough by the caller.
inline double mod_minus_one_from_sq(double zsq_minus_one, double zabs) {
  return zsq_minus_one / (zabs + 1.0);
}

inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Derive an independent stream id from a base seed; used so that
/// multi-start searches depend only on (seed, start index).
inline uint64_t substream(uint64_t seed, uint64_t index) {
  return splitmix64(seed ^ splitmix64(index + 0x51ed2701ULL));
}

/// Deterministic RNG wrapper. All randomized operations take explicit seeds
/// and derive their draws from this engine only.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(splitmix64(seed)) {}

  double uniform() { return std::uniform_real_distribution<double>(0.0, 1.0)(eng_); }
  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(eng_);
  }
  double gaussian() { return std::normal_distribution<double>(0.0, 1.0)(eng_); }
  int uniform_int(int lo, int hi) {  // inclusive bounds
    return std::uniform_int_distribution<int>(lo, hi)(eng_);
  }

  RVec gaussian_rvec(int n) {
    RVec v(n);
    for (int i = 0; i < n; ++i) v[i] = gaussian();
    return v;
  }

  Vec gaussian_vec(int n, Field f) {
    Vec v(n);
    for (int i = 0; i < n; ++i) {
      double a = gaussian();
      double b = (f == Field::Complex) ? gaussian() : 0.0;
      v[i] = (f == Field::Complex) ? Complex(a, b) / std::sqrt(2.0) : Complex(a, 0.0);
    }
    return v;
  }

  Mat gaussian_mat(int rows, int cols, Field f) {
    Mat m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) {
        double a = gaussian();
        double b = (f == Field::Complex) ? gaussian() : 0.0;
        m(i, j) = (f == Field::Complex) ? Complex(a, b) / std::sqrt(2.0) : Complex(a, 0.0);
      }
    return m;
  }

 private:
  std::mt19937_64 eng_;
};

/// Golden-section minimization of a convex (or unimodal) function on [lo, hi].
/// Endpoints are always evaluated so exact boundary minima are returned
/// exactly. Returns {argmin, value}.
template <class F>
std::pair<double, double> golden_min(F&& f, double lo, double hi, double xtol) {
  static const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - phi * (b - a), d = a + phi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > xtol) {
    if (fc <= fd) {
      b = d; d = c; fd = fc;
      c = b - phi * (b - a);
      fc = f(c);
    } else {
      a = c; c = d; fc = fd;
      d = a + phi * (b - a);
      fd = f(d);
    }
  }
  double xm = 0.5 * (a + b), fm = f(xm);
  double flo = f(lo), fhi = f(hi);
  if (flo <= fm && flo <= fhi) return {lo, flo};
  if (fhi <= fm) return {hi, fhi};
  return {xm, fm};
}

/// Golden-section maximization on [lo, hi]; returns {argmax, value}.
template <class F>
std::pair<double, double> golden_max(F&& f, double lo, double hi, double xtol) {
  auto [x, v] = golden_min([&](double t) { return -f(t); }, lo, hi, xtol);
  return {x, -v};
}

}  // namespace numrad
