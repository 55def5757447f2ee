#ifndef LPHEIS_COMMON_HPP
#define LPHEIS_COMMON_HPP

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace lpheis {

// Thrown when an argument is outside the mathematical domain of an operation.
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Thrown when a series or asymptotic form is evaluated outside its
// calibrated validity region.
class validity_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Thrown when an adaptive integrator or ODE solver cannot reach the
// requested tolerance.
class integration_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown at points where the evaluated quantity has no finite value
// (corner singularities of the exponential map for p > 2).
class singular_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Thrown when a computed value contradicts an analytic certainty,
// indicating an implementation bug rather than bad input.
class inconsistency_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// |x|^a sgn(x), with 0 -> 0 for a > 0. Single audited primitive for all
// fractional signed powers.
inline double signed_pow(double x, double a) {
  if (x == 0.0) return a > 0.0 ? 0.0 : (a == 0.0 ? 0.0 : kInf);
  double m = std::pow(std::abs(x), a);
  return x < 0.0 ? -m : m;
}

inline long double signed_pow(long double x, long double a) {
  if (x == 0.0L) return a > 0.0L ? 0.0L : (a == 0.0L ? 0.0L : HUGE_VALL);
  long double m = powl(fabsl(x), a);
  return x < 0.0L ? -m : m;
}

// Distance of x to the lattice s*Z.
inline double lattice_distance(double x, double s) {
  double r = std::remainder(x, s);
  return std::abs(r);
}

template <class T>
inline int sgn(T x) {
  return (x > T(0)) - (x < T(0));
}

// Compensated accumulator; used wherever a reduction order is pinned
// for reproducibility.
struct KahanSum {
  double sum = 0.0;
  double carry = 0.0;
  void add(double v) {
    double y = v - carry;
    double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
  double value() const { return sum; }
};

// Execution policy for the grid kernels. Serial is the reference path;
// Parallel must produce bit-identical results (per-cell values are stored
// by index and reduced in index order).
enum class Exec { Serial, Parallel };

}  // namespace lpheis

#endif
