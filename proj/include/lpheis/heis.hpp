#ifndef LPHEIS_HEIS_HPP
#define LPHEIS_HEIS_HPP

#include <vector>

#include "lpheis/ptrig.hpp"

namespace lpheis {

// Exponential coordinates (x, y, z) on the Heisenberg group.
struct Point {
  double x = 0.0, y = 0.0, z = 0.0;
};

Point group_mul(const Point& a, const Point& b);
Point group_inv(const Point& a);
Point dilate(double eps, const Point& a);

// Initial covector (r, theta, w) in the cotangent fiber at the identity.
struct Covector {
  double r = 0.0;
  double theta = 0.0;
  double w = 0.0;
};

enum class CovectorClass { Regular, S0, S1, OutsideInjectivity };

struct PathSample {
  double t;
  Point point;
};

struct GeodesicPath {
  std::vector<PathSample> samples;
  Covector covector;
  double p = 2.0;
};

// Geometry of one lp-Heisenberg group (strict regime). Geodesics from the
// identity are driven by q-trigonometry, q the Hoelder conjugate; the
// single shared q-trig table lives here.
class LpHeisenberg {
 public:
  explicit LpHeisenberg(const Exponent& e);

  const Exponent& exponent() const { return e_; }
  const PTrig& qtrig() const { return qt_; }
  double pi_q() const { return qt_.pi_p(); }
  double pi_q_half() const { return qt_.pi_half(); }

  // theta reduced to [0, 2 pi_q), r >= 0 enforced.
  Covector normalize(const Covector& c) const;

  // Closed-form geodesic point at time t in [0, 1]; the branch below
  // |w| t < 1e-4 is series-stabilized (midpoint dual for x, y and a linear
  // blend of the z limit).
  Point exp_map(const Covector& c, double t) const;

  // Independent endpoint oracle: integrates the control dynamics
  //   x' = u1, y' = u2, z' = (x u2 - y u1)/2,
  //   (u1, u2) = r * dual q-trig at angle w t + theta
  // with an adaptive Dormand-Prince 5(4) pair, splitting steps at the
  // control corners w t + theta in (pi_q/2) Z.
  Point exp_ode(const Covector& c, double t, double tol = 1e-11) const;

  // 2 pi_q / |w|, +inf for w = 0.
  double cut_time(const Covector& c) const;

  CovectorClass classify(const Covector& c, double t,
                         double band = 1e-9) const;

  GeodesicPath sample_path(const Covector& c, int n) const;

 private:
  Exponent e_;
  PTrig qt_;
};

}  // namespace lpheis

#endif
