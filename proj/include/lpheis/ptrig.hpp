#ifndef LPHEIS_PTRIG_HPP
#define LPHEIS_PTRIG_HPP

#include <array>
#include <memory>
#include <vector>

#include "lpheis/exponent.hpp"

namespace lpheis {

// One evaluation of (cos_p, sin_p) at a given angle parameter.
struct TrigPair {
  double cos = 1.0;
  double sin = 0.0;
  double angle = 0.0;
};

// Truncated small-angle series value with a calibrated remainder bound.
struct SeriesEval {
  double value = 0.0;
  int order = 0;
  double remainder_bound = 0.0;
};

struct SeriesQuad {
  SeriesEval sin_p, cos_p, dual_sin, dual_cos;
};

// Shelupsky p-trigonometric functions for one strict exponent.
//
// cos_p/sin_p are the coordinates of the point on the unit p-sphere cutting
// a sector of area theta/2. Evaluation reduces the angle to a half-quarter
// by the symmetries of the p-ball and inverts the sector-area function by
// safeguarded Newton on a precomputed cumulative-area table; tiny reduced
// angles go through the small-angle series instead, which keeps values near
// the lattice honest (no hard snapping) while still hitting the exact
// (0, +-1) patterns at the lattice itself.
//
// The table is immutable after construction; instances are cheap to copy
// and safe to share across threads.
class PTrig {
 public:
  explicit PTrig(const Exponent& e);

  const Exponent& exponent() const;
  double pi_p() const;      // area of the unit p-ball
  double pi_half() const;   // pi_p / 2, the quarter period
  double period() const;    // 2 pi_p

  // (cos_p theta, sin_p theta)
  TrigPair pair(double theta) const;

  // (cos_q theta°, sin_q theta°) = signed (p-1)-powers of pair(theta),
  // the dual-angle values in the conjugate geometry.
  TrigPair dual(double theta) const;

  // The four printed small-angle expansions about 0 (sin_p, cos_p,
  // sin_q theta°, cos_q theta°), truncated at `order` in {0, 1, 2},
  // with remainder bounds calibrated against pair()/dual().
  SeriesQuad series(double theta, int order) const;
  double series_validity_radius() const;

  // Lower bound |theta0|/(p+1) on the radius of convergence of sin_p at
  // theta0 in (-pi_p/4, pi_p/4) \ {0}.
  double radius_bound(double theta0) const;

  // Taylor coefficients of sin_p(theta0 + h*tau) and cos_p(theta0 + h*tau)
  // in tau up to degree K, generated from the derivative system
  // sin_p' = cos_p^{p-1}, cos_p' = -sin_p^{p-1). Requires theta0 strictly
  // inside (0, pi_p/2) so both values stay positive on the disk.
  struct TaylorCoeffs {
    std::vector<double> sin;
    std::vector<double> cos;
    double step;  // the scaling h
  };
  TaylorCoeffs taylor_at(double theta0, double h, int degree) const;

 private:
  struct Table;
  std::shared_ptr<const Table> t_;

  TrigPair pair_quarter(double tau) const;  // tau in [0, pi_p/2]
  double invert_area(double target) const;
  void calibrate_series();
};

}  // namespace lpheis

#endif
