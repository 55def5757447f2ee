#ifndef LPHEIS_JAC_HPP
#define LPHEIS_JAC_HPP

#include <memory>
#include <vector>

#include "lpheis/ptrig.hpp"

namespace lpheis {

// One evaluation bundle on the (theta, w) parameter plane.
struct JacSample {
  double theta = 0.0;
  double w = 0.0;
  double jr = 0.0;      // reduced Jacobian
  double djr_dw = 0.0;  // its w-derivative
  double n_exp = 0.0;   // 1 + w * djr_dw / jr; +inf marks divergence
};

// The ray polynomial controlling the corner limits of the exponent
// functional along w/theta = s.
struct RayFunction {
  double q = 2.0;
  double s = 0.0;
  double p_val = 0.0;   // P(s), nonnegative, zero only at s = 0
  double dp_val = 0.0;  // dP/ds
  double ratio = 5.0;   // 1 + s P'(s)/P(s); 5 at s = 0, 2q+1 at +-inf
};

RayFunction ray_function(double q, double s);

// Reduced Jacobian J_R of the lp exponential map and its derived
// quantities. The full Jacobian determinant factors as
//     Jac^t(r, theta, w) = r^3 t / w^4 * J_R(theta, w t),
// so everything the contraction analysis needs lives in J_R.
//
// Evaluation reduces (theta, w) by the quarter-period and reflection
// symmetries into theta in [0, pi_q/4], then picks one of three branches:
//  - a Taylor expansion in w about w = 0 (coefficients from the q-trig
//    derivative recurrence), which removes the w^4 cancellation,
//  - the small-angle principal form near the corner theta = w = 0,
//  - the direct closed form in long double.
class ReducedJacobian {
 public:
  explicit ReducedJacobian(const Exponent& e);

  const Exponent& exponent() const;
  const PTrig& qtrig() const;
  double pi_q_half() const;
  double epsilon_q() const;      // ray-splitting constant (q+2)/2
  double series_radius() const;  // calibrated small-angle validity radius

  double operator()(double theta, double w) const;
  double dw(double theta, double w) const;
  double n_exponent(double theta, double w) const;
  JacSample sample(double theta, double w) const;

  // J_R(theta, w)/w^4 extended continuously across w = 0.
  double jr_over_w4(double theta, double w) const;

  // Principal small-angle terms (no remainder series); validity
  // |theta|, |w + theta| below series_radius().
  double small_angle(double theta, double w) const;
  double small_angle_dw(double theta, double w) const;

  // Jacobian determinant of exp^t; w = 0 uses the continuous extension,
  // which exists only for p <= 2 on the lattice.
  double jac_det(double r, double theta, double w, double t) const;

  // Cached per-theta state for scans along w; immutable and thread-safe
  // once created.
  class Slice {
   public:
    double jr(double w) const;
    double dw(double w) const;
    double jr_over_w4(double w) const;
    JacSample sample(double w) const;

   private:
    friend class ReducedJacobian;
    struct Data;
    std::shared_ptr<const Data> d_;
  };
  Slice slice(double theta) const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> i_;
};

}  // namespace lpheis

#endif
