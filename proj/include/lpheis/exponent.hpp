#ifndef LPHEIS_EXPONENT_HPP
#define LPHEIS_EXPONENT_HPP

#include "lpheis/common.hpp"

namespace lpheis {

enum class Regime { Strict, Polygonal };

// Validated Hoelder-conjugate pair (p, q) with 1/p + 1/q = 1, using the
// convention 1/inf = 0. Strict means p in (1, inf); p in {1, inf} is the
// polygonal regime handled by the poly module.
class Exponent {
 public:
  static Exponent from_p(double p);
  static Exponent from_q(double q) { return from_p(conjugate_of(q)); }

  double p() const { return p_; }
  double q() const { return q_; }
  Regime regime() const { return regime_; }
  bool strict() const { return regime_ == Regime::Strict; }

  Exponent conjugate() const;

  // 1/p + 1/q with 1/inf = 0; must equal 1 within 1e-14.
  double holder_defect() const;

  static double conjugate_of(double p);

 private:
  Exponent(double p, double q, Regime r) : p_(p), q_(q), regime_(r) {}
  double p_;
  double q_;
  Regime regime_;
};

// Area of the unit p-ball, 4*Gamma(1+1/p)^2 / Gamma(1+2/p); 4 for p = inf.
double pi_p(const Exponent& e);

}  // namespace lpheis

#endif
