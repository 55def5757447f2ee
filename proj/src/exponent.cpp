#include "lpheis/exponent.hpp"

#include <cmath>

#include "lpheis/gammafn.hpp"

namespace lpheis {

double Exponent::conjugate_of(double p) {
  if (p == 1.0) return kInf;
  if (std::isinf(p)) return 1.0;
  return p / (p - 1.0);
}

Exponent Exponent::from_p(double p) {
  if (std::isnan(p) || p < 1.0)
    throw domain_error("Exponent: p must lie in [1, inf]");
  double q = conjugate_of(p);
  Regime r = (p == 1.0 || std::isinf(p)) ? Regime::Polygonal : Regime::Strict;
  Exponent e(p, q, r);
  if (std::abs(e.holder_defect() - 1.0) >= 1e-14)
    throw domain_error("Exponent: conjugate pair fails 1/p + 1/q = 1");
  return e;
}

Exponent Exponent::conjugate() const { return Exponent(q_, p_, regime_); }

double Exponent::holder_defect() const {
  double ip = std::isinf(p_) ? 0.0 : 1.0 / p_;
  double iq = std::isinf(q_) ? 0.0 : 1.0 / q_;
  return ip + iq;
}

double pi_p(const Exponent& e) {
  if (std::isinf(e.p())) return 4.0;
  double a = gamma_fn(1.0 + 1.0 / e.p());
  double b = gamma_fn(1.0 + 2.0 / e.p());
  return 4.0 * a * a / b;
}

}  // namespace lpheis
