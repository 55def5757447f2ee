#ifndef LPHEIS_QUAD_HPP
#define LPHEIS_QUAD_HPP

#include <functional>
#include <vector>

namespace lpheis {

struct QuadResult {
  double value = 0.0;
  double error = 0.0;  // estimated absolute error
};

// Single 15-point Gauss-Kronrod panel on [a, b]; error estimate from the
// embedded 7-point Gauss rule.
QuadResult gk15_panel(const std::function<double(double)>& f, double a,
                      double b);

// Adaptive bisection on [a, b]. Stops when the summed panel error is below
// max(atol, rtol*|value|). Panels are accumulated left to right, so the
// result does not depend on the work schedule. Throws integration_error if
// max_depth is hit while the tolerance is still unmet.
QuadResult adaptive_gk15(const std::function<double(double)>& f, double a,
                         double b, double atol, double rtol,
                         int max_depth = 40);

// Same, with mandatory interior split points (branch switches, kinks).
QuadResult adaptive_gk15_split(const std::function<double(double)>& f,
                               double a, double b,
                               const std::vector<double>& splits, double atol,
                               double rtol, int max_depth = 40);

}  // namespace lpheis

#endif
