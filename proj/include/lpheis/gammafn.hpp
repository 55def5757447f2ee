#ifndef LPHEIS_GAMMAFN_HPP
#define LPHEIS_GAMMAFN_HPP

namespace lpheis {

// Gamma function, Lanczos approximation (g = 7, 9 coefficients).
// Relative accuracy is well below 1e-12 on the arguments used here
// (everything lands in (0, 3] after the recurrence).
double gamma_fn(double x);

}  // namespace lpheis

#endif
