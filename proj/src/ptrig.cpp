#include "lpheis/ptrig.hpp"

#include <algorithm>
#include <cmath>

#include "lpheis/common.hpp"

namespace lpheis {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// GK15 nodes, reused here without the std::function wrapper of quad.hpp
// because this sits in the innermost loop of every downstream module.
constexpr double kXgk[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
    0.7415311855993944, 0.5860872354676911, 0.4058451513773972,
    0.2077849550078985, 0.0};
constexpr double kWgk[8] = {
    0.0229353220105292, 0.0630920926299786, 0.1047900103222502,
    0.1406532597155259, 0.1690047266392679, 0.1903505780647854,
    0.2044329400752989, 0.2094821410847278};

// r(phi)^2 where r(phi) = (|cos phi|^p + |sin phi|^p)^(-1/p) is the radial
// parametrization of the p-sphere by the Euclidean angle.
inline double radius_sq(double p, double phi) {
  double c = std::abs(std::cos(phi));
  double s = std::abs(std::sin(phi));
  return std::pow(std::pow(c, p) + std::pow(s, p), -2.0 / p);
}

// 2 * (sector area increment) = integral of r^2 over [a, b].
inline double area2_increment(double p, double a, double b) {
  double c = 0.5 * (a + b);
  double h = 0.5 * (b - a);
  double acc = kWgk[7] * radius_sq(p, c);
  for (int j = 0; j < 7; ++j) {
    double x = h * kXgk[j];
    acc += kWgk[j] * (radius_sq(p, c - x) + radius_sq(p, c + x));
  }
  return acc * h;
}

}  // namespace

struct PTrig::Table {
  Exponent e;
  double p;
  double pi_p;
  double pi_half;
  double period;
  std::vector<double> phi;    // mesh on [0, pi/2], graded toward the axes
  std::vector<double> area2;  // cumulative 2*A(phi), area2.back() ~ pi_p/2

  // printed series coefficients
  double a1, a2;  // sin_p:   theta - a1 |t|^p t + a2 |t|^{2p} t
  double b1, b2;  // cos_p:   1 - b1 |t|^p + b2 |t|^{2p}
  double d1;      // dual sin: |t|^{p-2} t - d1 |t|^{2p-2} t
  double e1, e2;  // dual cos: 1 - e1 |t|^p + e2 |t|^{2p}

  double series_radius = 0.35;
  // calibrated remainder constants, [function][order]
  double rem_c[4][3] = {};
  double rem_exp[4][3] = {};

  Table(const Exponent& ex) : e(ex) {}
};

PTrig::PTrig(const Exponent& e) {
  if (!e.strict())
    throw domain_error("PTrig: requires a strict exponent p in (1, inf)");
  auto t = std::make_shared<Table>(e);
  const double p = e.p();
  t->p = p;
  t->pi_p = lpheis::pi_p(e);
  t->pi_half = 0.5 * t->pi_p;
  t->period = 2.0 * t->pi_p;

  t->a1 = (p - 1.0) / (p * (p + 1.0));
  t->a2 = (p - 1.0) * (2.0 * p * p - 3.0 * p - 1.0) /
          (2.0 * p * p * (p + 1.0) * (2.0 * p + 1.0));
  t->b1 = 1.0 / p;
  t->b2 = (p - 1.0) * (p - 1.0) / (2.0 * p * p * (p + 1.0));
  t->d1 = (p - 1.0) * (p - 1.0) / (p * (p + 1.0));
  t->e1 = (p - 1.0) / p;
  t->e2 = (p - 1.0) * (2.0 * p * p - 3.0 * p - 1.0) /
          (2.0 * p * p * (p + 1.0));

  // Mesh for the cumulative sector area. The integrand has a |phi|^p kink
  // at both axes, so the end cells are refined geometrically; interior
  // cells see an analytic integrand and one GK15 panel each is exact to
  // roundoff.
  const int n_uniform = 2048;
  const double h0 = (kPi / 2.0) / n_uniform;
  std::vector<double>& phi = t->phi;
  phi.push_back(0.0);
  for (double a = h0 * std::pow(2.0, -40); a < h0 * 0.75; a *= 2.0)
    phi.push_back(a);
  for (int k = 1; k <= n_uniform - 1; ++k) phi.push_back(k * h0);
  for (double a = h0 * 0.5; a >= h0 * std::pow(2.0, -40); a *= 0.5)
    phi.push_back(kPi / 2.0 - a);
  phi.push_back(kPi / 2.0);
  std::sort(phi.begin(), phi.end());
  phi.erase(std::unique(phi.begin(), phi.end()), phi.end());

  t->area2.resize(phi.size());
  long double acc = 0.0L;
  t->area2[0] = 0.0;
  for (size_t i = 0; i + 1 < phi.size(); ++i) {
    acc += area2_increment(p, phi[i], phi[i + 1]);
    t->area2[i + 1] = static_cast<double>(acc);
  }
  if (std::abs(t->area2.back() - t->pi_half) > 1e-9 * t->pi_half)
    throw inconsistency_error(
        "PTrig: cumulative sector area disagrees with the Gamma formula");

  t_ = t;
  calibrate_series();
}

const Exponent& PTrig::exponent() const { return t_->e; }
double PTrig::pi_p() const { return t_->pi_p; }
double PTrig::pi_half() const { return t_->pi_half; }
double PTrig::period() const { return t_->period; }
double PTrig::series_validity_radius() const { return t_->series_radius; }

double PTrig::invert_area(double target) const {
  const Table& t = *t_;
  const auto& cum = t.area2;
  size_t idx =
      std::upper_bound(cum.begin(), cum.end(), target) - cum.begin();
  if (idx == 0) idx = 1;
  if (idx >= cum.size()) idx = cum.size() - 1;
  --idx;
  const double anchor = t.phi[idx];
  const double base = cum[idx];
  double lo = t.phi[idx], hi = t.phi[idx + 1];
  // secant initial guess inside the bracketing cell
  double frac = (target - cum[idx]) / (cum[idx + 1] - cum[idx]);
  double x = lo + std::clamp(frac, 0.0, 1.0) * (hi - lo);
  const double tol = 8e-16 * (1.0 + target);
  for (int it = 0; it < 80; ++it) {
    double f = base + area2_increment(t.p, anchor, x) - target;
    if (std::abs(f) <= tol) break;
    if (f > 0.0) hi = x; else lo = x;
    double xn = x - f / radius_sq(t.p, x);
    if (!(xn > lo && xn < hi)) xn = 0.5 * (lo + hi);
    if (xn == x) break;
    x = xn;
    if (hi - lo < 4e-16 * (1.0 + x)) break;
  }
  return x;
}

TrigPair PTrig::pair_quarter(double tau) const {
  const Table& t = *t_;
  if (tau > 0.25 * t.pi_p) {
    TrigPair sw = pair_quarter(t.pi_half - tau);
    return {sw.sin, sw.cos, tau};
  }
  if (tau <= 0.0) return {1.0, 0.0, tau};
  if (tau < 1e-4) {
    // lattice-adjacent branch: the printed series avoids both the area
    // inversion's conditioning and signed-power cancellation downstream
    double tp = std::pow(tau, t.p);
    return {1.0 - tp * (t.b1 - t.b2 * tp),
            tau * (1.0 - tp * (t.a1 - t.a2 * tp)), tau};
  }
  double phi = invert_area(tau);
  double r = std::pow(std::pow(std::abs(std::cos(phi)), t.p) +
                          std::pow(std::abs(std::sin(phi)), t.p),
                      -1.0 / t.p);
  return {r * std::cos(phi), r * std::sin(phi), tau};
}

TrigPair PTrig::pair(double theta) const {
  if (!std::isfinite(theta))
    throw domain_error("PTrig::pair: non-finite angle");
  const Table& t = *t_;
  double th = theta - t.period * std::floor(theta / t.period);
  if (th >= t.period) th -= t.period;
  int k = static_cast<int>(std::floor(th / t.pi_half));
  if (k > 3) k = 3;
  double tau = th - k * t.pi_half;
  TrigPair b = pair_quarter(tau);
  TrigPair out;
  out.angle = theta;
  switch (k) {
    case 0: out.cos = b.cos;  out.sin = b.sin;  break;
    case 1: out.cos = -b.sin; out.sin = b.cos;  break;
    case 2: out.cos = -b.cos; out.sin = -b.sin; break;
    default: out.cos = b.sin; out.sin = -b.cos; break;
  }
  // normalize signed zeros so lattice values come out as exact patterns
  if (out.cos == 0.0) out.cos = 0.0;
  if (out.sin == 0.0) out.sin = 0.0;
  return out;
}

TrigPair PTrig::dual(double theta) const {
  TrigPair b = pair(theta);
  double a = t_->p - 1.0;
  return {signed_pow(b.cos, a), signed_pow(b.sin, a), theta};
}

double PTrig::radius_bound(double theta0) const {
  const Table& t = *t_;
  if (!(std::abs(theta0) < 0.25 * t.pi_p) || theta0 == 0.0)
    throw domain_error(
        "radius_bound: theta0 must lie in (-pi_p/4, pi_p/4) \\ {0}");
  return std::abs(theta0) / (t.p + 1.0);
}

SeriesQuad PTrig::series(double theta, int order) const {
  const Table& t = *t_;
  if (order < 0 || order > 2)
    throw domain_error("series: order must be 0, 1 or 2");
  if (std::abs(theta) > t.series_radius)
    throw validity_error("series: |theta| exceeds the validity radius");
  const double p = t.p;
  double atp = std::pow(std::abs(theta), p);

  SeriesQuad out;
  auto fill = [&](int f, double v0, double v1, double v2) -> SeriesEval {
    double v = v0;
    if (order >= 1) v += v1;
    if (order >= 2) v += v2;
    SeriesEval se;
    se.value = v;
    se.order = order;
    se.remainder_bound =
        t.rem_c[f][order] * std::pow(std::abs(theta), t.rem_exp[f][order]);
    return se;
  };
  out.sin_p = fill(0, theta, -t.a1 * atp * theta, t.a2 * atp * atp * theta);
  out.cos_p = fill(1, 1.0, -t.b1 * atp, t.b2 * atp * atp);
  out.dual_sin = fill(2, signed_pow(theta, p - 1.0),
                      -t.d1 * signed_pow(theta, 2.0 * p - 1.0), 0.0);
  out.dual_cos = fill(3, 1.0, -t.e1 * atp, t.e2 * atp * atp);
  return out;
}

void PTrig::calibrate_series() {
  Table* t = const_cast<Table*>(t_.get());
  const double p = t->p;
  // remainder exponents: |theta|^{(o+1)p}, and |theta|^{(o+1)p - 2} for the
  // dual sine (capped at the printed depth)
  for (int o = 0; o < 3; ++o) {
    t->rem_exp[0][o] = (o + 1) * p;
    t->rem_exp[1][o] = (o + 1) * p;
    t->rem_exp[2][o] = std::max((o + 1) * p - 2.0, p - 1.0);
    t->rem_exp[3][o] = (o + 1) * p;
  }
  t->rem_exp[2][2] = 3.0 * p - 2.0;
  t->rem_exp[2][1] = 3.0 * p - 2.0;  // both printed terms retained
  t->rem_exp[2][0] = 2.0 * p - 2.0;

  double worst[4][3] = {};
  for (int j = 1; j <= 40; ++j) {
    double th = t->series_radius * j / 40.0;
    TrigPair ref = pair(th);
    TrigPair dref = dual(th);
    double atp = std::pow(th, p);
    double vals[4][3];
    vals[0][0] = th;
    vals[0][1] = th - t->a1 * atp * th;
    vals[0][2] = vals[0][1] + t->a2 * atp * atp * th;
    vals[1][0] = 1.0;
    vals[1][1] = 1.0 - t->b1 * atp;
    vals[1][2] = vals[1][1] + t->b2 * atp * atp;
    vals[2][0] = signed_pow(th, p - 1.0);
    vals[2][1] = vals[2][0] - t->d1 * signed_pow(th, 2.0 * p - 1.0);
    vals[2][2] = vals[2][1];
    vals[3][0] = 1.0;
    vals[3][1] = 1.0 - t->e1 * atp;
    vals[3][2] = vals[3][1] + t->e2 * atp * atp;
    double refs[4] = {ref.sin, ref.cos, dref.sin, dref.cos};
    for (int f = 0; f < 4; ++f)
      for (int o = 0; o < 3; ++o) {
        double err = std::abs(vals[f][o] - refs[f]);
        double ratio = err / std::pow(th, t->rem_exp[f][o]);
        worst[f][o] = std::max(worst[f][o], ratio);
      }
  }
  for (int f = 0; f < 4; ++f)
    for (int o = 0; o < 3; ++o)
      t->rem_c[f][o] = std::max(2.0 * worst[f][o], 1e-18);
}

PTrig::TaylorCoeffs PTrig::taylor_at(double theta0, double h,
                                     int degree) const {
  const Table& t = *t_;
  TrigPair v = pair(theta0);
  if (!(v.sin > 0.0 && v.cos > 0.0))
    throw domain_error(
        "taylor_at: theta0 must lie strictly inside (0, pi_p/2)");
  const long double alpha = static_cast<long double>(t.p) - 1.0L;
  const int n = degree + 1;
  std::vector<long double> s(n, 0.0L), c(n, 0.0L), sp(n, 0.0L), cp(n, 0.0L);
  s[0] = v.sin;
  c[0] = v.cos;
  for (int m = 0; m + 1 < n; ++m) {
    // power-series recurrence for u^alpha given coefficients of u
    if (m == 0) {
      cp[0] = powl(c[0], alpha);
      sp[0] = powl(s[0], alpha);
    } else {
      long double accc = 0.0L, accs = 0.0L;
      for (int k = 1; k <= m; ++k) {
        long double w = (alpha + 1.0L) * k - m;
        accc += w * c[k] * cp[m - k];
        accs += w * s[k] * sp[m - k];
      }
      cp[m] = accc / (m * c[0]);
      sp[m] = accs / (m * s[0]);
    }
    s[m + 1] = h * cp[m] / (m + 1);
    c[m + 1] = -h * sp[m] / (m + 1);
  }
  TaylorCoeffs out;
  out.step = h;
  out.sin.assign(s.begin(), s.end());
  out.cos.assign(c.begin(), c.end());
  return out;
}

}  // namespace lpheis
