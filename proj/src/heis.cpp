#include "lpheis/heis.hpp"

#include <algorithm>
#include <cmath>

#include "lpheis/common.hpp"

namespace lpheis {

Point group_mul(const Point& a, const Point& b) {
  return {a.x + b.x, a.y + b.y,
          a.z + b.z + 0.5 * (a.x * b.y - b.x * a.y)};
}

Point group_inv(const Point& a) { return {-a.x, -a.y, -a.z}; }

Point dilate(double eps, const Point& a) {
  if (!(eps > 0.0)) throw domain_error("dilate: eps must be positive");
  return {eps * a.x, eps * a.y, eps * eps * a.z};
}

LpHeisenberg::LpHeisenberg(const Exponent& e)
    : e_(e), qt_(e.conjugate()) {
  if (!e.strict())
    throw domain_error("LpHeisenberg: requires a strict exponent");
}

Covector LpHeisenberg::normalize(const Covector& c) const {
  if (!(c.r >= 0.0) || !std::isfinite(c.theta) || !std::isfinite(c.w))
    throw domain_error("Covector: r >= 0 and finite coordinates required");
  double per = qt_.period();
  double th = c.theta - per * std::floor(c.theta / per);
  if (th >= per) th -= per;
  return {c.r, th, c.w};
}

namespace {

// quadrant rotations of the exponential image: theta += k pi_q/2 is the
// planar quarter rotation, z unchanged
inline Point rotate_quadrant(const Point& pt, int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return pt;
    case 1: return {-pt.y, pt.x, pt.z};
    case 2: return {-pt.x, -pt.y, pt.z};
    default: return {pt.y, -pt.x, pt.z};
  }
}

}  // namespace

Point LpHeisenberg::exp_map(const Covector& cv, double t) const {
  Covector c = normalize(cv);
  const double r = c.r;
  if (r == 0.0 || t == 0.0) return {0.0, 0.0, 0.0};
  const double q = e_.q();
  const double quarter = qt_.pi_half();

  // reduce theta to [0, quarter) and rotate the image back at the end
  int k = static_cast<int>(std::floor(c.theta / quarter));
  double th = c.theta - k * quarter;
  if (th < 0.0) th = 0.0;

  const double w = c.w;
  if (w == 0.0) {
    TrigPair d = qt_.dual(th);
    return rotate_quadrant({r * t * d.cos, r * t * d.sin, 0.0}, k);
  }

  const double dt = w * t;  // angle advance
  double dist = std::min(th, quarter - th);
  double rad = dist / (q + 1.0);

  if (std::abs(dt) < 0.6 * rad && th > 0.0) {
    // Series-stabilized branch: expand the q-trig differences at theta.
    // The k = 0 and k = 1 terms of the z bracket cancel identically against
    // w t, so summing from k = 2 removes the catastrophic cancellation of
    // the direct form.
    double h = rad;
    auto tc = qt_.taylor_at(th, h, 56);
    double u = dt / h;
    double s0 = tc.sin[0], c0 = tc.cos[0];
    double sx = 0.0, sy = 0.0, sz = 0.0;
    for (int j = (int)tc.sin.size() - 1; j >= 1; --j) {
      sx = sx * u + tc.sin[j];
      sy = sy * u + tc.cos[j];
      if (j >= 2) sz = sz * u + (tc.cos[j] * s0 - tc.sin[j] * c0);
    }
    sx *= u;
    sy *= u;
    sz *= u * u;
    double x = r / w * sx;
    double y = -r / w * sy;
    double z = r * r / (2.0 * w * w) * sz;
    return rotate_quadrant({x, y, z}, k);
  }

  if (std::abs(dt) < 1e-4) {
    // near a lattice angle with a tiny advance: midpoint dual for x, y and
    // a linear blend of z from the branch switch
    TrigPair d = qt_.dual(th + 0.5 * dt);
    double x = r * t * d.cos;
    double y = r * t * d.sin;
    double ws = std::copysign(1e-4 / t, w);
    TrigPair A = qt_.pair(ws * t + th);
    TrigPair B = qt_.pair(th);
    long double br = (long double)(ws * t) +
                     (long double)A.cos * B.sin - (long double)A.sin * B.cos;
    double zb = r * r / (2.0 * ws * ws) * (double)br;
    return rotate_quadrant({x, y, zb * (w / ws)}, k);
  }

  TrigPair A = qt_.pair(dt + th);
  TrigPair B = qt_.pair(th);
  double x = r / w * (A.sin - B.sin);
  double y = -r / w * (A.cos - B.cos);
  long double br = (long double)dt +
                   (long double)A.cos * B.sin - (long double)A.sin * B.cos;
  double z = r * r / (2.0 * w * w) * (double)br;
  return rotate_quadrant({x, y, z}, k);
}

double LpHeisenberg::cut_time(const Covector& c) const {
  if (c.w == 0.0) return kInf;
  return 2.0 * qt_.pi_p() / std::abs(c.w);
}

CovectorClass LpHeisenberg::classify(const Covector& cv, double t,
                                     double band) const {
  Covector c = normalize(cv);
  double quarter = qt_.pi_half();
  if (c.r == 0.0 || std::abs(c.w) * t >= 2.0 * qt_.pi_p())
    return CovectorClass::OutsideInjectivity;
  if (std::abs(c.w) * t < band &&
      lattice_distance(c.theta, quarter) < band)
    return CovectorClass::S0;
  if (std::abs(c.w) != 0.0 &&
      lattice_distance(c.w * t + c.theta, quarter) < band)
    return CovectorClass::S1;
  return CovectorClass::Regular;
}

namespace {

struct Dp54State {
  double x, y, z;
};

}  // namespace

Point LpHeisenberg::exp_ode(const Covector& cv, double t, double tol) const {
  Covector c = normalize(cv);
  const double r = c.r;
  if (r == 0.0 || t == 0.0) return {0.0, 0.0, 0.0};

  auto rhs = [&](double s, const Dp54State& y, Dp54State& dy) {
    TrigPair u = qt_.dual(c.w * s + c.theta);
    double u1 = r * u.cos, u2 = r * u.sin;
    dy.x = u1;
    dy.y = u2;
    dy.z = 0.5 * (y.x * u2 - y.y * u1);
  };

  // corner times: w s + theta crossing the quarter lattice
  std::vector<double> stops;
  stops.push_back(0.0);
  if (c.w != 0.0) {
    double quarter = qt_.pi_half();
    double a0 = c.theta, a1 = c.w * t + c.theta;
    double lo = std::min(a0, a1), hi = std::max(a0, a1);
    long k0 = (long)std::ceil(lo / quarter - 1e-12);
    long k1 = (long)std::floor(hi / quarter + 1e-12);
    for (long kk = k0; kk <= k1; ++kk) {
      double s = (kk * quarter - c.theta) / c.w;
      if (s > 1e-14 && s < t * (1.0 - 1e-14)) stops.push_back(s);
    }
  }
  stops.push_back(t);
  std::sort(stops.begin(), stops.end());

  Dp54State y{0.0, 0.0, 0.0};
  for (size_t seg = 0; seg + 1 < stops.size(); ++seg) {
    double s = stops[seg];
    double send = stops[seg + 1];
    if (send - s <= 0.0) continue;
    double h = (send - s) / 16.0;
    Dp54State k1, k2, k3, k4, k5, k6, k7;
    rhs(s, y, k1);
    int guard = 0;
    while (s < send) {
      if (++guard > 2000000)
        throw integration_error("exp_ode: step-size underflow");
      h = std::min(h, send - s);
      Dp54State w2{y.x + h * 0.2 * k1.x, y.y + h * 0.2 * k1.y,
                   y.z + h * 0.2 * k1.z};
      rhs(s + 0.2 * h, w2, k2);
      Dp54State w3{y.x + h * (3.0 / 40 * k1.x + 9.0 / 40 * k2.x),
                   y.y + h * (3.0 / 40 * k1.y + 9.0 / 40 * k2.y),
                   y.z + h * (3.0 / 40 * k1.z + 9.0 / 40 * k2.z)};
      rhs(s + 0.3 * h, w3, k3);
      Dp54State w4{
          y.x + h * (44.0 / 45 * k1.x - 56.0 / 15 * k2.x + 32.0 / 9 * k3.x),
          y.y + h * (44.0 / 45 * k1.y - 56.0 / 15 * k2.y + 32.0 / 9 * k3.y),
          y.z + h * (44.0 / 45 * k1.z - 56.0 / 15 * k2.z + 32.0 / 9 * k3.z)};
      rhs(s + 0.8 * h, w4, k4);
      Dp54State w5{y.x + h * (19372.0 / 6561 * k1.x - 25360.0 / 2187 * k2.x +
                              64448.0 / 6561 * k3.x - 212.0 / 729 * k4.x),
                   y.y + h * (19372.0 / 6561 * k1.y - 25360.0 / 2187 * k2.y +
                              64448.0 / 6561 * k3.y - 212.0 / 729 * k4.y),
                   y.z + h * (19372.0 / 6561 * k1.z - 25360.0 / 2187 * k2.z +
                              64448.0 / 6561 * k3.z - 212.0 / 729 * k4.z)};
      rhs(s + 8.0 / 9.0 * h, w5, k5);
      Dp54State w6{
          y.x + h * (9017.0 / 3168 * k1.x - 355.0 / 33 * k2.x +
                     46732.0 / 5247 * k3.x + 49.0 / 176 * k4.x -
                     5103.0 / 18656 * k5.x),
          y.y + h * (9017.0 / 3168 * k1.y - 355.0 / 33 * k2.y +
                     46732.0 / 5247 * k3.y + 49.0 / 176 * k4.y -
                     5103.0 / 18656 * k5.y),
          y.z + h * (9017.0 / 3168 * k1.z - 355.0 / 33 * k2.z +
                     46732.0 / 5247 * k3.z + 49.0 / 176 * k4.z -
                     5103.0 / 18656 * k5.z)};
      rhs(s + h, w6, k6);
      Dp54State y5{
          y.x + h * (35.0 / 384 * k1.x + 500.0 / 1113 * k3.x +
                     125.0 / 192 * k4.x - 2187.0 / 6784 * k5.x +
                     11.0 / 84 * k6.x),
          y.y + h * (35.0 / 384 * k1.y + 500.0 / 1113 * k3.y +
                     125.0 / 192 * k4.y - 2187.0 / 6784 * k5.y +
                     11.0 / 84 * k6.y),
          y.z + h * (35.0 / 384 * k1.z + 500.0 / 1113 * k3.z +
                     125.0 / 192 * k4.z - 2187.0 / 6784 * k5.z +
                     11.0 / 84 * k6.z)};
      rhs(s + h, y5, k7);
      double ex = h * (71.0 / 57600 * k1.x - 71.0 / 16695 * k3.x +
                       71.0 / 1920 * k4.x - 17253.0 / 339200 * k5.x +
                       22.0 / 525 * k6.x - 1.0 / 40 * k7.x);
      double ey = h * (71.0 / 57600 * k1.y - 71.0 / 16695 * k3.y +
                       71.0 / 1920 * k4.y - 17253.0 / 339200 * k5.y +
                       22.0 / 525 * k6.y - 1.0 / 40 * k7.y);
      double ez = h * (71.0 / 57600 * k1.z - 71.0 / 16695 * k3.z +
                       71.0 / 1920 * k4.z - 17253.0 / 339200 * k5.z +
                       22.0 / 525 * k6.z - 1.0 / 40 * k7.z);
      double sc = tol + tol * std::max({std::abs(y.x), std::abs(y.y),
                                        std::abs(y.z), 1.0});
      double err = std::sqrt((ex * ex + ey * ey + ez * ez) / 3.0) / sc;
      if (err <= 1.0) {
        s += h;
        y = y5;
        k1 = k7;  // FSAL
      }
      double fac = 0.9 * std::pow(std::max(err, 1e-10), -0.2);
      h *= std::clamp(fac, 0.2, 5.0);
      if (h < 1e-15 * t)
        throw integration_error("exp_ode: step-size underflow");
    }
  }
  return {y.x, y.y, y.z};
}

GeodesicPath LpHeisenberg::sample_path(const Covector& cv, int n) const {
  if (n < 1) throw domain_error("sample_path: need n >= 1");
  GeodesicPath g;
  g.covector = normalize(cv);
  g.p = e_.p();
  g.samples.reserve(n + 1);
  for (int i = 0; i <= n; ++i) {
    double t = static_cast<double>(i) / n;
    g.samples.push_back({t, exp_map(cv, t)});
  }
  return g;
}

}  // namespace lpheis
