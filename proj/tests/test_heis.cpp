#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "lpheis/heis.hpp"
#include "test_util.hpp"

using namespace lpheis;

TEST_CASE("group law, inverse, center") {
  Point a{1, 0, 0}, b{0, 1, 0};
  Point ab = group_mul(a, b);
  CHECK(ab.x == 1.0);
  CHECK(ab.y == 1.0);
  CHECK(ab.z == 0.5);

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int i = 0; i < 50; ++i) {
    Point g{u(rng), u(rng), u(rng)};
    Point e = group_mul(g, group_inv(g));
    CHECK(std::abs(e.x) < 1e-14);
    CHECK(std::abs(e.y) < 1e-14);
    CHECK(std::abs(e.z) < 1e-14);
    // central direction
    Point c{0, 0, u(rng)};
    Point gc = group_mul(c, g);
    CHECK(gc.z == doctest::Approx(g.z + c.z).epsilon(1e-14));
  }
}

TEST_CASE("dilations") {
  Point a{1, 1, 1};
  Point d = dilate(2.0, a);
  CHECK(d.x == 2.0);
  CHECK(d.y == 2.0);
  CHECK(d.z == 4.0);
  Point id = dilate(1.0, a);
  CHECK(id.x == a.x);
  CHECK_THROWS_AS(dilate(0.0, a), domain_error);

  // automorphism property
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int i = 0; i < 40; ++i) {
    Point g{u(rng), u(rng), u(rng)}, h{u(rng), u(rng), u(rng)};
    double eps = 0.25 + 3.0 * (i + 1) / 40.0;
    Point lhs = dilate(eps, group_mul(g, h));
    Point rhs = group_mul(dilate(eps, g), dilate(eps, h));
    CHECK(std::abs(lhs.x - rhs.x) < 1e-13);
    CHECK(std::abs(lhs.y - rhs.y) < 1e-13);
    CHECK(std::abs(lhs.z - rhs.z) < 1e-13);
  }
}

TEST_CASE("exp_map straight lines and closing loops") {
  LpHeisenberg H(Exponent::from_p(1.5));
  SUBCASE("w = 0 is a straight line") {
    Covector c{2.0, 0.7, 0.0};
    Point g = H.exp_map(c, 0.5);
    TrigPair d = H.qtrig().dual(0.7);
    CHECK(g.x == doctest::Approx(2.0 * 0.5 * d.cos).epsilon(1e-14));
    CHECK(g.y == doctest::Approx(2.0 * 0.5 * d.sin).epsilon(1e-14));
    CHECK(g.z == 0.0);
  }
  SUBCASE("t = 0 stays at the identity") {
    Point g = H.exp_map({1.0, 0.3, 1.0}, 0.0);
    CHECK(g.x == 0.0);
    CHECK(g.y == 0.0);
    CHECK(g.z == 0.0);
  }
  SUBCASE("full turn w t = 2 pi_q lands on the vertical axis") {
    double piq = H.pi_q();
    for (double th : {0.3, 1.1, 2.0}) {
      double w = 2.0 * piq;
      Point g = H.exp_map({1.5, th, w}, 1.0);
      CHECK(std::abs(g.x) < 1e-9);
      CHECK(std::abs(g.y) < 1e-9);
      CHECK(g.z == doctest::Approx(1.5 * 1.5 * piq / (w * w)).epsilon(1e-9));
    }
  }
}

TEST_CASE("exp_map reduces to circle arcs at p = 2") {
  LpHeisenberg H(Exponent::from_p(2.0));
  for (double w : {0.5, 2.0, -1.3}) {
    for (double th : {0.0, 0.9, 4.0}) {
      Point g = H.exp_map({1.2, th, w}, 0.8);
      double r = 1.2, t = 0.8;
      double x = r / w * (std::sin(w * t + th) - std::sin(th));
      double y = -r / w * (std::cos(w * t + th) - std::cos(th));
      double z = r * r / (2 * w * w) *
                 (w * t + std::cos(w * t + th) * std::sin(th) -
                  std::sin(w * t + th) * std::cos(th));
      CHECK(g.x == doctest::Approx(x).epsilon(1e-11));
      CHECK(g.y == doctest::Approx(y).epsilon(1e-11));
      CHECK(g.z == doctest::Approx(z).epsilon(1e-11));
    }
  }
}

TEST_CASE("homogeneity of the exponential map") {
  for (double p : {1.5, 3.0}) {
    LpHeisenberg H(Exponent::from_p(p));
    std::mt19937_64 rng(101);
    std::uniform_real_distribution<double> uth(0.1, 1.2);
    std::uniform_real_distribution<double> uw(0.2, 3.0);
    for (int i = 0; i < 30; ++i) {
      Covector c{1.0 + 0.1 * i, uth(rng), uw(rng)};
      Point base = H.exp_map(c, 1.0);
      for (double s : {0.5, 2.0, 3.0}) {
        Point scaled = H.exp_map({c.r / s, c.theta, c.w / s}, s);
        CHECK(std::abs(scaled.x - base.x) < 1e-12);
        CHECK(std::abs(scaled.y - base.y) < 1e-12);
        CHECK(std::abs(scaled.z - base.z) < 1e-12);
      }
    }
  }
}

TEST_CASE("reflection and rotation symmetries") {
  LpHeisenberg H(Exponent::from_p(2.5));
  double quarter = H.pi_q_half();
  std::mt19937_64 rng(55);
  std::uniform_real_distribution<double> uth(0.05, 1.0);
  std::uniform_real_distribution<double> uw(0.3, 2.5);
  for (int i = 0; i < 40; ++i) {
    Covector c{1.0, uth(rng), uw(rng)};
    Point g = H.exp_map(c, 1.0);
    // x-axis mirror: (theta, w) -> (-theta, -w) maps the image through
    // (x, y, z) -> (x, -y, -z)
    Point refl = H.exp_map({c.r, -c.theta, -c.w}, 1.0);
    CHECK(std::abs(refl.x - g.x) < 1e-12);
    CHECK(std::abs(refl.y + g.y) < 1e-12);
    CHECK(std::abs(refl.z + g.z) < 1e-12);
    // y-axis mirror: (theta, w) -> (pi_q - theta, -w) maps it through
    // (x, y, z) -> (-x, y, -z)
    Point refy = H.exp_map({c.r, 2.0 * quarter - c.theta, -c.w}, 1.0);
    CHECK(std::abs(refy.x + g.x) < 1e-12);
    CHECK(std::abs(refy.y - g.y) < 1e-12);
    CHECK(std::abs(refy.z + g.z) < 1e-12);
    Point rot = H.exp_map({c.r, c.theta + quarter, c.w}, 1.0);
    CHECK(std::abs(rot.x + g.y) < 1e-12);
    CHECK(std::abs(rot.y - g.x) < 1e-12);
    CHECK(std::abs(rot.z - g.z) < 1e-12);
  }
}

TEST_CASE("closed form against the ODE oracle") {
  std::mt19937_64 rng(2024);
  for (double p : {1.5, 3.0}) {
    LpHeisenberg H(Exponent::from_p(p));
    double piq = H.pi_q();
    std::uniform_real_distribution<double> uth(0.0, 2.0 * piq);
    std::uniform_real_distribution<double> uw(0.1, 2.0 * piq - 0.1);
    std::uniform_real_distribution<double> ur(0.2, 2.0);
    std::uniform_real_distribution<double> sgn(0.0, 1.0);
    double worst = 0.0;
    int done = 0;
    while (done < 100) {
      Covector c{ur(rng), uth(rng), uw(rng) * (sgn(rng) < 0.5 ? -1 : 1)};
      if (H.classify(c, 1.0, 5e-3) != CovectorClass::Regular) continue;
      ++done;
      Point a = H.exp_map(c, 1.0);
      Point b = H.exp_ode(c, 1.0);
      worst = std::max({worst, std::abs(a.x - b.x), std::abs(a.y - b.y),
                        std::abs(a.z - b.z)});
    }
    CAPTURE(p);
    CHECK(worst < 1e-8);
  }
}

TEST_CASE("exp_ode straight line for w = 0") {
  LpHeisenberg H(Exponent::from_p(3.0));
  Covector c{1.3, 0.8, 0.0};
  Point a = H.exp_map(c, 1.0);
  Point b = H.exp_ode(c, 1.0);
  CHECK(std::abs(a.x - b.x) < 1e-10);
  CHECK(std::abs(a.y - b.y) < 1e-10);
  CHECK(std::abs(b.z) < 1e-12);
}

TEST_CASE("constant lp speed along geodesics") {
  for (double p : {1.5, 4.0}) {
    LpHeisenberg H(Exponent::from_p(p));
    Covector c{1.7, 0.4, 1.1};
    double h = 1e-6;
    for (double t : {0.1, 0.35, 0.6, 0.9}) {
      Point a = H.exp_map(c, t - h);
      Point b = H.exp_map(c, t + h);
      double vx = (b.x - a.x) / (2 * h), vy = (b.y - a.y) / (2 * h);
      double speed =
          std::pow(std::pow(std::abs(vx), p) + std::pow(std::abs(vy), p),
                   1.0 / p);
      CHECK(speed == doctest::Approx(1.7).epsilon(1e-5));
    }
  }
}

TEST_CASE("vertical coordinate equals the swept planar area") {
  LpHeisenberg H(Exponent::from_p(2.5));
  Covector c{1.0, 0.6, 1.7};
  const int n = 10000;
  GeodesicPath g = H.sample_path(c, n);
  double area = 0.0;
  for (int i = 0; i < n; ++i) {
    const Point& a = g.samples[i].point;
    const Point& b = g.samples[i + 1].point;
    // exact signed area of the chord polygon (trapezoid rule for x dy - y dx)
    area += 0.5 * (a.x * b.y - a.y * b.x);
  }
  CHECK(area == doctest::Approx(g.samples.back().point.z).epsilon(1e-6));
}

TEST_CASE("cut time") {
  LpHeisenberg H(Exponent::from_p(1.5));
  double piq = H.pi_q();
  CHECK(H.cut_time({1.0, 0.2, piq}) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(H.cut_time({1.0, 0.2, 2.0 * piq}) ==
        doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::isinf(H.cut_time({1.0, 0.2, 0.0})));
}

TEST_CASE("covector classification") {
  LpHeisenberg H(Exponent::from_p(3.0));
  double quarter = H.pi_q_half();
  CHECK(H.classify({1.0, 0.0, 0.0}, 0.7) == CovectorClass::S0);
  CHECK(H.classify({1.0, 0.0, 0.0}, 0.2) == CovectorClass::S0);
  double w = (quarter - 0.1) / 1.0;
  CHECK(H.classify({1.0, 0.1, w}, 1.0) == CovectorClass::S1);
  CHECK(H.classify({1.0, 0.1, 0.5}, 1.0) == CovectorClass::Regular);
  CHECK(H.classify({1.0, 0.1, 5.0 * quarter}, 1.0) ==
        CovectorClass::OutsideInjectivity);
  CHECK(H.classify({0.0, 0.1, 0.5}, 1.0) ==
        CovectorClass::OutsideInjectivity);
}

TEST_CASE("normalization of covectors") {
  LpHeisenberg H(Exponent::from_p(2.0));
  Covector c = H.normalize({1.0, -0.5, 1.0});
  CHECK(c.theta >= 0.0);
  CHECK(c.theta < 2.0 * H.pi_q());
  CHECK_THROWS_AS(H.normalize({-1.0, 0.0, 0.0}), domain_error);
}

TEST_CASE("exp_map small-w branch is consistent with moderate w") {
  // continuity across the branch switches: compare against the ODE oracle
  // in the band where the series-stabilized forms are active
  LpHeisenberg H(Exponent::from_p(1.5));
  for (double w : {1e-5, 5e-5, 2e-4, 1e-3, 1e-2}) {
    Covector c{1.0, 0.8, w};
    Point a = H.exp_map(c, 1.0);
    Point b = H.exp_ode(c, 1.0);
    CHECK(std::abs(a.x - b.x) < 1e-9);
    CHECK(std::abs(a.y - b.y) < 1e-9);
    CHECK(std::abs(a.z - b.z) < 1e-9);
  }
}
