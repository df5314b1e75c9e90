#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "thermo/contour.hpp"
#include "thermo/synth.hpp"

using namespace thermo;

TEST_CASE("koch construction basics") {
  const auto l0 = koch_curve(0);
  REQUIRE(l0.size() == 2);
  const auto l1 = koch_curve(1);
  REQUIRE(l1.size() == 5);
  CHECK(l1[2].x == Catch::Approx(0.5));
  CHECK(l1[2].y == Catch::Approx(std::sqrt(3.0) / 6.0));  // peak height of the base segment
  const auto l3 = koch_curve(3);
  CHECK(l3.size() == 64 + 1);  // 4^3 segments

  try {
    koch_curve(9);
    FAIL("expected LevelOutOfRange");
  } catch (const Error& e) {
    CHECK(e.code() == errc::level_out_of_range);
  }
}

TEST_CASE("logistic series: stable fixed point at r=2") {
  const auto s = logistic_series(2.0, 50, 0.3, 200);
  for (double v : s) CHECK(v == Catch::Approx(0.5).margin(1e-9));
}

TEST_CASE("logistic series parameter validation") {
  try {
    logistic_series(4.5, 10, 0.5);
    FAIL("expected InvalidParams");
  } catch (const Error& e) {
    CHECK(e.code() == errc::invalid_params);
  }
  try {
    logistic_series(4.0, 10, 1.5);
    FAIL("expected InvalidParams");
  } catch (const Error& e) {
    CHECK(e.code() == errc::invalid_params);
  }
}

TEST_CASE("henon with b=0 reduces to the 1-D quadratic map") {
  const auto s = henon_series(64, 1.4, 0.0, 0, 0.1, 0.0);
  double x = 0.1;
  for (double v : s) {
    x = 1.0 - 1.4 * x * x;
    CHECK(v == Catch::Approx(x).margin(1e-12));
  }
}

TEST_CASE("henon is deterministic and bounded at canonical parameters") {
  const auto a = henon_series(2000);
  const auto b = henon_series(2000);
  CHECK(a == b);
  for (double v : a) CHECK(std::fabs(v) < 2.0);
}

TEST_CASE("henon divergence is detected") {
  try {
    henon_series(1000, 6.0, 0.3, 0);
    FAIL("expected Divergence");
  } catch (const Error& e) {
    CHECK(e.code() == errc::divergence);
  }
}

TEST_CASE("white noise is standardized and seed-deterministic") {
  const auto a = white_noise(500, 7);
  const auto b = white_noise(500, 7);
  const auto c = white_noise(500, 8);
  CHECK(a == b);
  CHECK(a != c);
  double mean = 0.0;
  for (double v : a) mean += v;
  mean /= static_cast<double>(a.size());
  double ss = 0.0;
  for (double v : a) ss += (v - mean) * (v - mean);
  CHECK(mean == Catch::Approx(0.0).margin(1e-12));
  CHECK(std::sqrt(ss / static_cast<double>(a.size())) == Catch::Approx(1.0).margin(1e-12));
}

TEST_CASE("sine periodicity") {
  const auto s = sine_wave(200, 40.0);
  for (size_t i = 0; i + 40 < s.size(); ++i) CHECK(s[i] == Catch::Approx(s[i + 40]).margin(1e-9));
}

TEST_CASE("gen_contour amp=0 gives a near-perfect circle") {
  ContourParams p;
  p.amp = 0.0;
  p.base_radius = 50.0;
  p.seed = 3;
  const SynthContour c = gen_contour(p);
  const RadialSignal sig = radial_signal(c.contour);
  for (double v : sig.values) CHECK(v == Catch::Approx(50.0).margin(1.0));
}

TEST_CASE("gen_contour rejects self-intersecting amplitude") {
  ContourParams p;
  p.amp = 1.0;
  try {
    gen_contour(p);
    FAIL("expected SelfIntersection");
  } catch (const Error& e) {
    CHECK(e.code() == errc::self_intersection);
  }
}

TEST_CASE("gen_contour is seed-deterministic") {
  ContourParams p;
  p.class_kind = ContourClass::malignant;
  p.amp = 0.15;
  p.seed = 123;
  const SynthContour a = gen_contour(p);
  const SynthContour b = gen_contour(p);
  CHECK(a.mask.data == b.mask.data);
  CHECK(a.contour.points.size() == b.contour.points.size());
}

TEST_CASE("mask rasterization reproduces the generating radius function") {
  for (std::uint64_t seed : {5ull, 6ull}) {
    ContourParams p;
    p.class_kind = ContourClass::malignant;
    p.base_radius = 60.0;
    p.amp = 0.1;
    p.spectral_decay = 1.2;
    p.seed = seed;
    const SynthContour c = gen_contour(p);
    const Contour& tr = c.contour;
    // compare each traced point's distance-to-center with radius(theta)
    double ss = 0.0;
    for (const auto& pt : tr.points) {
      const double dx = pt.x - c.cx, dy = pt.y - c.cy;
      const double want = c.radius_at(std::atan2(dy, dx));
      const double got = std::hypot(dx, dy);
      ss += (got - want) * (got - want);
    }
    const double rms = std::sqrt(ss / static_cast<double>(tr.points.size()));
    CHECK(rms < 0.02 * p.base_radius);
  }
}
