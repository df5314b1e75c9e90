#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <unordered_set>

#include "thermo/boxcount.hpp"
#include "thermo/rng.hpp"
#include "thermo/synth.hpp"

using namespace thermo;

namespace {

std::vector<Point2> segment_points(size_t n, double angle) {
  std::vector<Point2> pts(n);
  const double c = std::cos(angle), s = std::sin(angle);
  for (size_t i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(n - 1);
    pts[i] = {t * c, t * s};
  }
  return pts;
}

// independent recount on an occupancy bitmap, for cross-checking box_count
size_t bitmap_count(const std::vector<Point2>& pts, int k) {
  double lo_x = pts[0].x, hi_x = pts[0].x, lo_y = pts[0].y, hi_y = pts[0].y;
  for (const auto& p : pts) {
    lo_x = std::min(lo_x, p.x);
    hi_x = std::max(hi_x, p.x);
    lo_y = std::min(lo_y, p.y);
    hi_y = std::max(hi_y, p.y);
  }
  const double ext = std::max(hi_x - lo_x, hi_y - lo_y);
  const int nside = 1 << k;
  std::vector<char> seen(static_cast<size_t>(nside) * nside, 0);
  for (const auto& p : pts) {
    int ix = static_cast<int>((p.x - lo_x) / ext * nside);
    int iy = static_cast<int>((p.y - lo_y) / ext * nside);
    ix = std::min(ix, nside - 1);
    iy = std::min(iy, nside - 1);
    seen[static_cast<size_t>(iy) * nside + ix] = 1;
  }
  size_t n = 0;
  for (char c : seen) n += static_cast<size_t>(c);
  return n;
}

}  // namespace

TEST_CASE("straight segment has dimension 1") {
  const auto pts = segment_points(10000, 0.369);
  const auto scales = dyadic_scales(1, 8);
  CHECK(box_counting_dim(pts, scales) == Catch::Approx(1.0).margin(0.05));
}

TEST_CASE("koch level 6 approaches log4/log3") {
  const auto pts = koch_curve(6);
  REQUIRE(pts.size() == 4097);
  // per-scale counts cross-checked against the bitmap oracle
  double lo_x = pts[0].x, lo_y = pts[0].y, hi_x = pts[0].x, hi_y = pts[0].y;
  for (const auto& p : pts) {
    lo_x = std::min(lo_x, p.x);
    hi_x = std::max(hi_x, p.x);
    lo_y = std::min(lo_y, p.y);
    hi_y = std::max(hi_y, p.y);
  }
  const double ext = std::max(hi_x - lo_x, hi_y - lo_y);
  for (int k = 2; k <= 8; ++k)
    CHECK(box_count(pts, std::ldexp(1.0, -k), lo_x, lo_y, ext) == bitmap_count(pts, k));

  const auto scales = dyadic_scales(2, 8);
  const double target = std::log(4.0) / std::log(3.0);
  CHECK(box_counting_dim(pts, scales) == Catch::Approx(target).margin(0.06));
}

TEST_CASE("uniform square sample has dimension 2") {
  Rng rng(42);
  std::vector<Point2> pts(10000);
  for (auto& p : pts) p = {rng.uniform(), rng.uniform()};
  // finest scale limited by sample density: 2^6 boxes per side on 1e4 points
  const auto scales = dyadic_scales(1, 6);
  CHECK(box_counting_dim(pts, scales) == Catch::Approx(2.0).margin(0.1));
}

TEST_CASE("similarity transforms leave the estimate within tolerance") {
  const auto base = koch_curve(5);
  const auto scales = dyadic_scales(2, 7);
  const double d0 = box_counting_dim(base, scales);

  std::vector<Point2> moved(base.size()), scaled(base.size()), rotated(base.size());
  const double ang = 0.7;
  for (size_t i = 0; i < base.size(); ++i) {
    moved[i] = {base[i].x + 13.5, base[i].y - 2.25};
    scaled[i] = {base[i].x * 37.0, base[i].y * 37.0};
    rotated[i] = {base[i].x * std::cos(ang) - base[i].y * std::sin(ang),
                  base[i].x * std::sin(ang) + base[i].y * std::cos(ang)};
  }
  CHECK(box_counting_dim(moved, scales) == Catch::Approx(d0).margin(1e-12));
  CHECK(box_counting_dim(scaled, scales) == Catch::Approx(d0).margin(1e-12));
  CHECK(box_counting_dim(rotated, scales) == Catch::Approx(d0).margin(0.05));
}

TEST_CASE("degenerate inputs are rejected") {
  const std::vector<Point2> same(10, Point2{1.0, 2.0});
  try {
    box_counting_dim(same);
    FAIL("expected DegeneratePointSet");
  } catch (const Error& e) {
    CHECK(e.code() == errc::degenerate_point_set);
  }
  const std::vector<Point2> two{{0, 0}, {1, 1}};
  const std::vector<double> three{0.5, 0.25, 0.125};
  try {
    box_counting_dim(two, three);
    FAIL("expected InvalidRange");
  } catch (const Error& e) {
    CHECK(e.code() == errc::invalid_range);
  }
}
