#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>

#include "thermo/image.hpp"
#include "thermo/io.hpp"
#include "thermo/rng.hpp"

using namespace thermo;

namespace {
GrayImage make(int w, int h, std::initializer_list<double> vals) {
  GrayImage img(w, h);
  size_t i = 0;
  for (double v : vals) img.data[i++] = v;
  return img;
}
}  // namespace

TEST_CASE("normalize_minmax rescales to [0,1]") {
  const GrayImage img = make(2, 2, {0, 2, 4, 8});
  const GrayImage out = normalize_minmax(img);
  CHECK(out.data[0] == 0.0);
  CHECK(out.data[1] == 0.25);
  CHECK(out.data[2] == 0.5);
  CHECK(out.data[3] == 1.0);
}

TEST_CASE("normalize_minmax rejects constant images") {
  const GrayImage img = make(2, 2, {5, 5, 5, 5});
  try {
    normalize_minmax(img);
    FAIL("expected ConstantImage");
  } catch (const Error& e) {
    CHECK(e.code() == errc::constant_image);
  }
}

TEST_CASE("normalize_minmax fixes 0 and 1, preserves order, is idempotent") {
  const GrayImage img = make(3, 1, {0.0, 0.3, 1.0});
  const GrayImage out = normalize_minmax(img);
  CHECK(out.data[0] == 0.0);
  CHECK(out.data[1] == 0.3);
  CHECK(out.data[2] == 1.0);

  // idempotence on a generic image
  const GrayImage g = make(2, 3, {3.0, -1.0, 7.5, 2.2, 0.0, 5.5});
  const GrayImage once = normalize_minmax(g);
  const GrayImage twice = normalize_minmax(once);
  for (size_t i = 0; i < once.size(); ++i) CHECK(twice.data[i] == Catch::Approx(once.data[i]).margin(1e-15));
  for (size_t i = 1; i < once.size(); ++i)
    CHECK((g.data[i] < g.data[i - 1]) == (once.data[i] < once.data[i - 1]));
}

TEST_CASE("resize_bilinear identity and constant cases") {
  const GrayImage c(1, 1, 0.42);
  const GrayImage up = resize_bilinear(c, 4, 4);
  for (double v : up.data) CHECK(v == 0.42);

  const GrayImage img = make(2, 2, {0, 1, 1, 0});
  const GrayImage same = resize_bilinear(img, 2, 2);
  CHECK(same.data == img.data);
}

TEST_CASE("resize_bilinear corner-aligned center value") {
  const GrayImage img = make(2, 2, {0, 1, 1, 0});
  const GrayImage out = resize_bilinear(img, 3, 3);
  CHECK(out.at(1, 1) == Catch::Approx(0.5));  // hand-evaluated bilinear at (0.5, 0.5)
  CHECK(out.at(0, 0) == 0.0);
  CHECK(out.at(2, 2) == 0.0);
  CHECK(out.at(2, 0) == 1.0);
}

TEST_CASE("resize_bilinear output stays within input range") {
  Rng rng(4);
  for (int rep = 0; rep < 20; ++rep) {
    GrayImage img(3 + static_cast<int>(rng.below(6)), 3 + static_cast<int>(rng.below(6)));
    for (auto& v : img.data) v = rng.uniform(-5.0, 5.0);
    const double lo = *std::min_element(img.data.begin(), img.data.end());
    const double hi = *std::max_element(img.data.begin(), img.data.end());
    const GrayImage out =
        resize_bilinear(img, 1 + static_cast<int>(rng.below(12)), 1 + static_cast<int>(rng.below(12)));
    for (double v : out.data) {
      CHECK(v >= lo - 1e-12);
      CHECK(v <= hi + 1e-12);
    }
  }
}

TEST_CASE("roi_bbox pads and clamps") {
  BinaryMask m(8, 8);
  m.at(5, 5) = 1;
  const Rect r0 = roi_bbox(m, 0);
  CHECK(r0.x0 == 5);
  CHECK(r0.y0 == 5);
  CHECK(r0.width() == 1);
  CHECK(r0.height() == 1);

  BinaryMask m2(4, 4);
  m2.at(0, 0) = 1;
  const Rect r1 = roi_bbox(m2, 3);
  CHECK(r1.x0 == 0);
  CHECK(r1.y0 == 0);
  CHECK(r1.width() == 4);
  CHECK(r1.height() == 4);

  BinaryMask full(4, 3);
  for (auto& v : full.data) v = 1;
  const Rect r2 = roi_bbox(full, 2);
  CHECK(r2.width() == 4);
  CHECK(r2.height() == 3);

  BinaryMask empty(3, 3);
  try {
    roi_bbox(empty, 0);
    FAIL("expected EmptyMask");
  } catch (const Error& e) {
    CHECK(e.code() == errc::empty_mask);
  }
}

TEST_CASE("pgm round trip, 8- and 16-bit") {
  const auto dir = std::filesystem::temp_directory_path() / "thermo_pgm_test";
  std::filesystem::create_directories(dir);
  const std::string p8 = (dir / "a.pgm").string();

  GrayImage img(3, 2);
  for (size_t i = 0; i < img.size(); ++i) img.data[i] = static_cast<double>(i) / 5.0;
  write_pgm(p8, img);
  const GrayImage back = read_pgm(p8);
  REQUIRE(back.width == 3);
  REQUIRE(back.height == 2);
  for (size_t i = 0; i < img.size(); ++i)
    CHECK(back.data[i] == Catch::Approx(img.data[i] * 255.0).margin(0.51));

  // 16-bit payload written by hand, big-endian
  const std::string p16 = (dir / "b.pgm").string();
  std::string body = "P5\n2 1\n65535\n";
  body.push_back(static_cast<char>(0x01));
  body.push_back(static_cast<char>(0x00));  // 256
  body.push_back(static_cast<char>(0xFF));
  body.push_back(static_cast<char>(0xFF));  // 65535
  write_file_atomic(p16, body);
  const GrayImage wide = read_pgm(p16);
  CHECK(wide.data[0] == 256.0);
  CHECK(wide.data[1] == 65535.0);

  std::filesystem::remove_all(dir);
}

TEST_CASE("csv image and mask parsing") {
  const auto dir = std::filesystem::temp_directory_path() / "thermo_csv_test";
  std::filesystem::create_directories(dir);
  const std::string p = (dir / "m.csv").string();
  write_file_atomic(p, "0,1,0\n1,1,0\n");
  const BinaryMask m = read_csv_mask(p);
  REQUIRE(m.width == 3);
  REQUIRE(m.height == 2);
  CHECK(m.at(1, 0) == 1);
  CHECK(m.at(2, 1) == 0);

  write_file_atomic(p, "0.5,2\n1,3\n");
  const GrayImage g = read_csv_image(p);
  CHECK(g.at(0, 0) == 0.5);
  CHECK(g.at(1, 1) == 3.0);

  write_file_atomic(p, "1,2\n3\n");
  try {
    read_csv_image(p);
    FAIL("expected BadFormat");
  } catch (const Error& e) {
    CHECK(e.code() == errc::bad_format);
  }
  std::filesystem::remove_all(dir);
}
