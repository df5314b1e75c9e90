#include <catch2/catch_amalgamated.hpp>

#include "thermo/embed.hpp"

using namespace thermo;

TEST_CASE("delay_embed definition") {
  const std::vector<double> x{1, 2, 3, 4, 5};
  const DelayEmbedding e = delay_embed(x, 2, 1);
  REQUIRE(e.count == 4);
  CHECK(e.vec(0)[0] == 1);
  CHECK(e.vec(0)[1] == 2);
  CHECK(e.vec(3)[0] == 4);
  CHECK(e.vec(3)[1] == 5);
}

TEST_CASE("delay_embed m=1 returns the samples") {
  const std::vector<double> x{3, 1, 4, 1, 5};
  const DelayEmbedding e = delay_embed(x, 1, 2);
  REQUIRE(e.count == x.size());
  for (size_t i = 0; i < x.size(); ++i) CHECK(e.vec(i)[0] == x[i]);
}

TEST_CASE("delay_embed boundary count") {
  const std::vector<double> x5{1, 2, 3, 4, 5};
  CHECK(delay_embed(x5, 3, 2).count == 1);  // N - (m-1)tau = 1, allowed
  const std::vector<double> x4{1, 2, 3, 4};
  try {
    delay_embed(x4, 3, 2);
    FAIL("expected SignalTooShort");
  } catch (const Error& e) {
    CHECK(e.code() == errc::signal_too_short);
  }
}

TEST_CASE("delay_embed column 0 reconstructs the signal prefix") {
  std::vector<double> x(40);
  for (size_t i = 0; i < x.size(); ++i) x[i] = std::sin(0.3 * static_cast<double>(i));
  const int m = 4, tau = 3;
  const DelayEmbedding e = delay_embed(x, m, tau);
  REQUIRE(e.count == x.size() - static_cast<size_t>((m - 1) * tau));
  for (size_t i = 0; i < e.count; ++i) CHECK(e.vec(i)[0] == x[i]);
  // and column j is the tau*j-shifted signal
  for (size_t i = 0; i < e.count; ++i)
    for (int j = 0; j < m; ++j) CHECK(e.vec(i)[static_cast<size_t>(j)] == x[i + static_cast<size_t>(j * tau)]);
}
