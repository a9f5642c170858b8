#include <doctest.h>

#include "test_support.hpp"
#include "woac/energy.hpp"
#include "woac/errors.hpp"

using namespace woac;
using woac::testing::rel_close;

TEST_SUITE("energy") {

TEST_CASE("transmit cost in both amplifier regimes") {
  const RadioParams radio;
  // Independent evaluation: electronics + amplifier, constants written out.
  const double fs = 4000 * 50e-9 + 4000 * 10e-12 * 10.0 * 10.0;
  const double mp = 4000 * 50e-9 + 4000 * 0.0013e-12 * 1e8;
  CHECK(rel_close(fs, 204e-6, 1e-15));
  CHECK(rel_close(mp, 720e-6, 1e-15));
  CHECK(rel_close(tx_energy(4000, 10.0, radio), 204e-6, 1e-15));
  CHECK(rel_close(tx_energy(4000, 100.0, radio), 720e-6, 1e-15));
  CHECK(tx_energy(0, 50.0, radio) == 0.0);
  CHECK(rel_close(tx_energy(200, 0.0, radio), 10e-6, 1e-15));
}

TEST_CASE("threshold distance uses the free-space branch") {
  const RadioParams radio;
  CHECK(rel_close(tx_energy(1, 30.0, radio), 50e-9 + 10e-12 * 900.0, 1e-15));
  CHECK(rel_close(tx_energy(1, std::nextafter(30.0, 31.0), radio),
                  50e-9 + 0.0013e-12 * std::pow(std::nextafter(30.0, 31.0), 4), 1e-12));
}

TEST_CASE("receive and aggregation costs") {
  const RadioParams radio;
  CHECK(rel_close(rx_energy(4000, radio), 200e-6, 1e-15));
  CHECK(rel_close(rx_energy(200, radio), 10e-6, 1e-15));
  CHECK(rx_energy(0, radio) == 0.0);
  CHECK(rel_close(aggregation_energy(4000, radio), 20e-6, 1e-15));
  CHECK(rel_close(aggregation_energy(5 * 4000, radio), 100e-6, 1e-15));
  CHECK(aggregation_energy(0, radio) == 0.0);
}

TEST_CASE("costs are linear in bits") {
  const RadioParams radio;
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const auto a = static_cast<std::int64_t>(uniform_index(rng, 10000));
    const auto b = static_cast<std::int64_t>(uniform_index(rng, 10000));
    const double d = uniform(rng, 0.0, 200.0);
    CHECK(rel_close(tx_energy(a + b, d, radio), tx_energy(a, d, radio) + tx_energy(b, d, radio),
                    1e-12));
    CHECK(rel_close(rx_energy(a + b, radio), rx_energy(a, radio) + rx_energy(b, radio), 1e-12));
    CHECK(rel_close(aggregation_energy(a + b, radio),
                    aggregation_energy(a, radio) + aggregation_energy(b, radio), 1e-12));
  }
}

TEST_CASE("transmit cost is nondecreasing in distance within each regime") {
  const RadioParams radio;
  double prev = 0.0;
  for (double d = 0.0; d <= 30.0; d += 0.5) {
    const double e = tx_energy(4000, d, radio);
    CHECK(e >= prev);
    prev = e;
  }
  prev = 0.0;
  for (double d = 30.5; d <= 300.0; d += 0.5) {
    const double e = tx_energy(4000, d, radio);
    CHECK(e >= prev);
    prev = e;
  }
}

TEST_CASE("negative inputs are contract violations") {
  const RadioParams radio;
  CHECK_THROWS_AS(tx_energy(-1, 1.0, radio), ContractViolation);
  CHECK_THROWS_AS(tx_energy(1, -1.0, radio), ContractViolation);
  CHECK_THROWS_AS(rx_energy(-1, radio), ContractViolation);
  CHECK_THROWS_AS(aggregation_energy(-1, radio), ContractViolation);
}

TEST_CASE("radio validation") {
  RadioParams radio;
  CHECK_NOTHROW(radio.validate());
  radio.d0 = 0.0;
  CHECK_THROWS_AS(radio.validate(), ConfigError);
}

}
