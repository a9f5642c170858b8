#pragma once

#include <cstdint>

namespace woac {

/// First-order radio model constants, SI units.
struct RadioParams {
  double e_elec = 50e-9;     // J/bit, transmitter and receiver electronics
  double eps_fs = 10e-12;    // J/bit/m^2, free-space amplifier
  double eps_mp = 0.0013e-12;  // J/bit/m^4, multipath amplifier
  double e_da = 5e-9;        // J/bit, data aggregation
  double d0 = 30.0;          // m, amplifier regime threshold
  std::int64_t packet_bits = 4000;
  std::int64_t msg_bits = 200;

  void validate() const;
};

// Transmit cost: bits·e_elec + bits·eps_fs·d² for d <= d0, else bits·e_elec + bits·eps_mp·d⁴.
// The two branches do not meet at d0 with the default constants.
double tx_energy(std::int64_t bits, double d, const RadioParams& radio);
double rx_energy(std::int64_t bits, const RadioParams& radio);
double aggregation_energy(std::int64_t bits_processed, const RadioParams& radio);

}  // namespace woac
