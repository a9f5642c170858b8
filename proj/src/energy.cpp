#include "woac/energy.hpp"

#include "woac/errors.hpp"

namespace woac {

void RadioParams::validate() const {
  if (!(e_elec > 0) || !(eps_fs > 0) || !(eps_mp > 0) || !(e_da > 0) || !(d0 > 0)) {
    throw ConfigError("radio: every energy constant and d0 must be strictly positive");
  }
  if (packet_bits <= 0 || msg_bits <= 0) {
    throw ConfigError("radio: packet_bits and msg_bits must be strictly positive");
  }
}

double tx_energy(std::int64_t bits, double d, const RadioParams& radio) {
  if (bits < 0 || d < 0) throw ContractViolation("tx_energy: negative bits or distance");
  const auto l = static_cast<double>(bits);
  const double d2 = d * d;
  if (d <= radio.d0) return l * radio.e_elec + l * radio.eps_fs * d2;
  return l * radio.e_elec + l * radio.eps_mp * d2 * d2;
}

double rx_energy(std::int64_t bits, const RadioParams& radio) {
  if (bits < 0) throw ContractViolation("rx_energy: negative bits");
  return static_cast<double>(bits) * radio.e_elec;
}

double aggregation_energy(std::int64_t bits_processed, const RadioParams& radio) {
  if (bits_processed < 0) throw ContractViolation("aggregation_energy: negative bits");
  return static_cast<double>(bits_processed) * radio.e_da;
}

}  // namespace woac
