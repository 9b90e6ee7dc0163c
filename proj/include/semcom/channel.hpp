#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace semcom {

/// AWGN channel configuration. snr_db is Es/N0 with Es = 1 (BPSK); coded
/// pipelines convert their Eb/N0 operating point with esn0_from_ebn0 before
/// building a config. +infinity is the noiseless sentinel.
struct ChannelConfig {
  double snr_db = 10.0;
  uint64_t seed = 1;

  bool noiseless() const { return snr_db == std::numeric_limits<double>::infinity(); }

  /// Noise variance per real dimension: sigma^2 = 1 / (2 * 10^(snr/10)).
  double sigma2() const;
};

/// Es/N0 given Eb/N0 and the ratio of information bits to channel bits.
double esn0_from_ebn0(double ebn0_db, double rate);

/// bit 0 -> +1.0, bit 1 -> -1.0.
std::vector<double> bpsk_modulate(std::span<const uint8_t> bits);

/// y = x + n with n ~ N(0, sigma^2) from a seeded Box-Muller generator over
/// mt19937_64 draws; bit-identical per seed within this implementation.
std::vector<double> awgn_apply(std::span<const double> symbols, const ChannelConfig& config);

inline constexpr double kLlrSentinel = 40.0;

/// llr_i = 2 y_i / sigma^2; positive means bit 0. Noiseless channels produce
/// +-kLlrSentinel.
std::vector<double> llr_from_samples(std::span<const double> samples, const ChannelConfig& config);

std::vector<uint8_t> hard_decisions(std::span<const double> llrs);

struct BerEstimate {
  double ber = 0.0;
  double stderr_ = 0.0;
  uint64_t bits = 0;
  uint64_t errors = 0;
};

/// Monte Carlo BER of uncoded BPSK over this channel.
BerEstimate ber_uncoded(const ChannelConfig& config, uint64_t n_bits);

/// Q(x) = P(N(0,1) > x), the closed-form BPSK oracle: BER = Q(sqrt(2 Eb/N0)).
double q_function(double x);

}  // namespace semcom
