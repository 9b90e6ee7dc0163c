#include "semcom/channel.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace semcom {

double ChannelConfig::sigma2() const {
  if (noiseless()) return 0.0;
  return 1.0 / (2.0 * std::pow(10.0, snr_db / 10.0));
}

double esn0_from_ebn0(double ebn0_db, double rate) {
  if (!(rate > 0.0 && rate <= 1.0)) throw std::invalid_argument("esn0_from_ebn0: rate must be in (0,1]");
  if (ebn0_db == std::numeric_limits<double>::infinity()) return ebn0_db;
  return ebn0_db + 10.0 * std::log10(rate);
}

std::vector<double> bpsk_modulate(std::span<const uint8_t> bits) {
  std::vector<double> symbols(bits.size());
  for (size_t i = 0; i < bits.size(); ++i) symbols[i] = (bits[i] & 1) ? -1.0 : 1.0;
  return symbols;
}

namespace {

/// Box-Muller over explicit mt19937_64 uniforms. std::normal_distribution is
/// implementation-defined, so it is not used; this generator pins the noise
/// sequence for a given seed.
class GaussianSource {
 public:
  explicit GaussianSource(uint64_t seed) : rng_(seed) {}

  double next() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform_open();
    double u2 = uniform();
    double radius = std::sqrt(-2.0 * std::log(u1));
    double angle = 2.0 * M_PI * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
  }

 private:
  double uniform() { return static_cast<double>(rng_()) * 0x1.0p-64; }
  double uniform_open() {
    // (0, 1]: avoids log(0).
    return (static_cast<double>(rng_() >> 11) + 1.0) * 0x1.0p-53;
  }

  std::mt19937_64 rng_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace

std::vector<double> awgn_apply(std::span<const double> symbols, const ChannelConfig& config) {
  std::vector<double> out(symbols.begin(), symbols.end());
  if (config.noiseless()) return out;
  double sigma = std::sqrt(config.sigma2());
  GaussianSource noise(config.seed);
  for (auto& y : out) y += sigma * noise.next();
  return out;
}

std::vector<double> llr_from_samples(std::span<const double> samples, const ChannelConfig& config) {
  std::vector<double> llrs(samples.size());
  if (config.noiseless()) {
    for (size_t i = 0; i < samples.size(); ++i) llrs[i] = samples[i] >= 0.0 ? kLlrSentinel : -kLlrSentinel;
    return llrs;
  }
  double scale = 2.0 / config.sigma2();
  for (size_t i = 0; i < samples.size(); ++i) llrs[i] = scale * samples[i];
  return llrs;
}

std::vector<uint8_t> hard_decisions(std::span<const double> llrs) {
  std::vector<uint8_t> bits(llrs.size());
  for (size_t i = 0; i < llrs.size(); ++i) bits[i] = llrs[i] < 0.0 ? 1 : 0;
  return bits;
}

BerEstimate ber_uncoded(const ChannelConfig& config, uint64_t n_bits) {
  std::mt19937_64 bitgen(config.seed ^ 0x9E3779B97F4A7C15ull);
  std::vector<uint8_t> bits(n_bits);
  for (auto& b : bits) b = static_cast<uint8_t>(bitgen() & 1);

  auto symbols = bpsk_modulate(bits);
  auto samples = awgn_apply(symbols, config);
  auto llrs = llr_from_samples(samples, config);
  auto decided = hard_decisions(llrs);

  BerEstimate est;
  est.bits = n_bits;
  for (uint64_t i = 0; i < n_bits; ++i)
    if (decided[i] != bits[i]) ++est.errors;
  est.ber = n_bits == 0 ? 0.0 : static_cast<double>(est.errors) / static_cast<double>(n_bits);
  est.stderr_ = n_bits == 0 ? 0.0 : std::sqrt(est.ber * (1.0 - est.ber) / static_cast<double>(n_bits));
  return est;
}

double q_function(double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); }

}  // namespace semcom
