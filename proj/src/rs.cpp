#include "semcom/rs.hpp"

#include <stdexcept>

namespace semcom {

RsCode::RsCode(const GaloisField& field, unsigned n, unsigned k) : field_(field), n_(n), k_(k) {
  if (n > field.size() - 1) throw std::invalid_argument("RsCode: n exceeds field size - 1");
  if (k == 0 || k >= n) throw std::invalid_argument("RsCode: need 0 < k < n");
  if ((n - k) % 2 != 0) throw std::invalid_argument("RsCode: n - k must be even");

  // g(x) = prod_{i=1..n-k} (x - alpha^i), ascending coefficients.
  generator_ = {1};
  for (unsigned i = 1; i <= n - k; ++i) {
    std::vector<uint8_t> next(generator_.size() + 1, 0);
    uint8_t root = field_.alpha_pow(static_cast<int>(i));
    for (size_t j = 0; j < generator_.size(); ++j) {
      next[j + 1] ^= generator_[j];
      next[j] ^= field_.mul(generator_[j], root);
    }
    generator_ = std::move(next);
  }
}

std::vector<uint8_t> RsCode::encode(std::span<const uint8_t> message) const {
  if (message.size() != k_) throw std::invalid_argument("rs_encode: wrong message length");
  const unsigned p = parity();

  // LFSR division: remainder of m(x) * x^(n-k) by g(x). rem[j] holds the
  // coefficient of x^j.
  std::vector<uint8_t> rem(p, 0);
  for (unsigned i = 0; i < k_; ++i) {
    uint8_t feedback = message[i] ^ rem[p - 1];
    for (unsigned j = p - 1; j > 0; --j) rem[j] = rem[j - 1] ^ field_.mul(feedback, generator_[j]);
    rem[0] = field_.mul(feedback, generator_[0]);
  }

  std::vector<uint8_t> codeword(message.begin(), message.end());
  codeword.resize(n_);
  for (unsigned j = 0; j < p; ++j) codeword[k_ + j] = rem[p - 1 - j];
  return codeword;
}

std::optional<RsCode::Decoded> RsCode::decode(std::span<const uint8_t> received) const {
  if (received.size() != n_) throw std::invalid_argument("rs_decode: wrong codeword length");
  const unsigned p = parity();
  const unsigned tcap = t();

  // Syndromes S_j = R(alpha^j), j = 1..n-k, via Horner from the highest
  // coefficient (received[0]).
  std::vector<uint8_t> syndromes(p, 0);
  bool clean = true;
  for (unsigned j = 0; j < p; ++j) {
    uint8_t a = field_.alpha_pow(static_cast<int>(j + 1));
    uint8_t v = 0;
    for (unsigned i = 0; i < n_; ++i) v = field_.mul(v, a) ^ received[i];
    syndromes[j] = v;
    if (v != 0) clean = false;
  }
  if (clean) return Decoded{{received.begin(), received.begin() + k_}, 0};

  // Berlekamp-Massey for the error locator Lambda(x).
  std::vector<uint8_t> lambda{1}, prev{1};
  unsigned L = 0, m = 1;
  uint8_t b = 1;
  for (unsigned step = 0; step < p; ++step) {
    uint8_t d = syndromes[step];
    for (unsigned i = 1; i <= L && i < lambda.size(); ++i)
      d ^= field_.mul(lambda[i], syndromes[step - i]);
    if (d == 0) {
      ++m;
    } else if (2 * L <= step) {
      std::vector<uint8_t> tmp = lambda;
      uint8_t coef = field_.div(d, b);
      if (lambda.size() < prev.size() + m) lambda.resize(prev.size() + m, 0);
      for (size_t i = 0; i < prev.size(); ++i) lambda[i + m] ^= field_.mul(coef, prev[i]);
      L = step + 1 - L;
      prev = std::move(tmp);
      b = d;
      m = 1;
    } else {
      uint8_t coef = field_.div(d, b);
      if (lambda.size() < prev.size() + m) lambda.resize(prev.size() + m, 0);
      for (size_t i = 0; i < prev.size(); ++i) lambda[i + m] ^= field_.mul(coef, prev[i]);
      ++m;
    }
  }
  while (!lambda.empty() && lambda.back() == 0) lambda.pop_back();
  if (L > tcap || lambda.size() != L + 1) return std::nullopt;

  // Chien search over all codeword degrees d: error at degree d iff
  // Lambda(alpha^-d) == 0.
  std::vector<unsigned> error_degrees;
  for (unsigned d = 0; d < n_; ++d) {
    uint8_t x = field_.alpha_pow(-static_cast<int>(d));
    uint8_t v = 0;
    for (size_t i = lambda.size(); i-- > 0;) v = field_.mul(v, x) ^ lambda[i];
    if (v == 0) error_degrees.push_back(d);
  }
  if (error_degrees.size() != L) return std::nullopt;

  // Omega(x) = S(x) * Lambda(x) mod x^(n-k), with S(x) = sum S_{j+1} x^j.
  std::vector<uint8_t> omega(p, 0);
  for (unsigned i = 0; i < p; ++i) {
    for (size_t j = 0; j < lambda.size() && j <= i; ++j)
      omega[i] ^= field_.mul(syndromes[i - j], lambda[j]);
  }

  std::vector<uint8_t> corrected(received.begin(), received.end());
  for (unsigned d : error_degrees) {
    uint8_t x_inv = field_.alpha_pow(-static_cast<int>(d));
    uint8_t num = 0;
    for (size_t i = omega.size(); i-- > 0;) num = field_.mul(num, x_inv) ^ omega[i];
    // Formal derivative of Lambda has only the odd-degree terms.
    uint8_t den = 0;
    for (size_t i = 1; i < lambda.size(); i += 2) {
      uint8_t term = lambda[i];
      for (size_t e = 0; e + 1 < i; ++e) term = field_.mul(term, x_inv);
      den ^= term;
    }
    if (den == 0) return std::nullopt;
    uint8_t magnitude = field_.div(num, den);
    if (magnitude == 0) return std::nullopt;
    corrected[n_ - 1 - d] ^= magnitude;
  }

  // Re-verify the corrected word; anything that survives is a codeword.
  for (unsigned j = 0; j < p; ++j) {
    uint8_t a = field_.alpha_pow(static_cast<int>(j + 1));
    uint8_t v = 0;
    for (unsigned i = 0; i < n_; ++i) v = field_.mul(v, a) ^ corrected[i];
    if (v != 0) return std::nullopt;
  }

  return Decoded{{corrected.begin(), corrected.begin() + k_}, static_cast<unsigned>(error_degrees.size())};
}

std::vector<uint8_t> RsCode::encode_shortened(std::span<const uint8_t> message) const {
  if (message.size() > k_ || message.empty()) throw std::invalid_argument("rs encode_shortened: bad length");
  std::vector<uint8_t> full(k_ - message.size(), 0);
  full.insert(full.end(), message.begin(), message.end());
  auto codeword = encode(full);
  std::vector<uint8_t> out(codeword.begin() + (k_ - message.size()), codeword.end());
  return out;
}

std::optional<RsCode::Decoded> RsCode::decode_shortened(std::span<const uint8_t> received,
                                                        unsigned k_short) const {
  if (k_short == 0 || k_short > k_) throw std::invalid_argument("rs decode_shortened: bad k_short");
  if (received.size() != k_short + parity()) throw std::invalid_argument("rs decode_shortened: bad length");
  std::vector<uint8_t> full(k_ - k_short, 0);
  full.insert(full.end(), received.begin(), received.end());
  auto result = decode(full);
  if (!result) return std::nullopt;
  result->message.erase(result->message.begin(), result->message.begin() + (k_ - k_short));
  return result;
}

}  // namespace semcom
