#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <vector>

namespace semcom {

/// LDPC code from a seeded Gallager-style ensemble: column weight 3, rows as
/// regular as 3n/m allows. Double edges are always removed; 4-cycles are
/// removed by edge resampling until none remain or the effort budget is
/// spent (girth 6 is reached for the default rate-1/2 construction, and is
/// combinatorially out of reach for the highest-rate ladder codes).
/// The generator comes from Gaussian elimination; constructions whose H is
/// rank-deficient are resampled with a bumped seed.
class LdpcCode {
 public:
  static LdpcCode construct(unsigned n, unsigned m, uint64_t seed, int max_bp_iters = 50);

  unsigned n() const { return n_; }
  unsigned m() const { return m_; }
  unsigned k() const { return n_ - m_; }
  int max_bp_iters() const { return max_bp_iters_; }
  uint64_t seed_used() const { return seed_used_; }

  /// Codeword positions holding message bits (ascending).
  const std::vector<unsigned>& info_positions() const { return info_positions_; }

  /// k message bits -> n codeword bits with H c^T = 0.
  std::vector<uint8_t> encode(std::span<const uint8_t> message_bits) const;

  bool check_syndrome(std::span<const uint8_t> codeword_bits) const;

  struct BpResult {
    std::vector<uint8_t> message;
    std::vector<uint8_t> codeword;
    bool converged = false;
    int iterations = 0;
  };

  /// Sum-product belief propagation, flooding schedule, LLRs clipped to
  /// +-kLlrClip. Positive LLR means bit 0 is more likely. Early stop on a
  /// zero syndrome; non-convergence returns the current estimate, flagged.
  BpResult decode(std::span<const double> llrs) const;

  /// Sparse coordinate dump, one "row col" pair per line.
  void write_coordinates(std::ostream& out) const;

  unsigned column_weight(unsigned col) const;
  unsigned row_weight(unsigned row) const;
  bool has_four_cycle() const;

  static constexpr double kLlrClip = 40.0;

 private:
  LdpcCode() = default;
  void build_adjacency();
  bool derive_generator();

  unsigned n_ = 0, m_ = 0;
  int max_bp_iters_ = 50;
  uint64_t seed_used_ = 0;

  // One entry per edge of the Tanner graph.
  std::vector<unsigned> edge_row_;
  std::vector<unsigned> edge_col_;
  std::vector<std::vector<unsigned>> row_edges_;
  std::vector<std::vector<unsigned>> col_edges_;

  // Systematic structure: parity bit r = parity_rows_[r] . message (bit-packed
  // rows of k columns).
  std::vector<unsigned> info_positions_;
  std::vector<unsigned> parity_positions_;
  std::vector<std::vector<uint64_t>> parity_rows_;
};

}  // namespace semcom
