#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <span>
#include <string>

namespace semcom {

/// Outcome of the parity search at one (scheme, SNR) point. When feasible,
/// `parity` is the smallest grid value whose measured WER meets epsilon and
/// `wer_below` re-measures one grid step less as the minimality witness
/// (NaN at the grid floor).
struct ParityPlan {
  std::string scheme;
  double snr_db = 0.0;
  int parity = 0;
  double wer = 1.0;
  double wer_below = std::nan("");
  bool feasible = false;
  uint64_t trials = 0;
  double epsilon = 1e-3;
};

/// Measured WER at a given parity amount; must be a deterministic function of
/// parity (derive Monte Carlo seeds from the parity value).
using WerEval = std::function<double(int parity)>;

/// Binary search over an ascending parity grid under the assumption that WER
/// is non-increasing in parity. Violations surface through the witness
/// fields; an unreachable target yields an explicit infeasible plan.
ParityPlan optimize_parity(const std::string& scheme, double snr_db, double epsilon,
                           std::span<const int> parity_grid, const WerEval& eval, uint64_t trials);

}  // namespace semcom
