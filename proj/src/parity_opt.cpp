#include "semcom/parity_opt.hpp"

#include <map>
#include <stdexcept>

namespace semcom {

ParityPlan optimize_parity(const std::string& scheme, double snr_db, double epsilon,
                           std::span<const int> parity_grid, const WerEval& eval, uint64_t trials) {
  if (parity_grid.empty()) throw std::invalid_argument("optimize_parity: empty grid");
  for (size_t i = 1; i < parity_grid.size(); ++i)
    if (parity_grid[i] <= parity_grid[i - 1])
      throw std::invalid_argument("optimize_parity: grid must be strictly ascending");

  ParityPlan plan;
  plan.scheme = scheme;
  plan.snr_db = snr_db;
  plan.epsilon = epsilon;
  plan.trials = trials;

  std::map<int, double> cache;
  auto measured = [&](size_t idx) {
    int parity = parity_grid[idx];
    auto it = cache.find(parity);
    if (it == cache.end()) it = cache.emplace(parity, eval(parity)).first;
    return it->second;
  };

  double at_max = measured(parity_grid.size() - 1);
  if (at_max > epsilon) {
    plan.feasible = false;
    plan.parity = parity_grid.back();
    plan.wer = at_max;
    return plan;
  }

  size_t lo = 0, hi = parity_grid.size() - 1;
  while (lo < hi) {
    size_t mid = lo + (hi - lo) / 2;
    if (measured(mid) <= epsilon)
      hi = mid;
    else
      lo = mid + 1;
  }

  plan.feasible = true;
  plan.parity = parity_grid[hi];
  plan.wer = measured(hi);
  if (hi > 0) plan.wer_below = measured(hi - 1);
  return plan;
}

}  // namespace semcom
