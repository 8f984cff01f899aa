#include "rlct/blowup_ledger.hpp"

#include "rlct/error.hpp"

namespace rlct::ledger {

std::vector<ChartCandidate> chart_candidates(const ProblemSpec& spec) {
  const CappedShelves capped = capped_shelves(spec);
  const auto& prices = capped.prices;
  const auto& n_star = capped.n_star;
  const std::int64_t deepest = prices.back();

  std::vector<ChartCandidate> out;
  out.reserve(static_cast<std::size_t>(deepest) + 1);

  // Shelves with m_s <= j contribute (j - m_s) n*_s; track their running
  // totals so each depth costs O(1).
  Integer absorbed_items = 0;
  Integer absorbed_cost = 0;
  std::size_t absorbed = 0;
  for (std::int64_t j = 1; j <= deepest; ++j) {
    while (absorbed < prices.size() && prices[absorbed] <= j) {
      absorbed_items += n_star[absorbed];
      absorbed_cost += Integer(static_cast<long>(prices[absorbed])) * n_star[absorbed];
      ++absorbed;
    }
    const Integer depth(static_cast<long>(j));
    const Integer numerator =
        depth * spec.rank + spec.budget + depth * absorbed_items - absorbed_cost;

    // j lies in (m_k, m_{k+1}] for k = number of shelves priced below j.
    std::size_t below = 0;
    while (below < prices.size() && prices[below] < j) ++below;
    std::string stage = below == 0 ? "Step1" : "Step3-" + std::to_string(below);

    out.push_back({j, Rational(numerator, 2 * depth), std::move(stage)});
  }

  Integer total = 0;
  for (const auto& n : n_star) total += n;
  out.push_back({std::nullopt, Rational(total + spec.rank, 2), "Step4"});
  return out;
}

LedgerMinimum ledger_min(const std::vector<ChartCandidate>& candidates) {
  if (candidates.empty()) {
    throw Error(ErrorCode::InvalidArgument, "no chart candidates");
  }
  LedgerMinimum result{candidates.front().value, 0};
  for (const auto& c : candidates) result.value = min(result.value, c.value);
  for (const auto& c : candidates) {
    if (c.value == result.value) ++result.advisory_multiplicity;
  }
  return result;
}

LedgerMinimum ledger_min(const ProblemSpec& spec) { return ledger_min(chart_candidates(spec)); }

}  // namespace rlct::ledger
