#include "rlct/oracle.hpp"

#include <string>

#include "rlct/error.hpp"

namespace rlct::oracle {

namespace {

void check_instance(const AllocationInstance& inst, std::size_t limit) {
  if (inst.prices.size() != inst.caps.size()) {
    throw Error(ErrorCode::InvalidArgument, "prices and caps differ in length");
  }
  if (inst.prices.size() > limit) {
    throw Error(ErrorCode::InstanceTooLarge, std::to_string(inst.prices.size()) +
                                                 " shelves exceeds enumeration limit " +
                                                 std::to_string(limit));
  }
  if (inst.budget < 1) throw Error(ErrorCode::NonPositiveBudget, "budget must be positive");
  for (std::size_t i = 0; i < inst.prices.size(); ++i) {
    if (inst.prices[i] < 1 || (i > 0 && inst.prices[i] <= inst.prices[i - 1])) {
      throw Error(ErrorCode::NonIncreasingPrices, "prices must be positive and increasing");
    }
    if (inst.caps[i].sign() < 0) {
      throw Error(ErrorCode::NegativeInventory, "caps must be non-negative");
    }
  }
}

}  // namespace

Rational oracle_max_purchase(const AllocationInstance& inst, std::size_t enumeration_limit) {
  check_instance(inst, enumeration_limit);
  const std::size_t count = inst.prices.size();
  const Rational budget(inst.budget);

  // All-zero is always feasible.
  Rational best(0);

  Rational all_cap_cost(0);
  Rational all_cap_items(0);
  for (std::size_t s = 0; s < count; ++s) {
    all_cap_cost += Rational(inst.prices[s]) * inst.caps[s];
    all_cap_items += inst.caps[s];
  }
  if (all_cap_cost <= budget) best = max(best, all_cap_items);

  for (std::size_t free = 0; free < count; ++free) {
    const std::size_t others = count - 1;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << others); ++mask) {
      Rational cost(0);
      Rational items(0);
      std::size_t bit = 0;
      for (std::size_t s = 0; s < count; ++s) {
        if (s == free) continue;
        if ((mask >> bit++) & 1U) {
          cost += Rational(inst.prices[s]) * inst.caps[s];
          items += inst.caps[s];
        }
      }
      if (cost > budget) continue;
      const Rational room = (budget - cost) / Rational(inst.prices[free]);
      items += min(room, inst.caps[free]);
      best = max(best, items);
    }
  }
  return best;
}

Rational oracle_bound(const ProblemSpec& spec, std::size_t enumeration_limit) {
  const CappedShelves capped = capped_shelves(spec);
  AllocationInstance inst;
  inst.prices = capped.prices;
  inst.budget = spec.budget;
  for (const auto& n : capped.n_star) inst.caps.emplace_back(n);
  return Rational(spec.rank, 2) + oracle_max_purchase(inst, enumeration_limit) / Rational(2);
}

int oracle_multiplicity(const ProblemSpec& spec) {
  const CappedShelves capped = capped_shelves(spec);
  Integer cost = 0;
  for (std::size_t k = 0; k < capped.prices.size(); ++k) {
    cost += Integer(static_cast<long>(capped.prices[k])) * capped.n_star[k];
    if (cost == spec.budget) return 2;
  }
  return 1;
}

}  // namespace rlct::oracle
