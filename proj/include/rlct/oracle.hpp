#pragma once

// Brute-force check of the counting rule. Solves the budgeted fractional
// allocation problem
//
//   maximize sum_s x_s  s.t.  sum_s m_s x_s <= beta,  0 <= x_s <= cap_s
//
// by enumerating candidate vertices. Nothing here uses the greedy order or
// the three-case formula.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "rlct/counting_core.hpp"
#include "rlct/rational.hpp"

namespace rlct::oracle {

inline constexpr std::size_t kDefaultEnumerationLimit = 16;

struct AllocationInstance {
  std::vector<std::int64_t> prices;
  std::vector<Rational> caps;
  std::int64_t budget = 1;
};

/// Exponential in the number of shelves: every shelf t is tried as the single
/// fractional coordinate while the others sit at 0 or at their cap.
Rational oracle_max_purchase(const AllocationInstance& instance,
                             std::size_t enumeration_limit = kDefaultEnumerationLimit);

/// r/2 + oracle_max_purchase(m_1..m_L, n*, beta)/2. L and n* come from
/// counting_core.
Rational oracle_bound(const ProblemSpec& spec,
                      std::size_t enumeration_limit = kDefaultEnumerationLimit);

/// 2 iff the budget equals the cost of some full prefix of capped shelves.
int oracle_multiplicity(const ProblemSpec& spec);

}  // namespace rlct::oracle
