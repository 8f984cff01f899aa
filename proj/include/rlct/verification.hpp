#pragma once

// Seeded random problem specs and the agreement harness behind `rlct verify`.

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "rlct/counting_core.hpp"

namespace rlct::verify {

struct SpecLimits {
  std::int64_t max_rank = 5;
  std::size_t max_shelves = 6;
  std::int64_t max_price = 12;
  std::int64_t max_inventory = 8;
  std::int64_t max_demand = 30;
  std::int64_t max_budget = 60;
};

/// Draws valid finite specs. The draw sequence depends only on the seed and
/// the limits, so reports are reproducible across runs.
class SpecSampler {
 public:
  explicit SpecSampler(std::uint64_t seed, SpecLimits limits = {});

  ProblemSpec next();
  /// (cheap, expensive): same r, alpha, beta, n; prices pointwise higher in
  /// the second spec.
  std::pair<ProblemSpec, ProblemSpec> next_price_pair();
  /// (small, large): same r, alpha, beta, m; inventories pointwise higher in
  /// the second spec.
  std::pair<ProblemSpec, ProblemSpec> next_inventory_pair();
  /// A spec and a legal position for an empty shelf.
  std::pair<ProblemSpec, std::size_t> next_empty_shelf_case();

 private:
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

  std::mt19937_64 rng_;
  SpecLimits limits_;
};

/// One-line rendering, e.g. "r=2 alpha=3 beta=3 m=(1,3,5) n=(1,1,1)".
std::string describe(const ProblemSpec& spec);

struct Report {
  std::size_t cases = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
  std::string render() const;
};

/// For each case: counting rule vs oracle (value and multiplicity), vs the
/// blow-up ledger, the range bounds, and one pair each of the price,
/// inventory and empty-shelf properties.
Report run(std::size_t cases, std::uint64_t seed, SpecLimits limits = {});

}  // namespace rlct::verify
