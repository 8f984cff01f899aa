#include "rlct/verification.hpp"

#include <algorithm>
#include <sstream>

#include "rlct/blowup_ledger.hpp"
#include "rlct/error.hpp"
#include "rlct/oracle.hpp"

namespace rlct::verify {

namespace {

ProblemSpec with_shelves(const ProblemSpec& base, std::vector<Shelf> shelves) {
  ProblemSpec out;
  out.rank = base.rank;
  out.demand = base.demand;
  out.budget = base.budget;
  out.shelves = ShelfSequence::finite(std::move(shelves));
  return out;
}

}  // namespace

SpecSampler::SpecSampler(std::uint64_t seed, SpecLimits limits) : rng_(seed), limits_(limits) {
  if (limits_.max_shelves < 1 || limits_.max_price < static_cast<std::int64_t>(limits_.max_shelves) ||
      limits_.max_demand < 1 || limits_.max_budget < 1 || limits_.max_inventory < 0 ||
      limits_.max_rank < 0) {
    throw Error(ErrorCode::InvalidArgument, "sampler limits leave no valid spec");
  }
}

// Plain modulo keeps the draw sequence independent of the standard library's
// distribution implementation.
std::int64_t SpecSampler::uniform(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(rng_() % span);
}

ProblemSpec SpecSampler::next() {
  ProblemSpec spec;
  spec.rank = uniform(0, limits_.max_rank);
  spec.demand = uniform(1, limits_.max_demand);
  spec.budget = uniform(1, limits_.max_budget);

  const auto gamma = static_cast<std::size_t>(uniform(1, static_cast<std::int64_t>(limits_.max_shelves)));
  // Partial Fisher-Yates over 1..max_price picks gamma distinct prices.
  std::vector<std::int64_t> pool(static_cast<std::size_t>(limits_.max_price));
  for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = static_cast<std::int64_t>(i) + 1;
  for (std::size_t i = 0; i < gamma; ++i) {
    const auto j = static_cast<std::size_t>(uniform(static_cast<std::int64_t>(i),
                                                    static_cast<std::int64_t>(pool.size()) - 1));
    std::swap(pool[i], pool[j]);
  }
  std::vector<std::int64_t> prices(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(gamma));
  std::sort(prices.begin(), prices.end());

  std::vector<Shelf> shelves;
  for (auto m : prices) shelves.push_back({m, Integer(static_cast<long>(uniform(0, limits_.max_inventory)))});
  spec.shelves = ShelfSequence::finite(std::move(shelves));
  return spec;
}

std::pair<ProblemSpec, ProblemSpec> SpecSampler::next_price_pair() {
  ProblemSpec cheap = next();
  std::vector<Shelf> shelves = cheap.shelves.finite_shelves();
  // Non-decreasing shifts keep the raised prices strictly increasing.
  std::int64_t shift = 0;
  for (auto& shelf : shelves) {
    shift += uniform(0, 2);
    shelf.price += shift;
  }
  ProblemSpec expensive = with_shelves(cheap, std::move(shelves));
  return {std::move(cheap), std::move(expensive)};
}

std::pair<ProblemSpec, ProblemSpec> SpecSampler::next_inventory_pair() {
  ProblemSpec small = next();
  std::vector<Shelf> shelves = small.shelves.finite_shelves();
  for (auto& shelf : shelves) shelf.inventory += static_cast<long>(uniform(0, 3));
  ProblemSpec large = with_shelves(small, std::move(shelves));
  return {std::move(small), std::move(large)};
}

std::pair<ProblemSpec, std::size_t> SpecSampler::next_empty_shelf_case() {
  ProblemSpec spec = next();
  const auto& shelves = spec.shelves.finite_shelves();
  std::vector<std::size_t> legal;
  for (std::size_t p = 0; p <= shelves.size(); ++p) {
    const std::int64_t below = p == 0 ? 0 : shelves[p - 1].price;
    if (p == shelves.size() || shelves[p].price - below > 1) legal.push_back(p);
  }
  const auto pick = static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(legal.size()) - 1));
  return {std::move(spec), legal[pick]};
}

std::string describe(const ProblemSpec& spec) {
  std::ostringstream os;
  os << "r=" << spec.rank << " alpha=" << spec.demand << " beta=" << spec.budget;
  if (!spec.shelves.is_finite()) {
    os << " shelves=infinite";
    return os.str();
  }
  const auto& shelves = spec.shelves.finite_shelves();
  os << " m=(";
  for (std::size_t i = 0; i < shelves.size(); ++i) os << (i ? "," : "") << shelves[i].price;
  os << ") n=(";
  for (std::size_t i = 0; i < shelves.size(); ++i) os << (i ? "," : "") << shelves[i].inventory.get_str();
  os << ")";
  return os.str();
}

std::string Report::render() const {
  std::ostringstream os;
  for (const auto& failure : failures) os << "FAIL " << failure << "\n";
  os << "checked " << cases << " cases, " << failures.size() << " failures\n";
  return os.str();
}

Report run(std::size_t cases, std::uint64_t seed, SpecLimits limits) {
  SpecSampler sampler(seed, limits);
  Report report;
  report.cases = cases;
  auto fail = [&](std::size_t index, const std::string& check, const ProblemSpec& spec,
                  const std::string& detail) {
    report.failures.push_back("case " + std::to_string(index) + " " + check + ": " +
                              describe(spec) + " :: " + detail);
  };

  for (std::size_t i = 0; i < cases; ++i) {
    const ProblemSpec spec = sampler.next();
    const BoundResult bound = compute_bound(spec);
    const Rational via_oracle = oracle::oracle_bound(spec);
    if (via_oracle != bound.lambda_bound) {
      fail(i, "oracle", spec, bound.lambda_bound.to_string() + " != " + via_oracle.to_string());
    }
    const int oracle_mult = oracle::oracle_multiplicity(spec);
    if (oracle_mult != bound.multiplicity) {
      fail(i, "multiplicity", spec,
           std::to_string(bound.multiplicity) + " != " + std::to_string(oracle_mult));
    }
    const Rational via_ledger = ledger::ledger_min(spec).value;
    if (via_ledger != bound.lambda_bound) {
      fail(i, "ledger", spec, bound.lambda_bound.to_string() + " != " + via_ledger.to_string());
    }

    const Rational base(spec.rank, 2);
    Integer items = 0;
    for (const auto& n : bound.n_star) items += n;
    const Rational ceiling =
        base + min(Rational(spec.budget, 2 * bound.shelves.front().price), Rational(items, 2));
    if (bound.lambda_bound < base || bound.lambda_bound > ceiling) {
      fail(i, "range", spec, bound.lambda_bound.to_string() + " outside [" + base.to_string() +
                                 ", " + ceiling.to_string() + "]");
    }

    const auto [cheap, expensive] = sampler.next_price_pair();
    const Rational lambda_cheap = compute_bound(cheap).lambda_bound;
    const Rational lambda_expensive = compute_bound(expensive).lambda_bound;
    if (lambda_cheap < lambda_expensive) {
      fail(i, "price-monotonicity", cheap,
           "raised to " + describe(expensive) + " gives " + lambda_expensive.to_string() + " > " +
               lambda_cheap.to_string());
    }

    const auto [small, large] = sampler.next_inventory_pair();
    const Rational lambda_small = compute_bound(small).lambda_bound;
    const Rational lambda_large = compute_bound(large).lambda_bound;
    if (lambda_small > lambda_large) {
      fail(i, "inventory-monotonicity", small,
           "raised to " + describe(large) + " gives " + lambda_large.to_string() + " < " +
               lambda_small.to_string());
    }

    const auto [original, position] = sampler.next_empty_shelf_case();
    const BoundResult before = compute_bound(original);
    const BoundResult after = compute_bound(insert_empty_shelf(original, position));
    if (before.lambda_bound != after.lambda_bound || before.multiplicity != after.multiplicity) {
      fail(i, "empty-shelf", original,
           "insert at " + std::to_string(position) + " gives " + after.lambda_bound.to_string() +
               " (multiplicity " + std::to_string(after.multiplicity) + ")");
    }
  }
  return report;
}

}  // namespace rlct::verify
