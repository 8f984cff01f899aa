#include "rlct/counting_core.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "rlct/error.hpp"

namespace rlct {

namespace {

void check_shelf(const Shelf& shelf, const Shelf* previous, std::size_t index) {
  const std::string where = "shelf " + std::to_string(index + 1);
  if (previous == nullptr && shelf.price < 1) {
    throw Error(ErrorCode::NonIncreasingPrices, where + ": first price must be at least 1");
  }
  if (previous != nullptr && shelf.price <= previous->price) {
    throw Error(ErrorCode::NonIncreasingPrices,
                where + ": price " + std::to_string(shelf.price) + " does not exceed " +
                    std::to_string(previous->price));
  }
  if (shelf.inventory < 0) {
    throw Error(ErrorCode::NegativeInventory, where + ": negative inventory");
  }
}

// Materializes shelves until the cumulative inventory reaches the demand, or
// the finite list runs out. Returns the first L shelves.
std::vector<Shelf> shelves_through_L(const ProblemSpec& spec) {
  validate_spec(spec);
  const ShelfSequence& seq = spec.shelves;
  std::vector<Shelf> out;
  Integer cumulative = 0;
  if (seq.is_finite()) {
    for (const Shelf& shelf : seq.finite_shelves()) {
      out.push_back(shelf);
      cumulative += shelf.inventory;
      if (cumulative >= spec.demand) break;
    }
    return out;
  }
  for (std::size_t index = 0; index < seq.hard_cap(); ++index) {
    Shelf shelf = seq.at(index);
    check_shelf(shelf, out.empty() ? nullptr : &out.back(), index);
    cumulative += shelf.inventory;
    out.push_back(std::move(shelf));
    if (cumulative >= spec.demand) return out;
  }
  throw Error(ErrorCode::ShelfCapExceeded,
              "cumulative inventory stayed below demand " + std::to_string(spec.demand) +
                  " for " + std::to_string(seq.hard_cap()) + " shelves");
}

std::vector<Integer> n_star_of(const ProblemSpec& spec, const std::vector<Shelf>& shelves) {
  std::vector<Integer> n_star;
  n_star.reserve(shelves.size());
  Integer before = 0;
  for (std::size_t s = 0; s < shelves.size(); ++s) {
    if (s + 1 < shelves.size()) {
      n_star.push_back(shelves[s].inventory);
      before += shelves[s].inventory;
    } else {
      const Integer remaining = Integer(static_cast<long>(spec.demand)) - before;
      n_star.push_back(shelves[s].inventory < remaining ? shelves[s].inventory : remaining);
    }
  }
  return n_star;
}

std::size_t K_of(std::int64_t budget, const std::vector<Shelf>& shelves,
                 const std::vector<Integer>& n_star) {
  Integer spent = 0;
  std::size_t K = 0;
  for (std::size_t s = 0; s < n_star.size(); ++s) {
    spent += Integer(static_cast<long>(shelves[s].price)) * n_star[s];
    if (spent > budget) break;
    K = s + 1;
  }
  return K;
}

}  // namespace

ShelfSequence ShelfSequence::finite(std::vector<Shelf> shelves) {
  ShelfSequence seq;
  seq.shelves_ = std::move(shelves);
  return seq;
}

ShelfSequence ShelfSequence::infinite(Generator generator, std::size_t hard_cap) {
  if (!generator) {
    throw Error(ErrorCode::InvalidArgument, "infinite shelf sequence needs a generator");
  }
  if (hard_cap == 0) {
    throw Error(ErrorCode::InvalidArgument, "hard cap must be positive");
  }
  ShelfSequence seq;
  seq.generator_ = std::move(generator);
  seq.hard_cap_ = hard_cap;
  return seq;
}

std::optional<std::size_t> ShelfSequence::size() const {
  if (is_finite()) return shelves_.size();
  return std::nullopt;
}

Shelf ShelfSequence::at(std::size_t index) const {
  if (is_finite()) return shelves_.at(index);
  return generator_(index);
}

std::vector<Shelf> ShelfSequence::prefix(std::size_t count) const {
  if (is_finite()) {
    return {shelves_.begin(), shelves_.begin() + static_cast<std::ptrdiff_t>(
                                                    std::min(count, shelves_.size()))};
  }
  std::vector<Shelf> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(generator_(i));
  return out;
}

std::string_view to_string(BoundCase c) {
  switch (c) {
    case BoundCase::BudgetExhaustedOnFirstShelf: return "BudgetExhaustedOnFirstShelf";
    case BoundCase::Middle: return "Middle";
    case BoundCase::AllDemandMet: return "AllDemandMet";
  }
  return "Unknown";
}

const ProblemSpec& validate_spec(const ProblemSpec& spec) {
  if (spec.rank < 0) throw Error(ErrorCode::NegativeRank, "r must be non-negative");
  if (spec.demand < 1) throw Error(ErrorCode::NonPositiveDemand, "alpha must be at least 1");
  if (spec.budget < 1) throw Error(ErrorCode::NonPositiveBudget, "beta must be at least 1");
  if (spec.shelves.is_finite()) {
    const auto& shelves = spec.shelves.finite_shelves();
    if (shelves.empty()) {
      throw Error(ErrorCode::InvalidArgument, "shelf list is empty");
    }
    for (std::size_t i = 0; i < shelves.size(); ++i) {
      check_shelf(shelves[i], i == 0 ? nullptr : &shelves[i - 1], i);
    }
  } else {
    check_shelf(spec.shelves.at(0), nullptr, 0);
  }
  return spec;
}

std::size_t compute_L(const ProblemSpec& spec) { return shelves_through_L(spec).size(); }

std::vector<Integer> compute_n_star(const ProblemSpec& spec, std::size_t L) {
  validate_spec(spec);
  return n_star_of(spec, spec.shelves.prefix(L));
}

std::size_t compute_K(const ProblemSpec& spec, const std::vector<Integer>& n_star) {
  return K_of(spec.budget, spec.shelves.prefix(n_star.size()), n_star);
}

BoundResult compute_bound(const ProblemSpec& spec) {
  BoundResult result;
  result.shelves = shelves_through_L(spec);
  result.L = result.shelves.size();
  result.n_star = n_star_of(spec, result.shelves);
  result.K = K_of(spec.budget, result.shelves, result.n_star);

  const auto& m = result.shelves;
  const auto& n_star = result.n_star;
  const std::size_t K = result.K;
  const Rational half(1, 2);
  const Rational base = Rational(spec.rank) * half;
  const Integer budget(static_cast<long>(spec.budget));

  if (K == 0) {
    result.bound_case = BoundCase::BudgetExhaustedOnFirstShelf;
    result.lambda_bound = base + Rational(budget, 2 * Integer(static_cast<long>(m[0].price)));
  } else if (K < result.L) {
    result.bound_case = BoundCase::Middle;
    const Integer next_price(static_cast<long>(m[K].price));
    Integer numerator = budget;
    for (std::size_t s = 0; s < K; ++s) {
      numerator += (next_price - static_cast<long>(m[s].price)) * n_star[s];
    }
    result.lambda_bound = base + Rational(numerator, 2 * next_price);
  } else {
    result.bound_case = BoundCase::AllDemandMet;
    Integer total = 0;
    for (const auto& n : n_star) total += n;
    result.lambda_bound = base + Rational(total, 2);
  }

  Integer spent = 0;
  for (std::size_t s = 0; s < result.L; ++s) {
    spent += Integer(static_cast<long>(m[s].price)) * n_star[s];
    if (spent == budget) {
      result.multiplicity = 2;
      break;
    }
  }
  return result;
}

ProblemSpec insert_empty_shelf(const ProblemSpec& spec, std::size_t position) {
  if (!spec.shelves.is_finite()) {
    throw Error(ErrorCode::InvalidArgument, "empty-shelf insertion needs a finite sequence");
  }
  std::vector<Shelf> shelves = spec.shelves.finite_shelves();
  if (position > shelves.size()) {
    throw Error(ErrorCode::InvalidArgument, "insertion position past the end");
  }
  const std::int64_t price = position == 0 ? 1 : shelves[position - 1].price + 1;
  if (position < shelves.size() && price >= shelves[position].price) {
    throw Error(ErrorCode::NoIntegerPriceInGap,
                "no integer price strictly below " + std::to_string(shelves[position].price));
  }
  shelves.insert(shelves.begin() + static_cast<std::ptrdiff_t>(position), Shelf{price, 0});
  ProblemSpec out = spec;
  out.shelves = ShelfSequence::finite(std::move(shelves));
  return out;
}

CappedShelves capped_shelves(const ProblemSpec& spec) {
  const std::vector<Shelf> shelves = shelves_through_L(spec);
  CappedShelves out;
  out.n_star = n_star_of(spec, shelves);
  for (const auto& shelf : shelves) out.prices.push_back(shelf.price);
  return out;
}

}  // namespace rlct
