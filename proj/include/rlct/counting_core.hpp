#pragma once

// Budget-constrained counting rule for local learning coefficient bounds.
//
// A problem is a rank r, a demand alpha, a budget beta and a sequence of
// shelves (price m_s, inventory n_s) with strictly increasing prices. Twice
// the excess of the bound over r/2 is the largest number of items that can be
// bought, fractionally, from the cheapest shelves first without exceeding
// either the demand or the budget.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "rlct/rational.hpp"

namespace rlct {

struct Shelf {
  std::int64_t price = 1;
  Integer inventory = 0;

  friend bool operator==(const Shelf& a, const Shelf& b) {
    return a.price == b.price && a.inventory == b.inventory;
  }
};

/// Finite list of shelves, or a lazily generated infinite family.
///
/// Indices are zero-based. Infinite generators must be deterministic and
/// total; materialization stops with ShelfCapExceeded after `hard_cap`
/// shelves.
class ShelfSequence {
 public:
  using Generator = std::function<Shelf(std::size_t index)>;
  static constexpr std::size_t kDefaultHardCap = 1'000'000;

  ShelfSequence() = default;
  static ShelfSequence finite(std::vector<Shelf> shelves);
  static ShelfSequence infinite(Generator generator, std::size_t hard_cap = kDefaultHardCap);

  bool is_finite() const { return !generator_; }
  /// Number of shelves (gamma) for finite sequences.
  std::optional<std::size_t> size() const;
  std::size_t hard_cap() const { return hard_cap_; }

  /// Shelf at `index`; out of range for finite sequences is a logic error.
  Shelf at(std::size_t index) const;
  /// The first `count` shelves (fewer if the finite list is shorter).
  std::vector<Shelf> prefix(std::size_t count) const;
  const std::vector<Shelf>& finite_shelves() const { return shelves_; }

 private:
  std::vector<Shelf> shelves_;
  Generator generator_;
  std::size_t hard_cap_ = kDefaultHardCap;
};

struct ProblemSpec {
  std::int64_t rank = 0;
  std::int64_t demand = 1;  // alpha
  std::int64_t budget = 1;  // beta
  ShelfSequence shelves;
};

enum class BoundCase { BudgetExhaustedOnFirstShelf, Middle, AllDemandMet };

std::string_view to_string(BoundCase c);

struct BoundResult {
  Rational lambda_bound;
  int multiplicity = 1;
  std::size_t L = 0;
  std::size_t K = 0;
  std::vector<Integer> n_star;
  /// The L shelves that were materialized to reach the result.
  std::vector<Shelf> shelves;
  BoundCase bound_case = BoundCase::AllDemandMet;
};

/// Rejects specs outside the theorem's hypotheses. For infinite sequences only
/// the first shelf is inspected here; later shelves are checked as they are
/// materialized.
const ProblemSpec& validate_spec(const ProblemSpec& spec);

std::size_t compute_L(const ProblemSpec& spec);
std::vector<Integer> compute_n_star(const ProblemSpec& spec, std::size_t L);
std::size_t compute_K(const ProblemSpec& spec, const std::vector<Integer>& n_star);
BoundResult compute_bound(const ProblemSpec& spec);

/// Inserts an empty shelf before `position` (0..gamma) of a finite sequence,
/// priced one above its left neighbour (or 1 at the front).
ProblemSpec insert_empty_shelf(const ProblemSpec& spec, std::size_t position);

/// The truncated problem shared by the oracle and the blow-up ledger: prices of
/// the first L shelves and the capped inventories n*.
struct CappedShelves {
  std::vector<std::int64_t> prices;
  std::vector<Integer> n_star;
};

CappedShelves capped_shelves(const ProblemSpec& spec);

}  // namespace rlct
