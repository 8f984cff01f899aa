#pragma once

// Learning coefficient bounds for three-layer networks
//
//   y = A sigma(B x) + noise,  x in R^N, H hidden units, y in R^M,
//
// whose true distribution has H* < H hidden units. Two singular points are
// covered: P1, where the H - H* redundant units have zero input weights, and
// P2, where their input weights duplicate the last true unit.
//
// The shelf data depends on sigma only through its support
// {s >= 1 : sigma^(s)(0) != 0}. Every bound assumes the linear independence
// of the random variables in the Taylor expansion; check_weight_admissibility
// offers the checkable sufficient condition on the true weights.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rlct/counting_core.hpp"
#include "rlct/rational.hpp"

namespace rlct::nn {

inline constexpr std::string_view kAssumptionsNote =
    "upper bound; assumes the Taylor-expansion random variables are linearly "
    "independent (sufficient: true input weights nonzero and pairwise not equal up to sign)";

struct NetworkShape {
  std::int64_t inputs = 1;       // N
  std::int64_t hidden = 1;       // H
  std::int64_t outputs = 1;      // M
  std::int64_t true_hidden = 0;  // H*

  std::int64_t redundant() const { return hidden - true_hidden; }
};

void validate_shape(const NetworkShape& shape);

enum class Family { Exp, Swish, Odd, Polynomial, Custom };

std::string_view to_string(Family family);

/// Degrees s >= 1 with sigma^(s)(0) != 0, in increasing order.
class ActivationSupport {
 public:
  using Generator = std::function<std::int64_t(std::size_t index)>;

  static ActivationSupport exp_type();    // e^x - 1: 1, 2, 3, 4, ...
  static ActivationSupport swish_type();  // x / (1 + e^-x): 1, 2, 4, 6, ...
  static ActivationSupport odd_type();    // tanh: 1, 3, 5, 7, ...
  static ActivationSupport polynomial(std::vector<std::int64_t> exponents);
  static ActivationSupport custom(Generator generator);

  Family family() const { return family_; }
  bool is_polynomial() const { return family_ == Family::Polynomial; }
  /// Zero-based: degree(0) is m_1.
  std::int64_t degree(std::size_t index) const;
  /// Finite count S for polynomials.
  std::optional<std::size_t> count() const;

 private:
  ActivationSupport(Family family, Generator generator) : family_(family), generator_(std::move(generator)) {}

  Family family_;
  Generator generator_;
  std::vector<std::int64_t> exponents_;
};

Integer binom(std::int64_t n, std::int64_t k);

/// Number of monomials of total degree d in N variables, times M.
Integer monomial_inventory(std::int64_t outputs, std::int64_t inputs, std::int64_t degree);

ProblemSpec shelves_P1(const NetworkShape& shape, const ActivationSupport& support);
ProblemSpec shelves_P2(const NetworkShape& shape);

struct NetworkBound {
  ProblemSpec spec;
  BoundResult result;
  /// The network-specific closed form, evaluated independently of counting_core.
  Rational closed_form;
};

/// Closed form for P1, cross-checked against compute_bound on shelves_P1.
NetworkBound bound_P1(const NetworkShape& shape, const ActivationSupport& support);
/// Closed form for P2 (binomial L/K forms), cross-checked the same way.
NetworkBound bound_P2(const NetworkShape& shape);

/// The P2 closed form alone, with its simplified L and K.
struct P2ClosedForm {
  std::size_t L = 0;
  std::size_t K = 0;
  Rational lambda;
};
P2ClosedForm p2_closed_form(const NetworkShape& shape);

/// The P1 closed form alone.
struct P1ClosedForm {
  std::size_t L = 0;
  std::size_t K = 0;
  Rational lambda;
};
P1ClosedForm p1_closed_form(const NetworkShape& shape, const ActivationSupport& support);

// Linear activation (reduced-rank regression) with true rank R.

enum class ReducedRankCase { Case2, Case3, Case4 };

std::string_view to_string(ReducedRankCase c);

ReducedRankCase case_of_reduced_rank(std::int64_t outputs, std::int64_t inputs,
                                     std::int64_t hidden, std::int64_t rank);
ProblemSpec reduced_rank_spec(std::int64_t outputs, std::int64_t inputs, std::int64_t hidden,
                              std::int64_t rank);
Rational bound_reduced_rank(std::int64_t outputs, std::int64_t inputs, std::int64_t hidden,
                            std::int64_t rank);

enum class Winner { P1, P2, Equal };

std::string_view to_string(Winner w);

struct Comparison {
  Rational lambda_p1;
  Rational lambda_p2;
  Rational difference;  // lambda_p1 - lambda_p2
  Winner smaller = Winner::Equal;
};

Comparison compare_P1_P2(const NetworkShape& shape, const ActivationSupport& support);

inline constexpr std::int64_t kDefaultScanMax = 200;

struct CrossoverScan {
  /// Largest H - H* in 1..scan_max with lambda_P2 <= lambda_P1.
  std::int64_t threshold = 0;
  /// Largest H - H* with lambda_P2 < lambda_P1 strictly (0 if none). Values
  /// between the two thresholds are exact ties.
  std::int64_t strict_threshold = 0;
  /// Number of sign changes of (lambda_P2 <= lambda_P1) along the scan.
  int flips = 0;
  bool multiple_flips() const { return flips > 1; }
};

/// Scans H - H* = 1..scan_max with H* fixed; NotFoundWithin if P2 never wins.
CrossoverScan crossover_threshold(std::int64_t outputs, const ActivationSupport& support,
                                  std::int64_t true_hidden,
                                  std::int64_t scan_max = kDefaultScanMax,
                                  std::int64_t inputs = 1);

// True-weight admissibility and the generalized Vandermonde witness.

using WeightMatrix = std::vector<std::vector<Rational>>;

struct AdmissibilityReport {
  bool admissible = true;
  /// One-based rows equal to zero.
  std::vector<std::size_t> zero_rows;
  /// One-based pairs (i, j), i < j, with b_i = b_j or b_i = -b_j.
  std::vector<std::pair<std::size_t, std::size_t>> violating_pairs;
};

AdmissibilityReport check_weight_admissibility(const WeightMatrix& weights);

using Monomial = std::vector<std::int64_t>;

struct VandermondeWitness {
  /// Rows b_i = (t_i, t_i^L, ..., t_i^{L^{N-1}}) with t_i = i.
  std::vector<std::vector<Integer>> points;
  std::int64_t base = 0;  // L = D + 1
  /// matrix[i][k] = monomial_k(b_i).
  std::vector<std::vector<Integer>> matrix;
  Rational determinant;
};

VandermondeWitness vandermonde_witness(const std::vector<Monomial>& monomials);

/// Exact determinant of a square integer matrix (fraction-free elimination).
Integer determinant(std::vector<std::vector<Integer>> matrix);

}  // namespace rlct::nn
