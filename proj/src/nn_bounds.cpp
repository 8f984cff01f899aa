#include "rlct/nn_bounds.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "rlct/error.hpp"

namespace rlct::nn {

namespace {

Integer big(std::int64_t v) { return Integer(static_cast<long>(v)); }

void require_true_units(const NetworkShape& shape) {
  if (shape.true_hidden < 1) {
    throw Error(ErrorCode::P2RequiresTrueUnits, "P2 is only defined when H* >= 1");
  }
}

std::string describe(const Rational& a, const Rational& b) {
  return a.to_string() + " vs " + b.to_string();
}

}  // namespace

void validate_shape(const NetworkShape& shape) {
  if (shape.inputs < 1 || shape.hidden < 1 || shape.outputs < 1) {
    throw Error(ErrorCode::InvalidShape, "N, H and M must be at least 1");
  }
  if (shape.true_hidden < 0 || shape.true_hidden >= shape.hidden) {
    throw Error(ErrorCode::InvalidShape, "H* must satisfy 0 <= H* < H");
  }
}

std::string_view to_string(Family family) {
  switch (family) {
    case Family::Exp: return "exp";
    case Family::Swish: return "swish";
    case Family::Odd: return "tanh";
    case Family::Polynomial: return "poly";
    case Family::Custom: return "custom";
  }
  return "unknown";
}

ActivationSupport ActivationSupport::exp_type() {
  return {Family::Exp, [](std::size_t i) { return static_cast<std::int64_t>(i) + 1; }};
}

ActivationSupport ActivationSupport::swish_type() {
  return {Family::Swish,
          [](std::size_t i) { return i == 0 ? std::int64_t{1} : 2 * static_cast<std::int64_t>(i); }};
}

ActivationSupport ActivationSupport::odd_type() {
  return {Family::Odd, [](std::size_t i) { return 2 * static_cast<std::int64_t>(i) + 1; }};
}

ActivationSupport ActivationSupport::polynomial(std::vector<std::int64_t> exponents) {
  if (exponents.empty()) {
    throw Error(ErrorCode::InvalidArgument, "polynomial activation needs at least one exponent");
  }
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 1 || (i > 0 && exponents[i] <= exponents[i - 1])) {
      throw Error(ErrorCode::NonIncreasingPrices,
                  "polynomial exponents must be positive and strictly increasing");
    }
  }
  ActivationSupport support(Family::Polynomial, {});
  support.exponents_ = std::move(exponents);
  return support;
}

ActivationSupport ActivationSupport::custom(Generator generator) {
  if (!generator) throw Error(ErrorCode::InvalidArgument, "custom activation needs a generator");
  return {Family::Custom, std::move(generator)};
}

std::int64_t ActivationSupport::degree(std::size_t index) const {
  if (is_polynomial()) return exponents_.at(index);
  return generator_(index);
}

std::optional<std::size_t> ActivationSupport::count() const {
  if (is_polynomial()) return exponents_.size();
  return std::nullopt;
}

Integer binom(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0) throw Error(ErrorCode::InvalidArgument, "binomial needs non-negative arguments");
  if (k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

Integer monomial_inventory(std::int64_t outputs, std::int64_t inputs, std::int64_t degree) {
  return big(outputs) * binom(degree + inputs - 1, degree);
}

ProblemSpec shelves_P1(const NetworkShape& shape, const ActivationSupport& support) {
  validate_shape(shape);
  if (support.is_polynomial() && shape.true_hidden > 0) {
    throw Error(ErrorCode::PolynomialWithHiddenUnits,
                "polynomial activations are only handled when H* = 0");
  }
  ProblemSpec spec;
  spec.rank = (shape.outputs + shape.inputs) * shape.true_hidden;
  spec.demand = shape.outputs * shape.redundant();
  spec.budget = shape.inputs * shape.redundant();

  const std::int64_t M = shape.outputs;
  const std::int64_t N = shape.inputs;
  if (auto count = support.count()) {
    std::vector<Shelf> shelves;
    for (std::size_t s = 0; s < *count; ++s) {
      const std::int64_t m = support.degree(s);
      shelves.push_back({m, monomial_inventory(M, N, m)});
    }
    spec.shelves = ShelfSequence::finite(std::move(shelves));
  } else {
    spec.shelves = ShelfSequence::infinite([support, M, N](std::size_t s) {
      const std::int64_t m = support.degree(s);
      return Shelf{m, monomial_inventory(M, N, m)};
    });
  }
  return spec;
}

ProblemSpec shelves_P2(const NetworkShape& shape) {
  validate_shape(shape);
  require_true_units(shape);
  ProblemSpec spec;
  spec.rank = (shape.outputs + shape.inputs) * shape.true_hidden;
  spec.demand = shape.outputs * shape.redundant();
  spec.budget = shape.inputs * shape.redundant();
  const std::int64_t M = shape.outputs;
  const std::int64_t N = shape.inputs;
  spec.shelves = ShelfSequence::infinite([M, N](std::size_t index) {
    const auto s = static_cast<std::int64_t>(index) + 1;
    Integer n = monomial_inventory(M, N, s);
    if (s == 1) n -= N;
    return Shelf{s, n};
  });
  return spec;
}

P1ClosedForm p1_closed_form(const NetworkShape& shape, const ActivationSupport& support) {
  validate_shape(shape);
  const std::int64_t N = shape.inputs;
  const std::int64_t M = shape.outputs;
  const Integer d = big(shape.redundant());
  const auto S = support.count();

  // Inventories per output unit: c_s = C(m_s + N - 1, m_s).
  std::vector<std::int64_t> m;
  std::vector<Integer> c;
  Integer units = 0;
  while (units < d && (!S || m.size() < *S)) {
    if (m.size() >= ShelfSequence::kDefaultHardCap) {
      throw Error(ErrorCode::ShelfCapExceeded, "P1 closed form did not reach H - H*");
    }
    m.push_back(support.degree(m.size()));
    c.push_back(binom(m.back() + N - 1, m.back()));
    units += c.back();
  }
  const std::size_t L = m.size();
  const Integer before_last = units - c.back();
  const Integer last = std::min(c.back(), Integer(d - before_last));

  P1ClosedForm out;
  out.L = L;
  Integer cost = 0;
  for (std::size_t k = 1; k <= L; ++k) {
    const Integer count = k < L ? c[k - 1] : last;
    cost += big(M) * big(m[k - 1]) * count;
    if (cost > big(N) * d) break;
    out.K = k;
  }

  const Rational base(big((M + N) * shape.true_hidden), 2);
  const std::size_t K = out.K;
  if (K == 0) {
    out.lambda = base + Rational(big(N) * d, big(2 * m[0]));
  } else if (K < L) {
    Integer numerator = big(N) * d;
    for (std::size_t s = 0; s < K; ++s) numerator += big(M) * c[s] * big(m[K] - m[s]);
    out.lambda = base + Rational(numerator, big(2 * m[K]));
  } else {
    out.lambda = base + Rational(big(M) * (before_last + last), 2);
  }
  return out;
}

P2ClosedForm p2_closed_form(const NetworkShape& shape) {
  validate_shape(shape);
  require_true_units(shape);
  const std::int64_t N = shape.inputs;
  const std::int64_t M = shape.outputs;
  const std::int64_t d = shape.redundant();

  P2ClosedForm out;
  std::int64_t L = 1;
  while (big(M) * binom(N + L, L) < big(M * (d + 1) + N)) ++L;
  out.L = static_cast<std::size_t>(L);

  std::int64_t K = 0;
  for (std::int64_t k = 1; k < L; ++k) {
    if (big(M) * binom(N + k, N + 1) > d + 1) break;
    K = k;
  }
  // The last shelf only needs the inventory still missing from the demand.
  if (K == L - 1) {
    const Integer items_before = L == 1 ? Integer(0) : big(M) * (binom(N + L - 1, L - 1) - 1) - N;
    const Integer cost_before = L == 1 ? Integer(0) : big(M * N) * binom(N + L - 1, N + 1) - N;
    Integer inventory_L = monomial_inventory(M, N, L);
    if (L == 1) inventory_L -= N;
    const Integer last = std::min(inventory_L, Integer(big(M * d) - items_before));
    if (cost_before + big(L) * last <= big(N * d)) K = L;
  }
  out.K = static_cast<std::size_t>(K);

  const Rational base(big((M + N) * shape.true_hidden), 2);
  if (K == 0) {
    out.lambda = base + Rational(big(N * d), 2);
  } else if (K < L) {
    const Integer numerator = big(N * (d - K)) + big(M) * (binom(N + K + 1, K) - (K + 1));
    out.lambda = base + Rational(numerator, big(2 * (K + 1)));
  } else {
    out.lambda = base + Rational(big(M * d), 2);
  }
  return out;
}

NetworkBound bound_P1(const NetworkShape& shape, const ActivationSupport& support) {
  NetworkBound out{shelves_P1(shape, support), {}, {}};
  out.result = compute_bound(out.spec);
  const P1ClosedForm closed = p1_closed_form(shape, support);
  out.closed_form = closed.lambda;
  if (closed.lambda != out.result.lambda_bound || closed.K != out.result.K ||
      closed.L != out.result.L) {
    throw Error(ErrorCode::InternalInconsistency,
                "P1 closed form disagrees with counting rule: " +
                    describe(closed.lambda, out.result.lambda_bound));
  }
  return out;
}

NetworkBound bound_P2(const NetworkShape& shape) {
  NetworkBound out{shelves_P2(shape), {}, {}};
  out.result = compute_bound(out.spec);
  const P2ClosedForm closed = p2_closed_form(shape);
  out.closed_form = closed.lambda;
  if (closed.lambda != out.result.lambda_bound || closed.K != out.result.K ||
      closed.L != out.result.L) {
    throw Error(ErrorCode::InternalInconsistency,
                "P2 closed form disagrees with counting rule: " +
                    describe(closed.lambda, out.result.lambda_bound));
  }
  return out;
}

std::string_view to_string(ReducedRankCase c) {
  switch (c) {
    case ReducedRankCase::Case2: return "Case2";
    case ReducedRankCase::Case3: return "Case3";
    case ReducedRankCase::Case4: return "Case4";
  }
  return "Unknown";
}

namespace {

void check_reduced_rank(std::int64_t M, std::int64_t N, std::int64_t H, std::int64_t R) {
  if (M < 1 || N < 1 || H < 1) throw Error(ErrorCode::InvalidShape, "M, N and H must be at least 1");
  if (R < 0) throw Error(ErrorCode::InvalidArgument, "rank must be non-negative");
  if (R >= std::min({M, N, H})) {
    throw Error(ErrorCode::RankTooLarge, "rank must be below min(M, N, H)");
  }
}

}  // namespace

ReducedRankCase case_of_reduced_rank(std::int64_t M, std::int64_t N, std::int64_t H,
                                     std::int64_t R) {
  check_reduced_rank(M, N, H, R);
  if ((N < H && H < M) || (H <= N && N < M)) return ReducedRankCase::Case2;
  if (N >= M && N >= H) return ReducedRankCase::Case3;
  return ReducedRankCase::Case4;  // H >= M and N < H
}

ProblemSpec reduced_rank_spec(std::int64_t M, std::int64_t N, std::int64_t H, std::int64_t R) {
  check_reduced_rank(M, N, H, R);
  ProblemSpec spec;
  spec.rank = R * (M + N - R);
  spec.demand = (M - R) * (H - R);
  spec.budget = (N - R) * (H - R);
  spec.shelves = ShelfSequence::finite({Shelf{1, big((M - R) * (N - R))}});
  return spec;
}

Rational bound_reduced_rank(std::int64_t M, std::int64_t N, std::int64_t H, std::int64_t R) {
  Rational closed;
  switch (case_of_reduced_rank(M, N, H, R)) {
    case ReducedRankCase::Case2: closed = Rational(big(H * N - H * R + M * R), 2); break;
    case ReducedRankCase::Case3: closed = Rational(big(H * M - H * R + N * R), 2); break;
    case ReducedRankCase::Case4: closed = Rational(big(M * N), 2); break;
  }
  const Rational generic = compute_bound(reduced_rank_spec(M, N, H, R)).lambda_bound;
  if (closed != generic) {
    throw Error(ErrorCode::InternalInconsistency,
                "reduced-rank closed form disagrees with counting rule: " + describe(closed, generic));
  }
  return closed;
}

std::string_view to_string(Winner w) {
  switch (w) {
    case Winner::P1: return "P1";
    case Winner::P2: return "P2";
    case Winner::Equal: return "Equal";
  }
  return "Unknown";
}

Comparison compare_P1_P2(const NetworkShape& shape, const ActivationSupport& support) {
  if (support.is_polynomial()) {
    throw Error(ErrorCode::PolynomialWithHiddenUnits, "P1/P2 comparison needs a non-polynomial activation");
  }
  Comparison out;
  out.lambda_p1 = bound_P1(shape, support).result.lambda_bound;
  out.lambda_p2 = bound_P2(shape).result.lambda_bound;
  out.difference = out.lambda_p1 - out.lambda_p2;
  out.smaller = out.difference.sign() > 0 ? Winner::P2
                : out.difference.sign() < 0 ? Winner::P1
                                            : Winner::Equal;
  return out;
}

CrossoverScan crossover_threshold(std::int64_t outputs, const ActivationSupport& support,
                                  std::int64_t true_hidden, std::int64_t scan_max,
                                  std::int64_t inputs) {
  if (scan_max < 1) throw Error(ErrorCode::InvalidArgument, "scan_max must be positive");
  CrossoverScan scan;
  bool found = false;
  bool previous = false;
  for (std::int64_t d = 1; d <= scan_max; ++d) {
    const NetworkShape shape{inputs, true_hidden + d, outputs, true_hidden};
    const Comparison cmp = compare_P1_P2(shape, support);
    const bool p2_not_worse = cmp.smaller != Winner::P1;
    if (p2_not_worse) {
      found = true;
      scan.threshold = d;
    }
    if (cmp.smaller == Winner::P2) scan.strict_threshold = d;
    if (d > 1 && p2_not_worse != previous) ++scan.flips;
    previous = p2_not_worse;
  }
  if (!found) {
    throw Error(ErrorCode::NotFoundWithin,
                "lambda_P2 <= lambda_P1 never holds for H - H* <= " + std::to_string(scan_max));
  }
  return scan;
}

AdmissibilityReport check_weight_admissibility(const WeightMatrix& weights) {
  AdmissibilityReport report;
  for (std::size_t i = 1; i < weights.size(); ++i) {
    if (weights[i].size() != weights[0].size()) {
      throw Error(ErrorCode::InvalidArgument, "weight matrix is not rectangular");
    }
  }
  const auto negated = [](const std::vector<Rational>& row) {
    std::vector<Rational> out;
    out.reserve(row.size());
    for (const auto& v : row) out.push_back(-v);
    return out;
  };
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (std::all_of(weights[i].begin(), weights[i].end(),
                    [](const Rational& v) { return v.sign() == 0; })) {
      report.zero_rows.push_back(i + 1);
    }
    const auto minus_i = negated(weights[i]);
    for (std::size_t j = i + 1; j < weights.size(); ++j) {
      if (weights[j] == weights[i] || weights[j] == minus_i) {
        report.violating_pairs.emplace_back(i + 1, j + 1);
      }
    }
  }
  report.admissible = report.zero_rows.empty() && report.violating_pairs.empty();
  return report;
}

Integer determinant(std::vector<std::vector<Integer>> a) {
  const std::size_t n = a.size();
  for (const auto& row : a) {
    if (row.size() != n) throw Error(ErrorCode::InvalidArgument, "determinant needs a square matrix");
  }
  if (n == 0) return 1;
  // Bareiss: every division below is exact.
  int sign = 1;
  Integer previous_pivot = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer value = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(value.get_mpz_t(), value.get_mpz_t(), previous_pivot.get_mpz_t());
        a[i][j] = std::move(value);
      }
    }
    previous_pivot = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

VandermondeWitness vandermonde_witness(const std::vector<Monomial>& monomials) {
  if (monomials.empty()) throw Error(ErrorCode::InvalidArgument, "need at least one monomial");
  const std::size_t N = monomials.front().size();
  if (N == 0) throw Error(ErrorCode::InvalidArgument, "monomials need at least one variable");
  std::int64_t max_degree = 0;
  for (const auto& mono : monomials) {
    if (mono.size() != N) throw Error(ErrorCode::InvalidArgument, "monomials differ in arity");
    std::int64_t total = 0;
    for (auto h : mono) {
      if (h < 0) throw Error(ErrorCode::InvalidArgument, "negative exponent");
      total += h;
    }
    max_degree = std::max(max_degree, total);
  }
  if (std::set<Monomial>(monomials.begin(), monomials.end()).size() != monomials.size()) {
    throw Error(ErrorCode::DuplicateMonomials, "monomials must be pairwise distinct");
  }

  VandermondeWitness w;
  w.base = max_degree + 1;
  const std::size_t H = monomials.size();
  for (std::size_t i = 0; i < H; ++i) {
    const Integer t = static_cast<unsigned long>(i + 1);
    std::vector<Integer> point;
    unsigned long exponent = 1;
    for (std::size_t j = 0; j < N; ++j) {
      Integer coordinate;
      mpz_pow_ui(coordinate.get_mpz_t(), t.get_mpz_t(), exponent);
      point.push_back(std::move(coordinate));
      exponent *= static_cast<unsigned long>(w.base);
    }
    w.points.push_back(std::move(point));
  }
  for (std::size_t i = 0; i < H; ++i) {
    std::vector<Integer> row;
    for (const auto& mono : monomials) {
      Integer value = 1;
      for (std::size_t j = 0; j < N; ++j) {
        Integer factor;
        mpz_pow_ui(factor.get_mpz_t(), w.points[i][j].get_mpz_t(), static_cast<unsigned long>(mono[j]));
        value *= factor;
      }
      row.push_back(std::move(value));
    }
    w.matrix.push_back(std::move(row));
  }
  w.determinant = Rational(determinant(w.matrix));
  return w;
}

}  // namespace rlct::nn
