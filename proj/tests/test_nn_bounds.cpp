#include "rlct/nn_bounds.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "rlct/oracle.hpp"
#include "test_oracles.hpp"
#include "test_support.hpp"

namespace rlct {
namespace {

using nn::ActivationSupport;
using nn::NetworkShape;
using testing::expect_error;
using testing::ints;

std::vector<Shelf> head(const ProblemSpec& spec, std::size_t count) {
  return spec.shelves.prefix(count);
}

TEST(Binom, MatchesFactorialFormula) {
  EXPECT_EQ(nn::binom(0, 0), 1);
  EXPECT_EQ(nn::binom(4, 2), 6);
  EXPECT_EQ(nn::binom(52, 5), 2598960);
  EXPECT_EQ(nn::binom(3, 5), 0);
  for (std::int64_t n = 0; n <= 25; ++n) {
    for (std::int64_t k = 0; k <= n + 1; ++k) {
      EXPECT_EQ(nn::binom(n, k), testing::factorial_binom(n, k)) << n << " " << k;
    }
  }
}

TEST(ActivationSupport, FamilyDegrees) {
  const auto e = ActivationSupport::exp_type();
  const auto s = ActivationSupport::swish_type();
  const auto t = ActivationSupport::odd_type();
  for (std::size_t i = 0; i < 5; ++i) {
    EXPECT_EQ(e.degree(i), static_cast<std::int64_t>(i + 1));
    EXPECT_EQ(t.degree(i), static_cast<std::int64_t>(2 * i + 1));
  }
  EXPECT_EQ(s.degree(0), 1);
  EXPECT_EQ(s.degree(1), 2);
  EXPECT_EQ(s.degree(2), 4);
  EXPECT_EQ(s.degree(3), 6);
  EXPECT_FALSE(e.count().has_value());
  EXPECT_EQ(ActivationSupport::polynomial({1, 3}).count(), 2U);
  expect_error(ErrorCode::NonIncreasingPrices, [] { ActivationSupport::polynomial({3, 1}); });
}

TEST(ShelvesP1, WorkedExampleTuple) {
  const auto spec = nn::shelves_P1({1, 4, 1, 1}, ActivationSupport::odd_type());
  EXPECT_EQ(spec.rank, 2);
  EXPECT_EQ(spec.demand, 3);
  EXPECT_EQ(spec.budget, 3);
  EXPECT_FALSE(spec.shelves.is_finite());
  EXPECT_EQ(head(spec, 4),
            (std::vector<Shelf>{{1, 1}, {3, 1}, {5, 1}, {7, 1}}));
}

TEST(ShelvesP1, PolynomialWithoutTrueUnits) {
  const auto spec = nn::shelves_P1({1, 2, 1, 0}, ActivationSupport::polynomial({1}));
  EXPECT_EQ(spec.rank, 0);
  EXPECT_EQ(spec.demand, 2);
  EXPECT_EQ(spec.budget, 2);
  EXPECT_EQ(spec.shelves.size(), 1U);
  EXPECT_EQ(spec.shelves.at(0), (Shelf{1, 1}));
  EXPECT_EQ(compute_bound(spec).lambda_bound, Rational(1, 2));
  expect_error(ErrorCode::PolynomialWithHiddenUnits,
               [] { nn::shelves_P1({1, 2, 1, 1}, ActivationSupport::polynomial({1})); });
}

TEST(ShelvesP1, ExpTypeInventories) {
  const auto spec = nn::shelves_P1({2, 3, 2, 1}, ActivationSupport::exp_type());
  EXPECT_EQ(spec.rank, 4);
  EXPECT_EQ(spec.demand, 4);
  EXPECT_EQ(spec.budget, 4);
  EXPECT_EQ(head(spec, 3), (std::vector<Shelf>{{1, 4}, {2, 6}, {3, 8}}));
}

TEST(ShelvesP2, Tuples) {
  const auto a = nn::shelves_P2({1, 4, 1, 1});
  EXPECT_EQ(a.rank, 2);
  EXPECT_EQ(a.demand, 3);
  EXPECT_EQ(a.budget, 3);
  EXPECT_EQ(head(a, 4), (std::vector<Shelf>{{1, 0}, {2, 1}, {3, 1}, {4, 1}}));

  const auto b = nn::shelves_P2({1, 2, 2, 1});
  EXPECT_EQ(head(b, 2), (std::vector<Shelf>{{1, 1}, {2, 2}}));

  const auto c = nn::shelves_P2({2, 3, 1, 1});
  EXPECT_EQ(head(c, 2), (std::vector<Shelf>{{1, 0}, {2, 3}}));

  expect_error(ErrorCode::P2RequiresTrueUnits, [] { nn::shelves_P2({1, 2, 1, 0}); });
}

TEST(BoundP1, Examples) {
  const auto tanh = nn::bound_P1({1, 4, 1, 1}, ActivationSupport::odd_type());
  EXPECT_EQ(tanh.result.lambda_bound, Rational(11, 6));
  EXPECT_EQ(tanh.closed_form, Rational(11, 6));
  EXPECT_EQ(tanh.result.multiplicity, 1);

  const auto single = nn::bound_P1({1, 1, 1, 0}, ActivationSupport::exp_type());
  EXPECT_EQ(single.result.lambda_bound, Rational(1, 2));
  EXPECT_EQ(single.result.L, 1U);
  EXPECT_EQ(single.result.K, 1U);

  const auto swish = nn::bound_P1({1, 5, 2, 2}, ActivationSupport::swish_type());
  EXPECT_EQ(swish.result.lambda_bound, Rational(17, 4));
  EXPECT_EQ(oracle::oracle_bound(swish.spec), Rational(17, 4));
}

TEST(BoundP2, Examples) {
  const auto a = nn::bound_P2({1, 4, 1, 1});
  EXPECT_EQ(a.result.lambda_bound, Rational(5, 3));
  EXPECT_EQ(a.result.L, 4U);
  EXPECT_EQ(a.result.K, 2U);
  EXPECT_EQ(a.result.n_star, ints({0, 1, 1, 1}));
  EXPECT_EQ(oracle::oracle_bound(a.spec), Rational(5, 3));

  const auto b = nn::bound_P2({1, 2, 1, 1});
  EXPECT_EQ(b.result.lambda_bound, Rational(5, 4));
  EXPECT_EQ(b.result.K, 1U);
  EXPECT_EQ(oracle::oracle_bound(b.spec), Rational(5, 4));
}

TEST(ClosedForms, AgreeWithCountingRuleOnSmallGrid) {
  const std::vector<ActivationSupport> families{
      ActivationSupport::exp_type(), ActivationSupport::swish_type(),
      ActivationSupport::odd_type()};
  for (std::int64_t N = 1; N <= 4; ++N) {
    for (std::int64_t M = 1; M <= 4; ++M) {
      for (std::int64_t H = 1; H <= 5; ++H) {
        for (std::int64_t Hs = 0; Hs < H; ++Hs) {
          const NetworkShape shape{N, H, M, Hs};
          for (const auto& f : families) {
            const auto p1 = nn::p1_closed_form(shape, f);
            const auto res = compute_bound(nn::shelves_P1(shape, f));
            EXPECT_EQ(p1.lambda, res.lambda_bound);
            EXPECT_EQ(p1.K, res.K);
            EXPECT_EQ(p1.L, res.L);
          }
          if (Hs >= 1) {
            const auto p2 = nn::p2_closed_form(shape);
            const auto res = compute_bound(nn::shelves_P2(shape));
            EXPECT_EQ(p2.lambda, res.lambda_bound);
            EXPECT_EQ(p2.K, res.K);
            EXPECT_EQ(p2.L, res.L);
          }
        }
      }
    }
  }
}

// With N = 1 every family has unit inventories, so a family with pointwise
// higher prices can only lower the bound.
TEST(Families, OrderedExpSwishOddForSingleInput) {
  for (std::int64_t M = 1; M <= 5; ++M) {
    for (std::int64_t Hs = 0; Hs <= 3; ++Hs) {
      for (std::int64_t H = Hs + 1; H <= Hs + 25; ++H) {
        const NetworkShape shape{1, H, M, Hs};
        const auto e = nn::bound_P1(shape, ActivationSupport::exp_type()).closed_form;
        const auto s = nn::bound_P1(shape, ActivationSupport::swish_type()).closed_form;
        const auto t = nn::bound_P1(shape, ActivationSupport::odd_type()).closed_form;
        EXPECT_GE(e, s) << M << " " << H << " " << Hs;
        EXPECT_GE(s, t) << M << " " << H << " " << Hs;
      }
    }
  }
}

TEST(Families, OrderedExpSwishOddForSeveralInputs) {
  for (std::int64_t N = 2; N <= 3; ++N) {
    for (std::int64_t M = 1; M <= 4; ++M) {
      for (std::int64_t Hs = 0; Hs <= 2; ++Hs) {
        for (std::int64_t H = Hs + 1; H <= Hs + 12; ++H) {
          const NetworkShape shape{N, H, M, Hs};
          const auto e = nn::bound_P1(shape, ActivationSupport::exp_type()).closed_form;
          const auto s = nn::bound_P1(shape, ActivationSupport::swish_type()).closed_form;
          const auto t = nn::bound_P1(shape, ActivationSupport::odd_type()).closed_form;
          EXPECT_GE(e, s) << N << " " << M << " " << H << " " << Hs;
          EXPECT_GE(s, t) << N << " " << M << " " << H << " " << Hs;
        }
      }
    }
  }
}

// For M = 1 the first P2 shelf is empty, so dropping it leaves prices
// s + 1 with inventories C(s + N, s + 1).
TEST(BoundP2, SingleOutputMatchesShiftedShelves) {
  for (std::int64_t N = 1; N <= 4; ++N) {
    for (std::int64_t Hs = 1; Hs <= 3; ++Hs) {
      for (std::int64_t d = 1; d <= 12; ++d) {
        const NetworkShape shape{N, Hs + d, 1, Hs};
        ProblemSpec shifted = nn::shelves_P2(shape);
        shifted.shelves = ShelfSequence::infinite([N](std::size_t i) {
          const auto m = static_cast<std::int64_t>(i) + 2;
          return Shelf{m, nn::binom(m + N - 1, m)};
        });
        EXPECT_EQ(nn::bound_P2(shape).closed_form, compute_bound(shifted).lambda_bound)
            << N << " " << Hs << " " << d;
      }
    }
  }
}

TEST(Comparison, ExpTypeNeverFavoursP1) {
  for (std::int64_t N = 1; N <= 3; ++N) {
    for (std::int64_t M = 1; M <= 4; ++M) {
      for (std::int64_t Hs = 1; Hs <= 3; ++Hs) {
        for (std::int64_t d = 1; d <= 15; ++d) {
          const auto cmp =
              nn::compare_P1_P2({N, Hs + d, M, Hs}, ActivationSupport::exp_type());
          EXPECT_GE(cmp.lambda_p1, cmp.lambda_p2) << N << " " << M << " " << Hs << " " << d;
          EXPECT_NE(cmp.smaller, nn::Winner::P1);
        }
      }
    }
  }
}

TEST(Comparison, WorkedExample) {
  const auto cmp = nn::compare_P1_P2({1, 4, 1, 1}, ActivationSupport::odd_type());
  EXPECT_EQ(cmp.lambda_p1, Rational(11, 6));
  EXPECT_EQ(cmp.lambda_p2, Rational(5, 3));
  EXPECT_EQ(cmp.difference, Rational(1, 6));
  EXPECT_EQ(cmp.smaller, nn::Winner::P2);
  expect_error(ErrorCode::PolynomialWithHiddenUnits, [] {
    nn::compare_P1_P2({1, 4, 1, 1}, ActivationSupport::polynomial({1, 3}));
  });
}

TEST(Crossover, SpotValues) {
  EXPECT_EQ(nn::crossover_threshold(2, ActivationSupport::swish_type(), 2).threshold, 17);
  EXPECT_EQ(nn::crossover_threshold(5, ActivationSupport::swish_type(), 2).threshold, 23);
  EXPECT_EQ(nn::crossover_threshold(1, ActivationSupport::odd_type(), 2).threshold, 9);
}

TEST(Crossover, TieBandLiesBetweenStrictAndWeakThresholds) {
  const auto scan = nn::crossover_threshold(3, ActivationSupport::swish_type(), 1);
  EXPECT_LE(scan.strict_threshold, scan.threshold);
  for (std::int64_t d = scan.strict_threshold + 1; d <= scan.threshold; ++d) {
    const auto cmp = nn::compare_P1_P2({1, 1 + d, 3, 1}, ActivationSupport::swish_type());
    EXPECT_EQ(cmp.smaller, nn::Winner::Equal) << d;
  }
}

TEST(Crossover, RejectsEmptyScan) {
  expect_error(ErrorCode::InvalidArgument,
               [] { nn::crossover_threshold(1, ActivationSupport::odd_type(), 1, 0); });
}

TEST(ReducedRank, Examples) {
  EXPECT_EQ(nn::bound_reduced_rank(2, 2, 2, 1), Rational(2));
  EXPECT_EQ(nn::bound_reduced_rank(3, 2, 2, 1), Rational(5, 2));
  EXPECT_EQ(nn::bound_reduced_rank(1, 1, 1, 0), Rational(1, 2));
  EXPECT_EQ(nn::case_of_reduced_rank(2, 2, 2, 1), nn::ReducedRankCase::Case3);
  EXPECT_EQ(nn::case_of_reduced_rank(3, 2, 2, 1), nn::ReducedRankCase::Case2);
  EXPECT_EQ(nn::case_of_reduced_rank(2, 2, 3, 1), nn::ReducedRankCase::Case4);
  expect_error(ErrorCode::RankTooLarge, [] { nn::bound_reduced_rank(2, 2, 2, 2); });
}

TEST(ReducedRank, CasesPartitionTheGridAndMatchPipeline) {
  for (std::int64_t M = 1; M <= 8; ++M) {
    for (std::int64_t N = 1; N <= 8; ++N) {
      for (std::int64_t H = 1; H <= 8; ++H) {
        for (std::int64_t R = 0; R < std::min({M, N, H}); ++R) {
          const int hits = ((N < H && H < M) || (H <= N && N < M) ? 1 : 0) +
                           (N >= M && N >= H ? 1 : 0) + (H >= M && N < H ? 1 : 0);
          EXPECT_EQ(hits, 1) << M << N << H << R;
          EXPECT_EQ(nn::bound_reduced_rank(M, N, H, R),
                    compute_bound(nn::reduced_rank_spec(M, N, H, R)).lambda_bound);
        }
      }
    }
  }
}

TEST(Admissibility, Counterexamples) {
  const auto tanh = nn::check_weight_admissibility({{Rational(1)}, {Rational(-1)}});
  EXPECT_FALSE(tanh.admissible);
  EXPECT_EQ(tanh.violating_pairs, (std::vector<std::pair<std::size_t, std::size_t>>{{1, 2}}));

  const auto swish = nn::check_weight_admissibility({{Rational(1), Rational(0)},
                                                     {Rational(-1), Rational(0)},
                                                     {Rational(0), Rational(1)},
                                                     {Rational(0), Rational(-1)}});
  EXPECT_FALSE(swish.admissible);
  EXPECT_EQ(swish.violating_pairs,
            (std::vector<std::pair<std::size_t, std::size_t>>{{1, 2}, {3, 4}}));
}

TEST(Admissibility, AcceptsDistinctNonzeroRows) {
  const auto ok = nn::check_weight_admissibility({{Rational(1), Rational(0)},
                                                  {Rational(0), Rational(1)}});
  EXPECT_TRUE(ok.admissible);
  EXPECT_TRUE(ok.violating_pairs.empty());
  EXPECT_TRUE(nn::check_weight_admissibility({{Rational(1, 2)}, {Rational(2)}}).admissible);
}

TEST(Admissibility, FlagsZeroRowsAndDuplicates) {
  const auto bad = nn::check_weight_admissibility(
      {{Rational(0), Rational(0)}, {Rational(2, 4), Rational(1)}, {Rational(1, 2), Rational(1)}});
  EXPECT_FALSE(bad.admissible);
  EXPECT_EQ(bad.zero_rows, (std::vector<std::size_t>{1}));
  EXPECT_EQ(bad.violating_pairs, (std::vector<std::pair<std::size_t, std::size_t>>{{2, 3}}));
}

TEST(Vandermonde, HandExamples) {
  const auto two = nn::vandermonde_witness({{1, 0}, {0, 1}, {1, 1}});
  EXPECT_EQ(two.matrix, (std::vector<std::vector<Integer>>{
                            ints({1, 1, 1}), ints({2, 8, 16}), ints({3, 27, 81})}));
  EXPECT_EQ(two.determinant, Rational(132));

  const auto one = nn::vandermonde_witness({{1}, {3}});
  EXPECT_EQ(one.determinant, Rational(6));

  EXPECT_EQ(nn::vandermonde_witness({{4, 2}}).determinant, Rational(1));
  expect_error(ErrorCode::DuplicateMonomials, [] { nn::vandermonde_witness({{1, 2}, {1, 2}}); });
}

TEST(Vandermonde, RandomDistinctMonomialsAreNonsingular) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t N = 1 + rng() % 3;
    const std::size_t H = 1 + rng() % 5;
    std::set<nn::Monomial> chosen;
    int guard = 0;
    while (chosen.size() < H && ++guard < 1000) {
      nn::Monomial mono(N);
      std::int64_t budget = static_cast<std::int64_t>(rng() % 7);
      for (auto& h : mono) {
        h = budget == 0 ? 0 : static_cast<std::int64_t>(rng() % (budget + 1));
        budget -= h;
      }
      chosen.insert(mono);
    }
    const std::vector<nn::Monomial> monomials(chosen.begin(), chosen.end());
    const auto w = nn::vandermonde_witness(monomials);
    EXPECT_NE(w.determinant, Rational(0));
    EXPECT_EQ(w.determinant, Rational(testing::laplace_determinant(w.matrix)));
  }
}

TEST(Determinant, MatchesCofactorExpansion) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
    for (auto& row : a) {
      for (auto& x : row) x = static_cast<long>(rng() % 11) - 5;
    }
    EXPECT_EQ(nn::determinant(a), testing::laplace_determinant(a));
  }
}

}  // namespace
}  // namespace rlct
