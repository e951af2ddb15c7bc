#include "schubert/schubert.hpp"

#include <random>

#include "gtest/gtest.h"

namespace schubert {
namespace {

using Q = RationalField;
using QSpace = Subspace<Q>;
using FSpace = Subspace<PrimeField>;

QSpace span_ints(const Q& q, std::size_t d, std::initializer_list<std::initializer_list<long>> rows) {
  return QSpace(Matrix<Q>::from_ints(q, d, rows));
}

TEST(SchubertIndex, ActiveIndicesAndCodim) {
  SchubertIndex a(5, {0, 2, 3});
  EXPECT_FALSE(a.is_active(0));
  EXPECT_TRUE(a.is_active(1));
  EXPECT_FALSE(a.is_active(2));
  EXPECT_EQ(a.codim(), 2);
  SchubertIndex b(5, {1, 2, 4});
  EXPECT_EQ(b.active(), (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(b.codim(), 1 + 1 + 2);
  EXPECT_TRUE(SchubertIndex::minimal(5, 2).active().empty());
}

TEST(SchubertIndex, RejectsBadSequences) {
  EXPECT_THROW(SchubertIndex(4, {0, 4}), std::invalid_argument);
  EXPECT_THROW(SchubertIndex(4, {2, 2}), std::invalid_argument);
  EXPECT_THROW(SchubertIndex(4, {}), std::invalid_argument);
}

TEST(SchubertIndex, EnumerationCount) {
  // C(d, r+1)
  EXPECT_EQ(all_schubert_indices(4, 1).size(), 6u);
  EXPECT_EQ(all_schubert_indices(6, 2).size(), 20u);
  EXPECT_TRUE(all_schubert_indices(2, 2).empty());
}

TEST(VanishingSequence, Examples) {
  Q q;
  auto p = standard_flag(q, 4);
  // Last two basis vectors: Lambda = P^2.
  EXPECT_EQ(vanishing_sequence(span_ints(q, 4, {{0, 0, 1, 0}, {0, 0, 0, 1}}), p).seq(), (std::vector<int>{2, 3}));
  // A generic plane.
  EXPECT_EQ(vanishing_sequence(span_ints(q, 4, {{1, 1, 1, 1}, {1, 2, 3, 4}}), p).seq(), (std::vector<int>{0, 1}));
  // <e3, e1 + e4>
  EXPECT_EQ(vanishing_sequence(span_ints(q, 4, {{0, 0, 1, 0}, {1, 0, 0, 1}}), p).seq(), (std::vector<int>{0, 2}));
}

TEST(InSigma, Examples) {
  Q q;
  auto p = standard_flag(q, 4);
  auto lam = span_ints(q, 4, {{0, 0, 1, 0}, {1, 0, 0, 1}});
  EXPECT_TRUE(in_sigma(lam, p, SchubertIndex::minimal(4, 1)));
  EXPECT_TRUE(in_sigma(lam, p, SchubertIndex(4, {0, 2})));
  // Needs a line inside P^3 = <e4>, which Lambda lacks.
  EXPECT_FALSE(in_sigma(lam, p, SchubertIndex(4, {0, 3})));
  EXPECT_FALSE(in_sigma(lam, p, SchubertIndex(4, {1, 2})));
}

TEST(InSigmaCirc, Examples) {
  Q q;
  auto p = standard_flag(q, 4);
  auto lam = span_ints(q, 4, {{0, 0, 1, 0}, {1, 0, 0, 1}});
  EXPECT_TRUE(in_sigma_circ(lam, p, SchubertIndex::minimal(4, 1)));
  EXPECT_TRUE(in_sigma_circ(lam, p, SchubertIndex(4, {0, 2})));
  // Excess vanishing at the active index 1: Lambda ∩ P^2 = Lambda.
  auto excess = span_ints(q, 4, {{0, 0, 1, 0}, {0, 0, 0, 1}});
  EXPECT_FALSE(in_sigma_circ(excess, p, SchubertIndex(4, {0, 2})));
  EXPECT_THROW(in_sigma_circ(lam, p, SchubertIndex(4, {0, 3})), precondition_error);
}

TEST(TangentSingle, MinimalIndexGivesFullGrassmannian) {
  Q q;
  auto p = standard_flag(q, 5);
  auto lam = span_ints(q, 5, {{1, 2, 0, 1, 1}, {0, 1, 1, 1, 3}});
  EXPECT_EQ(tangent_dim_single(lam, p, SchubertIndex::minimal(5, 1)), grassmannian_dim(5, 1));
  EXPECT_EQ(tangent_dim_oracle<Q>(lam, {}), grassmannian_dim(5, 1));
}

TEST(TangentSingle, SingularPointHasLargerTangentSpace) {
  Q q;
  auto p = standard_flag(q, 4);
  SchubertIndex a(4, {0, 2});
  auto excess = span_ints(q, 4, {{0, 0, 1, 0}, {0, 0, 0, 1}});
  const long smooth = grassmannian_dim(4, 1) - a.codim();
  EXPECT_EQ(smooth, 3);
  EXPECT_GT(tangent_dim_single(excess, p, a), smooth);
  EXPECT_EQ(tangent_dim_single(excess, p, a), tangent_dim_oracle<Q>(excess, {{p, a}}));
}

TEST(TangentSingle, FormulaMatchesOracleExhaustivelyInDimensionFour) {
  PrimeField f(3);
  std::mt19937_64 rng(12);
  for (std::size_t d = 2; d <= 4; ++d)
    for (std::size_t r = 0; r + 1 < d; ++r)
      for (const auto& a : all_schubert_indices(d, r))
        for (int k = 0; k < 6; ++k) {
          auto p = random_flag(f, d, rng);
          auto lam = sample_schubert_point_any_stratum(p, a, rng);
          ASSERT_TRUE(lam.has_value());
          ASSERT_TRUE(in_sigma(*lam, p, a));
          const long formula = tangent_dim_single(*lam, p, a);
          EXPECT_EQ(formula, tangent_dim_oracle<PrimeField>(*lam, {{p, a}}));
          const long smooth = grassmannian_dim(d, r) - a.codim();
          if (in_sigma_circ(*lam, p, a)) {
            EXPECT_EQ(formula, smooth);
          } else {
            EXPECT_GT(formula, smooth);
          }
        }
}

TEST(ActiveIndices, SufficeForMembership) {
  PrimeField f(2);
  std::mt19937_64 rng(8);
  for (int k = 0; k < 300; ++k) {
    const std::size_t d = 3 + rng() % 3, r = rng() % (d - 1);
    auto p = random_flag(f, d, rng);
    auto lam = sample_schubert_point(p, SchubertIndex::minimal(d, r), rng);
    ASSERT_TRUE(lam.has_value());
    for (const auto& a : all_schubert_indices(d, r)) EXPECT_EQ(in_sigma(*lam, p, a), in_sigma_active_only(*lam, p, a));
  }
}

TEST(Oracle, AddingConditionsNeverIncreasesDimension) {
  PrimeField f(5);
  std::mt19937_64 rng(19);
  for (int k = 0; k < 40; ++k) {
    const std::size_t d = 4 + rng() % 2;
    auto p = random_flag(f, d, rng), q = random_flag(f, d, rng);
    SchubertIndex a(d, {0, 2});
    auto lam = sample_schubert_point_any_stratum(p, a, rng);
    ASSERT_TRUE(lam.has_value());
    const auto b = vanishing_sequence(*lam, q);
    const long none = tangent_dim_oracle<PrimeField>(*lam, {});
    const long one = tangent_dim_oracle<PrimeField>(*lam, {{p, a}});
    const long two = tangent_dim_oracle<PrimeField>(*lam, {{p, a}, {q, b}});
    EXPECT_LE(one, none);
    EXPECT_LE(two, one);
  }
}

TEST(Oracle, RejectsPointsViolatingConditions) {
  Q q;
  auto p = standard_flag(q, 4);
  auto lam = span_ints(q, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}});
  EXPECT_THROW(tangent_dim_oracle<Q>(lam, {{p, SchubertIndex(4, {0, 2})}}), precondition_error);
}

TEST(PairFormula, TransverseFlagsGiveRhoMinusOne) {
  PrimeField f(1009);
  std::mt19937_64 rng(2);
  for (std::size_t d = 3; d <= 5; ++d)
    for (std::size_t r = 0; r + 1 < d; ++r)
      for (const auto& a : all_schubert_indices(d, r))
        for (const auto& b : all_schubert_indices(d, r)) {
          auto [p, q] = flag_pair_with_position(f, Permutation::longest(d), rng);
          SchubertPair<PrimeField> pair(p, a, q, b);
          auto lam = sample_sigma_circ_point(pair, rng());
          // Transverse Richardson varieties are empty iff some a_j + b_{r-j} >= d.
          bool empty = false;
          for (std::size_t j = 0; j <= r; ++j)
            if (a[j] + b[r - j] >= static_cast<int>(d)) empty = true;
          if (empty) {
            EXPECT_FALSE(lam.has_value());
            continue;
          }
          ASSERT_TRUE(lam.has_value()) << to_string(a) << " / " << to_string(b);
          const auto rep = pair.tangent(*lam);
          EXPECT_EQ(rep.dim, rep.rho_minus_1);
          EXPECT_EQ(rep.bound, rep.rho_minus_1);
          EXPECT_FALSE(rep.jump);
        }
}

TEST(PairFormula, AnswerIsSumOfTerms) {
  PrimeField f(1009);
  std::mt19937_64 rng(6);
  auto [p, q] = flag_pair_with_position(f, Permutation({3, 1, 4, 2}), rng);
  SchubertPair<PrimeField> pair(p, SchubertIndex(4, {0, 2}), q, SchubertIndex(4, {1, 2}));
  auto lam = sample_sigma_circ_point(pair, 3);
  ASSERT_TRUE(lam.has_value());
  const auto rep = pair.tangent(*lam);
  long total = rep.rho_minus_1;
  for (const auto& t : rep.terms) total += t.codim;
  EXPECT_EQ(rep.dim, total);
  EXPECT_EQ(rep.terms.size(), 2u);
}

TEST(PairFormula, AlmostTransverseJumpExample) {
  // d = 4, defect at t = 2: P^2 ∩ Q^2 = <e3>, P^2 + Q^2 = <e1, e3, e4>.
  Q q;
  auto [p, o] = coordinate_flag_pair(q, almost_transverse_position(4, 2));
  SchubertIndex a(4, {0, 2});
  SchubertPair<Q> pair(p, a, o, a);
  EXPECT_EQ(pair.rho_minus_1(), 2);
  auto on_jump_locus = span_ints(q, 4, {{0, 0, 1, 0}, {1, 0, 0, 1}});
  auto rep = pair.tangent(on_jump_locus);
  EXPECT_TRUE(rep.jump);
  EXPECT_EQ(rep.dim, 3);
  EXPECT_EQ(rep.dim, tangent_dim_oracle(on_jump_locus, pair));
  ASSERT_TRUE(rep.jump_witness.has_value());
  EXPECT_EQ(rep.jump_witness->t, 2u);
  EXPECT_EQ(rep.jump_witness->i, 1u);

  // Contains the defect line but leaves the hyperplane.
  auto off = span_ints(q, 4, {{0, 0, 1, 0}, {1, 1, 0, 1}});
  ASSERT_TRUE(pair.in_both_circ(off));
  rep = pair.tangent(off);
  EXPECT_FALSE(rep.jump);
  EXPECT_EQ(rep.dim, 2);
  EXPECT_EQ(rep.dim, tangent_dim_oracle(off, pair));
}

TEST(PairFormula, RejectsPointsOutsideOpenStrata) {
  Q q;
  auto [p, o] = coordinate_flag_pair(q, almost_transverse_position(4, 2));
  SchubertIndex a(4, {0, 2});
  SchubertPair<Q> pair(p, a, o, a);
  // P^2 itself has excess vanishing along P.
  auto p2 = span_ints(q, 4, {{0, 0, 1, 0}, {0, 0, 0, 1}});
  EXPECT_THROW(pair.tangent(p2), precondition_error);
  EXPECT_THROW(pair.coxeter_bound(p2), precondition_error);
  auto outside = span_ints(q, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}});
  EXPECT_THROW(pair.tangent(outside), precondition_error);
}

TEST(CoxeterBound, IdenticalFlagsAddFullLength) {
  Q q;
  auto p = standard_flag(q, 4);
  auto m = SchubertIndex::minimal(4, 1);
  auto lam = span_ints(q, 4, {{1, 1, 1, 1}, {1, 2, 3, 4}});
  EXPECT_EQ(coxeter_bound(lam, p, m, p, m), grassmannian_dim(4, 1) + 6);
  // With minimal indices the tangent space is the whole Grassmannian.
  const auto rep = tangent_dim_pair_formula(lam, p, m, p, m);
  EXPECT_EQ(rep.dim, grassmannian_dim(4, 1));
}

TEST(PairFormula, MatchesOracleForEveryRelativePositionInDimensionFour) {
  PrimeField f(1009);
  std::mt19937_64 rng(14);
  for (const auto& sigma : all_permutations(4))
    for (std::size_t r = 0; r <= 2; ++r)
      for (const auto& a : all_schubert_indices(4, r))
        for (const auto& b : all_schubert_indices(4, r)) {
          auto [p, q] = flag_pair_with_position(f, sigma, rng);
          SchubertPair<PrimeField> pair(p, a, q, b);
          for (int k = 0; k < 2; ++k) {
            auto lam = sample_sigma_circ_point(pair, rng());
            if (!lam) continue;
            const auto rep = pair.tangent(*lam);
            EXPECT_EQ(rep.dim, tangent_dim_oracle(*lam, pair))
                << to_string(sigma) << " a=" << to_string(a) << " b=" << to_string(b);
            EXPECT_LE(rep.dim, rep.bound);
          }
        }
}

TEST(Sampling, MinimalIndicesAlwaysSucceed) {
  PrimeField f(1009);
  std::mt19937_64 rng(1);
  auto [p, q] = flag_pair_with_position(f, Permutation::longest(5), rng);
  auto m = SchubertIndex::minimal(5, 2);
  for (std::uint64_t seed = 0; seed < 10; ++seed) EXPECT_TRUE(sample_sigma_circ_point(p, m, q, m, seed).has_value());
}

TEST(Sampling, OverdeterminedIntersectionIsEmpty) {
  PrimeField f(1009);
  std::mt19937_64 rng(1);
  auto [p, q] = flag_pair_with_position(f, Permutation::longest(4), rng);
  // codim 4 + 3 exceeds dim Gr(2,4) = 4.
  SchubertIndex a(4, {2, 3}), b(4, {1, 3});
  EXPECT_FALSE(sample_sigma_circ_point(p, a, q, b, 0).has_value());
}

TEST(Sampling, DeterministicPerSeed) {
  PrimeField f(1009);
  std::mt19937_64 rng(1);
  auto [p, q] = flag_pair_with_position(f, Permutation({4, 2, 3, 1}), rng);
  SchubertIndex a(4, {0, 2});
  auto x = sample_sigma_circ_point(p, a, q, a, 77), y = sample_sigma_circ_point(p, a, q, a, 77);
  ASSERT_TRUE(x && y);
  EXPECT_EQ(*x, *y);
}

}  // namespace
}  // namespace schubert
