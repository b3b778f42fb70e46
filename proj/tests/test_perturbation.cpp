#include "helpers.hpp"

#include <gtest/gtest.h>

using namespace hpmodel;
using namespace testing_helpers;

TEST(DDelta, PaperGenerators)
{
  for (auto alg : {Algorithm::Alg1, Algorithm::Alg2}) {
    auto p2 = example2();
    EXPECT_EQ(d_delta_generator(p2, 2, alg).differential, ModelElement(model_generator(p2, 1), -2));
    EXPECT_TRUE(d_delta_generator(p2, 1, alg).differential.empty());

    auto p1 = example1();
    ModelElement expected{{model_generator(p1, 1), 1}, {model_generator(p1, 2), -1}};
    EXPECT_EQ(d_delta_generator(p1, 4, alg).differential, expected);
  }
}

TEST(DDelta, IndexOutOfRange)
{
  auto p = example2();
  EXPECT_THROW(d_delta_generator(p, 0, Algorithm::Alg1), std::out_of_range);
  EXPECT_THROW(d_delta_generator(p, 6, Algorithm::Alg1), std::out_of_range);
}

TEST(ComputeModel, ParallelMatchesSequential)
{
  auto p = example1();
  auto a = compute_model(p, Algorithm::Alg2, 1);
  auto b = compute_model(p, Algorithm::Alg2, 4);
  EXPECT_EQ(a.differentials, b.differentials);
  EXPECT_EQ(a.degrees, (std::vector<int>{2, 2, 2, 3, 3, 4, 5, 7}));
}

TEST(ComputeModel, TelemetryShape)
{
  auto p = example2();
  auto r = compute_model(p, Algorithm::Alg2);
  ASSERT_EQ(r.telemetry.size(), 5u);
  for (std::size_t i = 0; i < 5; ++i) {
    const auto& t = r.telemetry[i];
    EXPECT_EQ(t.per_iteration.size(), t.iterations);
    EXPECT_LE(t.iterations, std::size_t(p.degree(i) / p.min_degree()) + 1);
    EXPECT_EQ(t.per_iteration.back().after_phi, 0u);
  }
}

TEST(ModelDifferential, Examples)
{
  auto p = example1();
  auto r = compute_model(p, Algorithm::Alg2);
  EXPECT_TRUE(d_model_apply(p, r, ModelElement(model_generator(p, 1))).empty());
  EXPECT_TRUE(d_model_apply(p, r, ModelElement(model_generator(p, 1, 13))).empty());
  ModelElement w{{model_mono(p, {{1, 1}, {2, 1}}), 1}, {model_mono(p, {{2, 2}}), -2}};
  EXPECT_TRUE(d_model_apply(p, r, w).empty());
  // d(X4 X5) = (X1 - X2) X5 - X4 X2, and X2 has even degree so X4 X2 = X2 X4
  ModelElement x4x5(model_mono(p, {{4, 1}, {5, 1}}));
  ModelElement expected{{model_mono(p, {{1, 1}, {5, 1}}), 1}, {model_mono(p, {{2, 1}, {5, 1}}), -1},
                        {model_mono(p, {{2, 1}, {4, 1}}), -1}};
  EXPECT_EQ(d_model_apply(p, r, x4x5), expected);
}

TEST(ModelDifferential, DividedPowerRule)
{
  // one odd generator x1 and x2 with rho(x2) = x1: model X2 polynomial-slot, d X2 = X1
  auto p = make({1, 2}, {"", "x1"});
  auto r = compute_model(p, Algorithm::Alg1);
  EXPECT_EQ(r.differentials[1], ModelElement(model_generator(p, 1)));
  ModelElement x1x2(model_mono(p, {{1, 3}, {2, 1}}));
  // d(X1^(3) X2) = (+1) X1^(3) X1 = 4 X1^(4)
  EXPECT_EQ(d_model_apply(p, r, x1x2), ModelElement(model_generator(p, 1, 4), 4));
}

// ---------------------------------------------------------------------------

namespace {

/// Independent evaluation of the closed forms with plain 128-bit integers.
unsigned __int128 ops_oracle(bool alg1, unsigned s, unsigned r)
{
  unsigned __int128 total = 0;
  for (unsigned i = 0; i <= s; ++i) {
    unsigned __int128 prod = 1, fi = 1, ri = 1;
    for (unsigned j = 1; j <= i; ++j) {
      prod *= alg1 ? ((unsigned __int128)1 << (j + 1)) - j - 2 : (unsigned __int128)(j * j + j) / 2;
      fi *= j;
      ri *= r;
    }
    unsigned __int128 term = alg1 ? fi * ri + (fi * (i + 1) + fi * (i + 1) * (i + 2)) * ri * r : ri + (i + 3) * ri * r;
    total += term * prod;
  }
  return total;
}

std::string str(unsigned __int128 v)
{
  std::string s;
  do {
    s.insert(s.begin(), char('0' + int(v % 10)));
    v /= 10;
  } while (v);
  return s;
}

} // namespace

TEST(CostEstimate, SmallCases)
{
  EXPECT_EQ(cost_estimate(Algorithm::Alg2, 3, 2).elementary_ops, 7 + 18 + 132 + 1872);
  EXPECT_EQ(cost_estimate(Algorithm::Alg1, 3, 2).elementary_ops, 104521);
  auto d = format_duration(cost_estimate(Algorithm::Alg1, 3, 3).seconds(), 1);
  EXPECT_EQ(d.value, "0.5");
  EXPECT_EQ(d.unit, "sec");
}

TEST(CostEstimate, MatchesOracleAndIsMonotone)
{
  for (auto alg : {Algorithm::Alg1, Algorithm::Alg2})
    for (unsigned s = 0; s <= 8; ++s)
      for (unsigned r = 1; r <= 4; ++r) {
        auto c = cost_estimate(alg, s, r).elementary_ops;
        EXPECT_EQ(c.str(), str(ops_oracle(alg == Algorithm::Alg1, s, r)));
        if (s > 0) EXPECT_GT(c, cost_estimate(alg, s - 1, r).elementary_ops);
        if (r > 1) EXPECT_GT(c, cost_estimate(alg, s, r - 1).elementary_ops);
        if (s >= 2 && r >= 2 && alg == Algorithm::Alg2)
          EXPECT_LT(c, cost_estimate(Algorithm::Alg1, s, r).elementary_ops);
      }
}

TEST(CostEstimate, SeriesLength)
{
  EXPECT_EQ(series_length(26, 1), 27u);
  EXPECT_EQ(series_length(54, 10), 6u);
}

// ---------------------------------------------------------------------------

TEST(Algorithms, AgreeOnRandomPresentations)
{
  Rng rng(11);
  for (int i = 0; i < 40; ++i) {
    Presentation p = random_presentation(rng);
    auto a1 = compute_model(p, Algorithm::Alg1);
    auto a2 = compute_model(p, Algorithm::Alg2);
    auto agree = check_algorithms_agree(p, a1, a2);
    EXPECT_TRUE(agree.passed()) << agree.first_failure;
    auto tel = check_pruning_telemetry(p, a1, a2);
    EXPECT_TRUE(tel.passed()) << tel.first_failure;
    for (const auto& r : check_model(p, a2, rng, 10)) EXPECT_TRUE(r.passed()) << r.name << ": " << r.first_failure;
  }
}
