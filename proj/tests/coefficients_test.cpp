#include "funceq/coefficients.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

namespace {

using funceq::errc;
using funceq::normalize;
using funceq::regularity_index;

std::vector<double> as_vector(const funceq::CoefficientVector& a) { return {a.begin(), a.end()}; }

errc error_of(auto&& fn) {
  try {
    fn();
  } catch (const funceq::error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected funceq::error";
  return errc::invalid_argument;
}

// Brute-force m(a): smallest m >= 1 with sum_{k<N} (a_k/a_N)^m < 1.
int brute_force_m(const std::vector<double>& a) {
  std::vector<double> full{1.0};
  full.insert(full.end(), a.begin(), a.end());
  const double top = full.back();
  for (int m = 1;; ++m) {
    double s = 0;
    for (std::size_t k = 0; k + 1 < full.size(); ++k) s += std::pow(full[k] / top, m);
    if (s < 1) return m;
  }
}

std::vector<double> random_normalized(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(1, 10);
  std::uniform_real_distribution<double> entry(1.0, 20.0);
  std::vector<double> v;
  const int n = count(rng);
  while (static_cast<int>(v.size()) < n) {
    const double x = entry(rng);
    if (x > 1.0 && std::find(v.begin(), v.end(), x) == v.end()) v.push_back(x);
  }
  std::sort(v.begin(), v.end());
  return v;
}

TEST(Normalize, AlreadyNormalizedIsUnchanged) {
  EXPECT_EQ(as_vector(normalize({2.0, 3.0})), (std::vector<double>{2.0, 3.0}));
  EXPECT_EQ(as_vector(normalize({3.0, 2.0})), (std::vector<double>{2.0, 3.0}));
}

TEST(Normalize, DividesBySmallestFactorBelowOne) {
  // f(x) + f(x/2) + f(3x) = 0 with y = x/2: f(2y) + f(y) + f(6y) = 0.
  EXPECT_EQ(as_vector(normalize({0.5, 3.0})), (std::vector<double>{2.0, 6.0}));
  // f(x) + f(x/3) + f(x/2) = 0 with y = x/3: f(3y) + f(y) + f(1.5y) = 0.
  const auto a = as_vector(normalize({1.0 / 3.0, 0.5}));
  ASSERT_EQ(a.size(), 2u);
  EXPECT_NEAR(a[0], 1.5, 1e-15);
  EXPECT_NEAR(a[1], 3.0, 1e-15);
}

TEST(Normalize, RejectsInvalidInput) {
  EXPECT_EQ(error_of([] { normalize(std::vector<double>{}); }), errc::empty_input);
  EXPECT_EQ(error_of([] { normalize({1.0, 2.0}); }), errc::unit_entry);
  EXPECT_EQ(error_of([] { normalize({2.0, 2.0}); }), errc::duplicate_entry);
  EXPECT_EQ(error_of([] { normalize({-2.0, 2.0}); }), errc::non_positive_entry);
  EXPECT_EQ(error_of([] { normalize({0.0}); }), errc::non_positive_entry);
}

TEST(Normalize, FactorSetIsRescaledCopyOfOriginal) {
  // {1} ∪ raw, divided by its minimum, must equal {1} ∪ normalize(raw).
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> entry(0.05, 20.0);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> raw(1 + trial % 6);
    for (double& x : raw) x = entry(rng);
    std::vector<double> full{1.0};
    full.insert(full.end(), raw.begin(), raw.end());
    const double lo = *std::min_element(full.begin(), full.end());
    for (double& x : full) x /= lo;
    std::sort(full.begin(), full.end());

    const auto a = normalize(raw);
    std::vector<double> expect{1.0};
    expect.insert(expect.end(), a.begin(), a.end());
    ASSERT_EQ(full.size(), expect.size());
    for (std::size_t k = 0; k < full.size(); ++k) EXPECT_NEAR(full[k], expect[k], 1e-12 * full[k]);
  }
}

TEST(Normalize, IsIdempotent) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> entry(0.05, 20.0);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> raw(1 + trial % 5);
    for (double& x : raw) x = entry(rng);
    const auto once = normalize(raw);
    EXPECT_EQ(normalize(once.values()), once);
  }
}

TEST(ToAdditive, TakesLogarithms) {
  const auto b = funceq::to_additive(normalize({2.0, 3.0}));
  EXPECT_NEAR(b[0], 0.69314718055994531, 1e-15);
  EXPECT_NEAR(b[1], 1.0986122886681098, 1e-15);
  const auto e = funceq::to_additive(normalize({std::exp(1.0), std::exp(2.0)}));
  EXPECT_NEAR(e[0], 1.0, 1e-15);
  EXPECT_NEAR(e[1], 2.0, 1e-15);
  EXPECT_EQ(funceq::to_additive(normalize({2.0})).size(), 1u);
}

TEST(ToAdditive, ExpRecoversCoefficients) {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> entry(0.05, 20.0);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> raw(1 + trial % 7);
    for (double& x : raw) x = entry(rng);
    const auto a = normalize(raw);
    const auto b = funceq::to_additive(a);
    double prev = 0.0;
    for (std::size_t k = 0; k < b.size(); ++k) {
      EXPECT_GT(b[k], prev);
      prev = b[k];
      EXPECT_NEAR(std::exp(b[k]), a[k], 1e-12 * a[k]);
    }
  }
}

TEST(ShiftVector, RejectsNonIncreasing) {
  EXPECT_EQ(error_of([] { funceq::ShiftVector({1.0, 1.0}); }), errc::invalid_shifts);
  EXPECT_EQ(error_of([] { funceq::ShiftVector({0.0, 1.0}); }), errc::invalid_shifts);
  EXPECT_EQ(error_of([] { funceq::ShiftVector({}); }), errc::empty_input);
}

TEST(RegularityIndex, SingleFactorTwo) {
  const auto r = regularity_index(normalize({2.0}));
  EXPECT_EQ(r.m, 1);
  EXPECT_DOUBLE_EQ(r.contraction, 0.5);
}

TEST(RegularityIndex, FactorsTwoThree) {
  // m = 1: 1/3 + 2/3 = 1 is not < 1; m = 2: 1/9 + 4/9 = 5/9.
  const auto r = regularity_index(normalize({2.0, 3.0}));
  EXPECT_EQ(r.m, 2);
  EXPECT_NEAR(r.contraction, 5.0 / 9.0, 1e-15);
}

TEST(RegularityIndex, EquidistributedExample) {
  // a = (1.5, 2, 2.5, 3): sums 2.33, 1.5, 1.037, 0.755 for m = 1..4.
  const auto r = regularity_index(normalize({1.5, 2.0, 2.5, 3.0}));
  EXPECT_EQ(r.m, 4);
  EXPECT_EQ(r.m, brute_force_m({1.5, 2.0, 2.5, 3.0}));
  EXPECT_NEAR(r.lower_bound, 2.0, 1e-14);
  EXPECT_NEAR(r.upper_bound, 6.0, 1e-14);
  EXPECT_LE(1, r.m);
  EXPECT_LE(r.m, 4);
}

TEST(RegularityIndex, EquidistributedBoundsDependOnSpacing) {
  // a_k = 1 + kd gives a_N / d = N + 1/d, so the bounds are N/2 - 1 + 1/(2d)
  // and N + 1/d; they approach N/2 - 1 and N only as d grows.
  for (int n : {2, 4, 7}) {
    for (double d : {0.1, 1.0, 10.0}) {
      std::vector<double> a;
      for (int k = 1; k <= n; ++k) a.push_back(1.0 + k * d);
      const auto r = regularity_index(normalize(a));
      EXPECT_NEAR(r.lower_bound, n / 2.0 - 1.0 + 0.5 / d, 1e-12 * (n + 1 / d));
      EXPECT_NEAR(r.upper_bound, n + 1.0 / d, 1e-12 * (n + 1 / d));
      EXPECT_EQ(r.m, brute_force_m(a));
    }
  }
}

TEST(RegularityIndex, LowerBoundIsReportedVerbatim) {
  // All gaps below 1: the Riemann-sum lower bound exceeds the true index.
  const auto r = regularity_index(normalize({1.2}));
  EXPECT_EQ(r.m, 1);
  EXPECT_NEAR(r.lower_bound, 2.0, 1e-12);
}

TEST(RegularityIndex, RandomVectorsMatchBruteForceAndInvariants) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    const auto v = random_normalized(rng);
    const auto a = normalize(v);
    const auto r = regularity_index(a);
    EXPECT_EQ(r.m, brute_force_m(v));
    EXPECT_LT(r.contraction, 1.0);
    EXPECT_GT(r.contraction, 0.0);
    EXPECT_GE(funceq::contraction_sum(a, r.m - 1), 1.0);
    EXPECT_LE(r.m, r.upper_bound);
  }
}

}  // namespace
