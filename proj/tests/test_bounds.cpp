#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "sepchoose/bounds.hpp"

using namespace sepchoose;

namespace {

const GraphKind kGraph = GraphKind::graph;
const GraphKind kHyper = GraphKind::hypergraph;

// m values spread over [1, 10^6], including powers of two and neighbours.
std::vector<std::uint64_t> grid_m() {
  std::vector<std::uint64_t> ms;
  for (std::uint64_t m = 1; m <= 1'000'000; m = m * 3 / 2 + 1) ms.push_back(m);
  for (std::uint64_t p = 1; p <= 1'000'000; p *= 2) ms.insert(ms.end(), {p - 1 ? p - 1 : 1, p, p + 1});
  std::sort(ms.begin(), ms.end());
  ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
  return ms;
}

}  // namespace

TEST(Upper, Examples) {
  EXPECT_EQ(upper_threshold(2, 1000, kGraph), 11u);
  EXPECT_EQ(upper_threshold(2, 1024, kGraph), 12u);
  EXPECT_EQ(upper_threshold(2, 7, kHyper), 4u);
}

TEST(Lower, Examples) {
  EXPECT_EQ(lower_threshold(2, 1024, kGraph), 2u);
  EXPECT_EQ(lower_condition_value(2, 2, kGraph), 1024);
  EXPECT_FALSE(lower_threshold(2, 1023, kGraph));
  EXPECT_EQ(lower_threshold(2, 1024, kHyper), 2u);
  EXPECT_EQ(lower_condition_value(2, 2, kHyper), 1024);
}

TEST(ExpectedUnhappy, Examples) {
  EXPECT_EQ(expected_unhappy(2, 4, 4, kGraph), BigRational(1, 2));
  EXPECT_EQ(expected_unhappy(2, 4, 4, kHyper), BigRational(1, 2));
  EXPECT_EQ(expected_unhappy(2, 20, 6, kGraph), BigRational(40, 64));
  EXPECT_EQ(expected_unhappy(3, 10, 2, kGraph), BigRational(40, 3));
}

TEST(Asymptotic, Examples) {
  EXPECT_DOUBLE_EQ(asymptotic_value(2, 1024, kGraph), 10.0);
  EXPECT_DOUBLE_EQ(asymptotic_value(2, 1024, kHyper), 10.0);
  EXPECT_NEAR(asymptotic_value(3, 729, kGraph), 16.26, 0.01);
}

TEST(Bounds, PreconditionsChecked) {
  EXPECT_THROW(upper_threshold(1, 10, kGraph), PreconditionError);
  EXPECT_THROW(upper_threshold(2, 0, kGraph), PreconditionError);
}

TEST(Bounds, SandwichOnGrid) {
  for (auto kind : {kGraph, kHyper})
    for (std::uint64_t k = 2; k <= 4; ++k)
      for (auto m : grid_m()) {
        const auto up = upper_threshold(k, m, kind);
        if (const auto lo = lower_threshold(k, m, kind)) {
          EXPECT_LE(*lo + 1, up) << "k=" << k << " m=" << m;
        }
      }
}

TEST(Bounds, MonotoneInM) {
  for (auto kind : {kGraph, kHyper})
    for (std::uint64_t k = 2; k <= 4; ++k) {
      unsigned prev_up = 0;
      unsigned prev_lo = 0;
      for (auto m : grid_m()) {
        const auto up = upper_threshold(k, m, kind);
        const auto lo = lower_threshold(k, m, kind).value_or(0);
        EXPECT_GE(up, prev_up);
        EXPECT_GE(lo, prev_lo);
        prev_up = up;
        prev_lo = lo;
      }
    }
}

TEST(Bounds, UpperThresholdIsLeastWithExpectationBelowOne) {
  for (auto kind : {kGraph, kHyper})
    for (std::uint64_t k = 2; k <= 4; ++k)
      for (auto m : grid_m()) {
        const auto up = upper_threshold(k, m, kind);
        EXPECT_LT(expected_unhappy(k, m, up, kind), 1);
        if (up > 1) {
          EXPECT_GE(expected_unhappy(k, m, up - 1, kind), 1);
        }
      }
}

TEST(Report, BalancedFamilyParameters) {
  const auto b = bound_report(2, 1024, kGraph);
  EXPECT_EQ(b.upper_r, 12u);
  EXPECT_EQ(b.lower_r, 2u);
  EXPECT_EQ(b.lower_condition, 1024);
  EXPECT_DOUBLE_EQ(b.asymptotic, 10.0);
  EXPECT_TRUE(b.consistent);
}

TEST(Unbalanced, EmptyIntervalAtSmallR) {
  const auto u = unbalanced_lower_threshold({1024, 1024});
  ASSERT_FALSE(u.candidates.empty());
  const auto& c = u.candidates.front();
  EXPECT_EQ(c.r, 2u);
  EXPECT_EQ(c.q, 8u);
  EXPECT_EQ(c.lower, 1024);
  EXPECT_EQ(c.intervals[0].upper, 224);
  EXPECT_TRUE(c.intervals[0].empty);
  EXPECT_FALSE(u.claim);
  EXPECT_FALSE(u.diagnostics.empty());
}

TEST(Unbalanced, BelowEveryLowerValue) {
  const auto u = unbalanced_lower_threshold({10, 20});
  EXPECT_FALSE(u.r);
  EXPECT_FALSE(u.claim);
}

TEST(Unbalanced, MonotoneInParts) {
  for (std::uint64_t m1 = 1; m1 <= 1u << 22; m1 = m1 * 2 + 3) {
    const auto base = unbalanced_lower_threshold({m1, 2 * m1});
    const auto bigger = unbalanced_lower_threshold({2 * m1, 4 * m1});
    EXPECT_GE(bigger.r.value_or(0), base.r.value_or(0));
  }
}

TEST(Unbalanced, RejectsUnsortedParts) {
  EXPECT_THROW(unbalanced_lower_threshold({5, 3}), PreconditionError);
  EXPECT_THROW(unbalanced_lower_threshold({5}), PreconditionError);
}
