/*
 * Copyright 2026 The fhtskew Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "fhtskew/criterion.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "fhtskew/fht.hpp"
#include "test_util.hpp"

namespace fhtskew {
namespace {

using testing::random_image;

CriterionProfile profile(std::vector<double> t, std::vector<double> v,
                         ProfileSource src = ProfileSource::Horizontal) {
  return CriterionProfile(std::move(t), std::move(v), src);
}

std::vector<double> as_vec(std::span<const double> s) { return {s.begin(), s.end()}; }

TEST(CriterionProfile, EnforcesInvariants) {
  EXPECT_THROW(profile({}, {}), DomainError);
  EXPECT_THROW(profile({0.0, 0.0}, {1.0, 1.0}), DomainError);
  EXPECT_THROW(profile({0.0, 0.5}, {1.0}), DomainError);
  EXPECT_THROW(profile({0.0}, {-1.0}), DomainError);
  EXPECT_THROW(profile({0.0}, {INFINITY}), DomainError);
}

TEST(Ssg, Examples) {
  EXPECT_EQ(ssg(std::vector<double>{5, 5, 5, 5}), 0.0);
  EXPECT_EQ(ssg(std::vector<double>{0, 1, 0}), 2.0);
  EXPECT_THROW((void)ssg(std::vector<double>{1.0}), DomainError);
}

TEST(Ssg, QuadraticHomogeneity) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> row(2 + trial % 17);
    for (double& v : row) v = u(rng);
    const double c = u(rng);
    std::vector<double> scaled_row(row);
    for (double& v : scaled_row) v *= c;
    EXPECT_NEAR(ssg(scaled_row), c * c * ssg(row), 1e-12 * (1.0 + ssg(row)));
  }
}

TEST(WeightedProfile, WeightsFollowLineLength) {
  const GrayImage img = random_image(8, 8, 4);
  const auto acc = fht(img, Orientation::MostlyHorizontal, SlopeSign::Positive);
  const auto p = weighted_profile(acc);
  ASSERT_EQ(p.size(), 8u);
  EXPECT_EQ(p.source(), ProfileSource::Horizontal);
  EXPECT_EQ(p.tangents()[0], 0.0);
  EXPECT_EQ(p.values()[0], ssg(acc.row(0)));
  EXPECT_DOUBLE_EQ(p.tangents()[7], 1.0);
  EXPECT_NEAR(p.values()[7], 2.8284271247461903 * ssg(acc.row(7)), 1e-12 * p.values()[7]);
  for (std::size_t s = 0; s < 8; ++s) {
    const double ratio = s / 7.0;
    EXPECT_NEAR(p.values()[s], std::pow(1.0 + ratio * ratio, 1.5) * ssg(acc.row(s)), 1e-12 * (1.0 + p.values()[s]));
  }
}

TEST(WeightedProfile, SignAndOrientationSetTangentDirection) {
  const GrayImage img = random_image(8, 8, 5);
  const auto hn = weighted_profile(fht(img, Orientation::MostlyHorizontal, SlopeSign::Negative));
  EXPECT_DOUBLE_EQ(hn.tangents().front(), -1.0);
  EXPECT_EQ(hn.tangents().back(), 0.0);
  // the vertical pass runs on the transposed image, so its signs are reversed
  const auto vp = weighted_profile(fht(img, Orientation::MostlyVertical, SlopeSign::Positive));
  const auto vn = weighted_profile(fht(img, Orientation::MostlyVertical, SlopeSign::Negative));
  EXPECT_EQ(vp.source(), ProfileSource::Vertical);
  EXPECT_DOUBLE_EQ(vp.tangents().front(), -1.0);
  EXPECT_DOUBLE_EQ(vn.tangents().back(), 1.0);
}

TEST(WeightedProfile, ZeroAccumulatorGivesZeros) {
  const auto p = weighted_profile(fht(GrayImage(16, 16), Orientation::MostlyVertical, SlopeSign::Positive));
  for (double v : p.values()) EXPECT_EQ(v, 0.0);
  EXPECT_THROW((void)weighted_profile(HoughAccumulator(Orientation::MostlyHorizontal, SlopeSign::Positive, 1, {0.0})),
               DomainError);
}

TEST(MergeSigns, LengthAndSingleZero) {
  const GrayImage img = random_image(16, 16, 6);
  const auto pos = weighted_profile(fht(img, Orientation::MostlyHorizontal, SlopeSign::Positive));
  const auto neg = weighted_profile(fht(img, Orientation::MostlyHorizontal, SlopeSign::Negative));
  const auto merged = merge_signs(pos, neg);
  ASSERT_EQ(merged.size(), 31u);
  EXPECT_DOUBLE_EQ(merged.tangents().front(), -1.0);
  EXPECT_DOUBLE_EQ(merged.tangents().back(), 1.0);
  EXPECT_EQ(std::count(merged.tangents().begin(), merged.tangents().end(), 0.0), 1);
  EXPECT_EQ(merged.values()[15], pos.values()[0]);
  EXPECT_EQ(merged.values()[15], neg.values()[15]);
}

TEST(MergeSigns, MirrorSymmetricImageGivesSymmetricProfile) {
  const GrayImage half = random_image(8, 16, 7);
  const GrayImage img = make_image(16, 16, [&](std::size_t x, std::size_t y) {
    return x < 8 ? half(x, y) : half(15 - x, y);
  });
  const auto merged = merge_signs(weighted_profile(fht(img, Orientation::MostlyHorizontal, SlopeSign::Positive)),
                                  weighted_profile(fht(img, Orientation::MostlyHorizontal, SlopeSign::Negative)));
  for (std::size_t i = 0; i < merged.size(); ++i) {
    EXPECT_EQ(merged.values()[i], merged.values()[merged.size() - 1 - i]);
  }
}

TEST(MergeSigns, ZeroInputsAndErrors) {
  const auto pos = profile({0.0, 0.5, 1.0}, {0, 0, 0});
  const auto neg = profile({-1.0, -0.5, 0.0}, {0, 0, 0});
  const auto merged = merge_signs(pos, neg);
  EXPECT_EQ(as_vec(merged.tangents()), (std::vector<double>{-1.0, -0.5, 0.0, 0.5, 1.0}));
  for (double v : merged.values()) EXPECT_EQ(v, 0.0);
  EXPECT_THROW((void)merge_signs(pos, profile({-1.0, -0.5, 0.0}, {0, 0, 0}, ProfileSource::Vertical)), DomainError);
  EXPECT_THROW((void)merge_signs(pos, profile({-1.0, -0.4, 0.0}, {0, 0, 0})), DomainError);
  EXPECT_THROW((void)merge_signs(neg, pos), DomainError);
}

TEST(ResampleProfile, IdentityMidpointAndConstants) {
  const auto src = profile({-1.0, 0.0, 0.25, 1.0}, {3.0, 7.0, 1.0, 4.0});
  EXPECT_EQ(resample_profile(src, src.tangents()), src);
  const auto mid = resample_profile(profile({0.0, 1.0}, {0.0, 10.0}), std::vector<double>{0.5});
  EXPECT_EQ(as_vec(mid.values()), std::vector<double>{5.0});
  const auto flat = resample_profile(profile({-1.0, 0.0, 1.0}, {2.5, 2.5, 2.5}),
                                     std::vector<double>{-0.9, -0.3, 0.0, 0.7});
  for (double v : flat.values()) EXPECT_EQ(v, 2.5);
}

TEST(ResampleProfile, StaysWithinSourceRange) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0.0, 5.0);
  std::vector<double> t;
  std::vector<double> v;
  for (int i = -10; i <= 10; ++i) {
    t.push_back(i / 10.0);
    v.push_back(u(rng));
  }
  const auto src = profile(t, v);
  std::vector<double> targets;
  for (int i = -99; i <= 99; ++i) targets.push_back(i / 100.0);
  const auto out = resample_profile(src, targets);
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  for (double x : out.values()) {
    EXPECT_GE(x, *lo);
    EXPECT_LE(x, *hi);
  }
}

TEST(ResampleProfile, RefusesToExtrapolate) {
  const auto src = profile({-0.5, 0.0, 0.5}, {1, 2, 3});
  EXPECT_THROW((void)resample_profile(src, std::vector<double>{-0.6, 0.0}), DomainError);
  EXPECT_THROW((void)resample_profile(src, std::vector<double>{0.1, 0.1}), DomainError);
}

TEST(Combine, FixtureArithmetic) {
  const auto h = profile({-0.5, -0.25, 0.0, 0.25, 0.5}, {1.0, 2.5, 4.0, 0.5, 0.0});
  const auto v = profile({-0.5, -0.25, 0.0, 0.25, 0.5}, {0.5, 0.25, 1.0, 3.0, 2.0}, ProfileSource::Vertical);
  const auto c = combine(h, v);
  EXPECT_EQ(c.source(), ProfileSource::Combined);
  EXPECT_EQ(as_vec(c.values()), (std::vector<double>{1.5, 2.75, 5.0, 3.5, 2.0}));
  EXPECT_EQ(as_vec(combine(v, h).values()), as_vec(c.values()));
  const auto zero = profile({-0.5, -0.25, 0.0, 0.25, 0.5}, {0, 0, 0, 0, 0}, ProfileSource::Vertical);
  EXPECT_EQ(as_vec(combine(h, zero).values()), as_vec(h.values()));
  EXPECT_THROW((void)combine(h, profile({-0.5, 0.0, 0.5}, {1, 1, 1})), DomainError);
}

TEST(PeakToAngle, Examples) {
  std::vector<double> t;
  for (int s = -511; s <= 511; ++s) t.push_back(s / 511.0);
  std::vector<double> spike_zero(t.size(), 1.0);
  spike_zero[511] = 9.0;
  const auto at_zero = peak_to_angle(profile(t, spike_zero), 15.0);
  EXPECT_EQ(at_zero.angle, 0.0);
  EXPECT_EQ(at_zero.peak_index, 511u);
  EXPECT_EQ(at_zero.peak_value, 9.0);

  std::vector<double> spike(t.size(), 1.0);
  spike[511 + 137] = 3.0;
  // arctan(137/511) in degrees, evaluated offline
  EXPECT_NEAR(peak_to_angle(profile(t, spike), 45.0).angle, 15.008155665631527, 1e-9);

  const auto flat = peak_to_angle(profile(t, std::vector<double>(t.size(), 2.0)), 15.0);
  EXPECT_EQ(flat.angle, 0.0);
}

TEST(PeakToAngle, WindowAndTieBreaks) {
  const auto p = profile({-1.0, -0.5, 0.0, 0.5, 1.0}, {9.0, 4.0, 1.0, 4.0, 9.0});
  // the 45-degree entries are in the window only when max_angle reaches 45
  EXPECT_NEAR(peak_to_angle(p, 45.0).angle, -45.0, 1e-12);
  const auto inside = peak_to_angle(p, 30.0);
  EXPECT_EQ(inside.peak_index, 1u);  // tie between +-0.5 goes negative
  EXPECT_NEAR(inside.angle, -26.56505117707799, 1e-9);
  EXPECT_THROW((void)peak_to_angle(profile({-1.0, 1.0}, {1.0, 1.0}), 10.0), DomainError);
  EXPECT_THROW((void)peak_to_angle(p, 0.0), DomainError);
  EXPECT_THROW((void)peak_to_angle(p, 46.0), DomainError);
}

TEST(PeakToAngle, AngleNeverLeavesWindow) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> t;
  for (int s = -63; s <= 63; ++s) t.push_back(s / 63.0);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> v(t.size());
    for (double& x : v) x = u(rng);
    const double max_angle = 0.5 + 44.5 * u(rng);
    EXPECT_LE(std::abs(peak_to_angle(profile(t, v), max_angle).angle), max_angle);
  }
}

TEST(MeanNormalized, DividesByMean) {
  const auto p = mean_normalized(profile({0.0, 1.0}, {1.0, 3.0}));
  EXPECT_EQ(as_vec(p.values()), (std::vector<double>{0.5, 1.5}));
  const auto z = profile({0.0, 1.0}, {0.0, 0.0});
  EXPECT_EQ(mean_normalized(z), z);
}

}  // namespace
}  // namespace fhtskew
