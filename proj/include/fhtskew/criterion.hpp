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

#ifndef FHTSKEW_CRITERION_HPP
#define FHTSKEW_CRITERION_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fhtskew/error.hpp"
#include "fhtskew/fht.hpp"
#include "fhtskew/raster.hpp"

namespace fhtskew {

enum class ProfileSource { Horizontal, Vertical, Combined };

[[nodiscard]] inline std::string to_string(ProfileSource s) {
  switch (s) {
    case ProfileSource::Horizontal: return "horizontal";
    case ProfileSource::Vertical: return "vertical";
    case ProfileSource::Combined: return "combined";
  }
  return "unknown";
}

/// Criterion score per candidate skew tangent.
///
/// Tangents are strictly increasing; values are finite and nonnegative.
class CriterionProfile {
 public:
  CriterionProfile(std::vector<double> tangents, std::vector<double> values, ProfileSource source)
      : tangents_(std::move(tangents)), values_(std::move(values)), source_(source) {
    if (tangents_.empty() || tangents_.size() != values_.size()) {
      throw DomainError("CriterionProfile: tangents and values must be nonempty and equally long");
    }
    for (std::size_t i = 0; i < tangents_.size(); ++i) {
      if (!std::isfinite(tangents_[i]) || (i > 0 && !(tangents_[i] > tangents_[i - 1]))) {
        throw DomainError("CriterionProfile: tangents must be finite and strictly increasing");
      }
      if (!std::isfinite(values_[i]) || values_[i] < 0.0) {
        throw DomainError("CriterionProfile: values must be finite and nonnegative");
      }
    }
  }

  [[nodiscard]] std::span<const double> tangents() const noexcept { return tangents_; }
  [[nodiscard]] std::span<const double> values() const noexcept { return values_; }
  [[nodiscard]] ProfileSource source() const noexcept { return source_; }
  [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }

  friend bool operator==(const CriterionProfile&, const CriterionProfile&) = default;

 private:
  std::vector<double> tangents_;
  std::vector<double> values_;
  ProfileSource source_;
};

/// Result of the peak search.
struct SkewEstimate {
  double angle = 0.0;  ///< degrees, arctan of the tangent at peak_index
  double peak_value = 0.0;
  std::size_t peak_index = 0;
  CriterionProfile profile;
};

/// Sum of squared first differences of an accumulator row.
[[nodiscard]] inline double ssg(std::span<const double> row) {
  if (row.size() < 2) throw DomainError("ssg: row needs at least 2 entries");
  double sum = 0.0;
  for (std::size_t j = 0; j + 1 < row.size(); ++j) {
    const double d = row[j + 1] - row[j];
    sum += d * d;
  }
  return sum;
}

/// Length-compensated criterion K(s)^3 * ssg(row s), K(s) = sqrt(1 + s^2/(n-1)^2).
///
/// The tangent attached to shift s is the skew tangent of that line family:
/// +-s/(n-1) following the slope sign for MostlyHorizontal passes. The
/// MostlyVertical pass works on the transposed image, which reverses the
/// rotation sense, so its sign is flipped to land on the same skew axis.
[[nodiscard]] inline CriterionProfile weighted_profile(const HoughAccumulator& acc) {
  const std::size_t n = acc.n();
  if (n < 2) throw DomainError("weighted_profile: accumulator side must be >= 2");
  const double steps = static_cast<double>(n - 1);
  double direction = acc.sign() == SlopeSign::Positive ? 1.0 : -1.0;
  if (acc.orientation() == Orientation::MostlyVertical) direction = -direction;

  std::vector<double> tangents(n);
  std::vector<double> values(n);
  for (std::size_t s = 0; s < n; ++s) {
    const double ratio = static_cast<double>(s) / steps;
    const double k = std::sqrt(1.0 + ratio * ratio);
    // direction == -1 fills the arrays back to front so tangents ascend
    const std::size_t i = direction > 0 ? s : n - 1 - s;
    tangents[i] = s == 0 ? 0.0 : direction * ratio;
    values[i] = k * k * k * ssg(acc.row(s));
  }
  const auto source = acc.orientation() == Orientation::MostlyHorizontal ? ProfileSource::Horizontal
                                                                          : ProfileSource::Vertical;
  return CriterionProfile(std::move(tangents), std::move(values), source);
}

/// Joins the nonnegative and nonpositive halves of one orientation into a
/// profile over [-1, 1] with a single tangent-0 entry.
[[nodiscard]] inline CriterionProfile merge_signs(const CriterionProfile& pos, const CriterionProfile& neg) {
  if (pos.source() != neg.source()) throw DomainError("merge_signs: profiles come from different sources");
  if (pos.size() != neg.size()) throw DomainError("merge_signs: grids differ in length");
  const std::size_t m = pos.size();
  if (pos.tangents().front() != 0.0 || neg.tangents().back() != 0.0) {
    throw DomainError("merge_signs: expected pos tangents >= 0 and neg tangents <= 0");
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (pos.tangents()[i] != -neg.tangents()[m - 1 - i]) {
      throw DomainError("merge_signs: |tangent| grids do not match");
    }
  }
  std::vector<double> tangents(neg.tangents().begin(), neg.tangents().end() - 1);
  std::vector<double> values(neg.values().begin(), neg.values().end() - 1);
  tangents.insert(tangents.end(), pos.tangents().begin(), pos.tangents().end());
  values.insert(values.end(), pos.values().begin(), pos.values().end());
  return CriterionProfile(std::move(tangents), std::move(values), pos.source());
}

/// Linear interpolation of `src` onto `targets` (tangent space, no extrapolation).
[[nodiscard]] inline CriterionProfile resample_profile(const CriterionProfile& src,
                                                       std::span<const double> targets) {
  if (targets.empty()) throw DomainError("resample_profile: empty target grid");
  const auto tan = src.tangents();
  const auto val = src.values();
  std::vector<double> out(targets.size());
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const double t = targets[i];
    if (i > 0 && !(t > targets[i - 1])) throw DomainError("resample_profile: targets must increase strictly");
    if (!(t >= tan.front() && t <= tan.back())) {
      throw DomainError("resample_profile: target tangent outside the source span");
    }
    const auto hi = static_cast<std::size_t>(std::lower_bound(tan.begin(), tan.end(), t) - tan.begin());
    if (tan[hi] == t) {
      out[i] = val[hi];
      continue;
    }
    const std::size_t lo = hi - 1;
    const double f = (t - tan[lo]) / (tan[hi] - tan[lo]);
    out[i] = val[lo] + (val[hi] - val[lo]) * f;
  }
  return CriterionProfile(std::vector<double>(targets.begin(), targets.end()), std::move(out), src.source());
}

/// Element-wise sum on a shared grid.
[[nodiscard]] inline CriterionProfile combine(const CriterionProfile& a, const CriterionProfile& b) {
  if (!std::equal(a.tangents().begin(), a.tangents().end(), b.tangents().begin(), b.tangents().end())) {
    throw DomainError("combine: profiles are on different tangent grids");
  }
  std::vector<double> values(a.size());
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = a.values()[i] + b.values()[i];
  return CriterionProfile(std::vector<double>(a.tangents().begin(), a.tangents().end()), std::move(values),
                          ProfileSource::Combined);
}

/// Divides every value by the profile mean (no-op for an all-zero profile).
[[nodiscard]] inline CriterionProfile mean_normalized(const CriterionProfile& p) {
  double mean = 0.0;
  for (double v : p.values()) mean += v;
  mean /= static_cast<double>(p.size());
  if (mean <= 0.0) return p;
  std::vector<double> values(p.values().begin(), p.values().end());
  for (double& v : values) v /= mean;
  return CriterionProfile(std::vector<double>(p.tangents().begin(), p.tangents().end()), std::move(values),
                          p.source());
}

/// Argmax inside |tangent| <= tan(max_angle_deg).
///
/// Ties go to the smaller |tangent|, then to the negative side, so a
/// structureless profile reports 0 degrees.
[[nodiscard]] inline SkewEstimate peak_to_angle(const CriterionProfile& profile, double max_angle_deg) {
  if (!(max_angle_deg > 0.0 && max_angle_deg <= 45.0)) {
    throw DomainError("peak_to_angle: max_angle must lie in (0, 45]");
  }
  // slack keeps tan(45 deg) = 0.99999... from excluding the tangent-1 entry
  const double limit = std::tan(degrees_to_radians(max_angle_deg)) * (1.0 + 1e-12);
  const auto tan = profile.tangents();
  const auto val = profile.values();
  bool found = false;
  std::size_t best = 0;
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (std::abs(tan[i]) > limit) continue;
    if (!found) {
      found = true;
      best = i;
      continue;
    }
    const double bt = std::abs(tan[best]);
    const double t = std::abs(tan[i]);
    if (val[i] > val[best] || (val[i] == val[best] && (t < bt || (t == bt && tan[i] < tan[best])))) {
      best = i;
    }
  }
  if (!found) throw DomainError("peak_to_angle: no grid entry inside the search window");
  return SkewEstimate{radians_to_degrees(std::atan(tan[best])), val[best], best, profile};
}

}  // namespace fhtskew

#endif  // FHTSKEW_CRITERION_HPP
