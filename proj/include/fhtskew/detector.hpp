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

#ifndef FHTSKEW_DETECTOR_HPP
#define FHTSKEW_DETECTOR_HPP

#include <algorithm>
#include <cmath>
#include <string>

#include "fhtskew/criterion.hpp"
#include "fhtskew/error.hpp"
#include "fhtskew/fht.hpp"
#include "fhtskew/gray_image.hpp"
#include "fhtskew/raster.hpp"

namespace fhtskew {

struct DetectorConfig {
  double max_angle = 15.0;  ///< search window half-width, degrees, in (0, 45]
  bool use_vertical = true;
  bool normalize_before_combine = false;
};

inline constexpr std::size_t kMinDetectorSide = 8;

/// Merged (both slope signs) criterion profile of one derivative image.
[[nodiscard]] inline CriterionProfile directional_profile(const GrayImage& derivative, Orientation o) {
  const GrayImage padded = pad_to_dyadic(derivative);
  CriterionProfile a = weighted_profile(fht(padded, o, SlopeSign::Positive));
  CriterionProfile b = weighted_profile(fht(padded, o, SlopeSign::Negative));
  return a.tangents().back() > 0.0 ? merge_signs(a, b) : merge_signs(b, a);
}

/// Full pipeline: derivatives, four FHT passes, weighted profiles, merge,
/// resample onto the horizontal grid, combine, windowed argmax.
///
/// Derivatives are taken on the original raster and zero-padded afterwards,
/// so the padding border never shows up as an edge.
[[nodiscard]] inline SkewEstimate detect_skew(const GrayImage& img, const DetectorConfig& cfg = {}) {
  if (!(cfg.max_angle > 0.0 && cfg.max_angle <= 45.0)) {
    throw DomainError("detect_skew: max_angle must lie in (0, 45]");
  }
  if (std::min(img.width(), img.height()) < kMinDetectorSide) {
    throw DegenerateInputError("detect_skew: image must be at least " + std::to_string(kMinDetectorSide) +
                               " pixels on each side, got " + std::to_string(img.width()) + "x" +
                               std::to_string(img.height()));
  }
  CriterionProfile horizontal = directional_profile(horizontal_derivative(img), Orientation::MostlyHorizontal);
  if (!cfg.use_vertical) return peak_to_angle(horizontal, cfg.max_angle);

  CriterionProfile vertical = directional_profile(vertical_derivative(img), Orientation::MostlyVertical);
  vertical = resample_profile(vertical, horizontal.tangents());
  if (cfg.normalize_before_combine) {
    horizontal = mean_normalized(horizontal);
    vertical = mean_normalized(vertical);
  }
  return peak_to_angle(combine(horizontal, vertical), cfg.max_angle);
}

/// Rotates by -estimate.angle; exposed corners become white (1.0).
[[nodiscard]] inline GrayImage deskew(const GrayImage& img, const SkewEstimate& estimate) {
  if (!std::isfinite(estimate.angle)) throw DomainError("deskew: angle must be finite");
  return rotate(img, -estimate.angle, 1.0);
}

/// Same as deskew, for a known angle.
[[nodiscard]] inline GrayImage deskew(const GrayImage& img, double angle_deg) {
  if (!std::isfinite(angle_deg)) throw DomainError("deskew: angle must be finite");
  return rotate(img, -angle_deg, 1.0);
}

}  // namespace fhtskew

#endif  // FHTSKEW_DETECTOR_HPP
