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

#ifndef FHTSKEW_RASTER_HPP
#define FHTSKEW_RASTER_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstddef>
#include <numbers>
#include <vector>

#include "fhtskew/error.hpp"
#include "fhtskew/gray_image.hpp"

namespace fhtskew {

[[nodiscard]] constexpr bool is_power_of_two(std::size_t n) noexcept {
  return n != 0 && (n & (n - 1)) == 0;
}

/// Smallest power of two >= n (n >= 1).
[[nodiscard]] constexpr std::size_t next_power_of_two(std::size_t n) noexcept {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

[[nodiscard]] constexpr double degrees_to_radians(double deg) noexcept {
  return deg * std::numbers::pi / 180.0;
}

[[nodiscard]] constexpr double radians_to_degrees(double rad) noexcept {
  return rad * 180.0 / std::numbers::pi;
}

/// Zero-pads to a square of side 2^ceil(log2(max(w, h))), content at (0, 0).
[[nodiscard]] inline GrayImage pad_to_dyadic(const GrayImage& img) {
  const std::size_t n = next_power_of_two(std::max(img.width(), img.height()));
  if (n == img.width() && n == img.height()) return img;
  std::vector<double> data(n * n, 0.0);
  for (std::size_t y = 0; y < img.height(); ++y) {
    const auto src = img.row(y);
    std::copy(src.begin(), src.end(), data.begin() + static_cast<std::ptrdiff_t>(y * n));
  }
  return GrayImage(n, n, std::move(data));
}

/// |I(x+1, y) - I(x-1, y)| / 2 with replicated borders.
[[nodiscard]] inline GrayImage horizontal_derivative(const GrayImage& img) {
  const std::size_t w = img.width();
  if (w < 2) throw DegenerateInputError("horizontal_derivative: width must be >= 2");
  std::vector<double> out(img.size());
  for (std::size_t y = 0; y < img.height(); ++y) {
    const auto r = img.row(y);
    double* dst = out.data() + y * w;
    dst[0] = std::abs(r[1] - r[0]) * 0.5;
    for (std::size_t x = 1; x + 1 < w; ++x) dst[x] = std::abs(r[x + 1] - r[x - 1]) * 0.5;
    dst[w - 1] = std::abs(r[w - 1] - r[w - 2]) * 0.5;
  }
  return GrayImage(w, img.height(), std::move(out));
}

/// |I(x, y+1) - I(x, y-1)| / 2 with replicated borders.
[[nodiscard]] inline GrayImage vertical_derivative(const GrayImage& img) {
  const std::size_t w = img.width();
  const std::size_t h = img.height();
  if (h < 2) throw DegenerateInputError("vertical_derivative: height must be >= 2");
  std::vector<double> out(img.size());
  for (std::size_t y = 0; y < h; ++y) {
    const auto up = img.row(y == 0 ? 0 : y - 1);
    const auto down = img.row(y + 1 == h ? h - 1 : y + 1);
    double* dst = out.data() + y * w;
    for (std::size_t x = 0; x < w; ++x) dst[x] = std::abs(down[x] - up[x]) * 0.5;
  }
  return GrayImage(w, h, std::move(out));
}

/// Bilinear sample at fractional (sx, sy); `fill` outside [0, w-1] x [0, h-1].
[[nodiscard]] inline double sample_bilinear(const GrayImage& img, double sx, double sy,
                                            double fill) noexcept {
  const double max_x = static_cast<double>(img.width() - 1);
  const double max_y = static_cast<double>(img.height() - 1);
  if (!(sx >= 0.0 && sx <= max_x && sy >= 0.0 && sy <= max_y)) return fill;
  const auto x0 = static_cast<std::size_t>(static_cast<std::int64_t>(sx));
  const auto y0 = static_cast<std::size_t>(static_cast<std::int64_t>(sy));
  const std::size_t dx1 = x0 + 1 < img.width() ? 1 : 0;
  const std::size_t dy1 = y0 + 1 < img.height() ? img.width() : 0;
  const double fx = sx - static_cast<double>(x0);
  const double fy = sy - static_cast<double>(y0);
  const double* p = img.data().data() + y0 * img.width() + x0;
  const double top = p[0] + (p[dx1] - p[0]) * fx;
  const double bottom = p[dy1] + (p[dy1 + dx1] - p[dy1]) * fx;
  return top + (bottom - top) * fy;
}

/// Rotates about the image center by `angle_deg`, same output size.
///
/// Positive angles are counterclockwise in pixel coordinates (x right, y
/// down), i.e. a horizontal line rotated by a positive angle descends to the
/// right. Samples falling outside the source take `fill`.
[[nodiscard]] inline GrayImage rotate(const GrayImage& img, double angle_deg, double fill = 0.0) {
  if (!std::isfinite(angle_deg)) throw DomainError("rotate: angle must be finite");
  if (!(fill >= 0.0 && fill <= 1.0)) throw DomainError("rotate: fill outside [0, 1]");
  if (angle_deg == 0.0) return img;
  const double theta = degrees_to_radians(angle_deg);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const double cx = (static_cast<double>(img.width()) - 1.0) / 2.0;
  const double cy = (static_cast<double>(img.height()) - 1.0) / 2.0;
  std::vector<double> out(img.size());
  for (std::size_t y = 0; y < img.height(); ++y) {
    const double dy = static_cast<double>(y) - cy;
    for (std::size_t x = 0; x < img.width(); ++x) {
      const double dx = static_cast<double>(x) - cx;
      // inverse mapping: R(-theta) applied to the output offset
      const double sx = cx + c * dx + s * dy;
      const double sy = cy - s * dx + c * dy;
      out[y * img.width() + x] = sample_bilinear(img, sx, sy, fill);
    }
  }
  return GrayImage(img.width(), img.height(), std::move(out));
}

}  // namespace fhtskew

#endif  // FHTSKEW_RASTER_HPP
