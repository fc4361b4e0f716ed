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

#ifndef FHTSKEW_SYNTH_HPP
#define FHTSKEW_SYNTH_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "fhtskew/error.hpp"
#include "fhtskew/gray_image.hpp"
#include "fhtskew/raster.hpp"

namespace fhtskew {

struct SynthDocument {
  GrayImage image;
  double gt_angle;  ///< degrees, same convention as rotate()
};

namespace detail {

// Distribution helpers written out so that output does not depend on the
// standard library's (implementation-defined) distribution algorithms.
class SynthRng {
 public:
  explicit SynthRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  int between(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<int>(engine_() % span);
  }

  /// Uniform double in [0, 1).
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool chance(double p) { return unit() < p; }

 private:
  std::mt19937_64 engine_;
};

// Unrotated page, one byte per pixel: 1 = ink.
class PageBitmap {
 public:
  explicit PageBitmap(int side) : side_(side), ink_(static_cast<std::size_t>(side) * side, 0) {}

  void fill_rect(int x0, int y0, int x1, int y1) { paint(x0, y0, x1, y1, 1); }
  void clear_rect(int x0, int y0, int x1, int y1) { paint(x0, y0, x1, y1, 0); }

  [[nodiscard]] bool ink(int x, int y) const {
    return ink_[static_cast<std::size_t>(y) * side_ + x] != 0;
  }
  [[nodiscard]] int side() const { return side_; }

 private:
  void paint(int x0, int y0, int x1, int y1, std::uint8_t value) {
    x0 = std::max(x0, 0);
    y0 = std::max(y0, 0);
    x1 = std::min(x1, side_);
    y1 = std::min(y1, side_);
    for (int y = y0; y < y1; ++y) {
      for (int x = x0; x < x1; ++x) ink_[static_cast<std::size_t>(y) * side_ + x] = value;
    }
  }

  int side_;
  std::vector<std::uint8_t> ink_;
};

// One text line: glyph boxes, outlined glyphs, and thin vertical strokes,
// some with ascenders or descenders.
inline void draw_text_line(PageBitmap& page, SynthRng& rng, int top, int height, int x_begin, int x_end) {
  const int bottom = top + height;
  int x = x_begin;
  while (x < x_end) {
    const int glyphs = rng.between(2, 8);
    for (int g = 0; g < glyphs && x < x_end; ++g) {
      const int kind = rng.between(0, 2);
      int width = 0;
      if (kind == 0) {
        width = rng.between(1, 2);
        page.fill_rect(x, top, x + width, bottom);
      } else {
        width = rng.between(3, 6);
        page.fill_rect(x, top, x + width, bottom);
        if (kind == 1 && height >= 4) {
          page.clear_rect(x + 1, top + 1, x + width - 1, bottom - 1);  // counter, as in 'o'
        }
      }
      if (rng.chance(0.25)) {
        const int reach = rng.between(2, std::max(2, height / 2 + 1));
        if (rng.chance(0.7)) {
          page.fill_rect(x, top - reach, x + 1, top);
        } else {
          page.fill_rect(x, bottom, x + 1, bottom + reach);
        }
      }
      x += width + rng.between(1, 2);
    }
    x += rng.between(4, 8);
  }
}

}  // namespace detail

/// Renders a synthetic text page rotated by `angle_deg`.
///
/// The page is white with 8 to 20 text lines (heights 4..12 px) made of
/// glyph boxes and short vertical strokes. Each output pixel averages a 4x4
/// grid of point samples of the rotated vector page, so the result is
/// bit-identical for a given (size, angle, seed).
[[nodiscard]] inline SynthDocument synth_document(std::size_t size, double angle_deg, std::uint64_t seed) {
  if (size < 64 || size > 16384) throw DomainError("synth_document: size must lie in [64, 16384]");
  if (!std::isfinite(angle_deg) || std::abs(angle_deg) > 20.0) {
    throw DomainError("synth_document: |angle| must be <= 20 degrees");
  }
  const int side = static_cast<int>(size);
  detail::SynthRng rng(seed);
  detail::PageBitmap page(side);

  const int margin = std::max(4, side / 16);
  const int avail = side - 2 * margin;
  const int lines = std::min(rng.between(8, 20), avail / 6);
  const int slot = avail / lines;
  const int max_height = std::clamp(slot - 2, 4, 12);

  std::vector<int> heights(static_cast<std::size_t>(lines));
  int ink_total = 0;
  for (int& h : heights) {
    h = rng.between(4, max_height);
    ink_total += h;
  }
  std::vector<double> gap_weights(static_cast<std::size_t>(lines));
  double weight_total = 0.0;
  for (double& w : gap_weights) {
    w = 0.5 + rng.unit();
    weight_total += w;
  }
  const double spare = static_cast<double>(avail - ink_total);
  const int text_width = side - 2 * margin;

  double y = margin;
  for (std::size_t i = 0; i < heights.size(); ++i) {
    y += spare * gap_weights[i] / weight_total;
    const int top = static_cast<int>(std::floor(y));
    const int indent = rng.chance(0.3) ? rng.between(0, text_width / 10) : 0;
    const int length = static_cast<int>(text_width * (0.5 + 0.5 * rng.unit()));
    detail::draw_text_line(page, rng, top, heights[i], margin + indent, margin + std::max(indent + 8, length));
    y += heights[i];
  }

  constexpr int kSub = 4;
  const double theta = degrees_to_radians(angle_deg);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const double center = static_cast<double>(side) / 2.0;
  std::vector<double> data(size * size);
  for (int py = 0; py < side; ++py) {
    for (int px = 0; px < side; ++px) {
      int hits = 0;
      for (int j = 0; j < kSub; ++j) {
        const double dy = py + (j + 0.5) / kSub - center;
        for (int i = 0; i < kSub; ++i) {
          const double dx = px + (i + 0.5) / kSub - center;
          const double sx = center + c * dx + s * dy;
          const double sy = center - s * dx + c * dy;
          if (sx >= 0.0 && sy >= 0.0 && sx < side && sy < side &&
              page.ink(static_cast<int>(sx), static_cast<int>(sy))) {
            ++hits;
          }
        }
      }
      data[static_cast<std::size_t>(py) * size + px] = 1.0 - static_cast<double>(hits) / (kSub * kSub);
    }
  }
  return SynthDocument{GrayImage(size, size, std::move(data)), angle_deg};
}

}  // namespace fhtskew

#endif  // FHTSKEW_SYNTH_HPP
