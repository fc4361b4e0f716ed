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

#ifndef FHTSKEW_FHT_HPP
#define FHTSKEW_FHT_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fhtskew/error.hpp"
#include "fhtskew/gray_image.hpp"
#include "fhtskew/raster.hpp"

namespace fhtskew {

/// Line family handled by one transform pass: within 45 degrees of the x axis
/// (MostlyHorizontal) or of the y axis (MostlyVertical).
enum class Orientation { MostlyHorizontal, MostlyVertical };

/// Direction of the dyadic staircase inside one pass. Negative passes mirror
/// the image along the traversal axis and reuse the Positive recursion.
enum class SlopeSign { Positive, Negative };

[[nodiscard]] inline std::string to_string(Orientation o) {
  return o == Orientation::MostlyHorizontal ? "horizontal" : "vertical";
}

[[nodiscard]] inline std::string to_string(SlopeSign s) {
  return s == SlopeSign::Positive ? "positive" : "negative";
}

/// Output of one Brady-Yong pass over an n x n image.
///
/// cells(s, y) is the sum of the input along the dyadic line that starts at
/// offset y on the first traversal line and drifts by s across the image.
class HoughAccumulator {
 public:
  HoughAccumulator(Orientation orientation, SlopeSign sign, std::size_t n, std::vector<double> cells)
      : orientation_(orientation), sign_(sign), n_(n), cells_(std::move(cells)) {
    if (!is_power_of_two(n_)) throw DomainError("HoughAccumulator: side must be a power of two");
    if (cells_.size() != n_ * n_) throw DomainError("HoughAccumulator: cells must be n x n");
  }

  [[nodiscard]] Orientation orientation() const noexcept { return orientation_; }
  [[nodiscard]] SlopeSign sign() const noexcept { return sign_; }
  [[nodiscard]] std::size_t n() const noexcept { return n_; }
  [[nodiscard]] std::span<const double> cells() const noexcept { return cells_; }
  [[nodiscard]] std::span<const double> row(std::size_t shift) const noexcept {
    return std::span<const double>(cells_).subspan(shift * n_, n_);
  }
  [[nodiscard]] double operator()(std::size_t shift, std::size_t offset) const noexcept {
    return cells_[shift * n_ + offset];
  }

 private:
  Orientation orientation_;
  SlopeSign sign_;
  std::size_t n_;
  std::vector<double> cells_;
};

/// Column offsets d(t, s), t = 0..n-1, of the dyadic line with total shift s.
///
/// Width 1 is {0}. Width n concatenates the width-n/2 pattern for floor(s/2)
/// with the same pattern raised by ceil(s/2), so d(0, s) = 0 and d(n-1, s) = s.
[[nodiscard]] inline std::vector<std::size_t> dyadic_pattern(std::size_t n, std::size_t shift) {
  if (!is_power_of_two(n)) throw DomainError("dyadic_pattern: n must be a power of two");
  if (shift >= n) throw DomainError("dyadic_pattern: shift must lie in [0, n-1]");
  if (n == 1) return {0};
  const std::vector<std::size_t> half = dyadic_pattern(n / 2, shift / 2);
  const std::size_t raise = (shift + 1) / 2;
  std::vector<std::size_t> out(half);
  out.reserve(n);
  for (std::size_t d : half) out.push_back(d + raise);
  return out;
}

namespace detail {

inline void check_dyadic_square(const GrayImage& img, const char* who) {
  if (img.width() != img.height() || !is_power_of_two(img.width())) {
    throw DomainError(std::string(who) + ": input must be a square image with side 2^k, got " +
                      std::to_string(img.width()) + "x" + std::to_string(img.height()));
  }
}

// Lays the image out as n traversal lines: line t holds P(t, c) for c = 0..n-1.
inline void fill_traversal_lines(const GrayImage& img, Orientation o, SlopeSign sign, std::vector<double>& lines) {
  const std::size_t n = img.width();
  lines.resize(n * n);
  for (std::size_t t = 0; t < n; ++t) {
    const std::size_t src = sign == SlopeSign::Negative ? n - 1 - t : t;
    double* dst = lines.data() + t * n;
    if (o == Orientation::MostlyHorizontal) {
      for (std::size_t c = 0; c < n; ++c) dst[c] = img(src, c);
    } else {
      const auto r = img.row(src);
      std::copy(r.begin(), r.end(), dst);
    }
  }
}

inline std::vector<double> traversal_lines(const GrayImage& img, Orientation o, SlopeSign sign) {
  std::vector<double> lines;
  fill_traversal_lines(img, o, sign, lines);
  return lines;
}

// Runs every butterfly level in place over cur/next; the result ends in cur.
inline std::uint64_t butterflies(std::vector<double>& cur, std::vector<double>& next, std::size_t n) {
  next.resize(n * n);
  std::uint64_t count = 0;
  for (std::size_t width = 2; width <= n; width *= 2) {
    const std::size_t half = width / 2;
    for (std::size_t base = 0; base < n; base += width) {
      for (std::size_t s = 0; s < width; ++s) {
        const double* left = cur.data() + (base + s / 2) * n;
        const double* right = cur.data() + (base + half + s / 2) * n;
        const std::size_t raise = (s + 1) / 2;
        double* dst = next.data() + (base + s) * n;
        const std::size_t inside = n - raise;
        for (std::size_t y = 0; y < inside; ++y) dst[y] = left[y] + right[y + raise];
        for (std::size_t y = inside; y < n; ++y) dst[y] = left[y];  // right operand clipped
        count += n;
      }
    }
    cur.swap(next);
  }
  return count;
}

}  // namespace detail

/// Buffers reused across fht_cells calls so repeated transforms do not reallocate.
struct FhtWorkspace {
  std::vector<double> cells;
  std::vector<double> scratch;
};

/// Fast Hough transform into a workspace. The returned view is row-major
/// (slope s, shift y) and stays valid until the workspace is used again.
[[nodiscard]] inline std::span<const double> fht_cells(const GrayImage& img, Orientation orientation,
                                                       SlopeSign sign, FhtWorkspace& workspace,
                                                       std::uint64_t* additions = nullptr) {
  detail::check_dyadic_square(img, "fht");
  detail::fill_traversal_lines(img, orientation, sign, workspace.cells);
  const std::uint64_t count = detail::butterflies(workspace.cells, workspace.scratch, img.width());
  if (additions != nullptr) *additions = count;
  return workspace.cells;
}

/// Fast Hough transform: n^2 log2(n) additions.
///
/// Reads past the far edge of the image contribute zero. When `additions` is
/// non-null it receives the number of butterfly additions performed (one per
/// output cell per level; cells whose right operand is clipped add zero).
[[nodiscard]] inline HoughAccumulator fht(const GrayImage& img, Orientation orientation, SlopeSign sign,
                                          std::uint64_t* additions = nullptr) {
  FhtWorkspace workspace;
  (void)fht_cells(img, orientation, sign, workspace, additions);
  return HoughAccumulator(orientation, sign, img.width(), std::move(workspace.cells));
}

/// O(n^3) reference for fht: materializes every dyadic pattern and sums reads directly.
[[nodiscard]] inline HoughAccumulator brute_force_hough(const GrayImage& img, Orientation orientation,
                                                        SlopeSign sign) {
  detail::check_dyadic_square(img, "brute_force_hough");
  const std::size_t n = img.width();
  const std::vector<double> lines = detail::traversal_lines(img, orientation, sign);
  std::vector<double> cells(n * n, 0.0);
  for (std::size_t s = 0; s < n; ++s) {
    const auto pattern = dyadic_pattern(n, s);
    for (std::size_t y = 0; y < n; ++y) {
      double sum = 0.0;
      for (std::size_t t = 0; t < n; ++t) {
        const std::size_t c = y + pattern[t];
        if (c < n) sum += lines[t * n + c];
      }
      cells[s * n + y] = sum;
    }
  }
  return HoughAccumulator(orientation, sign, n, std::move(cells));
}

/// Axis-aligned projections of an image.
struct ProjectionProfiles {
  std::vector<double> horizontal;  ///< one entry per column: sum over rows
  std::vector<double> vertical;    ///< one entry per row: sum over columns
};

namespace detail {

// Balanced-tree summation of values[first + k*stride], k < count.
inline double pairwise_sum(std::span<const double> values, std::size_t first, std::size_t count,
                           std::size_t stride) {
  if (count == 1) return values[first];
  const std::size_t left = count / 2;
  return pairwise_sum(values, first, left, stride) +
         pairwise_sum(values, first + left * stride, count - left, stride);
}

}  // namespace detail

/// Exact row and column sums (pairwise summation).
[[nodiscard]] inline ProjectionProfiles projection_profiles(const GrayImage& img) {
  ProjectionProfiles p;
  p.horizontal.resize(img.width());
  p.vertical.resize(img.height());
  for (std::size_t x = 0; x < img.width(); ++x) {
    p.horizontal[x] = detail::pairwise_sum(img.data(), x, img.height(), img.width());
  }
  for (std::size_t y = 0; y < img.height(); ++y) {
    p.vertical[y] = detail::pairwise_sum(img.data(), y * img.width(), img.width(), 1);
  }
  return p;
}

/// Classical DRT projection: rotate by -angle (bilinear, zero fill), then sum each column.
[[nodiscard]] inline std::vector<double> drt_projection(const GrayImage& img, double angle_deg) {
  if (!std::isfinite(angle_deg)) throw DomainError("drt_projection: angle must be finite");
  // same sampling as rotate(img, -angle), accumulated without materializing the image
  const double theta = degrees_to_radians(-angle_deg);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const double cx = (static_cast<double>(img.width()) - 1.0) / 2.0;
  const double cy = (static_cast<double>(img.height()) - 1.0) / 2.0;
  std::vector<double> sums(img.width(), 0.0);
  for (std::size_t y = 0; y < img.height(); ++y) {
    const double dy = static_cast<double>(y) - cy;
    for (std::size_t x = 0; x < img.width(); ++x) {
      const double dx = static_cast<double>(x) - cx;
      sums[x] += sample_bilinear(img, cx + c * dx + s * dy, cy - s * dx + c * dy, 0.0);
    }
  }
  return sums;
}

}  // namespace fhtskew

#endif  // FHTSKEW_FHT_HPP
