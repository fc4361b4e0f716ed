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

#ifndef FHTSKEW_GRAY_IMAGE_HPP
#define FHTSKEW_GRAY_IMAGE_HPP

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fhtskew/error.hpp"

namespace fhtskew {

/// Row-major grayscale raster with intensities in [0, 1].
///
/// Every constructor validates the invariants (positive size, matching data
/// length, finite values inside [0, 1]); the raster is immutable afterwards
/// apart from whole-value assignment.
class GrayImage {
 public:
  GrayImage(std::size_t width, std::size_t height, double fill = 0.0)
      : width_(width), height_(height), data_(width * height, fill) {
    check_size();
    if (!(fill >= 0.0 && fill <= 1.0)) {
      throw DomainError("GrayImage: fill value outside [0, 1]");
    }
  }

  GrayImage(std::size_t width, std::size_t height, std::vector<double> data)
      : width_(width), height_(height), data_(std::move(data)) {
    check_size();
    if (data_.size() != width_ * height_) {
      throw DomainError("GrayImage: data length " + std::to_string(data_.size()) +
                        " does not match " + std::to_string(width_) + "x" +
                        std::to_string(height_));
    }
    for (double v : data_) {
      if (!(v >= 0.0 && v <= 1.0)) {
        throw DomainError("GrayImage: intensity outside [0, 1]");
      }
    }
  }

  [[nodiscard]] std::size_t width() const noexcept { return width_; }
  [[nodiscard]] std::size_t height() const noexcept { return height_; }
  [[nodiscard]] std::size_t size() const noexcept { return data_.size(); }
  [[nodiscard]] std::span<const double> data() const noexcept { return data_; }
  [[nodiscard]] std::span<const double> row(std::size_t y) const noexcept {
    return std::span<const double>(data_).subspan(y * width_, width_);
  }

  [[nodiscard]] double operator()(std::size_t x, std::size_t y) const noexcept {
    return data_[y * width_ + x];
  }

  friend bool operator==(const GrayImage&, const GrayImage&) = default;

 private:
  void check_size() const {
    if (width_ == 0 || height_ == 0) {
      throw DomainError("GrayImage: width and height must be >= 1");
    }
  }

  std::size_t width_;
  std::size_t height_;
  std::vector<double> data_;
};

/// Builds an image pixel by pixel from `fn(x, y)`; values are clamped to [0, 1].
template <typename Fn>
[[nodiscard]] GrayImage make_image(std::size_t width, std::size_t height, Fn&& fn) {
  std::vector<double> data(width * height);
  for (std::size_t y = 0; y < height; ++y) {
    for (std::size_t x = 0; x < width; ++x) {
      const double v = static_cast<double>(fn(x, y));
      data[y * width + x] = v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v);
    }
  }
  return GrayImage(width, height, std::move(data));
}

/// c * img for c in [0, 1].
[[nodiscard]] inline GrayImage scaled(const GrayImage& img, double c) {
  if (!(c >= 0.0 && c <= 1.0)) {
    throw DomainError("scaled: factor must lie in [0, 1]");
  }
  std::vector<double> data(img.data().begin(), img.data().end());
  for (double& v : data) v *= c;
  return GrayImage(img.width(), img.height(), std::move(data));
}

[[nodiscard]] inline GrayImage transpose(const GrayImage& img) {
  std::vector<double> data(img.size());
  for (std::size_t y = 0; y < img.height(); ++y) {
    for (std::size_t x = 0; x < img.width(); ++x) {
      data[x * img.height() + y] = img(x, y);
    }
  }
  return GrayImage(img.height(), img.width(), std::move(data));
}

/// Pixels >= level become 1, the rest 0.
[[nodiscard]] inline GrayImage threshold(const GrayImage& img, double level) {
  std::vector<double> data(img.data().begin(), img.data().end());
  for (double& v : data) v = v >= level ? 1.0 : 0.0;
  return GrayImage(img.width(), img.height(), std::move(data));
}

}  // namespace fhtskew

#endif  // FHTSKEW_GRAY_IMAGE_HPP
