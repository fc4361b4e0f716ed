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

#ifndef FHTSKEW_TIMING_HPP
#define FHTSKEW_TIMING_HPP

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <vector>

#include "fhtskew/error.hpp"
#include "fhtskew/fht.hpp"
#include "fhtskew/raster.hpp"
#include "fhtskew/synth.hpp"

namespace fhtskew {

struct TimingReport {
  std::size_t image_side = 0;
  std::size_t projections = 0;
  double fht_micros = 0.0;  ///< median over repeats, all four passes
  double drt_micros = 0.0;  ///< median over repeats, all projections
  double speedup = 0.0;     ///< drt_micros / fht_micros
};

/// Angles (degrees) of the line families the four FHT passes cover on an
/// n x n image: 2n-1 mostly-horizontal tangents k/(n-1) and 2n-2
/// mostly-vertical ones (the +-45 degree diagonal is shared).
[[nodiscard]] inline std::vector<double> fht_projection_angles(std::size_t n) {
  const auto steps = static_cast<double>(n - 1);
  const auto last = static_cast<long>(n) - 1;
  std::vector<double> angles;
  angles.reserve(4 * n - 3);
  for (long k = -last; k <= last; ++k) angles.push_back(radians_to_degrees(std::atan(k / steps)));
  for (long k = -last + 1; k <= last; ++k) angles.push_back(90.0 + radians_to_degrees(std::atan(k / steps)));
  return angles;
}

namespace detail {

inline double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

template <typename Fn>
double time_micros(Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  fn();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::micro>(stop - start).count();
}

}  // namespace detail

/// Median wall time of the four FHT passes against rotate-and-project DRT
/// at the same number of angles, on the horizontal derivative of a synthetic page.
/// Runs on the calling thread only.
[[nodiscard]] inline TimingReport time_transforms(std::size_t side, std::size_t repeats) {
  if (side < 256 || !is_power_of_two(side)) throw DomainError("time_transforms: side must be a power of two >= 256");
  if (repeats < 3) throw DomainError("time_transforms: repeats must be >= 3");
  const GrayImage input = horizontal_derivative(synth_document(side, 5.0, 1).image);
  const std::vector<double> angles = fht_projection_angles(side);

  double sink = 0.0;
  FhtWorkspace workspace;
  const auto run_fht = [&] {
    for (const auto o : {Orientation::MostlyHorizontal, Orientation::MostlyVertical}) {
      for (const auto s : {SlopeSign::Positive, SlopeSign::Negative}) {
        sink += fht_cells(input, o, s, workspace)[0];
      }
    }
  };
  // untimed warm-up so the first repeat does not pay for fresh pages
  run_fht();
  sink += drt_projection(input, angles.front())[side / 2];
  std::vector<double> fht_times;
  std::vector<double> drt_times;
  for (std::size_t r = 0; r < repeats; ++r) {
    fht_times.push_back(detail::time_micros(run_fht));
    drt_times.push_back(detail::time_micros([&] {
      for (const double a : angles) sink += drt_projection(input, a)[side / 2];
    }));
  }
  // keeps the work observable
  if (!std::isfinite(sink)) throw DomainError("time_transforms: non-finite checksum");

  TimingReport report;
  report.image_side = side;
  report.projections = angles.size();
  report.fht_micros = detail::median(fht_times);
  report.drt_micros = detail::median(drt_times);
  report.speedup = report.drt_micros / report.fht_micros;
  return report;
}

}  // namespace fhtskew

#endif  // FHTSKEW_TIMING_HPP
