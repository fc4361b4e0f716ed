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

#ifndef FHTSKEW_EXPORT_HPP
#define FHTSKEW_EXPORT_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include "fhtskew/criterion.hpp"
#include "fhtskew/error.hpp"
#include "fhtskew/eval.hpp"
#include "fhtskew/fht.hpp"
#include "fhtskew/image_io.hpp"

namespace fhtskew {

/// Writes the accumulator as a 16-bit PGM (rows = shifts, columns = offsets),
/// scaled so the largest cell maps to 65535, plus `<path>.scale` holding one
/// line `max_cell <value>`; a sample v decodes to v / 65535 * max_cell.
inline void save_accumulator(const HoughAccumulator& acc, const std::filesystem::path& path) {
  const auto cells = acc.cells();
  const double max_cell = *std::max_element(cells.begin(), cells.end());
  std::vector<std::uint16_t> samples(cells.size(), 0);
  if (max_cell > 0.0) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      samples[i] = static_cast<std::uint16_t>(std::lround(cells[i] / max_cell * 65535.0));
    }
  }
  save_pgm16(samples, acc.n(), acc.n(), path);

  std::filesystem::path sidecar = path;
  sidecar += ".scale";
  std::ofstream out(sidecar);
  if (!out) throw IoError("cannot open '" + sidecar.string() + "' for writing");
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", max_cell);
  out << "max_cell " << buf << "\n";
  if (!out) throw IoError("write failed for '" + sidecar.string() + "'");
}

/// Two columns, `tangent value`, one line per grid entry.
inline void write_profile(const CriterionProfile& profile, std::ostream& out) {
  char buf[96];
  for (std::size_t i = 0; i < profile.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.9f %.9g\n", profile.tangents()[i], profile.values()[i]);
    out << buf;
  }
}

/// Two columns, `degree_bin aed`.
inline void write_bins(const std::vector<DegreeBin>& bins, std::ostream& out) {
  char buf[64];
  for (const auto& b : bins) {
    std::snprintf(buf, sizeof buf, "%d %.9g\n", b.degree_bin, b.aed);
    out << buf;
  }
}

}  // namespace fhtskew

#endif  // FHTSKEW_EXPORT_HPP
