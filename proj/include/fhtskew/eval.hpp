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

#ifndef FHTSKEW_EVAL_HPP
#define FHTSKEW_EVAL_HPP

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "fhtskew/error.hpp"

namespace fhtskew {

inline constexpr double kDefaultThreshold = 0.1;

/// One evaluated sample.
struct SampleRecord {
  std::string filename;
  std::string group_id;
  double gt_angle = 0.0;
  double est_angle = 0.0;
  double error = 0.0;  ///< |est_angle - gt_angle|
};

[[nodiscard]] inline SampleRecord make_record(std::string filename, std::string group_id, double gt_angle,
                                              double est_angle) {
  return SampleRecord{std::move(filename), std::move(group_id), gt_angle, est_angle,
                      std::abs(est_angle - gt_angle)};
}

struct GroupStats {
  std::string group_id;
  std::size_t count = 0;
  double aed = 0.0;
  double top80 = 0.0;
  double ce = 0.0;
  double max = 0.0;
  double min = 0.0;
  double range = 0.0;
};

struct DegreeBin {
  int degree_bin = 0;  ///< floor(gt_angle)
  double aed = 0.0;
  std::size_t count = 0;
};

struct EvalReport {
  double aed = 0.0;
  double top80 = 0.0;
  double ce = 0.0;  ///< percent
  double max_error = 0.0;
  double threshold = kDefaultThreshold;
  std::vector<GroupStats> per_group;
  std::vector<DegreeBin> per_bin;
};

namespace detail {

struct ErrorSummary {
  double aed, top80, ce, max, min;
};

// Mean, mean of the floor(0.8 N) smallest (at least one), percent <= threshold.
inline ErrorSummary summarize(std::vector<double> errors, double threshold) {
  std::sort(errors.begin(), errors.end());
  const std::size_t n = errors.size();
  const std::size_t top = std::max<std::size_t>(1, n * 8 / 10);
  const double total = std::accumulate(errors.begin(), errors.end(), 0.0);
  const double top_total = std::accumulate(errors.begin(), errors.begin() + static_cast<std::ptrdiff_t>(top), 0.0);
  const auto correct = static_cast<std::size_t>(
      std::upper_bound(errors.begin(), errors.end(), threshold) - errors.begin());
  return ErrorSummary{total / static_cast<double>(n), top_total / static_cast<double>(top),
                      100.0 * static_cast<double>(correct) / static_cast<double>(n), errors.back(),
                      errors.front()};
}

// Numeric ids compare as numbers, anything else lexicographically.
inline bool group_id_less(const std::string& a, const std::string& b) {
  const auto numeric = [](const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
  };
  if (numeric(a) && numeric(b) && a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace detail

/// Per-source-image statistics, worst (highest AED) first; equal AED ordered by group id.
[[nodiscard]] inline std::vector<GroupStats> group_stats(const std::vector<SampleRecord>& records,
                                                         double threshold = kDefaultThreshold) {
  std::map<std::string, std::vector<double>> groups;
  for (const auto& r : records) groups[r.group_id].push_back(r.error);
  std::vector<GroupStats> out;
  out.reserve(groups.size());
  for (auto& [id, errors] : groups) {
    const std::size_t count = errors.size();
    const auto s = detail::summarize(std::move(errors), threshold);
    out.push_back(GroupStats{id, count, s.aed, s.top80, s.ce, s.max, s.min, s.max - s.min});
  }
  std::sort(out.begin(), out.end(), [](const GroupStats& a, const GroupStats& b) {
    if (a.aed != b.aed) return a.aed > b.aed;
    return detail::group_id_less(a.group_id, b.group_id);
  });
  return out;
}

/// AED per one-degree bin of the ground-truth angle; empty bins omitted.
[[nodiscard]] inline std::vector<DegreeBin> bin_by_degree(const std::vector<SampleRecord>& records) {
  std::map<int, std::pair<double, std::size_t>> bins;
  for (const auto& r : records) {
    auto& [sum, count] = bins[static_cast<int>(std::floor(r.gt_angle))];
    sum += r.error;
    ++count;
  }
  std::vector<DegreeBin> out;
  for (const auto& [key, acc] : bins) {
    out.push_back(DegreeBin{key, acc.first / static_cast<double>(acc.second), acc.second});
  }
  return out;
}

/// AED, TOP80, CE and max error over all records, plus group and degree breakdowns.
[[nodiscard]] inline EvalReport compute_metrics(const std::vector<SampleRecord>& records,
                                                double threshold = kDefaultThreshold) {
  if (records.empty()) throw DomainError("compute_metrics: no records");
  if (!(threshold > 0.0)) throw DomainError("compute_metrics: threshold must be positive");
  std::vector<double> errors;
  errors.reserve(records.size());
  for (const auto& r : records) errors.push_back(r.error);
  const auto s = detail::summarize(std::move(errors), threshold);
  return EvalReport{s.aed, s.top80, s.ce, s.max, threshold, group_stats(records, threshold), bin_by_degree(records)};
}

/// Manifest line: `filename,group_id,gt_angle_deg`.
struct ManifestEntry {
  std::string filename;
  std::string group_id;
  double gt_angle = 0.0;
};

namespace detail {

inline std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

}  // namespace detail

/// Parses manifest text; blank lines and lines starting with '#' are skipped.
[[nodiscard]] inline std::vector<ManifestEntry> parse_manifest(std::istream& in, const std::string& name = "manifest") {
  std::vector<ManifestEntry> entries;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string body = detail::trim(line);
    if (body.empty() || body.front() == '#') continue;
    std::vector<std::string> fields;
    std::stringstream ss(body);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(detail::trim(field));
    const std::string where = name + ":" + std::to_string(line_no);
    if (fields.size() != 3 || fields[0].empty() || fields[1].empty()) {
      throw FormatError(where + ": expected 'filename,group_id,gt_angle_deg'");
    }
    std::size_t used = 0;
    double angle = 0.0;
    try {
      angle = std::stod(fields[2], &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != fields[2].size() || !std::isfinite(angle)) {
      throw FormatError(where + ": '" + fields[2] + "' is not a decimal angle");
    }
    entries.push_back(ManifestEntry{fields[0], fields[1], angle});
  }
  return entries;
}

[[nodiscard]] inline std::vector<ManifestEntry> read_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open manifest '" + path.string() + "'");
  return parse_manifest(in, path.string());
}

namespace detail {

// At least 6 significant digits, trailing zeros kept, valid JSON.
inline std::string json_number(double v) {
  if (!std::isfinite(v)) throw DomainError("report: non-finite number");
  if (v == 0.0) return "0.00000000";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%#.9g", v);
  std::string s(buf);
  if (s.back() == '.') s += '0';  // "%#g" can leave a bare trailing point
  return s;
}

inline std::string json_string(const std::string& s) {
  std::string out = "\"";
  for (const char ch : s) {
    const auto c = static_cast<unsigned char>(ch);
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (c < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  return out + "\"";
}

}  // namespace detail

/// JSON report. Records, when given, are listed in the order supplied.
[[nodiscard]] inline std::string report_to_json(const EvalReport& report,
                                                const std::vector<SampleRecord>& records = {}) {
  using detail::json_number;
  using detail::json_string;
  std::ostringstream out;
  out << "{\n";
  out << "  \"top80_rule\": \"mean of the floor(0.8*N) smallest errors, at least one\",\n";
  out << "  \"aed\": " << json_number(report.aed) << ",\n";
  out << "  \"top80\": " << json_number(report.top80) << ",\n";
  out << "  \"ce\": " << json_number(report.ce) << ",\n";
  out << "  \"max_error\": " << json_number(report.max_error) << ",\n";
  out << "  \"threshold\": " << json_number(report.threshold) << ",\n";
  out << "  \"count\": " << records.size() << ",\n";
  out << "  \"per_group\": [";
  for (std::size_t i = 0; i < report.per_group.size(); ++i) {
    const auto& g = report.per_group[i];
    out << (i ? ",\n" : "\n") << "    {\"group_id\": " << json_string(g.group_id) << ", \"count\": " << g.count
        << ", \"aed\": " << json_number(g.aed) << ", \"top80\": " << json_number(g.top80)
        << ", \"ce\": " << json_number(g.ce) << ", \"max\": " << json_number(g.max)
        << ", \"min\": " << json_number(g.min) << ", \"range\": " << json_number(g.range) << "}";
  }
  out << (report.per_group.empty() ? "],\n" : "\n  ],\n");
  out << "  \"per_bin\": [";
  for (std::size_t i = 0; i < report.per_bin.size(); ++i) {
    const auto& b = report.per_bin[i];
    out << (i ? ",\n" : "\n") << "    {\"degree_bin\": " << b.degree_bin << ", \"aed\": " << json_number(b.aed)
        << ", \"count\": " << b.count << "}";
  }
  out << (report.per_bin.empty() ? "],\n" : "\n  ],\n");
  out << "  \"records\": [";
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    out << (i ? ",\n" : "\n") << "    {\"filename\": " << json_string(r.filename)
        << ", \"group_id\": " << json_string(r.group_id) << ", \"gt_angle\": " << json_number(r.gt_angle)
        << ", \"est_angle\": " << json_number(r.est_angle) << ", \"error\": " << json_number(r.error) << "}";
  }
  out << (records.empty() ? "]\n" : "\n  ]\n");
  out << "}\n";
  return out.str();
}

}  // namespace fhtskew

#endif  // FHTSKEW_EVAL_HPP
