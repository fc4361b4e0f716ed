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

#ifndef FHTSKEW_TOOLS_CLI_HPP
#define FHTSKEW_TOOLS_CLI_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "fhtskew/fhtskew.hpp"

namespace fhtskew::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

namespace detail {

inline std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

// splitmix64 step, used to derive per-document seeds from --seed.
inline std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct DetectOptions {
  std::string image;
  double max_angle = 15.0;
  bool no_vertical = false;
  bool json = false;
};

struct DeskewOptions {
  std::string input;
  std::string output;
  std::optional<double> angle;
};

struct EvaluateOptions {
  std::string images;
  std::string manifest;
  double threshold = kDefaultThreshold;
  std::string report;
  std::string profiles;
  std::string bins;
  unsigned jobs = 0;
};

struct SynthOptions {
  std::string out;
  std::size_t count = 100;
  std::size_t size = 512;
  double max_angle = 15.0;
  std::uint64_t seed = 0;
  std::size_t group_size = 10;
};

struct BenchOptions {
  std::size_t size = 1024;
  std::size_t repeats = 9;
};

struct DumpOptions {
  std::string image;
  std::string orientation;
  std::string sign;
  std::string out;
  bool raw = false;
};

inline int run_detect(const DetectOptions& o, std::ostream& out) {
  DetectorConfig cfg;
  cfg.max_angle = o.max_angle;
  cfg.use_vertical = !o.no_vertical;
  const SkewEstimate est = detect_skew(load_image(o.image), cfg);
  if (o.json) {
    out << "{\"angle\": " << fixed6(est.angle) << ", \"peak_value\": " << fhtskew::detail::json_number(est.peak_value)
        << "}\n";
  } else {
    out << fixed6(est.angle) << "\n";
  }
  return kExitOk;
}

inline int run_deskew(const DeskewOptions& o, std::ostream& out) {
  const GrayImage img = load_image(o.input);
  const double angle = o.angle ? *o.angle : detect_skew(img).angle;
  save_image(deskew(img, angle), o.output);
  out << fixed6(angle) << "\n";
  return kExitOk;
}

inline int run_evaluate(const EvaluateOptions& o, std::ostream& out) {
  if (!(o.threshold > 0.0)) throw DomainError("--threshold must be positive");
  const auto entries = read_manifest(o.manifest);
  if (entries.empty()) throw DomainError("manifest '" + o.manifest + "' has no records");
  if (!o.profiles.empty()) std::filesystem::create_directories(o.profiles);

  const std::filesystem::path image_dir = o.images;
  std::vector<std::optional<SampleRecord>> slots(entries.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  const auto worker = [&] {
    for (std::size_t i = next++; i < entries.size(); i = next++) {
      try {
        const auto& e = entries[i];
        const SkewEstimate est = detect_skew(load_image(image_dir / e.filename));
        if (!o.profiles.empty()) {
          const auto path = std::filesystem::path(o.profiles) /
                            (std::filesystem::path(e.filename).filename().string() + ".profile.txt");
          std::ofstream pf(path);
          if (!pf) throw IoError("cannot open '" + path.string() + "' for writing");
          write_profile(est.profile, pf);
        }
        slots[i] = make_record(e.filename, e.group_id, e.gt_angle, est.angle);
      } catch (...) {
        const std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = entries.size();
      }
    }
  };
  unsigned jobs = o.jobs != 0 ? o.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, entries.size()));
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  std::vector<SampleRecord> records;
  records.reserve(slots.size());
  for (auto& s : slots) records.push_back(std::move(*s));
  const EvalReport report = compute_metrics(records, o.threshold);
  const std::string json = report_to_json(report, records);
  if (o.report.empty()) {
    out << json;
  } else {
    std::ofstream rf(o.report, std::ios::binary);
    if (!rf) throw IoError("cannot open '" + o.report + "' for writing");
    rf << json;
    out << "aed " << fixed6(report.aed) << "  top80 " << fixed6(report.top80) << "  ce " << fixed6(report.ce)
        << "  max " << fixed6(report.max_error) << "\n";
  }
  if (!o.bins.empty()) {
    std::ofstream bf(o.bins);
    if (!bf) throw IoError("cannot open '" + o.bins + "' for writing");
    write_bins(report.per_bin, bf);
  }
  return kExitOk;
}

inline int run_synth(const SynthOptions& o, std::ostream& out) {
  if (o.count == 0) throw DomainError("--count must be positive");
  if (o.group_size == 0) throw DomainError("--group-size must be positive");
  if (!(o.max_angle >= 0.0 && o.max_angle <= 20.0)) throw DomainError("--max-angle must lie in [0, 20]");
  const std::filesystem::path dir = o.out;
  std::filesystem::create_directories(dir);
  std::ofstream manifest(dir / "manifest.csv");
  if (!manifest) throw IoError("cannot write manifest in '" + o.out + "'");
  manifest << "# filename,group_id,gt_angle_deg\n";

  std::mt19937_64 angle_rng(mix_seed(o.seed));
  for (std::size_t i = 0; i < o.count; ++i) {
    const std::size_t group = i / o.group_size;
    const double u = static_cast<double>(angle_rng() >> 11) * 0x1.0p-53;
    // round so the manifest value is exactly the rendered angle
    const double angle = std::stod(fixed6(o.max_angle * (2.0 * u - 1.0)));
    const auto doc = synth_document(o.size, angle, mix_seed(o.seed ^ mix_seed(group + 1)));
    char name[32];
    std::snprintf(name, sizeof name, "synth_%05zu.png", i);
    save_png(doc.image, dir / name);
    manifest << name << "," << group << "," << fixed6(angle) << "\n";
  }
  if (!manifest) throw IoError("write failed for manifest in '" + o.out + "'");
  out << "wrote " << o.count << " images and manifest.csv to " << o.out << "\n";
  return kExitOk;
}

inline int run_bench(const BenchOptions& o, std::ostream& out) {
  const TimingReport r = time_transforms(o.size, o.repeats);
  out << "image_side   " << r.image_side << "\n"
      << "projections  " << r.projections << "\n"
      << "fht_micros   " << fixed6(r.fht_micros) << "\n"
      << "drt_micros   " << fixed6(r.drt_micros) << "\n"
      << "speedup      " << fixed6(r.speedup) << "\n";
  return kExitOk;
}

inline int run_dump(const DumpOptions& o, std::ostream& out) {
  const Orientation orientation = o.orientation == "h" ? Orientation::MostlyHorizontal : Orientation::MostlyVertical;
  const SlopeSign sign = o.sign == "+" ? SlopeSign::Positive : SlopeSign::Negative;
  const GrayImage img = load_image(o.image);
  GrayImage source = img;
  if (!o.raw) {
    source = orientation == Orientation::MostlyHorizontal ? horizontal_derivative(img) : vertical_derivative(img);
  }
  const HoughAccumulator acc = fht(pad_to_dyadic(source), orientation, sign);
  save_accumulator(acc, o.out);
  out << "wrote " << acc.n() << "x" << acc.n() << " accumulator to " << o.out << "\n";
  return kExitOk;
}

}  // namespace detail

/// Runs one CLI invocation. `args` excludes the program name.
///
/// Exit status: 0 success, 1 domain/format/I-O error, 2 usage error.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Document skew detection with the fast Hough transform", "fhtskew"};
  app.require_subcommand(1, 1);
  app.failure_message(CLI::FailureMessage::help);

  detail::DetectOptions detect;
  auto* detect_cmd = app.add_subcommand("detect", "Print the skew angle of an image in degrees");
  detect_cmd->add_option("image", detect.image, "PNG or PGM input")->required();
  detect_cmd->add_option("--max-angle", detect.max_angle, "Search window half-width in degrees (0, 45]");
  detect_cmd->add_flag("--no-vertical", detect.no_vertical, "Use the horizontal channel only");
  detect_cmd->add_flag("--json", detect.json, "Print {\"angle\", \"peak_value\"}");

  detail::DeskewOptions desk;
  auto* deskew_cmd = app.add_subcommand("deskew", "Write a skew-corrected copy of an image");
  deskew_cmd->add_option("input", desk.input, "PNG or PGM input")->required();
  deskew_cmd->add_option("output", desk.output, "Output path (.png or .pgm)")->required();
  deskew_cmd->add_option("--angle", desk.angle, "Known skew in degrees; detected when omitted");

  detail::EvaluateOptions eval;
  auto* eval_cmd = app.add_subcommand("evaluate", "Run detection over a manifest and report AED/TOP80/CE");
  eval_cmd->add_option("--images", eval.images, "Directory holding the manifest's images")->required();
  eval_cmd->add_option("--manifest", eval.manifest, "filename,group_id,gt_angle_deg per line")->required();
  eval_cmd->add_option("--threshold", eval.threshold, "CE threshold in degrees");
  eval_cmd->add_option("--report", eval.report, "Write the JSON report here instead of stdout");
  eval_cmd->add_option("--profiles", eval.profiles, "Directory for per-image criterion profiles");
  eval_cmd->add_option("--bins", eval.bins, "Write per-degree AED as two columns");
  eval_cmd->add_option("--jobs", eval.jobs, "Worker threads (default: hardware concurrency)");

  detail::SynthOptions synth;
  auto* synth_cmd = app.add_subcommand("synth", "Generate synthetic skewed pages with a manifest");
  synth_cmd->add_option("--out", synth.out, "Output directory")->required();
  synth_cmd->add_option("--count", synth.count, "Number of images");
  synth_cmd->add_option("--size", synth.size, "Side length in pixels");
  synth_cmd->add_option("--max-angle", synth.max_angle, "Angles drawn uniformly from +-max-angle");
  synth_cmd->add_option("--seed", synth.seed, "Random seed");
  synth_cmd->add_option("--group-size", synth.group_size, "Images rendered from one page layout");

  detail::BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time FHT against rotate-and-project DRT");
  bench_cmd->add_option("--size", bench.size, "Image side (power of two >= 256)");
  bench_cmd->add_option("--repeats", bench.repeats, "Repetitions (>= 3); medians are reported");

  detail::DumpOptions dump;
  auto* dump_cmd = app.add_subcommand("fht-dump", "Write one FHT accumulator as 16-bit PGM");
  dump_cmd->add_option("image", dump.image, "PNG or PGM input")->required();
  dump_cmd->add_option("--orientation", dump.orientation, "h or v")
      ->required()
      ->check(CLI::IsMember({"h", "v"}));
  dump_cmd->add_option("--sign", dump.sign, "+ or -")->required()->check(CLI::IsMember({"+", "-"}));
  dump_cmd->add_option("--out", dump.out, "Output .pgm path")->required();
  dump_cmd->add_flag("--raw", dump.raw, "Transform the image itself instead of its derivative");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*detect_cmd) return detail::run_detect(detect, out);
    if (*deskew_cmd) return detail::run_deskew(desk, out);
    if (*eval_cmd) return detail::run_evaluate(eval, out);
    if (*synth_cmd) return detail::run_synth(synth, out);
    if (*bench_cmd) return detail::run_bench(bench, out);
    if (*dump_cmd) return detail::run_dump(dump, out);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace fhtskew::cli

#endif  // FHTSKEW_TOOLS_CLI_HPP
