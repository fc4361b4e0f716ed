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

#include "cli.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <iterator>
#include <sstream>

#include "json.hpp"
#include "test_util.hpp"

namespace fhtskew::cli {
namespace {

using fhtskew::testing::TempDir;

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int status = run(args, out, err);
  return {status, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

TEST(Cli, DetectBlankPrintsZero) {
  TempDir dir("cli");
  save_png(GrayImage(64, 64, 1.0), dir / "blank.png");
  const auto r = invoke({"detect", (dir / "blank.png").string()});
  EXPECT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(r.out, "0.000000\n");
}

TEST(Cli, DetectJsonIsOneObject) {
  TempDir dir("cli");
  save_png(synth_document(256, 4.0, 3).image, dir / "doc.png");
  const auto r = invoke({"detect", (dir / "doc.png").string(), "--json", "--max-angle", "10"});
  ASSERT_EQ(r.status, 0) << r.err;
  const auto json = nlohmann::json::parse(r.out);
  ASSERT_TRUE(json.is_object());
  EXPECT_NEAR(json["angle"].get<double>(), 4.0, 0.3);
  EXPECT_GT(json["peak_value"].get<double>(), 0.0);

  const auto plain = invoke({"detect", (dir / "doc.png").string(), "--no-vertical"});
  EXPECT_EQ(plain.status, 0);
  EXPECT_NEAR(std::stod(plain.out), 4.0, 0.3);
}

TEST(Cli, UsageErrorsExitTwo) {
  const auto unknown = invoke({"detect", "x.png", "--bogus"});
  EXPECT_EQ(unknown.status, 2);
  EXPECT_NE(unknown.err.find("Usage"), std::string::npos) << unknown.err;
  EXPECT_EQ(invoke({}).status, 2);
  EXPECT_EQ(invoke({"frobnicate"}).status, 2);
  EXPECT_EQ(invoke({"fht-dump", "x.png", "--orientation", "d", "--sign", "+", "--out", "y"}).status, 2);
  EXPECT_EQ(invoke({"--help"}).status, 0);
}

TEST(Cli, DomainAndFormatErrorsExitOne) {
  TempDir dir("cli");
  EXPECT_EQ(invoke({"detect", (dir / "missing.png").string()}).status, 1);
  save_png(GrayImage(4, 4, 1.0), dir / "tiny.png");
  const auto tiny = invoke({"detect", (dir / "tiny.png").string()});
  EXPECT_EQ(tiny.status, 1);
  EXPECT_NE(tiny.err.find("error:"), std::string::npos);
  save_png(GrayImage(64, 64, 1.0), dir / "ok.png");
  EXPECT_EQ(invoke({"detect", (dir / "ok.png").string(), "--max-angle", "60"}).status, 1);
  EXPECT_EQ(invoke({"bench", "--size", "100"}).status, 1);
}

TEST(Cli, DeskewWithAndWithoutAngle) {
  TempDir dir("cli");
  save_png(synth_document(256, 5.0, 4).image, dir / "in.png");
  const auto known = invoke({"deskew", (dir / "in.png").string(), (dir / "out.pgm").string(), "--angle", "5"});
  ASSERT_EQ(known.status, 0) << known.err;
  EXPECT_EQ(known.out, "5.000000\n");
  EXPECT_NEAR(detect_skew(load_image(dir / "out.pgm")).angle, 0.0, 0.3);

  const auto detected = invoke({"deskew", (dir / "in.png").string(), (dir / "out.png").string()});
  ASSERT_EQ(detected.status, 0) << detected.err;
  EXPECT_NEAR(std::stod(detected.out), 5.0, 0.3);
}

TEST(Cli, SynthEvaluateRoundTripIsReproducible) {
  TempDir dir("cli");
  const auto synth = invoke({"synth", "--out", (dir / "set").string(), "--count", "6", "--size", "256",
                             "--max-angle", "10", "--seed", "5", "--group-size", "3"});
  ASSERT_EQ(synth.status, 0) << synth.err;
  const auto manifest = read_manifest(dir / "set" / "manifest.csv");
  ASSERT_EQ(manifest.size(), 6u);
  EXPECT_EQ(manifest[0].filename, "synth_00000.png");
  EXPECT_EQ(manifest[2].group_id, "0");
  EXPECT_EQ(manifest[3].group_id, "1");
  for (const auto& e : manifest) EXPECT_LE(std::abs(e.gt_angle), 10.0);

  const std::vector<std::string> eval = {"evaluate",  "--images",   (dir / "set").string(),
                                         "--manifest", (dir / "set" / "manifest.csv").string(),
                                         "--report",   (dir / "r1.json").string(),
                                         "--profiles", (dir / "profiles").string(),
                                         "--bins",     (dir / "bins.txt").string(),
                                         "--jobs",     "3"};
  ASSERT_EQ(invoke(eval).status, 0);
  auto again = eval;
  again[6] = (dir / "r2.json").string();
  again[12] = "1";
  ASSERT_EQ(invoke(again).status, 0);
  EXPECT_EQ(slurp(dir / "r1.json"), slurp(dir / "r2.json"));

  const auto json = nlohmann::json::parse(slurp(dir / "r1.json"));
  EXPECT_LE(json["aed"].get<double>(), 0.3);
  ASSERT_EQ(json["records"].size(), 6u);
  for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(json["records"][i]["filename"], manifest[i].filename);
  EXPECT_TRUE(std::filesystem::exists(dir / "profiles" / "synth_00000.png.profile.txt"));
  EXPECT_FALSE(slurp(dir / "bins.txt").empty());

  // a second synth run with the same seed writes identical bytes
  ASSERT_EQ(invoke({"synth", "--out", (dir / "set2").string(), "--count", "6", "--size", "256", "--max-angle",
                    "10", "--seed", "5", "--group-size", "3"})
                .status,
            0);
  EXPECT_EQ(slurp(dir / "set" / "synth_00004.png"), slurp(dir / "set2" / "synth_00004.png"));
  EXPECT_EQ(slurp(dir / "set" / "manifest.csv"), slurp(dir / "set2" / "manifest.csv"));
}

TEST(Cli, EvaluateReportsMissingImage) {
  TempDir dir("cli");
  std::ofstream(dir / "m.csv") << "nothere.png,1,2.0\n";
  const auto r = invoke({"evaluate", "--images", dir.path().string(), "--manifest", (dir / "m.csv").string()});
  EXPECT_EQ(r.status, 1);
}

TEST(Cli, FhtDumpWritesPgmAndScale) {
  TempDir dir("cli");
  save_png(synth_document(128, 2.0, 6).image, dir / "doc.png");
  const auto r = invoke({"fht-dump", (dir / "doc.png").string(), "--orientation", "h", "--sign", "-", "--out",
                         (dir / "acc.pgm").string()});
  ASSERT_EQ(r.status, 0) << r.err;
  const std::string pgm = slurp(dir / "acc.pgm");
  EXPECT_EQ(pgm.substr(0, 17), "P5\n128 128\n65535\n");
  EXPECT_EQ(pgm.size(), 17u + 128 * 128 * 2);
  const std::string scale = slurp(dir / "acc.pgm.scale");
  EXPECT_EQ(scale.rfind("max_cell ", 0), 0u);
  EXPECT_GT(std::stod(scale.substr(9)), 0.0);
}

TEST(Cli, BenchPrintsReport) {
  const auto r = invoke({"bench", "--size", "256", "--repeats", "3"});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_NE(r.out.find("projections  1021"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("speedup"), std::string::npos);
}

}  // namespace
}  // namespace fhtskew::cli
