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

#ifndef FHTSKEW_IMAGE_IO_HPP
#define FHTSKEW_IMAGE_IO_HPP

#include <png.h>

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <span>
#include <string>
#include <vector>

#include "fhtskew/error.hpp"
#include "fhtskew/gray_image.hpp"

namespace fhtskew {

namespace detail {

inline std::string lower_extension(const std::filesystem::path& path) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  return ext;
}

inline std::vector<unsigned char> read_bytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("read failed for '" + path.string() + "'");
  return bytes;
}

inline constexpr std::array<unsigned char, 8> kPngSignature = {0x89, 'P', 'N', 'G',
                                                               '\r', '\n', 0x1a, '\n'};

inline bool has_png_signature(std::span<const unsigned char> bytes) {
  return bytes.size() >= kPngSignature.size() &&
         std::equal(kPngSignature.begin(), kPngSignature.end(), bytes.begin());
}

// Luma weights for RGB inputs.
inline double luma(unsigned r, unsigned g, unsigned b) {
  return (0.299 * r + 0.587 * g + 0.114 * b) / 255.0;
}

inline GrayImage decode_png(std::span<const unsigned char> bytes, const std::string& name) {
  // IHDR sits right after the signature: length(4) type(4) w(4) h(4) depth(1) color(1)
  if (bytes.size() < 26) throw FormatError("PNG '" + name + "': truncated header");
  const unsigned bit_depth = bytes[24];
  if (bit_depth > 8) {
    throw FormatError("PNG '" + name + "': " + std::to_string(bit_depth) +
                      "-bit PNG is not supported (8-bit only)");
  }

  png_image image{};
  image.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_memory(&image, bytes.data(), bytes.size())) {
    throw FormatError("PNG '" + name + "': " + image.message);
  }
  const bool color = (image.format & PNG_FORMAT_FLAG_COLOR) != 0;
  image.format = color ? PNG_FORMAT_RGB : PNG_FORMAT_GRAY;
  std::vector<unsigned char> pixels(PNG_IMAGE_SIZE(image));
  if (!png_image_finish_read(&image, nullptr, pixels.data(), 0, nullptr)) {
    const std::string msg = image.message;
    png_image_free(&image);
    throw FormatError("PNG '" + name + "': " + msg);
  }
  const std::size_t w = image.width;
  const std::size_t h = image.height;
  std::vector<double> data(w * h);
  if (color) {
    for (std::size_t i = 0; i < w * h; ++i) {
      data[i] = std::clamp(luma(pixels[3 * i], pixels[3 * i + 1], pixels[3 * i + 2]), 0.0, 1.0);
    }
  } else {
    for (std::size_t i = 0; i < w * h; ++i) data[i] = pixels[i] / 255.0;
  }
  return GrayImage(w, h, std::move(data));
}

// Netpbm header token reader; skips whitespace and '#' comments.
class PnmCursor {
 public:
  explicit PnmCursor(std::span<const unsigned char> bytes) : bytes_(bytes) {}

  unsigned long next_number(const std::string& name) {
    skip_space_and_comments();
    unsigned long value = 0;
    std::size_t digits = 0;
    while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
      value = value * 10 + (bytes_[pos_] - '0');
      ++pos_;
      ++digits;
      if (value > 1'000'000'000UL) throw FormatError("PGM '" + name + "': number too large");
    }
    if (digits == 0) throw FormatError("PGM '" + name + "': malformed header");
    return value;
  }

  // Exactly one whitespace byte separates the header from P5 raster data.
  void skip_single_space() { ++pos_; }
  [[nodiscard]] std::size_t position() const { return pos_; }

 private:
  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      if (std::isspace(bytes_[pos_])) {
        ++pos_;
      } else if (bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::span<const unsigned char> bytes_;
  std::size_t pos_ = 2;
};

inline GrayImage decode_pgm(std::span<const unsigned char> bytes, const std::string& name) {
  const bool ascii = bytes[1] == '2';
  PnmCursor cursor(bytes);
  const auto w = cursor.next_number(name);
  const auto h = cursor.next_number(name);
  const auto maxval = cursor.next_number(name);
  if (w == 0 || h == 0) throw FormatError("PGM '" + name + "': empty image");
  if (maxval == 0) throw FormatError("PGM '" + name + "': maxval must be positive");
  if (maxval > 255) {
    throw FormatError("PGM '" + name + "': 16-bit PGM (maxval " + std::to_string(maxval) +
                      ") is not supported (8-bit only)");
  }
  const std::size_t count = static_cast<std::size_t>(w) * h;
  std::vector<double> data(count);
  const double scale = 1.0 / static_cast<double>(maxval);
  if (ascii) {
    for (std::size_t i = 0; i < count; ++i) {
      const auto v = cursor.next_number(name);
      if (v > maxval) throw FormatError("PGM '" + name + "': sample exceeds maxval");
      data[i] = static_cast<double>(v) * scale;
    }
  } else {
    cursor.skip_single_space();
    const std::size_t offset = cursor.position();
    if (bytes.size() < offset + count) throw FormatError("PGM '" + name + "': truncated raster");
    for (std::size_t i = 0; i < count; ++i) {
      const unsigned v = bytes[offset + i];
      if (v > maxval) throw FormatError("PGM '" + name + "': sample exceeds maxval");
      data[i] = static_cast<double>(v) * scale;
    }
  }
  return GrayImage(w, h, std::move(data));
}

inline std::uint8_t to_byte(double v) {
  return static_cast<std::uint8_t>(std::lround(std::clamp(v, 0.0, 1.0) * 255.0));
}

inline void write_bytes(const std::filesystem::path& path, std::span<const unsigned char> header,
                        std::span<const unsigned char> body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out.write(reinterpret_cast<const char*>(header.data()), static_cast<std::streamsize>(header.size()));
  out.write(reinterpret_cast<const char*>(body.data()), static_cast<std::streamsize>(body.size()));
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

}  // namespace detail

/// Reads an 8-bit PNG or a PGM (P2/P5). RGB is reduced to luma; values end up in [0, 1].
[[nodiscard]] inline GrayImage load_image(const std::filesystem::path& path) {
  const auto bytes = detail::read_bytes(path);
  const std::string name = path.string();
  if (detail::has_png_signature(bytes)) return detail::decode_png(bytes, name);
  if (bytes.size() >= 2 && bytes[0] == 'P') {
    if (bytes[1] == '2' || bytes[1] == '5') return detail::decode_pgm(bytes, name);
    throw FormatError("'" + name + "': Netpbm type P" + std::string(1, static_cast<char>(bytes[1])) +
                      " is not supported (PGM P2/P5 only)");
  }
  throw FormatError("'" + name + "': unrecognized image format (expected PNG or PGM)");
}

inline void save_pgm(const GrayImage& img, const std::filesystem::path& path) {
  const std::string header =
      "P5\n" + std::to_string(img.width()) + " " + std::to_string(img.height()) + "\n255\n";
  std::vector<unsigned char> body(img.size());
  std::transform(img.data().begin(), img.data().end(), body.begin(), detail::to_byte);
  detail::write_bytes(path, std::span(reinterpret_cast<const unsigned char*>(header.data()), header.size()),
                      body);
}

inline void save_png(const GrayImage& img, const std::filesystem::path& path) {
  std::vector<unsigned char> body(img.size());
  std::transform(img.data().begin(), img.data().end(), body.begin(), detail::to_byte);
  png_image image{};
  image.version = PNG_IMAGE_VERSION;
  image.width = static_cast<png_uint_32>(img.width());
  image.height = static_cast<png_uint_32>(img.height());
  image.format = PNG_FORMAT_GRAY;
  if (!png_image_write_to_file(&image, path.string().c_str(), 0, body.data(), 0, nullptr)) {
    throw IoError("PNG write '" + path.string() + "': " + image.message);
  }
}

/// Writes PNG for ".png", PGM (P5) for ".pgm"; anything else is a format error.
inline void save_image(const GrayImage& img, const std::filesystem::path& path) {
  const std::string ext = detail::lower_extension(path);
  if (ext == ".png") {
    save_png(img, path);
  } else if (ext == ".pgm") {
    save_pgm(img, path);
  } else {
    throw FormatError("'" + path.string() + "': output extension must be .png or .pgm");
  }
}

/// 16-bit binary PGM (maxval 65535, big-endian samples).
inline void save_pgm16(std::span<const std::uint16_t> samples, std::size_t width, std::size_t height,
                       const std::filesystem::path& path) {
  if (samples.size() != width * height) throw DomainError("save_pgm16: size mismatch");
  const std::string header =
      "P5\n" + std::to_string(width) + " " + std::to_string(height) + "\n65535\n";
  std::vector<unsigned char> body(samples.size() * 2);
  for (std::size_t i = 0; i < samples.size(); ++i) {
    body[2 * i] = static_cast<unsigned char>(samples[i] >> 8);
    body[2 * i + 1] = static_cast<unsigned char>(samples[i] & 0xff);
  }
  detail::write_bytes(path, std::span(reinterpret_cast<const unsigned char*>(header.data()), header.size()),
                      body);
}

}  // namespace fhtskew

#endif  // FHTSKEW_IMAGE_IO_HPP
