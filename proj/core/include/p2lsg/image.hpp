#pragma once

// 8-bit raster frames. Pixels are row-major; RGB pixels are interleaved.

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace p2lsg {

struct GrayImage {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<std::uint8_t> pixels;

  GrayImage() = default;
  /// Throws DomainError for a zero dimension.
  GrayImage(std::size_t w, std::size_t h, std::uint8_t fill = 0);

  bool empty() const noexcept { return pixels.empty(); }
  std::uint8_t at(std::size_t x, std::size_t y) const noexcept { return pixels[y * width + x]; }
  std::uint8_t& at(std::size_t x, std::size_t y) noexcept { return pixels[y * width + x]; }

  bool operator==(const GrayImage&) const = default;
};

struct RgbImage {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<std::uint8_t> pixels;  // 3 samples per pixel

  RgbImage() = default;
  RgbImage(std::size_t w, std::size_t h, std::array<std::uint8_t, 3> fill = {0, 0, 0});

  bool empty() const noexcept { return pixels.empty(); }
  std::uint8_t at(std::size_t x, std::size_t y, int c) const noexcept { return pixels[3 * (y * width + x) + c]; }
  std::uint8_t& at(std::size_t x, std::size_t y, int c) noexcept { return pixels[3 * (y * width + x) + c]; }

  bool operator==(const RgbImage&) const = default;
};

/// Foreground coverage: 0 shows the background, 255 the foreground.
struct AlphaMap {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<std::uint8_t> alpha;

  AlphaMap() = default;
  AlphaMap(std::size_t w, std::size_t h, std::uint8_t fill = 255);

  std::uint8_t at(std::size_t x, std::size_t y) const noexcept { return alpha[y * width + x]; }
  std::uint8_t& at(std::size_t x, std::size_t y) noexcept { return alpha[y * width + x]; }

  bool operator==(const AlphaMap&) const = default;
};

std::array<GrayImage, 3> split_planes(const RgbImage& image);
/// Throws DomainError when the planes differ in size.
RgbImage merge_planes(const std::array<GrayImage, 3>& planes);

AlphaMap alpha_from_gray(const GrayImage& image);
GrayImage gray_from_alpha(const AlphaMap& alpha);

}  // namespace p2lsg
