#pragma once

// Binary PNM rasters: P5 (gray) and P6 (RGB), maxval 255. Header comments
// are skipped on read and never written.

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include "p2lsg/image.hpp"

namespace p2lsg {

using PnmImage = std::variant<GrayImage, RgbImage>;

/// Throws ParseError (with the byte offset) on a bad magic, a maxval other
/// than 255, or a truncated body.
PnmImage read_pnm(std::string_view bytes);

std::string write_pnm(const GrayImage& image);
std::string write_pnm(const RgbImage& image);

/// File wrappers. IoError when the file cannot be opened or written.
PnmImage read_pnm_file(const std::filesystem::path& path);
/// ParseError when the file holds the other kind of raster.
GrayImage read_pgm_file(const std::filesystem::path& path);
RgbImage read_ppm_file(const std::filesystem::path& path);
void write_pnm_file(const std::filesystem::path& path, const GrayImage& image);
void write_pnm_file(const std::filesystem::path& path, const RgbImage& image);

}  // namespace p2lsg
