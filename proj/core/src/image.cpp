#include "p2lsg/image.hpp"

#include <string>

#include "p2lsg/errors.hpp"

namespace p2lsg {

namespace {

void require_dims(std::size_t w, std::size_t h) {
  if (w == 0 || h == 0) throw DomainError("image dimensions must be positive");
}

}  // namespace

GrayImage::GrayImage(std::size_t w, std::size_t h, std::uint8_t fill) : width(w), height(h) {
  require_dims(w, h);
  pixels.assign(w * h, fill);
}

RgbImage::RgbImage(std::size_t w, std::size_t h, std::array<std::uint8_t, 3> fill) : width(w), height(h) {
  require_dims(w, h);
  pixels.resize(3 * w * h);
  for (std::size_t i = 0; i < w * h; ++i) {
    for (int c = 0; c < 3; ++c) pixels[3 * i + c] = fill[c];
  }
}

AlphaMap::AlphaMap(std::size_t w, std::size_t h, std::uint8_t fill) : width(w), height(h) {
  require_dims(w, h);
  alpha.assign(w * h, fill);
}

std::array<GrayImage, 3> split_planes(const RgbImage& image) {
  std::array<GrayImage, 3> planes;
  for (int c = 0; c < 3; ++c) {
    planes[c].width = image.width;
    planes[c].height = image.height;
    planes[c].pixels.resize(image.width * image.height);
    for (std::size_t i = 0; i < planes[c].pixels.size(); ++i) planes[c].pixels[i] = image.pixels[3 * i + c];
  }
  return planes;
}

RgbImage merge_planes(const std::array<GrayImage, 3>& planes) {
  for (const auto& p : planes) {
    if (p.width != planes[0].width || p.height != planes[0].height) {
      throw DomainError("colour planes differ in size");
    }
  }
  RgbImage out;
  out.width = planes[0].width;
  out.height = planes[0].height;
  out.pixels.resize(3 * planes[0].pixels.size());
  for (int c = 0; c < 3; ++c) {
    for (std::size_t i = 0; i < planes[c].pixels.size(); ++i) out.pixels[3 * i + c] = planes[c].pixels[i];
  }
  return out;
}

AlphaMap alpha_from_gray(const GrayImage& image) {
  AlphaMap a;
  a.width = image.width;
  a.height = image.height;
  a.alpha = image.pixels;
  return a;
}

GrayImage gray_from_alpha(const AlphaMap& alpha) {
  GrayImage g;
  g.width = alpha.width;
  g.height = alpha.height;
  g.pixels = alpha.alpha;
  return g;
}

}  // namespace p2lsg
