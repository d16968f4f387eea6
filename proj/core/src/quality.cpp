#include "p2lsg/quality.hpp"

#include <cmath>
#include <cstdint>
#include <vector>

#include "p2lsg/errors.hpp"

namespace p2lsg {

namespace {

template <class Image>
void require_same_size(const Image& a, const Image& b) {
  if (a.width != b.width || a.height != b.height) throw DomainError("images differ in size");
  if (a.empty()) throw DomainError("images are empty");
}

double psnr_samples(const std::vector<std::uint8_t>& a, const std::vector<std::uint8_t>& b, double max_value) {
  std::uint64_t sse = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::int64_t d = static_cast<std::int64_t>(a[i]) - b[i];
    sse += static_cast<std::uint64_t>(d * d);
  }
  if (sse == 0) return kPsnrInfinite;
  const double mse = static_cast<double>(sse) / static_cast<double>(a.size());
  return 10.0 * std::log10(max_value * max_value / mse);
}

// Summed-area table with a zero border row and column.
class Integral {
 public:
  template <class F>
  Integral(std::size_t w, std::size_t h, F sample) : w_(w + 1), sums_((w + 1) * (h + 1), 0) {
    for (std::size_t y = 0; y < h; ++y) {
      std::uint64_t row = 0;
      for (std::size_t x = 0; x < w; ++x) {
        row += sample(x, y);
        sums_[(y + 1) * w_ + x + 1] = sums_[y * w_ + x + 1] + row;
      }
    }
  }

  std::uint64_t box(std::size_t x, std::size_t y, std::size_t size) const {
    return sums_[(y + size) * w_ + x + size] + sums_[y * w_ + x] - sums_[y * w_ + x + size] -
           sums_[(y + size) * w_ + x];
  }

 private:
  std::size_t w_;
  std::vector<std::uint64_t> sums_;
};

}  // namespace

double psnr(const GrayImage& a, const GrayImage& b, double max_value) {
  require_same_size(a, b);
  return psnr_samples(a.pixels, b.pixels, max_value);
}

double psnr(const RgbImage& a, const RgbImage& b, double max_value) {
  require_same_size(a, b);
  return psnr_samples(a.pixels, b.pixels, max_value);
}

double ssim(const GrayImage& a, const GrayImage& b) {
  require_same_size(a, b);
  const std::size_t k = kSsimWindow;
  if (a.width < k || a.height < k) throw DomainError("image is smaller than the 8x8 SSIM window");

  const std::size_t w = a.width;
  const std::size_t h = a.height;
  const Integral sa(w, h, [&](std::size_t x, std::size_t y) { return std::uint64_t{a.at(x, y)}; });
  const Integral sb(w, h, [&](std::size_t x, std::size_t y) { return std::uint64_t{b.at(x, y)}; });
  const Integral saa(w, h, [&](std::size_t x, std::size_t y) { return std::uint64_t{a.at(x, y)} * a.at(x, y); });
  const Integral sbb(w, h, [&](std::size_t x, std::size_t y) { return std::uint64_t{b.at(x, y)} * b.at(x, y); });
  const Integral sab(w, h, [&](std::size_t x, std::size_t y) { return std::uint64_t{a.at(x, y)} * b.at(x, y); });

  const double c1 = (0.01 * 255) * (0.01 * 255);
  const double c2 = (0.03 * 255) * (0.03 * 255);
  const double n = static_cast<double>(k * k);
  double total = 0.0;
  for (std::size_t y = 0; y + k <= h; ++y) {
    for (std::size_t x = 0; x + k <= w; ++x) {
      const double mu_a = static_cast<double>(sa.box(x, y, k)) / n;
      const double mu_b = static_cast<double>(sb.box(x, y, k)) / n;
      const double var_a = static_cast<double>(saa.box(x, y, k)) / n - mu_a * mu_a;
      const double var_b = static_cast<double>(sbb.box(x, y, k)) / n - mu_b * mu_b;
      const double cov = static_cast<double>(sab.box(x, y, k)) / n - mu_a * mu_b;
      total += ((2 * mu_a * mu_b + c1) * (2 * cov + c2)) /
               ((mu_a * mu_a + mu_b * mu_b + c1) * (var_a + var_b + c2));
    }
  }
  return total / static_cast<double>((w - k + 1) * (h - k + 1));
}

double ssim(const RgbImage& a, const RgbImage& b) {
  require_same_size(a, b);
  const auto pa = split_planes(a);
  const auto pb = split_planes(b);
  return (ssim(pa[0], pb[0]) + ssim(pa[1], pb[1]) + ssim(pa[2], pb[2])) / 3.0;
}

}  // namespace p2lsg
