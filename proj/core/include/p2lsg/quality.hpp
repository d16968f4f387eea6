#pragma once

#include <cstddef>
#include <limits>

#include "p2lsg/image.hpp"

namespace p2lsg {

/// Returned by psnr for identical inputs.
inline constexpr double kPsnrInfinite = std::numeric_limits<double>::infinity();

/// 10 log10(max^2 / MSE) over all samples. DomainError on a size mismatch.
double psnr(const GrayImage& a, const GrayImage& b, double max_value = 255.0);
double psnr(const RgbImage& a, const RgbImage& b, double max_value = 255.0);

inline constexpr std::size_t kSsimWindow = 8;

/// Mean SSIM over every 8x8 window (stride 1), population statistics,
/// C1 = (0.01 * 255)^2 and C2 = (0.03 * 255)^2. RGB averages the channels.
/// DomainError on a size mismatch or an image smaller than the window.
double ssim(const GrayImage& a, const GrayImage& b);
double ssim(const RgbImage& a, const RgbImage& b);

}  // namespace p2lsg
