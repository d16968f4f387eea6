#pragma once

// SC image scaling (bilinear interpolation through a 4-to-1 MUX) and scene
// merging (alpha compositing through a 2-to-1 MUX).

#include <cstdint>
#include <filesystem>
#include <string_view>
#include <vector>

#include "p2lsg/image.hpp"
#include "p2lsg/sequence_spec.hpp"

namespace p2lsg {

/// Positive rational factor num/den.
struct ScaleFactor {
  std::uint64_t num = 1;
  std::uint64_t den = 1;

  /// "2", "3/2" or "1.25". ConfigError when malformed or not positive.
  static ScaleFactor parse(std::string_view text);
};

/// Output size for one axis: floor(size * factor), at least 1.
std::size_t scaled_extent(std::size_t size, ScaleFactor factor);

struct ScalingAssignment {
  SequenceSpec data;      // encodes the four neighbours (shared, so they are correlated)
  SequenceSpec select_u;  // horizontal weight
  SequenceSpec select_v;  // vertical weight
};

/// data p2lsg base N (a plain counter), u p2lsg base 4, v p2lsg base 2.
ScalingAssignment default_scaling_assignment();

struct ScaleOptions {
  ScaleFactor factor{2, 1};
  std::uint64_t stream_length = 256;
  ScalingAssignment sequences = default_scaling_assignment();
  unsigned workers = 0;  // 0: one per hardware thread
};

/// Source position of output index `dst` on one axis, corner-aligned:
/// src = dst (size - 1) / (out - 1). Returns the left neighbour and the
/// fractional offset rounded to 8 bits (carried into the neighbour at 256).
struct AxisSample {
  std::size_t lo = 0;
  std::size_t hi = 0;
  std::uint32_t frac = 0;  // in 1/256
};
AxisSample axis_sample(std::size_t dst, std::size_t out, std::size_t size);

/// Bilinear upscaling with SC arithmetic. Pixel = round(256 * ones / N).
/// DomainError on an empty image or factor < 1; ConfigError when N is not
/// a power of two or a sequence cannot fill N comparator thresholds.
GrayImage scale_image_sc(const GrayImage& image, const ScaleOptions& options);
/// Channels are scaled independently.
RgbImage scale_image_sc(const RgbImage& image, const ScaleOptions& options);

struct MergeAssignment {
  SequenceSpec data;    // background and foreground (shared)
  SequenceSpec select;  // alpha
};

/// data p2lsg base 2, select p2lsg base N.
MergeAssignment default_merge_assignment();

struct MergeOptions {
  std::uint64_t stream_length = 256;
  MergeAssignment sequences = default_merge_assignment();
  unsigned workers = 0;
};

/// Select probability for an 8-bit alpha, in 1/256: round(256 a / 255), so
/// 0 and 255 map to constant streams.
std::uint32_t alpha_select_level(std::uint8_t alpha) noexcept;

/// mux2(background, foreground, alpha) per channel. DomainError on any
/// dimension mismatch.
RgbImage merge_scene_sc(const RgbImage& background, const RgbImage& foreground, const AlphaMap& alpha,
                        const MergeOptions& options);

inline constexpr std::uint8_t kDefaultGreenThreshold = 100;
inline constexpr std::uint8_t kDefaultDominanceMargin = 50;

/// Binary matte: 0 where G > threshold and G - max(R, B) > margin, else 255.
AlphaMap chroma_key_alpha(const RgbImage& frame, std::uint8_t green_threshold = kDefaultGreenThreshold,
                          std::uint8_t dominance_margin = kDefaultDominanceMargin);

/// Sorted frame_*.ppm files of a frame directory. IoError when the
/// directory cannot be listed.
std::vector<std::filesystem::path> list_frames(const std::filesystem::path& directory);

}  // namespace p2lsg
