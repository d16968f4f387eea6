#include "p2lsg/media.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <string>
#include <thread>

#include "p2lsg/errors.hpp"
#include "p2lsg/p2lsg_gen.hpp"
#include "p2lsg/sc_ops.hpp"

namespace p2lsg {

namespace {

constexpr unsigned kPixelBits = 8;

void require_stream_length(std::uint64_t n) {
  if (n == 0 || !is_power_of_two(n)) throw ConfigError("stream length must be a power of two");
}

// Streams for every 8-bit level under one sequence.
std::vector<Bitstream> level_streams(const SequenceSpec& spec, std::uint64_t n) {
  const auto seq = make_thresholds(spec, n, kPixelBits, n);
  std::vector<Bitstream> out;
  out.reserve(256);
  for (std::uint32_t k = 0; k < 256; ++k) out.push_back(sng_generate(FixedUnipolar{k, kPixelBits}, seq, n));
  return out;
}

std::uint8_t decode_pixel(std::size_t ones, std::uint64_t n) {
  const std::uint64_t v = (512 * ones + n) / (2 * n);
  return static_cast<std::uint8_t>(std::min<std::uint64_t>(v, 255));
}

template <class RowFn>
void for_rows(std::size_t rows, unsigned workers, RowFn fn) {
  if (workers == 0) workers = std::max(1U, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, rows));
  if (workers <= 1) {
    for (std::size_t y = 0; y < rows; ++y) fn(y);
    return;
  }
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t y = w; y < rows; y += workers) fn(y);
    });
  }
}

std::uint64_t parse_u64(std::string_view text, std::string_view whole) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ConfigError("malformed scale factor '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

ScaleFactor ScaleFactor::parse(std::string_view text) {
  ScaleFactor f;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    f.num = parse_u64(text.substr(0, slash), text);
    f.den = parse_u64(text.substr(slash + 1), text);
  } else if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const auto frac = text.substr(dot + 1);
    if (frac.empty() || frac.size() > 9) throw ConfigError("malformed scale factor '" + std::string(text) + "'");
    f.den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) f.den *= 10;
    const auto whole = dot == 0 ? 0 : parse_u64(text.substr(0, dot), text);
    f.num = whole * f.den + parse_u64(frac, text);
  } else {
    f.num = parse_u64(text, text);
  }
  if (f.num == 0 || f.den == 0) throw ConfigError("scale factor must be positive");
  const auto g = std::gcd(f.num, f.den);
  f.num /= g;
  f.den /= g;
  return f;
}

std::size_t scaled_extent(std::size_t size, ScaleFactor factor) {
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::uint64_t{size} * factor.num / factor.den));
}

ScalingAssignment default_scaling_assignment() {
  return {parse_sequence_spec("p2lsgN"), parse_sequence_spec("p2lsg4"), parse_sequence_spec("p2lsg2")};
}

AxisSample axis_sample(std::size_t dst, std::size_t out, std::size_t size) {
  AxisSample s;
  if (out > 1 && size > 1) {
    const std::uint64_t num = std::uint64_t{dst} * (size - 1);
    const std::uint64_t den = out - 1;
    s.lo = static_cast<std::size_t>(num / den);
    s.frac = static_cast<std::uint32_t>(((num % den) * 512 + den) / (2 * den));
    if (s.frac == 256) {
      ++s.lo;
      s.frac = 0;
    }
  }
  s.lo = std::min(s.lo, size - 1);
  s.hi = std::min(s.lo + 1, size - 1);
  return s;
}

GrayImage scale_image_sc(const GrayImage& image, const ScaleOptions& options) {
  if (image.empty()) throw DomainError("cannot scale an empty image");
  if (options.factor.den == 0 || options.factor.num < options.factor.den) {
    throw DomainError("scale factor must be >= 1");
  }
  const auto n = options.stream_length;
  require_stream_length(n);

  const auto data = level_streams(options.sequences.data, n);
  const auto sel_u = level_streams(options.sequences.select_u, n);
  const auto sel_v = level_streams(options.sequences.select_v, n);

  GrayImage out(scaled_extent(image.width, options.factor), scaled_extent(image.height, options.factor));
  std::vector<AxisSample> xs(out.width);
  for (std::size_t x = 0; x < out.width; ++x) xs[x] = axis_sample(x, out.width, image.width);

  for_rows(out.height, options.workers, [&](std::size_t y) {
    const auto sy = axis_sample(y, out.height, image.height);
    for (std::size_t x = 0; x < out.width; ++x) {
      const auto& sx = xs[x];
      const auto ones = mux4_popcount(data[image.at(sx.lo, sy.lo)], data[image.at(sx.lo, sy.hi)],
                                      data[image.at(sx.hi, sy.lo)], data[image.at(sx.hi, sy.hi)], sel_u[sx.frac],
                                      sel_v[sy.frac]);
      out.at(x, y) = decode_pixel(ones, n);
    }
  });
  return out;
}

RgbImage scale_image_sc(const RgbImage& image, const ScaleOptions& options) {
  if (image.empty()) throw DomainError("cannot scale an empty image");
  auto planes = split_planes(image);
  for (auto& p : planes) p = scale_image_sc(p, options);
  return merge_planes(planes);
}

MergeAssignment default_merge_assignment() { return {parse_sequence_spec("p2lsg2"), parse_sequence_spec("p2lsgN")}; }

std::uint32_t alpha_select_level(std::uint8_t alpha) noexcept { return (512U * alpha + 255U) / 510U; }

RgbImage merge_scene_sc(const RgbImage& background, const RgbImage& foreground, const AlphaMap& alpha,
                        const MergeOptions& options) {
  if (background.empty()) throw DomainError("cannot merge empty frames");
  if (background.width != foreground.width || background.height != foreground.height ||
      background.width != alpha.width || background.height != alpha.height) {
    throw DomainError("background, foreground and alpha must have equal dimensions");
  }
  const auto n = options.stream_length;
  require_stream_length(n);

  const auto data = level_streams(options.sequences.data, n);
  auto select = level_streams(options.sequences.select, n);
  select.push_back(Bitstream::ones(n));

  RgbImage out(background.width, background.height);
  for_rows(out.height, options.workers, [&](std::size_t y) {
    for (std::size_t x = 0; x < out.width; ++x) {
      const auto& sel = select[alpha_select_level(alpha.at(x, y))];
      for (int c = 0; c < 3; ++c) {
        const auto ones = mux2_popcount(data[background.at(x, y, c)], data[foreground.at(x, y, c)], sel);
        out.at(x, y, c) = decode_pixel(ones, n);
      }
    }
  });
  return out;
}

AlphaMap chroma_key_alpha(const RgbImage& frame, std::uint8_t green_threshold, std::uint8_t dominance_margin) {
  AlphaMap a;
  a.width = frame.width;
  a.height = frame.height;
  a.alpha.resize(frame.width * frame.height);
  for (std::size_t i = 0; i < a.alpha.size(); ++i) {
    const int r = frame.pixels[3 * i];
    const int g = frame.pixels[3 * i + 1];
    const int b = frame.pixels[3 * i + 2];
    const bool keyed = g > green_threshold && g - std::max(r, b) > dominance_margin;
    a.alpha[i] = keyed ? 0 : 255;
  }
  return a;
}

std::vector<std::filesystem::path> list_frames(const std::filesystem::path& directory) {
  std::error_code ec;
  std::filesystem::directory_iterator it(directory, ec);
  if (ec) throw IoError("cannot list " + directory.string() + ": " + ec.message());
  std::vector<std::filesystem::path> frames;
  for (const auto& entry : it) {
    const auto name = entry.path().filename().string();
    if (entry.is_regular_file() && name.starts_with("frame_") && entry.path().extension() == ".ppm") {
      frames.push_back(entry.path());
    }
  }
  std::sort(frames.begin(), frames.end());
  return frames;
}

}  // namespace p2lsg
