#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "oracles.hpp"
#include "p2lsg/errors.hpp"
#include "p2lsg/media.hpp"
#include "p2lsg/pnm.hpp"
#include "p2lsg/quality.hpp"

using namespace p2lsg;

namespace {

GrayImage random_gray(std::size_t w, std::size_t h, unsigned seed) {
  std::mt19937 rng(seed);
  GrayImage img(w, h);
  for (auto& p : img.pixels) p = static_cast<std::uint8_t>(rng());
  return img;
}

RgbImage random_rgb(std::size_t w, std::size_t h, unsigned seed) {
  std::mt19937 rng(seed);
  RgbImage img(w, h);
  for (auto& p : img.pixels) p = static_cast<std::uint8_t>(rng());
  return img;
}

// Mean SSIM straight from the definition, one window at a time.
double naive_ssim(const GrayImage& a, const GrayImage& b) {
  const double c1 = std::pow(0.01 * 255, 2), c2 = std::pow(0.03 * 255, 2);
  double total = 0;
  int windows = 0;
  for (std::size_t y0 = 0; y0 + 8 <= a.height; ++y0) {
    for (std::size_t x0 = 0; x0 + 8 <= a.width; ++x0) {
      double ma = 0, mb = 0;
      for (std::size_t y = y0; y < y0 + 8; ++y) {
        for (std::size_t x = x0; x < x0 + 8; ++x) {
          ma += a.at(x, y);
          mb += b.at(x, y);
        }
      }
      ma /= 64;
      mb /= 64;
      double va = 0, vb = 0, cov = 0;
      for (std::size_t y = y0; y < y0 + 8; ++y) {
        for (std::size_t x = x0; x < x0 + 8; ++x) {
          va += (a.at(x, y) - ma) * (a.at(x, y) - ma);
          vb += (b.at(x, y) - mb) * (b.at(x, y) - mb);
          cov += (a.at(x, y) - ma) * (b.at(x, y) - mb);
        }
      }
      va /= 64;
      vb /= 64;
      cov /= 64;
      total += (2 * ma * mb + c1) * (2 * cov + c2) / ((ma * ma + mb * mb + c1) * (va + vb + c2));
      ++windows;
    }
  }
  return total / windows;
}

std::string header_plus(const std::string& header, std::size_t body) { return header + std::string(body, '\x7f'); }

}  // namespace

TEST_CASE("scale factor parsing") {
  CHECK(ScaleFactor::parse("2").num == 2);
  const auto f = ScaleFactor::parse("3/2");
  CHECK((f.num == 3 && f.den == 2));
  const auto g = ScaleFactor::parse("1.25");
  CHECK((g.num == 5 && g.den == 4));
  for (const char* bad : {"", "0", "x", "2/0", "1.", "-1", "3/"}) CHECK_THROWS_AS(ScaleFactor::parse(bad), ConfigError);
  CHECK(scaled_extent(5, {3, 2}) == 7);
  CHECK(scaled_extent(1, {1, 1}) == 1);
}

TEST_CASE("axis sampling is corner aligned") {
  const auto first = axis_sample(0, 8, 4);
  CHECK((first.lo == 0 && first.frac == 0));
  const auto last = axis_sample(7, 8, 4);
  CHECK((last.lo == 3 && last.hi == 3 && last.frac == 0));
  const auto mid = axis_sample(1, 3, 2);  // src = 0.5
  CHECK((mid.lo == 0 && mid.hi == 1 && mid.frac == 128));
}

TEST_CASE("constant images stay constant") {
  for (int v : {0, 1, 77, 128, 254, 255}) {
    const GrayImage img(5, 4, static_cast<std::uint8_t>(v));
    for (const char* factor : {"1", "2", "3/2"}) {
      ScaleOptions opt;
      opt.factor = ScaleFactor::parse(factor);
      const auto out = scale_image_sc(img, opt);
      CHECK(std::all_of(out.pixels.begin(), out.pixels.end(), [&](std::uint8_t p) { return p == v; }));
    }
  }
}

TEST_CASE("factor 1 at full period is the identity") {
  const auto img = random_gray(17, 9, 1);
  ScaleOptions opt;
  opt.factor = {1, 1};
  CHECK(scale_image_sc(img, opt) == img);
  const auto rgb = random_rgb(6, 5, 2);
  CHECK(scale_image_sc(rgb, opt) == rgb);
}

TEST_CASE("grid-aligned output pixels copy the source") {
  const auto img = random_gray(9, 7, 3);
  ScaleOptions opt;
  opt.factor = {2, 1};
  const auto out = scale_image_sc(img, opt);  // 18 x 14: only the corners are grid aligned
  CHECK(out.at(0, 0) == img.at(0, 0));
  CHECK(out.at(17, 0) == img.at(8, 0));
  CHECK(out.at(0, 13) == img.at(0, 6));
  CHECK(out.at(17, 13) == img.at(8, 6));
}

TEST_CASE("2x2 gradient scaled 2x is within 1 of the bilinear oracle") {
  GrayImage img(2, 2);
  img.pixels = {0, 255, 0, 255};
  const auto out = scale_image_sc(img, {});
  REQUIRE(out.width == 4);
  for (std::size_t y = 0; y < 4; ++y) {
    for (std::size_t x = 0; x < 4; ++x) {
      const int ref = oracle::bilinear(img.pixels, 2, 2, 4, 4, x, y);
      CHECK(std::abs(ref - int{out.at(x, y)}) <= 1);
    }
  }
}

TEST_CASE("scaling is independent of the worker count") {
  const auto img = random_gray(20, 13, 4);
  ScaleOptions opt;
  opt.factor = {5, 2};
  opt.workers = 1;
  const auto one = scale_image_sc(img, opt);
  opt.workers = 4;
  CHECK(scale_image_sc(img, opt) == one);
}

TEST_CASE("scaling errors") {
  CHECK_THROWS_AS(scale_image_sc(GrayImage{}, {}), DomainError);
  ScaleOptions opt;
  opt.factor = {1, 2};
  CHECK_THROWS_AS(scale_image_sc(GrayImage(2, 2), opt), DomainError);
  opt.factor = {2, 1};
  opt.stream_length = 100;
  CHECK_THROWS_AS(scale_image_sc(GrayImage(2, 2), opt), ConfigError);
}

TEST_CASE("alpha to select level") {
  CHECK(alpha_select_level(0) == 0);
  CHECK(alpha_select_level(255) == 256);
  CHECK(alpha_select_level(128) == 129);  // round(256 * 128 / 255) = round(128.50)
  CHECK(alpha_select_level(127) == 127);
}

TEST_CASE("merge examples") {
  const auto bg = random_rgb(7, 5, 5);
  const auto fg = random_rgb(7, 5, 6);
  CHECK(merge_scene_sc(bg, fg, AlphaMap(7, 5, 255), {}) == fg);
  CHECK(merge_scene_sc(bg, fg, AlphaMap(7, 5, 0), {}) == bg);

  const RgbImage black(3, 3, {0, 0, 0});
  const RgbImage grey(3, 3, {200, 200, 200});
  const auto half = merge_scene_sc(black, grey, AlphaMap(3, 3, 128), {});
  for (auto p : half.pixels) CHECK(std::abs(int{p} - 100) <= 1);
}

TEST_CASE("merge stays between its inputs and near the compositing oracle") {
  std::mt19937 rng(8);
  constexpr std::size_t w = 32, h = 32;
  RgbImage bg(w, h), fg(w, h);
  AlphaMap alpha(w, h);
  for (auto& p : bg.pixels) p = static_cast<std::uint8_t>(rng());
  for (auto& p : fg.pixels) p = static_cast<std::uint8_t>(rng());
  for (auto& a : alpha.alpha) a = static_cast<std::uint8_t>(rng());
  const auto out = merge_scene_sc(bg, fg, alpha, {});
  for (std::size_t y = 0; y < h; ++y) {
    for (std::size_t x = 0; x < w; ++x) {
      for (int c = 0; c < 3; ++c) {
        const int b = bg.at(x, y, c), f = fg.at(x, y, c), o = out.at(x, y, c);
        REQUIRE(o >= std::min(b, f));
        REQUIRE(o <= std::max(b, f));
      }
    }
  }

  // With alpha in {0, 128, 255} the select probability is a multiple of 1/256.
  for (const std::uint8_t a : {0, 128, 255}) {
    const auto m = merge_scene_sc(bg, fg, AlphaMap(w, h, a), {});
    for (std::size_t i = 0; i < m.pixels.size(); ++i) {
      const int ref = oracle::composite(bg.pixels[i], fg.pixels[i], a);
      REQUIRE(std::abs(ref - int{m.pixels[i]}) <= 1);
    }
  }
}

TEST_CASE("merge determinism and errors") {
  const auto bg = random_rgb(10, 6, 9), fg = random_rgb(10, 6, 10);
  AlphaMap alpha(10, 6);
  for (std::size_t i = 0; i < alpha.alpha.size(); ++i) alpha.alpha[i] = static_cast<std::uint8_t>(i * 37);
  MergeOptions opt;
  opt.workers = 1;
  const auto once = merge_scene_sc(bg, fg, alpha, opt);
  opt.workers = 3;
  CHECK(merge_scene_sc(bg, fg, alpha, opt) == once);
  CHECK_THROWS_AS(merge_scene_sc(bg, random_rgb(10, 5, 1), alpha, {}), DomainError);
  CHECK_THROWS_AS(merge_scene_sc(bg, fg, AlphaMap(9, 6), {}), DomainError);
}

TEST_CASE("chroma key") {
  RgbImage px(4, 1);
  px.pixels = {0, 255, 0, 255, 0, 0, 90, 160, 80, 90, 140, 80};
  const auto a = chroma_key_alpha(px);
  CHECK(a.alpha == std::vector<std::uint8_t>{0, 255, 0, 255});  // 140 - 90 = 50 is not > 50
  CHECK(chroma_key_alpha(px, 200, 10).alpha == std::vector<std::uint8_t>{0, 255, 255, 255});
}

TEST_CASE("psnr") {
  const auto a = random_gray(16, 16, 11);
  CHECK(psnr(a, a) == kPsnrInfinite);
  GrayImage b = a;
  for (auto& p : b.pixels) p = p == 255 ? 254 : p + 1;
  CHECK(psnr(a, b) == doctest::Approx(48.1308).epsilon(1e-5));
  CHECK(psnr(GrayImage(4, 4, 0), GrayImage(4, 4, 255)) == doctest::Approx(0.0));
  GrayImage c = b;
  c.pixels[0] = static_cast<std::uint8_t>(a.pixels[0] > 128 ? 0 : 255);
  CHECK(psnr(a, c) < psnr(a, b));
  CHECK_THROWS_AS(psnr(a, GrayImage(16, 15)), DomainError);
}

TEST_CASE("ssim") {
  const auto a = random_gray(20, 14, 12);
  const auto b = random_gray(20, 14, 13);
  CHECK(ssim(a, a) == doctest::Approx(1.0));
  CHECK(ssim(a, b) == doctest::Approx(ssim(b, a)));
  CHECK(ssim(a, b) == doctest::Approx(naive_ssim(a, b)).epsilon(1e-9));
  GrayImage smooth(12, 12);
  for (std::size_t y = 0; y < 12; ++y) {
    for (std::size_t x = 0; x < 12; ++x) smooth.at(x, y) = static_cast<std::uint8_t>(10 * x + 7 * y);
  }
  GrayImage noisy = smooth;
  for (std::size_t i = 0; i < noisy.pixels.size(); i += 3) noisy.pixels[i] += 4;
  CHECK(ssim(smooth, noisy) == doctest::Approx(naive_ssim(smooth, noisy)).epsilon(1e-9));

  // Constant blocks: only the luminance term survives.
  const double c1 = std::pow(0.01 * 255, 2);
  CHECK(ssim(GrayImage(8, 8, 100), GrayImage(8, 8, 150)) ==
        doctest::Approx((2 * 100.0 * 150 + c1) / (100.0 * 100 + 150.0 * 150 + c1)));

  const auto rgb = random_rgb(9, 9, 14);
  CHECK(ssim(rgb, rgb) == doctest::Approx(1.0));
  CHECK_THROWS_AS(ssim(GrayImage(7, 20), GrayImage(7, 20)), DomainError);
  CHECK_THROWS_AS(ssim(a, GrayImage(20, 13)), DomainError);
}

TEST_CASE("pnm round trip") {
  const auto g = random_gray(5, 3, 15);
  CHECK(std::get<GrayImage>(read_pnm(write_pnm(g))) == g);
  const auto c = random_rgb(4, 6, 16);
  CHECK(std::get<RgbImage>(read_pnm(write_pnm(c))) == c);
  CHECK(write_pnm(GrayImage(2, 2, 9)) == std::string("P5\n2 2\n255\n") + std::string(4, '\x09'));
}

TEST_CASE("pnm parsing") {
  const auto img = std::get<GrayImage>(read_pnm(header_plus("P5\n2 2\n255\n", 4)));
  CHECK((img.width == 2 && img.height == 2));
  CHECK(std::holds_alternative<RgbImage>(read_pnm(header_plus("P6 1 1 255\n", 3))));
  const auto commented = read_pnm(header_plus("P5\n# made by hand\n3 # width\n1\n255\n", 3));
  CHECK(std::get<GrayImage>(commented).width == 3);

  auto offset_of = [](const std::string& bytes) -> std::ptrdiff_t {
    try {
      read_pnm(bytes);
    } catch (const ParseError& e) {
      return static_cast<std::ptrdiff_t>(e.offset());
    }
    return -1;
  };
  try {
    read_pnm(header_plus("P4\n2 2\n", 1));
    FAIL("P4 accepted");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("P4") != std::string::npos);
    CHECK(e.offset() == 0);
  }
  CHECK(offset_of("GIF89a") == 0);
  CHECK(offset_of(header_plus("P5\n2 2\n65535\n", 8)) > 0);
  CHECK(offset_of(header_plus("P5\n2 2\n255\n", 3)) == 14);
  CHECK(offset_of("P5\n2") >= 0);
  CHECK(offset_of(header_plus("P5\n0 2\n255\n", 0)) >= 0);
}
