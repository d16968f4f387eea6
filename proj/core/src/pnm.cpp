#include "p2lsg/pnm.hpp"

#include <cctype>
#include <fstream>
#include <iterator>

#include "p2lsg/errors.hpp"

namespace p2lsg {

namespace {

class HeaderReader {
 public:
  explicit HeaderReader(std::string_view bytes) : bytes_(bytes) {}

  std::size_t pos() const noexcept { return pos_; }

  // Skips whitespace and '#' comments, then reads a decimal field.
  std::size_t number(const char* what) {
    skip_separators();
    const std::size_t begin = pos_;
    std::size_t value = 0;
    while (pos_ < bytes_.size() && std::isdigit(static_cast<unsigned char>(bytes_[pos_]))) {
      value = value * 10 + static_cast<std::size_t>(bytes_[pos_] - '0');
      if (value > (std::size_t{1} << 32)) throw ParseError(std::string(what) + " is too large", begin);
      ++pos_;
    }
    if (pos_ == begin) {
      throw ParseError(pos_ >= bytes_.size() ? std::string("header ends before ") + what
                                             : std::string("expected ") + what,
                       pos_);
    }
    return value;
  }

  // The single whitespace byte between maxval and the raster.
  void body_separator() {
    if (pos_ >= bytes_.size() || !std::isspace(static_cast<unsigned char>(bytes_[pos_]))) {
      throw ParseError("expected whitespace before raster data", pos_);
    }
    ++pos_;
  }

 private:
  void skip_separators() {
    while (pos_ < bytes_.size()) {
      const char ch = bytes_[pos_];
      if (ch == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(ch))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  std::string_view bytes_;
  std::size_t pos_ = 2;
};

template <class Image>
std::string write_impl(const Image& image, const char* magic, std::size_t channels) {
  if (image.empty()) throw DomainError("cannot write an empty image");
  std::string out = std::string(magic) + "\n" + std::to_string(image.width) + " " + std::to_string(image.height) +
                    "\n255\n";
  out.reserve(out.size() + channels * image.width * image.height);
  out.append(image.pixels.begin(), image.pixels.end());
  return out;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::string bytes{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  if (in.bad()) throw IoError("cannot read " + path.string());
  return bytes;
}

void spit(const std::filesystem::path& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("cannot write " + path.string());
}

}  // namespace

PnmImage read_pnm(std::string_view bytes) {
  if (bytes.size() < 2) throw ParseError("missing PNM magic", bytes.size());
  const auto magic = bytes.substr(0, 2);
  if (magic != "P5" && magic != "P6") {
    if (magic[0] == 'P' && magic[1] >= '1' && magic[1] <= '7') {
      throw ParseError("unsupported PNM format " + std::string(magic) + " (only P5 and P6)", 0);
    }
    throw ParseError("not a PNM file", 0);
  }
  HeaderReader header(bytes);
  const std::size_t width = header.number("width");
  const std::size_t height = header.number("height");
  const std::size_t maxval_at = header.pos();
  const std::size_t maxval = header.number("maxval");
  if (width == 0 || height == 0) throw ParseError("image dimensions must be positive", maxval_at);
  if (maxval != 255) throw ParseError("maxval must be 255, got " + std::to_string(maxval), maxval_at);
  header.body_separator();

  const std::size_t channels = magic == "P5" ? 1 : 3;
  const std::size_t body = header.pos();
  const std::size_t needed = channels * width * height;
  if (bytes.size() - body < needed) {
    throw ParseError("raster truncated: " + std::to_string(needed) + " bytes expected, " +
                         std::to_string(bytes.size() - body) + " present",
                     bytes.size());
  }
  const auto* data = reinterpret_cast<const std::uint8_t*>(bytes.data() + body);
  if (channels == 1) {
    GrayImage img;
    img.width = width;
    img.height = height;
    img.pixels.assign(data, data + needed);
    return img;
  }
  RgbImage img;
  img.width = width;
  img.height = height;
  img.pixels.assign(data, data + needed);
  return img;
}

std::string write_pnm(const GrayImage& image) { return write_impl(image, "P5", 1); }
std::string write_pnm(const RgbImage& image) { return write_impl(image, "P6", 3); }

PnmImage read_pnm_file(const std::filesystem::path& path) { return read_pnm(slurp(path)); }

GrayImage read_pgm_file(const std::filesystem::path& path) {
  auto img = read_pnm_file(path);
  if (auto* g = std::get_if<GrayImage>(&img)) return std::move(*g);
  throw ParseError(path.string() + " is an RGB (P6) image, gray (P5) expected", 0);
}

RgbImage read_ppm_file(const std::filesystem::path& path) {
  auto img = read_pnm_file(path);
  if (auto* c = std::get_if<RgbImage>(&img)) return std::move(*c);
  throw ParseError(path.string() + " is a gray (P5) image, RGB (P6) expected", 0);
}

void write_pnm_file(const std::filesystem::path& path, const GrayImage& image) { spit(path, write_pnm(image)); }
void write_pnm_file(const std::filesystem::path& path, const RgbImage& image) { spit(path, write_pnm(image)); }

}  // namespace p2lsg
