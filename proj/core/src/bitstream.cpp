#include "p2lsg/bitstream.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <iterator>
#include <ostream>

#include "p2lsg/errors.hpp"

namespace p2lsg {

namespace {

std::size_t word_count(std::size_t length) { return (length + Bitstream::kWordBits - 1) / Bitstream::kWordBits; }

}  // namespace

FixedUnipolar FixedUnipolar::make(std::uint64_t numerator, unsigned precision_bits) {
  if (precision_bits == 0 || precision_bits > 32) throw DomainError("precision must be in [1, 32]");
  if (numerator >> precision_bits != 0) {
    throw DomainError("value " + std::to_string(numerator) + " does not fit " + std::to_string(precision_bits) +
                      "-bit unipolar precision");
  }
  return {static_cast<std::uint32_t>(numerator), precision_bits};
}

double FixedUnipolar::value() const noexcept {
  return static_cast<double>(numerator) / static_cast<double>(std::uint64_t{1} << precision_bits);
}

Bitstream::Bitstream(std::size_t length) : words_(word_count(length), 0), length_(length) {
  if (length == 0) throw DomainError("bit-stream length must be >= 1");
}

Bitstream Bitstream::ones(std::size_t length) {
  Bitstream s(length);
  std::fill(s.words_.begin(), s.words_.end(), ~std::uint64_t{0});
  s.clear_padding();
  return s;
}

Bitstream Bitstream::from_string(std::string_view bits) {
  Bitstream s(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != '0' && bits[i] != '1') throw DomainError("bit-stream text may only contain '0' and '1'");
    s.set(i, bits[i] == '1');
  }
  return s;
}

Bitstream Bitstream::from_words(std::vector<std::uint64_t> words, std::size_t length) {
  if (words.size() != word_count(length)) throw DomainError("word count does not match bit-stream length");
  Bitstream s(length);
  s.words_ = std::move(words);
  s.clear_padding();
  return s;
}

void Bitstream::set(std::size_t i, bool bit) noexcept {
  const auto mask = std::uint64_t{1} << (i % kWordBits);
  auto& w = words_[i / kWordBits];
  w = bit ? (w | mask) : (w & ~mask);
}

std::size_t Bitstream::popcount() const noexcept {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

void Bitstream::clear_padding() noexcept {
  const auto tail = length_ % kWordBits;
  if (tail != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << tail) - 1;
}

std::string Bitstream::to_string() const {
  std::string out(length_, '0');
  for (std::size_t i = 0; i < length_; ++i) {
    if (test(i)) out[i] = '1';
  }
  return out;
}

Bitstream sng_generate(FixedUnipolar x, const ThresholdSequence& sequence, std::size_t length) {
  if (x.precision_bits != sequence.precision_bits) {
    throw ConfigError("input precision " + std::to_string(x.precision_bits) + " differs from sequence precision " +
                      std::to_string(sequence.precision_bits));
  }
  if (sequence.values.size() < length) {
    throw GenerationError("sequence provides " + std::to_string(sequence.values.size()) + " values, " +
                          std::to_string(length) + " needed");
  }
  Bitstream s(length);
  auto words = s.mutable_words();
  for (std::size_t w = 0; w < words.size(); ++w) {
    const std::size_t begin = w * Bitstream::kWordBits;
    const std::size_t end = std::min(begin + Bitstream::kWordBits, length);
    std::uint64_t word = 0;
    for (std::size_t i = begin; i < end; ++i) {
      word |= static_cast<std::uint64_t>(x.numerator > sequence.values[i]) << (i - begin);
    }
    words[w] = word;
  }
  return s;
}

double decode_unipolar(const Bitstream& s) noexcept {
  return static_cast<double>(s.popcount()) / static_cast<double>(s.size());
}

double decode_bipolar(const Bitstream& s) noexcept { return 2.0 * decode_unipolar(s) - 1.0; }

SccCounts scc_counts(const Bitstream& s1, const Bitstream& s2) {
  if (s1.size() != s2.size()) throw DomainError("SCC needs equal-length streams");
  SccCounts k;
  k.n = s1.size();
  const auto w1 = s1.words();
  const auto w2 = s2.words();
  std::uint64_t ones1 = 0;
  std::uint64_t ones2 = 0;
  for (std::size_t i = 0; i < w1.size(); ++i) {
    k.a += static_cast<std::uint64_t>(std::popcount(w1[i] & w2[i]));
    ones1 += static_cast<std::uint64_t>(std::popcount(w1[i]));
    ones2 += static_cast<std::uint64_t>(std::popcount(w2[i]));
  }
  k.b = ones1 - k.a;
  k.c = ones2 - k.a;
  k.d = k.n - k.a - k.b - k.c;
  return k;
}

std::optional<double> scc(const SccCounts& k) noexcept {
  const auto a = static_cast<std::int64_t>(k.a);
  const auto b = static_cast<std::int64_t>(k.b);
  const auto c = static_cast<std::int64_t>(k.c);
  const auto d = static_cast<std::int64_t>(k.d);
  const auto n = static_cast<std::int64_t>(k.n);
  const std::int64_t numerator = a * d - b * c;
  std::int64_t denominator = 0;
  if (a * d > b * c) {
    denominator = n * std::min(a + b, a + c) - (a + b) * (a + c);
  } else {
    denominator = (a + b) * (a + c) - n * std::max<std::int64_t>(a - d, 0);
  }
  if (denominator == 0) return std::nullopt;
  return static_cast<double>(numerator) / static_cast<double>(denominator);
}

std::optional<double> scc(const Bitstream& s1, const Bitstream& s2) { return scc(scc_counts(s1, s2)); }

Bitstream read_bitstream_text(std::istream& in) {
  std::string bits;
  std::size_t offset = 0;
  for (std::istreambuf_iterator<char> it(in), end; it != end; ++it, ++offset) {
    const char ch = *it;
    if (ch == '0' || ch == '1') {
      bits.push_back(ch);
    } else if (ch != ' ' && ch != '\n' && ch != '\r' && ch != '\t') {
      throw ParseError(std::string("unexpected character '") + ch + "' in bit-stream text", offset);
    }
  }
  if (bits.empty()) throw ParseError("empty bit-stream", offset);
  return Bitstream::from_string(bits);
}

void write_bitstream_text(std::ostream& out, const Bitstream& s, std::size_t line_width) {
  const auto text = s.to_string();
  if (line_width == 0) line_width = text.size();
  for (std::size_t i = 0; i < text.size(); i += line_width) out << text.substr(i, line_width) << '\n';
}

Bitstream read_bitstream_binary(std::istream& in) {
  unsigned char header[8];
  if (!in.read(reinterpret_cast<char*>(header), 8)) {
    throw ParseError("truncated bit-stream header", static_cast<std::size_t>(std::max<std::streamsize>(in.gcount(), 0)));
  }
  std::uint64_t length = 0;
  for (int i = 7; i >= 0; --i) length = (length << 8) | header[i];
  if (length == 0) throw ParseError("bit-stream length must be >= 1", 0);

  const std::size_t bytes = static_cast<std::size_t>((length + 7) / 8);
  std::vector<unsigned char> body(bytes);
  if (!in.read(reinterpret_cast<char*>(body.data()), static_cast<std::streamsize>(bytes))) {
    throw ParseError("truncated bit-stream body", 8 + static_cast<std::size_t>(in.gcount()));
  }
  std::vector<std::uint64_t> words(word_count(length), 0);
  for (std::size_t i = 0; i < bytes; ++i) words[i / 8] |= static_cast<std::uint64_t>(body[i]) << (8 * (i % 8));
  return Bitstream::from_words(std::move(words), static_cast<std::size_t>(length));
}

void write_bitstream_binary(std::ostream& out, const Bitstream& s) {
  const std::uint64_t length = s.size();
  for (int i = 0; i < 8; ++i) out.put(static_cast<char>((length >> (8 * i)) & 0xff));
  const auto words = s.words();
  const std::size_t bytes = (s.size() + 7) / 8;
  for (std::size_t i = 0; i < bytes; ++i) out.put(static_cast<char>((words[i / 8] >> (8 * (i % 8))) & 0xff));
}

}  // namespace p2lsg
