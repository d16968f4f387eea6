#pragma once

// Stochastic bit-streams and the comparator-based stochastic number
// generator (SNG).
//
// Bit i of a stream lives in word i / 64 at bit position i % 64. Pad bits
// past the stream length are always zero so word-wise popcounts are exact.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace p2lsg {

/// numerator / 2^precision_bits in [0, 1).
struct FixedUnipolar {
  std::uint32_t numerator = 0;
  unsigned precision_bits = 8;

  /// Throws DomainError unless numerator < 2^precision_bits and the precision
  /// is in [1, 32].
  static FixedUnipolar make(std::uint64_t numerator, unsigned precision_bits);

  double value() const noexcept;
};

/// Comparator thresholds R_1..R_N in [0, 2^precision_bits).
struct ThresholdSequence {
  std::vector<std::uint32_t> values;
  unsigned precision_bits = 8;
};

class Bitstream {
 public:
  static constexpr std::size_t kWordBits = 64;

  Bitstream() = default;
  /// All-zero stream. Throws DomainError for length 0.
  explicit Bitstream(std::size_t length);

  static Bitstream zeros(std::size_t length) { return Bitstream(length); }
  static Bitstream ones(std::size_t length);
  /// From '0'/'1' characters; anything else throws DomainError.
  static Bitstream from_string(std::string_view bits);
  /// Adopts packed words; pad bits are cleared.
  static Bitstream from_words(std::vector<std::uint64_t> words, std::size_t length);

  std::size_t size() const noexcept { return length_; }
  std::span<const std::uint64_t> words() const noexcept { return words_; }
  std::span<std::uint64_t> mutable_words() noexcept { return words_; }

  bool test(std::size_t i) const noexcept { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(std::size_t i, bool bit) noexcept;

  std::size_t popcount() const noexcept;

  /// Clears bits past size() in the last word. Kernels that write whole
  /// words call this to restore the invariant.
  void clear_padding() noexcept;

  std::string to_string() const;

  bool operator==(const Bitstream&) const = default;

 private:
  std::vector<std::uint64_t> words_;
  std::size_t length_ = 0;
};

/// Bit i is 1 iff x.numerator > R_i. Throws GenerationError if fewer than
/// `length` thresholds are available and ConfigError on precision mismatch.
Bitstream sng_generate(FixedUnipolar x, const ThresholdSequence& sequence, std::size_t length);

/// popcount / N.
double decode_unipolar(const Bitstream& s) noexcept;

/// 2 * popcount / N - 1.
double decode_bipolar(const Bitstream& s) noexcept;

struct SccCounts {
  std::uint64_t a = 0;  // (1, 1)
  std::uint64_t b = 0;  // (1, 0)
  std::uint64_t c = 0;  // (0, 1)
  std::uint64_t d = 0;  // (0, 0)
  std::uint64_t n = 0;

  bool operator==(const SccCounts&) const = default;
};

/// Overlap statistics of two equal-length streams. Throws DomainError on
/// length mismatch.
SccCounts scc_counts(const Bitstream& s1, const Bitstream& s2);

/// Stochastic cross-correlation from overlap counts. Returns nullopt when the
/// selected denominator is zero (one of the streams is constant).
std::optional<double> scc(const SccCounts& counts) noexcept;

std::optional<double> scc(const Bitstream& s1, const Bitstream& s2);

// Serialization. Text: '0'/'1' characters, whitespace and newlines ignored.
// Binary: 8-byte little-endian bit count, then the stream packed LSB-first
// into ceil(N / 8) bytes.
Bitstream read_bitstream_text(std::istream& in);
void write_bitstream_text(std::ostream& out, const Bitstream& s, std::size_t line_width = 64);
Bitstream read_bitstream_binary(std::istream& in);
void write_bitstream_binary(std::ostream& out, const Bitstream& s);

}  // namespace p2lsg
