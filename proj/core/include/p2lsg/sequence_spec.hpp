#pragma once

// Tagged description of one sequence family plus the helpers that turn it
// into comparator thresholds.
//
// Text form: <family>[:<key>=<value>,...], e.g. "p2lsg:base=16,bits=8",
// "halton:base=11", "weyl:alpha=silver", "lhs:seed=7". Shorthands: "p2lsg2"
// and "p2lsgN" (base tied to the stream length), "p2lsg<B>" for a fixed base.
//
//   family        keys (defaults)
//   p2lsg         base (N = stream length), bits (log2 N), par (1)
//   vdc           base (2)
//   halton        base (prime, 2)
//   hammersley    dim (0 = VDC-2, 1 = VDC-3)
//   faure         base (prime, 7), dim (0)
//   sobol         dim (1-based, 1), bits (32)
//   niederreiter  dim (0), bits (32)
//   weyl          alpha (pi | silver | golden | decimal, required)
//   r2            dim (0 or 1)
//   lhs           seed (required)
//   poisson       seed (required), r (decimal; 1/(2N) when absent), attempts (100000)
//   lfsr          taps (0x1d), bits (8), seed (1)
//
// Every family also takes start=<index> (0) to skip a prefix.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "p2lsg/bitstream.hpp"
#include "p2lsg/unit_value.hpp"

namespace p2lsg {

enum class Family {
  P2lsg,
  Vdc,
  Sobol,
  Halton,
  Hammersley,
  Faure,
  Niederreiter,
  Weyl,
  R2,
  LatinHypercube,
  PoissonDisk,
  Lfsr,
};

std::string_view family_name(Family f) noexcept;
/// Throws ConfigError for an unknown name.
Family parse_family(std::string_view name);
bool is_seeded(Family f) noexcept;

struct SequenceSpec {
  Family family = Family::P2lsg;
  std::optional<std::uint64_t> base;  // p2lsg, vdc, halton, faure
  std::optional<unsigned> bits;       // p2lsg counter width; sobol/niederreiter/lfsr precision
  std::uint32_t par = 1;              // p2lsg
  unsigned dimension = 0;             // sobol (1-based), niederreiter, faure, r2, hammersley
  std::optional<Fixed64> alpha;       // weyl
  std::optional<std::uint64_t> seed;  // lhs, poisson, lfsr
  std::optional<Fixed64> min_distance;  // poisson
  std::size_t max_attempts = 100000;    // poisson
  std::uint32_t taps = 0x1d;            // lfsr
  std::uint64_t start = 0;

  /// Throws ConfigError when a required parameter is missing or invalid.
  void validate() const;

  bool operator==(const SequenceSpec&) const = default;
};

/// Throws ConfigError on malformed text.
SequenceSpec parse_sequence_spec(std::string_view text);

/// Canonical text form; parse_sequence_spec(to_string(s)) == s.
std::string to_string(const SequenceSpec& spec);

/// Exact sequence values for indices start .. start + count - 1.
/// `stream_length` resolves length-tied parameters (p2lsg base/bits, lhs and
/// poisson point counts); pass 0 to use `count`.
std::vector<UnitValue> generate_values(const SequenceSpec& spec, std::size_t count, std::uint64_t stream_length = 0);

/// Values quantized to `precision_bits` comparator thresholds.
ThresholdSequence make_thresholds(const SequenceSpec& spec, std::size_t count, unsigned precision_bits,
                                  std::uint64_t stream_length = 0);

}  // namespace p2lsg
