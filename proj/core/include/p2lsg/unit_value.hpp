#pragma once

// Exact representations of points in [0, 1).
//
// Digit-mirroring families (VDC, Halton, Hammersley, Faure) produce exact
// rationals; additive recurrences (Weyl, R2) and the seeded families produce
// 64-bit binary fractions; counter/register families (P2LSG, Sobol,
// Niederreiter, LFSR) produce n-bit integers. Every form quantizes to the
// n-bit comparator domain with floor(v * 2^n), so no floating point enters
// the bit-stream path.

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

namespace p2lsg {

/// num / den, reduced, with num < den.
struct UnitRational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  /// Throws DomainError unless den > 0 and num < den. Reduces the fraction.
  static UnitRational make(std::uint64_t num, std::uint64_t den);

  bool operator==(const UnitRational&) const = default;
};

/// frac / 2^64.
struct Fixed64 {
  std::uint64_t frac = 0;

  bool operator==(const Fixed64&) const = default;
};

/// value / 2^bits, bits in [1, 63].
struct Dyadic {
  std::uint64_t value = 0;
  unsigned bits = 1;

  bool operator==(const Dyadic&) const = default;
};

using UnitValue = std::variant<UnitRational, Fixed64, Dyadic>;

double to_double(const UnitValue& v) noexcept;

/// floor(v * 2^bits) for bits in [1, 32].
std::uint32_t quantize(const UnitValue& v, unsigned bits);

enum class ValueFormat { Native, Decimal };

/// Native: "num/den" for rationals, the integer for Dyadic values, and a
/// 20-digit decimal for Fixed64. Decimal: always a decimal with `digits`
/// places, correctly rounded from the exact value.
std::string format_value(const UnitValue& v, ValueFormat format, int digits = 12);

/// Parses a decimal fraction such as "0.4142135623730950488" into
/// floor(frac(x) * 2^64) without going through floating point. Integer part
/// is discarded. Throws DomainError on malformed text.
Fixed64 parse_fixed64(std::string_view text);

}  // namespace p2lsg
