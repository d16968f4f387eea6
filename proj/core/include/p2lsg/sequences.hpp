#pragma once

// Reference generators for the random and low-discrepancy families compared
// against P2LSG. Index-addressable families are pure functions; the
// recurrence-driven ones (Sobol gray-code order, LFSR) are small iterator
// objects.

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "p2lsg/unit_value.hpp"

namespace p2lsg {

// 64-bit fractional parts of the irrational constants used by the additive
// recurrences.
inline constexpr Fixed64 kPiFrac{0x243f6a8885a308d3ULL};         // pi - 3
inline constexpr Fixed64 kSilverRatioFrac{0x6a09e667f3bcc908ULL};  // sqrt(2) - 1
inline constexpr Fixed64 kGoldenFrac{0x9e3779b97f4a7c15ULL};       // (sqrt(5) - 1) / 2
// Plastic constant rho = 1.3247179572447460..., real root of x^3 = x + 1.
inline constexpr Fixed64 kPlasticInv1{0xc13fa9a902a6328fULL};  // 1 / rho
inline constexpr Fixed64 kPlasticInv2{0x91e10da5c79e7b1cULL};  // 1 / rho^2

bool is_prime(std::uint64_t n) noexcept;

/// Radical inverse of `index` in any integer base >= 2 (at most 2^31).
UnitRational gen_vdc(std::uint64_t base, std::uint64_t index);

/// frac(index * alpha), exact modulo 2^64. Throws ConfigError for alpha == 0.
Fixed64 gen_weyl(Fixed64 alpha, std::uint64_t index);

/// frac(index / rho^(dimension + 1)); dimension must be 0 or 1.
Fixed64 gen_r2(unsigned dimension, std::uint64_t index);

/// gen_vdc restricted to prime bases.
UnitRational gen_halton(std::uint64_t prime_base, std::uint64_t index);

/// (VDC-2, VDC-3) pair.
std::pair<UnitRational, UnitRational> gen_hammersley_pair(std::uint64_t index);

/// Faure coordinate: base-p digits multiplied by the Pascal matrix raised to
/// `dimension` (entries C(j, r) * dimension^(j - r) mod p), then mirrored.
/// Dimension 0 is VDC-p.
UnitRational gen_faure(std::uint64_t prime, unsigned dimension, std::uint64_t index);

/// Sobol direction vectors V_0..V_{n-1}, each < 2^n.
struct DirectionVectorArray {
  std::vector<std::uint32_t> vectors;
  unsigned precision_bits = 0;

  /// Throws ConfigError when empty, when the length differs from
  /// precision_bits, or when a vector is zero or too wide.
  void validate() const;
};

/// Joe-Kuo direction vectors for 1-based `dimension` in [1, 8] truncated to
/// `bits` of precision. Dimension 1 is V_k = 2^(n-1-k).
DirectionVectorArray sobol_direction_vectors(unsigned dimension, unsigned bits);

/// Sobol points in natural index order: x_i is the XOR of V_k over the set
/// bits k of i. Matches the standard point order of common libraries.
std::vector<std::uint32_t> gen_sobol(const DirectionVectorArray& dva, std::size_t count);

/// Hardware recurrence: x_0 = 0, x_{i+1} = x_i ^ V_{LSZ(i)} where LSZ is the
/// least significant zero bit of the counter. Produces the gray-code
/// permutation of gen_sobol (x_i = gen_sobol[i ^ (i >> 1)]).
class SobolGenerator {
 public:
  explicit SobolGenerator(DirectionVectorArray dva);

  std::uint32_t next();
  std::uint64_t index() const noexcept { return counter_; }

 private:
  DirectionVectorArray dva_;
  std::uint64_t counter_ = 0;
  std::uint32_t state_ = 0;
};

std::vector<std::uint32_t> gen_sobol_gray(const DirectionVectorArray& dva, std::size_t count);

/// Number of irreducible GF(2) polynomials available to gen_niederreiter.
inline constexpr unsigned kNiederreiterDimensions = 8;

/// Base-2 Niederreiter points for `dimension` (0 uses the polynomial x and
/// reduces to VDC-2), natural index order, `bits` in [1, 32].
std::vector<std::uint32_t> gen_niederreiter(unsigned dimension, std::size_t count, unsigned bits);

/// Generator-matrix columns of gen_niederreiter: column k is the image of
/// input digit k, packed with the first output digit in the MSB.
std::vector<std::uint32_t> niederreiter_columns(unsigned dimension, unsigned bits);

/// xorshift64* (shifts 12, 25, 27; multiplier 0x2545F4914F6CDD1D). A zero
/// seed is replaced by 0x9E3779B97F4A7C15.
class Xorshift64Star {
 public:
  explicit Xorshift64Star(std::uint64_t seed) noexcept;

  std::uint64_t next() noexcept;
  /// Uniform integer in [0, bound) by rejection; bound > 0.
  std::uint64_t below(std::uint64_t bound) noexcept;

 private:
  std::uint64_t state_;
};

/// One point per stratum [j/N, (j+1)/N), strata visited in seeded-shuffled
/// order. Throws RangeError when points == 0.
std::vector<Fixed64> gen_latin_hypercube(std::size_t points, std::uint64_t seed);

/// 1-D dart throwing: candidates are accepted when at least `min_distance`
/// from every accepted point. Throws GenerationError when
/// min_distance * (points - 1) >= 1 or after `max_attempts` consecutive
/// rejections.
std::vector<Fixed64> gen_poisson_disk(std::size_t points, Fixed64 min_distance, std::uint64_t seed,
                                      std::size_t max_attempts = 100000);

/// Fibonacci LFSR shifting right: the feedback bit is the parity of
/// state & taps and enters at the MSB. A polynomial term x^t maps to mask
/// bit (bits - t); see lfsr_taps_from_exponents.
class Lfsr {
 public:
  Lfsr(unsigned bits, std::uint32_t taps, std::uint32_t seed);

  std::uint32_t state() const noexcept { return state_; }
  std::uint32_t next() noexcept;
  unsigned bits() const noexcept { return bits_; }

 private:
  unsigned bits_;
  std::uint32_t taps_;
  std::uint32_t state_;
};

/// Mask for the polynomial whose non-constant exponents are listed, e.g.
/// {8, 6, 5, 4} for x^8 + x^6 + x^5 + x^4 + 1.
std::uint32_t lfsr_taps_from_exponents(const std::vector<unsigned>& exponents, unsigned bits);

/// Default register: x^8 + x^6 + x^5 + x^4 + 1, seed 1.
inline constexpr unsigned kDefaultLfsrBits = 8;
inline constexpr std::uint32_t kDefaultLfsrTaps = 0x1d;
inline constexpr std::uint32_t kDefaultLfsrSeed = 1;

/// States emitted by the register, starting with the seed.
std::vector<std::uint32_t> gen_lfsr(std::uint32_t taps, unsigned bits, std::uint32_t seed, std::size_t count);

}  // namespace p2lsg
