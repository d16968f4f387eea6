#include <algorithm>
#include <bit>
#include <iterator>
#include <numeric>
#include <set>
#include <string>

#include "p2lsg/errors.hpp"
#include "p2lsg/sequences.hpp"

namespace p2lsg {

namespace {

__extension__ typedef unsigned __int128 u128;

constexpr std::uint64_t kMaxRadix = std::uint64_t{1} << 31;

std::vector<std::uint64_t> digits_of(std::uint64_t index, std::uint64_t base) {
  std::vector<std::uint64_t> d;
  while (index != 0) {
    d.push_back(index % base);
    index /= base;
  }
  return d;
}

// Mirrors digits d_0, d_1, ... to sum d_j * base^-(j+1).
UnitRational mirror(const std::vector<std::uint64_t>& digits, std::uint64_t base) {
  u128 num = 0;
  u128 den = 1;
  for (auto d : digits) {
    num = num * base + d;
    den *= base;
    if (den > UINT64_MAX) throw RangeError("radical inverse denominator exceeds 64 bits");
  }
  return UnitRational::make(static_cast<std::uint64_t>(num), static_cast<std::uint64_t>(den));
}

void check_radix(std::uint64_t base) {
  if (base < 2) throw ConfigError("radix must be >= 2, got " + std::to_string(base));
  if (base > kMaxRadix) throw ConfigError("radix must be <= 2^31, got " + std::to_string(base));
}

void check_prime(std::uint64_t p) {
  check_radix(p);
  if (!is_prime(p)) throw ConfigError(std::to_string(p) + " is not prime");
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t f = 3; f <= n / f; f += 2) {
    if (n % f == 0) return false;
  }
  return true;
}

UnitRational gen_vdc(std::uint64_t base, std::uint64_t index) {
  check_radix(base);
  return mirror(digits_of(index, base), base);
}

Fixed64 gen_weyl(Fixed64 alpha, std::uint64_t index) {
  if (alpha.frac == 0) throw ConfigError("Weyl constant must have a nonzero fractional part");
  return Fixed64{alpha.frac * index};  // wraps modulo 2^64, i.e. frac()
}

Fixed64 gen_r2(unsigned dimension, std::uint64_t index) {
  if (dimension > 1) throw ConfigError("R2 supports dimensions 0 and 1, got " + std::to_string(dimension));
  return gen_weyl(dimension == 0 ? kPlasticInv1 : kPlasticInv2, index);
}

UnitRational gen_halton(std::uint64_t prime_base, std::uint64_t index) {
  check_prime(prime_base);
  return gen_vdc(prime_base, index);
}

std::pair<UnitRational, UnitRational> gen_hammersley_pair(std::uint64_t index) {
  return {gen_vdc(2, index), gen_vdc(3, index)};
}

UnitRational gen_faure(std::uint64_t prime, unsigned dimension, std::uint64_t index) {
  check_prime(prime);
  const auto a = digits_of(index, prime);
  const std::size_t k = a.size();

  // binom[j][r] = C(j, r) mod p
  std::vector<std::vector<std::uint64_t>> binom(k, std::vector<std::uint64_t>(k, 0));
  for (std::size_t j = 0; j < k; ++j) {
    binom[j][0] = 1;
    for (std::size_t r = 1; r <= j; ++r) binom[j][r] = (binom[j - 1][r - 1] + (r < j ? binom[j - 1][r] : 0)) % prime;
  }
  // pow_d[e] = dimension^e mod p
  std::vector<std::uint64_t> pow_d(k + 1, 1);
  for (std::size_t e = 1; e <= k; ++e) pow_d[e] = (pow_d[e - 1] * (dimension % prime)) % prime;

  std::vector<std::uint64_t> y(k, 0);
  for (std::size_t r = 0; r < k; ++r) {
    u128 acc = 0;
    for (std::size_t j = r; j < k; ++j) acc += static_cast<u128>(binom[j][r] * pow_d[j - r] % prime) * a[j];
    y[r] = static_cast<std::uint64_t>(acc % prime);
  }
  return mirror(y, prime);
}

Xorshift64Star::Xorshift64Star(std::uint64_t seed) noexcept : state_(seed != 0 ? seed : 0x9E3779B97F4A7C15ULL) {}

std::uint64_t Xorshift64Star::next() noexcept {
  state_ ^= state_ >> 12;
  state_ ^= state_ << 25;
  state_ ^= state_ >> 27;
  return state_ * 0x2545F4914F6CDD1DULL;
}

std::uint64_t Xorshift64Star::below(std::uint64_t bound) noexcept {
  // Reject the partial block at the top so every residue is equally likely.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x = next();
  while (x >= limit) x = next();
  return x % bound;
}

std::vector<Fixed64> gen_latin_hypercube(std::size_t points, std::uint64_t seed) {
  if (points == 0) throw RangeError("Latin hypercube needs at least one point");
  Xorshift64Star rng(seed);
  std::vector<std::uint64_t> strata(points);
  std::iota(strata.begin(), strata.end(), std::uint64_t{0});
  for (std::size_t i = points - 1; i > 0; --i) std::swap(strata[i], strata[rng.below(i + 1)]);

  std::vector<Fixed64> out;
  out.reserve(points);
  for (auto s : strata) {
    const u128 scaled = (static_cast<u128>(s) << 64) + rng.next();
    out.push_back(Fixed64{static_cast<std::uint64_t>(scaled / points)});
  }
  return out;
}

std::vector<Fixed64> gen_poisson_disk(std::size_t points, Fixed64 min_distance, std::uint64_t seed,
                                      std::size_t max_attempts) {
  if (points == 0) throw RangeError("Poisson disk needs at least one point");
  if (max_attempts == 0) throw ConfigError("max_attempts must be >= 1");
  if (static_cast<u128>(min_distance.frac) * (points - 1) >= (u128{1} << 64)) {
    throw GenerationError("minimum distance too large for " + std::to_string(points) + " points");
  }

  Xorshift64Star rng(seed);
  std::set<std::uint64_t> accepted;
  std::vector<Fixed64> out;
  out.reserve(points);
  std::size_t rejections = 0;
  while (out.size() < points) {
    const std::uint64_t c = rng.next();
    bool ok = true;
    auto hi = accepted.lower_bound(c);
    if (hi != accepted.end() && *hi - c < min_distance.frac) ok = false;
    if (ok && hi != accepted.begin() && c - *std::prev(hi) < min_distance.frac) ok = false;
    if (!ok) {
      if (++rejections >= max_attempts) {
        throw GenerationError("Poisson disk gave up after " + std::to_string(max_attempts) +
                              " consecutive rejections with " + std::to_string(out.size()) + " points");
      }
      continue;
    }
    rejections = 0;
    accepted.insert(c);
    out.push_back(Fixed64{c});
  }
  return out;
}

Lfsr::Lfsr(unsigned bits, std::uint32_t taps, std::uint32_t seed) : bits_(bits), taps_(taps), state_(seed) {
  if (bits < 2 || bits > 32) throw ConfigError("LFSR width must be in [2, 32]");
  const std::uint32_t mask = bits == 32 ? UINT32_MAX : ((std::uint32_t{1} << bits) - 1);
  if (taps == 0 || (taps & ~mask) != 0) throw ConfigError("LFSR taps do not fit the register");
  if ((seed & mask) == 0 || (seed & ~mask) != 0) throw ConfigError("LFSR seed must be a nonzero register value");
}

std::uint32_t Lfsr::next() noexcept {
  const auto feedback = static_cast<std::uint32_t>(std::popcount(state_ & taps_) & 1);
  state_ = (state_ >> 1) | (feedback << (bits_ - 1));
  return state_;
}

std::uint32_t lfsr_taps_from_exponents(const std::vector<unsigned>& exponents, unsigned bits) {
  std::uint32_t mask = 0;
  for (auto t : exponents) {
    if (t == 0 || t > bits) throw ConfigError("LFSR tap exponent " + std::to_string(t) + " out of range");
    mask |= std::uint32_t{1} << (bits - t);
  }
  return mask;
}

std::vector<std::uint32_t> gen_lfsr(std::uint32_t taps, unsigned bits, std::uint32_t seed, std::size_t count) {
  Lfsr reg(bits, taps, seed);
  std::vector<std::uint32_t> out;
  out.reserve(count);
  if (count == 0) return out;
  out.push_back(reg.state());
  while (out.size() < count) out.push_back(reg.next());
  return out;
}

}  // namespace p2lsg
