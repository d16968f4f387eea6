#include <array>
#include <bit>
#include <string>

#include "p2lsg/errors.hpp"
#include "p2lsg/sequences.hpp"

namespace p2lsg {

namespace {

struct DirectionNumbers {
  unsigned s;                  // degree of the primitive polynomial
  unsigned a;                  // its inner coefficients
  std::array<std::uint32_t, 5> m;  // initial odd integers m_1..m_s
};

// Joe & Kuo (2008), new-joe-kuo-6.21201, dimensions 2..8.
constexpr std::array<DirectionNumbers, 7> kJoeKuo{{
    {1, 0, {1}},
    {2, 1, {1, 3}},
    {3, 1, {1, 3, 1}},
    {3, 2, {1, 1, 1}},
    {4, 1, {1, 1, 3, 3}},
    {4, 4, {1, 3, 5, 13}},
    {5, 2, {1, 1, 5, 5, 17}},
}};

constexpr unsigned kWordBits = 32;

}  // namespace

void DirectionVectorArray::validate() const {
  if (vectors.empty()) throw ConfigError("direction vector array is empty");
  if (precision_bits == 0 || precision_bits > 32) throw ConfigError("direction vector precision must be in [1, 32]");
  if (vectors.size() != precision_bits) {
    throw ConfigError("direction vector array holds " + std::to_string(vectors.size()) + " vectors for " +
                      std::to_string(precision_bits) + "-bit precision");
  }
  for (auto v : vectors) {
    if (v == 0) throw ConfigError("direction vectors must be nonzero");
    if (precision_bits < 32 && (v >> precision_bits) != 0) throw ConfigError("direction vector wider than precision");
  }
}

DirectionVectorArray sobol_direction_vectors(unsigned dimension, unsigned bits) {
  if (bits == 0 || bits > kWordBits) throw ConfigError("Sobol precision must be in [1, 32]");
  if (dimension == 0 || dimension > kJoeKuo.size() + 1) {
    throw ConfigError("Sobol dimension must be in [1, " + std::to_string(kJoeKuo.size() + 1) + "], got " +
                      std::to_string(dimension));
  }

  std::array<std::uint32_t, kWordBits> v{};
  if (dimension == 1) {
    for (unsigned k = 0; k < kWordBits; ++k) v[k] = std::uint32_t{1} << (kWordBits - 1 - k);
  } else {
    const auto& dn = kJoeKuo[dimension - 2];
    for (unsigned k = 0; k < kWordBits && k < dn.s; ++k) v[k] = dn.m[k] << (kWordBits - 1 - k);
    for (unsigned k = dn.s; k < kWordBits; ++k) {
      v[k] = v[k - dn.s] ^ (v[k - dn.s] >> dn.s);
      for (unsigned j = 1; j < dn.s; ++j) {
        if ((dn.a >> (dn.s - 1 - j)) & 1U) v[k] ^= v[k - j];
      }
    }
  }

  DirectionVectorArray dva;
  dva.precision_bits = bits;
  dva.vectors.reserve(bits);
  for (unsigned k = 0; k < bits; ++k) dva.vectors.push_back(v[k] >> (kWordBits - bits));
  return dva;
}

std::vector<std::uint32_t> gen_sobol(const DirectionVectorArray& dva, std::size_t count) {
  dva.validate();
  if (count > (std::uint64_t{1} << dva.precision_bits)) {
    throw RangeError("Sobol sequence with " + std::to_string(dva.precision_bits) + "-bit vectors has period " +
                     std::to_string(std::uint64_t{1} << dva.precision_bits));
  }
  std::vector<std::uint32_t> out(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::uint32_t x = 0;
    for (std::uint64_t bits = i; bits != 0; bits &= bits - 1) x ^= dva.vectors[std::countr_zero(bits)];
    out[i] = x;
  }
  return out;
}

SobolGenerator::SobolGenerator(DirectionVectorArray dva) : dva_(std::move(dva)) { dva_.validate(); }

std::uint32_t SobolGenerator::next() {
  if (counter_ >> dva_.precision_bits != 0) throw RangeError("Sobol generator exhausted its period");
  const auto out = state_;
  const auto lsz = static_cast<unsigned>(std::countr_one(counter_));
  if (lsz < dva_.precision_bits) state_ ^= dva_.vectors[lsz];
  ++counter_;
  return out;
}

std::vector<std::uint32_t> gen_sobol_gray(const DirectionVectorArray& dva, std::size_t count) {
  SobolGenerator gen(dva);
  std::vector<std::uint32_t> out(count);
  for (auto& x : out) x = gen.next();
  return out;
}

}  // namespace p2lsg
