// Base-2 Niederreiter generator matrices after Bratley, Fox and Niederreiter
// (1992): for each dimension the irreducible polynomial p(x) is raised to
// successive powers and the Laurent coefficients of x^u / p(x)^(Q+1) fill
// the matrix columns.

#include <array>
#include <bit>
#include <string>
#include <vector>

#include "p2lsg/errors.hpp"
#include "p2lsg/sequences.hpp"

namespace p2lsg {

namespace {

using Poly = std::vector<std::uint8_t>;  // GF(2) coefficients, lowest degree first

const std::array<Poly, kNiederreiterDimensions>& irreducible_polys() {
  static const std::array<Poly, kNiederreiterDimensions> polys{{
      {0, 1},           // x
      {1, 1},           // x + 1
      {1, 1, 1},        // x^2 + x + 1
      {1, 1, 0, 1},     // x^3 + x + 1
      {1, 0, 1, 1},     // x^3 + x^2 + 1
      {1, 1, 0, 0, 1},  // x^4 + x + 1
      {1, 0, 0, 1, 1},  // x^4 + x^3 + 1
      {1, 1, 1, 1, 1},  // x^4 + x^3 + x^2 + x + 1
  }};
  return polys;
}

Poly multiply(const Poly& a, const Poly& b) {
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] ^= b[j];
  }
  while (r.size() > 1 && r.back() == 0) r.pop_back();
  return r;
}

// Multiplies `power` by p and recomputes the Laurent coefficients v of
// 1 / p^(Q+1) shifted so v[kj] is the leading one.
void next_power(const Poly& p, Poly& power, std::vector<std::uint8_t>& v) {
  const std::size_t prev_degree = power.size() - 1;
  power = multiply(p, power);
  const std::size_t m = power.size() - 1;

  std::fill(v.begin(), v.end(), 0);
  const std::size_t kj = prev_degree;
  v[kj] = 1;
  for (std::size_t r = kj + 1; r < m; ++r) v[r] = 1;
  for (std::size_t r = 0; r + m < v.size(); ++r) {
    std::uint8_t term = 0;
    for (std::size_t k = 0; k < m; ++k) term ^= power[k] & v[r + k];
    v[r + m] = term;
  }
}

}  // namespace

std::vector<std::uint32_t> niederreiter_columns(unsigned dimension, unsigned bits) {
  if (dimension >= kNiederreiterDimensions) {
    throw ConfigError("Niederreiter dimension must be below " + std::to_string(kNiederreiterDimensions) + ", got " +
                      std::to_string(dimension));
  }
  if (bits == 0 || bits > 32) throw ConfigError("Niederreiter precision must be in [1, 32]");

  const Poly& p = irreducible_polys()[dimension];
  const std::size_t degree = p.size() - 1;
  Poly power{1};
  std::vector<std::uint8_t> v(bits + 2 * degree * (bits + 1) + 1, 0);

  // matrix[input_digit][output_digit]
  std::vector<std::vector<std::uint8_t>> matrix(bits, std::vector<std::uint8_t>(bits, 0));
  std::size_t u = 0;
  for (unsigned out_digit = 0; out_digit < bits; ++out_digit) {
    if (u == 0) next_power(p, power, v);
    for (unsigned in_digit = 0; in_digit < bits; ++in_digit) matrix[in_digit][out_digit] = v[in_digit + u];
    if (++u == degree) u = 0;
  }

  std::vector<std::uint32_t> cols(bits, 0);
  for (unsigned k = 0; k < bits; ++k) {
    for (unsigned r = 0; r < bits; ++r) cols[k] = (cols[k] << 1) | matrix[k][r];
  }
  return cols;
}

std::vector<std::uint32_t> gen_niederreiter(unsigned dimension, std::size_t count, unsigned bits) {
  const auto cols = niederreiter_columns(dimension, bits);
  if (count > (std::uint64_t{1} << bits)) {
    throw RangeError("Niederreiter sequence with " + std::to_string(bits) + "-bit precision has period " +
                     std::to_string(std::uint64_t{1} << bits));
  }
  std::vector<std::uint32_t> out(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::uint32_t x = 0;
    for (std::uint64_t b = i; b != 0; b &= b - 1) x ^= cols[std::countr_zero(b)];
    out[i] = x;
  }
  return out;
}

}  // namespace p2lsg
