#include "p2lsg/unit_value.hpp"

#include <numeric>

#include "p2lsg/errors.hpp"

namespace p2lsg {

namespace {

__extension__ typedef unsigned __int128 u128;

struct Exact {
  u128 num;
  u128 den;
};

Exact exact(const UnitValue& v) {
  return std::visit(
      [](const auto& x) -> Exact {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, UnitRational>) {
          return {x.num, x.den};
        } else if constexpr (std::is_same_v<T, Fixed64>) {
          return {x.frac, u128{1} << 64};
        } else {
          return {x.value, u128{1} << x.bits};
        }
      },
      v);
}

}  // namespace

UnitRational UnitRational::make(std::uint64_t num, std::uint64_t den) {
  if (den == 0 || num >= den) throw DomainError("rational outside [0, 1)");
  const auto g = std::gcd(num, den);
  return {num / g, den / g};
}

double to_double(const UnitValue& v) noexcept {
  return std::visit(
      [](const auto& x) -> double {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, UnitRational>) {
          return static_cast<double>(x.num) / static_cast<double>(x.den);
        } else if constexpr (std::is_same_v<T, Fixed64>) {
          return static_cast<double>(x.frac) * 0x1p-64;
        } else {
          return static_cast<double>(x.value) / static_cast<double>(std::uint64_t{1} << x.bits);
        }
      },
      v);
}

std::uint32_t quantize(const UnitValue& v, unsigned bits) {
  if (bits == 0 || bits > 32) throw ConfigError("quantization width must be in [1, 32]");
  const auto e = exact(v);
  // num < den <= 2^64, so num << 32 fits in 128 bits.
  return static_cast<std::uint32_t>((e.num << bits) / e.den);
}

std::string format_value(const UnitValue& v, ValueFormat format, int digits) {
  if (format == ValueFormat::Native) {
    if (const auto* r = std::get_if<UnitRational>(&v)) {
      if (r->num == 0) return "0";
      return std::to_string(r->num) + "/" + std::to_string(r->den);
    }
    if (const auto* d = std::get_if<Dyadic>(&v)) return std::to_string(d->value);
    digits = 20;
  }
  if (digits < 1) digits = 1;

  const auto e = exact(v);
  // Long division, one extra digit for round-half-up.
  std::string frac_digits;
  u128 rem = e.num;
  for (int i = 0; i <= digits; ++i) {
    rem *= 10;
    frac_digits.push_back(static_cast<char>('0' + static_cast<int>(rem / e.den)));
    rem %= e.den;
  }
  const bool round_up = frac_digits.back() >= '5';
  frac_digits.pop_back();
  int int_part = 0;
  if (round_up) {
    int i = digits - 1;
    for (; i >= 0; --i) {
      if (frac_digits[i] == '9') {
        frac_digits[i] = '0';
      } else {
        ++frac_digits[i];
        break;
      }
    }
    if (i < 0) int_part = 1;
  }
  return std::to_string(int_part) + "." + frac_digits;
}

Fixed64 parse_fixed64(std::string_view text) {
  std::size_t pos = 0;
  while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
  std::string_view frac;
  if (pos < text.size()) {
    if (text[pos] != '.') throw DomainError("malformed decimal '" + std::string(text) + "'");
    frac = text.substr(pos + 1);
    if (frac.empty() && pos == 0) throw DomainError("malformed decimal '" + std::string(text) + "'");
  } else if (pos == 0) {
    throw DomainError("malformed decimal '" + std::string(text) + "'");
  }
  for (char c : frac) {
    if (c < '0' || c > '9') throw DomainError("malformed decimal '" + std::string(text) + "'");
  }
  // floor((d + floor(a)) / 10) == floor((d + a) / 10) for integer d, so
  // folding digits from the last one keeps the result an exact floor.
  u128 acc = 0;
  for (auto it = frac.rbegin(); it != frac.rend(); ++it) {
    acc = ((static_cast<u128>(*it - '0') << 64) + acc) / 10;
  }
  return Fixed64{static_cast<std::uint64_t>(acc)};
}

}  // namespace p2lsg
