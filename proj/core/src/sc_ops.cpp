#include "p2lsg/sc_ops.hpp"

#include <bit>
#include <initializer_list>

#include "p2lsg/errors.hpp"

namespace p2lsg {

namespace {

void require_same_length(std::initializer_list<const Bitstream*> streams) {
  const auto n = (*streams.begin())->size();
  for (const auto* s : streams) {
    if (s->size() != n) throw DomainError("SC operands must have equal lengths");
  }
}

template <class Op>
Bitstream wordwise(const Bitstream& s1, const Bitstream& s2, Op op) {
  require_same_length({&s1, &s2});
  Bitstream out(s1.size());
  auto w = out.mutable_words();
  const auto a = s1.words();
  const auto b = s2.words();
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = op(a[i], b[i]);
  out.clear_padding();
  return out;
}

}  // namespace

Bitstream mul_unipolar(const Bitstream& s1, const Bitstream& s2) {
  return wordwise(s1, s2, [](std::uint64_t a, std::uint64_t b) { return a & b; });
}

Bitstream mul_bipolar(const Bitstream& s1, const Bitstream& s2) {
  return wordwise(s1, s2, [](std::uint64_t a, std::uint64_t b) { return ~(a ^ b); });
}

Bitstream min_correlated(const Bitstream& s1, const Bitstream& s2) { return mul_unipolar(s1, s2); }

Bitstream mux2(const Bitstream& s1, const Bitstream& s2, const Bitstream& select) {
  require_same_length({&s1, &s2, &select});
  Bitstream out(s1.size());
  auto w = out.mutable_words();
  const auto a = s1.words();
  const auto b = s2.words();
  const auto s = select.words();
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = (a[i] & ~s[i]) | (b[i] & s[i]);
  return out;
}

Bitstream mux2_sub(const Bitstream& s1, const Bitstream& s2, const Bitstream& select) {
  require_same_length({&s1, &s2, &select});
  Bitstream out(s1.size());
  auto w = out.mutable_words();
  const auto a = s1.words();
  const auto b = s2.words();
  const auto s = select.words();
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = (a[i] & ~s[i]) | (~b[i] & s[i]);
  out.clear_padding();
  return out;
}

namespace {

std::uint64_t mux4_word(std::uint64_t d11, std::uint64_t d12, std::uint64_t d21, std::uint64_t d22, std::uint64_t u,
                        std::uint64_t v) {
  const auto low = (d11 & ~v) | (d12 & v);
  const auto high = (d21 & ~v) | (d22 & v);
  return (low & ~u) | (high & u);
}

}  // namespace

Bitstream mux4(const Bitstream& i11, const Bitstream& i12, const Bitstream& i21, const Bitstream& i22,
               const Bitstream& sel_u, const Bitstream& sel_v) {
  require_same_length({&i11, &i12, &i21, &i22, &sel_u, &sel_v});
  Bitstream out(i11.size());
  auto w = out.mutable_words();
  for (std::size_t i = 0; i < w.size(); ++i) {
    w[i] = mux4_word(i11.words()[i], i12.words()[i], i21.words()[i], i22.words()[i], sel_u.words()[i],
                     sel_v.words()[i]);
  }
  return out;
}

std::size_t mux4_popcount(const Bitstream& i11, const Bitstream& i12, const Bitstream& i21, const Bitstream& i22,
                          const Bitstream& sel_u, const Bitstream& sel_v) {
  require_same_length({&i11, &i12, &i21, &i22, &sel_u, &sel_v});
  std::size_t n = 0;
  for (std::size_t i = 0; i < i11.words().size(); ++i) {
    n += static_cast<std::size_t>(std::popcount(mux4_word(i11.words()[i], i12.words()[i], i21.words()[i],
                                                          i22.words()[i], sel_u.words()[i], sel_v.words()[i])));
  }
  return n;
}

std::size_t and_popcount(const Bitstream& s1, const Bitstream& s2) {
  require_same_length({&s1, &s2});
  const auto a = s1.words();
  const auto b = s2.words();
  std::size_t n = 0;
  for (std::size_t i = 0; i < a.size(); ++i) n += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return n;
}

std::size_t mux2_popcount(const Bitstream& s1, const Bitstream& s2, const Bitstream& select) {
  require_same_length({&s1, &s2, &select});
  const auto a = s1.words();
  const auto b = s2.words();
  const auto s = select.words();
  std::size_t n = 0;
  for (std::size_t i = 0; i < a.size(); ++i) n += static_cast<std::size_t>(std::popcount((a[i] & ~s[i]) | (b[i] & s[i])));
  return n;
}

}  // namespace p2lsg
