#include <doctest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "p2lsg/errors.hpp"
#include "p2lsg/p2lsg_gen.hpp"
#include "p2lsg/sequence_spec.hpp"

using namespace p2lsg;

namespace {

ThresholdSequence p2lsg_thresholds(std::uint64_t base, unsigned bits) {
  return {p2lsg_sequence({base, bits, 1}, std::size_t{1} << bits), bits};
}

}  // namespace

TEST_CASE("packing") {
  Bitstream s(70);
  CHECK(s.words().size() == 2);
  s.set(0, true);
  s.set(69, true);
  CHECK(s.words()[0] == 1);
  CHECK(s.words()[1] == (std::uint64_t{1} << 5));
  CHECK(s.popcount() == 2);
  CHECK(Bitstream::ones(70).words()[1] == 0x3f);
  CHECK(Bitstream::from_words({~0ULL, ~0ULL}, 70) == Bitstream::ones(70));
  CHECK(Bitstream::from_string("0110").to_string() == "0110");
  CHECK_THROWS_AS(Bitstream(0), DomainError);
  CHECK_THROWS_AS(Bitstream::from_string("01a"), DomainError);
}

TEST_CASE("sng_generate") {
  const auto b2 = p2lsg_thresholds(2, 8);
  CHECK(sng_generate({128, 8}, b2, 256).popcount() == 128);
  CHECK(sng_generate({0, 8}, b2, 256).popcount() == 0);
  // 3/4 at two bits against VDC-2 thresholds 0, 2, 1, 3.
  const ThresholdSequence vdc2{{0, 2, 1, 3}, 2};
  CHECK(sng_generate({3, 2}, vdc2, 4).to_string() == "1110");
  CHECK(oracle::encode(3, vdc2.values, 4) == oracle::from_string("1110"));
  CHECK_THROWS_AS(sng_generate({3, 2}, b2, 4), ConfigError);
  CHECK_THROWS_AS(sng_generate({3, 8}, b2, 512), GenerationError);
  CHECK_THROWS_AS(FixedUnipolar::make(256, 8), DomainError);
}

TEST_CASE("full-period encoding is exact") {
  for (std::uint64_t base : {2, 4, 16, 256}) {
    const auto t = p2lsg_thresholds(base, 8);
    for (std::uint32_t x = 0; x < 256; ++x) REQUIRE(sng_generate({x, 8}, t, 256).popcount() == x);
  }
}

TEST_CASE("decode") {
  CHECK(decode_unipolar(Bitstream::from_string("1100")) == 0.5);
  CHECK(decode_unipolar(Bitstream::ones(8)) == 1.0);
  CHECK(decode_unipolar(Bitstream::from_string("10110001")) == 0.5);
  CHECK(decode_bipolar(Bitstream::ones(5)) == 1.0);
  CHECK(decode_bipolar(Bitstream::zeros(5)) == -1.0);
  CHECK(decode_bipolar(Bitstream::from_string("1010")) == 0.0);
}

TEST_CASE("scc examples") {
  const auto s = [](const char* t) { return Bitstream::from_string(t); };
  CHECK(scc(s("1100"), s("1100")) == 1.0);
  CHECK(scc(s("1100"), s("0011")) == -1.0);
  CHECK(scc(s("1010"), s("1100")) == 0.0);
  CHECK(scc_counts(s("1010"), s("1100")) == SccCounts{1, 1, 1, 1, 4});
  CHECK(!scc(Bitstream::ones(4), s("1100")).has_value());
  CHECK(!scc(Bitstream::zeros(4), s("1100")).has_value());
  CHECK_THROWS_AS(scc(s("10"), s("100")), DomainError);
}

TEST_CASE("scc matches the unpacked oracle and is symmetric") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + rng() % 300;
    Bitstream a(n), b(n);
    oracle::Bits oa(n), ob(n);
    const auto pa = rng() % 101;
    const auto pb = rng() % 101;
    for (std::size_t i = 0; i < n; ++i) {
      oa[i] = rng() % 100 < pa;
      ob[i] = rng() % 100 < pb;
      a.set(i, oa[i]);
      b.set(i, ob[i]);
    }
    const auto ab = scc(a, b);
    const auto ba = scc(b, a);
    const auto ref = oracle::scc(oa, ob);
    REQUIRE(ab.has_value() == ref.defined);
    REQUIRE(ab == ba);
    if (ab) REQUIRE(*ab == doctest::Approx(ref.value).epsilon(1e-12));
  }
}

TEST_CASE("same-sequence streams are fully correlated") {
  const auto t = p2lsg_thresholds(2, 8);
  for (std::uint32_t x = 1; x < 256; x += 17) {
    for (std::uint32_t y = 1; y < 256; y += 13) {
      REQUIRE(scc(sng_generate({x, 8}, t, 256), sng_generate({y, 8}, t, 256)) == 1.0);
    }
  }
  const auto s = sng_generate({77, 8}, t, 256);
  CHECK(scc(s, s) == 1.0);
}

TEST_CASE("text and binary serialization") {
  const auto s = sng_generate({99, 8}, p2lsg_thresholds(4, 8), 200);
  std::stringstream text;
  write_bitstream_text(text, s, 64);
  CHECK(read_bitstream_text(text) == s);

  std::stringstream bin(std::ios::in | std::ios::out | std::ios::binary);
  write_bitstream_binary(bin, s);
  CHECK(bin.str().size() == 8 + 25);
  CHECK(bin.str()[0] == static_cast<char>(200));
  CHECK(read_bitstream_binary(bin) == s);

  std::stringstream bad("0101\n01x1");
  try {
    read_bitstream_text(bad);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 7);
  }
  std::stringstream empty("  \n");
  CHECK_THROWS_AS(read_bitstream_text(empty), ParseError);
  std::stringstream truncated(std::string("\x10\0\0\0\0\0\0\0\x01", 9));
  CHECK_THROWS_AS(read_bitstream_binary(truncated), ParseError);
}
