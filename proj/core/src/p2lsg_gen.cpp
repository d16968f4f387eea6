#include "p2lsg/p2lsg_gen.hpp"

#include <string>

#include "p2lsg/errors.hpp"

namespace p2lsg {

namespace {

void check_base(std::uint64_t base) {
  if (base < 2 || !is_power_of_two(base)) {
    throw ConfigError("P2LSG base must be a power of two >= 2, got " + std::to_string(base));
  }
  if (exact_log2(base) > kMaxCounterBits) {
    throw ConfigError("P2LSG base wider than " + std::to_string(kMaxCounterBits) + " bits");
  }
}

void check_bits(unsigned bits) {
  if (bits == 0 || bits > kMaxCounterBits) {
    throw ConfigError("counter width must be in [1, " + std::to_string(kMaxCounterBits) + "], got " +
                      std::to_string(bits));
  }
}

}  // namespace

void P2lsgConfig::validate() const {
  check_base(base);
  check_bits(counter_bits);
  if (!is_power_of_two(par)) {
    throw ConfigError("parallelism must be a power of two, got " + std::to_string(par));
  }
  if (exact_log2(par) >= counter_bits) {
    throw ConfigError("parallelism " + std::to_string(par) + " needs fewer than " +
                      std::to_string(counter_bits) + " reserved counter bits");
  }
}

std::uint32_t group_reverse(std::uint64_t counter_value, unsigned counter_bits, std::uint64_t base) {
  check_base(base);
  check_bits(counter_bits);
  if (counter_value >> counter_bits != 0) {
    throw DomainError("counter value " + std::to_string(counter_value) + " does not fit in " +
                      std::to_string(counter_bits) + " bits");
  }

  const unsigned group = exact_log2(base);
  const unsigned groups = (counter_bits + group - 1) / group;
  const std::uint64_t mask = base - 1;

  // At most 32 + 31 bits of concatenation, so a 64-bit accumulator suffices.
  std::uint64_t reversed = 0;
  for (unsigned g = 0; g < groups; ++g) {
    reversed = (reversed << group) | ((counter_value >> (g * group)) & mask);
  }
  return static_cast<std::uint32_t>(reversed >> (groups * group - counter_bits));
}

std::vector<std::uint32_t> p2lsg_sequence(const P2lsgConfig& config, std::size_t count) {
  config.validate();
  if (count > config.period()) {
    throw RangeError("requested " + std::to_string(count) + " values but the counter period is " +
                     std::to_string(config.period()));
  }
  std::vector<std::uint32_t> out(count);
  for (std::size_t i = 0; i < count; ++i) {
    out[i] = group_reverse(i, config.counter_bits, config.base);
  }
  return out;
}

std::vector<std::vector<std::uint32_t>> p2lsg_parallel(const P2lsgConfig& config, std::size_t cycles) {
  config.validate();
  if (cycles > config.period() / config.par) {
    throw RangeError("requested " + std::to_string(cycles) + " cycles of " + std::to_string(config.par) +
                     " outputs but the counter period is " + std::to_string(config.period()));
  }
  P2lsgGenerator gen(config);
  std::vector<std::vector<std::uint32_t>> out;
  out.reserve(cycles);
  for (std::size_t c = 0; c < cycles; ++c) out.push_back(gen.next_cycle());
  return out;
}

std::pair<P2lsgConfig, P2lsgConfig> p2lsg_pair_for_length(std::uint64_t stream_length) {
  if (stream_length < 2 || !is_power_of_two(stream_length)) {
    throw ConfigError("stream length must be a power of two >= 2, got " + std::to_string(stream_length));
  }
  const unsigned m = exact_log2(stream_length);
  if (m > kMaxCounterBits) throw ConfigError("stream length exceeds 2^32");
  return {P2lsgConfig{2, m, 1}, P2lsgConfig{stream_length, m, 1}};
}

P2lsgGenerator::P2lsgGenerator(const P2lsgConfig& config) : config_(config) {
  config_.validate();
  counter_.width = config_.counter_bits;
}

std::uint32_t P2lsgGenerator::next() {
  const auto out = group_reverse(counter_.value, config_.counter_bits, config_.base);
  counter_.advance();
  return out;
}

std::vector<std::uint32_t> P2lsgGenerator::next_cycle() {
  // The shared counter drives the high bits; lane j hard-wires j into the
  // reserved low bits.
  std::vector<std::uint32_t> lanes(config_.par);
  for (std::uint32_t j = 0; j < config_.par; ++j) {
    lanes[j] = group_reverse(counter_.value | j, config_.counter_bits, config_.base);
  }
  counter_.advance(config_.par);
  return lanes;
}

}  // namespace p2lsg
