#pragma once

// Powers-of-2 low-discrepancy sequence generator (P2LSG).
//
// A binary up-counter whose bits are split into log2(B)-bit groups starting at
// the LSB; the groups are emitted in reversed order (the hard-wired
// significance inversion) and the result is cut back to the counter width.
// For B = 2 this is plain bit reversal, i.e. the base-2 Van der Corput
// sequence scaled to [0, 2^n).

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace p2lsg {

/// Widest counter the generator models.
inline constexpr unsigned kMaxCounterBits = 32;

constexpr bool is_power_of_two(std::uint64_t v) noexcept { return v != 0 && (v & (v - 1)) == 0; }

/// log2 of a power of two. Precondition: is_power_of_two(v).
constexpr unsigned exact_log2(std::uint64_t v) noexcept {
  unsigned r = 0;
  while (v > 1) {
    v >>= 1;
    ++r;
  }
  return r;
}

struct P2lsgConfig {
  std::uint64_t base = 2;     // power of two, >= 2
  unsigned counter_bits = 8;  // output precision n
  std::uint32_t par = 1;      // numbers produced per cycle

  /// Throws ConfigError unless base/par are powers of two, 1 <= n <= 32,
  /// log2(base) <= 32 and par < 2^n.
  void validate() const;

  /// Number of distinct counter values, 2^n.
  std::uint64_t period() const noexcept { return std::uint64_t{1} << counter_bits; }

  bool operator==(const P2lsgConfig&) const = default;
};

/// The step-1 up-counter. value < 2^width always holds.
struct CounterState {
  std::uint64_t value = 0;
  unsigned width = 8;

  void advance(std::uint64_t by = 1) noexcept {
    value = (value + by) & ((std::uint64_t{1} << width) - 1);
  }
};

/// Group-wise significance inversion of an n-bit counter value.
///
/// Groups of log2(base) bits are cut from the LSB upward, the last one
/// zero-padded on its high side; the groups are concatenated in reversed
/// order and the n most significant bits of the concatenation are kept.
/// Throws ConfigError for a bad base and DomainError if the value does not
/// fit in counter_bits.
std::uint32_t group_reverse(std::uint64_t counter_value, unsigned counter_bits, std::uint64_t base);

/// First `count` outputs of the serial generator (counter starting at 0).
/// Throws RangeError when count exceeds one counter period.
std::vector<std::uint32_t> p2lsg_sequence(const P2lsgConfig& config, std::size_t count);

/// Parallel variant: log2(par) low counter bits are hard-wired, so one cycle
/// emits the outputs for indices c*par .. c*par + par - 1.
/// Throws ConfigError for an invalid par and RangeError when cycles * par
/// exceeds the period.
std::vector<std::vector<std::uint32_t>> p2lsg_parallel(const P2lsgConfig& config, std::size_t cycles);

/// The two mutually low-correlated generators used for two-input operations
/// at stream length N = 2^m: (base 2, m bits) and (base N, m bits).
std::pair<P2lsgConfig, P2lsgConfig> p2lsg_pair_for_length(std::uint64_t stream_length);

/// Stateful serial/parallel generator. Single owner; copy to fork.
class P2lsgGenerator {
 public:
  explicit P2lsgGenerator(const P2lsgConfig& config);

  const P2lsgConfig& config() const noexcept { return config_; }
  const CounterState& counter() const noexcept { return counter_; }

  /// Output for the current counter value, then advance by one.
  std::uint32_t next();

  /// One parallel cycle: `par` outputs, then advance the counter by `par`.
  std::vector<std::uint32_t> next_cycle();

  void reset() noexcept { counter_.value = 0; }

 private:
  P2lsgConfig config_;
  CounterState counter_;
};

}  // namespace p2lsg
