#pragma once

// Exhaustive accuracy sweeps for SC multiplication (AND of two uncorrelated
// streams) and scaled addition (MUX of two correlated addends with a 1/2
// select), over every pair of n-bit inputs.
//
// Errors are accumulated as exact integers: with D the common denominator
// of the estimate and the exact result, each pair contributes
// |estimate * D - exact * D|, so a sweep is independent of how pairs are
// split across workers.

#include <cstdint>
#include <string>
#include <vector>

#include "p2lsg/sequence_spec.hpp"

namespace p2lsg {

enum class BenchOp { Mul, Add };

struct BenchConfig {
  BenchOp operation = BenchOp::Mul;
  SequenceSpec first;   // both inputs (add) or input 1 (mul)
  SequenceSpec second;  // input 2 (mul) or the select stream (add)
  std::vector<std::uint64_t> lengths;
  unsigned input_bits = 8;
  unsigned workers = 0;  // 0: one per hardware thread
  std::string label;     // row label in tables; derived from the specs when empty

  /// Lengths must be ascending powers of two; input_bits in [1, 10].
  void validate() const;
};

struct MaeRow {
  std::uint64_t length = 0;
  std::uint64_t error_sum = 0;    // sum of |numerator errors| over all pairs
  std::uint64_t denominator = 0;  // pairs * per-pair denominator
  double mae_percent = 0.0;       // 100 * error_sum / denominator
  double wall_seconds = 0.0;
};

struct MaeReport {
  BenchConfig config;
  std::vector<MaeRow> rows;

  std::string label() const;
};

/// Multiplication sweep. Throws GenerationError when a sequence cannot
/// provide N values.
MaeReport mae_mul_sweep(const BenchConfig& config);

/// Scaled-addition sweep: addends from config.first, a 1/2 select from
/// config.second, compared against (x1 + x2) / 2.
MaeReport mae_add_sweep(const BenchConfig& config);

/// Dispatches on config.operation.
MaeReport run_sweep(const BenchConfig& config);

/// 100 * error_sum / denominator, exact when it terminates within
/// `max_digits` fractional digits.
std::string exact_percent(const MaeRow& row, int max_digits = 24);

/// 100 * error_sum / denominator rounded half-to-even to `decimals` places.
std::string rounded_percent(const MaeRow& row, int decimals);

/// Display precision per column: mul uses 2 decimals up to 2^8, 3 up to
/// 2^12 and 4 beyond; add uses 2.
int display_decimals(BenchOp op, std::uint64_t length);

enum class ReportFormat { Csv, Table };

struct EmitOptions {
  bool timing = false;  // print wall_seconds; "NA" otherwise so output is reproducible
};

/// CSV: header "length,mae_percent,wall_seconds" and one line per row.
/// Table: one row per report, one column per length.
std::string emit_report(const MaeReport& report, ReportFormat format, EmitOptions options = {});
std::string emit_reports(const std::vector<MaeReport>& reports, ReportFormat format, EmitOptions options = {});

/// The ten labelled comparison rows: sequence pairs and lengths
/// (2^6..2^16 for mul, 2^2..2^9 for add).
std::vector<BenchConfig> comparison_preset(BenchOp op);

}  // namespace p2lsg
