#include "p2lsg/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <sstream>
#include <thread>

#include "p2lsg/errors.hpp"
#include "p2lsg/p2lsg_gen.hpp"
#include "p2lsg/sc_ops.hpp"

namespace p2lsg {

namespace {

__extension__ typedef unsigned __int128 u128;

unsigned resolve_workers(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1U, std::thread::hardware_concurrency());
}

std::vector<Bitstream> encode_all(const ThresholdSequence& seq, std::size_t length, unsigned bits) {
  std::vector<Bitstream> out;
  out.reserve(std::size_t{1} << bits);
  for (std::uint32_t k = 0; k < (1U << bits); ++k) out.push_back(sng_generate(FixedUnipolar{k, bits}, seq, length));
  return out;
}

// Sums per_pair(k1, k2) over all k1, k2 < 2^bits, rows split across workers.
template <class PerPair>
std::uint64_t sweep_pairs(unsigned bits, unsigned workers, PerPair per_pair) {
  const std::uint32_t values = 1U << bits;
  workers = std::min<unsigned>(workers, values);
  std::vector<std::uint64_t> partial(workers, 0);
  auto run = [&](unsigned w) {
    std::uint64_t sum = 0;
    for (std::uint32_t k1 = w; k1 < values; k1 += workers) {
      for (std::uint32_t k2 = 0; k2 < values; ++k2) sum += per_pair(k1, k2);
    }
    partial[w] = sum;
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }
  std::uint64_t total = 0;
  for (auto p : partial) total += p;
  return total;
}

// A sequence whose period is shorter than the stream cannot feed the sweep.
ThresholdSequence sweep_thresholds(const SequenceSpec& spec, std::uint64_t length, unsigned bits) {
  try {
    return make_thresholds(spec, length, bits, length);
  } catch (const RangeError& e) {
    throw GenerationError(e.what());
  }
}

std::uint64_t abs_diff(std::uint64_t a, std::uint64_t b) { return a > b ? a - b : b - a; }

void finish_row(MaeRow& row) {
  row.mae_percent = 100.0 * static_cast<double>(row.error_sum) / static_cast<double>(row.denominator);
}

std::string format_decimal(u128 num, u128 den, int max_digits, bool exact_mode, int decimals) {
  // num/den >= 0; integer part fits comfortably.
  const u128 int_part = num / den;
  u128 rem = num % den;
  std::string digits;
  const int wanted = exact_mode ? max_digits : decimals;
  for (int i = 0; i < wanted && (!exact_mode || rem != 0); ++i) {
    rem *= 10;
    digits.push_back(static_cast<char>('0' + static_cast<int>(rem / den)));
    rem %= den;
  }
  u128 ip = int_part;
  if (!exact_mode) {
    // Half-to-even on the remainder.
    const u128 twice = rem * 2;
    const int last = digits.empty() ? static_cast<int>(ip % 10) : digits.back() - '0';
    if (twice > den || (twice == den && (last % 2) == 1)) {
      int i = static_cast<int>(digits.size()) - 1;
      for (; i >= 0; --i) {
        if (digits[i] == '9') {
          digits[i] = '0';
        } else {
          ++digits[i];
          break;
        }
      }
      if (i < 0) ++ip;
    }
  }
  std::string out;
  if (ip == 0) {
    out = "0";
  } else {
    while (ip != 0) {
      out.insert(out.begin(), static_cast<char>('0' + static_cast<int>(ip % 10)));
      ip /= 10;
    }
  }
  if (!digits.empty()) out += "." + digits;
  return out;
}

std::string length_header(std::uint64_t n) {
  if (is_power_of_two(n)) return "2^" + std::to_string(exact_log2(n));
  return std::to_string(n);
}

}  // namespace

void BenchConfig::validate() const {
  if (input_bits == 0 || input_bits > 10) throw ConfigError("input precision must be in [1, 10] bits");
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    if (lengths[i] < 2 || !is_power_of_two(lengths[i])) {
      throw ConfigError("stream lengths must be powers of two >= 2, got " + std::to_string(lengths[i]));
    }
    if (i > 0 && lengths[i] <= lengths[i - 1]) throw ConfigError("stream lengths must be strictly ascending");
    if (4 * input_bits + exact_log2(lengths[i]) > 63) throw ConfigError("stream length too large for exact sums");
  }
  first.validate();
  second.validate();
}

std::string MaeReport::label() const {
  if (!config.label.empty()) return config.label;
  return to_string(config.first) + " x " + to_string(config.second);
}

MaeReport mae_mul_sweep(const BenchConfig& config) {
  config.validate();
  if (config.operation != BenchOp::Mul) throw ConfigError("mae_mul_sweep needs a mul configuration");
  const unsigned n = config.input_bits;
  const unsigned workers = resolve_workers(config.workers);
  MaeReport report{config, {}};
  for (const auto length : config.lengths) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto seq1 = sweep_thresholds(config.first, length, n);
    const auto seq2 = sweep_thresholds(config.second, length, n);
    const auto s1 = encode_all(seq1, length, n);
    const auto s2 = encode_all(seq2, length, n);

    // estimate = count / N, exact = k1 k2 / 2^2n; common denominator N 2^2n.
    MaeRow row;
    row.length = length;
    row.error_sum = sweep_pairs(n, workers, [&](std::uint32_t k1, std::uint32_t k2) {
      const std::uint64_t count = and_popcount(s1[k1], s2[k2]);
      return abs_diff(count << (2 * n), std::uint64_t{k1} * k2 * length);
    });
    row.denominator = (length << (2 * n)) << (2 * n);
    finish_row(row);
    row.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report.rows.push_back(row);
  }
  return report;
}

MaeReport mae_add_sweep(const BenchConfig& config) {
  config.validate();
  if (config.operation != BenchOp::Add) throw ConfigError("mae_add_sweep needs an add configuration");
  const unsigned n = config.input_bits;
  const unsigned workers = resolve_workers(config.workers);
  MaeReport report{config, {}};
  for (const auto length : config.lengths) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto data = sweep_thresholds(config.first, length, n);
    const auto sel_seq = sweep_thresholds(config.second, length, n);
    const auto s = encode_all(data, length, n);
    const auto select = sng_generate(FixedUnipolar{1U << (n - 1), n}, sel_seq, length);

    // estimate = count / N, exact = (k1 + k2) / 2^(n+1).
    MaeRow row;
    row.length = length;
    row.error_sum = sweep_pairs(n, workers, [&](std::uint32_t k1, std::uint32_t k2) {
      const std::uint64_t count = mux2_popcount(s[k1], s[k2], select);
      return abs_diff(count << (n + 1), (std::uint64_t{k1} + k2) * length);
    });
    row.denominator = (length << (n + 1)) << (2 * n);
    finish_row(row);
    row.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report.rows.push_back(row);
  }
  return report;
}

MaeReport run_sweep(const BenchConfig& config) {
  return config.operation == BenchOp::Mul ? mae_mul_sweep(config) : mae_add_sweep(config);
}

std::string exact_percent(const MaeRow& row, int max_digits) {
  return format_decimal(u128{row.error_sum} * 100, row.denominator, max_digits, true, 0);
}

std::string rounded_percent(const MaeRow& row, int decimals) {
  return format_decimal(u128{row.error_sum} * 100, row.denominator, 0, false, decimals);
}

int display_decimals(BenchOp op, std::uint64_t length) {
  if (op == BenchOp::Add) return 2;
  if (length <= 256) return 2;
  if (length <= 4096) return 3;
  return 4;
}

std::string emit_report(const MaeReport& report, ReportFormat format, EmitOptions options) {
  return emit_reports({report}, format, options);
}

std::string emit_reports(const std::vector<MaeReport>& reports, ReportFormat format, EmitOptions options) {
  std::ostringstream out;
  if (format == ReportFormat::Csv) {
    const bool multi = reports.size() > 1;
    out << (multi ? "sequence," : "") << "length,mae_percent,wall_seconds\n";
    for (const auto& r : reports) {
      for (const auto& row : r.rows) {
        if (multi) out << r.label() << ',';
        out << row.length << ',' << exact_percent(row) << ',';
        if (options.timing) {
          char buf[32];
          std::snprintf(buf, sizeof buf, "%.6f", row.wall_seconds);
          out << buf;
        } else {
          out << "NA";
        }
        out << '\n';
      }
    }
    return out.str();
  }

  std::vector<std::uint64_t> lengths;
  for (const auto& r : reports) {
    for (const auto& row : r.rows) lengths.push_back(row.length);
  }
  std::sort(lengths.begin(), lengths.end());
  lengths.erase(std::unique(lengths.begin(), lengths.end()), lengths.end());

  std::vector<std::vector<std::string>> cells;
  cells.push_back({"Sequence"});
  for (auto n : lengths) cells.back().push_back(length_header(n));
  for (const auto& r : reports) {
    std::map<std::uint64_t, const MaeRow*> by_length;
    for (const auto& row : r.rows) by_length[row.length] = &row;
    std::vector<std::string> line{r.label()};
    for (auto n : lengths) {
      const auto it = by_length.find(n);
      line.push_back(it == by_length.end() ? "-" : rounded_percent(*it->second, display_decimals(r.config.operation, n)));
    }
    cells.push_back(std::move(line));
  }
  std::vector<std::size_t> width(cells.front().size(), 0);
  for (const auto& line : cells) {
    for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
  }
  for (const auto& line : cells) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      if (c == 0) {
        out << line[c] << std::string(width[c] - line[c].size(), ' ');
      } else {
        out << " | " << std::string(width[c] - line[c].size(), ' ') << line[c];
      }
    }
    out << '\n';
  }
  if (options.timing) {
    for (const auto& r : reports) {
      double total = 0;
      for (const auto& row : r.rows) total += row.wall_seconds;
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.3f", total);
      out << "# " << r.label() << ": " << buf << " s\n";
    }
  }
  return out.str();
}

std::vector<BenchConfig> comparison_preset(BenchOp op) {
  std::vector<std::uint64_t> lengths;
  const unsigned lo = op == BenchOp::Mul ? 6 : 2;
  const unsigned hi = op == BenchOp::Mul ? 16 : 9;
  for (unsigned m = lo; m <= hi; ++m) lengths.push_back(std::uint64_t{1} << m);

  const std::vector<std::tuple<std::string, std::string, std::string>> rows{
      {"Sobol", "sobol:dim=1", "sobol:dim=2"},
      {"R2", "r2:dim=0", "r2:dim=1"},
      {"Weyl", "weyl:alpha=silver,start=1", "weyl:alpha=pi,start=1"},
      {"Latin Hypercube", "lhs:seed=1", "lhs:seed=2"},
      {"Faure", "faure:base=7,dim=0", "faure:base=7,dim=1"},
      {"Halton", "halton:base=11", "halton:base=13"},
      {"Hammersley", "hammersley:dim=0", "hammersley:dim=1"},
      {"Niederreiter", "niederreiter:dim=0", "niederreiter:dim=1"},
      {"Poisson Disk", "poisson:seed=1", "poisson:seed=2"},
      {"P2LSG", "p2lsg2", "p2lsgN"},
  };
  std::vector<BenchConfig> out;
  for (const auto& [label, a, b] : rows) {
    BenchConfig cfg;
    cfg.operation = op;
    cfg.first = parse_sequence_spec(a);
    cfg.second = parse_sequence_spec(b);
    cfg.lengths = lengths;
    cfg.label = label;
    out.push_back(std::move(cfg));
  }
  return out;
}

}  // namespace p2lsg
