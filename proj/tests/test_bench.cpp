#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "p2lsg/bench.hpp"
#include "p2lsg/errors.hpp"
#include "p2lsg/sc_ops.hpp"

using namespace p2lsg;

namespace {

BenchConfig config(BenchOp op, const char* a, const char* b, std::vector<std::uint64_t> lengths) {
  BenchConfig c;
  c.operation = op;
  c.first = parse_sequence_spec(a);
  c.second = parse_sequence_spec(b);
  c.lengths = std::move(lengths);
  return c;
}

// MAE% over all 8-bit pairs, one bit at a time in doubles.
double naive_mae(BenchOp op, const ThresholdSequence& first, const ThresholdSequence& second, std::size_t n) {
  std::vector<oracle::Bits> s1, s2;
  for (std::uint32_t k = 0; k < 256; ++k) {
    s1.push_back(oracle::encode(k, first.values, n));
    s2.push_back(oracle::encode(k, second.values, n));
  }
  const auto select = oracle::encode(128, second.values, n);
  double total = 0;
  for (std::uint32_t a = 0; a < 256; ++a) {
    for (std::uint32_t b = 0; b < 256; ++b) {
      if (op == BenchOp::Mul) {
        const double est = static_cast<double>(oracle::ones(oracle::and_bits(s1[a], s2[b]))) / n;
        total += std::abs(est - (a / 256.0) * (b / 256.0));
      } else {
        const double est = static_cast<double>(oracle::ones(oracle::mux2_bits(s1[a], s1[b], select))) / n;
        total += std::abs(est - (a + b) / 512.0);
      }
    }
  }
  return 100.0 * total / 65536.0;
}

}  // namespace

TEST_CASE("sweeps agree with a naive bit-by-bit evaluation") {
  for (const auto& [a, b] : {std::pair{"p2lsg2", "p2lsgN"}, std::pair{"halton:base=11", "halton:base=13"},
                             std::pair{"sobol:dim=1", "sobol:dim=2"}, std::pair{"lhs:seed=1", "lhs:seed=2"}}) {
    for (std::uint64_t n : {16, 64}) {
      const auto ta = make_thresholds(parse_sequence_spec(a), n, 8, n);
      const auto tb = make_thresholds(parse_sequence_spec(b), n, 8, n);
      const auto mul = mae_mul_sweep(config(BenchOp::Mul, a, b, {n}));
      CHECK(mul.rows[0].mae_percent == doctest::Approx(naive_mae(BenchOp::Mul, ta, tb, n)).epsilon(1e-9));
      const auto add = mae_add_sweep(config(BenchOp::Add, a, b, {n}));
      CHECK(add.rows[0].mae_percent == doctest::Approx(naive_mae(BenchOp::Add, ta, tb, n)).epsilon(1e-9));
    }
  }
}

TEST_CASE("packed per-pair contributions match the unpacked reference") {
  std::mt19937 rng(5);
  for (std::uint64_t n = 64; n <= 65536; n *= 4) {
    const auto ta = make_thresholds(parse_sequence_spec("p2lsg2"), n, 8, n);
    const auto tb = make_thresholds(parse_sequence_spec("p2lsgN"), n, 8, n);
    for (int i = 0; i < 100; ++i) {
      const std::uint32_t a = rng() % 256, b = rng() % 256;
      const auto sa = sng_generate({a, 8}, ta, n);
      const auto sb = sng_generate({b, 8}, tb, n);
      const auto naive = oracle::ones(oracle::and_bits(oracle::encode(a, ta.values, n), oracle::encode(b, tb.values, n)));
      REQUIRE(and_popcount(sa, sb) == naive);
    }
  }
}

TEST_CASE("P2LSG rows") {
  const auto mul = mae_mul_sweep(config(BenchOp::Mul, "p2lsg2", "p2lsgN", {256, 65536}));
  CHECK(exact_percent(mul.rows[0]) == "0.390625");
  CHECK(mul.rows[1].error_sum == 0);
  const auto add = mae_add_sweep(config(BenchOp::Add, "p2lsg2", "p2lsgN", {32, 512}));
  CHECK(rounded_percent(add.rows[0], 2) == "1.55");
  CHECK(add.rows[1].error_sum == 0);
}

TEST_CASE("worker count does not change results") {
  auto c = config(BenchOp::Mul, "halton:base=11", "halton:base=13", {64, 1024});
  c.workers = 1;
  const auto one = mae_mul_sweep(c);
  c.workers = 5;
  const auto five = mae_mul_sweep(c);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(one.rows[i].error_sum == five.rows[i].error_sum);
    CHECK(one.rows[i].denominator == five.rows[i].denominator);
  }
  CHECK(emit_report(one, ReportFormat::Csv) == emit_report(five, ReportFormat::Csv));
}

TEST_CASE("convergence is monotone for P2LSG, Sobol and Niederreiter") {
  std::vector<std::uint64_t> lengths;
  for (unsigned m = 6; m <= 16; ++m) lengths.push_back(std::uint64_t{1} << m);
  for (const auto& [a, b] : {std::pair{"p2lsg2", "p2lsgN"}, std::pair{"sobol:dim=1", "sobol:dim=2"},
                             std::pair{"niederreiter:dim=0", "niederreiter:dim=1"}}) {
    const auto r = mae_mul_sweep(config(BenchOp::Mul, a, b, lengths));
    for (std::size_t i = 1; i < r.rows.size(); ++i) {
      // error_sum / (N 2^32) is non-increasing in N.
      CHECK(r.rows[i].error_sum <= 2 * r.rows[i - 1].error_sum);
    }
  }
}

TEST_CASE("decimal rendering") {
  MaeRow row;
  row.error_sum = 1;
  row.denominator = 800;  // 0.125 %
  CHECK(exact_percent(row) == "0.125");
  CHECK(rounded_percent(row, 2) == "0.12");
  row.error_sum = 3;  // 0.375 %
  CHECK(rounded_percent(row, 2) == "0.38");
  row.error_sum = 0;
  CHECK(rounded_percent(row, 4) == "0.0000");
  CHECK(exact_percent(row) == "0");
  row.error_sum = 1;
  row.denominator = 3;
  CHECK(exact_percent(row, 5) == "33.33333");
  row.error_sum = 9995;
  row.denominator = 1000000;  // 0.9995 %
  CHECK(rounded_percent(row, 3) == "1.000");
  CHECK(display_decimals(BenchOp::Mul, 256) == 2);
  CHECK(display_decimals(BenchOp::Mul, 512) == 3);
  CHECK(display_decimals(BenchOp::Mul, 8192) == 4);
  CHECK(display_decimals(BenchOp::Add, 512) == 2);
}

TEST_CASE("report formats") {
  const auto one = mae_mul_sweep(config(BenchOp::Mul, "p2lsg2", "p2lsgN", {256}));
  CHECK(emit_report(one, ReportFormat::Csv) == "length,mae_percent,wall_seconds\n256,0.390625,NA\n");
  const auto empty = mae_mul_sweep(config(BenchOp::Mul, "p2lsg2", "p2lsgN", {}));
  CHECK(emit_report(empty, ReportFormat::Csv) == "length,mae_percent,wall_seconds\n");
  const auto timed = emit_report(one, ReportFormat::Csv, {true});
  CHECK(timed.find("NA") == std::string::npos);

  std::vector<std::uint64_t> lengths;
  for (unsigned m = 6; m <= 16; ++m) lengths.push_back(std::uint64_t{1} << m);
  auto c = config(BenchOp::Mul, "p2lsg2", "p2lsgN", lengths);
  c.label = "P2LSG";
  const auto table = emit_report(mae_mul_sweep(c), ReportFormat::Table);
  std::istringstream lines(table);
  std::string header, row;
  std::getline(lines, header);
  std::getline(lines, row);
  CHECK(std::count(header.begin(), header.end(), '|') == 11);
  CHECK(header.find("2^6") != std::string::npos);
  CHECK(header.find("2^16") != std::string::npos);
  CHECK(row.rfind("P2LSG", 0) == 0);
  CHECK(row.find("0.0000") != std::string::npos);
}

TEST_CASE("configuration errors") {
  CHECK_THROWS_AS(mae_mul_sweep(config(BenchOp::Mul, "p2lsg2", "p2lsgN", {100})), ConfigError);
  CHECK_THROWS_AS(mae_mul_sweep(config(BenchOp::Mul, "p2lsg2", "p2lsgN", {256, 64})), ConfigError);
  CHECK_THROWS_AS(mae_add_sweep(config(BenchOp::Mul, "p2lsg2", "p2lsgN", {64})), ConfigError);
  auto c = config(BenchOp::Mul, "p2lsg2", "p2lsgN", {64});
  c.input_bits = 0;
  CHECK_THROWS_AS(mae_mul_sweep(c), ConfigError);
  CHECK_THROWS_AS(mae_mul_sweep(config(BenchOp::Mul, "p2lsg:base=2,bits=4", "p2lsgN", {32})), GenerationError);
  CHECK_THROWS_AS(mae_mul_sweep(config(BenchOp::Mul, "poisson:seed=1,r=0.1", "p2lsgN", {64})), GenerationError);
}

TEST_CASE("presets") {
  const auto t1 = comparison_preset(BenchOp::Mul);
  CHECK(t1.size() == 10);
  CHECK(t1.front().lengths.size() == 11);
  CHECK(t1.back().label == "P2LSG");
  const auto t2 = comparison_preset(BenchOp::Add);
  CHECK(t2.front().lengths.front() == 4);
  CHECK(t2.front().lengths.back() == 512);
}
