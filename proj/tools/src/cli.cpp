#include "p2lsg/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "p2lsg/bench.hpp"
#include "p2lsg/bitstream.hpp"
#include "p2lsg/errors.hpp"
#include "p2lsg/media.hpp"
#include "p2lsg/p2lsg_gen.hpp"
#include "p2lsg/pnm.hpp"
#include "p2lsg/quality.hpp"
#include "p2lsg/sequence_spec.hpp"

namespace p2lsg::cli {

namespace {

namespace fs = std::filesystem;

// Bad flag values that CLI11 cannot check by type alone.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr const char* kSpecGrammar = R"(Sequence specs: <family>[:<key>=<value>,...]
  p2lsg         base (power of two or N = stream length), bits, par
  p2lsg2, p2lsgN, p2lsg<B>   shorthands
  vdc           base
  halton        base (prime)
  hammersley    dim (0 = VDC-2, 1 = VDC-3)
  faure         base (prime, 7), dim
  sobol         dim (1-based), bits
  niederreiter  dim, bits
  weyl          alpha (pi | silver | golden | decimal | 0x<64-bit fraction>)
  r2            dim (0 or 1)
  lhs           seed
  poisson       seed, r (min distance), attempts
  lfsr          taps, bits, seed
Every family accepts start=<index>.
Exit codes: 0 ok, 1 usage, 2 configuration/domain/generation error, 3 file or parse error.)";

SequenceSpec spec_arg(const std::string& text) {
  try {
    return parse_sequence_spec(text);
  } catch (const ConfigError& e) {
    throw UsageError("bad sequence spec '" + text + "': " + e.what());
  }
}

// "A,B" where A and B may carry their own comma-separated parameters: a
// piece without ':' that contains '=' continues the previous spec.
std::vector<std::string> split_specs(const std::string& text) {
  std::vector<std::string> specs;
  std::stringstream ss(text);
  std::string piece;
  while (std::getline(ss, piece, ',')) {
    const bool continuation = piece.find('=') != std::string::npos && piece.find(':') == std::string::npos;
    if (continuation && !specs.empty()) {
      specs.back() += "," + piece;
    } else {
      specs.push_back(piece);
    }
  }
  return specs;
}

unsigned parse_exponent(const std::string& text) {
  unsigned v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size() || v < 1 || v > 30) {
    throw UsageError("length exponent '" + text + "' is not an integer in [1, 30]");
  }
  return v;
}

// "6..16", "6,8,10" or "8": exponents m of N = 2^m.
std::vector<std::uint64_t> parse_lengths(const std::string& text) {
  std::vector<unsigned> exps;
  if (const auto dots = text.find(".."); dots != std::string::npos) {
    const auto lo = parse_exponent(text.substr(0, dots));
    const auto hi = parse_exponent(text.substr(dots + 2));
    if (lo > hi) throw UsageError("empty length range '" + text + "'");
    for (unsigned m = lo; m <= hi; ++m) exps.push_back(m);
  } else {
    std::stringstream ss(text);
    std::string piece;
    while (std::getline(ss, piece, ',')) exps.push_back(parse_exponent(piece));
  }
  std::vector<std::uint64_t> lengths;
  for (auto m : exps) lengths.push_back(std::uint64_t{1} << m);
  return lengths;
}

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

Bitstream read_bitstream_file(const fs::path& path, bool binary) {
  std::ifstream in(path, binary ? std::ios::binary : std::ios::in);
  if (!in) throw IoError("cannot open " + path.string());
  return binary ? read_bitstream_binary(in) : read_bitstream_text(in);
}

// ---- gen -------------------------------------------------------------------

struct GenArgs {
  std::string family;
  std::string spec;
  std::string base;
  std::optional<unsigned> bits;
  std::optional<std::uint32_t> par;
  std::size_t count = 0;
  std::uint64_t index = 0;
  bool decimal = false;
  int digits = 12;
  std::optional<unsigned> scale_bits;
  std::optional<std::uint64_t> seed;
  std::string alpha;
  std::optional<unsigned> dim;
  std::string taps;
  std::string min_dist;
  std::optional<std::size_t> max_attempts;
  std::optional<std::uint32_t> encode;
  bool binary = false;
  std::string out_path;
};

SequenceSpec gen_spec(const GenArgs& a) {
  if (!a.spec.empty()) {
    if (!a.family.empty()) throw UsageError("give either --seq or --family, not both");
    auto spec = spec_arg(a.spec);
    if (a.index != 0) spec.start = a.index;
    return spec;
  }
  if (a.family.empty()) throw UsageError("--family or --seq is required");
  std::vector<std::string> kv;
  if (!a.base.empty()) kv.push_back("base=" + a.base);
  if (a.bits) kv.push_back("bits=" + std::to_string(*a.bits));
  if (a.par) kv.push_back("par=" + std::to_string(*a.par));
  if (a.dim) kv.push_back("dim=" + std::to_string(*a.dim));
  if (!a.alpha.empty()) kv.push_back("alpha=" + a.alpha);
  if (a.seed) kv.push_back("seed=" + std::to_string(*a.seed));
  if (!a.min_dist.empty()) kv.push_back("r=" + a.min_dist);
  if (a.max_attempts) kv.push_back("attempts=" + std::to_string(*a.max_attempts));
  if (!a.taps.empty()) kv.push_back("taps=" + a.taps);
  if (a.index != 0) kv.push_back("start=" + std::to_string(a.index));
  std::string text = a.family;
  for (std::size_t i = 0; i < kv.size(); ++i) text += (i == 0 ? ":" : ",") + kv[i];
  return spec_arg(text);
}

int run_gen(const GenArgs& a, std::ostream& out) {
  const auto spec = gen_spec(a);

  if (a.encode) {
    const unsigned bits = a.scale_bits.value_or(8);
    const auto x = FixedUnipolar::make(*a.encode, bits);
    const auto stream = sng_generate(x, make_thresholds(spec, a.count, bits, a.count), a.count);
    if (a.binary) {
      if (a.out_path.empty()) throw UsageError("--binary needs --out");
      std::ofstream f(a.out_path, std::ios::binary | std::ios::trunc);
      if (!f) throw IoError("cannot open " + a.out_path + " for writing");
      write_bitstream_binary(f, stream);
      if (!f) throw IoError("cannot write " + a.out_path);
    } else if (!a.out_path.empty()) {
      std::ofstream f(a.out_path, std::ios::trunc);
      if (!f) throw IoError("cannot open " + a.out_path + " for writing");
      write_bitstream_text(f, stream);
      if (!f) throw IoError("cannot write " + a.out_path);
    } else {
      write_bitstream_text(out, stream);
    }
    return kOk;
  }

  if (spec.family == Family::P2lsg && spec.par > 1) {
    if (!spec.base || !spec.bits) throw UsageError("parallel p2lsg needs explicit --base and --bits");
    if (spec.start != 0) throw UsageError("--index is not supported in parallel mode");
    const auto lanes = p2lsg_parallel(P2lsgConfig{*spec.base, *spec.bits, spec.par}, a.count);
    for (const auto& cycle : lanes) {
      for (std::size_t j = 0; j < cycle.size(); ++j) out << (j == 0 ? "" : ",") << cycle[j];
      out << '\n';
    }
    return kOk;
  }

  const auto values = generate_values(spec, a.count, 0);
  for (const auto& v : values) {
    if (a.scale_bits) {
      out << quantize(v, *a.scale_bits) << '\n';
    } else {
      out << format_value(v, a.decimal ? ValueFormat::Decimal : ValueFormat::Native, a.digits) << '\n';
    }
  }
  return kOk;
}

// ---- bench -----------------------------------------------------------------

struct BenchArgs {
  std::vector<std::string> seqs;
  std::string preset;
  std::string lengths;
  std::string format = "table";
  unsigned input_bits = 8;
  unsigned workers = 0;
  bool timing = false;
};

int run_bench(BenchOp op, const BenchArgs& a, std::ostream& out) {
  std::vector<BenchConfig> configs;
  if (!a.preset.empty()) {
    const bool matches = (op == BenchOp::Mul && a.preset == "table1") || (op == BenchOp::Add && a.preset == "table2");
    if (!matches) throw UsageError("preset '" + a.preset + "' does not apply to this benchmark");
    configs = comparison_preset(op);
  }
  for (const auto& pair : a.seqs) {
    const auto parts = split_specs(pair);
    if (parts.size() != 2) throw UsageError("--seqs expects two specs 'A,B', got '" + pair + "'");
    BenchConfig cfg;
    cfg.operation = op;
    cfg.first = spec_arg(parts[0]);
    cfg.second = spec_arg(parts[1]);
    configs.push_back(std::move(cfg));
  }
  if (configs.empty()) throw UsageError("give --seqs A,B or --preset");

  const std::string default_lengths = op == BenchOp::Mul ? "6..16" : "2..9";
  const auto lengths = parse_lengths(a.lengths.empty() ? default_lengths : a.lengths);
  std::vector<MaeReport> reports;
  for (auto& cfg : configs) {
    cfg.lengths = lengths;
    cfg.input_bits = a.input_bits;
    cfg.workers = a.workers;
    reports.push_back(run_sweep(cfg));
  }
  out << emit_reports(reports, a.format == "csv" ? ReportFormat::Csv : ReportFormat::Table, {a.timing});
  return kOk;
}

// ---- media -----------------------------------------------------------------

struct ScaleArgs {
  std::string in, out_path, factor = "2";
  std::uint64_t n = 256;
  std::string seq_data, seq_u, seq_v;
  unsigned workers = 0;
};

int run_scale(const ScaleArgs& a) {
  ScaleOptions opt;
  opt.factor = [&] {
    try {
      return ScaleFactor::parse(a.factor);
    } catch (const ConfigError& e) {
      throw UsageError(e.what());
    }
  }();
  opt.stream_length = a.n;
  opt.workers = a.workers;
  if (!a.seq_data.empty()) opt.sequences.data = spec_arg(a.seq_data);
  if (!a.seq_u.empty()) opt.sequences.select_u = spec_arg(a.seq_u);
  if (!a.seq_v.empty()) opt.sequences.select_v = spec_arg(a.seq_v);

  const auto img = read_pnm_file(a.in);
  if (const auto* g = std::get_if<GrayImage>(&img)) {
    write_pnm_file(a.out_path, scale_image_sc(*g, opt));
  } else {
    write_pnm_file(a.out_path, scale_image_sc(std::get<RgbImage>(img), opt));
  }
  return kOk;
}

struct MergeArgs {
  std::string bg, fg, fg_dir, out_path, out_dir, alpha, alpha_dir;
  std::uint64_t n = 256;
  unsigned green_threshold = kDefaultGreenThreshold;
  unsigned margin = kDefaultDominanceMargin;
  std::string seq_data, seq_select;
  unsigned workers = 0;
};

int run_merge(const MergeArgs& a) {
  if (a.fg.empty() == a.fg_dir.empty()) throw UsageError("give exactly one of --fg and --fg-dir");
  if (!a.fg.empty() && a.out_path.empty()) throw UsageError("--fg needs --out");
  if (!a.fg_dir.empty() && a.out_dir.empty()) throw UsageError("--fg-dir needs --out-dir");
  if (!a.fg.empty() && !a.alpha_dir.empty()) throw UsageError("--alpha-dir goes with --fg-dir; use --alpha");
  if (!a.fg_dir.empty() && !a.alpha.empty()) throw UsageError("--alpha goes with --fg; use --alpha-dir");

  MergeOptions opt;
  opt.stream_length = a.n;
  opt.workers = a.workers;
  if (!a.seq_data.empty()) opt.sequences.data = spec_arg(a.seq_data);
  if (!a.seq_select.empty()) opt.sequences.select = spec_arg(a.seq_select);

  const auto background = read_ppm_file(a.bg);
  auto merge_one = [&](const fs::path& fg_path, const fs::path& alpha_path, const fs::path& out_path) {
    const auto fg = read_ppm_file(fg_path);
    const auto alpha = alpha_path.empty()
                           ? chroma_key_alpha(fg, static_cast<std::uint8_t>(a.green_threshold),
                                              static_cast<std::uint8_t>(a.margin))
                           : alpha_from_gray(read_pgm_file(alpha_path));
    write_pnm_file(out_path, merge_scene_sc(background, fg, alpha, opt));
  };

  if (!a.fg.empty()) {
    merge_one(a.fg, a.alpha, a.out_path);
    return kOk;
  }
  const auto frames = list_frames(a.fg_dir);
  if (frames.empty()) throw IoError("no frame_*.ppm files in " + a.fg_dir);
  std::error_code ec;
  fs::create_directories(a.out_dir, ec);
  if (ec) throw IoError("cannot create " + a.out_dir + ": " + ec.message());
  for (const auto& frame : frames) {
    const fs::path alpha_path =
        a.alpha_dir.empty() ? fs::path{} : fs::path(a.alpha_dir) / frame.filename().replace_extension(".pgm");
    merge_one(frame, alpha_path, fs::path(a.out_dir) / frame.filename());
  }
  return kOk;
}

int run_score(const std::string& ref, const std::string& test, std::ostream& out) {
  const auto a = read_pnm_file(ref);
  const auto b = read_pnm_file(test);
  if (a.index() != b.index()) throw DomainError("reference and test images differ in kind (gray vs RGB)");
  double p = 0;
  double s = 0;
  if (const auto* ga = std::get_if<GrayImage>(&a)) {
    p = psnr(*ga, std::get<GrayImage>(b));
    s = ssim(*ga, std::get<GrayImage>(b));
  } else {
    p = psnr(std::get<RgbImage>(a), std::get<RgbImage>(b));
    s = ssim(std::get<RgbImage>(a), std::get<RgbImage>(b));
  }
  out << "psnr_db " << (p == kPsnrInfinite ? std::string("inf") : fixed(p, 4)) << '\n';
  out << "ssim " << fixed(s, 6) << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Low-discrepancy sequences and stochastic-computing workbench", "p2lsg"};
  app.require_subcommand(1);
  app.footer(kSpecGrammar);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Print sequence values, one per line, or encode a bit-stream");
  gen_cmd->add_option("--family", gen.family, "Sequence family");
  gen_cmd->add_option("--seq", gen.spec, "Full sequence spec (instead of --family and its flags)");
  gen_cmd->add_option("--base", gen.base, "Base (p2lsg also takes N)");
  gen_cmd->add_option("--bits", gen.bits, "Counter or precision bits");
  gen_cmd->add_option("--par", gen.par, "p2lsg values per cycle; prints one comma-separated cycle per line");
  gen_cmd->add_option("--count", gen.count, "Number of values (or cycles, or stream length)")->required();
  gen_cmd->add_option("--index", gen.index, "First index");
  gen_cmd->add_flag("--decimal", gen.decimal, "Print decimal fractions instead of exact values");
  gen_cmd->add_option("--digits", gen.digits, "Decimal places for --decimal")->check(CLI::Range(1, 40));
  gen_cmd->add_option("--scale-bits", gen.scale_bits, "Print floor(v * 2^bits)")->check(CLI::Range(1, 32));
  gen_cmd->add_option("--seed", gen.seed, "Seed (lhs, poisson, lfsr)");
  gen_cmd->add_option("--alpha", gen.alpha, "Weyl constant");
  gen_cmd->add_option("--dim", gen.dim, "Dimension");
  gen_cmd->add_option("--taps", gen.taps, "LFSR tap mask");
  gen_cmd->add_option("--min-dist", gen.min_dist, "Poisson minimum distance");
  gen_cmd->add_option("--max-attempts", gen.max_attempts, "Poisson consecutive rejections before giving up");
  gen_cmd->add_option("--encode", gen.encode, "Encode K / 2^scale-bits into a stream of --count bits");
  gen_cmd->add_flag("--binary", gen.binary, "Binary bit-stream file (needs --out)");
  gen_cmd->add_option("--out", gen.out_path, "Bit-stream output file");

  std::string scc_a, scc_b;
  bool scc_binary = false;
  auto* scc_cmd = app.add_subcommand("scc", "Stochastic cross-correlation of two bit-stream files");
  scc_cmd->add_option("--a", scc_a, "First stream")->required();
  scc_cmd->add_option("--b", scc_b, "Second stream")->required();
  scc_cmd->add_flag("--binary", scc_binary, "Files use the binary format (8-byte LE length, packed bits)");

  BenchArgs bench_mul, bench_add;
  auto add_bench = [&](const char* name, const char* help, BenchArgs& b) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->add_option("--seqs", b.seqs, "Sequence pair 'A,B' (repeatable)");
    cmd->add_option("--preset", b.preset, "Built-in comparison rows")->check(CLI::IsMember({"table1", "table2"}));
    cmd->add_option("--lengths", b.lengths, "Length exponents: '6..16', '6,8' or '8'");
    cmd->add_option("--out", b.format, "Output format")->check(CLI::IsMember({"table", "csv"}));
    cmd->add_option("--bits", b.input_bits, "Input precision")->check(CLI::Range(1, 10));
    cmd->add_option("--workers", b.workers, "Worker threads (0 = all cores)");
    cmd->add_flag("--timing", b.timing, "Report wall-clock seconds");
    return cmd;
  };
  auto* mul_cmd = add_bench("bench-mul", "Exhaustive MAE of AND multiplication", bench_mul);
  auto* add_cmd = add_bench("bench-add", "Exhaustive MAE of MUX scaled addition (second spec drives the select)",
                            bench_add);

  ScaleArgs scale;
  auto* scale_cmd = app.add_subcommand("scale", "Bilinear SC upscaling of a PGM/PPM image");
  scale_cmd->add_option("--in", scale.in, "Input image")->required();
  scale_cmd->add_option("--out", scale.out_path, "Output image")->required();
  scale_cmd->add_option("--factor", scale.factor, "Scale factor: '2', '3/2' or '1.5'");
  scale_cmd->add_option("--n", scale.n, "Stream length (power of two)");
  scale_cmd->add_option("--seq-data", scale.seq_data, "Sequence for the four neighbours (p2lsgN)");
  scale_cmd->add_option("--seq-u", scale.seq_u, "Sequence for the horizontal weight (p2lsg4)");
  scale_cmd->add_option("--seq-v", scale.seq_v, "Sequence for the vertical weight (p2lsg2)");
  scale_cmd->add_option("--workers", scale.workers, "Worker threads (0 = all cores)");

  MergeArgs merge;
  auto* merge_cmd = app.add_subcommand("merge", "SC alpha compositing of foreground frames over a background");
  merge_cmd->add_option("--bg", merge.bg, "Background PPM")->required();
  merge_cmd->add_option("--fg", merge.fg, "Single foreground PPM");
  merge_cmd->add_option("--fg-dir", merge.fg_dir, "Directory of frame_*.ppm foregrounds");
  merge_cmd->add_option("--out", merge.out_path, "Output PPM for --fg");
  merge_cmd->add_option("--out-dir", merge.out_dir, "Output directory for --fg-dir");
  merge_cmd->add_option("--alpha", merge.alpha, "Alpha PGM for --fg");
  merge_cmd->add_option("--alpha-dir", merge.alpha_dir, "Alpha PGMs named like the frames");
  merge_cmd->add_option("--green-threshold", merge.green_threshold, "Chroma key: minimum green")
      ->check(CLI::Range(0, 255));
  merge_cmd->add_option("--margin", merge.margin, "Chroma key: green dominance margin")->check(CLI::Range(0, 255));
  merge_cmd->add_option("--n", merge.n, "Stream length (power of two)");
  merge_cmd->add_option("--seq-data", merge.seq_data, "Sequence for the pixel streams (p2lsg2)");
  merge_cmd->add_option("--seq-select", merge.seq_select, "Sequence for the alpha select (p2lsgN)");
  merge_cmd->add_option("--workers", merge.workers, "Worker threads (0 = all cores)");

  std::string score_ref, score_test;
  auto* score_cmd = app.add_subcommand("score", "PSNR and SSIM of a test image against a reference");
  score_cmd->add_option("--ref", score_ref, "Reference image")->required();
  score_cmd->add_option("--test", score_test, "Test image")->required();

  std::vector<std::string> argv_storage{"p2lsg"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_storage) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (gen_cmd->parsed()) return run_gen(gen, out);
    if (scc_cmd->parsed()) {
      const auto value = scc(read_bitstream_file(scc_a, scc_binary), read_bitstream_file(scc_b, scc_binary));
      out << (value ? fixed(*value, 6) : std::string("undefined")) << '\n';
      return kOk;
    }
    if (mul_cmd->parsed()) return run_bench(BenchOp::Mul, bench_mul, out);
    if (add_cmd->parsed()) return run_bench(BenchOp::Add, bench_add, out);
    if (scale_cmd->parsed()) return run_scale(scale);
    if (merge_cmd->parsed()) return run_merge(merge);
    if (score_cmd->parsed()) return run_score(score_ref, score_test, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\nRun with --help for more information.\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kRuntime;
  }
  return kUsage;
}

}  // namespace p2lsg::cli
