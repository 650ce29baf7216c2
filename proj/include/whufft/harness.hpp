#pragma once

// Verification sweeps, count benchmarks and report emission behind the
// command-line tool.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "whufft/counting.hpp"
#include "whufft/fft.hpp"
#include "whufft/hprime.hpp"
#include "whufft/predictors.hpp"

namespace whufft {

enum class Algo {
  WhtNaive,
  WhtFolklore,
  WhtH4,
  WhtH8,
  HPrime,
  FftNaive,
  FftSr,
  FftMsr,
  FftWhufft,
};

const std::vector<Algo>& all_algos();
std::string_view to_string(Algo a);
// Throws std::invalid_argument for unknown names.
Algo parse_algo(std::string_view name);

bool is_wht(Algo a);
// Brute-force algorithms whose own cost is quadratic.
bool is_quadratic(Algo a);

// Predictor used for the predicted_total column, if any.
std::optional<std::string> predictor_for(Algo a);

// Identifies the input generator; bump when the derivation changes.
inline constexpr std::string_view kPrngId = "mt19937_64/seed_seq(seed,log2n,trial)/v1";

// 2n values when `complex`, else n. Uniform in [-1, 1], or integers in
// [-8, 8] when `integer`.
std::vector<double> random_input(std::uint64_t seed, int log2n, int trial, bool complex,
                                 bool integer);

// Real WHT inputs use re only; complex transforms use (re, im).
using Signal = std::vector<ComplexPair<double>>;

Signal make_signal(Algo a, std::uint64_t seed, int log2n, int trial, bool integer);

// Runs the algorithm (uninstrumented) on x.
Signal run_plain(Algo a, const Signal& x);

// Runs the algorithm on counted scalars; returns output and tally.
std::pair<Signal, OpTally> run_counted(Algo a, const Signal& x);

// Oracle output for x: the quadratic definitions up to 2^12 (hprime: the
// dense matrix up to 2^10); beyond that, long-double reference transforms.
Signal reference(Algo a, const Signal& x);

// ||y - ref||_inf / ||ref||_inf, or the absolute error when ref is zero.
double max_rel_error(const Signal& y, const Signal& ref);

// Default verification tolerance: 1e-12 (WHT, H') or 1e-10 (FFT) up to
// N = 2^12, growing by sqrt(N / 2^12) beyond.
double default_tolerance(Algo a, int log2n);

struct BenchRecord {
  std::string algo;
  int log2n = 0;
  OpTally tally;
  std::optional<Rational> predicted_total;
  std::optional<PredictionKind> predicted_kind;
  std::optional<double> max_rel_err;
  std::uint64_t seed = 0;
};

struct VerifyOptions {
  Algo algo = Algo::WhtFolklore;
  int log2n_min = 0;
  int log2n_max = 10;
  int trials = 20;
  std::uint64_t seed = 1;
  std::optional<double> tol;
  bool integer = false;
};

struct VerifyResult {
  std::vector<BenchRecord> records;
  std::vector<double> tolerances;  // per record
  bool pass = true;
};

VerifyResult verify(const VerifyOptions& opt);

struct BenchOptions {
  Algo algo = Algo::WhtFolklore;
  int log2n_min = 0;
  int log2n_max = 10;
  std::uint64_t seed = 1;
  bool integer = false;
};

std::vector<BenchRecord> bench(const BenchOptions& opt);

BenchRecord make_record(Algo a, int log2n, const OpTally& t, std::uint64_t seed);

struct TableRow {
  std::string algo;
  Rational leading_constant;
  std::vector<double> ratios;  // index i is log2n = i + 1
};

// Measured total / (N log2 N) for log2n in [1, log2n_max] next to the
// leading constant of each algorithm. log2n_max <= 20.
std::vector<TableRow> leading_constant_table(int log2n_max);

// Exact predictions print as integers, others with three decimals.
std::string format_rational(const Rational& r);

void write_records_csv(std::ostream& os, const std::vector<BenchRecord>& records);
void write_records_json(std::ostream& os, const std::vector<BenchRecord>& records);
void write_table_csv(std::ostream& os, const std::vector<TableRow>& rows);
void write_table_json(std::ostream& os, const std::vector<TableRow>& rows);
void write_lemmas_text(std::ostream& os, const LemmaReport& report);
void write_lemmas_csv(std::ostream& os, const LemmaReport& report);
void write_lemmas_json(std::ostream& os, const LemmaReport& report);
void write_partition_json(std::ostream& os, const PartitionSpec& p);

// Vectors as JSON arrays of [re, im] pairs.
Signal read_signal_json(std::istream& is);
void write_signal_json(std::ostream& os, const Signal& x);

}  // namespace whufft
