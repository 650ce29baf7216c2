// Command-line front end: verify, bench, table, lemmas, partition.
//
// Exit status: 0 when every check passes, 1 on a numeric failure, 2 on a
// usage error.

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <string>

#include "whufft/harness.hpp"

namespace {

constexpr int kExitNumeric = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Range {
  int lo = 0;
  int hi = 0;
};

int parse_int(const std::string& s) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw UsageError("not an integer: " + s);
  return v;
}

// Either --log2n a..b (or a single value) or the --log2n-min/--log2n-max pair.
Range resolve_range(const std::string& spec, std::optional<int> lo, std::optional<int> hi,
                    Range fallback) {
  if (!spec.empty()) {
    if (lo || hi) throw UsageError("use either --log2n or --log2n-min/--log2n-max");
    static const std::regex pattern(R"((\d+)(?:\.\.(\d+))?)");
    std::smatch m;
    if (!std::regex_match(spec, m, pattern)) throw UsageError("bad range '" + spec + "', expected a..b");
    const int a = parse_int(m[1]);
    const int b = m[2].matched ? parse_int(m[2]) : a;
    return {a, b};
  }
  Range r = fallback;
  if (lo) r.lo = *lo;
  if (hi) r.hi = *hi;
  if (lo && !hi) r.hi = std::max(r.hi, r.lo);
  return r;
}

// Writes through `body` to --out, or stdout when no path was given.
template <class Body>
void emit(const std::string& path, Body&& body) {
  if (path.empty()) {
    body(std::cout);
    return;
  }
  std::ofstream f(path);
  if (!f) throw UsageError("cannot open output file " + path);
  body(f);
  if (!f) throw UsageError("failed writing " + path);
}

void emit_records(const std::string& format, const std::string& path,
                  const std::vector<whufft::BenchRecord>& records) {
  emit(path, [&](std::ostream& os) {
    if (format == "json") {
      whufft::write_records_json(os, records);
    } else {
      whufft::write_records_csv(os, records);
    }
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Walsh-Hadamard and FFT operation-count harness"};
  app.require_subcommand(1);

  std::string algo_name;
  std::string range_spec;
  std::optional<int> lo;
  std::optional<int> hi;
  int trials = 20;
  std::uint64_t seed = 1;
  std::optional<double> tol;
  bool integer = false;
  std::string format = "csv";
  std::string out_path;
  std::string input_path;
  int log2n_max = 20;
  int log2n = 3;

  const auto algo_names = [] {
    std::vector<std::string> v;
    for (auto a : whufft::all_algos()) v.emplace_back(whufft::to_string(a));
    return v;
  }();

  auto add_range = [&](CLI::App* sub) {
    sub->add_option("--log2n", range_spec, "Size range as a..b (log2 of N)");
    sub->add_option("--log2n-min", lo, "Smallest log2 N");
    sub->add_option("--log2n-max", hi, "Largest log2 N");
  };
  auto add_emit = [&](CLI::App* sub) {
    sub->add_option("--emit", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", out_path, "Output file (default stdout)");
  };

  auto* verify = app.add_subcommand("verify", "Compare an algorithm against its oracle");
  verify->add_option("--algo", algo_name, "Algorithm")->required()->check(CLI::IsMember(algo_names));
  add_range(verify);
  verify->add_option("--trials", trials, "Random inputs per size")->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "Base seed");
  verify->add_option("--tol", tol, "Relative error tolerance");
  verify->add_flag("--integer", integer, "Use small integer inputs");
  verify->add_option("--input", input_path, "Transform this JSON vector of [re, im] pairs instead");
  add_emit(verify);

  auto* bench = app.add_subcommand("bench", "Count operations per size");
  bench->add_option("--algo", algo_name, "Algorithm")->required()->check(CLI::IsMember(algo_names));
  add_range(bench);
  bench->add_option("--seed", seed, "Base seed");
  bench->add_flag("--integer", integer, "Use small integer inputs");
  add_emit(bench);

  auto* table = app.add_subcommand("table", "Measured total / (N log2 N) per algorithm");
  table->add_option("--log2n-max", log2n_max, "Largest log2 N (<= 20)");
  add_emit(table);

  auto* lemmas = app.add_subcommand("lemmas", "Check the H' block-count identities");
  lemmas->add_option("--log2n-max", log2n_max, "Largest log2 N (<= 40)");
  lemmas->add_option("--emit", format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
  lemmas->add_option("--out", out_path, "Output file (default stdout)");

  auto* part = app.add_subcommand("partition", "Print the H' index partition as JSON");
  auto* part_pos = part->add_option("exponent", log2n, "log2 N (<= 20)");
  part->add_option("--log2n", log2n, "log2 N (<= 20)")->excludes(part_pos);
  part->add_option("--out", out_path, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (verify->parsed()) {
      const auto algo = whufft::parse_algo(algo_name);
      if (!input_path.empty()) {
        std::ifstream f(input_path);
        if (!f) throw UsageError("cannot open input file " + input_path);
        const auto x = whufft::read_signal_json(f);
        const int l = whufft::require_pow2(x.size(), "input");
        const auto y = whufft::run_plain(algo, x);
        const double err = whufft::max_rel_error(y, whufft::reference(algo, x));
        const double limit = tol.value_or(whufft::default_tolerance(algo, l));
        emit(out_path, [&](std::ostream& os) { whufft::write_signal_json(os, y); });
        std::cerr << whufft::to_string(algo) << " log2n=" << l << " max_rel_err=" << err
                  << (err <= limit ? " pass" : " FAIL") << '\n';
        return err <= limit ? 0 : kExitNumeric;
      }
      const Range r = resolve_range(range_spec, lo, hi, {0, 10});
      const auto result = whufft::verify({algo, r.lo, r.hi, trials, seed, tol, integer});
      emit_records(format, out_path, result.records);
      for (std::size_t i = 0; i < result.records.size(); ++i) {
        const auto& rec = result.records[i];
        if (*rec.max_rel_err > result.tolerances[i]) {
          std::cerr << rec.algo << " log2n=" << rec.log2n << " max_rel_err=" << *rec.max_rel_err
                    << " exceeds " << result.tolerances[i] << '\n';
        }
      }
      return result.pass ? 0 : kExitNumeric;
    }
    if (bench->parsed()) {
      const auto algo = whufft::parse_algo(algo_name);
      const Range r = resolve_range(range_spec, lo, hi, {0, 10});
      emit_records(format, out_path, whufft::bench({algo, r.lo, r.hi, seed, integer}));
      return 0;
    }
    if (table->parsed()) {
      const auto rows = whufft::leading_constant_table(log2n_max);
      emit(out_path, [&](std::ostream& os) {
        if (format == "json") {
          whufft::write_table_json(os, rows);
        } else {
          whufft::write_table_csv(os, rows);
        }
      });
      return 0;
    }
    if (lemmas->parsed()) {
      if (format == "csv" && lemmas->count("--emit") == 0) format = "text";
      const auto report = whufft::lemma_checks(log2n_max);
      emit(out_path, [&](std::ostream& os) {
        if (format == "json") {
          whufft::write_lemmas_json(os, report);
        } else if (format == "csv") {
          whufft::write_lemmas_csv(os, report);
        } else {
          whufft::write_lemmas_text(os, report);
        }
      });
      return report.identities_hold ? 0 : kExitNumeric;
    }
    if (part->parsed()) {
      if (log2n < 0 || log2n > 20) throw UsageError("partition: --log2n must be in [0, 20]");
      const auto& p = whufft::partition(std::size_t{1} << log2n);
      emit(out_path, [&](std::ostream& os) { whufft::write_partition_json(os, p); });
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
