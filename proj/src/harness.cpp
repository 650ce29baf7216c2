#include "whufft/harness.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <iomanip>
#include <istream>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace whufft {

namespace {

using LComplex = std::complex<long double>;

constexpr int kQuadraticOracleMax = 12;
constexpr int kMatrixOracleMax = 10;

struct AlgoInfo {
  Algo algo;
  std::string_view name;
};

constexpr AlgoInfo kAlgos[] = {
    {Algo::WhtNaive, "wht-naive"}, {Algo::WhtFolklore, "wht-folklore"},
    {Algo::WhtH4, "wht-h4"},       {Algo::WhtH8, "wht-h8"},
    {Algo::HPrime, "hprime"},      {Algo::FftNaive, "fft-naive"},
    {Algo::FftSr, "fft-sr"},       {Algo::FftMsr, "fft-msr"},
    {Algo::FftWhufft, "fft-whufft"},
};

template <class S>
std::vector<S> real_parts(const Signal& x) {
  std::vector<S> out;
  out.reserve(x.size());
  for (const auto& v : x) out.push_back(S(v.re));
  return out;
}

template <class S>
CVec<S> lift(const Signal& x) {
  CVec<S> out;
  out.reserve(x.size());
  for (const auto& v : x) out.push_back({S(v.re), S(v.im)});
  return out;
}

template <class S>
Signal lower(const CVec<S>& y) {
  Signal out;
  out.reserve(y.size());
  for (const auto& v : y) out.push_back({value_of(v.re), value_of(v.im)});
  return out;
}

template <class S>
Signal lower_real(const std::vector<S>& y) {
  Signal out;
  out.reserve(y.size());
  for (const auto& v : y) out.push_back({value_of(v), 0.0});
  return out;
}

template <class S>
Signal run_typed(Algo a, const Signal& x) {
  if (is_wht(a)) {
    auto v = real_parts<S>(x);
    std::span<S> s(v);
    switch (a) {
      case Algo::WhtNaive: wht_naive(s); break;
      case Algo::WhtFolklore: wht_folklore(s); break;
      case Algo::WhtH4: wht_h4(s, 0); break;
      default: wht_h8(s, 0); break;
    }
    return lower_real(v);
  }
  auto v = lift<S>(x);
  switch (a) {
    case Algo::HPrime: apply_hprime(std::span<ComplexPair<S>>(v), WhtAlgo::H8); return lower(v);
    case Algo::FftNaive: return lower(dft_naive(v));
    case Algo::FftSr: return lower(fft_sr(v));
    case Algo::FftMsr: return lower(msr(v, ScaledVariant::Plain));
    case Algo::FftWhufft: return lower(whufft::whufft(v));
    default: break;
  }
  throw std::logic_error("run: unhandled algorithm");
}

std::vector<LComplex> to_long(const Signal& x) {
  std::vector<LComplex> out;
  out.reserve(x.size());
  for (const auto& v : x) out.emplace_back(v.re, v.im);
  return out;
}

Signal from_long(const std::vector<LComplex>& y) {
  Signal out;
  out.reserve(y.size());
  for (const auto& v : y) {
    out.push_back({static_cast<double>(v.real()), static_cast<double>(v.imag())});
  }
  return out;
}

LComplex root(std::size_t m, std::size_t n) {
  const long double theta = 2.0L * std::numbers::pi_v<long double> * static_cast<long double>(m) /
                            static_cast<long double>(n);
  return {std::cos(theta), -std::sin(theta)};
}

std::vector<LComplex> dft_direct(const std::vector<LComplex>& x) {
  const std::size_t n = x.size();
  std::vector<LComplex> roots(n);
  for (std::size_t m = 0; m < n; ++m) roots[m] = root(m, n);
  std::vector<LComplex> y(n);
  for (std::size_t k = 0; k < n; ++k) {
    LComplex acc = 0;
    for (std::size_t j = 0; j < n; ++j) acc += roots[(j * k) % n] * x[j];
    y[k] = acc;
  }
  return y;
}

// Iterative radix-2 decimation in time.
std::vector<LComplex> dft_radix2(std::vector<LComplex> a) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    std::vector<LComplex> w(len / 2);
    for (std::size_t k = 0; k < len / 2; ++k) w[k] = root(k, len);
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t k = 0; k < len / 2; ++k) {
        const LComplex u = a[i + k];
        const LComplex v = w[k] * a[i + k + len / 2];
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
      }
    }
  }
  return a;
}

std::vector<LComplex> wht_direct(const std::vector<LComplex>& x) {
  const std::size_t n = x.size();
  std::vector<LComplex> y(n);
  for (std::size_t k = 0; k < n; ++k) {
    LComplex acc = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (std::popcount(j & k) % 2 == 0) {
        acc += x[j];
      } else {
        acc -= x[j];
      }
    }
    y[k] = acc;
  }
  return y;
}

void wht_butterflies(std::span<LComplex> a) {
  for (std::size_t len = 2; len <= a.size(); len <<= 1) {
    for (std::size_t i = 0; i < a.size(); i += len) {
      for (std::size_t k = 0; k < len / 2; ++k) {
        const LComplex u = a[i + k];
        const LComplex v = a[i + k + len / 2];
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
      }
    }
  }
}

std::vector<LComplex> hprime_dense(const std::vector<LComplex>& x) {
  const std::size_t n = x.size();
  const auto m = hprime_matrix(n);
  std::vector<LComplex> y(n);
  for (std::size_t r = 0; r < n; ++r) {
    LComplex acc = 0;
    for (std::size_t c = 0; c < n; ++c) acc += static_cast<long double>(m[r * n + c]) * x[c];
    y[r] = acc;
  }
  return y;
}

// H'_N x = (H'_{N/2} x_top, H'_{N/4}(u + v), H'_{N/4}(u - v)) for the two
// quarters u, v of the bottom half.
void hprime_blocks(std::span<LComplex> x) {
  const std::size_t n = x.size();
  if (n <= 2) return;
  const std::size_t q = n / 4;
  for (std::size_t i = 0; i < q; ++i) {
    const LComplex u = x[2 * q + i];
    const LComplex v = x[3 * q + i];
    x[2 * q + i] = u + v;
    x[3 * q + i] = u - v;
  }
  hprime_blocks(x.first(2 * q));
  hprime_blocks(x.subspan(2 * q, q));
  hprime_blocks(x.subspan(3 * q, q));
}

std::string format_err(double e) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(3) << e;
  return os.str();
}

nlohmann::json record_json(const BenchRecord& r) {
  nlohmann::json j;
  j["algo"] = r.algo;
  j["log2n"] = r.log2n;
  j["add_sub"] = r.tally.add_sub;
  j["mul"] = r.tally.mul;
  j["div2"] = r.tally.div2;
  j["mul_pow2"] = r.tally.mul_pow2;
  j["total"] = r.tally.total();
  j["predicted_total"] =
      r.predicted_total ? nlohmann::json(format_rational(*r.predicted_total)) : nlohmann::json();
  j["predicted_kind"] =
      r.predicted_kind ? nlohmann::json(std::string(to_string(*r.predicted_kind))) : nlohmann::json();
  j["max_rel_err"] = r.max_rel_err ? nlohmann::json(*r.max_rel_err) : nlohmann::json();
  j["seed"] = r.seed;
  return j;
}

void check_range(int lo, int hi, int cap, const char* what) {
  if (lo < 0 || hi > cap || lo > hi) {
    throw std::out_of_range(std::string(what) + ": log2n range must lie within [0, " +
                            std::to_string(cap) + "] with min <= max");
  }
}

}  // namespace

const std::vector<Algo>& all_algos() {
  static const std::vector<Algo> algos = [] {
    std::vector<Algo> v;
    for (const auto& info : kAlgos) v.push_back(info.algo);
    return v;
  }();
  return algos;
}

std::string_view to_string(Algo a) {
  for (const auto& info : kAlgos) {
    if (info.algo == a) return info.name;
  }
  return "?";
}

Algo parse_algo(std::string_view name) {
  for (const auto& info : kAlgos) {
    if (info.name == name) return info.algo;
  }
  throw std::invalid_argument("unknown algorithm '" + std::string(name) + "'");
}

bool is_wht(Algo a) {
  return a == Algo::WhtNaive || a == Algo::WhtFolklore || a == Algo::WhtH4 || a == Algo::WhtH8;
}

bool is_quadratic(Algo a) { return a == Algo::WhtNaive || a == Algo::FftNaive; }

std::optional<std::string> predictor_for(Algo a) {
  switch (a) {
    case Algo::WhtFolklore: return "folklore";
    case Algo::WhtH4: return "h4";
    case Algo::WhtH8: return "h8";
    case Algo::HPrime: return "hprime_exact";
    case Algo::FftSr: return "sr";
    case Algo::FftMsr: return "msr";
    case Algo::FftWhufft: return "whufft";
    default: return std::nullopt;
  }
}

std::vector<double> random_input(std::uint64_t seed, int log2n, int trial, bool complex,
                                 bool integer) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(log2n), static_cast<std::uint32_t>(trial)};
  std::mt19937_64 gen(seq);
  const std::size_t count = (std::size_t{1} << log2n) * (complex ? 2 : 1);
  std::vector<double> out(count);
  for (auto& v : out) {
    const std::uint64_t r = gen();
    if (integer) {
      v = static_cast<double>(static_cast<std::int64_t>(r % 17) - 8);
    } else {
      v = 2.0 * std::ldexp(static_cast<double>(r >> 11), -53) - 1.0;
    }
  }
  return out;
}

Signal make_signal(Algo a, std::uint64_t seed, int log2n, int trial, bool integer) {
  const bool complex = !is_wht(a);
  const auto raw = random_input(seed, log2n, trial, complex, integer);
  Signal x(std::size_t{1} << log2n);
  for (std::size_t i = 0; i < x.size(); ++i) {
    x[i] = complex ? ComplexPair<double>{raw[2 * i], raw[2 * i + 1]} : ComplexPair<double>{raw[i], 0.0};
  }
  return x;
}

Signal run_plain(Algo a, const Signal& x) { return run_typed<double>(a, x); }

std::pair<Signal, OpTally> run_counted(Algo a, const Signal& x) {
  return with_tally([&] { return run_typed<Counted>(a, x); });
}

Signal reference(Algo a, const Signal& x) {
  const int l = require_pow2(x.size(), "reference");
  auto lx = to_long(x);
  if (is_wht(a)) {
    for (auto& v : lx) v = v.real();
    if (l <= kQuadraticOracleMax) return from_long(wht_direct(lx));
    wht_butterflies(lx);
    return from_long(lx);
  }
  if (a == Algo::HPrime) {
    if (l <= kMatrixOracleMax) return from_long(hprime_dense(lx));
    hprime_blocks(lx);
    return from_long(lx);
  }
  if (l <= kQuadraticOracleMax) return from_long(dft_direct(lx));
  return from_long(dft_radix2(std::move(lx)));
}

double max_rel_error(const Signal& y, const Signal& ref) {
  if (y.size() != ref.size()) throw std::invalid_argument("max_rel_error: size mismatch");
  double diff = 0.0;
  double scale = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    diff = std::max({diff, std::abs(y[i].re - ref[i].re), std::abs(y[i].im - ref[i].im)});
    scale = std::max({scale, std::abs(ref[i].re), std::abs(ref[i].im)});
  }
  return scale > 0.0 ? diff / scale : diff;
}

double default_tolerance(Algo a, int log2n) {
  const double base = (is_wht(a) || a == Algo::HPrime) ? 1e-12 : 1e-10;
  if (log2n <= 12) return base;
  return base * std::sqrt(std::ldexp(1.0, log2n - 12));
}

BenchRecord make_record(Algo a, int log2n, const OpTally& t, std::uint64_t seed) {
  BenchRecord r;
  r.algo = std::string(to_string(a));
  r.log2n = log2n;
  r.tally = t;
  r.seed = seed;
  if (auto name = predictor_for(a)) {
    const Prediction p = predict(*name, log2n);
    r.predicted_total = p.total;
    r.predicted_kind = p.kind;
  }
  return r;
}

VerifyResult verify(const VerifyOptions& opt) {
  check_range(opt.log2n_min, opt.log2n_max, is_quadratic(opt.algo) ? 14 : 22, "verify");
  if (opt.trials < 1) throw std::invalid_argument("verify: trials must be positive");
  VerifyResult out;
  for (int l = opt.log2n_min; l <= opt.log2n_max; ++l) {
    const double tol = opt.tol.value_or(default_tolerance(opt.algo, l));
    double worst = 0.0;
    OpTally tally;
    for (int trial = 0; trial < opt.trials; ++trial) {
      const Signal x = make_signal(opt.algo, opt.seed, l, trial, opt.integer);
      Signal y;
      if (trial == 0) {
        std::tie(y, tally) = run_counted(opt.algo, x);
      } else {
        y = run_plain(opt.algo, x);
      }
      worst = std::max(worst, max_rel_error(y, reference(opt.algo, x)));
    }
    BenchRecord r = make_record(opt.algo, l, tally, opt.seed);
    r.max_rel_err = worst;
    out.pass = out.pass && worst <= tol;
    out.records.push_back(std::move(r));
    out.tolerances.push_back(tol);
  }
  return out;
}

std::vector<BenchRecord> bench(const BenchOptions& opt) {
  check_range(opt.log2n_min, opt.log2n_max, is_quadratic(opt.algo) ? 14 : 22, "bench");
  std::vector<BenchRecord> out;
  for (int l = opt.log2n_min; l <= opt.log2n_max; ++l) {
    const Signal x = make_signal(opt.algo, opt.seed, l, 0, opt.integer);
    const OpTally t = run_counted(opt.algo, x).second;
    out.push_back(make_record(opt.algo, l, t, opt.seed));
  }
  return out;
}

std::vector<TableRow> leading_constant_table(int log2n_max) {
  if (log2n_max < 1 || log2n_max > 20) {
    throw std::out_of_range("table: log2n_max must be in [1, 20]");
  }
  struct Entry {
    Algo algo;
    Rational constant;
  };
  const Entry entries[] = {
      {Algo::FftSr, Rational(4)},           {Algo::FftMsr, Rational(34, 9)},
      {Algo::FftWhufft, Rational(15, 4)},   {Algo::WhtFolklore, Rational(1)},
      {Algo::WhtH4, Rational(1)},           {Algo::WhtH8, Rational(23, 24)},
  };
  std::vector<TableRow> rows;
  for (const auto& e : entries) {
    TableRow row{std::string(to_string(e.algo)), e.constant, {}};
    for (int l = 1; l <= log2n_max; ++l) {
      // Tallies do not depend on the values, only on the circuit.
      const Signal x = make_signal(e.algo, 1, l, 0, false);
      const OpTally t = run_counted(e.algo, x).second;
      row.ratios.push_back(static_cast<double>(t.total()) / std::ldexp(static_cast<double>(l), l));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string format_rational(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << r.convert_to<double>();
  return os.str();
}

void write_records_csv(std::ostream& os, const std::vector<BenchRecord>& records) {
  os << "algo,log2n,add_sub,mul,div2,mul_pow2,total,predicted_total,predicted_kind,max_rel_err,seed\n";
  for (const auto& r : records) {
    os << r.algo << ',' << r.log2n << ',' << r.tally.add_sub << ',' << r.tally.mul << ','
       << r.tally.div2 << ',' << r.tally.mul_pow2 << ',' << r.tally.total() << ','
       << (r.predicted_total ? format_rational(*r.predicted_total) : "") << ','
       << (r.predicted_kind ? to_string(*r.predicted_kind) : "") << ','
       << (r.max_rel_err ? format_err(*r.max_rel_err) : "") << ',' << r.seed << '\n';
  }
}

void write_records_json(std::ostream& os, const std::vector<BenchRecord>& records) {
  nlohmann::json j;
  j["prng"] = kPrngId;
  j["records"] = nlohmann::json::array();
  for (const auto& r : records) j["records"].push_back(record_json(r));
  os << j.dump(2) << '\n';
}

void write_table_csv(std::ostream& os, const std::vector<TableRow>& rows) {
  os << "algo,leading_constant";
  const std::size_t cols = rows.empty() ? 0 : rows.front().ratios.size();
  for (std::size_t i = 1; i <= cols; ++i) os << ",l" << i;
  os << '\n';
  os << std::fixed << std::setprecision(4);
  for (const auto& row : rows) {
    os << row.algo << ',' << row.leading_constant.convert_to<double>();
    for (double v : row.ratios) os << ',' << v;
    os << '\n';
  }
}

void write_table_json(std::ostream& os, const std::vector<TableRow>& rows) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& row : rows) {
    std::ostringstream exact;
    exact << row.leading_constant;
    j.push_back({{"algo", row.algo},
                 {"leading_constant", row.leading_constant.convert_to<double>()},
                 {"leading_constant_exact", exact.str()},
                 {"ratios", row.ratios}});
  }
  os << j.dump(2) << '\n';
}

void write_lemmas_text(std::ostream& os, const LemmaReport& report) {
  for (const auto& r : report.rows) {
    os << "log2n=" << r.log2n << " mass " << (r.mass_ok ? "pass" : "FAIL") << " depth "
       << (r.depth_ok ? "pass" : "FAIL") << " blocks=" << r.block_count
       << " mod3_coeff=" << std::setprecision(6) << r.mod3_excess_coeff << '\n';
  }
  os << "identities " << (report.identities_hold ? "pass" : "FAIL") << '\n';
  os << "max C for the N^0.8 term: " << std::setprecision(6) << report.max_coeff << '\n';
}

void write_lemmas_csv(std::ostream& os, const LemmaReport& report) {
  os << "log2n,block_mass,mass_ok,weighted_depth,depth_ok,mod3_mass,mod3_excess_coeff,block_count\n";
  for (const auto& r : report.rows) {
    os << r.log2n << ',' << r.block_mass << ',' << r.mass_ok << ',' << r.weighted_depth << ','
       << r.depth_ok << ',' << r.mod3_mass << ',' << std::setprecision(6) << r.mod3_excess_coeff
       << ',' << r.block_count << '\n';
  }
}

void write_lemmas_json(std::ostream& os, const LemmaReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"log2n", r.log2n},
                    {"block_mass", r.block_mass},
                    {"mass_ok", r.mass_ok},
                    {"weighted_depth", r.weighted_depth},
                    {"depth_ok", r.depth_ok},
                    {"mod3_mass", r.mod3_mass},
                    {"mod3_excess_coeff", r.mod3_excess_coeff},
                    {"block_count", r.block_count}});
  }
  nlohmann::json j{{"rows", rows},
                   {"identities_hold", report.identities_hold},
                   {"max_coeff", report.max_coeff}};
  os << j.dump(2) << '\n';
}

void write_partition_json(std::ostream& os, const PartitionSpec& p) {
  os << nlohmann::json(p.subsets).dump() << '\n';
}

Signal read_signal_json(std::istream& is) {
  nlohmann::json j;
  try {
    is >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("input is not valid JSON: ") + e.what());
  }
  if (!j.is_array()) throw std::invalid_argument("input must be a JSON array of [re, im] pairs");
  Signal x;
  x.reserve(j.size());
  for (const auto& item : j) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number() || !item[1].is_number()) {
      throw std::invalid_argument("input entries must be [re, im] number pairs");
    }
    x.push_back({item[0].get<double>(), item[1].get<double>()});
  }
  return x;
}

void write_signal_json(std::ostream& os, const Signal& x) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& v : x) j.push_back({v.re, v.im});
  os << j.dump() << '\n';
}

}  // namespace whufft
