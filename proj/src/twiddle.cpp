#include "whufft/twiddle.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace whufft {

namespace {

constexpr double kSnapTol = 1e-12;

// Memoizes values built by `make(n)` per size; `make` may recurse into the
// same cache for smaller sizes.
template <class T>
class SizeCache {
 public:
  template <class Make>
  const T& get(std::size_t n, Make&& make) {
    {
      std::lock_guard lock(mu_);
      if (auto it = map_.find(n); it != map_.end()) return *it->second;
    }
    auto built = std::make_unique<const T>(make(n));
    std::lock_guard lock(mu_);
    auto [it, inserted] = map_.try_emplace(n, std::move(built));
    return *it->second;
  }

 private:
  std::mutex mu_;
  std::map<std::size_t, std::unique_ptr<const T>> map_;
};

// s_{n,k} for k in [0, n/4); s has period n/4 in k. Only for n >= 8.
const std::vector<double>& scale_period(std::size_t n) {
  static SizeCache<std::vector<double>> cache;
  return cache.get(n, [](std::size_t size) {
    const std::size_t period = size / 4;
    std::vector<double> s(period);
    for (std::size_t k4 = 0; k4 < period; ++k4) {
      const double theta = 2.0 * std::numbers::pi * static_cast<double>(k4) / static_cast<double>(size);
      const double inner = s_scale(size / 4, k4);
      s[k4] = (k4 <= size / 8) ? inner * std::cos(theta) : inner * std::sin(theta);
    }
    return s;
  });
}

double snap_unit(double v) {
  if (std::abs(v - 1.0) <= kSnapTol) return 1.0;
  if (std::abs(v + 1.0) <= kSnapTol) return -1.0;
  return v;
}

TwiddleTables build_tables(std::size_t n) {
  TwiddleTables tt;
  tt.n = n;
  const std::size_t q = n / 4;
  tt.omega.reserve(q);
  tt.omega_scaled.reserve(q);
  tt.t.reserve(q);
  tt.ratio2_lo.reserve(q);
  tt.ratio2_hi.reserve(q);
  for (auto& r : tt.ratio4) r.reserve(q);
  for (std::size_t k = 0; k < q; ++k) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    const double c = std::cos(theta);
    const double s = -std::sin(theta);
    tt.omega.emplace_back(c, s);
    const double inner = s_scale(n / 4, k);
    tt.omega_scaled.emplace_back(c * inner, s * inner);
    const ComplexPair<double> t = t_twiddle(n, k);
    tt.t.emplace_back(t.re, t.im);
    const double snk = s_scale(n, k);
    tt.ratio2_lo.emplace_back(snk / s_scale(2 * n, k));
    tt.ratio2_hi.emplace_back(snk / s_scale(2 * n, k + q));
    for (std::size_t quarter = 0; quarter < 4; ++quarter) {
      tt.ratio4[quarter].emplace_back(snk / s_scale(4 * n, k + quarter * q));
    }
  }
  return tt;
}

}  // namespace

std::string_view to_string(ScaledVariant v) {
  switch (v) {
    case ScaledVariant::Plain: return "plain";
    case ScaledVariant::S: return "s";
    case ScaledVariant::S2: return "s2";
    case ScaledVariant::S4: return "s4";
  }
  return "?";
}

double s_scale(std::uint64_t n, std::uint64_t k) {
  require_pow2(n, "s_scale");
  if (n <= 4) return 1.0;
  const auto& period = scale_period(n);
  return period[k % (n / 4)];
}

ComplexPair<double> t_twiddle(std::uint64_t n, std::uint64_t k) {
  require_pow2(n, "t_twiddle");
  if (k >= n) throw std::out_of_range("t_twiddle: k must be below n");
  const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
  const double ratio = s_scale(std::max<std::uint64_t>(n / 4, 1), k) / s_scale(n, k);
  ComplexPair<double> t{std::cos(theta) * ratio, -std::sin(theta) * ratio};
  t.re = snap_unit(t.re);
  t.im = snap_unit(t.im);
  if (std::abs(t.re) != 1.0 && std::abs(t.im) != 1.0) {
    throw std::logic_error("t_twiddle: no unit component");
  }
  if (n >= 4 && k % (n / 4) == 0) {
    if (std::abs(t.re) == 1.0) {
      t.im = 0.0;
    } else {
      t.re = 0.0;
    }
  }
  return t;
}

double variant_divisor(ScaledVariant v, std::uint64_t n, std::uint64_t k) {
  switch (v) {
    case ScaledVariant::Plain: return 1.0;
    case ScaledVariant::S: return s_scale(n, k);
    case ScaledVariant::S2: return s_scale(2 * n, k);
    case ScaledVariant::S4: return s_scale(4 * n, k);
  }
  return 1.0;
}

const TwiddleTables& twiddle_tables(std::size_t n) {
  require_pow2(n, "twiddle_tables");
  static SizeCache<TwiddleTables> cache;
  return cache.get(n, build_tables);
}

}  // namespace whufft
