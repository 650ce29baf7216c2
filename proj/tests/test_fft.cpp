#include <doctest.h>

#include <cmath>
#include <complex>

#include "oracles.hpp"
#include "whufft/fft.hpp"
#include "whufft/predictors.hpp"

using namespace whufft;

namespace {

using CD = CVec<double>;
using CC = CVec<Counted>;

CD random_complex(std::size_t n, std::uint64_t seed) {
  const auto raw = oracle::uniform(2 * n, seed);
  CD x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = {raw[2 * i], raw[2 * i + 1]};
  return x;
}

CC counted(const CD& x) {
  CC out;
  for (const auto& v : x) out.push_back({Counted(v.re), Counted(v.im)});
  return out;
}

std::vector<oracle::LC> to_lc(const CD& x) {
  std::vector<oracle::LC> out;
  for (const auto& v : x) out.emplace_back(v.re, v.im);
  return out;
}

// ||y - ref||_inf / ||ref||_inf, with y optionally multiplied by d(k).
template <class Div>
double rel_err(const CD& y, const std::vector<oracle::LC>& ref, Div d) {
  long double diff = 0, scale = 0;
  for (std::size_t k = 0; k < y.size(); ++k) {
    const oracle::LC v = oracle::LC(y[k].re, y[k].im) * d(k);
    diff = std::max(diff, std::abs(v - ref[k]));
    scale = std::max(scale, std::abs(ref[k]));
  }
  return static_cast<double>(scale > 0 ? diff / scale : diff);
}

double rel_err(const CD& y, const std::vector<oracle::LC>& ref) {
  return rel_err(y, ref, [](std::size_t) { return 1.0L; });
}

double rel_err(const CD& a, const CD& b) { return rel_err(a, to_lc(b)); }

long double divisor(ScaledVariant v, std::size_t n, std::size_t k) {
  switch (v) {
    case ScaledVariant::Plain: return 1.0L;
    case ScaledVariant::S: return oracle::s_scale(n, k);
    case ScaledVariant::S2: return oracle::s_scale(2 * n, k);
    case ScaledVariant::S4: return oracle::s_scale(4 * n, k);
  }
  return 1.0L;
}

const CD kSmall{{1, 0}, {2, 0}, {3, 0}, {4, 0}};
const CD kSmallDft{{10, 0}, {-2, 2}, {-2, 0}, {-2, -2}};

bool near(const CD& a, const CD& b, double tol = 1e-14) { return rel_err(a, b) <= tol; }

}  // namespace

TEST_SUITE("fft") {
  TEST_CASE("split-radix order") {
    CHECK(split_radix_order(1) == std::vector<std::uint32_t>{0});
    CHECK(split_radix_order(2) == std::vector<std::uint32_t>{0, 1});
    CHECK(split_radix_order(4) == std::vector<std::uint32_t>{0, 2, 1, 3});
    CHECK(split_radix_order(8) == std::vector<std::uint32_t>{0, 4, 2, 6, 1, 5, 7, 3});
    CHECK_THROWS_AS(split_radix_order(3), std::invalid_argument);
  }

  TEST_CASE("small transforms") {
    CHECK(near(dft_naive(kSmall), kSmallDft));
    CHECK(near(fft_sr(kSmall), kSmallDft));
    CHECK(near(msr(kSmall), kSmallDft));
    CHECK(near(whufft::whufft(kSmall), kSmallDft));
    CHECK(near(dft_naive(CD{{1, 0}, {0, 0}, {0, 0}, {0, 0}}), CD(4, {1, 0})));
    CHECK(near(dft_naive(CD(4, {1, 0})), CD{{4, 0}, {0, 0}, {0, 0}, {0, 0}}));
    CD delta(16);
    delta[0] = {1, 0};
    CHECK(near(whufft::whufft(delta), CD(16, {1, 0})));
    CHECK_THROWS_AS(dft_naive(CD{}), std::invalid_argument);
    CHECK_THROWS_AS(fft_sr(CD(6)), std::invalid_argument);
  }

  TEST_CASE("two-point base cases") {
    const CC x{{Counted(1), Counted(2)}, {Counted(3), Counted(5)}};
    for (auto [name, fn] : std::initializer_list<std::pair<const char*, CC (*)(const CC&)>>{
             {"sr", [](const CC& v) { return fft_sr(v); }},
             {"msr", [](const CC& v) { return msr(v); }},
             {"tw", [](const CC& v) { return whufft_tw(v); }}}) {
      auto [y, t] = with_tally([&] { return fn(x); });
      CAPTURE(name);
      CHECK(t == OpTally{4, 0, 0, 0});
      CHECK(y[0].re.value() == 4);
      CHECK(y[1].im.value() == -3);
    }
  }

  TEST_CASE("oracle equivalence") {
    for (int l = 0; l <= 10; ++l) {
      const std::size_t n = std::size_t{1} << l;
      const auto x = random_complex(n, 400 + l);
      const auto ref = oracle::dft(to_lc(x));
      CAPTURE(l);
      CHECK(rel_err(dft_naive(x), ref) <= 1e-10);
      CHECK(rel_err(fft_sr(x), ref) <= 1e-10);
      CHECK(rel_err(msr(x), ref) <= 1e-10);
      CHECK(rel_err(whufft::whufft(x), ref) <= 1e-10);
      for (auto algo : {WhtAlgo::Naive, WhtAlgo::Folklore, WhtAlgo::H4}) {
        CHECK(rel_err(whufft_tw(whufft_hprime_phase(x, algo)), ref) <= 1e-10);
      }
    }
  }

  TEST_CASE("scaled variants") {
    for (int l = 0; l <= 9; ++l) {
      const std::size_t n = std::size_t{1} << l;
      const auto x = random_complex(n, 500 + l);
      const auto ref = oracle::dft(to_lc(x));
      const auto z = whufft_hprime_phase(x, WhtAlgo::Folklore);
      for (auto v : {ScaledVariant::Plain, ScaledVariant::S, ScaledVariant::S2, ScaledVariant::S4}) {
        auto d = [&](std::size_t k) { return divisor(v, n, k); };
        CAPTURE(l);
        CAPTURE(to_string(v));
        CHECK(rel_err(msr(x, v), ref, d) <= 1e-9);
        CHECK(rel_err(whufft_tw(z, v), ref, d) <= 1e-9);
      }
    }
  }

  TEST_CASE("twiddle constants") {
    CHECK(s_scale(4, 3) == 1.0);
    CHECK(s_scale(16, 3) == doctest::Approx(std::sin(3 * std::numbers::pi / 8)).epsilon(1e-15));
    CHECK(s_scale(16, 7) == s_scale(16, 3));
    for (std::uint64_t n = 8; n <= 4096; n *= 2) {
      for (std::uint64_t k = 0; k < n; ++k) {
        const double s = s_scale(n, k);
        CHECK(s > 0.0);
        CHECK(s <= 1.0);
        CHECK(std::abs(s - static_cast<double>(oracle::s_scale(n, k))) <= 1e-15);
        const auto t = t_twiddle(n, k);
        CHECK((std::abs(t.re) == 1.0 || std::abs(t.im) == 1.0));
        if (k % (n / 4) == 0) CHECK((t.re == 0.0 || t.im == 0.0));
      }
    }
    const auto t = t_twiddle(16, 3);
    CHECK(t.im == -1.0);
    CHECK(t.re == doctest::Approx(1.0 / std::tan(3 * std::numbers::pi / 8)));
    CHECK_THROWS_AS(t_twiddle(16, 16), std::out_of_range);
    CHECK(classify_constant(s_scale(16, 3)).tag == ConstKind::Tag::Generic);
  }

  TEST_CASE("conj_combine") {
    auto r = conj_combine(ComplexPair<double>{1, 2}, ComplexPair<double>{3, 4}, ComplexPair<double>{5, 6},
                          ComplexPair<double>{7, 8}, ComplexConstant(1.0, 0.0));
    CHECK(r.terms.d == 5);
    CHECK(r.terms.e == 6);
    CHECK(r.terms.f == 8);
    CHECK(r.terms.g == -7);
    r = conj_combine(ComplexPair<double>{1, 2}, ComplexPair<double>{3, 4}, ComplexPair<double>{5, 6},
                     ComplexPair<double>{7, 8}, ComplexConstant(0.0, 1.0));
    CHECK(r.terms.d == -8);
    CHECK(r.terms.e == 7);
    CHECK(r.terms.f == 5);
    CHECK(r.terms.g == 6);
    const ComplexPair<Counted> a{Counted(1), Counted(2)}, b{Counted(3), Counted(4)};
    auto t = with_tally([&] { return conj_combine(a, a, b, b, ComplexConstant(1.0, 0.0)); }).second;
    CHECK(t.mul == 0);
  }

  TEST_CASE("properties") {
    for (int l = 1; l <= 12; ++l) {
      const std::size_t n = std::size_t{1} << l;
      const auto x = random_complex(n, 600 + l);
      long double ex = 0;
      for (const auto& v : x) ex += static_cast<long double>(v.re) * v.re + static_cast<long double>(v.im) * v.im;
      const CD ys[] = {fft_sr(x), msr(x), whufft::whufft(x)};
      for (const auto& y : ys) {
        long double ey = 0;
        for (const auto& v : y) ey += static_cast<long double>(v.re) * v.re + static_cast<long double>(v.im) * v.im;
        CHECK(std::abs(static_cast<double>(ey / (n * ex)) - 1.0) <= 1e-9);
      }
      CHECK(rel_err(ys[0], ys[1]) <= 1e-10);
      CHECK(rel_err(ys[0], ys[2]) <= 1e-10);
      CHECK(rel_err(ys[2], ys[1]) <= 1e-11);

      CD real(n);
      for (std::size_t i = 0; i < n; ++i) real[i] = {x[i].re, 0.0};
      const auto yr = whufft::whufft(real);
      double worst = 0;
      for (std::size_t k = 1; k < n; ++k) {
        worst = std::max({worst, std::abs(yr[n - k].re - yr[k].re), std::abs(yr[n - k].im + yr[k].im)});
      }
      CHECK(worst <= 1e-10 * n);
    }
  }

  TEST_CASE("count decomposition") {
    for (int l = 0; l <= 14; ++l) {
      const std::size_t n = std::size_t{1} << l;
      const auto x = counted(random_complex(n, 700 + l));
      const auto total = with_tally([&] { return whufft::whufft(x); }).second;
      auto [z, th] = with_tally([&] { return whufft_hprime_phase(x, WhtAlgo::H8); });
      const auto tt = with_tally([&] { return whufft_tw(z); }).second;
      CAPTURE(l);
      CHECK(total == th + tt);

      // MSR spends exactly the H' additions (via the folklore WHT) and the
      // twiddle phase.
      const auto tm = with_tally([&] { return msr(x); }).second;
      auto [zf, tf] = with_tally([&] { return whufft_hprime_phase(x, WhtAlgo::Folklore); });
      const auto tw = with_tally([&] { return whufft_tw(zf); }).second;
      CHECK(tm == tf + tw);
    }
  }

  TEST_CASE("split-radix count recursion") {
    // T(N) = T(N/2) + 2 T(N/4) + 6N - 12, T(2) = 4, T(1) = 0: the k = 0 trip
    // has trivial twiddles and skips both complex multiplications.
    std::vector<std::uint64_t> expect{0, 4};
    for (int l = 2; l <= 14; ++l) {
      const std::uint64_t n = std::uint64_t{1} << l;
      expect.push_back(expect[l - 1] + 2 * expect[l - 2] + 6 * n - 12);
    }
    for (int l = 0; l <= 14; ++l) {
      const auto x = counted(random_complex(std::size_t{1} << l, 800 + l));
      CAPTURE(l);
      CHECK(with_tally([&] { return fft_sr(x); }).second.total() == expect[l]);
    }
  }

  TEST_CASE("intermediate magnitudes stay bounded") {
    const std::size_t n = 1024;
    const auto x = random_complex(n, 9);
    const auto y = whufft::whufft(x);
    const auto z = whufft_hprime_phase(x, WhtAlgo::H8);
    double worst = 0;
    for (const auto& v : y) worst = std::max({worst, std::abs(v.re), std::abs(v.im)});
    for (const auto& v : z) worst = std::max({worst, std::abs(v.re), std::abs(v.im)});
    CHECK(worst <= 4.0 * n);
  }
}
