#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <thread>

#include "oracles.hpp"
#include "whufft/complex_pair.hpp"
#include "whufft/counting.hpp"
#include "whufft/wht.hpp"

using namespace whufft;

TEST_SUITE("counting") {
  TEST_CASE("classify_constant") {
    using Tag = ConstKind::Tag;
    CHECK(classify_constant(0.0).tag == Tag::Zero);
    CHECK(classify_constant(-0.0).tag == Tag::Zero);
    CHECK(classify_constant(1.0).tag == Tag::PlusOne);
    CHECK(classify_constant(-1.0).tag == Tag::MinusOne);
    const auto half = classify_constant(0.5);
    CHECK(half.tag == Tag::PowTwo);
    CHECK(half.exponent == -1);
    const auto eight = classify_constant(8.0);
    CHECK(eight.tag == Tag::PowTwo);
    CHECK(eight.exponent == 3);
    CHECK(classify_constant(0.25).exponent == -2);
    CHECK(classify_constant(-2.0).tag == Tag::Generic);
    CHECK(classify_constant(3.0).tag == Tag::Generic);
    CHECK(classify_constant(std::sin(3 * std::numbers::pi / 8)).tag == Tag::Generic);
    CHECK_THROWS_AS(classify_constant(std::numeric_limits<double>::infinity()), std::invalid_argument);
    CHECK_THROWS_AS(classify_constant(std::nan("")), std::invalid_argument);
  }

  TEST_CASE("charge descriptors") {
    OpTally t;
    t = charge(t, Step::complex_add_sub());
    CHECK(t == OpTally{2, 0, 0, 0});
    t = charge(OpTally{}, Step::complex_scale(classify_constant(1.0)));
    CHECK(t == OpTally{});
    t = charge(OpTally{}, Step::complex_scale(classify_constant(0.3)));
    CHECK(t == OpTally{0, 2, 0, 0});
    t = charge(OpTally{}, Step::complex_scale(classify_constant(0.5)));
    CHECK(t == OpTally{0, 0, 2, 0});
    t = charge(OpTally{}, Step::complex_scale(classify_constant(4.0)));
    CHECK(t == OpTally{0, 0, 0, 2});
    CHECK(charge(OpTally{}, Step::complex_mul()) == OpTally{2, 4, 0, 0});
    CHECK(charge(OpTally{}, Step::complex_mul_unit_part()) == OpTally{2, 2, 0, 0});
    CHECK(charge(OpTally{}, Step::add_sub()) == OpTally{1, 0, 0, 0});
    CHECK(charge(OpTally{}, Step::mul_var()) == OpTally{0, 1, 0, 0});
  }

  TEST_CASE("counted arithmetic charges") {
    const Counted a(1.5), b(2.25);
    CHECK(with_tally([&] { return a + b; }).second == OpTally{1, 0, 0, 0});
    CHECK(with_tally([&] { return a - b; }).second == OpTally{1, 0, 0, 0});
    CHECK(with_tally([&] { return -a; }).second == OpTally{});
    CHECK(with_tally([&] { return a * b; }).second == OpTally{0, 1, 0, 0});
    CHECK(with_tally([&] { return a * Constant(0.5); }).second == OpTally{0, 0, 1, 0});
    CHECK(with_tally([&] { return a * Constant(2.0); }).second == OpTally{0, 0, 0, 1});
    CHECK(with_tally([&] { return a * Constant(0.25); }).second == OpTally{0, 0, 0, 1});
    CHECK(with_tally([&] { return a * Constant(-1.0); }).second == OpTally{});
    CHECK(with_tally([&] { return a * Constant(0.7); }).second == OpTally{0, 1, 0, 0});
    CHECK(with_tally([] {}) == OpTally{});
  }

  TEST_CASE("structural zeros are elided") {
    const Counted a(3.0);
    auto [z, t] = with_tally([&] { return a * Constant(0.0); });
    CHECK(z.is_structural_zero());
    CHECK(t == OpTally{});
    auto [s, t2] = with_tally([&] { return a + z; });
    CHECK(s.value() == 3.0);
    CHECK_FALSE(s.is_structural_zero());
    CHECK(t2 == OpTally{});
    // A computed zero is an ordinary value.
    auto t3 = with_tally([&] { return a + (a - a); }).second;
    CHECK(t3 == OpTally{2, 0, 0, 0});
  }

  TEST_CASE("complex operations decompose") {
    using C = ComplexPair<Counted>;
    const C a{Counted(1), Counted(2)}, b{Counted(3), Counted(-1)};
    CHECK(with_tally([&] { return a + b; }).second == OpTally{2, 0, 0, 0});
    CHECK(with_tally([&] { return a * Constant(0.3); }).second == OpTally{0, 2, 0, 0});
    CHECK(with_tally([&] { return a * Constant(1.0); }).second == OpTally{});
    CHECK(with_tally([&] { return a * b; }).second == OpTally{2, 4, 0, 0});
    CHECK(with_tally([&] { return ComplexConstant(0.6, 0.8) * a; }).second == OpTally{2, 4, 0, 0});
    CHECK(with_tally([&] { return ComplexConstant(1.0, 0.8) * a; }).second == OpTally{2, 2, 0, 0});
    CHECK(with_tally([&] { return ComplexConstant(1.0, 0.0) * a; }).second == OpTally{});
    CHECK(with_tally([&] { return ComplexConstant(0.0, -1.0) * a; }).second == OpTally{});
    CHECK(with_tally([&] { return times_i(a); }).second == OpTally{});
  }

  TEST_CASE("nested scopes do not leak") {
    const Counted a(1), b(2);
    auto outer = with_tally([&] {
      auto r = a + b;
      auto inner = with_tally([&] { return a * b; }).second;
      CHECK(inner == OpTally{0, 1, 0, 0});
      return r - a;
    });
    CHECK(outer.second == OpTally{2, 0, 0, 0});
  }

  TEST_CASE("no active scope charges nothing and does not crash") {
    const Counted a(1), b(2);
    CHECK((a + b).value() == 3.0);
  }

  TEST_CASE("tally algebra") {
    const OpTally x{1, 2, 3, 4}, y{5, 6, 7, 8};
    CHECK(x.total() == 10);
    CHECK(x + y == y + x);
    CHECK((x + y) + OpTally{} == x + y);
    CHECK(x * 3 == OpTally{3, 6, 9, 12});
  }

  TEST_CASE("numeric transparency and additivity") {
    const auto raw = oracle::uniform(64, 7);
    std::vector<double> plain(raw);
    std::vector<Counted> counted(raw.begin(), raw.end());
    wht_h8(std::span<double>(plain));
    auto t_all = with_tally([&] { wht_h8(std::span<Counted>(counted)); });
    for (std::size_t i = 0; i < plain.size(); ++i) CHECK(plain[i] == counted[i].value());

    std::vector<Counted> first(raw.begin(), raw.begin() + 32), second(raw.begin() + 32, raw.end());
    auto both = with_tally([&] {
      wht_folklore(std::span<Counted>(first));
      wht_h4(std::span<Counted>(second));
    });
    std::vector<Counted> f2(raw.begin(), raw.begin() + 32), s2(raw.begin() + 32, raw.end());
    auto tf = with_tally([&] { wht_folklore(std::span<Counted>(f2)); });
    auto ts = with_tally([&] { wht_h4(std::span<Counted>(s2)); });
    CHECK(both == tf + ts);
    CHECK(t_all.total() > 0);
  }

  TEST_CASE("free-constant rule") {
    const Counted a(0.3), b(0.9);
    auto with_steps = with_tally([&] { return ((a * Constant(1.0)) + b) * Constant(-1.0); }).second;
    auto without = with_tally([&] { return -(a + b); }).second;
    CHECK(with_steps == without);
    auto zero_add = with_tally([&] { return a * Constant(0.7) + Counted::structural_zero(); }).second;
    CHECK(zero_add == with_tally([&] { return a * Constant(0.7); }).second);
  }

  TEST_CASE("independent threads keep separate tallies") {
    OpTally t1, t2;
    std::thread th([&] {
      t1 = with_tally([] {
        Counted s(0);
        for (int i = 0; i < 1000; ++i) s = s + Counted(1);
        return s;
      }).second;
    });
    t2 = with_tally([] { return Counted(1) * Counted(2); }).second;
    th.join();
    CHECK(t1 == OpTally{1000, 0, 0, 0});
    CHECK(t2 == OpTally{0, 1, 0, 0});
  }
}
