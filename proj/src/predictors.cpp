#include "whufft/predictors.hpp"

#include <limits>
#include <stdexcept>

#include "whufft/hprime.hpp"

namespace whufft {

namespace {

using boost::multiprecision::cpp_int;

struct BigTally {
  cpp_int add_sub, mul, div2, mul_pow2;

  [[nodiscard]] cpp_int total() const { return add_sub + mul + div2 + mul_pow2; }

  BigTally& operator+=(const BigTally& o) {
    add_sub += o.add_sub;
    mul += o.mul;
    div2 += o.div2;
    mul_pow2 += o.mul_pow2;
    return *this;
  }
  BigTally scaled(const cpp_int& f) const { return {add_sub * f, mul * f, div2 * f, mul_pow2 * f}; }
};

std::optional<OpTally> narrow(const BigTally& t) {
  const cpp_int limit = cpp_int(std::numeric_limits<std::uint64_t>::max());
  if (t.total() > limit) return std::nullopt;
  return OpTally{t.add_sub.convert_to<std::uint64_t>(), t.mul.convert_to<std::uint64_t>(),
                 t.div2.convert_to<std::uint64_t>(), t.mul_pow2.convert_to<std::uint64_t>()};
}

cpp_int pow2(int l) { return cpp_int(1) << l; }

// Rank-one-plus-sparse WHT with branching 2^arity: per level and per group of
// 2^arity entries it spends `adds` additions and one halving. Recursion stops
// at length 2^m, m = l mod arity, where a folklore WHT costs m 2^m additions.
// Only the leftmost base block keeps scale 2^0, so N - 2^m entries pay one
// multiply-by-power-of-two.
BigTally nonrigid_tally(int l, int arity, int adds) {
  const int m = l % arity;
  const cpp_int n = pow2(l);
  const cpp_int groups = (n >> arity) * ((l - m) / arity);
  return {groups * adds + n * m, 0, groups, n - pow2(m)};
}

BigTally folklore_tally(int l) { return {pow2(l) * l, 0, 0, 0}; }

BigTally hprime_tally(int l) {
  BigTally sum;
  for (int j = 1; j <= l; ++j) {
    const cpp_int f = f_count_log(l, j);
    sum += nonrigid_tally(j, 3, 22).scaled(f * 2);
  }
  return sum;
}

Rational sign(int l) { return (l % 2 == 0) ? Rational(1) : Rational(-1); }

Rational nl(int l) { return Rational(pow2(l) * l); }
Rational n(int l) { return Rational(pow2(l)); }

Prediction make(std::string_view algo, int l, PredictionKind kind, Rational total) {
  Prediction p;
  p.algo = std::string(algo);
  p.log2n = l;
  p.kind = kind;
  p.total = std::move(total);
  return p;
}

Prediction make_exact(std::string_view algo, int l, const BigTally& t) {
  Prediction p = make(algo, l, PredictionKind::Exact, Rational(t.total()));
  p.breakdown = narrow(t);
  return p;
}

bool comparable(PredictionKind a, PredictionKind b) {
  auto exactish = [](PredictionKind k) {
    return k == PredictionKind::Exact || k == PredictionKind::ExactCandidate;
  };
  if (a == PredictionKind::LeadingOrder || b == PredictionKind::LeadingOrder) return false;
  return (exactish(a) && exactish(b)) || a == b;
}

}  // namespace

std::string_view to_string(PredictionKind k) {
  switch (k) {
    case PredictionKind::Exact: return "exact";
    case PredictionKind::ExactCandidate: return "exact-candidate";
    case PredictionKind::UpperBound: return "upper-bound";
    case PredictionKind::LeadingOrder: return "leading-order";
  }
  return "?";
}

const std::vector<std::string>& predictor_algos() {
  static const std::vector<std::string> names = {"folklore", "h4",  "h8",     "hprime_exact",
                                                 "hprime_bound", "tw", "whufft", "msr", "sr"};
  return names;
}

Prediction predict(std::string_view algo, int l) {
  if (l < 0 || l > 60) throw std::out_of_range("predict: log2n must be in [0, 60]");
  using K = PredictionKind;
  if (algo == "folklore") return make_exact(algo, l, folklore_tally(l));
  if (algo == "h4") return make_exact(algo, l, nonrigid_tally(l, 2, 7));
  if (algo == "h8") return make_exact(algo, l, nonrigid_tally(l, 3, 22));
  if (algo == "hprime_exact") return make_exact(algo, l, hprime_tally(l));
  if (algo == "hprime_bound") {
    return make(algo, l, K::UpperBound, Rational(23, 36) * nl(l) + Rational(25, 12) * n(l));
  }
  if (algo == "tw") {
    return make(algo, l, K::ExactCandidate,
                Rational(28, 9) * nl(l) - Rational(112, 27) * n(l) - 2 * l -
                    Rational(2, 27) * sign(l) + 8);
  }
  if (algo == "whufft") {
    return make(algo, l, K::UpperBound, Rational(15, 4) * nl(l) - Rational(223, 108) * n(l));
  }
  if (algo == "msr") {
    return make(algo, l, K::ExactCandidate,
                Rational(34, 9) * nl(l) - Rational(124, 27) * n(l) - 2 * l +
                    Rational(10, 27) * sign(l) + 8);
  }
  if (algo == "sr") return make(algo, l, K::LeadingOrder, 4 * nl(l));
  throw std::invalid_argument("predict: unknown algorithm '" + std::string(algo) + "'");
}

std::optional<int> crossover(std::string_view algo_a, std::string_view algo_b, int log2n_max) {
  if (log2n_max < 1 || log2n_max > 60) {
    throw std::out_of_range("crossover: log2n_max must be in [1, 60]");
  }
  const auto ka = predict(algo_a, 1).kind;
  const auto kb = predict(algo_b, 1).kind;
  if (!comparable(ka, kb)) {
    throw std::invalid_argument("crossover: predictions of kind " + std::string(to_string(ka)) +
                                " and " + std::string(to_string(kb)) + " are not comparable");
  }
  for (int l = 1; l <= log2n_max; ++l) {
    if (predict(algo_a, l).total < predict(algo_b, l).total) return l;
  }
  return std::nullopt;
}

Rational reduction_leading_constant(const Rational& c) { return Rational(2, 3) * c + Rational(28, 9); }

Prediction predict_reduction(const Rational& c, int l) {
  if (l < 0 || l > 60) throw std::out_of_range("predict_reduction: log2n must be in [0, 60]");
  return make("reduction", l, PredictionKind::LeadingOrder, reduction_leading_constant(c) * nl(l));
}

OpTally wht_h4_tally(int log2n) {
  if (log2n < 0 || log2n > 57) throw std::out_of_range("wht_h4_tally: log2n must be in [0, 57]");
  return *narrow(nonrigid_tally(log2n, 2, 7));
}

OpTally wht_h8_tally(int log2n) {
  if (log2n < 0 || log2n > 57) throw std::out_of_range("wht_h8_tally: log2n must be in [0, 57]");
  return *narrow(nonrigid_tally(log2n, 3, 22));
}

}  // namespace whufft
