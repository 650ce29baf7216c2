#pragma once

// Closed-form operation counts for the implemented transforms, evaluated in
// exact rational arithmetic.

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "whufft/counting.hpp"

namespace whufft {

using Rational = boost::multiprecision::cpp_rational;

enum class PredictionKind {
  Exact,           // equals the measured tally
  ExactCandidate,  // published exact formula; measured deltas are reported
  UpperBound,
  LeadingOrder,    // only the c N log N term
};

std::string_view to_string(PredictionKind k);

struct Prediction {
  std::string algo;
  int log2n = 0;
  PredictionKind kind = PredictionKind::Exact;
  Rational total;
  // Per-class breakdown, present for Exact predictions whose counts fit in
  // 64 bits.
  std::optional<OpTally> breakdown;

  [[nodiscard]] double total_double() const { return total.convert_to<double>(); }
};

// Algorithm identifiers accepted by predict().
const std::vector<std::string>& predictor_algos();

// algo is one of predictor_algos(); 0 <= log2n <= 60.
Prediction predict(std::string_view algo, int log2n);

// Smallest log2n in [1, log2n_max] with predict(a).total < predict(b).total.
// Both predictions must be of comparable kind: Exact and ExactCandidate mix
// freely, UpperBound only with UpperBound, LeadingOrder never.
std::optional<int> crossover(std::string_view algo_a, std::string_view algo_b, int log2n_max);

// Leading constant of an FFT that spends a c N log N WHT on its H' phase
// and uses the exact twiddle phase: 2c/3 + 28/9.
Rational reduction_leading_constant(const Rational& c);

// (2c/3 + 28/9) N log2 N, kind LeadingOrder.
Prediction predict_reduction(const Rational& c, int log2n);

// Field-operation tally of wht_h4 / wht_h8 at scale exponent 0 on a
// length-2^log2n input. Exact for log2n <= 57.
OpTally wht_h4_tally(int log2n);
OpTally wht_h8_tally(int log2n);

}  // namespace whufft
