#pragma once

// Scale factors and twiddle constants of the modified split-radix recursion.
//
//   s_{N,k} = 1                                   if N <= 4
//           = s_{N/4,k4} cos(2 pi k4 / N)         if k4 <= N/8
//           = s_{N/4,k4} sin(2 pi k4 / N)         otherwise,   k4 = k mod N/4
//
//   t_N^k = w_N^k s_{N/4,k} / s_{N,k},  w_N = exp(-2 pi i / N)
//
// One component of t_N^k is +-1; the tables store it as exactly +-1 so the
// corresponding multiplications classify as free.

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "whufft/complex_pair.hpp"

namespace whufft {

// Output scaling selected by an MSR / TW procedure: entry k of the result is
// DFT(x)_k divided by 1, s_{N,k}, s_{2N,k} or s_{4N,k}.
enum class ScaledVariant { Plain, S, S2, S4 };

std::string_view to_string(ScaledVariant v);

// s_{n,k} for any k >= 0. n must be a power of two.
double s_scale(std::uint64_t n, std::uint64_t k);

// t_n^k with the unit component snapped to exactly +-1 (and the other
// component to exactly 0 when k mod n/4 == 0). Requires k < n.
ComplexPair<double> t_twiddle(std::uint64_t n, std::uint64_t k);

// Divisor applied to output k of a size-n procedure of the given variant.
double variant_divisor(ScaledVariant v, std::uint64_t n, std::uint64_t k);

// Per-size circuit constants, indexed by loop trip k in [0, n/4).
struct TwiddleTables {
  std::size_t n = 0;
  std::vector<ComplexConstant> omega;         // w_n^k                    (split radix)
  std::vector<ComplexConstant> omega_scaled;  // w_n^k s_{n/4,k}          (Plain, TW)
  std::vector<ComplexConstant> t;             // t_n^k                    (S, S2, S4)
  std::vector<Constant> ratio2_lo;            // s_{n,k} / s_{2n,k}
  std::vector<Constant> ratio2_hi;            // s_{n,k} / s_{2n,k+n/4}
  std::array<std::vector<Constant>, 4> ratio4;  // s_{n,k} / s_{4n,k+q n/4}
};

// Built once per size and immutable afterwards; safe to call concurrently.
const TwiddleTables& twiddle_tables(std::size_t n);

}  // namespace whufft
