#pragma once

// Discrete Fourier transforms y_k = sum_j w_N^{jk} x_j, w_N = exp(-2 pi i/N),
// over ComplexPair<S> for S in {double, Counted}.
//
// The recursive algorithms run in place on the split-radix order of the
// input: the even-indexed half first, then indices 1 mod 4, then indices
// 3 mod 4 (with x_{-1} = x_{N-1}), each part recursively ordered the same
// way. The reordering is a gather and costs no arithmetic. Outputs are in
// natural order.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

#include "whufft/complex_pair.hpp"
#include "whufft/hprime.hpp"
#include "whufft/twiddle.hpp"

namespace whufft {

template <class S>
using CVec = std::vector<ComplexPair<S>>;

// perm[i] is the natural index placed at position i by the split-radix order.
const std::vector<std::uint32_t>& split_radix_order(std::size_t n);

template <class T>
std::vector<T> to_split_radix_order(const std::vector<T>& x) {
  const auto& perm = split_radix_order(x.size());
  std::vector<T> out;
  out.reserve(x.size());
  for (auto i : perm) out.push_back(x[i]);
  return out;
}

// Direct O(N^2) summation.
template <class S>
CVec<S> dft_naive(const CVec<S>& x) {
  const std::size_t n = x.size();
  if (n == 0) throw std::invalid_argument("dft_naive: empty input");
  require_pow2(n, "dft_naive");
  std::vector<ComplexConstant> roots;
  roots.reserve(n);
  for (std::size_t m = 0; m < n; ++m) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(n);
    roots.emplace_back(std::cos(theta), -std::sin(theta));
  }
  CVec<S> y(n);
  for (std::size_t k = 0; k < n; ++k) {
    ComplexPair<S> acc = x[0];
    for (std::size_t j = 1; j < n; ++j) acc = acc + roots[(j * k) % n] * x[j];
    y[k] = acc;
  }
  return y;
}

// Combination step shared by the uprooted twiddle procedures. With
// b~ = B + C and c~ = B - C (componentwise b, b', c, c'), and r + r'i = alpha:
//   D = r b - r' c',  E = r b' + r' c,  F = r' b + r c',  G = r' b' - r c,
// and the four outputs are
//   A + (alpha B + alpha* C)    = (a + D) + (a' + E) i
//   Z - i(alpha B - alpha* C)   = (z + F) + (z' + G) i
//   A - (alpha B + alpha* C)    = (a - D) + (a' - E) i
//   Z + i(alpha B - alpha* C)   = (z - F) + (z' - G) i
template <class S>
struct ConjCombined {
  S d, e, f, g;
};

template <class S>
ConjCombined<S> conj_combine_terms(const ComplexPair<S>& bt, const ComplexPair<S>& ct,
                                   const ComplexConstant& w) {
  return {w.re * bt.re + w.im * (-ct.im), w.re * bt.im + w.im * ct.re,
          w.im * bt.re + w.re * ct.im, w.im * bt.im + w.re * (-ct.re)};
}

template <class S>
struct ConjOutputs {
  ConjCombined<S> terms;
  ComplexPair<S> y0, y1, y2, y3;  // positions k, k + N/4, k + N/2, k + 3N/4
};

template <class S>
ConjOutputs<S> conj_combine(const ComplexPair<S>& a, const ComplexPair<S>& z,
                            const ComplexPair<S>& bt, const ComplexPair<S>& ct,
                            const ComplexConstant& w) {
  const auto t = conj_combine_terms(bt, ct, w);
  return {t,
          {a.re + t.d, a.im + t.e},
          {z.re + t.f, z.im + t.g},
          {a.re - t.d, a.im - t.e},
          {z.re - t.f, z.im - t.g}};
}

namespace detail {

template <class S>
void base_case(std::span<ComplexPair<S>> z, ScaledVariant v) {
  const std::size_t n = z.size();
  if (n == 2) {
    const auto u = z[0];
    const auto w = z[1];
    z[0] = u + w;
    z[1] = u - w;
  }
  if (v == ScaledVariant::Plain) return;
  for (std::size_t k = 0; k < n; ++k) z[k] = z[k] * Constant(1.0 / variant_divisor(v, n, k));
}

template <class S>
void split_radix_rec(std::span<ComplexPair<S>> z) {
  const std::size_t n = z.size();
  if (n <= 2) {
    base_case(z, ScaledVariant::Plain);
    return;
  }
  const std::size_t q = n / 4;
  split_radix_rec(z.first(2 * q));
  split_radix_rec(z.subspan(2 * q, q));
  split_radix_rec(z.subspan(3 * q, q));
  const auto& tt = twiddle_tables(n);
  for (std::size_t k = 0; k < q; ++k) {
    const auto a = z[k];
    const auto a2 = z[k + q];
    const auto wb = tt.omega[k] * z[2 * q + k];
    const auto wc = tt.omega[k].conj() * z[3 * q + k];
    const auto u = wb + wc;
    const auto v = wb - wc;
    z[k] = a + u;
    z[k + 2 * q] = a - u;
    z[k + q] = a2 - times_i(v);
    z[k + 3 * q] = a2 + times_i(v);
  }
}

constexpr ScaledVariant even_child(ScaledVariant v) {
  switch (v) {
    case ScaledVariant::Plain: return ScaledVariant::Plain;
    case ScaledVariant::S: return ScaledVariant::S2;
    case ScaledVariant::S2: return ScaledVariant::S4;
    case ScaledVariant::S4: return ScaledVariant::S2;
  }
  return v;
}

template <class S>
void msr_rec(std::span<ComplexPair<S>> z, ScaledVariant v) {
  const std::size_t n = z.size();
  if (n <= 2) {
    base_case(z, v);
    return;
  }
  const std::size_t q = n / 4;
  msr_rec(z.first(2 * q), even_child(v));
  msr_rec(z.subspan(2 * q, q), ScaledVariant::S);
  msr_rec(z.subspan(3 * q, q), ScaledVariant::S);
  const auto& tt = twiddle_tables(n);
  for (std::size_t k = 0; k < q; ++k) {
    const ComplexConstant& w = (v == ScaledVariant::Plain) ? tt.omega_scaled[k] : tt.t[k];
    const auto a = z[k];
    const auto a2 = z[k + q];
    const auto wb = w * z[2 * q + k];
    const auto wc = w.conj() * z[3 * q + k];
    auto u = wb + wc;
    auto iv = times_i(wb - wc);
    if (v == ScaledVariant::S2) {
      u = u * tt.ratio2_lo[k];
      iv = iv * tt.ratio2_hi[k];
    }
    z[k] = a + u;
    z[k + q] = a2 - iv;
    z[k + 2 * q] = a - u;
    z[k + 3 * q] = a2 + iv;
    if (v == ScaledVariant::S4) {
      z[k] = z[k] * tt.ratio4[0][k];
      z[k + q] = z[k + q] * tt.ratio4[1][k];
      z[k + 2 * q] = z[k + 2 * q] * tt.ratio4[2][k];
      z[k + 3 * q] = z[k + 3 * q] * tt.ratio4[3][k];
    }
  }
}

template <class S>
void tw_rec(std::span<ComplexPair<S>> z, ScaledVariant v) {
  const std::size_t n = z.size();
  if (n <= 2) {
    base_case(z, v);
    return;
  }
  const std::size_t q = n / 4;
  tw_rec(z.first(2 * q), even_child(v));
  tw_rec(z.subspan(2 * q, q), ScaledVariant::S);
  tw_rec(z.subspan(3 * q, q), ScaledVariant::S);
  const auto& tt = twiddle_tables(n);
  for (std::size_t k = 0; k < q; ++k) {
    const ComplexConstant& w = (v == ScaledVariant::Plain) ? tt.omega_scaled[k] : tt.t[k];
    const auto a = z[k];
    const auto a2 = z[k + q];
    auto t = conj_combine_terms(z[2 * q + k], z[3 * q + k], w);
    if (v == ScaledVariant::S2) {
      t.d = t.d * tt.ratio2_lo[k];
      t.e = t.e * tt.ratio2_lo[k];
      t.f = t.f * tt.ratio2_hi[k];
      t.g = t.g * tt.ratio2_hi[k];
    }
    z[k] = {a.re + t.d, a.im + t.e};
    z[k + q] = {a2.re + t.f, a2.im + t.g};
    z[k + 2 * q] = {a.re - t.d, a.im - t.e};
    z[k + 3 * q] = {a2.re - t.f, a2.im - t.g};
    if (v == ScaledVariant::S4) {
      z[k] = z[k] * tt.ratio4[0][k];
      z[k + q] = z[k + q] * tt.ratio4[1][k];
      z[k + 2 * q] = z[k + 2 * q] * tt.ratio4[2][k];
      z[k + 3 * q] = z[k + 3 * q] * tt.ratio4[3][k];
    }
  }
}

}  // namespace detail

// Conjugate-pair split-radix FFT.
template <class S>
CVec<S> fft_sr(const CVec<S>& x) {
  require_pow2(x.size(), "fft_sr");
  auto z = to_split_radix_order(x);
  detail::split_radix_rec(std::span<ComplexPair<S>>(z));
  return z;
}

// Modified split-radix: four mutually recursive procedures whose outputs are
// the DFT divided by 1, s_{N,k}, s_{2N,k}, s_{4N,k}.
template <class S>
CVec<S> msr(const CVec<S>& x, ScaledVariant v = ScaledVariant::Plain) {
  require_pow2(x.size(), "msr");
  auto z = to_split_radix_order(x);
  detail::msr_rec(std::span<ComplexPair<S>>(z), v);
  return z;
}

// Twiddle phase of the uprooted FFT. `z` is an input already reordered into
// split-radix order and transformed by H'.
template <class S>
CVec<S> whufft_tw(CVec<S> z, ScaledVariant v = ScaledVariant::Plain) {
  require_pow2(z.size(), "whufft_tw");
  detail::tw_rec(std::span<ComplexPair<S>>(z), v);
  return z;
}

// H' phase of the uprooted FFT: split-radix reorder, then H' with the given
// WHT algorithm on each block.
template <class S>
CVec<S> whufft_hprime_phase(const CVec<S>& x, WhtAlgo algo = WhtAlgo::H8) {
  require_pow2(x.size(), "whufft");
  auto z = to_split_radix_order(x);
  apply_hprime(std::span<ComplexPair<S>>(z), algo);
  return z;
}

// Walsh-Hadamard uprooted FFT: all split-radix pre-additions are hoisted
// into one H' application computed with the H8 WHT, then the twiddle phase.
template <class S>
CVec<S> whufft(const CVec<S>& x, WhtAlgo algo = WhtAlgo::H8) {
  return whufft_tw(whufft_hprime_phase(x, algo), ScaledVariant::Plain);
}

}  // namespace whufft
