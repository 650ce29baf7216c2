#pragma once

// Walsh-Hadamard transforms, in place on a span of field elements.
//
// The element type may be `double`, `Counted`, or `ComplexPair` of either;
// a complex element is transformed componentwise, so every field operation
// costs two real operations.
//
// wht_h4 and wht_h8 return 2^k * H_N x. The dyadic factor is pushed into the
// recursive calls and only materialised at the leaves, where each entry of a
// leaf with k >= 1 costs one multiply-by-power-of-two. The H4 variant that
// multiplies the three scaled subresults by 2 explicitly is not provided
// separately: it is wht_h4 with the factor pulled out, i.e. the identity
// wht_h4(x, k) == 2^k * wht_h4(x, 0).

#include <bit>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "whufft/complex_pair.hpp"
#include "whufft/counting.hpp"

namespace whufft {

enum class WhtAlgo { Naive, Folklore, H4, H8 };

std::string_view to_string(WhtAlgo a);

namespace detail {

template <class E>
void scale_by_pow2(std::span<E> x, int k) {
  const Constant factor = Constant::pow2(k);
  for (auto& v : x) v = v * factor;
}

inline const Constant& one_half() {
  static const Constant half(0.5);
  return half;
}

}  // namespace detail

// Direct evaluation of y_k = sum_j (-1)^popcount(j & k) x_j. O(N^2).
template <class E>
void wht_naive(std::span<E> x) {
  const std::size_t n = x.size();
  require_pow2(n, "wht_naive");
  const std::vector<E> in(x.begin(), x.end());
  for (std::size_t k = 0; k < n; ++k) {
    E acc = in[0];
    for (std::size_t j = 1; j < n; ++j) {
      if (std::popcount(j & k) % 2 == 0) {
        acc = acc + in[j];
      } else {
        acc = acc - in[j];
      }
    }
    x[k] = acc;
  }
}

namespace detail {
template <class E>
void folklore_rec(std::span<E> x) {
  const std::size_t n = x.size();
  if (n == 1) return;
  const std::size_t h = n / 2;
  folklore_rec(x.first(h));
  folklore_rec(x.subspan(h));
  for (std::size_t j = 0; j < h; ++j) {
    const E u = x[j];
    const E v = x[h + j];
    x[j] = u + v;
    x[h + j] = u - v;
  }
}
}  // namespace detail

// H_N = [[H, H], [H, -H]] on the two halves: exactly N log2 N additions.
template <class E>
void wht_folklore(std::span<E> x) {
  require_pow2(x.size(), "wht_folklore");
  detail::folklore_rec(x);
}

namespace detail {
template <class E>
void h4_rec(std::span<E> x, int k) {
  const std::size_t n = x.size();
  if (n <= 2) {
    scale_by_pow2(x, k);
    folklore_rec(x);
    return;
  }
  const std::size_t q = n / 4;
  h4_rec(x.first(q), k);
  h4_rec(x.subspan(q, q), k + 1);
  h4_rec(x.subspan(2 * q, q), k + 1);
  h4_rec(x.subspan(3 * q, q), k + 1);
  const Constant& half = one_half();
  for (std::size_t j = 0; j < q; ++j) {
    const E a = x[j];
    const E b = x[q + j];
    const E c = x[2 * q + j];
    const E d = x[3 * q + j];
    const E e = (b + c + d) * half;
    const E f = a - e;
    x[j] = a + e;
    x[q + j] = f + c;
    x[2 * q + j] = f + b;
    x[3 * q + j] = f + d;
  }
}

template <class E>
void h8_rec(std::span<E> x, int k) {
  const std::size_t n = x.size();
  if (n <= 4) {
    scale_by_pow2(x, k);
    folklore_rec(x);
    return;
  }
  const std::size_t m = n / 8;
  h8_rec(x.first(m), k);
  for (std::size_t blk = 1; blk < 8; ++blk) h8_rec(x.subspan(blk * m, m), k + 1);
  const Constant& half = one_half();
  for (std::size_t j = 0; j < m; ++j) {
    const E a = x[j];
    const E b = x[m + j];
    const E c = x[2 * m + j];
    const E d = x[3 * m + j];
    const E e = x[4 * m + j];
    const E f = x[5 * m + j];
    const E g = x[6 * m + j];
    const E h = x[7 * m + j];
    const E b1 = b + c;
    const E b2 = d + h;
    const E b3 = f + g;
    const E tot = (b1 + b2 + b3 + e) * half;
    const E diff = a - tot;
    const E dd = diff + d;
    const E ee = diff + e;
    const E hh = diff + h;
    x[j] = a + tot;
    x[m + j] = ee + c + g;
    x[2 * m + j] = ee + b + f;
    x[3 * m + j] = ee + b2;
    x[4 * m + j] = dd + b1;
    x[5 * m + j] = hh + c + f;
    x[6 * m + j] = hh + b + g;
    x[7 * m + j] = dd + b3;
  }
}
}  // namespace detail

// Computes 2^k H_N x from the rank-one-plus-sparse split of H_4.
template <class E>
void wht_h4(std::span<E> x, int k = 0) {
  require_pow2(x.size(), "wht_h4");
  detail::h4_rec(x, k);
}

// Computes 2^k H_N x from the rank-one-plus-sparse split of H_8: 23 field
// operations per eight entries per level instead of 24.
template <class E>
void wht_h8(std::span<E> x, int k = 0) {
  require_pow2(x.size(), "wht_h8");
  detail::h8_rec(x, k);
}

template <class E>
void apply_wht(WhtAlgo algo, std::span<E> x) {
  switch (algo) {
    case WhtAlgo::Naive: wht_naive(x); break;
    case WhtAlgo::Folklore: wht_folklore(x); break;
    case WhtAlgo::H4: wht_h4(x, 0); break;
    case WhtAlgo::H8: wht_h8(x, 0); break;
  }
}

}  // namespace whufft
