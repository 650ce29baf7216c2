#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "whufft/counting.hpp"

namespace whufft {

// Complex value with separately stored real and imaginary parts. Every
// complex operation is written out as real operations on S, so charges
// follow directly from the real charging rules.
template <class S>
struct ComplexPair {
  S re{};
  S im{};

  friend ComplexPair operator+(const ComplexPair& a, const ComplexPair& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ComplexPair operator-(const ComplexPair& a, const ComplexPair& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend ComplexPair operator-(const ComplexPair& a) { return {-a.re, -a.im}; }

  friend ComplexPair operator*(const ComplexPair& a, const Constant& c) {
    return {a.re * c, a.im * c};
  }
  friend ComplexPair operator*(const Constant& c, const ComplexPair& a) {
    return {c * a.re, c * a.im};
  }

  // (a + a'i)(b + b'i) with both factors variable: 4 Mul + 2 AddSub.
  friend ComplexPair operator*(const ComplexPair& a, const ComplexPair& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
};

// Multiplication by i and -i only moves and negates parts.
template <class S>
ComplexPair<S> times_i(const ComplexPair<S>& a) {
  return {-a.im, a.re};
}
template <class S>
ComplexPair<S> times_minus_i(const ComplexPair<S>& a) {
  return {a.im, -a.re};
}

// A complex circuit constant r + r'i with each part classified.
struct ComplexConstant {
  Constant re{};
  Constant im{};

  ComplexConstant() = default;
  ComplexConstant(double r, double i) : re(r), im(i) {}
  ComplexConstant(Constant r, Constant i) : re(r), im(i) {}

  [[nodiscard]] ComplexConstant conj() const { return {re, Constant(-im.value())}; }
};

template <class S>
ComplexPair<S> operator*(const ComplexConstant& c, const ComplexPair<S>& a) {
  return {c.re * a.re - c.im * a.im, c.re * a.im + c.im * a.re};
}

inline bool is_pow2(std::uint64_t n) { return n != 0 && std::has_single_bit(n); }

inline int log2_exact(std::uint64_t n) { return std::countr_zero(n); }

// Throws std::invalid_argument unless n is a power of two.
inline int require_pow2(std::uint64_t n, const char* what) {
  if (!is_pow2(n)) {
    throw std::invalid_argument(std::string(what) + ": length " + std::to_string(n) +
                                " is not a power of two");
  }
  return log2_exact(n);
}

}  // namespace whufft
