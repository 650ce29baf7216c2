#pragma once

// Reference computations used only by the tests. They share no code with
// the library.

#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

namespace oracle {

using LC = std::complex<long double>;

inline std::vector<LC> dft(const std::vector<LC>& x) {
  const std::size_t n = x.size();
  std::vector<LC> y(n);
  for (std::size_t k = 0; k < n; ++k) {
    LC acc = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const long double theta = -2.0L * std::numbers::pi_v<long double> *
                                static_cast<long double>((j * k) % n) / static_cast<long double>(n);
      acc += x[j] * LC(std::cos(theta), std::sin(theta));
    }
    y[k] = acc;
  }
  return y;
}

// H_N built as the Kronecker power of [[1, 1], [1, -1]].
inline std::vector<int> hadamard(std::size_t n) {
  std::vector<int> h{1};
  for (std::size_t size = 1; size < n; size *= 2) {
    std::vector<int> next(4 * size * size);
    for (std::size_t r = 0; r < size; ++r) {
      for (std::size_t c = 0; c < size; ++c) {
        const int v = h[r * size + c];
        next[r * 2 * size + c] = v;
        next[r * 2 * size + c + size] = v;
        next[(r + size) * 2 * size + c] = v;
        next[(r + size) * 2 * size + c + size] = -v;
      }
    }
    h = std::move(next);
  }
  return h;
}

template <class T>
std::vector<T> wht(const std::vector<T>& x) {
  const std::size_t n = x.size();
  const auto h = hadamard(n);
  std::vector<T> y(n, T{});
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) y[r] += static_cast<T>(h[r * n + c]) * x[c];
  }
  return y;
}

// s_{N,k} from its defining recursion, in long double.
inline long double s_scale(std::uint64_t n, std::uint64_t k) {
  if (n <= 4) return 1.0L;
  const std::uint64_t k4 = k % (n / 4);
  const long double theta = 2.0L * std::numbers::pi_v<long double> * k4 / n;
  return s_scale(n / 4, k4) * (k4 <= n / 8 ? std::cos(theta) : std::sin(theta));
}

// A + alpha B + conj(alpha) C and its three companions, evaluated directly.
struct ConjDirect {
  std::complex<double> y0, y1, y2, y3;
};

inline ConjDirect conj_direct(std::complex<double> a, std::complex<double> z, std::complex<double> b,
                              std::complex<double> c, std::complex<double> alpha) {
  const std::complex<double> i(0, 1);
  const auto sum = alpha * b + std::conj(alpha) * c;
  const auto diff = alpha * b - std::conj(alpha) * c;
  return {a + sum, z - i * diff, a - sum, z + i * diff};
}

inline std::vector<double> uniform(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  std::vector<double> v(n);
  for (auto& x : v) x = d(gen);
  return v;
}

inline std::vector<std::int64_t> small_ints(std::size_t n, std::uint64_t seed, int bound = 8) {
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<std::int64_t> d(-bound, bound);
  std::vector<std::int64_t> v(n);
  for (auto& x : v) x = d(gen);
  return v;
}

// Field-operation count of the rank-one-plus-sparse WHT, from its
// recursion T(N) = 2^a T(N / 2^a) + body(N) rather than a closed form.
struct Count {
  std::uint64_t add = 0, div2 = 0, pow2 = 0;
};

inline Count nonrigid_count(int l, int arity, int body_adds, int k = 0) {
  if (l < arity) {
    const std::uint64_t n = std::uint64_t{1} << l;
    return {n * static_cast<std::uint64_t>(l), 0, k > 0 ? n : 0};
  }
  Count c;
  const int sub = l - arity;
  const int branches = 1 << arity;
  for (int b = 0; b < branches; ++b) {
    const Count s = nonrigid_count(sub, arity, body_adds, b == 0 ? k : k + 1);
    c.add += s.add;
    c.div2 += s.div2;
    c.pow2 += s.pow2;
  }
  const std::uint64_t groups = std::uint64_t{1} << sub;
  c.add += groups * body_adds;
  c.div2 += groups;
  return c;
}

}  // namespace oracle
