#pragma once

// The H' family: the sign matrix collecting every pre-recursion addition of
// the conjugate-pair split-radix recursion,
//
//   H'_1 = [1],  H'_2 = I_2,
//   H'_N = diag(H'_{N/2}, [[H'_{N/4}, H'_{N/4}], [H'_{N/4}, -H'_{N/4}]]),
//
// which is a permuted direct sum of Walsh-Hadamard blocks.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "whufft/complex_pair.hpp"
#include "whufft/wht.hpp"

namespace whufft {

struct PartitionSpec {
  std::size_t n = 0;
  std::vector<std::vector<std::uint32_t>> subsets;
};

// Index partition of [n] into the WHT blocks of H'_n, in the deterministic
// order of the recursive construction. Cached per size; the reference stays
// valid for the lifetime of the program. Throws for non-power-of-two n.
const PartitionSpec& partition(std::size_t n);

// Number of size-n2 blocks in the partition of size n1. Both arguments are
// powers of two, or n2 == 0 (degenerate, yields 0).
std::uint64_t f_count(std::uint64_t n1, std::uint64_t n2);

// Same, indexed by exponents; j2 may be negative.
std::uint64_t f_count_log(int l1, int l2);

// Dense H'_n with entries in {-1, 0, 1}, row major. n <= 1024.
std::vector<std::int8_t> hprime_matrix(std::size_t n);

// Applies H' to x in place: each partition block is gathered, transformed by
// `algo` with scale exponent 0, and scattered back. Gathers are free.
template <class E>
void apply_hprime(std::span<E> x, WhtAlgo algo) {
  const PartitionSpec& p = partition(x.size());
  std::vector<E> buf;
  for (const auto& subset : p.subsets) {
    if (subset.size() == 1) continue;  // H_1 is the identity
    buf.clear();
    for (auto i : subset) buf.push_back(x[i]);
    apply_wht(algo, std::span<E>(buf));
    for (std::size_t j = 0; j < subset.size(); ++j) x[subset[j]] = buf[j];
  }
}

struct LemmaRow {
  int log2n = 0;
  std::uint64_t block_mass = 0;        // sum_j F(N,2^j) 2^j
  bool mass_ok = false;                // equals N
  std::int64_t weighted_depth = 0;     // sum_j F(N,2^j) 2^j j
  std::int64_t weighted_depth_x9 = 0;  // 9 * (N l / 3 + 2/9 (-1)^l - 2N/9)
  bool depth_ok = false;
  std::uint64_t mod3_mass = 0;         // sum_j F(N,2^j) 2^j (j mod 3)
  double mod3_excess_coeff = 0.0;      // (mod3_mass/12 - N/12) / N^0.8
  std::uint64_t block_count = 0;       // sum_j F(N,2^j)
};

struct LemmaReport {
  std::vector<LemmaRow> rows;
  bool identities_hold = true;
  double max_coeff = 0.0;  // max over rows of mod3_excess_coeff, floored at 0
};

// Evaluates the block-count identities for N = 2^0 .. 2^log2n_max exactly in
// integer arithmetic. log2n_max <= 40.
LemmaReport lemma_checks(int log2n_max);

}  // namespace whufft
