#include "whufft/hprime.hpp"

#include <array>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace whufft {

namespace {

constexpr int kMaxLog = 62;

using FTable = std::array<std::array<std::uint64_t, kMaxLog + 1>, kMaxLog + 1>;

const FTable& f_table() {
  static const FTable table = [] {
    FTable t{};
    t[0][0] = 1;
    t[1][0] = 2;
    for (int a = 2; a <= kMaxLog; ++a) {
      for (int b = 0; b <= a; ++b) {
        t[a][b] = t[a - 1][b] + (b >= 1 ? t[a - 2][b - 1] : 0);
      }
    }
    return t;
  }();
  return table;
}

PartitionSpec build_partition(std::size_t n) {
  PartitionSpec out;
  out.n = n;
  if (n == 1) {
    out.subsets = {{0}};
    return out;
  }
  if (n == 2) {
    out.subsets = {{0}, {1}};
    return out;
  }
  const PartitionSpec& half = partition(n / 2);
  const PartitionSpec& quarter = partition(n / 4);
  out.subsets = half.subsets;
  const auto h = static_cast<std::uint32_t>(n / 2);
  const auto tq = static_cast<std::uint32_t>(3 * n / 4);
  for (const auto& s : quarter.subsets) {
    std::vector<std::uint32_t> merged;
    merged.reserve(2 * s.size());
    for (auto i : s) {
      merged.push_back(i + h);
      merged.push_back(i + tq);
    }
    out.subsets.push_back(std::move(merged));
  }
  return out;
}

}  // namespace

const PartitionSpec& partition(std::size_t n) {
  const int l = require_pow2(n, "partition");
  if (l > 31) throw std::invalid_argument("partition: length exceeds 2^31");
  static std::mutex mu;
  static std::map<std::size_t, std::unique_ptr<const PartitionSpec>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return *it->second;
  }
  // Built outside the lock: construction recurses into partition().
  auto built = std::make_unique<const PartitionSpec>(build_partition(n));
  std::lock_guard lock(mu);
  auto [it, inserted] = cache.try_emplace(n, std::move(built));
  return *it->second;
}

std::uint64_t f_count_log(int l1, int l2) {
  if (l1 < 0 || l1 > kMaxLog) throw std::out_of_range("f_count: size out of range");
  if (l2 < 0 || l2 > l1) return 0;
  return f_table()[l1][l2];
}

std::uint64_t f_count(std::uint64_t n1, std::uint64_t n2) {
  const int l1 = require_pow2(n1, "f_count");
  if (n2 == 0) return 0;
  const int l2 = require_pow2(n2, "f_count");
  return f_count_log(l1, l2);
}

std::vector<std::int8_t> hprime_matrix(std::size_t n) {
  require_pow2(n, "hprime_matrix");
  if (n > 1024) throw std::invalid_argument("hprime_matrix: n exceeds 1024");
  std::vector<std::int8_t> m(n * n, 0);
  // Writes sign * H'_size into the block at (r0, c0).
  auto fill = [&](auto&& self, std::size_t size, std::size_t r0, std::size_t c0,
                  std::int8_t sign) -> void {
    if (size <= 2) {
      for (std::size_t i = 0; i < size; ++i) m[(r0 + i) * n + c0 + i] = sign;
      return;
    }
    const std::size_t h = size / 2;
    const std::size_t q = size / 4;
    self(self, h, r0, c0, sign);
    self(self, q, r0 + h, c0 + h, sign);
    self(self, q, r0 + h, c0 + h + q, sign);
    self(self, q, r0 + h + q, c0 + h, sign);
    self(self, q, r0 + h + q, c0 + h + q, static_cast<std::int8_t>(-sign));
  };
  fill(fill, n, 0, 0, 1);
  return m;
}

LemmaReport lemma_checks(int log2n_max) {
  if (log2n_max < 0 || log2n_max > 40) {
    throw std::invalid_argument("lemma_checks: log2n_max must be in [0, 40]");
  }
  LemmaReport report;
  for (int l = 0; l <= log2n_max; ++l) {
    const std::uint64_t n = std::uint64_t{1} << l;
    LemmaRow row;
    row.log2n = l;
    for (int j = 0; j <= l; ++j) {
      const std::uint64_t f = f_count_log(l, j);
      const std::uint64_t size = std::uint64_t{1} << j;
      row.block_count += f;
      row.block_mass += f * size;
      row.weighted_depth += static_cast<std::int64_t>(f * size) * j;
      row.mod3_mass += f * size * static_cast<std::uint64_t>(j % 3);
    }
    const auto sn = static_cast<std::int64_t>(n);
    const std::int64_t sign = (l % 2 == 0) ? 1 : -1;
    row.weighted_depth_x9 = 3 * sn * l + 2 * sign - 2 * sn;
    row.mass_ok = row.block_mass == n;
    row.depth_ok = 9 * row.weighted_depth == row.weighted_depth_x9;
    const double excess = (static_cast<double>(row.mod3_mass) - static_cast<double>(n)) / 12.0;
    row.mod3_excess_coeff = excess / std::pow(static_cast<double>(n), 0.8);
    report.identities_hold = report.identities_hold && row.mass_ok && row.depth_ok;
    report.max_coeff = std::max(report.max_coeff, row.mod3_excess_coeff);
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace whufft
