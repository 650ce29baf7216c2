#include "whufft/fft.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace whufft {

namespace {

std::vector<std::uint32_t> build_order(std::size_t n) {
  if (n <= 2) {
    std::vector<std::uint32_t> id(n);
    for (std::size_t i = 0; i < n; ++i) id[i] = static_cast<std::uint32_t>(i);
    return id;
  }
  const auto& half = split_radix_order(n / 2);
  const auto& quarter = split_radix_order(n / 4);
  const auto mask = static_cast<std::uint32_t>(n - 1);
  std::vector<std::uint32_t> out;
  out.reserve(n);
  for (auto i : half) out.push_back(2 * i);
  for (auto i : quarter) out.push_back(4 * i + 1);
  for (auto i : quarter) out.push_back((4 * i - 1) & mask);
  return out;
}

}  // namespace

const std::vector<std::uint32_t>& split_radix_order(std::size_t n) {
  const int l = require_pow2(n, "split_radix_order");
  if (l > 31) throw std::invalid_argument("split_radix_order: length exceeds 2^31");
  static std::mutex mu;
  static std::map<std::size_t, std::unique_ptr<const std::vector<std::uint32_t>>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return *it->second;
  }
  auto built = std::make_unique<const std::vector<std::uint32_t>>(build_order(n));
  std::lock_guard lock(mu);
  auto [it, inserted] = cache.try_emplace(n, std::move(built));
  return *it->second;
}

}  // namespace whufft
