#include "tagix/simd/kernels.hpp"

namespace tagix::simd {
namespace {

std::size_t count_byte_scalar(const std::uint8_t* data, std::size_t len, std::uint8_t c) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < len; ++i) count += data[i] == c;
  return count;
}

std::size_t common_prefix_scalar(const std::uint8_t* a, const std::uint8_t* b, std::size_t len) {
  std::size_t i = 0;
  while (i < len && a[i] == b[i]) ++i;
  return i;
}

std::size_t count_changes_scalar(const std::int64_t* v, std::size_t len) {
  std::size_t changes = 0;
  for (std::size_t i = 1; i < len; ++i) changes += v[i] != v[i - 1];
  return changes;
}

void adjacent_diff_scalar(const std::int64_t* v, std::size_t len, std::int64_t* out) {
  for (std::size_t i = 0; i + 1 < len; ++i) {
    out[i] = static_cast<std::int64_t>(static_cast<std::uint64_t>(v[i + 1]) -
                                       static_cast<std::uint64_t>(v[i]));
  }
}

std::uint64_t sum_abs_diff_scalar(const std::int64_t* v, std::size_t len) {
  std::uint64_t total = 0;
  for (std::size_t i = 1; i < len; ++i) {
    const auto d = static_cast<std::int64_t>(static_cast<std::uint64_t>(v[i]) -
                                             static_cast<std::uint64_t>(v[i - 1]));
    total += d < 0 ? 0 - static_cast<std::uint64_t>(d) : static_cast<std::uint64_t>(d);
  }
  return total;
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table{count_byte_scalar, common_prefix_scalar, count_changes_scalar,
                                 adjacent_diff_scalar, sum_abs_diff_scalar};
  return table;
}

}  // namespace tagix::simd
