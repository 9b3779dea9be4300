// AVX2 variants of the kernels in kernels_scalar.cpp. This translation unit
// is compiled with -mavx2 and must only be entered after a runtime CPU check.

#include <immintrin.h>

#include <bit>

#include "tagix/simd/kernels.hpp"

namespace tagix::simd {
namespace {

std::size_t count_byte_avx2(const std::uint8_t* data, std::size_t len, std::uint8_t c) {
  const __m256i needle = _mm256_set1_epi8(static_cast<char>(c));
  std::size_t count = 0;
  std::size_t i = 0;
  for (; i + 32 <= len; i += 32) {
    const __m256i chunk = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(data + i));
    const auto mask = static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(chunk, needle)));
    count += static_cast<std::size_t>(std::popcount(mask));
  }
  for (; i < len; ++i) count += data[i] == c;
  return count;
}

std::size_t common_prefix_avx2(const std::uint8_t* a, const std::uint8_t* b, std::size_t len) {
  std::size_t i = 0;
  for (; i + 32 <= len; i += 32) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    const auto eq = static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(va, vb)));
    if (eq != 0xFFFFFFFFu) return i + static_cast<std::size_t>(std::countr_one(eq));
  }
  while (i < len && a[i] == b[i]) ++i;
  return i;
}

std::size_t count_changes_avx2(const std::int64_t* v, std::size_t len) {
  if (len < 2) return 0;
  std::size_t changes = 0;
  std::size_t i = 1;
  for (; i + 4 <= len; i += 4) {
    const __m256i cur = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + i));
    const __m256i prev = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + i - 1));
    const auto eq = static_cast<unsigned>(_mm256_movemask_pd(_mm256_castsi256_pd(_mm256_cmpeq_epi64(cur, prev))));
    changes += static_cast<std::size_t>(std::popcount(~eq & 0xFu));
  }
  for (; i < len; ++i) changes += v[i] != v[i - 1];
  return changes;
}

void adjacent_diff_avx2(const std::int64_t* v, std::size_t len, std::int64_t* out) {
  if (len < 2) return;
  const std::size_t m = len - 1;
  std::size_t i = 0;
  for (; i + 4 <= m; i += 4) {
    const __m256i next = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + i + 1));
    const __m256i cur = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), _mm256_sub_epi64(next, cur));
  }
  for (; i < m; ++i) {
    out[i] = static_cast<std::int64_t>(static_cast<std::uint64_t>(v[i + 1]) -
                                       static_cast<std::uint64_t>(v[i]));
  }
}

std::uint64_t sum_abs_diff_avx2(const std::int64_t* v, std::size_t len) {
  if (len < 2) return 0;
  __m256i acc = _mm256_setzero_si256();
  const __m256i zero = _mm256_setzero_si256();
  std::size_t i = 1;
  for (; i + 4 <= len; i += 4) {
    const __m256i cur = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + i));
    const __m256i prev = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + i - 1));
    const __m256i d = _mm256_sub_epi64(cur, prev);
    const __m256i sign = _mm256_cmpgt_epi64(zero, d);
    acc = _mm256_add_epi64(acc, _mm256_sub_epi64(_mm256_xor_si256(d, sign), sign));
  }
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::uint64_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; i < len; ++i) {
    const auto d = static_cast<std::int64_t>(static_cast<std::uint64_t>(v[i]) -
                                             static_cast<std::uint64_t>(v[i - 1]));
    total += d < 0 ? 0 - static_cast<std::uint64_t>(d) : static_cast<std::uint64_t>(d);
  }
  return total;
}

}  // namespace

const KernelTable& avx2_kernels() {
  static const KernelTable table{count_byte_avx2, common_prefix_avx2, count_changes_avx2,
                                 adjacent_diff_avx2, sum_abs_diff_avx2};
  return table;
}

}  // namespace tagix::simd
