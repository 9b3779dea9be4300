#pragma once
// Data-parallel inner loops used by the index and tag-array code.
//
// Every kernel has a portable scalar reference implementation. An AVX2
// variant is compiled into a separate translation unit and selected at
// runtime when the CPU supports it. Both must produce identical results;
// tests/test_simd.cpp checks this on random inputs.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace tagix::simd {

enum class Isa { kScalar, kAvx2 };

struct KernelTable {
  // Number of bytes in `data` equal to `c`.
  std::size_t (*count_byte)(const std::uint8_t* data, std::size_t len, std::uint8_t c);
  // Length of the common prefix of a[0..len) and b[0..len).
  std::size_t (*common_prefix)(const std::uint8_t* a, const std::uint8_t* b, std::size_t len);
  // Number of i in [1, len) with v[i] != v[i-1].
  std::size_t (*count_changes)(const std::int64_t* v, std::size_t len);
  // out[i] = v[i+1] - v[i] for i in [0, len-1). Wrapping arithmetic.
  void (*adjacent_diff)(const std::int64_t* v, std::size_t len, std::int64_t* out);
  // Sum over i in [1, len) of |v[i] - v[i-1]|, as unsigned wrapping sum.
  std::uint64_t (*sum_abs_diff)(const std::int64_t* v, std::size_t len);
};

const KernelTable& scalar_kernels();

// True when the running CPU can execute `isa` and it was compiled in.
bool isa_available(Isa isa);

// Kernel table in use. Chosen once: AVX2 if available, unless the
// TAGIX_SIMD environment variable is set to "scalar".
const KernelTable& kernels();
Isa active_isa();
std::string_view isa_name(Isa isa);

// Table for a specific ISA; throws std::invalid_argument if unavailable.
const KernelTable& kernels_for(Isa isa);

inline std::size_t count_byte(std::span<const std::uint8_t> data, std::uint8_t c) {
  return kernels().count_byte(data.data(), data.size(), c);
}

inline std::size_t common_prefix(std::string_view a, std::string_view b) {
  const std::size_t len = a.size() < b.size() ? a.size() : b.size();
  return kernels().common_prefix(reinterpret_cast<const std::uint8_t*>(a.data()),
                                 reinterpret_cast<const std::uint8_t*>(b.data()), len);
}

}  // namespace tagix::simd
