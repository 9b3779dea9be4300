#include <doctest.h>

#include <limits>
#include <random>
#include <vector>

#include "tagix/simd/kernels.hpp"

using namespace tagix::simd;

namespace {

std::vector<const KernelTable*> variants() {
  std::vector<const KernelTable*> v{&kernels_for(Isa::kScalar)};
  if (isa_available(Isa::kAvx2)) v.push_back(&kernels_for(Isa::kAvx2));
  return v;
}

std::vector<std::int64_t> random_values(std::mt19937_64& rng, std::size_t len) {
  std::vector<std::int64_t> v(len);
  const int mode = static_cast<int>(rng() % 3);
  for (auto& x : v) {
    switch (mode) {
      case 0: x = static_cast<std::int64_t>(rng() % 3); break;          // long runs
      case 1: x = static_cast<std::int64_t>(rng() % 2001) - 1000; break;  // small signed
      default: x = static_cast<std::int64_t>(rng()); break;             // full range, wraps
    }
  }
  return v;
}

}  // namespace

TEST_CASE("scalar kernels on fixed inputs") {
  const auto& k = scalar_kernels();
  const std::uint8_t bytes[] = {'A', 'T', 'T', 'A', 'C'};
  CHECK(k.count_byte(bytes, 5, 'T') == 2);
  CHECK(k.count_byte(bytes, 0, 'T') == 0);
  const std::uint8_t other[] = {'A', 'T', 'G', 'A', 'C'};
  CHECK(k.common_prefix(bytes, other, 5) == 2);
  CHECK(k.common_prefix(bytes, bytes, 5) == 5);
  const std::int64_t v[] = {0, 0, 1, 4, 9, 0};
  CHECK(k.count_changes(v, 6) == 4);
  std::int64_t out[5];
  k.adjacent_diff(v, 6, out);
  CHECK(std::vector<std::int64_t>(out, out + 5) == std::vector<std::int64_t>{0, 1, 3, 5, -9});
  CHECK(k.sum_abs_diff(v, 6) == 18);
  CHECK(k.sum_abs_diff(v, 1) == 0);
}

TEST_CASE("active ISA is one of the available ones") {
  CHECK(isa_available(active_isa()));
  CHECK_FALSE(isa_name(active_isa()).empty());
}

TEST_CASE("all kernel variants agree with the scalar reference") {
  std::mt19937_64 rng(7);
  const auto& ref = scalar_kernels();
  for (const KernelTable* k : variants()) {
    for (int trial = 0; trial < 400; ++trial) {
      const std::size_t len = trial < 100 ? static_cast<std::size_t>(trial) : rng() % 2000;
      std::vector<std::uint8_t> a(len), b(len);
      for (auto& c : a) c = static_cast<std::uint8_t>("ACGT$#"[rng() % 6]);
      b = a;
      if (len && rng() % 2) b[rng() % len] ^= 1;
      const auto c = static_cast<std::uint8_t>("ACGT$#"[rng() % 6]);
      CHECK(k->count_byte(a.data(), len, c) == ref.count_byte(a.data(), len, c));
      CHECK(k->common_prefix(a.data(), b.data(), len) == ref.common_prefix(a.data(), b.data(), len));

      const auto v = random_values(rng, len);
      CHECK(k->count_changes(v.data(), len) == ref.count_changes(v.data(), len));
      CHECK(k->sum_abs_diff(v.data(), len) == ref.sum_abs_diff(v.data(), len));
      std::vector<std::int64_t> d1(len ? len - 1 : 0), d2(len ? len - 1 : 0);
      k->adjacent_diff(v.data(), len, d1.data());
      ref.adjacent_diff(v.data(), len, d2.data());
      CHECK(d1 == d2);
    }
  }
}

TEST_CASE("extreme values wrap identically") {
  const std::int64_t lo = std::numeric_limits<std::int64_t>::min();
  const std::int64_t hi = std::numeric_limits<std::int64_t>::max();
  const std::vector<std::int64_t> v{lo, hi, lo, 0, hi, hi, lo, lo, 1};
  for (const KernelTable* k : variants()) {
    CHECK(k->sum_abs_diff(v.data(), v.size()) == scalar_kernels().sum_abs_diff(v.data(), v.size()));
    CHECK(k->count_changes(v.data(), v.size()) == 6);
  }
}
