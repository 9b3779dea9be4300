#include <cstdlib>
#include <stdexcept>
#include <string>

#include "tagix/simd/kernels.hpp"

namespace tagix::simd {

#if defined(TAGIX_HAVE_AVX2)
const KernelTable& avx2_kernels();
#endif

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return true;
    case Isa::kAvx2:
#if defined(TAGIX_HAVE_AVX2)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
      return false;
#endif
  }
  return false;
}

const KernelTable& kernels_for(Isa isa) {
  if (!isa_available(isa)) {
    throw std::invalid_argument("SIMD kernels not available: " + std::string(isa_name(isa)));
  }
#if defined(TAGIX_HAVE_AVX2)
  if (isa == Isa::kAvx2) return avx2_kernels();
#endif
  return scalar_kernels();
}

namespace {

Isa select_isa() {
  if (const char* forced = std::getenv("TAGIX_SIMD"); forced && std::string(forced) == "scalar") {
    return Isa::kScalar;
  }
  return isa_available(Isa::kAvx2) ? Isa::kAvx2 : Isa::kScalar;
}

}  // namespace

Isa active_isa() {
  static const Isa isa = select_isa();
  return isa;
}

const KernelTable& kernels() {
  static const KernelTable& table = kernels_for(active_isa());
  return table;
}

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return "scalar";
    case Isa::kAvx2:
      return "avx2";
  }
  return "unknown";
}

}  // namespace tagix::simd
