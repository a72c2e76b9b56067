#include <cstdlib>
#include <string_view>

#include "cfl/kernels.hpp"

namespace cfl::kernels {

#if defined(CFL_HAVE_AVX2)
const KernelTable& avx2_table();
#endif

const KernelTable* avx2() {
#if defined(CFL_HAVE_AVX2)
  static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
  return supported ? &avx2_table() : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active() {
  static const KernelTable& chosen = []() -> const KernelTable& {
    const char* pin = std::getenv("CFL_KERNELS");
    if (pin && std::string_view(pin) == "scalar") return scalar();
    if (auto* t = avx2()) return *t;
    return scalar();
  }();
  return chosen;
}

}  // namespace cfl::kernels
