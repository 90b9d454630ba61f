#include <cstdlib>
#include <string>

#include "gradus/errors.hpp"
#include "gradus/kernels.hpp"

namespace gradus::kernels {

bool available(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#if defined(GRADUS_HAVE_AVX2)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
    case Isa::Neon:
#if defined(GRADUS_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

const KernelTable& table(Isa isa) {
  if (!available(isa))
    throw Error(ErrorCode::InvalidArgument, "kernel variant " + std::string(isa_name(isa)) + " unavailable");
  switch (isa) {
#if defined(GRADUS_HAVE_AVX2)
    case Isa::Avx2:
      return detail::avx2_table;
#endif
#if defined(GRADUS_HAVE_NEON)
    case Isa::Neon:
      return detail::neon_table;
#endif
    default:
      return detail::scalar_table;
  }
}

namespace {

const KernelTable& select() {
  const char* env = std::getenv("GRADUS_KERNELS");
  if (env && std::string(env) == "scalar") return detail::scalar_table;
  if (available(Isa::Avx2)) return table(Isa::Avx2);
  if (available(Isa::Neon)) return table(Isa::Neon);
  return detail::scalar_table;
}

}  // namespace

const KernelTable& active() {
  static const KernelTable& chosen = select();
  return chosen;
}

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return "scalar";
    case Isa::Avx2:
      return "avx2";
    case Isa::Neon:
      return "neon";
  }
  return "unknown";
}

}  // namespace gradus::kernels
