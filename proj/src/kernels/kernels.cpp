// Backend selection.  The AVX2 table is used automatically when the binary
// was built with it and the CPU reports support; set_backend overrides the
// choice (tests use this to compare the two variants).

#include <stdexcept>

#include "boolfun/kernels.hpp"

namespace boolfun::kernels {

bool avx2_available() {
#if defined(BOOLFUN_HAVE_AVX2)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

#if !defined(BOOLFUN_HAVE_AVX2)
const Ops& avx2_ops() {
  throw std::runtime_error("AVX2 backend not compiled into this build");
}
#endif

namespace {
Backend& backend_slot() {
  static Backend b = avx2_available() ? Backend::avx2 : Backend::scalar;
  return b;
}
}  // namespace

Backend active_backend() { return backend_slot(); }

void set_backend(Backend b) {
  if (b == Backend::avx2 && !avx2_available())
    throw std::runtime_error("AVX2 backend unavailable on this machine");
  backend_slot() = b;
}

const Ops& active() {
  return backend_slot() == Backend::avx2 ? avx2_ops() : scalar_ops();
}

std::string_view backend_name(Backend b) {
  return b == Backend::avx2 ? "avx2" : "scalar";
}

}  // namespace boolfun::kernels
