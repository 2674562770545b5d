#pragma once
// Arithmetic kernels for dense tables indexed by the discrete cube.
//
// Every kernel has a scalar reference implementation and, on x86-64, an AVX2
// variant selected at runtime.  All reductions use the same fixed four-lane
// compensated accumulation tree in both variants, so the two backends return
// bitwise-identical results; a build without AVX2 support simply keeps the
// scalar table active.

#include <cstddef>
#include <string_view>

namespace boolfun::kernels {

enum class Backend { scalar, avx2 };

struct Ops {
  // In-place Walsh butterfly passes over a length-2^n table, stride doubling
  // per stage.  forward: (u, v) -> (u + v, v - u).  inverse: (u, v) ->
  // (u - v, u + v).  Neither applies the 2^-n normalisation.
  void (*wht_forward)(double* data, std::size_t len);
  void (*wht_inverse)(double* data, std::size_t len);
  // out[x] = in[x ^ mask] - in[x], mask a single coordinate bit.
  void (*diff_flip)(const double* in, double* out, std::size_t len,
                    std::size_t mask);
  void (*scale)(double* data, std::size_t len, double factor);
  double (*sum)(const double* data, std::size_t len);
  double (*dot)(const double* a, const double* b, std::size_t len);
  // sum of |x|^p; p in {1,2,3,4} take exact fast paths, other exponents go
  // through std::pow (identical code in both backends).
  double (*sum_abs_pow)(const double* data, std::size_t len, double p);
  double (*sum_sq_dev)(const double* data, std::size_t len, double mean);
  double (*max_abs_diff)(const double* a, const double* b, std::size_t len);
};

const Ops& scalar_ops();
bool avx2_available();          // compiled in and supported by this CPU
const Ops& avx2_ops();          // valid only when avx2_available()

Backend active_backend();
void set_backend(Backend);      // throws std::runtime_error if unsupported
const Ops& active();
std::string_view backend_name(Backend);

}  // namespace boolfun::kernels
