// AVX2 kernel variants.  Compiled only on x86-64 (see src/CMakeLists.txt);
// selected at runtime when the CPU reports AVX2 support.
//
// The vector reductions keep the exact four-lane structure of the scalar
// reference: vector lane j holds the partial for elements congruent to
// j mod 4, compensation follows the same branch arithmetic, and the final
// merge reuses detail::Lanes::merge, so results agree with the scalar
// backend bit for bit.  No FMA is used anywhere (contraction is disabled
// globally) for the same reason.

#include <immintrin.h>

#include <cmath>
#include <cstddef>

#include "boolfun/kernels.hpp"
#include "lanes.hpp"

namespace boolfun::kernels {
namespace {

const __m256d kAbsMask =
    _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));

struct VecLanes {
  __m256d sum = _mm256_setzero_pd();
  __m256d comp = _mm256_setzero_pd();

  // Neumaier step, identical branch arithmetic to detail::Lanes::add.
  inline void add(__m256d x) {
    __m256d t = _mm256_add_pd(sum, x);
    __m256d abs_s = _mm256_and_pd(sum, kAbsMask);
    __m256d abs_x = _mm256_and_pd(x, kAbsMask);
    __m256d ge = _mm256_cmp_pd(abs_s, abs_x, _CMP_GE_OQ);
    __m256d lost_a = _mm256_add_pd(_mm256_sub_pd(sum, t), x);  // (s - t) + x
    __m256d lost_b = _mm256_add_pd(_mm256_sub_pd(x, t), sum);  // (x - t) + s
    comp = _mm256_add_pd(comp, _mm256_blendv_pd(lost_b, lost_a, ge));
    sum = t;
  }

  detail::Lanes spill() const {
    detail::Lanes lanes;
    _mm256_storeu_pd(lanes.sum, sum);
    _mm256_storeu_pd(lanes.comp, comp);
    return lanes;
  }
};

void wht_forward_avx2(double* data, std::size_t len) {
  for (std::size_t h = 1; h < len; h <<= 1) {
    if (h < 4) {
      for (std::size_t base = 0; base < len; base += 2 * h) {
        for (std::size_t off = 0; off < h; ++off) {
          double u = data[base + off];
          double v = data[base + off + h];
          data[base + off] = u + v;
          data[base + off + h] = v - u;
        }
      }
    } else {
      for (std::size_t base = 0; base < len; base += 2 * h) {
        for (std::size_t off = 0; off < h; off += 4) {
          double* lo = data + base + off;
          double* hi = lo + h;
          __m256d u = _mm256_loadu_pd(lo);
          __m256d v = _mm256_loadu_pd(hi);
          _mm256_storeu_pd(lo, _mm256_add_pd(u, v));
          _mm256_storeu_pd(hi, _mm256_sub_pd(v, u));
        }
      }
    }
  }
}

void wht_inverse_avx2(double* data, std::size_t len) {
  for (std::size_t h = 1; h < len; h <<= 1) {
    if (h < 4) {
      for (std::size_t base = 0; base < len; base += 2 * h) {
        for (std::size_t off = 0; off < h; ++off) {
          double u = data[base + off];
          double v = data[base + off + h];
          data[base + off] = u - v;
          data[base + off + h] = u + v;
        }
      }
    } else {
      for (std::size_t base = 0; base < len; base += 2 * h) {
        for (std::size_t off = 0; off < h; off += 4) {
          double* lo = data + base + off;
          double* hi = lo + h;
          __m256d u = _mm256_loadu_pd(lo);
          __m256d v = _mm256_loadu_pd(hi);
          _mm256_storeu_pd(lo, _mm256_sub_pd(u, v));
          _mm256_storeu_pd(hi, _mm256_add_pd(u, v));
        }
      }
    }
  }
}

void diff_flip_avx2(const double* in, double* out, std::size_t len,
                    std::size_t mask) {
  if (mask < 4) {
    for (std::size_t base = 0; base < len; base += 2 * mask) {
      for (std::size_t off = 0; off < mask; ++off) {
        std::size_t i = base + off;
        std::size_t j = i + mask;
        double d = in[j] - in[i];
        out[i] = d;
        out[j] = -d;
      }
    }
    return;
  }
  const __m256d neg = _mm256_set1_pd(-0.0);
  for (std::size_t base = 0; base < len; base += 2 * mask) {
    for (std::size_t off = 0; off < mask; off += 4) {
      std::size_t i = base + off;
      std::size_t j = i + mask;
      __m256d lo = _mm256_loadu_pd(in + i);
      __m256d hi = _mm256_loadu_pd(in + j);
      __m256d d = _mm256_sub_pd(hi, lo);
      _mm256_storeu_pd(out + i, d);
      _mm256_storeu_pd(out + j, _mm256_xor_pd(d, neg));
    }
  }
}

void scale_avx2(double* data, std::size_t len, double factor) {
  const __m256d f = _mm256_set1_pd(factor);
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4)
    _mm256_storeu_pd(data + i, _mm256_mul_pd(_mm256_loadu_pd(data + i), f));
  for (; i < len; ++i) data[i] *= factor;
}

double sum_avx2(const double* data, std::size_t len) {
  VecLanes vec;
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4) vec.add(_mm256_loadu_pd(data + i));
  detail::Lanes acc = vec.spill();
  for (; i < len; ++i) acc.add(i & 3, data[i]);
  return acc.merge();
}

double dot_avx2(const double* a, const double* b, std::size_t len) {
  VecLanes vec;
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4)
    vec.add(_mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
  detail::Lanes acc = vec.spill();
  for (; i < len; ++i) acc.add(i & 3, a[i] * b[i]);
  return acc.merge();
}

double sum_abs_pow_avx2(const double* data, std::size_t len, double p) {
  if (p != 1.0 && p != 2.0 && p != 3.0 && p != 4.0) {
    // General exponents go through std::pow; reuse the scalar loop so both
    // backends share one code path.
    return scalar_ops().sum_abs_pow(data, len, p);
  }
  VecLanes vec;
  std::size_t i = 0;
  if (p == 1.0) {
    for (; i + 4 <= len; i += 4)
      vec.add(_mm256_and_pd(_mm256_loadu_pd(data + i), kAbsMask));
  } else if (p == 2.0) {
    for (; i + 4 <= len; i += 4) {
      __m256d x = _mm256_loadu_pd(data + i);
      vec.add(_mm256_mul_pd(x, x));
    }
  } else if (p == 3.0) {
    for (; i + 4 <= len; i += 4) {
      __m256d x = _mm256_loadu_pd(data + i);
      vec.add(_mm256_mul_pd(_mm256_mul_pd(x, x), _mm256_and_pd(x, kAbsMask)));
    }
  } else {
    for (; i + 4 <= len; i += 4) {
      __m256d x = _mm256_loadu_pd(data + i);
      __m256d sq = _mm256_mul_pd(x, x);
      vec.add(_mm256_mul_pd(sq, sq));
    }
  }
  detail::Lanes acc = vec.spill();
  for (; i < len; ++i) {
    double x = data[i];
    double term;
    if (p == 1.0)
      term = std::fabs(x);
    else if (p == 2.0)
      term = x * x;
    else if (p == 3.0)
      term = (x * x) * std::fabs(x);
    else {
      double sq = x * x;
      term = sq * sq;
    }
    acc.add(i & 3, term);
  }
  return acc.merge();
}

double sum_sq_dev_avx2(const double* data, std::size_t len, double mean) {
  const __m256d m = _mm256_set1_pd(mean);
  VecLanes vec;
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    __m256d d = _mm256_sub_pd(_mm256_loadu_pd(data + i), m);
    vec.add(_mm256_mul_pd(d, d));
  }
  detail::Lanes acc = vec.spill();
  for (; i < len; ++i) {
    double d = data[i] - mean;
    acc.add(i & 3, d * d);
  }
  return acc.merge();
}

double max_abs_diff_avx2(const double* a, const double* b, std::size_t len) {
  __m256d vmax = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
    vmax = _mm256_max_pd(vmax, _mm256_and_pd(d, kAbsMask));
  }
  double lanes[4];
  _mm256_storeu_pd(lanes, vmax);
  double m = std::max(std::max(lanes[0], lanes[1]),
                      std::max(lanes[2], lanes[3]));
  for (; i < len; ++i) m = std::max(m, std::fabs(a[i] - b[i]));
  return m;
}

}  // namespace

const Ops& avx2_ops() {
  static const Ops ops{wht_forward_avx2, wht_inverse_avx2, diff_flip_avx2,
                       scale_avx2,       sum_avx2,         dot_avx2,
                       sum_abs_pow_avx2, sum_sq_dev_avx2,  max_abs_diff_avx2};
  return ops;
}

}  // namespace boolfun::kernels
