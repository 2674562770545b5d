// Scalar reference kernels.  These define the semantics the AVX2 variants
// must reproduce exactly; the reductions therefore use the fixed four-lane
// tree from lanes.hpp rather than a single running accumulator.

#include <cmath>
#include <cstddef>

#include "boolfun/kernels.hpp"
#include "lanes.hpp"

namespace boolfun::kernels {
namespace {

void wht_forward_scalar(double* data, std::size_t len) {
  for (std::size_t h = 1; h < len; h <<= 1) {
    for (std::size_t base = 0; base < len; base += 2 * h) {
      for (std::size_t off = 0; off < h; ++off) {
        double u = data[base + off];
        double v = data[base + off + h];
        data[base + off] = u + v;
        data[base + off + h] = v - u;
      }
    }
  }
}

void wht_inverse_scalar(double* data, std::size_t len) {
  for (std::size_t h = 1; h < len; h <<= 1) {
    for (std::size_t base = 0; base < len; base += 2 * h) {
      for (std::size_t off = 0; off < h; ++off) {
        double u = data[base + off];
        double v = data[base + off + h];
        data[base + off] = u - v;
        data[base + off + h] = u + v;
      }
    }
  }
}

void diff_flip_scalar(const double* in, double* out, std::size_t len,
                      std::size_t mask) {
  for (std::size_t base = 0; base < len; base += 2 * mask) {
    for (std::size_t off = 0; off < mask; ++off) {
      std::size_t i = base + off;
      std::size_t j = i + mask;
      double d = in[j] - in[i];
      out[i] = d;
      out[j] = -d;
    }
  }
}

void scale_scalar(double* data, std::size_t len, double factor) {
  for (std::size_t i = 0; i < len; ++i) data[i] *= factor;
}

double sum_scalar(const double* data, std::size_t len) {
  detail::Lanes acc;
  for (std::size_t i = 0; i < len; ++i) acc.add(i & 3, data[i]);
  return acc.merge();
}

double dot_scalar(const double* a, const double* b, std::size_t len) {
  detail::Lanes acc;
  for (std::size_t i = 0; i < len; ++i) acc.add(i & 3, a[i] * b[i]);
  return acc.merge();
}

double sum_abs_pow_scalar(const double* data, std::size_t len, double p) {
  detail::Lanes acc;
  if (p == 1.0) {
    for (std::size_t i = 0; i < len; ++i) acc.add(i & 3, std::fabs(data[i]));
  } else if (p == 2.0) {
    for (std::size_t i = 0; i < len; ++i) acc.add(i & 3, data[i] * data[i]);
  } else if (p == 3.0) {
    for (std::size_t i = 0; i < len; ++i) {
      double x = data[i];
      acc.add(i & 3, (x * x) * std::fabs(x));
    }
  } else if (p == 4.0) {
    for (std::size_t i = 0; i < len; ++i) {
      double sq = data[i] * data[i];
      acc.add(i & 3, sq * sq);
    }
  } else {
    for (std::size_t i = 0; i < len; ++i)
      acc.add(i & 3, std::pow(std::fabs(data[i]), p));
  }
  return acc.merge();
}

double sum_sq_dev_scalar(const double* data, std::size_t len, double mean) {
  detail::Lanes acc;
  for (std::size_t i = 0; i < len; ++i) {
    double d = data[i] - mean;
    acc.add(i & 3, d * d);
  }
  return acc.merge();
}

double max_abs_diff_scalar(const double* a, const double* b, std::size_t len) {
  double m = 0.0;
  for (std::size_t i = 0; i < len; ++i)
    m = std::max(m, std::fabs(a[i] - b[i]));
  return m;
}

}  // namespace

const Ops& scalar_ops() {
  static const Ops ops{
      wht_forward_scalar, wht_inverse_scalar, diff_flip_scalar, scale_scalar,
      sum_scalar,         dot_scalar,         sum_abs_pow_scalar,
      sum_sq_dev_scalar,  max_abs_diff_scalar};
  return ops;
}

}  // namespace boolfun::kernels
