#pragma once
// Shared accumulation structure for the reduction kernels.
//
// Lane j accumulates the elements whose index is congruent to j mod 4, each
// lane carrying a Neumaier compensation term; the merge order is fixed.  The
// scalar and AVX2 kernels both follow exactly this scheme, which makes their
// results bitwise identical and keeps the summation error at a few ulp even
// for 2^24-entry tables.

#include <cmath>
#include <cstddef>

namespace boolfun::kernels::detail {

struct Lanes {
  double sum[4]{0.0, 0.0, 0.0, 0.0};
  double comp[4]{0.0, 0.0, 0.0, 0.0};

  void add(std::size_t lane, double x) {
    double s = sum[lane];
    double t = s + x;
    if (std::fabs(s) >= std::fabs(x))
      comp[lane] += (s - t) + x;
    else
      comp[lane] += (x - t) + s;
    sum[lane] = t;
  }

  double merge() const {
    double s = (sum[0] + sum[1]) + (sum[2] + sum[3]);
    double c = (comp[0] + comp[1]) + (comp[2] + comp[3]);
    return s + c;
  }
};

}  // namespace boolfun::kernels::detail
