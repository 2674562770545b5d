#pragma once
// The discrete cube {-1,+1}^n under the uniform measure, with functions
// stored as dense tables indexed by 0..2^n-1.  Bit i-1 of the index gives
// the sign of coordinate x_i (bit set means x_i = +1); coordinate indices
// are 1-based throughout the public interface.
//
// Boolean functions take values in {0,1} and are bit-packed (64 points per
// word), which keeps n = 24 tables at 2 MiB and lets the influence routines
// run on whole words.  Real-valued functions are plain double tables routed
// through the runtime-dispatched kernels.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "boolfun/errors.hpp"

namespace boolfun {

inline constexpr int kMaxDimension = 24;

struct CubePoint {
  std::uint32_t index = 0;
  friend bool operator==(CubePoint, CubePoint) = default;
};

// tau_i: flip coordinate i.  Throws std::out_of_range unless 1 <= i <= n.
CubePoint flip(CubePoint x, int i, int n);

class RealCubeFunction;

class BooleanFunction {
 public:
  BooleanFunction() = default;
  explicit BooleanFunction(int n);  // all-zero table
  // Low n convenience: table bits taken from the low 2^n bits of `bits`.
  static BooleanFunction from_bits(int n, std::uint64_t bits);

  int n() const { return n_; }
  std::uint64_t size() const { return std::uint64_t{1} << n_; }

  bool value(std::uint64_t idx) const {
    return (words_[idx >> 6] >> (idx & 63)) & 1;
  }
  bool value(CubePoint x) const { return value(std::uint64_t{x.index}); }
  void set(std::uint64_t idx, bool v) {
    std::uint64_t bit = std::uint64_t{1} << (idx & 63);
    if (v)
      words_[idx >> 6] |= bit;
    else
      words_[idx >> 6] &= ~bit;
  }

  std::uint64_t ones_count() const;
  bool is_constant() const;
  RealCubeFunction to_real() const;  // {0,1}-valued double table

  const std::vector<std::uint64_t>& words() const { return words_; }
  friend bool operator==(const BooleanFunction&,
                         const BooleanFunction&) = default;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

class RealCubeFunction {
 public:
  RealCubeFunction() = default;
  explicit RealCubeFunction(int n);
  RealCubeFunction(int n, std::vector<double> values);

  int n() const { return n_; }
  std::uint64_t size() const { return std::uint64_t{1} << n_; }

  double operator[](std::uint64_t idx) const { return values_[idx]; }
  double& operator[](std::uint64_t idx) { return values_[idx]; }
  double value(CubePoint x) const { return values_[x.index]; }

  const double* data() const { return values_.data(); }
  double* data() { return values_.data(); }
  const std::vector<double>& values() const { return values_; }

 private:
  int n_ = 0;
  std::vector<double> values_;
};

// D_i f = f o tau_i - f.  D_ij = D_i (D_j f); the composition convention
// makes the diagonal D_ii = -2 D_i.  Coordinates are 1-based; out-of-range
// indices throw std::out_of_range.
RealCubeFunction discrete_derivative(const RealCubeFunction& f, int i);
RealCubeFunction second_derivative(const RealCubeFunction& f, int i, int j);

double mean(const RealCubeFunction& f);
double variance(const RealCubeFunction& f);
// (E |f|^p)^(1/p) under the uniform measure; p < 1 throws std::domain_error.
double lp_norm(const RealCubeFunction& f, double p);
double lp_norm_pow(const RealCubeFunction& f, double p);  // E |f|^p

// I_i(f) = P[f(x) != f(tau_i x)] = ||D_i f||_1.
double influence(const BooleanFunction& f, int i);
// I_(i,j)(f) = ||D_ij f||_1 / 2; the diagonal i = j returns I_i.
double pair_influence(const BooleanFunction& f, int i, int j);

struct InfluenceProfile {
  int n = 0;
  std::vector<double> first;  // first[i-1] = I_i
  std::vector<double> pair;   // row-major n x n, pair[(i-1)*n + (j-1)]

  double first_of(int i) const { return first[i - 1]; }
  double pair_of(int i, int j) const { return pair[(i - 1) * n + (j - 1)]; }
  double max_first() const;
  double max_off_diagonal() const;  // 0 when n < 2
};

InfluenceProfile influence_profile(const BooleanFunction& f);

// Text formats.  Truth tables: a header line "n=<k>" followed by 2^k
// characters of {0,1} (whitespace between characters is ignored).  Real
// tables: the same header followed by 2^k whitespace-separated reals.
BooleanFunction read_truth_table(std::istream& in);
BooleanFunction read_truth_table_file(const std::string& path);
void write_truth_table(std::ostream& out, const BooleanFunction& f);
RealCubeFunction read_real_table(std::istream& in);
RealCubeFunction read_real_table_file(const std::string& path);
void write_real_table(std::ostream& out, const RealCubeFunction& f);

}  // namespace boolfun
