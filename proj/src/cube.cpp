#include "boolfun/cube.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "boolfun/kernels.hpp"

namespace boolfun {
namespace {

void check_dimension(int n) {
  if (n < 1) throw std::invalid_argument("dimension must be at least 1");
  if (n > kMaxDimension)
    throw capacity_error("dimension " + std::to_string(n) +
                         " exceeds the supported maximum " +
                         std::to_string(kMaxDimension));
}

void check_coordinate(int i, int n) {
  if (i < 1 || i > n)
    throw std::out_of_range("coordinate index " + std::to_string(i) +
                            " outside 1.." + std::to_string(n));
}

std::uint64_t word_count(int n) {
  return n >= 6 ? (std::uint64_t{1} << (n - 6)) : 1;
}

// Bit pattern selecting positions p with (p & s) == 0, for s = 1 << b, b < 6.
constexpr std::uint64_t kLowPattern[6] = {
    0x5555555555555555ULL, 0x3333333333333333ULL, 0x0f0f0f0f0f0f0f0fULL,
    0x00ff00ff00ff00ffULL, 0x0000ffff0000ffffULL, 0x00000000ffffffffULL};

// Table of f o tau_i as packed words.
std::vector<std::uint64_t> flipped_words(const std::vector<std::uint64_t>& w,
                                         int n, int i) {
  int b = i - 1;
  std::vector<std::uint64_t> out(w.size());
  if (b < 6) {
    int s = 1 << b;
    std::uint64_t p = kLowPattern[b];
    for (std::size_t k = 0; k < w.size(); ++k)
      out[k] = ((w[k] & p) << s) | ((w[k] >> s) & p);
  } else {
    std::size_t d = std::size_t{1} << (b - 6);
    for (std::size_t k = 0; k < w.size(); ++k) out[k] = w[k ^ d];
  }
  (void)n;
  return out;
}

}  // namespace

CubePoint flip(CubePoint x, int i, int n) {
  check_dimension(n);
  check_coordinate(i, n);
  if (x.index >> n)
    throw std::out_of_range("cube point index outside the n-cube");
  return CubePoint{x.index ^ (std::uint32_t{1} << (i - 1))};
}

BooleanFunction::BooleanFunction(int n) : n_(n) {
  check_dimension(n);
  words_.assign(word_count(n), 0);
}

BooleanFunction BooleanFunction::from_bits(int n, std::uint64_t bits) {
  check_dimension(n);
  if (n > 6)
    throw std::invalid_argument("from_bits supports n <= 6");
  BooleanFunction f(n);
  std::uint64_t len = f.size();
  f.words_[0] = len == 64 ? bits : (bits & ((std::uint64_t{1} << len) - 1));
  return f;
}

std::uint64_t BooleanFunction::ones_count() const {
  std::uint64_t c = 0;
  for (std::uint64_t w : words_) c += std::popcount(w);
  return c;
}

bool BooleanFunction::is_constant() const {
  std::uint64_t ones = ones_count();
  return ones == 0 || ones == size();
}

RealCubeFunction BooleanFunction::to_real() const {
  RealCubeFunction g(n_);
  for (std::uint64_t x = 0; x < size(); ++x) g[x] = value(x) ? 1.0 : 0.0;
  return g;
}

RealCubeFunction::RealCubeFunction(int n) : n_(n) {
  check_dimension(n);
  values_.assign(std::uint64_t{1} << n, 0.0);
}

RealCubeFunction::RealCubeFunction(int n, std::vector<double> values)
    : n_(n), values_(std::move(values)) {
  check_dimension(n);
  if (values_.size() != (std::uint64_t{1} << n))
    throw std::invalid_argument("table length does not match 2^n");
}

RealCubeFunction discrete_derivative(const RealCubeFunction& f, int i) {
  check_coordinate(i, f.n());
  RealCubeFunction out(f.n());
  kernels::active().diff_flip(f.data(), out.data(), f.size(),
                              std::size_t{1} << (i - 1));
  return out;
}

RealCubeFunction second_derivative(const RealCubeFunction& f, int i, int j) {
  check_coordinate(i, f.n());
  check_coordinate(j, f.n());
  RealCubeFunction inner = discrete_derivative(f, j);
  return discrete_derivative(inner, i);
}

double mean(const RealCubeFunction& f) {
  return kernels::active().sum(f.data(), f.size()) /
         static_cast<double>(f.size());
}

double variance(const RealCubeFunction& f) {
  double m = mean(f);
  return kernels::active().sum_sq_dev(f.data(), f.size(), m) /
         static_cast<double>(f.size());
}

double lp_norm_pow(const RealCubeFunction& f, double p) {
  if (p < 1.0) throw std::domain_error("lp_norm requires p >= 1");
  return kernels::active().sum_abs_pow(f.data(), f.size(), p) /
         static_cast<double>(f.size());
}

double lp_norm(const RealCubeFunction& f, double p) {
  return std::pow(lp_norm_pow(f, p), 1.0 / p);
}

double influence(const BooleanFunction& f, int i) {
  check_coordinate(i, f.n());
  std::vector<std::uint64_t> flipped = flipped_words(f.words(), f.n(), i);
  std::uint64_t diff = 0;
  for (std::size_t k = 0; k < flipped.size(); ++k)
    diff += std::popcount(f.words()[k] ^ flipped[k]);
  return static_cast<double>(diff) / static_cast<double>(f.size());
}

double pair_influence(const BooleanFunction& f, int i, int j) {
  check_coordinate(i, f.n());
  check_coordinate(j, f.n());
  if (i == j) return influence(f, i);
  // D_ij f takes values in {-2,...,2}; per point,
  //   |D_ij f| = |(a + d) - (b + c)|
  // with a = f(x), b = f(tau_i x), c = f(tau_j x), d = f(tau_i tau_j x).
  // The magnitude is 2 exactly when one of the sums a+d, b+c is 2 and the
  // other 0, and odd (hence 1) exactly when the sums have opposite parity.
  const std::vector<std::uint64_t>& a = f.words();
  std::vector<std::uint64_t> b = flipped_words(a, f.n(), i);
  std::vector<std::uint64_t> c = flipped_words(a, f.n(), j);
  std::vector<std::uint64_t> d = flipped_words(b, f.n(), j);
  std::uint64_t ones = 0, twos = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    std::uint64_t mask1 = (a[k] ^ d[k]) ^ (b[k] ^ c[k]);
    std::uint64_t mask2 = ((a[k] & d[k]) & ~(b[k] | c[k])) |
                          ((b[k] & c[k]) & ~(a[k] | d[k]));
    ones += std::popcount(mask1);
    twos += std::popcount(mask2);
  }
  // ||D_ij f||_1 = (ones + 2 twos) / 2^n; the pair influence halves it.
  return static_cast<double>(ones + 2 * twos) /
         (2.0 * static_cast<double>(f.size()));
}

double InfluenceProfile::max_first() const {
  double m = 0.0;
  for (double v : first) m = std::max(m, v);
  return m;
}

double InfluenceProfile::max_off_diagonal() const {
  double m = 0.0;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) m = std::max(m, pair_of(i, j));
  return m;
}

InfluenceProfile influence_profile(const BooleanFunction& f) {
  InfluenceProfile prof;
  prof.n = f.n();
  prof.first.resize(f.n());
  prof.pair.assign(static_cast<std::size_t>(f.n()) * f.n(), 0.0);
  for (int i = 1; i <= f.n(); ++i) prof.first[i - 1] = influence(f, i);
  for (int i = 1; i <= f.n(); ++i) {
    prof.pair[(i - 1) * f.n() + (i - 1)] = prof.first[i - 1];
    for (int j = i + 1; j <= f.n(); ++j) {
      double v = pair_influence(f, i, j);
      prof.pair[(i - 1) * f.n() + (j - 1)] = v;
      prof.pair[(j - 1) * f.n() + (i - 1)] = v;
    }
  }
  return prof;
}

namespace {

// Minimal cursor with line/column tracking for the table readers.
struct Cursor {
  const std::string& text;
  std::size_t pos = 0;
  int line = 1, col = 1;

  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  void advance() {
    if (text[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }
  void skip_space() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek())))
      advance();
  }
};

int parse_header(Cursor& cur) {
  cur.skip_space();
  if (cur.done() || cur.peek() != 'n')
    throw parse_error("expected header 'n=<dimension>'", cur.line, cur.col);
  cur.advance();
  if (cur.done() || cur.peek() != '=')
    throw parse_error("expected '=' after 'n'", cur.line, cur.col);
  cur.advance();
  std::string digits;
  while (!cur.done() && std::isdigit(static_cast<unsigned char>(cur.peek()))) {
    digits.push_back(cur.peek());
    cur.advance();
  }
  if (digits.empty())
    throw parse_error("expected dimension after 'n='", cur.line, cur.col);
  long n = std::stol(digits);
  if (n < 1) throw parse_error("dimension must be at least 1", cur.line);
  if (n > kMaxDimension)
    throw capacity_error("dimension " + digits +
                         " exceeds the supported maximum " +
                         std::to_string(kMaxDimension));
  return static_cast<int>(n);
}

std::string slurp(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

BooleanFunction read_truth_table(std::istream& in) {
  std::string text = slurp(in);
  Cursor cur{text};
  int n = parse_header(cur);
  BooleanFunction f(n);
  for (std::uint64_t idx = 0; idx < f.size(); ++idx) {
    cur.skip_space();
    if (cur.done())
      throw parse_error("truth table ends after " + std::to_string(idx) +
                            " of " + std::to_string(f.size()) + " entries",
                        cur.line, cur.col);
    char ch = cur.peek();
    if (ch != '0' && ch != '1')
      throw parse_error(std::string("invalid truth table character '") + ch +
                            "'",
                        cur.line, cur.col);
    if (ch == '1') f.set(idx, true);
    cur.advance();
  }
  cur.skip_space();
  if (!cur.done())
    throw parse_error("trailing content after truth table", cur.line, cur.col);
  return f;
}

void write_truth_table(std::ostream& out, const BooleanFunction& f) {
  out << "n=" << f.n() << '\n';
  for (std::uint64_t idx = 0; idx < f.size(); ++idx) {
    out << (f.value(idx) ? '1' : '0');
    if ((idx & 63) == 63 || idx + 1 == f.size()) out << '\n';
  }
}

RealCubeFunction read_real_table(std::istream& in) {
  std::string text = slurp(in);
  Cursor cur{text};
  int n = parse_header(cur);
  RealCubeFunction f(n);
  for (std::uint64_t idx = 0; idx < f.size(); ++idx) {
    cur.skip_space();
    int line = cur.line, col = cur.col;
    std::string token;
    while (!cur.done() &&
           !std::isspace(static_cast<unsigned char>(cur.peek()))) {
      token.push_back(cur.peek());
      cur.advance();
    }
    if (token.empty())
      throw parse_error("real table ends after " + std::to_string(idx) +
                            " of " + std::to_string(f.size()) + " entries",
                        line, col);
    try {
      std::size_t used = 0;
      f[idx] = std::stod(token, &used);
      if (used != token.size())
        throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw parse_error("invalid real value '" + token + "'", line, col);
    }
  }
  cur.skip_space();
  if (!cur.done())
    throw parse_error("trailing content after real table", cur.line, cur.col);
  return f;
}

void write_real_table(std::ostream& out, const RealCubeFunction& f) {
  out << "n=" << f.n() << '\n';
  char buf[40];
  for (std::uint64_t idx = 0; idx < f.size(); ++idx) {
    std::snprintf(buf, sizeof buf, "%.17g", f[idx]);
    out << buf << '\n';
  }
}

namespace {
std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  return in;
}
}  // namespace

BooleanFunction read_truth_table_file(const std::string& path) {
  std::ifstream in = open_or_throw(path);
  return read_truth_table(in);
}

RealCubeFunction read_real_table_file(const std::string& path) {
  std::ifstream in = open_or_throw(path);
  return read_real_table(in);
}

}  // namespace boolfun
