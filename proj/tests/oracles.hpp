#pragma once

// Reference computations written independently of the library: plain loops
// over the defining sums, no shared helpers.

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

// [x] as the geometric sum 1 + q^2 + ... + q^{2(x-1)} for integer x.
inline double q_int(double q, unsigned x) {
  double s = 0.0, p = 1.0;
  for (unsigned k = 0; k < x; ++k, p *= q * q) s += p;
  return s;
}

inline double q_fact(double q, unsigned n) {
  double f = 1.0;
  for (unsigned k = 2; k <= n; ++k) f *= q_int(q, k);
  return f;
}

// sum_n x^n/[n]! with a fixed generous term count.
inline std::complex<long double> exp_q(double q, std::complex<double> x, unsigned terms = 4000) {
  std::complex<long double> sum = 0, term = 1;
  for (unsigned n = 0; n < terms; ++n) {
    sum += term;
    term *= std::complex<long double>(x) / static_cast<long double>(q_int(q, n + 1));
    if (std::abs(term) < 1e-40L && n > 10) break;
  }
  return sum;
}

// Number of pairs k<l with w_k > w_l, by brute force.
inline unsigned inversions(const std::vector<unsigned>& w) {
  unsigned r = 0;
  for (std::size_t k = 0; k < w.size(); ++k)
    for (std::size_t l = k + 1; l < w.size(); ++l) r += w[k] > w[l] ? 1u : 0u;
  return r;
}

// Hand-rolled generator for property sweeps.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}
  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }
  unsigned below(unsigned n) { return std::uniform_int_distribution<unsigned>(0, n - 1)(rng_); }
  std::vector<unsigned> word(unsigned length, unsigned modes) {
    std::vector<unsigned> w(length);
    for (auto& x : w) x = below(modes) + 1;
    return w;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace oracle
