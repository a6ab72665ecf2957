#include "glq/qcore.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <vector>

namespace glq {

namespace {

using lcomplex = std::complex<long double>;

constexpr std::size_t kMaxAdaptiveTerms = 200000;

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) {
    throw OverflowError(std::string(what) + ": result exceeds double precision");
  }
}

}  // namespace

DeformationParams::DeformationParams(double q) : q_(q), q_sq_(q * q), radius_(0.0) {
  if (!(q > 0.0 && q < 1.0)) {
    throw std::invalid_argument("deformation parameter must satisfy 0 < q < 1, got " +
                                std::to_string(q));
  }
  radius_ = 1.0 / (1.0 - q_sq_);
}

QValue q_number(const DeformationParams& params, double x) {
  if (!std::isfinite(x)) {
    throw std::invalid_argument("q_number: argument must be finite");
  }
  // expm1 keeps full relative accuracy for small |x| and for q close to 1.
  const double two_log_q = 2.0 * std::log(params.q());
  const double value = std::expm1(x * two_log_q) / std::expm1(two_log_q);
  return {value, params};
}

QValue q_factorial(const DeformationParams& params, unsigned n) {
  double value = 1.0;
  for (unsigned k = 2; k <= n; ++k) {
    value *= q_number(params, k).value;
    require_finite(value, "q_factorial");
  }
  return {value, params};
}

QValue q_multinomial(const DeformationParams& params, std::span<const unsigned> counts) {
  if (counts.empty()) {
    throw std::invalid_argument("q_multinomial: counts must be nonempty");
  }
  // Sorting first makes the floating-point evaluation order independent of
  // the order of the counts.
  std::vector<unsigned> sorted(counts.begin(), counts.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  unsigned total = 0;
  for (unsigned c : sorted) total += c;

  double value = 1.0;
  for (unsigned j = sorted.front() + 1; j <= total; ++j) {
    value *= q_number(params, j).value;
    require_finite(value, "q_multinomial");
  }
  for (std::size_t k = 1; k < sorted.size(); ++k) {
    value /= q_factorial(params, sorted[k]).value;
  }
  return {value, params};
}

QExpValue q_exp_series(const DeformationParams& params, complex x, std::size_t terms) {
  if (terms == 0) {
    throw std::invalid_argument("q_exp_series: terms must be positive");
  }
  const double abs_x = std::abs(x);
  if (!(abs_x < params.radius())) {
    throw DomainError("q_exp_series: |x| must be below the convergence radius 1/(1-q^2)");
  }
  const long double q_sq = params.q_sq();
  const lcomplex lx(x.real(), x.imag());

  lcomplex term = 1.0L;
  lcomplex sum = 0.0L;
  long double bracket = 0.0L;  // [n] for the current n
  for (std::size_t n = 0; n < terms; ++n) {
    sum += term;
    bracket = 1.0L + q_sq * bracket;  // [n+1]
    term *= lx / bracket;
  }
  // Every later ratio |x|/[k] is bounded by |x|/[terms+1] since [k] increases.
  const long double ratio = abs_x / (1.0L + q_sq * bracket);
  const long double next = std::abs(term);
  const double tail = ratio < 1.0L ? static_cast<double>(next / (1.0L - ratio))
                                   : std::numeric_limits<double>::infinity();
  const complex value(static_cast<double>(sum.real()), static_cast<double>(sum.imag()));
  require_finite(std::abs(value), "q_exp_series");
  return {value, tail, terms};
}

QExpValue q_exp_series_adaptive(const DeformationParams& params, complex x, double rel_tol) {
  const double abs_x = std::abs(x);
  if (!(abs_x < params.radius())) {
    throw DomainError("q_exp_series: |x| must be below the convergence radius 1/(1-q^2)");
  }
  const long double q_sq = params.q_sq();
  const lcomplex lx(x.real(), x.imag());

  lcomplex term = 1.0L;
  lcomplex sum = 0.0L;
  long double bracket = 0.0L;
  for (std::size_t n = 0; n < kMaxAdaptiveTerms; ++n) {
    sum += term;
    bracket = 1.0L + q_sq * bracket;
    term *= lx / bracket;
    const long double ratio = abs_x / (1.0L + q_sq * bracket);
    if (ratio < 1.0L) {
      const long double tail = std::abs(term) / (1.0L - ratio);
      if (tail <= rel_tol * std::abs(sum)) {
        const complex value(static_cast<double>(sum.real()), static_cast<double>(sum.imag()));
        return {value, static_cast<double>(tail), n + 1};
      }
    }
  }
  throw DomainError("q_exp_series: no convergence within the term budget");
}

namespace {

// Relative bound on |prod_{n>=first} 1/(1-eps_n) - 1| where eps_n = (1-q^2) q^{2n} |x|.
long double product_tail(long double one_minus_q_sq, long double eps_first) {
  if (eps_first >= 1.0L) return std::numeric_limits<long double>::infinity();
  const long double log_bound = eps_first / (one_minus_q_sq * (1.0L - eps_first));
  return std::expm1(log_bound);
}

lcomplex product_factor(long double scaled_x_re, long double scaled_x_im) {
  return lcomplex(1.0L - scaled_x_re, -scaled_x_im);
}

void check_pole(const lcomplex& denom, long double scaled_abs) {
  const long double tol = 16.0L * DBL_EPSILON * std::max(1.0L, scaled_abs);
  if (std::abs(denom) <= tol) {
    throw SingularityError("q_exp_product: argument sits on a pole (1-q^2) q^{2n} x = 1");
  }
}

}  // namespace

QExpValue q_exp_product(const DeformationParams& params, complex x, std::size_t factors) {
  if (factors == 0) {
    throw std::invalid_argument("q_exp_product: factors must be positive");
  }
  const long double one_minus_q_sq = 1.0L - static_cast<long double>(params.q_sq());
  const long double q_sq = params.q_sq();
  lcomplex scaled(one_minus_q_sq * x.real(), one_minus_q_sq * x.imag());
  lcomplex product = 1.0L;
  for (std::size_t n = 0; n < factors; ++n) {
    const lcomplex denom = product_factor(scaled.real(), scaled.imag());
    check_pole(denom, std::abs(scaled));
    product /= denom;
    scaled *= q_sq;
  }
  const complex value(static_cast<double>(product.real()), static_cast<double>(product.imag()));
  require_finite(std::abs(value), "q_exp_product");
  const long double rel = product_tail(one_minus_q_sq, std::abs(scaled));
  return {value, static_cast<double>(rel * std::abs(product)), factors};
}

QExpValue q_exp_product_adaptive(const DeformationParams& params, complex x, double rel_tol) {
  const long double one_minus_q_sq = 1.0L - static_cast<long double>(params.q_sq());
  const long double q_sq = params.q_sq();
  lcomplex scaled(one_minus_q_sq * x.real(), one_minus_q_sq * x.imag());
  lcomplex product = 1.0L;
  for (std::size_t n = 0; n < kMaxAdaptiveTerms; ++n) {
    const lcomplex denom = product_factor(scaled.real(), scaled.imag());
    check_pole(denom, std::abs(scaled));
    product /= denom;
    scaled *= q_sq;
    const long double rel = product_tail(one_minus_q_sq, std::abs(scaled));
    if (rel <= rel_tol) {
      const complex value(static_cast<double>(product.real()),
                          static_cast<double>(product.imag()));
      require_finite(std::abs(value), "q_exp_product");
      return {value, static_cast<double>(rel * std::abs(product)), n + 1};
    }
  }
  throw DomainError("q_exp_product: no convergence within the factor budget");
}

double q_exp_reciprocal(const DeformationParams& params, double x) {
  const long double q_sq = params.q_sq();
  long double scaled = (1.0L - q_sq) * x;
  long double product = 1.0L;
  for (std::size_t n = 0; n < kMaxAdaptiveTerms; ++n) {
    product *= 1.0L - scaled;
    scaled *= q_sq;
    if (std::abs(scaled) < 1e-21L || product == 0.0L) break;
  }
  return static_cast<double>(product);
}

QValue jackson_integral(const DeformationParams& params, const RealFunction& f, double upper,
                        std::size_t terms) {
  if (terms == 0) {
    throw std::invalid_argument("jackson_integral: terms must be positive");
  }
  if (std::abs(upper - params.radius()) > 1e-12 * params.radius()) {
    throw std::invalid_argument("jackson_integral: upper limit must be 1/(1-q^2)");
  }
  const long double q_sq = params.q_sq();
  long double weight = 1.0L;  // q^{2k}
  long double sum = 0.0L;
  for (std::size_t k = 0; k < terms; ++k) {
    const double point = static_cast<double>(upper * weight);
    const double fx = f(point);
    if (!std::isfinite(fx)) {
      throw DomainError("jackson_integral: integrand is not finite at x = " +
                        std::to_string(point));
    }
    sum += weight * fx;
    weight *= q_sq;
  }
  const double value = static_cast<double>(upper * (1.0L - q_sq) * sum);
  require_finite(value, "jackson_integral");
  return {value, params};
}

QValue jackson_moment(const DeformationParams& params, unsigned n, double scale, double rel_tol) {
  const double upper = params.radius();
  auto integrand = [&params, n, scale](double x) {
    return std::pow(x, static_cast<double>(n)) * q_exp_reciprocal(params, scale * x);
  };
  // Grid term k is at most q^{2k(n+1)} R^n while the k = 0 term is
  // R^n / exp_q(scale R); the geometric remainder fixes the term count.
  const double ratio = std::pow(params.q_sq(), static_cast<double>(n) + 1.0);
  const double first = std::max(q_exp_reciprocal(params, scale * upper), 1e-300);
  const double needed = std::log(rel_tol * first * (1.0 - ratio)) / std::log(ratio);
  const auto terms = static_cast<std::size_t>(std::max(1.0, std::ceil(needed)) + 1);
  return jackson_integral(params, integrand, upper, terms);
}

}  // namespace glq
