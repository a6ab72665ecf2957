#pragma once

// Scalar q-analysis: q-numbers, q-factorials, q-multinomials, the
// q-exponential in series and product form, and the base-q^2 Jackson
// integral over [0, 1/(1-q^2)].

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>

namespace glq {

using complex = std::complex<double>;

/// Thrown when an argument lies outside the convergence domain of a series.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Thrown when an infinite product hits one of its poles.
class SingularityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Thrown when a result leaves the range of double precision.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Deformation parameter 0 < q < 1 with cached q^2 and 1/(1-q^2).
class DeformationParams {
 public:
  explicit DeformationParams(double q);

  double q() const { return q_; }
  double q_sq() const { return q_sq_; }
  /// Convergence radius of exp_q; also the upper end of the Jackson integral.
  double radius() const { return radius_; }

  bool operator==(const DeformationParams&) const = default;

 private:
  double q_;
  double q_sq_;
  double radius_;
};

/// A real result tagged with the deformation it was computed under.
struct QValue {
  double value;
  DeformationParams params;
};

/// Complex q-exponential evaluation with its truncation diagnostics.
struct QExpValue {
  complex value;
  /// Upper bound on |exact - value| from the dropped tail.
  double tail_bound;
  std::size_t terms;
};

// [x] = (q^{2x} - 1)/(q^2 - 1)
QValue q_number(const DeformationParams& params, double x);

// [n]! = [1][2]...[n]
QValue q_factorial(const DeformationParams& params, unsigned n);

// [N]! / prod [n_k]!, N = sum of counts. Throws std::invalid_argument on empty counts.
QValue q_multinomial(const DeformationParams& params, std::span<const unsigned> counts);

/// Partial sum of sum_n x^n/[n]! with exactly `terms` terms.
/// Throws DomainError when |x| >= radius.
QExpValue q_exp_series(const DeformationParams& params, complex x, std::size_t terms);

/// Series truncated adaptively once the tail bound drops below rel_tol * |partial sum|.
QExpValue q_exp_series_adaptive(const DeformationParams& params, complex x,
                                 double rel_tol = 1e-17);

/// prod_{n<factors} 1/(1 - (1-q^2) q^{2n} x). Throws SingularityError on a pole.
QExpValue q_exp_product(const DeformationParams& params, complex x, std::size_t factors);

/// Product truncated adaptively once the dropped factors move the value by
/// less than rel_tol relative.
QExpValue q_exp_product_adaptive(const DeformationParams& params, complex x,
                                  double rel_tol = 1e-17);

/// 1/exp_q(x) = prod (1 - (1-q^2) q^{2n} x). Entire in x, so never singular.
double q_exp_reciprocal(const DeformationParams& params, double x);

using RealFunction = std::function<double(double)>;

/// upper (1-q^2) sum_{k<terms} q^{2k} f(upper q^{2k}).
/// `upper` must equal params.radius(); a non-finite f value throws DomainError.
QValue jackson_integral(const DeformationParams& params, const RealFunction& f, double upper,
                        std::size_t terms);

/// Jackson integral of x^n / exp_q(scale * x). With scale = q^2 this equals [n]!.
QValue jackson_moment(const DeformationParams& params, unsigned n, double scale,
                      double rel_tol = 1e-16);

}  // namespace glq
