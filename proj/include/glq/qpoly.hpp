#pragma once

// Exact univariate polynomials in q with arbitrary-precision rational
// coefficients. Used to check the combinatorial identities symbolically
// instead of at sampled values of q.

#include <gmpxx.h>

#include <map>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

namespace glq {

/// Raised when an exact division leaves a remainder that should be zero.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class QPolynomial {
 public:
  using Coefficients = std::map<unsigned, mpq_class>;

  QPolynomial() = default;
  QPolynomial(const mpq_class& constant);  // NOLINT(google-explicit-constructor)
  QPolynomial(long constant) : QPolynomial(mpq_class(constant)) {}  // NOLINT

  /// c * q^exponent
  static QPolynomial monomial(const mpq_class& c, unsigned exponent);

  /// Stored coefficients; never contains a zero.
  const Coefficients& coefficients() const { return coeffs_; }
  mpq_class coefficient(unsigned exponent) const;

  bool is_zero() const { return coeffs_.empty(); }
  /// Largest exponent with a nonzero coefficient; 0 for the zero polynomial.
  unsigned degree() const;

  QPolynomial& operator+=(const QPolynomial& rhs);
  QPolynomial& operator-=(const QPolynomial& rhs);
  QPolynomial& operator*=(const QPolynomial& rhs);

  friend QPolynomial operator+(QPolynomial lhs, const QPolynomial& rhs) { return lhs += rhs; }
  friend QPolynomial operator-(QPolynomial lhs, const QPolynomial& rhs) { return lhs -= rhs; }
  friend QPolynomial operator*(QPolynomial lhs, const QPolynomial& rhs) { return lhs *= rhs; }
  QPolynomial operator-() const;

  friend bool operator==(const QPolynomial& lhs, const QPolynomial& rhs) {
    return lhs.coeffs_ == rhs.coeffs_;
  }

  struct DivisionResult;
  /// Long division; throws std::domain_error on a zero divisor.
  DivisionResult divide(const QPolynomial& divisor) const;

  /// Quotient of an exact division; throws ConsistencyError on a nonzero remainder.
  QPolynomial exact_divide(const QPolynomial& divisor) const;

  /// Canonical text form, ascending powers: "1 + 2*q^2 + q^4", "0" for zero.
  std::string to_string() const;

  /// Parses the canonical text form (and the small superset described in qpoly.cpp).
  static QPolynomial parse(std::string_view text);

 private:
  void add_term(unsigned exponent, const mpq_class& c);

  Coefficients coeffs_;
};

struct QPolynomial::DivisionResult {
  QPolynomial quotient;
  QPolynomial remainder;
};

std::ostream& operator<<(std::ostream& os, const QPolynomial& p);

/// [n] = 1 + q^2 + ... + q^{2(n-1)}
QPolynomial poly_q_number(unsigned n);

/// [n]!
QPolynomial poly_q_factorial(unsigned n);

/// Gaussian multinomial [N]!/prod [n_k]!, checked to divide exactly.
QPolynomial poly_q_multinomial(std::span<const unsigned> counts);

/// Three-piece sum from the inductive step of the multinomial identity, with the
/// extra particle inserted into 1-based slot `slot`. Equals poly_q_number(N + 1).
QPolynomial poly_appendix_J(std::span<const unsigned> counts, unsigned slot);

/// Horner evaluation at a real q.
double poly_eval(const QPolynomial& p, double q);

/// Exact evaluation at a rational q.
mpq_class poly_eval(const QPolynomial& p, const mpq_class& q);

}  // namespace glq
