#include "glq/qpoly.hpp"

#include <cctype>
#include <cmath>
#include <sstream>
#include <vector>

namespace glq {

QPolynomial::QPolynomial(const mpq_class& constant) { add_term(0, constant); }

QPolynomial QPolynomial::monomial(const mpq_class& c, unsigned exponent) {
  QPolynomial p;
  p.add_term(exponent, c);
  return p;
}

mpq_class QPolynomial::coefficient(unsigned exponent) const {
  auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? mpq_class(0) : it->second;
}

unsigned QPolynomial::degree() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }

void QPolynomial::add_term(unsigned exponent, const mpq_class& value) {
  // mpq_class(num, den) does not reduce; GMP arithmetic requires canonical input.
  mpq_class c = value;
  c.canonicalize();
  if (c == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& rhs) {
  for (const auto& [e, c] : rhs.coeffs_) add_term(e, c);
  return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& rhs) {
  for (const auto& [e, c] : rhs.coeffs_) add_term(e, -c);
  return *this;
}

QPolynomial& QPolynomial::operator*=(const QPolynomial& rhs) {
  QPolynomial product;
  for (const auto& [e1, c1] : coeffs_) {
    for (const auto& [e2, c2] : rhs.coeffs_) {
      product.add_term(e1 + e2, c1 * c2);
    }
  }
  coeffs_ = std::move(product.coeffs_);
  return *this;
}

QPolynomial QPolynomial::operator-() const {
  QPolynomial neg;
  for (const auto& [e, c] : coeffs_) neg.coeffs_.emplace(e, -c);
  return neg;
}

QPolynomial::DivisionResult QPolynomial::divide(const QPolynomial& divisor) const {
  if (divisor.is_zero()) {
    throw std::domain_error("QPolynomial::divide: division by the zero polynomial");
  }
  const unsigned divisor_degree = divisor.degree();
  const mpq_class lead = divisor.coeffs_.rbegin()->second;

  QPolynomial quotient;
  QPolynomial remainder = *this;
  while (!remainder.is_zero() && remainder.degree() >= divisor_degree) {
    const unsigned shift = remainder.degree() - divisor_degree;
    const mpq_class factor = remainder.coeffs_.rbegin()->second / lead;
    const QPolynomial step = monomial(factor, shift);
    quotient += step;
    remainder -= step * divisor;
  }
  return {std::move(quotient), std::move(remainder)};
}

QPolynomial QPolynomial::exact_divide(const QPolynomial& divisor) const {
  auto [quotient, remainder] = divide(divisor);
  if (!remainder.is_zero()) {
    throw ConsistencyError("exact division of " + to_string() + " by " + divisor.to_string() +
                           " left remainder " + remainder.to_string());
  }
  return quotient;
}

std::string QPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : coeffs_) {
    mpq_class magnitude = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      out << magnitude.get_str();
      continue;
    }
    if (magnitude != 1) out << magnitude.get_str() << '*';
    out << 'q';
    if (e != 1) out << '^' << e;
  }
  return out.str();
}

// Accepted grammar, whitespace-insensitive:
//   poly  := ["-"] term (("+" | "-") term)*
//   term  := coeff | [coeff "*"] "q" ["^" uint]
//   coeff := uint ["/" uint]
QPolynomial QPolynomial::parse(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) throw std::invalid_argument("QPolynomial::parse: empty input");

  std::size_t pos = 0;
  auto fail = [&s](const std::string& why) {
    throw std::invalid_argument("QPolynomial::parse: " + why + " in '" + s + "'");
  };
  auto read_uint = [&]() {
    const std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) fail("expected digits at offset " + std::to_string(start));
    return s.substr(start, pos - start);
  };

  QPolynomial result;
  bool first = true;
  while (pos < s.size()) {
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negative = s[pos] == '-';
      ++pos;
    } else if (!first) {
      fail("expected '+' or '-' at offset " + std::to_string(pos));
    }
    first = false;

    mpq_class coeff(1);
    bool has_coeff = false;
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      std::string literal = read_uint();
      if (pos < s.size() && s[pos] == '/') {
        ++pos;
        literal += "/" + read_uint();
      }
      coeff = mpq_class(literal);
      if (coeff.get_den() == 0) fail("zero denominator");
      coeff.canonicalize();
      has_coeff = true;
    }
    unsigned exponent = 0;
    if (pos < s.size() && (s[pos] == '*' || s[pos] == 'q')) {
      if (s[pos] == '*') {
        if (!has_coeff) fail("'*' without a coefficient");
        ++pos;
      }
      if (pos >= s.size() || s[pos] != 'q') fail("expected 'q'");
      ++pos;
      exponent = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        exponent = static_cast<unsigned>(std::stoul(read_uint()));
      }
    } else if (!has_coeff) {
      fail("empty term");
    }
    result.add_term(exponent, negative ? mpq_class(-coeff) : coeff);
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const QPolynomial& p) { return os << p.to_string(); }

QPolynomial poly_q_number(unsigned n) {
  QPolynomial p;
  for (unsigned j = 0; j < n; ++j) p += QPolynomial::monomial(1, 2 * j);
  return p;
}

QPolynomial poly_q_factorial(unsigned n) {
  QPolynomial p(1);
  for (unsigned k = 2; k <= n; ++k) p *= poly_q_number(k);
  return p;
}

QPolynomial poly_q_multinomial(std::span<const unsigned> counts) {
  if (counts.empty()) {
    throw std::invalid_argument("poly_q_multinomial: counts must be nonempty");
  }
  unsigned total = 0;
  QPolynomial denominator(1);
  for (unsigned c : counts) {
    total += c;
    denominator *= poly_q_factorial(c);
  }
  return poly_q_factorial(total).exact_divide(denominator);
}

QPolynomial poly_appendix_J(std::span<const unsigned> counts, unsigned slot) {
  if (slot < 1 || slot > counts.size()) {
    throw std::out_of_range("poly_appendix_J: slot " + std::to_string(slot) +
                            " outside 1.." + std::to_string(counts.size()));
  }
  const std::size_t i = slot - 1;
  QPolynomial j_sum;
  unsigned preceding = 0;  // n_1 + ... + n_{j-1}
  for (std::size_t j = 0; j < counts.size(); ++j) {
    if (j < i) {
      j_sum += QPolynomial::monomial(1, 2 * preceding) * poly_q_number(counts[j]);
    } else if (j == i) {
      j_sum += QPolynomial::monomial(1, 2 * preceding) * poly_q_number(counts[j] + 1);
    } else {
      j_sum += QPolynomial::monomial(1, 2 * (preceding + 1)) * poly_q_number(counts[j]);
    }
    preceding += counts[j];
  }
  return j_sum;
}

double poly_eval(const QPolynomial& p, double q) {
  const auto& coeffs = p.coefficients();
  if (coeffs.empty()) return 0.0;
  double result = 0.0;
  unsigned previous = coeffs.rbegin()->first;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    result = result * std::pow(q, static_cast<double>(previous - it->first)) + it->second.get_d();
    previous = it->first;
  }
  return result * std::pow(q, static_cast<double>(previous));
}

mpq_class poly_eval(const QPolynomial& p, const mpq_class& point) {
  mpq_class q = point;
  q.canonicalize();
  const auto& coeffs = p.coefficients();
  mpq_class result(0);
  if (coeffs.empty()) return result;
  auto power = [&q](unsigned e) {
    mpq_class r(1);
    for (unsigned k = 0; k < e; ++k) r *= q;
    return r;
  };
  unsigned previous = coeffs.rbegin()->first;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    result = result * power(previous - it->first) + it->second;
    previous = it->first;
  }
  return result * power(previous);
}

}  // namespace glq
