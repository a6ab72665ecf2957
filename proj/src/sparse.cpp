#include "glq/sparse.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>

namespace glq {

namespace {

std::vector<SparseOperator::Entry> compress(std::map<std::size_t, complex>& accumulated) {
  std::vector<SparseOperator::Entry> row;
  row.reserve(accumulated.size());
  for (const auto& [col, value] : accumulated) {
    if (value != complex(0.0, 0.0)) row.push_back({col, value});
  }
  return row;
}

std::string format_number(double x) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", x);
  return buffer;
}

}  // namespace

SparseOperator::SparseOperator(std::size_t dim) : rows_(dim) {}

SparseOperator SparseOperator::from_triplets(std::size_t dim, std::span<const Triplet> triplets) {
  std::vector<std::map<std::size_t, complex>> accumulated(dim);
  for (const auto& t : triplets) {
    if (t.row >= dim || t.col >= dim) {
      throw std::out_of_range("SparseOperator: triplet index outside dimension");
    }
    accumulated[t.row][t.col] += t.value;
  }
  SparseOperator op(dim);
  for (std::size_t r = 0; r < dim; ++r) op.rows_[r] = compress(accumulated[r]);
  return op;
}

SparseOperator SparseOperator::identity(std::size_t dim) {
  SparseOperator op(dim);
  for (std::size_t r = 0; r < dim; ++r) op.rows_[r].push_back({r, 1.0});
  return op;
}

SparseOperator SparseOperator::diagonal(std::span<const complex> values) {
  SparseOperator op(values.size());
  for (std::size_t r = 0; r < values.size(); ++r) {
    if (values[r] != complex(0.0, 0.0)) op.rows_[r].push_back({r, values[r]});
  }
  return op;
}

std::size_t SparseOperator::nonzeros() const {
  std::size_t count = 0;
  for (const auto& row : rows_) count += row.size();
  return count;
}

complex SparseOperator::at(std::size_t row, std::size_t col) const {
  const auto& entries = rows_.at(row);
  auto it = std::lower_bound(entries.begin(), entries.end(), col,
                             [](const Entry& e, std::size_t c) { return e.col < c; });
  return (it != entries.end() && it->col == col) ? it->value : complex(0.0, 0.0);
}

SparseOperator SparseOperator::adjoint() const {
  SparseOperator result(dim());
  for (std::size_t r = 0; r < dim(); ++r) {
    for (const auto& e : rows_[r]) result.rows_[e.col].push_back({r, std::conj(e.value)});
  }
  // Rows are visited in increasing order, so every new row is already sorted.
  return result;
}

SparseOperator SparseOperator::with_entry(std::size_t row, std::size_t col, complex value) const {
  if (row >= dim() || col >= dim()) {
    throw std::out_of_range("SparseOperator::with_entry: index outside dimension");
  }
  SparseOperator copy = *this;
  auto& entries = copy.rows_[row];
  auto it = std::lower_bound(entries.begin(), entries.end(), col,
                             [](const Entry& e, std::size_t c) { return e.col < c; });
  const bool present = it != entries.end() && it->col == col;
  if (value == complex(0.0, 0.0)) {
    if (present) entries.erase(it);
  } else if (present) {
    it->value = value;
  } else {
    entries.insert(it, {col, value});
  }
  return copy;
}

StateVector SparseOperator::apply(std::span<const complex> v) const {
  if (v.size() != dim()) {
    throw std::invalid_argument("SparseOperator::apply: vector length does not match dimension");
  }
  StateVector out(dim());
  for (std::size_t r = 0; r < dim(); ++r) {
    complex acc = 0.0;
    for (const auto& e : rows_[r]) acc += e.value * v[e.col];
    out[r] = acc;
  }
  return out;
}

void SparseOperator::check_same_dim(const SparseOperator& other, const char* op) const {
  if (other.dim() != dim()) {
    throw std::invalid_argument(std::string("SparseOperator ") + op + ": dimension mismatch");
  }
}

SparseOperator& SparseOperator::operator+=(const SparseOperator& rhs) {
  check_same_dim(rhs, "+");
  for (std::size_t r = 0; r < dim(); ++r) {
    std::map<std::size_t, complex> merged;
    for (const auto& e : rows_[r]) merged[e.col] += e.value;
    for (const auto& e : rhs.rows_[r]) merged[e.col] += e.value;
    rows_[r] = compress(merged);
  }
  return *this;
}

SparseOperator& SparseOperator::operator-=(const SparseOperator& rhs) {
  check_same_dim(rhs, "-");
  for (std::size_t r = 0; r < dim(); ++r) {
    std::map<std::size_t, complex> merged;
    for (const auto& e : rows_[r]) merged[e.col] += e.value;
    for (const auto& e : rhs.rows_[r]) merged[e.col] -= e.value;
    rows_[r] = compress(merged);
  }
  return *this;
}

SparseOperator& SparseOperator::operator*=(complex scalar) {
  if (scalar == complex(0.0, 0.0)) {
    for (auto& row : rows_) row.clear();
    return *this;
  }
  for (auto& row : rows_) {
    for (auto& e : row) e.value *= scalar;
  }
  return *this;
}

SparseOperator operator*(const SparseOperator& a, const SparseOperator& b) {
  a.check_same_dim(b, "*");
  SparseOperator result(a.dim());
  std::map<std::size_t, complex> accumulated;
  for (std::size_t r = 0; r < a.dim(); ++r) {
    accumulated.clear();
    for (const auto& ea : a.rows_[r]) {
      for (const auto& eb : b.rows_[ea.col]) accumulated[eb.col] += ea.value * eb.value;
    }
    result.rows_[r] = compress(accumulated);
  }
  return result;
}

double SparseOperator::max_abs() const {
  double m = 0.0;
  for (const auto& row : rows_) {
    for (const auto& e : row) m = std::max(m, std::abs(e.value));
  }
  return m;
}

double SparseOperator::max_abs_on(const std::vector<bool>& row_mask,
                                  const std::vector<bool>& col_mask) const {
  if (row_mask.size() != dim() || col_mask.size() != dim()) {
    throw std::invalid_argument("SparseOperator::max_abs_on: mask size mismatch");
  }
  double m = 0.0;
  for (std::size_t r = 0; r < dim(); ++r) {
    if (!row_mask[r]) continue;
    for (const auto& e : rows_[r]) {
      if (col_mask[e.col]) m = std::max(m, std::abs(e.value));
    }
  }
  return m;
}

std::string SparseOperator::to_coordinate_text() const {
  std::string out;
  for (std::size_t r = 0; r < dim(); ++r) {
    for (const auto& e : rows_[r]) {
      out += std::to_string(r) + ' ' + std::to_string(e.col) + ' ' +
             format_number(e.value.real()) + ' ' + format_number(e.value.imag()) + '\n';
    }
  }
  return out;
}

SparseOperator SparseOperator::from_coordinate_text(std::size_t dim, std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<Triplet> triplets;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream fields(line);
    Triplet t{};
    double re = 0.0;
    double im = 0.0;
    if (!(fields >> t.row >> t.col >> re >> im)) {
      throw std::invalid_argument("SparseOperator: malformed coordinate line '" + line + "'");
    }
    t.value = complex(re, im);
    triplets.push_back(t);
  }
  return from_triplets(dim, triplets);
}

SparseOperator commutator(const SparseOperator& a, const SparseOperator& b) {
  return a * b - b * a;
}

std::string state_to_coordinate_text(std::span<const complex> v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == complex(0.0, 0.0)) continue;
    out += std::to_string(i) + ' ' + format_number(v[i].real()) + ' ' +
           format_number(v[i].imag()) + '\n';
  }
  return out;
}

double norm(std::span<const complex> v) {
  long double sum = 0.0L;
  for (const auto& x : v) sum += std::norm(x);
  return static_cast<double>(std::sqrt(sum));
}

complex inner_product(std::span<const complex> bra, std::span<const complex> ket) {
  if (bra.size() != ket.size()) {
    throw std::invalid_argument("inner_product: length mismatch");
  }
  complex sum = 0.0;
  for (std::size_t i = 0; i < bra.size(); ++i) sum += std::conj(bra[i]) * ket[i];
  return sum;
}

}  // namespace glq
