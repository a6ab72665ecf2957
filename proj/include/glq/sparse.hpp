#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace glq {

using complex = std::complex<double>;
using StateVector = std::vector<complex>;

/// Square sparse matrix with row-major storage. Immutable once built;
/// all arithmetic returns fresh operators. `A * B` applies B first.
class SparseOperator {
 public:
  struct Entry {
    std::size_t col;
    complex value;
  };
  struct Triplet {
    std::size_t row;
    std::size_t col;
    complex value;
  };

  /// Zero operator.
  explicit SparseOperator(std::size_t dim = 0);

  /// Duplicate (row, col) pairs are summed; exact zeros are dropped.
  static SparseOperator from_triplets(std::size_t dim, std::span<const Triplet> triplets);
  static SparseOperator identity(std::size_t dim);
  static SparseOperator diagonal(std::span<const complex> values);

  std::size_t dim() const { return rows_.size(); }
  std::size_t nonzeros() const;
  std::span<const Entry> row(std::size_t r) const { return rows_.at(r); }
  complex at(std::size_t row, std::size_t col) const;

  SparseOperator adjoint() const;
  /// Copy with one entry overwritten (zero removes it).
  SparseOperator with_entry(std::size_t row, std::size_t col, complex value) const;

  StateVector apply(std::span<const complex> v) const;

  SparseOperator& operator+=(const SparseOperator& rhs);
  SparseOperator& operator-=(const SparseOperator& rhs);
  SparseOperator& operator*=(complex scalar);

  friend SparseOperator operator+(SparseOperator a, const SparseOperator& b) { return a += b; }
  friend SparseOperator operator-(SparseOperator a, const SparseOperator& b) { return a -= b; }
  friend SparseOperator operator*(SparseOperator a, complex s) { return a *= s; }
  friend SparseOperator operator*(complex s, SparseOperator a) { return a *= s; }
  friend SparseOperator operator*(const SparseOperator& a, const SparseOperator& b);

  /// Largest |entry|; 0 for the zero operator.
  double max_abs() const;
  /// Largest |entry| whose row and column both satisfy the masks.
  double max_abs_on(const std::vector<bool>& row_mask, const std::vector<bool>& col_mask) const;

  /// One "row col re im" line per stored entry, 17 significant digits.
  std::string to_coordinate_text() const;
  static SparseOperator from_coordinate_text(std::size_t dim, std::string_view text);

 private:
  void check_same_dim(const SparseOperator& other, const char* op) const;

  std::vector<std::vector<Entry>> rows_;
};

/// Commutator AB - BA.
SparseOperator commutator(const SparseOperator& a, const SparseOperator& b);

/// Coordinate-list text for a state vector: "index re im" per nonzero amplitude.
std::string state_to_coordinate_text(std::span<const complex> v);

double norm(std::span<const complex> v);
complex inner_product(std::span<const complex> bra, std::span<const complex> ket);

}  // namespace glq
