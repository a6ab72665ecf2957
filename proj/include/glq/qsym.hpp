#pragma once

// q-symmetric multiparticle states on the N-fold tensor power of the
// n-mode single-particle space.
//
// Tensor basis words (i_1,...,i_N) are indexed in base n with i_1 as the most
// significant digit and letter k stored as digit k-1.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "glq/qcore.hpp"
#include "glq/qpoly.hpp"
#include "glq/sparse.hpp"

namespace glq {

/// Enumeration limits; exceeding them throws std::length_error.
struct SymmetryBounds {
  unsigned max_particles = 10;
  unsigned max_modes = 6;
  std::size_t max_dimension = 10'000'000;
};

class Word {
 public:
  /// Letters are 1-based mode labels in 1..modes.
  Word(std::vector<unsigned> letters, unsigned modes);

  /// "1,2,2,3"; the mode count defaults to the largest letter.
  static Word parse(std::string_view text, unsigned modes = 0);

  const std::vector<unsigned>& letters() const { return letters_; }
  unsigned modes() const { return modes_; }
  std::size_t size() const { return letters_.size(); }
  /// Occupancy profile (n_1,...,n_modes).
  const std::vector<unsigned>& counts() const { return counts_; }

  /// Copy with positions k and k+1 exchanged (1-based k).
  Word swapped(unsigned k) const;
  bool is_sorted() const;
  std::string to_string() const;

  bool operator==(const Word&) const = default;

 private:
  std::vector<unsigned> letters_;
  unsigned modes_;
  std::vector<unsigned> counts_;
};

struct TensorState {
  unsigned modes = 0;
  unsigned particles = 0;
  StateVector amplitudes;
};

std::size_t tensor_dimension(unsigned modes, unsigned particles);
std::size_t tensor_index(const Word& w);
Word word_at(std::size_t index, unsigned modes, unsigned particles);

/// Number of pairs k < l with i_k > i_l.
unsigned inversion_R(std::span<const unsigned> letters);
inline unsigned inversion_R(const Word& w) { return inversion_R(w.letters()); }

/// +1 if i > j, 0 if equal, -1 if i < j.
int epsilon(unsigned i, unsigned j);

/// All distinct rearrangements of the word's letters, lexicographic order.
std::vector<Word> distinct_arrangements(const Word& w);

/// sqrt(prod [n_k]!/[N]!) sum over distinct arrangements s of q^{R(w)+R(s)} |s>.
TensorState q_symmetrize(const Word& w, const DeformationParams& params,
                         const SymmetryBounds& bounds = {});

/// Undeformed reference: uniform normalized superposition of the distinct arrangements.
TensorState bosonic_symmetrize(const Word& w, const SymmetryBounds& bounds = {});

struct ExchangeReport {
  unsigned position = 0;
  /// Exponent e in |w>_q = q^e |swap_k w>_q; equals epsilon(i_k, i_{k+1}).
  int exponent = 0;
  double deviation = 0.0;
  bool pass = false;
};

ExchangeReport exchange_check(const Word& w, unsigned k, const DeformationParams& params,
                              double tol = 1e-13, const SymmetryBounds& bounds = {});

/// P_{k,k+1}: |..., a, b, ...> -> q^{-epsilon(a,b)} |..., b, a, ...> on every tensor word.
SparseOperator transposition_op(unsigned particles, unsigned modes, unsigned k,
                                const DeformationParams& params, const SymmetryBounds& bounds = {});

/// P_{k+1,k}: the map undoing P_{k,k+1}, built from its own action on tensor words.
SparseOperator reverse_transposition_op(unsigned particles, unsigned modes, unsigned k,
                                        const DeformationParams& params,
                                        const SymmetryBounds& bounds = {});

struct NormIdentity {
  QPolynomial arrangement_sum;
  QPolynomial multinomial;
  bool exact_match() const { return arrangement_sum == multinomial; }
};

/// Sum of q^{2R(s)} over distinct arrangements of the multiset with `counts`,
/// paired with the Gaussian multinomial.
NormIdentity norm_identity_exact(std::span<const unsigned> counts,
                                 const SymmetryBounds& bounds = {});

/// ||q_symmetrize(w)||^2
double fundamental_norm(const Word& w, const DeformationParams& params,
                        const SymmetryBounds& bounds = {});

/// Every occupancy vector of length `slots` with entries summing to at most `max_total`.
std::vector<std::vector<unsigned>> occupancy_vectors(unsigned slots, unsigned max_total);

}  // namespace glq
