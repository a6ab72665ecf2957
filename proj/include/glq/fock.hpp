#pragma once

// Truncated multimode Fock space for the covariant deformed oscillators.
//
// Basis states |n_1,...,n_n> with 0 <= n_i < cutoff are indexed in
// mixed radix with mode 1 as the most significant digit. Mode labels are
// 1-based everywhere in this interface.

#include <cstddef>
#include <string>
#include <vector>

#include "glq/qcore.hpp"
#include "glq/sparse.hpp"

namespace glq {

class FockSpaceConfig {
 public:
  static constexpr std::size_t kMaxDimension = 10'000'000;

  /// Throws std::invalid_argument for zero modes/cutoff or dimension above kMaxDimension.
  FockSpaceConfig(unsigned modes, unsigned cutoff, DeformationParams params);

  unsigned modes() const { return modes_; }
  unsigned cutoff() const { return cutoff_; }
  const DeformationParams& params() const { return params_; }
  std::size_t dimension() const { return dimension_; }

 private:
  unsigned modes_;
  unsigned cutoff_;
  DeformationParams params_;
  std::size_t dimension_;
};

struct OccupationState {
  std::vector<unsigned> occ;

  bool operator==(const OccupationState&) const = default;
};

std::size_t encode(const FockSpaceConfig& cfg, const OccupationState& state);
OccupationState decode(const FockSpaceConfig& cfg, std::size_t index);

/// True for basis states with every occupation <= cutoff - 2.
std::vector<bool> interior_mask(const FockSpaceConfig& cfg);

SparseOperator annihilator(const FockSpaceConfig& cfg, unsigned mode);
/// Top-rung states (occupation cutoff - 1) are mapped to zero.
SparseOperator creator(const FockSpaceConfig& cfg, unsigned mode);
SparseOperator number_op(const FockSpaceConfig& cfg, unsigned mode);
/// Q_i = q^{2 N_i}
SparseOperator scale_op(const FockSpaceConfig& cfg, unsigned mode);

/// Applies the creators to the vacuum, mode 1 first, and divides by
/// sqrt(prod [n_i]!). Throws std::out_of_range for occupations at the cutoff.
StateVector build_state(const FockSpaceConfig& cfg, const OccupationState& state);

/// Operators for every mode, indexed 0..modes-1 (mode label minus one).
struct LadderSet {
  std::vector<SparseOperator> annihilators;
  std::vector<SparseOperator> creators;
  std::vector<SparseOperator> numbers;
  std::vector<SparseOperator> scales;
};

LadderSet build_ladder_set(const FockSpaceConfig& cfg);

struct RelationRecord {
  std::string name;
  std::string identity;
  std::size_t instances = 0;
  double max_deviation = 0.0;
  bool pass = true;
};

struct RelationReport {
  double tol = 0.0;
  std::vector<RelationRecord> relations;
  bool pass() const;
  const RelationRecord& find(const std::string& name) const;
};

/// Names of the relation families, in report order.
const std::vector<std::string>& relation_names();

/// Checks every defining and derived relation as matrix identities restricted
/// to interior rows and columns. Throws std::invalid_argument when cutoff < 3.
RelationReport verify_algebra(const FockSpaceConfig& cfg, double tol);

/// Same checks on a caller-supplied operator set (used for fault injection).
RelationReport verify_relations(const FockSpaceConfig& cfg, const LadderSet& ops, double tol);

/// Max over modes and interior entries of |[a_i, a_i^dagger] - 1|, the
/// distance from the undeformed boson commutator.
double undeformed_commutator_deviation(const FockSpaceConfig& cfg);

}  // namespace glq
