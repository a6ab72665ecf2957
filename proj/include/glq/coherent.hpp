#pragma once

// Coherent states of the covariant oscillators on a truncated Fock space,
// their twisted eigenvalue property, and the radial reduction of the
// resolution of identity to Jackson moments.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "glq/fock.hpp"
#include "glq/qcore.hpp"
#include "glq/sparse.hpp"

namespace glq {

/// Thrown when the truncated basis drops more probability than allowed.
class InsufficientCutoff : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CoherentSpec {
  std::vector<complex> z;
  FockSpaceConfig cfg;

  /// Throws DomainError if some |z_i|^2 >= 1/(1-q^2), std::invalid_argument on
  /// a length mismatch with the mode count.
  void validate() const;
};

struct CoherentState {
  CoherentSpec spec;
  StateVector vector;
  /// prod_i exp_q(|z_i|^2)^{-1/2}
  double norm_constant;
  /// Probability weight of the untruncated state outside the basis.
  double tail_mass;
};

/// prod_i exp_q(|z_i|^2)^{-1/2}, the constant giving <z|z> = 1.
double coherent_norm_constant(const DeformationParams& params, std::span<const complex> z);

/// 1 - prod_i (sum_{n<cutoff} |z_i|^{2n}/[n]!) / exp_q(|z_i|^2), summed from the tail side.
double coherent_tail_mass(const DeformationParams& params, std::span<const complex> z,
                          unsigned cutoff);

/// Smallest cutoff whose tail mass is at most `tail_tol`.
unsigned minimal_cutoff(const DeformationParams& params, std::span<const complex> z,
                        double tail_tol);

/// Throws InsufficientCutoff when the tail mass exceeds `tail_tol`.
CoherentState build_coherent(const CoherentSpec& spec, double tail_tol = 1e-10);

/// Copy of `spec` with z_k -> q z_k for every mode k after `mode`.
CoherentSpec shifted_spec(const CoherentSpec& spec, unsigned mode);

struct EigenvalueReport {
  unsigned mode = 0;
  /// || a_i |z> - z_i (c(z)/c(z')) |z'> ||
  double residual = 0.0;
  /// Predicted residual from the truncated top rung alone.
  double truncation_allowance = 0.0;
  /// c(z)/c(z'): relates the normalized shifted state to the unnormalized series.
  double normalization_ratio = 1.0;
  bool pass = false;
};

EigenvalueReport check_eigenvalue(const CoherentState& state, unsigned mode, double tol);

enum class WeightVariant { paper_q, squared_q };

std::string to_string(WeightVariant variant);
WeightVariant weight_variant_from_string(const std::string& text);

struct CompletenessReport {
  WeightVariant variant = WeightVariant::squared_q;
  /// Highest per-mode level checked (cutoff - 2).
  unsigned max_level = 0;
  /// Single-mode diagonal element for levels 0..max_level.
  std::vector<double> level_values;
  /// Max |<m|resolution|m> - 1| over all basis states with every m_i <= max_level.
  double max_diagonal_deviation = 0.0;
  bool pass = false;
};

/// Requires modes <= 2 and cutoff >= 4 (std::invalid_argument otherwise).
CompletenessReport check_completeness(const FockSpaceConfig& cfg, double tol,
                                      WeightVariant variant);

struct CompletenessAdjudication {
  CompletenessReport paper_q;
  CompletenessReport squared_q;
  /// Set when exactly one variant resolves the identity.
  std::optional<WeightVariant> consistent;
};

CompletenessAdjudication adjudicate_completeness(const FockSpaceConfig& cfg, double tol);

/// Deterministic grid of coherent specs: modes alternate 1 and 2, q cycles
/// through `qs`, |z_i|^2 stays within 0.8/(1-q^2). The first entry has z = 0.
struct CoherentGridPoint {
  double q;
  std::vector<complex> z;
};
std::vector<CoherentGridPoint> coherent_grid(const std::vector<double>& qs, std::size_t count,
                                             std::uint64_t seed);

}  // namespace glq
