#include "glq/coherent.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace glq {

namespace {

// Terms |z|^{2n}/[n]! of exp_q(|z|^2), n = 0..count-1.
std::vector<long double> weight_terms(const DeformationParams& params, double abs_sq,
                                      std::size_t count) {
  std::vector<long double> terms(count);
  long double term = 1.0L;
  long double bracket = 0.0L;
  for (std::size_t n = 0; n < count; ++n) {
    terms[n] = term;
    bracket = 1.0L + params.q_sq() * bracket;
    term *= abs_sq / bracket;
  }
  return terms;
}

// sum_{n >= cutoff} |z|^{2n}/[n]! / exp_q(|z|^2)
double mode_tail(const DeformationParams& params, double abs_sq, unsigned cutoff) {
  if (abs_sq == 0.0) return 0.0;
  long double term = 1.0L;
  long double bracket = 0.0L;
  for (unsigned n = 0; n < cutoff; ++n) {
    bracket = 1.0L + params.q_sq() * bracket;
    term *= abs_sq / bracket;
  }
  long double tail = 0.0L;
  for (std::size_t guard = 0; guard < 1'000'000; ++guard) {
    tail += term;
    bracket = 1.0L + params.q_sq() * bracket;
    const long double ratio = abs_sq / bracket;
    term *= ratio;
    if (term < 1e-40L * tail && ratio < 1.0L) break;
  }
  return static_cast<double>(tail * q_exp_reciprocal(params, abs_sq));
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

void CoherentSpec::validate() const {
  if (z.size() != cfg.modes()) {
    throw std::invalid_argument("CoherentSpec: number of amplitudes differs from mode count");
  }
  for (const auto& zi : z) {
    if (!(std::norm(zi) < cfg.params().radius())) {
      throw DomainError("CoherentSpec: |z|^2 must be below 1/(1-q^2)");
    }
  }
}

double coherent_norm_constant(const DeformationParams& params, std::span<const complex> z) {
  double c = 1.0;
  for (const auto& zi : z) c *= std::sqrt(q_exp_reciprocal(params, std::norm(zi)));
  return c;
}

double coherent_tail_mass(const DeformationParams& params, std::span<const complex> z,
                          unsigned cutoff) {
  double log_kept = 0.0;
  for (const auto& zi : z) log_kept += std::log1p(-std::min(mode_tail(params, std::norm(zi), cutoff), 1.0));
  return -std::expm1(log_kept);
}

unsigned minimal_cutoff(const DeformationParams& params, std::span<const complex> z,
                        double tail_tol) {
  for (unsigned cutoff = 1; cutoff <= 100000; ++cutoff) {
    if (coherent_tail_mass(params, z, cutoff) <= tail_tol) return cutoff;
  }
  throw InsufficientCutoff("minimal_cutoff: no cutoff below 100000 reaches the tail tolerance");
}

CoherentState build_coherent(const CoherentSpec& spec, double tail_tol) {
  spec.validate();
  const auto& cfg = spec.cfg;
  const auto& params = cfg.params();
  const double tail = coherent_tail_mass(params, spec.z, cfg.cutoff());
  if (tail > tail_tol) {
    throw InsufficientCutoff("insufficient cutoff: truncation drops probability " +
                             std::to_string(tail) + " > " + std::to_string(tail_tol));
  }

  // Per-mode coefficients z^n / sqrt([n]!).
  std::vector<std::vector<complex>> per_mode(cfg.modes(), std::vector<complex>(cfg.cutoff()));
  for (unsigned k = 0; k < cfg.modes(); ++k) {
    complex coeff = 1.0;
    for (unsigned n = 0; n < cfg.cutoff(); ++n) {
      per_mode[k][n] = coeff;
      coeff *= spec.z[k] / std::sqrt(q_number(params, n + 1).value);
    }
  }

  const double c = coherent_norm_constant(params, spec.z);
  StateVector v(cfg.dimension());
  for (std::size_t idx = 0; idx < cfg.dimension(); ++idx) {
    const auto state = decode(cfg, idx);
    complex amplitude = c;
    for (unsigned k = 0; k < cfg.modes(); ++k) amplitude *= per_mode[k][state.occ[k]];
    v[idx] = amplitude;
  }
  return {spec, std::move(v), c, tail};
}

CoherentSpec shifted_spec(const CoherentSpec& spec, unsigned mode) {
  CoherentSpec shifted = spec;
  for (std::size_t k = mode; k < shifted.z.size(); ++k) shifted.z[k] *= spec.cfg.params().q();
  return shifted;
}

EigenvalueReport check_eigenvalue(const CoherentState& state, unsigned mode, double tol) {
  const auto& cfg = state.spec.cfg;
  const auto& params = cfg.params();
  const StateVector lowered = annihilator(cfg, mode).apply(state.vector);

  const CoherentSpec target_spec = shifted_spec(state.spec, mode);
  // The shifted amplitudes are no larger, so its tail is no larger either.
  const CoherentState target = build_coherent(target_spec, 1.0);

  EigenvalueReport report;
  report.mode = mode;
  report.normalization_ratio = state.norm_constant / target.norm_constant;

  const complex factor = state.spec.z[mode - 1] * report.normalization_ratio;
  long double squared = 0.0L;
  for (std::size_t idx = 0; idx < lowered.size(); ++idx) {
    squared += std::norm(lowered[idx] - factor * target.vector[idx]);
  }
  report.residual = static_cast<double>(std::sqrt(squared));

  // Only the top rung n_i = cutoff - 1 of the right-hand side has no
  // counterpart on the left.
  const unsigned top = cfg.cutoff() - 1;
  long double weight = weight_terms(params, std::norm(state.spec.z[mode - 1]), cfg.cutoff())[top];
  for (unsigned k = 0; k < cfg.modes(); ++k) {
    if (k == mode - 1) continue;
    const auto terms = weight_terms(params, std::norm(target_spec.z[k]), cfg.cutoff());
    long double kept = 0.0L;
    for (auto t : terms) kept += t;
    weight *= kept;
  }
  report.truncation_allowance = static_cast<double>(std::abs(state.spec.z[mode - 1]) *
                                                    state.norm_constant * std::sqrt(weight));
  report.pass = std::abs(report.residual - report.truncation_allowance) <= tol;
  return report;
}

std::string to_string(WeightVariant variant) {
  return variant == WeightVariant::paper_q ? "paper-q" : "squared-q";
}

WeightVariant weight_variant_from_string(const std::string& text) {
  if (text == "paper-q" || text == "paper_q") return WeightVariant::paper_q;
  if (text == "squared-q" || text == "squared_q") return WeightVariant::squared_q;
  throw std::invalid_argument("unknown weight variant '" + text + "'");
}

// Per mode, with c(z)^2 = 1/exp_q(|z|^2) cancelling the numerator of the
// weight, the measure (1/pi) d^2z = (1/(2 pi)) dtheta d|z|^2 turns the angular
// integral into 2 pi delta_{m m'} and leaves the radial Jackson integral
//   <m|...|m> = (1/[m]!) int_0^{1/(1-q^2)} x^m / exp_q(s x) d_{q^2}x
// with s = q^2 or s = q depending on the weight variant. Off-diagonal
// elements vanish identically from the angular factor.
CompletenessReport check_completeness(const FockSpaceConfig& cfg, double tol,
                                      WeightVariant variant) {
  if (cfg.modes() > 2) throw std::invalid_argument("check_completeness: modes must be at most 2");
  if (cfg.cutoff() < 4) throw std::invalid_argument("check_completeness: cutoff must be at least 4");
  const auto& params = cfg.params();
  const double scale = variant == WeightVariant::squared_q ? params.q_sq() : params.q();

  CompletenessReport report;
  report.variant = variant;
  report.max_level = cfg.cutoff() - 2;
  for (unsigned m = 0; m <= report.max_level; ++m) {
    report.level_values.push_back(jackson_moment(params, m, scale).value /
                                  q_factorial(params, m).value);
  }
  if (cfg.modes() == 1) {
    for (double v : report.level_values) {
      report.max_diagonal_deviation = std::max(report.max_diagonal_deviation, std::abs(v - 1.0));
    }
  } else {
    for (double v1 : report.level_values) {
      for (double v2 : report.level_values) {
        report.max_diagonal_deviation =
            std::max(report.max_diagonal_deviation, std::abs(v1 * v2 - 1.0));
      }
    }
  }
  report.pass = report.max_diagonal_deviation < tol;
  return report;
}

CompletenessAdjudication adjudicate_completeness(const FockSpaceConfig& cfg, double tol) {
  CompletenessAdjudication result{check_completeness(cfg, tol, WeightVariant::paper_q),
                                  check_completeness(cfg, tol, WeightVariant::squared_q),
                                  std::nullopt};
  if (result.paper_q.pass != result.squared_q.pass) {
    result.consistent = result.squared_q.pass ? WeightVariant::squared_q : WeightVariant::paper_q;
  }
  return result;
}

std::vector<CoherentGridPoint> coherent_grid(const std::vector<double>& qs, std::size_t count,
                                             std::uint64_t seed) {
  if (qs.empty()) throw std::invalid_argument("coherent_grid: q list is empty");
  std::mt19937_64 rng(seed);
  std::vector<CoherentGridPoint> grid;
  for (std::size_t k = 0; k < count; ++k) {
    const double q = qs[k % qs.size()];
    const unsigned modes = 1 + static_cast<unsigned>(k % 2);
    const double radius = DeformationParams(q).radius();
    CoherentGridPoint point{q, {}};
    for (unsigned i = 0; i < modes; ++i) {
      if (k == 0) {
        point.z.emplace_back(0.0, 0.0);
        continue;
      }
      const double abs_sq = 0.8 * radius * (1.0 - uniform01(rng));  // in (0, 0.8 R]
      const double phase = 2.0 * std::numbers::pi * uniform01(rng);
      point.z.push_back(std::polar(std::sqrt(abs_sq), phase));
    }
    grid.push_back(std::move(point));
  }
  return grid;
}

}  // namespace glq
