#include "glq/fock.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace glq {

namespace {

void check_mode(const FockSpaceConfig& cfg, unsigned mode) {
  if (mode < 1 || mode > cfg.modes()) {
    throw std::out_of_range("mode " + std::to_string(mode) + " outside 1.." +
                            std::to_string(cfg.modes()));
  }
}

// Index stride of mode `mode` (1-based); the last mode varies fastest.
std::size_t stride(const FockSpaceConfig& cfg, unsigned mode) {
  std::size_t s = 1;
  for (unsigned k = mode; k < cfg.modes(); ++k) s *= cfg.cutoff();
  return s;
}

unsigned occupation_above(const OccupationState& state, unsigned mode) {
  unsigned total = 0;
  for (std::size_t k = mode; k < state.occ.size(); ++k) total += state.occ[k];
  return total;
}

template <typename Fn>
SparseOperator diagonal_from(const FockSpaceConfig& cfg, Fn&& value_of) {
  std::vector<complex> diag(cfg.dimension());
  for (std::size_t idx = 0; idx < cfg.dimension(); ++idx) diag[idx] = value_of(decode(cfg, idx));
  return SparseOperator::diagonal(diag);
}

}  // namespace

FockSpaceConfig::FockSpaceConfig(unsigned modes, unsigned cutoff, DeformationParams params)
    : modes_(modes), cutoff_(cutoff), params_(params), dimension_(1) {
  if (modes == 0) throw std::invalid_argument("FockSpaceConfig: modes must be positive");
  if (cutoff == 0) throw std::invalid_argument("FockSpaceConfig: cutoff must be positive");
  for (unsigned k = 0; k < modes; ++k) {
    if (dimension_ > kMaxDimension / cutoff) {
      throw std::invalid_argument("FockSpaceConfig: dimension cutoff^modes exceeds " +
                                  std::to_string(kMaxDimension));
    }
    dimension_ *= cutoff;
  }
}

std::size_t encode(const FockSpaceConfig& cfg, const OccupationState& state) {
  if (state.occ.size() != cfg.modes()) {
    throw std::invalid_argument("encode: occupation tuple length differs from mode count");
  }
  std::size_t index = 0;
  for (unsigned n : state.occ) {
    if (n >= cfg.cutoff()) {
      throw std::out_of_range("encode: occupation " + std::to_string(n) + " at or above cutoff");
    }
    index = index * cfg.cutoff() + n;
  }
  return index;
}

OccupationState decode(const FockSpaceConfig& cfg, std::size_t index) {
  if (index >= cfg.dimension()) throw std::out_of_range("decode: index outside basis");
  OccupationState state{std::vector<unsigned>(cfg.modes())};
  for (unsigned k = cfg.modes(); k-- > 0;) {
    state.occ[k] = static_cast<unsigned>(index % cfg.cutoff());
    index /= cfg.cutoff();
  }
  return state;
}

std::vector<bool> interior_mask(const FockSpaceConfig& cfg) {
  std::vector<bool> mask(cfg.dimension());
  for (std::size_t idx = 0; idx < cfg.dimension(); ++idx) {
    const auto state = decode(cfg, idx);
    mask[idx] = std::all_of(state.occ.begin(), state.occ.end(),
                            [&cfg](unsigned n) { return n + 2 <= cfg.cutoff(); });
  }
  return mask;
}

SparseOperator annihilator(const FockSpaceConfig& cfg, unsigned mode) {
  check_mode(cfg, mode);
  const std::size_t step = stride(cfg, mode);
  std::vector<SparseOperator::Triplet> triplets;
  for (std::size_t idx = 0; idx < cfg.dimension(); ++idx) {
    const auto state = decode(cfg, idx);
    const unsigned m = state.occ[mode - 1];
    if (m == 0) continue;
    const double amplitude = std::pow(cfg.params().q(), occupation_above(state, mode)) *
                             std::sqrt(q_number(cfg.params(), m).value);
    triplets.push_back({idx - step, idx, amplitude});
  }
  return SparseOperator::from_triplets(cfg.dimension(), triplets);
}

SparseOperator creator(const FockSpaceConfig& cfg, unsigned mode) {
  check_mode(cfg, mode);
  const std::size_t step = stride(cfg, mode);
  std::vector<SparseOperator::Triplet> triplets;
  for (std::size_t idx = 0; idx < cfg.dimension(); ++idx) {
    const auto state = decode(cfg, idx);
    const unsigned m = state.occ[mode - 1];
    if (m + 1 >= cfg.cutoff()) continue;
    const double amplitude = std::pow(cfg.params().q(), occupation_above(state, mode)) *
                             std::sqrt(q_number(cfg.params(), m + 1).value);
    triplets.push_back({idx + step, idx, amplitude});
  }
  return SparseOperator::from_triplets(cfg.dimension(), triplets);
}

SparseOperator number_op(const FockSpaceConfig& cfg, unsigned mode) {
  check_mode(cfg, mode);
  return diagonal_from(cfg, [mode](const OccupationState& s) {
    return complex(static_cast<double>(s.occ[mode - 1]), 0.0);
  });
}

SparseOperator scale_op(const FockSpaceConfig& cfg, unsigned mode) {
  check_mode(cfg, mode);
  const double q_sq = cfg.params().q_sq();
  return diagonal_from(cfg, [mode, q_sq](const OccupationState& s) {
    return complex(std::pow(q_sq, s.occ[mode - 1]), 0.0);
  });
}

StateVector build_state(const FockSpaceConfig& cfg, const OccupationState& state) {
  const std::size_t target = encode(cfg, state);  // validates the occupations
  (void)target;
  StateVector v(cfg.dimension());
  v[0] = 1.0;
  double normalization = 1.0;
  for (unsigned mode = 1; mode <= cfg.modes(); ++mode) {
    const unsigned n = state.occ[mode - 1];
    if (n == 0) continue;
    const auto raise = creator(cfg, mode);
    for (unsigned k = 0; k < n; ++k) v = raise.apply(v);
    normalization *= q_factorial(cfg.params(), n).value;
  }
  const double scale = 1.0 / std::sqrt(normalization);
  for (auto& x : v) x *= scale;
  return v;
}

LadderSet build_ladder_set(const FockSpaceConfig& cfg) {
  LadderSet ops;
  for (unsigned mode = 1; mode <= cfg.modes(); ++mode) {
    ops.annihilators.push_back(annihilator(cfg, mode));
    ops.creators.push_back(creator(cfg, mode));
    ops.numbers.push_back(number_op(cfg, mode));
    ops.scales.push_back(scale_op(cfg, mode));
  }
  return ops;
}

bool RelationReport::pass() const {
  return std::all_of(relations.begin(), relations.end(),
                     [](const RelationRecord& r) { return r.pass; });
}

const RelationRecord& RelationReport::find(const std::string& name) const {
  for (const auto& r : relations) {
    if (r.name == name) return r;
  }
  throw std::out_of_range("RelationReport: no relation named " + name);
}

const std::vector<std::string>& relation_names() {
  static const std::vector<std::string> names = {
      "creator_ordering",     "annihilator_ordering", "mixed_exchange",
      "diagonal_commutation", "last_mode_commutation", "number_shift",
      "number_factorization", "scale_commutator"};
  return names;
}

RelationReport verify_relations(const FockSpaceConfig& cfg, const LadderSet& ops, double tol) {
  if (cfg.cutoff() < 3) {
    throw std::invalid_argument("verify_algebra: cutoff must be at least 3 for a nonempty interior");
  }
  const unsigned n = cfg.modes();
  const double q = cfg.params().q();
  const double q_sq = cfg.params().q_sq();
  const auto mask = interior_mask(cfg);
  const auto identity = SparseOperator::identity(cfg.dimension());

  const auto& a = ops.annihilators;
  const auto& ad = ops.creators;
  const auto& num = ops.numbers;
  const auto& scale = ops.scales;

  RelationReport report;
  report.tol = tol;
  report.relations.reserve(relation_names().size());  // records are held by reference below
  auto record = [&](const std::string& name, const std::string& identity_text) -> RelationRecord& {
    report.relations.push_back({name, identity_text});
    return report.relations.back();
  };
  auto accumulate = [&mask](RelationRecord& rec, const SparseOperator& difference) {
    rec.max_deviation = std::max(rec.max_deviation, difference.max_abs_on(mask, mask));
    ++rec.instances;
  };

  auto& creators_rec = record("creator_ordering", "a+_i a+_j = q a+_j a+_i (i<j)");
  auto& annihilators_rec = record("annihilator_ordering", "a_i a_j = q^-1 a_j a_i (i<j)");
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = i + 1; j < n; ++j) {
      accumulate(creators_rec, ad[i] * ad[j] - q * (ad[j] * ad[i]));
      accumulate(annihilators_rec, a[i] * a[j] - (1.0 / q) * (a[j] * a[i]));
    }
  }

  auto& mixed_rec = record("mixed_exchange", "a_i a+_j = q a+_j a_i (i!=j)");
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) {
      if (i != j) accumulate(mixed_rec, a[i] * ad[j] - q * (ad[j] * a[i]));
    }
  }

  auto& diag_rec = record("diagonal_commutation",
                          "a_i a+_i = 1 + q^2 a+_i a_i + (q^2-1) sum_{k>i} a+_k a_k (i<n)");
  for (unsigned i = 0; i + 1 < n; ++i) {
    SparseOperator rhs = identity + q_sq * (ad[i] * a[i]);
    for (unsigned k = i + 1; k < n; ++k) rhs += (q_sq - 1.0) * (ad[k] * a[k]);
    accumulate(diag_rec, a[i] * ad[i] - rhs);
  }

  auto& last_rec = record("last_mode_commutation", "a_n a+_n = 1 + q^2 a+_n a_n");
  accumulate(last_rec, a[n - 1] * ad[n - 1] - (identity + q_sq * (ad[n - 1] * a[n - 1])));

  auto& shift_rec = record("number_shift", "[N_i, a_j] = -delta_ij a_j, [N_i, a+_j] = delta_ij a+_j");
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) {
      const double delta = i == j ? 1.0 : 0.0;
      accumulate(shift_rec, commutator(num[i], a[j]) + delta * a[j]);
      accumulate(shift_rec, commutator(num[i], ad[j]) - delta * ad[j]);
    }
  }

  // [N_i] built from the scale operator: (1 - Q_i)/(1 - q^2).
  auto& factor_rec = record("number_factorization", "a+_i a_i = q^{2 sum_{k>i} N_k} [N_i]");
  for (unsigned i = 0; i < n; ++i) {
    SparseOperator weight = identity;
    for (unsigned k = i + 1; k < n; ++k) weight = weight * scale[k];
    const SparseOperator q_number_op = (1.0 / (1.0 - q_sq)) * (identity - scale[i]);
    accumulate(factor_rec, ad[i] * a[i] - weight * q_number_op);
  }

  auto& scale_rec = record("scale_commutator", "[a_i, a+_i] = Q_i Q_{i+1} ... Q_n");
  for (unsigned i = 0; i < n; ++i) {
    SparseOperator product = identity;
    for (unsigned k = i; k < n; ++k) product = product * scale[k];
    accumulate(scale_rec, commutator(a[i], ad[i]) - product);
  }

  for (auto& rec : report.relations) rec.pass = rec.max_deviation < tol;
  return report;
}

RelationReport verify_algebra(const FockSpaceConfig& cfg, double tol) {
  if (cfg.cutoff() < 3) {
    throw std::invalid_argument("verify_algebra: cutoff must be at least 3 for a nonempty interior");
  }
  return verify_relations(cfg, build_ladder_set(cfg), tol);
}

double undeformed_commutator_deviation(const FockSpaceConfig& cfg) {
  const auto mask = interior_mask(cfg);
  const auto identity = SparseOperator::identity(cfg.dimension());
  double worst = 0.0;
  for (unsigned mode = 1; mode <= cfg.modes(); ++mode) {
    const auto c = commutator(annihilator(cfg, mode), creator(cfg, mode)) - identity;
    worst = std::max(worst, c.max_abs_on(mask, mask));
  }
  return worst;
}

}  // namespace glq
