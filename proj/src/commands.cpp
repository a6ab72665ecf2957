#include "glq/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <random>

#include "glq/fock.hpp"
#include "glq/qcore.hpp"
#include "glq/qpoly.hpp"
#include "glq/qsym.hpp"

namespace glq {

namespace {

const std::vector<double> kDefaultQs{0.3, 0.5, 0.9};

constexpr double kAlgebraTol = 1e-12;
constexpr double kQExpTol = 1e-12;
constexpr double kJacksonTol = 1e-10;
constexpr double kNormalizationTol = 1e-10;
constexpr double kEigenvalueTol = 1e-9;
constexpr double kCompletenessTol = 1e-10;
constexpr double kSymmetricTol = 1e-13;

constexpr std::size_t kExhaustiveWordLimit = 4096;
constexpr std::size_t kRandomWords = 100;
constexpr std::size_t kCoherentGridSize = 20;
constexpr std::size_t kQExpSamples = 50;

using Clock = std::chrono::steady_clock;

std::vector<double> resolved_qs(const RunConfig& c) { return c.qs.empty() ? kDefaultQs : c.qs; }

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

CheckRecord timed(const std::function<CheckRecord()>& fn) {
  const auto start = Clock::now();
  CheckRecord record = fn();
  record.millis = elapsed_ms(start);
  return record;
}

Json complex_json(complex z) { return Json::array({z.real(), z.imag()}); }

Json complex_list_json(const std::vector<complex>& zs) {
  Json list = Json::array();
  for (const auto& z : zs) list.push_back(complex_json(z));
  return list;
}

Json counts_json(const std::vector<unsigned>& counts) {
  Json list = Json::array();
  for (unsigned c : counts) list.push_back(c);
  return list;
}

Json base_config(const std::string& verb, const RunConfig& c, const std::vector<double>& qs) {
  Json config;
  config["verb"] = verb;
  config["q"] = qs;
  config["seed"] = c.seed;
  config["format"] = c.format == OutputFormat::json ? "json" : "text";
  return config;
}

std::uint64_t mix_seed(std::uint64_t seed, double q) {
  return seed ^ static_cast<std::uint64_t>(std::llround(q * 1e9)) * 0x9E3779B97F4A7C15ULL;
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

void require_symmetric_bounds(unsigned particles, unsigned modes) {
  const SymmetryBounds bounds;
  if (particles > bounds.max_particles || modes > bounds.max_modes) {
    throw ConfigError("refusing N=" + std::to_string(particles) + ", modes=" +
                      std::to_string(modes) + ": enumeration bounds are N <= " +
                      std::to_string(bounds.max_particles) + ", modes <= " +
                      std::to_string(bounds.max_modes));
  }
  if (tensor_dimension(modes, particles) > bounds.max_dimension) {
    throw ConfigError("refusing modes^N above the tensor memory guard");
  }
}

std::string relation_tag(const std::string& relation) {
  if (relation == "number_factorization") return "number-factorization";
  if (relation == "scale_commutator") return "scale-commutator";
  return "defining-relations";
}

}  // namespace

void validate(const RunConfig& c) {
  for (double q : c.qs) {
    if (!(q > 0.0 && q < 1.0)) {
      throw ConfigError("--q values must lie strictly between 0 and 1, got " + format_value(q));
    }
  }
  if (c.tol && !(*c.tol > 0.0)) throw ConfigError("--tol must be positive");
  if (c.modes && *c.modes == 0) throw ConfigError("--modes must be positive");
  if (c.cutoff && *c.cutoff == 0) throw ConfigError("--cutoff must be positive");
  if (c.particles && *c.particles == 0) throw ConfigError("--N must be positive");
}

complex parse_complex(const std::string& text) {
  try {
    const auto colon = text.find(':');
    std::size_t used = 0;
    if (colon == std::string::npos) {
      const double re = std::stod(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {re, 0.0};
    }
    const std::string re_text = text.substr(0, colon);
    const std::string im_text = text.substr(colon + 1);
    const double re = std::stod(re_text, &used);
    if (used != re_text.size()) throw std::invalid_argument(text);
    const double im = std::stod(im_text, &used);
    if (used != im_text.size()) throw std::invalid_argument(text);
    return {re, im};
  } catch (const std::logic_error&) {
    throw ConfigError("cannot parse complex value '" + text + "' (expected re or re:im)");
  }
}

int exit_status(const Report& report) { return report.pass() ? 0 : 1; }

Report run_verify_algebra(const RunConfig& c) {
  validate(c);
  const auto qs = resolved_qs(c);
  const unsigned modes = c.modes.value_or(2);
  const unsigned cutoff = c.cutoff.value_or(5);
  const double tol = c.tol.value_or(kAlgebraTol);
  if (cutoff < 3) throw ConfigError("verify algebra needs --cutoff >= 3 (nonempty interior)");

  Report report;
  report.config = base_config("verify algebra", c, qs);
  report.config["modes"] = modes;
  report.config["cutoff"] = cutoff;
  report.config["tolerances"] = {{"algebra", tol}};
  report.config["inject_fault"] = c.inject_fault;

  for (double q : qs) {
    std::optional<FockSpaceConfig> cfg;
    try {
      cfg.emplace(modes, cutoff, DeformationParams(q));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
    const auto start = Clock::now();
    LadderSet ops = build_ladder_set(*cfg);
    if (c.inject_fault) {
      std::vector<unsigned> ground(modes, 0);
      std::vector<unsigned> excited = ground;
      excited[0] = 1;
      const auto row = encode(*cfg, {ground});
      const auto col = encode(*cfg, {excited});
      auto& a1 = ops.annihilators[0];
      a1 = a1.with_entry(row, col, 1.1 * a1.at(row, col));
    }
    const auto relations = verify_relations(*cfg, ops, tol);
    const double per_record = elapsed_ms(start) / static_cast<double>(relations.relations.size());
    for (const auto& rel : relations.relations) {
      CheckRecord rec;
      rec.name = "algebra." + rel.name;
      rec.paper_ref = relation_tag(rel.name);
      rec.params = {{"q", q}, {"modes", modes}, {"cutoff", cutoff}, {"instances", rel.instances}};
      rec.deviation = rel.max_deviation;
      rec.pass = rel.pass;
      rec.millis = per_record;
      if (c.inject_fault) rec.note = "fault injected into a_1 on |1,0,...> -> |0,...>";
      report.checks.push_back(std::move(rec));
    }
  }
  report.sort_checks();
  return report;
}

Report run_coherent_check(const RunConfig& c) {
  validate(c);
  const auto qs = resolved_qs(c);
  const double tol_norm = c.tol.value_or(kNormalizationTol);
  const double tol_eig = c.tol.value_or(kEigenvalueTol);
  const double tol_complete = c.tol.value_or(kCompletenessTol);
  const unsigned completeness_modes = c.modes.value_or(2);
  const unsigned completeness_cutoff = c.cutoff.value_or(12);
  if (completeness_modes > 2) throw ConfigError("coherent check supports --modes <= 2");

  Report report;
  report.config = base_config("coherent check", c, qs);
  report.config["modes"] = completeness_modes;
  report.config["cutoff"] = c.cutoff ? Json(*c.cutoff) : Json("auto");
  report.config["completeness_cutoff"] = completeness_cutoff;
  report.config["weight_variant"] = to_string(c.weight_variant);
  report.config["tolerances"] = {
      {"normalization", tol_norm}, {"eigenvalue", tol_eig}, {"completeness", tol_complete}};

  std::vector<CoherentGridPoint> specs;
  if (!c.z.empty()) {
    report.config["z"] = complex_list_json(c.z);
    for (double q : qs) specs.push_back({q, c.z});
  } else {
    report.config["grid_points"] = kCoherentGridSize;
    specs = coherent_grid(qs, kCoherentGridSize, c.seed);
  }

  for (const auto& point : specs) {
    const DeformationParams params(point.q);
    const auto modes = static_cast<unsigned>(point.z.size());
    Json base = {{"q", point.q}, {"z", complex_list_json(point.z)}};
    const auto start = Clock::now();

    auto failure = [&](const std::string& why) {
      CheckRecord rec;
      rec.name = "coherent.normalization";
      rec.paper_ref = "coherent-normalization";
      rec.params = base;
      rec.note = why;
      rec.pass = false;
      rec.millis = elapsed_ms(start);
      report.checks.push_back(std::move(rec));
    };

    const bool inside = std::all_of(point.z.begin(), point.z.end(), [&params](complex z) {
      return std::norm(z) < params.radius();
    });
    if (!inside) {
      failure("domain error: |z|^2 must be below 1/(1-q^2) = " + format_value(params.radius()));
      continue;
    }
    // Truncation at the top rung must stay well below the eigenvalue tolerance.
    const double tail_target = std::min(tol_norm, 1e-2 * tol_eig * tol_eig);
    const unsigned cutoff =
        c.cutoff ? *c.cutoff : minimal_cutoff(params, point.z, tail_target);
    base["cutoff"] = cutoff;

    std::optional<CoherentState> state;
    try {
      state = build_coherent({point.z, FockSpaceConfig(modes, cutoff, params)}, tol_norm);
    } catch (const InsufficientCutoff& e) {
      failure(e.what());
      continue;
    } catch (const std::invalid_argument& e) {
      failure(e.what());
      continue;
    }

    CheckRecord norm_rec;
    norm_rec.name = "coherent.normalization";
    norm_rec.paper_ref = "coherent-normalization";
    norm_rec.params = base;
    norm_rec.params["tail_mass"] = state->tail_mass;
    const double squared = std::pow(norm(state->vector), 2);
    norm_rec.deviation = std::abs(squared + state->tail_mass - 1.0);
    norm_rec.value = squared;
    norm_rec.pass = *norm_rec.deviation < tol_norm;
    norm_rec.millis = elapsed_ms(start);
    report.checks.push_back(std::move(norm_rec));

    for (unsigned mode = 1; mode <= modes; ++mode) {
      report.checks.push_back(timed([&] {
        const auto eig = check_eigenvalue(*state, mode, tol_eig);
        CheckRecord rec;
        rec.name = "coherent.eigenvalue";
        rec.paper_ref = "twisted-eigenvalue";
        rec.params = base;
        rec.params["mode"] = mode;
        rec.params["truncation_allowance"] = eig.truncation_allowance;
        rec.params["normalization_ratio"] = eig.normalization_ratio;
        rec.deviation = eig.residual;
        rec.pass = eig.pass && eig.residual < tol_eig + eig.truncation_allowance;
        return rec;
      }));
    }
  }

  for (double q : qs) {
    std::optional<FockSpaceConfig> cfg;
    try {
      cfg.emplace(completeness_modes, completeness_cutoff, DeformationParams(q));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
    if (completeness_cutoff < 4) {
      CheckRecord rec;
      rec.name = "coherent.completeness";
      rec.paper_ref = "resolution-of-identity";
      rec.params = {{"q", q}, {"cutoff", completeness_cutoff}};
      rec.note = "completeness needs cutoff >= 4";
      rec.pass = false;
      report.checks.push_back(std::move(rec));
      continue;
    }
    const auto start = Clock::now();
    const auto verdict = adjudicate_completeness(*cfg, tol_complete);
    const double half = elapsed_ms(start) / 2.0;
    const auto& chosen =
        c.weight_variant == WeightVariant::squared_q ? verdict.squared_q : verdict.paper_q;

    CheckRecord rec;
    rec.name = "coherent.completeness";
    rec.paper_ref = "resolution-of-identity";
    rec.params = {{"q", q},
                  {"variant", to_string(c.weight_variant)},
                  {"modes", completeness_modes},
                  {"cutoff", completeness_cutoff},
                  {"max_level", chosen.max_level}};
    rec.deviation = chosen.max_diagonal_deviation;
    rec.pass = chosen.pass;
    rec.millis = half;
    report.checks.push_back(std::move(rec));

    CheckRecord verdict_rec;
    verdict_rec.name = "coherent.completeness_adjudication";
    verdict_rec.paper_ref = "resolution-of-identity";
    verdict_rec.params = {{"q", q},
                          {"modes", completeness_modes},
                          {"cutoff", completeness_cutoff},
                          {"paper_q_deviation", verdict.paper_q.max_diagonal_deviation},
                          {"squared_q_deviation", verdict.squared_q.max_diagonal_deviation},
                          {"consistent_variant",
                           verdict.consistent ? to_string(*verdict.consistent) : "none"}};
    verdict_rec.note =
        "weight exp_q(|z|^2)/exp_q(s|z|^2) with s = q (paper-q) or s = q^2 (squared-q); measure 1/pi per "
        "mode; off-diagonal elements vanish by the angular integral";
    verdict_rec.pass = verdict.consistent.has_value();
    verdict_rec.millis = half;
    report.checks.push_back(std::move(verdict_rec));
  }
  report.sort_checks();
  return report;
}

Report run_qsym_exchange(const RunConfig& c) {
  validate(c);
  const auto qs = resolved_qs(c);
  const unsigned particles = c.particles.value_or(4);
  const unsigned modes = c.modes.value_or(3);
  const double tol = c.tol.value_or(kSymmetricTol);
  require_symmetric_bounds(particles, modes);
  if (particles < 2) throw ConfigError("qsym exchange needs --N >= 2");

  Report report;
  report.config = base_config("qsym exchange", c, qs);
  report.config["N"] = particles;
  report.config["modes"] = modes;
  report.config["tolerances"] = {{"qsym", tol}};

  const std::size_t dim = tensor_dimension(modes, particles);
  const bool exhaustive = dim <= kExhaustiveWordLimit;
  report.config["word_selection"] = exhaustive ? "all" : "random";

  for (double q : qs) {
    const DeformationParams params(q);
    std::vector<Word> words;
    if (exhaustive) {
      for (std::size_t idx = 0; idx < dim; ++idx) words.push_back(word_at(idx, modes, particles));
    } else {
      std::mt19937_64 rng(mix_seed(c.seed, q));
      for (std::size_t k = 0; k < kRandomWords; ++k) words.push_back(word_at(rng() % dim, modes, particles));
    }
    const Json base = {{"q", q}, {"N", particles}, {"modes", modes}};

    report.checks.push_back(timed([&] {
      double worst = 0.0;
      for (const auto& w : words) {
        for (unsigned k = 1; k < particles; ++k) {
          worst = std::max(worst, exchange_check(w, k, params, tol).deviation);
        }
      }
      CheckRecord rec;
      rec.name = "qsym.exchange";
      rec.paper_ref = "exchange-relation";
      rec.params = base;
      rec.params["words"] = words.size();
      rec.deviation = worst;
      rec.pass = worst < tol;
      return rec;
    }));

    std::vector<SparseOperator> transpositions;
    for (unsigned k = 1; k < particles; ++k) {
      transpositions.push_back(transposition_op(particles, modes, k, params));
    }
    const auto identity = SparseOperator::identity(dim);

    report.checks.push_back(timed([&] {
      double worst = 0.0;
      for (unsigned k = 1; k < particles; ++k) {
        const auto reverse = reverse_transposition_op(particles, modes, k, params);
        worst = std::max(worst, (reverse * transpositions[k - 1] - identity).max_abs());
        worst = std::max(worst, (transpositions[k - 1] * reverse - identity).max_abs());
      }
      CheckRecord rec;
      rec.name = "qsym.transposition_inverse";
      rec.paper_ref = "transposition-inverse";
      rec.params = base;
      rec.deviation = worst;
      rec.pass = worst < tol;
      return rec;
    }));

    report.checks.push_back(timed([&] {
      double worst = 0.0;
      std::size_t multisets = 0;
      for (std::size_t idx = 0; idx < dim; ++idx) {
        const Word w = word_at(idx, modes, particles);
        if (!w.is_sorted()) continue;
        ++multisets;
        const auto state = q_symmetrize(w, params);
        for (const auto& p : transpositions) {
          const auto image = p.apply(state.amplitudes);
          for (std::size_t i = 0; i < dim; ++i) {
            worst = std::max(worst, std::abs(image[i] - state.amplitudes[i]));
          }
        }
      }
      CheckRecord rec;
      rec.name = "qsym.transposition_invariance";
      rec.paper_ref = "deformed-transposition";
      rec.params = base;
      rec.params["multisets"] = multisets;
      rec.deviation = worst;
      rec.pass = worst < tol;
      return rec;
    }));

    report.checks.push_back(timed([&] {
      double worst = 0.0;
      std::size_t pairs = 0;
      for (unsigned k = 1; k < particles; ++k) {
        for (unsigned l = k + 2; l < particles; ++l) {
          ++pairs;
          worst = std::max(worst, commutator(transpositions[k - 1], transpositions[l - 1]).max_abs());
        }
      }
      CheckRecord rec;
      rec.name = "qsym.transposition_locality";
      rec.paper_ref = "deformed-transposition";
      rec.params = base;
      rec.params["pairs"] = pairs;
      rec.deviation = worst;
      rec.pass = worst < tol;
      return rec;
    }));
  }
  report.sort_checks();
  return report;
}

Report run_qsym_norm(const RunConfig& c) {
  validate(c);
  const auto qs = resolved_qs(c);
  const double tol = c.tol.value_or(kSymmetricTol);

  Report report;
  report.config = base_config("qsym norm", c, qs);
  report.config["tolerances"] = {{"qsym", tol}};

  if (c.word) {
    Word w = [&] {
      try {
        return Word::parse(*c.word, c.modes.value_or(0));
      } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
      }
    }();
    require_symmetric_bounds(static_cast<unsigned>(w.size()), w.modes());
    report.config["word"] = w.to_string();
    for (double q : qs) {
      report.checks.push_back(timed([&] {
        const DeformationParams params(q);
        const double value = fundamental_norm(w, params);
        const double expected = std::pow(q, 2.0 * inversion_R(w));
        CheckRecord rec;
        rec.name = "qsym.norm";
        rec.paper_ref = "fundamental-norm";
        rec.params = {{"q", q}, {"word", w.to_string()}, {"inversions", inversion_R(w)}};
        rec.value = value;
        rec.deviation = std::abs(value - expected);
        rec.pass = *rec.deviation < tol;
        return rec;
      }));
    }
    report.sort_checks();
    return report;
  }

  const unsigned particles = c.particles.value_or(4);
  const unsigned modes = c.modes.value_or(3);
  require_symmetric_bounds(particles, modes);
  report.config["N"] = particles;
  report.config["modes"] = modes;
  const std::size_t dim = tensor_dimension(modes, particles);

  for (double q : qs) {
    const DeformationParams params(q);
    const Json base = {{"q", q}, {"N", particles}, {"modes", modes}};
    report.checks.push_back(timed([&] {
      double worst = 0.0;
      std::size_t sorted = 0;
      for (std::size_t idx = 0; idx < dim; ++idx) {
        const Word w = word_at(idx, modes, particles);
        if (!w.is_sorted()) continue;
        ++sorted;
        worst = std::max(worst, std::abs(fundamental_norm(w, params) - 1.0));
      }
      CheckRecord rec;
      rec.name = "qsym.fundamental_norm";
      rec.paper_ref = "fundamental-norm";
      rec.params = base;
      rec.params["words"] = sorted;
      rec.deviation = worst;
      rec.pass = worst < tol;
      return rec;
    }));
    report.checks.push_back(timed([&] {
      std::mt19937_64 rng(mix_seed(c.seed, q));
      double worst = 0.0;
      for (std::size_t k = 0; k < kRandomWords; ++k) {
        const Word w = word_at(rng() % dim, modes, particles);
        const double expected = std::pow(q, 2.0 * inversion_R(w));
        worst = std::max(worst, std::abs(fundamental_norm(w, params) - expected));
      }
      CheckRecord rec;
      rec.name = "qsym.norm_law";
      rec.paper_ref = "fundamental-norm";
      rec.params = base;
      rec.params["words"] = kRandomWords;
      rec.deviation = worst;
      rec.pass = worst < tol;
      return rec;
    }));
  }
  report.sort_checks();
  return report;
}

Report run_qsym_identity(const RunConfig& c) {
  validate(c);
  const auto qs = resolved_qs(c);
  const unsigned max_total = c.particles.value_or(8);
  const unsigned slots = c.modes.value_or(4);
  const double tol = c.tol.value_or(kSymmetricTol);
  if (max_total > SymmetryBounds{}.max_particles) {
    throw ConfigError("refusing N=" + std::to_string(max_total) + ": enumeration bound is N <= " +
                      std::to_string(SymmetryBounds{}.max_particles));
  }
  if (slots > SymmetryBounds{}.max_modes) throw ConfigError("refusing modes above enumeration bound");

  Report report;
  report.config = base_config("qsym identity", c, qs);
  report.config["N"] = max_total;
  report.config["modes"] = slots;
  report.config["exact"] = c.exact;
  const auto all_counts = occupancy_vectors(slots, max_total);

  if (c.exact) {
    for (const auto& counts : all_counts) {
      report.checks.push_back(timed([&] {
        const auto identity = norm_identity_exact(counts);
        CheckRecord rec;
        rec.name = "qsym.identity";
        rec.paper_ref = "multiset-inversion-identity";
        rec.params = {{"counts", counts_json(counts)}};
        rec.exact_match = identity.exact_match();
        rec.note = identity.multinomial.to_string();
        rec.pass = *rec.exact_match;
        return rec;
      }));
    }
  } else {
    report.config["tolerances"] = {{"qsym", tol}};
    for (double q : qs) {
      report.checks.push_back(timed([&] {
        const DeformationParams params(q);
        double worst = 0.0;
        for (const auto& counts : all_counts) {
          std::vector<unsigned> letters;
          for (unsigned k = 0; k < counts.size(); ++k) letters.insert(letters.end(), counts[k], k + 1);
          long double sum = 0.0L;
          do {
            sum += std::pow(static_cast<long double>(q), 2.0L * inversion_R(letters));
          } while (std::next_permutation(letters.begin(), letters.end()));
          const double expected = q_multinomial(params, counts).value;
          worst = std::max(worst, std::abs(static_cast<double>(sum) - expected) / expected);
        }
        CheckRecord rec;
        rec.name = "qsym.identity_numeric";
        rec.paper_ref = "multiset-inversion-identity";
        rec.params = {{"q", q}, {"N", max_total}, {"modes", slots}, {"cases", all_counts.size()}};
        rec.deviation = worst;
        rec.pass = worst < tol;
        return rec;
      }));
    }
  }
  report.sort_checks();
  return report;
}

Report run_qsym_appendix(const RunConfig& c) {
  validate(c);
  const unsigned max_total = c.particles.value_or(8);
  const unsigned slots = c.modes.value_or(4);
  if (max_total > SymmetryBounds{}.max_particles) {
    throw ConfigError("refusing N=" + std::to_string(max_total) + ": enumeration bound is N <= " +
                      std::to_string(SymmetryBounds{}.max_particles));
  }
  if (slots > SymmetryBounds{}.max_modes) throw ConfigError("refusing modes above enumeration bound");

  Report report;
  report.config = base_config("qsym appendix", c, resolved_qs(c));
  report.config["N"] = max_total;
  report.config["modes"] = slots;

  for (const auto& counts : occupancy_vectors(slots, max_total)) {
    report.checks.push_back(timed([&] {
      unsigned total = 0;
      for (unsigned n : counts) total += n;
      const QPolynomial target = poly_q_number(total + 1);
      bool all = true;
      for (unsigned slot = 1; slot <= slots; ++slot) {
        all = all && poly_appendix_J(counts, slot) == target;
      }
      CheckRecord rec;
      rec.name = "qsym.appendix";
      rec.paper_ref = "inductive-step-identity";
      rec.params = {{"counts", counts_json(counts)}, {"slots", slots}};
      rec.exact_match = all;
      rec.note = target.to_string();
      rec.pass = all;
      return rec;
    }));
  }
  report.sort_checks();
  return report;
}

Report run_qexp_eval(const RunConfig& c) {
  validate(c);
  const auto qs = resolved_qs(c);
  const double tol = c.tol.value_or(kQExpTol);

  Report report;
  report.config = base_config("qexp eval", c, qs);
  report.config["tolerances"] = {{"qexp", tol}};
  if (!c.x.empty()) report.config["x"] = complex_list_json(c.x);
  else report.config["samples"] = kQExpSamples;

  struct Deviations {
    double agreement;
    double functional;
    complex value;
  };
  auto evaluate = [](const DeformationParams& params, complex x) {
    const auto series = q_exp_series_adaptive(params, x);
    const auto product = q_exp_product_adaptive(params, x);
    const auto shifted = q_exp_series_adaptive(params, params.q_sq() * x);
    const complex factor = 1.0 - (1.0 - params.q_sq()) * x;
    return Deviations{std::abs(series.value - product.value) / std::abs(product.value),
                      std::abs(shifted.value - factor * series.value) / std::abs(series.value),
                      series.value};
  };

  for (double q : qs) {
    const DeformationParams params(q);
    if (!c.x.empty()) {
      for (const auto& x : c.x) {
        const Json base = {{"q", q}, {"x", complex_json(x)}};
        const auto start = Clock::now();
        try {
          const auto d = evaluate(params, x);
          const double half = elapsed_ms(start) / 2.0;
          CheckRecord agree;
          agree.name = "qexp.series_product";
          agree.paper_ref = "q-exp-product-form";
          agree.params = base;
          agree.params["value"] = complex_json(d.value);
          agree.deviation = d.agreement;
          agree.pass = d.agreement < tol;
          agree.millis = half;
          report.checks.push_back(std::move(agree));
          CheckRecord functional;
          functional.name = "qexp.functional_equation";
          functional.paper_ref = "q-exp-functional-equation";
          functional.params = base;
          functional.deviation = d.functional;
          functional.pass = d.functional < tol;
          functional.millis = half;
          report.checks.push_back(std::move(functional));
        } catch (const std::domain_error& e) {
          CheckRecord rec;
          rec.name = "qexp.series_product";
          rec.paper_ref = "q-exp-product-form";
          rec.params = base;
          rec.note = e.what();
          rec.pass = false;
          rec.millis = elapsed_ms(start);
          report.checks.push_back(std::move(rec));
        }
      }
      continue;
    }
    const auto start = Clock::now();
    std::mt19937_64 rng(mix_seed(c.seed, q));
    double worst_agreement = 0.0;
    double worst_functional = 0.0;
    for (std::size_t k = 0; k < kQExpSamples; ++k) {
      const double r = 0.9 * params.radius() * std::sqrt(uniform01(rng));
      const double theta = 2.0 * std::numbers::pi * uniform01(rng);
      const auto d = evaluate(params, std::polar(r, theta));
      worst_agreement = std::max(worst_agreement, d.agreement);
      worst_functional = std::max(worst_functional, d.functional);
    }
    const double half = elapsed_ms(start) / 2.0;
    const Json base = {{"q", q}, {"samples", kQExpSamples}, {"disk_fraction", 0.9}};
    CheckRecord agree;
    agree.name = "qexp.series_product";
    agree.paper_ref = "q-exp-product-form";
    agree.params = base;
    agree.deviation = worst_agreement;
    agree.pass = worst_agreement < tol;
    agree.millis = half;
    report.checks.push_back(std::move(agree));
    CheckRecord functional;
    functional.name = "qexp.functional_equation";
    functional.paper_ref = "q-exp-functional-equation";
    functional.params = base;
    functional.deviation = worst_functional;
    functional.pass = worst_functional < tol;
    functional.millis = half;
    report.checks.push_back(std::move(functional));
  }
  report.sort_checks();
  return report;
}

Report run_jackson_moments(const RunConfig& c) {
  validate(c);
  const auto qs = resolved_qs(c);
  const unsigned max_n = c.particles.value_or(10);
  const double tol = c.tol.value_or(kJacksonTol);

  Report report;
  report.config = base_config("jackson moments", c, qs);
  report.config["N"] = max_n;
  report.config["tolerances"] = {{"jackson", tol}};

  for (double q : qs) {
    const DeformationParams params(q);
    for (unsigned n = 0; n <= max_n; ++n) {
      report.checks.push_back(timed([&] {
        const double value = jackson_moment(params, n, params.q_sq()).value;
        const double expected = q_factorial(params, n).value;
        CheckRecord rec;
        rec.name = "jackson.moment";
        rec.paper_ref = "jackson-moments";
        rec.params = {{"q", q}, {"n", n}};
        rec.value = value;
        rec.deviation = std::abs(value - expected) / expected;
        rec.pass = *rec.deviation < tol;
        return rec;
      }));
    }
  }
  report.sort_checks();
  return report;
}

}  // namespace glq
