#include <cmath>

#include "doctest.h"
#include "glq/coherent.hpp"
#include "oracles.hpp"

using glq::CoherentSpec;
using glq::DeformationParams;
using glq::FockSpaceConfig;
using glq::complex;

namespace {

CoherentSpec spec(double q, unsigned cutoff, std::vector<complex> z) {
  const auto modes = static_cast<unsigned>(z.size());
  return CoherentSpec{std::move(z), FockSpaceConfig(modes, cutoff, DeformationParams(q))};
}

// c * prod z_k^{n_k}/sqrt([n_k]!) with c from the oracle exponential.
complex oracle_amplitude(double q, const std::vector<complex>& z, const std::vector<unsigned>& occ) {
  complex a = 1.0;
  for (std::size_t k = 0; k < z.size(); ++k) {
    a /= std::sqrt(static_cast<double>(std::real(oracle::exp_q(q, std::norm(z[k])))));
    a *= std::pow(z[k], occ[k]) / std::sqrt(oracle::q_fact(q, occ[k]));
  }
  return a;
}

}  // namespace

TEST_CASE("vacuum coherent state") {
  const auto st = glq::build_coherent(spec(0.5, 4, {0.0, 0.0}));
  CHECK(st.norm_constant == 1.0);
  CHECK(st.vector[0] == complex(1.0));
  for (std::size_t i = 1; i < st.vector.size(); ++i) CHECK(st.vector[i] == complex(0.0));
  const auto ev = glq::check_eigenvalue(st, 1, 1e-9);
  CHECK(ev.residual == 0.0);
  CHECK(ev.pass);
}

TEST_CASE("single-mode normalization against the oracle series") {
  const double q = 0.5;
  const auto s = spec(q, glq::minimal_cutoff(DeformationParams(q), std::vector<complex>{0.5}, 1e-14), {0.5});
  const auto st = glq::build_coherent(s);
  double sum = 0.0;
  for (unsigned n = 0; n < 200; ++n) sum += std::pow(0.25, n) / oracle::q_fact(q, n);
  CHECK(st.norm_constant == doctest::Approx(1.0 / std::sqrt(sum)).epsilon(1e-13));
  CHECK(std::abs(glq::norm(st.vector) * glq::norm(st.vector) + st.tail_mass - 1.0) < 1e-10);
  for (unsigned n = 0; n + 1 < s.cfg.cutoff(); ++n) {
    const complex ratio = st.vector[n + 1] / st.vector[n];
    CHECK(std::abs(ratio - 0.5 / std::sqrt(oracle::q_int(q, n + 1))) < 1e-14);
  }
}

TEST_CASE("amplitudes match the closed form") {
  const std::vector<complex> z{{0.4, 0.2}, {-0.3, 0.5}};
  const auto st = glq::build_coherent(spec(0.7, 30, z));
  for (std::size_t idx = 0; idx < st.vector.size(); idx += 37) {
    const auto occ = glq::decode(st.spec.cfg, idx).occ;
    CHECK(std::abs(st.vector[idx] - oracle_amplitude(0.7, z, occ)) < 1e-14);
  }
}

TEST_CASE("twisted eigenvalue relation") {
  const std::vector<complex> z{0.4, 0.3};
  const DeformationParams p(0.5);
  const auto cutoff = glq::minimal_cutoff(p, z, 1e-20);
  const auto st = glq::build_coherent(spec(0.5, cutoff, z));
  for (unsigned mode = 1; mode <= 2; ++mode) {
    const auto ev = glq::check_eigenvalue(st, mode, 1e-9);
    CHECK(ev.pass);
    CHECK(ev.residual < 1e-9);
  }
  const auto shifted = glq::shifted_spec(st.spec, 2);
  CHECK(shifted.z == st.spec.z);
  CHECK(glq::check_eigenvalue(st, 2, 1e-9).normalization_ratio == 1.0);
  const auto s1 = glq::shifted_spec(st.spec, 1);
  CHECK(s1.z[1] == 0.5 * z[1]);

  // a_1 |z> against z_1 times the unnormalized shifted series, all from the oracle.
  const auto lowered = glq::annihilator(st.spec.cfg, 1).apply(st.vector);
  const std::vector<complex> zs{z[0], 0.5 * z[1]};
  const double rescale = std::sqrt(static_cast<double>(std::real(oracle::exp_q(0.5, std::norm(zs[1])))) /
                                   static_cast<double>(std::real(oracle::exp_q(0.5, std::norm(z[1])))));
  double worst = 0.0;
  for (std::size_t idx = 0; idx < lowered.size(); ++idx) {
    const auto occ = glq::decode(st.spec.cfg, idx).occ;
    if (occ[0] + 1 >= cutoff) continue;
    worst = std::max(worst, std::abs(lowered[idx] - z[0] * rescale * oracle_amplitude(0.5, zs, occ)));
  }
  CHECK(worst < 1e-13);
}

TEST_CASE("guards") {
  CHECK_THROWS_AS(glq::build_coherent(spec(0.5, 3, {0.4, 0.3})), glq::InsufficientCutoff);
  CHECK_THROWS_AS(glq::build_coherent(spec(0.5, 10, {3.0})), glq::DomainError);
  CoherentSpec mismatch{{0.1}, FockSpaceConfig(2, 4, DeformationParams(0.5))};
  CHECK_THROWS_AS(mismatch.validate(), std::invalid_argument);
}

TEST_CASE("completeness adjudication") {
  for (double q : {0.3, 0.5, 0.9}) {
    const FockSpaceConfig cfg(2, 12, DeformationParams(q));
    const auto adj = glq::adjudicate_completeness(cfg, 1e-10);
    REQUIRE(adj.consistent.has_value());
    CHECK(*adj.consistent == glq::WeightVariant::squared_q);
    CHECK(adj.squared_q.pass);
    CHECK(adj.squared_q.max_diagonal_deviation < 1e-10);
    CHECK(std::abs(adj.squared_q.level_values[0] - 1.0) < 1e-12);
    CHECK_FALSE(adj.paper_q.pass);
  }
  const FockSpaceConfig one(1, 6, DeformationParams(0.5));
  const auto paper = glq::check_completeness(one, 1e-10, glq::WeightVariant::paper_q);
  CHECK(std::abs(paper.level_values[3] - 1.0) > 1e-3);
  CHECK(std::abs(glq::check_completeness(one, 1e-10, glq::WeightVariant::squared_q).level_values[3] - 1.0) < 1e-10);
  CHECK_THROWS_AS(glq::check_completeness(FockSpaceConfig(3, 6, DeformationParams(0.5)), 1e-10,
                                          glq::WeightVariant::squared_q),
                  std::invalid_argument);
}

TEST_CASE("variant names") {
  CHECK(glq::to_string(glq::WeightVariant::paper_q) == "paper-q");
  CHECK(glq::weight_variant_from_string("squared-q") == glq::WeightVariant::squared_q);
  CHECK_THROWS(glq::weight_variant_from_string("cubed-q"));
}

TEST_CASE("grid is deterministic and inside the disk") {
  const auto a = glq::coherent_grid({0.3, 0.5, 0.9}, 20, 1);
  const auto b = glq::coherent_grid({0.3, 0.5, 0.9}, 20, 1);
  REQUIRE(a.size() == 20);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].q == b[i].q);
    CHECK(a[i].z == b[i].z);
    for (auto zk : a[i].z) CHECK(std::norm(zk) <= 0.8 / (1 - a[i].q * a[i].q));
  }
}
