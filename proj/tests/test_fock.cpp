#include <cmath>

#include "doctest.h"
#include "glq/fock.hpp"
#include "oracles.hpp"

using glq::FockSpaceConfig;
using glq::OccupationState;
using glq::complex;

namespace {

FockSpaceConfig space(unsigned modes, unsigned cutoff, double q) {
  return FockSpaceConfig(modes, cutoff, glq::DeformationParams(q));
}

complex element(const glq::SparseOperator& op, const FockSpaceConfig& cfg, OccupationState to,
                OccupationState from) {
  return op.at(glq::encode(cfg, to), glq::encode(cfg, from));
}

}  // namespace

TEST_CASE("ladder matrix elements") {
  const auto cfg = space(2, 5, 0.5);
  CHECK(element(glq::annihilator(cfg, 1), cfg, {{0, 0}}, {{1, 0}}) == complex(1.0));
  CHECK(element(glq::annihilator(cfg, 1), cfg, {{0, 1}}, {{1, 1}}) == complex(0.5));
  CHECK(element(glq::creator(cfg, 1), cfg, {{1, 0}}, {{0, 0}}) == complex(1.0));
  CHECK(element(glq::creator(cfg, 1), cfg, {{1, 1}}, {{0, 1}}) == complex(0.5));
  for (unsigned i = 1; i <= 2; ++i) {
    const auto vac = glq::build_state(cfg, {{0, 0}});
    for (const auto& amp : glq::annihilator(cfg, i).apply(vac)) CHECK(amp == complex(0.0));
  }
  CHECK(element(glq::number_op(cfg, 2), cfg, {{1, 3}}, {{1, 3}}) == complex(3.0));
  const auto total = glq::number_op(cfg, 1) + glq::number_op(cfg, 2);
  CHECK(element(total, cfg, {{1, 1}}, {{1, 1}}) == complex(2.0));
  CHECK(element(glq::scale_op(cfg, 1), cfg, {{2, 0}}, {{2, 0}}) == complex(0.0625));
  CHECK(element(glq::scale_op(cfg, 2), cfg, {{0, 0}}, {{0, 0}}) == complex(1.0));
}

TEST_CASE("ladder elements match the closed form on every basis state") {
  for (double q : {0.3, 0.8}) {
    const auto cfg = space(3, 4, q);
    for (unsigned i = 1; i <= 3; ++i) {
      const auto a = glq::annihilator(cfg, i);
      for (std::size_t idx = 0; idx < cfg.dimension(); ++idx) {
        auto s = glq::decode(cfg, idx);
        if (s.occ[i - 1] == 0) continue;
        unsigned above = 0;
        for (unsigned j = i; j < 3; ++j) above += s.occ[j];
        const double expected = std::pow(q, above) * std::sqrt(oracle::q_int(q, s.occ[i - 1]));
        auto t = s;
        --t.occ[i - 1];
        CHECK(std::abs(element(a, cfg, t, s) - expected) < 1e-15);
      }
    }
  }
}

TEST_CASE("creator is the adjoint of the annihilator") {
  const auto cfg = space(3, 4, 0.6);
  for (unsigned i = 1; i <= 3; ++i)
    CHECK((glq::creator(cfg, i) - glq::annihilator(cfg, i).adjoint()).max_abs() == 0.0);
}

TEST_CASE("index round trip") {
  const auto cfg = space(3, 5, 0.5);
  CHECK(cfg.dimension() == 125);
  for (std::size_t idx = 0; idx < cfg.dimension(); ++idx)
    CHECK(glq::encode(cfg, glq::decode(cfg, idx)) == idx);
  CHECK(glq::encode(cfg, {{1, 0, 0}}) == 25);
  CHECK_THROWS_AS(FockSpaceConfig(0, 3, glq::DeformationParams(0.5)), std::invalid_argument);
  CHECK_THROWS_AS(FockSpaceConfig(8, 20, glq::DeformationParams(0.5)), std::invalid_argument);
}

TEST_CASE("build_state") {
  const auto cfg = space(2, 5, 0.5);
  const auto vac = glq::build_state(cfg, {{0, 0}});
  CHECK(vac[0] == complex(1.0));
  const auto s11 = glq::build_state(cfg, {{1, 1}});
  CHECK(std::abs(s11[glq::encode(cfg, {{1, 1}})] - 1.0) < 1e-15);
  for (std::size_t idx = 0; idx < cfg.dimension(); ++idx) {
    const auto s = glq::build_state(cfg, glq::decode(cfg, idx));
    CHECK(std::abs(glq::norm(s) - 1.0) < 1e-12);
    CHECK(std::abs(std::abs(s[idx]) - 1.0) < 1e-12);
  }
  CHECK_THROWS_AS(glq::build_state(cfg, {{5, 0}}), std::out_of_range);
}

TEST_CASE("relation grid") {
  for (double q : {0.3, 0.5, 0.9})
    for (unsigned modes : {1u, 2u, 3u})
      for (unsigned cutoff : {4u, 6u}) {
        const auto report = glq::verify_algebra(space(modes, cutoff, q), 1e-12);
        CHECK(report.relations.size() == glq::relation_names().size());
        for (const auto& r : report.relations) {
          INFO(r.name << " q=" << q << " modes=" << modes << " cutoff=" << cutoff);
          CHECK(r.pass);
          CHECK(r.max_deviation < 1e-12);
        }
      }
  CHECK_THROWS_AS(glq::verify_algebra(space(2, 2, 0.5), 1e-12), std::invalid_argument);
}

TEST_CASE("number conservation") {
  const auto cfg = space(2, 5, 0.7);
  const auto total = glq::number_op(cfg, 1) + glq::number_op(cfg, 2);
  for (unsigned i = 1; i <= 2; ++i)
    for (unsigned j = 1; j <= 2; ++j) {
      const auto pair = glq::creator(cfg, i) * glq::annihilator(cfg, j);
      CHECK(glq::commutator(total, pair).max_abs() < 1e-13);
    }
}

TEST_CASE("negative control flags the affected relations") {
  const auto cfg = space(2, 5, 0.5);
  auto ops = glq::build_ladder_set(cfg);
  const auto row = glq::encode(cfg, {{0, 0}}), col = glq::encode(cfg, {{1, 0}});
  ops.annihilators[0] = ops.annihilators[0].with_entry(row, col, 1.1);
  const auto report = glq::verify_relations(cfg, ops, 1e-12);
  CHECK_FALSE(report.pass());
  CHECK(report.find("creator_ordering").pass);
  CHECK_FALSE(report.find("annihilator_ordering").pass);
}

TEST_CASE("classical limit of the diagonal commutator") {
  const double q = 0.999;
  const auto dev = glq::undeformed_commutator_deviation(space(2, 5, q));
  CHECK(dev > 0.0);
  CHECK(dev < 20 * (1 - q * q));
  const double dev_far = glq::undeformed_commutator_deviation(space(2, 5, 0.99));
  CHECK(dev_far / dev == doctest::Approx((1 - 0.99 * 0.99) / (1 - q * q)).epsilon(0.05));
}

TEST_CASE("coordinate text round trip") {
  const auto cfg = space(2, 4, 0.37);
  const auto a = glq::annihilator(cfg, 1) + glq::creator(cfg, 2) * complex(0.0, 0.3);
  const auto text = a.to_coordinate_text();
  CHECK((glq::SparseOperator::from_coordinate_text(cfg.dimension(), text) - a).max_abs() == 0.0);
}
