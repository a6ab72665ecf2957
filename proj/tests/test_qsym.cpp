#include <algorithm>
#include <cmath>
#include <set>

#include "doctest.h"
#include "glq/qsym.hpp"
#include "oracles.hpp"

using glq::DeformationParams;
using glq::Word;
using glq::complex;

namespace {

double distance(const glq::StateVector& a, const glq::StateVector& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

// Brute-force q-symmetric state from std::next_permutation over the letters.
glq::StateVector oracle_qsym(const std::vector<unsigned>& w, unsigned modes, double q) {
  std::vector<unsigned> s = w;
  std::sort(s.begin(), s.end());
  std::vector<unsigned> counts(modes, 0);
  for (auto l : w) ++counts[l - 1];
  double pref = 1.0 / oracle::q_fact(q, static_cast<unsigned>(w.size()));
  for (auto c : counts) pref *= oracle::q_fact(q, c);
  pref = std::sqrt(pref);
  std::size_t dim = 1;
  for (std::size_t i = 0; i < w.size(); ++i) dim *= modes;
  glq::StateVector v(dim, 0.0);
  do {
    std::size_t idx = 0;
    for (auto l : s) idx = idx * modes + (l - 1);
    v[idx] = pref * std::pow(q, oracle::inversions(w) + oracle::inversions(s));
  } while (std::next_permutation(s.begin(), s.end()));
  return v;
}

}  // namespace

TEST_CASE("inversion count and sign") {
  CHECK(glq::inversion_R(Word({1, 2, 3}, 3)) == 0);
  CHECK(glq::inversion_R(Word({2, 1}, 2)) == 1);
  CHECK(glq::inversion_R(Word({2, 1, 1}, 2)) == 2);
  CHECK(glq::epsilon(3, 3) == 0);
  CHECK(glq::epsilon(2, 1) == 1);
  CHECK(glq::epsilon(1, 2) == -1);
  oracle::Gen gen(21);
  for (int i = 0; i < 200; ++i) {
    const auto w = gen.word(1 + gen.below(8), 4);
    CHECK(glq::inversion_R(w) == oracle::inversions(w));
  }
}

TEST_CASE("word parsing and indexing") {
  const auto w = Word::parse("1,2,2,3");
  CHECK(w.modes() == 3);
  CHECK(w.counts() == std::vector<unsigned>{1, 2, 1});
  CHECK(w.to_string() == "1,2,2,3");
  CHECK(w.swapped(1) == Word({2, 1, 2, 3}, 3));
  CHECK(glq::tensor_dimension(3, 4) == 81);
  for (std::size_t i = 0; i < 81; ++i) CHECK(glq::tensor_index(glq::word_at(i, 3, 4)) == i);
  CHECK_THROWS(Word::parse("1,x"));
  CHECK_THROWS(Word({0, 1}, 2));
  CHECK_THROWS_AS(glq::q_symmetrize(Word(std::vector<unsigned>(11, 1), 1), DeformationParams(0.5)),
                  std::length_error);
}

TEST_CASE("q-symmetric state examples") {
  const double q = 0.5;
  const DeformationParams p(q);
  const auto s12 = glq::q_symmetrize(Word({1, 2}, 2), p).amplitudes;
  const double inv = 1.0 / std::sqrt(1 + q * q);
  CHECK(std::abs(s12[1] - inv) < 1e-15);
  CHECK(std::abs(s12[2] - q * inv) < 1e-15);
  const auto s21 = glq::q_symmetrize(Word({2, 1}, 2), p).amplitudes;
  CHECK(std::abs(s21[1] - q * inv) < 1e-15);
  CHECK(std::abs(s21[2] - q * q * inv) < 1e-15);
  const auto same = glq::q_symmetrize(Word({2, 2, 2}, 3), p).amplitudes;
  CHECK(same[glq::tensor_index(Word({2, 2, 2}, 3))] == complex(1.0));
}

TEST_CASE("q-symmetric states match the brute-force oracle") {
  oracle::Gen gen(9);
  for (int i = 0; i < 60; ++i) {
    const double q = gen.uniform(0.1, 0.95);
    const unsigned modes = 1 + gen.below(4);
    const auto w = gen.word(1 + gen.below(6), modes);
    const auto got = glq::q_symmetrize(Word(w, modes), DeformationParams(q)).amplitudes;
    CHECK(distance(got, oracle_qsym(w, modes, q)) < 1e-14);
  }
}

TEST_CASE("exchange relation") {
  const DeformationParams p(0.5);
  const auto eq = glq::exchange_check(Word({1, 1, 2}, 2), 1, p);
  CHECK(eq.exponent == 0);
  CHECK(eq.deviation == 0.0);
  const auto r = glq::exchange_check(Word({1, 2}, 2), 1, p);
  CHECK(r.exponent == -1);
  CHECK(r.pass);
  oracle::Gen gen(13);
  for (int i = 0; i < 200; ++i) {
    const unsigned n = 2 + gen.below(5);
    const Word w(gen.word(n, 4), 4);
    const auto rep = glq::exchange_check(w, 1 + gen.below(n - 1), DeformationParams(gen.uniform(0.1, 0.95)));
    CHECK(rep.deviation < 1e-13);
  }
}

TEST_CASE("transposition operators") {
  const DeformationParams p(0.6);
  for (unsigned k = 1; k <= 2; ++k) {
    const auto P = glq::transposition_op(3, 3, k, p);
    const auto Pr = glq::reverse_transposition_op(3, 3, k, p);
    const auto id = glq::SparseOperator::identity(P.dim());
    CHECK((Pr * P - id).max_abs() < 1e-15);
    CHECK((P * Pr - id).max_abs() < 1e-15);
    const Word eqw({2, 2, 1}, 3);
    glq::StateVector basis(P.dim(), 0.0);
    basis[glq::tensor_index(eqw)] = 1.0;
    if (k == 1) CHECK(distance(P.apply(basis), basis) == 0.0);
    // q-symmetric states are fixed by every P_{k,k+1}
    oracle::Gen gen(k);
    for (int i = 0; i < 20; ++i) {
      const auto v = glq::q_symmetrize(Word(gen.word(3, 3), 3), p).amplitudes;
      CHECK(distance(P.apply(v), v) < 1e-13);
    }
  }
}

TEST_CASE("norm identity exact") {
  const std::vector<unsigned> ones{1, 1}, two_one{2, 1}, single{5};
  const auto a = glq::norm_identity_exact(ones);
  CHECK(a.exact_match());
  CHECK(a.arrangement_sum == glq::QPolynomial::parse("1 + q^2"));
  CHECK(glq::norm_identity_exact(two_one).arrangement_sum == glq::QPolynomial::parse("1 + q^2 + q^4"));
  CHECK(glq::norm_identity_exact(single).arrangement_sum == glq::QPolynomial(1));
  for (const auto& counts : glq::occupancy_vectors(3, 6)) CHECK(glq::norm_identity_exact(counts).exact_match());
  std::set<std::vector<unsigned>> unique;
  for (const auto& c : glq::occupancy_vectors(3, 2)) unique.insert(c);
  CHECK(unique.size() == 10);
}

TEST_CASE("fundamental norms") {
  const DeformationParams p(0.5);
  CHECK(glq::fundamental_norm(Word({1, 1, 2, 3}, 3), p) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(glq::fundamental_norm(Word({2, 1}, 2), p) == doctest::Approx(0.25).epsilon(1e-13));
  CHECK(glq::fundamental_norm(Word({3}, 3), p) == 1.0);
  oracle::Gen gen(17);
  for (int i = 0; i < 100; ++i) {
    const double q = gen.uniform(0.2, 0.95);
    const auto w = gen.word(1 + gen.below(6), 4);
    CHECK(glq::fundamental_norm(Word(w, 4), DeformationParams(q)) ==
          doctest::Approx(std::pow(q, 2 * oracle::inversions(w))).epsilon(1e-12));
  }
}

TEST_CASE("classical limit overlap") {
  const DeformationParams p(0.999);
  for (const auto& letters : {std::vector<unsigned>{1, 2}, {1, 1, 2, 3}, {1, 2, 3, 4, 4}}) {
    const Word w(letters, 4);
    const auto a = glq::q_symmetrize(w, p).amplitudes;
    const auto b = glq::bosonic_symmetrize(w).amplitudes;
    CHECK(std::abs(glq::inner_product(b, a)) >= 0.99);
  }
}
