#include "glq/qsym.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <stdexcept>

namespace glq {

namespace {

void check_bounds(unsigned particles, unsigned modes, const SymmetryBounds& bounds) {
  if (particles > bounds.max_particles) {
    throw std::length_error("particle count " + std::to_string(particles) +
                            " exceeds enumeration bound " + std::to_string(bounds.max_particles));
  }
  if (modes > bounds.max_modes) {
    throw std::length_error("mode count " + std::to_string(modes) + " exceeds enumeration bound " +
                            std::to_string(bounds.max_modes));
  }
  if (tensor_dimension(modes, particles) > bounds.max_dimension) {
    throw std::length_error("tensor dimension " + std::to_string(modes) + "^" +
                            std::to_string(particles) + " exceeds the memory guard");
  }
}

std::vector<unsigned> count_letters(const std::vector<unsigned>& letters, unsigned modes) {
  std::vector<unsigned> counts(modes, 0);
  for (unsigned letter : letters) ++counts[letter - 1];
  return counts;
}

double q_power(const DeformationParams& params, int exponent) {
  return std::pow(params.q(), exponent);
}

}  // namespace

Word::Word(std::vector<unsigned> letters, unsigned modes)
    : letters_(std::move(letters)), modes_(modes) {
  if (modes_ == 0) throw std::invalid_argument("Word: mode count must be positive");
  for (unsigned letter : letters_) {
    if (letter < 1 || letter > modes_) {
      throw std::invalid_argument("Word: letter " + std::to_string(letter) + " outside 1.." +
                                  std::to_string(modes_));
    }
  }
  counts_ = count_letters(letters_, modes_);
}

Word Word::parse(std::string_view text, unsigned modes) {
  std::vector<unsigned> letters;
  std::string token;
  std::istringstream in{std::string(text)};
  while (std::getline(in, token, ',')) {
    const auto first = token.find_first_not_of(" \t");
    const auto last = token.find_last_not_of(" \t");
    if (first == std::string::npos) throw std::invalid_argument("Word::parse: empty letter");
    token = token.substr(first, last - first + 1);
    if (token.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument("Word::parse: letter '" + token + "' is not a positive integer");
    }
    letters.push_back(static_cast<unsigned>(std::stoul(token)));
  }
  if (letters.empty()) throw std::invalid_argument("Word::parse: empty word");
  if (modes == 0) modes = *std::max_element(letters.begin(), letters.end());
  return Word(std::move(letters), modes);
}

Word Word::swapped(unsigned k) const {
  if (k < 1 || k >= letters_.size()) {
    throw std::out_of_range("Word::swapped: position " + std::to_string(k) + " outside 1.." +
                            std::to_string(letters_.size() - 1));
  }
  auto letters = letters_;
  std::swap(letters[k - 1], letters[k]);
  return Word(std::move(letters), modes_);
}

bool Word::is_sorted() const { return std::is_sorted(letters_.begin(), letters_.end()); }

std::string Word::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(letters_[i]);
  }
  return out;
}

std::size_t tensor_dimension(unsigned modes, unsigned particles) {
  std::size_t dim = 1;
  for (unsigned k = 0; k < particles; ++k) {
    if (dim > SIZE_MAX / modes) return SIZE_MAX;
    dim *= modes;
  }
  return dim;
}

std::size_t tensor_index(const Word& w) {
  std::size_t index = 0;
  for (unsigned letter : w.letters()) index = index * w.modes() + (letter - 1);
  return index;
}

Word word_at(std::size_t index, unsigned modes, unsigned particles) {
  std::vector<unsigned> letters(particles);
  for (unsigned k = particles; k-- > 0;) {
    letters[k] = static_cast<unsigned>(index % modes) + 1;
    index /= modes;
  }
  return Word(std::move(letters), modes);
}

unsigned inversion_R(std::span<const unsigned> letters) {
  unsigned inversions = 0;
  for (std::size_t k = 0; k < letters.size(); ++k) {
    for (std::size_t l = k + 1; l < letters.size(); ++l) {
      if (letters[k] > letters[l]) ++inversions;
    }
  }
  return inversions;
}

int epsilon(unsigned i, unsigned j) { return (i > j) - (i < j); }

std::vector<Word> distinct_arrangements(const Word& w) {
  auto letters = w.letters();
  std::sort(letters.begin(), letters.end());
  std::vector<Word> arrangements;
  do {
    arrangements.emplace_back(letters, w.modes());
  } while (std::next_permutation(letters.begin(), letters.end()));
  return arrangements;
}

TensorState q_symmetrize(const Word& w, const DeformationParams& params,
                         const SymmetryBounds& bounds) {
  const auto particles = static_cast<unsigned>(w.size());
  check_bounds(particles, w.modes(), bounds);

  double prefactor_sq = 1.0 / q_factorial(params, particles).value;
  for (unsigned c : w.counts()) prefactor_sq *= q_factorial(params, c).value;
  const double prefactor = std::sqrt(prefactor_sq);
  const unsigned base_inversions = inversion_R(w);

  TensorState state{w.modes(), particles, StateVector(tensor_dimension(w.modes(), particles))};
  for (const auto& s : distinct_arrangements(w)) {
    const int exponent = static_cast<int>(base_inversions + inversion_R(s));
    state.amplitudes[tensor_index(s)] += prefactor * q_power(params, exponent);
  }
  return state;
}

TensorState bosonic_symmetrize(const Word& w, const SymmetryBounds& bounds) {
  const auto particles = static_cast<unsigned>(w.size());
  check_bounds(particles, w.modes(), bounds);
  const auto arrangements = distinct_arrangements(w);
  const double amplitude = 1.0 / std::sqrt(static_cast<double>(arrangements.size()));
  TensorState state{w.modes(), particles, StateVector(tensor_dimension(w.modes(), particles))};
  for (const auto& s : arrangements) state.amplitudes[tensor_index(s)] = amplitude;
  return state;
}

ExchangeReport exchange_check(const Word& w, unsigned k, const DeformationParams& params,
                              double tol, const SymmetryBounds& bounds) {
  const Word other = w.swapped(k);
  ExchangeReport report;
  report.position = k;
  report.exponent = epsilon(w.letters()[k - 1], w.letters()[k]);
  const auto lhs = q_symmetrize(w, params, bounds);
  const auto rhs = q_symmetrize(other, params, bounds);
  const double factor = q_power(params, report.exponent);
  for (std::size_t i = 0; i < lhs.amplitudes.size(); ++i) {
    report.deviation =
        std::max(report.deviation, std::abs(lhs.amplitudes[i] - factor * rhs.amplitudes[i]));
  }
  report.pass = report.deviation < tol;
  return report;
}

SparseOperator transposition_op(unsigned particles, unsigned modes, unsigned k,
                                const DeformationParams& params, const SymmetryBounds& bounds) {
  check_bounds(particles, modes, bounds);
  if (k < 1 || k >= particles) {
    throw std::out_of_range("transposition_op: position " + std::to_string(k) + " outside 1.." +
                            std::to_string(particles > 0 ? particles - 1 : 0));
  }
  const std::size_t dim = tensor_dimension(modes, particles);
  std::vector<SparseOperator::Triplet> triplets;
  triplets.reserve(dim);
  for (std::size_t idx = 0; idx < dim; ++idx) {
    const Word source = word_at(idx, modes, particles);
    const int e = epsilon(source.letters()[k - 1], source.letters()[k]);
    triplets.push_back({tensor_index(source.swapped(k)), idx, q_power(params, -e)});
  }
  return SparseOperator::from_triplets(dim, triplets);
}

SparseOperator reverse_transposition_op(unsigned particles, unsigned modes, unsigned k,
                                        const DeformationParams& params,
                                        const SymmetryBounds& bounds) {
  check_bounds(particles, modes, bounds);
  if (k < 1 || k >= particles) {
    throw std::out_of_range("reverse_transposition_op: position outside range");
  }
  const std::size_t dim = tensor_dimension(modes, particles);
  std::vector<SparseOperator::Triplet> triplets;
  triplets.reserve(dim);
  for (std::size_t idx = 0; idx < dim; ++idx) {
    // `image` = q^{-eps(a,b)} |.., b, a, ..> came from |.., a, b, ..>; send it back.
    const Word image = word_at(idx, modes, particles);
    const Word origin = image.swapped(k);
    const int e = epsilon(origin.letters()[k - 1], origin.letters()[k]);
    triplets.push_back({tensor_index(origin), idx, q_power(params, e)});
  }
  return SparseOperator::from_triplets(dim, triplets);
}

NormIdentity norm_identity_exact(std::span<const unsigned> counts, const SymmetryBounds& bounds) {
  if (counts.empty()) throw std::invalid_argument("norm_identity_exact: counts must be nonempty");
  std::vector<unsigned> letters;
  for (unsigned k = 0; k < counts.size(); ++k) letters.insert(letters.end(), counts[k], k + 1);
  if (letters.size() > bounds.max_particles) {
    throw std::length_error("norm_identity_exact: particle count exceeds enumeration bound");
  }

  // Tally arrangements by inversion count, then build the polynomial once.
  std::vector<unsigned long> by_inversions;
  do {
    const unsigned r = inversion_R(letters);
    if (r >= by_inversions.size()) by_inversions.resize(r + 1, 0);
    ++by_inversions[r];
  } while (std::next_permutation(letters.begin(), letters.end()));

  NormIdentity result;
  for (unsigned r = 0; r < by_inversions.size(); ++r) {
    if (by_inversions[r] != 0) {
      result.arrangement_sum += QPolynomial::monomial(mpq_class(by_inversions[r]), 2 * r);
    }
  }
  result.multinomial = poly_q_multinomial(counts);
  return result;
}

double fundamental_norm(const Word& w, const DeformationParams& params,
                        const SymmetryBounds& bounds) {
  const auto state = q_symmetrize(w, params, bounds);
  const double n = norm(state.amplitudes);
  return n * n;
}

std::vector<std::vector<unsigned>> occupancy_vectors(unsigned slots, unsigned max_total) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> current(slots, 0);
  auto recurse = [&](auto&& self, unsigned slot, unsigned remaining) -> void {
    if (slot == slots) {
      out.push_back(current);
      return;
    }
    for (unsigned c = 0; c <= remaining; ++c) {
      current[slot] = c;
      self(self, slot + 1, remaining - c);
    }
    current[slot] = 0;
  };
  if (slots > 0) recurse(recurse, 0, max_total);
  return out;
}

}  // namespace glq
