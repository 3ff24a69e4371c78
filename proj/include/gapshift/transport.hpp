/* transport.hpp -- finite-support Wasserstein distance with certified
 * interval bounds, and the empirical-measure perturbation bound. */
#pragma once

#include <utility>
#include <vector>

#include "gapshift/rational.hpp"
#include "gapshift/word.hpp"

namespace gapshift {

// Finitely many atoms delta_{[w]} with rational weights; all prefix words
// share one length L. Zero-weight atoms are dropped on construction.
struct FiniteMeasure {
  std::size_t prefix_length = 0;
  std::vector<std::pair<Word, Rational>> atoms;  // distinct words, weights sum to 1
};

FiniteMeasure make_finite_measure(std::vector<std::pair<Word, Rational>> atoms);

// Uniform measure on the listed points (duplicates merge weight).
FiniteMeasure uniform_measure(const std::vector<Word>& points);

struct TransportInterval {
  Rational lo, hi;
};

// Certified bounds on the first Wasserstein distance: the optimal-transport
// problem is solved exactly twice, with ground costs the lo respectively hi
// endpoints of word_distance_interval per atom pair. Throws
// std::invalid_argument("L mismatch") when prefix lengths differ.
TransportInterval wasserstein(const FiniteMeasure& mu, const FiniteMeasure& nu);

// Perturbation bound for empirical measures: with at least (1-delta)n index
// pairs certified within 2^-m, the hi transport bound between the uniform
// measures on xs and ys must be <= 2^-m + 2*delta + 2^-(L-1). Returns the
// verdict; throws std::invalid_argument("length mismatch") on ragged input
// and InfeasibleError when too few pairs are certified.
bool perturbation_bound_check(const std::vector<Word>& xs,
                              const std::vector<Word>& ys, int m,
                              const Rational& delta);

}  // namespace gapshift
