/* measures.hpp -- empirical measures, Birkhoff averages, oscillation
 * diagnostics at checkpoints. All values exact rationals. */
#pragma once

#include <map>
#include <vector>

#include "gapshift/observable.hpp"
#include "gapshift/rational.hpp"
#include "gapshift/word.hpp"

namespace gapshift {

// delta_x^n at cylinder depth k: weight of [w] is the frequency of w among
// the n windows x_i..x_{i+k-1}, 0 <= i < n.
struct EmpiricalMeasure {
  int depth = 1;
  std::map<Word, Rational> weights;
};

// Requires |x| >= n + k - 1.
EmpiricalMeasure empirical_measure(const Word& x, long long n, int k);

// (1/n) sum_{i<n} phi(f^i x), exact. Requires |x| >= n + depth - 1.
Rational birkhoff_average(const Word& x, const Observable& phi, long long n);

// Same along the periodic point w^inf (windows wrap).
Rational birkhoff_average_cyclic(const CyclicWord& x, const Observable& phi,
                                 long long n);

struct OscillationResult {
  Rational min_avg, max_avg, gap;
};

// min/max of birkhoff_average over the checkpoints and their difference; a
// positive gap is the finite-time irregularity certificate.
OscillationResult oscillation(const Word& x, const Observable& phi,
                              const std::vector<long long>& checkpoints);

}  // namespace gapshift
