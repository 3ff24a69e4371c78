/* optimize.hpp -- ergodic optimization over periodic orbits: per-period
 * maxima, global periodic lower bound for the maximal average, and the
 * zero-free / zero-containing dichotomy. */
#pragma once

#include <optional>
#include <vector>

#include "gapshift/gapped.hpp"
#include "gapshift/observable.hpp"
#include "gapshift/rational.hpp"
#include "gapshift/word.hpp"

namespace gapshift {

// Exact fraction of gap symbols in one period.
Rational zero_density(const CyclicWord& orbit);

struct OptimizationResult {
  Rational best;                     // max phi-average over periods <= N
  Word argmax;                       // canonical primitive rep attaining best
  std::vector<Word> argmax_set;      // all such reps, sorted (period, word)
  struct PeriodRow {
    long long period = 0;
    std::optional<Rational> best;    // max over primitive orbits, if any
    std::optional<Word> argmax;      // lex-least rep attaining the row max
  };
  std::vector<PeriodRow> table;      // one row per period 1..N
  std::optional<Rational> zero_free_best;
  std::optional<Rational> zero_containing_best;
};

// Maximizes the phi-average over all periodic orbits of period <= N
// (averages over one period, windows wrapping). Periodic lower bound for the
// maximum ergodic average.
OptimizationResult ergodic_optimum(const GappedSubshiftSpec& spec,
                                   const Observable& phi, long long N,
                                   const ResourceCaps& caps = {},
                                   int threads = 1);

}  // namespace gapshift
