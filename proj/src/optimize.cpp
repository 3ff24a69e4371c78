#include "gapshift/optimize.hpp"

#include <algorithm>
#include <stdexcept>

#include "gapshift/census.hpp"
#include "gapshift/measures.hpp"

namespace gapshift {

Rational zero_density(const CyclicWord& orbit) {
  long long zeros = static_cast<long long>(
      std::count(orbit.period.begin(), orbit.period.end(), 0));
  return Rational(zeros, static_cast<long long>(orbit.length()));
}

OptimizationResult ergodic_optimum(const GappedSubshiftSpec& spec,
                                   const Observable& phi, long long N,
                                   const ResourceCaps& caps, int threads) {
  if (N < 1) throw std::invalid_argument("ergodic_optimum: N < 1");
  OptimizationResult out;
  bool have_best = false;

  for (long long n = 1; n <= N; ++n) {
    PeriodicCensus census = periodic_points(spec, n, caps, threads);
    OptimizationResult::PeriodRow row;
    row.period = n;
    for (const auto& orbit : census.orbits) {
      if (orbit.period != n) continue;  // primitive orbits only at their own n
      CyclicWord cyc(orbit.rep);
      Rational avg = birkhoff_average_cyclic(cyc, phi, n);
      if (!row.best || avg > *row.best) {
        row.best = avg;
        row.argmax = orbit.rep;
      }
      if (orbit.zero_density == 0) {
        if (!out.zero_free_best || avg > *out.zero_free_best)
          out.zero_free_best = avg;
      } else {
        if (!out.zero_containing_best || avg > *out.zero_containing_best)
          out.zero_containing_best = avg;
      }
      if (!have_best || avg > out.best) {
        out.best = avg;
        out.argmax = orbit.rep;
        out.argmax_set.clear();
        have_best = true;
      }
      if (avg == out.best) out.argmax_set.push_back(orbit.rep);
    }
    out.table.push_back(std::move(row));
  }
  return out;
}

}  // namespace gapshift
