/* schedule.hpp -- oscillating-point construction: alternate long stretches of
 * a dense periodic layout with long stretches of zeros so that Birkhoff
 * averages of the zero-cylinder indicator provably oscillate at the phase-end
 * checkpoints. */
#pragma once

#include <vector>

#include "gapshift/gapped.hpp"
#include "gapshift/word.hpp"

namespace gapshift {

struct SchedulePhase {
  enum class Kind { ZWord, Zeros } kind = Kind::Zeros;
  Word w;                // ZWord only: the repeated base-language block
  long long length = 0;  // symbols emitted by this phase
};

struct OscillationSchedule {
  std::vector<SchedulePhase> phases;
  // Cumulative phase end positions; the oscillation certificate is evaluated
  // at these checkpoints.
  std::vector<long long> checkpoints() const {
    std::vector<long long> cs;
    long long acc = 0;
    for (const auto& p : phases) cs.push_back(acc += p.length);
    return cs;
  }
  long long total_length() const {
    long long acc = 0;
    for (const auto& p : phases) acc += p.length;
    return acc;
  }
};

// Alternating ZWord/Zeros phases with lengths factor^1, ..., factor^phases.
// The default (w = single base symbol, factor 4, 4 phases) is the smallest
// schedule whose checkpoint averages straddle a gap >= 0.3 for tau = 1.
OscillationSchedule make_geometric_schedule(const Word& w, long long factor,
                                            int num_phases);

// Emits the schedule as one word: ZWord phases stream (w . 0^r)^inf with
// r = required_zero_run(|final nonzero run of w|), Zeros phases stream 0; the
// result is truncated or zero-extended to length N and must be admissible
// (throws InfeasibleError("inadmissible schedule") otherwise).
Word build_oscillating_point(const GappedSubshiftSpec& spec,
                             const OscillationSchedule& sched, long long N,
                             const ResourceCaps& caps = {});

}  // namespace gapshift
