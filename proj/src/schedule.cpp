#include "gapshift/schedule.hpp"

#include <algorithm>
#include <stdexcept>

#include "gapshift/errors.hpp"

namespace gapshift {

OscillationSchedule make_geometric_schedule(const Word& w, long long factor,
                                            int num_phases) {
  if (w.empty()) throw std::invalid_argument("make_geometric_schedule: empty word");
  if (factor < 2) throw std::invalid_argument("make_geometric_schedule: factor < 2");
  if (num_phases < 1) throw std::invalid_argument("make_geometric_schedule: no phases");
  OscillationSchedule s;
  long long len = factor;
  for (int j = 0; j < num_phases; ++j, len *= factor) {
    SchedulePhase p;
    p.kind = (j % 2 == 0) ? SchedulePhase::Kind::ZWord : SchedulePhase::Kind::Zeros;
    if (p.kind == SchedulePhase::Kind::ZWord) p.w = w;
    p.length = len;
    s.phases.push_back(std::move(p));
  }
  return s;
}

Word build_oscillating_point(const GappedSubshiftSpec& spec,
                             const OscillationSchedule& sched, long long N,
                             const ResourceCaps& caps) {
  if (N < 1) throw std::invalid_argument("build_oscillating_point: N < 1");
  if (sched.phases.empty()) throw InfeasibleError("inadmissible schedule");
  for (std::size_t i = 0; i < sched.phases.size(); ++i) {
    const auto& p = sched.phases[i];
    if (p.length < 1) throw InfeasibleError("inadmissible schedule");
    if (p.kind == SchedulePhase::Kind::ZWord &&
        (p.w.empty() || !contains_word(spec, p.w, caps)))
      throw InfeasibleError("inadmissible schedule");
    if (i > 0 && p.kind == sched.phases[i - 1].kind)
      throw InfeasibleError("inadmissible schedule");
  }

  Word out;
  out.reserve(static_cast<std::size_t>(N));
  for (const auto& p : sched.phases) {
    if (static_cast<long long>(out.size()) >= N) break;
    if (p.kind == SchedulePhase::Kind::Zeros) {
      for (long long k = 0; k < p.length && static_cast<long long>(out.size()) < N; ++k)
        out.push_back(0);
      continue;
    }
    // unit = w . 0^r with r covering the final nonzero run of w
    long long run = 0;
    for (auto it = p.w.rbegin(); it != p.w.rend() && *it != 0; ++it) ++run;
    Word unit = p.w;
    long long r = run > 0 ? required_zero_run(spec, run) : 0;
    unit.insert(unit.end(), static_cast<std::size_t>(r), 0);
    for (long long k = 0; k < p.length && static_cast<long long>(out.size()) < N; ++k)
      out.push_back(unit[static_cast<std::size_t>(k % static_cast<long long>(unit.size()))]);
  }
  while (static_cast<long long>(out.size()) < N) out.push_back(0);

  if (!contains_word(spec, out, caps))
    throw InfeasibleError("inadmissible schedule");
  return out;
}

}  // namespace gapshift
