#include "gapshift/census.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <stdexcept>

#include "gapshift/counting.hpp"
#include "gapshift/errors.hpp"

namespace gapshift {

namespace {

struct ShardResult {
  long long strings = 0;
  std::map<Word, long long> orbit_reps;  // canonical primitive rep -> period
};

// Enumerate admissible-cyclic strings of length n with first symbol `first`.
// Prefix pruning uses the linear machine: a cyclically admissible string is in
// particular linearly admissible, so every prefix must keep stepping.
ShardResult census_shard(const GappedSubshiftSpec& spec,
                         std::shared_ptr<const GappedStateMachine> machine,
                         long long n, Symbol first, const ResourceCaps& caps) {
  ShardResult out;
  const int A = machine->ambient_size();
  Word cur;
  std::vector<GappedStateMachine::State> stack{machine->initial()};
  std::size_t nodes = 0;

  auto rec = [&](auto&& self, Symbol sym) -> void {
    if (++nodes > caps.max_enumeration)
      throw ResourceCapError("resource limit exceeded");
    auto nxt = machine->step(stack.back(), sym);
    if (!nxt) return;
    cur.push_back(sym);
    stack.push_back(*nxt);
    if (static_cast<long long>(cur.size()) == n) {
      if (cyclic_admissible(spec, cur, caps)) {
        ++out.strings;
        std::size_t p = minimal_period(cur);
        Word prim(cur.begin(), cur.begin() + static_cast<long>(p));
        out.orbit_reps.emplace(canonical_rotation(prim), static_cast<long long>(p));
      }
    } else {
      for (Symbol a = 0; a < A; ++a) self(self, a);
    }
    stack.pop_back();
    cur.pop_back();
  };
  rec(rec, first);
  return out;
}

}  // namespace

PeriodicCensus periodic_points(const GappedSubshiftSpec& spec, long long n,
                               const ResourceCaps& caps, int threads) {
  if (n < 1) throw std::invalid_argument("periodic_points: n < 1");
  if (base_has_substitution(spec.base))
    throw ConfigError("periodic census unsupported for substitution bases");

  auto machine = std::make_shared<const GappedStateMachine>(spec, caps);
  const int A = machine->ambient_size();

  std::vector<ShardResult> shards(static_cast<std::size_t>(A));
  if (threads > 1 && A > 1) {
    std::vector<std::future<ShardResult>> futs;
    futs.reserve(static_cast<std::size_t>(A));
    for (Symbol a = 0; a < A; ++a)
      futs.push_back(std::async(std::launch::async, census_shard, std::cref(spec),
                                machine, n, a, std::cref(caps)));
    for (Symbol a = 0; a < A; ++a) shards[static_cast<std::size_t>(a)] = futs[static_cast<std::size_t>(a)].get();
  } else {
    for (Symbol a = 0; a < A; ++a)
      shards[static_cast<std::size_t>(a)] = census_shard(spec, machine, n, a, caps);
  }

  PeriodicCensus census;
  census.n = n;
  census.count = 0;
  std::map<Word, long long> reps;
  for (const auto& sh : shards) {
    census.count += sh.strings;
    reps.insert(sh.orbit_reps.begin(), sh.orbit_reps.end());
  }
  census.orbits.reserve(reps.size());
  for (const auto& [rep, period] : reps) {
    long long zeros = static_cast<long long>(std::count(rep.begin(), rep.end(), 0));
    census.orbits.push_back({rep, period, Rational(zeros, period)});
  }
  std::sort(census.orbits.begin(), census.orbits.end(),
            [](const PeriodicCensus::Orbit& a, const PeriodicCensus::Orbit& b) {
              return std::tie(a.period, a.rep) < std::tie(b.period, b.rep);
            });
  return census;
}

GrowthProfile growth_profile(const GappedSubshiftSpec& spec, long long n_max,
                             const ResourceCaps& caps, int threads) {
  if (n_max < 1) throw std::invalid_argument("growth_profile: n_max < 1");
  GrowthProfile out;
  out.rows.reserve(static_cast<std::size_t>(n_max));
  for (long long n = 1; n <= n_max; ++n) {
    PeriodicCensus c = periodic_points(spec, n, caps, threads);
    double g = c.count > 0 ? log_of(c.count) / static_cast<double>(n) : 0.0;
    out.rows.push_back({n, c.count, g});
  }
  BigInt top = language_count(spec, n_max, caps);
  double h = top > 0 ? log_of(top) / static_cast<double>(n_max) : 0.0;
  out.ref_level = h / (1.0 + to_double(spec.tau));
  return out;
}

}  // namespace gapshift
