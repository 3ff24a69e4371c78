#pragma once

#include <vector>

#include "gapshift/gapped.hpp"
#include "gapshift/rational.hpp"
#include "gapshift/word.hpp"

namespace gapshift {

// All points with f^n x = x: admissible cyclic words of length n.  count is
// the number of such strings; orbits lists one canonical representative
// (lexicographically least rotation of the primitive period) per orbit whose
// minimal period divides n.
struct PeriodicCensus {
  long long n = 0;
  BigInt count;
  struct Orbit {
    Word rep;                // primitive period, canonical rotation
    long long period = 0;    // == rep.size()
    Rational zero_density;   // zeros per period
  };
  std::vector<Orbit> orbits;  // sorted by (period, rep)
};

PeriodicCensus periodic_points(const GappedSubshiftSpec& spec, long long n,
                               const ResourceCaps& caps = {}, int threads = 1);

struct GrowthProfile {
  struct Row {
    long long n = 0;
    BigInt count;
    double growth = 0.0;  // (1/n) ln count
  };
  std::vector<Row> rows;
  double ref_level = 0.0;  // (1/(1+tau)) h_{n_max}
};

GrowthProfile growth_profile(const GappedSubshiftSpec& spec, long long n_max,
                             const ResourceCaps& caps = {}, int threads = 1);

}  // namespace gapshift
