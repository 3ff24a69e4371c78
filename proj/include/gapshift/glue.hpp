/* glue.hpp -- constructive shadowing: segment gluing with certified distance
 * bounds, periodic closure, and exhaustive minimal-gap witness search. */
#pragma once

#include <optional>
#include <vector>

#include "gapshift/gapped.hpp"
#include "gapshift/metric.hpp"
#include "gapshift/rational.hpp"
#include "gapshift/word.hpp"

namespace gapshift {

enum class Closure { OpenEnd, Periodic };

struct GlueSegment {
  Word u;
  long long start = 0;  // a_i
  long long end() const { return start + static_cast<long long>(u.size()) - 1; }  // b_i
};

struct GlueRequest {
  std::vector<GlueSegment> segments;  // ordered, a_1 <= b_1 < a_2 <= ...
  int m = 0;                          // precision: epsilon = 2^-m
  Closure closure = Closure::OpenEnd;
  long long period = 0;               // Periodic only
};

// One certified inequality d(f^{j-a_i} x_i, f^j z) <= 2^-m, checked as a
// word_distance_interval between the length-(m+1) windows.
struct ShadowCheck {
  int segment = 0;
  long long position = 0;  // j
  Rational lo, hi;         // certified interval for the distance
  Rational bound;          // 2^-m
  bool pass = false;       // hi <= bound
};

struct VerificationReport {
  std::vector<ShadowCheck> checks;
  bool admissible = false;  // output word / cycle passes membership
  bool all_pass = false;
};

struct GlueResult {
  Word prefix;                      // OpenEnd: z[0 .. b_k+m]; Periodic: one period
  std::optional<CyclicWord> cycle;  // Periodic only
  VerificationReport report;
};

// Builds the shadowing point z: u_i . 0^m at [a_i, b_i+m], zeros elsewhere,
// then verifies admissibility and every distance bound. Throws
// InfeasibleError("infeasible request: ...") when the request violates the
// gap/order invariants or a segment is not in the language.
GlueResult glue(const GappedSubshiftSpec& spec, const GlueRequest& req,
                const ResourceCaps& caps = {});

// Canonical layout: a_1 = 0, a_{i+1} = b_i + M(|u_i|, 2^-m); for Periodic the
// minimal admissible period p = b_k - a_1 + M(|u_k|, 2^-m).
GlueRequest default_layout(const GappedSubshiftSpec& spec,
                           const std::vector<Word>& words, int m,
                           Closure closure = Closure::OpenEnd);

// Exhaustive search over words of length |u|+gap+|v|+m for a z shadowing
// ext(u) at 0 and ext(v) at |u|-1+gap within 2^-m, where ext(w) extends w by
// repeating its final symbol (the orbit segments of the minimality argument
// are cut from such rays). m = -1 encodes epsilon >= 2 (no distance
// constraint). Returns the lexicographically least witness, or nullopt.
std::optional<Word> min_gap_witness_search(const GappedSubshiftSpec& spec,
                                           const Word& u, const Word& v, int m,
                                           long long gap,
                                           const ResourceCaps& caps = {});

}  // namespace gapshift
