#pragma once

#include <utility>
#include <vector>

#include "gapshift/gapped.hpp"
#include "gapshift/rational.hpp"
#include "gapshift/word.hpp"

namespace gapshift {

// Exact |L_n(X)| via a DP over GappedStateMachine states.  Substitution
// bases fall back to pruned enumeration.
BigInt language_count(const GappedSubshiftSpec& spec, long long n,
                      const ResourceCaps& caps = {});

struct EntropyRow {
  long long n = 0;
  BigInt count;
  double h = 0.0;  // (1/n) ln count
};

struct EntropyProfile {
  std::vector<EntropyRow> rows;
  double ref_log_alpha = 0.0;  // ln |base alphabet|
  double ref_level = 0.0;      // ln 2 + ln|base alphabet| / (1 + tau)
};

EntropyProfile entropy_profile(const GappedSubshiftSpec& spec, long long n_max,
                               const ResourceCaps& caps = {});

// Number of u in L_n(X) whose count of (overlapping) occurrences of w lies
// in [lo, hi].
BigInt count_word_class(const GappedSubshiftSpec& spec, long long n,
                        const Word& w, long long lo, long long hi,
                        const ResourceCaps& caps = {});

struct BinomialBound {
  BigInt sum;     // sum_{k=0}^{floor(n(1-(1-kappa)beta))} C(n,k) A^k
  BigInt closed;  // ceil((2 A^{1-(1-kappa)beta})^n)
};

BinomialBound binomial_bound(long long n, long long alphabet_size,
                             const Rational& beta, const Rational& kappa);

// Sandwich bounds [|L_n|, |L_{n+m+1}|] for the maximal cardinality of
// (n, 2^-m)-separated sets.
std::pair<BigInt, BigInt> separated_count_bounds(const GappedSubshiftSpec& spec,
                                                 long long n, long long m,
                                                 const ResourceCaps& caps = {});

}  // namespace gapshift
