/* metric.hpp -- shift metric d(x,y) = sum_k 2^-k [x_k != y_k], certified on finite words */
#pragma once

#include "gapshift/rational.hpp"
#include "gapshift/word.hpp"

namespace gapshift {

struct DistInterval {
    Rational lo;  // contribution of the known coordinates
    Rational hi;  // lo + worst-case tail
};

// Certified interval for d(x, y) where x, y are any points extending u, v.
// lo = sum over disagreeing coordinates k < |u| of 2^-k, hi = lo + 2^-(|u|-1).
// Requires |u| == |v| >= 1.
inline DistInterval word_distance_interval(const Word& u, const Word& v) {
    if (u.size() != v.size()) throw std::invalid_argument("word_distance_interval: length mismatch");
    if (u.empty()) throw std::invalid_argument("word_distance_interval: empty words");
    Rational lo = 0;
    for (std::size_t k = 0; k < u.size(); ++k)
        if (u[k] != v[k]) lo += pow2_neg(static_cast<long>(k));
    Rational tail = pow2_neg(static_cast<long>(u.size()) - 1);
    return {lo, lo + tail};
}

// Exact truncated metric: the partial sum over the first n coordinates.
inline Rational truncated_distance(const Word& u, const Word& v, std::size_t n) {
    if (u.size() < n || v.size() < n) throw std::invalid_argument("truncated_distance: words too short");
    Rational d = 0;
    for (std::size_t k = 0; k < n; ++k)
        if (u[k] != v[k]) d += pow2_neg(static_cast<long>(k));
    return d;
}

// diam of the ambient shift space under this metric.
inline Rational space_diameter() { return Rational(2); }

}  // namespace gapshift
