/* rational.hpp -- exact integer/rational arithmetic helpers */
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

namespace gapshift {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt rat_den(const Rational& r) { return boost::multiprecision::denominator(r); }

// ceil(p/q) for q > 0, exact.
inline BigInt ceil_div(const BigInt& p, const BigInt& q) {
    if (q <= 0) throw std::invalid_argument("ceil_div: nonpositive denominator");
    BigInt d = p / q;
    if (p % q != 0 && p > 0) ++d;
    return d;
}

inline BigInt floor_div(const BigInt& p, const BigInt& q) {
    if (q <= 0) throw std::invalid_argument("floor_div: nonpositive denominator");
    BigInt d = p / q;
    if (p % q != 0 && p < 0) --d;
    return d;
}

inline BigInt rat_ceil(const Rational& r) { return ceil_div(rat_num(r), rat_den(r)); }
inline BigInt rat_floor(const Rational& r) { return floor_div(rat_num(r), rat_den(r)); }

// 2^-e as an exact rational, e >= 0.
inline Rational pow2_neg(long e) {
    if (e < 0) throw std::invalid_argument("pow2_neg: negative exponent");
    BigInt d = BigInt(1) << static_cast<unsigned>(e);
    return Rational(1, d);
}

inline BigInt bigint_pow(BigInt base, unsigned long e) {
    BigInt r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

// Largest r with r^k <= x, for x >= 0, k >= 1.
inline BigInt integer_kth_root(const BigInt& x, unsigned long k) {
    if (x < 0) throw std::invalid_argument("integer_kth_root: negative radicand");
    if (k == 0) throw std::invalid_argument("integer_kth_root: k = 0");
    if (k == 1 || x < 2) return x;
    BigInt lo = 0, hi = 1;
    while (bigint_pow(hi, k) <= x) hi <<= 1;
    while (lo < hi - 1) {
        BigInt mid = (lo + hi) >> 1;
        if (bigint_pow(mid, k) <= x) lo = mid; else hi = mid;
    }
    return lo;
}

// Smallest c with c^k >= x (c = ceil(x^(1/k)) for x >= 0).
inline BigInt integer_kth_root_ceil(const BigInt& x, unsigned long k) {
    BigInt r = integer_kth_root(x, k);
    if (bigint_pow(r, k) < x) ++r;
    return r;
}

inline std::string rat_str(const Rational& r) {
    std::string s = rat_num(r).str();
    if (rat_den(r) != 1) s += "/" + rat_den(r).str();
    return s;
}

// ln of a positive big integer, accurate to double precision even when the
// value itself overflows double range.
inline double log_of(const BigInt& x) {
    if (x <= 0) throw std::invalid_argument("log_of: nonpositive argument");
    const unsigned shift_bits = 256;
    unsigned bits = boost::multiprecision::msb(x) + 1;
    if (bits <= shift_bits) return std::log(x.convert_to<double>());
    unsigned drop = bits - shift_bits;
    BigInt top = x >> drop;
    return std::log(top.convert_to<double>()) + static_cast<double>(drop) * std::log(2.0);
}

inline double to_double(const Rational& r) {
    BigInt n = rat_num(r), d = rat_den(r);
    bool neg = n < 0;
    if (neg) n = -n;
    if (n == 0) return 0.0;
    if (boost::multiprecision::msb(n) < 1000 && boost::multiprecision::msb(d) < 1000)
        return (neg ? -1.0 : 1.0) * n.convert_to<double>() / d.convert_to<double>();
    double v = std::exp(log_of(n) - log_of(d));
    return neg ? -v : v;
}

}  // namespace gapshift
