#include "gapshift/counting.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

#include "gapshift/errors.hpp"

namespace gapshift {

namespace {

using State = GappedStateMachine::State;

// Count admissible words of length n by extending prefixes one symbol at a
// time and rescanning; only route available for substitution bases.
BigInt enumeration_count(const GappedSubshiftSpec& spec, long long n,
                         const ResourceCaps& caps) {
    if (n == 0) return contains_word(spec, {}, caps) ? 1 : 0;
    const int A = spec.ambient_alphabet_size();
    BigInt total = 0;
    std::size_t nodes = 0;
    Word cur;
    auto rec = [&](auto&& self) -> void {
        if (static_cast<long long>(cur.size()) == n) {
            ++total;
            return;
        }
        for (Symbol a = 0; a < A; ++a) {
            if (++nodes > caps.max_enumeration)
                throw ResourceCapError("resource limit exceeded");
            cur.push_back(a);
            if (contains_word(spec, cur, caps)) self(self);
            cur.pop_back();
        }
    };
    rec(rec);
    return total;
}

}  // namespace

BigInt language_count(const GappedSubshiftSpec& spec, long long n,
                      const ResourceCaps& caps) {
    if (n < 0) throw std::invalid_argument("language_count: negative length");
    if (base_has_substitution(spec.base)) return enumeration_count(spec, n, caps);
    GappedStateMachine machine(spec, caps);
    const int A = machine.ambient_size();
    std::map<State, BigInt> layer;
    layer[machine.initial()] = 1;
    for (long long i = 0; i < n; ++i) {
        std::map<State, BigInt> next;
        for (const auto& [st, cnt] : layer) {
            for (Symbol a = 0; a < A; ++a) {
                auto nxt = machine.step(st, a);
                if (nxt) next[*nxt] += cnt;
            }
        }
        if (next.size() > caps.max_states)
            throw ResourceCapError("resource limit exceeded");
        layer = std::move(next);
    }
    BigInt total = 0;
    for (const auto& [st, cnt] : layer)
        if (machine.accepting(st)) total += cnt;
    return total;
}

EntropyProfile entropy_profile(const GappedSubshiftSpec& spec, long long n_max,
                               const ResourceCaps& caps) {
    if (n_max < 1) throw std::invalid_argument("entropy_profile: n_max < 1");
    EntropyProfile out;
    const double log_alpha = std::log(static_cast<double>(spec.base.alphabet_size()));
    out.ref_log_alpha = log_alpha;
    out.ref_level = std::log(2.0) + log_alpha / (1.0 + to_double(spec.tau));
    out.rows.reserve(static_cast<std::size_t>(n_max));
    for (long long n = 1; n <= n_max; ++n) {
        BigInt c = language_count(spec, n, caps);
        double h = c > 0 ? log_of(c) / static_cast<double>(n) : 0.0;
        out.rows.push_back({n, std::move(c), h});
    }
    return out;
}

BigInt count_word_class(const GappedSubshiftSpec& spec, long long n,
                        const Word& w, long long lo, long long hi,
                        const ResourceCaps& caps) {
    if (!(0 <= lo && lo <= hi && hi <= n))
        throw std::invalid_argument("count_word_class: bad occurrence window");
    if (w.empty() || static_cast<long long>(w.size()) > n)
        throw std::invalid_argument("count_word_class: bad pattern length");
    const int A = spec.ambient_alphabet_size();
    for (Symbol s : w)
        if (s < 0 || s >= A) throw std::invalid_argument("symbol out of alphabet range");

    const long long occ_cap = hi + 1;  // everything above hi is equivalent
    const std::size_t P = w.size();

    // KMP automaton: state j = length of the longest pattern prefix matching
    // the current suffix; a step into state P is one occurrence.
    std::vector<std::size_t> fail(P + 1, 0);
    for (std::size_t j = 1; j < P; ++j) {
        std::size_t k = fail[j];
        while (k > 0 && w[j] != w[k]) k = fail[k];
        fail[j + 1] = (w[j] == w[k]) ? k + 1 : 0;
    }
    std::vector<std::vector<std::size_t>> delta(P + 1, std::vector<std::size_t>(A));
    for (std::size_t j = 0; j <= P; ++j) {
        for (Symbol a = 0; a < A; ++a) {
            std::size_t k = (j == P) ? fail[j] : j;
            while (k > 0 && w[k] != a) k = fail[k];
            delta[j][a] = (w[k] == a) ? k + 1 : 0;
        }
    }

    if (base_has_substitution(spec.base)) {
        BigInt total = 0;
        std::size_t nodes = 0;
        Word cur;
        std::vector<std::pair<std::size_t, long long>> trail{{0, 0}};  // (kmp, occ)
        auto rec = [&](auto&& self) -> void {
            if (static_cast<long long>(cur.size()) == n) {
                long long occ = trail.back().second;
                if (lo <= occ && occ <= hi) ++total;
                return;
            }
            for (Symbol a = 0; a < A; ++a) {
                if (++nodes > caps.max_enumeration)
                    throw ResourceCapError("resource limit exceeded");
                cur.push_back(a);
                if (contains_word(spec, cur, caps)) {
                    auto [j, occ] = trail.back();
                    std::size_t nj = delta[j][a];
                    trail.emplace_back(nj, std::min(occ + (nj == P ? 1 : 0), occ_cap));
                    self(self);
                    trail.pop_back();
                }
                cur.pop_back();
            }
        };
        rec(rec);
        return total;
    }

    GappedStateMachine machine(spec, caps);
    using Key = std::tuple<State, std::size_t, long long>;
    std::map<Key, BigInt> layer;
    layer[{machine.initial(), 0, 0}] = 1;
    for (long long i = 0; i < n; ++i) {
        std::map<Key, BigInt> next;
        for (const auto& [key, cnt] : layer) {
            const auto& [st, j, occ] = key;
            for (Symbol a = 0; a < A; ++a) {
                auto nxt = machine.step(st, a);
                if (!nxt) continue;
                std::size_t nj = delta[j][a];
                long long nocc = std::min(occ + (nj == P ? 1 : 0), occ_cap);
                next[{*nxt, nj, nocc}] += cnt;
            }
        }
        if (next.size() > caps.max_states)
            throw ResourceCapError("resource limit exceeded");
        layer = std::move(next);
    }
    BigInt total = 0;
    for (const auto& [key, cnt] : layer) {
        const auto& [st, j, occ] = key;
        (void)j;
        if (machine.accepting(st) && lo <= occ && occ <= hi) total += cnt;
    }
    return total;
}

BinomialBound binomial_bound(long long n, long long alphabet_size,
                             const Rational& beta, const Rational& kappa) {
    if (n < 0) throw std::invalid_argument("binomial_bound: negative n");
    if (alphabet_size < 1) throw std::invalid_argument("binomial_bound: alphabet size < 1");
    if (beta < 0 || beta > 1) throw std::invalid_argument("binomial_bound: beta outside [0,1]");
    if (kappa < 0 || kappa > 1) throw std::invalid_argument("binomial_bound: kappa outside [0,1]");

    const Rational exponent = Rational(1) - (Rational(1) - kappa) * beta;  // in [0,1]
    const BigInt K = rat_floor(Rational(n) * exponent);

    BinomialBound out;
    out.sum = 0;
    BigInt binom = 1;   // C(n,k)
    BigInt a_pow = 1;   // A^k
    const BigInt A = alphabet_size;
    for (BigInt k = 0; k <= K; ++k) {
        out.sum += binom * a_pow;
        binom = binom * (BigInt(n) - k) / (k + 1);
        a_pow *= A;
    }

    // closed = ceil((2 A^e)^n): smallest c with c^q >= 2^{nq} A^{np} for e = p/q.
    const BigInt p = rat_num(exponent), q = rat_den(exponent);
    const unsigned long nq = static_cast<unsigned long>((BigInt(n) * q).convert_to<long long>());
    const unsigned long np = static_cast<unsigned long>((BigInt(n) * p).convert_to<long long>());
    BigInt radicand = (BigInt(1) << nq) * bigint_pow(A, np);
    out.closed = integer_kth_root_ceil(radicand, static_cast<unsigned long>(q.convert_to<long long>()));
    return out;
}

std::pair<BigInt, BigInt> separated_count_bounds(const GappedSubshiftSpec& spec,
                                                 long long n, long long m,
                                                 const ResourceCaps& caps) {
    if (n < 1) throw std::invalid_argument("separated_count_bounds: n < 1");
    if (m < 0) throw std::invalid_argument("separated_count_bounds: m < 0");
    return {language_count(spec, n, caps), language_count(spec, n + m + 1, caps)};
}

}  // namespace gapshift
