#include "gapshift/gapped.hpp"

#include "gapshift/errors.hpp"

#include <algorithm>

namespace gapshift {

GappedSubshiftSpec make_gapped(BaseSubshiftSpec base, const Rational& tau) {
    if (tau < 0) throw ConfigError("tau must be nonnegative");
    BigInt p = rat_num(tau), q = rat_den(tau);
    if (p > std::numeric_limits<long long>::max() / 4 || q > std::numeric_limits<long long>::max() / 4)
        throw ConfigError("tau numerator/denominator out of supported range");
    return {std::move(base), tau};
}

Word ambient_to_base(const Word& block) {
    Word b;
    b.reserve(block.size());
    for (Symbol s : block) {
        if (s <= 0) throw std::invalid_argument("ambient_to_base: block has a gap symbol");
        b.push_back(s - 1);
    }
    return b;
}

Word base_to_ambient(const Word& base_word) {
    Word a;
    a.reserve(base_word.size());
    for (Symbol s : base_word) a.push_back(s + 1);
    return a;
}

long long required_zero_run(const GappedSubshiftSpec& spec, long long s) {
    if (s < 1) throw std::invalid_argument("required_zero_run: run length must be positive");
    BigInt t = rat_ceil(spec.tau * Rational(s));
    return t.convert_to<long long>();
}

long long gap_function(const GappedSubshiftSpec& spec, long long n, int m) {
    if (n < 1) throw std::invalid_argument("gap_function: n must be positive");
    if (m < -1) throw std::invalid_argument("gap_function: m must be >= -1");
    if (m == -1) return 1;  // epsilon >= 2: one step suffices
    BigInt c = rat_ceil(spec.tau * Rational(n + m));
    return c.convert_to<long long>() + m + 1;
}

static void check_ambient(const GappedSubshiftSpec& spec, const Word& w, const char* who) {
    const int A = spec.ambient_alphabet_size();
    for (Symbol s : w)
        if (s < 0 || s >= A) throw std::invalid_argument(std::string(who) + ": symbol out of range");
}

bool contains_word(const GappedSubshiftSpec& spec, const Word& w, const ResourceCaps& caps) {
    check_ambient(spec, w, "contains_word");
    const std::size_t n = w.size();
    // tau fits in long long by make_gapped; word lengths are desk scale, so
    // the strictness boundary p*s > t*q is exact in 64-bit.
    const long long p = rat_num(spec.tau).convert_to<long long>();
    const long long q = rat_den(spec.tau).convert_to<long long>();
    // full-shift bases accept every in-range block, so skip extracting them
    const bool full_base = std::holds_alternative<FullShift>(spec.base.v);
    std::size_t i = 0;
    long long prev_run = 0;  // length of the block immediately before the current zero run
    while (i < n) {
        if (w[i] != 0) {
            std::size_t j = i;
            while (j < n && w[j] != 0) ++j;
            if (!full_base) {
                Word block(w.begin() + static_cast<long>(i), w.begin() + static_cast<long>(j));
                if (!base_contains(spec.base, ambient_to_base(block), caps)) return false;
            }
            prev_run = static_cast<long long>(j - i);
            i = j;
        } else {
            std::size_t j = i;
            while (j < n && w[j] == 0) ++j;
            bool interior = (i > 0 && j < n);  // nonzero on both sides within w
            if (interior) {
                long long t = static_cast<long long>(j - i);
                if (t < (p * prev_run + q - 1) / q) return false;
            }
            i = j;
        }
    }
    return true;
}

bool contains_word_naive(const GappedSubshiftSpec& spec, const Word& w, const ResourceCaps& caps) {
    check_ambient(spec, w, "contains_word_naive");
    const std::size_t n = w.size();
    const long long p = rat_num(spec.tau).convert_to<long long>();
    const long long q = rat_den(spec.tau).convert_to<long long>();
    // forbidden patterns: for each start there is at most one factor of the shape
    // nonzero^s 0^t nonzero, and it is forbidden iff tau*s > t
    for (std::size_t i = 0; i < n; ++i) {
        if (w[i] == 0) continue;
        std::size_t j = i;
        while (j < n && w[j] != 0) ++j;
        std::size_t k = j;
        while (k < n && w[k] == 0) ++k;
        if (k < n && k > j) {
            long long s = static_cast<long long>(j - i), t = static_cast<long long>(k - j);
            if (p * s > t * q) return false;
        }
    }
    // all-nonzero factors must lie in the base language; by factor closure of
    // L(Z) it suffices to check the maximal blocks
    if (std::holds_alternative<FullShift>(spec.base.v)) return true;
    for (std::size_t i = 0; i < n;) {
        if (w[i] == 0) { ++i; continue; }
        std::size_t j = i;
        while (j < n && w[j] != 0) ++j;
        Word block(w.begin() + static_cast<long>(i), w.begin() + static_cast<long>(j));
        if (!base_contains(spec.base, ambient_to_base(block), caps)) return false;
        i = j;
    }
    return true;
}

bool cyclic_admissible(const GappedSubshiftSpec& spec, const Word& w, const ResourceCaps& caps) {
    if (w.empty()) throw std::invalid_argument("cyclic_admissible: empty word");
    check_ambient(spec, w, "cyclic_admissible");
    bool has_zero = false, has_nonzero = false;
    for (Symbol s : w) (s == 0 ? has_zero : has_nonzero) = true;
    if (!has_nonzero) return true;  // 0^inf
    if (!has_zero) return base_cyclic_admissible(spec.base, ambient_to_base(w), caps);

    // mixed: build the cyclic run structure, starting at a run boundary
    const std::size_t n = w.size();
    std::size_t start = 0;
    while ((w[start] == 0) == (w[(start + n - 1) % n] == 0)) ++start;  // exists: word is mixed
    struct Run { bool zero; std::size_t len; std::size_t begin; };
    std::vector<Run> runs;
    std::size_t i = 0;
    while (i < n) {
        std::size_t pos = (start + i) % n;
        bool zero = (w[pos] == 0);
        std::size_t j = i;
        while (j < n && ((w[(start + j) % n] == 0) == zero)) ++j;
        runs.push_back({zero, j - i, pos});
        i = j;
    }
    for (std::size_t r = 0; r < runs.size(); ++r) {
        if (runs[r].zero) {
            const Run& prev = runs[(r + runs.size() - 1) % runs.size()];
            if (static_cast<long long>(runs[r].len) <
                required_zero_run(spec, static_cast<long long>(prev.len)))
                return false;
        } else {
            Word block;
            block.reserve(runs[r].len);
            for (std::size_t k = 0; k < runs[r].len; ++k)
                block.push_back(w[(runs[r].begin + k) % n]);
            if (!base_contains(spec.base, ambient_to_base(block), caps)) return false;
        }
    }
    return true;
}

GappedStateMachine::GappedStateMachine(const GappedSubshiftSpec& spec, const ResourceCaps& caps)
    : aut_(make_base_automaton(spec.base, caps)),
      tau_num_(rat_num(spec.tau).convert_to<long long>()),
      tau_den_(rat_den(spec.tau).convert_to<long long>()),
      ambient_(spec.ambient_alphabet_size()) {
    req_.push_back(0);
}

long long GappedStateMachine::required(long long s) const {
    while (static_cast<long long>(req_.size()) <= s) {
        long long k = static_cast<long long>(req_.size());
        req_.push_back((tau_num_ * k + tau_den_ - 1) / tau_den_);
    }
    return req_[static_cast<std::size_t>(s)];
}

std::optional<GappedStateMachine::State> GappedStateMachine::step(const State& st, Symbol a) const {
    if (a < 0 || a >= ambient_) throw std::invalid_argument("step: symbol out of range");
    State nx;
    if (a == 0) {
        switch (st.kind) {
            case State::LeadingZeros: return State{State::LeadingZeros, 0, 0, 0};
            case State::Satisfied: return State{State::Satisfied, 0, 0, 0};
            case State::InRun:
                if (!aut_->live(st.ctx)) return std::nullopt;  // closed block not in L(Z)
                if (1 >= required(st.s)) return State{State::Satisfied, 0, 0, 0};
                return State{State::InGap, st.s, 1, 0};
            case State::InGap:
                if (st.t + 1 >= required(st.s)) return State{State::Satisfied, 0, 0, 0};
                nx = st;
                ++nx.t;
                return nx;
        }
    } else {
        const Symbol b = a - 1;  // relabel to base
        switch (st.kind) {
            case State::LeadingZeros:
            case State::Satisfied: {
                int c = aut_->start(b);
                if (c < 0) return std::nullopt;
                return State{State::InRun, 1, 0, c};
            }
            case State::InRun: {
                int c = aut_->step(st.ctx, b);
                if (c < 0) return std::nullopt;
                return State{State::InRun, st.s + 1, 0, c};
            }
            case State::InGap:
                return std::nullopt;  // zero run still short of its requirement
        }
    }
    return std::nullopt;
}

bool GappedStateMachine::accepting(const State& st) const {
    if (st.kind == State::InRun) return aut_->live(st.ctx);  // truncated final block
    return true;
}

std::vector<Word> enumerate_language(const GappedSubshiftSpec& spec, std::size_t n,
                                     const ResourceCaps& caps) {
    std::vector<Word> out;
    const int A = spec.ambient_alphabet_size();
    std::size_t visited = 0;

    if (std::get_if<SubstitutionSystem>(&spec.base.v)) {
        // no finite block automaton: prune with full membership rescans
        Word cur;
        auto rec = [&](auto&& self) -> void {
            if (++visited > caps.max_enumeration)
                throw ResourceCapError("enumerate_language: node cap exceeded");
            if (cur.size() == n) { out.push_back(cur); return; }
            for (Symbol a = 0; a < A; ++a) {
                cur.push_back(a);
                if (contains_word(spec, cur, caps)) self(self);
                cur.pop_back();
            }
        };
        rec(rec);
        return out;
    }

    auto machine = std::make_shared<const GappedStateMachine>(spec, caps);
    PrefixScanner scan(machine);
    Word cur;
    auto rec = [&](auto&& self) -> void {
        if (++visited > caps.max_enumeration)
            throw ResourceCapError("enumerate_language: node cap exceeded");
        if (cur.size() == n) {
            if (scan.accepting()) out.push_back(cur);
            return;
        }
        for (Symbol a = 0; a < A; ++a) {
            auto saved = scan.state();
            if (scan.push(a)) {
                cur.push_back(a);
                self(self);
                cur.pop_back();
            }
            scan.restore(saved);
        }
    };
    rec(rec);
    return out;
}

}  // namespace gapshift
