/* gapped.hpp -- the tau-gapped system X over {0} + relabeled base alphabet.
 *
 * Forbidden words: every all-nonzero word outside the base language, and every
 * pattern x_1..x_s 0^t x_{s+1} with all x_i nonzero, t >= 1 and tau*s > t.
 * Base symbols are shifted up by one; 0 is the fresh gap symbol. */
#pragma once

#include "gapshift/base_subshift.hpp"
#include "gapshift/rational.hpp"
#include "gapshift/word.hpp"

#include <memory>
#include <optional>

namespace gapshift {

struct GappedSubshiftSpec {
    BaseSubshiftSpec base;
    Rational tau;  // p/q in lowest terms, >= 0
    int ambient_alphabet_size() const { return base.alphabet_size() + 1; }
};

GappedSubshiftSpec make_gapped(BaseSubshiftSpec base, const Rational& tau);

// Ambient nonzero block -> base word (shift down by one) and back.
Word ambient_to_base(const Word& block);
Word base_to_ambient(const Word& base_word);

// Minimal admissible zero run after a nonzero run of length s: ceil(tau*s).
// (The forbidden condition tau*s > t is strict, so t = tau*s is allowed.)
long long required_zero_run(const GappedSubshiftSpec& spec, long long s);

// Gap function M(n, 2^-m) = ceil(tau*(n+m)) + m + 1 for m >= 0; M = 1 for m = -1
// (encodes epsilon >= 2).
long long gap_function(const GappedSubshiftSpec& spec, long long n, int m);

// Language membership: every maximal nonzero block is in the base language and
// every interior maximal zero run of length t has ceil(tau*s) <= t where s is the
// in-word length of the immediately preceding nonzero run.
bool contains_word(const GappedSubshiftSpec& spec, const Word& w, const ResourceCaps& caps = {});

// Independent route for the same predicate: walks every factor shape directly
// against the forbidden-pattern definition. Used as the membership oracle in the
// verification suite; intentionally shares no scanning logic with contains_word.
bool contains_word_naive(const GappedSubshiftSpec& spec, const Word& w, const ResourceCaps& caps = {});

// True iff the periodic point w^inf lies in X.
bool cyclic_admissible(const GappedSubshiftSpec& spec, const Word& w, const ResourceCaps& caps = {});

// Deterministic prefix machine for L(X). States track the run/gap structure plus
// the base automaton context inside a block; InGap exists only while the zero
// run is still short of its requirement. Not available for Substitution bases
// (no finite block automaton).
class GappedStateMachine {
  public:
    struct State {
        enum Kind : unsigned char { LeadingZeros, InRun, InGap, Satisfied } kind = LeadingZeros;
        long long s = 0;  // run length (InRun: current; InGap: the completed run)
        long long t = 0;  // zeros since the run closed (InGap only)
        int ctx = 0;      // base automaton context (InRun only)
        friend bool operator<(const State& a, const State& b) {
            return std::tie(a.kind, a.s, a.t, a.ctx) < std::tie(b.kind, b.s, b.t, b.ctx);
        }
        friend bool operator==(const State& a, const State& b) {
            return a.kind == b.kind && a.s == b.s && a.t == b.t && a.ctx == b.ctx;
        }
    };

    GappedStateMachine(const GappedSubshiftSpec& spec, const ResourceCaps& caps = {});
    State initial() const { return {}; }
    std::optional<State> step(const State& st, Symbol a) const;
    // The word driven to `st` is in L(X) as it stands.
    bool accepting(const State& st) const;
    long long required(long long s) const;  // cached ceil(tau*s)
    int ambient_size() const { return ambient_; }

  private:
    std::shared_ptr<BaseAutomaton> aut_;
    long long tau_num_, tau_den_;
    int ambient_;
    mutable std::vector<long long> req_;  // req_[s], grown on demand
};

// Incremental scanner for DFS enumeration: feed symbols left to right; the fed
// prefix extends to admissible words iff every push succeeded, and is itself in
// L(X) iff additionally accepting() holds. States may be saved and restored.
class PrefixScanner {
  public:
    using State = GappedStateMachine::State;
    explicit PrefixScanner(std::shared_ptr<const GappedStateMachine> machine)
        : machine_(std::move(machine)), st_{} {}
    bool push(Symbol a) {
        auto nxt = machine_->step(st_, a);
        if (!nxt) return false;
        st_ = *nxt;
        return true;
    }
    bool accepting() const { return machine_->accepting(st_); }
    State state() const { return st_; }
    void restore(const State& s) { st_ = s; }

  private:
    std::shared_ptr<const GappedStateMachine> machine_;
    State st_;
};

// All words of L_n(X) in lexicographic order (capped).
std::vector<Word> enumerate_language(const GappedSubshiftSpec& spec, std::size_t n,
                                     const ResourceCaps& caps = {});

}  // namespace gapshift
