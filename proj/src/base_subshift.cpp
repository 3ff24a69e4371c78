#include "gapshift/base_subshift.hpp"

#include "gapshift/errors.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

namespace gapshift {

int BaseSubshiftSpec::alphabet_size() const {
    return std::visit(
        [](const auto& s) -> int {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, UnionOfCopies>)
                return s.copies * s.inner->alphabet_size();
            else
                return s.alphabet.size;
        },
        v);
}

BaseSubshiftSpec make_full_shift(int alphabet_size) {
    return {FullShift{Alphabet(alphabet_size)}};
}

BaseSubshiftSpec make_sft(int alphabet_size, std::vector<Word> forbidden) {
    Alphabet a(alphabet_size);
    for (const auto& f : forbidden) {
        if (f.empty()) throw ConfigError("sft: empty forbidden word");
        if (!word_in_alphabet(f, a)) throw ConfigError("sft: forbidden word symbol out of range");
    }
    return {Sft{a, std::move(forbidden)}};
}

BaseSubshiftSpec make_substitution(int alphabet_size, std::vector<Word> rules, Symbol seed) {
    Alphabet a(alphabet_size);
    if (static_cast<int>(rules.size()) != alphabet_size)
        throw ConfigError("substitution: need one rule per symbol");
    for (const auto& r : rules) {
        if (r.empty()) throw ConfigError("substitution: erasing rule");
        if (!word_in_alphabet(r, a)) throw ConfigError("substitution: rule symbol out of range");
    }
    if (!a.contains(seed)) throw ConfigError("substitution: seed out of range");
    if (rules[static_cast<std::size_t>(seed)][0] != seed ||
        rules[static_cast<std::size_t>(seed)].size() < 2)
        throw ConfigError("substitution: seed not prolongable (rule must start with seed, length >= 2)");
    return {SubstitutionSystem{a, std::move(rules), seed}};
}

BaseSubshiftSpec make_union_of_copies(BaseSubshiftSpec inner, int copies) {
    if (copies < 1) throw ConfigError("union: need at least one copy");
    return {UnionOfCopies{std::make_shared<BaseSubshiftSpec>(std::move(inner)), copies}};
}

static void check_alphabet(const Word& w, int size, const char* who) {
    for (Symbol s : w)
        if (s < 0 || s >= size)
            throw std::invalid_argument(std::string(who) + ": symbol out of alphabet range");
}

// ---------------------------------------------------------------- SFT automaton

namespace {

// Window automaton on contexts of length <= L-1 (L = longest forbidden word).
// Contexts are the internally valid words reachable from the empty context; a
// context is live iff it admits an infinite valid continuation (greatest fixed
// point, computed by pruning on the full-memory layer and back-substitution).
class SftAutomaton final : public BaseAutomaton {
  public:
    SftAutomaton(const Sft& s, const ResourceCaps& caps) : A_(s.alphabet.size), forbidden_(s.forbidden) {
        std::size_t L = 1;
        for (const auto& f : forbidden_) L = std::max(L, f.size());
        mem_ = L - 1;
        intern({});
        for (std::size_t i = 0; i < ctx_word_.size(); ++i) {
            if (ctx_word_.size() > caps.max_states) throw ResourceCapError("sft automaton: state cap exceeded");
            Word cur = ctx_word_[i];  // copy: intern() may reallocate
            trans_.resize(ctx_word_.size(), std::vector<int>());
            trans_[i].assign(static_cast<std::size_t>(A_), -1);
            for (Symbol c = 0; c < A_; ++c) {
                Word nxt = cur;
                nxt.push_back(c);
                if (has_forbidden_suffix(nxt)) continue;
                if (nxt.size() > mem_) nxt.erase(nxt.begin());
                trans_[i][static_cast<std::size_t>(c)] = intern(nxt);
            }
        }
        trans_.resize(ctx_word_.size());
        compute_live();
    }

    int context_count() const override { return static_cast<int>(ctx_word_.size()); }
    int start(Symbol s) const override { return step(0, s); }
    int step(int ctx, Symbol s) const override {
        if (s < 0 || s >= A_) throw std::invalid_argument("sft: symbol out of alphabet range");
        return trans_[static_cast<std::size_t>(ctx)][static_cast<std::size_t>(s)];
    }
    bool live(int ctx) const override { return live_[static_cast<std::size_t>(ctx)] != 0; }
    bool nonempty() const override { return live(0); }

  private:
    int intern(const Word& w) {
        auto it = ctx_id_.find(w);
        if (it != ctx_id_.end()) return it->second;
        int id = static_cast<int>(ctx_word_.size());
        ctx_id_.emplace(w, id);
        ctx_word_.push_back(w);
        return id;
    }

    bool has_forbidden_suffix(const Word& w) const {
        for (const auto& f : forbidden_) {
            if (f.size() > w.size()) continue;
            if (std::equal(f.begin(), f.end(), w.end() - static_cast<long>(f.size()))) return true;
        }
        return false;
    }

    void compute_live() {
        const std::size_t n = ctx_word_.size();
        live_.assign(n, 0);
        for (std::size_t i = 0; i < n; ++i)
            if (ctx_word_[i].size() == mem_) live_[i] = 1;
        // prune full-memory contexts with no live successor until stable
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t i = 0; i < n; ++i) {
                if (!live_[i] || ctx_word_[i].size() != mem_) continue;
                bool ok = false;
                for (Symbol c = 0; c < A_ && !ok; ++c) {
                    int t = trans_[i][static_cast<std::size_t>(c)];
                    ok = (t >= 0 && live_[static_cast<std::size_t>(t)]);
                }
                if (!ok) { live_[i] = 0; changed = true; }
            }
        }
        // shorter contexts in decreasing length order: successors are one longer
        for (std::size_t len = mem_; len-- > 0;) {
            for (std::size_t i = 0; i < n; ++i) {
                if (ctx_word_[i].size() != len) continue;
                bool ok = false;
                for (Symbol c = 0; c < A_ && !ok; ++c) {
                    int t = trans_[i][static_cast<std::size_t>(c)];
                    ok = (t >= 0 && live_[static_cast<std::size_t>(t)]);
                }
                live_[i] = ok ? 1 : 0;
            }
        }
    }

    int A_;
    std::size_t mem_;
    std::vector<Word> forbidden_;
    std::map<Word, int> ctx_id_;
    std::vector<Word> ctx_word_;
    std::vector<std::vector<int>> trans_;
    std::vector<char> live_;
};

class FullShiftAutomaton final : public BaseAutomaton {
  public:
    explicit FullShiftAutomaton(int a) : A_(a) {}
    int context_count() const override { return 1; }
    int start(Symbol s) const override { return step(0, s); }
    int step(int, Symbol s) const override {
        if (s < 0 || s >= A_) throw std::invalid_argument("full shift: symbol out of alphabet range");
        return 0;
    }
    bool live(int) const override { return true; }
    bool nonempty() const override { return true; }

  private:
    int A_;
};

class UnionAutomaton final : public BaseAutomaton {
  public:
    UnionAutomaton(std::unique_ptr<BaseAutomaton> inner, int copies, int inner_alpha)
        : inner_(std::move(inner)), copies_(copies), ia_(inner_alpha) {}
    int context_count() const override { return copies_ * inner_->context_count(); }
    int start(Symbol s) const override {
        check(s);
        int k = s / ia_;
        int c = inner_->start(s % ia_);
        return c < 0 ? -1 : k * inner_->context_count() + c;
    }
    int step(int ctx, Symbol s) const override {
        check(s);
        int k = ctx / inner_->context_count();
        if (s / ia_ != k) return -1;  // runs never cross copies
        int c = inner_->step(ctx % inner_->context_count(), s % ia_);
        return c < 0 ? -1 : k * inner_->context_count() + c;
    }
    bool live(int ctx) const override { return inner_->live(ctx % inner_->context_count()); }
    bool nonempty() const override { return inner_->nonempty(); }

  private:
    void check(Symbol s) const {
        if (s < 0 || s >= copies_ * ia_)
            throw std::invalid_argument("union: symbol out of alphabet range");
    }
    std::unique_ptr<BaseAutomaton> inner_;
    int copies_;
    int ia_;
};

// Membership checks hit the same SFT spec millions of times in the oracle
// suites; the automaton is immutable, so share one instance per spec
// (write-once cache).
std::shared_ptr<const SftAutomaton> cached_sft_automaton(const Sft& s, const ResourceCaps& caps) {
    static std::mutex mu;
    static std::map<std::string, std::shared_ptr<const SftAutomaton>> cache;
    std::ostringstream k;
    k << s.alphabet.size;
    for (const auto& f : s.forbidden) {
        k << "|";
        for (Symbol c : f) k << c << ",";
    }
    const std::string key = k.str();
    {
        std::lock_guard<std::mutex> lk(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    auto aut = std::make_shared<const SftAutomaton>(s, caps);
    std::lock_guard<std::mutex> lk(mu);
    auto [it, inserted] = cache.emplace(key, std::move(aut));
    return it->second;
}

// ------------------------------------------------------- substitution factors

std::string subst_cache_key(const SubstitutionSystem& s, std::size_t n) {
    std::ostringstream k;
    k << s.alphabet.size << "|" << s.seed << "|" << n;
    for (const auto& r : s.rules) {
        k << "|";
        for (Symbol c : r) k << c << ",";
    }
    return k.str();
}

// Factors of length <= n of the substitution fixed point. Iterates the rules on
// a growing prefix of the fixed point (images of prefixes stay prefixes) until
// the factor set is stable for two rounds.
std::shared_ptr<const std::set<Word>> substitution_factors(const SubstitutionSystem& s,
                                                           std::size_t n,
                                                           const ResourceCaps& caps) {
    static std::mutex mu;
    static std::map<std::string, std::shared_ptr<const std::set<Word>>> cache;
    const std::string key = subst_cache_key(s, n);
    {
        std::lock_guard<std::mutex> lk(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }

    const std::size_t max_prefix =
        std::min<std::size_t>(std::max<std::size_t>(64 * (n + 1), 4096), caps.max_enumeration);
    Word w{ s.seed };
    auto collect = [&](const Word& x) {
        std::set<Word> f;
        for (std::size_t i = 0; i < x.size(); ++i)
            for (std::size_t len = 1; len <= n && i + len <= x.size(); ++len)
                f.insert(Word(x.begin() + static_cast<long>(i), x.begin() + static_cast<long>(i + len)));
        return f;
    };

    std::set<Word> factors = collect(w);
    int stable = 0;
    for (int round = 0; round < 400; ++round) {
        Word nxt;
        nxt.reserve(std::min(max_prefix, w.size() * 2 + 4));
        for (Symbol c : w) {
            const Word& img = s.rules[static_cast<std::size_t>(c)];
            for (Symbol d : img) {
                nxt.push_back(d);
                if (nxt.size() >= max_prefix) break;
            }
            if (nxt.size() >= max_prefix) break;
        }
        bool grew = nxt.size() > w.size();
        w = std::move(nxt);
        std::set<Word> f2 = collect(w);
        if (f2 == factors && !grew) { stable = 2; }
        else if (f2 == factors) { ++stable; }
        else { stable = 0; factors = std::move(f2); }
        if (stable >= 2 && w.size() >= std::min(max_prefix, 2 * (n + 1))) break;
    }

    auto out = std::make_shared<const std::set<Word>>(std::move(factors));
    std::lock_guard<std::mutex> lk(mu);
    cache[key] = out;
    return out;
}

}  // namespace

std::unique_ptr<BaseAutomaton> make_base_automaton(const BaseSubshiftSpec& spec,
                                                   const ResourceCaps& caps) {
    if (const auto* fs = std::get_if<FullShift>(&spec.v))
        return std::make_unique<FullShiftAutomaton>(fs->alphabet.size);
    if (const auto* sf = std::get_if<Sft>(&spec.v))
        return std::make_unique<SftAutomaton>(*sf, caps);
    if (const auto* un = std::get_if<UnionOfCopies>(&spec.v))
        return std::make_unique<UnionAutomaton>(make_base_automaton(*un->inner, caps), un->copies,
                                                un->inner->alphabet_size());
    throw std::invalid_argument("substitution base has no finite block automaton");
}

bool base_contains(const BaseSubshiftSpec& spec, const Word& w, const ResourceCaps& caps) {
    if (const auto* fs = std::get_if<FullShift>(&spec.v)) {
        check_alphabet(w, fs->alphabet.size, "base_contains");
        return true;
    }
    if (const auto* sf = std::get_if<Sft>(&spec.v)) {
        check_alphabet(w, sf->alphabet.size, "base_contains");
        auto aut = cached_sft_automaton(*sf, caps);
        int ctx = 0;
        for (Symbol s : w) {
            ctx = aut->step(ctx, s);
            if (ctx < 0) return false;
        }
        return aut->live(ctx);
    }
    if (const auto* su = std::get_if<SubstitutionSystem>(&spec.v)) {
        check_alphabet(w, su->alphabet.size, "base_contains");
        if (w.empty()) return true;
        auto f = substitution_factors(*su, w.size(), caps);
        return f->count(w) > 0;
    }
    const auto& un = std::get<UnionOfCopies>(spec.v);
    const int ia = un.inner->alphabet_size();
    check_alphabet(w, un.copies * ia, "base_contains");
    if (w.empty()) return base_contains(*un.inner, w, caps);
    int k = w[0] / ia;
    Word rel;
    rel.reserve(w.size());
    for (Symbol s : w) {
        if (s / ia != k) return false;
        rel.push_back(s % ia);
    }
    return base_contains(*un.inner, rel, caps);
}

BigInt base_language_count(const BaseSubshiftSpec& spec, std::size_t n, const ResourceCaps& caps) {
    if (const auto* fs = std::get_if<FullShift>(&spec.v))
        return bigint_pow(BigInt(fs->alphabet.size), static_cast<unsigned long>(n));
    if (const auto* sf = std::get_if<Sft>(&spec.v)) {
        SftAutomaton aut(*sf, caps);
        std::vector<BigInt> cnt(static_cast<std::size_t>(aut.context_count()), 0);
        cnt[0] = 1;
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<BigInt> nxt(cnt.size(), 0);
            for (std::size_t c = 0; c < cnt.size(); ++c) {
                if (cnt[c] == 0) continue;
                for (Symbol s = 0; s < sf->alphabet.size; ++s) {
                    int t = aut.step(static_cast<int>(c), s);
                    if (t >= 0) nxt[static_cast<std::size_t>(t)] += cnt[c];
                }
            }
            cnt.swap(nxt);
        }
        BigInt total = 0;
        for (std::size_t c = 0; c < cnt.size(); ++c)
            if (aut.live(static_cast<int>(c))) total += cnt[c];
        return total;
    }
    if (const auto* su = std::get_if<SubstitutionSystem>(&spec.v)) {
        if (n == 0) return 1;
        auto f = substitution_factors(*su, n, caps);
        BigInt total = 0;
        for (const auto& w : *f)
            if (w.size() == n) ++total;
        return total;
    }
    const auto& un = std::get<UnionOfCopies>(spec.v);
    BigInt inner = base_language_count(*un.inner, n, caps);
    if (n == 0) return inner;  // 1 iff inner nonempty
    return BigInt(un.copies) * inner;
}

std::vector<Word> base_enumerate_language(const BaseSubshiftSpec& spec, std::size_t n,
                                          const ResourceCaps& caps) {
    const int A = spec.alphabet_size();
    std::vector<Word> out;
    std::size_t visited = 0;
    Word cur;
    // prefix pruning is sound: the language is factor-closed
    auto rec = [&](auto&& self) -> void {
        if (++visited > caps.max_enumeration)
            throw ResourceCapError("base_enumerate_language: node cap exceeded");
        if (cur.size() == n) {
            if (base_contains(spec, cur, caps)) out.push_back(cur);
            return;
        }
        for (Symbol s = 0; s < A; ++s) {
            cur.push_back(s);
            if (base_contains(spec, cur, caps)) self(self);
            cur.pop_back();
        }
    };
    rec(rec);
    return out;
}

bool base_cyclic_admissible(const BaseSubshiftSpec& spec, const Word& w, const ResourceCaps& caps) {
    if (w.empty()) throw std::invalid_argument("base_cyclic_admissible: empty word");
    if (const auto* fs = std::get_if<FullShift>(&spec.v)) {
        check_alphabet(w, fs->alphabet.size, "base_cyclic_admissible");
        return true;
    }
    if (const auto* sf = std::get_if<Sft>(&spec.v)) {
        check_alphabet(w, sf->alphabet.size, "base_cyclic_admissible");
        std::size_t L = 1;
        for (const auto& f : sf->forbidden) L = std::max(L, f.size());
        // w^K covers every cyclic window of length <= L
        std::size_t K = L / w.size() + 2;
        Word unrolled;
        unrolled.reserve(K * w.size());
        for (std::size_t i = 0; i < K; ++i) unrolled.insert(unrolled.end(), w.begin(), w.end());
        for (const auto& f : sf->forbidden) {
            if (f.size() > unrolled.size()) continue;
            for (std::size_t i = 0; i + f.size() <= unrolled.size(); ++i)
                if (std::equal(f.begin(), f.end(), unrolled.begin() + static_cast<long>(i)))
                    return false;
        }
        return true;
    }
    if (std::get_if<SubstitutionSystem>(&spec.v))
        throw std::invalid_argument("cyclic admissibility unsupported for substitution bases");
    const auto& un = std::get<UnionOfCopies>(spec.v);
    const int ia = un.inner->alphabet_size();
    check_alphabet(w, un.copies * ia, "base_cyclic_admissible");
    int k = w[0] / ia;
    Word rel;
    rel.reserve(w.size());
    for (Symbol s : w) {
        if (s / ia != k) return false;
        rel.push_back(s % ia);
    }
    return base_cyclic_admissible(*un.inner, rel, caps);
}

bool base_has_substitution(const BaseSubshiftSpec& spec) {
    if (std::get_if<SubstitutionSystem>(&spec.v)) return true;
    if (const auto* un = std::get_if<UnionOfCopies>(&spec.v))
        return base_has_substitution(*un->inner);
    return false;
}

}  // namespace gapshift
