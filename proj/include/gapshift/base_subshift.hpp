/* base_subshift.hpp -- base systems Z: full shifts, SFTs, substitution subshifts,
 * disjoint unions of relabeled copies. One-sided; language = factors of points. */
#pragma once

#include "gapshift/rational.hpp"
#include "gapshift/word.hpp"

#include <memory>
#include <optional>
#include <variant>
#include <vector>

namespace gapshift {

struct FullShift {
    Alphabet alphabet;
};

// Forbidden-word subshift. Membership is exact: a word is in the language iff it
// avoids every forbidden factor and admits an infinite continuation (live-state
// fixed point on the window automaton), since factors of points are exactly the
// prefixes of points for one-sided forbidden-word systems.
struct Sft {
    Alphabet alphabet;
    std::vector<Word> forbidden;
};

// Fixed point of a non-erasing substitution with prolongable seed
// (rules[seed] starts with seed and has length >= 2).
struct SubstitutionSystem {
    Alphabet alphabet;
    std::vector<Word> rules;  // indexed by symbol
    Symbol seed = 0;
};

struct BaseSubshiftSpec;

// m disjoint copies of the inner system; copy k uses symbols
// [k*|inner|, (k+1)*|inner|).
struct UnionOfCopies {
    std::shared_ptr<const BaseSubshiftSpec> inner;
    int copies = 2;
};

struct BaseSubshiftSpec {
    std::variant<FullShift, Sft, SubstitutionSystem, UnionOfCopies> v;
    int alphabet_size() const;
};

BaseSubshiftSpec make_full_shift(int alphabet_size);
BaseSubshiftSpec make_sft(int alphabet_size, std::vector<Word> forbidden);
BaseSubshiftSpec make_substitution(int alphabet_size, std::vector<Word> rules, Symbol seed);
BaseSubshiftSpec make_union_of_copies(BaseSubshiftSpec inner, int copies);

struct ResourceCaps {
    std::size_t max_states = 2'000'000;       // DP/automaton states
    std::size_t max_enumeration = 40'000'000; // brute-force nodes / expansion symbols
};

// True iff w is a factor of some point of Z. Empty word: true iff Z is non-empty.
bool base_contains(const BaseSubshiftSpec& spec, const Word& w,
                   const ResourceCaps& caps = {});

// |L_n(Z)| exactly.
BigInt base_language_count(const BaseSubshiftSpec& spec, std::size_t n,
                           const ResourceCaps& caps = {});

// All words of L_n(Z) in lexicographic order (test/diagnostic surface; capped).
std::vector<Word> base_enumerate_language(const BaseSubshiftSpec& spec, std::size_t n,
                                          const ResourceCaps& caps = {});

// Deterministic block automaton over nonzero blocks, used by the gapped counting DP.
// Contexts are dense ids; -1 rejects. A block read so far is in the language iff
// every step succeeded and live(ctx) holds at its end.
class BaseAutomaton {
  public:
    virtual ~BaseAutomaton() = default;
    virtual int context_count() const = 0;
    virtual int start(Symbol s) const = 0;          // block-initial symbol
    virtual int step(int ctx, Symbol s) const = 0;  // extend block
    virtual bool live(int ctx) const = 0;
    virtual bool nonempty() const = 0;  // Z has at least one point
};

// Throws std::invalid_argument for Substitution bases (no finite presentation).
std::unique_ptr<BaseAutomaton> make_base_automaton(const BaseSubshiftSpec& spec,
                                                   const ResourceCaps& caps = {});

// True iff the spec contains a substitution system (then only the
// enumeration-backed operations apply).
bool base_has_substitution(const BaseSubshiftSpec& spec);

// True iff the periodic point w^inf lies in Z (all its factors avoid the
// forbidden set). Supported for FullShift, Sft and unions of those.
bool base_cyclic_admissible(const BaseSubshiftSpec& spec, const Word& w,
                            const ResourceCaps& caps = {});

}  // namespace gapshift
