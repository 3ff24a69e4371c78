/* word.hpp -- alphabets, finite words, cyclic words, text formats */
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gapshift {

using Symbol = int;
using Word = std::vector<Symbol>;

// Contiguous alphabet {0, ..., size-1}.
struct Alphabet {
    int size = 0;
    explicit Alphabet(int n = 0) : size(n) {
        if (n < 1) throw std::invalid_argument("alphabet must have at least one symbol");
    }
    bool contains(Symbol s) const { return s >= 0 && s < size; }
};

// Non-empty word representing the periodic point w^inf.
struct CyclicWord {
    Word period;
    explicit CyclicWord(Word w) : period(std::move(w)) {
        if (period.empty()) throw std::invalid_argument("cyclic word must be non-empty");
    }
    Symbol at(std::size_t i) const { return period[i % period.size()]; }
    std::size_t length() const { return period.size(); }
};

inline bool word_in_alphabet(const Word& w, const Alphabet& a) {
    for (Symbol s : w)
        if (!a.contains(s)) return false;
    return true;
}

// Text format: space-separated decimal symbols ("1 1 0 1").
// Compact form for alphabets up to 36 symbols: digits then lowercase letters ("1101", "a3").
std::string format_word(const Word& w, bool compact = false);
Word parse_word(const std::string& text, bool compact = false);

// Lexicographically least rotation (canonical orbit representative).
Word canonical_rotation(const Word& w);
// Smallest d dividing |w| with w = (w[0..d-1])^(|w|/d); equals the orbit size of w^inf.
std::size_t minimal_period(const Word& w);

}  // namespace gapshift
