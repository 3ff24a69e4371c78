/* observable.hpp -- depth-k cylinder observables with exact rational values */
#pragma once

#include "gapshift/rational.hpp"
#include "gapshift/word.hpp"

#include <map>

namespace gapshift {

// phi(x) depends on x_0..x_{k-1} only. The table is total on length-k words
// over the ambient alphabet; missing entries default to `fallback`.
struct Observable {
    int depth = 1;
    std::map<Word, Rational> table;
    Rational fallback = 0;

    Rational value(const Word& w) const {
        auto it = table.find(w);
        return it == table.end() ? fallback : it->second;
    }
};

// chi_[w]: indicator of the cylinder [w].
inline Observable indicator(const Word& w) {
    Observable o;
    o.depth = static_cast<int>(w.size());
    if (w.empty()) throw std::invalid_argument("indicator: empty cylinder word");
    o.table[w] = 1;
    return o;
}

inline Observable constant_observable(const Rational& c) {
    Observable o;
    o.depth = 1;
    o.fallback = c;
    return o;
}

// a*phi + b pointwise (same depth).
inline Observable affine(const Observable& phi, const Rational& a, const Rational& b) {
    Observable o;
    o.depth = phi.depth;
    o.fallback = a * phi.fallback + b;
    for (const auto& [w, v] : phi.table) o.table[w] = a * v + b;
    return o;
}

// phi evaluated at offset i of word x; requires i + depth <= |x|.
inline Rational evaluate_observable(const Observable& phi, const Word& x, std::size_t i) {
    if (i + static_cast<std::size_t>(phi.depth) > x.size())
        throw std::invalid_argument("evaluate_observable: window exceeds word");
    Word win(x.begin() + static_cast<long>(i), x.begin() + static_cast<long>(i) + phi.depth);
    return phi.value(win);
}

// phi evaluated at offset i of the periodic point w^inf (window wraps).
inline Rational evaluate_observable_cyclic(const Observable& phi, const CyclicWord& x, std::size_t i) {
    Word win;
    win.reserve(static_cast<std::size_t>(phi.depth));
    for (int k = 0; k < phi.depth; ++k) win.push_back(x.at(i + static_cast<std::size_t>(k)));
    return phi.value(win);
}

}  // namespace gapshift
