#include "gapshift/word.hpp"

#include <algorithm>
#include <sstream>

namespace gapshift {

static char compact_digit(Symbol s) {
    if (s < 0 || s > 35) throw std::invalid_argument("compact form needs symbols in [0,35]");
    return s < 10 ? static_cast<char>('0' + s) : static_cast<char>('a' + (s - 10));
}

static Symbol compact_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'z') return 10 + (c - 'a');
    throw std::invalid_argument(std::string("bad compact symbol '") + c + "'");
}

std::string format_word(const Word& w, bool compact) {
    std::string out;
    if (compact) {
        out.reserve(w.size());
        for (Symbol s : w) out.push_back(compact_digit(s));
        return out;
    }
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out.push_back(' ');
        out += std::to_string(w[i]);
    }
    return out;
}

Word parse_word(const std::string& text, bool compact) {
    Word w;
    if (compact) {
        for (char c : text) {
            if (c == ' ' || c == '\t') continue;
            w.push_back(compact_value(c));
        }
        return w;
    }
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        std::size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size() || v < 0) throw std::invalid_argument("bad symbol '" + tok + "'");
        w.push_back(v);
    }
    return w;
}

Word canonical_rotation(const Word& w) {
    Word best = w, cur = w;
    for (std::size_t i = 1; i < w.size(); ++i) {
        std::rotate(cur.begin(), cur.begin() + 1, cur.end());
        if (cur < best) best = cur;
    }
    return best;
}

std::size_t minimal_period(const Word& w) {
    const std::size_t n = w.size();
    for (std::size_t d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        bool ok = true;
        for (std::size_t i = d; i < n && ok; ++i) ok = (w[i] == w[i - d]);
        if (ok) return d;
    }
    return n;
}

}  // namespace gapshift
