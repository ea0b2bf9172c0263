#include "stralg/words.hpp"

#include <algorithm>
#include <sstream>

namespace stralg {

bool Word::operator<(const Word& o) const {
    const size_t n = std::min(letters.size(), o.letters.size());
    for (size_t i = 0; i < n; ++i) {
        if (letters[i].arrow != o.letters[i].arrow)
            return letters[i].arrow < o.letters[i].arrow;
        if (letters[i].inverse != o.letters[i].inverse)
            return letters[i].inverse < o.letters[i].inverse;
    }
    return letters.size() < o.letters.size();
}

int letter_source(const Quiver& q, Letter c) {
    const Arrow& a = q.arrows[c.arrow];
    return c.inverse ? a.target : a.source;
}

int letter_target(const Quiver& q, Letter c) {
    const Arrow& a = q.arrows[c.arrow];
    return c.inverse ? a.source : a.target;
}

int word_source(const Quiver& q, const Word& w) {
    return letter_source(q, w.letters.back());
}

int word_target(const Quiver& q, const Word& w) {
    return letter_target(q, w.letters.front());
}

Word invert(const Word& w) {
    Word r;
    r.letters.reserve(w.letters.size());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        r.letters.push_back(it->inverted());
    return r;
}

Word concat(const Word& a, const Word& b) {
    Word r = a;
    r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
    return r;
}

StringCheck is_string(const BoundQuiverAlgebra& alg, const Word& w) {
    const Quiver& q = alg.quiver();
    StringCheck out;
    if (w.empty()) {
        out.reason = "empty word";
        return out;
    }
    for (const Letter& c : w.letters)
        if (c.arrow < 0 || c.arrow >= q.num_arrows())
            throw UnknownArrow("letter names no arrow of the algebra");

    for (int i = 0; i + 1 < w.length(); ++i) {
        if (letter_source(q, w.letters[i]) != letter_target(q, w.letters[i + 1])) {
            out.reason = "walk condition fails";
            out.from = i + 1;
            out.to = i + 2;
            return out;
        }
        if (w.letters[i].inverted() == w.letters[i + 1]) {
            out.reason = "immediate backtrack";
            out.from = i + 1;
            out.to = i + 2;
            return out;
        }
    }

    // Each maximal all-direct window, and the inverse of each all-inverse
    // window, must avoid the ideal as a path. Mixed windows are never paths.
    int i = 0;
    while (i < w.length()) {
        int j = i;
        while (j < w.length() && w.letters[j].inverse == w.letters[i].inverse) ++j;
        // run [i, j)
        for (int lo = i; lo < j; ++lo)
            for (int hi = lo + 1; hi < j; ++hi) {
                PathExpr p;
                if (!w.letters[i].inverse) {
                    for (int k = lo; k <= hi; ++k) p.letters.push_back(w.letters[k].arrow);
                } else {
                    for (int k = hi; k >= lo; --k) p.letters.push_back(w.letters[k].arrow);
                }
                if (alg.in_ideal(p)) {
                    out.reason = "window lies in the ideal";
                    out.from = lo + 1;
                    out.to = hi + 1;
                    return out;
                }
            }
        i = j;
    }
    out.ok = true;
    return out;
}

BandCheck is_band(const BoundQuiverAlgebra& alg, const Word& w, int power_bound) {
    const Quiver& q = alg.quiver();
    BandCheck out;
    StringCheck sc = is_string(alg, w);
    if (!sc.ok) {
        out.reason = "not a string: " + sc.reason;
        return out;
    }
    if (w.letters.front().inverse) {
        out.reason = "first letter is not a direct arrow";
        return out;
    }
    if (!w.letters.back().inverse) {
        out.reason = "last letter is not an inverse arrow";
        return out;
    }
    if (word_target(q, w) != word_source(q, w)) {
        out.reason = "word is not cyclic";
        return out;
    }
    Word pw = w;
    for (int m = 2; m <= power_bound; ++m) {
        pw = concat(pw, w);
        StringCheck pc = is_string(alg, pw);
        if (!pc.ok) {
            out.reason = "power " + std::to_string(m) + " is not a string: " + pc.reason;
            return out;
        }
    }
    out.ok = true;
    return out;
}

Ordering compare(const BoundQuiverAlgebra& alg, const Word& s, const Word& t) {
    if (s == t) return Ordering::Equal;
    if (s.empty() || t.empty())
        throw IncomparableFamilies("cannot compare an empty word");
    if (!(s.letters.front() == t.letters.front()))
        throw IncomparableFamilies("words start with different letters");
    (void)alg;

    const int n = std::min(s.length(), t.length());
    int d = 0;
    while (d < n && s.letters[d] == t.letters[d]) ++d;

    if (d < s.length() && d < t.length()) {
        const bool s_inv = s.letters[d].inverse;
        const bool t_inv = t.letters[d].inverse;
        if (s_inv == t_inv)
            throw std::logic_error("strings diverge with equal direction; "
                                   "not a string-algebra family");
        // Continuing with an inverse letter is the larger branch.
        return t_inv ? Ordering::Less : Ordering::Greater;
    }
    if (d == s.length()) {
        // t = s w : prolongation by an inverse letter moves up.
        return t.letters[d].inverse ? Ordering::Less : Ordering::Greater;
    }
    // s = t w : prolongation by a direct letter moves down.
    return s.letters[d].inverse ? Ordering::Greater : Ordering::Less;
}

QGenCheck is_qgen_pair(const BoundQuiverAlgebra& alg, const Word& u, const Word& v) {
    QGenCheck out;
    if (u == v) {
        out.reason = "not distinct";
        return out;
    }
    BandCheck bu = is_band(alg, u);
    if (!bu.ok) {
        out.reason = "first word: " + bu.reason;
        return out;
    }
    BandCheck bv = is_band(alg, v);
    if (!bv.ok) {
        out.reason = "second word: " + bv.reason;
        return out;
    }
    if (!(u.letters.front() == v.letters.front())) {
        out.reason = "first letters differ";
        return out;
    }
    if (!(u.letters.back() == v.letters.back())) {
        out.reason = "last letters differ";
        return out;
    }
    const int n = std::min(u.length(), v.length());
    bool prefix = true;
    for (int i = 0; i < n; ++i)
        if (!(u.letters[i] == v.letters[i])) { prefix = false; break; }
    if (prefix) {
        out.reason = "one band prolongs the other";
        return out;
    }
    if (compare(alg, u, v) != Ordering::Less) {
        out.reason = "pair is not in ascending order";
        return out;
    }
    out.ok = true;
    return out;
}

Word expand(const BandPair& pair, const BandWord& bw) {
    Word r;
    for (int s : bw.symbols) {
        const Word& b = s == 0 ? pair.u : pair.v;
        r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
    }
    return r;
}

Word chain_element(const BoundQuiverAlgebra& alg, const BandPair& pair, const BandWord& s,
                   const BandWord& t, const BandWord& x) {
    Word w = expand(pair, s);
    w = concat(w, expand(pair, x));
    w = concat(w, expand(pair, t));
    w = concat(w, pair.u);
    StringCheck sc = is_string(alg, w);
    if (!sc.ok)
        throw NotAString("chain element is not a string: " + sc.reason);
    return w;
}

namespace {

// All band words with the given number of symbols, in lexicographic order
// with U before V.
void band_words_of_size(int n, std::vector<BandWord>& out) {
    BandWord bw;
    bw.symbols.assign(n, 0);
    while (true) {
        out.push_back(bw);
        int i = n - 1;
        while (i >= 0 && bw.symbols[i] == 1) bw.symbols[i--] = 0;
        if (i < 0) break;
        bw.symbols[i] = 1;
    }
    if (n == 0) out.resize(out.size()); // single empty word already pushed
}

std::vector<BandWord> band_words_up_to(int max_symbols) {
    std::vector<BandWord> out;
    for (int n = 0; n <= max_symbols; ++n) band_words_of_size(n, out);
    return out;
}

} // namespace

std::vector<ChainElement> enumerate_chain(const BoundQuiverAlgebra& alg, const BandPair& pair,
                                          const BandWord& s, const BandWord& t,
                                          int max_symbols) {
    std::vector<ChainElement> out;
    for (const BandWord& x : band_words_up_to(max_symbols))
        out.push_back(ChainElement{x, chain_element(alg, pair, s, t, x)});
    std::sort(out.begin(), out.end(), [&](const ChainElement& a, const ChainElement& b) {
        return compare(alg, a.word, b.word) == Ordering::Less;
    });
    for (size_t i = 0; i + 1 < out.size(); ++i)
        if (out[i].word == out[i + 1].word)
            throw std::logic_error("chain elements collide; pair is not generating");
    return out;
}

std::optional<BandWord> density_witness(const BoundQuiverAlgebra& alg, const BandPair& pair,
                                        const BandWord& s, const BandWord& t,
                                        const BandWord& x1, const BandWord& x2, int max_len) {
    Word w1 = chain_element(alg, pair, s, t, x1);
    Word w2 = chain_element(alg, pair, s, t, x2);
    if (compare(alg, w1, w2) != Ordering::Less)
        throw OrderViolation("left endpoint is not below the right endpoint");
    for (const BandWord& x : band_words_up_to(max_len)) {
        Word w = chain_element(alg, pair, s, t, x);
        if (compare(alg, w1, w) == Ordering::Less && compare(alg, w, w2) == Ordering::Less)
            return x;
    }
    return std::nullopt;
}

Word parse_word(const BoundQuiverAlgebra& alg, const std::string& text) {
    Word w;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        Letter c;
        if (tok.size() > 3 && tok.substr(tok.size() - 3) == "^-1") {
            c.inverse = true;
            tok = tok.substr(0, tok.size() - 3);
        }
        c.arrow = alg.quiver().arrow_index(tok);
        if (c.arrow < 0) throw UnknownArrow("unknown arrow '" + tok + "'");
        w.letters.push_back(c);
    }
    return w;
}

std::string word_to_string(const BoundQuiverAlgebra& alg, const Word& w) {
    std::string s;
    for (size_t i = 0; i < w.letters.size(); ++i) {
        if (i) s += ' ';
        s += alg.quiver().arrows[w.letters[i].arrow].name;
        if (w.letters[i].inverse) s += "^-1";
    }
    return s;
}

BandWord parse_band_word(const std::string& text) {
    BandWord bw;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        if (tok == "U" || tok == "u")
            bw.symbols.push_back(0);
        else if (tok == "V" || tok == "v")
            bw.symbols.push_back(1);
        else
            throw std::invalid_argument("band word symbol must be U or V, got '" + tok + "'");
    }
    return bw;
}

std::string band_word_to_string(const BandWord& bw) {
    std::string s;
    for (size_t i = 0; i < bw.symbols.size(); ++i) {
        if (i) s += ' ';
        s += bw.symbols[i] == 0 ? "U" : "V";
    }
    return s;
}

} // namespace stralg
