#pragma once

#include "stralg/quiver.hpp"

#include <optional>
#include <string>
#include <vector>

namespace stralg {

// One letter of a walk: an arrow taken forwards or backwards.
struct Letter {
    int arrow = -1;
    bool inverse = false;

    bool operator==(const Letter& o) const {
        return arrow == o.arrow && inverse == o.inverse;
    }
    Letter inverted() const { return Letter{arrow, !inverse}; }
};

// A word c_1 ... c_n over Q_1 and the formal inverses, stored left to
// right; the walk is traversed from the right, matching path composition.
struct Word {
    std::vector<Letter> letters;

    int length() const { return static_cast<int>(letters.size()); }
    bool empty() const { return letters.empty(); }
    bool operator==(const Word& o) const { return letters == o.letters; }
    bool operator<(const Word& o) const; // arbitrary strict order for containers
};

int letter_source(const Quiver& q, Letter c);
int letter_target(const Quiver& q, Letter c);

// Endpoints of the walk: source s(c_n), target t(c_1).
int word_source(const Quiver& q, const Word& w);
int word_target(const Quiver& q, const Word& w);

Word invert(const Word& w);
Word concat(const Word& a, const Word& b);

struct StringCheck {
    bool ok = false;
    std::string reason;
    int from = -1; // 1-based index range of the violating window, when known
    int to = -1;
};

class UnknownArrow : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Walk + string condition over the algebra: consecutive letters fit
// together, no immediate backtracking, and no all-direct or all-inverse
// window lies in the ideal when read as a path.
StringCheck is_string(const BoundQuiverAlgebra& a, const Word& w);

struct BandCheck {
    bool ok = false;
    std::string reason;
};

// A band: a cyclic string, first letter direct, last letter inverse, with
// powers up to `power_bound` still strings.
BandCheck is_band(const BoundQuiverAlgebra& a, const Word& w, int power_bound = 3);

enum class Ordering { Less, Equal, Greater };

class IncomparableFamilies : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Total order on strings sharing their first letter. At the first
// divergence the word that continues with an inverse letter is the larger
// one; a prolongation by an inverse letter moves up, by a direct letter
// moves down. The orientation is pinned by the order/hom calibration tests.
Ordering compare(const BoundQuiverAlgebra& a, const Word& s, const Word& t);

struct QGenCheck {
    bool ok = false;
    std::string reason;
};

struct BandPair {
    Word u;
    Word v;
};

QGenCheck is_qgen_pair(const BoundQuiverAlgebra& a, const Word& u, const Word& v);

// Word over the two-symbol alphabet {U, V}; empty means the unit.
struct BandWord {
    std::vector<int> symbols; // 0 = U, 1 = V

    int size() const { return static_cast<int>(symbols.size()); }
    bool operator==(const BandWord& o) const { return symbols == o.symbols; }
};

Word expand(const BandPair& pair, const BandWord& bw);

class NotAString : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};
class OrderViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The element S X T U of the generated chain; throws NotAString when the
// concatenation violates the string condition.
Word chain_element(const BoundQuiverAlgebra& a, const BandPair& pair, const BandWord& s,
                   const BandWord& t, const BandWord& x);

// All chain elements with |X| <= max_symbols, sorted ascending and checked
// pairwise distinct. Returns the band words alongside their expansions.
struct ChainElement {
    BandWord x;
    Word word;
};
std::vector<ChainElement> enumerate_chain(const BoundQuiverAlgebra& a, const BandPair& pair,
                                          const BandWord& s, const BandWord& t,
                                          int max_symbols);

// Bounded search for a band word strictly between the two given ones in
// the chain order; words are scanned by length then lexicographically.
std::optional<BandWord> density_witness(const BoundQuiverAlgebra& a, const BandPair& pair,
                                        const BandWord& s, const BandWord& t,
                                        const BandWord& x1, const BandWord& x2, int max_len);

// "g a b^-1 d^-1" <-> Word; parse throws UnknownArrow on undeclared names.
Word parse_word(const BoundQuiverAlgebra& a, const std::string& text);
std::string word_to_string(const BoundQuiverAlgebra& a, const Word& w);
BandWord parse_band_word(const std::string& text);
std::string band_word_to_string(const BandWord& bw);

} // namespace stralg
