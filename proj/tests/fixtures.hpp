#pragma once

#include "stralg/quiver.hpp"
#include "stralg/words.hpp"
#include "stralg/rng.hpp"

#include <memory>

// The bundled two-by-two gentle quiver used throughout the tests:
// vertices x1, x2, x3; parallel arrows a, b : x1 -> x2 and g, d : x2 -> x3;
// relations "d a" and "g b".
inline std::shared_ptr<const stralg::BoundQuiverAlgebra> make_lambda() {
    using namespace stralg;
    Quiver q;
    q.vertices = {"x1", "x2", "x3"};
    q.arrows = {{"a", 0, 1}, {"b", 0, 1}, {"g", 1, 2}, {"d", 1, 2}};
    RelationSet r;
    PathExpr da, gb;
    da.letters = {3, 0};
    gb.letters = {2, 1};
    r.monomial = {da, gb};
    return std::make_shared<BoundQuiverAlgebra>(std::move(q), std::move(r));
}

inline stralg::Word W(const stralg::BoundQuiverAlgebra& alg, const std::string& text) {
    return stralg::parse_word(alg, text);
}

// Seeded random valid string over the algebra: start from a random letter
// and extend on the right while the string condition allows it.
inline stralg::Word random_string_word(const stralg::BoundQuiverAlgebra& alg, stralg::Rng& rng,
                                       int max_len) {
    using namespace stralg;
    const Quiver& q = alg.quiver();
    std::vector<Letter> all;
    for (int a = 0; a < q.num_arrows(); ++a) {
        all.push_back(Letter{a, false});
        all.push_back(Letter{a, true});
    }
    Word w;
    while (w.empty()) {
        Letter c = all[uniform_below(rng, all.size())];
        w.letters = {c};
        if (!is_string(alg, w).ok) w.letters.clear();
    }
    const int target = 1 + static_cast<int>(uniform_below(rng, max_len));
    while (w.length() < target) {
        std::vector<Letter> options;
        for (const Letter& c : all) {
            Word ext = w;
            ext.letters.push_back(c);
            if (is_string(alg, ext).ok) options.push_back(c);
        }
        if (options.empty()) break;
        w.letters.push_back(options[uniform_below(rng, options.size())]);
    }
    return w;
}
