#include "doctest.h"

#include "fixtures.hpp"
#include "stralg/words.hpp"

#include <set>

using namespace stralg;

namespace {

BandPair lambda_pair(const BoundQuiverAlgebra& alg) {
    return BandPair{W(alg, "g a b^-1 d^-1"), W(alg, "g d^-1")};
}

} // namespace

TEST_CASE("invert is the formal inverse and an involution") {
    auto alg = make_lambda();
    CHECK(invert(W(*alg, "g d^-1")) == W(*alg, "d g^-1"));
    CHECK(invert(W(*alg, "a")) == W(*alg, "a^-1"));
    CHECK(invert(W(*alg, "g a b^-1 d^-1")) == W(*alg, "d b a^-1 g^-1"));

    for (const char* w : {"g", "g a", "g a b^-1 d^-1", "g d^-1 g a b^-1 d^-1"}) {
        Word word = W(*alg, w);
        CHECK(invert(invert(word)) == word);
    }
}

TEST_CASE("string condition over the bundled algebra") {
    auto alg = make_lambda();
    CHECK(is_string(*alg, W(*alg, "g a")).ok);

    auto bad = is_string(*alg, W(*alg, "d a"));
    CHECK_FALSE(bad.ok);
    CHECK(bad.from == 1);
    CHECK(bad.to == 2);

    CHECK_FALSE(is_string(*alg, W(*alg, "a a^-1")).ok);
    CHECK(is_string(*alg, W(*alg, "g a b^-1 d^-1")).ok);
    // the inverse reading is checked too: b^-1 a^-1 reads as the path a b
    CHECK(is_string(*alg, W(*alg, "a^-1 d^-1")).ok == false); // d a in inverse reading
}

TEST_CASE("unknown letters are rejected") {
    auto alg = make_lambda();
    CHECK_THROWS_AS(W(*alg, "z"), UnknownArrow);
}

TEST_CASE("bands over the bundled algebra") {
    auto alg = make_lambda();
    CHECK(is_band(*alg, W(*alg, "g d^-1")).ok);
    CHECK(is_band(*alg, W(*alg, "g a b^-1 d^-1")).ok);
    CHECK(is_band(*alg, W(*alg, "d g^-1")).ok);
    CHECK(is_band(*alg, W(*alg, "d b a^-1 g^-1")).ok);
    CHECK_FALSE(is_band(*alg, W(*alg, "g a")).ok);      // ends direct
    CHECK_FALSE(is_band(*alg, W(*alg, "g g^-1")).ok);   // not even a walk
    CHECK_FALSE(is_band(*alg, W(*alg, "b^-1 a")).ok);   // starts inverse
}

TEST_CASE("order calibration on the generating pair") {
    auto alg = make_lambda();
    BandPair p = lambda_pair(*alg);
    CHECK(compare(*alg, p.u, p.v) == Ordering::Less);
    CHECK(compare(*alg, p.u, p.u) == Ordering::Equal);

    Word uu = concat(p.u, p.u);
    Word vu = concat(p.v, p.u);
    CHECK(compare(*alg, uu, p.u) == Ordering::Less);
    CHECK(compare(*alg, p.u, vu) == Ordering::Less);
    CHECK(compare(*alg, uu, vu) == Ordering::Less);
    CHECK(compare(*alg, vu, p.u) == Ordering::Greater);

    CHECK_THROWS_AS(compare(*alg, p.u, W(*alg, "d g^-1")), IncomparableFamilies);
}

TEST_CASE("qgen pair checks") {
    auto alg = make_lambda();
    BandPair p = lambda_pair(*alg);
    CHECK(is_qgen_pair(*alg, p.u, p.v).ok);
    CHECK(is_qgen_pair(*alg, invert(p.u), invert(p.v)).ok);

    auto same = is_qgen_pair(*alg, p.v, p.v);
    CHECK_FALSE(same.ok);
    CHECK(same.reason == "not distinct");

    auto swapped = is_qgen_pair(*alg, p.v, p.u);
    CHECK_FALSE(swapped.ok);

    // a band and its own square: prolongation
    auto prol = is_qgen_pair(*alg, p.u, concat(p.u, p.u));
    CHECK_FALSE(prol.ok);
    CHECK(prol.reason == "one band prolongs the other");
}

TEST_CASE("chain elements expand to validated strings") {
    auto alg = make_lambda();
    BandPair p = lambda_pair(*alg);
    BandWord phi;

    CHECK(chain_element(*alg, p, phi, phi, phi) == p.u);
    CHECK(chain_element(*alg, p, phi, phi, BandWord{{1}}) == concat(p.v, p.u));
    CHECK(chain_element(*alg, p, phi, phi, BandWord{{1}}).length() == 6);
    CHECK(chain_element(*alg, p, phi, phi, BandWord{{0}}).length() == 8);
}

TEST_CASE("chain enumeration is sorted, strict and complete") {
    auto alg = make_lambda();
    BandPair p = lambda_pair(*alg);
    BandWord phi;

    auto c0 = enumerate_chain(*alg, p, phi, phi, 0);
    REQUIRE(c0.size() == 1);
    CHECK(c0[0].word == p.u);

    auto c1 = enumerate_chain(*alg, p, phi, phi, 1);
    REQUIRE(c1.size() == 3);
    CHECK(c1[0].word == concat(p.u, p.u));
    CHECK(c1[1].word == p.u);
    CHECK(c1[2].word == concat(p.v, p.u));

    auto c2 = enumerate_chain(*alg, p, phi, phi, 2);
    REQUIRE(c2.size() == 7);
    for (size_t i = 0; i + 1 < c2.size(); ++i)
        CHECK(compare(*alg, c2[i].word, c2[i + 1].word) == Ordering::Less);

    // frozen order at truncation 2, written in band symbols
    std::vector<std::string> expected = {"U U U", "U U", "U V U", "U", "V U U", "V U", "V V U"};
    for (size_t i = 0; i < c2.size(); ++i) {
        BandWord withU = c2[i].x;
        withU.symbols.push_back(0);
        CHECK(band_word_to_string(withU) == expected[i]);
    }
}

TEST_CASE("chain elements at a truncation are never endpoints one level up") {
    auto alg = make_lambda();
    BandPair p = lambda_pair(*alg);
    BandWord phi;
    for (int n = 0; n <= 2; ++n) {
        auto cn = enumerate_chain(*alg, p, phi, phi, n);
        auto cn1 = enumerate_chain(*alg, p, phi, phi, n + 1);
        CHECK(compare(*alg, cn1.front().word, cn.front().word) == Ordering::Less);
        CHECK(compare(*alg, cn.back().word, cn1.back().word) == Ordering::Less);
    }
}

TEST_CASE("density witnesses between chain elements") {
    auto alg = make_lambda();
    BandPair p = lambda_pair(*alg);
    BandWord phi;
    BandWord u1{{0}}; // X = U, element UU

    // between UU and U
    auto w1 = density_witness(*alg, p, phi, phi, u1, phi, 4);
    REQUIRE(w1.has_value());
    Word e1 = chain_element(*alg, p, phi, phi, *w1);
    CHECK(compare(*alg, chain_element(*alg, p, phi, phi, u1), e1) == Ordering::Less);
    CHECK(compare(*alg, e1, p.u) == Ordering::Less);

    // between UU and VU the plain U qualifies
    BandWord v1{{1}};
    auto w2 = density_witness(*alg, p, phi, phi, u1, v1, 4);
    REQUIRE(w2.has_value());

    // identical endpoints violate the precondition
    CHECK_THROWS_AS(density_witness(*alg, p, phi, phi, u1, u1, 4), OrderViolation);
}

TEST_CASE("density across all adjacent pairs at truncation 2") {
    auto alg = make_lambda();
    BandPair p = lambda_pair(*alg);
    BandWord phi;
    auto c2 = enumerate_chain(*alg, p, phi, phi, 2);
    for (size_t i = 0; i + 1 < c2.size(); ++i) {
        auto w = density_witness(*alg, p, phi, phi, c2[i].x, c2[i + 1].x, 4);
        CHECK(w.has_value());
    }
}

TEST_CASE("compare is a strict total order on the truncation 2 chain") {
    auto alg = make_lambda();
    BandPair p = lambda_pair(*alg);
    BandWord phi;
    auto c2 = enumerate_chain(*alg, p, phi, phi, 2);
    for (size_t i = 0; i < c2.size(); ++i)
        for (size_t j = 0; j < c2.size(); ++j) {
            Ordering o = compare(*alg, c2[i].word, c2[j].word);
            if (i == j) CHECK(o == Ordering::Equal);
            else if (i < j) CHECK(o == Ordering::Less);
            else CHECK(o == Ordering::Greater);
        }
    // transitivity on all triples
    for (size_t i = 0; i < c2.size(); ++i)
        for (size_t j = i + 1; j < c2.size(); ++j)
            for (size_t k = j + 1; k < c2.size(); ++k) {
                CHECK(compare(*alg, c2[i].word, c2[j].word) == Ordering::Less);
                CHECK(compare(*alg, c2[j].word, c2[k].word) == Ordering::Less);
                CHECK(compare(*alg, c2[i].word, c2[k].word) == Ordering::Less);
            }
}

TEST_CASE("word round trip through text") {
    auto alg = make_lambda();
    for (const char* s : {"g a b^-1 d^-1", "g d^-1", "a", "d b a^-1 g^-1"}) {
        Word w = W(*alg, s);
        CHECK(word_to_string(*alg, w) == s);
    }
    CHECK(band_word_to_string(parse_band_word("U V U")) == "U V U");
    CHECK(parse_band_word("").symbols.empty());
}
