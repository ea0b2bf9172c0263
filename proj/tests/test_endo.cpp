#include "doctest.h"

#include "fixtures.hpp"
#include "stralg/endo.hpp"
#include "stralg/iso.hpp"

using namespace stralg;

namespace {
const PrimeField Fp{32003};
}

TEST_CASE("string modules are indecomposable") {
    auto alg = make_lambda();
    for (const char* w : {"g d^-1", "g a b^-1 d^-1", "g", "a", "g a"}) {
        auto m = string_module(Fp, alg, W(*alg, w));
        auto res = is_indecomposable(m);
        CHECK(res.indecomposable);
        CHECK(res.radical_nilpotent);
        CHECK(res.end_dim - res.radical_dim == 1);
    }
}

TEST_CASE("the simple projective is indecomposable") {
    auto alg = make_lambda();
    auto theta = projective_module(Fp, alg, 2).rep;
    auto res = is_indecomposable(theta);
    CHECK(res.indecomposable);
    CHECK(res.end_dim == 1);
}

TEST_CASE("a doubled string module splits with an idempotent certificate") {
    auto alg = make_lambda();
    auto mv = string_module(Fp, alg, W(*alg, "g d^-1"));
    auto sum = direct_sum(mv, mv).rep;
    auto res = is_indecomposable(sum, 3);
    CHECK_FALSE(res.indecomposable);
    REQUIRE(res.idempotent.has_value());
    const Hom<PrimeField>& e = *res.idempotent;
    CHECK(is_homomorphism(sum, sum, e));
    CHECK(hom_eq(compose(e, e), e));
    CHECK_FALSE(e.is_zero());
    CHECK_FALSE(hom_eq(e, identity_hom(sum)));
}

TEST_CASE("a mixed direct sum splits with an idempotent certificate") {
    auto alg = make_lambda();
    auto mu = string_module(Fp, alg, W(*alg, "g a b^-1 d^-1"));
    auto mg = string_module(Fp, alg, W(*alg, "g"));
    auto sum = direct_sum(mu, mg).rep;
    auto res = is_indecomposable(sum, 17);
    CHECK_FALSE(res.indecomposable);
    REQUIRE(res.idempotent.has_value());
    CHECK(hom_eq(compose(*res.idempotent, *res.idempotent), *res.idempotent));
}

TEST_CASE("random string modules are indecomposable, their doubles are not") {
    auto alg = make_lambda();
    Rng rng = seeded_rng(2024);
    for (int t = 0; t < 25; ++t) {
        Word w = random_string_word(*alg, rng, 8);
        auto m = string_module(Fp, alg, w);
        auto res = is_indecomposable(m, t);
        CHECK(res.indecomposable);

        Word w2 = random_string_word(*alg, rng, 6);
        auto n = string_module(Fp, alg, w2);
        auto sum = direct_sum(m, n).rep;
        auto sres = is_indecomposable(sum, t);
        CHECK_FALSE(sres.indecomposable);
        REQUIRE(sres.idempotent.has_value());
        CHECK(is_homomorphism(sum, sum, *sres.idempotent));
        CHECK(hom_eq(compose(*sres.idempotent, *sres.idempotent), *sres.idempotent));
        CHECK_FALSE(sres.idempotent->is_zero());
        CHECK_FALSE(hom_eq(*sres.idempotent, identity_hom(sum)));
    }
}

TEST_CASE("the zero module is not indecomposable") {
    auto alg = make_lambda();
    auto z = Representation<PrimeField>::zero(Fp, alg);
    CHECK_FALSE(is_indecomposable(z).indecomposable);
}

TEST_CASE("a too small field is rejected") {
    auto alg = make_lambda();
    PrimeField f2{2};
    auto mv = string_module(f2, alg, W(*alg, "g d^-1"));
    auto sum = direct_sum(mv, mv).rep;
    // End of the double has dimension 4 >= 2
    CHECK_THROWS_AS(is_indecomposable(sum), FieldTooSmall);
}

TEST_CASE("indecomposability over the rationals") {
    RationalField Q;
    auto alg = make_lambda();
    auto mv = string_module(Q, alg, W(*alg, "g d^-1"));
    CHECK(is_indecomposable(mv).indecomposable);

    auto mu = string_module(Q, alg, W(*alg, "g a b^-1 d^-1"));
    auto sum = direct_sum(mu, mv).rep;
    auto res = is_indecomposable(sum);
    CHECK_FALSE(res.indecomposable);
    REQUIRE(res.idempotent.has_value());
    CHECK(hom_eq(compose(*res.idempotent, *res.idempotent), *res.idempotent));
}
