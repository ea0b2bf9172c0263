#include "doctest.h"

#include "stralg/matrix.hpp"
#include "stralg/rng.hpp"

using namespace stralg;

using FM = Matrix<PrimeField>;
using RM = Matrix<RationalField>;

namespace {
const PrimeField Fp{32003};
}

TEST_CASE("identity system has the trivial solution and empty kernel") {
    FM I = FM::identity(Fp, 4);
    FM b(Fp, 4, 1);
    for (int i = 0; i < 4; ++i) b.at(i, 0) = Fp.from_int(i + 5);
    auto sol = solve(I, b);
    REQUIRE(sol.consistent);
    CHECK(sol.particular == b);
    CHECK(sol.kernel.cols == 0);
}

TEST_CASE("zero map on dimension 3 has a full kernel") {
    FM z(Fp, 3, 3);
    FM b(Fp, 3, 1);
    auto sol = solve(z, b);
    REQUIRE(sol.consistent);
    CHECK(sol.kernel.cols == 3);
    CHECK(sol.particular.is_zero());
}

TEST_CASE("random invertible system solves and multiplies back") {
    Rng rng = seeded_rng(7);
    FM A(Fp, 5, 5);
    do {
        for (auto& v : A.a) v = static_cast<std::uint32_t>(uniform_below(rng, Fp.p));
    } while (rank(A) < 5);
    FM b(Fp, 5, 1);
    for (auto& v : b.a) v = static_cast<std::uint32_t>(uniform_below(rng, Fp.p));
    auto sol = solve(A, b);
    REQUIRE(sol.consistent);
    CHECK(sol.kernel.cols == 0);
    CHECK(mul(A, sol.particular) == b);
}

TEST_CASE("inconsistent system reports no solution") {
    FM A(Fp, 2, 1);
    A.at(0, 0) = 1;
    A.at(1, 0) = 1;
    FM b(Fp, 2, 1);
    b.at(0, 0) = 1;
    b.at(1, 0) = 2;
    CHECK_FALSE(solve(A, b).consistent);
}

TEST_CASE("rank basics") {
    CHECK(rank(FM::identity(Fp, 6)) == 6);
    CHECK(rank(FM(Fp, 4, 7)) == 0);

    // outer product of two nonzero vectors has rank 1
    FM u(Fp, 3, 1), v(Fp, 1, 4);
    u.at(0, 0) = 2; u.at(1, 0) = 5; u.at(2, 0) = 1;
    v.at(0, 0) = 3; v.at(0, 1) = 1; v.at(0, 2) = 4; v.at(0, 3) = 1;
    CHECK(rank(mul(u, v)) == 1);
}

TEST_CASE("rank + nullity = cols on random matrices") {
    Rng rng = seeded_rng(99);
    for (int t = 0; t < 20; ++t) {
        const int r = 1 + static_cast<int>(uniform_below(rng, 6));
        const int c = 1 + static_cast<int>(uniform_below(rng, 6));
        FM A(Fp, r, c);
        for (auto& v : A.a)
            if (uniform_below(rng, 3) == 0) v = static_cast<std::uint32_t>(uniform_below(rng, Fp.p));
        auto ker = kernel_basis(A);
        CHECK(rank(A) + ker.cols == c);
        for (int k = 0; k < ker.cols; ++k) {
            FM col(Fp, c, 1);
            for (int i = 0; i < c; ++i) col.at(i, 0) = ker.at(i, k);
            CHECK(mul(A, col).is_zero());
        }
    }
}

TEST_CASE("quotient by the whole space and by zero") {
    FM all = FM::identity(Fp, 3);
    auto q1 = quotient_basis(all);
    CHECK(q1.dim == 0);

    FM none(Fp, 3, 0);
    auto q2 = quotient_basis(none);
    CHECK(q2.dim == 3);
    CHECK(q2.proj == FM::identity(Fp, 3));
}

TEST_CASE("quotient by a line in dimension 3") {
    FM span(Fp, 3, 1);
    span.at(0, 0) = 1;
    span.at(1, 0) = 1;
    auto q = quotient_basis(span);
    CHECK(q.dim == 2);
    CHECK(mul(q.proj, q.section) == FM::identity(Fp, 2));
    CHECK(mul(q.proj, span).is_zero());
}

TEST_CASE("quotient projection kills exactly the span") {
    Rng rng = seeded_rng(1234);
    for (int t = 0; t < 10; ++t) {
        const int n = 2 + static_cast<int>(uniform_below(rng, 5));
        const int k = static_cast<int>(uniform_below(rng, n + 1));
        FM span(Fp, n, k);
        for (auto& v : span.a) v = static_cast<std::uint32_t>(uniform_below(rng, Fp.p));
        auto q = quotient_basis(span);
        CHECK(q.dim == n - rank(span));
        CHECK(mul(q.proj, q.section) == FM::identity(Fp, q.dim));
        CHECK(mul(q.proj, span).is_zero());
        CHECK(rank(q.proj) == q.dim);
    }
}

TEST_CASE("rational field solves exactly") {
    RationalField Q;
    RM A(Q, 2, 2);
    A.at(0, 0) = Q.from_int(2);
    A.at(0, 1) = Q.from_int(1);
    A.at(1, 0) = Q.from_int(1);
    A.at(1, 1) = Q.from_int(3);
    RM b(Q, 2, 1);
    b.at(0, 0) = Q.from_int(1);
    b.at(1, 0) = Q.from_int(0);
    auto sol = solve(A, b);
    REQUIRE(sol.consistent);
    CHECK(sol.particular.at(0, 0) == RationalField::Elem(3) / 5);
    CHECK(sol.particular.at(1, 0) == RationalField::Elem(-1) / 5);
}
