#include "doctest.h"

#include "fixtures.hpp"
#include "stralg/quiver.hpp"

using namespace stralg;

TEST_CASE("admissibility of the bundled algebra") {
    auto alg = make_lambda();
    CHECK(alg->admissibility().ok);
    CHECK(alg->admissibility().nilpotency_bound == 3);
}

TEST_CASE("single vertex, no arrows: vacuously admissible at n = 2") {
    Quiver q;
    q.vertices = {"v"};
    auto rep = validate_admissible(q, RelationSet{});
    CHECK(rep.ok);
    CHECK(rep.nilpotency_bound == 2);
}

TEST_CASE("a loop with empty relations exceeds the cap") {
    Quiver q;
    q.vertices = {"v"};
    q.arrows = {{"l", 0, 0}};
    auto rep = validate_admissible(q, RelationSet{});
    CHECK_FALSE(rep.ok);
    CHECK_THROWS_AS(BoundQuiverAlgebra(q, RelationSet{}), CapExceeded);
}

TEST_CASE("relation letters that do not compose are malformed") {
    Quiver q;
    q.vertices = {"x", "y"};
    q.arrows = {{"a", 0, 1}};
    RelationSet r;
    PathExpr bad;
    bad.letters = {0, 0}; // a after a does not compose
    r.monomial = {bad};
    auto rep = validate_admissible(q, r);
    CHECK_FALSE(rep.ok);
    CHECK_THROWS_AS(BoundQuiverAlgebra(q, r), MalformedPath);
}

TEST_CASE("path basis of the bundled algebra") {
    auto alg = make_lambda();
    CHECK(alg->dimension() == 9);
    // 3 stationary paths, 4 arrows, and the two surviving length-2 paths
    int stationary = 0, len1 = 0, len2 = 0;
    for (const auto& p : alg->basis()) {
        if (p.stationary()) ++stationary;
        else if (p.length() == 1) ++len1;
        else if (p.length() == 2) ++len2;
    }
    CHECK(stationary == 3);
    CHECK(len1 == 4);
    CHECK(len2 == 2);

    PathExpr ga, db, da;
    ga.letters = {2, 0};
    db.letters = {3, 1};
    da.letters = {3, 0};
    CHECK(alg->basis_index(ga) >= 0);
    CHECK(alg->basis_index(db) >= 0);
    CHECK(alg->basis_index(da) == -1);
    CHECK(alg->in_ideal(da));
    CHECK_FALSE(alg->in_ideal(ga));
}

TEST_CASE("one arrow gives a three element basis") {
    Quiver q;
    q.vertices = {"x", "y"};
    q.arrows = {{"a", 0, 1}};
    BoundQuiverAlgebra alg(q, RelationSet{});
    CHECK(alg.dimension() == 3);
}

TEST_CASE("adding g a to the ideal removes exactly one basis path") {
    Quiver q;
    q.vertices = {"x1", "x2", "x3"};
    q.arrows = {{"a", 0, 1}, {"b", 0, 1}, {"g", 1, 2}, {"d", 1, 2}};
    RelationSet r;
    PathExpr da, gb, ga;
    da.letters = {3, 0};
    gb.letters = {2, 1};
    ga.letters = {2, 0};
    r.monomial = {da, gb, ga};
    BoundQuiverAlgebra alg(q, r);
    CHECK(alg.dimension() == 8);
}

TEST_CASE("the bundled algebra is a string algebra") {
    auto alg = make_lambda();
    CHECK(alg->special_biserial().ok);
    CHECK(alg->string_algebra());
}

TEST_CASE("three arrows out of one vertex violate special biserial") {
    Quiver q;
    q.vertices = {"x", "y"};
    q.arrows = {{"a", 0, 1}, {"b", 0, 1}, {"c", 0, 1}};
    BoundQuiverAlgebra alg(q, RelationSet{});
    auto check = alg.special_biserial();
    CHECK_FALSE(check.ok);
    CHECK(check.violation.find("vertex x") != std::string::npos);
    CHECK_FALSE(alg.string_algebra());
}

TEST_CASE("the Kronecker quiver is special biserial") {
    Quiver q;
    q.vertices = {"u", "v"};
    q.arrows = {{"a", 0, 1}, {"b", 0, 1}};
    BoundQuiverAlgebra alg(q, RelationSet{});
    CHECK(alg.special_biserial().ok);
    CHECK(alg.string_algebra());
}

TEST_CASE("two compositions without relations violate special biserial") {
    // x -> y -> z with two arrows on each side and no relations: the middle
    // vertex admits two surviving compositions through each arrow.
    Quiver q;
    q.vertices = {"x", "y", "z"};
    q.arrows = {{"a", 0, 1}, {"g", 1, 2}, {"d", 1, 2}};
    BoundQuiverAlgebra alg(q, RelationSet{});
    CHECK_FALSE(alg.special_biserial().ok);
}

TEST_CASE("a commutativity relation is not a string algebra") {
    Quiver q;
    q.vertices = {"1", "2", "3", "4"};
    q.arrows = {{"a", 0, 1}, {"b", 0, 2}, {"c", 1, 3}, {"d", 2, 3}};
    RelationSet r;
    GeneralRelation comm;
    PathExpr ca, db;
    ca.letters = {2, 0};
    db.letters = {3, 1};
    comm.push_back({1, ca});
    comm.push_back({-1, db});
    r.general = {comm};
    BoundQuiverAlgebra alg(q, r);
    CHECK_FALSE(alg.string_algebra());
    CHECK(alg.special_biserial().ok);
    // the two parallel length-2 paths are identified, so one basis path dies
    CHECK(alg.dimension() == 4 + 4 + 1);
    CHECK(alg.in_ideal(ca) == false);
}

TEST_CASE("general membership sees combinations, not single paths") {
    Quiver q;
    q.vertices = {"1", "2", "3", "4"};
    q.arrows = {{"a", 0, 1}, {"b", 0, 2}, {"c", 1, 3}, {"d", 2, 3}};
    RelationSet r;
    GeneralRelation comm;
    PathExpr ca, db;
    ca.letters = {2, 0};
    db.letters = {3, 1};
    comm.push_back({1, ca});
    comm.push_back({-1, db});
    r.general = {comm};
    BoundQuiverAlgebra alg(q, r);
    // neither path is in the ideal on its own
    CHECK_FALSE(alg.in_ideal(ca));
    CHECK_FALSE(alg.in_ideal(db));
}

TEST_CASE("stationary path count equals the vertex count") {
    auto alg = make_lambda();
    int stationary = 0;
    for (const auto& p : alg->basis())
        if (p.stationary()) ++stationary;
    CHECK(stationary == alg->quiver().num_vertices());
}
