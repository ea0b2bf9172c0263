#include "doctest.h"

#include "fixtures.hpp"
#include "stralg/dot.hpp"
#include "stralg/io.hpp"
#include "stralg/io_json.hpp"

#include <cstdlib>
#include <fstream>

using namespace stralg;

namespace {

const PrimeField Fp{32003};

std::string data_dir() {
    const char* env = std::getenv("STRALG_DATA_DIR");
    return env ? env : "data";
}

} // namespace

TEST_CASE("the bundled algebra file loads and matches the fixture") {
    auto alg = load_algebra(data_dir() + "/lambda.json");
    CHECK(alg->name == "lambda");
    CHECK(alg->dimension() == 9);
    CHECK(alg->string_algebra());
    CHECK(alg->admissibility().nilpotency_bound == 3);
}

TEST_CASE("algebra serialization round trips") {
    auto alg = load_algebra(data_dir() + "/lambda.json");
    std::string text = algebra_to_json(*alg);
    auto again = parse_algebra(text, "<roundtrip>");
    CHECK(again->dimension() == alg->dimension());
    CHECK(again->quiver().vertices == alg->quiver().vertices);
    CHECK(again->quiver().num_arrows() == alg->quiver().num_arrows());
    CHECK(again->string_algebra());
    CHECK(again->relations().monomial.size() == 2);
}

TEST_CASE("json syntax errors carry line and column") {
    try {
        parse_algebra("{\n  \"vertices\": [\"x\"\n", "<bad>");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line >= 2);
    }
}

TEST_CASE("an unknown vertex in an arrow is located in the file") {
    const std::string text = "{\n"
                             "  \"vertices\": [\"x\", \"y\"],\n"
                             "  \"arrows\": [\n"
                             "    {\"name\": \"a\", \"source\": \"x\", \"target\": \"zz\"}\n"
                             "  ]\n"
                             "}\n";
    try {
        parse_algebra(text, "<bad>");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 4);
        CHECK(std::string(e.what()).find("zz") != std::string::npos);
    }
}

TEST_CASE("the bundled instance file resolves") {
    auto inst = load_instance(data_dir() + "/lambda_instance.json");
    CHECK(inst.u == "g a b^-1 d^-1");
    CHECK(inst.v == "g d^-1");
    CHECK(inst.theta_vertex == "x3");
    auto alg = load_algebra(inst.algebra_path);
    CHECK(alg->string_algebra());
}

TEST_CASE("bundled functor files validate") {
    auto alg = load_algebra(data_dir() + "/lambda.json");
    for (const char* name : {"functor_identity.json", "functor_duplication.json"}) {
        const std::string path = data_dir() + "/" + name;
        auto paths = functor_paths(path);
        auto source = load_algebra(paths.source);
        auto target = load_algebra(paths.target);
        auto data = load_functor_data(path, source, target);
        auto t = instantiate_functor(Fp, data, source, target);
        CHECK(validate_functor(t).ok);
    }
}

TEST_CASE("the bundled gluing embedding file validates and embeds") {
    const std::string path = data_dir() + "/functor_k3_embedding.json";
    auto paths = functor_paths(path);
    auto source = load_algebra(paths.source);
    auto target = load_algebra(paths.target);
    auto data = load_functor_data(path, source, target);
    auto t = instantiate_functor(Fp, data, source, target);
    CHECK(t.rank == 4);
    CHECK(validate_functor(t).ok);

    // the two nontrivial structure blocks generate the full 2x2 matrix
    // algebra over the source, which is the fullness certificate
    LamMat<PrimeField> xi2 = LamMat<PrimeField>::zero(Fp, *source, 2);
    LamMat<PrimeField> xi3 = LamMat<PrimeField>::zero(Fp, *source, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            xi2.ent(i, j) = t.lam_arrow[1].ent(2 + i, j);
            xi3.ent(i, j) = t.lam_arrow[2].ent(2 + i, j);
        }
    CHECK(lam_closure_dim(Fp, *source, 2, {xi2, xi3}) == 4 * source->dimension());
}

TEST_CASE("module json round trips through the loader") {
    auto alg = load_algebra(data_dir() + "/lambda.json");
    auto m = string_module(Fp, alg, W(*alg, "g a b^-1 d^-1"));
    std::string text = module_to_json(m);

    const std::string tmp = "/tmp/stralg_module_test.json";
    {
        std::ofstream out(tmp);
        out << text;
    }
    auto data = load_module_data(tmp, alg);
    auto again = instantiate_module(Fp, alg, data);
    CHECK(again.dims == m.dims);
    for (size_t a = 0; a < m.arrows.size(); ++a) CHECK(again.arrows[a] == m.arrows[a]);
}

TEST_CASE("dot export draws the zigzag") {
    auto alg = make_lambda();
    std::string dot = string_module_dot(*alg, W(*alg, "g d^-1"));
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("z1@x3") != std::string::npos);
    CHECK(dot.find("z2 -> z1") != std::string::npos);
    CHECK(dot.find("z2 -> z3") != std::string::npos);
}

TEST_CASE("input path resolution prefers existing files then the data dir") {
    CHECK(resolve_input_path(data_dir() + "/lambda.json", "") == data_dir() + "/lambda.json");
    CHECK(resolve_input_path("lambda", data_dir()) == data_dir() + "/lambda.json");
    CHECK(resolve_input_path("lambda.json", data_dir()) == data_dir() + "/lambda.json");
}
