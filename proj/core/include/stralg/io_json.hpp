#pragma once

// Field-parameterized bridges between the file formats and the in-memory
// types. Kept apart from io.hpp so the compiled core stays untemplated.

#include "stralg/functor.hpp"
#include "stralg/io.hpp"

#include "json.hpp"

namespace stralg {

template <class F>
AlgElem<F> instantiate_elem(F f, const BoundQuiverAlgebra& alg, const AlgElemData& data) {
    AlgElem<F> e = alg_zero(f, alg);
    for (const auto& term : data) {
        int idx = alg.basis_index(term.path);
        if (idx < 0)
            throw std::invalid_argument("element term '" +
                                        path_to_string(alg.quiver(), term.path) +
                                        "' is not a basis path");
        e[idx] = f.add(e[idx], f.from_int(term.coeff));
    }
    return e;
}

template <class F>
TensorFunctor<F> instantiate_functor(F f, const FunctorData& data,
                                     std::shared_ptr<const BoundQuiverAlgebra> source,
                                     std::shared_ptr<const BoundQuiverAlgebra> target) {
    TensorFunctor<F> t;
    t.source = std::move(source);
    t.target = std::move(target);
    t.f = f;
    t.rank = data.rank;
    t.name = data.name;
    auto build = [&](const LamMatData& lm) {
        LamMat<F> m = LamMat<F>::zero(f, *t.source, lm.n);
        for (int i = 0; i < lm.n; ++i)
            for (int j = 0; j < lm.n; ++j)
                m.ent(i, j) =
                    instantiate_elem(f, *t.source, lm.entries[static_cast<size_t>(i) * lm.n + j]);
        return m;
    };
    for (const auto& lm : data.vertex_maps) t.lam_vertex.push_back(build(lm));
    for (const auto& lm : data.arrow_maps) t.lam_arrow.push_back(build(lm));
    return t;
}

template <class F>
Representation<F> instantiate_module(F f, std::shared_ptr<const BoundQuiverAlgebra> alg,
                                     const ModuleData& data) {
    Representation<F> m;
    m.alg = std::move(alg);
    m.f = f;
    m.dims = data.vertex_dims;
    const Quiver& q = m.alg->quiver();
    for (int a = 0; a < q.num_arrows(); ++a) {
        Matrix<F> mat(f, m.dims[q.arrows[a].target], m.dims[q.arrows[a].source]);
        for (int i = 0; i < mat.rows; ++i)
            for (int j = 0; j < mat.cols; ++j) mat.at(i, j) = f.from_int(data.arrows[a][i][j]);
        m.arrows.push_back(std::move(mat));
    }
    std::string why;
    if (!relations_hold(m, &why))
        throw std::invalid_argument("module file violates the algebra relations: " + why);
    return m;
}

template <class F>
std::string module_to_json(const Representation<F>& m) {
    const Quiver& q = m.alg->quiver();
    nlohmann::ordered_json j;
    j["algebra"] = m.alg->name;
    nlohmann::ordered_json dims = nlohmann::ordered_json::object();
    for (size_t x = 0; x < m.dims.size(); ++x) dims[q.vertices[x]] = m.dims[x];
    j["vertex_dims"] = dims;
    nlohmann::ordered_json arrows = nlohmann::ordered_json::object();
    for (int a = 0; a < q.num_arrows(); ++a) {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (int i = 0; i < m.arrows[a].rows; ++i) {
            nlohmann::ordered_json row = nlohmann::ordered_json::array();
            for (int k = 0; k < m.arrows[a].cols; ++k) {
                if constexpr (F::is_rational)
                    row.push_back(m.f.to_string(m.arrows[a].at(i, k)));
                else
                    row.push_back(static_cast<long long>(m.arrows[a].at(i, k)));
            }
            rows.push_back(row);
        }
        arrows[q.arrows[a].name] = rows;
    }
    j["arrows"] = arrows;
    if (m.layout) {
        j["word"] = word_to_string(*m.alg, m.layout->word);
    }
    return j.dump(2) + "\n";
}

} // namespace stralg
