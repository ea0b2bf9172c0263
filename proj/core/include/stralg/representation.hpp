#pragma once

#include "stralg/matrix.hpp"
#include "stralg/quiver.hpp"
#include "stralg/words.hpp"

#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace stralg {

class AlgebraMismatch : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Canonical basis bookkeeping of a string module: basis vector i sits at
// quiver vertex pos[i]; local[i] is its index inside that vertex space.
struct StringLayout {
    Word word;
    std::vector<int> pos;
    std::vector<int> local;
};

// Finite-dimensional representation: one space per vertex, one matrix per
// arrow (target dim x source dim columns act from the left).
template <class F>
struct Representation {
    std::shared_ptr<const BoundQuiverAlgebra> alg;
    F f;
    std::vector<int> dims;
    std::vector<Matrix<F>> arrows;
    std::optional<StringLayout> layout;

    int total_dim() const { return std::accumulate(dims.begin(), dims.end(), 0); }

    static Representation zero(F field, std::shared_ptr<const BoundQuiverAlgebra> a) {
        Representation r;
        r.alg = std::move(a);
        r.f = field;
        r.dims.assign(r.alg->quiver().num_vertices(), 0);
        for (const Arrow& ar : r.alg->quiver().arrows) {
            (void)ar;
            r.arrows.push_back(Matrix<F>(field, 0, 0));
        }
        return r;
    }
};

// Composite action of a path, as a matrix from the source vertex space to
// the target vertex space.
template <class F>
Matrix<F> path_action(const Representation<F>& m, const PathExpr& p) {
    const Quiver& q = m.alg->quiver();
    if (p.stationary()) return Matrix<F>::identity(m.f, m.dims[p.vertex]);
    Matrix<F> acc = m.arrows[p.letters.back()];
    for (int i = static_cast<int>(p.letters.size()) - 2; i >= 0; --i)
        acc = mul(m.arrows[p.letters[i]], acc);
    (void)q;
    return acc;
}

// Every relation of the algebra must evaluate to the zero map.
template <class F>
bool relations_hold(const Representation<F>& m, std::string* why = nullptr) {
    const auto& rel = m.alg->relations();
    for (const PathExpr& g : rel.monomial) {
        if (!path_action(m, g).is_zero()) {
            if (why) *why = "monomial relation " + path_to_string(m.alg->quiver(), g);
            return false;
        }
    }
    for (const GeneralRelation& g : rel.general) {
        const PathExpr& p0 = g.front().path;
        Matrix<F> acc(m.f, m.dims[path_target(m.alg->quiver(), p0)],
                      m.dims[path_source(m.alg->quiver(), p0)]);
        for (const auto& t : g)
            acc = add(acc, scale(path_action(m, t.path), m.f.from_int(t.coeff)));
        if (!acc.is_zero()) {
            if (why) *why = "general relation fails";
            return false;
        }
    }
    // Arrow matrix shapes are part of the contract too.
    const Quiver& q = m.alg->quiver();
    for (int a = 0; a < q.num_arrows(); ++a)
        if (m.arrows[a].rows != m.dims[q.arrows[a].target] ||
            m.arrows[a].cols != m.dims[q.arrows[a].source]) {
            if (why) *why = "arrow matrix shape mismatch at " + q.arrows[a].name;
            return false;
        }
    return true;
}

// The string module M(S): one basis vector per walk node, a direct letter
// c_i maps z_{i+1} to z_i, an inverse letter a^-1 at position i means the
// arrow a maps z_i to z_{i+1}.
template <class F>
Representation<F> string_module(F field, std::shared_ptr<const BoundQuiverAlgebra> alg,
                                const Word& w) {
    StringCheck sc = is_string(*alg, w);
    if (!sc.ok) throw NotAString("string_module: " + sc.reason);
    const Quiver& q = alg->quiver();
    const int n = w.length();

    StringLayout lay;
    lay.word = w;
    lay.pos.resize(n + 1);
    for (int i = 0; i < n; ++i) lay.pos[i] = letter_target(q, w.letters[i]);
    lay.pos[n] = letter_source(q, w.letters[n - 1]);

    Representation<F> m;
    m.alg = std::move(alg);
    m.f = field;
    m.dims.assign(q.num_vertices(), 0);
    lay.local.resize(n + 1);
    for (int i = 0; i <= n; ++i) lay.local[i] = m.dims[lay.pos[i]]++;

    for (const Arrow& a : q.arrows)
        m.arrows.push_back(Matrix<F>(field, m.dims[a.target], m.dims[a.source]));

    for (int i = 0; i < n; ++i) {
        const Letter c = w.letters[i];
        Matrix<F>& mat = m.arrows[c.arrow];
        if (!c.inverse)
            mat.at(lay.local[i], lay.local[i + 1]) = field.one();
        else
            mat.at(lay.local[i + 1], lay.local[i]) = field.one();
    }
    m.layout = std::move(lay);

    std::string why;
    if (!relations_hold(m, &why))
        throw std::logic_error("string module violates relations: " + why);
    return m;
}

// A homomorphism between representations of the same algebra: one block per
// vertex, f_x : M_x -> N_x.
template <class F>
struct Hom {
    std::vector<Matrix<F>> blocks;

    bool is_zero() const {
        for (const auto& b : blocks)
            if (!b.is_zero()) return false;
        return true;
    }
};

template <class F>
Hom<F> identity_hom(const Representation<F>& m) {
    Hom<F> h;
    for (int d : m.dims) h.blocks.push_back(Matrix<F>::identity(m.f, d));
    return h;
}

template <class F>
Hom<F> zero_hom(const Representation<F>& m, const Representation<F>& n) {
    Hom<F> h;
    for (size_t x = 0; x < m.dims.size(); ++x)
        h.blocks.push_back(Matrix<F>(m.f, n.dims[x], m.dims[x]));
    return h;
}

template <class F>
Hom<F> compose(const Hom<F>& g, const Hom<F>& h) {
    // g after h
    Hom<F> r;
    for (size_t x = 0; x < g.blocks.size(); ++x) r.blocks.push_back(mul(g.blocks[x], h.blocks[x]));
    return r;
}

template <class F>
Hom<F> hom_add(const Hom<F>& g, const Hom<F>& h) {
    Hom<F> r;
    for (size_t x = 0; x < g.blocks.size(); ++x) r.blocks.push_back(add(g.blocks[x], h.blocks[x]));
    return r;
}

template <class F>
Hom<F> hom_scale(const Hom<F>& g, const typename F::Elem& c) {
    Hom<F> r;
    for (const auto& b : g.blocks) r.blocks.push_back(scale(b, c));
    return r;
}

template <class F>
bool hom_eq(const Hom<F>& g, const Hom<F>& h) {
    if (g.blocks.size() != h.blocks.size()) return false;
    for (size_t x = 0; x < g.blocks.size(); ++x)
        if (!(g.blocks[x] == h.blocks[x])) return false;
    return true;
}

// Does h intertwine the arrow actions?
template <class F>
bool is_homomorphism(const Representation<F>& m, const Representation<F>& n, const Hom<F>& h) {
    const Quiver& q = m.alg->quiver();
    for (int a = 0; a < q.num_arrows(); ++a) {
        const int s = q.arrows[a].source, t = q.arrows[a].target;
        if (!(mul(h.blocks[t], m.arrows[a]) == mul(n.arrows[a], h.blocks[s]))) return false;
    }
    return true;
}

template <class F>
bool hom_invertible(const Hom<F>& h) {
    for (const auto& b : h.blocks) {
        if (b.rows != b.cols) return false;
        if (rank(b) != b.rows) return false;
    }
    return true;
}

template <class F>
std::optional<Hom<F>> hom_inverse(const Hom<F>& h) {
    Hom<F> r;
    for (const auto& b : h.blocks) {
        auto inv = inverse(b);
        if (!inv) return std::nullopt;
        r.blocks.push_back(*inv);
    }
    return r;
}

template <class F>
struct DirectSum {
    Representation<F> rep;
    Hom<F> incl_left, incl_right; // M -> M+N, N -> M+N
    Hom<F> proj_left, proj_right; // M+N -> M, M+N -> N
};

template <class F>
DirectSum<F> direct_sum(const Representation<F>& m, const Representation<F>& n) {
    if (m.alg.get() != n.alg.get())
        throw AlgebraMismatch("direct_sum: representations over different algebras");
    DirectSum<F> out;
    out.rep.alg = m.alg;
    out.rep.f = m.f;
    for (size_t x = 0; x < m.dims.size(); ++x) out.rep.dims.push_back(m.dims[x] + n.dims[x]);
    for (size_t a = 0; a < m.arrows.size(); ++a)
        out.rep.arrows.push_back(block_diag(m.arrows[a], n.arrows[a]));

    for (size_t x = 0; x < m.dims.size(); ++x) {
        const int dm = m.dims[x], dn = n.dims[x];
        Matrix<F> il(m.f, dm + dn, dm), ir(m.f, dm + dn, dn);
        Matrix<F> pl(m.f, dm, dm + dn), pr(m.f, dn, dm + dn);
        for (int i = 0; i < dm; ++i) {
            il.at(i, i) = m.f.one();
            pl.at(i, i) = m.f.one();
        }
        for (int i = 0; i < dn; ++i) {
            ir.at(dm + i, i) = m.f.one();
            pr.at(i, dm + i) = m.f.one();
        }
        out.incl_left.blocks.push_back(std::move(il));
        out.incl_right.blocks.push_back(std::move(ir));
        out.proj_left.blocks.push_back(std::move(pl));
        out.proj_right.blocks.push_back(std::move(pr));
    }
    return out;
}

template <class F>
Representation<F> simple_module(F field, std::shared_ptr<const BoundQuiverAlgebra> alg,
                                int vertex) {
    Representation<F> r = Representation<F>::zero(field, std::move(alg));
    r.dims[vertex] = 1;
    const Quiver& q = r.alg->quiver();
    for (int a = 0; a < q.num_arrows(); ++a)
        r.arrows[a] = Matrix<F>(field, r.dims[q.arrows[a].target], r.dims[q.arrows[a].source]);
    return r;
}

// The projective module over the given vertex: basis paths starting there.
// Returns the representation plus the position of the stationary generator
// (its vertex and local index).
template <class F>
struct ProjectiveModule {
    Representation<F> rep;
    int gen_vertex = -1;
    int gen_local = -1;
};

template <class F>
ProjectiveModule<F> projective_module(F field, std::shared_ptr<const BoundQuiverAlgebra> alg,
                                      int vertex) {
    if (!alg->monomial_relations_only())
        throw std::logic_error("projective_module requires a monomial relation ideal");
    const Quiver& q = alg->quiver();
    // Basis paths p with source `vertex`, grouped per target vertex in the
    // algebra's basis order.
    std::vector<std::vector<int>> per_vertex(q.num_vertices()); // basis indices
    for (int b = 0; b < alg->dimension(); ++b) {
        const PathExpr& p = alg->basis()[b];
        if (path_source(q, p) == vertex) per_vertex[path_target(q, p)].push_back(b);
    }
    ProjectiveModule<F> out;
    out.rep.alg = alg;
    out.rep.f = field;
    out.rep.dims.assign(q.num_vertices(), 0);
    std::vector<int> local_of_basis(alg->dimension(), -1);
    for (int v = 0; v < q.num_vertices(); ++v) {
        out.rep.dims[v] = static_cast<int>(per_vertex[v].size());
        for (int i = 0; i < out.rep.dims[v]; ++i) local_of_basis[per_vertex[v][i]] = i;
    }
    for (int a = 0; a < q.num_arrows(); ++a) {
        const int s = q.arrows[a].source, t = q.arrows[a].target;
        Matrix<F> mat(field, out.rep.dims[t], out.rep.dims[s]);
        for (int i = 0; i < out.rep.dims[s]; ++i) {
            const int b = per_vertex[s][i];
            // multiply the arrow on the left of the basis path
            const PathExpr& p = alg->basis()[b];
            if (path_target(q, p) != q.arrows[a].source) continue;
            PathExpr ap;
            ap.letters.push_back(a);
            if (!p.stationary())
                ap.letters.insert(ap.letters.end(), p.letters.begin(), p.letters.end());
            int prod = alg->in_ideal(ap) ? -1 : alg->basis_index(ap);
            if (prod >= 0) mat.at(local_of_basis[prod], i) = field.one();
        }
        out.rep.arrows.push_back(std::move(mat));
    }
    PathExpr e;
    e.vertex = vertex;
    out.gen_vertex = vertex;
    out.gen_local = local_of_basis[alg->basis_index(e)];

    std::string why;
    if (!relations_hold(out.rep, &why))
        throw std::logic_error("projective module violates relations: " + why);
    return out;
}

} // namespace stralg
