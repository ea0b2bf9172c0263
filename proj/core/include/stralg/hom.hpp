#pragma once

#include "stralg/representation.hpp"

namespace stralg {

namespace detail {

// Variable layout for the intertwining system: the entries of every block
// f_x (row-major), blocks concatenated in vertex order.
struct HomVars {
    std::vector<int> offset; // per vertex
    int total = 0;
};

template <class F>
HomVars hom_vars(const Representation<F>& m, const Representation<F>& n) {
    HomVars v;
    v.offset.resize(m.dims.size());
    for (size_t x = 0; x < m.dims.size(); ++x) {
        v.offset[x] = v.total;
        v.total += n.dims[x] * m.dims[x];
    }
    return v;
}

template <class F>
int var_index(const HomVars& v, const Representation<F>& m, const Representation<F>& n, int x,
              int row, int col) {
    (void)n;
    return v.offset[x] + row * m.dims[x] + col;
}

// Rows expressing f_{t(a)} M_a = N_a f_{s(a)} for every arrow.
template <class F>
Matrix<F> intertwining_system(const Representation<F>& m, const Representation<F>& n,
                              const HomVars& vars) {
    const Quiver& q = m.alg->quiver();
    int rows = 0;
    for (int a = 0; a < q.num_arrows(); ++a)
        rows += n.dims[q.arrows[a].target] * m.dims[q.arrows[a].source];

    Matrix<F> sys(m.f, rows, vars.total);
    int r = 0;
    for (int a = 0; a < q.num_arrows(); ++a) {
        const int s = q.arrows[a].source, t = q.arrows[a].target;
        const Matrix<F>& Ma = m.arrows[a];
        const Matrix<F>& Na = n.arrows[a];
        for (int i = 0; i < n.dims[t]; ++i)
            for (int j = 0; j < m.dims[s]; ++j) {
                // (f_t M_a)[i][j] - (N_a f_s)[i][j] = 0
                for (int k = 0; k < m.dims[t]; ++k)
                    sys.at(r, var_index(vars, m, n, t, i, k)) =
                        m.f.add(sys.at(r, var_index(vars, m, n, t, i, k)), Ma.at(k, j));
                for (int k = 0; k < n.dims[s]; ++k)
                    sys.at(r, var_index(vars, m, n, s, k, j)) =
                        m.f.sub(sys.at(r, var_index(vars, m, n, s, k, j)), Na.at(i, k));
                ++r;
            }
    }
    return sys;
}

template <class F>
Hom<F> hom_from_vector(const Representation<F>& m, const Representation<F>& n,
                       const HomVars& vars, const Matrix<F>& column, int col) {
    Hom<F> h;
    for (size_t x = 0; x < m.dims.size(); ++x) {
        Matrix<F> b(m.f, n.dims[x], m.dims[x]);
        for (int i = 0; i < n.dims[x]; ++i)
            for (int j = 0; j < m.dims[x]; ++j)
                b.at(i, j) = column.at(vars.offset[x] + i * m.dims[x] + j, col);
        h.blocks.push_back(std::move(b));
    }
    return h;
}

} // namespace detail

// Basis of Hom(m, n) as per-vertex matrix tuples.
template <class F>
std::vector<Hom<F>> hom_space(const Representation<F>& m, const Representation<F>& n) {
    if (m.alg.get() != n.alg.get())
        throw AlgebraMismatch("hom_space: representations over different algebras");
    auto vars = detail::hom_vars(m, n);
    Matrix<F> sys = detail::intertwining_system(m, n, vars);
    Matrix<F> ker = kernel_basis(sys);
    std::vector<Hom<F>> basis;
    for (int c = 0; c < ker.cols; ++c)
        basis.push_back(detail::hom_from_vector(m, n, vars, ker, c));
    return basis;
}

template <class F>
int hom_dim(const Representation<F>& m, const Representation<F>& n) {
    auto vars = detail::hom_vars(m, n);
    Matrix<F> sys = detail::intertwining_system(m, n, vars);
    return vars.total - rank(std::move(sys));
}

// Affine solve: homs f with the extra inhomogeneous condition
// f * pre = post (blockwise). Used for pointed homs and pointing setups.
template <class F>
struct ConstrainedHoms {
    bool exists = false;
    Hom<F> particular;
    std::vector<Hom<F>> homogeneous; // basis of the solutions of f * pre = 0
};

template <class F>
ConstrainedHoms<F> solve_hom_with_condition(const Representation<F>& m,
                                            const Representation<F>& n,
                                            const std::vector<Matrix<F>>& pre,
                                            const std::vector<Matrix<F>>& post) {
    auto vars = detail::hom_vars(m, n);
    Matrix<F> sys = detail::intertwining_system(m, n, vars);

    int extra = 0;
    for (size_t x = 0; x < m.dims.size(); ++x) extra += n.dims[x] * pre[x].cols;

    Matrix<F> full(m.f, sys.rows + extra, vars.total);
    Matrix<F> rhs(m.f, sys.rows + extra, 1);
    for (int i = 0; i < sys.rows; ++i)
        for (int j = 0; j < sys.cols; ++j) full.at(i, j) = sys.at(i, j);

    int r = sys.rows;
    for (size_t x = 0; x < m.dims.size(); ++x) {
        for (int i = 0; i < n.dims[x]; ++i)
            for (int j = 0; j < pre[x].cols; ++j) {
                for (int k = 0; k < m.dims[x]; ++k)
                    full.at(r, vars.offset[x] + i * m.dims[x] + k) = pre[x].at(k, j);
                rhs.at(r, 0) = post[x].at(i, j);
                ++r;
            }
    }

    auto sol = solve(full, rhs);
    ConstrainedHoms<F> out;
    if (!sol.consistent) return out;
    out.exists = true;
    out.particular = detail::hom_from_vector(m, n, vars, sol.particular, 0);
    for (int c = 0; c < sol.kernel.cols; ++c)
        out.homogeneous.push_back(detail::hom_from_vector(m, n, vars, sol.kernel, c));
    return out;
}

} // namespace stralg
