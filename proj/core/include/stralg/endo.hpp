#pragma once

#include "stralg/hom.hpp"
#include "stralg/rng.hpp"

#include <optional>
#include <string>
#include <vector>

namespace stralg {

class FieldTooSmall : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

template <class F>
std::vector<int> vertex_offsets(const Representation<F>& m) {
    std::vector<int> off(m.dims.size());
    int t = 0;
    for (size_t x = 0; x < m.dims.size(); ++x) {
        off[x] = t;
        t += m.dims[x];
    }
    return off;
}

template <class F>
Matrix<F> hom_total_matrix(const Representation<F>& m, const Representation<F>& n,
                           const Hom<F>& h) {
    auto mo = vertex_offsets(m);
    auto no = vertex_offsets(n);
    Matrix<F> t(m.f, n.total_dim(), m.total_dim());
    for (size_t x = 0; x < m.dims.size(); ++x)
        for (int i = 0; i < n.dims[x]; ++i)
            for (int j = 0; j < m.dims[x]; ++j)
                t.at(no[x] + i, mo[x] + j) = h.blocks[x].at(i, j);
    return t;
}

template <class F>
Hom<F> hom_from_total(const Representation<F>& m, const Representation<F>& n,
                      const Matrix<F>& t) {
    auto mo = vertex_offsets(m);
    auto no = vertex_offsets(n);
    Hom<F> h;
    for (size_t x = 0; x < m.dims.size(); ++x) {
        Matrix<F> b(m.f, n.dims[x], m.dims[x]);
        for (int i = 0; i < n.dims[x]; ++i)
            for (int j = 0; j < m.dims[x]; ++j) b.at(i, j) = t.at(no[x] + i, mo[x] + j);
        h.blocks.push_back(std::move(b));
    }
    return h;
}

// Polynomial helpers over F_p, used to pull one eigenvalue out of a minimal
// polynomial when hunting for zero divisors. Coefficients ascending.
inline std::vector<std::uint32_t> fp_poly_mod(const PrimeField& f,
                                              std::vector<std::uint32_t> a,
                                              const std::vector<std::uint32_t>& m) {
    const int dm = static_cast<int>(m.size()) - 1;
    while (static_cast<int>(a.size()) - 1 >= dm) {
        const int da = static_cast<int>(a.size()) - 1;
        std::uint32_t c = f.div(a.back(), m.back());
        for (int i = 0; i <= dm; ++i)
            a[da - dm + i] = f.sub(a[da - dm + i], f.mul(c, m[i]));
        while (a.size() > 1 && a.back() == 0) a.pop_back();
        if (static_cast<int>(a.size()) == 1 && a[0] == 0) break;
    }
    return a;
}

inline std::vector<std::uint32_t> fp_poly_mulmod(const PrimeField& f,
                                                 const std::vector<std::uint32_t>& a,
                                                 const std::vector<std::uint32_t>& b,
                                                 const std::vector<std::uint32_t>& m) {
    std::vector<std::uint32_t> r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
    }
    return fp_poly_mod(f, std::move(r), m);
}

inline std::vector<std::uint32_t> fp_poly_powmod(const PrimeField& f,
                                                 std::vector<std::uint32_t> base,
                                                 std::uint64_t e,
                                                 const std::vector<std::uint32_t>& m) {
    std::vector<std::uint32_t> r{1};
    base = fp_poly_mod(f, std::move(base), m);
    while (e) {
        if (e & 1) r = fp_poly_mulmod(f, r, base, m);
        base = fp_poly_mulmod(f, base, base, m);
        e >>= 1;
    }
    return r;
}

inline std::vector<std::uint32_t> fp_poly_gcd(const PrimeField& f,
                                              std::vector<std::uint32_t> a,
                                              std::vector<std::uint32_t> b) {
    auto trim = [](std::vector<std::uint32_t>& p) {
        while (p.size() > 1 && p.back() == 0) p.pop_back();
    };
    trim(a);
    trim(b);
    while (!(b.size() == 1 && b[0] == 0)) {
        a = fp_poly_mod(f, std::move(a), b);
        trim(a);
        std::swap(a, b);
    }
    if (!(a.size() == 1 && a[0] == 0)) {
        std::uint32_t lead_inv = f.inv(a.back());
        for (auto& c : a) c = f.mul(c, lead_inv);
    }
    return a;
}

// One root in F_p of a monic polynomial, when it has any: strip to the
// product of distinct linear factors via gcd with t^p - t, then split by
// Cantor-Zassenhaus.
inline std::optional<std::uint32_t> fp_poly_some_root(const PrimeField& f,
                                                      std::vector<std::uint32_t> m, Rng& rng) {
    if (m.size() <= 1) return std::nullopt;
    // t^p mod m, minus t
    std::vector<std::uint32_t> tp = fp_poly_powmod(f, {0, 1}, f.p, m);
    if (tp.size() < 2) tp.resize(2, 0);
    tp[1] = f.sub(tp[1], 1);
    std::vector<std::uint32_t> g = fp_poly_gcd(f, m, tp);
    if (g.size() <= 1) return std::nullopt; // no roots in F_p
    for (int guard = 0; guard < 200; ++guard) {
        if (g.size() == 2) return f.neg(g[0]); // monic linear: t + g0
        const std::uint32_t shift = static_cast<std::uint32_t>(uniform_below(rng, f.p));
        // h = (t + shift)^((p-1)/2) - 1 mod g
        std::vector<std::uint32_t> h = fp_poly_powmod(f, {shift, 1}, (f.p - 1) / 2, g);
        if (h.empty()) h = {0};
        h[0] = f.sub(h[0], 1);
        std::vector<std::uint32_t> d = fp_poly_gcd(f, g, h);
        if (d.size() > 1 && d.size() < g.size()) g = d;
    }
    return std::nullopt;
}

} // namespace detail

template <class F>
struct EndAlgebra {
    std::vector<Hom<F>> basis;          // basis of End(M)
    std::vector<Matrix<F>> total;       // same, flattened to total matrices
    Matrix<F> left_mult_gram;           // Tr(L_x L_y) on the basis
    std::vector<std::vector<typename F::Elem>> radical; // coordinates in basis
    int dim = 0;
    int radical_dim = 0;
};

template <class F>
struct IndecResult {
    bool indecomposable = false;
    int end_dim = 0;
    int radical_dim = 0;
    bool radical_nilpotent = false;
    std::optional<Hom<F>> idempotent; // splitting certificate when decomposable
    std::string note;
};

template <class F>
std::optional<Hom<F>> find_splitting_idempotent(const Representation<F>& m,
                                                const EndAlgebra<F>& E, std::uint64_t seed);

namespace detail {

// Coordinates of y in the span of the (independent) columns of B.
template <class F>
std::vector<typename F::Elem> coords_in(const Matrix<F>& B, const Matrix<F>& y) {
    auto sol = solve(B, y);
    if (!sol.consistent) throw std::logic_error("coords_in: vector outside span");
    std::vector<typename F::Elem> c(B.cols);
    for (int i = 0; i < B.cols; ++i) c[i] = sol.particular.at(i, 0);
    return c;
}

template <class F>
Matrix<F> flatten_col(const Matrix<F>& m) {
    Matrix<F> v(m.f, m.rows * m.cols, 1);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) v.at(i * m.cols + j, 0) = m.at(i, j);
    return v;
}

} // namespace detail

template <class F>
EndAlgebra<F> end_algebra(const Representation<F>& m) {
    EndAlgebra<F> E;
    E.basis = hom_space(m, m);
    E.dim = static_cast<int>(E.basis.size());
    for (const auto& h : E.basis) E.total.push_back(detail::hom_total_matrix(m, m, h));

    const int r = E.dim;
    const int d = m.total_dim();
    Matrix<F> B(m.f, d * d, r);
    for (int k = 0; k < r; ++k)
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) B.at(i * d + j, k) = E.total[k].at(i, j);

    // Left multiplication matrices in the chosen basis.
    std::vector<Matrix<F>> L(r, Matrix<F>(m.f, r, r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            Matrix<F> prod = mul(E.total[i], E.total[j]);
            auto c = detail::coords_in(B, detail::flatten_col(prod));
            for (int k = 0; k < r; ++k) L[i].at(k, j) = c[k];
        }

    E.left_mult_gram = Matrix<F>(m.f, r, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            typename F::Elem tr = m.f.zero();
            for (int a = 0; a < r; ++a)
                for (int b = 0; b < r; ++b)
                    tr = m.f.add(tr, m.f.mul(L[i].at(a, b), L[j].at(b, a)));
            E.left_mult_gram.at(i, j) = tr;
        }

    Matrix<F> ker = kernel_basis(E.left_mult_gram);
    E.radical_dim = ker.cols;
    for (int c = 0; c < ker.cols; ++c) {
        std::vector<typename F::Elem> v(r);
        for (int i = 0; i < r; ++i) v[i] = ker.at(i, c);
        E.radical.push_back(std::move(v));
    }
    return E;
}

namespace detail {

// Verify that the span of the given total matrices is nilpotent: powers of
// the subspace must reach zero.
template <class F>
bool subspace_nilpotent(const F& f, std::vector<Matrix<F>> gens, int max_steps) {
    if (gens.empty()) return true;
    std::vector<Matrix<F>> cur = gens;
    for (int step = 0; step < max_steps; ++step) {
        std::vector<Matrix<F>> next;
        for (const auto& x : cur)
            for (const auto& g : gens) next.push_back(mul(x, g));
        // reduce to a basis
        const int d = next.front().rows;
        Matrix<F> rows(f, static_cast<int>(next.size()), d * d);
        for (size_t i = 0; i < next.size(); ++i)
            for (int a = 0; a < d; ++a)
                for (int b = 0; b < d; ++b)
                    rows.at(static_cast<int>(i), a * d + b) = next[i].at(a, b);
        auto pivots = rref(rows);
        if (pivots.empty()) return true;
        cur.clear();
        for (size_t i = 0; i < pivots.size(); ++i) {
            Matrix<F> x(f, d, d);
            for (int a = 0; a < d; ++a)
                for (int b = 0; b < d; ++b) x.at(a, b) = rows.at(static_cast<int>(i), a * d + b);
            cur.push_back(std::move(x));
        }
    }
    return false;
}

} // namespace detail

// Indecomposability through the endomorphism algebra: compute End(M), cut
// out the radical as the kernel of the trace form of the left regular
// representation (valid in characteristic zero or p > dim End, which the
// precondition enforces), and test whether the semisimple quotient is one
// dimensional. When it is not, a splitting idempotent is extracted and
// returned as the certificate.
template <class F>
IndecResult<F> is_indecomposable(const Representation<F>& m, std::uint64_t seed = 0) {
    IndecResult<F> out;
    if (m.total_dim() == 0) {
        out.note = "zero module";
        return out;
    }
    EndAlgebra<F> E = end_algebra(m);
    out.end_dim = E.dim;
    out.radical_dim = E.radical_dim;

    if constexpr (!F::is_rational) {
        if (static_cast<std::uint64_t>(E.dim) >= m.f.p)
            throw FieldTooSmall("dim End = " + std::to_string(E.dim) +
                                " requires a larger prime modulus");
    }

    // The kernel of the trace form must actually be nilpotent.
    std::vector<Matrix<F>> rad_mats;
    for (const auto& v : E.radical) {
        Matrix<F> x(m.f, m.total_dim(), m.total_dim());
        for (int k = 0; k < E.dim; ++k)
            if (!m.f.is_zero(v[k])) x = add(x, scale(E.total[k], v[k]));
        rad_mats.push_back(std::move(x));
    }
    out.radical_nilpotent = detail::subspace_nilpotent(m.f, rad_mats, E.dim + 1);
    if (!out.radical_nilpotent) {
        out.note = "radical candidate failed the nilpotency check";
        return out;
    }

    const int s = E.dim - E.radical_dim;
    if (s == 1) {
        out.indecomposable = true;
        return out;
    }

    // Decomposable: hunt for a splitting idempotent in the semisimple
    // quotient and lift it back.
    out.indecomposable = false;
    out.idempotent = find_splitting_idempotent(m, E, seed);
    if (!out.idempotent) out.note = "no splitting idempotent found (quotient may be a division algebra)";
    return out;
}

// Extract an idempotent endomorphism that is neither 0 nor the identity,
// when End(M)/rad has dimension >= 2. Strategy: find a zero divisor in the
// semisimple quotient S (via basis probes, then minimal polynomials of
// random elements with a root search over F_p), take the left ideal it
// generates, solve the linear system for that ideal's generating
// idempotent, and Newton-lift through the radical.
template <class F>
std::optional<Hom<F>> find_splitting_idempotent(const Representation<F>& m,
                                                const EndAlgebra<F>& E, std::uint64_t seed) {
    const F f = m.f;
    const int r = E.dim;
    const int d = m.total_dim();

    // Coordinate change: columns = radical basis then a complement.
    Matrix<F> cols(f, r, E.radical_dim);
    for (int c = 0; c < E.radical_dim; ++c)
        for (int i = 0; i < r; ++i) cols.at(i, c) = E.radical[c][i];
    // complete to a basis of E greedily with unit vectors
    Matrix<F> full = cols;
    std::vector<int> complement;
    for (int i = 0; i < r && full.cols < r; ++i) {
        Matrix<F> cand(f, r, 1);
        cand.at(i, 0) = f.one();
        Matrix<F> test = hstack(full, cand);
        if (rank(test) > full.cols) {
            full = test;
            complement.push_back(i);
        }
    }
    const int s = r - E.radical_dim;
    auto full_inv = inverse(full);
    if (!full_inv) return std::nullopt;

    // S-coordinates of an E-element: the complement part of its expansion.
    auto to_S = [&](const std::vector<typename F::Elem>& e_coords) {
        Matrix<F> v(f, r, 1);
        for (int i = 0; i < r; ++i) v.at(i, 0) = e_coords[i];
        Matrix<F> w = mul(*full_inv, v);
        std::vector<typename F::Elem> out(s);
        for (int i = 0; i < s; ++i) out[i] = w.at(E.radical_dim + i, 0);
        return out;
    };
    auto S_to_E = [&](const std::vector<typename F::Elem>& s_coords) {
        std::vector<typename F::Elem> e(r, f.zero());
        for (int i = 0; i < s; ++i) e[complement[i]] = s_coords[i];
        return e;
    };
    auto e_to_total = [&](const std::vector<typename F::Elem>& e_coords) {
        Matrix<F> x(f, d, d);
        for (int k = 0; k < r; ++k)
            if (!f.is_zero(e_coords[k])) x = add(x, scale(E.total[k], e_coords[k]));
        return x;
    };

    // Multiplication in S via E and projection.
    Matrix<F> B(f, d * d, r);
    for (int k = 0; k < r; ++k) {
        auto v = detail::flatten_col(E.total[k]);
        for (int i = 0; i < d * d; ++i) B.at(i, k) = v.at(i, 0);
    }
    auto mul_S = [&](const std::vector<typename F::Elem>& a,
                     const std::vector<typename F::Elem>& b) {
        Matrix<F> prod = mul(e_to_total(S_to_E(a)), e_to_total(S_to_E(b)));
        auto e_coords = detail::coords_in(B, detail::flatten_col(prod));
        return to_S(e_coords);
    };

    // Identity of S.
    std::vector<typename F::Elem> idE =
        detail::coords_in(B, detail::flatten_col(Matrix<F>::identity(f, d)));
    std::vector<typename F::Elem> oneS = to_S(idE);

    auto is_zero_vec = [&](const std::vector<typename F::Elem>& v) {
        for (const auto& x : v)
            if (!f.is_zero(x)) return false;
        return true;
    };

    Rng rng = seeded_rng(splitmix64(seed) ^ 0x1d2e3f4a5b6c7d8eull);

    // Zero-divisor candidates in S.
    auto left_mult_S = [&](const std::vector<typename F::Elem>& a) {
        Matrix<F> L(f, s, s);
        for (int j = 0; j < s; ++j) {
            std::vector<typename F::Elem> ej(s, f.zero());
            ej[j] = f.one();
            auto col = mul_S(a, ej);
            for (int i = 0; i < s; ++i) L.at(i, j) = col[i];
        }
        return L;
    };

    auto try_build = [&](const std::vector<typename F::Elem>& zd) -> std::optional<Hom<F>> {
        // Left ideal S * zd.
        Matrix<F> gens(f, s, s);
        for (int j = 0; j < s; ++j) {
            std::vector<typename F::Elem> ej(s, f.zero());
            ej[j] = f.one();
            auto col = mul_S(ej, zd);
            for (int i = 0; i < s; ++i) gens.at(i, j) = col[i];
        }
        // basis of the ideal
        Matrix<F> gt = transpose(gens);
        auto pivots = rref(gt);
        const int ldim = static_cast<int>(pivots.size());
        if (ldim == 0 || ldim == s) return std::nullopt;
        std::vector<std::vector<typename F::Elem>> lbasis;
        for (int i = 0; i < ldim; ++i) {
            std::vector<typename F::Elem> v(s);
            for (int j = 0; j < s; ++j) v[j] = gt.at(i, j);
            lbasis.push_back(std::move(v));
        }
        // Solve y * e = y for all basis y, with e inside the ideal:
        // unknowns are the coefficients of e over lbasis.
        Matrix<F> sys(f, ldim * s, ldim);
        Matrix<F> rhs(f, ldim * s, 1);
        for (int yi = 0; yi < ldim; ++yi) {
            for (int c = 0; c < ldim; ++c) {
                auto prod = mul_S(lbasis[yi], lbasis[c]);
                for (int i = 0; i < s; ++i) sys.at(yi * s + i, c) = prod[i];
            }
            for (int i = 0; i < s; ++i) rhs.at(yi * s + i, 0) = lbasis[yi][i];
        }
        auto sol = solve(sys, rhs);
        if (!sol.consistent) return std::nullopt;
        std::vector<typename F::Elem> eS(s, f.zero());
        for (int c = 0; c < ldim; ++c)
            for (int i = 0; i < s; ++i)
                eS[i] = f.add(eS[i], f.mul(sol.particular.at(c, 0), lbasis[c][i]));
        if (is_zero_vec(eS)) return std::nullopt;

        // Newton lift through the radical: x <- 3x^2 - 2x^3.
        Matrix<F> x = e_to_total(S_to_E(eS));
        for (int it = 0; it < 40; ++it) {
            Matrix<F> x2 = mul(x, x);
            if (x2 == x) break;
            Matrix<F> x3 = mul(x2, x);
            x = sub(scale(x2, f.from_int(3)), scale(x3, f.from_int(2)));
        }
        if (!(mul(x, x) == x)) return std::nullopt;
        if (x.is_zero() || x == Matrix<F>::identity(f, d)) return std::nullopt;

        Hom<F> h = detail::hom_from_total(m, m, x);
        if (!is_homomorphism(m, m, h)) return std::nullopt;
        // off-diagonal leakage would mean x was not in E after all
        if (!(detail::hom_total_matrix(m, m, h) == x)) return std::nullopt;
        return h;
    };

    // Pass 1: basis vectors of S and their differences as zero divisors.
    std::vector<std::vector<typename F::Elem>> candidates;
    for (int i = 0; i < s; ++i) {
        std::vector<typename F::Elem> v(s, f.zero());
        v[i] = f.one();
        candidates.push_back(v);
    }
    for (const auto& cand : candidates) {
        if (is_zero_vec(cand)) continue;
        Matrix<F> L = left_mult_S(cand);
        if (rank(L) < s) {
            auto got = try_build(cand);
            if (got) return got;
        }
    }

    // Pass 2: random elements; use minimal polynomial roots to shift into a
    // zero divisor. Root extraction needs F_p.
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<typename F::Elem> z(s);
        for (int i = 0; i < s; ++i) {
            if constexpr (F::is_rational)
                z[i] = f.from_int(static_cast<long long>(uniform_below(rng, 19)) - 9);
            else
                z[i] = static_cast<typename F::Elem>(uniform_below(rng, f.p));
        }
        if (is_zero_vec(z)) continue;

        // minimal polynomial of z in S by linear dependence of its powers
        std::vector<std::vector<typename F::Elem>> powers;
        powers.push_back(oneS);
        Matrix<F> P(f, s, 1);
        for (int i = 0; i < s; ++i) P.at(i, 0) = oneS[i];
        std::vector<typename F::Elem> cur = oneS;
        std::vector<typename F::Elem> minpoly; // found below
        for (int k = 1; k <= s; ++k) {
            cur = mul_S(cur, z);
            Matrix<F> y(f, s, 1);
            for (int i = 0; i < s; ++i) y.at(i, 0) = cur[i];
            auto sol = solve(P, y);
            if (sol.consistent) {
                // z^k = sum c_i z^i  =>  minpoly = t^k - sum c_i t^i
                minpoly.assign(k + 1, f.zero());
                minpoly[k] = f.one();
                for (int i = 0; i < k; ++i) minpoly[i] = f.neg(sol.particular.at(i, 0));
                break;
            }
            powers.push_back(cur);
            P = hstack(P, y);
        }
        if (minpoly.empty() || minpoly.size() <= 2) continue; // scalar in S

        std::optional<typename F::Elem> root;
        if constexpr (!F::is_rational) {
            std::vector<std::uint32_t> mp(minpoly.begin(), minpoly.end());
            auto got = detail::fp_poly_some_root(f, mp, rng);
            if (got) root = *got;
        } else {
            // rational root probe on small integer candidates
            for (long long num = -16; num <= 16 && !root; ++num) {
                typename F::Elem lam = f.from_int(num);
                typename F::Elem acc = f.zero();
                typename F::Elem pw = f.one();
                for (const auto& c : minpoly) {
                    acc = f.add(acc, f.mul(c, pw));
                    pw = f.mul(pw, lam);
                }
                if (f.is_zero(acc)) root = lam;
            }
        }
        if (!root) continue;

        // zd = h(z) where minpoly = (t - root) h(t): synthetic division.
        std::vector<typename F::Elem> h(minpoly.size() - 1, f.zero());
        typename F::Elem carry = f.zero();
        for (int i = static_cast<int>(minpoly.size()) - 1; i >= 1; --i) {
            carry = f.add(minpoly[i], f.mul(carry, *root));
            h[i - 1] = carry;
        }
        std::vector<typename F::Elem> zd(s, f.zero());
        std::vector<typename F::Elem> zp = oneS;
        for (size_t i = 0; i < h.size(); ++i) {
            for (int j = 0; j < s; ++j) zd[j] = f.add(zd[j], f.mul(h[i], zp[j]));
            zp = mul_S(zp, z);
        }
        if (is_zero_vec(zd)) continue;
        auto got = try_build(zd);
        if (got) return got;
    }
    return std::nullopt;
}

} // namespace stralg
