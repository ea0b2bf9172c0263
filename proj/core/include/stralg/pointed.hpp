#pragma once

#include "stralg/endo.hpp"
#include "stralg/hom.hpp"
#include "stralg/iso.hpp"
#include "stralg/rng.hpp"

#include <optional>
#include <string>
#include <vector>

namespace stralg {

class ThetaMismatch : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A module together with a homomorphism from the fixed pointing source.
template <class F>
struct PointedModule {
    std::shared_ptr<const Representation<F>> theta;
    Representation<F> mod;
    Hom<F> chi; // blocks mod.dims[x] x theta->dims[x]

    bool chi_nonzero() const { return !chi.is_zero(); }
    bool chi_injective() const {
        int r = 0;
        for (const auto& b : chi.blocks) r += rank(b);
        return r == theta->total_dim();
    }
};

template <class F>
void check_same_theta(const PointedModule<F>& p, const PointedModule<F>& q) {
    if (p.theta.get() != q.theta.get())
        throw ThetaMismatch("pointed modules over different pointing sources");
}

template <class F>
PointedModule<F> make_pointed(std::shared_ptr<const Representation<F>> theta,
                              Representation<F> mod, Hom<F> chi) {
    PointedModule<F> p{std::move(theta), std::move(mod), std::move(chi)};
    if (!is_homomorphism(*p.theta, p.mod, p.chi))
        throw std::invalid_argument("pointing map is not a homomorphism");
    return p;
}

// All pointed homs src -> dst as an affine space; exists == false when the
// pointing conditions are infeasible.
template <class F>
ConstrainedHoms<F> pointed_homs(const PointedModule<F>& src, const PointedModule<F>& dst) {
    check_same_theta(src, dst);
    if (src.mod.alg.get() != dst.mod.alg.get())
        throw AlgebraMismatch("pointed_homs: different algebras");
    return solve_hom_with_condition(src.mod, dst.mod, src.chi.blocks, dst.chi.blocks);
}

template <class F>
std::optional<Hom<F>> pointed_hom_exists(const PointedModule<F>& src,
                                         const PointedModule<F>& dst) {
    auto sol = pointed_homs(src, dst);
    if (!sol.exists) return std::nullopt;
    return sol.particular;
}

template <class F>
PointedModule<F> pointed_direct_sum(const PointedModule<F>& p, const PointedModule<F>& q) {
    check_same_theta(p, q);
    DirectSum<F> ds = direct_sum(p.mod, q.mod);
    Hom<F> chi;
    for (size_t x = 0; x < p.mod.dims.size(); ++x)
        chi.blocks.push_back(vstack(p.chi.blocks[x], q.chi.blocks[x]));
    return make_pointed(p.theta, std::move(ds.rep), std::move(chi));
}

template <class F>
struct PushoutResult {
    PointedModule<F> pm;
    Hom<F> eps_left;  // M -> M*N
    Hom<F> eps_right; // N -> M*N
};

// Pointed pushout: quotient of the direct sum by the antidiagonal image of
// the pointing source, with induced arrow maps verified well defined.
template <class F>
PushoutResult<F> pointed_pushout(const PointedModule<F>& p, const PointedModule<F>& q) {
    check_same_theta(p, q);
    const F f = p.mod.f;
    const Quiver& quiv = p.mod.alg->quiver();
    const int nv = quiv.num_vertices();

    std::vector<Matrix<F>> glue;     // per vertex: columns spanning the glued subspace
    std::vector<QuotientBasis<F>> qb;
    for (int x = 0; x < nv; ++x) {
        glue.push_back(vstack(p.chi.blocks[x], scale(q.chi.blocks[x], f.from_int(-1))));
        qb.push_back(quotient_basis(glue.back()));
    }

    Representation<F> rep;
    rep.alg = p.mod.alg;
    rep.f = f;
    for (int x = 0; x < nv; ++x) rep.dims.push_back(qb[x].dim);
    for (int a = 0; a < quiv.num_arrows(); ++a) {
        const int s = quiv.arrows[a].source, t = quiv.arrows[a].target;
        Matrix<F> big = block_diag(p.mod.arrows[a], q.mod.arrows[a]);
        // The arrow must carry the glued subspace at s into the one at t.
        if (!mul(qb[t].proj, mul(big, glue[s])).is_zero())
            throw std::logic_error("pushout: induced arrow map is not well defined");
        rep.arrows.push_back(mul(qb[t].proj, mul(big, qb[s].section)));
    }
    std::string why;
    if (!relations_hold(rep, &why))
        throw std::logic_error("pushout violates relations: " + why);

    Hom<F> eps_l, eps_r;
    for (int x = 0; x < nv; ++x) {
        const int dm = p.mod.dims[x], dn = q.mod.dims[x];
        Matrix<F> il(f, dm + dn, dm), ir(f, dm + dn, dn);
        for (int i = 0; i < dm; ++i) il.at(i, i) = f.one();
        for (int i = 0; i < dn; ++i) ir.at(dm + i, i) = f.one();
        eps_l.blocks.push_back(mul(qb[x].proj, il));
        eps_r.blocks.push_back(mul(qb[x].proj, ir));
    }

    Hom<F> chi = compose(eps_l, p.chi);
    Hom<F> chi_r = compose(eps_r, q.chi);
    if (!hom_eq(chi, chi_r))
        throw std::logic_error("pushout: the two composite pointings disagree");

    PushoutResult<F> out;
    out.pm = make_pointed(p.theta, std::move(rep), std::move(chi));
    out.eps_left = std::move(eps_l);
    out.eps_right = std::move(eps_r);
    if (!is_homomorphism(p.mod, out.pm.mod, out.eps_left) ||
        !is_homomorphism(q.mod, out.pm.mod, out.eps_right))
        throw std::logic_error("pushout: structure maps are not homomorphisms");
    return out;
}

enum class PointedOrder { Equivalent, LessThan, GreaterThan, Incomparable };

// Contravariant convention: p <= q when a pointed hom q -> p exists.
template <class F>
PointedOrder classify(const PointedModule<F>& p, const PointedModule<F>& q) {
    const bool le = pointed_hom_exists(q, p).has_value(); // p <= q
    const bool ge = pointed_hom_exists(p, q).has_value(); // q <= p
    if (le && ge) return PointedOrder::Equivalent;
    if (le) return PointedOrder::LessThan;
    if (ge) return PointedOrder::GreaterThan;
    return PointedOrder::Incomparable;
}

// Search the affine space of pointed homs p -> q for an invertible one.
template <class F>
std::optional<Hom<F>> pointed_isomorphism(const PointedModule<F>& p, const PointedModule<F>& q,
                                          int trials = 24, std::uint64_t seed = 0) {
    auto sol = pointed_homs(p, q);
    if (!sol.exists) return std::nullopt;
    if (p.mod.dims != q.mod.dims) return std::nullopt;
    if (hom_invertible(sol.particular)) return sol.particular;
    Rng rng = seeded_rng(seed ^ 0x5eedf00d12345678ull);
    for (int t = 0; t < trials; ++t) {
        Hom<F> cand = sol.particular;
        for (const auto& h : sol.homogeneous) {
            typename F::Elem c;
            if constexpr (F::is_rational)
                c = p.mod.f.from_int(static_cast<long long>(uniform_below(rng, 19)) - 9);
            else
                c = static_cast<typename F::Elem>(uniform_below(rng, p.mod.f.p));
            cand = hom_add(cand, hom_scale(h, c));
        }
        if (hom_invertible(cand)) return cand;
    }
    return std::nullopt;
}

// ---- lattice fragments ------------------------------------------------

enum class NodeKind { Seed, Sum, Pushout };

template <class F>
struct FragmentNode {
    PointedModule<F> pm;
    NodeKind kind = NodeKind::Seed;
    int left = -1, right = -1;
    std::string label;
};

template <class F>
struct Fragment {
    std::vector<FragmentNode<F>> nodes;
    // rel[i][j]: -1 unknown, 1 class_i <= class_j, 0 not <=
    std::vector<std::vector<signed char>> rel;
    mutable long solver_calls = 0;

    int size() const { return static_cast<int>(nodes.size()); }
};

namespace detail {

template <class F>
bool frag_le(Fragment<F>& fr, int i, int j);

// Sufficient checks only; never concludes a negative.
template <class F>
bool frag_le_fast(Fragment<F>& fr, int i, int j, int depth) {
    if (i == j) return true;
    if (fr.rel[i][j] == 1) return true;
    if (depth <= 0) return false;
    const auto& ni = fr.nodes[i];
    const auto& nj = fr.nodes[j];
    if (ni.kind == NodeKind::Pushout &&
        (frag_le_fast(fr, ni.left, j, depth - 1) || frag_le_fast(fr, ni.right, j, depth - 1)))
        return true;
    if (nj.kind == NodeKind::Sum &&
        (frag_le_fast(fr, i, nj.left, depth - 1) || frag_le_fast(fr, i, nj.right, depth - 1)))
        return true;
    // one-step transitivity over recorded facts
    for (int k = 0; k < fr.size(); ++k)
        if (k != i && k != j && fr.rel[i][k] == 1 && fr.rel[k][j] == 1) return true;
    return false;
}

template <class F>
bool frag_le(Fragment<F>& fr, int i, int j) {
    if (i == j) return true;
    if (fr.rel[i][j] >= 0) return fr.rel[i][j] == 1;
    bool r;
    if (fr.nodes[i].kind == NodeKind::Sum) {
        // sup law: sum <= x iff both parts are
        r = frag_le(fr, fr.nodes[i].left, j) && frag_le(fr, fr.nodes[i].right, j);
    } else if (fr.nodes[j].kind == NodeKind::Pushout) {
        // inf law: x <= pushout iff x is below both parts
        r = frag_le(fr, i, fr.nodes[j].left) && frag_le(fr, i, fr.nodes[j].right);
    } else if (frag_le_fast(fr, i, j, 4)) {
        r = true;
    } else {
        ++fr.solver_calls;
        r = pointed_hom_exists(fr.nodes[j].pm, fr.nodes[i].pm).has_value();
    }
    fr.rel[i][j] = r ? 1 : 0;
    return r;
}

} // namespace detail

template <class F>
bool fragment_le(Fragment<F>& fr, int i, int j) {
    return detail::frag_le(fr, i, j);
}

template <class F>
bool fragment_comparable(Fragment<F>& fr, int i, int j) {
    return fragment_le(fr, i, j) || fragment_le(fr, j, i);
}

// Closure of the seed classes under pointed sum and pushout, applied
// `depth` times, nodes deduplicated by two-way pointed-hom feasibility.
template <class F>
Fragment<F> generate_fragment(const std::vector<PointedModule<F>>& seeds,
                              const std::vector<std::string>& seed_labels, int depth,
                              int node_cap = 200) {
    Fragment<F> fr;
    auto add_node = [&](FragmentNode<F>&& node) {
        if (fr.size() >= node_cap)
            throw BudgetExceeded("fragment node cap " + std::to_string(node_cap) + " exceeded");
        for (auto& row : fr.rel) row.push_back(-1);
        fr.nodes.push_back(std::move(node));
        fr.rel.emplace_back(fr.size(), static_cast<signed char>(-1));
        fr.rel.back()[fr.size() - 1] = 1;
        return fr.size() - 1;
    };

    for (size_t s = 0; s < seeds.size(); ++s) {
        // dedup against existing nodes
        bool dup = false;
        for (int k = 0; k < fr.size() && !dup; ++k) {
            ++fr.solver_calls;
            bool le = pointed_hom_exists(fr.nodes[k].pm, seeds[s]).has_value();
            bool ge = pointed_hom_exists(seeds[s], fr.nodes[k].pm).has_value();
            if (le && ge) dup = true;
        }
        if (!dup) {
            FragmentNode<F> n{seeds[s], NodeKind::Seed, -1, -1,
                              s < seed_labels.size() ? seed_labels[s]
                                                     : "seed" + std::to_string(s)};
            add_node(std::move(n));
        }
    }

    for (int round = 0; round < depth; ++round) {
        const int n0 = fr.size();
        for (int i = 0; i < n0; ++i)
            for (int j = i + 1; j < n0; ++j) {
                if (fragment_comparable(fr, i, j)) continue; // sum/pushout collapse
                for (int op = 0; op < 2; ++op) {
                    const NodeKind kind = op == 0 ? NodeKind::Sum : NodeKind::Pushout;
                    PointedModule<F> cand =
                        op == 0 ? pointed_direct_sum(fr.nodes[i].pm, fr.nodes[j].pm)
                                : pointed_pushout(fr.nodes[i].pm, fr.nodes[j].pm).pm;
                    // dedup: existing node equivalent to the candidate?
                    int found = -1;
                    std::vector<signed char> le_cand(fr.size(), -1), ge_cand(fr.size(), -1);
                    for (int k = 0; k < fr.size(); ++k) {
                        bool le, ge; // le: class(cand) <= class(k)
                        if (kind == NodeKind::Sum) {
                            le = fragment_le(fr, i, k) && fragment_le(fr, j, k);
                            ++fr.solver_calls;
                            ge = pointed_hom_exists(cand, fr.nodes[k].pm).has_value();
                        } else {
                            ge = fragment_le(fr, k, i) && fragment_le(fr, k, j);
                            ++fr.solver_calls;
                            le = pointed_hom_exists(fr.nodes[k].pm, cand).has_value();
                        }
                        le_cand[k] = le ? 1 : 0;
                        ge_cand[k] = ge ? 1 : 0;
                        if (le && ge) { found = k; break; }
                    }
                    if (found >= 0) continue;
                    FragmentNode<F> node{std::move(cand), kind, i, j,
                                         (op == 0 ? "sum(" : "po(") + fr.nodes[i].label + "," +
                                             fr.nodes[j].label + ")"};
                    const int id = add_node(std::move(node));
                    for (int k = 0; k < id; ++k) {
                        if (k < static_cast<int>(le_cand.size())) {
                            fr.rel[id][k] = le_cand[k];
                            fr.rel[k][id] = ge_cand[k];
                        }
                    }
                    // constructor facts
                    if (kind == NodeKind::Sum) {
                        fr.rel[i][id] = 1;
                        fr.rel[j][id] = 1;
                    } else {
                        fr.rel[id][i] = 1;
                        fr.rel[id][j] = 1;
                    }
                }
            }
    }
    return fr;
}

struct WidenessEntry {
    int p = -1, q = -1;              // sampled strict pair
    int wit_a = -1, wit_b = -1;      // incomparable witnesses, -1 when absent
    bool found = false;
    bool verified = false;           // inf/sup inequalities re-checked by solver
};

struct WidenessReport {
    std::vector<WidenessEntry> entries;
    int sampled = 0;
    int witnessed = 0;
    long solver_calls = 0;
};

// For sampled strict pairs p < q, search the fragment for incomparable
// witnesses strictly between them; the pushout/sum inequalities are then
// re-verified against the definitions rather than trusted from the lattice
// laws.
template <class F>
WidenessReport check_wide_on_sample(Fragment<F>& fr, int samples, std::uint64_t seed) {
    WidenessReport rep;
    if (samples <= 0) return rep;

    std::vector<std::pair<int, int>> strict;
    for (int i = 0; i < fr.size(); ++i)
        for (int j = 0; j < fr.size(); ++j)
            if (i != j && fragment_le(fr, i, j) && !fragment_le(fr, j, i))
                strict.emplace_back(i, j);

    // deterministic sample: seeded shuffle, then prefix
    Rng rng = seeded_rng(seed ^ 0x31dec0de12345678ull);
    for (size_t i = strict.size(); i > 1; --i)
        std::swap(strict[i - 1], strict[uniform_below(rng, i)]);
    if (static_cast<int>(strict.size()) > samples) strict.resize(samples);

    for (auto [p, q] : strict) {
        WidenessEntry e;
        e.p = p;
        e.q = q;
        auto strictly_between = [&](int m) {
            return fragment_le(fr, p, m) && !fragment_le(fr, m, p) && fragment_le(fr, m, q) &&
                   !fragment_le(fr, q, m);
        };
        for (int a = 0; a < fr.size() && !e.found; ++a) {
            if (a == p || a == q || !strictly_between(a)) continue;
            for (int b = a + 1; b < fr.size() && !e.found; ++b) {
                if (b == p || b == q || fragment_comparable(fr, a, b)) continue;
                if (!strictly_between(b)) continue;
                // verify p <= a*b and a(+)b <= q and a*b < a(+)b directly
                PointedModule<F> inf = pointed_pushout(fr.nodes[a].pm, fr.nodes[b].pm).pm;
                PointedModule<F> sup = pointed_direct_sum(fr.nodes[a].pm, fr.nodes[b].pm);
                rep.solver_calls += 4;
                const bool p_le_inf = pointed_hom_exists(inf, fr.nodes[p].pm).has_value();
                const bool sup_le_q = pointed_hom_exists(fr.nodes[q].pm, sup).has_value();
                const bool inf_lt_sup = pointed_hom_exists(sup, inf).has_value() &&
                                        !pointed_hom_exists(inf, sup).has_value();
                if (p_le_inf && sup_le_q && inf_lt_sup) {
                    e.found = true;
                    e.wit_a = a;
                    e.wit_b = b;
                    e.verified = true;
                }
            }
        }
        rep.entries.push_back(e);
        ++rep.sampled;
        if (e.found && e.verified) ++rep.witnessed;
    }
    rep.solver_calls += fr.solver_calls;
    return rep;
}

} // namespace stralg
