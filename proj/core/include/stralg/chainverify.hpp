#pragma once

#include "stralg/parallel.hpp"
#include "stralg/pointed.hpp"
#include "stralg/report.hpp"

#include <functional>
#include <map>

namespace stralg {

class PointingVertexMismatch : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};
class HypothesisUnmet : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Shared pointing source of a chain: a module with a distinguished
// generator position; the canonical pointings send the generator to a
// canonical basis vector.
template <class F>
struct PointingSource {
    std::shared_ptr<const Representation<F>> theta;
    int gen_vertex = -1;
    int gen_local = -1;
};

template <class F>
PointingSource<F> projective_pointing(F f, std::shared_ptr<const BoundQuiverAlgebra> alg,
                                      int vertex) {
    auto pm = projective_module(f, alg, vertex);
    PointingSource<F> out;
    out.theta = std::make_shared<Representation<F>>(std::move(pm.rep));
    out.gen_vertex = pm.gen_vertex;
    out.gen_local = pm.gen_local;
    return out;
}

// The canonical pointed string module: chi maps the generator to the
// basis_pos-th canonical basis vector (1-based, default the first).
template <class F>
PointedModule<F> canonical_pointed(const PointingSource<F>& src,
                                   std::shared_ptr<const BoundQuiverAlgebra> alg, const Word& w,
                                   int basis_pos = 1) {
    Representation<F> mod = string_module(src.theta->f, alg, w);
    const StringLayout& lay = *mod.layout;
    const int zi = basis_pos - 1;
    if (zi < 0 || zi >= static_cast<int>(lay.pos.size()))
        throw PointingVertexMismatch("canonical basis position out of range");
    if (lay.pos[zi] != src.gen_vertex)
        throw PointingVertexMismatch("pointed basis vector lives at vertex " +
                                     alg->quiver().vertices[lay.pos[zi]] +
                                     ", the pointing source is supported at " +
                                     alg->quiver().vertices[src.gen_vertex]);

    // Solve for the unique-up-to-choices hom with chi(generator) = z.
    const F f = mod.f;
    std::vector<Matrix<F>> pre, post;
    for (size_t x = 0; x < mod.dims.size(); ++x) {
        const int k = static_cast<int>(x) == src.gen_vertex ? 1 : 0;
        Matrix<F> pr(f, src.theta->dims[x], k);
        Matrix<F> po(f, mod.dims[x], k);
        if (k) {
            pr.at(src.gen_local, 0) = f.one();
            po.at(lay.local[zi], 0) = f.one();
        }
        pre.push_back(std::move(pr));
        post.push_back(std::move(po));
    }
    auto sol = solve_hom_with_condition(*src.theta, mod, pre, post);
    if (!sol.exists)
        throw PointingVertexMismatch("no homomorphism sends the generator to the basis vector");
    return make_pointed(src.theta, std::move(mod), std::move(sol.particular));
}

template <class F>
struct PointedChain {
    std::vector<Word> words; // strictly ascending in the string order
    std::vector<PointedModule<F>> elements;
    PointingSource<F> pointing;
};

template <class F>
PointedChain<F> build_pointed_chain(std::shared_ptr<const BoundQuiverAlgebra> alg,
                                    const BandPair& pair, const BandWord& s, const BandWord& t,
                                    int truncation, const PointingSource<F>& pointing) {
    PointedChain<F> chain;
    chain.pointing = pointing;
    for (const ChainElement& el : enumerate_chain(*alg, pair, s, t, truncation)) {
        chain.words.push_back(el.word);
        chain.elements.push_back(canonical_pointed(pointing, alg, el.word));
    }
    return chain;
}

// Exact non-isomorphism for string modules sharing an algebra.
inline bool words_give_noniso(const Word& a, const Word& b) {
    return !(a == b) && !(invert(a) == b);
}

// Separator battery for modules without the word criterion: exact
// dimension-type separators first, randomized isomorphism search as the
// labeled fallback.
enum class NonIsoOutcome { NonIsoExact, NonIsoProbabilistic, Isomorphic };

template <class F>
struct NonIsoResult {
    NonIsoOutcome outcome = NonIsoOutcome::NonIsoExact;
    std::string how;
};

template <class F>
NonIsoResult<F> noniso_battery(const Representation<F>& m, const Representation<F>& n,
                               const std::vector<const Representation<F>*>& tests, int trials,
                               std::uint64_t seed) {
    NonIsoResult<F> out;
    if (m.dims != n.dims) {
        out.how = "vertex dimensions differ";
        return out;
    }
    const int fwd = hom_dim(m, n), bwd = hom_dim(n, m);
    if (fwd != bwd) {
        out.how = "hom dimensions are asymmetric";
        return out;
    }
    if (hom_dim(m, m) != hom_dim(n, n)) {
        out.how = "endomorphism dimensions differ";
        return out;
    }
    for (size_t i = 0; i < tests.size(); ++i) {
        if (hom_dim(*tests[i], m) != hom_dim(*tests[i], n)) {
            out.how = "hom dimension from test module " + std::to_string(i) + " differs";
            return out;
        }
        if (hom_dim(m, *tests[i]) != hom_dim(n, *tests[i])) {
            out.how = "hom dimension into test module " + std::to_string(i) + " differs";
            return out;
        }
    }
    // randomized last resort
    Representation<F> mm = m, nn = n;
    mm.layout.reset();
    nn.layout.reset();
    auto iso = is_isomorphic(mm, nn, trials, seed);
    if (iso.verdict == IsoVerdict::YesCertified || iso.verdict == IsoVerdict::YesByWord) {
        out.outcome = NonIsoOutcome::Isomorphic;
        out.how = "explicit isomorphism found";
        return out;
    }
    if (iso.verdict == IsoVerdict::No) {
        out.how = iso.reason;
        return out;
    }
    out.outcome = NonIsoOutcome::NonIsoProbabilistic;
    out.how = "no isomorphism in " + std::to_string(trials) + " trials";
    return out;
}

// How pairwise non-isomorphism gets certified inside the verdicts.
enum class NonIsoStrategy { WordCriterion, SeparatorBattery };

template <class F>
struct VerifyOptions {
    int jobs = 1;
    std::uint64_t seed = 0;
    int grid_budget = 100;   // full grid up to this many cells
    int sample = 100;        // sampled cells beyond the budget
    int iso_trials = 20;
    NonIsoStrategy noniso = NonIsoStrategy::WordCriterion;
    bool pushout_word_oracle = true; // cross-check pushouts against the
                                     // concatenated canonical word
    std::vector<const Representation<F>*> test_family; // battery separators
};

namespace detail {

template <class F>
std::string word_or_label(const PointedChain<F>& c, int i) {
    return word_to_string(*c.elements[i].mod.alg, c.words[i]);
}

} // namespace detail

// Dense chain axioms on one chain. Pointed maps run from larger words to
// smaller ones, matching the calibrated order.
template <class F>
std::vector<AxiomResult> verify_dense_chain(const PointedChain<F>& chain,
                                            const std::string& suffix,
                                            const VerifyOptions<F>& opt) {
    std::vector<AxiomResult> out;
    const int n = static_cast<int>(chain.elements.size());

    // (a) local endomorphism rings and nonzero pointings
    {
        AxiomResult a;
        a.tag = "def2.1.a." + suffix;
        a.checked = n;
        std::vector<std::string> bad(n);
        parallel_for(n, opt.jobs, [&](int i) {
            auto res = is_indecomposable(chain.elements[i].mod, splitmix64(opt.seed) ^ i);
            if (!res.indecomposable)
                bad[i] = detail::word_or_label(chain, i) + " is decomposable";
            else if (!chain.elements[i].chi_nonzero())
                bad[i] = detail::word_or_label(chain, i) + " has zero pointing";
        });
        for (auto& b : bad)
            if (!b.empty()) a.counterexamples.push_back(b);
        a.pass = a.counterexamples.empty();
        a.detail = "indecomposable with nonzero pointing";
        out.push_back(std::move(a));
    }

    // (b) pointed maps between comparable elements
    {
        AxiomResult a;
        a.tag = "def2.1.b." + suffix;
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
        a.checked = static_cast<long>(pairs.size());
        std::vector<std::string> bad(pairs.size());
        parallel_for(static_cast<int>(pairs.size()), opt.jobs, [&](int k) {
            auto [i, j] = pairs[k];
            // words[i] < words[j]: map from the j-th element down to the i-th
            auto hom = pointed_hom_exists(chain.elements[j], chain.elements[i]);
            if (!hom)
                bad[k] = "no pointed map from " + detail::word_or_label(chain, j) + " to " +
                         detail::word_or_label(chain, i);
        });
        for (auto& b : bad)
            if (!b.empty()) a.counterexamples.push_back(b);
        a.pass = a.counterexamples.empty();
        a.detail = "pointed maps from larger to smaller elements";
        out.push_back(std::move(a));
    }

    // (c) pairwise non-isomorphic, via the strong module-level form
    {
        AxiomResult strong;
        strong.tag = "def2.5.1." + suffix;
        AxiomResult weak;
        weak.tag = "def2.1.c." + suffix;
        long checked = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                ++checked;
                bool ok;
                std::string how;
                if (opt.noniso == NonIsoStrategy::WordCriterion) {
                    ok = words_give_noniso(chain.words[i], chain.words[j]);
                    how = "word criterion";
                } else {
                    auto r = noniso_battery(chain.elements[i].mod, chain.elements[j].mod,
                                            opt.test_family, opt.iso_trials,
                                            splitmix64(opt.seed) ^ (i * 131 + j));
                    ok = r.outcome != NonIsoOutcome::Isomorphic;
                    if (r.outcome == NonIsoOutcome::NonIsoProbabilistic) {
                        strong.probabilistic = true;
                        weak.probabilistic = true;
                    }
                    how = r.how;
                }
                if (!ok) {
                    strong.counterexamples.push_back(detail::word_or_label(chain, i) + " vs " +
                                                     detail::word_or_label(chain, j) + " (" +
                                                     how + ")");
                }
            }
        strong.checked = checked;
        strong.pass = strong.counterexamples.empty();
        strong.detail = "modules pairwise non-isomorphic";
        weak.checked = checked;
        weak.pass = strong.pass;
        weak.counterexamples = strong.counterexamples;
        weak.detail = "implied by the module-level check";
        out.push_back(std::move(strong));
        out.push_back(std::move(weak));
    }
    return out;
}

// Independent-pair axioms across two chains over the same pointing source.
template <class F>
std::vector<AxiomResult> verify_independent_pair(const PointedChain<F>& c1,
                                                 const PointedChain<F>& c2,
                                                 const VerifyOptions<F>& opt) {
    if (c1.pointing.theta.get() != c2.pointing.theta.get())
        throw ThetaMismatch("chains are pointed over different sources");
    std::vector<AxiomResult> out;
    const int n1 = static_cast<int>(c1.elements.size());
    const int n2 = static_cast<int>(c2.elements.size());

    // cell selection: full grid under the budget, seeded sample beyond
    std::vector<std::pair<int, int>> cells;
    if (n1 * n2 <= opt.grid_budget) {
        for (int i = 0; i < n1; ++i)
            for (int j = 0; j < n2; ++j) cells.emplace_back(i, j);
    } else {
        Rng rng = seeded_rng(opt.seed ^ 0x6e1d5a3c9b7f0e24ull);
        for (int k = 0; k < opt.sample; ++k)
            cells.emplace_back(static_cast<int>(uniform_below(rng, n1)),
                               static_cast<int>(uniform_below(rng, n2)));
    }

    struct Cell {
        bool indec = false;
        bool oracle_ok = true;
        bool universal_ok = true;
        std::string err;
    };
    std::vector<Cell> results(cells.size());

    parallel_for(static_cast<int>(cells.size()), opt.jobs, [&](int k) {
        auto [i, j] = cells[k];
        Cell& cell = results[k];
        try {
            auto push = pointed_pushout(c1.elements[i], c2.elements[j]);
            auto indec = is_indecomposable(push.pm.mod, cell_rng(opt.seed, k)());
            cell.indec = indec.indecomposable;
            if (!cell.indec) cell.err = "pushout decomposes";

            if (opt.pushout_word_oracle) {
                // cross-oracle: the pushout of canonical pointed string
                // modules is the canonical pointed module on the
                // concatenated word, pointed at the junction.
                Word w = concat(invert(c1.words[i]), c2.words[j]);
                PointedModule<F> canon = canonical_pointed(
                    c1.pointing, c1.elements[i].mod.alg, w, c1.words[i].length() + 1);
                auto iso = pointed_isomorphism(push.pm, canon, opt.iso_trials,
                                               cell_rng(opt.seed, k)());
                if (!iso) {
                    cell.oracle_ok = false;
                    cell.err = "pushout not pointed-isomorphic to the concatenated word module";
                } else if (!hom_invertible(*iso)) {
                    cell.oracle_ok = false;
                    cell.err = "certificate not invertible";
                } else {
                    // universal property spot check against the canonical
                    // cone: the factoring map must exist and be unique
                    Hom<F> f = compose(*iso, push.eps_left);
                    Hom<F> g = compose(*iso, push.eps_right);
                    std::vector<Matrix<F>> pre, post;
                    for (size_t x = 0; x < push.pm.mod.dims.size(); ++x) {
                        pre.push_back(hstack(push.eps_left.blocks[x],
                                             push.eps_right.blocks[x]));
                        post.push_back(hstack(f.blocks[x], g.blocks[x]));
                    }
                    auto sol = solve_hom_with_condition(push.pm.mod, canon.mod, pre, post);
                    if (!sol.exists || !sol.homogeneous.empty()) {
                        cell.universal_ok = false;
                        cell.err = sol.exists ? "factoring through the pushout is not unique"
                                              : "cone does not factor through the pushout";
                    }
                }
            }
        } catch (const std::exception& e) {
            cell.indec = false;
            cell.oracle_ok = false;
            cell.universal_ok = false;
            cell.err = e.what();
        }
    });

    {
        AxiomResult a;
        a.tag = "def2.2.a";
        a.checked = static_cast<long>(cells.size());
        for (size_t k = 0; k < cells.size(); ++k)
            if (!results[k].indec)
                a.counterexamples.push_back(
                    "(" + detail::word_or_label(c1, cells[k].first) + ") * (" +
                    detail::word_or_label(c2, cells[k].second) + "): " + results[k].err);
        a.pass = a.counterexamples.empty();
        a.detail = "pushouts have local endomorphism rings";
        out.push_back(std::move(a));
    }
    if (opt.pushout_word_oracle) {
        AxiomResult a;
        a.tag = "pushout.word_oracle";
        a.checked = static_cast<long>(cells.size());
        for (size_t k = 0; k < cells.size(); ++k)
            if (!results[k].oracle_ok)
                a.counterexamples.push_back(
                    "(" + detail::word_or_label(c1, cells[k].first) + ") * (" +
                    detail::word_or_label(c2, cells[k].second) + "): " + results[k].err);
        a.pass = a.counterexamples.empty();
        a.detail = "pushouts certified pointed-isomorphic to concatenated-word modules";
        out.push_back(std::move(a));

        AxiomResult u;
        u.tag = "pushout.universal";
        u.checked = static_cast<long>(cells.size());
        for (size_t k = 0; k < cells.size(); ++k)
            if (!results[k].universal_ok)
                u.counterexamples.push_back(
                    "(" + detail::word_or_label(c1, cells[k].first) + ") * (" +
                    detail::word_or_label(c2, cells[k].second) + "): " + results[k].err);
        u.pass = u.counterexamples.empty();
        u.detail = "sampled cones factor uniquely through the pushouts";
        out.push_back(std::move(u));
    }

    // (b) and the strong form: compare pushouts along rows and columns.
    {
        AxiomResult strong;
        strong.tag = "def2.5.2";
        AxiomResult weak;
        weak.tag = "def2.2.b";
        long checked = 0;

        auto record = [&](int i, int j, int i2, int j2, bool ok, bool prob,
                          const std::string& how) {
            ++checked;
            if (prob) {
                strong.probabilistic = true;
                weak.probabilistic = true;
            }
            if (!ok)
                strong.counterexamples.push_back(
                    "(" + detail::word_or_label(c1, i) + ")*(" + detail::word_or_label(c2, j) +
                    ") vs (" + detail::word_or_label(c1, i2) + ")*(" +
                    detail::word_or_label(c2, j2) + "): " + how);
        };

        if (opt.noniso == NonIsoStrategy::WordCriterion) {
            // exact word-level comparison of the concatenated words
            for (int j = 0; j < n2; ++j)
                for (int i = 0; i < n1; ++i)
                    for (int i2 = i + 1; i2 < n1; ++i2) {
                        Word a = concat(invert(c1.words[i]), c2.words[j]);
                        Word b = concat(invert(c1.words[i2]), c2.words[j]);
                        record(i, j, i2, j, words_give_noniso(a, b), false, "word criterion");
                    }
            for (int i = 0; i < n1; ++i)
                for (int j = 0; j < n2; ++j)
                    for (int j2 = j + 1; j2 < n2; ++j2) {
                        Word a = concat(invert(c1.words[i]), c2.words[j]);
                        Word b = concat(invert(c1.words[i]), c2.words[j2]);
                        record(i, j, i, j2, words_give_noniso(a, b), false, "word criterion");
                    }
        } else {
            // battery on actual pushout modules; cache the pushouts
            std::map<std::pair<int, int>, Representation<F>> cache;
            auto pushout_of = [&](int i, int j) -> const Representation<F>& {
                auto key = std::make_pair(i, j);
                auto it = cache.find(key);
                if (it == cache.end())
                    it = cache
                             .emplace(key,
                                      pointed_pushout(c1.elements[i], c2.elements[j]).pm.mod)
                             .first;
                return it->second;
            };
            auto check_pair = [&](int i, int j, int i2, int j2) {
                auto r = noniso_battery(pushout_of(i, j), pushout_of(i2, j2), opt.test_family,
                                        opt.iso_trials,
                                        splitmix64(opt.seed) ^ (i * 7 + j * 101 + i2 * 31 + j2));
                record(i, j, i2, j2, r.outcome != NonIsoOutcome::Isomorphic,
                       r.outcome == NonIsoOutcome::NonIsoProbabilistic, r.how);
            };
            for (int j = 0; j < n2; ++j)
                for (int i = 0; i < n1; ++i)
                    for (int i2 = i + 1; i2 < n1; ++i2) check_pair(i, j, i2, j);
            for (int i = 0; i < n1; ++i)
                for (int j = 0; j < n2; ++j)
                    for (int j2 = j + 1; j2 < n2; ++j2) check_pair(i, j, i, j2);
        }

        strong.checked = checked;
        strong.pass = strong.counterexamples.empty();
        strong.detail = "pushout modules pairwise non-isomorphic along rows and columns";
        weak.checked = checked;
        weak.pass = strong.pass;
        weak.counterexamples = strong.counterexamples;
        weak.detail = "implied by the module-level check";
        out.push_back(std::move(strong));
        out.push_back(std::move(weak));
    }
    return out;
}

// End-to-end pipeline on a supplied algebra, band pair and pointing vertex.
template <class F>
Verdict verify_chain_pair_pipeline(F f, std::shared_ptr<const BoundQuiverAlgebra> alg,
                                   const BandPair& pair, const BandWord& s, const BandWord& t,
                                   int theta_vertex, int truncation, int density_max_len,
                                   const VerifyOptions<F>& opt) {
    Verdict v;
    v.title = "chain pair verification";
    v.config.emplace_back("algebra", alg->name.empty() ? "<inline>" : alg->name);
    v.config.emplace_back("u", word_to_string(*alg, pair.u));
    v.config.emplace_back("v", word_to_string(*alg, pair.v));
    v.config.emplace_back("s", band_word_to_string(s));
    v.config.emplace_back("t", band_word_to_string(t));
    v.config.emplace_back("theta", "P(" + alg->quiver().vertices[theta_vertex] + ")");
    v.config.emplace_back("truncation", std::to_string(truncation));
    v.config.emplace_back("density_max_len", std::to_string(density_max_len));
    v.config.emplace_back("seed", std::to_string(opt.seed));

    // 0. string algebra
    {
        AxiomResult a;
        a.tag = "alg.string_algebra";
        auto bis = alg->special_biserial();
        a.pass = alg->string_algebra();
        a.checked = 1;
        a.detail = "basis dimension " + std::to_string(alg->dimension());
        if (!bis.ok) a.counterexamples.push_back(bis.violation);
        else if (!a.pass) a.counterexamples.push_back("relation ideal is not generated by paths");
        v.add(std::move(a));
        if (!v.axioms.back().pass) return v;
    }

    const BandPair inv_pair{invert(pair.u), invert(pair.v)};

    // 1. bands and generating pairs
    auto band_axiom = [&](const std::string& tag, const Word& w) {
        AxiomResult a;
        a.tag = tag;
        auto b = is_band(*alg, w);
        a.pass = b.ok;
        a.checked = 1;
        a.detail = word_to_string(*alg, w);
        if (!b.ok) a.counterexamples.push_back(b.reason);
        v.add(std::move(a));
    };
    band_axiom("band.u", pair.u);
    band_axiom("band.v", pair.v);
    band_axiom("band.u_inv", inv_pair.u);
    band_axiom("band.v_inv", inv_pair.v);

    auto qgen_axiom = [&](const std::string& tag, const BandPair& p) {
        AxiomResult a;
        a.tag = tag;
        auto r = is_qgen_pair(*alg, p.u, p.v);
        a.pass = r.ok;
        a.checked = 1;
        if (!r.ok) a.counterexamples.push_back(r.reason);
        v.add(std::move(a));
    };
    qgen_axiom("qgen.pair", pair);
    qgen_axiom("qgen.inv_pair", inv_pair);
    if (!v.pass()) return v;

    // 2. chain enumeration: strict order and density at the truncation
    auto chain_axioms = [&](const std::string& suffix, const BandPair& p) {
        auto elems = enumerate_chain(*alg, p, s, t, truncation);
        AxiomResult a;
        a.tag = "chain.strict." + suffix;
        a.checked = static_cast<long>(elems.size() * (elems.size() - 1) / 2);
        a.pass = true;
        for (size_t i = 0; i < elems.size(); ++i)
            for (size_t j = i + 1; j < elems.size(); ++j)
                if (compare(*alg, elems[i].word, elems[j].word) != Ordering::Less) {
                    a.pass = false;
                    a.counterexamples.push_back(word_to_string(*alg, elems[i].word) + " !< " +
                                                word_to_string(*alg, elems[j].word));
                }
        a.detail = std::to_string(elems.size()) + " elements strictly ordered";
        v.add(std::move(a));

        AxiomResult d;
        d.tag = "density." + suffix;
        d.checked = static_cast<long>(elems.size() > 0 ? elems.size() - 1 : 0);
        d.pass = true;
        for (size_t i = 0; i + 1 < elems.size(); ++i) {
            auto wit = density_witness(*alg, p, s, t, elems[i].x, elems[i + 1].x,
                                       density_max_len);
            if (!wit) {
                d.pass = false;
                d.counterexamples.push_back("no witness between " +
                                            word_to_string(*alg, elems[i].word) + " and " +
                                            word_to_string(*alg, elems[i + 1].word));
            }
        }
        d.detail = "adjacent pairs admit strictly-between elements";
        v.add(std::move(d));
    };
    chain_axioms("c1", pair);
    chain_axioms("c2", inv_pair);
    if (!v.pass()) return v;

    // 3. pointing source
    PointingSource<F> pointing = projective_pointing(f, alg, theta_vertex);
    {
        AxiomResult a;
        a.tag = "theta.indecomposable";
        auto res = is_indecomposable(*pointing.theta, opt.seed);
        a.pass = res.indecomposable;
        a.checked = 1;
        a.detail = "dim " + std::to_string(pointing.theta->total_dim());
        v.add(std::move(a));
    }

    // 4. pointed chains
    PointedChain<F> chain1, chain2;
    try {
        chain1 = build_pointed_chain(alg, pair, s, t, truncation, pointing);
        chain2 = build_pointed_chain(alg, inv_pair, s, t, truncation, pointing);
    } catch (const PointingVertexMismatch& e) {
        AxiomResult a;
        a.tag = "chain.pointing";
        a.pass = false;
        a.counterexamples.push_back(e.what());
        v.add(std::move(a));
        return v;
    }

    auto mono_axiom = [&](const std::string& suffix, const PointedChain<F>& c) {
        AxiomResult a;
        a.tag = "chi.mono." + suffix;
        a.checked = static_cast<long>(c.elements.size());
        a.pass = true;
        for (size_t i = 0; i < c.elements.size(); ++i)
            if (!c.elements[i].chi_injective()) {
                a.pass = false;
                a.counterexamples.push_back(word_to_string(*alg, c.words[i]));
            }
        a.detail = "pointings are monomorphisms";
        v.add(std::move(a));
    };
    mono_axiom("c1", chain1);
    mono_axiom("c2", chain2);

    // 5. dense chain axioms
    for (auto& a : verify_dense_chain(chain1, "c1", opt)) v.add(std::move(a));
    for (auto& a : verify_dense_chain(chain2, "c2", opt)) v.add(std::move(a));

    // 6. independence
    for (auto& a : verify_independent_pair(chain1, chain2, opt)) v.add(std::move(a));

    return v;
}

} // namespace stralg
