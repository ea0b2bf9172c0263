#pragma once

#include "stralg/endo.hpp"
#include "stralg/hom.hpp"
#include "stralg/rng.hpp"

namespace stralg {

enum class IsoVerdict {
    YesByWord,      // exact, via the string-module word criterion
    YesCertified,   // exact, explicit isomorphism attached
    No,             // exact (word criterion or a dimension separator)
    NoProbabilistic // randomized search failed; labeled with the trial count
};

template <class F>
struct IsoResult {
    IsoVerdict verdict = IsoVerdict::No;
    std::optional<Hom<F>> iso;
    int trials = 0;
    std::string reason;
};

// Base-reversal isomorphism M(S) -> M(S^-1).
template <class F>
Hom<F> word_reversal_iso(const Representation<F>& m, const Representation<F>& n) {
    const StringLayout& lm = *m.layout;
    const StringLayout& ln = *n.layout;
    const int len = static_cast<int>(lm.pos.size());
    Hom<F> h = zero_hom(m, n);
    for (int i = 0; i < len; ++i) {
        const int j = len - 1 - i;
        h.blocks[lm.pos[i]].at(ln.local[j], lm.local[i]) = m.f.one();
    }
    return h;
}

// Isomorphism test. String modules are decided exactly by the word
// criterion; the general path requires matching dimension data and then
// searches Hom(m, n) for an invertible element with T seeded trials. A
// failed search is reported as probabilistic with failure bound (d/p)^T.
template <class F>
IsoResult<F> is_isomorphic(const Representation<F>& m, const Representation<F>& n,
                           int trials = 20, std::uint64_t seed = 0) {
    if (m.alg.get() != n.alg.get())
        throw AlgebraMismatch("is_isomorphic: different algebras");
    IsoResult<F> out;

    if (m.layout && n.layout) {
        const Word& a = m.layout->word;
        const Word& b = n.layout->word;
        if (a == b) {
            out.verdict = IsoVerdict::YesByWord;
            out.iso = identity_hom(m);
            out.reason = "equal words";
            return out;
        }
        if (invert(a) == b) {
            Hom<F> h = word_reversal_iso(m, n);
            if (!is_homomorphism(m, n, h) || !hom_invertible(h))
                throw std::logic_error("reversal certificate failed verification");
            out.verdict = IsoVerdict::YesByWord;
            out.iso = std::move(h);
            out.reason = "inverse words";
            return out;
        }
        out.verdict = IsoVerdict::No;
        out.reason = "words neither equal nor mutually inverse";
        return out;
    }

    if (m.dims != n.dims) {
        out.verdict = IsoVerdict::No;
        out.reason = "vertex dimension vectors differ";
        return out;
    }
    auto fwd = hom_space(m, n);
    auto bwd_dim = hom_dim(n, m);
    if (static_cast<int>(fwd.size()) != bwd_dim) {
        out.verdict = IsoVerdict::No;
        out.reason = "hom dimensions are asymmetric";
        return out;
    }
    if (fwd.empty()) {
        out.verdict = m.total_dim() == 0 ? IsoVerdict::YesCertified : IsoVerdict::No;
        if (m.total_dim() == 0) out.iso = identity_hom(m);
        out.reason = "no homomorphisms";
        return out;
    }

    Rng rng = seeded_rng(seed ^ 0xabcdef1234567890ull);
    for (int t = 0; t < trials; ++t) {
        Hom<F> cand = zero_hom(m, n);
        for (const auto& b : fwd) {
            typename F::Elem c;
            if constexpr (F::is_rational)
                c = m.f.from_int(static_cast<long long>(uniform_below(rng, 19)) - 9);
            else
                c = static_cast<typename F::Elem>(uniform_below(rng, m.f.p));
            cand = hom_add(cand, hom_scale(b, c));
        }
        out.trials = t + 1;
        if (hom_invertible(cand)) {
            auto inv = hom_inverse(cand);
            if (inv && hom_eq(compose(*inv, cand), identity_hom(m))) {
                out.verdict = IsoVerdict::YesCertified;
                out.iso = std::move(cand);
                return out;
            }
        }
    }
    out.verdict = IsoVerdict::NoProbabilistic;
    out.reason = "no invertible element found in " + std::to_string(trials) + " trials";
    if constexpr (!F::is_rational)
        out.reason += " (failure bound (" + std::to_string(m.total_dim()) + "/" +
                      std::to_string(m.f.p) + ")^" + std::to_string(trials) + ")";
    return out;
}

} // namespace stralg
