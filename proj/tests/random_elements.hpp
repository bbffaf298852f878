#pragma once
// Random Gamma-homogeneous elements of T(V) and the calculus identities
// checked on them; shared by the property tests and the acceptance binary.

#include "free_algebra.hpp"

#include <algorithm>
#include <random>

namespace pn::testing {

struct Homogeneous {
    FreeElement e;
    GroupElement g;
};

// Random Gamma-homogeneous element: a few words with the same component
// multiset, small integer coefficients, sometimes times a parameter.
inline Homogeneous random_element(const BraidedSpace& s, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> len(1, 2), pick(0, (int)s.dim() - 1), coef(-3, 3), terms(1, 3);
    Word w;
    int n = len(rng);
    for (int i = 0; i < n; ++i)
        w.push_back((uint8_t)pick(rng));
    std::vector<int> gamma = word_gamma(s, w);
    std::vector<int> comps;
    for (int c = 0; c < (int)gamma.size(); ++c)
        for (int k = 0; k < gamma[c]; ++k)
            comps.push_back(c);
    FreeElement e;
    int nt = terms(rng);
    for (int t = 0; t < nt; ++t) {
        std::shuffle(comps.begin(), comps.end(), rng);
        Word v;
        for (int c : comps) {
            std::vector<int> in_c;
            for (size_t k = 0; k < s.dim(); ++k)
                if (s.comp[k] == c)
                    in_c.push_back((int)k);
            v.push_back((uint8_t)in_c[rng() % in_c.size()]);
        }
        Scalar c(coef(rng));
        if (c.is_zero())
            c = Scalar(1);
        if (!s.params.empty() && rng() % 3 == 0)
            c = c * Scalar::param(s.params[rng() % s.params.size()]);
        e.add(v, c);
    }
    if (e.is_zero())
        e = FreeElement::word(w);
    return {e, GroupElement(gamma)};
}

// Checks the twisted Leibniz rule and the three bracket identities on one
// triple; returns the name of the first identity that fails, or "".
inline std::string calculus_failure(const BraidedSpace& s, const Homogeneous& u, const Homogeneous& v,
                                    const Homogeneous& w)
{
    auto act = [&](const GroupElement& g, const FreeElement& e) { return group_act(s, g, e); };
    for (size_t i = 0; i < s.dim(); ++i) {
        FreeElement lhs = derivation(s, (int)i, u.e * v.e);
        FreeElement rhs = derivation(s, (int)i, u.e) * act(s.degree((int)i), v.e) +
                          u.e * derivation(s, (int)i, v.e);
        if (lhs != rhs)
            return "Leibniz rule for d" + s.labels[i].substr(1);
    }
    if (bracket_c(s, u.e * v.e, w.e) !=
        u.e * bracket_c(s, v.e, w.e) + bracket_c(s, u.e, act(v.g, w.e)) * v.e)
        return "[uv,w] = u[v,w] + [u,h.w]v";
    if (bracket_c(s, u.e, v.e * w.e) !=
        bracket_c(s, u.e, v.e) * w.e + act(u.g, v.e) * bracket_c(s, u.e, w.e))
        return "[u,vw] = [u,v]w + (g.v)[u,w]";
    if (bracket_c(s, bracket_c(s, u.e, v.e), w.e) !=
        bracket_c(s, u.e, bracket_c(s, v.e, w.e)) - act(u.g, v.e) * bracket_c(s, u.e, w.e) +
            bracket_c(s, u.e, act(v.g, w.e)) * v.e)
        return "braided Jacobi";
    return "";
}

} // namespace pn::testing
