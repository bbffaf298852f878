#include "doctest.h"

#include "nichols_engine.hpp"
#include "random_elements.hpp"

using namespace pn;
using namespace pn::testing;

namespace {

const char* kFamilies[] = {"E3-(q)", "E3+(q)", "E+(q)", "E-(q)", "Estar(q)",
                           "Emn(+,+;q12,q13,q23,a)", "Emn(+,-;q12,q13,q23,a)",
                           "Emn(-,+;q12,q13,q23,a)", "Emn(-,-;q12,q13,q23,a)",
                           "Einf(q12,q13,q23)", "S20(q)", "S1p(q,-1/2)", "S1p(q,-1)", "S1m(q)"};

} // namespace

TEST_CASE("calculus identities on random homogeneous triples")
{
    for (const char* spec : kFamilies) {
        INFO(spec);
        BraidedSpace s = build_family(spec);
        std::mt19937_64 rng(2024);
        int checked = 0;
        for (int trial = 0; trial < 100; ++trial) {
            Homogeneous u = random_element(s, rng), v = random_element(s, rng), w = random_element(s, rng);
            std::string bad = calculus_failure(s, u, v, w);
            INFO(bad);
            REQUIRE(bad.empty());
            ++checked;
        }
        CHECK(checked == 100);
    }
}

TEST_CASE("derivations vanish on the ideal: engine normal forms are stable")
{
    // For each family, d_i(NF(x)) = NF(d_i(x)) on random words of degree 3.
    for (const char* spec : {"E3-(q)", "S1m(q)", "Emn(+,-;q12,q13,q23,a)"}) {
        INFO(spec);
        BraidedSpace s = build_family(spec);
        NicholsEngine<Scalar> eng(s);
        std::mt19937_64 rng(5);
        for (int trial = 0; trial < 20; ++trial) {
            Word w;
            for (int i = 0; i < 3; ++i)
                w.push_back((uint8_t)(rng() % s.dim()));
            FreeElement x = FreeElement::word(w);
            FreeElement nf = eng.reduce(x);
            CHECK(eng.is_zero(x - nf));
            for (size_t i = 0; i < s.dim(); ++i)
                CHECK(eng.reduce(derivation(s, (int)i, x)) == eng.reduce(derivation(s, (int)i, nf)));
        }
    }
}
