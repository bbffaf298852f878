#include "doctest.h"

#include "frozen_oracle.hpp"
#include "catalog.hpp"

using namespace pn;

TEST_CASE("PBW series match the sympy expansion")
{
    for (const auto& [id, expected] : frozen::pbw_series) {
        INFO(id);
        CHECK(pbw_series(presentation_by_id(id).pbw, (int)expected.size() - 1) == expected);
    }
}

TEST_CASE("GK-dimension from PBW data")
{
    const std::map<std::string, int> gk = {{"E3-", 2}, {"E3+", 4}, {"Emn(+,+)", 2}, {"Einf", 4},
                                           {"S20", 2}, {"S1p(-1/2)", 2}, {"S1p(-1)", 4}, {"S1m", 4}};
    for (const auto& [id, g] : gk) {
        INFO(id);
        CHECK(gk_from_pbw(presentation_by_id(id).pbw) == g);
        CHECK(presentation_by_id(id).gk_claimed == g);
    }
}

TEST_CASE("PBW series rejects bad data")
{
    CHECK_THROWS_AS(pbw_series({{"x", 0, true}}, 3), std::invalid_argument);
    CHECK(pbw_series({}, 2) == std::vector<long long>{1, 0, 0});
}

TEST_CASE("growth fit: polynomial series settle, exponential ones are flagged")
{
    std::vector<size_t> lin;
    for (int n = 0; n <= 10; ++n)
        lin.push_back(n == 0 ? 1 : 4 * n);
    GrowthFit g = growth_fit(lin);
    CHECK(g.degree == doctest::Approx(2.0).epsilon(0.15));
    CHECK_FALSE(g.exceeds_window);
    CHECK_FALSE(g.caveat.empty());
    const auto& v = frozen::symmetrizer_dims.at("V(-1,3)");
    GrowthFit h = growth_fit(std::vector<size_t>(v.begin(), v.end()));
    CHECK(h.exceeds_window);
    CHECK_THROWS_AS(growth_fit({1, 2}), std::invalid_argument);
}

TEST_CASE("adjoint subspace: dimension, saturation and fingerprint")
{
    BraidedSpace s = build_family("E3+(q)");
    NicholsEngine<Scalar> eng(s);
    ExprFactory f(s);
    AdjointSubspace a = adjoint_subspace(eng, f, {3}, {0, 1, 2}, 8);
    CHECK(a.dim() == 6);
    CHECK(a.saturated);
    CHECK(a.dims_by_depth.back() == 6);
    // d_k of x{4,...,4,i} is (-1)^j x4^j at k = i - j and zero elsewhere
    FreeElement x4 = FreeElement::generator(3);
    for (const auto& el : a.basis) {
        int j = el.depth;
        int i = s.index_of("x" + el.name.substr(el.name.size() - (el.name.back() == '}' ? 2 : 1), 1));
        for (int k = 0; k < 4; ++k) {
            FreeElement expected;
            if (k == i - j) {
                expected = FreeElement(Scalar(j % 2 ? -1 : 1));
                for (int t = 0; t < j; ++t)
                    expected = expected * x4;
            }
            INFO(el.name << " d" << k + 1);
            CHECK(el.fingerprint[k] == eng.reduce(expected));
        }
    }
    CHECK_THROWS_AS(adjoint_subspace(eng, f, {3}, {3}, 4), std::invalid_argument);
}
