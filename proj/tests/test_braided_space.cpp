#include "doctest.h"

#include "braided_space.hpp"

using namespace pn;

TEST_CASE("braiding follows c(e_k (x) e_l) = (g_k . e_l) (x) e_k")
{
    BraidedSpace s = build_family("E3-(q)");
    Scalar q = Scalar::param("q");
    // x4 in degree g2; g2 acts on x2 by q21 (x1 + x2) in the block basis
    Tensor t = braiding(s, 3, 1);
    CHECK(t.size() == 2);
    CHECK(t.at({0, 3}) == q.inv());
    CHECK(t.at({1, 3}) == q.inv());
    Tensor u = braiding(s, 0, 3);
    CHECK(u.size() == 1);
    CHECK(u.at({3, 0}) == q);
}

TEST_CASE("braid equation on every family")
{
    for (const char* spec : {"E3-(q)", "E3+(q)", "E+(q)", "E-(q)", "Estar(q)", "Epale(q11,q12,q21,q22)",
                             "Emn(+,+;q12,q13,q23,a)", "Emn(+,-;q12,q13,q23,a)",
                             "Emn(-,+;q12,q13,q23,a)", "Emn(-,-;q12,q13,q23,a)",
                             "Einf(q12,q13,q23)", "S20(q)", "S1p(q,a)", "S1m(q)",
                             "V(-1,2)", "V(1,2)", "V(-1,3)", "diag(-1,q12;q21,-1)"}) {
        INFO(spec);
        CHECK(check_braid_equation(build_family(spec)));
    }
}

TEST_CASE("braid equation fails when the actions do not commute")
{
    BraidedSpace s = build_family("E3-(q)");
    // break commutation of g1 and g2 on the block
    s.actions[0][0][1] = Scalar(1);
    CHECK_FALSE(check_braid_equation(s));
}

TEST_CASE("component shapes")
{
    BraidedSpace s = build_family("S1p(q,a)");
    auto sh = component_shapes(s);
    REQUIRE(sh.size() == 2);
    CHECK(sh[0].kind == ShapeKind::PaleBlock);
    CHECK(sh[0].eigenvalue == Scalar(-1));
    CHECK(sh[1].kind == ShapeKind::Block);
    CHECK(sh[1].eigenvalue == Scalar(1));
    CHECK(is_pale_component(s, 0));
    CHECK_FALSE(is_pale_component(s, 1));
    auto v = component_shapes(build_family("V(-1,3)"));
    CHECK(v[0].kind == ShapeKind::Other);
    auto e = component_shapes(build_family("E+(q)"));
    CHECK(e[1].kind == ShapeKind::Point);
}

TEST_CASE("ghost values")
{
    CHECK(ghost(build_family("S1p(q,-1/2)")) == Scalar(1));
    CHECK(ghost(build_family("S1p(q,-1)")) == Scalar(2));
    CHECK(ghost(build_family("S1m(q)")) == Scalar(1));
    CHECK(ghost(build_family("S1p(q,a)")) == Scalar(-2) * Scalar::param("a"));
    CHECK_THROWS_AS(ghost(build_family("S20(q)")), std::invalid_argument);
    CHECK_THROWS_AS(ghost(build_family("E3-(q)")), std::invalid_argument);
}

TEST_CASE("ghost is invariant under rescaling x5_2")
{
    BraidedSpace s = build_family("S1p(q,a)");
    int k = s.index_of("x5_2");
    for (long lam : {2, -3, 7})
        CHECK(ghost(rescale_basis(s, k, Scalar(lam))) == ghost(s));
}

TEST_CASE("diagonal diagram of a diag space")
{
    DiagonalDiagram d = diagram(build_family("diag(-1,2;3,-1)"));
    REQUIRE(d.edges.size() == 1);
    CHECK(d.edges[0].q == Scalar(6));
    CHECK(d.vertex[0] == Scalar(-1));
    CHECK_FALSE(d.is_cycle());
}

TEST_CASE("gr diagram needs a triangular flag")
{
    BraidedSpace s = build_family("Sgen(-1,q12,-1/q12,-1,a,b)");
    CHECK_THROWS_AS(gr_diagram(s, {"x3_2", "x1", "x2", "x5_2"}), std::invalid_argument);
    DiagonalDiagram d = gr_diagram(s, {"x1", "x3_2", "x2", "x5_2"});
    CHECK(d.is_cycle());
}

TEST_CASE("specialization is deterministic and avoids 0 and +-1")
{
    BraidedSpace s = build_family("Emn(+,-;q12,q13,q23,a)");
    Assignment a1 = random_assignment(s, 7), a2 = random_assignment(s, 7);
    CHECK(a1 == a2);
    CHECK(a1.size() == 4);
    for (const auto& [name, v] : a1) {
        CHECK(v != 0);
        CHECK(v != 1);
        CHECK(v != -1);
    }
    BraidedSpace t = specialize_space(s, a1);
    CHECK(t.is_specialized());
    CHECK(check_braid_equation(t));
    for (const auto& m : t.actions)
        for (const auto& row : m)
            for (const auto& x : row)
                CHECK(x.is_constant());
}

TEST_CASE("family spec parsing and errors")
{
    CHECK(parse_family_spec("S1+(q,-1)").family == "S1p");
    CHECK(parse_family_spec("Emn(+,-;q12,q13,q23;a)").signs == std::vector<int>{1, -1});
    CHECK_THROWS_AS(build_family("Nope(q)"), std::invalid_argument);
    CHECK_THROWS_AS(build_family("E3-(0)"), std::invalid_argument);
    CHECK_THROWS_AS(build_family("Emn(+,*;q12,q13,q23,a)"), std::invalid_argument);
    CHECK_THROWS_AS(build_family("V(-1,0)"), std::invalid_argument);
}

TEST_CASE("config documents")
{
    FamilySpec f = parse_family_config("family = S1p\nparams.q = 3\na = -1\n");
    BraidedSpace s = build_family(f);
    CHECK(ghost(s) == Scalar(2));
    FamilySpec g = parse_family_config("family = Emn\nsigns.mu = -\nsigns.nu = +\n");
    CHECK(g.signs == std::vector<int>{-1, 1});
    CHECK_THROWS_AS(parse_family_config("family = E3-\nparams.zz = 2\n"), std::invalid_argument);
}
