#include "doctest.h"

#include "free_algebra.hpp"

using namespace pn;

namespace {

FreeElement gen(int k) { return FreeElement::generator(k); }

} // namespace

TEST_CASE("multiplication concatenates words")
{
    BraidedSpace s = build_family("E3-(q)");
    FreeElement a = gen(0) + gen(1), b = gen(3);
    FreeElement ab = a * b;
    CHECK(ab.size() == 2);
    CHECK(ab.n_degree() == 2);
    CHECK(ab.str(s) == "x1*x4 + x2*x4");
}

TEST_CASE("skew derivations on generators and products")
{
    BraidedSpace s = build_family("E3-(q)");
    Scalar q = Scalar::param("q");
    CHECK(derivation(s, 0, gen(0)) == FreeElement(Scalar(1)));
    CHECK(derivation(s, 1, gen(0)).is_zero());
    // d4(x4 x2) = g4 . x2 = q21 (x1 + x2)
    FreeElement d = derivation(s, 3, gen(3) * gen(1));
    CHECK(d == (gen(0) + gen(1)).scaled(q.inv()));
    // d2(x4 x2) = x4
    CHECK(derivation(s, 1, gen(3) * gen(1)) == gen(3));
}

TEST_CASE("braided commutator and adjoint chains")
{
    BraidedSpace s = build_family("E3-(q)");
    Scalar q = Scalar::param("q");
    // [x4, x1]_c = x4 x1 - q21 x1 x4
    CHECK(bracket_c(s, gen(3), gen(0)) == gen(3) * gen(0) - (gen(0) * gen(3)).scaled(q.inv()));
    CHECK(ad_chain(s, {3}, 0) == bracket_c(s, gen(3), gen(0)));
    CHECK(ad_chain(s, {3, 3}, 2) == bracket_c(s, gen(3), bracket_c(s, gen(3), gen(2))));
}

TEST_CASE("group action is multiplicative")
{
    BraidedSpace s = build_family("S1p(q,a)");
    GroupElement g = GroupElement::gen(2, 1);
    FreeElement u = gen(0) * gen(2), v = gen(3) + gen(2);
    CHECK(group_act(s, g, u * v) == group_act(s, g, u) * group_act(s, g, v));
    GroupElement ginv({0, -1});
    CHECK(group_act(s, ginv, group_act(s, g, u)) == u);
}

TEST_CASE("expression parser")
{
    BraidedSpace s = build_family("E3-(q)");
    FreeElement a = parse_expr("x{4,3}", s);
    CHECK(a == ad_chain(s, {3}, 2));
    CHECK(parse_expr("[x4, x3]", s) == a);
    CHECK(parse_expr("ad(x4)(x3)", s) == a);
    CHECK(parse_expr("x1*x2 = x1*x2", s).is_zero());
    CHECK(parse_expr("(1/2)*x2^2", s) == (gen(1) * gen(1)).scaled(Scalar(mpq_class(1, 2))));
    CHECK(parse_expr("q*x1", s) == gen(0).scaled(Scalar::param("q")));
    CHECK_THROWS_AS(parse_expr("x9", s), std::invalid_argument);
    CHECK_THROWS_AS(parse_expr("x1 +", s), std::invalid_argument);
    CHECK_THROWS_AS(parse_expr("[x1, x2", s), std::invalid_argument);
}

TEST_CASE("expression DAG expands to the direct parse")
{
    BraidedSpace s = build_family("S1m(q)");
    ExprFactory f(s);
    for (const char* text : {"x{3_2,5_2}*x{3_2,2} + x{3_2,2}*x{3_2,5_2}", "[x1,[x3_2,x2]]^2 - x2*x1",
                             "(q12 + 1)*x5_2^3"}) {
        INFO(text);
        CHECK(f.expand(parse_expr_dag(text, f)) == parse_expr(text, s));
    }
    Expr e = parse_expr_dag("x1*x2*x5_2", f);
    CHECK(f.expand(f.deriv(2, e)) == derivation(s, 2, parse_expr("x1*x2*x5_2", s)));
}

TEST_CASE("parse context overrides and names")
{
    BraidedSpace s = build_family("S1m(q)");
    ExprFactory f(s);
    ParseContext ctx;
    ctx.names["t"] = parse_expr_dag("x1*x2", f);
    ctx.overrides["x5_2"] = parse_expr_dag("-x5_2", f);
    CHECK(f.expand(parse_expr_dag("t + x5_2", f, ctx)) == parse_expr("x1*x2 - x5_2", s));
}
