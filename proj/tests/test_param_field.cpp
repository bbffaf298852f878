#include "doctest.h"

#include "scalar.hpp"

using namespace pn;

TEST_CASE("parse and print round trip")
{
    for (const char* text : {"q", "-1/2", "q^2 - 1", "1/q", "(q + 1)/(q - 1)", "-q12*q13^2"}) {
        Scalar x = Scalar::parse(text);
        CHECK(Scalar::parse(x.str()) == x);
    }
}

TEST_CASE("canonical form: cancellation and monic denominator")
{
    Scalar q = Scalar::param("q");
    Scalar a = (q * q - Scalar(1)) / (Scalar(2) * q - Scalar(2));
    CHECK(a == (q + Scalar(1)) / Scalar(2));
    CHECK(a.den_is_one());
    Scalar b = Scalar(1) / (Scalar(3) * q);
    CHECK(b.den() == b.den().monic());
    CHECK(b * q == Scalar(mpq_class(1, 3)));
}

TEST_CASE("field axioms on sample elements")
{
    Scalar q = Scalar::param("q"), r = Scalar::param("r");
    Scalar x = (q + r) / (q - r), y = q * r + Scalar(mpq_class(3, 4)), z = Scalar(1) / (r * r + Scalar(1));
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x * x.inv() == Scalar(1));
    CHECK((x - x).is_zero());
    CHECK(x.pow(-2) * x.pow(2) == Scalar(1));
}

TEST_CASE("gcd of multivariate polynomials")
{
    Poly q = Poly::var(var_index("q")), r = Poly::var(var_index("r"));
    Poly one(mpq_class(1));
    Poly g = gcd((q + one) * (q - r), (q + one) * (q + r));
    CHECK(g.monic() == (q + one).monic());
    CHECK(gcd(q * q - r * r, q - r).monic() == (q - r).monic());
}

TEST_CASE("division by zero and poles")
{
    Scalar q = Scalar::param("q");
    CHECK_THROWS(Scalar(0).inv());
    Scalar x = Scalar(1) / (q - Scalar(2));
    CHECK_THROWS_AS(specialize(x, Assignment{{"q", mpq_class(2)}}), PoleError);
    CHECK(specialize(x, Assignment{{"q", mpq_class(3)}}) == 1);
    CHECK_THROWS_AS(specialize(x, Assignment{}), std::out_of_range);
}

TEST_CASE("specialization is a ring homomorphism")
{
    Scalar q = Scalar::param("q"), r = Scalar::param("r");
    Assignment s{{"q", mpq_class(2, 3)}, {"r", mpq_class(-5, 7)}};
    Scalar x = (q * q + r) / (q - r), y = r.pow(3) - q;
    CHECK(specialize(x * y, s) == specialize(x, s) * specialize(y, s));
    CHECK(specialize(x + y, s) == specialize(x, s) + specialize(y, s));
    CHECK(specialize(x / y, s) == specialize(x, s) / specialize(y, s));
}
