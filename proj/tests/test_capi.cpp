#include "doctest.h"

#include "palenichols.h"

#include <string>
#include <vector>

namespace {

std::string take(char* p)
{
    std::string s = p ? p : "";
    pn_string_free(p);
    return s;
}

} // namespace

TEST_CASE("C API: space lifecycle and errors")
{
    pn_space* s = nullptr;
    CHECK(pn_space_from_spec("Nope(q)", &s) == PN_ERR_ARGUMENT);
    CHECK(s == nullptr);
    CHECK(std::string(pn_last_error()).find("Nope") != std::string::npos);
    CHECK(pn_space_from_spec(nullptr, &s) == PN_ERR_ARGUMENT);

    REQUIRE(pn_space_from_spec("S1p(q,-1)", &s) == PN_OK);
    CHECK(pn_space_dim(s) == 4);
    int holds = 0;
    CHECK(pn_space_braid_equation(s, &holds) == PN_OK);
    CHECK(holds == 1);
    char* g = nullptr;
    CHECK(pn_space_ghost(s, &g) == PN_OK);
    CHECK(take(g) == "2");
    pn_space_free(s);
}

TEST_CASE("C API: sessions")
{
    pn_space* s = nullptr;
    REQUIRE(pn_space_from_spec("E3-(q)", &s) == PN_OK);
    pn_options o;
    pn_options_default(&o);
    pn_session* ss = nullptr;
    REQUIRE(pn_session_create(s, &o, &ss) == PN_OK);
    std::vector<size_t> dims(6);
    CHECK(pn_session_hilbert(ss, 5, dims.data()) == PN_OK);
    CHECK(dims == std::vector<size_t>{1, 4, 8, 13, 20, 28});
    int z = -1;
    CHECK(pn_session_is_zero(ss, "z3*z2 - z2*z3 + (1/2)*z2^2", &z) == PN_OK);
    CHECK(z == 1);
    CHECK(pn_session_is_zero(ss, "x1*x2", &z) == PN_OK);
    CHECK(z == 0);
    CHECK(pn_session_is_zero(ss, "x1 +", &z) == PN_ERR_ARGUMENT);
    char* nf = nullptr;
    CHECK(pn_session_normal_form(ss, "x1*x1 + x2", &nf) == PN_OK);
    CHECK(take(nf) == "x2");
    size_t rank = 0;
    int agrees = 0;
    CHECK(pn_session_symmetrizer(ss, 3, &rank, &agrees) == PN_OK);
    CHECK(rank == 13);
    CHECK(agrees == 1);
    pn_session_free(ss);
    pn_space_free(s);
}

TEST_CASE("C API: budget status")
{
    pn_space* s = nullptr;
    REQUIRE(pn_space_from_spec("E3+(q)", &s) == PN_OK);
    pn_options o;
    pn_options_default(&o);
    o.budget_terms = 30;
    pn_session* ss = nullptr;
    REQUIRE(pn_session_create(s, &o, &ss) == PN_OK);
    std::vector<size_t> dims(6);
    CHECK(pn_session_hilbert(ss, 5, dims.data()) == PN_ERR_BUDGET);
    pn_session_free(ss);
    pn_space_free(s);
}

TEST_CASE("C API: verification reports")
{
    pn_options o;
    pn_options_default(&o);
    o.max_deg = 5;
    char* out = nullptr;
    pn_outcome oc{};
    REQUIRE(pn_verify_family("E3-(q)", &o, PN_FORMAT_JSON, &out, &oc) == PN_OK);
    std::string js = take(out);
    CHECK(oc.passed == 1);
    CHECK(js.rfind("{\n  \"family\": \"E3-(q)\"", 0) == 0);
    REQUIRE(pn_wn_recursion("S1m(q)", 2, &o, PN_FORMAT_TEXT, &out, &oc) == PN_OK);
    CHECK(take(out).find("PASS") != std::string::npos);
    CHECK(pn_verify_family("E3-(q)", nullptr, PN_FORMAT_TEXT, &out, &oc) == PN_OK);
    take(out);
    o.max_deg = 99;
    CHECK(pn_verify_family("E3-(q)", &o, PN_FORMAT_TEXT, &out, &oc) == PN_ERR_ARGUMENT);
}

TEST_CASE("C API: diagrams")
{
    pn_space* s = nullptr;
    REQUIRE(pn_space_from_spec("Sgen(-1,q12,-1/q12,-1,a,b)", &s) == PN_OK);
    char* out = nullptr;
    int cyc = 0;
    REQUIRE(pn_space_diagram(s, "x1,x3_2,x2,x5_2", PN_FORMAT_TEXT, &out, &cyc) == PN_OK);
    CHECK(cyc == 1);
    take(out);
    CHECK(pn_space_diagram(s, "x3_2,x1,x2,x5_2", PN_FORMAT_TEXT, &out, &cyc) == PN_ERR_ARGUMENT);
    pn_space_free(s);
}
