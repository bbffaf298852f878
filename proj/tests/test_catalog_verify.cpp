#include "doctest.h"

#include "verify.hpp"

#include "json.hpp"

using namespace pn;

TEST_CASE("catalog covers the fourteen presentations")
{
    auto ids = catalog_ids();
    CHECK(ids.size() == 14);
    for (const auto& id : ids) {
        INFO(id);
        const Presentation& p = presentation_by_id(id);
        CHECK(p.defining_count() > 0);
        CHECK_FALSE(p.mutated.expr.empty());
        CHECK(&presentation_for(parse_family_spec(p.family_spec)) == &p);
    }
    CHECK_THROWS_AS(presentation_by_id("nope"), std::invalid_argument);
    CHECK_THROWS_AS(presentation_for(parse_family_spec("S1p(q,-3)")), std::invalid_argument);
}

TEST_CASE("relations and witnesses of E3-")
{
    const Presentation& p = presentation_by_id("E3-");
    BraidedSpace s = build_family(p.family_spec);
    VerifyOptions o;
    for (const auto& r : verify_relations(s, p, o)) {
        INFO(r.name);
        CHECK(r.status == "zero");
    }
    for (const auto& r : verify_witnesses(s, p, o)) {
        INFO(r.name);
        CHECK(r.status == "nonzero");
    }
    HilbertReport h = verify_hilbert_match(s, p, o);
    CHECK(h.match());
    CHECK(h.match_up_to == 6);
}

TEST_CASE("verify_family report and JSON field order")
{
    VerifyOptions o;
    o.max_deg = 5;
    FamilyReport r = verify_family("E3-(q)", o);
    CHECK(r.passed());
    auto j = nlohmann::ordered_json::parse(report_json(r));
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it)
        keys.push_back(it.key());
    std::vector<std::string> expected = {"family", "presentation", "mode", "braid_equation", "relations",
                                         "witnesses", "derivations", "negative_control", "hilbert",
                                         "k1", "ghost", "gk_claimed", "gk_from_pbw", "passed"};
    CHECK(keys == expected);
    CHECK(j["hilbert"]["computed"].size() == 6);
    CHECK(j["negative_control"]["status"] == "nonzero");
}

TEST_CASE("specialized reports are reproducible")
{
    VerifyOptions o;
    o.mode = Mode::Specialized;
    o.seed = 11;
    o.max_deg = 5;
    std::string a = report_json(verify_family("S20(q)", o));
    std::string b = report_json(verify_family("S20(q)", o));
    CHECK(a == b);
    CHECK(a.find("\"assignment\"") != std::string::npos);
}

TEST_CASE("budget exhaustion falls back to specialized screens")
{
    const Presentation& p = presentation_by_id("E3+");
    BraidedSpace s = build_family(p.family_spec);
    VerifyOptions o;
    o.engine.budget_terms = 400;
    auto rel = verify_relations(s, p, o);
    bool screened = false;
    for (const auto& r : rel) {
        INFO(r.name);
        CHECK(r.status != "nonzero");
        screened = screened || r.status == "screen" || r.status == "skipped(budget)";
    }
    CHECK(screened);
}

TEST_CASE("a mutated relation fails closed")
{
    for (const auto& id : catalog_ids()) {
        INFO(id);
        const Presentation& p = presentation_by_id(id);
        Presentation q = p;
        q.relations = {{p.mutated.name, p.mutated.expr, "defining"}};
        auto r = verify_relations(build_family(p.family_spec), q, {});
        CHECK(r[0].status == "nonzero");
        CHECK_FALSE(r[0].passed());
    }
}

TEST_CASE("w_n recursion rejects other families")
{
    CHECK_THROWS_AS(verify_wn_recursion("E3-(q)", 2), std::invalid_argument);
    WnReport r = verify_wn_recursion("S1m(q)", 1);
    CHECK(r.passed());
    CHECK(r.a[1] == Scalar(mpq_class(-1, 2)));
}
