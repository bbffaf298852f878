// Acceptance run: one PASS/FAIL line per criterion.
//
//   pn_acceptance            run every criterion
//   pn_acceptance 3 7        run the listed criteria
//
// Exit status is nonzero if any selected criterion fails.

#include "frozen_oracle.hpp"
#include "random_elements.hpp"
#include "verify.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>

using namespace pn;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;   // failures, one per line
    std::string summary;

    void require(bool cond, const std::string& what)
    {
        if (!cond) {
            pass = false;
            detail << "    " << what << "\n";
        }
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// default family spec of every catalog presentation
std::vector<std::pair<std::string, std::string>> catalog_specs()
{
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& id : catalog_ids())
        out.emplace_back(id, presentation_by_id(id).family_spec);
    return out;
}

// 1. braid equation, exact, under a second per family
void braid_equation(Outcome& o)
{
    auto specs = catalog_specs();
    for (const char* extra : {"V(1,2)", "V(-1,2)", "V(-1,3)", "diag(q11,q12;q21,q22)",
                              "diag(q11,q12,q13;q21,q22,q23;q31,q32,q33)"})
        specs.emplace_back(extra, extra);
    double worst = 0;
    for (const auto& [id, spec] : specs) {
        auto t0 = Clock::now();
        bool ok = check_braid_equation(build_family(spec));
        double dt = seconds_since(t0);
        worst = std::max(worst, dt);
        o.require(ok, spec + ": braid equation fails");
        o.require(dt < 1.0, spec + ": took " + std::to_string(dt) + " s");
    }
    o.summary = std::to_string(specs.size()) + " spaces, slowest " + std::to_string(worst) + " s";
}

// 2. Leibniz rule and bracket identities on 100 random triples per family
void calculus(Outcome& o)
{
    size_t triples = 0;
    for (const auto& [id, spec] : catalog_specs()) {
        BraidedSpace s = build_family(spec);
        std::mt19937_64 rng(1000 + triples);
        for (int trial = 0; trial < 100; ++trial) {
            auto u = testing::random_element(s, rng), v = testing::random_element(s, rng),
                 w = testing::random_element(s, rng);
            std::string bad = testing::calculus_failure(s, u, v, w);
            o.require(bad.empty(), id + ": " + bad + " (trial " + std::to_string(trial) + ")");
            ++triples;
        }
    }
    o.summary = std::to_string(triples) + " random homogeneous triples, exact";
}

// 3. relation suites, exact, with specialized screens over budget
void relation_suites(Outcome& o)
{
    auto t0 = Clock::now();
    size_t rels = 0, wits = 0, screens = 0;
    int top = 0;
    for (const auto& [id, spec] : catalog_specs()) {
        const Presentation& p = presentation_by_id(id);
        BraidedSpace s = build_family(spec);
        VerifyOptions opt;
        for (const auto& r : verify_relations(s, p, opt)) {
            o.require(r.passed(), id + ": relation " + r.name + " is " + r.status);
            top = std::max(top, r.degree);
            screens += r.status == "screen";
            ++rels;
        }
        for (const auto& r : verify_witnesses(s, p, opt)) {
            o.require(r.passed(), id + ": witness " + r.name + " is " + r.status);
            ++wits;
        }
    }
    double dt = seconds_since(t0);
    o.require(dt < 1800, "runtime " + std::to_string(dt) + " s exceeds 30 min");
    o.summary = std::to_string(rels) + " relations zero (" + std::to_string(screens) + " by screen), " +
                std::to_string(wits) + " witnesses nonzero, top degree " + std::to_string(top) + ", " +
                std::to_string((int)dt) + " s";
}

// 4. Hilbert series equal PBW series: n <= 6 exact, n <= 8 specialized
void hilbert_pbw(Outcome& o)
{
    for (const auto& [id, spec] : catalog_specs()) {
        const Presentation& p = presentation_by_id(id);
        BraidedSpace s = build_family(spec);
        VerifyOptions ex;
        ex.max_deg = 6;
        HilbertReport h = verify_hilbert_match(s, p, ex);
        o.require(h.match() && h.match_up_to == 6, id + ": exact agreement only up to " +
                                                       std::to_string(h.match_up_to));
        VerifyOptions sp;
        sp.mode = Mode::Specialized;
        sp.max_deg = 8;
        HilbertReport g = verify_hilbert_match(s, p, sp);
        o.require(g.match() && g.match_up_to == 8, id + ": specialized agreement only up to " +
                                                       std::to_string(g.match_up_to));
        auto it = frozen::pbw_series.find(id);
        if (it != frozen::pbw_series.end())
            for (int n = 0; n <= 6; ++n)
                o.require(h.computed[n] == (size_t)it->second[n], id + ": differs from oracle series");
    }
    NicholsEngine<Scalar> e3m(build_family("E3-(q)"));
    o.require(e3m.hilbert(5) == std::vector<size_t>{1, 4, 8, 13, 20, 28}, "E3- spot values");
    o.require(NicholsEngine<Scalar>(build_family("E3+(q)")).dim(2) == 9, "E3+ dim 2");
    o.require(NicholsEngine<Scalar>(build_family("Emn(+,+;q12,q13,q23,a)")).dim(2) == 10, "E++ dim 2");
    o.require(NicholsEngine<Scalar>(build_family("S20(q)")).dim(2) == 8, "S20 dim 2");
    o.summary = std::to_string(catalog_ids().size()) + " presentations, n <= 6 exact and n <= 8 specialized";
}

// 5. symmetrizer rank equals derivation-kernel dimension, n <= 5, exact
void symmetrizer(Outcome& o)
{
    size_t checks = 0;
    std::vector<std::string> specs;
    for (const auto& [id, spec] : catalog_specs())
        specs.push_back(spec);
    for (const char* extra : {"V(-1,2)", "V(1,2)", "V(-1,3)"})
        specs.push_back(extra);
    for (const auto& spec : specs) {
        NicholsEngine<Scalar> eng(build_family(spec));
        for (int n = 0; n <= 5; ++n) {
            SymmetrizerCheck c = symmetrizer_check(eng, n);
            o.require(c.certified && c.rank == c.engine_dim,
                      spec + " n=" + std::to_string(n) + ": rank " + std::to_string(c.rank) + " vs dim " +
                          std::to_string(c.engine_dim) + " (" + c.method + ")");
            ++checks;
        }
    }
    o.summary = std::to_string(checks) + " (family, degree) pairs certified";
}

// 6. splitting bases
void splitting(Outcome& o)
{
    std::string dims;
    for (const char* id : {"E3+", "Einf", "S1p(-1/2)", "S1p(-1)", "S1m"}) {
        const Presentation& p = presentation_by_id(id);
        K1Report k = verify_k1(build_family(p.family_spec), p, {});
        o.require(k.passed(), std::string(id) + ": dim " + std::to_string(k.dim) + ", expected " +
                                  std::to_string(k.expected) + (k.saturated ? "" : ", not saturated"));
        dims += (dims.empty() ? "" : ", ") + std::string(id) + " " + std::to_string(k.dim);
    }
    // d_k of (ad x4)^j x_i is (-1)^j x4^j when k = i - j, else zero
    BraidedSpace s = build_family("E3+(q)");
    NicholsEngine<Scalar> eng(s);
    ExprFactory f(s);
    int x4 = s.index_of("x4");
    size_t elems = 0;
    for (int i = 1; i <= 3; ++i)
        for (int j = 0; j < i; ++j) {
            Expr z = f.gen(i - 1);
            for (int t = 0; t < j; ++t)
                z = f.bracket(f.gen(x4), z);
            for (int k = 1; k <= 4; ++k) {
                Expr expected = f.zero();
                if (k == i - j)
                    expected = f.scale(Scalar(j % 2 ? -1 : 1), j ? f.power(f.gen(x4), j) : f.constant(Scalar(1)));
                bool ok = eng.is_zero(f.sub(f.deriv(k - 1, z), expected), f);
                o.require(ok, "fingerprint d" + std::to_string(k) + " of z_" + std::to_string(i) + "^(" +
                                  std::to_string(j) + ")");
                ++elems;
            }
        }
    o.summary = dims + "; " + std::to_string(elems) + " fingerprint identities";
}

// 7. ghost values and GK bookkeeping
void ghost_gk(Outcome& o)
{
    o.require(ghost(build_family("S1p(q,-1/2)")) == Scalar(1), "ghost S1p(q,-1/2)");
    o.require(ghost(build_family("S1p(q,-1)")) == Scalar(2), "ghost S1p(q,-1)");
    o.require(ghost(build_family("S1m(q)")) == Scalar(1), "ghost S1m(q)");
    const std::vector<std::pair<std::string, int>> table = {
        {"E3-", 2}, {"E3+", 4}, {"Emn(+,+)", 2}, {"Einf", 4},
        {"S20", 2}, {"S1p(-1/2)", 2}, {"S1p(-1)", 4}, {"S1m", 4}};
    for (const auto& [id, gk] : table) {
        const Presentation& p = presentation_by_id(id);
        o.require(gk_from_pbw(p.pbw) == gk, id + ": GK from PBW " + std::to_string(gk_from_pbw(p.pbw)));
        o.require(p.gk_claimed == gk, id + ": claimed GK " + std::to_string(p.gk_claimed));
    }
    for (const auto& id : catalog_ids()) {
        const Presentation& p = presentation_by_id(id);
        o.require(gk_from_pbw(p.pbw) == p.gk_claimed, id + ": GK bookkeeping");
    }
    o.summary = "ghosts 1, 2, 1; GK 2, 4, 2, 4, 2, 2, 4, 4";
}

// 8. w_n recursion, n <= 3, exact
void recursion(Outcome& o)
{
    size_t n = 0;
    for (const char* spec : {"S1m(q)", "S1p(q,-1)"}) {
        WnReport r = verify_wn_recursion(spec, 3);
        for (const auto& row : r.rows)
            for (const auto& c : row.checks) {
                o.require(c.passed(), std::string(spec) + " n=" + std::to_string(row.n) + ": " + c.name +
                                          " is " + c.status);
                ++n;
            }
    }
    o.summary = std::to_string(n) + " identities for n = 0..3";
}

// 9. diagrams of gr V
void gr_diagrams(Outcome& o)
{
    // mild interaction: q11 = q22 = -1, q12 q21 = -1
    DiagonalDiagram m = gr_diagram(build_family("Sgen(-1,q12,-1/q12,-1,a,b)"), {"x1", "x3_2", "x2", "x5_2"});
    o.require(m.is_cycle(), "mild case: not a 4-cycle");
    for (const auto& v : m.vertex)
        o.require(v == Scalar(-1), "mild case: vertex " + v.str());
    for (const auto& e : m.edges)
        o.require(e.q == Scalar(-1), "mild case: edge " + e.q.str());

    // three components, q11 = -1, q12 q21 = -1, q23 q32 = 1, q13 q31 generic
    BraidedSpace p = build_family("P2(-1,q12,q13,-1/q12,q22,q23,q31,1/q23,q33,a)");
    o.require(check_braid_equation(p), "case IV space: braid equation");
    DiagonalDiagram d = gr_diagram(p, {"x1", "x2", "x3", "x3_2"});
    o.require(d.is_cycle(), "case IV: not a 4-cycle");
    Scalar q13t = Scalar::param("q13") * Scalar::param("q31");
    const std::vector<Scalar> vertex = {Scalar(-1), Scalar::param("q22"), Scalar::param("q33"), Scalar(-1)};
    o.require(d.vertex == vertex, "case IV: vertex labels");
    std::map<std::pair<std::string, std::string>, Scalar> edges;
    for (const auto& e : d.edges)
        edges[{d.labels[e.i], d.labels[e.j]}] = e.q;
    const std::map<std::pair<std::string, std::string>, Scalar> want = {
        {{"x1", "x2"}, Scalar(-1)}, {{"x1", "x3"}, q13t}, {{"x2", "x3_2"}, Scalar(-1)}, {{"x3", "x3_2"}, q13t}};
    o.require(edges == want, "case IV: edge labels");
    o.summary = "mild case: all -1 4-cycle; case IV: 4-cycle with vertices -1, q22, q33, -1";
}

// 10. negative controls
void negative_controls(Outcome& o)
{
    size_t n = 0;
    for (const auto& [id, spec] : catalog_specs()) {
        const Presentation& p = presentation_by_id(id);
        Presentation mutated = p;
        mutated.relations = {{p.mutated.name, p.mutated.expr, "defining"}};
        auto r = verify_relations(build_family(spec), mutated, {});
        o.require(r.size() == 1 && r[0].status == "nonzero" && !r[0].passed(),
                  id + ": mutation '" + p.mutated.name + "' not detected");
        ++n;
    }
    o.summary = std::to_string(n) + " mutated relations detected as nonzero";
}

struct Criterion {
    int id;
    const char* title;
    std::function<void(Outcome&)> run;
};

} // namespace

int main(int argc, char** argv)
{
    const std::vector<Criterion> all = {
        {1, "braid equation", braid_equation},
        {2, "calculus properties", calculus},
        {3, "relation suites", relation_suites},
        {4, "Hilbert/PBW agreement", hilbert_pbw},
        {5, "symmetrizer cross-check", symmetrizer},
        {6, "splitting bases", splitting},
        {7, "ghost and GK bookkeeping", ghost_gk},
        {8, "w_n recursion", recursion},
        {9, "gr diagrams", gr_diagrams},
        {10, "negative controls", negative_controls},
    };
    std::vector<int> selected;
    for (int i = 1; i < argc; ++i)
        selected.push_back(std::atoi(argv[i]));
    bool ok = true;
    for (const auto& c : all) {
        if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end())
            continue;
        Outcome o;
        auto t0 = Clock::now();
        try {
            c.run(o);
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail << "    exception: " << e.what() << "\n";
        }
        std::cout << "criterion " << c.id << " (" << c.title << "): " << (o.pass ? "PASS" : "FAIL") << " - "
                  << o.summary << " [" << seconds_since(t0) << " s]\n"
                  << o.detail.str() << std::flush;
        ok = ok && o.pass;
    }
    return ok ? 0 : 1;
}
