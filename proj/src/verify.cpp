#include "verify.hpp"

#include "json.hpp"

#include <functional>
#include <memory>
#include <sstream>

namespace pn {

namespace {

using ojson = nlohmann::ordered_json;

// Engine, expression factory and parse context over one space.
template <class K>
struct Session {
    BraidedSpace space;
    NicholsEngine<K> eng;
    ExprFactory f;
    ParseContext ctx;

    Session(const BraidedSpace& s, const Presentation* p, const EngineOptions& o)
        : space(s), eng(space, o), f(space)
    {
        if (p)
            ctx = presentation_context(*p, f);
    }
    Expr parse(const std::string& text) { return parse_expr_dag(text, f, ctx); }
};

std::string assignment_str(const Assignment& a)
{
    std::string out;
    for (const auto& [name, v] : a)
        out += (out.empty() ? "" : ", ") + name + "=" + rational_str(v);
    return out;
}

// Zero test of one expression, with specialized screens when the exact
// computation runs out of budget.
class ZeroTester {
public:
    ZeroTester(const BraidedSpace& s, const Presentation* p, const VerifyOptions& opt)
        : base_(s), p_(p), opt_(opt)
    {
        if (opt.mode == Mode::Exact) {
            exact_ = std::make_unique<Session<Scalar>>(s, p, opt.engine);
        } else {
            auto sp = specialize_space(s, random_assignment(s, opt.seed));
            assignment_ = assignment_str(*sp.assignment);
            spec_ = std::make_unique<Session<mpq_class>>(sp, p, opt.engine);
        }
    }

    const std::string& assignment() const { return assignment_; }

    // Builds d_index(element) - expected when index >= 0
    using Builder = std::function<Expr(ExprFactory&, const std::function<Expr(const std::string&)>&)>;

    CheckResult run(CheckResult r, const Builder& build)
    {
        try {
            if (exact_) {
                Expr e = build(exact_->f, [&](const std::string& t) { return exact_->parse(t); });
                r.degree = e->max_deg;
                try {
                    r.status = exact_->eng.is_zero(e, exact_->f) ? "zero" : "nonzero";
                } catch (const BudgetExceeded& ex) {
                    r.detail = ex.what();
                    screen(r, build);
                }
            } else {
                Expr e = build(spec_->f, [&](const std::string& t) { return spec_->parse(t); });
                r.degree = e->max_deg;
                r.status = spec_->eng.is_zero(e, spec_->f) ? "zero" : "nonzero";
            }
        } catch (const BudgetExceeded& ex) {
            r.status = "skipped(budget)";
            r.detail = ex.what();
        }
        return r;
    }

    NicholsEngine<Scalar>* exact_engine() { return exact_ ? &exact_->eng : nullptr; }
    NicholsEngine<mpq_class>* spec_engine() { return spec_ ? &spec_->eng : nullptr; }
    ExprFactory& factory() { return exact_ ? exact_->f : spec_->f; }
    const BraidedSpace& space() const { return exact_ ? exact_->space : spec_->space; }

private:
    const BraidedSpace base_;
    const Presentation* p_;
    VerifyOptions opt_;
    std::unique_ptr<Session<Scalar>> exact_;
    std::unique_ptr<Session<mpq_class>> spec_;
    std::vector<std::unique_ptr<Session<mpq_class>>> screens_;
    std::string assignment_;

    void screen(CheckResult& r, const Builder& build)
    {
        if (screens_.empty())
            for (int i = 0; i < opt_.screen_seeds; ++i) {
                auto sp = specialize_space(base_, random_assignment(base_, opt_.seed + 1000 + i));
                screens_.push_back(std::make_unique<Session<mpq_class>>(sp, p_, opt_.engine));
            }
        bool all_zero = true;
        for (auto& s : screens_) {
            Expr e = build(s->f, [&](const std::string& t) { return s->parse(t); });
            if (!s->eng.is_zero(e, s->f)) {
                all_zero = false;
                break;
            }
        }
        // a nonzero specialization certifies a nonzero element
        r.status = all_zero ? "screen" : "nonzero";
        r.detail += "; specialized at " + std::to_string(screens_.size()) + " seeds";
    }
};

ZeroTester::Builder text_builder(const std::string& text)
{
    return [text](ExprFactory&, const std::function<Expr(const std::string&)>& parse) {
        return parse(text);
    };
}

ZeroTester::Builder derivation_builder(int k, const DerivationIdentity& d)
{
    return [k, d](ExprFactory& f, const std::function<Expr(const std::string&)>& parse) {
        return f.sub(f.deriv(k, parse(d.element)), parse(d.expected));
    };
}

std::vector<CheckResult> run_relations(ZeroTester& zt, const Presentation& p)
{
    std::vector<CheckResult> out;
    for (const auto& rel : p.relations) {
        CheckResult r;
        r.name = rel.name;
        r.kind = rel.kind;
        out.push_back(zt.run(r, text_builder(rel.expr)));
    }
    return out;
}

std::vector<CheckResult> run_witnesses(ZeroTester& zt, const Presentation& p)
{
    std::vector<CheckResult> out;
    for (const auto& w : p.witnesses) {
        CheckResult r;
        r.name = w.name;
        r.kind = "witness";
        r.expected_zero = false;
        out.push_back(zt.run(r, text_builder(w.expr)));
    }
    return out;
}

std::vector<CheckResult> run_derivations(ZeroTester& zt, const BraidedSpace& s, const Presentation& p)
{
    std::vector<CheckResult> out;
    for (const auto& d : p.derivations) {
        int k = s.index_of(d.index);
        if (k < 0)
            throw std::invalid_argument("derivation index '" + d.index + "' is not a basis label");
        CheckResult r;
        r.name = d.name;
        r.kind = "derivation";
        out.push_back(zt.run(r, derivation_builder(k, d)));
    }
    return out;
}

CheckResult run_mutated(ZeroTester& zt, const Presentation& p)
{
    CheckResult r;
    r.name = p.mutated.name;
    r.kind = "mutated";
    r.expected_zero = false;
    return zt.run(r, text_builder(p.mutated.expr));
}

template <class K>
HilbertReport hilbert_with(NicholsEngine<K>& eng, const Presentation& p, int N, bool* budget)
{
    HilbertReport h;
    h.pbw = pbw_series(p.pbw, N);
    try {
        for (int n = 0; n <= N; ++n)
            h.computed.push_back(eng.dim(n));
    } catch (const BudgetExceeded&) {
        if (budget)
            *budget = true;
    }
    for (size_t n = 0; n < h.computed.size(); ++n) {
        if ((long long)h.computed[n] != h.pbw[n])
            break;
        h.match_up_to = (int)n;
    }
    h.pbw.resize(N + 1);
    return h;
}

template <class K>
K1Report k1_with(NicholsEngine<K>& eng, ExprFactory& f, const K1Spec& spec)
{
    const BraidedSpace& s = eng.space();
    std::vector<int> W, U;
    for (const auto& l : spec.W)
        W.push_back(s.index_of(l));
    for (const auto& l : spec.U)
        U.push_back(s.index_of(l));
    AdjointSubspace a = adjoint_subspace(eng, f, W, U, spec.max_depth);
    K1Report r;
    r.dim = a.dim();
    r.expected = spec.expected_dim;
    r.saturated = a.saturated;
    r.dims_by_depth = a.dims_by_depth;
    for (const auto& e : a.basis)
        r.basis.push_back(e.name);
    return r;
}

bool all_passed(const std::vector<CheckResult>& v)
{
    for (const auto& r : v)
        if (!r.passed())
            return false;
    return true;
}

bool any_budget(const std::vector<CheckResult>& v)
{
    for (const auto& r : v)
        if (r.status == "skipped(budget)")
            return true;
    return false;
}

} // namespace

bool FamilyReport::passed() const
{
    if (!braid_equation || !all_passed(relations) || !all_passed(witnesses) ||
        !all_passed(derivations))
        return false;
    if (negative_control && !negative_control->passed())
        return false;
    if (hilbert && !hilbert->match())
        return false;
    if (k1 && !k1->passed())
        return false;
    return gk_claimed == gk_from_pbw && !budget_exhausted;
}

bool WnReport::passed() const
{
    for (const auto& row : rows)
        if (!all_passed(row.checks))
            return false;
    return !rows.empty();
}

std::vector<CheckResult> verify_relations(const BraidedSpace& s, const Presentation& p,
                                          const VerifyOptions& opt)
{
    ZeroTester zt(s, &p, opt);
    return run_relations(zt, p);
}

std::vector<CheckResult> verify_witnesses(const BraidedSpace& s, const Presentation& p,
                                          const VerifyOptions& opt)
{
    ZeroTester zt(s, &p, opt);
    return run_witnesses(zt, p);
}

HilbertReport verify_hilbert_match(const BraidedSpace& s, const Presentation& p,
                                   const VerifyOptions& opt)
{
    ZeroTester zt(s, &p, opt);
    if (auto* e = zt.exact_engine())
        return hilbert_with(*e, p, opt.max_deg, nullptr);
    return hilbert_with(*zt.spec_engine(), p, opt.max_deg, nullptr);
}

K1Report verify_k1(const BraidedSpace& s, const Presentation& p, const VerifyOptions& opt)
{
    if (!p.k1)
        throw std::invalid_argument("presentation " + p.id + " has no K1 data");
    ZeroTester zt(s, &p, opt);
    if (auto* e = zt.exact_engine())
        return k1_with(*e, zt.factory(), *p.k1);
    return k1_with(*zt.spec_engine(), zt.factory(), *p.k1);
}

FamilyReport verify_family(const std::string& family_spec, const VerifyOptions& opt)
{
    FamilySpec spec = parse_family_spec(family_spec);
    const Presentation& p = presentation_for(spec);
    BraidedSpace s = build_family(spec);

    FamilyReport r;
    r.family = s.name;
    r.presentation = p.id;
    r.mode = opt.mode == Mode::Exact ? "exact" : "specialized";
    r.braid_equation = check_braid_equation(s);
    ZeroTester zt(s, &p, opt);
    if (opt.mode == Mode::Specialized)
        r.assignment = zt.assignment();
    r.relations = run_relations(zt, p);
    r.witnesses = run_witnesses(zt, p);
    r.derivations = run_derivations(zt, zt.space(), p);
    r.negative_control = run_mutated(zt, p);
    bool budget = false;
    if (auto* e = zt.exact_engine())
        r.hilbert = hilbert_with(*e, p, opt.max_deg, &budget);
    else
        r.hilbert = hilbert_with(*zt.spec_engine(), p, opt.max_deg, &budget);
    if (p.k1) {
        try {
            if (auto* e = zt.exact_engine())
                r.k1 = k1_with(*e, zt.factory(), *p.k1);
            else
                r.k1 = k1_with(*zt.spec_engine(), zt.factory(), *p.k1);
        } catch (const BudgetExceeded&) {
            budget = true;
        }
    }
    try {
        r.ghost = ghost(s).str();
    } catch (const std::invalid_argument&) {
    }
    r.gk_claimed = p.gk_claimed;
    r.gk_from_pbw = gk_from_pbw(p.pbw);
    r.budget_exhausted = budget || any_budget(r.relations) || any_budget(r.witnesses) ||
                         any_budget(r.derivations);
    return r;
}

// ------------------------------------------------------------ w_n recursion

WnReport verify_wn_recursion(const std::string& family_spec, int N, const VerifyOptions& opt)
{
    FamilySpec spec = parse_family_spec(family_spec);
    if (spec.family != "S1p" && spec.family != "S1m")
        throw std::invalid_argument("the w_n recursion applies to S1p(q,a) and S1m(q)");
    const Presentation& p = presentation_for(spec);
    BraidedSpace s = build_family(spec);
    const bool jordan = spec.family == "S1p";   // q22 = 1
    Scalar G = ghost(s);
    if (!G.is_constant())
        throw std::invalid_argument("ghost must be a number");

    WnReport rep;
    rep.family = s.name;
    rep.ghost = G.str();

    // scalar sequences, indices 0..N
    const Scalar half = Scalar(mpq_class(1, 2));
    std::vector<Scalar>& A = rep.a;
    std::vector<Scalar>& B = rep.b;
    if (jordan) {
        // a_n = prod_{j=1}^n ((G-1) j - G/2)
        A.push_back(Scalar(1));
        for (int n = 1; n <= N; ++n)
            A.push_back(A.back() * ((G - Scalar(1)) * Scalar(n) - G * half));
        B.push_back(Scalar(1));
        for (int n = 1; n <= N; ++n) {
            if (n % 2 == 0) {
                int k = n / 2;
                B.push_back(-(G * half) * A[k - 1] + B[n - 1]);
            } else {
                int k = (n - 1) / 2;
                B.push_back(B[n - 1] * (Scalar(k) * (G - Scalar(1)) + G * half - Scalar(1)) +
                            G * half * A[k]);
            }
        }
    } else {
        // a_n = -1/(2^{n+1} G) prod_{k=0}^n ((2G-1) k - 2G)
        for (int n = 0; n <= N; ++n) {
            Scalar prod(1);
            for (int k = 0; k <= n; ++k)
                prod = prod * ((Scalar(2) * G - Scalar(1)) * Scalar(k) - Scalar(2) * G);
            A.push_back(-prod / (Scalar(2).pow(n + 1) * G));
        }
        B.push_back(Scalar(1));
        for (int n = 0; n < N; ++n)
            B.push_back(Scalar(n % 2 ? -1 : 1) * G * A[n] -
                        B[n] * ((Scalar(2) * G - Scalar(1)) * Scalar(n) * half + (G - Scalar(1))));
    }

    ZeroTester zt(s, &p, opt);
    const Scalar q12 = zt.space().aliases.at("q12");
    const Scalar q21 = zt.space().aliases.at("q21");
    int i1 = s.index_of("x1"), i32 = s.index_of("x3_2"), i2 = s.index_of("x2"),
        i52 = s.index_of("x5_2");

    // w_n built once per engine through the same parser context
    auto wn = [](int n) {
        std::string e = "x2";
        for (int i = 0; i < n; ++i)
            e = "[x{3_2,5_2}," + e + "]";
        return e;
    };
    auto xk = [](const std::string& base, int k) {
        return k == 0 ? std::string("1") : "(" + base + ")^" + std::to_string(k);
    };
    const std::string X = "(x{3_2,5_2}*x{3_2,2} + x{3_2,2}*x{3_2,5_2})";
    const std::string Y = "x{3_2,2}";

    for (int n = 0; n <= N; ++n) {
        WnRow row;
        row.n = n;
        std::string w = wn(n);
        auto add = [&](const std::string& name, ZeroTester::Builder b) {
            CheckResult r;
            r.name = name;
            r.kind = "identity";
            row.checks.push_back(zt.run(r, b));
        };
        auto text = [&](const std::string& name, const std::string& e) { add(name, text_builder(e)); };
        auto scaled = [](const Scalar& c, const std::string& e) { return "(" + c.str() + ")*" + e; };

        text("[x{3_2,2}, w_n]", "[" + Y + "," + w + "]");
        text("[x1, w_n]", "[x1," + w + "]");
        if (jordan) {
            text("[x, w_n]", "[" + X + "," + w + "]");
            int k = n / 2;
            std::string rhs = n % 2 == 0
                                  ? scaled(q12.pow(2 * k) * A[k], Y + "*" + xk(X, k))
                                  : scaled(-q12.pow(2 * k + 1) * A[k], xk(X, k + 1));
            text("[x3_2, w_n]", "[x3_2," + w + "] - " + rhs);
            std::string d2 = n % 2 == 0 ? scaled(B[n], xk(X, k)) : scaled(B[n], Y + "*" + xk(X, k));
            add("d2 w_n", [w, d2, i2](ExprFactory& f, const std::function<Expr(const std::string&)>& parse) {
                return f.sub(f.deriv(i2, parse(w)), parse(d2));
            });
        } else {
            text("[x3_2, w_n]", "[x3_2," + w + "] - " + scaled(q12.pow(n) * A[n], xk(Y, n + 1)));
            std::string d2 = scaled(B[n], xk(Y, n));
            add("d2 w_n", [w, d2, i2](ExprFactory& f, const std::function<Expr(const std::string&)>& parse) {
                return f.sub(f.deriv(i2, parse(w)), parse(d2));
            });
        }
        for (int k : {i1, i32, i52})
            add("d" + s.labels[k].substr(1) + " w_n",
                [w, k](ExprFactory& f, const std::function<Expr(const std::string&)>& parse) {
                    return f.deriv(k, parse(w));
                });
        Scalar c1 = Scalar(n % 2 ? -1 : 1) * q12.pow(n + 1);
        Scalar c2 = jordan ? q21.pow(n) : Scalar(n % 2 ? 1 : -1) * q21.pow(n);
        int r = s.rank;
        add("g1 . w_n", [w, c1, r](ExprFactory& f, const std::function<Expr(const std::string&)>& parse) {
            Expr e = parse(w);
            return f.sub(f.act(GroupElement::gen(r, 0), e), f.scale(c1, e));
        });
        add("g2 . w_n", [w, c2, r](ExprFactory& f, const std::function<Expr(const std::string&)>& parse) {
            Expr e = parse(w);
            return f.sub(f.act(GroupElement::gen(r, 1), e), f.scale(c2, e));
        });
        rep.rows.push_back(std::move(row));
    }
    if (jordan && G == Scalar(2) && N >= 1) {
        // the recursion starts at the element w of the presentation
        CheckResult r;
        r.name = "w_1 = w";
        r.kind = "identity";
        rep.rows[1].checks.push_back(zt.run(r, text_builder(wn(1) + " - w")));
    }
    return rep;
}

// ------------------------------------------------------------------ output

namespace {

ojson check_json(const CheckResult& r)
{
    ojson j;
    j["name"] = r.name;
    j["kind"] = r.kind;
    j["degree"] = r.degree;
    j["status"] = r.status;
    if (!r.detail.empty())
        j["detail"] = r.detail;
    return j;
}

ojson checks_json(const std::vector<CheckResult>& v)
{
    ojson a = ojson::array();
    for (const auto& r : v)
        a.push_back(check_json(r));
    return a;
}

} // namespace

std::string report_json(const FamilyReport& r, int indent)
{
    ojson j;
    j["family"] = r.family;
    j["presentation"] = r.presentation;
    j["mode"] = r.mode;
    if (r.assignment)
        j["assignment"] = *r.assignment;
    j["braid_equation"] = r.braid_equation;
    j["relations"] = checks_json(r.relations);
    j["witnesses"] = checks_json(r.witnesses);
    j["derivations"] = checks_json(r.derivations);
    j["negative_control"] = r.negative_control ? check_json(*r.negative_control) : ojson(nullptr);
    if (r.hilbert) {
        ojson h;
        h["computed"] = r.hilbert->computed;
        h["pbw"] = r.hilbert->pbw;
        h["match_up_to"] = r.hilbert->match_up_to;
        j["hilbert"] = h;
    } else {
        j["hilbert"] = nullptr;
    }
    if (r.k1) {
        ojson k;
        k["dim"] = r.k1->dim;
        k["saturated"] = r.k1->saturated;
        k["expected"] = r.k1->expected;
        k["basis"] = r.k1->basis;
        j["k1"] = k;
    } else {
        j["k1"] = nullptr;
    }
    j["ghost"] = r.ghost ? ojson(*r.ghost) : ojson(nullptr);
    j["gk_claimed"] = r.gk_claimed;
    j["gk_from_pbw"] = r.gk_from_pbw;
    j["passed"] = r.passed();
    return j.dump(indent);
}

std::string report_text(const FamilyReport& r)
{
    std::ostringstream os;
    os << "family " << r.family << " (" << r.presentation << "), " << r.mode << " mode\n";
    if (r.assignment)
        os << "assignment: " << *r.assignment << "\n";
    os << "braid equation: " << (r.braid_equation ? "holds" : "FAILS") << "\n";
    auto list = [&](const char* title, const std::vector<CheckResult>& v) {
        os << title << ":\n";
        for (const auto& c : v)
            os << "  " << (c.passed() ? "ok  " : "FAIL") << " [" << c.kind << ", deg " << c.degree
               << "] " << c.name << ": " << c.status << "\n";
    };
    list("relations", r.relations);
    list("witnesses", r.witnesses);
    list("derivation identities", r.derivations);
    if (r.negative_control)
        os << "negative control: " << r.negative_control->name << ": "
           << r.negative_control->status << (r.negative_control->passed() ? " (ok)" : " (FAIL)")
           << "\n";
    if (r.hilbert) {
        os << "hilbert computed:";
        for (auto d : r.hilbert->computed)
            os << " " << d;
        os << "\nhilbert pbw:     ";
        for (auto d : r.hilbert->pbw)
            os << " " << d;
        os << "\nmatch up to degree " << r.hilbert->match_up_to << "\n";
    }
    if (r.k1) {
        os << "K1: dim " << r.k1->dim << " (expected " << r.k1->expected << "), "
           << (r.k1->saturated ? "saturated" : "not saturated") << ":";
        for (const auto& b : r.k1->basis)
            os << " " << b;
        os << "\n";
    }
    if (r.ghost)
        os << "ghost: " << *r.ghost << "\n";
    os << "GK-dim claimed " << r.gk_claimed << ", from PBW data " << r.gk_from_pbw << "\n";
    os << (r.passed() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

std::string wn_json(const WnReport& r, int indent)
{
    ojson j;
    j["family"] = r.family;
    j["ghost"] = r.ghost;
    ojson a = ojson::array(), b = ojson::array();
    for (const auto& x : r.a)
        a.push_back(x.str());
    for (const auto& x : r.b)
        b.push_back(x.str());
    j["a"] = a;
    j["b"] = b;
    ojson rows = ojson::array();
    for (const auto& row : r.rows) {
        ojson o;
        o["n"] = row.n;
        o["checks"] = checks_json(row.checks);
        rows.push_back(o);
    }
    j["rows"] = rows;
    j["passed"] = r.passed();
    return j.dump(indent);
}

std::string wn_text(const WnReport& r)
{
    std::ostringstream os;
    os << "w_n recursion for " << r.family << ", ghost " << r.ghost << "\n";
    for (const auto& row : r.rows) {
        os << "n = " << row.n << " (a = " << r.a[row.n].str() << ", b = " << r.b[row.n].str() << ")\n";
        for (const auto& c : row.checks)
            os << "  " << (c.passed() ? "ok  " : "FAIL") << " " << c.name << ": " << c.status << "\n";
    }
    os << (r.passed() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

} // namespace pn
