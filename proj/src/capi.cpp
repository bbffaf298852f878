#include "palenichols.h"

#include "verify.hpp"

#include "json.hpp"

#include <cstring>
#include <memory>
#include <sstream>

using namespace pn;
using ojson = nlohmann::ordered_json;

struct pn_space {
    BraidedSpace space;
    std::optional<FamilySpec> spec;   // absent for spaces read from nowhere
};

struct pn_session {
    BraidedSpace space;
    const Presentation* presentation = nullptr;
    std::unique_ptr<NicholsEngine<Scalar>> exact;
    std::unique_ptr<NicholsEngine<mpq_class>> spec;
    std::unique_ptr<ExprFactory> f;
    ParseContext ctx;
    int max_deg = 6;
};

namespace {

thread_local std::string g_error;

char* dup(const std::string& s)
{
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

template <class F>
pn_status guard(F&& body)
{
    try {
        g_error.clear();
        body();
        return PN_OK;
    } catch (const BudgetExceeded& e) {
        g_error = e.what();
        return PN_ERR_BUDGET;
    } catch (const std::invalid_argument& e) {
        g_error = e.what();
        return PN_ERR_ARGUMENT;
    } catch (const std::out_of_range& e) {
        g_error = e.what();
        return PN_ERR_ARGUMENT;
    } catch (const std::domain_error& e) {
        g_error = e.what();
        return PN_ERR_DOMAIN;
    } catch (const std::exception& e) {
        g_error = e.what();
        return PN_ERR_INTERNAL;
    } catch (...) {
        g_error = "unknown error";
        return PN_ERR_INTERNAL;
    }
}

void need(const void* p, const char* what)
{
    if (!p)
        throw std::invalid_argument(std::string(what) + " is null");
}

VerifyOptions to_verify(const pn_options* o)
{
    pn_options d;
    pn_options_default(&d);
    if (!o)
        o = &d;
    if (o->max_deg < 0 || o->max_deg > 40)
        throw std::invalid_argument("max degree must lie in 0..40");
    if (o->screen_seeds < 1)
        throw std::invalid_argument("at least one screen seed is needed");
    VerifyOptions v;
    v.mode = o->mode == PN_MODE_SPECIALIZED ? Mode::Specialized : Mode::Exact;
    v.max_deg = o->max_deg;
    v.seed = o->seed;
    v.screen_seeds = o->screen_seeds;
    v.engine.max_degree = std::max(o->max_block_degree, o->max_deg);
    v.engine.budget_terms = o->budget_terms;
    return v;
}

std::vector<std::string> split_labels(const char* text)
{
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto b = item.find_first_not_of(" \t");
        auto e = item.find_last_not_of(" \t");
        if (b == std::string::npos)
            continue;
        out.push_back(item.substr(b, e - b + 1));
    }
    return out;
}

const Presentation* find_presentation(const std::optional<FamilySpec>& spec)
{
    if (!spec)
        return nullptr;
    try {
        return &presentation_for(*spec);
    } catch (const std::invalid_argument&) {
        return nullptr;
    }
}

std::string checks_text(const std::vector<CheckResult>& v)
{
    std::ostringstream os;
    for (const auto& c : v)
        os << (c.passed() ? "ok   " : "FAIL ") << "[" << c.kind << ", deg " << c.degree << "] "
           << c.name << ": " << c.status << "\n";
    return os.str();
}

ojson checks_json(const std::vector<CheckResult>& v)
{
    ojson a = ojson::array();
    for (const auto& c : v)
        a.push_back({{"name", c.name}, {"kind", c.kind}, {"degree", c.degree}, {"status", c.status}});
    return a;
}

// every action entry is a rational number, so rational arithmetic is exact
bool rational_actions(const BraidedSpace& s)
{
    for (const auto& m : s.actions)
        for (const auto& row : m)
            for (const auto& x : row)
                if (!x.is_constant())
                    return false;
    return true;
}

// catalog ids ("E3-", "Einf", ...) stand for their default family spec
std::string resolve_spec(const std::string& text)
{
    for (const auto& id : catalog_ids())
        if (id == text)
            return presentation_by_id(id).family_spec;
    return text;
}

template <class K>
size_t symmetrizer_rank(NicholsEngine<K>& eng, int n, uint64_t seed, int* agrees)
{
    SymmetrizerCheck c = symmetrizer_check(eng, n, seed);
    *agrees = c.certified && c.rank == c.engine_dim;
    return c.rank;
}

} // namespace

extern "C" {

const char* pn_version(void) { return "0.1.0"; }

const char* pn_last_error(void) { return g_error.c_str(); }

void pn_string_free(char* s) { std::free(s); }

void pn_options_default(pn_options* opt)
{
    if (!opt)
        return;
    EngineOptions e;
    opt->mode = PN_MODE_EXACT;
    opt->max_deg = 6;
    opt->seed = 1;
    opt->screen_seeds = 3;
    opt->max_block_degree = e.max_degree;
    opt->budget_terms = e.budget_terms;
}

pn_status pn_catalog_ids(char** out)
{
    return guard([&] {
        need(out, "output");
        std::string s;
        for (const auto& id : catalog_ids())
            s += id + "\n";
        *out = dup(s);
    });
}

pn_status pn_known_families(char** out)
{
    return guard([&] {
        need(out, "output");
        std::string s;
        for (const auto& id : known_families())
            s += id + "\n";
        *out = dup(s);
    });
}

// ------------------------------------------------------------------ spaces

pn_status pn_space_from_spec(const char* spec, pn_space** out)
{
    return guard([&] {
        need(spec, "family spec");
        need(out, "output");
        auto h = std::make_unique<pn_space>();
        h->spec = parse_family_spec(resolve_spec(spec));
        h->space = build_family(*h->spec);
        *out = h.release();
    });
}

pn_status pn_space_from_config(const char* document, pn_space** out)
{
    return guard([&] {
        need(document, "config document");
        need(out, "output");
        auto h = std::make_unique<pn_space>();
        h->spec = parse_family_config(document);
        h->space = build_family(*h->spec);
        *out = h.release();
    });
}

pn_status pn_space_specialize(const pn_space* s, uint64_t seed, pn_space** out)
{
    return guard([&] {
        need(s, "space");
        need(out, "output");
        auto h = std::make_unique<pn_space>();
        h->spec = s->spec;
        h->space = specialize_space(s->space, random_assignment(s->space, seed));
        *out = h.release();
    });
}

void pn_space_free(pn_space* s) { delete s; }

size_t pn_space_dim(const pn_space* s) { return s ? s->space.dim() : 0; }

pn_status pn_space_name(const pn_space* s, char** out)
{
    return guard([&] {
        need(s, "space");
        need(out, "output");
        *out = dup(s->space.name);
    });
}

pn_status pn_space_describe(const pn_space* s, pn_format fmt, char** out)
{
    return guard([&] {
        need(s, "space");
        need(out, "output");
        const BraidedSpace& sp = s->space;
        auto shapes = component_shapes(sp);
        const Presentation* p = find_presentation(s->spec);
        if (fmt == PN_FORMAT_JSON) {
            ojson j;
            j["family"] = sp.name;
            j["dim"] = sp.dim();
            j["labels"] = sp.labels;
            j["params"] = sp.params;
            if (sp.assignment) {
                ojson a;
                for (const auto& [k, v] : *sp.assignment)
                    a[k] = rational_str(v);
                j["assignment"] = a;
            }
            ojson comps = ojson::array();
            for (int c = 0; c < sp.rank; ++c) {
                ojson cj;
                std::vector<std::string> labels;
                for (size_t k = 0; k < sp.dim(); ++k)
                    if (sp.comp[k] == c)
                        labels.push_back(sp.labels[k]);
                cj["labels"] = labels;
                cj["shape"] = shapes[c].str();
                cj["pale"] = is_pale_component(sp, c);
                ojson rows = ojson::array();
                for (const auto& row : sp.actions[c]) {
                    ojson r = ojson::array();
                    for (const auto& x : row)
                        r.push_back(x.str());
                    rows.push_back(r);
                }
                cj["action"] = rows;
                comps.push_back(cj);
            }
            j["components"] = comps;
            j["presentation"] = p ? ojson(p->id) : ojson(nullptr);
            *out = dup(j.dump(2) + "\n");
            return;
        }
        std::ostringstream os;
        os << "family " << sp.name << ", dim " << sp.dim() << "\n";
        if (!sp.params.empty()) {
            os << "parameters:";
            for (const auto& q : sp.params)
                os << " " << q;
            os << "\n";
        }
        if (sp.assignment) {
            os << "assignment:";
            for (const auto& [k, v] : *sp.assignment)
                os << " " << k << "=" << rational_str(v);
            os << "\n";
        }
        for (int c = 0; c < sp.rank; ++c) {
            os << "component " << c + 1 << ":";
            for (size_t k = 0; k < sp.dim(); ++k)
                if (sp.comp[k] == c)
                    os << " " << sp.labels[k];
            os << "  " << shapes[c].str() << (is_pale_component(sp, c) ? " (pale)" : "") << "\n";
            os << "  g" << c + 1 << " acts by\n";
            for (const auto& row : sp.actions[c]) {
                os << "   ";
                for (const auto& x : row)
                    os << " " << x.str();
                os << "\n";
            }
        }
        if (p)
            os << "presentation: " << p->id << "\n";
        *out = dup(os.str());
    });
}

pn_status pn_space_braid_equation(const pn_space* s, int* holds)
{
    return guard([&] {
        need(s, "space");
        need(holds, "output");
        *holds = check_braid_equation(s->space) ? 1 : 0;
    });
}

pn_status pn_space_ghost(const pn_space* s, char** out)
{
    return guard([&] {
        need(s, "space");
        need(out, "output");
        *out = dup(ghost(s->space).str());
    });
}

pn_status pn_space_diagram(const pn_space* s, const char* flag, pn_format fmt, char** out,
                           int* is_cycle)
{
    return guard([&] {
        need(s, "space");
        need(out, "output");
        DiagonalDiagram d = flag ? gr_diagram(s->space, split_labels(flag)) : diagram(s->space);
        if (is_cycle)
            *is_cycle = d.is_cycle() ? 1 : 0;
        if (fmt == PN_FORMAT_JSON) {
            ojson j;
            j["labels"] = d.labels;
            ojson v = ojson::array();
            for (const auto& x : d.vertex)
                v.push_back(x.str());
            j["vertex"] = v;
            ojson e = ojson::array();
            for (const auto& ed : d.edges)
                e.push_back({{"i", d.labels[ed.i]}, {"j", d.labels[ed.j]}, {"q", ed.q.str()}});
            j["edges"] = e;
            j["is_cycle"] = d.is_cycle();
            *out = dup(j.dump(2) + "\n");
        } else {
            *out = dup(d.str() + "\n");
        }
    });
}

// ---------------------------------------------------------------- sessions

pn_status pn_session_create(const pn_space* s, const pn_options* opt, pn_session** out)
{
    return guard([&] {
        need(s, "space");
        need(out, "output");
        VerifyOptions v = to_verify(opt);
        auto h = std::make_unique<pn_session>();
        h->presentation = find_presentation(s->spec);
        h->max_deg = v.max_deg;
        if (v.mode == Mode::Specialized && !s->space.is_specialized())
            h->space = specialize_space(s->space, random_assignment(s->space, v.seed));
        else
            h->space = s->space;
        if (h->space.is_specialized() || rational_actions(h->space))
            h->spec = std::make_unique<NicholsEngine<mpq_class>>(h->space, v.engine);
        else
            h->exact = std::make_unique<NicholsEngine<Scalar>>(h->space, v.engine);
        h->f = std::make_unique<ExprFactory>(h->space);
        if (h->presentation)
            h->ctx = presentation_context(*h->presentation, *h->f);
        *out = h.release();
    });
}

void pn_session_free(pn_session* ss) { delete ss; }

pn_status pn_session_hilbert(pn_session* ss, int N, size_t* dims)
{
    return guard([&] {
        need(ss, "session");
        need(dims, "output");
        if (N < 0)
            throw std::invalid_argument("degree must be nonnegative");
        for (int n = 0; n <= N; ++n)
            dims[n] = ss->exact ? ss->exact->dim(n) : ss->spec->dim(n);
    });
}

pn_status pn_session_is_zero(pn_session* ss, const char* expr, int* is_zero)
{
    return guard([&] {
        need(ss, "session");
        need(expr, "expression");
        need(is_zero, "output");
        Expr e = parse_expr_dag(expr, *ss->f, ss->ctx);
        bool z = ss->exact ? ss->exact->is_zero(e, *ss->f) : ss->spec->is_zero(e, *ss->f);
        *is_zero = z ? 1 : 0;
    });
}

pn_status pn_session_normal_form(pn_session* ss, const char* expr, char** out)
{
    return guard([&] {
        need(ss, "session");
        need(expr, "expression");
        need(out, "output");
        Expr e = parse_expr_dag(expr, *ss->f, ss->ctx);
        FreeElement nf = ss->exact ? ss->exact->to_free(ss->exact->eval(e))
                                   : ss->spec->to_free(ss->spec->eval(e));
        *out = dup(nf.str(ss->space));
    });
}

pn_status pn_session_symmetrizer(pn_session* ss, int n, size_t* rank, int* agrees)
{
    return guard([&] {
        need(ss, "session");
        need(rank, "output");
        need(agrees, "output");
        if (n < 0)
            throw std::invalid_argument("degree must be nonnegative");
        *rank = ss->exact ? symmetrizer_rank(*ss->exact, n, 1, agrees)
                          : symmetrizer_rank(*ss->spec, n, 1, agrees);
    });
}

pn_status pn_session_kone(pn_session* ss, const char* W, const char* U, int max_depth,
                          pn_format fmt, char** out, pn_outcome* outcome)
{
    return guard([&] {
        need(ss, "session");
        need(out, "output");
        K1Spec spec;
        if (W && U) {
            spec.W = split_labels(W);
            spec.U = split_labels(U);
        } else {
            if (!ss->presentation || !ss->presentation->k1)
                throw std::invalid_argument("no adjoint data for this family; pass acting and target labels");
            spec = *ss->presentation->k1;
        }
        if (max_depth > 0)
            spec.max_depth = max_depth;
        std::vector<int> w, u;
        for (const auto& l : spec.W)
            w.push_back(resolve_chain_label(ss->space, l));
        for (const auto& l : spec.U)
            u.push_back(resolve_chain_label(ss->space, l));
        AdjointSubspace a = ss->exact ? adjoint_subspace(*ss->exact, *ss->f, w, u, spec.max_depth)
                                      : adjoint_subspace(*ss->spec, *ss->f, w, u, spec.max_depth);
        bool passed = a.saturated && (spec.expected_dim == 0 || a.dim() == spec.expected_dim);
        if (outcome)
            *outcome = {passed ? 1 : 0, 0};
        if (fmt == PN_FORMAT_JSON) {
            ojson j;
            j["family"] = ss->space.name;
            j["dim"] = a.dim();
            j["saturated"] = a.saturated;
            if (spec.expected_dim)
                j["expected"] = spec.expected_dim;
            j["dims_by_depth"] = a.dims_by_depth;
            ojson b = ojson::array();
            for (const auto& e : a.basis) {
                ojson fp = ojson::array();
                for (const auto& d : e.fingerprint)
                    fp.push_back(d.str(ss->space));
                b.push_back({{"name", e.name}, {"depth", e.depth}, {"element", e.element.str(ss->space)},
                             {"derivatives", fp}});
            }
            j["basis"] = b;
            j["passed"] = passed;
            *out = dup(j.dump(2) + "\n");
            return;
        }
        std::ostringstream os;
        os << "adjoint subspace of " << ss->space.name << ": dim " << a.dim()
           << (a.saturated ? ", saturated" : ", not saturated") << " at depth " << a.depth_reached
           << "\n";
        for (const auto& e : a.basis)
            os << "  " << e.name << " = " << e.element.str(ss->space) << "\n";
        if (spec.expected_dim)
            os << "expected dim " << spec.expected_dim << ": " << (passed ? "PASS" : "FAIL") << "\n";
        *out = dup(os.str());
    });
}

// ----------------------------------------------------------------- reports

pn_status pn_verify_family(const char* spec, const pn_options* opt, pn_format fmt, char** out,
                           pn_outcome* outcome)
{
    return guard([&] {
        need(spec, "family spec");
        need(out, "output");
        FamilyReport r = verify_family(resolve_spec(spec), to_verify(opt));
        if (outcome)
            *outcome = {r.passed() ? 1 : 0, r.budget_exhausted ? 1 : 0};
        *out = dup(fmt == PN_FORMAT_JSON ? report_json(r) + "\n" : report_text(r));
    });
}

pn_status pn_check_relations(const char* spec, const pn_options* opt, pn_format fmt, char** out,
                             pn_outcome* outcome)
{
    return guard([&] {
        need(spec, "family spec");
        need(out, "output");
        VerifyOptions v = to_verify(opt);
        FamilySpec fs = parse_family_spec(resolve_spec(spec));
        const Presentation& p = presentation_for(fs);
        BraidedSpace s = build_family(fs);
        auto rel = verify_relations(s, p, v);
        auto wit = verify_witnesses(s, p, v);
        bool passed = true, budget = false;
        for (const auto* v2 : {&rel, &wit})
            for (const auto& c : *v2) {
                passed = passed && c.passed();
                budget = budget || c.status == "skipped(budget)";
            }
        if (outcome)
            *outcome = {passed ? 1 : 0, budget ? 1 : 0};
        if (fmt == PN_FORMAT_JSON) {
            ojson j;
            j["family"] = s.name;
            j["presentation"] = p.id;
            j["mode"] = v.mode == Mode::Exact ? "exact" : "specialized";
            j["relations"] = checks_json(rel);
            j["witnesses"] = checks_json(wit);
            j["passed"] = passed;
            *out = dup(j.dump(2) + "\n");
        } else {
            *out = dup("relations of " + p.id + " on " + s.name + "\n" + checks_text(rel) +
                       "witnesses\n" + checks_text(wit) + (passed ? "PASS\n" : "FAIL\n"));
        }
    });
}

pn_status pn_wn_recursion(const char* spec, int N, const pn_options* opt, pn_format fmt,
                          char** out, pn_outcome* outcome)
{
    return guard([&] {
        need(spec, "family spec");
        need(out, "output");
        if (N < 0)
            throw std::invalid_argument("recursion length must be nonnegative");
        WnReport r = verify_wn_recursion(resolve_spec(spec), N, to_verify(opt));
        bool budget = false;
        for (const auto& row : r.rows)
            for (const auto& c : row.checks)
                budget = budget || c.status == "skipped(budget)";
        if (outcome)
            *outcome = {r.passed() ? 1 : 0, budget ? 1 : 0};
        *out = dup(fmt == PN_FORMAT_JSON ? wn_json(r) + "\n" : wn_text(r));
    });
}

pn_status pn_growth(const char* spec, const pn_options* opt, pn_format fmt, char** out,
                    int* exceeds_window)
{
    return guard([&] {
        need(spec, "family spec");
        need(out, "output");
        VerifyOptions v = to_verify(opt);
        BraidedSpace s = build_family(spec);
        if (v.mode == Mode::Specialized && !s.params.empty())
            s = specialize_space(s, random_assignment(s, v.seed));
        std::vector<size_t> dims;
        if (s.is_specialized() || rational_actions(s))
            dims = NicholsEngine<mpq_class>(s, v.engine).hilbert(v.max_deg);
        else
            dims = NicholsEngine<Scalar>(s, v.engine).hilbert(v.max_deg);
        GrowthFit g = growth_fit(dims);
        if (exceeds_window)
            *exceeds_window = g.exceeds_window ? 1 : 0;
        if (fmt == PN_FORMAT_JSON) {
            ojson j;
            j["family"] = s.name;
            j["dims"] = dims;
            j["degree"] = g.degree;
            j["residual"] = g.residual;
            j["window_slopes"] = g.window_slopes;
            j["exceeds_window"] = g.exceeds_window;
            j["caveat"] = g.caveat;
            *out = dup(j.dump(2) + "\n");
            return;
        }
        std::ostringstream os;
        os << "growth of " << s.name << "\ndims:";
        for (auto d : dims)
            os << " " << d;
        os << "\nfitted degree " << g.degree << " (rms residual " << g.residual << ")\n";
        os << "window slopes:";
        for (auto x : g.window_slopes)
            os << " " << x;
        os << "\n";
        if (g.exceeds_window)
            os << "slopes still rising: growth exceeds the fitted window\n";
        os << g.caveat << "\n";
        *out = dup(os.str());
    });
}

} // extern "C"
