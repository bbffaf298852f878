// Command-line front end over the palenichols C API.
//
// Exit status: 0 all checks passed, 1 a check failed, 2 usage error,
// 3 term budget exhausted.

#include "palenichols.h"

#include "CLI11.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

enum Exit { EXIT_OK = 0, EXIT_FAILED = 1, EXIT_USAGE = 2, EXIT_BUDGET = 3 };

struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Maps a C status to an exit code; prints the library message.
int report_status(pn_status st)
{
    std::cerr << "palenichols: " << pn_last_error() << "\n";
    switch (st) {
    case PN_ERR_BUDGET:
        return EXIT_BUDGET;
    case PN_ERR_ARGUMENT:
        return EXIT_USAGE;
    default:
        return EXIT_FAILED;
    }
}

struct StatusError {
    pn_status st;
};

void check(pn_status st)
{
    if (st != PN_OK)
        throw StatusError{st};
}

// Owns a string returned by the library.
struct CStr {
    char* p = nullptr;
    ~CStr() { pn_string_free(p); }
    char** out() { return &p; }
    std::string str() const { return p ? p : ""; }
};

using SpacePtr = std::unique_ptr<pn_space, void (*)(pn_space*)>;
using SessionPtr = std::unique_ptr<pn_session, void (*)(pn_session*)>;

struct Common {
    std::string family;
    std::string config;
    int max_deg = -1;
    std::string mode = "exact";
    uint64_t seed = 1;
    uint64_t budget_terms = 0;
    bool json = false;
    bool csv = false;
};

pn_options make_options(const Common& c, int default_deg)
{
    pn_options o;
    pn_options_default(&o);
    o.mode = c.mode == "specialized" ? PN_MODE_SPECIALIZED : PN_MODE_EXACT;
    o.max_deg = c.max_deg >= 0 ? c.max_deg : default_deg;
    o.seed = c.seed;
    if (c.budget_terms)
        o.budget_terms = c.budget_terms;
    return o;
}

pn_format format_of(const Common& c)
{
    return c.json ? PN_FORMAT_JSON : c.csv ? PN_FORMAT_CSV : PN_FORMAT_TEXT;
}

SpacePtr load_space(const Common& c)
{
    pn_space* s = nullptr;
    if (!c.config.empty()) {
        std::ifstream in(c.config);
        if (!in)
            throw Usage("cannot read config file " + c.config);
        std::stringstream buf;
        buf << in.rdbuf();
        check(pn_space_from_config(buf.str().c_str(), &s));
    } else if (!c.family.empty()) {
        check(pn_space_from_spec(c.family.c_str(), &s));
    } else {
        throw Usage("a family spec or --config is required");
    }
    return SpacePtr(s, pn_space_free);
}

// Printable spec of the space named by the options (config files resolve to it).
std::string family_text(const Common& c)
{
    if (c.config.empty())
        return c.family;
    SpacePtr s = load_space(c);
    CStr name;
    check(pn_space_name(s.get(), name.out()));
    return name.str();
}

SessionPtr open_session(const Common& c, const pn_options& o)
{
    SpacePtr s = load_space(c);
    pn_session* ss = nullptr;
    check(pn_session_create(s.get(), &o, &ss));
    return SessionPtr(ss, pn_session_free);
}

int outcome_exit(const pn_outcome& o)
{
    if (o.passed)
        return EXIT_OK;
    return o.budget_exhausted ? EXIT_BUDGET : EXIT_FAILED;
}

std::vector<std::string> lines(const std::string& s)
{
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string l;
    while (std::getline(ss, l))
        if (!l.empty())
            out.push_back(l);
    return out;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Nichols algebras of braided vector spaces with blocks, pale blocks and points"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(pn_version()));

    Common c;
    std::string expr, acting, targets, flag;
    int depth = 0, recursion = -1;
    bool list_families = false;

    auto add_common = [&](CLI::App* sub, bool with_family = true) {
        if (with_family)
            sub->add_option("family", c.family, "family spec, e.g. \"E3-(q)\" or \"S1p(q,-1)\"");
        sub->add_option("--config", c.config, "family config file (key = value lines)")
            ->check(CLI::ExistingFile);
        sub->add_option("--max-deg", c.max_deg, "degree bound")->check(CLI::Range(0, 40));
        sub->add_option("--mode", c.mode, "exact or specialized")
            ->check(CLI::IsMember({"exact", "specialized"}));
        sub->add_option("--seed", c.seed, "seed of the specialized assignment");
        sub->add_option("--budget-terms", c.budget_terms, "stored sparse entries before giving up");
        sub->add_flag("--json", c.json, "emit JSON");
        sub->add_flag("--csv", c.csv, "emit CSV (hilbert)");
    };

    auto* describe = app.add_subcommand("describe", "components, actions and presentation of a family");
    add_common(describe);
    describe->add_flag("--list", list_families, "list family names and catalog ids");
    auto* relations = app.add_subcommand("relations", "check the relations and witnesses of a presentation");
    add_common(relations);
    auto* hilbert = app.add_subcommand("hilbert", "graded dimensions of B(V)");
    add_common(hilbert);
    auto* verify = app.add_subcommand("verify", "full verification report (\"all\" for the catalog)");
    add_common(verify);
    verify->add_option("--recursion", recursion, "also check the w_n recursion up to n (S1p, S1m)");
    auto* kone = app.add_subcommand("kone", "adjoint subspace spanned by iterated brackets");
    add_common(kone);
    kone->add_option("--acting", acting, "comma-separated acting generators");
    kone->add_option("--targets", targets, "comma-separated target generators");
    kone->add_option("--depth", depth, "maximal depth")->check(CLI::Range(1, 40));
    auto* diag = app.add_subcommand("diagram", "diagram of a diagonal space or of gr V for a flag");
    add_common(diag);
    diag->add_option("--flag", flag, "comma-separated basis labels of a flag");
    auto* gh = app.add_subcommand("ghost", "ghost of a pale block next to a 2-dimensional block");
    add_common(gh);
    auto* growth = app.add_subcommand("growth", "advisory polynomial growth fit of the Hilbert series");
    add_common(growth);
    auto* ev = app.add_subcommand("eval", "decide whether an expression vanishes in B(V)");
    add_common(ev);
    ev->add_option("expr", expr, "expression")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? EXIT_OK : EXIT_USAGE;
    }
    if (c.json && c.csv) {
        std::cerr << "palenichols: --json and --csv are exclusive\n";
        return EXIT_USAGE;
    }

    try {
        pn_format fmt = format_of(c);
        if (*describe) {
            if (list_families) {
                CStr fam, ids;
                check(pn_known_families(fam.out()));
                check(pn_catalog_ids(ids.out()));
                std::cout << "families:\n" << fam.str() << "catalog:\n" << ids.str();
                return EXIT_OK;
            }
            SpacePtr s = load_space(c);
            CStr out;
            check(pn_space_describe(s.get(), fmt, out.out()));
            int holds = 0;
            check(pn_space_braid_equation(s.get(), &holds));
            std::cout << out.str();
            if (!c.json)
                std::cout << "braid equation: " << (holds ? "holds" : "FAILS") << "\n";
            return holds ? EXIT_OK : EXIT_FAILED;
        }
        if (*relations) {
            pn_options o = make_options(c, 6);
            CStr out;
            pn_outcome oc{};
            check(pn_check_relations(family_text(c).c_str(), &o, fmt, out.out(), &oc));
            std::cout << out.str();
            return outcome_exit(oc);
        }
        if (*hilbert) {
            pn_options o = make_options(c, 6);
            SessionPtr ss = open_session(c, o);
            std::vector<size_t> dims(o.max_deg + 1);
            check(pn_session_hilbert(ss.get(), o.max_deg, dims.data()));
            if (c.json) {
                std::cout << "{\"family\": \"" << family_text(c) << "\", \"dims\": [";
                for (size_t n = 0; n < dims.size(); ++n)
                    std::cout << (n ? ", " : "") << dims[n];
                std::cout << "]}\n";
            } else if (c.csv) {
                std::cout << "n,dim\n";
                for (size_t n = 0; n < dims.size(); ++n)
                    std::cout << n << "," << dims[n] << "\n";
            } else {
                for (size_t n = 0; n < dims.size(); ++n)
                    std::cout << "dim B^" << n << " = " << dims[n] << "\n";
            }
            return EXIT_OK;
        }
        if (*verify) {
            pn_options o = make_options(c, 6);
            std::vector<std::string> specs;
            if (c.family == "all" && c.config.empty()) {
                CStr ids;
                check(pn_catalog_ids(ids.out()));
                for (const auto& id : lines(ids.str()))
                    specs.push_back(id);
            } else {
                specs.push_back(family_text(c));
            }
            int rc = EXIT_OK;
            auto merge = [&rc](int e) {
                if (e == EXIT_BUDGET || (e == EXIT_FAILED && rc == EXIT_OK))
                    rc = e;
            };
            if (c.json && specs.size() > 1)
                std::cout << "[\n";
            for (size_t i = 0; i < specs.size(); ++i) {
                CStr out;
                pn_outcome oc{};
                check(pn_verify_family(specs[i].c_str(), &o, fmt, out.out(), &oc));
                std::string text = out.str();
                if (c.json && specs.size() > 1) {
                    while (!text.empty() && text.back() == '\n')
                        text.pop_back();
                    text += i + 1 < specs.size() ? ",\n" : "\n";
                }
                std::cout << text;
                merge(outcome_exit(oc));
                if (recursion >= 0) {
                    CStr wn;
                    check(pn_wn_recursion(specs[i].c_str(), recursion, &o, fmt, wn.out(), &oc));
                    std::cout << wn.str();
                    merge(outcome_exit(oc));
                }
            }
            if (c.json && specs.size() > 1)
                std::cout << "]\n";
            return rc;
        }
        if (*kone) {
            if (acting.empty() != targets.empty())
                throw Usage("--acting and --targets go together");
            pn_options o = make_options(c, 6);
            SessionPtr ss = open_session(c, o);
            CStr out;
            pn_outcome oc{};
            check(pn_session_kone(ss.get(), acting.empty() ? nullptr : acting.c_str(),
                                  targets.empty() ? nullptr : targets.c_str(), depth, fmt, out.out(), &oc));
            std::cout << out.str();
            return outcome_exit(oc);
        }
        if (*diag) {
            SpacePtr s = load_space(c);
            CStr out;
            int cyc = 0;
            check(pn_space_diagram(s.get(), flag.empty() ? nullptr : flag.c_str(), fmt, out.out(), &cyc));
            std::cout << out.str();
            if (!c.json)
                std::cout << (cyc ? "4-cycle shape: connected, 2-regular\n" : "not a cycle\n");
            return EXIT_OK;
        }
        if (*gh) {
            SpacePtr s = load_space(c);
            CStr out;
            check(pn_space_ghost(s.get(), out.out()));
            if (c.json)
                std::cout << "{\"ghost\": \"" << out.str() << "\"}\n";
            else
                std::cout << "ghost = " << out.str() << "\n";
            return EXIT_OK;
        }
        if (*growth) {
            pn_options o = make_options(c, 8);
            CStr out;
            int exceeds = 0;
            check(pn_growth(family_text(c).c_str(), &o, fmt, out.out(), &exceeds));
            std::cout << out.str();
            return EXIT_OK;
        }
        if (*ev) {
            pn_options o = make_options(c, 6);
            SessionPtr ss = open_session(c, o);
            int z = 0;
            check(pn_session_is_zero(ss.get(), expr.c_str(), &z));
            if (z) {
                std::cout << (c.json ? "{\"zero\": true}\n" : "zero in B(V)\n");
            } else {
                CStr nf;
                pn_status st = pn_session_normal_form(ss.get(), expr.c_str(), nf.out());
                if (c.json)
                    std::cout << "{\"zero\": false}\n";
                else if (st == PN_OK)
                    std::cout << "nonzero in B(V): " << nf.str() << "\n";
                else
                    std::cout << "nonzero in B(V)\n";
            }
            return EXIT_OK;
        }
    } catch (const StatusError& e) {
        return report_status(e.st);
    } catch (const Usage& e) {
        std::cerr << "palenichols: " << e.what() << "\n";
        return EXIT_USAGE;
    }
    return EXIT_USAGE;
}
