#pragma once

#include "catalog.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pn {

enum class Mode { Exact, Specialized };

struct VerifyOptions {
    Mode mode = Mode::Exact;
    int max_deg = 6;                 // Hilbert comparison range
    uint64_t seed = 1;               // specialized assignment / screens
    int screen_seeds = 3;            // specialized screens for relations over budget
    EngineOptions engine;            // max block degree and term budget
};

// status: "zero", "nonzero", "screen" (zero at every screened point),
// or "skipped(budget)"
struct CheckResult {
    std::string name;
    std::string kind;                // "defining", "derived", "witness", "derivation", "mutated"
    int degree = 0;
    std::string status;
    bool expected_zero = true;
    std::string detail;

    bool passed() const
    {
        if (status == "skipped(budget)")
            return false;
        bool zero = status == "zero" || status == "screen";
        return zero == expected_zero;
    }
};

struct HilbertReport {
    std::vector<size_t> computed;
    std::vector<long long> pbw;
    int match_up_to = -1;            // largest N with agreement on 0..N
    bool match() const { return match_up_to + 1 == (int)computed.size() && !computed.empty(); }
};

struct K1Report {
    size_t dim = 0;
    size_t expected = 0;
    bool saturated = false;
    std::vector<std::string> basis;
    std::vector<size_t> dims_by_depth;
    bool passed() const { return saturated && dim == expected; }
};

struct FamilyReport {
    std::string family;              // printable family spec
    std::string presentation;        // catalog id
    std::string mode;
    std::optional<std::string> assignment;
    bool braid_equation = false;
    std::vector<CheckResult> relations;
    std::vector<CheckResult> witnesses;
    std::vector<CheckResult> derivations;
    std::optional<CheckResult> negative_control;
    std::optional<HilbertReport> hilbert;
    std::optional<K1Report> k1;
    std::optional<std::string> ghost;
    int gk_claimed = 0;
    int gk_from_pbw = 0;
    bool budget_exhausted = false;

    bool passed() const;
};

struct WnRow {
    int n = 0;
    std::vector<CheckResult> checks;
};

struct WnReport {
    std::string family;
    std::string ghost;
    std::vector<Scalar> a, b;        // the scalar sequences used
    std::vector<WnRow> rows;
    bool passed() const;
};

std::vector<CheckResult> verify_relations(const BraidedSpace& s, const Presentation& p,
                                          const VerifyOptions& opt);
std::vector<CheckResult> verify_witnesses(const BraidedSpace& s, const Presentation& p,
                                          const VerifyOptions& opt);
HilbertReport verify_hilbert_match(const BraidedSpace& s, const Presentation& p,
                                   const VerifyOptions& opt);
K1Report verify_k1(const BraidedSpace& s, const Presentation& p, const VerifyOptions& opt);
// Recursion w_{n+1} = [x{3_2,5_2}, w_n]_c for S1p(q,-1/2), S1p(q,-1) and S1m(q).
WnReport verify_wn_recursion(const std::string& family_spec, int N, const VerifyOptions& opt = {});
FamilyReport verify_family(const std::string& family_spec, const VerifyOptions& opt);

// JSON report with a stable field order
std::string report_json(const FamilyReport& r, int indent = 2);
std::string report_text(const FamilyReport& r);
std::string wn_json(const WnReport& r, int indent = 2);
std::string wn_text(const WnReport& r);

} // namespace pn
