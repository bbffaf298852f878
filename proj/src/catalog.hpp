#pragma once

#include "structure_tools.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pn {

struct NamedRelation {
    std::string name;
    std::string expr;     // "lhs = rhs" or an expression that must vanish
    std::string kind;     // "defining" or "derived"
};

struct NamedExpr {
    std::string name;
    std::string expr;
};

// d_index(element) = expected, all inside B(V)
struct DerivationIdentity {
    std::string name;
    std::string index;    // basis label, e.g. "x3_2"
    std::string element;
    std::string expected;
};

struct K1Spec {
    std::vector<std::string> W;   // acting generators
    std::vector<std::string> U;   // targets
    int max_depth = 8;
    size_t expected_dim = 0;
};

struct Presentation {
    std::string id;                           // catalog id, e.g. "Emn(+,-)"
    std::string family_spec;                  // default space, e.g. "Emn(+,-;q12,q13,q23,a)"
    std::vector<NamedExpr> overrides;         // generator label -> expression
    std::vector<NamedExpr> definitions;       // derived names, in dependency order
    std::vector<NamedRelation> relations;
    std::vector<NamedExpr> witnesses;         // must be nonzero
    std::vector<DerivationIdentity> derivations;
    PBWDatum pbw;
    int gk_claimed = 0;
    NamedRelation mutated;                    // negative control, must be nonzero
    std::optional<K1Spec> k1;
    std::vector<std::string> notes;

    int defining_count() const;
};

// Catalog ids, in table order.
std::vector<std::string> catalog_ids();
const Presentation& presentation_by_id(const std::string& id);
// Presentation for a family spec (e.g. "S1p(q,-1/2)"); throws if none applies.
const Presentation& presentation_for(const FamilySpec& spec);

// Parse context holding the overrides and derived names of a presentation.
ParseContext presentation_context(const Presentation& p, ExprFactory& f);

} // namespace pn
