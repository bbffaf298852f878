#include "catalog.hpp"

#include <map>
#include <stdexcept>

namespace pn {

int Presentation::defining_count() const
{
    int n = 0;
    for (const auto& r : relations)
        if (r.kind == "defining")
            ++n;
    return n;
}

namespace {

using Rels = std::vector<NamedRelation>;

NamedRelation def(std::string name, std::string expr) { return {std::move(name), std::move(expr), "defining"}; }
NamedRelation der(std::string name, std::string expr) { return {std::move(name), std::move(expr), "derived"}; }

PBWGenerator b(std::string n, int d = 1) { return {std::move(n), d, true}; }
PBWGenerator u(std::string n, int d = 1) { return {std::move(n), d, false}; }

void append(Rels& dst, const Rels& src)
{
    dst.insert(dst.end(), src.begin(), src.end());
}

// Relation groups shared by the pale-block families (pale block x1, x3_2 and
// a point or block starting at x2).
Rels endymion_1()
{
    return {def("x1^2", "x1^2"), def("x3_2^2", "x3_2^2"),
            def("x1 x3_2 anticommute", "x1*x3_2 + x3_2*x1")};
}
Rels endymion_1b() { return {def("x1 x2 q-commute", "x1*x2 - q12*x2*x1")}; }
Rels endymion_2()
{
    return {def("x{3_2,2}^2", "x{3_2,2}^2"),
            def("x2 x{3_2,2} q-commute", "x2*x{3_2,2} - q21*x{3_2,2}*x2")};
}
Rels endymion_2b()
{
    return {def("x2^2", "x2^2"), def("x2 x{3_2,2} anti-q-commute", "x2*x{3_2,2} + q21*x{3_2,2}*x2")};
}

std::vector<DerivationIdentity> e3plus_fingerprints()
{
    // d_k((ad x4)^j x_i) = delta_{k,i-j} (-1)^j x4^j
    std::vector<DerivationIdentity> out;
    for (int i = 1; i <= 3; ++i)
        for (int j = 0; j < i; ++j) {
            std::string el = "x" + std::to_string(i);
            if (j > 0) {
                el = "x{";
                for (int t = 0; t < j; ++t)
                    el += "4,";
                el += std::to_string(i) + "}";
            }
            for (int k = 1; k <= 4; ++k) {
                std::string expect = "0";
                if (k == i - j)
                    expect = (j % 2 ? "-" : "") + (j == 0 ? std::string("1") : "x4^" + std::to_string(j));
                out.push_back({"fingerprint d" + std::to_string(k) + " " + el, "x" + std::to_string(k),
                               el, expect});
            }
        }
    return out;
}

Presentation make_e3minus()
{
    Presentation p;
    p.id = "E3-";
    p.family_spec = "E3-(q)";
    p.definitions = {{"z2", "x4*x2 - q21*(x2+x1)*x4"},
                     {"z3", "x4*x3 - q21*(x3+x2)*x4"},
                     {"w", "z2*x3 + q21*(x3+x2)*z2"}};
    p.relations = {
        def("x1^2", "x1^2"), def("x2^2", "x2^2"), def("x3^2", "x3^2"),
        def("x1 x2 anticommute", "x1*x2 + x2*x1"), def("x1 x3 anticommute", "x1*x3 + x3*x1"),
        def("x2 x3 anticommute", "x2*x3 + x3*x2"), def("x4^2", "x4^2"),
        def("x1 x4 q-commute", "x1*x4 - q12*x4*x1"),
        def("z3 z2", "z3*z2 - z2*z3 + (1/2)*z2^2"),
        def("z2 w", "z2*w + q21*w*z2"),
        der("z2 x2", "z2*x2 = -q21*(x2+x1)*z2"),
        der("z3 x2", "z3*x2 = -w - q21*(x2+x1)*z3"),
        der("x4 z2", "x4*z2 = -q21*z2*x4"),
        der("z3 x3", "z3*x3 = -q21*(x3+x2)*z3"),
        der("x4 z3", "x4*z3 = -q21*(z3+z2)*x4"),
        der("w x2", "w*x2 = q21*(x2+x1)*w"),
        der("w x3", "w*x3 = q21*(x3+x2)*w"),
        der("x4 w", "x4*w = -q21^2*w*x4 + (q21/2)*z2^2"),
        der("z3 w", "z3*w = -q21*w*z3"),
        der("w^2", "w^2"),
    };
    p.witnesses = {{"z2^2", "z2^2"}, {"z2 z3", "z2*z3"}, {"w", "w"}};
    p.derivations = {
        {"d1 z2", "x1", "z2", "-x4"}, {"d2 z2", "x2", "z2", "0"}, {"d3 z2", "x3", "z2", "0"},
        {"d4 z2", "x4", "z2", "0"},   {"d1 z3", "x1", "z3", "0"},  {"d2 z3", "x2", "z3", "-x4"},
        {"d3 z3", "x3", "z3", "0"},   {"d4 z3", "x4", "z3", "0"},  {"d1 w", "x1", "w", "z3"},
        {"d2 w", "x2", "w", "-z2"},   {"d3 w", "x3", "w", "0"},    {"d4 w", "x4", "w", "0"},
    };
    p.pbw = {b("x1"), b("x2"), b("x3"), b("w", 3), u("z2", 2), u("z3", 2), b("x4")};
    p.gk_claimed = 2;
    p.mutated = def("z3 z2 (sign flipped)", "z3*z2 - z2*z3 - (1/2)*z2^2");
    return p;
}

Presentation make_e3plus()
{
    Presentation p;
    p.id = "E3+";
    p.family_spec = "E3+(q)";
    p.definitions = {{"x42", "[x4,x2]"},
                     {"x43", "[x4,x3]"},
                     {"x443", "[x4,x43]"},
                     {"v", "x42*x3 + q21*(x3+x2)*x42"},
                     {"u", "x43*x42 + x42*x43"},
                     {"w", "x43*v - q21*v*x43"}};
    p.relations = {
        def("x1^2", "x1^2"), def("x2^2", "x2^2"), def("x3^2", "x3^2"),
        def("x1 x2 anticommute", "x1*x2 + x2*x1"), def("x1 x3 anticommute", "x1*x3 + x3*x1"),
        def("x2 x3 anticommute", "x2*x3 + x3*x2"),
        def("x4 x1", "x4*x1 - q21*x1*x4"),
        def("x4 x42", "x4*x42 - q21*x42*x4"),
        def("x4 x443", "x4*x443 - q21*x443*x4"),
        def("x443 x42", "x443*x42 + q21*x42*x443"),
        def("x443 x43", "x443*x43 + q21*(x43+2*x42)*x443"),
        def("x4 w", "x4*w - q21^3*w*x4 + 2*q21^2*x42*u"),
        def("x43 u", "x43*u - u*x43 + x42*u"),
        def("x42 w", "x42*w + q21*w*x42"),
        def("x43 w", "x43*w + q21*w*x43"),
        der("v as bracket", "v = [x42,x3]"),
        der("u as bracket", "u = [x43,x42]"),
        der("w as bracket", "w = [x43,v]"),
    };
    p.witnesses = {{"w", "w"}, {"x443", "x443"}, {"x43^2", "x43^2"}, {"v^2", "v^2"}};
    p.derivations = {
        {"d1 x42", "x1", "x42", "-x4"},  {"d2 x43", "x2", "x43", "-x4"},
        {"d1 x443", "x1", "x443", "x4^2"}, {"d1 v", "x1", "v", "x43"},
        {"d1 u", "x1", "u", "q12*x443 + x42*x4"}, {"d1 w", "x1", "w", "2*x43^2"},
        {"d2 v", "x2", "v", "-x42"},     {"d2 u", "x2", "u", "0"},
        {"d2 w", "x2", "w", "-2*u"},     {"d3 v", "x3", "v", "0"},
        {"d3 u", "x3", "u", "0"},        {"d3 w", "x3", "w", "0"},
        {"d4 x42", "x4", "x42", "0"},    {"d4 x43", "x4", "x43", "0"},
        {"d4 x443", "x4", "x443", "0"},
    };
    for (auto& d : e3plus_fingerprints())
        p.derivations.push_back(d);
    p.pbw = {b("x1"), b("x2"), b("x3"), u("v", 3), b("x42", 2), b("w", 5),
             u("u", 4), u("x43", 2), b("x443", 3), u("x4")};
    p.gk_claimed = 4;
    p.mutated = def("x4 w (sign flipped)", "x4*w - q21^3*w*x4 - 2*q21^2*x42*u");
    p.k1 = K1Spec{{"x4"}, {"x1", "x2", "x3"}, 6, 6};
    return p;
}

Presentation make_eplus()
{
    Presentation p;
    p.id = "E+";
    p.family_spec = "E+(q)";
    append(p.relations, endymion_1());
    append(p.relations, endymion_1b());
    append(p.relations, endymion_2());
    p.witnesses = {{"x{3_2,2}", "x{3_2,2}"}, {"x2^3", "x2^3"}};
    p.pbw = {b("x1"), b("x3_2"), u("x2"), b("x{3_2,2}", 2)};
    p.gk_claimed = 1;
    p.mutated = def("x2 x{3_2,2} (sign flipped)", "x2*x{3_2,2} + q21*x{3_2,2}*x2");
    return p;
}

Presentation make_eminus()
{
    Presentation p;
    p.id = "E-";
    p.family_spec = "E-(q)";
    append(p.relations, endymion_1());
    append(p.relations, endymion_1b());
    append(p.relations, endymion_2b());
    p.witnesses = {{"x{3_2,2}^3", "x{3_2,2}^3"}, {"x1 x3_2 x2", "x1*x3_2*x2"}};
    p.pbw = {b("x1"), b("x3_2"), b("x2"), u("x{3_2,2}", 2)};
    p.gk_claimed = 1;
    p.mutated = def("x2 x{3_2,2} (sign flipped)", "x2*x{3_2,2} - q21*x{3_2,2}*x2");
    return p;
}

Presentation make_estar()
{
    Presentation p;
    p.id = "Estar";
    p.family_spec = "Estar(q)";
    p.definitions = {{"B", "[x{3_2,2},x{1,2}]"}};
    append(p.relations, endymion_1());
    p.relations.push_back(def("x2^2", "x2^2"));
    p.relations.push_back(def("x{1,2}^2", "x{1,2}^2"));
    p.relations.push_back(def("x{3_2,1,2}^2", "x{3_2,1,2}^2"));
    p.relations.push_back(def("x3_2 B", "x3_2*B - q12^2*B*x3_2 - q12*x{1,2}*x{3_2,1,2}"));
    p.witnesses = {{"B", "B"}, {"x{3_2,2}^2", "x{3_2,2}^2"}, {"x{3_2,1,2}", "x{3_2,1,2}"}};
    p.pbw = {b("x3_2"), u("x{3_2,2}", 2), b("x{3_2,1,2}", 3), u("B", 4),
             b("x1"), b("x{1,2}", 2), b("x2")};
    p.gk_claimed = 2;
    p.mutated = def("x3_2 B (sign flipped)", "x3_2*B - q12^2*B*x3_2 + q12*x{1,2}*x{3_2,1,2}");
    return p;
}

Presentation make_emn(int mu, int nu)
{
    Presentation p;
    std::string sg = std::string(mu > 0 ? "+" : "-") + "," + (nu > 0 ? "+" : "-");
    p.id = "Emn(" + sg + ")";
    p.family_spec = "Emn(" + sg + ";q12,q13,q23,a)";
    p.definitions = {{"z", "x3_2*x2 - q12*x2*x3_2"}, {"w", "x3_2*x3 - q13*x3*x3_2"}};
    append(p.relations, endymion_1());
    append(p.relations, endymion_1b());
    append(p.relations, mu > 0 ? endymion_2() : endymion_2b());
    p.relations.push_back(def("x1 x3 q-commute", "x1*x3 - q13*x3*x1"));
    if (nu > 0) {
        p.relations.push_back(def("w^2", "w^2"));
        p.relations.push_back(def("x3 w q-commute", "x3*w - q31*w*x3"));
    } else {
        p.relations.push_back(def("x3^2", "x3^2"));
        p.relations.push_back(def("x3 w anti-q-commute", "x3*w + q31*w*x3"));
    }
    p.relations.push_back(def("x2 x3 q-commute", "x2*x3 - q23*x3*x2"));
    p.relations.push_back(def("x3 z", "x3*z - q32*q31*z*x3"));
    p.relations.push_back(der("x1 z", "x1*z = -q12*z*x1"));
    p.relations.push_back(der("x3_2 z", "x3_2*z = -q12*z*x3_2"));
    p.relations.push_back(der("x1 w", "x1*w = -q13*w*x1"));
    p.relations.push_back(der("x3_2 w", "x3_2*w = -q13*w*x3_2"));
    p.relations.push_back(der("w z", "w*z = -q32*q31*q12*z*w"));
    p.relations.push_back(der("x2 w", "x2*w = q23*q21*w*x2"));
    p.witnesses = {{"z", "z"}, {"w", "w"}, {"z w", "z*w"}, {"x2 x3", "x2*x3"}};
    p.pbw = {b("x1"), b("x3_2")};
    p.pbw.push_back(mu > 0 ? u("x2") : b("x2"));
    p.pbw.push_back(mu > 0 ? b("z", 2) : u("z", 2));
    p.pbw.push_back(nu > 0 ? u("x3") : b("x3"));
    p.pbw.push_back(nu > 0 ? b("w", 2) : u("w", 2));
    p.gk_claimed = 2;
    p.mutated = def("x3 z (sign flipped)", "x3*z + q32*q31*z*x3");
    if (mu * nu < 0)
        p.notes.push_back("bounded/unbounded heights follow the relations x2^2 = 0 or x3^2 = 0 of this case");
    return p;
}

Presentation make_einf()
{
    Presentation p;
    p.id = "Einf";
    p.family_spec = "Einf(q12,q13,q23)";
    p.definitions = {{"z000", "x2"},
                     {"z100", "[x3_2,z000]"},
                     {"z010", "[x3,z100]"},
                     {"z110", "[x3_2,z010]"},
                     {"z001", "[x1,z010]"},
                     {"z101", "[x3_2,z001]"},
                     {"z011", "[x3,z101]"},
                     {"z111", "[x3_2,z011]"},
                     {"y", "[z110,z001]"}};
    p.relations = {
        def("x3_2 x1 anticommute", "x3_2*x1 + x1*x3_2"),
        def("x3_2^2", "x3_2^2"),
        def("x{3,3_2}^2", "x{3,3_2}^2"),
        def("x{1,3,3_2}^2", "x{1,3,3_2}^2"),
        def("x{1,3,3_2} x3", "x{1,3,3_2}*x3 + q13^2*x3*x{1,3,3_2}"),
        def("x3^2", "x3^2"),
        def("x{1,3}^2", "x{1,3}^2"),
        def("x1^2", "x1^2"),
        def("x2 x3 q-commute", "x2*x3 - q23*x3*x2"),
        def("x1 x2 q-commute", "x1*x2 - q12*x2*x1"),
        def("x{3_2,2} x2", "x{3_2,2}*x2 - q12*x2*x{3_2,2}"),
        def("z010^2", "z010^2"),
        def("z001^2", "z001^2"),
        def("z101^2", "z101^2"),
        def("z011^2", "z011^2"),
        def("x3_2 y", "x3_2*y - q12^2*q13^2*y*x3_2 + q12*q13*z001*z101"),
        def("z110 y", "z110*y - y*z110 + z001*y"),
        der("y expanded", "y = z110*z001 + z001*z110"),
        der("ad x1 z110", "[x1,z110] + z101"),
        der("z100 z000", "z100*z000 - q12*z000*z100"),
        der("y z001", "y*z001 - z001*y"),
        der("z100^2", "z100^2"),
        der("z101 z110", "z101*z110 + q12*q13*(z110+z001)*z101"),
        der("z011 z001", "[z011,z001]"),
        der("z111 z001", "[z111,z001]"),
        der("z010 z100", "z010*z100 + q31*q32*z100*z010"),
        der("z001 z010", "z001*z010 - q13*q12*z010*z001"),
        der("z110 z010", "z110*z010 - q13*q12*z010*z110"),
        der("z101 z001", "z101*z001 + q13*q12*z001*z101"),
        der("z011 z101", "z011*z101 - q31^3*q32*z101*z011"),
        der("z111 z011", "z111*z011 - q13^2*q12*z011*z111"),
        der("z011 z110", "[z011,z110]"),
    };
    p.witnesses = {{"y", "y"}, {"z111", "z111"}, {"z110^2", "z110^2"}, {"x2^2", "x2^2"}};
    p.derivations = {
        {"d2 z100", "x2", "z100", "-x1"},
        {"d2 z010", "x2", "z010", "-x{3,1}"},
        {"d2 z001", "x2", "z001", "-2*x1*x{3,1}"},
        {"d2 z110", "x2", "z110", "-(x{3_2,3,1} + x1*x{3,1})"},
        {"d2 z101", "x2", "z101", "2*x1*x{3_2,3,1}"},
        {"d2 z011", "x2", "z011", "2*x{3,1}*x{3_2,3,1}"},
        {"d2 z111", "x2", "z111", "-2*x1*x{3,1}*x{3_2,3,1}"},
        {"d2 y", "x2", "y", "2*z001*x1*x{3,1}"},
    };
    p.pbw = {u("z000"), b("z100", 2), b("z010", 3), b("z001", 4), u("y", 8), u("z110", 4),
             b("z101", 5), b("z011", 6), u("z111", 7), b("x3_2"), b("x{3,3_2}", 2),
             b("x{1,3,3_2}", 3), b("x3"), b("x{1,3}", 2), b("x1")};
    p.gk_claimed = 4;
    p.mutated = def("x3_2 y (sign flipped)", "x3_2*y - q12^2*q13^2*y*x3_2 - q12*q13*z001*z101");
    p.k1 = K1Spec{{"x1", "x3_2", "x3"}, {"x2"}, 8, 8};
    return p;
}

// Pale block plus 2-dim block: K^1 = ad B(V1) (V2) has basis x2, x{3_2,2}, x5_2, x{3_2,5_2}.
K1Spec two_block_k1() { return K1Spec{{"x1", "x3_2"}, {"x2", "x5_2"}, 4, 4}; }

std::vector<DerivationIdentity> two_block_derivations(const std::string& a, const std::string& d52)
{
    return {
        {"d2 x{3_2,2}", "x2", "x{3_2,2}", "-x1"},
        {"d2 x{3_2,5_2}", "x2", "x{3_2,5_2}", "-" + a + "*(x3_2+x1)"},
        {"d5_2 x{3_2,5_2}", "x5_2", "x{3_2,5_2}", d52},
        {"d1 x{3_2,5_2}", "x1", "x{3_2,5_2}", "0"},
        {"d3_2 x{3_2,5_2}", "x3_2", "x{3_2,5_2}", "0"},
    };
}

Presentation make_s20()
{
    Presentation p;
    p.id = "S20";
    p.family_spec = "S20(q)";
    p.relations = {
        def("x1^2", "x1^2"), def("x3_2^2", "x3_2^2"),
        def("x1 x3_2 anticommute", "x1*x3_2 + x3_2*x1"),
        def("x2^2", "x2^2"), def("x5_2^2", "x5_2^2"),
        def("x2 x5_2 anticommute", "x2*x5_2 + x5_2*x2"),
        def("x2 x1 q-commute", "x2*x1 - q21*x1*x2"),
        def("x2 x{3_2,2}", "x2*x{3_2,2} + q21*x{3_2,2}*x2"),
        def("x1 x{5_2,1}", "x1*x{5_2,1} + q12*x{5_2,1}*x1"),
        def("x{1,5_2}", "x{1,5_2} - x{3_2,2}"),
        def("x{3_2,5_2} x2", "x{3_2,5_2}*x2 + q12*x2*x{3_2,5_2}"),
        def("x{3_2,5_2} x5_2", "x{3_2,5_2}*x5_2 + q12*x5_2*x{3_2,5_2} + q12*x2*x{3_2,5_2}"),
        def("x{3_2,5_2} x{3_2,2}", "x{3_2,5_2}*x{3_2,2} - x{3_2,2}*x{3_2,5_2} + x{3_2,2}^2"),
        der("x1 x{3_2,5_2}", "x1*x{3_2,5_2} + q12*(x{3_2,5_2}+x{3_2,2})*x1"),
        der("x3_2 x{3_2,2}", "x3_2*x{3_2,2} + q12*x{3_2,2}*x3_2"),
        der("x{3_2,2} x5_2", "x{3_2,2}*x5_2 + q12*x5_2*x{3_2,2} + q12*x2*x{3_2,2}"),
    };
    p.witnesses = {{"x{3_2,5_2}^2", "x{3_2,5_2}^2"}, {"x{3_2,2}^2", "x{3_2,2}^2"},
                   {"x5_2 x{3_2,5_2}", "x5_2*x{3_2,5_2}"}};
    p.derivations = two_block_derivations("1", "-x1");
    p.pbw = {b("x5_2"), u("x{3_2,5_2}", 2), b("x2"), u("x{3_2,2}", 2), b("x3_2"), b("x1")};
    p.gk_claimed = 2;
    p.mutated = def("x{3_2,5_2} x{3_2,2} (sign flipped)",
                    "x{3_2,5_2}*x{3_2,2} - x{3_2,2}*x{3_2,5_2} - x{3_2,2}^2");
    p.k1 = two_block_k1();
    return p;
}

Presentation make_s1p_half()
{
    Presentation p;
    p.id = "S1p(-1/2)";
    p.family_spec = "S1p(q,-1/2)";
    append(p.relations, endymion_1());
    append(p.relations, endymion_1b());
    append(p.relations, endymion_2());
    p.relations.push_back(def("x{1,5_2}", "x{1,5_2} - a*x{3_2,2}"));
    p.relations.push_back(def("x{3_2,5_2} x2", "x{3_2,5_2}*x2 - q12*x2*x{3_2,5_2}"));
    p.relations.push_back(
        def("x{3_2,5_2} x5_2", "x{3_2,5_2}*x5_2 - q12*(x5_2+(1/2)*x2)*x{3_2,5_2}"));
    p.relations.push_back(def("x{3_2,5_2}^2", "x{3_2,5_2}^2"));
    p.relations.push_back(
        def("x{3_2,5_2} x{3_2,2}", "x{3_2,5_2}*x{3_2,2} + x{3_2,2}*x{3_2,5_2}"));
    p.relations.push_back(def("x5_2 x2", "x5_2*x2 - x2*x5_2 + (1/2)*x2^2"));
    p.witnesses = {{"x5_2^3", "x5_2^3"}, {"x{3_2,5_2} x{3_2,2}", "x{3_2,5_2}*x{3_2,2}"},
                   {"x2^3", "x2^3"}};
    p.derivations = two_block_derivations("a", "-x1");
    p.pbw = {u("x5_2"), u("x2"), b("x{3_2,5_2}", 2), b("x{3_2,2}", 2), b("x3_2"), b("x1")};
    p.gk_claimed = 2;
    p.mutated = def("x5_2 x2 (sign flipped)", "x5_2*x2 - x2*x5_2 - (1/2)*x2^2");
    p.k1 = two_block_k1();
    return p;
}

Presentation make_s1p_one()
{
    Presentation p;
    p.id = "S1p(-1)";
    p.family_spec = "S1p(q,-1)";
    p.definitions = {{"t", "x{3_2,5_2}*x5_2 - q12*x5_2*x{3_2,5_2}"},
                     {"w", "x{3_2,5_2}*x2 - q12*x2*x{3_2,5_2}"},
                     {"x", "x{3_2,5_2}*x{3_2,2} + x{3_2,2}*x{3_2,5_2}"}};
    append(p.relations, endymion_1());
    append(p.relations, endymion_1b());
    append(p.relations, endymion_2());
    p.relations.push_back(def("x{1,5_2}", "x{1,5_2} - a*x{3_2,2}"));
    p.relations.push_back(def("x5_2 x2", "x5_2*x2 - x2*x5_2 + (1/2)*x2^2"));
    p.relations.push_back(def("x{3_2,2} x5_2", "x{3_2,2}*x5_2 - q12*x5_2*x{3_2,2} - w"));
    p.relations.push_back(def("t x5_2", "t*x5_2 - q12*(x5_2+x2)*t"));
    p.relations.push_back(def("x{3_2,2} t", "x{3_2,2}*t + q12*(t-w)*x{3_2,2}"));
    p.relations.push_back(def("w x5_2", "w*x5_2 - q12*(x5_2+x2)*w"));
    p.relations.push_back(def("x{3_2,5_2} t", "x{3_2,5_2}*t + q12*(t-w)*x{3_2,5_2}"));
    p.relations.push_back(der("x{3_2,2}^2", "x{3_2,2}^2"));
    p.relations.push_back(
        der("x{3_2,5_2} x", "x{3_2,5_2}*x - x*x{3_2,5_2} - x{3_2,2}*x"));
    p.relations.push_back(der("x1 t", "x1*t = -q12^2*(t-2*w)*x1 + q12*x"));
    p.relations.push_back(der("x3_2 w", "x3_2*w = -q12^2*w*x3_2 - q12*x"));
    p.relations.push_back(der("w^2", "w^2"));
    p.relations.push_back(der("t^2", "t^2"));
    p.witnesses = {{"x", "x"}, {"w", "w"}, {"t", "t"}, {"x{3_2,5_2}^2", "x{3_2,5_2}^2"}};
    p.derivations = two_block_derivations("a", "-x1");
    p.derivations.push_back({"d2 w", "x2", "w", "x{3_2,2}"});
    p.pbw = {u("x2"), u("x5_2"), b("w", 3), b("t", 3), b("x{3_2,2}", 2), u("x", 4),
             u("x{3_2,5_2}", 2), b("x3_2"), b("x1")};
    p.gk_claimed = 4;
    p.mutated = def("t x5_2 (sign flipped)", "t*x5_2 - q12*(x5_2-x2)*t");
    p.k1 = two_block_k1();
    p.notes.push_back("x is defined inside the proof, not in the statement");
    p.notes.push_back("t and w carry a minus sign here: w = [x{3_2,5_2},x2] is the first term of the w_n recursion");
    return p;
}

Presentation make_s1m()
{
    Presentation p;
    p.id = "S1m";
    p.family_spec = "S1m(q)";
    // The stored space has a = -1, b = 1; the relations below use the basis
    // with x5_2 replaced by -x5_2, where a = 1 and b = q22.
    p.overrides = {{"x5_2", "-x5_2"}};
    p.definitions = {{"t", "x{3_2,5_2}*x5_2 + q12*x5_2*x{3_2,5_2}"},
                     {"w", "x{3_2,5_2}*x2 + q12*x2*x{3_2,5_2}"}};
    append(p.relations, endymion_1());
    append(p.relations, endymion_1b());
    append(p.relations, endymion_2b());
    p.relations.push_back(def("x{1,5_2}", "x{1,5_2} - x{3_2,2}"));
    p.relations.push_back(def("x{3_2,2} x5_2", "x{3_2,2}*x5_2 + q12*x5_2*x{3_2,2} - w"));
    p.relations.push_back(def("t x5_2", "t*x5_2 - q12*(x5_2-x2)*t"));
    p.relations.push_back(
        def("x3_2 t", "x3_2*t + q12^2*(t+2*w)*x3_2 + q12*x{3_2,2}*x{3_2,5_2}"));
    p.relations.push_back(def("w x5_2", "w*x5_2 - q12*(x5_2-x2)*w"));
    p.relations.push_back(def("x{3_2,5_2} x{3_2,2}",
                              "x{3_2,5_2}*x{3_2,2} - x{3_2,2}*x{3_2,5_2} + (1/2)*x{3_2,2}^2"));
    p.relations.push_back(def("x5_2 x{5_2,2}", "x5_2*x{5_2,2} - x{5_2,2}*x5_2 - x2*x{5_2,2}"));
    p.relations.push_back(der("w as bracket", "w = [x{3_2,5_2},x2]"));
    p.witnesses = {{"w", "w"}, {"t", "t"}, {"x{5_2,2}^2", "x{5_2,2}^2"},
                   {"x{3_2,2}^2", "x{3_2,2}^2"}};
    // derivations are taken with respect to the stored basis vector x5_2
    p.derivations = two_block_derivations("1", "x1");
    p.pbw = {b("x2"), u("x{5_2,2}", 2), u("x5_2"), b("w", 3), b("t", 3), u("x{3_2,2}", 2),
             u("x{3_2,5_2}", 2), b("x3_2"), b("x1")};
    p.gk_claimed = 4;
    p.mutated = def("x{3_2,5_2} x{3_2,2} (sign flipped)",
                    "x{3_2,5_2}*x{3_2,2} - x{3_2,2}*x{3_2,5_2} - (1/2)*x{3_2,2}^2");
    p.k1 = two_block_k1();
    p.notes.push_back("relations are written in the basis where the ghost equals a = 1");
    return p;
}

const std::vector<Presentation>& catalog()
{
    static const std::vector<Presentation> all = {
        make_e3minus(), make_e3plus(),   make_emn(1, 1),   make_emn(1, -1),
        make_emn(-1, 1), make_emn(-1, -1), make_einf(),    make_s20(),
        make_s1p_half(), make_s1p_one(), make_s1m(),       make_eplus(),
        make_eminus(),   make_estar(),
    };
    return all;
}

} // namespace

std::vector<std::string> catalog_ids()
{
    std::vector<std::string> out;
    for (const auto& p : catalog())
        out.push_back(p.id);
    return out;
}

const Presentation& presentation_by_id(const std::string& id)
{
    for (const auto& p : catalog())
        if (p.id == id)
            return p;
    throw std::invalid_argument("no presentation with id '" + id + "'");
}

const Presentation& presentation_for(const FamilySpec& spec)
{
    const std::string& f = spec.family;
    if (f == "Emn") {
        std::string id = std::string("Emn(") + (spec.signs[0] > 0 ? "+" : "-") + "," +
                         (spec.signs[1] > 0 ? "+" : "-") + ")";
        return presentation_by_id(id);
    }
    if (f == "S1p") {
        const Scalar& a = spec.args.at(1);
        if (a == Scalar(mpq_class(-1, 2)))
            return presentation_by_id("S1p(-1/2)");
        if (a == Scalar(-1))
            return presentation_by_id("S1p(-1)");
        throw std::invalid_argument("no presentation for S1p with a = " + a.str() +
                                    " (finite GK-dimension needs a = -1/2 or -1)");
    }
    for (const auto& p : catalog())
        if (p.id == f)
            return p;
    throw std::invalid_argument("no presentation for family '" + f + "'");
}

ParseContext presentation_context(const Presentation& p, ExprFactory& f)
{
    ParseContext ctx;
    for (const auto& o : p.overrides) {
        int k = f.space().index_of(o.name);
        if (k < 0)
            throw std::invalid_argument("override of unknown generator '" + o.name + "'");
        ctx.overrides[o.name] = parse_expr_dag(o.expr, f);
    }
    for (const auto& d : p.definitions)
        ctx.names[d.name] = parse_expr_dag(d.expr, f, ctx);
    return ctx;
}

} // namespace pn
