#pragma once

#include "braided_space.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace pn {

// A word over the basis alphabet, stored as basis indices.
using Word = std::vector<uint8_t>;

// (length, lexicographic) order
struct WordLess {
    bool operator()(const Word& a, const Word& b) const
    {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    }
};

std::vector<int> word_gamma(const BraidedSpace& s, const Word& w);
std::string word_str(const BraidedSpace& s, const Word& w);

// Noncommutative polynomial over the basis alphabet.
class FreeElement {
public:
    using Terms = std::map<Word, Scalar, WordLess>;

    FreeElement() = default;
    explicit FreeElement(const Scalar& c);
    static FreeElement generator(int k);
    static FreeElement word(const Word& w, const Scalar& c = Scalar(1));

    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    size_t size() const { return t_.size(); }
    void add(const Word& w, const Scalar& c);   // accumulate, dropping zeros

    FreeElement operator+(const FreeElement& o) const;
    FreeElement operator-(const FreeElement& o) const;
    FreeElement operator-() const;
    FreeElement operator*(const FreeElement& o) const;
    FreeElement scaled(const Scalar& c) const;
    FreeElement& operator+=(const FreeElement& o);
    bool operator==(const FreeElement& o) const { return t_ == o.t_; }

    // N-degree if all words share a length, else -1 (0 for the zero element)
    int n_degree() const;
    bool gamma_homogeneous(const BraidedSpace& s, std::vector<int>* gamma = nullptr) const;
    // split into N-homogeneous parts keyed by length
    std::map<int, FreeElement> by_degree() const;

    std::string str(const BraidedSpace& s) const;

private:
    Terms t_;
};

FreeElement multiply(const FreeElement& a, const FreeElement& b);
FreeElement group_act(const BraidedSpace& s, const GroupElement& g, const FreeElement& e);
// u v - (g_u . v) u ; u must be Gamma-homogeneous
FreeElement bracket_c(const BraidedSpace& s, const FreeElement& u, const FreeElement& v);
// (ad x_{i1}) ... (ad x_{ik}) x_target
FreeElement ad_chain(const BraidedSpace& s, const std::vector<int>& indices, int target);
// skew-derivation with d_i(x_j) = delta_ij, d_i(xy) = d_i(x)(g_i . y) + x d_i(y)
FreeElement derivation(const BraidedSpace& s, int i, const FreeElement& e);

// ------------------------------------------------------------ expressions
//
// Expressions are kept as a shared DAG so that large named elements can be
// reused, differentiated and evaluated without expanding them into words.

struct ExprNode;
using Expr = std::shared_ptr<const ExprNode>;

enum class ExprOp { Const, Gen, Sum, Prod };

struct ExprNode {
    ExprOp op = ExprOp::Const;
    Scalar c;                                   // Const
    int gen = -1;                               // Gen
    std::vector<std::pair<Scalar, Expr>> terms; // Sum
    Expr a, b;                                  // Prod
    // syntactic degree data
    int min_deg = 0, max_deg = 0;
    bool homogeneous = true;                    // single Gamma-degree
    std::vector<int> gamma;                     // valid when homogeneous
    bool zero = false;                          // empty sum
};

class ExprFactory {
public:
    explicit ExprFactory(const BraidedSpace& s) : s_(s) {}
    const BraidedSpace& space() const { return s_; }

    Expr constant(const Scalar& c);
    Expr zero();
    Expr gen(int k);
    Expr sum(const std::vector<std::pair<Scalar, Expr>>& terms);
    Expr add(const Expr& a, const Expr& b) { return sum({{Scalar(1), a}, {Scalar(1), b}}); }
    Expr sub(const Expr& a, const Expr& b) { return sum({{Scalar(1), a}, {Scalar(-1), b}}); }
    Expr scale(const Scalar& c, const Expr& a) { return sum({{c, a}}); }
    Expr prod(const Expr& a, const Expr& b);
    Expr power(const Expr& a, unsigned e);
    // [u, v]_c = u v - (g_u . v) u ; throws if u is not Gamma-homogeneous
    Expr bracket(const Expr& u, const Expr& v);
    Expr act(const GroupElement& g, const Expr& e);
    Expr deriv(int i, const Expr& e);
    FreeElement expand(const Expr& e);

private:
    const BraidedSpace& s_;
    std::map<std::pair<const ExprNode*, std::vector<int>>, Expr> act_memo_;
    std::map<std::pair<const ExprNode*, int>, Expr> deriv_memo_;
    std::map<const ExprNode*, FreeElement> expand_memo_;
    std::vector<Expr> keep_;   // keeps memo keys alive
    Expr make(ExprNode n);
};

// Names visible to the parser besides generators, aliases and parameters.
struct ParseContext {
    std::map<std::string, Expr> names;            // derived elements
    std::map<std::string, Expr> overrides;        // replaces a generator label
};

// Grammar: sums, products, scalar division, '^', [a,b] (braided commutator),
// ad(a)(b), parentheses, and x{i,j,...,k} for iterated adjoints of
// generators. A top-level "lhs = rhs" denotes lhs - rhs.
Expr parse_expr_dag(const std::string& text, ExprFactory& f, const ParseContext& ctx = {});
FreeElement parse_expr(const std::string& text, const BraidedSpace& s, const ParseContext& ctx = {});

// Resolve the label inside an x{...} name (e.g. "3_2" -> index of x3_2).
int resolve_chain_label(const BraidedSpace& s, const std::string& item);

} // namespace pn
