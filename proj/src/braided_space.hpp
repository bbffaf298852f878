#pragma once

#include "scalar.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pn {

// Element of Gamma = Z^r, written additively over the generators g_1..g_r.
struct GroupElement {
    std::vector<int> e;

    GroupElement() = default;
    explicit GroupElement(std::vector<int> v) : e(std::move(v)) {}
    static GroupElement identity(int r) { return GroupElement(std::vector<int>(r, 0)); }
    static GroupElement gen(int r, int j);

    GroupElement operator+(const GroupElement& o) const;
    GroupElement operator-() const;
    bool is_identity() const;
    bool operator==(const GroupElement& o) const { return e == o.e; }
    bool operator<(const GroupElement& o) const { return e < o.e; }
    std::string str() const;
};

using Matrix = std::vector<std::vector<Scalar>>;

Matrix identity_matrix(size_t n);
Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix mat_inverse(const Matrix& a);   // throws std::domain_error if singular
Scalar mat_det(const Matrix& a);
bool mat_equal(const Matrix& a, const Matrix& b);

// Yetter-Drinfeld module over Z^r: basis vector k lives in degree g_{comp[k]}
// and generator g_j acts by actions[j], where actions[j][k][l] is the
// coefficient of e_k in g_j . e_l.
struct BraidedSpace {
    std::string name;                      // printable family spec
    std::vector<std::string> labels;
    std::vector<int> comp;                 // component (= degree generator) of each basis vector
    int rank = 0;                          // r
    std::vector<Matrix> actions;           // one per generator

    // Named scalars visible to expressions (q12, q21, a, ...). Specialized
    // spaces also carry their parameter values here.
    std::map<std::string, Scalar> aliases;
    std::vector<std::string> params;       // free parameters, in declaration order
    std::vector<std::pair<std::string, Scalar>> nonzero;   // scalars required in k^x
    std::optional<Assignment> assignment;  // set for specialized spaces

    size_t dim() const { return labels.size(); }
    int index_of(const std::string& label) const;   // -1 if absent
    GroupElement degree(int k) const { return GroupElement::gen(rank, comp[k]); }
    // matrix of an arbitrary group element (negative exponents allowed)
    Matrix action_of(const GroupElement& g) const;
    // coefficient of e_k in g_{comp[j]} . e_l
    const Scalar& act(int j, int k, int l) const { return actions[comp[j]][k][l]; }
    bool is_diagonal() const;
    bool is_specialized() const { return assignment.has_value(); }

    // throws std::invalid_argument on a violated invariant
    void validate() const;
};

// One tensor of V (x) V (x) ... as word -> coefficient; used for braiding tables.
using Tensor = std::map<std::vector<int>, Scalar>;

// c(e_k (x) e_l) = (g_{deg k} . e_l) (x) e_k
Tensor braiding(const BraidedSpace& s, int k, int l);
bool check_braid_equation(const BraidedSpace& s);

enum class ShapeKind { Point, Block, PaleBlock, Other };
struct ComponentShape {
    ShapeKind kind = ShapeKind::Other;
    Scalar eigenvalue;   // epsilon for blocks, lambda for pale blocks, q for points
    size_t dim = 0;
    std::string str() const;
};
ComponentShape classify_component(const GroupElement& g, const Matrix& action_of_g);
// classify_component on each component of the space, in component order
std::vector<ComponentShape> component_shapes(const BraidedSpace& s);
// a component is YD-indecomposable but splits as a braided space
bool is_pale_component(const BraidedSpace& s, int c);

struct DiagonalDiagram {
    std::vector<std::string> labels;
    std::vector<Scalar> vertex;                     // q_ii
    struct Edge {
        int i, j;
        Scalar q;                                   // q_ij q_ji != 1
    };
    std::vector<Edge> edges;
    std::string str() const;
    bool is_cycle() const;   // connected 2-regular graph
};

DiagonalDiagram diagram(const BraidedSpace& s);
DiagonalDiagram gr_diagram(const BraidedSpace& s, const std::vector<std::string>& flag);

// Ghost of a pale block (q11 = -1) plus a 2-dimensional block, weak interaction.
Scalar ghost(const BraidedSpace& s);

// Rescale basis vector k by lambda (the new basis vector is lambda * e_k).
BraidedSpace rescale_basis(const BraidedSpace& s, int k, const Scalar& lambda);

// Evaluate every scalar at the assignment; throws PoleError / std::domain_error.
BraidedSpace specialize_space(const BraidedSpace& s, const Assignment& sigma);

// Seeded assignment of small rationals avoiding 0, +-1 and values that
// make a required scalar vanish or hit a pole.
Assignment random_assignment(const BraidedSpace& s, uint64_t seed);

// ------------------------------------------------------------- families

struct FamilySpec {
    std::string family;                    // canonical family id
    std::vector<Scalar> args;              // positional scalars
    std::vector<int> signs;                // mu, nu
    std::vector<std::vector<Scalar>> matrix;   // diag(...)
    std::string text;                      // printable form
};

FamilySpec parse_family_spec(const std::string& text);
// key/value config document: family, params.<name>, signs.mu, signs.nu, a, b
FamilySpec parse_family_config(const std::string& document);
BraidedSpace build_family(const FamilySpec& spec);
BraidedSpace build_family(const std::string& text);

std::vector<std::string> known_families();

} // namespace pn
