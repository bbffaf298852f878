#pragma once

#include "nichols_engine.hpp"

#include <string>
#include <vector>

namespace pn {

struct PBWGenerator {
    std::string name;
    int degree = 1;
    bool bounded = true;   // exponents in {0, 1}; otherwise unbounded
};
using PBWDatum = std::vector<PBWGenerator>;

// prod_bounded (1 + t^d) * prod_unbounded 1/(1 - t^d), coefficients 0..N
std::vector<long long> pbw_series(const PBWDatum& datum, int N);
int gk_from_pbw(const PBWDatum& datum);

struct GrowthFit {
    double degree = 0;                 // least-squares slope on the tail window
    double residual = 0;               // RMS residual of that fit
    std::vector<double> window_slopes; // slopes of successive windows
    bool exceeds_window = false;
    std::string caveat;
};

// Fit log C(n) against log(n+1), C the cumulative dimension. Advisory only.
GrowthFit growth_fit(const std::vector<size_t>& dims, size_t window = 4);

struct K1Element {
    std::string name;                  // e.g. x{4,4,3}
    int depth = 0;
    Expr expr;
    FreeElement element;               // normal form in B(V)
    std::vector<FreeElement> fingerprint;   // normal forms of d_k, one per basis index
};

struct AdjointSubspace {
    std::vector<K1Element> basis;
    std::vector<size_t> dims_by_depth; // cumulative dimension after each depth
    bool saturated = false;
    int depth_reached = 0;
    size_t dim() const { return basis.size(); }
};

// Span of iterated adjoints ad x_{w1} ... ad x_{wk} (x_u), w in W, u in U,
// pruned to a basis inside B(V) depth by depth.
template <class K>
AdjointSubspace adjoint_subspace(NicholsEngine<K>& eng, ExprFactory& f, const std::vector<int>& W,
                                 const std::vector<int>& U, int max_depth);

extern template AdjointSubspace adjoint_subspace(NicholsEngine<Scalar>&, ExprFactory&,
                                                 const std::vector<int>&, const std::vector<int>&,
                                                 int);
extern template AdjointSubspace adjoint_subspace(NicholsEngine<mpq_class>&, ExprFactory&,
                                                 const std::vector<int>&, const std::vector<int>&,
                                                 int);

} // namespace pn
