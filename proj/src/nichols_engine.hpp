#pragma once

#include "free_algebra.hpp"

#include <map>
#include <memory>
#include <stdexcept>
#include <vector>

namespace pn {

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EngineOptions {
    int max_degree = 12;                       // largest block degree ever built
    size_t budget_terms = 400'000'000;         // stored sparse entries across all blocks
};

// Coefficient types: Scalar (exact, rational functions) or mpq_class
// (specialized space, every action entry a rational constant).
template <class K>
struct FieldOps;

template <>
struct FieldOps<Scalar> {
    static Scalar from(const Scalar& s) { return s; }
    static Scalar to_scalar(const Scalar& x) { return x; }
    static bool is_zero(const Scalar& x) { return x.is_zero(); }
    static size_t weight(const Scalar& x) { return x.weight(); }
    static Scalar inv(const Scalar& x) { return x.inv(); }
};

template <>
struct FieldOps<mpq_class> {
    static mpq_class from(const Scalar& s);
    static Scalar to_scalar(const mpq_class& x) { return Scalar(x); }
    static bool is_zero(const mpq_class& x) { return sgn(x) == 0; }
    static size_t weight(const mpq_class& x)
    {
        return mpz_sizeinbase(x.get_num_mpz_t(), 2) + mpz_sizeinbase(x.get_den_mpz_t(), 2);
    }
    static mpq_class inv(const mpq_class& x) { return 1 / x; }
};

template <class K>
using SVec = std::vector<std::pair<uint32_t, K>>;

// One Gamma-homogeneous component B(V)_gamma.
template <class K>
struct Block {
    std::vector<int> gamma;
    int n = 0;
    std::vector<Word> normals;                 // lex increasing
    std::vector<uint32_t> parent;              // index of the prefix in block gamma - e_{comp(last)}
    std::vector<uint8_t> last;
    // D[k][i]: d_i of normal word k, in block gamma - e_{comp(i)} (empty if zero)
    std::vector<std::vector<SVec<K>>> D;
    // F[l][v]: normal form of (normal word v of block gamma - e_{comp(l)}) * x_l
    std::vector<std::vector<SVec<K>>> F;
    size_t candidates = 0;                     // words u x_j examined

    size_t dim() const { return normals.size(); }
    int index_of(const Word& w) const;         // -1 if not normal
};

// Element of B(V), keyed by Gamma-degree.
template <class K>
using BElem = std::map<std::vector<int>, SVec<K>>;

template <class K>
class NicholsEngine {
public:
    NicholsEngine(const BraidedSpace& s, EngineOptions opts = {});

    const BraidedSpace& space() const { return s_; }
    const EngineOptions& options() const { return opts_; }

    const Block<K>& block(const std::vector<int>& gamma);
    std::vector<std::vector<int>> gammas_of_degree(int n) const;
    size_t dim(int n);
    std::vector<size_t> hilbert(int N);
    std::vector<Word> normal_words(int n);
    // pairs (non-normal word w, normal form of w); w - NF(w) spans J_n
    std::vector<std::pair<Word, FreeElement>> ideal_basis(int n);

    BElem<K> normal_form(const FreeElement& e);
    FreeElement to_free(const BElem<K>& e) const;
    FreeElement reduce(const FreeElement& e) { return to_free(normal_form(e)); }
    bool is_zero(const FreeElement& e);

    // Evaluate a DAG inside B(V); requires max degree <= max_degree.
    BElem<K> eval(const Expr& e);
    // Zero test; elements above max_degree are tested through their derivatives.
    bool is_zero(const Expr& e, ExprFactory& f);

    static bool belem_zero(const BElem<K>& e);
    size_t stored_terms() const { return stored_; }

private:
    const BraidedSpace s_;
    EngineOptions opts_;
    std::vector<std::vector<std::vector<K>>> act_;   // act_[c][k][l]
    std::map<std::vector<int>, std::unique_ptr<Block<K>>> blocks_;
    std::map<const ExprNode*, BElem<K>> eval_memo_;
    std::vector<Expr> keep_;
    size_t stored_ = 0;

    void build(Block<K>& b);
    SVec<K> apply_F(int l, const std::vector<int>& gamma, const SVec<K>& v);
    SVec<K> multiply(const std::vector<int>& ga, const SVec<K>& a, const std::vector<int>& gb,
                     const SVec<K>& b);
    void count(size_t k);
};

// Quantum symmetrizer S_n = (S_{n-1} (x) id)(id + c_{n-1} + c_{n-1}c_{n-2} + ... ),
// evaluated word by word.
template <class K>
class Symmetrizer {
public:
    explicit Symmetrizer(const BraidedSpace& s);
    using Sparse = std::map<Word, K>;

    const Sparse& apply(const Word& w);
    // all words of a given Gamma-degree, lex order
    std::vector<Word> words(const std::vector<int>& gamma) const;
    size_t rank_block(const std::vector<int>& gamma);
    size_t rank(int n);

private:
    const BraidedSpace s_;
    std::vector<std::vector<std::vector<K>>> act_;
    std::map<Word, Sparse> memo_;
};

struct SymmetrizerCheck {
    size_t engine_dim = 0;
    size_t rank = 0;
    bool certified = false;    // rank and ker S_n = J_n established exactly
    std::string method;
};

// Exact-mode oracle comparison for degree n: proves rank(S_n) = dim B_n and
// ker S_n = J_n by (a) S_n(w - NF(w)) = 0 for every non-normal word and
// (b) a specialized rank reaching dim B_n; falls back to exact elimination.
SymmetrizerCheck symmetrizer_check(NicholsEngine<Scalar>& eng, int n, uint64_t seed = 1);
SymmetrizerCheck symmetrizer_check(NicholsEngine<mpq_class>& eng, int n, uint64_t seed = 1);

extern template class NicholsEngine<Scalar>;
extern template class NicholsEngine<mpq_class>;
extern template class Symmetrizer<Scalar>;
extern template class Symmetrizer<mpq_class>;

} // namespace pn
