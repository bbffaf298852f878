#include "nichols_engine.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace pn {

mpq_class FieldOps<mpq_class>::from(const Scalar& s)
{
    if (!s.is_constant())
        throw std::invalid_argument("specialized computation met a non-constant scalar " + s.str());
    return s.constant_value();
}

namespace {

std::vector<int> minus_e(std::vector<int> g, int c)
{
    --g[c];
    return g;
}

std::vector<int> plus_e(std::vector<int> g, int c)
{
    ++g[c];
    return g;
}

std::vector<int> add_gamma(std::vector<int> a, const std::vector<int>& b)
{
    for (size_t i = 0; i < a.size(); ++i)
        a[i] += b[i];
    return a;
}

int total(const std::vector<int>& g) { return std::accumulate(g.begin(), g.end(), 0); }

// Dense accumulator with a touched list, reused across rows.
template <class K>
struct Dense {
    std::vector<K> v;
    std::vector<char> hit;
    std::vector<uint32_t> touched;

    void resize(size_t n)
    {
        v.assign(n, K());
        hit.assign(n, 0);
        touched.clear();
    }
    void grow(size_t n)
    {
        if (v.size() < n) {
            v.resize(n, K());
            hit.resize(n, 0);
        }
    }
    void add(uint32_t i, const K& c)
    {
        if (!hit[i]) {
            hit[i] = 1;
            touched.push_back(i);
            v[i] = c;
        } else
            v[i] += c;
    }
    void addmul(const SVec<K>& x, const K& c)
    {
        for (const auto& [i, a] : x)
            add(i, c * a);
    }
    // extract nonzeros (sorted) and reset
    SVec<K> take()
    {
        std::sort(touched.begin(), touched.end());
        SVec<K> out;
        for (auto i : touched) {
            if (!FieldOps<K>::is_zero(v[i]))
                out.emplace_back(i, std::move(v[i]));
            v[i] = K();
            hit[i] = 0;
        }
        touched.clear();
        return out;
    }
    void clear()
    {
        for (auto i : touched) {
            v[i] = K();
            hit[i] = 0;
        }
        touched.clear();
    }
};

template <class K>
void add_scaled(SVec<K>& dst, const SVec<K>& src, const K& c)
{
    SVec<K> out;
    out.reserve(dst.size() + src.size());
    size_t i = 0, j = 0;
    while (i < dst.size() || j < src.size()) {
        if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
            out.push_back(std::move(dst[i++]));
        } else if (i == dst.size() || src[j].first < dst[i].first) {
            out.emplace_back(src[j].first, c * src[j].second);
            ++j;
        } else {
            K x = dst[i].second + c * src[j].second;
            if (!FieldOps<K>::is_zero(x))
                out.emplace_back(dst[i].first, std::move(x));
            ++i;
            ++j;
        }
    }
    dst = std::move(out);
}

template <class K>
std::vector<std::vector<std::vector<K>>> convert_actions(const BraidedSpace& s)
{
    std::vector<std::vector<std::vector<K>>> out(s.rank);
    for (int c = 0; c < s.rank; ++c) {
        out[c].assign(s.dim(), std::vector<K>(s.dim()));
        for (size_t k = 0; k < s.dim(); ++k)
            for (size_t l = 0; l < s.dim(); ++l)
                out[c][k][l] = FieldOps<K>::from(s.actions[c][k][l]);
    }
    return out;
}

std::vector<Word> words_of_gamma(const BraidedSpace& s, const std::vector<int>& gamma)
{
    std::vector<Word> out;
    int n = total(gamma);
    Word cur;
    std::vector<int> left = gamma;
    std::function<void()> rec = [&]() {
        if ((int)cur.size() == n) {
            out.push_back(cur);
            return;
        }
        for (size_t k = 0; k < s.dim(); ++k) {
            int c = s.comp[k];
            if (left[c] == 0)
                continue;
            --left[c];
            cur.push_back((uint8_t)k);
            rec();
            cur.pop_back();
            ++left[c];
        }
    };
    rec();
    return out;
}

} // namespace

template <class K>
int Block<K>::index_of(const Word& w) const
{
    auto it = std::lower_bound(normals.begin(), normals.end(), w);
    if (it == normals.end() || *it != w)
        return -1;
    return (int)(it - normals.begin());
}

// ------------------------------------------------------------ NicholsEngine

template <class K>
NicholsEngine<K>::NicholsEngine(const BraidedSpace& s, EngineOptions opts)
    : s_(s), opts_(opts), act_(convert_actions<K>(s))
{
    if (s.dim() > 255)
        throw std::invalid_argument("at most 255 basis vectors are supported");
}

template <class K>
void NicholsEngine<K>::count(size_t k)
{
    stored_ += k;
    if (stored_ > opts_.budget_terms)
        throw BudgetExceeded("term budget of " + std::to_string(opts_.budget_terms) +
                             " stored coefficients exhausted");
}

template <class K>
const Block<K>& NicholsEngine<K>::block(const std::vector<int>& gamma)
{
    auto it = blocks_.find(gamma);
    if (it != blocks_.end())
        return *it->second;
    if ((int)gamma.size() != s_.rank)
        throw std::invalid_argument("degree of the wrong rank");
    for (int x : gamma)
        if (x < 0)
            throw std::invalid_argument("negative degree");
    auto b = std::make_unique<Block<K>>();
    b->gamma = gamma;
    b->n = total(gamma);
    if (b->n > opts_.max_degree)
        throw BudgetExceeded("degree " + std::to_string(b->n) + " exceeds the maximum degree " +
                             std::to_string(opts_.max_degree));
    build(*b);
    auto& ref = *b;
    blocks_.emplace(gamma, std::move(b));
    return ref;
}

template <class K>
void NicholsEngine<K>::build(Block<K>& b)
{
    const size_t dimV = s_.dim();
    b.F.assign(dimV, {});
    if (b.n == 0) {
        b.normals = {Word{}};
        b.parent = {0};
        b.last = {0};
        b.D.assign(1, std::vector<SVec<K>>(dimV));
        return;
    }
    // lower blocks gamma - e_{comp(i)}, one coordinate range per letter i
    std::vector<const Block<K>*> low(dimV, nullptr);
    std::vector<size_t> off(dimV, 0);
    size_t ncoords = 0;
    for (size_t i = 0; i < dimV; ++i) {
        int c = s_.comp[i];
        if (b.gamma[c] == 0)
            continue;
        low[i] = &block(minus_e(b.gamma, c));
        off[i] = ncoords;
        ncoords += low[i]->dim();
    }
    struct Cand {
        Word w;
        int j;
        uint32_t u;
    };
    std::vector<Cand> cands;
    for (size_t j = 0; j < dimV; ++j) {
        if (!low[j])
            continue;
        b.F[j].assign(low[j]->dim(), {});
        for (uint32_t u = 0; u < low[j]->dim(); ++u) {
            Word w = low[j]->normals[u];
            w.push_back((uint8_t)j);
            cands.push_back({std::move(w), (int)j, u});
        }
    }
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& c) { return a.w < c.w; });
    b.candidates = cands.size();

    struct Row {
        uint32_t pivot;
        SVec<K> v;
        SVec<K> expr;   // over normal words of this block
    };
    std::vector<Row> rows;
    Dense<K> acc, ex;
    acc.resize(ncoords);
    ex.resize(cands.size() + 1);
    size_t scratch = 0;

    for (const auto& cand : cands) {
        const Block<K>& B = *low[cand.j];
        const int cj = s_.comp[cand.j];
        // Phi_i = sum_l A_{comp i}[l][j] F_l(D_i(u)) + delta_ij e_u
        for (size_t i = 0; i < dimV; ++i) {
            if (!low[i])
                continue;
            const Block<K>& L = *low[i];
            if ((int)i == cand.j)
                acc.add((uint32_t)(off[i] + cand.u), K(1));
            const SVec<K>& d = B.D[cand.u][i];
            if (d.empty())
                continue;
            const auto& A = act_[s_.comp[i]];
            for (size_t l = 0; l < dimV; ++l) {
                if (s_.comp[l] != cj || FieldOps<K>::is_zero(A[l][cand.j]))
                    continue;
                const K& a = A[l][cand.j];
                for (const auto& [vi, dv] : d) {
                    K ad = a * dv;
                    for (const auto& [t, fv] : L.F[l][vi])
                        acc.add((uint32_t)(off[i] + t), ad * fv);
                }
            }
        }
        SVec<K> phi = acc.take();
        // reduce against the semi-echelon rows in insertion order
        for (const auto& [i, x] : phi)
            acc.add(i, x);
        for (size_t r = 0; r < rows.size(); ++r) {
            const Row& row = rows[r];
            if (!acc.hit[row.pivot] || FieldOps<K>::is_zero(acc.v[row.pivot]))
                continue;
            K lam = acc.v[row.pivot];
            for (const auto& [i, x] : row.v)
                acc.add(i, -(lam * x));
            ex.addmul(row.expr, lam);
        }
        SVec<K> rest = acc.take();
        if (rest.empty()) {
            b.F[cand.j][cand.u] = ex.take();
            count(b.F[cand.j][cand.u].size());
            continue;
        }
        // new normal word
        uint32_t k = (uint32_t)b.normals.size();
        size_t best = 0;
        for (size_t t = 1; t < rest.size(); ++t)
            if (FieldOps<K>::weight(rest[t].second) < FieldOps<K>::weight(rest[best].second))
                best = t;
        K pinv = FieldOps<K>::inv(rest[best].second);
        Row row;
        row.pivot = rest[best].first;
        for (auto& [i, x] : rest)
            row.v.emplace_back(i, x * pinv);
        // expr = (e_k - sum lam_r expr_r) / pivot ; ex holds sum lam_r expr_r
        SVec<K> sum = ex.take();
        for (auto& [i, x] : sum)
            row.expr.emplace_back(i, -(x * pinv));
        row.expr.emplace_back(k, pinv);
        scratch += row.v.size() + row.expr.size();
        if (scratch > opts_.budget_terms)
            throw BudgetExceeded("elimination in block " + std::to_string(b.n) +
                                 " exceeds the term budget");
        rows.push_back(std::move(row));

        b.normals.push_back(cand.w);
        b.parent.push_back(cand.u);
        b.last.push_back((uint8_t)cand.j);
        std::vector<SVec<K>> D(dimV);
        size_t dterms = 0;
        for (auto& [i, x] : phi) {
            // locate the letter owning coordinate i
            size_t letter = 0;
            for (size_t q = 0; q < dimV; ++q)
                if (low[q] && off[q] <= i && i < off[q] + low[q]->dim())
                    letter = q;
            D[letter].emplace_back((uint32_t)(i - off[letter]), std::move(x));
            ++dterms;
        }
        b.D.push_back(std::move(D));
        b.F[cand.j][cand.u] = SVec<K>{{k, K(1)}};
        count(dterms + 1);
    }
}

template <class K>
std::vector<std::vector<int>> NicholsEngine<K>::gammas_of_degree(int n) const
{
    std::vector<std::vector<int>> out;
    std::vector<int> g(s_.rank, 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == s_.rank - 1) {
            g[pos] = left;
            out.push_back(g);
            return;
        }
        for (int x = left; x >= 0; --x) {
            g[pos] = x;
            rec(pos + 1, left - x);
        }
    };
    if (s_.rank > 0)
        rec(0, n);
    return out;
}

template <class K>
size_t NicholsEngine<K>::dim(int n)
{
    size_t d = 0;
    for (const auto& g : gammas_of_degree(n))
        d += block(g).dim();
    return d;
}

template <class K>
std::vector<size_t> NicholsEngine<K>::hilbert(int N)
{
    std::vector<size_t> h;
    for (int n = 0; n <= N; ++n)
        h.push_back(dim(n));
    return h;
}

template <class K>
std::vector<Word> NicholsEngine<K>::normal_words(int n)
{
    std::vector<Word> out;
    for (const auto& g : gammas_of_degree(n)) {
        const auto& b = block(g);
        out.insert(out.end(), b.normals.begin(), b.normals.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

template <class K>
std::vector<std::pair<Word, FreeElement>> NicholsEngine<K>::ideal_basis(int n)
{
    std::vector<std::pair<Word, FreeElement>> out;
    for (const auto& g : gammas_of_degree(n)) {
        const auto& b = block(g);
        for (const auto& w : words_of_gamma(s_, g))
            if (b.index_of(w) < 0)
                out.emplace_back(w, reduce(FreeElement::word(w)));
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& c) { return a.first < c.first; });
    return out;
}

template <class K>
SVec<K> NicholsEngine<K>::apply_F(int l, const std::vector<int>& gamma, const SVec<K>& v)
{
    const Block<K>& T = block(plus_e(gamma, s_.comp[l]));
    Dense<K> acc;
    acc.resize(T.dim());
    for (const auto& [vi, c] : v)
        acc.addmul(T.F[l][vi], c);
    return acc.take();
}

template <class K>
BElem<K> NicholsEngine<K>::normal_form(const FreeElement& e)
{
    BElem<K> out;
    std::map<std::vector<int>, Dense<K>> accs;
    Word prev;
    std::vector<SVec<K>> stack{SVec<K>{{0, K(1)}}};
    std::vector<std::vector<int>> gstack{std::vector<int>(s_.rank, 0)};
    for (const auto& [w, c] : e.terms()) {
        if ((int)w.size() > opts_.max_degree)
            throw BudgetExceeded("word of degree " + std::to_string(w.size()) +
                                 " exceeds the maximum degree");
        size_t p = 0;
        while (p < prev.size() && p < w.size() && prev[p] == w[p] && p + 1 < stack.size())
            ++p;
        stack.resize(p + 1);
        gstack.resize(p + 1);
        for (size_t t = p; t < w.size(); ++t) {
            stack.push_back(apply_F(w[t], gstack[t], stack[t]));
            gstack.push_back(plus_e(gstack[t], s_.comp[w[t]]));
        }
        prev = w;
        const auto& g = gstack[w.size()];
        auto& acc = accs[g];
        acc.grow(block(g).dim());
        acc.addmul(stack[w.size()], FieldOps<K>::from(c));
    }
    for (auto& [g, acc] : accs) {
        SVec<K> v = acc.take();
        if (!v.empty())
            out[g] = std::move(v);
    }
    return out;
}

template <class K>
FreeElement NicholsEngine<K>::to_free(const BElem<K>& e) const
{
    FreeElement out;
    for (const auto& [g, v] : e) {
        const auto& b = *blocks_.at(g);
        for (const auto& [i, c] : v)
            out.add(b.normals[i], FieldOps<K>::to_scalar(c));
    }
    return out;
}

template <class K>
bool NicholsEngine<K>::belem_zero(const BElem<K>& e)
{
    for (const auto& [g, v] : e)
        if (!v.empty())
            return false;
    return true;
}

template <class K>
bool NicholsEngine<K>::is_zero(const FreeElement& e)
{
    return belem_zero(normal_form(e));
}

template <class K>
SVec<K> NicholsEngine<K>::multiply(const std::vector<int>& ga, const SVec<K>& a,
                                   const std::vector<int>& gb, const SVec<K>& b)
{
    // walk the prefix tree of the normal words of block gb, right-multiplying a
    std::map<std::pair<std::vector<int>, uint32_t>, SVec<K>> memo;
    std::function<const SVec<K>&(const std::vector<int>&, uint32_t)> chain =
        [&](const std::vector<int>& g, uint32_t m) -> const SVec<K>& {
        auto key = std::make_pair(g, m);
        auto it = memo.find(key);
        if (it != memo.end())
            return it->second;
        SVec<K> r;
        if (total(g) == 0)
            r = a;
        else {
            const Block<K>& blk = block(g);
            int l = blk.last[m];
            auto gp = minus_e(g, s_.comp[l]);
            const SVec<K>& pv = chain(gp, blk.parent[m]);
            r = apply_F(l, add_gamma(ga, gp), pv);
        }
        return memo.emplace(key, std::move(r)).first->second;
    };
    const Block<K>& target = block(add_gamma(ga, gb));
    Dense<K> acc;
    acc.resize(target.dim());
    for (const auto& [m, c] : b)
        acc.addmul(chain(gb, m), c);
    return acc.take();
}

template <class K>
BElem<K> NicholsEngine<K>::eval(const Expr& e)
{
    if (e->zero)
        return {};
    if (e->op == ExprOp::Const)
        return {{std::vector<int>(s_.rank, 0), SVec<K>{{0, FieldOps<K>::from(e->c)}}}};
    if (e->op == ExprOp::Gen) {
        const auto& b = block(e->gamma);
        return {{e->gamma, SVec<K>{{(uint32_t)b.index_of(Word{(uint8_t)e->gen}), K(1)}}}};
    }
    auto it = eval_memo_.find(e.get());
    if (it != eval_memo_.end())
        return it->second;
    if (e->max_deg > opts_.max_degree)
        throw BudgetExceeded("element of degree " + std::to_string(e->max_deg) +
                             " exceeds the maximum degree");
    BElem<K> r;
    if (e->op == ExprOp::Sum) {
        for (const auto& [c, x] : e->terms) {
            K k = FieldOps<K>::from(c);
            for (const auto& [g, v] : eval(x))
                add_scaled(r[g], v, k);
        }
    } else {
        BElem<K> A = eval(e->a), B = eval(e->b);
        for (const auto& [ga, va] : A)
            for (const auto& [gb, vb] : B) {
                if (va.empty() || vb.empty())
                    continue;
                SVec<K> p = multiply(ga, va, gb, vb);
                add_scaled(r[add_gamma(ga, gb)], p, K(1));
            }
    }
    for (auto i = r.begin(); i != r.end();)
        i = i->second.empty() ? r.erase(i) : std::next(i);
    keep_.push_back(e);
    eval_memo_[e.get()] = r;
    return r;
}

template <class K>
bool NicholsEngine<K>::is_zero(const Expr& e, ExprFactory& f)
{
    if (e->zero)
        return true;
    if (e->max_deg <= opts_.max_degree)
        return belem_zero(eval(e));
    if (e->min_deg == 0)
        throw std::invalid_argument("mixed-degree element with a scalar part above the degree cap");
    for (size_t i = 0; i < s_.dim(); ++i)
        if (!is_zero(f.deriv((int)i, e), f))
            return false;
    return true;
}

// -------------------------------------------------------------- Symmetrizer

template <class K>
Symmetrizer<K>::Symmetrizer(const BraidedSpace& s) : s_(s), act_(convert_actions<K>(s))
{
}

template <class K>
std::vector<Word> Symmetrizer<K>::words(const std::vector<int>& gamma) const
{
    return words_of_gamma(s_, gamma);
}

template <class K>
const typename Symmetrizer<K>::Sparse& Symmetrizer<K>::apply(const Word& w)
{
    auto it = memo_.find(w);
    if (it != memo_.end())
        return it->second;
    Sparse out;
    if (w.size() <= 1) {
        out[w] = K(1);
        return memo_.emplace(w, std::move(out)).first->second;
    }
    size_t n = w.size();
    for (size_t k = 0; k < n; ++k) {
        // move letter w_k to the end: prefix (g_{w_k} . suffix) w_k
        const auto& A = act_[s_.comp[w[k]]];
        std::vector<std::pair<Word, K>> cur{{Word(w.begin(), w.begin() + k), K(1)}};
        for (size_t t = k + 1; t < n; ++t) {
            std::vector<std::pair<Word, K>> next;
            for (const auto& [pw, pc] : cur)
                for (size_t l = 0; l < s_.dim(); ++l) {
                    if (FieldOps<K>::is_zero(A[l][w[t]]))
                        continue;
                    Word nw = pw;
                    nw.push_back((uint8_t)l);
                    next.emplace_back(std::move(nw), pc * A[l][w[t]]);
                }
            cur = std::move(next);
        }
        for (const auto& [u, cu] : cur) {
            const Sparse& su = apply(u);
            for (const auto& [x, cx] : su) {
                Word y = x;
                y.push_back(w[k]);
                K& dst = out[y];
                dst += cu * cx;
                if (FieldOps<K>::is_zero(dst))
                    out.erase(y);
            }
        }
    }
    return memo_.emplace(w, std::move(out)).first->second;
}

template <class K>
size_t Symmetrizer<K>::rank_block(const std::vector<int>& gamma)
{
    auto ws = words(gamma);
    std::map<Word, uint32_t> idx;
    for (size_t i = 0; i < ws.size(); ++i)
        idx[ws[i]] = (uint32_t)i;
    std::vector<std::pair<uint32_t, SVec<K>>> rows;   // pivot, normalized row
    Dense<K> acc;
    acc.resize(ws.size());
    for (const auto& w : ws) {
        for (const auto& [x, c] : apply(w))
            acc.add(idx.at(x), c);
        for (const auto& [p, row] : rows) {
            if (!acc.hit[p] || FieldOps<K>::is_zero(acc.v[p]))
                continue;
            K lam = acc.v[p];
            for (const auto& [i, x] : row)
                acc.add(i, -(lam * x));
        }
        SVec<K> rest = acc.take();
        if (rest.empty())
            continue;
        size_t best = 0;
        for (size_t t = 1; t < rest.size(); ++t)
            if (FieldOps<K>::weight(rest[t].second) < FieldOps<K>::weight(rest[best].second))
                best = t;
        K pinv = FieldOps<K>::inv(rest[best].second);
        for (auto& [i, x] : rest)
            x = x * pinv;
        rows.emplace_back(rest[best].first, std::move(rest));
    }
    return rows.size();
}

template <class K>
size_t Symmetrizer<K>::rank(int n)
{
    size_t r = 0;
    std::vector<int> g(s_.rank, 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == s_.rank - 1) {
            g[pos] = left;
            r += rank_block(g);
            return;
        }
        for (int x = left; x >= 0; --x) {
            g[pos] = x;
            rec(pos + 1, left - x);
        }
    };
    rec(0, n);
    return r;
}

// ------------------------------------------------------------ certification

namespace {

// S_n(w - NF(w)) == 0 for every non-normal word of degree n
template <class K>
bool kernel_contains_ideal(NicholsEngine<K>& eng, Symmetrizer<K>& sym, int n)
{
    for (const auto& g : eng.gammas_of_degree(n)) {
        const auto& b = eng.block(g);
        for (const auto& w : sym.words(g)) {
            if (b.index_of(w) >= 0)
                continue;
            std::map<Word, K> acc = sym.apply(w);
            BElem<K> nf = eng.normal_form(FreeElement::word(w));
            for (const auto& [gg, v] : nf)
                for (const auto& [i, c] : v)
                    for (const auto& [x, cx] : sym.apply(b.normals[i])) {
                        K& dst = acc[x];
                        dst -= c * cx;
                        if (FieldOps<K>::is_zero(dst))
                            acc.erase(x);
                    }
            if (!acc.empty())
                return false;
        }
    }
    return true;
}

} // namespace

SymmetrizerCheck symmetrizer_check(NicholsEngine<Scalar>& eng, int n, uint64_t seed)
{
    SymmetrizerCheck out;
    out.engine_dim = eng.dim(n);
    Symmetrizer<Scalar> sym(eng.space());
    bool upper = kernel_contains_ideal(eng, sym, n);
    if (upper) {
        const BraidedSpace& s = eng.space();
        for (uint64_t t = 0; t < 3; ++t) {
            BraidedSpace sp = s.params.empty() ? s : specialize_space(s, random_assignment(s, seed + t));
            Symmetrizer<mpq_class> ss(sp);
            size_t r = ss.rank(n);
            if (r == out.engine_dim) {
                out.rank = r;
                out.certified = true;
                out.method = "J_n in ker S_n exactly; rank at a rational point equals dim";
                return out;
            }
        }
    }
    out.rank = sym.rank(n);
    out.certified = upper && out.rank == out.engine_dim;
    out.method = "exact elimination over the parameter field";
    return out;
}

SymmetrizerCheck symmetrizer_check(NicholsEngine<mpq_class>& eng, int n, uint64_t)
{
    SymmetrizerCheck out;
    out.engine_dim = eng.dim(n);
    Symmetrizer<mpq_class> sym(eng.space());
    bool upper = kernel_contains_ideal(eng, sym, n);
    out.rank = sym.rank(n);
    out.certified = upper && out.rank == out.engine_dim;
    out.method = "elimination over the rationals";
    return out;
}

template class NicholsEngine<Scalar>;
template class NicholsEngine<mpq_class>;
template class Symmetrizer<Scalar>;
template class Symmetrizer<mpq_class>;
template struct Block<Scalar>;
template struct Block<mpq_class>;

} // namespace pn
