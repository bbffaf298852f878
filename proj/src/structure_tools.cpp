#include "structure_tools.hpp"

#include <cmath>
#include <set>

namespace pn {

std::vector<long long> pbw_series(const PBWDatum& datum, int N)
{
    if (N < 0)
        return {};
    std::vector<long long> c(N + 1, 0);
    c[0] = 1;
    for (const auto& g : datum) {
        if (g.degree <= 0)
            throw std::invalid_argument("PBW generator " + g.name + " needs a positive degree");
        if (g.bounded) {
            for (int n = N; n >= g.degree; --n)
                c[n] += c[n - g.degree];
        } else {
            for (int n = g.degree; n <= N; ++n)
                c[n] += c[n - g.degree];
        }
    }
    return c;
}

int gk_from_pbw(const PBWDatum& datum)
{
    int k = 0;
    for (const auto& g : datum)
        if (!g.bounded)
            ++k;
    return k;
}

namespace {

// least-squares slope and RMS residual
std::pair<double, double> fit(const std::vector<double>& x, const std::vector<double>& y)
{
    double n = (double)x.size(), sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    double icpt = (sy - slope * sx) / n;
    double rss = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        double r = y[i] - (slope * x[i] + icpt);
        rss += r * r;
    }
    return {slope, std::sqrt(rss / n)};
}

} // namespace

GrowthFit growth_fit(const std::vector<size_t>& dims, size_t window)
{
    if (dims.size() < 4)
        throw std::invalid_argument("growth fit needs at least 4 dimensions");
    window = std::max<size_t>(3, std::min(window, dims.size() - 1));
    std::vector<double> x, y;
    double cum = 0;
    for (size_t n = 0; n < dims.size(); ++n) {
        cum += (double)dims[n];
        x.push_back(std::log((double)n + 1));
        y.push_back(std::log(cum));
    }
    GrowthFit g;
    // windows start at n = 1 so that the constant term does not dominate
    for (size_t st = 1; st + window <= dims.size(); ++st) {
        std::vector<double> wx(x.begin() + st, x.begin() + st + window);
        std::vector<double> wy(y.begin() + st, y.begin() + st + window);
        g.window_slopes.push_back(fit(wx, wy).first);
    }
    std::vector<double> tx(x.end() - window, x.end()), ty(y.end() - window, y.end());
    std::tie(g.degree, g.residual) = fit(tx, ty);
    // Polynomial growth makes the window slopes settle; the flag is raised
    // when they keep rising without slowing down.
    const auto& s = g.window_slopes;
    if (s.size() >= 3) {
        size_t m = s.size();
        double d1 = s[m - 2] - s[m - 3], d2 = s[m - 1] - s[m - 2];
        g.exceeds_window = d2 > 1e-9 && d1 > 1e-9 && d2 >= 0.8 * d1;
    }
    g.caveat = "advisory: a finite fit cannot prove finite or infinite GK-dimension";
    return g;
}

// --------------------------------------------------------- adjoint_subspace

namespace {

template <class K>
struct BlockReducer {
    struct Row {
        std::vector<int> gamma;
        uint32_t pivot;
        SVec<K> v;
    };
    std::vector<Row> rows;

    // true if v is independent of the stored rows (and stores it)
    bool insert(const std::vector<int>& gamma, SVec<K> v)
    {
        for (const auto& r : rows) {
            if (r.gamma != gamma)
                continue;
            K lam;
            bool found = false;
            for (const auto& [i, x] : v)
                if (i == r.pivot) {
                    lam = x;
                    found = true;
                }
            if (!found)
                continue;
            // v -= lam * r.v
            std::map<uint32_t, K> acc(v.begin(), v.end());
            for (const auto& [i, x] : r.v) {
                K& dst = acc[i];
                dst -= lam * x;
                if (FieldOps<K>::is_zero(dst))
                    acc.erase(i);
            }
            v.assign(acc.begin(), acc.end());
        }
        if (v.empty())
            return false;
        K pinv = FieldOps<K>::inv(v.front().second);
        for (auto& [i, x] : v)
            x = x * pinv;
        rows.push_back({gamma, v.front().first, std::move(v)});
        return true;
    }
};

std::string short_label(const std::string& l) { return l.size() > 1 && l[0] == 'x' ? l.substr(1) : l; }

} // namespace

template <class K>
AdjointSubspace adjoint_subspace(NicholsEngine<K>& eng, ExprFactory& f, const std::vector<int>& W,
                                 const std::vector<int>& U, int max_depth)
{
    const BraidedSpace& s = eng.space();
    std::set<int> ws(W.begin(), W.end());
    for (int u : U)
        if (ws.count(u))
            throw std::invalid_argument("acting and target sets must be disjoint");
    AdjointSubspace out;
    BlockReducer<K> red;
    struct Item {
        std::vector<int> chain;   // acting indices, outermost first
        int target;
        Expr e;
    };
    auto name_of = [&](const Item& it) {
        if (it.chain.empty())
            return s.labels[it.target];
        std::string n = "x{";
        for (int c : it.chain)
            n += short_label(s.labels[c]) + ",";
        return n + short_label(s.labels[it.target]) + "}";
    };
    auto accept = [&](const Item& it, int depth) {
        BElem<K> v = eng.eval(it.e);
        if (v.empty())
            return false;
        if (v.size() != 1)
            throw std::logic_error("adjoint image is not homogeneous");
        if (!red.insert(v.begin()->first, v.begin()->second))
            return false;
        K1Element el;
        el.name = name_of(it);
        el.depth = depth;
        el.expr = it.e;
        el.element = eng.to_free(v);
        for (size_t k = 0; k < s.dim(); ++k)
            el.fingerprint.push_back(eng.to_free(eng.eval(f.deriv((int)k, it.e))));
        out.basis.push_back(std::move(el));
        return true;
    };
    std::vector<Item> frontier;
    for (int u : U) {
        Item it{{}, u, f.gen(u)};
        if (accept(it, 0))
            frontier.push_back(it);
    }
    out.dims_by_depth.push_back(out.basis.size());
    for (int depth = 1; depth <= max_depth; ++depth) {
        std::vector<Item> next;
        for (const auto& it : frontier)
            for (int w : W) {
                Item n{it.chain, it.target, f.bracket(f.gen(w), it.e)};
                n.chain.insert(n.chain.begin(), w);
                if (accept(n, depth))
                    next.push_back(std::move(n));
            }
        out.dims_by_depth.push_back(out.basis.size());
        out.depth_reached = depth;
        frontier = std::move(next);
        if (frontier.empty()) {
            out.saturated = true;
            break;
        }
    }
    return out;
}

template AdjointSubspace adjoint_subspace(NicholsEngine<Scalar>&, ExprFactory&,
                                          const std::vector<int>&, const std::vector<int>&, int);
template AdjointSubspace adjoint_subspace(NicholsEngine<mpq_class>&, ExprFactory&,
                                          const std::vector<int>&, const std::vector<int>&, int);

} // namespace pn
