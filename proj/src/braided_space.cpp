#include "braided_space.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace pn {

// ------------------------------------------------------------ GroupElement

GroupElement GroupElement::gen(int r, int j)
{
    GroupElement g = identity(r);
    g.e.at(j) = 1;
    return g;
}

GroupElement GroupElement::operator+(const GroupElement& o) const
{
    if (e.size() != o.e.size())
        throw std::invalid_argument("group elements of different rank");
    GroupElement r = *this;
    for (size_t i = 0; i < e.size(); ++i)
        r.e[i] += o.e[i];
    return r;
}

GroupElement GroupElement::operator-() const
{
    GroupElement r = *this;
    for (auto& x : r.e)
        x = -x;
    return r;
}

bool GroupElement::is_identity() const
{
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

std::string GroupElement::str() const
{
    std::string s = "(";
    for (size_t i = 0; i < e.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(e[i]);
    }
    return s + ")";
}

// ---------------------------------------------------------------- matrices

Matrix identity_matrix(size_t n)
{
    Matrix m(n, std::vector<Scalar>(n));
    for (size_t i = 0; i < n; ++i)
        m[i][i] = Scalar(1);
    return m;
}

Matrix mat_mul(const Matrix& a, const Matrix& b)
{
    size_t n = a.size();
    Matrix r(n, std::vector<Scalar>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            if (a[i][k].is_zero())
                continue;
            for (size_t j = 0; j < n; ++j)
                if (!b[k][j].is_zero())
                    r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

Matrix mat_inverse(const Matrix& a)
{
    size_t n = a.size();
    Matrix m = a, inv = identity_matrix(n);
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && m[p][c].is_zero())
            ++p;
        if (p == n)
            throw std::domain_error("singular action matrix");
        std::swap(m[p], m[c]);
        std::swap(inv[p], inv[c]);
        Scalar s = m[c][c].inv();
        for (size_t j = 0; j < n; ++j) {
            m[c][j] *= s;
            inv[c][j] *= s;
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == c || m[r][c].is_zero())
                continue;
            Scalar f = m[r][c];
            for (size_t j = 0; j < n; ++j) {
                m[r][j] -= f * m[c][j];
                inv[r][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

Scalar mat_det(const Matrix& a)
{
    size_t n = a.size();
    Matrix m = a;
    Scalar det(1);
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && m[p][c].is_zero())
            ++p;
        if (p == n)
            return Scalar();
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        Scalar s = m[c][c].inv();
        for (size_t r = c + 1; r < n; ++r) {
            if (m[r][c].is_zero())
                continue;
            Scalar f = m[r][c] * s;
            for (size_t j = c; j < n; ++j)
                m[r][j] -= f * m[c][j];
        }
    }
    return det;
}

bool mat_equal(const Matrix& a, const Matrix& b)
{
    if (a.size() != b.size())
        return false;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a.size(); ++j)
            if (a[i][j] != b[i][j])
                return false;
    return true;
}

// ------------------------------------------------------------ BraidedSpace

int BraidedSpace::index_of(const std::string& label) const
{
    for (size_t k = 0; k < labels.size(); ++k)
        if (labels[k] == label)
            return (int)k;
    return -1;
}

Matrix BraidedSpace::action_of(const GroupElement& g) const
{
    Matrix m = identity_matrix(dim());
    for (int j = 0; j < rank; ++j) {
        int e = g.e.at(j);
        if (e == 0)
            continue;
        Matrix base = e > 0 ? actions[j] : mat_inverse(actions[j]);
        for (int t = 0; t < std::abs(e); ++t)
            m = mat_mul(m, base);
    }
    return m;
}

bool BraidedSpace::is_diagonal() const
{
    for (const auto& a : actions)
        for (size_t i = 0; i < dim(); ++i)
            for (size_t j = 0; j < dim(); ++j)
                if (i != j && !a[i][j].is_zero())
                    return false;
    return true;
}

void BraidedSpace::validate() const
{
    size_t n = dim();
    if (comp.size() != n)
        throw std::invalid_argument("degree list does not match the basis");
    if ((int)actions.size() != rank)
        throw std::invalid_argument("one action matrix per group generator is required");
    for (int c : comp)
        if (c < 0 || c >= rank)
            throw std::invalid_argument("basis degree outside the group");
    for (int j = 0; j < rank; ++j) {
        const Matrix& a = actions[j];
        if (a.size() != n)
            throw std::invalid_argument("action matrix has the wrong size");
        for (size_t k = 0; k < n; ++k)
            for (size_t l = 0; l < n; ++l)
                if (comp[k] != comp[l] && !a[k][l].is_zero())
                    throw std::invalid_argument("action of g" + std::to_string(j + 1) +
                                                " does not preserve the grading");
        if (mat_det(a).is_zero())
            throw std::invalid_argument("action of g" + std::to_string(j + 1) +
                                        " is not invertible");
    }
    for (int i = 0; i < rank; ++i)
        for (int j = i + 1; j < rank; ++j)
            if (!mat_equal(mat_mul(actions[i], actions[j]), mat_mul(actions[j], actions[i])))
                throw std::invalid_argument("actions of g" + std::to_string(i + 1) + " and g" +
                                            std::to_string(j + 1) + " do not commute");
    for (const auto& [name, v] : nonzero)
        if (v.is_zero())
            throw std::invalid_argument(name + " must be nonzero");
}

// ---------------------------------------------------------------- braiding

Tensor braiding(const BraidedSpace& s, int k, int l)
{
    Tensor t;
    for (size_t m = 0; m < s.dim(); ++m) {
        const Scalar& c = s.act(k, (int)m, l);
        if (!c.is_zero())
            t[{(int)m, k}] = c;
    }
    return t;
}

namespace {

// apply c in slots (pos, pos+1) to a tensor of V^{(x)3}
Tensor apply_c(const BraidedSpace& s, const Tensor& in, int pos)
{
    Tensor out;
    for (const auto& [w, coef] : in) {
        Tensor b = braiding(s, w[pos], w[pos + 1]);
        for (const auto& [pair, c] : b) {
            std::vector<int> v = w;
            v[pos] = pair[0];
            v[pos + 1] = pair[1];
            Scalar& dst = out[v];
            dst += coef * c;
            if (dst.is_zero())
                out.erase(v);
        }
    }
    return out;
}

} // namespace

bool check_braid_equation(const BraidedSpace& s)
{
    int n = (int)s.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Tensor t{{{i, j, k}, Scalar(1)}};
                Tensor lhs = apply_c(s, apply_c(s, apply_c(s, t, 0), 1), 0);
                Tensor rhs = apply_c(s, apply_c(s, apply_c(s, t, 1), 0), 1);
                if (lhs.size() != rhs.size())
                    return false;
                for (const auto& [w, c] : lhs) {
                    auto it = rhs.find(w);
                    if (it == rhs.end() || it->second != c)
                        return false;
                }
            }
    return true;
}

// ----------------------------------------------------------- classification

std::string ComponentShape::str() const
{
    switch (kind) {
    case ShapeKind::Point:
        return "point(" + eigenvalue.str() + ")";
    case ShapeKind::Block:
        return "block(" + eigenvalue.str() + ")";
    case ShapeKind::PaleBlock:
        return "pale_block(" + eigenvalue.str() + ", " + std::to_string(dim) + ")";
    default:
        return "other";
    }
}

ComponentShape classify_component(const GroupElement&, const Matrix& m)
{
    size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n)
            throw std::invalid_argument("action matrix is not square");
    if (n == 0 || mat_det(m).is_zero())
        throw std::invalid_argument("action matrix is not invertible");
    ComponentShape out;
    out.dim = n;
    if (n == 1) {
        out.kind = ShapeKind::Point;
        out.eigenvalue = m[0][0];
        return out;
    }
    bool scalar = true;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if ((i == j && m[i][j] != m[0][0]) || (i != j && !m[i][j].is_zero()))
                scalar = false;
    if (scalar) {
        out.kind = ShapeKind::PaleBlock;
        out.eigenvalue = m[0][0];
        return out;
    }
    if (n == 2) {
        // one eigenvalue and not scalar: a nontrivial Jordan block
        Scalar tr = m[0][0] + m[1][1];
        Scalar det = mat_det(m);
        Scalar lam = tr / Scalar(2);
        if (lam * lam == det) {
            out.kind = ShapeKind::Block;
            out.eigenvalue = lam;
            return out;
        }
    }
    out.kind = ShapeKind::Other;
    return out;
}

namespace {

std::vector<int> component_basis(const BraidedSpace& s, int c)
{
    std::vector<int> idx;
    for (size_t k = 0; k < s.dim(); ++k)
        if (s.comp[k] == c)
            idx.push_back((int)k);
    return idx;
}

Matrix restrict(const Matrix& m, const std::vector<int>& idx)
{
    Matrix r(idx.size(), std::vector<Scalar>(idx.size()));
    for (size_t i = 0; i < idx.size(); ++i)
        for (size_t j = 0; j < idx.size(); ++j)
            r[i][j] = m[idx[i]][idx[j]];
    return r;
}

} // namespace

std::vector<ComponentShape> component_shapes(const BraidedSpace& s)
{
    std::vector<ComponentShape> out;
    for (int c = 0; c < s.rank; ++c) {
        auto idx = component_basis(s, c);
        out.push_back(classify_component(GroupElement::gen(s.rank, c), restrict(s.actions[c], idx)));
    }
    return out;
}

bool is_pale_component(const BraidedSpace& s, int c)
{
    auto idx = component_basis(s, c);
    if (idx.size() < 2)
        return false;
    auto shape = classify_component(GroupElement::gen(s.rank, c), restrict(s.actions[c], idx));
    if (shape.kind != ShapeKind::PaleBlock)
        return false;
    for (int j = 0; j < s.rank; ++j) {
        Matrix m = restrict(s.actions[j], idx);
        for (size_t a = 0; a < idx.size(); ++a)
            for (size_t b = 0; b < idx.size(); ++b)
                if (a != b && !m[a][b].is_zero())
                    return true;
    }
    return false;
}

// ---------------------------------------------------------------- diagrams

std::string DiagonalDiagram::str() const
{
    std::ostringstream os;
    for (size_t i = 0; i < labels.size(); ++i)
        os << "vertex " << labels[i] << ": " << vertex[i].str() << "\n";
    for (const auto& e : edges)
        os << "edge " << labels[e.i] << " -- " << labels[e.j] << ": " << e.q.str() << "\n";
    return os.str();
}

bool DiagonalDiagram::is_cycle() const
{
    size_t n = labels.size();
    if (n < 3 || edges.size() != n)
        return false;
    std::vector<std::vector<int>> adj(n);
    for (const auto& e : edges) {
        adj[e.i].push_back(e.j);
        adj[e.j].push_back(e.i);
    }
    for (const auto& a : adj)
        if (a.size() != 2)
            return false;
    std::vector<bool> seen(n, false);
    std::vector<int> stack{0};
    seen[0] = true;
    size_t count = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++count;
        for (int u : adj[v])
            if (!seen[u]) {
                seen[u] = true;
                stack.push_back(u);
            }
    }
    return count == n;
}

namespace {

DiagonalDiagram diagram_from_order(const BraidedSpace& s, const std::vector<int>& order)
{
    DiagonalDiagram d;
    size_t n = order.size();
    auto q = [&](size_t i, size_t j) { return s.act(order[i], order[j], order[j]); };
    for (size_t i = 0; i < n; ++i) {
        d.labels.push_back(s.labels[order[i]]);
        d.vertex.push_back(q(i, i));
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            Scalar t = q(i, j) * q(j, i);
            if (!t.is_one())
                d.edges.push_back({(int)i, (int)j, t});
        }
    return d;
}

} // namespace

DiagonalDiagram diagram(const BraidedSpace& s)
{
    if (!s.is_diagonal())
        throw std::invalid_argument("not diagonal type");
    std::vector<int> order(s.dim());
    for (size_t k = 0; k < s.dim(); ++k)
        order[k] = (int)k;
    return diagram_from_order(s, order);
}

DiagonalDiagram gr_diagram(const BraidedSpace& s, const std::vector<std::string>& flag)
{
    std::vector<int> order;
    std::set<int> used;
    for (const auto& l : flag) {
        int k = s.index_of(l);
        if (k < 0)
            throw std::invalid_argument("unknown basis label in flag: " + l);
        if (!used.insert(k).second)
            throw std::invalid_argument("repeated label in flag: " + l);
        order.push_back(k);
    }
    if (order.size() != s.dim())
        throw std::invalid_argument("flag must list every basis vector once");
    for (int j = 0; j < s.rank; ++j)
        for (size_t a = 0; a < order.size(); ++a)
            for (size_t b = 0; b < a; ++b)
                if (!s.actions[j][order[a]][order[b]].is_zero())
                    throw std::invalid_argument("actions not triangular in the given order");
    return diagram_from_order(s, order);
}

// ------------------------------------------------------------------- ghost

Scalar ghost(const BraidedSpace& s)
{
    if (s.rank != 2)
        throw std::invalid_argument("ghost needs exactly two components");
    auto v1 = component_basis(s, 0), v2 = component_basis(s, 1);
    if (v1.size() != 2 || v2.size() != 2)
        throw std::invalid_argument("ghost needs two components of dimension 2");
    auto sh1 = classify_component(GroupElement::gen(2, 0), restrict(s.actions[0], v1));
    if (sh1.kind != ShapeKind::PaleBlock || sh1.eigenvalue != Scalar(-1))
        throw std::invalid_argument("first component is not a pale block with q11 = -1");
    int x2 = v2[0], x52 = v2[1];
    Scalar q22 = s.actions[1][x2][x2];
    if (!s.actions[1][x52][x2].is_zero() || s.actions[1][x52][x52] != q22)
        throw std::invalid_argument("second component is not triangular in its basis");
    Scalar b = s.actions[1][x2][x52] / q22;
    if (b.is_zero())
        throw std::invalid_argument("second component is a pale block, ghost undefined");
    Scalar q12 = s.actions[0][x2][x2];
    Scalar q21 = s.actions[1][v1[0]][v1[0]];
    if (!(q12 * q21).is_one())
        throw std::invalid_argument("interaction not weak");
    Scalar a = s.actions[0][x2][x52] / q12;
    // rescale x_{5/2} by q22/b so that b becomes q22; a scales the same way
    Scalar an = a * q22 / b;
    if (q22 == Scalar(1))
        return Scalar(-2) * an;
    if (q22 == Scalar(-1))
        return an;
    throw std::invalid_argument("second component is not a block with eigenvalue +-1");
}

BraidedSpace rescale_basis(const BraidedSpace& s, int k, const Scalar& lambda)
{
    if (lambda.is_zero())
        throw std::invalid_argument("rescaling by zero");
    BraidedSpace r = s;
    // new basis f_k = lambda e_k: coefficient of f_i in g.f_j = lambda_j / lambda_i * old
    for (auto& m : r.actions)
        for (size_t i = 0; i < s.dim(); ++i)
            for (size_t j = 0; j < s.dim(); ++j) {
                if ((int)i == k && (int)j != k)
                    m[i][j] = m[i][j] / lambda;
                else if ((int)j == k && (int)i != k)
                    m[i][j] = m[i][j] * lambda;
            }
    r.name = s.name + " rescaled";
    return r;
}

// ---------------------------------------------------------- specialization

BraidedSpace specialize_space(const BraidedSpace& s, const Assignment& sigma)
{
    auto point = assignment_vector(sigma);
    auto check = [&](const Scalar& x) {
        for (int v : x.support())
            if (!sigma.count(var_name(v)))
                throw std::out_of_range("assignment misses parameter " + var_name(v));
    };
    auto ev = [&](const Scalar& x) {
        check(x);
        return Scalar(specialize(x, point));
    };
    BraidedSpace r = s;
    for (auto& m : r.actions)
        for (auto& row : m)
            for (auto& x : row)
                x = ev(x);
    for (auto& [name, v] : r.aliases)
        v = ev(v);
    for (auto& [name, v] : r.nonzero) {
        v = ev(v);
        if (v.is_zero())
            throw std::domain_error(name + " vanishes at the assignment (k^x required)");
    }
    for (const auto& [name, v] : sigma)
        r.aliases[name] = Scalar(v);
    r.assignment = sigma;
    std::string a;
    for (const auto& [name, v] : sigma)
        a += (a.empty() ? "" : ", ") + name + "=" + rational_str(v);
    r.name = s.name + " at {" + a + "}";
    r.validate();
    return r;
}

Assignment random_assignment(const BraidedSpace& s, uint64_t seed)
{
    static const long primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 200; ++attempt) {
        // distinct primes keep every monomial in the parameters away from +-1
        std::vector<long> pool(std::begin(primes), std::begin(primes) + 8);
        for (size_t i = pool.size(); i > 1; --i)
            std::swap(pool[i - 1], pool[rng() % i]);
        Assignment sigma;
        for (size_t i = 0; i < s.params.size(); ++i) {
            long p = pool[i % pool.size()];
            mpq_class v = (rng() & 1) ? mpq_class(p) : mpq_class(1, p);
            v.canonicalize();
            if (rng() & 2)
                v = -v;
            sigma[s.params[i]] = v;
        }
        try {
            specialize_space(s, sigma);
            return sigma;
        } catch (const std::exception&) {
            continue;
        }
    }
    throw std::runtime_error("no admissible rational assignment found for " + s.name);
}

// ---------------------------------------------------------------- families

namespace {

std::string trim(const std::string& s)
{
    size_t a = 0, b = s.size();
    while (a < b && std::isspace((unsigned char)s[a]))
        ++a;
    while (b > a && std::isspace((unsigned char)s[b - 1]))
        --b;
    return s.substr(a, b - a);
}

struct FamilyInfo {
    std::string id;
    std::vector<std::string> params;   // positional parameter names (defaults)
    bool has_signs = false;
};

const std::vector<FamilyInfo>& family_table()
{
    static const std::vector<FamilyInfo> t = {
        {"E3-", {"q"}},
        {"E3+", {"q"}},
        {"E+", {"q"}},
        {"E-", {"q"}},
        {"Estar", {"q"}},
        {"Epale", {"q11", "q12", "q21", "q22"}},
        {"Emn", {"q12", "q13", "q23", "a"}, true},
        {"Einf", {"q12", "q13", "q23"}},
        {"P2", {"q11", "q12", "q13", "q21", "q22", "q23", "q31", "q32", "q33", "a"}},
        {"S20", {"q"}},
        {"S1p", {"q", "a"}},
        {"S1m", {"q"}},
        {"Sgen", {"q11", "q12", "q21", "q22", "a", "b"}},
        {"V", {"eps", "l"}},
        {"diag", {}},
    };
    return t;
}

const FamilyInfo* find_family(const std::string& id)
{
    for (const auto& f : family_table())
        if (f.id == id)
            return &f;
    return nullptr;
}

std::string canonical_family_id(std::string name)
{
    static const std::map<std::string, std::string> alias = {
        {"E3m", "E3-"}, {"E3p", "E3+"}, {"Ep", "E+"}, {"Em", "E-"}, {"E*", "Estar"},
        {"Emunu", "Emn"}, {"E_inf", "Einf"}, {"S2,0", "S20"}, {"S1+", "S1p"}, {"S1-", "S1m"},
    };
    auto it = alias.find(name);
    return it == alias.end() ? name : it->second;
}

int parse_sign(const std::string& t)
{
    std::string s = trim(t);
    if (s == "+" || s == "+1" || s == "1")
        return 1;
    if (s == "-" || s == "-1")
        return -1;
    throw std::invalid_argument("sign must be + or -, got '" + s + "'");
}

std::string spec_text(const FamilySpec& f)
{
    std::string s = f.family + "(";
    if (f.family == "diag") {
        for (size_t i = 0; i < f.matrix.size(); ++i) {
            if (i)
                s += ";";
            for (size_t j = 0; j < f.matrix[i].size(); ++j)
                s += (j ? "," : "") + f.matrix[i][j].str();
        }
        return s + ")";
    }
    if (!f.signs.empty()) {
        for (size_t i = 0; i < f.signs.size(); ++i)
            s += std::string(i ? "," : "") + (f.signs[i] > 0 ? "+" : "-");
        s += ";";
    }
    for (size_t i = 0; i < f.args.size(); ++i)
        s += (i ? "," : "") + f.args[i].str();
    return s + ")";
}

} // namespace

std::vector<std::string> known_families()
{
    std::vector<std::string> out;
    for (const auto& f : family_table())
        out.push_back(f.id);
    return out;
}

FamilySpec parse_family_spec(const std::string& text0)
{
    std::string text = trim(text0);
    size_t open = text.find('(');
    std::string name = trim(open == std::string::npos ? text : text.substr(0, open));
    name = canonical_family_id(name);
    const FamilyInfo* info = find_family(name);
    if (!info)
        throw std::invalid_argument("unknown family '" + name + "'");
    FamilySpec spec;
    spec.family = name;

    // split the argument list at top-level ',' and ';'
    std::vector<std::vector<std::string>> groups(1);
    if (open != std::string::npos) {
        if (text.back() != ')')
            throw std::invalid_argument("family spec must end with ')'");
        std::string inner = text.substr(open + 1, text.size() - open - 2);
        int depth = 0;
        std::string cur;
        for (char c : inner) {
            if (c == '(')
                ++depth;
            if (c == ')')
                --depth;
            if (depth == 0 && (c == ',' || c == ';')) {
                groups.back().push_back(trim(cur));
                cur.clear();
                if (c == ';')
                    groups.emplace_back();
                continue;
            }
            cur += c;
        }
        if (!trim(cur).empty() || !groups.back().empty() || groups.size() > 1)
            groups.back().push_back(trim(cur));
        if (groups.size() == 1 && groups[0].size() == 1 && groups[0][0].empty())
            groups[0].clear();
    }

    if (name == "diag") {
        for (const auto& row : groups) {
            std::vector<Scalar> r;
            for (const auto& t : row)
                r.push_back(Scalar::parse(t));
            spec.matrix.push_back(r);
        }
        size_t n = spec.matrix.size();
        if (n == 0)
            throw std::invalid_argument("diag(...) needs a square matrix");
        for (const auto& r : spec.matrix)
            if (r.size() != n)
                throw std::invalid_argument("diag(...) needs a square matrix (rows separated by ';')");
        spec.text = spec_text(spec);
        return spec;
    }

    std::vector<std::string> flat;
    if (info->has_signs) {
        if (groups.size() < 2)
            throw std::invalid_argument(name + " expects signs first, e.g. Emn(+,-;q12,q13,q23;a)");
        for (const auto& t : groups[0])
            spec.signs.push_back(parse_sign(t));
        if (spec.signs.size() != 2)
            throw std::invalid_argument(name + " expects two signs mu, nu");
        for (size_t g = 1; g < groups.size(); ++g)
            for (const auto& t : groups[g])
                flat.push_back(t);
    } else {
        for (const auto& g : groups)
            for (const auto& t : g)
                flat.push_back(t);
    }
    if (flat.empty())
        for (const auto& p : info->params)
            flat.push_back(p);
    if (flat.size() != info->params.size())
        throw std::invalid_argument(name + " expects " + std::to_string(info->params.size()) +
                                    " parameters, got " + std::to_string(flat.size()));
    for (const auto& t : flat)
        spec.args.push_back(Scalar::parse(t));
    spec.text = spec_text(spec);
    return spec;
}

FamilySpec parse_family_config(const std::string& document)
{
    std::map<std::string, std::string> kv;
    std::istringstream in(document);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        size_t eq = line.find_first_of("=:");
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": expected key = value");
        kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    if (!kv.count("family"))
        throw std::invalid_argument("config has no 'family' key");
    std::string name = canonical_family_id(kv["family"]);
    const FamilyInfo* info = find_family(name);
    if (!info)
        throw std::invalid_argument("unknown family '" + name + "'");
    std::string text = name + "(";
    if (name == "diag") {
        if (!kv.count("matrix"))
            throw std::invalid_argument("diag config needs a 'matrix' key");
        return parse_family_spec(text + kv["matrix"] + ")");
    }
    if (info->has_signs)
        text += (kv.count("signs.mu") ? kv["signs.mu"] : "+") + "," +
                (kv.count("signs.nu") ? kv["signs.nu"] : "+") + ";";
    for (size_t i = 0; i < info->params.size(); ++i) {
        const std::string& p = info->params[i];
        std::string v = p;
        if (kv.count("params." + p))
            v = kv["params." + p];
        else if ((p == "a" || p == "b") && kv.count(p))
            v = kv[p];
        text += (i ? "," : "") + v;
    }
    for (const auto& [k, v] : kv) {
        bool known = k == "family" || k == "signs.mu" || k == "signs.nu" || k == "a" || k == "b";
        if (k.rfind("params.", 0) == 0)
            known = std::find(info->params.begin(), info->params.end(), k.substr(7)) !=
                    info->params.end();
        if (!known)
            throw std::invalid_argument("config key '" + k + "' does not apply to " + name);
    }
    return parse_family_spec(text + ")");
}

namespace {

// Collect free parameters of the arguments, in first-appearance order.
std::vector<std::string> params_of(const std::vector<Scalar>& xs)
{
    std::vector<std::string> out;
    for (const auto& x : xs)
        for (int v : x.support()) {
            std::string n = var_name(v);
            if (std::find(out.begin(), out.end(), n) == out.end())
                out.push_back(n);
        }
    return out;
}

Matrix zero_matrix(size_t n) { return Matrix(n, std::vector<Scalar>(n)); }

// pale block x1, x3_2 in component 0 plus points / a second 2-dim component
struct Builder {
    BraidedSpace s;

    int add(const std::string& label, int c)
    {
        s.labels.push_back(label);
        s.comp.push_back(c);
        return (int)s.labels.size() - 1;
    }
    void finish(int rank)
    {
        s.rank = rank;
        s.actions.assign(rank, zero_matrix(s.labels.size()));
    }
    void set(int j, int k, int l, const Scalar& v) { s.actions[j][k][l] = v; }
};

} // namespace

BraidedSpace build_family(const FamilySpec& f)
{
    Builder b;
    BraidedSpace& s = b.s;
    const auto& A = f.args;
    auto inv = [](const Scalar& x) {
        if (x.is_zero())
            throw std::invalid_argument("parameter must be nonzero");
        return x.inv();
    };
    auto need_nonzero = [&](const std::string& n, const Scalar& v) {
        if (v.is_zero())
            throw std::invalid_argument(n + " must be nonzero (k^x required)");
        s.nonzero.emplace_back(n, v);
    };
    const std::string& id = f.family;

    if (id == "E3-" || id == "E3+") {
        Scalar q = A[0];
        need_nonzero("q", q);
        Scalar q21 = inv(q), q22 = id == "E3-" ? Scalar(-1) : Scalar(1);
        for (int i = 1; i <= 3; ++i)
            b.add("x" + std::to_string(i), 0);
        b.add("x4", 1);
        b.finish(2);
        for (int i = 0; i < 3; ++i) {
            b.set(0, i, i, Scalar(-1));
            b.set(1, i, i, q21);
            if (i > 0)
                b.set(1, i - 1, i, q21);
        }
        b.set(0, 3, 3, q);
        b.set(1, 3, 3, q22);
        s.aliases = {{"q11", Scalar(-1)}, {"q12", q}, {"q21", q21}, {"q22", q22}};
    } else if (id == "E+" || id == "E-" || id == "Estar" || id == "Epale") {
        Scalar q11(-1), q12, q21, q22;
        if (id == "Epale") {
            q11 = A[0];
            q12 = A[1];
            q21 = A[2];
            q22 = A[3];
            need_nonzero("q11", q11);
            need_nonzero("q12", q12);
            need_nonzero("q21", q21);
            need_nonzero("q22", q22);
        } else {
            q12 = A[0];
            need_nonzero("q", q12);
            q21 = id == "Estar" ? -inv(q12) : inv(q12);
            q22 = id == "E+" ? Scalar(1) : Scalar(-1);
        }
        b.add("x1", 0);
        b.add("x3_2", 0);
        b.add("x2", 1);
        b.finish(2);
        b.set(0, 0, 0, q11);
        b.set(0, 1, 1, q11);
        b.set(0, 2, 2, q12);
        b.set(1, 0, 0, q21);
        b.set(1, 0, 1, q21);
        b.set(1, 1, 1, q21);
        b.set(1, 2, 2, q22);
        s.aliases = {{"q11", q11}, {"q12", q12}, {"q21", q21}, {"q22", q22}};
    } else if (id == "Emn" || id == "Einf" || id == "P2") {
        Scalar q11(-1), q12, q13, q21, q22, q23, q31, q32, q33, a;
        if (id == "Emn") {
            q12 = A[0];
            q13 = A[1];
            q23 = A[2];
            a = A[3];
            need_nonzero("q12", q12);
            need_nonzero("q13", q13);
            need_nonzero("q23", q23);
            need_nonzero("a", a);
            q21 = inv(q12);
            q31 = inv(q13);
            q32 = inv(q23);
            q22 = Scalar(f.signs[0]);
            q33 = Scalar(f.signs[1]);
        } else if (id == "Einf") {
            q12 = A[0];
            q13 = A[1];
            q23 = A[2];
            need_nonzero("q12", q12);
            need_nonzero("q13", q13);
            need_nonzero("q23", q23);
            q21 = inv(q12);
            q31 = -inv(q13);
            q32 = inv(q23);
            q22 = Scalar(1);
            q33 = Scalar(-1);
        } else {
            const char* names[] = {"q11", "q12", "q13", "q21", "q22", "q23", "q31", "q32", "q33"};
            for (int i = 0; i < 9; ++i)
                need_nonzero(names[i], A[i]);
            q11 = A[0];
            q12 = A[1];
            q13 = A[2];
            q21 = A[3];
            q22 = A[4];
            q23 = A[5];
            q31 = A[6];
            q32 = A[7];
            q33 = A[8];
            a = A[9];
        }
        b.add("x1", 0);
        b.add("x3_2", 0);
        b.add("x2", 1);
        b.add("x3", 2);
        b.finish(3);
        // g1
        b.set(0, 0, 0, q11);
        b.set(0, 1, 1, q11);
        b.set(0, 2, 2, q12);
        b.set(0, 3, 3, q13);
        // g2: Jordan block on V1
        b.set(1, 0, 0, q21);
        b.set(1, 0, 1, q21);
        b.set(1, 1, 1, q21);
        b.set(1, 2, 2, q22);
        b.set(1, 3, 3, q23);
        // g3: q31 (1 a; 0 1) on V1
        b.set(2, 0, 0, q31);
        b.set(2, 0, 1, q31 * a);
        b.set(2, 1, 1, q31);
        b.set(2, 2, 2, q32);
        b.set(2, 3, 3, q33);
        s.aliases = {{"q11", q11}, {"q12", q12}, {"q13", q13}, {"q21", q21}, {"q22", q22},
                     {"q23", q23}, {"q31", q31}, {"q32", q32}, {"q33", q33}, {"a", a}};
    } else if (id == "S20" || id == "S1p" || id == "S1m" || id == "Sgen") {
        Scalar q11(-1), q12, q21, q22, a, bb;
        if (id == "Sgen") {
            q11 = A[0];
            q12 = A[1];
            q21 = A[2];
            q22 = A[3];
            a = A[4];
            bb = A[5];
            need_nonzero("q11", q11);
            need_nonzero("q12", q12);
            need_nonzero("q21", q21);
            need_nonzero("q22", q22);
        } else {
            q12 = A[0];
            need_nonzero("q", q12);
            q21 = inv(q12);
            if (id == "S20") {
                q22 = Scalar(-1);
                a = Scalar(1);
                bb = Scalar(0);
            } else if (id == "S1p") {
                q22 = Scalar(1);
                a = A[1];
                bb = Scalar(1);
            } else {
                q22 = Scalar(-1);
                a = Scalar(-1);
                bb = Scalar(1);
            }
        }
        b.add("x1", 0);
        b.add("x3_2", 0);
        b.add("x2", 1);
        b.add("x5_2", 1);
        b.finish(2);
        b.set(0, 0, 0, q11);
        b.set(0, 1, 1, q11);
        b.set(0, 2, 2, q12);
        b.set(0, 3, 3, q12);
        b.set(0, 2, 3, q12 * a);
        b.set(1, 0, 0, q21);
        b.set(1, 0, 1, q21);
        b.set(1, 1, 1, q21);
        b.set(1, 2, 2, q22);
        b.set(1, 3, 3, q22);
        b.set(1, 2, 3, q22 * bb);
        s.aliases = {{"q11", q11}, {"q12", q12}, {"q21", q21}, {"q22", q22}, {"a", a}, {"b", bb}};
    } else if (id == "V") {
        Scalar eps = A[0];
        need_nonzero("eps", eps);
        if (!A[1].is_constant() || A[1].constant_value() < 1 ||
            A[1].constant_value().get_den() != 1)
            throw std::invalid_argument("V(eps, l) needs a positive integer l");
        long l = A[1].constant_value().get_num().get_si();
        if (l > 8)
            throw std::invalid_argument("V(eps, l) supports l <= 8");
        for (long i = 1; i <= l; ++i)
            b.add("x" + std::to_string(i), 0);
        b.finish(1);
        for (long i = 0; i < l; ++i) {
            b.set(0, (int)i, (int)i, eps);
            if (i > 0)
                b.set(0, (int)i - 1, (int)i, Scalar(1));
        }
        s.aliases = {{"eps", eps}};
    } else if (id == "diag") {
        size_t n = f.matrix.size();
        for (size_t i = 0; i < n; ++i)
            b.add("x" + std::to_string(i + 1), (int)i);
        b.finish((int)n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                std::string nm = "q" + std::to_string(i + 1) + std::to_string(j + 1);
                need_nonzero(nm, f.matrix[i][j]);
                b.set((int)i, (int)j, (int)j, f.matrix[i][j]);
                if (n < 10)
                    s.aliases[nm] = f.matrix[i][j];
            }
    } else {
        throw std::invalid_argument("unknown family '" + id + "'");
    }

    std::vector<Scalar> all = f.args;
    for (const auto& r : f.matrix)
        all.insert(all.end(), r.begin(), r.end());
    s.params = params_of(all);
    s.name = f.text;
    s.validate();
    return s;
}

BraidedSpace build_family(const std::string& text) { return build_family(parse_family_spec(text)); }

} // namespace pn
