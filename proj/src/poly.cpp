#include "poly.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace pn {

namespace {

struct VarTable {
    std::mutex mu;
    std::vector<std::string> names;
    std::unordered_map<std::string, int> index;
};

VarTable& vars()
{
    static VarTable t;
    return t;
}

} // namespace

int var_index(const std::string& name)
{
    auto& t = vars();
    std::lock_guard<std::mutex> lock(t.mu);
    auto it = t.index.find(name);
    if (it != t.index.end())
        return it->second;
    if ((int)t.names.size() >= kMaxVars)
        throw std::runtime_error("too many distinct parameter names (max " +
                                 std::to_string(kMaxVars) + ")");
    int idx = (int)t.names.size();
    t.names.push_back(name);
    t.index.emplace(name, idx);
    return idx;
}

int find_var(const std::string& name)
{
    auto& t = vars();
    std::lock_guard<std::mutex> lock(t.mu);
    auto it = t.index.find(name);
    return it == t.index.end() ? -1 : it->second;
}

std::string var_name(int idx)
{
    auto& t = vars();
    std::lock_guard<std::mutex> lock(t.mu);
    return t.names.at(idx);
}

int var_count()
{
    auto& t = vars();
    std::lock_guard<std::mutex> lock(t.mu);
    return (int)t.names.size();
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::var(int idx, unsigned power)
{
    Monomial m;
    m.e[idx] = (uint16_t)power;
    m.deg = power;
    return m;
}

Monomial Monomial::operator*(const Monomial& o) const
{
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) {
        unsigned s = (unsigned)e[i] + o.e[i];
        if (s > 0xFFFF)
            throw std::overflow_error("monomial exponent overflow");
        r.e[i] = (uint16_t)s;
    }
    r.deg = deg + o.deg;
    return r;
}

bool Monomial::divides(const Monomial& o) const
{
    if (deg > o.deg)
        return false;
    for (int i = 0; i < kMaxVars; ++i)
        if (e[i] > o.e[i])
            return false;
    return true;
}

Monomial Monomial::operator/(const Monomial& o) const
{
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i)
        r.e[i] = (uint16_t)(e[i] - o.e[i]);
    r.deg = deg - o.deg;
    return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b)
{
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) {
        r.e[i] = std::min(a.e[i], b.e[i]);
        r.deg += r.e[i];
    }
    return r;
}

bool deglex_greater(const Monomial& a, const Monomial& b)
{
    if (a.deg != b.deg)
        return a.deg > b.deg;
    for (int i = 0; i < kMaxVars; ++i)
        if (a.e[i] != b.e[i])
            return a.e[i] > b.e[i];
    return false;
}

// -------------------------------------------------------------------- Poly

Poly::Poly(const mpq_class& c)
{
    if (c != 0)
        t_.push_back({Monomial{}, c});
}

Poly Poly::var(int idx, unsigned power)
{
    Poly p;
    p.t_.push_back({Monomial::var(idx, power), mpq_class(1)});
    return p;
}

Poly Poly::monomial(const Monomial& m, const mpq_class& c)
{
    Poly p;
    if (c != 0)
        p.t_.push_back({m, c});
    return p;
}

mpq_class Poly::constant_value() const
{
    if (t_.empty())
        return 0;
    if (!t_[0].m.is_one() || t_.size() != 1)
        throw std::logic_error("constant_value on non-constant polynomial");
    return t_[0].c;
}

void Poly::normalize()
{
    std::sort(t_.begin(), t_.end(),
              [](const Term& a, const Term& b) { return deglex_greater(a.m, b.m); });
    std::vector<Term> out;
    out.reserve(t_.size());
    for (auto& t : t_) {
        if (!out.empty() && out.back().m == t.m)
            out.back().c += t.c;
        else {
            if (!out.empty() && out.back().c == 0)
                out.pop_back();
            out.push_back(std::move(t));
        }
    }
    if (!out.empty() && out.back().c == 0)
        out.pop_back();
    t_ = std::move(out);
}

Poly Poly::operator-() const
{
    Poly r = *this;
    for (auto& t : r.t_)
        t.c = -t.c;
    return r;
}

Poly Poly::operator+(const Poly& o) const
{
    Poly r;
    r.t_.reserve(t_.size() + o.t_.size());
    size_t i = 0, j = 0;
    while (i < t_.size() && j < o.t_.size()) {
        if (t_[i].m == o.t_[j].m) {
            mpq_class c = t_[i].c + o.t_[j].c;
            if (c != 0)
                r.t_.push_back({t_[i].m, std::move(c)});
            ++i;
            ++j;
        } else if (deglex_greater(t_[i].m, o.t_[j].m)) {
            r.t_.push_back(t_[i++]);
        } else {
            r.t_.push_back(o.t_[j++]);
        }
    }
    for (; i < t_.size(); ++i)
        r.t_.push_back(t_[i]);
    for (; j < o.t_.size(); ++j)
        r.t_.push_back(o.t_[j]);
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const
{
    if (is_zero() || o.is_zero())
        return Poly();
    if (o.t_.size() == 1)
        return times_monomial(o.t_[0].m, o.t_[0].c);
    if (t_.size() == 1)
        return o.times_monomial(t_[0].m, t_[0].c);
    Poly r;
    r.t_.reserve(t_.size() * o.t_.size());
    for (const auto& a : t_)
        for (const auto& b : o.t_)
            r.t_.push_back({a.m * b.m, a.c * b.c});
    r.normalize();
    return r;
}

Poly Poly::scaled(const mpq_class& c) const
{
    if (c == 0)
        return Poly();
    Poly r = *this;
    for (auto& t : r.t_)
        t.c *= c;
    return r;
}

Poly Poly::times_monomial(const Monomial& m, const mpq_class& c) const
{
    if (c == 0)
        return Poly();
    Poly r;
    r.t_.reserve(t_.size());
    for (const auto& t : t_)
        r.t_.push_back({t.m * m, t.c * c});   // order is preserved by a monomial order
    return r;
}

bool Poly::operator==(const Poly& o) const
{
    if (t_.size() != o.t_.size())
        return false;
    for (size_t i = 0; i < t_.size(); ++i)
        if (t_[i].m != o.t_[i].m || t_[i].c != o.t_[i].c)
            return false;
    return true;
}

bool Poly::divide_exact(const Poly& o, Poly& quotient) const
{
    if (o.is_zero())
        throw std::domain_error("polynomial division by zero");
    quotient = Poly();
    if (is_zero())
        return true;
    if (o.t_.size() == 1) {
        const auto& d = o.t_[0];
        Poly q;
        q.t_.reserve(t_.size());
        for (const auto& t : t_) {
            if (!d.m.divides(t.m))
                return false;
            q.t_.push_back({t.m / d.m, t.c / d.c});
        }
        quotient = std::move(q);
        return true;
    }
    Poly rem = *this;
    std::vector<Term> q;
    const Term& lo = o.t_[0];
    while (!rem.is_zero()) {
        const Term& lr = rem.t_[0];
        if (!lo.m.divides(lr.m))
            return false;
        // the total degree of the leading term must stay reachable
        Monomial qm = lr.m / lo.m;
        mpq_class qc = lr.c / lo.c;
        q.push_back({qm, qc});
        rem -= o.times_monomial(qm, qc);
        if (q.size() > 100000)
            throw std::runtime_error("runaway polynomial division");
    }
    quotient = Poly::from_sorted(std::move(q));
    return true;
}

Poly Poly::div_exact(const Poly& o) const
{
    Poly q;
    if (!divide_exact(o, q))
        throw std::logic_error("inexact polynomial division");
    return q;
}

Monomial Poly::min_monomial() const
{
    if (t_.empty())
        return Monomial{};
    Monomial m = t_[0].m;
    for (size_t i = 1; i < t_.size(); ++i)
        m = Monomial::gcd(m, t_[i].m);
    return m;
}

Poly Poly::monic() const
{
    if (t_.empty())
        return Poly();
    mpq_class inv = 1 / t_[0].c;
    return scaled(inv);
}

unsigned Poly::degree_in(int v) const
{
    unsigned d = 0;
    for (const auto& t : t_)
        d = std::max<unsigned>(d, t.m.e[v]);
    return d;
}

bool Poly::has_var(int v) const
{
    for (const auto& t : t_)
        if (t.m.e[v])
            return true;
    return false;
}

Poly Poly::coeff_in(int v, unsigned k) const
{
    Poly r;
    for (const auto& t : t_) {
        if (t.m.e[v] == k) {
            Term nt = t;
            nt.m.e[v] = 0;
            nt.m.deg -= k;
            r.t_.push_back(std::move(nt));
        }
    }
    r.normalize();
    return r;
}

mpq_class Poly::eval(const std::vector<mpq_class>& point) const
{
    mpq_class sum = 0;
    for (const auto& t : t_) {
        mpq_class v = t.c;
        for (int i = 0; i < kMaxVars; ++i) {
            if (!t.m.e[i])
                continue;
            if (i >= (int)point.size())
                throw std::out_of_range("evaluation point misses parameter " + var_name(i));
            mpz_class num, den;
            mpz_pow_ui(num.get_mpz_t(), point[i].get_num_mpz_t(), t.m.e[i]);
            mpz_pow_ui(den.get_mpz_t(), point[i].get_den_mpz_t(), t.m.e[i]);
            mpq_class p(num, den);
            p.canonicalize();
            v *= p;
        }
        sum += v;
    }
    return sum;
}

namespace {

std::string monomial_str(const Monomial& m)
{
    std::string s;
    for (int i = 0; i < kMaxVars; ++i) {
        if (!m.e[i])
            continue;
        if (!s.empty())
            s += "*";
        s += var_name(i);
        if (m.e[i] > 1)
            s += "^" + std::to_string(m.e[i]);
    }
    return s;
}

} // namespace

std::string Poly::str() const
{
    if (t_.empty())
        return "0";
    std::string s;
    bool first = true;
    for (const auto& t : t_) {
        mpq_class c = t.c;
        bool neg = c < 0;
        if (neg)
            c = -c;
        if (first)
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        first = false;
        if (t.m.is_one()) {
            s += c.get_str();
        } else {
            if (c != 1)
                s += c.get_str() + "*";
            s += monomial_str(t.m);
        }
    }
    return s;
}

// --------------------------------------------------------------------- gcd

namespace {

// content with respect to v: gcd of the coefficients of the powers of v
Poly content_in(const Poly& p, int v)
{
    unsigned d = p.degree_in(v);
    Poly g;
    for (unsigned k = 0; k <= d; ++k) {
        Poly c = p.coeff_in(v, k);
        if (c.is_zero())
            continue;
        g = gcd(g, c);
        if (g.is_one())
            break;
    }
    return g;
}

Poly lead_in(const Poly& p, int v) { return p.coeff_in(v, p.degree_in(v)); }

// pseudo-remainder of a by b with respect to v
Poly prem(Poly a, const Poly& b, int v)
{
    unsigned db = b.degree_in(v);
    Poly lb = lead_in(b, v);
    while (!a.is_zero() && a.degree_in(v) >= db) {
        unsigned da = a.degree_in(v);
        Poly la = lead_in(a, v);
        a = a * lb - la * b * Poly::var(v, da - db);
    }
    return a;
}

Poly primitive_part(const Poly& p, int v)
{
    Poly c = content_in(p, v);
    if (c.is_one())
        return p;
    return p.div_exact(c);
}

} // namespace

Poly gcd(const Poly& a0, const Poly& b0)
{
    if (a0.is_zero())
        return b0.monic();
    if (b0.is_zero())
        return a0.monic();
    Monomial ma = a0.min_monomial(), mb = b0.min_monomial();
    Monomial mg = Monomial::gcd(ma, mb);
    Poly mono = Poly::monomial(mg, 1);
    Poly a = ma.is_one() ? a0 : a0.div_exact(Poly::monomial(ma, 1));
    Poly b = mb.is_one() ? b0 : b0.div_exact(Poly::monomial(mb, 1));
    if (a.is_constant() || b.is_constant())
        return mono;
    if (a == b || a == -b || a.monic() == b.monic())
        return (mono * a).monic();

    // quick divisibility checks
    Poly q;
    if (a.size() <= b.size() && b.divide_exact(a, q))
        return (mono * a).monic();
    if (b.size() < a.size() && a.divide_exact(b, q))
        return (mono * b).monic();

    int v = -1;
    for (int i = 0; i < kMaxVars && v < 0; ++i)
        if (a.has_var(i) || b.has_var(i))
            v = i;
    bool in_a = a.has_var(v), in_b = b.has_var(v);
    if (!in_b)
        return (mono * gcd(content_in(a, v), b)).monic();
    if (!in_a)
        return (mono * gcd(a, content_in(b, v))).monic();

    Poly ca = content_in(a, v), cb = content_in(b, v);
    Poly c = gcd(ca, cb);
    Poly r0 = ca.is_one() ? a : a.div_exact(ca);
    Poly r1 = cb.is_one() ? b : b.div_exact(cb);
    if (r0.degree_in(v) < r1.degree_in(v))
        std::swap(r0, r1);
    while (true) {
        Poly r = prem(r0, r1, v);
        if (r.is_zero())
            break;
        if (r.degree_in(v) == 0) {
            r1 = Poly(1);
            break;
        }
        r0 = std::move(r1);
        r1 = primitive_part(r, v);
    }
    Poly g = r1.degree_in(v) == 0 ? Poly(1) : primitive_part(r1, v);
    return (mono * c * g).monic();
}

} // namespace pn
