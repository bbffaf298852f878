#include "scalar.hpp"

#include <cctype>

namespace pn {

Scalar::Scalar(const Poly& num, const Poly& den)
{
    if (den.is_zero())
        throw std::domain_error("division by zero");
    if (num.is_zero())
        return;
    Poly n = num, d = den;
    if (!d.is_constant()) {
        Poly g = gcd(n, d);
        if (!g.is_one()) {
            n = n.div_exact(g);
            d = d.div_exact(g);
        }
    }
    mpq_class lc = d.lead().c;
    if (lc != 1) {
        n = n.scaled(1 / lc);
        d = d.scaled(1 / lc);
    }
    num_ = std::move(n);
    if (!d.is_one())
        den_ = std::move(d);
}

Scalar Scalar::param(const std::string& name)
{
    return Scalar(Poly::var(var_index(name)));
}

Scalar Scalar::operator-() const
{
    Scalar r = *this;
    r.num_ = -r.num_;
    return r;
}

Scalar Scalar::operator+(const Scalar& o) const
{
    if (is_zero())
        return o;
    if (o.is_zero())
        return *this;
    if (den_.is_zero() && o.den_.is_zero()) {
        Scalar r;
        r.num_ = num_ + o.num_;
        return r;
    }
    if (den_ == o.den_) {
        Poly n = num_ + o.num_;
        return Scalar(n, den_);
    }
    if (den_.is_zero())
        return Scalar(num_ * o.den_ + o.num_, o.den_);
    if (o.den_.is_zero())
        return Scalar(num_ + o.num_ * den_, den_);
    Poly g = gcd(den_, o.den_);
    if (g.is_one())
        return Scalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    Poly d1 = den_.div_exact(g), d2 = o.den_.div_exact(g);
    return Scalar(num_ * d2 + o.num_ * d1, den_ * d2);
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const
{
    if (is_zero() || o.is_zero())
        return Scalar();
    if (den_.is_zero() && o.den_.is_zero()) {
        Scalar r;
        r.num_ = num_ * o.num_;
        return r;
    }
    // cross-cancel so the result is already reduced
    Poly a = num_, b = den(), c = o.num_, d = o.den();
    Poly g1 = gcd(a, d), g2 = gcd(c, b);
    if (!g1.is_one()) {
        a = a.div_exact(g1);
        d = d.div_exact(g1);
    }
    if (!g2.is_one()) {
        c = c.div_exact(g2);
        b = b.div_exact(g2);
    }
    Poly n = a * c, dd = b * d;
    Scalar r;
    mpq_class lc = dd.lead().c;
    if (lc != 1) {
        n = n.scaled(1 / lc);
        dd = dd.scaled(1 / lc);
    }
    r.num_ = std::move(n);
    if (!dd.is_one())
        r.den_ = std::move(dd);
    return r;
}

Scalar Scalar::inv() const
{
    if (is_zero())
        throw std::domain_error("division by zero");
    Scalar r;
    Poly n = den(), d = num_;
    mpq_class lc = d.lead().c;
    if (lc != 1) {
        n = n.scaled(1 / lc);
        d = d.scaled(1 / lc);
    }
    r.num_ = std::move(n);
    if (!d.is_one())
        r.den_ = std::move(d);
    return r;
}

Scalar Scalar::operator/(const Scalar& o) const
{
    if (o.is_zero())
        throw std::domain_error("division by zero");
    return *this * o.inv();
}

Scalar Scalar::pow(long e) const
{
    if (e < 0)
        return inv().pow(-e);
    Scalar r(1), b = *this;
    while (e) {
        if (e & 1)
            r *= b;
        e >>= 1;
        if (e)
            b *= b;
    }
    return r;
}

std::vector<int> Scalar::support() const
{
    std::vector<int> out;
    for (int i = 0; i < kMaxVars; ++i)
        if (num_.has_var(i) || den_.has_var(i))
            out.push_back(i);
    return out;
}

std::string Scalar::str() const
{
    if (den_.is_zero())
        return num_.str();
    std::string n = num_.str();
    if (num_.size() > 1)
        n = "(" + n + ")";
    std::string d = den_.str();
    // den is monic, so a single term is a bare monomial; products need parentheses
    if (den_.size() > 1 || d.find('*') != std::string::npos)
        d = "(" + d + ")";
    return n + "/" + d;
}

// ------------------------------------------------------------------ parser

namespace {

struct ScalarParser {
    const std::string& s;
    size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg)
    {
        throw std::invalid_argument("scalar parse error at position " + std::to_string(pos) +
                                    ": " + msg);
    }
    void skip()
    {
        while (pos < s.size() && std::isspace((unsigned char)s[pos]))
            ++pos;
    }
    bool eat(char c)
    {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    Scalar expr()
    {
        Scalar r = term();
        while (true) {
            if (eat('+'))
                r += term();
            else if (eat('-'))
                r -= term();
            else
                return r;
        }
    }
    Scalar term()
    {
        Scalar r = unary();
        while (true) {
            if (eat('*'))
                r *= unary();
            else if (eat('/')) {
                Scalar d = unary();
                if (d.is_zero())
                    fail("division by zero");
                r /= d;
            } else
                return r;
        }
    }
    Scalar unary()
    {
        if (eat('-'))
            return -unary();
        if (eat('+'))
            return unary();
        return power();
    }
    Scalar power()
    {
        Scalar b = atom();
        if (eat('^')) {
            skip();
            bool neg = false;
            if (eat('-'))
                neg = true;
            skip();
            size_t st = pos;
            while (pos < s.size() && std::isdigit((unsigned char)s[pos]))
                ++pos;
            if (st == pos)
                fail("expected integer exponent");
            long e = std::stol(s.substr(st, pos - st));
            if (neg && b.is_zero())
                fail("division by zero");
            return b.pow(neg ? -e : e);
        }
        return b;
    }
    Scalar atom()
    {
        skip();
        if (pos >= s.size())
            fail("unexpected end of input");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            Scalar r = expr();
            if (!eat(')'))
                fail("expected ')'");
            return r;
        }
        if (std::isdigit((unsigned char)c)) {
            size_t st = pos;
            while (pos < s.size() && std::isdigit((unsigned char)s[pos]))
                ++pos;
            return Scalar(mpq_class(mpz_class(s.substr(st, pos - st))));
        }
        if (std::isalpha((unsigned char)c) || c == '_') {
            size_t st = pos;
            while (pos < s.size() && (std::isalnum((unsigned char)s[pos]) || s[pos] == '_'))
                ++pos;
            return Scalar::param(s.substr(st, pos - st));
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

} // namespace

Scalar Scalar::parse(const std::string& text)
{
    ScalarParser p{text};
    Scalar r = p.expr();
    p.skip();
    if (p.pos != text.size())
        p.fail("trailing input");
    return r;
}

// ----------------------------------------------------------- specialization

std::vector<mpq_class> assignment_vector(const Assignment& sigma)
{
    std::vector<mpq_class> point(kMaxVars);
    for (const auto& [name, v] : sigma) {
        int idx = var_index(name);
        point[idx] = v;
    }
    return point;
}

namespace {

void check_covered(const Scalar& x, const Assignment& sigma)
{
    for (int v : x.support())
        if (!sigma.count(var_name(v)))
            throw std::out_of_range("assignment misses parameter " + var_name(v));
}

} // namespace

mpq_class specialize(const Scalar& x, const std::vector<mpq_class>& point)
{
    mpq_class d = x.den_is_one() ? mpq_class(1) : x.den().eval(point);
    if (d == 0) {
        std::string where;
        for (int v : x.support()) {
            if (!where.empty())
                where += ", ";
            where += var_name(v) + "=" + rational_str(point[v]);
        }
        throw PoleError("denominator of " + x.str() + " vanishes at {" + where + "}");
    }
    return x.num().eval(point) / d;
}

mpq_class specialize(const Scalar& x, const Assignment& sigma)
{
    check_covered(x, sigma);
    return specialize(x, assignment_vector(sigma));
}

std::string rational_str(const mpq_class& q) { return q.get_str(); }

} // namespace pn
