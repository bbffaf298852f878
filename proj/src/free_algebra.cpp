#include "free_algebra.hpp"

#include <cctype>
#include <stdexcept>

namespace pn {

std::vector<int> word_gamma(const BraidedSpace& s, const Word& w)
{
    std::vector<int> g(s.rank, 0);
    for (auto k : w)
        ++g[s.comp[k]];
    return g;
}

std::string word_str(const BraidedSpace& s, const Word& w)
{
    if (w.empty())
        return "1";
    std::string out;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i)
            out += "*";
        out += s.labels[w[i]];
    }
    return out;
}

// ------------------------------------------------------------- FreeElement

FreeElement::FreeElement(const Scalar& c)
{
    if (!c.is_zero())
        t_[Word{}] = c;
}

FreeElement FreeElement::generator(int k) { return word(Word{(uint8_t)k}); }

FreeElement FreeElement::word(const Word& w, const Scalar& c)
{
    FreeElement e;
    e.add(w, c);
    return e;
}

void FreeElement::add(const Word& w, const Scalar& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = t_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            t_.erase(it);
    }
}

FreeElement& FreeElement::operator+=(const FreeElement& o)
{
    for (const auto& [w, c] : o.t_)
        add(w, c);
    return *this;
}

FreeElement FreeElement::operator+(const FreeElement& o) const
{
    FreeElement r = *this;
    r += o;
    return r;
}

FreeElement FreeElement::operator-() const
{
    FreeElement r = *this;
    for (auto& [w, c] : r.t_)
        c = -c;
    return r;
}

FreeElement FreeElement::operator-(const FreeElement& o) const { return *this + (-o); }

FreeElement FreeElement::operator*(const FreeElement& o) const { return multiply(*this, o); }

FreeElement FreeElement::scaled(const Scalar& c) const
{
    if (c.is_zero())
        return FreeElement();
    FreeElement r = *this;
    for (auto& [w, x] : r.t_)
        x *= c;
    return r;
}

int FreeElement::n_degree() const
{
    if (t_.empty())
        return 0;
    size_t n = t_.begin()->first.size();
    return t_.rbegin()->first.size() == n ? (int)n : -1;
}

bool FreeElement::gamma_homogeneous(const BraidedSpace& s, std::vector<int>* gamma) const
{
    std::vector<int> g0;
    bool first = true;
    for (const auto& [w, c] : t_) {
        auto g = word_gamma(s, w);
        if (first) {
            g0 = g;
            first = false;
        } else if (g != g0)
            return false;
    }
    if (gamma)
        *gamma = first ? std::vector<int>(s.rank, 0) : g0;
    return true;
}

std::map<int, FreeElement> FreeElement::by_degree() const
{
    std::map<int, FreeElement> out;
    for (const auto& [w, c] : t_)
        out[(int)w.size()].t_.emplace(w, c);
    return out;
}

std::string FreeElement::str(const BraidedSpace& s) const
{
    if (t_.empty())
        return "0";
    std::string out;
    for (const auto& [w, c] : t_) {
        std::string cs = c.str();
        bool neg = !cs.empty() && cs[0] == '-';
        bool composite = c.num().size() > 1;
        std::string body;
        if (c.is_one())
            body = word_str(s, w);
        else if (c == Scalar(-1))
            body = word_str(s, w), neg = true;
        else {
            std::string coef = composite ? "(" + cs + ")" : (neg ? cs.substr(1) : cs);
            if (composite)
                neg = false;
            body = w.empty() ? coef : coef + "*" + word_str(s, w);
        }
        if (out.empty())
            out = (neg ? "-" : "") + body;
        else
            out += (neg ? " - " : " + ") + body;
    }
    return out;
}

FreeElement multiply(const FreeElement& a, const FreeElement& b)
{
    FreeElement r;
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            r.add(w, ca * cb);
        }
    return r;
}

namespace {

// g acting letterwise on one word, accumulated into out with coefficient c
void act_word(const Matrix& m, const Word& w, const Scalar& c, FreeElement& out)
{
    std::vector<std::pair<Word, Scalar>> cur{{Word{}, c}};
    for (auto letter : w) {
        std::vector<std::pair<Word, Scalar>> next;
        for (const auto& [pw, pc] : cur)
            for (size_t k = 0; k < m.size(); ++k) {
                const Scalar& a = m[k][letter];
                if (a.is_zero())
                    continue;
                Word nw = pw;
                nw.push_back((uint8_t)k);
                next.emplace_back(std::move(nw), pc * a);
            }
        cur = std::move(next);
    }
    for (const auto& [w2, c2] : cur)
        out.add(w2, c2);
}

} // namespace

FreeElement group_act(const BraidedSpace& s, const GroupElement& g, const FreeElement& e)
{
    if (g.is_identity())
        return e;
    Matrix m = s.action_of(g);
    FreeElement r;
    for (const auto& [w, c] : e.terms())
        act_word(m, w, c, r);
    return r;
}

FreeElement bracket_c(const BraidedSpace& s, const FreeElement& u, const FreeElement& v)
{
    std::vector<int> gu;
    if (!u.gamma_homogeneous(s, &gu))
        throw std::invalid_argument("left argument of a braided commutator is not homogeneous");
    return u * v - group_act(s, GroupElement(gu), v) * u;
}

FreeElement ad_chain(const BraidedSpace& s, const std::vector<int>& indices, int target)
{
    FreeElement e = FreeElement::generator(target);
    for (auto it = indices.rbegin(); it != indices.rend(); ++it)
        e = bracket_c(s, FreeElement::generator(*it), e);
    return e;
}

FreeElement derivation(const BraidedSpace& s, int i, const FreeElement& e)
{
    const Matrix& m = s.actions[s.comp[i]];
    FreeElement r;
    for (const auto& [w, c] : e.terms())
        for (size_t k = 0; k < w.size(); ++k) {
            if (w[k] != i)
                continue;
            // prefix (g_i . suffix)
            Word suffix(w.begin() + k + 1, w.end());
            FreeElement tail;
            act_word(m, suffix, c, tail);
            Word prefix(w.begin(), w.begin() + k);
            for (const auto& [ws, cs] : tail.terms()) {
                Word nw = prefix;
                nw.insert(nw.end(), ws.begin(), ws.end());
                r.add(nw, cs);
            }
        }
    return r;
}

// ------------------------------------------------------------- ExprFactory

Expr ExprFactory::make(ExprNode n) { return std::make_shared<const ExprNode>(std::move(n)); }

Expr ExprFactory::constant(const Scalar& c)
{
    if (c.is_zero())
        return zero();
    ExprNode n;
    n.op = ExprOp::Const;
    n.c = c;
    n.gamma.assign(s_.rank, 0);
    return make(std::move(n));
}

Expr ExprFactory::zero()
{
    ExprNode n;
    n.op = ExprOp::Sum;
    n.zero = true;
    n.gamma.assign(s_.rank, 0);
    return make(std::move(n));
}

Expr ExprFactory::gen(int k)
{
    if (k < 0 || k >= (int)s_.dim())
        throw std::out_of_range("generator index out of range");
    ExprNode n;
    n.op = ExprOp::Gen;
    n.gen = k;
    n.min_deg = n.max_deg = 1;
    n.gamma.assign(s_.rank, 0);
    n.gamma[s_.comp[k]] = 1;
    return make(std::move(n));
}

Expr ExprFactory::sum(const std::vector<std::pair<Scalar, Expr>>& terms)
{
    ExprNode n;
    n.op = ExprOp::Sum;
    for (const auto& [c, e] : terms) {
        if (c.is_zero() || e->zero)
            continue;
        // flatten nested sums
        if (e->op == ExprOp::Sum) {
            for (const auto& [c2, e2] : e->terms)
                n.terms.emplace_back(c * c2, e2);
        } else
            n.terms.emplace_back(c, e);
    }
    if (n.terms.empty())
        return zero();
    if (n.terms.size() == 1 && n.terms[0].first.is_one())
        return n.terms[0].second;
    bool first = true;
    for (const auto& [c, e] : n.terms) {
        if (first) {
            n.min_deg = e->min_deg;
            n.max_deg = e->max_deg;
            n.homogeneous = e->homogeneous;
            n.gamma = e->gamma;
            first = false;
        } else {
            n.min_deg = std::min(n.min_deg, e->min_deg);
            n.max_deg = std::max(n.max_deg, e->max_deg);
            if (!e->homogeneous || e->gamma != n.gamma)
                n.homogeneous = false;
        }
    }
    return make(std::move(n));
}

Expr ExprFactory::prod(const Expr& a, const Expr& b)
{
    if (a->zero || b->zero)
        return zero();
    if (a->op == ExprOp::Const)
        return scale(a->c, b);
    if (b->op == ExprOp::Const)
        return scale(b->c, a);
    ExprNode n;
    n.op = ExprOp::Prod;
    n.a = a;
    n.b = b;
    n.min_deg = a->min_deg + b->min_deg;
    n.max_deg = a->max_deg + b->max_deg;
    n.homogeneous = a->homogeneous && b->homogeneous;
    if (n.homogeneous) {
        n.gamma = a->gamma;
        for (size_t i = 0; i < n.gamma.size(); ++i)
            n.gamma[i] += b->gamma[i];
    }
    return make(std::move(n));
}

Expr ExprFactory::power(const Expr& a, unsigned e)
{
    Expr r = constant(Scalar(1));
    for (unsigned i = 0; i < e; ++i)
        r = prod(r, a);
    return r;
}

Expr ExprFactory::bracket(const Expr& u, const Expr& v)
{
    if (!u->homogeneous)
        throw std::invalid_argument("left argument of a braided commutator is not homogeneous");
    return sub(prod(u, v), prod(act(GroupElement(u->gamma), v), u));
}

Expr ExprFactory::act(const GroupElement& g, const Expr& e)
{
    if (g.is_identity() || e->zero || e->op == ExprOp::Const)
        return e;
    auto key = std::make_pair(e.get(), g.e);
    auto it = act_memo_.find(key);
    if (it != act_memo_.end())
        return it->second;
    Expr r;
    switch (e->op) {
    case ExprOp::Gen: {
        Matrix m = s_.action_of(g);
        std::vector<std::pair<Scalar, Expr>> t;
        for (size_t k = 0; k < s_.dim(); ++k)
            if (!m[k][e->gen].is_zero())
                t.emplace_back(m[k][e->gen], gen((int)k));
        r = sum(t);
        break;
    }
    case ExprOp::Sum: {
        std::vector<std::pair<Scalar, Expr>> t;
        for (const auto& [c, x] : e->terms)
            t.emplace_back(c, act(g, x));
        r = sum(t);
        break;
    }
    case ExprOp::Prod:
        r = prod(act(g, e->a), act(g, e->b));
        break;
    default:
        r = e;
    }
    keep_.push_back(e);
    act_memo_[key] = r;
    return r;
}

Expr ExprFactory::deriv(int i, const Expr& e)
{
    if (e->zero || e->op == ExprOp::Const)
        return zero();
    if (e->op == ExprOp::Gen)
        return e->gen == i ? constant(Scalar(1)) : zero();
    auto key = std::make_pair(e.get(), i);
    auto it = deriv_memo_.find(key);
    if (it != deriv_memo_.end())
        return it->second;
    Expr r;
    if (e->op == ExprOp::Sum) {
        std::vector<std::pair<Scalar, Expr>> t;
        for (const auto& [c, x] : e->terms)
            t.emplace_back(c, deriv(i, x));
        r = sum(t);
    } else {
        GroupElement gi = GroupElement::gen(s_.rank, s_.comp[i]);
        Expr da = deriv(i, e->a), db = deriv(i, e->b);
        r = add(prod(da, act(gi, e->b)), prod(e->a, db));
    }
    keep_.push_back(e);
    deriv_memo_[key] = r;
    return r;
}

FreeElement ExprFactory::expand(const Expr& e)
{
    switch (e->op) {
    case ExprOp::Const:
        return FreeElement(e->c);
    case ExprOp::Gen:
        return FreeElement::generator(e->gen);
    default:
        break;
    }
    if (e->zero)
        return FreeElement();
    auto it = expand_memo_.find(e.get());
    if (it != expand_memo_.end())
        return it->second;
    FreeElement r;
    if (e->op == ExprOp::Sum) {
        for (const auto& [c, x] : e->terms)
            r += expand(x).scaled(c);
    } else
        r = multiply(expand(e->a), expand(e->b));
    keep_.push_back(e);
    expand_memo_[e.get()] = r;
    return r;
}

// ------------------------------------------------------------------ parser

int resolve_chain_label(const BraidedSpace& s, const std::string& item)
{
    int k = s.index_of(item);
    if (k < 0)
        k = s.index_of("x" + item);
    if (k < 0)
        throw std::invalid_argument("unknown generator '" + item + "' in iterated adjoint");
    return k;
}

namespace {

struct ExprParser {
    const std::string& s;
    ExprFactory& f;
    const ParseContext& ctx;
    size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg)
    {
        throw std::invalid_argument("parse error at position " + std::to_string(pos) + ": " + msg);
    }
    void skip()
    {
        while (pos < s.size() && std::isspace((unsigned char)s[pos]))
            ++pos;
    }
    bool peek(char c)
    {
        skip();
        return pos < s.size() && s[pos] == c;
    }
    bool eat(char c)
    {
        if (peek(c)) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c)
    {
        if (!eat(c))
            fail(std::string("expected '") + c + "'");
    }

    Expr top()
    {
        Expr lhs = expr();
        if (eat('=')) {
            Expr rhs = expr();
            lhs = f.sub(lhs, rhs);
        }
        skip();
        if (pos != s.size())
            fail("trailing input");
        return lhs;
    }
    Expr expr()
    {
        Expr r = term();
        while (true) {
            if (eat('+'))
                r = f.add(r, term());
            else if (eat('-'))
                r = f.sub(r, term());
            else
                return r;
        }
    }
    Expr term()
    {
        Expr r = unary();
        while (true) {
            if (eat('*'))
                r = f.prod(r, unary());
            else if (eat('/')) {
                size_t at = pos;
                Expr d = unary();
                if (d->zero) {
                    pos = at;
                    fail("division by zero");
                }
                if (d->op != ExprOp::Const) {
                    pos = at;
                    fail("division is only by scalars");
                }
                r = f.scale(d->c.inv(), r);
            } else
                return r;
        }
    }
    Expr unary()
    {
        if (eat('-'))
            return f.scale(Scalar(-1), unary());
        if (eat('+'))
            return unary();
        return power();
    }
    Expr power()
    {
        Expr b = atom();
        if (eat('^')) {
            bool neg = eat('-');
            skip();
            size_t st = pos;
            while (pos < s.size() && std::isdigit((unsigned char)s[pos]))
                ++pos;
            if (st == pos)
                fail("expected integer exponent");
            long e = std::stol(s.substr(st, pos - st));
            if (neg) {
                if (b->op != ExprOp::Const)
                    fail("negative exponent of a non-scalar");
                return f.constant(b->c.pow(-e));
            }
            if (b->op == ExprOp::Const)
                return f.constant(b->c.pow(e));
            if (b->zero)
                return e == 0 ? f.constant(Scalar(1)) : b;
            return f.power(b, (unsigned)e);
        }
        return b;
    }
    std::string ident()
    {
        size_t st = pos;
        while (pos < s.size() && (std::isalnum((unsigned char)s[pos]) || s[pos] == '_'))
            ++pos;
        return s.substr(st, pos - st);
    }
    Expr generator_expr(int k)
    {
        auto it = ctx.overrides.find(f.space().labels[k]);
        return it != ctx.overrides.end() ? it->second : f.gen(k);
    }
    Expr atom()
    {
        skip();
        if (pos >= s.size())
            fail("unexpected end of input");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            Expr r = expr();
            expect(')');
            return r;
        }
        if (c == '[') {
            ++pos;
            Expr a = expr();
            expect(',');
            Expr b = expr();
            expect(']');
            return bracket_at(a, b);
        }
        if (std::isdigit((unsigned char)c)) {
            size_t st = pos;
            while (pos < s.size() && std::isdigit((unsigned char)s[pos]))
                ++pos;
            return f.constant(Scalar(mpq_class(mpz_class(s.substr(st, pos - st)))));
        }
        if (std::isalpha((unsigned char)c) || c == '_') {
            size_t st = pos;
            std::string name = ident();
            if (name == "x" && pos < s.size() && s[pos] == '{')
                return chain(st);
            if (name == "ad" && peek('(')) {
                expect('(');
                Expr a = expr();
                expect(')');
                expect('(');
                Expr b = expr();
                expect(')');
                return bracket_at(a, b);
            }
            return lookup(name, st);
        }
        fail(std::string("unexpected character '") + c + "'");
    }
    Expr bracket_at(const Expr& a, const Expr& b)
    {
        try {
            return f.bracket(a, b);
        } catch (const std::invalid_argument& e) {
            fail(e.what());
        }
    }
    Expr chain(size_t st)
    {
        expect('{');
        std::vector<std::string> items;
        std::string cur;
        while (pos < s.size() && s[pos] != '}') {
            if (s[pos] == ',') {
                items.push_back(cur);
                cur.clear();
            } else if (!std::isspace((unsigned char)s[pos]))
                cur += s[pos];
            ++pos;
        }
        if (pos >= s.size())
            fail("unterminated x{...}");
        ++pos;
        items.push_back(cur);
        if (items.size() < 2) {
            pos = st;
            fail("x{...} needs at least two generators");
        }
        std::vector<int> idx;
        for (const auto& it : items) {
            try {
                idx.push_back(resolve_chain_label(f.space(), it));
            } catch (const std::invalid_argument& e) {
                pos = st;
                fail(e.what());
            }
        }
        Expr e = generator_expr(idx.back());
        for (size_t k = idx.size() - 1; k-- > 0;)
            e = f.bracket(generator_expr(idx[k]), e);
        return e;
    }
    Expr lookup(const std::string& name, size_t st)
    {
        const BraidedSpace& sp = f.space();
        int k = sp.index_of(name);
        if (k >= 0)
            return generator_expr(k);
        auto it = ctx.names.find(name);
        if (it != ctx.names.end())
            return it->second;
        auto al = sp.aliases.find(name);
        if (al != sp.aliases.end())
            return f.constant(al->second);
        for (const auto& p : sp.params)
            if (p == name)
                return f.constant(Scalar::param(name));
        pos = st;
        fail("unknown identifier '" + name + "'");
    }
};

} // namespace

Expr parse_expr_dag(const std::string& text, ExprFactory& f, const ParseContext& ctx)
{
    ExprParser p{text, f, ctx};
    return p.top();
}

FreeElement parse_expr(const std::string& text, const BraidedSpace& s, const ParseContext& ctx)
{
    ExprFactory f(s);
    return f.expand(parse_expr_dag(text, f, ctx));
}

} // namespace pn
