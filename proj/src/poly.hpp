#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace pn {

// Parameter names are interned process-wide; a Monomial stores exponents by
// interned index.
constexpr int kMaxVars = 16;

int var_index(const std::string& name);       // interns on first use
int find_var(const std::string& name);        // -1 if unknown
std::string var_name(int idx);
int var_count();

struct Monomial {
    std::array<uint16_t, kMaxVars> e{};
    uint32_t deg = 0;

    bool is_one() const { return deg == 0; }
    static Monomial var(int idx, unsigned power = 1);
    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    Monomial operator/(const Monomial& o) const;   // requires divides
    static Monomial gcd(const Monomial& a, const Monomial& b);
    bool operator==(const Monomial& o) const { return deg == o.deg && e == o.e; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }
};

// graded lexicographic: true if a > b
bool deglex_greater(const Monomial& a, const Monomial& b);

struct Term {
    Monomial m;
    mpq_class c;
};

// Multivariate polynomial over Q. Terms are kept sorted in decreasing deglex
// order with no zero coefficients.
class Poly {
public:
    Poly() = default;
    explicit Poly(const mpq_class& c);
    explicit Poly(long c) : Poly(mpq_class(c)) {}
    static Poly var(int idx, unsigned power = 1);
    static Poly monomial(const Monomial& m, const mpq_class& c);

    bool is_zero() const { return t_.empty(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].m.is_one()); }
    bool is_one() const { return t_.size() == 1 && t_[0].m.is_one() && t_[0].c == 1; }
    bool is_monomial() const { return t_.size() == 1; }
    const std::vector<Term>& terms() const { return t_; }
    size_t size() const { return t_.size(); }
    const Term& lead() const { return t_.front(); }
    mpq_class constant_value() const;   // requires is_constant

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly scaled(const mpq_class& c) const;
    Poly times_monomial(const Monomial& m, const mpq_class& c) const;
    Poly& operator+=(const Poly& o) { *this = *this + o; return *this; }
    Poly& operator-=(const Poly& o) { *this = *this - o; return *this; }
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // Exact division; returns false if o does not divide *this.
    bool divide_exact(const Poly& o, Poly& quotient) const;
    Poly div_exact(const Poly& o) const;   // throws if not exact

    Monomial min_monomial() const;         // componentwise minimum exponents
    Poly monic() const;                    // leading coefficient 1
    unsigned degree_in(int v) const;
    bool has_var(int v) const;
    // coefficient of v^k, as a polynomial without v
    Poly coeff_in(int v, unsigned k) const;
    unsigned total_degree() const { return t_.empty() ? 0 : t_.front().m.deg; }

    mpq_class eval(const std::vector<mpq_class>& point) const;   // indexed by var index
    std::string str() const;

    static Poly from_sorted(std::vector<Term> t) { Poly p; p.t_ = std::move(t); return p; }

private:
    std::vector<Term> t_;
    void normalize();
};

// Monic gcd over Q[vars]; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

} // namespace pn
