#pragma once

#include "poly.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace pn {

struct PoleError : std::domain_error {
    using std::domain_error::domain_error;
};

// Element of Q(parameters): num/den, coprime, den monic (den of 1 is stored
// as an empty polynomial).
class Scalar {
public:
    Scalar() = default;
    Scalar(long c) : num_(mpq_class(c)) {}
    Scalar(const mpq_class& c) : num_(c) {}
    Scalar(const Poly& p) : num_(p) {}
    Scalar(const Poly& num, const Poly& den);   // normalizes
    static Scalar param(const std::string& name);

    const Poly& num() const { return num_; }
    Poly den() const { return den_.is_zero() ? Poly(1) : den_; }
    bool den_is_one() const { return den_.is_zero(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_.is_zero() && num_.is_one(); }
    bool is_constant() const { return den_.is_zero() && num_.is_constant(); }
    mpq_class constant_value() const { return num_.constant_value(); }
    // rough size used for pivot selection
    size_t weight() const { return num_.size() + den_.size(); }

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar inv() const;
    Scalar pow(long e) const;
    Scalar& operator+=(const Scalar& o) { *this = *this + o; return *this; }
    Scalar& operator-=(const Scalar& o) { *this = *this - o; return *this; }
    Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }
    Scalar& operator/=(const Scalar& o) { *this = *this / o; return *this; }
    bool operator==(const Scalar& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // parameters used, by interned index
    std::vector<int> support() const;

    std::string str() const;
    static Scalar parse(const std::string& text);

private:
    Poly num_;
    Poly den_;   // empty means 1
};

using Assignment = std::map<std::string, mpq_class>;

// Evaluate at a rational point; throws PoleError if the denominator vanishes
// and std::out_of_range if a parameter is missing.
mpq_class specialize(const Scalar& x, const Assignment& sigma);
std::vector<mpq_class> assignment_vector(const Assignment& sigma);
mpq_class specialize(const Scalar& x, const std::vector<mpq_class>& point);

std::string rational_str(const mpq_class& q);

} // namespace pn
