#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <string>
#include <utility>

namespace stablemac {

using Int = boost::multiprecision::cpp_int;

// Sparse polynomial in q and t with arbitrary-precision integer coefficients
// and non-negative exponents. Keys are (q-exponent, t-exponent).
class QtPoly {
public:
    using Key = std::pair<int, int>;
    using Terms = std::map<Key, Int>;

    QtPoly() = default;
    explicit QtPoly(Int c);
    static QtPoly monomial(Int c, int qe, int te);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_monomial() const { return terms_.size() == 1; }
    const Terms& terms() const { return terms_; }

    int deg_q() const;
    int deg_t() const;
    // Lowest t-exponent over all terms; polynomial must be nonzero.
    int low_t() const;

    QtPoly operator-() const;
    QtPoly operator+(const QtPoly& o) const;
    QtPoly operator-(const QtPoly& o) const;
    QtPoly operator*(const QtPoly& o) const;
    bool operator==(const QtPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const QtPoly& o) const { return !(*this == o); }
    bool operator<(const QtPoly& o) const { return terms_ < o.terms_; }

    // Exact division; throws std::logic_error if the division is not exact.
    static QtPoly div_exact(const QtPoly& a, const QtPoly& b);
    // gcd over Z[q,t], computed by content/primitive-part recursion through
    // Z[t][q]. The result's sign is normalized so its print-leading
    // coefficient is positive.
    static QtPoly gcd(const QtPoly& a, const QtPoly& b);

    // Sign of the first term in canonical print order (total degree
    // ascending, then q-exponent descending). Zero polynomial gives 0.
    int lead_sign() const;

    // Canonical text form, e.g. "1 - t", "q^2 - q*t - q*t^2 + t^3".
    std::string str() const;

    void add_term(const Key& k, const Int& c);

private:
    Terms terms_;
};

// An element of the field Q(q,t): canonical fraction of integer-coefficient
// polynomials in q and t. Canonical form: gcd(num, den) = 1, den nonzero with
// positive print-leading coefficient, zero stored as 0/1. Inputs written with
// negative powers of q or t are cleared into this form on construction.
class Qt {
public:
    Qt() : num_(), den_(Int(1)) {}
    Qt(const QtPoly& num, const QtPoly& den);
    explicit Qt(long n) : num_(Int(n)), den_(Int(1)) { if (n == 0) num_ = QtPoly(); }
    explicit Qt(Int n) : num_(std::move(n)), den_(Int(1)) { normalize(); }

    static Qt zero() { return Qt(); }
    static Qt one() { return Qt(1); }
    static Qt integer(long n) { return Qt(n); }
    static Qt q_pow(int e);
    static Qt t_pow(int e);
    static Qt q() { return q_pow(1); }
    static Qt t() { return t_pow(1); }
    // c * q^qe * t^te with possibly negative exponents.
    static Qt monomial(Int c, int qe, int te);

    const QtPoly& num() const { return num_; }
    const QtPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    Qt operator+(const Qt& o) const;
    Qt operator-(const Qt& o) const;
    Qt operator-() const;
    Qt operator*(const Qt& o) const;
    // Throws std::domain_error on division by zero.
    Qt operator/(const Qt& o) const;
    Qt& operator+=(const Qt& o) { *this = *this + o; return *this; }
    Qt& operator-=(const Qt& o) { *this = *this - o; return *this; }
    Qt& operator*=(const Qt& o) { *this = *this * o; return *this; }
    Qt& operator/=(const Qt& o) { *this = *this / o; return *this; }

    bool operator==(const Qt& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Qt& o) const { return !(*this == o); }
    bool operator<(const Qt& o) const;

    Qt inverse() const;

    // Valuation at t = 0 on Q(q)(t): lowest t-degree of the numerator minus
    // lowest t-degree of the denominator. std::nullopt encodes +infinity
    // (the zero scalar).
    std::optional<int> t_adic_valuation() const;

    // Canonical text form: "num/den" with each side parenthesized when it
    // has more than one term; "/den" omitted when den = 1.
    std::string str() const;

private:
    void normalize();

    QtPoly num_;
    QtPoly den_;
};

enum class QtOp { add, sub, mul, div };
Qt qt_arith(const Qt& a, const Qt& b, QtOp op);

}  // namespace stablemac
