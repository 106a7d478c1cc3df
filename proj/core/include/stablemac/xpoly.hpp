#pragma once

#include "stablemac/composition.hpp"
#include "stablemac/qt.hpp"

#include <map>
#include <string>
#include <vector>

namespace stablemac {

// Sparse Laurent polynomial in x_1..x_nvars over Q(q,t). Exponent vectors
// have length nvars; negative exponents are allowed. No zero coefficients
// are stored.
class XPoly {
public:
    using Expo = std::vector<int>;
    using Terms = std::map<Expo, Qt>;

    XPoly() : nvars_(0) {}
    explicit XPoly(int nvars) : nvars_(nvars) {}
    static XPoly constant(int nvars, const Qt& c);
    static XPoly monomial(int nvars, const Expo& e, const Qt& c = Qt::one());
    // x^mu as a polynomial in length(mu) variables.
    static XPoly from_composition(const Composition& mu);

    int nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Expo& e, const Qt& c);
    Qt coeff(const Expo& e) const;

    XPoly operator+(const XPoly& o) const;
    XPoly operator-(const XPoly& o) const;
    XPoly operator-() const;
    XPoly operator*(const XPoly& o) const;
    XPoly operator*(const Qt& c) const;
    bool operator==(const XPoly& o) const;
    bool operator!=(const XPoly& o) const { return !(*this == o); }

    // View the same polynomial in n >= nvars variables.
    XPoly widen(int n) const;

    bool is_homogeneous(int* degree_out = nullptr) const;
    // Max total degree; 0 for the zero polynomial.
    int degree() const;

    // True when invariant under every swap x_j <-> x_{j+1} for lo <= j < hi
    // (1-based variable indices).
    bool symmetric_in_range(int lo, int hi) const;

    // Minimum t-adic valuation over all coefficients; nullopt for zero.
    std::optional<int> min_t_valuation() const;

    std::string str() const;

private:
    int nvars_;
    Terms terms_;
};

// Elementary operator actions on XPoly (1-based indices).
XPoly act_swap(int i, const XPoly& f);               // s_i
XPoly act_demazure_t(int i, const XPoly& f);         // T_i
XPoly act_demazure_t_inv(int i, const XPoly& f);     // T_i^{-1} = t^{-1}(T_i - 1 + t)
XPoly act_mult_x(int i, const XPoly& f);             // X_i
XPoly act_rotation(const XPoly& f);                  // w_n: f -> f(q^{-1}x_n, x_1, ..)
XPoly act_rotation_inv(const XPoly& f);              // w_n^{-1}: f -> f(x_2, .., x_n, q x_1)

// Terms of T_i applied to the single monomial c*x^e, appended to out.
// Shared by the polynomial and almost-symmetric actions.
void demazure_t_on_monomial(int i, const XPoly::Expo& e, const Qt& c,
                            std::vector<std::pair<XPoly::Expo, Qt>>& out);

// Atoms of operator words over the standard representation.
struct OpAtom {
    enum Kind { T, Tinv, X, S, Omega, OmegaInv, Y, Yinv } kind;
    int index;  // 1-based; ignored for Omega/OmegaInv
};

// Applies a word right-to-left. Y/Yinv atoms are rejected here; the DAHA
// layer expands them first. Malformed words (indices out of range) throw
// std::invalid_argument.
XPoly compose_ops(const std::vector<OpAtom>& word, const XPoly& f);

// Support test against the order used for triangularity: every monomial
// x^nu of p with nu != mu must satisfy sort-with-zeros(nu) strictly below
// sort-with-zeros(mu) in dominance, or have equal sorted parts and precede
// mu in the rearrangement-class order. p must be homogeneous of degree |mu|
// in length(mu) variables.
bool bruhat_support_ok(const Composition& mu, const XPoly& p);

}  // namespace stablemac
