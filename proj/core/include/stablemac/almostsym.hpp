#pragma once

#include "stablemac/composition.hpp"
#include "stablemac/qt.hpp"
#include "stablemac/symfunc.hpp"
#include "stablemac/xpoly.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace stablemac {

// An almost-symmetric function: a finite sum of
//   c * x_1^{a_1} ... x_k^{a_k} * m_lambda[x_{k+1} + x_{k+2} + ...]
// with split index k. The split is a presentation detail; value equality
// compares after raising both sides to a common split.
class AlmostSym {
public:
    using Key = std::pair<std::vector<int>, Partition>;  // (x-exponents, tail)
    using Terms = std::map<Key, Qt>;

    AlmostSym() : split_(0) {}
    explicit AlmostSym(int split) : split_(split) {}
    static AlmostSym zero(int split = 0) { return AlmostSym(split); }
    static AlmostSym constant(const Qt& c);
    // Embed a polynomial: split = nvars, empty tails.
    static AlmostSym from_xpoly(const XPoly& p);
    // Embed a symmetric function at split 0 (converted to the m basis).
    static AlmostSym from_symfunc(const SymFunc& f);
    static AlmostSym term(int split, std::vector<int> xexp, Partition tail, const Qt& c);

    int split() const { return split_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const Key& k, const Qt& c);

    // Total degree: max |a| + |lambda|; 0 for zero.
    int degree() const;

    AlmostSym operator+(const AlmostSym& o) const;  // splits unified
    AlmostSym operator-(const AlmostSym& o) const;
    AlmostSym operator*(const Qt& c) const;
    AlmostSym operator*(const AlmostSym& o) const;

    // Same element re-expressed with the tail starting at x_{k'+1}.
    AlmostSym raise_split(int k) const;
    // Canonical minimal-split presentation.
    AlmostSym lower_split() const;

    // Substitute the tail alphabet by {x_{split+1},...,x_n}; requires
    // n >= split (throws std::invalid_argument otherwise).
    XPoly project_pi(int n) const;

    // Keep exactly the terms whose x_1-exponent is positive (after raising
    // the split to at least 1).
    AlmostSym rho() const;

    AlmostSym act_T(int i) const;
    AlmostSym act_T_inv(int i) const;
    AlmostSym act_X(int i) const;

    // Value equality (presentation independent).
    bool equal(const AlmostSym& o) const;

    // The symmetric part when the element lies in Lambda (split lowers to 0);
    // throws std::invalid_argument otherwise.
    SymFunc to_symfunc() const;

    std::string str() const;  // "split=k; [a1,..,ak] (x) m[lambda]: coeff; ..."

private:
    int split_;
    Terms terms_;
};

// F[x_1+...+x_j + X_tail] as an almost-symmetric element with split j.
AlmostSym split_alphabet(const SymFunc& f, int j);

// Monomial symmetric polynomial m_lambda in the variables x_{lo}..x_{hi}
// of an n-variable polynomial ring (1-based, inclusive; zero when
// length(lambda) exceeds the variable count).
XPoly monomial_symmetric_xpoly(const Partition& lambda, int n, int lo, int hi);

}  // namespace stablemac
