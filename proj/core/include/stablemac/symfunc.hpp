#pragma once

#include "stablemac/composition.hpp"
#include "stablemac/qt.hpp"

#include <map>
#include <string>
#include <vector>

namespace stablemac {

enum class SFBasis { m, p, h, e, hlp };

std::string basis_name(SFBasis b);

// An element of the ring of symmetric functions over Q(q,t), stored in a
// named basis as a finite sum of basis elements indexed by partitions.
class SymFunc {
public:
    using Terms = std::map<Partition, Qt>;

    SymFunc() : basis_(SFBasis::m) {}
    explicit SymFunc(SFBasis b) : basis_(b) {}
    static SymFunc zero(SFBasis b = SFBasis::m) { return SymFunc(b); }
    static SymFunc one(SFBasis b = SFBasis::m);
    static SymFunc basis_element(SFBasis b, const Partition& lambda);

    SFBasis basis() const { return basis_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const Partition& lambda, const Qt& c);
    Qt coeff(const Partition& lambda) const;

    // Max |lambda| over stored terms (0 for zero element).
    int degree() const;

    SymFunc operator+(const SymFunc& o) const;  // o converted if bases differ
    SymFunc operator-(const SymFunc& o) const;
    SymFunc operator*(const Qt& c) const;
    SymFunc operator*(const SymFunc& o) const;
    bool equals(const SymFunc& o) const;  // basis-independent comparison

    // Same element expressed in the target basis; round trips are exact.
    SymFunc convert(SFBasis target) const;

    std::string str() const;  // e.g. "m: [2]: 1 - t; [1,1]: ..."

private:
    SFBasis basis_;
    Terms terms_;
};

// A formal alphabet: an integer combination of monomials in q, t, z plus at
// most one infinite alphabet symbol X scaled by such monomials. Plethysm
// substitutes p_k[A] = sum of c * q^(k a) t^(k b) z^(k c) (times p_k for the
// X part).
struct Alphabet {
    struct Term {
        long coeff;
        int qe, te, ze;
        bool times_x;  // term is coeff * q^qe * t^te * z^ze * X
    };
    std::vector<Term> terms;

    static Alphabet X();                       // the plain infinite alphabet
    static Alphabet scaled_x(long c, int qe, int te, int ze);
    Alphabet& add(long c, int qe, int te, int ze, bool times_x = false);
};

// Laurent series in z with symmetric-function coefficients.
using ZSeries = std::map<int, SymFunc>;

// Plethysm f[A]; exact, no truncation (the z-support of the result is finite
// for any f and alphabet). Result coefficients are in the p basis.
ZSeries plethysm(const SymFunc& f, const Alphabet& a);

// Convenience for z-free alphabets.
SymFunc plethysm_simple(const SymFunc& f, const Alphabet& a);

// Exp[A] truncated at z-order N: sum_{n<=N} of the degree-n complete
// homogeneous piece h_n[A], as a z-series.
ZSeries plethystic_exp(const Alphabet& a, int order);

// Jing creation operator: B_n(F) = <z^n> F[X - z^{-1}] Exp[(1-t) z X].
SymFunc jing_b(int n, const SymFunc& f);

// Hall-Littlewood P_lambda = B_{lambda_1} ... B_{lambda_l}(1); cached.
SymFunc hall_littlewood_p(const Partition& lambda);

// Expansion of f in the Hall-Littlewood basis. Throws std::runtime_error if
// the triangular extraction fails (which would falsify the basis property at
// that degree).
SymFunc expand_in_hlp(const SymFunc& f);

// h_n and e_n as p-basis elements (Newton recurrences); n >= 0.
SymFunc h_in_p(int n);
SymFunc e_in_p(int n);

// Product of a monomial-basis symmetric function with the power sum p_r.
SymFunc mul_m_by_pk(const SymFunc& f_m, int r);

}  // namespace stablemac
