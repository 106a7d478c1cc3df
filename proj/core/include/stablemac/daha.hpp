#pragma once

#include "stablemac/composition.hpp"
#include "stablemac/qt.hpp"
#include "stablemac/xpoly.hpp"

#include <functional>
#include <string>
#include <vector>

namespace stablemac {

// Cherednik operator Y_i on polynomials in n variables, realized by the word
// t^{-(i-1)} T_{i-1}...T_1 w_n^{-1} T_{n-1}^{-1}...T_i^{-1}.
XPoly act_cherednik_y(int i, const XPoly& f);
XPoly act_cherednik_y_inv(int i, const XPoly& f);

// Evaluates an operator word right-to-left; Y/Yinv atoms are expanded into
// their defining words over T, T^{-1} and the rotation.
XPoly apply_word(const std::vector<OpAtom>& word, const XPoly& f);

// beta_mu(i) = #{j <= i : mu_j <= mu_i} + #{j > i : mu_i > mu_j}, 1-based.
int beta_count(const Composition& mu, int i);

// Weight of E_{mu*0^m}: alpha(i) = q^{mu_i} t^{1-beta(i)}, length l(mu)+m.
std::vector<Qt> weight_alpha(const Composition& mu, int m);

// Limit weight: t^{l(mu)} alpha(i) where mu_i != 0, else 0; length l(mu).
// Appending trailing zeros to mu does not change the nonzero entries.
std::vector<Qt> weight_alpha_tilde(const Composition& mu);

// --- relation checking over finite monomial boxes ---

// Pluggable T-operator (used by the negative controls); everything else
// (T^{-1}, Y) is derived from it.
using TOperator = std::function<XPoly(int, const XPoly&)>;

struct RelationReport {
    std::string relation;
    int n;
    int box_lo, box_hi;
    bool pass;
    std::string counterexample;  // "monomial; lhs; rhs" when failing
};

std::vector<std::string> relation_family_names();

// Checks the named relation families (all of them when families is empty) on
// every Laurent monomial with exponents in [box_lo, box_hi]^n. A non-null T
// replaces the Demazure-Lusztig operator everywhere it enters.
std::vector<RelationReport> check_relations(int n, int box_lo, int box_hi,
                                            const std::vector<std::string>& families = {},
                                            const TOperator& T = nullptr);

// --- eigen-solve oracle ---

// The unique homogeneous degree-|mu| polynomial with x^mu coefficient 1
// satisfying Y_i E = alpha(i) E for all i, found by exact kernel
// intersection over the full monomial component. Throws std::runtime_error
// if the joint kernel is not 1-dimensional.
XPoly macdonald_e_eigen(const Composition& mu);

// Intertwiner phi_i = T_i Y_i - Y_i T_i. Computes both stated forms
// (the commutator and T_i(Y_i - Y_{i+1}) + (1-t) Y_{i+1}) and throws
// std::runtime_error if they disagree.
XPoly intertwiner_phi(int i, const XPoly& f);

// Kernel of a matrix over Q(q,t): returns a basis of {c : M c = 0}.
// Fraction-free elimination after clearing row denominators.
std::vector<std::vector<Qt>> qt_matrix_kernel(const std::vector<std::vector<Qt>>& m);

// Rank of a matrix over Q(q,t).
int qt_matrix_rank(const std::vector<std::vector<Qt>>& m);

}  // namespace stablemac
