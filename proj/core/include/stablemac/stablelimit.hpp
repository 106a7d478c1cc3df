#pragma once

#include "stablemac/almostsym.hpp"
#include "stablemac/composition.hpp"
#include "stablemac/qt.hpp"
#include "stablemac/symfunc.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace stablemac {

// Raised when the truncation sequence for a limit operator fails to
// stabilize within the allowed window.
class NonConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct LimitYOptions {
    int n0 = 0;     // first truncation level; 0 = split + degree + 1
    int n_max = 0;  // last level to try; 0 = n0 + 8
};

// Limit Cherednik operator, first index: the stable limit of
// t^n * rho . Y_1^(n) . pi_n. The truncation sequence must either become
// exactly stationary or pass the projection-agreement and increasing
// t-adic valuation test; otherwise NonConvergenceError is thrown.
AlmostSym limit_y1(const AlmostSym& f, const LimitYOptions& opt = {});

// Limit Cherednik operator, general index, by the Hecke recursion
// Y_{i+1} = t^{-1} T_i Y_i T_i from limit_y1.
AlmostSym limit_y(int i, const AlmostSym& f, const LimitYOptions& opt = {});

// Weight-vector fast path: alpha_r * (T_{r-1}..T_1 rho T_1^{-1}..T_{r-1}^{-1}) f.
// Valid when f is a weight vector with r-th weight entry alpha_r; used as a
// cross-check against the truncation path.
AlmostSym limit_y_weight_path(int r, const AlmostSym& f, const Qt& alpha_r);

// Limit intertwiner phi_i = T_i Y_i - Y_i T_i on almost-symmetric functions,
// via the truncation operators. Both stated operator forms are evaluated;
// disagreement throws std::runtime_error.
AlmostSym limit_intertwiner_phi(int i, const AlmostSym& f, const LimitYOptions& opt = {});

// Lowering operator: per term x^a m_lambda[tail] with split exactly k,
// replaces the x_k power by a Jing operator applied to the tail, reseated on
// the alphabet starting at x_k. Projection onto split k-1.
AlmostSym partial_minus(int k, const AlmostSym& f);

// Stable-limit symmetrization: the composite of partial_minus from the
// current split down to 1; lands in Lambda.
SymFunc sigma_tilde(const AlmostSym& f);

// A_lambda = sigma_tilde(stable_e(lambda)); cached together with its
// Hall-Littlewood expansion.
const SymFunc& a_function(const Partition& lambda);
const SymFunc& a_function_hlp(const Partition& lambda);

// The proportionality scalar in sigma_tilde(stable_e(mu)) = gamma * A_sort(mu).
// Exact proportionality is asserted; violations throw std::runtime_error.
Qt gamma_mu(const Composition& mu);

struct IndexedPair {
    Composition mu;
    Partition lambda;

    std::string str() const;  // "(mu|lambda)"
};

// Basis-admissible pairs: mu empty or with nonzero last part.
bool pair_admissible(const IndexedPair& p);

// Stable-limit nonsymmetric Macdonald function E_(mu|lambda), an element of
// the split-l(mu) part, homogeneous of degree |mu| + |lambda|.
AlmostSym stable_e_pair(const IndexedPair& p);

// Predicted weight: (alpha~_{mu*lambda}(1..l(mu)), 0, 0, ...).
std::vector<Qt> pair_weight(const IndexedPair& p);

// Direct check of pair_weight by truncated limit operators applied to
// stable_e_pair(p), for indices 1..l(mu)+extra. Returns mismatch description
// or empty string on agreement.
std::string pair_weight_direct_check(const IndexedPair& p, int extra = 1);

struct BasisCertificate {
    int k, d;
    std::vector<std::string> pairs;
    int dim;
    int rank;
    bool count_ok;
    bool rank_ok;
    bool sigma_independent;  // the symmetrization argument
    std::string witness;     // failure details
    bool pass() const { return count_ok && rank_ok && sigma_independent; }
};

// Desk-scale certificate that the admissible pairs with l(mu) <= k and
// degree exactly d span the degree-d component of the split-k ring with the
// right count and full rank.
BasisCertificate basis_certificate(int k, int d);

// All admissible pairs with l(mu) <= k and |mu| + |lambda| = d.
std::vector<IndexedPair> admissible_pairs(int k, int d);

}  // namespace stablemac
