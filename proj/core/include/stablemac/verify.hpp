#pragma once

#include "stablemac/composition.hpp"
#include "stablemac/qt.hpp"

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

namespace stablemac {

struct CheckResult {
    std::string name;
    bool pass;
    std::string witness;  // failure details; empty when passing
};

struct SuiteReport {
    std::string suite;
    nlohmann::json params;
    std::vector<CheckResult> checks;

    bool pass() const;
    nlohmann::json to_json() const;
    std::string summary() const;  // one line per check
};

// Relation families of the finite Hecke algebra action, checked on Laurent
// monomial boxes.
SuiteReport verify_daha_relations(const std::vector<int>& ns, int box_lo, int box_hi);

// Fillings formula against the eigen-solve oracle, every composition with
// length <= max_len and size <= max_size (plus the triangular-support and
// divisibility side checks).
SuiteReport verify_oracle_vs_fillings(int max_len, int max_size);

// Valuation growth of E_{mu*0^m} against the projected stable limit.
SuiteReport verify_convergence(const std::vector<Composition>& mus, int m_max);

// Limit eigen-equations through both the truncation and the explicit
// weight-path route.
SuiteReport verify_eigen(int max_len, int max_size, int max_r);

// Limit intertwiner recursion phi_i E~_mu = (a_i - a_{i+1}) E~_{s_i mu}.
SuiteReport verify_intertwiner(int max_size);

// Lowering-operator projection identity on random split-(n-1) elements.
SuiteReport verify_projection(int max_n, int samples, unsigned seed);

// sigma-tilde proportionality and gamma scalars.
SuiteReport verify_gamma(int max_len, int max_size);

// Unitriangularity of the A family against the Hall-Littlewood basis.
SuiteReport verify_unitriangular(int max_deg);

// Weight-basis certificates for the listed (k, d) cells.
SuiteReport verify_basis(const std::vector<std::pair<int, int>>& cells);

// Predicted pair weights against direct truncated limit operators.
SuiteReport verify_pair_weights(int max_len_mu, int max_deg);

}  // namespace stablemac
