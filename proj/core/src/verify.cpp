#include "stablemac/verify.hpp"

#include "stablemac/almostsym.hpp"
#include "stablemac/daha.hpp"
#include "stablemac/fillings.hpp"
#include "stablemac/io.hpp"
#include "stablemac/stablelimit.hpp"
#include "stablemac/symfunc.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace stablemac {

bool SuiteReport::pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

nlohmann::json SuiteReport::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : checks) {
        nlohmann::json j{{"name", c.name}, {"status", c.pass ? "pass" : "fail"}};
        if (!c.witness.empty()) j["witness"] = c.witness;
        arr.push_back(std::move(j));
    }
    return {{"suite", suite}, {"params", params}, {"checks", arr},
            {"status", pass() ? "pass" : "fail"}};
}

std::string SuiteReport::summary() const {
    std::ostringstream out;
    for (const auto& c : checks) {
        out << (c.pass ? "[pass] " : "[FAIL] ") << c.name;
        if (!c.witness.empty()) out << " -- " << c.witness;
        out << "\n";
    }
    return out.str();
}

namespace {

std::vector<Composition> all_compositions(int max_len, int max_size) {
    std::vector<Composition> out;
    for (int n = 1; n <= max_len; ++n)
        for (int d = 0; d <= max_size; ++d)
            for (auto& c : compositions_of(d, n)) out.push_back(c);
    return out;
}

}  // namespace

SuiteReport verify_daha_relations(const std::vector<int>& ns, int box_lo, int box_hi) {
    SuiteReport rep;
    rep.suite = "daha-relations";
    rep.params = {{"n", ns}, {"box", {box_lo, box_hi}}};
    for (int n : ns) {
        auto rel = check_relations(n, box_lo, box_hi);
        for (const auto& r : rel)
            rep.checks.push_back({r.relation + " n=" + std::to_string(n), r.pass,
                                  r.counterexample});
    }
    return rep;
}

SuiteReport verify_oracle_vs_fillings(int max_len, int max_size) {
    SuiteReport rep;
    rep.suite = "oracle-vs-hhl";
    rep.params = {{"max_len", max_len}, {"max_size", max_size}};
    for (int n = 1; n <= max_len; ++n) {
        CheckResult agree{"fillings formula = eigen oracle, length " + std::to_string(n), true, ""};
        CheckResult tri{"triangular support, length " + std::to_string(n), true, ""};
        int count = 0;
        for (int d = 0; d <= max_size && agree.pass && tri.pass; ++d) {
            for (const auto& mu : compositions_of(d, n)) {
                XPoly fe = macdonald_e(mu);
                XPoly oe = macdonald_e_eigen(mu);
                ++count;
                if (!(fe == oe)) {
                    agree.pass = false;
                    agree.witness = "mu=" + comp_str(mu);
                    break;
                }
                if (!bruhat_support_ok(mu, oe)) {
                    tri.pass = false;
                    tri.witness = "mu=" + comp_str(mu);
                    break;
                }
            }
        }
        agree.name += " (" + std::to_string(count) + " compositions)";
        rep.checks.push_back(agree);
        rep.checks.push_back(tri);
    }
    // divisibility: all parts nonzero => x_1..x_n | E and
    // x_1 | T_1^{-1}..T_{r-1}^{-1} E_{mu*0^m}
    CheckResult divis{"row-one divisibility", true, ""};
    for (int n = 1; n <= std::min(max_len, 3) && divis.pass; ++n) {
        for (int d = n; d <= std::min(max_size, 4) && divis.pass; ++d) {
            for (const auto& mu : compositions_of(d, n)) {
                if (std::any_of(mu.begin(), mu.end(), [](int x) { return x == 0; })) continue;
                for (int m = 0; m <= 2 && divis.pass; ++m) {
                    XPoly e = macdonald_e(comp_pad_zeros(mu, m));
                    for (int r = 1; r <= n && divis.pass; ++r) {
                        XPoly g = e;
                        for (int j = r - 1; j >= 1; --j) g = act_demazure_t_inv(j, g);
                        for (const auto& [ex, c] : g.terms())
                            if (ex[0] < 1) {
                                divis.pass = false;
                                divis.witness = "mu=" + comp_str(mu) + " m=" + std::to_string(m) +
                                                " r=" + std::to_string(r);
                                break;
                            }
                    }
                }
                if (!divis.pass) break;
            }
        }
    }
    rep.checks.push_back(divis);
    return rep;
}

SuiteReport verify_convergence(const std::vector<Composition>& mus, int m_max) {
    SuiteReport rep;
    rep.suite = "convergence";
    rep.params = {{"m_max", m_max}};
    for (const auto& mu : mus) {
        auto r = convergence_witness(mu, m_max);
        std::ostringstream vals;
        for (size_t i = 0; i < r.valuations.size(); ++i) {
            if (i) vals << ",";
            vals << (r.valuations[i] ? std::to_string(*r.valuations[i]) : "inf");
        }
        bool ok = r.weakly_increasing && r.positive_from_m1;
        rep.checks.push_back({"valuations mu=" + comp_str(mu) + " -> [" + vals.str() + "]", ok,
                              ok ? "" : "monotonicity or positivity failed"});
    }
    return rep;
}

SuiteReport verify_eigen(int max_len, int max_size, int max_r) {
    SuiteReport rep;
    rep.suite = "eigen";
    rep.params = {{"max_len", max_len}, {"max_size", max_size}, {"max_r", max_r}};
    for (const auto& mu : all_compositions(max_len, max_size)) {
        AlmostSym e = stable_e(mu);
        std::vector<Qt> alpha = weight_alpha_tilde(mu);
        CheckResult chk{"eigen mu=" + comp_str(mu), true, ""};
        for (int r = 1; r <= max_r; ++r) {
            Qt a = r <= int(alpha.size()) ? alpha[r - 1] : Qt::zero();
            AlmostSym expect = (e * a).lower_split();
            AlmostSym lhs;
            try {
                lhs = limit_y(r, e);
            } catch (const std::exception& ex) {
                chk.pass = false;
                chk.witness = std::string("r=") + std::to_string(r) + ": " + ex.what();
                break;
            }
            if (!lhs.equal(expect)) {
                chk.pass = false;
                chk.witness = "truncation path disagrees at r=" + std::to_string(r);
                break;
            }
            AlmostSym fast = limit_y_weight_path(r, e, a);
            if (!fast.equal(expect)) {
                chk.pass = false;
                chk.witness = "weight path disagrees at r=" + std::to_string(r);
                break;
            }
        }
        rep.checks.push_back(std::move(chk));
    }
    return rep;
}

SuiteReport verify_intertwiner(int max_size) {
    SuiteReport rep;
    rep.suite = "intertwiner";
    rep.params = {{"max_size", max_size}};
    for (const auto& mu : all_compositions(3, max_size)) {
        for (int i = 1; i + 1 <= int(mu.size()); ++i) {
            if (mu[i - 1] <= mu[i]) continue;  // raising direction only
            Composition smu = mu;
            std::swap(smu[i - 1], smu[i]);
            CheckResult chk{"phi_" + std::to_string(i) + " mu=" + comp_str(mu), true, ""};
            try {
                AlmostSym e = stable_e(mu);
                AlmostSym target = stable_e(smu);
                std::vector<Qt> alpha = weight_alpha_tilde(mu);
                Qt factor = alpha[i - 1] - alpha[i];
                AlmostSym lhs = limit_intertwiner_phi(i, e);
                if (!lhs.equal((target * factor).lower_split())) {
                    chk.pass = false;
                    chk.witness = "recursion value mismatch";
                }
            } catch (const std::exception& ex) {
                chk.pass = false;
                chk.witness = ex.what();
            }
            rep.checks.push_back(std::move(chk));
        }
    }
    return rep;
}

SuiteReport verify_projection(int max_n, int samples, unsigned seed) {
    SuiteReport rep;
    rep.suite = "projection";
    rep.params = {{"max_n", max_n}, {"samples", samples}, {"seed", seed}};
    std::mt19937 rng(seed);
    auto rand_int = [&](int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    };
    int per_n = std::max(1, samples / max_n);
    for (int n = 1; n <= max_n; ++n) {
        CheckResult chk{"partial_minus(" + std::to_string(n) + ") identity on split " +
                            std::to_string(n - 1) + " (" + std::to_string(per_n) + " samples)",
                        true, ""};
        for (int s = 0; s < per_n && chk.pass; ++s) {
            AlmostSym f(n - 1);
            int terms = rand_int(1, 4);
            for (int tcount = 0; tcount < terms; ++tcount) {
                std::vector<int> e(n - 1);
                for (auto& x : e) x = rand_int(0, 3);
                auto parts = partitions_of(rand_int(0, 3));
                Partition lambda = parts[size_t(rand_int(0, int(parts.size()) - 1))];
                Qt c = Qt::monomial(Int(rand_int(-3, 3)), rand_int(-1, 2), rand_int(-1, 2));
                f.add_term({e, lambda}, c);
            }
            AlmostSym g = partial_minus(n, f);
            if (!g.equal(f)) {
                chk.pass = false;
                chk.witness = "sample " + std::to_string(s) + ": " + f.str();
            }
        }
        rep.checks.push_back(std::move(chk));
    }
    return rep;
}

SuiteReport verify_gamma(int max_len, int max_size) {
    SuiteReport rep;
    rep.suite = "gamma";
    rep.params = {{"max_len", max_len}, {"max_size", max_size}};
    for (int n = 1; n <= max_len; ++n) {
        CheckResult chk{"sigma-tilde proportionality, length " + std::to_string(n), true, ""};
        int count = 0;
        for (int d = 1; d <= max_size && chk.pass; ++d) {
            for (const auto& mu : compositions_of(d, n)) {
                if (sort_composition(mu).empty()) continue;
                ++count;
                try {
                    Qt g = gamma_mu(mu);
                    bool is_partition = true;
                    for (size_t i = 0; i + 1 < mu.size(); ++i)
                        if (mu[i] < mu[i + 1]) is_partition = false;
                    if (!mu.empty() && mu.back() == 0) is_partition = false;
                    if (is_partition && !g.is_one()) {
                        chk.pass = false;
                        chk.witness = "gamma != 1 for partition mu=" + comp_str(mu);
                        break;
                    }
                } catch (const std::exception& ex) {
                    chk.pass = false;
                    chk.witness = "mu=" + comp_str(mu) + ": " + ex.what();
                    break;
                }
            }
        }
        chk.name += " (" + std::to_string(count) + " compositions)";
        rep.checks.push_back(std::move(chk));
    }
    return rep;
}

SuiteReport verify_unitriangular(int max_deg) {
    SuiteReport rep;
    rep.suite = "unitriangular";
    rep.params = {{"max_deg", max_deg}};
    for (int d = 0; d <= max_deg; ++d) {
        CheckResult chk{"A family unitriangular in HLP, degree " + std::to_string(d), true, ""};
        for (const auto& lambda : partitions_of(d)) {
            const SymFunc& hlp = a_function_hlp(lambda);
            if (!hlp.coeff(lambda).is_one()) {
                chk.pass = false;
                chk.witness = "diagonal != 1 at " + lambda.str();
                break;
            }
            for (const auto& [nu, c] : hlp.terms()) {
                if (nu == lambda) continue;
                if (!dominance_less(nu, lambda)) {
                    chk.pass = false;
                    chk.witness = nu.str() + " not below " + lambda.str();
                    break;
                }
            }
            if (!chk.pass) break;
        }
        rep.checks.push_back(std::move(chk));
    }
    return rep;
}

SuiteReport verify_basis(const std::vector<std::pair<int, int>>& cells) {
    SuiteReport rep;
    rep.suite = "basis";
    rep.params = nlohmann::json::array();
    for (const auto& [k, d] : cells) {
        rep.params.push_back({k, d});
        BasisCertificate cert = basis_certificate(k, d);
        std::ostringstream name;
        name << "certificate k=" << k << " d=" << d << " (pairs " << cert.pairs.size()
             << ", dim " << cert.dim << ", rank " << cert.rank << ")";
        rep.checks.push_back({name.str(), cert.pass(), cert.witness});
    }
    return rep;
}

SuiteReport verify_pair_weights(int max_len_mu, int max_deg) {
    SuiteReport rep;
    rep.suite = "pair-weights";
    rep.params = {{"max_len_mu", max_len_mu}, {"max_deg", max_deg}};
    for (int d = 0; d <= max_deg; ++d) {
        for (const auto& p : admissible_pairs(max_len_mu, d)) {
            CheckResult chk{"weight " + p.str(), true, ""};
            std::string err = pair_weight_direct_check(p, 1);
            if (!err.empty()) {
                chk.pass = false;
                chk.witness = err;
            }
            rep.checks.push_back(std::move(chk));
        }
    }
    // the (0|2) discrepancy: computed resolution, documented here
    {
        CheckResult chk{"pair (0|2) resolution", true, ""};
        try {
            IndexedPair p{{0}, Partition({2})};
            AlmostSym e = stable_e_pair(p);
            AlmostSym a2 = AlmostSym::from_symfunc(a_function(Partition({2})));
            bool same_as_a2 = e.equal(a2);
            AlmostSym y2 = limit_y(2, e);
            bool annihilated = y2.is_zero();
            if (!annihilated) {
                chk.pass = false;
                chk.witness = "Y_2 does not annihilate E_(0|2): " + y2.lower_split().str();
            } else {
                chk.witness = std::string("computed: E_(0|2) ") +
                              (same_as_a2 ? "equals" : "differs from") +
                              " A_(2) = E_(empty|2); direct Y_2 application gives 0, so its "
                              "weight is (0, 0, ...) as the lowering-operator lemma predicts; "
                              "the printed weight (0, q^2 t, 0, ...) does not hold for this "
                              "element";
            }
        } catch (const std::exception& ex) {
            chk.pass = false;
            chk.witness = ex.what();
        }
        rep.checks.push_back(std::move(chk));
    }
    return rep;
}

}  // namespace stablemac
