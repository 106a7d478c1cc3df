#include "stablemac/stablelimit.hpp"

#include "stablemac/daha.hpp"
#include "stablemac/fillings.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace stablemac {

namespace {

XPoly rho_poly(const XPoly& f) {
    XPoly out(f.nvars());
    for (const auto& [e, c] : f.terms())
        if (!e.empty() && e[0] > 0) out.add_term(e, c);
    return out;
}

// Lift an n-variable polynomial that is symmetric in a variable suffix back
// to an almost-symmetric element (minimal split), or nullopt when no suffix
// of length >= 1 is symmetric and the polynomial involves x_n.
AlmostSym lift_to_almost_sym(const XPoly& g) {
    int n = g.nvars();
    if (g.is_zero()) return AlmostSym::zero(0);
    // minimal k with g symmetric in x_{k+1}..x_n
    int k = n;
    while (k > 0 && g.symmetric_in_range(k, n)) --k;
    AlmostSym out(k);
    for (const auto& [e, c] : g.terms()) {
        std::vector<int> suffix(e.begin() + k, e.end());
        std::vector<int> sorted = suffix;
        std::sort(sorted.rbegin(), sorted.rend());
        if (suffix != sorted) continue;  // keep only the canonical orbit representative
        std::vector<int> prefix(e.begin(), e.begin() + k);
        while (!sorted.empty() && sorted.back() == 0) sorted.pop_back();
        out.add_term({prefix, Partition(sorted)}, c);
    }
    if (!(out.project_pi(n) == g))
        throw std::logic_error("lift_to_almost_sym: inconsistent symmetric decomposition");
    return out.lower_split();
}

}  // namespace

namespace {

// Minimum t-adic valuation over the coefficients; nullopt for zero.
std::optional<int> min_valuation(const AlmostSym& f) {
    std::optional<int> v;
    for (const auto& [key, c] : f.terms()) {
        auto cv = c.t_adic_valuation();
        if (cv && (!v || *cv < *v)) v = cv;
    }
    return v;
}

}  // namespace

AlmostSym limit_y1(const AlmostSym& f, const LimitYOptions& opt) {
    if (f.is_zero()) return AlmostSym::zero(0);
    AlmostSym fl = f.lower_split();
    int n0 = opt.n0 > 0 ? opt.n0 : fl.split() + fl.degree() + 1;
    if (n0 <= fl.split()) n0 = fl.split() + 1;
    int n_max = opt.n_max > 0 ? opt.n_max : n0 + 9;

    auto truncate = [&](int n) {
        XPoly fn = fl.project_pi(n);
        XPoly yn = act_cherednik_y(1, fn);
        return lift_to_almost_sym(rho_poly(yn) * Qt::t_pow(n));
    };

    // The truncations converge t-adically with a tail that is an exact
    // polynomial in t^n (the n-dependence of the finite weights enters
    // through powers of t^n). Solve for the constant term of that tail and
    // accept only when the candidate reproduces the next truncation level
    // exactly and the removed tail has strictly positive valuation.
    std::vector<AlmostSym> h;
    h.reserve(size_t(n_max - n0 + 2));
    auto level = [&](int i) -> const AlmostSym& {
        while (int(h.size()) <= i) h.push_back(truncate(n0 + int(h.size())));
        return h[i];
    };

    for (int i = 0; n0 + i + 1 <= n_max; ++i) {
        int n = n0 + i;
        // stationary
        if (level(i).equal(level(i + 1))) return level(i).lower_split();
        if (n0 + i + 2 > n_max) break;
        // single-mode tail: h_n = c + t^n w
        {
            AlmostSym d1 = level(i + 1) - level(i);
            Qt scale = (Qt::t_pow(n) * (Qt::t() - Qt::one())).inverse();
            AlmostSym w = d1 * scale;
            AlmostSym c = level(i) - w * Qt::t_pow(n);
            AlmostSym pred = c + w * Qt::t_pow(n + 2);
            if (pred.equal(level(i + 2))) {
                auto tail_val = min_valuation(level(i) - c);
                if (tail_val && *tail_val >= 1) return c.lower_split();
            }
        }
        if (n0 + i + 3 > n_max) break;
        // two-mode tail: h_n = c + t^n w1 + t^{2n} w2
        {
            AlmostSym d1 = level(i + 1) - level(i);
            AlmostSym d2 = level(i + 2) - level(i + 1);
            Qt a = Qt::t_pow(n) * (Qt::t() - Qt::one());
            Qt b = Qt::t_pow(2 * n) * (Qt::t_pow(2) - Qt::one());
            Qt cc = Qt::t_pow(n + 1) * (Qt::t() - Qt::one());
            Qt dd = Qt::t_pow(2 * n + 2) * (Qt::t_pow(2) - Qt::one());
            Qt det = a * dd - b * cc;
            AlmostSym w1 = (d1 * dd - d2 * b) * det.inverse();
            AlmostSym w2 = (d2 * a - d1 * cc) * det.inverse();
            AlmostSym c = level(i) - w1 * Qt::t_pow(n) - w2 * Qt::t_pow(2 * n);
            AlmostSym pred =
                c + w1 * Qt::t_pow(n + 3) + w2 * Qt::t_pow(2 * (n + 3));
            if (pred.equal(level(i + 3))) {
                auto tail_val = min_valuation(level(i) - c);
                if (tail_val && *tail_val >= 1) return c.lower_split();
            }
        }
    }
    throw NonConvergenceError("limit_y1: no stabilization by n = " + std::to_string(n_max));
}

AlmostSym limit_y(int i, const AlmostSym& f, const LimitYOptions& opt) {
    if (i < 1) throw std::invalid_argument("limit_y: index must be >= 1");
    AlmostSym g = f;
    for (int j = i - 1; j >= 1; --j) g = g.act_T(j);
    g = limit_y1(g, opt);
    for (int j = 1; j <= i - 1; ++j) g = g.act_T(j);
    return (g * Qt::t_pow(-(i - 1))).lower_split();
}

AlmostSym limit_y_weight_path(int r, const AlmostSym& f, const Qt& alpha_r) {
    if (r < 1) throw std::invalid_argument("limit_y_weight_path: index must be >= 1");
    if (alpha_r.is_zero()) return AlmostSym::zero(0);
    AlmostSym g = f;
    for (int j = r - 1; j >= 1; --j) g = g.act_T_inv(j);
    g = g.rho();
    for (int j = 1; j <= r - 1; ++j) g = g.act_T(j);
    return (g * alpha_r).lower_split();
}

AlmostSym limit_intertwiner_phi(int i, const AlmostSym& f, const LimitYOptions& opt) {
    if (i < 1) throw std::invalid_argument("limit_intertwiner_phi: bad index");
    AlmostSym yi = limit_y(i, f, opt);
    AlmostSym yi1 = limit_y(i + 1, f, opt);
    AlmostSym a = yi.act_T(i) - limit_y(i, f.act_T(i), opt);
    AlmostSym b = (yi - yi1).act_T(i) + yi1 * (Qt::one() - Qt::t());
    if (!a.equal(b))
        throw std::runtime_error("limit_intertwiner_phi: the two operator forms disagree");
    return a.lower_split();
}

AlmostSym partial_minus(int k, const AlmostSym& f) {
    if (k < 1) throw std::invalid_argument("partial_minus: k must be >= 1");
    if (f.split() > k) throw std::invalid_argument("partial_minus: split exceeds k");
    AlmostSym g = f.raise_split(k);
    AlmostSym out(k - 1);
    for (const auto& [key, c] : g.terms()) {
        const auto& [a, lambda] = key;
        int xk = a[k - 1];
        SymFunc b = jing_b(xk, SymFunc::basis_element(SFBasis::m, lambda));
        std::vector<int> prefix(a.begin(), a.end() - 1);
        // reseat B on the alphabet x_k + x_{k+1} + ...: tail of split k-1
        for (const auto& [nu, cb] : b.terms()) out.add_term({prefix, nu}, c * cb);
    }
    return out;
}

SymFunc sigma_tilde(const AlmostSym& f) {
    AlmostSym g = f;
    for (int k = g.split(); k >= 1; --k) g = partial_minus(k, g);
    return g.to_symfunc();
}

namespace {
struct AEntry {
    SymFunc m_form;
    SymFunc hlp_form;
};
const AEntry& a_entry(const Partition& lambda) {
    static std::map<Partition, AEntry> cache;
    auto it = cache.find(lambda);
    if (it != cache.end()) return it->second;
    SymFunc a = sigma_tilde(stable_e(lambda.parts()));
    SymFunc hlp = expand_in_hlp(a);
    return cache.emplace(lambda, AEntry{std::move(a), std::move(hlp)}).first->second;
}
}  // namespace

const SymFunc& a_function(const Partition& lambda) { return a_entry(lambda).m_form; }
const SymFunc& a_function_hlp(const Partition& lambda) { return a_entry(lambda).hlp_form; }

Qt gamma_mu(const Composition& mu) {
    SymFunc s = sigma_tilde(stable_e(mu));
    Partition sorted = sort_composition(mu);
    const SymFunc& a = a_function(sorted);
    if (s.is_zero() || a.is_zero())
        throw std::runtime_error("gamma_mu: symmetrization vanished for mu=" + comp_str(mu));
    // ratio from the leading term, then exact proportionality check
    auto it = std::prev(a.terms().end());
    Qt g = s.coeff(it->first) / it->second;
    SymFunc diff = s - a * g;
    if (!diff.is_zero())
        throw std::runtime_error("gamma_mu: not proportional for mu=" + comp_str(mu));
    if (g.is_zero()) throw std::runtime_error("gamma_mu: zero scalar for mu=" + comp_str(mu));
    return g;
}

std::string IndexedPair::str() const {
    std::string m;
    if (mu.empty()) {
        m = "-";
    } else {
        for (size_t i = 0; i < mu.size(); ++i) {
            if (i) m += ",";
            m += std::to_string(mu[i]);
        }
    }
    std::string l;
    if (lambda.empty()) {
        l = "-";
    } else {
        for (int i = 0; i < lambda.length(); ++i) {
            if (i) l += ",";
            l += std::to_string(lambda[i]);
        }
    }
    return "(" + m + "|" + l + ")";
}

bool pair_admissible(const IndexedPair& p) {
    return p.mu.empty() || p.mu.back() != 0;
}

AlmostSym stable_e_pair(const IndexedPair& p) {
    int lm = int(p.mu.size()), ll = p.lambda.length();
    Composition full = p.mu;
    for (int i = 0; i < ll; ++i) full.push_back(p.lambda[i]);
    AlmostSym e = stable_e(full);
    for (int k = lm + ll; k >= lm + 1; --k) e = partial_minus(k, e);
    return e.lower_split();
}

std::vector<Qt> pair_weight(const IndexedPair& p) {
    Composition full = p.mu;
    for (int i = 0; i < p.lambda.length(); ++i) full.push_back(p.lambda[i]);
    std::vector<Qt> tilde = weight_alpha_tilde(full);
    tilde.resize(p.mu.size(), Qt::zero());
    return tilde;
}

std::string pair_weight_direct_check(const IndexedPair& p, int extra) {
    AlmostSym e = stable_e_pair(p);
    std::vector<Qt> predicted = pair_weight(p);
    int upto = int(p.mu.size()) + extra;
    for (int i = 1; i <= upto; ++i) {
        Qt alpha = i <= int(predicted.size()) ? predicted[i - 1] : Qt::zero();
        AlmostSym lhs = limit_y(i, e);
        AlmostSym rhs = (e * alpha).lower_split();
        if (!lhs.equal(rhs)) {
            std::ostringstream os;
            os << "pair " << p.str() << " index " << i << ": limit operator gives "
               << lhs.str() << " but predicted weight entry is " << alpha.str();
            return os.str();
        }
    }
    return "";
}

std::vector<IndexedPair> admissible_pairs(int k, int d) {
    std::vector<IndexedPair> out;
    for (int s = 0; s <= d; ++s) {
        // compositions mu with l(mu) <= k, |mu| = s, last part nonzero
        std::vector<Composition> mus;
        if (s == 0) {
            mus.push_back({});
        } else {
            for (int len = 1; len <= k; ++len)
                for (const auto& c : compositions_of(s, len))
                    if (c.back() != 0) mus.push_back(c);
        }
        for (const auto& mu : mus)
            for (const auto& lambda : partitions_of(d - s))
                out.push_back({mu, lambda});
    }
    return out;
}

BasisCertificate basis_certificate(int k, int d) {
    BasisCertificate cert;
    cert.k = k;
    cert.d = d;
    auto pairs = admissible_pairs(k, d);
    for (const auto& p : pairs) cert.pairs.push_back(p.str());

    // dimension of the degree-d component of the split-k ring
    int dim = 0;
    for (int s = 0; s <= d; ++s) {
        int monos = int(compositions_of(s, k).size());
        dim += monos * int(partitions_of(d - s).size());
    }
    cert.dim = dim;
    cert.count_ok = int(pairs.size()) == dim;
    if (!cert.count_ok) {
        cert.witness = "pair count " + std::to_string(pairs.size()) + " != dim " +
                       std::to_string(dim);
    }

    // coefficient matrix against the monomial (x) m spanning set at split k
    std::map<AlmostSym::Key, int> row_index;
    std::vector<std::vector<Qt>> cols;
    for (const auto& p : pairs) {
        AlmostSym e = stable_e_pair(p).raise_split(k);
        std::vector<std::pair<AlmostSym::Key, Qt>> entries(e.terms().begin(), e.terms().end());
        for (const auto& [key, c] : entries)
            row_index.emplace(key, int(row_index.size()));
        cols.emplace_back();
        cols.back().resize(row_index.size(), Qt::zero());
        for (const auto& [key, c] : entries) cols.back()[row_index.at(key)] = c;
    }
    std::vector<std::vector<Qt>> mat(row_index.size(),
                                     std::vector<Qt>(pairs.size(), Qt::zero()));
    for (size_t j = 0; j < cols.size(); ++j)
        for (size_t i = 0; i < cols[j].size(); ++i) mat[i][j] = cols[j][i];
    cert.rank = qt_matrix_rank(mat);
    cert.rank_ok = cert.rank == int(pairs.size());
    if (!cert.rank_ok && cert.witness.empty())
        cert.witness = "rank " + std::to_string(cert.rank) + " < pair count " +
                       std::to_string(pairs.size());

    // symmetrization argument: within a fixed mu, the sorted concatenations
    // are distinct partitions and the gamma scalars are nonzero
    cert.sigma_independent = true;
    std::map<Composition, std::vector<Partition>> by_mu;
    for (const auto& p : pairs) {
        Composition full = p.mu;
        for (int i = 0; i < p.lambda.length(); ++i) full.push_back(p.lambda[i]);
        try {
            Qt g = gamma_mu(full);
            (void)g;  // gamma_mu throws when zero or non-proportional
        } catch (const std::exception& ex) {
            cert.sigma_independent = false;
            if (cert.witness.empty()) cert.witness = ex.what();
            break;
        }
        by_mu[p.mu].push_back(sort_composition(full));
    }
    if (cert.sigma_independent) {
        for (auto& [mu, sorts] : by_mu) {
            std::sort(sorts.begin(), sorts.end());
            if (std::adjacent_find(sorts.begin(), sorts.end()) != sorts.end()) {
                cert.sigma_independent = false;
                if (cert.witness.empty())
                    cert.witness = "repeated sorted concatenation under mu=" + comp_str(mu);
                break;
            }
        }
    }
    return cert;
}

}  // namespace stablemac
