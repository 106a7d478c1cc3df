#include "stablemac/daha.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace stablemac {

namespace {

XPoly default_T(int i, const XPoly& f) { return act_demazure_t(i, f); }

// T^{-1} derived from a pluggable T by the quadratic relation.
XPoly t_inv_from(const TOperator& T, int i, const XPoly& f) {
    XPoly tf = T(i, f);
    return (tf - f * (Qt::one() - Qt::t())) * Qt::t_pow(-1);
}

XPoly cherednik_y_from(const TOperator& T, int i, const XPoly& f) {
    int n = f.nvars();
    if (i < 1 || i > n) throw std::invalid_argument("cherednik_y: index out of range");
    XPoly g = f;
    for (int j = i; j <= n - 1; ++j) g = t_inv_from(T, j, g);
    g = act_rotation_inv(g);
    for (int j = 1; j <= i - 1; ++j) g = T(j, g);
    return g * Qt::t_pow(-(i - 1));
}

}  // namespace

XPoly act_cherednik_y(int i, const XPoly& f) {
    return cherednik_y_from(default_T, i, f);
}

XPoly act_cherednik_y_inv(int i, const XPoly& f) {
    // inverse word: t^{i-1} T_i ... T_{n-1} w_n T_1^{-1} ... T_{i-1}^{-1}
    int n = f.nvars();
    if (i < 1 || i > n) throw std::invalid_argument("act_cherednik_y_inv: index out of range");
    XPoly g = f;
    for (int j = i - 1; j >= 1; --j) g = act_demazure_t_inv(j, g);
    g = act_rotation(g);
    for (int j = n - 1; j >= i; --j) g = act_demazure_t(j, g);
    return g * Qt::t_pow(i - 1);
}

XPoly apply_word(const std::vector<OpAtom>& word, const XPoly& f) {
    XPoly g = f;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        switch (it->kind) {
            case OpAtom::Y: g = act_cherednik_y(it->index, g); break;
            case OpAtom::Yinv: g = act_cherednik_y_inv(it->index, g); break;
            default: g = compose_ops({*it}, g); break;
        }
    }
    return g;
}

int beta_count(const Composition& mu, int i) {
    int n = int(mu.size());
    if (i < 1 || i > n) throw std::invalid_argument("beta_count: index out of range");
    int b = 0;
    for (int j = 1; j <= i; ++j)
        if (mu[j - 1] <= mu[i - 1]) ++b;
    for (int j = i + 1; j <= n; ++j)
        if (mu[i - 1] > mu[j - 1]) ++b;
    return b;
}

std::vector<Qt> weight_alpha(const Composition& mu, int m) {
    Composition padded = comp_pad_zeros(mu, m);
    int n = int(padded.size());
    std::vector<Qt> a(n);
    for (int i = 1; i <= n; ++i)
        a[i - 1] = Qt::monomial(Int(1), padded[i - 1], 1 - beta_count(padded, i));
    return a;
}

std::vector<Qt> weight_alpha_tilde(const Composition& mu) {
    int n = int(mu.size());
    std::vector<Qt> base = weight_alpha(mu, 0);
    std::vector<Qt> a(n, Qt::zero());
    for (int i = 0; i < n; ++i)
        if (mu[i] != 0) a[i] = base[i] * Qt::t_pow(n);
    return a;
}

std::vector<std::string> relation_family_names() {
    return {"t-quadratic", "t-braid",      "t-commute",  "tx-conjugation",
            "tx-commute",  "xx-commute",   "ty-conjugation", "ty-commute",
            "yy-commute",  "y1t1x1-braid", "y1-cycle"};
}

namespace {

struct RelCase {
    std::string label;  // index details appended to the family name
    std::function<XPoly(const XPoly&)> lhs, rhs;
};

std::vector<RelCase> relation_cases(const std::string& family, int n, const TOperator& T) {
    auto Tinv = [&T](int i, const XPoly& f) { return t_inv_from(T, i, f); };
    auto Y = [&T](int i, const XPoly& f) { return cherednik_y_from(T, i, f); };
    auto X = [](int i, const XPoly& f) { return act_mult_x(i, f); };
    std::vector<RelCase> cases;
    if (family == "t-quadratic") {
        for (int i = 1; i < n; ++i)
            cases.push_back({"i=" + std::to_string(i),
                             [=](const XPoly& f) { return T(i, T(i, f)); },
                             [=](const XPoly& f) {
                                 return T(i, f) * (Qt::one() - Qt::t()) + f * Qt::t();
                             }});
    } else if (family == "t-braid") {
        for (int i = 1; i + 1 < n; ++i)
            cases.push_back({"i=" + std::to_string(i),
                             [=](const XPoly& f) { return T(i, T(i + 1, T(i, f))); },
                             [=](const XPoly& f) { return T(i + 1, T(i, T(i + 1, f))); }});
    } else if (family == "t-commute") {
        for (int i = 1; i < n; ++i)
            for (int j = i + 2; j < n; ++j)
                cases.push_back({"i=" + std::to_string(i) + ",j=" + std::to_string(j),
                                 [=](const XPoly& f) { return T(i, T(j, f)); },
                                 [=](const XPoly& f) { return T(j, T(i, f)); }});
    } else if (family == "tx-conjugation") {
        for (int i = 1; i < n; ++i)
            cases.push_back({"i=" + std::to_string(i),
                             [=](const XPoly& f) { return Tinv(i, X(i, Tinv(i, f))); },
                             [=](const XPoly& f) { return X(i + 1, f) * Qt::t_pow(-1); }});
    } else if (family == "tx-commute") {
        for (int i = 1; i < n; ++i)
            for (int j = 1; j <= n; ++j) {
                if (j == i || j == i + 1) continue;
                cases.push_back({"i=" + std::to_string(i) + ",j=" + std::to_string(j),
                                 [=](const XPoly& f) { return T(i, X(j, f)); },
                                 [=](const XPoly& f) { return X(j, T(i, f)); }});
            }
    } else if (family == "xx-commute") {
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                cases.push_back({"i=" + std::to_string(i) + ",j=" + std::to_string(j),
                                 [=](const XPoly& f) { return X(i, X(j, f)); },
                                 [=](const XPoly& f) { return X(j, X(i, f)); }});
    } else if (family == "ty-conjugation") {
        for (int i = 1; i < n; ++i)
            cases.push_back({"i=" + std::to_string(i),
                             [=](const XPoly& f) { return T(i, Y(i, T(i, f))); },
                             [=](const XPoly& f) { return Y(i + 1, f) * Qt::t(); }});
    } else if (family == "ty-commute") {
        for (int i = 1; i < n; ++i)
            for (int j = 1; j <= n; ++j) {
                if (j == i || j == i + 1) continue;
                cases.push_back({"i=" + std::to_string(i) + ",j=" + std::to_string(j),
                                 [=](const XPoly& f) { return T(i, Y(j, f)); },
                                 [=](const XPoly& f) { return Y(j, T(i, f)); }});
            }
    } else if (family == "yy-commute") {
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                cases.push_back({"i=" + std::to_string(i) + ",j=" + std::to_string(j),
                                 [=](const XPoly& f) { return Y(i, Y(j, f)); },
                                 [=](const XPoly& f) { return Y(j, Y(i, f)); }});
    } else if (family == "y1t1x1-braid") {
        if (n >= 2)
            cases.push_back({"",
                             [=](const XPoly& f) { return Y(1, T(1, X(1, f))); },
                             [=](const XPoly& f) { return X(2, Y(1, T(1, f))); }});
    } else if (family == "y1-cycle") {
        cases.push_back({"",
                         [=](const XPoly& f) {
                             XPoly g = f;
                             for (int i = n; i >= 1; --i) g = X(i, g);
                             return Y(1, g);
                         },
                         [=](const XPoly& f) {
                             XPoly g = Y(1, f);
                             for (int i = n; i >= 1; --i) g = X(i, g);
                             return g * Qt::q();
                         }});
    } else {
        throw std::invalid_argument("relation_cases: unknown family " + family);
    }
    return cases;
}

}  // namespace

std::vector<RelationReport> check_relations(int n, int box_lo, int box_hi,
                                            const std::vector<std::string>& families,
                                            const TOperator& T) {
    if (n < 2) throw std::invalid_argument("check_relations: n must be >= 2");
    if (box_lo > box_hi) throw std::invalid_argument("check_relations: empty box");
    TOperator top = T ? T : default_T;
    std::vector<std::string> fams = families.empty() ? relation_family_names() : families;

    // enumerate box monomials once
    std::vector<XPoly::Expo> box;
    XPoly::Expo cur(n, box_lo);
    for (;;) {
        box.push_back(cur);
        int p = 0;
        while (p < n && cur[p] == box_hi) cur[p++] = box_lo;
        if (p == n) break;
        cur[p]++;
    }

    std::vector<RelationReport> reports;
    for (const auto& fam : fams) {
        RelationReport rep{fam, n, box_lo, box_hi, true, ""};
        auto cases = relation_cases(fam, n, top);
        for (const auto& rc : cases) {
            if (!rep.pass) break;
            for (const auto& e : box) {
                XPoly f = XPoly::monomial(n, e);
                XPoly l = rc.lhs(f), r = rc.rhs(f);
                if (!(l == r)) {
                    rep.pass = false;
                    std::ostringstream os;
                    os << (rc.label.empty() ? "" : rc.label + "; ") << "monomial "
                       << f.str() << "; lhs " << l.str() << "; rhs " << r.str();
                    rep.counterexample = os.str();
                    break;
                }
            }
        }
        reports.push_back(std::move(rep));
    }
    return reports;
}

// --- exact linear algebra ---

namespace {

// Clears denominators row-wise, returning a QtPoly matrix with the same
// kernel.
std::vector<std::vector<QtPoly>> clear_rows(const std::vector<std::vector<Qt>>& m) {
    std::vector<std::vector<QtPoly>> a;
    a.reserve(m.size());
    for (const auto& row : m) {
        QtPoly lcm(Int(1));
        for (const auto& x : row) {
            if (x.is_zero()) continue;
            QtPoly g = QtPoly::gcd(lcm, x.den());
            lcm = lcm * QtPoly::div_exact(x.den(), g);
        }
        std::vector<QtPoly> r;
        r.reserve(row.size());
        for (const auto& x : row) {
            if (x.is_zero())
                r.emplace_back();
            else
                r.push_back(x.num() * QtPoly::div_exact(lcm, x.den()));
        }
        a.push_back(std::move(r));
    }
    return a;
}

// Fraction-free (Bareiss) row echelon. Returns pivot column per pivot row;
// rows of a are modified in place.
std::vector<int> bareiss_echelon(std::vector<std::vector<QtPoly>>& a) {
    int rows = int(a.size());
    int cols = rows ? int(a[0].size()) : 0;
    std::vector<int> pivot_cols;
    QtPoly prev(Int(1));
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        // pick the nonzero pivot with fewest terms
        int best = -1;
        size_t best_sz = SIZE_MAX;
        for (int i = r; i < rows; ++i) {
            if (a[i][c].is_zero()) continue;
            size_t sz = a[i][c].terms().size();
            if (sz < best_sz) {
                best = i;
                best_sz = sz;
            }
        }
        if (best < 0) continue;
        std::swap(a[r], a[best]);
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j) {
                QtPoly v = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                a[i][j] = v.is_zero() ? QtPoly() : QtPoly::div_exact(v, prev);
            }
            a[i][c] = QtPoly();
        }
        prev = a[r][c];
        pivot_cols.push_back(c);
        ++r;
    }
    return pivot_cols;
}

}  // namespace

std::vector<std::vector<Qt>> qt_matrix_kernel(const std::vector<std::vector<Qt>>& m) {
    if (m.empty()) return {};
    int cols = int(m[0].size());
    auto a = clear_rows(m);
    auto pivots = bareiss_echelon(a);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;

    std::vector<std::vector<Qt>> kernel;
    for (int fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<Qt> v(cols, Qt::zero());
        v[fc] = Qt::one();
        // back substitution over the echelon rows
        for (int pr = int(pivots.size()) - 1; pr >= 0; --pr) {
            int pc = pivots[pr];
            if (pc > fc) continue;
            Qt s = Qt::zero();
            for (int j = pc + 1; j < cols; ++j) {
                if (v[j].is_zero() || a[pr][j].is_zero()) continue;
                s += Qt(a[pr][j], QtPoly(Int(1))) * v[j];
            }
            v[pc] = -s / Qt(a[pr][pc], QtPoly(Int(1)));
        }
        kernel.push_back(std::move(v));
    }
    return kernel;
}

int qt_matrix_rank(const std::vector<std::vector<Qt>>& m) {
    if (m.empty()) return 0;
    auto a = clear_rows(m);
    return int(bareiss_echelon(a).size());
}

XPoly macdonald_e_eigen(const Composition& mu) {
    int n = int(mu.size());
    if (n < 1) throw std::invalid_argument("macdonald_e_eigen: empty composition");
    for (int x : mu)
        if (x < 0) throw std::invalid_argument("macdonald_e_eigen: negative part");
    int d = comp_size(mu);
    std::vector<Composition> monos = compositions_of(d, n);
    std::vector<Qt> alpha = weight_alpha(mu, 0);

    // Weight distinctness across the component: together with the exact
    // eigen-verification below this pins the answer up to the leading
    // normalization.
    std::vector<std::vector<Qt>> weights;
    weights.reserve(monos.size());
    for (const auto& nu : monos) weights.push_back(weight_alpha(nu, 0));
    for (size_t j = 0; j < monos.size(); ++j) {
        if (monos[j] == mu) continue;
        bool distinct = false;
        for (int i = 0; i < n && !distinct; ++i)
            if (!(weights[j][i] == alpha[i])) distinct = true;
        if (!distinct)
            throw std::runtime_error("macdonald_e_eigen: weight collision for mu=" +
                                     comp_str(mu) + " at " + comp_str(monos[j]));
    }

    // Sparse matrices of the Y_i on the monomial basis of the component.
    int dim = int(monos.size());
    std::map<Composition, int> index;
    for (int j = 0; j < dim; ++j) index[monos[j]] = j;
    // columns[i][j]: list of (row, coeff) for Y_{i+1} x^{monos[j]}
    std::vector<std::vector<std::vector<std::pair<int, Qt>>>> columns(
        n, std::vector<std::vector<std::pair<int, Qt>>>(dim));
    std::vector<std::vector<Qt>> diag(n, std::vector<Qt>(dim, Qt::zero()));
    std::vector<std::set<int>> parents(dim);  // nu -> kappa support edges
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < dim; ++j) {
            XPoly img = act_cherednik_y(i + 1, XPoly::from_composition(monos[j]));
            for (const auto& [e, c] : img.terms()) {
                auto it = index.find(e);
                if (it == index.end())
                    throw std::runtime_error("macdonald_e_eigen: operator left the component");
                columns[i][j].emplace_back(it->second, c);
                if (it->second != j)
                    parents[it->second].insert(j);
                else
                    diag[i][j] = c;
            }
        }
    }

    // The operators act triangularly; recover a compatible total order.
    std::vector<int> indeg(dim, 0);
    for (int k = 0; k < dim; ++k) indeg[k] = int(parents[k].size());
    std::vector<std::vector<int>> children(dim);
    for (int k = 0; k < dim; ++k)
        for (int p : parents[k]) children[p].push_back(k);
    std::vector<int> topo;
    std::vector<int> queue;
    for (int k = 0; k < dim; ++k)
        if (indeg[k] == 0) queue.push_back(k);
    while (!queue.empty()) {
        int v0 = queue.back();
        queue.pop_back();
        topo.push_back(v0);
        for (int c : children[v0])
            if (--indeg[c] == 0) queue.push_back(c);
    }
    if (int(topo.size()) != dim)
        throw std::runtime_error("macdonald_e_eigen: operator support is not triangular for mu=" +
                                 comp_str(mu));

    // Back substitution: for kappa != mu pick an operator separating the
    // weights and solve for the coefficient from the rows above it.
    std::vector<Qt> coeff(dim, Qt::zero());
    // incoming contributions per row, accumulated as parents are resolved
    std::vector<std::vector<Qt>> row_acc(n, std::vector<Qt>(dim, Qt::zero()));
    int mu_idx = index.at(mu);
    for (int v0 : topo) {
        if (v0 == mu_idx) {
            coeff[v0] = Qt::one();
        } else {
            int op = -1;
            for (int i = 0; i < n; ++i)
                if (!(diag[i][v0] == alpha[i])) {
                    op = i;
                    break;
                }
            if (op < 0)
                throw std::runtime_error(
                    "macdonald_e_eigen: no separating operator for mu=" + comp_str(mu));
            coeff[v0] = -row_acc[op][v0] / (diag[op][v0] - alpha[op]);
        }
        if (coeff[v0].is_zero()) continue;
        for (int i = 0; i < n; ++i)
            for (const auto& [row, c] : columns[i][v0])
                if (row != v0) row_acc[i][row] += c * coeff[v0];
    }

    XPoly e(n);
    for (int j = 0; j < dim; ++j)
        if (!coeff[j].is_zero()) e.add_term(monos[j], coeff[j]);
    Qt lead = e.coeff(mu);
    if (lead.is_zero() || !lead.is_one())
        throw std::runtime_error("macdonald_e_eigen: leading coefficient failure for mu=" +
                                 comp_str(mu));

    // exact verification of the defining eigen-equations
    for (int i = 1; i <= n; ++i)
        if (!(act_cherednik_y(i, e) == e * alpha[i - 1]))
            throw std::runtime_error("macdonald_e_eigen: eigen-equation failed for mu=" +
                                     comp_str(mu) + " at i=" + std::to_string(i));
    return e;
}

XPoly intertwiner_phi(int i, const XPoly& f) {
    if (i < 1 || i >= f.nvars()) throw std::invalid_argument("intertwiner_phi: index out of range");
    XPoly a = act_demazure_t(i, act_cherednik_y(i, f)) -
              act_cherednik_y(i, act_demazure_t(i, f));
    XPoly yi = act_cherednik_y(i, f), yi1 = act_cherednik_y(i + 1, f);
    XPoly b = act_demazure_t(i, yi - yi1) + yi1 * (Qt::one() - Qt::t());
    if (!(a == b)) throw std::runtime_error("intertwiner_phi: the two operator forms disagree");
    return a;
}

}  // namespace stablemac
