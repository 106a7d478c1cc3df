#include "stablemac/fillings.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace stablemac {

Diagram::Diagram(Composition mu) : mu_(std::move(mu)) {
    for (int x : mu_)
        if (x < 0) throw std::invalid_argument("Diagram: negative part");
    for (int i = 1; i <= int(mu_.size()); ++i)
        for (int j = 1; j <= mu_[i - 1]; ++j) {
            index_[{i, j}] = int(cells_.size());
            cells_.emplace_back(i, j);
        }
}

int Diagram::cell_index(int col, int row) const {
    auto it = index_.find({col, row});
    return it == index_.end() ? -1 : it->second;
}

int Diagram::arm(int col, int row) const {
    int a = 0;
    int mi = mu_[col - 1];
    for (int k = 1; k < col; ++k)
        if (row <= mu_[k - 1] && mu_[k - 1] <= mi) ++a;
    for (int k = col + 1; k <= ncols(); ++k)
        if (row <= mu_[k - 1] + 1 && mu_[k - 1] + 1 <= mi) ++a;
    return a;
}

int Filling::label(int col, int row) const {
    if (row == 0) return col;
    int idx = diagram_->cell_index(col, row);
    if (idx < 0) throw std::invalid_argument("Filling::label: no such cell");
    return labels_[idx];
}

int Filling::count_label(int a) const {
    return int(std::count(labels_.begin(), labels_.end(), a));
}

int Filling::maj() const {
    int m = 0;
    for (const auto& [col, row] : diagram_->cells())
        if (label(col, row) > label(col, row - 1)) m += diagram_->leg(col, row) + 1;
    return m;
}

int Filling::coinv() const {
    const Composition& mu = diagram_->shape();
    int n = diagram_->ncols();
    // strict cyclic increase along (upper-left, lower-right, third)
    auto cyclic = [](int a, int b, int c) {
        return (a < b && b < c) || (b < c && c < a) || (c < a && a < b);
    };
    int count = 0;
    for (int i = 1; i <= n; ++i) {
        for (int k = i + 1; k <= n; ++k) {
            if (mu[i - 1] <= mu[k - 1]) {
                // third cell above the lower-right one
                for (int j = 1; j <= mu[i - 1]; ++j)
                    if (cyclic(label(i, j), label(k, j - 1), label(k, j))) ++count;
            } else {
                // third cell left of the lower-right one
                for (int j = 1; j <= mu[k - 1] + 1; ++j)
                    if (cyclic(label(i, j), label(k, j - 1), label(i, j - 1))) ++count;
            }
        }
    }
    return count;
}

Qt Filling::gamma(bool limit_mode) const {
    Qt g = Qt::one();
    Qt one_minus_t = Qt::one() - Qt::t();
    for (const auto& [col, row] : diagram_->cells()) {
        if (label(col, row) == label(col, row - 1)) continue;
        if (limit_mode && row == 1) {
            g *= one_minus_t;
        } else {
            int L = diagram_->leg(col, row), A = diagram_->arm(col, row);
            Qt den = Qt::one() - Qt::monomial(Int(1), -(L + 1), A + 1);
            g *= one_minus_t / den;
        }
    }
    return g;
}

std::string Filling::str() const {
    std::ostringstream out;
    for (size_t idx = 0; idx < labels_.size(); ++idx) {
        const auto& [col, row] = diagram_->cells()[idx];
        if (idx) out << " ";
        out << "(" << col << "," << row << "):" << labels_[idx];
    }
    if (labels_.empty()) out << "(empty)";
    out << " maj=" << maj() << " coinv=" << coinv()
        << " gamma=" << gamma(false).str();
    return out.str();
}

void enumerate_fillings(const Composition& mu, int alphabet,
                        const std::map<int, int>& label_counts,
                        const std::function<void(const Filling&)>& fn) {
    if (alphabet < 0) throw std::invalid_argument("enumerate_fillings: bad alphabet");
    for (const auto& [lab, cnt] : label_counts)
        if (lab < 1 || lab > alphabet || cnt < 0)
            throw std::invalid_argument("enumerate_fillings: bad constraint");
    Diagram dg(mu);
    int ncells = dg.ncells();
    const Composition& shape = dg.shape();

    // remaining required labels (for pruning)
    std::map<int, int> remaining = label_counts;
    int required_total = 0;
    for (const auto& [lab, cnt] : remaining) required_total += cnt;

    std::vector<int> labels(ncells, 0);

    // For each cell, the list of earlier cells it must differ from:
    // same row to the left, and the row above to the left (attack partners
    // whose later member is this cell). Basement partners are label values.
    struct Partner {
        std::vector<int> cell_idx;   // indices into labels
        std::vector<int> basements;  // fixed basement labels
    };
    // Each attacking pair is checked once, when its later cell (in
    // column-major assignment order) is labelled.
    std::vector<Partner> partners(ncells);
    for (int idx = 0; idx < ncells; ++idx) {
        const auto& [i, j] = dg.cells()[idx];
        for (int k = 1; k < i; ++k) {
            // same row, earlier column
            if (shape[k - 1] >= j) partners[idx].cell_idx.push_back(dg.cell_index(k, j));
            // (k, j+1) attacks (i, j) from the upper-left
            if (shape[k - 1] >= j + 1) partners[idx].cell_idx.push_back(dg.cell_index(k, j + 1));
        }
        // (i, 1) attacks every basement cell strictly to its right
        if (j == 1)
            for (int k = i + 1; k <= int(shape.size()); ++k) partners[idx].basements.push_back(k);
    }

    auto rec = [&](auto&& self, int idx, int req_left) -> void {
        if (idx == ncells) {
            bool ok = true;
            for (const auto& [lab, cnt] : remaining)
                if (cnt != 0) {
                    ok = false;
                    break;
                }
            if (ok) fn(Filling(&dg, labels));
            return;
        }
        if (req_left > ncells - idx) return;  // cannot place all required labels
        for (int a = 1; a <= alphabet; ++a) {
            auto cit = remaining.find(a);
            bool constrained = cit != remaining.end();
            if (constrained && cit->second == 0) continue;
            bool clash = false;
            for (int p : partners[idx].cell_idx)
                if (labels[p] == a) {
                    clash = true;
                    break;
                }
            if (!clash)
                for (int b : partners[idx].basements)
                    if (b == a) {
                        clash = true;
                        break;
                    }
            if (clash) continue;
            labels[idx] = a;
            if (constrained) cit->second--;
            self(self, idx + 1, constrained ? req_left - 1 : req_left);
            if (constrained) cit->second++;
            labels[idx] = 0;
        }
    };
    rec(rec, 0, required_total);
}

XPoly macdonald_e(const Composition& mu) {
    int n = int(mu.size());
    XPoly out(n);
    enumerate_fillings(mu, n, {}, [&](const Filling& f) {
        XPoly::Expo e(n, 0);
        for (int lab : f.labels()) e[lab - 1] += 1;
        Qt c = Qt::monomial(Int(1), -f.maj(), f.coinv()) * f.gamma(false);
        out.add_term(e, c);
    });
    return out;
}

AlmostSym stable_e(const Composition& mu) {
    int n = int(mu.size());
    int d = comp_size(mu);
    AlmostSym out(n);
    for (int dl = 0; dl <= d; ++dl) {
        for (const auto& lambda : partitions_of(dl)) {
            int l = lambda.length();
            Composition shape = comp_pad_zeros(mu, l);
            std::map<int, int> counts;
            for (int i = 0; i < l; ++i) counts[n + i + 1] = lambda[i];
            enumerate_fillings(shape, n + l, counts, [&](const Filling& f) {
                std::vector<int> e(n, 0);
                for (int lab : f.labels())
                    if (lab <= n) e[lab - 1] += 1;
                Qt c = Qt::monomial(Int(1), -f.maj(), f.coinv()) * f.gamma(true);
                out.add_term({e, lambda}, c);
            });
        }
    }
    return out.lower_split();
}

ConvergenceReport convergence_witness(const Composition& mu, int m_max) {
    if (m_max < 1) throw std::invalid_argument("convergence_witness: m_max must be >= 1");
    ConvergenceReport rep;
    rep.mu = mu;
    AlmostSym limit = stable_e(mu);
    int n = int(mu.size());
    for (int m = 0; m <= m_max; ++m) {
        XPoly finite = macdonald_e(comp_pad_zeros(mu, m));
        XPoly proj = limit.project_pi(n + m);
        XPoly diff = finite - proj;
        rep.valuations.push_back(diff.min_t_valuation());
    }
    rep.weakly_increasing = true;
    for (size_t i = 1; i < rep.valuations.size(); ++i) {
        const auto &a = rep.valuations[i - 1], &b = rep.valuations[i];
        if (!a) continue;        // previous already +infinity: b must be too
        if (!b) continue;        // +infinity is >= anything
        if (*b < *a) rep.weakly_increasing = false;
    }
    // +infinity followed by finite is a decrease
    for (size_t i = 1; i < rep.valuations.size(); ++i)
        if (!rep.valuations[i - 1] && rep.valuations[i]) rep.weakly_increasing = false;
    rep.positive_from_m1 = true;
    for (size_t i = 1; i < rep.valuations.size(); ++i)
        if (rep.valuations[i] && *rep.valuations[i] < 1) rep.positive_from_m1 = false;
    return rep;
}

}  // namespace stablemac
