#pragma once

#include "stablemac/almostsym.hpp"
#include "stablemac/composition.hpp"
#include "stablemac/qt.hpp"
#include "stablemac/xpoly.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace stablemac {

// Column diagram of a composition mu with a basement row.
//
// Convention ledger (pinned; the eigen-solve oracle is the arbiter):
//   * Cells (i, j): column i in 1..ncols, row j in 1..mu_i; basement cells
//     (i, 0) carry the fixed label i.
//   * d(u) is the cell directly below u; row-1 cells point at the basement.
//   * leg(i,j) = mu_i - j.
//   * arm(i,j) = #{k < i : j <= mu_k <= mu_i} + #{k > i : j <= mu_k + 1 <= mu_i}.
//   * Attacking pairs: same-row pairs {(i,j),(k,j)}, and {(i,j),(k,j-1)} with
//     i < k (the higher cell strictly left of the lower; basement included).
//     A filling is non-attacking when attacking cells carry distinct labels.
//   * Descents: cells with label(u) > label(d(u)); maj adds leg(u)+1 each.
//   * coinv counts (a) triples u=(i,j), v=(k,j), w=(k,j-1) with i < k whose
//     label ranks read counterclockwise (u -> w -> v increasing, ties broken
//     upward), and (b) lone attacking pairs u=(i,j), w=(k,j-1), i < k with
//     no cell above w, when label(u) > label(w).
class Diagram {
public:
    explicit Diagram(Composition mu);

    const Composition& shape() const { return mu_; }
    int ncols() const { return int(mu_.size()); }
    int ncells() const { return int(cells_.size()); }
    // cells in assignment order: column-major, rows bottom to top
    const std::vector<std::pair<int, int>>& cells() const { return cells_; }
    int cell_index(int col, int row) const;  // -1 when absent

    int arm(int col, int row) const;
    int leg(int col, int row) const { return mu_[col - 1] - row; }

private:
    Composition mu_;
    std::vector<std::pair<int, int>> cells_;
    std::map<std::pair<int, int>, int> index_;
};

// A non-attacking labelling of a diagram. Labels are stored per cell in the
// diagram's assignment order; the basement is implicit.
class Filling {
public:
    Filling(const Diagram* d, std::vector<int> labels)
        : diagram_(d), labels_(std::move(labels)) {}

    const Diagram& diagram() const { return *diagram_; }
    const std::vector<int>& labels() const { return labels_; }
    // Label of (col,row) with row 0 resolving to the basement.
    int label(int col, int row) const;
    int count_label(int a) const;

    int maj() const;
    int coinv() const;
    // Product over cells u with label(u) != label(d(u)). In limit mode row-1
    // cells contribute a bare (1-t); otherwise every such cell contributes
    // (1-t)/(1 - q^{-(leg+1)} t^{arm+1}).
    Qt gamma(bool limit_mode) const;

    std::string str() const;  // "(col,row):label ..." with stats appended

private:
    const Diagram* diagram_;
    std::vector<int> labels_;
};

// Streams every non-attacking labelling of mu over the alphabet {1..alphabet}
// exactly once. label_counts constrains chosen labels to exact multiplicities.
void enumerate_fillings(const Composition& mu, int alphabet,
                        const std::map<int, int>& label_counts,
                        const std::function<void(const Filling&)>& fn);

// Nonsymmetric Macdonald polynomial in n = length(mu) variables, as the
// weighted sum over non-attacking fillings.
XPoly macdonald_e(const Composition& mu);

// Stable limit of E_{mu*0^m}: an almost-symmetric function with monomial
// tail parts indexed by partitions of size <= |mu|. Canonical minimal split.
AlmostSym stable_e(const Composition& mu);

// Coefficientwise comparison of E_{mu*0^m} against the projection of the
// stable limit, for m = 0..m_max.
struct ConvergenceReport {
    Composition mu;
    std::vector<std::optional<int>> valuations;  // nullopt = +infinity
    bool weakly_increasing;
    bool positive_from_m1;  // valuation >= 1 for every m >= 1
};
ConvergenceReport convergence_witness(const Composition& mu, int m_max);

}  // namespace stablemac
