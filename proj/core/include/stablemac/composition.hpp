#pragma once

#include <string>
#include <vector>

namespace stablemac {

// A composition: finite tuple of non-negative integers, possibly empty.
using Composition = std::vector<int>;

// A partition: weakly decreasing sequence of positive parts, possibly empty.
// Construction validates the invariant.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return int(parts_.size()); }
    int size() const;
    bool empty() const { return parts_.empty(); }
    int operator[](int i) const { return parts_[i]; }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

    std::string str() const;  // e.g. "[2,1]", "[]"

private:
    std::vector<int> parts_;
};

int comp_size(const Composition& mu);

// mu * beta: concatenation.
Composition comp_concat(const Composition& mu, const Composition& beta);

// mu * 0^m.
Composition comp_pad_zeros(const Composition& mu, int m);

// Drop trailing zeros.
Composition comp_strip_zeros(const Composition& mu);

// Nonzero parts in weakly decreasing order.
Partition sort_composition(const Composition& mu);

// Sorted weakly decreasing, zeros kept (same length as mu).
Composition sort_with_zeros(const Composition& mu);

// Strict dominance: nu != lambda, |nu| = |lambda|, and every partial sum of
// nu is <= the corresponding partial sum of lambda. Unequal sizes are
// incomparable (false).
bool dominance_less(const Partition& nu, const Partition& lambda);

// Strict order within the rearrangement class: nu < mu when nu is reachable
// from mu by repeatedly swapping a pair at positions i < j with values
// v_i < v_j (moving the larger value left). Requires nu != mu and equal
// multisets to return true.
bool orbit_less(const Composition& nu, const Composition& mu);

// All partitions of n (n >= 0), in lexicographically decreasing order.
std::vector<Partition> partitions_of(int n);

// All compositions with exactly len parts summing to sz.
std::vector<Composition> compositions_of(int sz, int len);

std::string comp_str(const Composition& mu);  // e.g. "(0,2)", "()"

}  // namespace stablemac
