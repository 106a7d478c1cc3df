#include "stablemac/composition.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace stablemac {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
}

int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Partition::str() const {
    std::ostringstream out;
    out << "[";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out << ",";
        out << parts_[i];
    }
    out << "]";
    return out.str();
}

int comp_size(const Composition& mu) {
    return std::accumulate(mu.begin(), mu.end(), 0);
}

Composition comp_concat(const Composition& mu, const Composition& beta) {
    Composition r = mu;
    r.insert(r.end(), beta.begin(), beta.end());
    return r;
}

Composition comp_pad_zeros(const Composition& mu, int m) {
    Composition r = mu;
    r.insert(r.end(), m, 0);
    return r;
}

Composition comp_strip_zeros(const Composition& mu) {
    Composition r = mu;
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

Partition sort_composition(const Composition& mu) {
    std::vector<int> p;
    for (int x : mu)
        if (x != 0) p.push_back(x);
    std::sort(p.rbegin(), p.rend());
    return Partition(std::move(p));
}

Composition sort_with_zeros(const Composition& mu) {
    Composition p = mu;
    std::sort(p.rbegin(), p.rend());
    return p;
}

bool dominance_less(const Partition& nu, const Partition& lambda) {
    if (nu.size() != lambda.size()) return false;
    if (nu == lambda) return false;
    int sn = 0, sl = 0;
    size_t len = std::max(nu.parts().size(), lambda.parts().size());
    for (size_t i = 0; i < len; ++i) {
        sn += i < nu.parts().size() ? nu[int(i)] : 0;
        sl += i < lambda.parts().size() ? lambda[int(i)] : 0;
        if (sn > sl) return false;
    }
    return true;
}

bool orbit_less(const Composition& nu, const Composition& mu) {
    if (nu == mu) return false;
    if (nu.size() != mu.size()) return false;
    if (sort_with_zeros(nu) != sort_with_zeros(mu)) return false;
    // BFS over the moves that swap an increasing pair (i < j, v_i < v_j).
    std::set<Composition> seen{mu};
    std::vector<Composition> frontier{mu};
    while (!frontier.empty()) {
        std::vector<Composition> next;
        for (const auto& v : frontier) {
            for (size_t i = 0; i + 1 <= v.size(); ++i) {
                for (size_t j = i + 1; j < v.size(); ++j) {
                    if (v[i] < v[j]) {
                        Composition w = v;
                        std::swap(w[i], w[j]);
                        if (w == nu) return true;
                        if (seen.insert(w).second) next.push_back(w);
                    }
                }
            }
        }
        frontier = std::move(next);
    }
    return false;
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rem, int maxpart) -> void {
        if (rem == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rem, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rem - p, p);
            cur.pop_back();
        }
    };
    if (n >= 0) rec(rec, n, n == 0 ? 1 : n);
    return out;
}

std::vector<Composition> compositions_of(int sz, int len) {
    std::vector<Composition> out;
    Composition cur(len, 0);
    auto rec = [&](auto&& self, int pos, int rem) -> void {
        if (pos == len) {
            if (rem == 0) out.push_back(cur);
            return;
        }
        for (int v = 0; v <= rem; ++v) {
            cur[pos] = v;
            self(self, pos + 1, rem - v);
        }
        cur[pos] = 0;
    };
    if (len == 0) {
        if (sz == 0) out.push_back({});
        return out;
    }
    rec(rec, 0, sz);
    return out;
}

std::string comp_str(const Composition& mu) {
    std::ostringstream out;
    out << "(";
    for (size_t i = 0; i < mu.size(); ++i) {
        if (i) out << ",";
        out << mu[i];
    }
    out << ")";
    return out.str();
}

}  // namespace stablemac
