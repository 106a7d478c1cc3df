#include "stablemac/almostsym.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace stablemac {

AlmostSym AlmostSym::constant(const Qt& c) {
    AlmostSym f(0);
    f.add_term({{}, Partition()}, c);
    return f;
}

AlmostSym AlmostSym::from_xpoly(const XPoly& p) {
    AlmostSym f(p.nvars());
    for (const auto& [e, c] : p.terms()) f.add_term({e, Partition()}, c);
    return f;
}

AlmostSym AlmostSym::from_symfunc(const SymFunc& f) {
    SymFunc m = f.basis() == SFBasis::m ? f : f.convert(SFBasis::m);
    AlmostSym r(0);
    for (const auto& [l, c] : m.terms()) r.add_term({{}, l}, c);
    return r;
}

AlmostSym AlmostSym::term(int split, std::vector<int> xexp, Partition tail, const Qt& c) {
    if (int(xexp.size()) != split) throw std::invalid_argument("AlmostSym::term: bad exponent length");
    AlmostSym f(split);
    f.add_term({std::move(xexp), std::move(tail)}, c);
    return f;
}

void AlmostSym::add_term(const Key& k, const Qt& c) {
    if (c.is_zero()) return;
    if (int(k.first.size()) != split_)
        throw std::invalid_argument("AlmostSym::add_term: bad exponent length");
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

int AlmostSym::degree() const {
    int d = 0;
    for (const auto& [k, c] : terms_) {
        int s = std::accumulate(k.first.begin(), k.first.end(), 0) + k.second.size();
        d = std::max(d, s);
    }
    return d;
}

AlmostSym AlmostSym::raise_split(int k) const {
    if (k < split_) throw std::invalid_argument("AlmostSym::raise_split: k below current split");
    AlmostSym cur = *this;
    while (cur.split_ < k) {
        AlmostSym next(cur.split_ + 1);
        for (const auto& [key, c] : cur.terms_) {
            const auto& [a, lambda] = key;
            // absorb nothing into the new finite variable
            std::vector<int> a0 = a;
            a0.push_back(0);
            next.add_term({a0, lambda}, c);
            // or hand one part r of lambda to it
            const auto& parts = lambda.parts();
            for (size_t i = 0; i < parts.size(); ++i) {
                if (i > 0 && parts[i] == parts[i - 1]) continue;  // distinct values once
                std::vector<int> rest = parts;
                rest.erase(rest.begin() + i);
                std::vector<int> ar = a;
                ar.push_back(parts[i]);
                next.add_term({ar, Partition(rest)}, c);
            }
        }
        cur = std::move(next);
    }
    return cur;
}

AlmostSym AlmostSym::lower_split() const {
    AlmostSym cur = *this;
    while (cur.split_ > 0) {
        if (cur.terms_.empty()) {
            AlmostSym z(0);
            return z;
        }
        AlmostSym cand(cur.split_ - 1);
        for (const auto& [key, c] : cur.terms_) {
            if (key.first.back() != 0) continue;
            std::vector<int> a = key.first;
            a.pop_back();
            cand.add_term({a, key.second}, c);
        }
        if (cand.raise_split(cur.split_).terms_ != cur.terms_) break;
        cur = std::move(cand);
    }
    return cur;
}

XPoly AlmostSym::project_pi(int n) const {
    if (n < split_)
        throw std::invalid_argument("AlmostSym::project_pi: n below split");
    XPoly out(n);
    for (const auto& [key, c] : terms_) {
        const auto& [a, lambda] = key;
        if (lambda.length() > n - split_) continue;  // too few tail variables
        XPoly tail = monomial_symmetric_xpoly(lambda, n, split_ + 1, n);
        for (const auto& [e, k] : tail.terms()) {
            XPoly::Expo w = e;
            for (int i = 0; i < split_; ++i) w[i] += a[i];
            out.add_term(w, c * k);
        }
    }
    return out;
}

AlmostSym AlmostSym::rho() const {
    AlmostSym f = split_ >= 1 ? *this : raise_split(1);
    AlmostSym out(f.split_);
    for (const auto& [key, c] : f.terms_)
        if (key.first[0] > 0) out.add_term(key, c);
    return out;
}

AlmostSym AlmostSym::operator+(const AlmostSym& o) const {
    int k = std::max(split_, o.split_);
    AlmostSym a = raise_split(k), r = o.raise_split(k);
    for (const auto& [key, c] : r.terms_) a.add_term(key, c);
    return a;
}

AlmostSym AlmostSym::operator-(const AlmostSym& o) const {
    int k = std::max(split_, o.split_);
    AlmostSym a = raise_split(k), r = o.raise_split(k);
    for (const auto& [key, c] : r.terms_) a.add_term(key, -c);
    return a;
}

AlmostSym AlmostSym::operator*(const Qt& c) const {
    AlmostSym r(split_);
    if (c.is_zero()) return r;
    for (const auto& [key, k] : terms_) r.terms_.emplace(key, k * c);
    return r;
}

AlmostSym AlmostSym::operator*(const AlmostSym& o) const {
    int k = std::max(split_, o.split_);
    AlmostSym a = raise_split(k), b = o.raise_split(k);
    AlmostSym r(k);
    for (const auto& [ka, ca] : a.terms_) {
        for (const auto& [kb, cb] : b.terms_) {
            std::vector<int> e(k);
            for (int i = 0; i < k; ++i) e[i] = ka.first[i] + kb.first[i];
            Qt c = ca * cb;
            // tail product in the m basis
            SymFunc prod = SymFunc::basis_element(SFBasis::m, ka.second) *
                           SymFunc::basis_element(SFBasis::m, kb.second);
            for (const auto& [l, cl] : prod.terms()) r.add_term({e, l}, c * cl);
        }
    }
    return r;
}

AlmostSym AlmostSym::act_T(int i) const {
    if (i < 1) throw std::invalid_argument("AlmostSym::act_T: bad index");
    AlmostSym f = raise_split(std::max(split_, i + 1));
    AlmostSym out(f.split_);
    std::vector<std::pair<XPoly::Expo, Qt>> buf;
    for (const auto& [key, c] : f.terms_) {
        buf.clear();
        demazure_t_on_monomial(i, key.first, c, buf);
        for (auto& [e, k] : buf) out.add_term({e, key.second}, k);
    }
    return out;
}

AlmostSym AlmostSym::act_T_inv(int i) const {
    // t^{-1} (T_i - 1 + t)
    AlmostSym tf = act_T(i);
    AlmostSym num = tf - *this * (Qt::one() - Qt::t());
    return num * Qt::t_pow(-1);
}

AlmostSym AlmostSym::act_X(int i) const {
    if (i < 1) throw std::invalid_argument("AlmostSym::act_X: bad index");
    AlmostSym f = raise_split(std::max(split_, i));
    AlmostSym out(f.split_);
    for (const auto& [key, c] : f.terms_) {
        std::vector<int> e = key.first;
        e[i - 1] += 1;
        out.add_term({e, key.second}, c);
    }
    return out;
}

bool AlmostSym::equal(const AlmostSym& o) const {
    int k = std::max(split_, o.split_);
    return raise_split(k).terms_ == o.raise_split(k).terms_;
}

SymFunc AlmostSym::to_symfunc() const {
    AlmostSym low = lower_split();
    if (low.split_ != 0)
        throw std::invalid_argument("AlmostSym::to_symfunc: element is not symmetric");
    SymFunc f(SFBasis::m);
    for (const auto& [key, c] : low.terms_) f.add_term(key.second, c);
    return f;
}

std::string AlmostSym::str() const {
    std::ostringstream out;
    out << "split=" << split_ << ";";
    if (terms_.empty()) {
        out << " 0";
        return out.str();
    }
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        out << (first ? " " : "; ");
        first = false;
        out << "[";
        for (size_t i = 0; i < it->first.first.size(); ++i) {
            if (i) out << ",";
            out << it->first.first[i];
        }
        out << "] ⊗ m" << it->first.second.str() << ": " << it->second.str();
    }
    return out.str();
}

AlmostSym split_alphabet(const SymFunc& f, int j) {
    if (j < 0) throw std::invalid_argument("split_alphabet: j must be >= 0");
    SymFunc m = f.basis() == SFBasis::m ? f : f.convert(SFBasis::m);
    AlmostSym out(j);
    for (const auto& [lambda, c] : m.terms()) {
        // choose a sub-multiset of parts for the finite variables
        const auto& parts = lambda.parts();
        // group equal parts: (value, count)
        std::vector<std::pair<int, int>> groups;
        for (int v : parts) {
            if (!groups.empty() && groups.back().first == v)
                groups.back().second++;
            else
                groups.emplace_back(v, 1);
        }
        std::vector<int> take(groups.size(), 0);
        auto rec = [&](auto&& self, size_t gi) -> void {
            if (gi == groups.size()) {
                std::vector<int> chosen, rest;
                for (size_t g = 0; g < groups.size(); ++g) {
                    for (int r = 0; r < take[g]; ++r) chosen.push_back(groups[g].first);
                    for (int r = take[g]; r < groups[g].second; ++r) rest.push_back(groups[g].first);
                }
                if (int(chosen.size()) > j) return;
                Partition tail(rest);
                // all distinct arrangements of chosen (padded) into j slots
                std::vector<int> arr = chosen;
                arr.resize(j, 0);
                std::sort(arr.begin(), arr.end());
                do {
                    out.add_term({arr, tail}, c);
                } while (std::next_permutation(arr.begin(), arr.end()));
                return;
            }
            for (int r = 0; r <= groups[gi].second; ++r) {
                take[gi] = r;
                self(self, gi + 1);
            }
            take[gi] = 0;
        };
        rec(rec, 0);
    }
    return out;
}

XPoly monomial_symmetric_xpoly(const Partition& lambda, int n, int lo, int hi) {
    XPoly out(n);
    int slots = hi - lo + 1;
    if (lambda.length() > slots) return out;
    if (slots <= 0) {
        if (lambda.empty()) out.add_term(XPoly::Expo(n, 0), Qt::one());
        return out;
    }
    std::vector<int> arr = lambda.parts();
    arr.resize(slots, 0);
    std::sort(arr.begin(), arr.end());
    do {
        XPoly::Expo e(n, 0);
        for (int s = 0; s < slots; ++s) e[lo - 1 + s] = arr[s];
        out.add_term(e, Qt::one());
    } while (std::next_permutation(arr.begin(), arr.end()));
    return out;
}

}  // namespace stablemac
