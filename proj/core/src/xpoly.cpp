#include "stablemac/xpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace stablemac {

XPoly XPoly::constant(int nvars, const Qt& c) {
    XPoly p(nvars);
    p.add_term(Expo(nvars, 0), c);
    return p;
}

XPoly XPoly::monomial(int nvars, const Expo& e, const Qt& c) {
    if (int(e.size()) != nvars) throw std::invalid_argument("XPoly::monomial: bad exponent length");
    XPoly p(nvars);
    p.add_term(e, c);
    return p;
}

XPoly XPoly::from_composition(const Composition& mu) {
    XPoly p(int(mu.size()));
    p.add_term(mu, Qt::one());
    return p;
}

void XPoly::add_term(const Expo& e, const Qt& c) {
    if (c.is_zero()) return;
    if (int(e.size()) != nvars_) throw std::invalid_argument("XPoly::add_term: bad exponent length");
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Qt XPoly::coeff(const Expo& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Qt::zero() : it->second;
}

XPoly XPoly::operator+(const XPoly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("XPoly::+: variable count mismatch");
    XPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

XPoly XPoly::operator-(const XPoly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("XPoly::-: variable count mismatch");
    XPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

XPoly XPoly::operator-() const {
    XPoly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

XPoly XPoly::operator*(const XPoly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("XPoly::*: variable count mismatch");
    XPoly r(nvars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            Expo e(nvars_);
            for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

XPoly XPoly::operator*(const Qt& c) const {
    if (c.is_zero()) return XPoly(nvars_);
    XPoly r(nvars_);
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

bool XPoly::operator==(const XPoly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
}

XPoly XPoly::widen(int n) const {
    if (n < nvars_) throw std::invalid_argument("XPoly::widen: cannot shrink");
    XPoly r(n);
    for (const auto& [e, c] : terms_) {
        Expo w = e;
        w.resize(n, 0);
        r.terms_.emplace(std::move(w), c);
    }
    return r;
}

bool XPoly::is_homogeneous(int* degree_out) const {
    bool first = true;
    int d = 0;
    for (const auto& [e, c] : terms_) {
        int s = std::accumulate(e.begin(), e.end(), 0);
        if (first) {
            d = s;
            first = false;
        } else if (s != d) {
            return false;
        }
    }
    if (degree_out) *degree_out = d;
    return true;
}

int XPoly::degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_)
        d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
}

bool XPoly::symmetric_in_range(int lo, int hi) const {
    for (int j = lo; j < hi; ++j)
        if (act_swap(j, *this) != *this) return false;
    return true;
}

std::optional<int> XPoly::min_t_valuation() const {
    std::optional<int> v;
    for (const auto& [e, c] : terms_) {
        auto cv = c.t_adic_valuation();
        if (cv && (!v || *cv < *v)) v = cv;
    }
    return v;
}

std::string XPoly::str() const {
    if (terms_.empty()) return "0";
    // print exponent vectors in descending lexicographic order
    std::vector<const Terms::value_type*> ts;
    for (const auto& kv : terms_) ts.push_back(&kv);
    std::reverse(ts.begin(), ts.end());
    std::ostringstream out;
    bool first = true;
    for (const auto* kv : ts) {
        if (!first) out << " + ";
        first = false;
        std::string mono;
        for (int i = 0; i < nvars_; ++i) {
            int e = kv->first[i];
            if (e == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(i + 1);
            if (e != 1) mono += "^" + std::to_string(e);
        }
        std::string s = kv->second.str();
        bool wrap = s.find(' ') != std::string::npos || s.find('/') != std::string::npos;
        if (mono.empty()) {
            out << (wrap ? "(" + s + ")" : s);
        } else if (kv->second.is_one()) {
            out << mono;
        } else {
            out << (wrap ? "(" + s + ")" : s) << "*" << mono;
        }
    }
    return out.str();
}

XPoly act_swap(int i, const XPoly& f) {
    if (i < 1 || i >= f.nvars()) throw std::invalid_argument("act_swap: index out of range");
    XPoly r(f.nvars());
    for (const auto& [e, c] : f.terms()) {
        XPoly::Expo w = e;
        std::swap(w[i - 1], w[i]);
        r.add_term(w, c);
    }
    return r;
}

namespace {

// x_i * (1 - s_i)/(x_i - x_{i+1}) applied to one monomial; appends into out.
void divided_difference_xi(int i, const XPoly::Expo& e, const Qt& c, XPoly& out) {
    int p = e[i - 1], r = e[i];
    if (p == r) return;
    if (p > r) {
        int d = p - r;
        for (int j = 0; j < d; ++j) {
            XPoly::Expo w = e;
            w[i - 1] = r + d - 1 - j + 1;  // extra +1 from the x_i factor
            w[i] = r + j;
            out.add_term(w, c);
        }
    } else {
        int d = r - p;
        for (int j = 0; j < d; ++j) {
            XPoly::Expo w = e;
            w[i - 1] = p + d - 1 - j + 1;
            w[i] = p + j;
            out.add_term(w, -c);
        }
    }
}

}  // namespace

XPoly act_demazure_t(int i, const XPoly& f) {
    if (i < 1 || i >= f.nvars()) throw std::invalid_argument("act_demazure_t: index out of range");
    XPoly dd(f.nvars());
    for (const auto& [e, c] : f.terms()) divided_difference_xi(i, e, c, dd);
    Qt one_minus_t = Qt::one() - Qt::t();
    return act_swap(i, f) + dd * one_minus_t;
}

void demazure_t_on_monomial(int i, const XPoly::Expo& e, const Qt& c,
                            std::vector<std::pair<XPoly::Expo, Qt>>& out) {
    XPoly::Expo sw = e;
    std::swap(sw[i - 1], sw[i]);
    out.emplace_back(std::move(sw), c);
    XPoly dd(int(e.size()));
    divided_difference_xi(i, e, c, dd);
    Qt one_minus_t = Qt::one() - Qt::t();
    for (const auto& [w, k] : dd.terms()) out.emplace_back(w, k * one_minus_t);
}

XPoly act_demazure_t_inv(int i, const XPoly& f) {
    // (T_i - 1 + t)/t
    Qt tinv = Qt::t_pow(-1);
    XPoly tf = act_demazure_t(i, f);
    return (tf - f * (Qt::one() - Qt::t())) * tinv;
}

XPoly act_mult_x(int i, const XPoly& f) {
    if (i < 1 || i > f.nvars()) throw std::invalid_argument("act_mult_x: index out of range");
    XPoly r(f.nvars());
    for (const auto& [e, c] : f.terms()) {
        XPoly::Expo w = e;
        w[i - 1] += 1;
        r.add_term(w, c);
    }
    return r;
}

XPoly act_rotation(const XPoly& f) {
    int n = f.nvars();
    if (n < 1) throw std::invalid_argument("act_rotation: needs at least one variable");
    XPoly r(n);
    for (const auto& [e, c] : f.terms()) {
        XPoly::Expo w(n);
        for (int j = 0; j + 1 < n; ++j) w[j] = e[j + 1];
        w[n - 1] = e[0];
        r.add_term(w, c * Qt::q_pow(-e[0]));
    }
    return r;
}

XPoly act_rotation_inv(const XPoly& f) {
    int n = f.nvars();
    if (n < 1) throw std::invalid_argument("act_rotation_inv: needs at least one variable");
    XPoly r(n);
    for (const auto& [e, c] : f.terms()) {
        XPoly::Expo w(n);
        w[0] = e[n - 1];
        for (int j = 1; j < n; ++j) w[j] = e[j - 1];
        r.add_term(w, c * Qt::q_pow(e[n - 1]));
    }
    return r;
}

XPoly compose_ops(const std::vector<OpAtom>& word, const XPoly& f) {
    XPoly g = f;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        switch (it->kind) {
            case OpAtom::T: g = act_demazure_t(it->index, g); break;
            case OpAtom::Tinv: g = act_demazure_t_inv(it->index, g); break;
            case OpAtom::X: g = act_mult_x(it->index, g); break;
            case OpAtom::S: g = act_swap(it->index, g); break;
            case OpAtom::Omega: g = act_rotation(g); break;
            case OpAtom::OmegaInv: g = act_rotation_inv(g); break;
            case OpAtom::Y:
            case OpAtom::Yinv:
                throw std::invalid_argument("compose_ops: Y atoms must be expanded first");
        }
    }
    return g;
}

bool bruhat_support_ok(const Composition& mu, const XPoly& p) {
    if (p.nvars() != int(mu.size()))
        throw std::invalid_argument("bruhat_support_ok: variable count mismatch");
    int deg = 0;
    if (!p.is_homogeneous(&deg) || (!p.is_zero() && deg != comp_size(mu)))
        throw std::invalid_argument("bruhat_support_ok: p must be homogeneous of degree |mu|");
    Composition smu = sort_with_zeros(mu);
    for (const auto& [e, c] : p.terms()) {
        if (e == mu) continue;
        for (int x : e)
            if (x < 0) return false;
        Composition se = sort_with_zeros(e);
        if (se == smu) {
            if (!orbit_less(e, mu)) return false;
            continue;
        }
        // strict dominance on sorted vectors of equal length and size
        int sn = 0, sl = 0;
        bool ok = true;
        for (size_t i = 0; i < se.size(); ++i) {
            sn += se[i];
            sl += smu[i];
            if (sn > sl) {
                ok = false;
                break;
            }
        }
        if (!ok) return false;
    }
    return true;
}

}  // namespace stablemac
