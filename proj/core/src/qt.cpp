#include "stablemac/qt.hpp"

#include <algorithm>
#include <climits>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace stablemac {

namespace {

Int int_gcd(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int r = a % b;
        a = b;
        b = r;
    }
    return a;
}

// --- univariate Z[t] helpers (dense, index = t-exponent) ---

using Zt = std::vector<Int>;

void zt_trim(Zt& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

bool zt_zero(const Zt& p) { return p.empty(); }

Zt zt_mul(const Zt& a, const Zt& b) {
    if (zt_zero(a) || zt_zero(b)) return {};
    Zt r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    zt_trim(r);
    return r;
}

Zt zt_sub(const Zt& a, const Zt& b) {
    Zt r = a;
    if (r.size() < b.size()) r.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    zt_trim(r);
    return r;
}

Zt zt_scale(const Zt& a, const Int& c) {
    if (c == 0) return {};
    Zt r = a;
    for (auto& x : r) x *= c;
    return r;
}

Int zt_content(const Zt& a) {
    Int g = 0;
    for (const auto& c : a) {
        g = int_gcd(g, c);
        if (g == 1) break;
    }
    return g;
}

Zt zt_div_int(const Zt& a, const Int& c) {
    Zt r = a;
    for (auto& x : r) {
        if (x % c != 0) throw std::logic_error("zt_div_int: not exact");
        x /= c;
    }
    return r;
}

// Exact division in Z[t]; throws if not exact.
Zt zt_div_exact(Zt a, const Zt& b) {
    if (zt_zero(b)) throw std::logic_error("zt_div_exact: zero divisor");
    if (zt_zero(a)) return {};
    if (a.size() < b.size()) throw std::logic_error("zt_div_exact: not exact");
    Zt q(a.size() - b.size() + 1);
    while (!zt_zero(a) && a.size() >= b.size()) {
        size_t k = a.size() - b.size();
        if (a.back() % b.back() != 0) throw std::logic_error("zt_div_exact: not exact");
        Int c = a.back() / b.back();
        q[k] = c;
        Zt shifted(k, Int(0));
        shifted.insert(shifted.end(), b.begin(), b.end());
        a = zt_sub(a, zt_scale(shifted, c));
    }
    if (!zt_zero(a)) throw std::logic_error("zt_div_exact: nonzero remainder");
    zt_trim(q);
    return q;
}

Zt zt_primitive(const Zt& a, Int* content_out = nullptr) {
    if (zt_zero(a)) {
        if (content_out) *content_out = 0;
        return {};
    }
    Int c = zt_content(a);
    if (content_out) *content_out = c;
    return zt_div_int(a, c);
}

// Pseudo-remainder of a by b in Z[t].
Zt zt_prem(Zt a, const Zt& b) {
    const Int& lb = b.back();
    while (!zt_zero(a) && a.size() >= b.size()) {
        size_t k = a.size() - b.size();
        Int la = a.back();
        a = zt_scale(a, lb);
        Zt shifted(k, Int(0));
        shifted.insert(shifted.end(), b.begin(), b.end());
        a = zt_sub(a, zt_scale(shifted, la));
    }
    return a;
}

Zt zt_gcd(Zt a, Zt b) {
    if (zt_zero(a)) return b;
    if (zt_zero(b)) return a;
    Int ca, cb;
    a = zt_primitive(a, &ca);
    b = zt_primitive(b, &cb);
    Int c = int_gcd(ca, cb);
    if (a.size() < b.size()) std::swap(a, b);
    while (!zt_zero(b)) {
        Zt r = zt_prem(a, b);
        a = b;
        b = zt_primitive(r);
    }
    a = zt_scale(a, c);
    if (a.back() < 0) a = zt_scale(a, Int(-1));
    return a;
}

// --- Z[t][q] view of QtPoly (dense in q, index = q-exponent) ---

using Ztq = std::vector<Zt>;

void ztq_trim(Ztq& p) {
    while (!p.empty() && zt_zero(p.back())) p.pop_back();
}

Ztq to_ztq(const QtPoly& p) {
    Ztq r;
    for (const auto& [k, c] : p.terms()) {
        auto [eq, et] = k;
        if (int(r.size()) <= eq) r.resize(eq + 1);
        if (int(r[eq].size()) <= et) r[eq].resize(et + 1);
        r[eq][et] = c;
    }
    for (auto& z : r) zt_trim(z);
    ztq_trim(r);
    return r;
}

QtPoly from_ztq(const Ztq& p) {
    QtPoly r;
    for (size_t eq = 0; eq < p.size(); ++eq)
        for (size_t et = 0; et < p[eq].size(); ++et)
            if (p[eq][et] != 0) r.add_term({int(eq), int(et)}, p[eq][et]);
    return r;
}

Zt ztq_content(const Ztq& p) {
    Zt g;
    for (const auto& c : p) {
        if (zt_zero(c)) continue;
        g = zt_gcd(g, c);
        if (g.size() == 1 && (g[0] == 1 || g[0] == -1)) return {Int(1)};
    }
    return g;
}

Ztq ztq_div_zt(const Ztq& p, const Zt& d) {
    Ztq r = p;
    for (auto& c : r)
        if (!zt_zero(c)) c = zt_div_exact(c, d);
    return r;
}

Ztq ztq_scale_zt(const Ztq& p, const Zt& s) {
    Ztq r = p;
    for (auto& c : r) c = zt_mul(c, s);
    return r;
}

Ztq ztq_sub(const Ztq& a, const Ztq& b) {
    Ztq r = a;
    if (r.size() < b.size()) r.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i) r[i] = zt_sub(r[i], b[i]);
    ztq_trim(r);
    return r;
}

// Pseudo-remainder in q over Z[t].
Ztq ztq_prem(Ztq a, const Ztq& b) {
    if (a.size() < b.size()) return a;
    const Zt& lb = b.back();
    while (a.size() >= b.size() && !a.empty()) {
        size_t k = a.size() - b.size();
        Zt la = a.back();
        a = ztq_scale_zt(a, lb);
        Ztq shifted(k);
        for (const auto& c : b) shifted.push_back(c);
        a = ztq_sub(a, ztq_scale_zt(shifted, la));
        ztq_trim(a);
        if (a.empty()) break;
    }
    return a;
}

Ztq ztq_primitive(const Ztq& p, Zt* content_out = nullptr) {
    if (p.empty()) {
        if (content_out) content_out->clear();
        return {};
    }
    Zt c = ztq_content(p);
    if (content_out) *content_out = c;
    return ztq_div_zt(p, c);
}

}  // namespace

QtPoly::QtPoly(Int c) {
    if (c != 0) terms_[{0, 0}] = std::move(c);
}

QtPoly QtPoly::monomial(Int c, int qe, int te) {
    QtPoly p;
    if (c != 0) p.terms_[{qe, te}] = std::move(c);
    return p;
}

bool QtPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == Key{0, 0} &&
           terms_.begin()->second == 1;
}

int QtPoly::deg_q() const {
    int d = 0;
    for (const auto& [k, c] : terms_) d = std::max(d, k.first);
    return d;
}

int QtPoly::deg_t() const {
    int d = 0;
    for (const auto& [k, c] : terms_) d = std::max(d, k.second);
    return d;
}

int QtPoly::low_t() const {
    int d = INT_MAX;
    for (const auto& [k, c] : terms_) d = std::min(d, k.second);
    return d;
}

void QtPoly::add_term(const Key& k, const Int& c) {
    if (c == 0) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

QtPoly QtPoly::operator-() const {
    QtPoly r;
    for (const auto& [k, c] : terms_) r.terms_[k] = -c;
    return r;
}

QtPoly QtPoly::operator+(const QtPoly& o) const {
    QtPoly r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k, c);
    return r;
}

QtPoly QtPoly::operator-(const QtPoly& o) const {
    QtPoly r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k, -c);
    return r;
}

QtPoly QtPoly::operator*(const QtPoly& o) const {
    QtPoly r;
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_)
            r.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
    return r;
}

QtPoly QtPoly::div_exact(const QtPoly& a, const QtPoly& b) {
    if (b.is_zero()) throw std::logic_error("QtPoly::div_exact: zero divisor");
    if (a.is_zero()) return QtPoly();
    if (b.is_one()) return a;
    QtPoly rem = a;
    QtPoly quot;
    auto lead = [](const QtPoly& p) { return std::prev(p.terms_.end()); };
    auto lb = lead(b);
    while (!rem.is_zero()) {
        auto la = lead(rem);
        int dq = la->first.first - lb->first.first;
        int dt = la->first.second - lb->first.second;
        if (dq < 0 || dt < 0 || la->second % lb->second != 0)
            throw std::logic_error("QtPoly::div_exact: not exact");
        Int c = la->second / lb->second;
        quot.add_term({dq, dt}, c);
        for (const auto& [k, cb] : b.terms_)
            rem.add_term({k.first + dq, k.second + dt}, -c * cb);
    }
    return quot;
}

QtPoly QtPoly::gcd(const QtPoly& a, const QtPoly& b) {
    if (a.is_zero()) return b.lead_sign() < 0 ? -b : b;
    if (b.is_zero()) return a.lead_sign() < 0 ? -a : a;
    if (a.is_one() || b.is_one()) return QtPoly(Int(1));
    // fast path: monomial argument
    auto mono_gcd = [](const QtPoly& m, const QtPoly& p) {
        const auto& [k, c] = *m.terms().begin();
        int mq = k.first, mt = k.second;
        Int g = c < 0 ? Int(-c) : c;
        for (const auto& [kp, cp] : p.terms()) {
            mq = std::min(mq, kp.first);
            mt = std::min(mt, kp.second);
            g = int_gcd(g, cp);
        }
        return QtPoly::monomial(g, mq, mt);
    };
    if (a.is_monomial()) return mono_gcd(a, b);
    if (b.is_monomial()) return mono_gcd(b, a);
    if (a == b) return a.lead_sign() < 0 ? -a : a;

    Ztq fa = to_ztq(a), fb = to_ztq(b);
    Zt ca, cb;
    fa = ztq_primitive(fa, &ca);
    fb = ztq_primitive(fb, &cb);
    Zt cont = zt_gcd(ca, cb);
    if (fa.size() < fb.size()) std::swap(fa, fb);
    while (!fb.empty()) {
        Ztq r = ztq_prem(fa, fb);
        fa = std::move(fb);
        fb = ztq_primitive(r);
    }
    Ztq g = ztq_scale_zt(fa, cont);
    QtPoly result = from_ztq(g);
    if (result.lead_sign() < 0) result = -result;
    return result;
}

namespace {
// Print order: total degree ascending, then q-exponent descending.
bool print_less(const QtPoly::Key& a, const QtPoly::Key& b) {
    int da = a.first + a.second, db = b.first + b.second;
    if (da != db) return da < db;
    return a.first > b.first;
}
}  // namespace

int QtPoly::lead_sign() const {
    if (terms_.empty()) return 0;
    const Int* best = nullptr;
    Key bk{0, 0};
    for (const auto& [k, c] : terms_) {
        if (!best || print_less(k, bk)) {
            best = &c;
            bk = k;
        }
    }
    return *best < 0 ? -1 : 1;
}

std::string QtPoly::str() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Key, Int>> ts(terms_.begin(), terms_.end());
    std::sort(ts.begin(), ts.end(),
              [](const auto& x, const auto& y) { return print_less(x.first, y.first); });
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, c] : ts) {
        Int a = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        std::string body;
        if (k.first > 0) {
            body += "q";
            if (k.first > 1) body += "^" + std::to_string(k.first);
        }
        if (k.second > 0) {
            if (!body.empty()) body += "*";
            body += "t";
            if (k.second > 1) body += "^" + std::to_string(k.second);
        }
        if (body.empty()) {
            out << a.str();
        } else if (a == 1) {
            out << body;
        } else {
            out << a.str() << "*" << body;
        }
    }
    return out.str();
}

// --- Qt ---

Qt::Qt(const QtPoly& num, const QtPoly& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw std::domain_error("Qt: zero denominator");
    normalize();
}

void Qt::normalize() {
    if (num_.is_zero()) {
        den_ = QtPoly(Int(1));
        return;
    }
    if (!den_.is_one()) {
        QtPoly g = QtPoly::gcd(num_, den_);
        if (!g.is_one()) {
            num_ = QtPoly::div_exact(num_, g);
            den_ = QtPoly::div_exact(den_, g);
        }
    }
    if (den_.lead_sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

Qt Qt::q_pow(int e) {
    if (e >= 0) return Qt(QtPoly::monomial(Int(1), e, 0), QtPoly(Int(1)));
    return Qt(QtPoly(Int(1)), QtPoly::monomial(Int(1), -e, 0));
}

Qt Qt::t_pow(int e) {
    if (e >= 0) return Qt(QtPoly::monomial(Int(1), 0, e), QtPoly(Int(1)));
    return Qt(QtPoly(Int(1)), QtPoly::monomial(Int(1), 0, -e));
}

Qt Qt::monomial(Int c, int qe, int te) {
    QtPoly num = QtPoly::monomial(std::move(c), std::max(qe, 0), std::max(te, 0));
    QtPoly den = QtPoly::monomial(Int(1), std::max(-qe, 0), std::max(-te, 0));
    return Qt(num, den);
}

Qt Qt::operator+(const Qt& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den_ == o.den_) return Qt(num_ + o.num_, den_);
    return Qt(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Qt Qt::operator-(const Qt& o) const {
    if (o.is_zero()) return *this;
    if (den_ == o.den_) return Qt(num_ - o.num_, den_);
    return Qt(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Qt Qt::operator-() const {
    Qt r = *this;
    r.num_ = -r.num_;
    return r;
}

Qt Qt::operator*(const Qt& o) const {
    if (is_zero() || o.is_zero()) return Qt();
    if (is_one()) return o;
    if (o.is_one()) return *this;
    // cross-cancel before multiplying to keep factors small
    QtPoly g1 = QtPoly::gcd(num_, o.den_);
    QtPoly g2 = QtPoly::gcd(o.num_, den_);
    QtPoly n1 = g1.is_one() ? num_ : QtPoly::div_exact(num_, g1);
    QtPoly d2 = g1.is_one() ? o.den_ : QtPoly::div_exact(o.den_, g1);
    QtPoly n2 = g2.is_one() ? o.num_ : QtPoly::div_exact(o.num_, g2);
    QtPoly d1 = g2.is_one() ? den_ : QtPoly::div_exact(den_, g2);
    return Qt(n1 * n2, d1 * d2);
}

Qt Qt::inverse() const {
    if (is_zero()) throw std::domain_error("Qt: division by zero");
    return Qt(den_, num_);
}

Qt Qt::operator/(const Qt& o) const {
    if (o.is_zero()) throw std::domain_error("Qt: division by zero");
    return *this * o.inverse();
}

bool Qt::operator<(const Qt& o) const {
    if (num_ != o.num_) return num_ < o.num_;
    return den_ < o.den_;
}

std::optional<int> Qt::t_adic_valuation() const {
    if (is_zero()) return std::nullopt;
    return num_.low_t() - den_.low_t();
}

std::string Qt::str() const {
    std::string n = num_.str();
    if (den_.is_one()) return n;
    if (num_.terms().size() > 1) n = "(" + n + ")";
    std::string d = den_.str();
    // parenthesize multi-term denominators and monomial products: x/2*q
    // would otherwise read as (x/2)*q
    if (den_.terms().size() > 1 || d.find('*') != std::string::npos) d = "(" + d + ")";
    return n + "/" + d;
}

Qt qt_arith(const Qt& a, const Qt& b, QtOp op) {
    switch (op) {
        case QtOp::add: return a + b;
        case QtOp::sub: return a - b;
        case QtOp::mul: return a * b;
        case QtOp::div: return a / b;
    }
    throw std::logic_error("qt_arith: bad op");
}

}  // namespace stablemac
