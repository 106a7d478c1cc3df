#include "stablemac/symfunc.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace stablemac {

std::string basis_name(SFBasis b) {
    switch (b) {
        case SFBasis::m: return "m";
        case SFBasis::p: return "p";
        case SFBasis::h: return "h";
        case SFBasis::e: return "e";
        case SFBasis::hlp: return "HLP";
    }
    return "?";
}

SymFunc SymFunc::one(SFBasis b) {
    SymFunc f(b);
    f.add_term(Partition(), Qt::one());
    return f;
}

SymFunc SymFunc::basis_element(SFBasis b, const Partition& lambda) {
    SymFunc f(b);
    f.add_term(lambda, Qt::one());
    return f;
}

void SymFunc::add_term(const Partition& lambda, const Qt& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(lambda);
    if (it == terms_.end()) {
        terms_.emplace(lambda, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Qt SymFunc::coeff(const Partition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? Qt::zero() : it->second;
}

int SymFunc::degree() const {
    int d = 0;
    for (const auto& [l, c] : terms_) d = std::max(d, l.size());
    return d;
}

SymFunc SymFunc::operator+(const SymFunc& o) const {
    SymFunc rhs = o.basis() == basis_ ? o : o.convert(basis_);
    SymFunc r = *this;
    for (const auto& [l, c] : rhs.terms_) r.add_term(l, c);
    return r;
}

SymFunc SymFunc::operator-(const SymFunc& o) const {
    SymFunc rhs = o.basis() == basis_ ? o : o.convert(basis_);
    SymFunc r = *this;
    for (const auto& [l, c] : rhs.terms_) r.add_term(l, -c);
    return r;
}

SymFunc SymFunc::operator*(const Qt& c) const {
    SymFunc r(basis_);
    if (c.is_zero()) return r;
    for (const auto& [l, k] : terms_) r.terms_.emplace(l, k * c);
    return r;
}

namespace {

// Concatenate-and-sort product of power-sum indices.
Partition p_index_concat(const Partition& a, const Partition& b) {
    std::vector<int> v = a.parts();
    v.insert(v.end(), b.parts().begin(), b.parts().end());
    std::sort(v.rbegin(), v.rend());
    return Partition(std::move(v));
}

SymFunc mul_p_basis(const SymFunc& a, const SymFunc& b) {
    SymFunc r(SFBasis::p);
    for (const auto& [la, ca] : a.terms())
        for (const auto& [lb, cb] : b.terms())
            r.add_term(p_index_concat(la, lb), ca * cb);
    return r;
}

// p_lambda expanded in the m basis (iterated multiplication by p_k).
SymFunc p_to_m_element(const Partition& lambda) {
    SymFunc f = SymFunc::one(SFBasis::m);
    for (int part : lambda.parts()) f = mul_m_by_pk(f, part);
    return f;
}

// Per-degree cache of the m-expansion of every p_mu with |mu| = d.
const std::map<Partition, SymFunc>& p_to_m_table(int d) {
    static std::map<int, std::map<Partition, SymFunc>> cache;
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
    std::map<Partition, SymFunc> table;
    for (const auto& mu : partitions_of(d)) table.emplace(mu, p_to_m_element(mu));
    return cache.emplace(d, std::move(table)).first->second;
}

// Solve for the p-expansion of a single homogeneous m-basis element.
// Gaussian elimination on the per-degree transition matrix.
const std::map<Partition, SymFunc>& m_to_p_table(int d) {
    static std::map<int, std::map<Partition, SymFunc>> cache;
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;

    auto parts = partitions_of(d);
    int n = int(parts.size());
    const auto& ptm = p_to_m_table(d);
    // A[i][j] = coefficient of m_{parts[i]} in p_{parts[j]}
    std::vector<std::vector<Qt>> A(n, std::vector<Qt>(n, Qt::zero()));
    for (int j = 0; j < n; ++j) {
        const SymFunc& col = ptm.at(parts[j]);
        for (int i = 0; i < n; ++i) A[i][j] = col.coeff(parts[i]);
    }
    // Augment with identity, invert by Gauss-Jordan.
    std::vector<std::vector<Qt>> inv(n, std::vector<Qt>(n, Qt::zero()));
    for (int i = 0; i < n; ++i) inv[i][i] = Qt::one();
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!A[r][col].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) throw std::logic_error("m_to_p_table: singular transition matrix");
        std::swap(A[piv], A[col]);
        std::swap(inv[piv], inv[col]);
        Qt d0 = A[col][col];
        for (int j = 0; j < n; ++j) {
            A[col][j] /= d0;
            inv[col][j] /= d0;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || A[r][col].is_zero()) continue;
            Qt f = A[r][col];
            for (int j = 0; j < n; ++j) {
                A[r][j] -= f * A[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    // Column i of inv gives m_{parts[i]} in the p basis.
    std::map<Partition, SymFunc> table;
    for (int i = 0; i < n; ++i) {
        SymFunc f(SFBasis::p);
        for (int j = 0; j < n; ++j) f.add_term(parts[j], inv[j][i]);
        table.emplace(parts[i], std::move(f));
    }
    return cache.emplace(d, std::move(table)).first->second;
}

SymFunc to_p_basis(const SymFunc& f);

SymFunc hlp_to_m(const SymFunc& f) {
    SymFunc r(SFBasis::m);
    for (const auto& [l, c] : f.terms()) {
        SymFunc p = hall_littlewood_p(l);
        for (const auto& [m, k] : p.terms()) r.add_term(m, k * c);
    }
    return r;
}

SymFunc p_to_basis_element_product(SFBasis b, const Partition& lambda) {
    // h_lambda or e_lambda expanded in p.
    SymFunc f = SymFunc::one(SFBasis::p);
    for (int part : lambda.parts())
        f = mul_p_basis(f, b == SFBasis::h ? h_in_p(part) : e_in_p(part));
    return f;
}

// Expand f (in p basis) in the h or e basis by per-degree elimination.
SymFunc p_to_he(const SymFunc& f, SFBasis target) {
    SymFunc out(target);
    // group by degree
    std::map<int, SymFunc> by_deg;
    for (const auto& [l, c] : f.terms()) {
        auto& g = by_deg.try_emplace(l.size(), SymFunc(SFBasis::p)).first->second;
        g.add_term(l, c);
    }
    for (auto& [d, comp] : by_deg) {
        auto parts = partitions_of(d);
        int n = int(parts.size());
        std::vector<std::vector<Qt>> A(n, std::vector<Qt>(n, Qt::zero()));
        for (int j = 0; j < n; ++j) {
            SymFunc col = p_to_basis_element_product(target, parts[j]);
            for (int i = 0; i < n; ++i) A[i][j] = col.coeff(parts[i]);
        }
        std::vector<Qt> rhs(n, Qt::zero());
        for (int i = 0; i < n; ++i) rhs[i] = comp.coeff(parts[i]);
        // solve A x = rhs
        for (int col = 0; col < n; ++col) {
            int piv = -1;
            for (int r = col; r < n; ++r)
                if (!A[r][col].is_zero()) {
                    piv = r;
                    break;
                }
            if (piv < 0) throw std::logic_error("p_to_he: singular");
            std::swap(A[piv], A[col]);
            std::swap(rhs[piv], rhs[col]);
            for (int r = 0; r < n; ++r) {
                if (r == col || A[r][col].is_zero()) continue;
                Qt f2 = A[r][col] / A[col][col];
                for (int j = col; j < n; ++j) A[r][j] -= f2 * A[col][j];
                rhs[r] -= f2 * rhs[col];
            }
        }
        for (int i = 0; i < n; ++i) out.add_term(parts[i], rhs[i] / A[i][i]);
    }
    return out;
}

SymFunc to_p_basis(const SymFunc& f) {
    switch (f.basis()) {
        case SFBasis::p: return f;
        case SFBasis::m: {
            SymFunc r(SFBasis::p);
            for (const auto& [l, c] : f.terms()) {
                const SymFunc& pe = m_to_p_table(l.size()).at(l);
                for (const auto& [mu, k] : pe.terms()) r.add_term(mu, k * c);
            }
            return r;
        }
        case SFBasis::h:
        case SFBasis::e: {
            SymFunc r(SFBasis::p);
            for (const auto& [l, c] : f.terms()) {
                SymFunc pe = p_to_basis_element_product(f.basis(), l);
                for (const auto& [mu, k] : pe.terms()) r.add_term(mu, k * c);
            }
            return r;
        }
        case SFBasis::hlp: return to_p_basis(hlp_to_m(f));
    }
    throw std::logic_error("to_p_basis: bad basis");
}

SymFunc p_to_m(const SymFunc& f) {
    SymFunc r(SFBasis::m);
    for (const auto& [l, c] : f.terms()) {
        const SymFunc& me = p_to_m_table(l.size()).at(l);
        for (const auto& [mu, k] : me.terms()) r.add_term(mu, k * c);
    }
    return r;
}

}  // namespace

SymFunc SymFunc::convert(SFBasis target) const {
    if (target == basis_) return *this;
    if (basis_ == SFBasis::hlp && target == SFBasis::m) return hlp_to_m(*this);
    if (target == SFBasis::hlp) {
        SymFunc m = basis_ == SFBasis::m ? *this : convert(SFBasis::m);
        return expand_in_hlp(m);
    }
    SymFunc p = to_p_basis(*this);
    switch (target) {
        case SFBasis::p: return p;
        case SFBasis::m: return p_to_m(p);
        case SFBasis::h:
        case SFBasis::e: return p_to_he(p, target);
        default: break;
    }
    throw std::logic_error("SymFunc::convert: bad target");
}

SymFunc SymFunc::operator*(const SymFunc& o) const {
    SymFunc a = to_p_basis(*this), b = to_p_basis(o);
    SymFunc r = mul_p_basis(a, b);
    return r.convert(basis_);
}

bool SymFunc::equals(const SymFunc& o) const {
    if (basis_ == o.basis_) return terms_ == o.terms_;
    return convert(SFBasis::m).terms() == o.convert(SFBasis::m).terms();
}

std::string SymFunc::str() const {
    std::ostringstream out;
    out << basis_name(basis_) << ":";
    if (terms_.empty()) {
        out << " 0";
        return out.str();
    }
    // partitions in descending map order for a leading-term-first reading
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        out << (first ? " " : "; ");
        first = false;
        out << it->first.str() << ": " << it->second.str();
    }
    return out.str();
}

SymFunc mul_m_by_pk(const SymFunc& f_m, int r) {
    if (f_m.basis() != SFBasis::m) throw std::invalid_argument("mul_m_by_pk: m basis required");
    if (r <= 0) throw std::invalid_argument("mul_m_by_pk: r must be positive");
    SymFunc out(SFBasis::m);
    for (const auto& [lambda, c] : f_m.terms()) {
        // add r to one part with value v (v ranges over distinct parts and 0)
        std::vector<int> values{0};
        for (int x : lambda.parts())
            if (values.back() != x) values.push_back(x);
        for (int v : values) {
            std::vector<int> mu = lambda.parts();
            if (v == 0) {
                mu.push_back(r);
            } else {
                auto it = std::find(mu.begin(), mu.end(), v);
                *it = v + r;
            }
            std::sort(mu.rbegin(), mu.rend());
            int mult = int(std::count(mu.begin(), mu.end(), v + r));
            out.add_term(Partition(mu), c * Qt::integer(mult));
        }
    }
    return out;
}

SymFunc h_in_p(int n) {
    static std::vector<SymFunc> cache;
    if (n < int(cache.size())) return cache[n];
    if (cache.empty()) cache.push_back(SymFunc::one(SFBasis::p));
    for (int k = int(cache.size()); k <= n; ++k) {
        SymFunc acc(SFBasis::p);
        for (int i = 1; i <= k; ++i) {
            SymFunc pi = SymFunc::basis_element(SFBasis::p, Partition({i}));
            acc = acc + mul_p_basis(pi, cache[k - i]);
        }
        cache.push_back(acc * (Qt::one() / Qt::integer(k)));
    }
    return cache[n];
}

SymFunc e_in_p(int n) {
    static std::vector<SymFunc> cache;
    if (n < int(cache.size())) return cache[n];
    if (cache.empty()) cache.push_back(SymFunc::one(SFBasis::p));
    for (int k = int(cache.size()); k <= n; ++k) {
        SymFunc acc(SFBasis::p);
        for (int i = 1; i <= k; ++i) {
            SymFunc pi = SymFunc::basis_element(SFBasis::p, Partition({i}));
            Qt sign = (i % 2 == 1) ? Qt::one() : -Qt::one();
            acc = acc + mul_p_basis(pi, cache[k - i]) * sign;
        }
        cache.push_back(acc * (Qt::one() / Qt::integer(k)));
    }
    return cache[n];
}

Alphabet Alphabet::X() {
    Alphabet a;
    a.terms.push_back({1, 0, 0, 0, true});
    return a;
}

Alphabet Alphabet::scaled_x(long c, int qe, int te, int ze) {
    Alphabet a;
    a.terms.push_back({c, qe, te, ze, true});
    return a;
}

Alphabet& Alphabet::add(long c, int qe, int te, int ze, bool times_x) {
    terms.push_back({c, qe, te, ze, times_x});
    return *this;
}

namespace {

// z-series arithmetic with p-basis SymFunc coefficients.
ZSeries zs_mul(const ZSeries& a, const ZSeries& b) {
    ZSeries r;
    for (const auto& [za, fa] : a)
        for (const auto& [zb, fb] : b) {
            SymFunc prod = mul_p_basis(fa, fb);
            if (prod.is_zero()) continue;
            auto it = r.find(za + zb);
            if (it == r.end())
                r.emplace(za + zb, prod);
            else
                it->second = it->second + prod;
        }
    for (auto it = r.begin(); it != r.end();)
        it = it->second.is_zero() ? r.erase(it) : std::next(it);
    return r;
}

ZSeries zs_add(ZSeries a, const ZSeries& b) {
    for (const auto& [zb, fb] : b) {
        auto it = a.find(zb);
        if (it == a.end())
            a.emplace(zb, fb);
        else
            it->second = it->second + fb;
    }
    for (auto it = a.begin(); it != a.end();)
        it = it->second.is_zero() ? a.erase(it) : std::next(it);
    return a;
}

// p_k[A] as a z-series in the p basis.
ZSeries pk_of_alphabet(int k, const Alphabet& a) {
    ZSeries r;
    for (const auto& t : a.terms) {
        SymFunc coeff = t.times_x ? SymFunc::basis_element(SFBasis::p, Partition({k}))
                                  : SymFunc::one(SFBasis::p);
        coeff = coeff * Qt::monomial(Int(t.coeff), k * t.qe, k * t.te);
        if (coeff.is_zero()) continue;
        ZSeries term{{k * t.ze, coeff}};
        r = zs_add(r, term);
    }
    return r;
}

}  // namespace

ZSeries plethysm(const SymFunc& f, const Alphabet& a) {
    SymFunc fp = f.basis() == SFBasis::p ? f : f.convert(SFBasis::p);
    ZSeries out;
    for (const auto& [lambda, c] : fp.terms()) {
        ZSeries prod{{0, SymFunc::one(SFBasis::p) * c}};
        for (int part : lambda.parts()) prod = zs_mul(prod, pk_of_alphabet(part, a));
        out = zs_add(out, prod);
    }
    return out;
}

SymFunc plethysm_simple(const SymFunc& f, const Alphabet& a) {
    ZSeries s = plethysm(f, a);
    for (const auto& [ze, g] : s)
        if (ze != 0 && !g.is_zero())
            throw std::invalid_argument("plethysm_simple: alphabet has z-dependence");
    auto it = s.find(0);
    return it == s.end() ? SymFunc(SFBasis::p) : it->second;
}

ZSeries plethystic_exp(const Alphabet& a, int order) {
    if (order < 0) throw std::invalid_argument("plethystic_exp: order must be >= 0");
    ZSeries out;
    for (int n = 0; n <= order; ++n) {
        ZSeries hn = plethysm(h_in_p(n), a);
        out = zs_add(out, hn);
    }
    return out;
}

SymFunc jing_b(int n, const SymFunc& f) {
    if (n < 0) throw std::invalid_argument("jing_b: n must be >= 0");
    SymFunc fp = f.basis() == SFBasis::p ? f : f.convert(SFBasis::p);
    int d = fp.degree();
    // F[X - z^{-1}]: z-support in [-d, 0]
    Alphabet xmz = Alphabet::X();
    xmz.add(-1, 0, 0, -1);
    ZSeries left = plethysm(fp, xmz);
    // Exp[(1-t) z X] needs z-orders up to n + d
    Alphabet ztx = Alphabet::scaled_x(1, 0, 0, 1);
    ztx.add(-1, 0, 1, 1, true);
    ZSeries exp = plethystic_exp(ztx, n + d);
    SymFunc out(SFBasis::p);
    for (const auto& [zl, fl] : left) {
        int need = n - zl;
        auto it = exp.find(need);
        if (it == exp.end()) continue;
        out = out + mul_p_basis(fl, it->second);
    }
    return out.convert(SFBasis::m);
}

SymFunc hall_littlewood_p(const Partition& lambda) {
    static std::map<Partition, SymFunc> cache;
    auto it = cache.find(lambda);
    if (it != cache.end()) return it->second;
    SymFunc f = SymFunc::one(SFBasis::m);
    for (int i = lambda.length() - 1; i >= 0; --i) f = jing_b(lambda[i], f);
    return cache.emplace(lambda, std::move(f)).first->second;
}

SymFunc expand_in_hlp(const SymFunc& f) {
    SymFunc rem = f.basis() == SFBasis::m ? f : f.convert(SFBasis::m);
    SymFunc out(SFBasis::hlp);
    // Triangular extraction: repeatedly match the largest remaining index.
    while (!rem.is_zero()) {
        auto it = std::prev(rem.terms().end());
        Partition lead = it->first;
        Qt c = it->second;
        SymFunc p = hall_littlewood_p(lead);
        Qt diag = p.coeff(lead);
        if (diag.is_zero())
            throw std::runtime_error("expand_in_hlp: singular conversion at " + lead.str());
        Qt k = c / diag;
        out.add_term(lead, k);
        rem = rem - p * k;
        // progress check: the lead term must have been eliminated
        if (!rem.coeff(lead).is_zero())
            throw std::runtime_error("expand_in_hlp: no progress at " + lead.str());
        if (!rem.is_zero() && !(std::prev(rem.terms().end())->first < lead))
            throw std::runtime_error("expand_in_hlp: not triangular at " + lead.str());
    }
    return out;
}

}  // namespace stablemac
