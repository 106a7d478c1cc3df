#include "stablemac/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace stablemac::io {

namespace {

struct Token {
    enum Kind { Int, Q, T, X, Plus, Minus, Star, Slash, Caret, LParen, RParen, End } kind;
    long value = 0;  // Int payload or x index
};

std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long v = 0;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                v = v * 10 + (s[i++] - '0');
            out.push_back({Token::Int, v});
            continue;
        }
        switch (c) {
            case 'q': out.push_back({Token::Q}); ++i; break;
            case 't': out.push_back({Token::T}); ++i; break;
            case 'x': {
                ++i;
                if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
                    throw std::invalid_argument("parse: x must carry an index");
                long v = 0;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                    v = v * 10 + (s[i++] - '0');
                out.push_back({Token::X, v});
                break;
            }
            case '+': out.push_back({Token::Plus}); ++i; break;
            case '-': out.push_back({Token::Minus}); ++i; break;
            case '*': out.push_back({Token::Star}); ++i; break;
            case '/': out.push_back({Token::Slash}); ++i; break;
            case '^': out.push_back({Token::Caret}); ++i; break;
            case '(': out.push_back({Token::LParen}); ++i; break;
            case ')': out.push_back({Token::RParen}); ++i; break;
            default:
                throw std::invalid_argument(std::string("parse: unexpected character '") + c + "'");
        }
    }
    out.push_back({Token::End});
    return out;
}

class Parser {
public:
    Parser(std::vector<Token> toks, int nvars) : toks_(std::move(toks)), nvars_(nvars) {}

    XPoly parse() {
        XPoly r = expr();
        if (peek().kind != Token::End) throw std::invalid_argument("parse: trailing input");
        return r;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    Token take() { return toks_[pos_++]; }
    void expect(Token::Kind k) {
        if (toks_[pos_].kind != k) throw std::invalid_argument("parse: unexpected token");
        ++pos_;
    }

    XPoly expr() {
        XPoly acc = term();
        while (peek().kind == Token::Plus || peek().kind == Token::Minus) {
            bool minus = take().kind == Token::Minus;
            XPoly rhs = term();
            acc = minus ? acc - rhs : acc + rhs;
        }
        return acc;
    }

    XPoly term() {
        XPoly acc = factor();
        for (;;) {
            if (peek().kind == Token::Star) {
                take();
                acc = acc * factor();
            } else if (peek().kind == Token::Slash) {
                take();
                XPoly d = factor();
                Qt ds = as_scalar(d);
                if (ds.is_zero()) throw std::invalid_argument("parse: division by zero");
                acc = acc * ds.inverse();
            } else {
                break;
            }
        }
        return acc;
    }

    XPoly factor() {
        if (peek().kind == Token::Minus) {
            take();
            return -factor();
        }
        XPoly base = atom();
        if (peek().kind == Token::Caret) {
            take();
            return power(base, exponent());
        }
        return base;
    }

    XPoly power(const XPoly& base, long e) {
        if (e >= 0) {
            XPoly acc = XPoly::constant(nvars_, Qt::one());
            for (long i = 0; i < e; ++i) acc = acc * base;
            return acc;
        }
        if (base.terms().size() != 1)
            throw std::invalid_argument("parse: negative power of a non-monomial");
        const auto& [ex, c] = *base.terms().begin();
        XPoly::Expo inv(nvars_, 0);
        for (int i = 0; i < nvars_; ++i) inv[i] = -ex[i];
        XPoly binv = XPoly::monomial(nvars_, inv, c.inverse());
        XPoly acc = XPoly::constant(nvars_, Qt::one());
        for (long i = 0; i < -e; ++i) acc = acc * binv;
        return acc;
    }

    long exponent() {
        bool neg = false;
        if (peek().kind == Token::Minus) {
            take();
            neg = true;
        }
        if (peek().kind == Token::LParen) {
            take();
            long v = exponent();
            expect(Token::RParen);
            return neg ? -v : v;
        }
        if (peek().kind != Token::Int) throw std::invalid_argument("parse: exponent expected");
        long v = take().value;
        return neg ? -v : v;
    }

    XPoly atom() {
        switch (peek().kind) {
            case Token::Int: return XPoly::constant(nvars_, Qt::integer(take().value));
            case Token::Q: take(); return XPoly::constant(nvars_, Qt::q());
            case Token::T: take(); return XPoly::constant(nvars_, Qt::t());
            case Token::X: {
                long idx = take().value;
                if (idx < 1 || idx > nvars_)
                    throw std::invalid_argument("parse: variable index out of range");
                XPoly::Expo e(nvars_, 0);
                e[idx - 1] = 1;
                return XPoly::monomial(nvars_, e);
            }
            case Token::LParen: {
                take();
                XPoly r = expr();
                expect(Token::RParen);
                return r;
            }
            default: throw std::invalid_argument("parse: atom expected");
        }
    }

    static Qt as_scalar(const XPoly& p) {
        if (p.is_zero()) return Qt::zero();
        if (p.terms().size() != 1)
            throw std::invalid_argument("parse: divisor must be a scalar monomial");
        const auto& [e, c] = *p.terms().begin();
        for (int x : e)
            if (x != 0) throw std::invalid_argument("parse: divisor must be scalar");
        return c;
    }

    std::vector<Token> toks_;
    int nvars_;
    size_t pos_ = 0;
};

int scan_nvars(const std::vector<Token>& toks) {
    long mx = 0;
    for (const auto& t : toks)
        if (t.kind == Token::X) mx = std::max(mx, t.value);
    return int(mx);
}

std::string trim(const std::string& v) {
    size_t a = v.find_first_not_of(" \t");
    size_t b = v.find_last_not_of(" \t");
    return a == std::string::npos ? std::string() : v.substr(a, b - a + 1);
}

}  // namespace

XPoly parse_xpoly(const std::string& s, int nvars) {
    auto toks = tokenize(s);
    int n = nvars >= 0 ? nvars : scan_nvars(toks);
    return Parser(std::move(toks), n).parse();
}

Qt parse_qt(const std::string& s) {
    XPoly p = parse_xpoly(s, 0);
    if (p.is_zero()) return Qt::zero();
    return p.terms().begin()->second;
}

Composition parse_composition(const std::string& s) {
    std::string body = trim(s);
    if (!body.empty() && body.front() == '(') {
        if (body.back() != ')') throw std::invalid_argument("parse_composition: unbalanced parens");
        body = trim(body.substr(1, body.size() - 2));
    }
    if (body.empty() || body == "empty") return {};
    Composition out;
    std::stringstream ss(body);
    std::string part;
    while (std::getline(ss, part, ',')) {
        part = trim(part);
        if (part.empty()) throw std::invalid_argument("parse_composition: empty part");
        size_t used = 0;
        int v = std::stoi(part, &used);
        if (used != part.size() || v < 0)
            throw std::invalid_argument("parse_composition: bad part '" + part + "'");
        out.push_back(v);
    }
    return out;
}

Partition parse_partition(const std::string& s) {
    std::string body = trim(s);
    if (!body.empty() && body.front() == '[') {
        if (body.back() != ']') throw std::invalid_argument("parse_partition: unbalanced brackets");
        body = trim(body.substr(1, body.size() - 2));
    }
    Composition c = parse_composition(body.empty() ? "empty" : body);
    return Partition(c);  // validates ordering and positivity
}

SymFunc parse_symfunc(const std::string& s) {
    size_t colon = s.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("parse_symfunc: missing basis tag");
    std::string tag = trim(s.substr(0, colon));
    SFBasis basis;
    if (tag == "m") basis = SFBasis::m;
    else if (tag == "p") basis = SFBasis::p;
    else if (tag == "h") basis = SFBasis::h;
    else if (tag == "e") basis = SFBasis::e;
    else if (tag == "HLP") basis = SFBasis::hlp;
    else throw std::invalid_argument("parse_symfunc: unknown basis '" + tag + "'");
    SymFunc f(basis);
    std::string rest = s.substr(colon + 1);
    if (trim(rest) == "0") return f;
    size_t pos = 0;
    while (pos < rest.size()) {
        size_t lb = rest.find('[', pos);
        if (lb == std::string::npos) break;
        size_t rb = rest.find(']', lb);
        if (rb == std::string::npos) throw std::invalid_argument("parse_symfunc: unbalanced '['");
        Partition lambda = parse_partition(rest.substr(lb, rb - lb + 1));
        size_t c2 = rest.find(':', rb);
        if (c2 == std::string::npos) throw std::invalid_argument("parse_symfunc: missing ':'");
        size_t semi = rest.find(';', c2);
        std::string coeff =
            rest.substr(c2 + 1, (semi == std::string::npos ? rest.size() : semi) - c2 - 1);
        f.add_term(lambda, parse_qt(coeff));
        pos = semi == std::string::npos ? rest.size() : semi + 1;
    }
    return f;
}

AlmostSym parse_almostsym(const std::string& s) {
    if (s.rfind("split=", 0) != 0)
        throw std::invalid_argument("parse_almostsym: expected 'split=k;'");
    size_t semi = s.find(';');
    if (semi == std::string::npos) throw std::invalid_argument("parse_almostsym: missing ';'");
    int split = std::stoi(s.substr(6, semi - 6));
    AlmostSym f(split);
    std::string rest = s.substr(semi + 1);
    if (trim(rest) == "0") return f;
    size_t pos = 0;
    while (pos < rest.size()) {
        size_t lb = rest.find('[', pos);
        if (lb == std::string::npos) break;
        size_t rb = rest.find(']', lb);
        if (rb == std::string::npos) throw std::invalid_argument("parse_almostsym: unbalanced '['");
        std::string exps = trim(rest.substr(lb + 1, rb - lb - 1));
        Composition xexp = parse_composition(exps.empty() ? "empty" : exps);
        size_t m = rest.find("m[", rb);
        if (m == std::string::npos) throw std::invalid_argument("parse_almostsym: missing tail");
        size_t rb2 = rest.find(']', m);
        if (rb2 == std::string::npos) throw std::invalid_argument("parse_almostsym: unbalanced tail");
        Partition lambda = parse_partition(rest.substr(m + 1, rb2 - m));
        size_t c2 = rest.find(':', rb2);
        if (c2 == std::string::npos) throw std::invalid_argument("parse_almostsym: missing ':'");
        size_t semi2 = rest.find(';', c2);
        std::string coeff =
            rest.substr(c2 + 1, (semi2 == std::string::npos ? rest.size() : semi2) - c2 - 1);
        std::vector<int> e(xexp.begin(), xexp.end());
        if (int(e.size()) != split)
            throw std::invalid_argument("parse_almostsym: exponent length != split");
        f.add_term({e, lambda}, parse_qt(coeff));
        pos = semi2 == std::string::npos ? rest.size() : semi2 + 1;
    }
    return f;
}

std::string weight_str(const std::vector<Qt>& w) {
    std::ostringstream out;
    out << "[";
    bool first = true;
    for (size_t i = 0; i < w.size(); ++i) {
        if (w[i].is_zero()) continue;
        if (!first) out << ", ";
        first = false;
        out << "(" << (i + 1) << ", \"" << w[i].str() << "\")";
    }
    out << "]";
    return out.str();
}

nlohmann::json weight_json(const std::vector<Qt>& w) {
    nlohmann::json arr = nlohmann::json::array();
    for (size_t i = 0; i < w.size(); ++i)
        if (!w[i].is_zero()) arr.push_back({int(i + 1), w[i].str()});
    return arr;
}

std::string almostsym_hlp_str(const AlmostSym& f) {
    AlmostSym low = f.lower_split();
    if (low.is_zero()) return "0";
    int k = low.split();
    std::map<std::vector<int>, SymFunc, std::greater<std::vector<int>>> groups;
    for (const auto& [key, c] : low.terms()) {
        auto& g = groups.try_emplace(key.first, SymFunc(SFBasis::m)).first->second;
        g.add_term(key.second, c);
    }
    std::ostringstream out;
    bool first_term = true;
    std::string tail_alpha = "(x" + std::to_string(k + 1) + "+...)";
    for (const auto& [xe, tail] : groups) {
        SymFunc hlp = expand_in_hlp(tail);
        std::string mono;
        for (size_t i = 0; i < xe.size(); ++i) {
            if (xe[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(i + 1);
            if (xe[i] != 1) mono += "^" + std::to_string(xe[i]);
        }
        for (auto it = hlp.terms().rbegin(); it != hlp.terms().rend(); ++it) {
            const auto& [lambda, c] = *it;
            if (!first_term) out << " + ";
            first_term = false;
            std::vector<std::string> factors;
            if (!c.is_one()) {
                std::string cs = c.str();
                bool wrap = cs.find(' ') != std::string::npos || cs.find('/') != std::string::npos;
                factors.push_back(wrap ? "(" + cs + ")" : cs);
            }
            if (!mono.empty()) factors.push_back(mono);
            if (!lambda.empty()) factors.push_back("P" + lambda.str() + tail_alpha);
            if (factors.empty()) factors.push_back("1");
            for (size_t i = 0; i < factors.size(); ++i) {
                if (i) out << " * ";
                out << factors[i];
            }
        }
    }
    return out.str();
}

nlohmann::json almostsym_json(const AlmostSym& f) {
    nlohmann::json terms = nlohmann::json::array();
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        nlohmann::json t;
        t["x"] = it->first.first;
        t["m"] = it->first.second.parts();
        t["coeff"] = it->second.str();
        terms.push_back(std::move(t));
    }
    return {{"split", f.split()}, {"terms", terms}};
}

nlohmann::json symfunc_json(const SymFunc& f) {
    nlohmann::json terms = nlohmann::json::array();
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it)
        terms.push_back({{"index", it->first.parts()}, {"coeff", it->second.str()}});
    return {{"basis", basis_name(f.basis())}, {"terms", terms}};
}

nlohmann::json xpoly_json(const XPoly& f) {
    nlohmann::json terms = nlohmann::json::array();
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it)
        terms.push_back({{"exp", it->first}, {"coeff", it->second.str()}});
    return {{"nvars", f.nvars()}, {"terms", terms}};
}

}  // namespace stablemac::io
