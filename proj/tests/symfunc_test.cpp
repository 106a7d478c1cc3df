#include "stablemac/symfunc.hpp"

#include "stablemac/almostsym.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace stablemac;

namespace {

// Independent expansion oracle: evaluate an m-basis element as an honest
// polynomial in nvars variables.
XPoly expand(const SymFunc& f, int nvars) {
    SymFunc m = f.basis() == SFBasis::m ? f : f.convert(SFBasis::m);
    XPoly out(nvars);
    for (const auto& [lambda, c] : m.terms()) {
        XPoly part = monomial_symmetric_xpoly(lambda, nvars, 1, nvars);
        out = out + part * c;
    }
    return out;
}

SymFunc m_elt(std::vector<int> parts) {
    return SymFunc::basis_element(SFBasis::m, Partition(std::move(parts)));
}
SymFunc p_elt(std::vector<int> parts) {
    return SymFunc::basis_element(SFBasis::p, Partition(std::move(parts)));
}

SymFunc random_symfunc(std::mt19937& rng, int max_deg) {
    std::uniform_int_distribution<int> deg(0, max_deg), coeff(-3, 3);
    SymFunc f(SFBasis::m);
    for (int i = 0; i < 3; ++i) {
        auto parts = partitions_of(deg(rng));
        std::uniform_int_distribution<int> pick(0, int(parts.size()) - 1);
        f.add_term(parts[pick(rng)], Qt::integer(coeff(rng)));
    }
    return f;
}

}  // namespace

TEST(SymFunc, ConvertExamples) {
    // p1^2 = m2 + 2 m11
    SymFunc p1sq = p_elt({1, 1});
    SymFunc m = p1sq.convert(SFBasis::m);
    EXPECT_EQ(m.coeff(Partition({2})), Qt::one());
    EXPECT_EQ(m.coeff(Partition({1, 1})), Qt::integer(2));
    // h1 = m1 = p1
    SymFunc h1 = SymFunc::basis_element(SFBasis::h, Partition({1}));
    EXPECT_TRUE(h1.convert(SFBasis::m).equals(m_elt({1})));
    EXPECT_TRUE(h1.convert(SFBasis::p).equals(p_elt({1})));
}

TEST(SymFunc, ConvertRoundTrips) {
    std::mt19937 rng(5);
    const SFBasis bases[] = {SFBasis::m, SFBasis::p, SFBasis::h, SFBasis::e, SFBasis::hlp};
    for (int i = 0; i < 10; ++i) {
        SymFunc f = random_symfunc(rng, 5);
        for (SFBasis b : bases) {
            SymFunc g = f.convert(b).convert(SFBasis::m);
            EXPECT_TRUE(g.equals(f)) << "basis " << basis_name(b);
        }
    }
}

TEST(SymFunc, MulMByPkMatchesExpansion) {
    // the insertion rule against honest polynomial multiplication
    for (int d = 0; d <= 4; ++d) {
        for (const auto& lambda : partitions_of(d)) {
            for (int r = 1; r <= 3; ++r) {
                SymFunc prod = mul_m_by_pk(m_elt(lambda.parts()), r);
                int nv = d + r;
                XPoly lhs = expand(prod, nv);
                XPoly rhs = expand(m_elt(lambda.parts()), nv) * expand(p_elt({r}), nv);
                EXPECT_EQ(lhs, rhs) << lambda.str() << " * p_" << r;
            }
        }
    }
}

TEST(SymFunc, PlethysmExamples) {
    Alphabet omt_x = Alphabet::X();
    omt_x.add(-1, 0, 1, 0, true);  // (1-t) X
    // p2[(1-t)X] = (1-t^2) p2
    SymFunc p2 = p_elt({2});
    SymFunc r = plethysm_simple(p2, omt_x);
    EXPECT_TRUE(r.equals(p2 * (Qt::one() - Qt::t_pow(2))));
    // p1[X - z^{-1}] = p1 - z^{-1}
    Alphabet xmz = Alphabet::X();
    xmz.add(-1, 0, 0, -1);
    ZSeries s = plethysm(p_elt({1}), xmz);
    ASSERT_EQ(s.count(0), 1u);
    ASSERT_EQ(s.count(-1), 1u);
    EXPECT_TRUE(s.at(0).equals(p_elt({1})));
    EXPECT_TRUE(s.at(-1).equals(SymFunc::one() * Qt::integer(-1)));
    // h2[(1-t)X] = (1-t) m2 + (1-t)^2 m11
    SymFunc h2 = SymFunc::basis_element(SFBasis::h, Partition({2}));
    SymFunc hh = plethysm_simple(h2, omt_x).convert(SFBasis::m);
    Qt omt = Qt::one() - Qt::t();
    EXPECT_EQ(hh.coeff(Partition({2})), omt);
    EXPECT_EQ(hh.coeff(Partition({1, 1})), omt * omt);
}

TEST(SymFunc, PlethysmRingMorphism) {
    Alphabet omt_x = Alphabet::X();
    omt_x.add(-1, 0, 1, 0, true);
    std::mt19937 rng(17);
    for (int i = 0; i < 6; ++i) {
        SymFunc f = random_symfunc(rng, 3), g = random_symfunc(rng, 3);
        SymFunc lhs = plethysm_simple(f * g, omt_x);
        SymFunc rhs = plethysm_simple(f, omt_x) * plethysm_simple(g, omt_x);
        EXPECT_TRUE(lhs.equals(rhs));
    }
}

TEST(SymFunc, PlethysticExp) {
    // Exp[(1-t) z X] to order 1: 1 + z (1-t) p1
    Alphabet ztx = Alphabet::scaled_x(1, 0, 0, 1);
    ztx.add(-1, 0, 1, 1, true);
    ZSeries e = plethystic_exp(ztx, 1);
    EXPECT_TRUE(e.at(0).equals(SymFunc::one()));
    EXPECT_TRUE(e.at(1).equals(p_elt({1}) * (Qt::one() - Qt::t())));
    // Exp[0] = 1
    Alphabet zero;
    ZSeries z = plethystic_exp(zero, 3);
    ASSERT_EQ(z.size(), 1u);
    EXPECT_TRUE(z.at(0).equals(SymFunc::one()));
    // z^2 coefficient of Exp[(1-t) z X] = h2[(1-t)X]
    ZSeries e2 = plethystic_exp(ztx, 2);
    SymFunc m = e2.at(2).convert(SFBasis::m);
    Qt omt = Qt::one() - Qt::t();
    EXPECT_EQ(m.coeff(Partition({2})), omt);
    EXPECT_EQ(m.coeff(Partition({1, 1})), omt * omt);
}

TEST(SymFunc, JingExamples) {
    Qt omt = Qt::one() - Qt::t();
    SymFunc b2 = jing_b(2, SymFunc::one());
    EXPECT_EQ(b2.coeff(Partition({2})), omt);
    EXPECT_EQ(b2.coeff(Partition({1, 1})), omt * omt);
    EXPECT_TRUE(jing_b(0, SymFunc::one()).equals(SymFunc::one()));
    SymFunc b1p1 = jing_b(1, p_elt({1}));
    EXPECT_TRUE(b1p1.equals(m_elt({1, 1}) * (omt * (Qt::one() + Qt::t()))));
    EXPECT_THROW(jing_b(-1, SymFunc::one()), std::invalid_argument);
}

TEST(SymFunc, JingDegreeLaw) {
    for (int d = 0; d <= 3; ++d)
        for (const auto& lambda : partitions_of(d))
            for (int n = 0; n <= 3; ++n) {
                SymFunc b = jing_b(n, m_elt(lambda.parts()));
                if (b.is_zero()) continue;
                for (const auto& [nu, c] : b.terms()) EXPECT_EQ(nu.size(), n + d);
            }
}

TEST(SymFunc, HallLittlewood) {
    Qt omt = Qt::one() - Qt::t();
    SymFunc p2 = hall_littlewood_p(Partition({2}));
    EXPECT_EQ(p2.coeff(Partition({2})), omt);
    EXPECT_EQ(p2.coeff(Partition({1, 1})), omt * omt);
    SymFunc p11 = hall_littlewood_p(Partition({1, 1}));
    EXPECT_TRUE(p11.equals(m_elt({1, 1}) * (omt * omt * (Qt::one() + Qt::t()))));
    EXPECT_TRUE(hall_littlewood_p(Partition()).equals(SymFunc::one()));
}

TEST(SymFunc, HlpUnitriangularAgainstM) {
    for (int d = 0; d <= 6; ++d) {
        for (const auto& lambda : partitions_of(d)) {
            SymFunc p = hall_littlewood_p(lambda);
            EXPECT_FALSE(p.coeff(lambda).is_zero()) << lambda.str();
            for (const auto& [nu, c] : p.terms()) {
                if (nu == lambda) continue;
                EXPECT_TRUE(dominance_less(nu, lambda))
                    << nu.str() << " in P_" << lambda.str();
            }
        }
    }
}

TEST(SymFunc, ExpandInHlp) {
    Qt omt = Qt::one() - Qt::t();
    SymFunc f(SFBasis::m);
    f.add_term(Partition({2}), omt);
    f.add_term(Partition({1, 1}), omt * omt);
    SymFunc hlp = expand_in_hlp(f);
    ASSERT_EQ(hlp.terms().size(), 1u);
    EXPECT_EQ(hlp.coeff(Partition({2})), Qt::one());
    // round trip
    SymFunc g = SymFunc::basis_element(SFBasis::hlp, Partition({1, 1})) +
                SymFunc::basis_element(SFBasis::hlp, Partition({2}));
    EXPECT_TRUE(expand_in_hlp(g.convert(SFBasis::m)).equals(g));
}

TEST(SymFunc, SplitAlphabetExamples) {
    // m1, j=1: x1 + m1[tail]
    AlmostSym s = split_alphabet(m_elt({1}), 1);
    AlmostSym expect(1);
    expect.add_term({{1}, Partition()}, Qt::one());
    expect.add_term({{0}, Partition({1})}, Qt::one());
    EXPECT_TRUE(s.equal(expect));
    // m11, j=1: x1 m1[tail] + m11[tail]
    AlmostSym s2 = split_alphabet(m_elt({1, 1}), 1);
    AlmostSym expect2(1);
    expect2.add_term({{1}, Partition({1})}, Qt::one());
    expect2.add_term({{0}, Partition({1, 1})}, Qt::one());
    EXPECT_TRUE(s2.equal(expect2));
    // m2, j=2: x1^2 + x2^2 + m2[tail]
    AlmostSym s3 = split_alphabet(m_elt({2}), 2);
    AlmostSym expect3(2);
    expect3.add_term({{2, 0}, Partition()}, Qt::one());
    expect3.add_term({{0, 2}, Partition()}, Qt::one());
    expect3.add_term({{0, 0}, Partition({2})}, Qt::one());
    EXPECT_TRUE(s3.equal(expect3));
}

TEST(SymFunc, SplitAlphabetRemerge) {
    std::mt19937 rng(23);
    for (int i = 0; i < 8; ++i) {
        SymFunc f = random_symfunc(rng, 6);
        for (int j = 1; j <= 2; ++j) {
            AlmostSym s = split_alphabet(f, j);
            EXPECT_TRUE(s.lower_split().split() == 0);
            EXPECT_TRUE(s.to_symfunc().equals(f));
        }
    }
}
