#include "stablemac/almostsym.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace stablemac;

namespace {

AlmostSym tail_m(std::vector<int> lambda) {
    AlmostSym f(0);
    f.add_term({{}, Partition(std::move(lambda))}, Qt::one());
    return f;
}

AlmostSym random_almostsym(std::mt19937& rng, int split, int max_part = 3) {
    std::uniform_int_distribution<int> ex(0, max_part), coeff(-3, 3), nterms(1, 4), dl(0, 3);
    AlmostSym f(split);
    int terms = nterms(rng);
    for (int i = 0; i < terms; ++i) {
        std::vector<int> e(split);
        for (auto& x : e) x = ex(rng);
        auto parts = partitions_of(dl(rng));
        std::uniform_int_distribution<int> pick(0, int(parts.size()) - 1);
        f.add_term({e, parts[pick(rng)]}, Qt::integer(coeff(rng)));
    }
    return f;
}

}  // namespace

TEST(AlmostSym, RaiseSplitExamples) {
    // m1[x2+...] at split 1 -> split 2: x2 + m1[x3+...]
    AlmostSym f(1);
    f.add_term({{0}, Partition({1})}, Qt::one());
    AlmostSym r = f.raise_split(2);
    AlmostSym expect(2);
    expect.add_term({{0, 1}, Partition()}, Qt::one());
    expect.add_term({{0, 0}, Partition({1})}, Qt::one());
    EXPECT_EQ(r.terms(), expect.terms());
    // polynomial part unchanged
    AlmostSym x1(1);
    x1.add_term({{1}, Partition()}, Qt::one());
    AlmostSym x1r = x1.raise_split(3);
    ASSERT_EQ(x1r.terms().size(), 1u);
    EXPECT_EQ(x1r.terms().begin()->first.first, (std::vector<int>{1, 0, 0}));
    // m11 distribution
    AlmostSym g(1);
    g.add_term({{0}, Partition({1, 1})}, Qt::one());
    AlmostSym gr = g.raise_split(2);
    AlmostSym gexpect(2);
    gexpect.add_term({{0, 1}, Partition({1})}, Qt::one());
    gexpect.add_term({{0, 0}, Partition({1, 1})}, Qt::one());
    EXPECT_EQ(gr.terms(), gexpect.terms());
}

TEST(AlmostSym, LowerSplit) {
    // x2 + m1[x3+...] at split 2 -> m1[x2+...] at split 1
    AlmostSym f(2);
    f.add_term({{0, 1}, Partition()}, Qt::one());
    f.add_term({{0, 0}, Partition({1})}, Qt::one());
    AlmostSym low = f.lower_split();
    EXPECT_EQ(low.split(), 1);
    ASSERT_EQ(low.terms().size(), 1u);
    EXPECT_EQ(low.terms().begin()->first.second, Partition({1}));
    // x1^2 at split 3 -> split 1
    AlmostSym g(3);
    g.add_term({{2, 0, 0}, Partition()}, Qt::one());
    EXPECT_EQ(g.lower_split().split(), 1);
    // already minimal
    AlmostSym h(1);
    h.add_term({{1}, Partition({1})}, Qt::one());
    EXPECT_EQ(h.lower_split().split(), 1);
}

TEST(AlmostSym, RaiseLowerRoundTrip) {
    std::mt19937 rng(31);
    for (int i = 0; i < 20; ++i) {
        AlmostSym f = random_almostsym(rng, 2);
        AlmostSym r = f.raise_split(5);
        EXPECT_TRUE(r.equal(f));
        EXPECT_TRUE(r.lower_split().equal(f));
    }
}

TEST(AlmostSym, ProjectPi) {
    AlmostSym f(1);
    f.add_term({{1}, Partition({1})}, Qt::one());
    EXPECT_EQ(f.project_pi(2), XPoly::monomial(2, {1, 1}));
    // too few tail variables kills long tails
    AlmostSym g(1);
    g.add_term({{0}, Partition({1, 1})}, Qt::one());
    EXPECT_TRUE(g.project_pi(1).is_zero());
    EXPECT_THROW(g.project_pi(0), std::invalid_argument);
    // projection independent of presentation
    std::mt19937 rng(37);
    for (int i = 0; i < 10; ++i) {
        AlmostSym h = random_almostsym(rng, 1);
        EXPECT_EQ(h.project_pi(5), h.raise_split(3).project_pi(5));
    }
}

TEST(AlmostSym, Rho) {
    AlmostSym f(1);
    f.add_term({{1}, Partition({1})}, Qt::one());
    EXPECT_TRUE(f.rho().equal(f));
    // rho(m1[x1+...]) = x1
    AlmostSym m1 = tail_m({1});
    AlmostSym x1(1);
    x1.add_term({{1}, Partition()}, Qt::one());
    EXPECT_TRUE(m1.rho().equal(x1));
    // a1 = 0 term dies
    AlmostSym g(2);
    g.add_term({{0, 2}, Partition()}, Qt::one());
    EXPECT_TRUE(g.rho().is_zero());
    // idempotence
    std::mt19937 rng(41);
    for (int i = 0; i < 15; ++i) {
        AlmostSym h = random_almostsym(rng, 2);
        EXPECT_TRUE(h.rho().rho().equal(h.rho()));
    }
}

TEST(AlmostSym, ActTExamples) {
    // symmetric in x1, x2 -> fixed
    AlmostSym sym(2);
    sym.add_term({{1, 1}, Partition({2})}, Qt::one());
    EXPECT_TRUE(sym.act_T(1).equal(sym));
    // T1(x2) = t x1
    AlmostSym x2 = AlmostSym::from_xpoly(XPoly::monomial(2, {0, 1}));
    AlmostSym tx1 = AlmostSym::from_xpoly(XPoly::monomial(2, {1, 0}, Qt::t()));
    EXPECT_TRUE(x2.act_T(1).equal(tx1));
    // X1(m1[x2+...]) = x1 m1[x2+...]
    AlmostSym f(1);
    f.add_term({{0}, Partition({1})}, Qt::one());
    AlmostSym expect(1);
    expect.add_term({{1}, Partition({1})}, Qt::one());
    EXPECT_TRUE(f.act_X(1).equal(expect));
}

TEST(AlmostSym, ActTQuadraticRelation) {
    std::mt19937 rng(43);
    Qt omt = Qt::one() - Qt::t();
    for (int i = 1; i <= 3; ++i) {
        for (int s = 0; s < 8; ++s) {
            AlmostSym f = random_almostsym(rng, 2);
            AlmostSym tf = f.act_T(i);
            AlmostSym ttf = tf.act_T(i);
            EXPECT_TRUE(ttf.equal(tf * omt + f * Qt::t()));
            EXPECT_TRUE(f.act_T(i).act_T_inv(i).equal(f));
        }
    }
}

TEST(AlmostSym, TailUntouchedOnceSplitRaised) {
    // T_i only moves the polynomial part; the tail factor stays intact
    AlmostSym f(2);
    f.add_term({{2, 0}, Partition({3, 1})}, Qt::one());
    AlmostSym tf = f.act_T(1);
    for (const auto& [key, c] : tf.terms()) EXPECT_EQ(key.second, Partition({3, 1}));
}

TEST(AlmostSym, EqualAcrossSplits) {
    AlmostSym a(1);
    a.add_term({{0}, Partition({1})}, Qt::one());
    AlmostSym b(2);
    b.add_term({{0, 1}, Partition()}, Qt::one());
    b.add_term({{0, 0}, Partition({1})}, Qt::one());
    EXPECT_TRUE(a.equal(b));
    AlmostSym x1(1), x2(2);
    x1.add_term({{1}, Partition()}, Qt::one());
    x2.add_term({{0, 1}, Partition()}, Qt::one());
    EXPECT_FALSE(x1.equal(x2));
    EXPECT_TRUE(AlmostSym::zero(0).equal(AlmostSym::zero(4)));
}

TEST(AlmostSym, ProjectionIsRingMorphism) {
    std::mt19937 rng(47);
    for (int i = 0; i < 8; ++i) {
        AlmostSym f = random_almostsym(rng, 1, 2);
        AlmostSym g = random_almostsym(rng, 2, 2);
        int n = 6;
        EXPECT_EQ((f * g).project_pi(n), f.project_pi(n) * g.project_pi(n));
    }
}

TEST(AlmostSym, Degree) {
    AlmostSym f(2);
    f.add_term({{2, 1}, Partition({2, 1})}, Qt::one());
    f.add_term({{0, 0}, Partition({1})}, Qt::one());
    EXPECT_EQ(f.degree(), 6);
    EXPECT_EQ(AlmostSym::zero(1).degree(), 0);
}

TEST(AlmostSym, StringForm) {
    AlmostSym f(1);
    f.add_term({{2}, Partition()}, Qt::one());
    f.add_term({{1}, Partition({1})}, (Qt::one() - Qt::t()) / (Qt::q() - Qt::t()));
    EXPECT_EQ(f.str(), "split=1; [2] ⊗ m[]: 1; [1] ⊗ m[1]: (1 - t)/(q - t)");
    EXPECT_EQ(AlmostSym::zero(2).str(), "split=2; 0");
}
