#include "stablemac/fillings.hpp"

#include "stablemac/daha.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace stablemac;

TEST(Fillings, EnumerationCounts) {
    int count = 0;
    enumerate_fillings({1}, 1, {}, [&](const Filling&) { ++count; });
    EXPECT_EQ(count, 1);
    count = 0;
    enumerate_fillings({0, 0, 0}, 3, {}, [&](const Filling& f) {
        ++count;
        EXPECT_TRUE(f.labels().empty());
    });
    EXPECT_EQ(count, 1);
}

TEST(Fillings, RowOneLabelsAreForced) {
    // all parts nonzero: row 1 carries {1..n} as a set
    for (const Composition mu : {Composition{1, 1}, Composition{2, 1}, Composition{1, 2, 1}}) {
        int n = int(mu.size());
        enumerate_fillings(mu, n, {}, [&](const Filling& f) {
            std::set<int> row1;
            for (int i = 1; i <= n; ++i) row1.insert(f.label(i, 1));
            EXPECT_EQ(int(row1.size()), n);
        });
    }
}

TEST(Fillings, LeadingCoefficientOne) {
    for (int n = 1; n <= 3; ++n)
        for (int d = 0; d <= 3; ++d)
            for (const auto& mu : compositions_of(d, n)) {
                XPoly e = macdonald_e(mu);
                EXPECT_TRUE(e.coeff(mu).is_one()) << comp_str(mu);
                int deg = 0;
                EXPECT_TRUE(e.is_homogeneous(&deg));
                EXPECT_EQ(deg, d);
            }
}

TEST(Fillings, MatchesEigenOracle) {
    for (int n = 1; n <= 3; ++n)
        for (int d = 0; d <= 3; ++d)
            for (const auto& mu : compositions_of(d, n))
                EXPECT_EQ(macdonald_e(mu), macdonald_e_eigen(mu)) << comp_str(mu);
}

TEST(Fillings, PaperExpansions) {
    EXPECT_EQ(stable_e({1}).str(), "split=1; [1] ⊗ m[]: 1");
    EXPECT_EQ(stable_e({2, 0}).str(),
              "split=1; [2] ⊗ m[]: 1; [1] ⊗ m[1]: (1 - t)/(q - t)");
    EXPECT_EQ(stable_e({0, 2}).str(),
              "split=2; [2,0] ⊗ m[]: 1 - t; "
              "[1,1] ⊗ m[]: (1 + q - 2*t - q*t + t^2)/(q - t); "
              "[1,0] ⊗ m[1]: (1 - 2*t + t^2)/(q - t); "
              "[0,2] ⊗ m[]: 1; "
              "[0,1] ⊗ m[1]: (1 - t)/(q - t)");
    EXPECT_EQ(stable_e({2, 2}).str(),
              "split=2; [2,2] ⊗ m[]: 1; "
              "[2,1] ⊗ m[1]: (1 - t)/(q - t); "
              "[1,2] ⊗ m[1]: (1 - t)/(q - t); "
              "[1,1] ⊗ m[1,1]: (1 - t - t^2 + t^3)/(q^2 - q*t - q*t^2 + t^3)");
}

TEST(Fillings, TrailingZerosDoNotChangeStableLimit) {
    for (const Composition mu : {Composition{1}, Composition{2}, Composition{0, 2},
                                 Composition{1, 1}, Composition{2, 1}}) {
        AlmostSym base = stable_e(mu);
        for (int m = 1; m <= 3; ++m)
            EXPECT_TRUE(stable_e(comp_pad_zeros(mu, m)).equal(base))
                << comp_str(mu) << " m=" << m;
    }
}

TEST(Fillings, PaddedPolynomialIsSymmetricInNewVariables) {
    for (const Composition mu : {Composition{2}, Composition{0, 2}, Composition{1, 1}}) {
        int n = int(mu.size());
        for (int m = 2; m <= 3; ++m) {
            XPoly e = macdonald_e(comp_pad_zeros(mu, m));
            EXPECT_TRUE(e.symmetric_in_range(n + 1, n + m)) << comp_str(mu);
        }
    }
}

TEST(Fillings, GammaFactors) {
    // constant-columns filling: empty product
    Diagram dg({2, 2});
    Filling lead(&dg, {1, 1, 2, 2});
    EXPECT_TRUE(lead.gamma(false).is_one());
    EXPECT_TRUE(lead.gamma(true).is_one());
    EXPECT_EQ(lead.maj(), 0);
    EXPECT_EQ(lead.coinv(), 0);
    // single row-1 mismatch in limit mode: bare (1-t)
    Diagram dg2({0, 1});
    Filling f2(&dg2, {1});
    EXPECT_EQ(f2.gamma(true), Qt::one() - Qt::t());
    // finite mode with leg 0, arm 1: (1-t)/(1 - q^{-1} t^2)
    Diagram dg3({0, 1, 0});
    Filling f3(&dg3, {1});
    Qt expect = (Qt::one() - Qt::t()) / (Qt::one() - Qt::q_pow(-1) * Qt::t_pow(2));
    EXPECT_EQ(f3.gamma(false), expect);
}

TEST(Fillings, ArmLegValues) {
    Diagram dg({2, 2, 0});
    EXPECT_EQ(dg.leg(1, 1), 1);
    EXPECT_EQ(dg.leg(2, 2), 0);
    EXPECT_EQ(dg.arm(2, 2), 1);  // sees the equal-height column on its left
    EXPECT_EQ(dg.arm(1, 2), 0);
    EXPECT_EQ(dg.arm(1, 1), 1);  // row-1 arms count the zero column
    EXPECT_EQ(dg.arm(2, 1), 2);  // equal column left plus the zero column right
}

TEST(Fillings, ConstraintFilter) {
    // lambda = (1): exactly one label 3 in shape (2,1,0); the single legal
    // placement is the top of column 1
    int count = 0;
    enumerate_fillings({2, 1, 0}, 3, {{3, 1}}, [&](const Filling& f) {
        ++count;
        EXPECT_EQ(f.count_label(3), 1);
        EXPECT_EQ(f.label(1, 2), 3);
    });
    EXPECT_EQ(count, 1);
}

TEST(Fillings, ConvergenceWitness) {
    // exact limit: all differences vanish
    auto r1 = convergence_witness({1}, 3);
    for (const auto& v : r1.valuations) EXPECT_FALSE(v.has_value());
    EXPECT_TRUE(r1.weakly_increasing);
    EXPECT_TRUE(r1.positive_from_m1);
    // genuine t-adic convergence
    auto r2 = convergence_witness({0, 2}, 3);
    EXPECT_TRUE(r2.weakly_increasing);
    EXPECT_TRUE(r2.positive_from_m1);
    ASSERT_TRUE(r2.valuations[1].has_value());
    EXPECT_GE(*r2.valuations[1], 1);
}

TEST(Fillings, FillingDumpFormat) {
    Diagram dg({0, 1});
    Filling f(&dg, {1});
    // gamma = (1-t)/(1 - q^{-1} t) cleared to (q - q t)/(q - t)
    EXPECT_EQ(f.str(), "(2,1):1 maj=0 coinv=0 gamma=(q - q*t)/(q - t)");
}
