#include "stablemac/stablelimit.hpp"

#include "stablemac/daha.hpp"
#include "stablemac/fillings.hpp"

#include <gtest/gtest.h>

using namespace stablemac;

namespace {

// x-monomial times a symmetric tail, presented at the given split.
AlmostSym mono_times(const std::vector<int>& xexp, const SymFunc& tail) {
    SymFunc m = tail.basis() == SFBasis::m ? tail : tail.convert(SFBasis::m);
    AlmostSym out(int(xexp.size()));
    for (const auto& [nu, c] : m.terms()) out.add_term({xexp, nu}, c);
    return out;
}

bool is_homogeneous(const AlmostSym& f, int degree) {
    for (const auto& [key, c] : f.terms()) {
        int d = key.second.size();
        for (int x : key.first) d += x;
        if (d != degree) return false;
    }
    return true;
}

}  // namespace

TEST(StableLimit, LimitY1OnConstants) {
    EXPECT_TRUE(limit_y1(AlmostSym::constant(Qt::one())).is_zero());
    EXPECT_TRUE(limit_y1(AlmostSym::zero(0)).is_zero());
}

TEST(StableLimit, EigenEquationRankTwo) {
    AlmostSym e20 = stable_e({2, 0});
    auto alpha = weight_alpha_tilde({2, 0});
    EXPECT_TRUE(limit_y1(e20).equal((e20 * alpha[0]).lower_split()));
    AlmostSym e02 = stable_e({0, 2});
    auto alpha2 = weight_alpha_tilde({0, 2});
    EXPECT_TRUE(limit_y(1, e02).is_zero());
    EXPECT_TRUE(limit_y(2, e02).equal((e02 * alpha2[1]).lower_split()));
    // both paths agree
    EXPECT_TRUE(limit_y_weight_path(1, e20, alpha[0]).equal(limit_y1(e20)));
}

TEST(StableLimit, YBeyondLengthVanishes) {
    AlmostSym e = stable_e({1, 1});
    EXPECT_TRUE(limit_y(3, e).is_zero());
    // A functions have weight zero everywhere
    AlmostSym a2 = AlmostSym::from_symfunc(a_function(Partition({2})));
    EXPECT_TRUE(limit_y(1, a2).is_zero());
}

TEST(StableLimit, NonConvergenceIsAnError) {
    AlmostSym f = stable_e({0, 2}).act_T(1);
    LimitYOptions tight;
    tight.n0 = 5;
    tight.n_max = 6;  // too small a window for the geometric tail
    EXPECT_THROW(limit_y1(f, tight), NonConvergenceError);
}

TEST(StableLimit, PartialMinusExamples) {
    // projection onto the lower split ring
    AlmostSym f(1);
    f.add_term({{2}, Partition({1})}, Qt::q());
    EXPECT_TRUE(partial_minus(2, f).equal(f));
    // x1^2 -> P_2 reseated on x1+...
    AlmostSym x1sq(1);
    x1sq.add_term({{2}, Partition()}, Qt::one());
    AlmostSym d = partial_minus(1, x1sq);
    EXPECT_TRUE(d.equal(AlmostSym::from_symfunc(hall_littlewood_p(Partition({2})))));
    // split precondition
    AlmostSym g(3);
    g.add_term({{1, 1, 1}, Partition()}, Qt::one());
    EXPECT_THROW(partial_minus(2, g), std::invalid_argument);
}

TEST(StableLimit, LoweringChainPaperExample) {
    // d-(2) d-(3) E~_(1,1,1) = x1 P_{1,1}[x2+...]
    AlmostSym e = stable_e({1, 1, 1});
    AlmostSym d = partial_minus(2, partial_minus(3, e));
    AlmostSym expect = mono_times({1}, hall_littlewood_p(Partition({1, 1})));
    EXPECT_TRUE(d.equal(expect));
}

TEST(StableLimit, SigmaTilde) {
    // identity on Lambda
    SymFunc f = SymFunc::basis_element(SFBasis::m, Partition({2, 1})) * Qt::q() +
                SymFunc::basis_element(SFBasis::m, Partition({1})) * (Qt::one() - Qt::t());
    EXPECT_TRUE(sigma_tilde(AlmostSym::from_symfunc(f)).equals(f));
    // presentation independence
    EXPECT_TRUE(sigma_tilde(AlmostSym::from_symfunc(f).raise_split(3)).equals(f));
    // sigma(x1) = (1-t) m1
    AlmostSym x1(1);
    x1.add_term({{1}, Partition()}, Qt::one());
    SymFunc expect = SymFunc::basis_element(SFBasis::m, Partition({1})) * (Qt::one() - Qt::t());
    EXPECT_TRUE(sigma_tilde(x1).equals(expect));
}

TEST(StableLimit, AFunction) {
    EXPECT_TRUE(a_function(Partition()).equals(SymFunc::one()));
    // A_(2) = P_2 + (1/(q-t)) P_{1,1} in the Hall-Littlewood basis
    const SymFunc& hlp = a_function_hlp(Partition({2}));
    EXPECT_EQ(hlp.coeff(Partition({2})), Qt::one());
    EXPECT_EQ(hlp.coeff(Partition({1, 1})), Qt::one() / (Qt::q() - Qt::t()));
    EXPECT_EQ(hlp.terms().size(), 2u);
    // sigma(E~_(2)) = A_(2)
    EXPECT_TRUE(sigma_tilde(stable_e({2})).equals(a_function(Partition({2}))));
}

TEST(StableLimit, GammaMu) {
    // partitions give 1
    for (const Composition mu : {Composition{2}, Composition{1, 1}, Composition{2, 1}})
        EXPECT_TRUE(gamma_mu(mu).is_one()) << comp_str(mu);
    // frozen derived value
    EXPECT_TRUE(gamma_mu({0, 2}).is_one());
    // nonzero for rearrangements
    EXPECT_FALSE(gamma_mu({1, 2}).is_zero());
    EXPECT_FALSE(gamma_mu({0, 1, 1}).is_zero());
}

TEST(StableLimit, PairBasics) {
    EXPECT_TRUE(pair_admissible({{}, Partition({2})}));
    EXPECT_TRUE(pair_admissible({{0, 1}, Partition()}));
    EXPECT_FALSE(pair_admissible({{1, 0}, Partition()}));
    EXPECT_EQ(IndexedPair({{1}, Partition({1, 1})}).str(), "(1|1,1)");
    EXPECT_EQ(IndexedPair({{}, Partition({2})}).str(), "(-|2)");
    // E~_(mu|empty) = E~_mu
    EXPECT_TRUE(stable_e_pair({{2, 1}, Partition()}).equal(stable_e({2, 1})));
    // E~_(empty|lambda) = A_lambda
    EXPECT_TRUE(stable_e_pair({{}, Partition({2})})
                    .equal(AlmostSym::from_symfunc(a_function(Partition({2})))));
}

TEST(StableLimit, PaperPairExpansions) {
    Qt omt = Qt::one() - Qt::t();
    Qt qmt = Qt::q() - Qt::t();
    // (empty|2)
    SymFunc a2 = hall_littlewood_p(Partition({2})) +
                 hall_littlewood_p(Partition({1, 1})) * (Qt::one() / qmt);
    EXPECT_TRUE(stable_e_pair({{}, Partition({2})}).equal(AlmostSym::from_symfunc(a2)));
    // (1|1,1) = x1 P_{1,1}[x2+...]
    AlmostSym expect11 = mono_times({1}, hall_littlewood_p(Partition({1, 1})));
    EXPECT_TRUE(stable_e_pair({{1}, Partition({1, 1})}).equal(expect11));
    // (0|2) as printed: P2[x2+..] + (1-t)x1^2 + (1/(q-t))P11[x2+..]
    //                  + ((1+q)(1-t)/(q-t)) x1 P1[x2+..]
    AlmostSym expect02 = mono_times({2}, SymFunc::one() * omt) +
                         mono_times({1}, hall_littlewood_p(Partition({1})) *
                                             ((Qt::one() + Qt::q()) * omt / qmt)) +
                         mono_times({0}, hall_littlewood_p(Partition({2}))) +
                         mono_times({0}, hall_littlewood_p(Partition({1, 1})) * (Qt::one() / qmt));
    AlmostSym got = stable_e_pair({{0}, Partition({2})});
    EXPECT_TRUE(got.equal(expect02));
    // and the same element collapses into Lambda: it equals A_(2)
    EXPECT_TRUE(got.equal(AlmostSym::from_symfunc(a_function(Partition({2})))));
}

TEST(StableLimit, PairDegreeAndSupport) {
    for (const auto& p : {IndexedPair{{1}, Partition({1, 1})}, IndexedPair{{2}, Partition({1})},
                          IndexedPair{{0, 1}, Partition({1})}}) {
        AlmostSym e = stable_e_pair(p);
        EXPECT_LE(e.split(), int(p.mu.size()));
        EXPECT_TRUE(is_homogeneous(e, comp_size(p.mu) + p.lambda.size()));
        // sigma of the pair equals sigma of the concatenation
        Composition full = p.mu;
        for (int i = 0; i < p.lambda.length(); ++i) full.push_back(p.lambda[i]);
        EXPECT_TRUE(sigma_tilde(e).equals(sigma_tilde(stable_e(full))));
    }
}

TEST(StableLimit, PairWeights) {
    auto w = pair_weight({{1}, Partition({1, 1})});
    ASSERT_EQ(w.size(), 1u);
    EXPECT_EQ(w[0], Qt::q() * Qt::t_pow(3));
    EXPECT_TRUE(pair_weight({{}, Partition({2})}).empty());
    // (mu|empty) restores the full weight
    auto w2 = pair_weight({{2, 0, 1}, Partition()});
    auto expect = weight_alpha_tilde({2, 0, 1});
    ASSERT_EQ(w2.size(), expect.size());
    for (size_t i = 0; i < w2.size(); ++i) EXPECT_EQ(w2[i], expect[i]);
}

TEST(StableLimit, PairWeightDirectCheckSmall) {
    EXPECT_EQ(pair_weight_direct_check({{}, Partition({1})}), "");
    EXPECT_EQ(pair_weight_direct_check({{1}, Partition({1})}), "");
}

TEST(StableLimit, AdmissiblePairsAndCertificates) {
    auto p11 = admissible_pairs(1, 1);
    ASSERT_EQ(p11.size(), 2u);
    auto cert = basis_certificate(1, 1);
    EXPECT_TRUE(cert.pass());
    EXPECT_EQ(cert.dim, 2);
    EXPECT_EQ(cert.rank, 2);
    // the seven pairs in degree 2 at split 2
    auto p22 = admissible_pairs(2, 2);
    EXPECT_EQ(p22.size(), 7u);
    auto cert22 = basis_certificate(2, 2);
    EXPECT_TRUE(cert22.pass());
    EXPECT_EQ(cert22.dim, 7);
    EXPECT_EQ(cert22.rank, 7);
    // k = 0: the A family, p(d) pairs
    auto cert04 = basis_certificate(0, 4);
    EXPECT_TRUE(cert04.pass());
    EXPECT_EQ(cert04.dim, 5);
}

TEST(StableLimit, IntertwinerRecursionSmall) {
    // phi_1 E~_(2,0) = (alpha(1) - alpha(2)) E~_(0,2)
    AlmostSym e20 = stable_e({2, 0});
    auto alpha = weight_alpha_tilde({2, 0});
    AlmostSym lhs = limit_intertwiner_phi(1, e20);
    AlmostSym rhs = (stable_e({0, 2}) * (alpha[0] - alpha[1])).lower_split();
    EXPECT_TRUE(lhs.equal(rhs));
}
