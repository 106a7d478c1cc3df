#include "stablemac/composition.hpp"

#include <gtest/gtest.h>

using namespace stablemac;

TEST(Composition, SortDropsZeros) {
    EXPECT_EQ(sort_composition({0, 2, 0, 1}), Partition({2, 1}));
    EXPECT_EQ(sort_composition({0, 0}), Partition());
    EXPECT_EQ(sort_composition({2, 2}), Partition({2, 2}));
}

TEST(Composition, SortInvariantUnderPadding) {
    for (int n = 1; n <= 3; ++n)
        for (int d = 0; d <= 6; ++d)
            for (const auto& mu : compositions_of(d, n))
                for (int m = 0; m <= 3; ++m)
                    EXPECT_EQ(sort_composition(comp_pad_zeros(mu, m)), sort_composition(mu));
}

TEST(Composition, PartitionValidation) {
    EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
    EXPECT_THROW(Partition({2, 0}), std::invalid_argument);
    EXPECT_THROW(Partition({-1}), std::invalid_argument);
    EXPECT_NO_THROW(Partition({3, 3, 1}));
}

TEST(Composition, Dominance) {
    EXPECT_TRUE(dominance_less(Partition({1, 1, 1}), Partition({2, 1})));
    EXPECT_TRUE(dominance_less(Partition({2, 2}), Partition({3, 1})));
    EXPECT_FALSE(dominance_less(Partition({2, 1}), Partition({2, 1})));
    EXPECT_FALSE(dominance_less(Partition({2, 1}), Partition({1, 1, 1})));
    // unequal sizes are incomparable
    EXPECT_FALSE(dominance_less(Partition({1}), Partition({2, 1})));
    EXPECT_FALSE(dominance_less(Partition({2, 1}), Partition({1})));
}

TEST(Composition, OrbitOrder) {
    EXPECT_TRUE(orbit_less({2, 0}, {0, 2}));
    EXPECT_FALSE(orbit_less({0, 2}, {2, 0}));
    EXPECT_FALSE(orbit_less({2, 0}, {2, 0}));
    EXPECT_TRUE(orbit_less({2, 1, 0}, {0, 1, 2}));
    EXPECT_TRUE(orbit_less({1, 2, 0}, {0, 1, 2}));
    EXPECT_FALSE(orbit_less({0, 1, 2}, {2, 1, 0}));
    // different multisets never compare
    EXPECT_FALSE(orbit_less({1, 1}, {0, 2}));
}

TEST(Composition, Enumeration) {
    EXPECT_EQ(partitions_of(0).size(), 1u);
    EXPECT_EQ(partitions_of(4).size(), 5u);
    EXPECT_EQ(partitions_of(6).size(), 11u);
    EXPECT_EQ(compositions_of(3, 2).size(), 4u);
    EXPECT_EQ(compositions_of(0, 0).size(), 1u);
    EXPECT_EQ(compositions_of(2, 0).size(), 0u);
}

TEST(Composition, Strings) {
    EXPECT_EQ(Partition({2, 1}).str(), "[2,1]");
    EXPECT_EQ(Partition().str(), "[]");
    EXPECT_EQ(comp_str({0, 2}), "(0,2)");
    EXPECT_EQ(comp_str({}), "()");
}
