#include <gtest/gtest.h>

#include <random>

#include "laby/multiset.hpp"

using namespace laby;

TEST(MultiSet, DegreeAndCardinality) {
    MSet m{"x", "x", "y"};
    EXPECT_EQ(m.cardinality(), 3);
    EXPECT_EQ(m.degree(), 2);
    EXPECT_EQ(m.mult("x"), 2);
    EXPECT_EQ(m.mult("z"), 0);
    EXPECT_EQ(MSet{}.degree(), 1);
    MSet n = MSet::from_counts({{"a", 3}, {"b", 0}});
    EXPECT_EQ(n.support(), std::vector<Elem>{"a"});
    EXPECT_EQ(n.degree(), 6);
}

TEST(MultiSet, CombineExamples) {
    MSet aab{"a", "a", "b"}, ac{"a", "c"}, abb{"a", "b", "b"};
    EXPECT_EQ(ms_combine(MsOp::DisjointUnion, aab, ac), (MSet{"a", "a", "a", "b", "c"}));
    EXPECT_EQ(ms_combine(MsOp::Difference, aab, abb), (MSet{"a"}));
    EXPECT_EQ(ms_combine(MsOp::Union, aab, abb), (MSet{"a", "a", "b", "b"}));
    EXPECT_EQ(ms_combine(MsOp::Intersection, aab, abb), (MSet{"a", "b"}));
    MSet prod = ms_combine(MsOp::Product, MSet{"a", "a"}, MSet{"x"});
    EXPECT_EQ(prod.cardinality(), 2);
    EXPECT_EQ(prod.mult(pair_name("a", "x")), 2);
    auto typed = ms_product(MSet{"a", "a", "b"}, MSet{"x", "x"});
    EXPECT_EQ(typed.mult({"a", "x"}), 4);
    EXPECT_EQ(typed.mult({"b", "x"}), 2);
}

TEST(MultiSet, IsSub) {
    EXPECT_TRUE(is_sub(MSet{"a"}, MSet{"a", "a"}));
    EXPECT_FALSE(is_sub(MSet{"a", "a", "a"}, MSet{"a", "a"}));
    EXPECT_TRUE(is_sub(MSet{}, MSet{}));
}

TEST(MultiSet, SupportLift) {
    EXPECT_EQ(support_lift(MSet{"x", "x", "y"}), (std::vector<Elem>{"x#1", "x#2", "y#1"}));
    EXPECT_EQ(support_lift(MSet{"a"}), (std::vector<Elem>{"a#1"}));
    EXPECT_TRUE(support_lift(MSet{}).empty());
}

TEST(MultiSet, EnumerateSupportedExamples) {
    auto r = enumerate_supported(std::vector<Elem>{"a", "b", "c"}, 4);
    ASSERT_EQ(r.size(), 3u);
    EXPECT_EQ(r[0], (MSet{"a", "a", "b", "c"}));
    EXPECT_EQ(r[1], (MSet{"a", "b", "b", "c"}));
    EXPECT_EQ(r[2], (MSet{"a", "b", "c", "c"}));
    EXPECT_EQ(enumerate_supported(std::vector<Elem>{"a"}, 1), std::vector<MSet>{MSet{"a"}});
    EXPECT_TRUE(enumerate_supported(std::vector<Elem>{"a", "b"}, 1).empty());
    EXPECT_EQ(enumerate_supported(std::vector<Elem>{}, 0).size(), 1u);
}

TEST(MultiSet, EnumerateSupportedStarsAndBars) {
    const std::vector<Elem> names{"p", "q", "r", "s"};
    for (std::size_t s = 1; s <= 4; ++s)
        for (long n = 0; n <= 8; ++n) {
            std::vector<Elem> sup(names.begin(), names.begin() + static_cast<long>(s));
            auto r = enumerate_supported(sup, n);
            Integer expect = n >= 1 ? detail::binom_int(n - 1, static_cast<long>(s) - 1) : Integer(0);
            EXPECT_EQ(Integer(static_cast<unsigned long>(r.size())), expect) << s << " " << n;
            for (const auto& m : r) {
                EXPECT_EQ(m.cardinality(), n);
                EXPECT_EQ(m.support(), sup);
            }
            EXPECT_TRUE(std::is_sorted(r.begin(), r.end()));
        }
}

TEST(MultiSet, EnumerationLimit) {
    std::vector<Elem> sup{"a", "b", "c", "d", "e", "f"};
    EXPECT_THROW(enumerate_supported(sup, 40, 1000), EnumerationLimit);
    MSet big = MSet::from_counts({{"a", 1000}, {"b", 1000}});
    EXPECT_THROW(enumerate_sub_multisets(big, 1000), EnumerationLimit);
}

TEST(MultiSet, SubMultisets) {
    EXPECT_EQ(enumerate_sub_multisets(MSet{"a", "a"}), (std::vector<MSet>{MSet{}, MSet{"a"}, MSet{"a", "a"}}));
    EXPECT_EQ(enumerate_sub_multisets(MSet{"a", "b"}),
              (std::vector<MSet>{MSet{}, MSet{"a"}, MSet{"b"}, MSet{"a", "b"}}));
    EXPECT_EQ(enumerate_sub_multisets(MSet{}), std::vector<MSet>{MSet{}});
    MSet m{"a", "a", "b", "c", "c", "c"};
    auto subs = enumerate_sub_multisets(m);
    EXPECT_EQ(subs.size(), 3u * 2u * 4u);
    for (const auto& s : subs) EXPECT_TRUE(is_sub(s, m));
}

TEST(MultiSet, RandomAlgebraLaws) {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> pick(0, 3), cnt(0, 3);
    const char* names[] = {"a", "b", "c", "d"};
    for (int t = 0; t < 200; ++t) {
        MSet a, b;
        for (int i = 0; i < 4; ++i) {
            a.insert(names[pick(rng)], cnt(rng));
            b.insert(names[pick(rng)], cnt(rng));
        }
        EXPECT_EQ(ms_disjoint_union(a, b).cardinality(), a.cardinality() + b.cardinality());
        EXPECT_TRUE(is_sub(ms_intersection(a, b), a));
        EXPECT_TRUE(is_sub(a, ms_union(a, b)));
        EXPECT_EQ(ms_disjoint_union(ms_difference(a, b), ms_intersection(a, b)), a);
        EXPECT_EQ(static_cast<long>(support_lift(a).size()), a.cardinality());
    }
}

TEST(MultiSet, OfCardinality) {
    auto r = enumerate_of_cardinality(std::vector<Elem>{"1", "2", "3"}, 3);
    EXPECT_EQ(r.size(), 10u);
    EXPECT_EQ(enumerate_of_cardinality(std::vector<Elem>{}, 0).size(), 1u);
    EXPECT_TRUE(enumerate_of_cardinality(std::vector<Elem>{}, 2).empty());
}
