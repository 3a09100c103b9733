#include <gtest/gtest.h>

#include <random>

#include "z4v/cyclic.hpp"
#include "z4v/verify.hpp"

using namespace z4v;

namespace {

PolyZ4 p(const char* s) { return parse_poly_z4(s); }

} // namespace

TEST(Cyclic, AllCodesOfLengthThree) {
    auto codes = enumerate_cyclic(3);
    ASSERT_EQ(codes.size(), 81u);
    for (std::size_t i = 0; i < codes.size(); ++i) {
        EXPECT_TRUE(is_cyclic(codes[i].code));
        EXPECT_TRUE(is_cyclic(codes[i].code.c1()) && is_cyclic(codes[i].code.c2()));
        for (std::size_t j = 0; j < i; ++j) EXPECT_FALSE(codes[i].code == codes[j].code);
    }
}

TEST(Cyclic, CyclicIffBothComponentsCyclic) {
    std::mt19937_64 rng(31);
    int non_cyclic = 0;
    for (int t = 0; t < 60; ++t) {
        RCode c = random_r_code(3, rng);
        bool both = is_cyclic(c.c1()) && is_cyclic(c.c2());
        EXPECT_EQ(is_cyclic(c), both);
        non_cyclic += !both;
    }
    EXPECT_GT(non_cyclic, 0);
}

TEST(Cyclic, ComponentSizes) {
    // (fg, 2fh) has type 4^deg h 2^deg g
    Z4CyclicCode c = z4_cyclic(p("X^3 + 3X^2 + 2X + 3"), p("X + 3"), p("X^3 + 2X^2 + X + 3"), 7);
    EXPECT_EQ(c.code.k1(), 3u);
    EXPECT_EQ(c.code.k2(), 1u);
    EXPECT_THROW(z4_cyclic(p("X + 3"), p("1"), p("1"), 7), BadFactorization);
    EXPECT_THROW(z4_cyclic(p("X + 3"), p("X + 1"), p("1"), 2), EvenLength);
}

TEST(Cyclic, SingleGeneratorSpansTheCode) {
    for (std::size_t n : {3, 7})
        for_each_cyclic(n, [&](const RCyclicCode& c) {
            EXPECT_EQ(cyclic_span(std::vector<PolyR>{single_generator(c)}, n), c.code);
        });
}

TEST(Cyclic, Idempotents) {
    for (std::size_t n : {3, 7}) {
        int free_codes = 0;
        for_each_cyclic(n, [&](const RCyclicCode& c) {
            bool is_free = c.c1.g.degree() == 0 && c.c2.g.degree() == 0;
            if (!is_free) {
                EXPECT_THROW(generating_idempotent(c), NotFree);
                return;
            }
            ++free_codes;
            PolyR e = generating_idempotent(c);
            EXPECT_EQ(e * e, e);
            EXPECT_EQ(cyclic_span(std::vector<PolyR>{e}, n), c.code);
            EXPECT_EQ(cyclic_span(std::vector<PolyR>{dual_idempotent(e)}, n), dual(c.code));
        });
        EXPECT_EQ(free_codes, n == 3 ? 16 : 64);
    }
    EXPECT_TRUE(dual_idempotent(PolyR::constant(RElement(1), 3)).is_zero());
    EXPECT_EQ(dual_idempotent(PolyR::constant(RElement(0), 3)), PolyR::constant(RElement(1), 3));
    EXPECT_THROW(dual_idempotent(PolyR::constant(RElement(2), 3)), NotIdempotent);
}

TEST(Cyclic, SelfDualExistence) {
    EXPECT_FALSE(selfdual_cyclic_exists(3));
    EXPECT_FALSE(selfdual_cyclic_exists(5));
    EXPECT_TRUE(selfdual_cyclic_exists(7));
    EXPECT_TRUE(selfdual_cyclic_exists(15));
    EXPECT_TRUE(selfdual_cyclic(3).empty());
    EXPECT_EQ(selfdual_cyclic(3, SelfDualFilter::all).size(), 1u);
    EXPECT_THROW(selfdual_cyclic(4), EvenLength);
}

TEST(Cyclic, SelfDualAtSeven) {
    auto all = selfdual_cyclic(7, SelfDualFilter::all);
    EXPECT_EQ(all.size(), 9u);
    for (const auto& c : all) {
        EXPECT_EQ(dual(c.code), c.code);
        Z4Code image = gray_image(c.code);
        EXPECT_EQ(image.length(), 14u);
        EXPECT_EQ(image.dual(), image);
    }
    auto nt = selfdual_cyclic(7);
    ASSERT_EQ(nt.size(), 1u);
    EXPECT_TRUE(equal_up_to_unit(nt[0].c1.f, p("X^3 + 3X^2 + 2X + 3")));
}

TEST(Cyclic, SelfDualCounts) {
    struct Row {
        std::size_t n, all, nontrivial, orbits;
    };
    // per component: 3^s, 2^s - 1 and the multiplier-orbit count, s = reciprocal pairs
    for (Row r : {Row{7, 3, 1, 1}, Row{15, 3, 1, 1}, Row{21, 9, 3, 4}, Row{23, 3, 1, 1}, Row{31, 27, 7, 5},
                  Row{35, 9, 3, 4}, Row{39, 3, 1, 1}}) {
        FactorTable t(r.n);
        EXPECT_EQ(t.selfdual_assignments(SelfDualFilter::all).size(), r.all) << r.n;
        EXPECT_EQ(t.selfdual_assignments(SelfDualFilter::nontrivial).size(), r.nontrivial) << r.n;
        EXPECT_EQ(selfdual_cyclic(r.n).size(), r.nontrivial * r.nontrivial) << r.n;
        EXPECT_EQ(selfdual_cyclic(r.n, SelfDualFilter::orbit_representatives).size(), r.orbits * r.orbits) << r.n;
    }
}

TEST(Cyclic, FactorTablePartners) {
    FactorTable t(7);
    ASSERT_EQ(t.size(), 3u);
    EXPECT_EQ(t.partner(0), 0u);
    EXPECT_EQ(t.partner(1), 2u);
    EXPECT_EQ(t.reciprocal_pairs(), 1u);
    EXPECT_NE(t.is_primary(1), t.is_primary(2));
    for (std::size_t i = 0; i < t.size(); ++i)
        EXPECT_TRUE(equal_up_to_unit(reciprocal(t.factors()[i], true), t.factors()[t.partner(i)]));
}
