#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "z4v/linear_code.hpp"
#include "z4v/verify.hpp"

using namespace z4v;

namespace {

RCode single(RElement r) { return RCode::from_generators(RMatrix::from_rows({{r}})); }

RCode power(const RCode& c, std::size_t k) {
    RCode out = c;
    for (std::size_t i = 1; i < k; ++i) out = direct_product(out, c);
    return out;
}

} // namespace

TEST(LinearCode, AgreesWithSpanAndDualOracle) {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 30; ++t) {
        std::size_t n = 1 + t % 2;
        RCode c = random_r_code(n, rng);
        auto words = oracle::span(c.generators());
        EXPECT_EQ(c.size(), BigInt(words.size()));
        for (const auto& w : words) EXPECT_TRUE(c.contains(w));
        auto dwords = oracle::dual(words, n);
        RCode d = dual(c);
        EXPECT_EQ(d.size(), BigInt(dwords.size()));
        for (const auto& w : dwords) EXPECT_TRUE(d.contains(w));
    }
}

TEST(LinearCode, DualInvolutionAndSizes) {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 20; ++t) {
        std::size_t n = 1 + t % 3;
        RCode c = random_r_code(n, rng);
        EXPECT_EQ(dual(dual(c)), c);
        EXPECT_EQ(c.size() * dual(c).size(), BigInt(1) << (4 * n));
        EXPECT_EQ(c.size() * dual(c, DualKind::hermitian).size(), BigInt(1) << (4 * n));
    }
}

TEST(LinearCode, HermitianDualIsConjugatedEuclideanDual) {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 20; ++t) {
        std::size_t n = 1 + t % 2;
        RCode c = random_r_code(n, rng);
        RCode h = dual(c, DualKind::hermitian);
        EXPECT_EQ(h, conjugate(dual(c)));
        auto words = oracle::span(c.generators());
        for (const auto& w : oracle::space(n)) {
            bool orth = true;
            for (const auto& u : words) {
                RVector cu(u.size());
                for (std::size_t j = 0; j < u.size(); ++j) cu[j] = conjugate(u[j]);
                orth = orth && oracle::dot(w, cu).is_zero();
            }
            EXPECT_EQ(h.contains(w), orth);
        }
    }
}

TEST(LinearCode, CodeGeneratedByTwo) {
    RCode c = single(RElement(2));
    EXPECT_EQ(c.size(), 4);
    EXPECT_EQ(dual(c), c);
    EXPECT_EQ(dual(c, DualKind::hermitian), c);
    DualityReport r = classify_duality(c);
    EXPECT_EQ(r.duality, Duality::self_dual);
    EXPECT_EQ(r.type, SelfDualType::type_i);
    EXPECT_EQ(min_distance(c, Metric::gray), 2);
}

TEST(LinearCode, ZeroAndFullCodes) {
    RCode zero = RCode::from_crt(Z4Code::zero(2), Z4Code::zero(2));
    EXPECT_EQ(classify_duality(zero).duality, Duality::self_orthogonal);
    EXPECT_EQ(min_distance(zero, Metric::gray), std::nullopt);
    RCode full = RCode::from_crt(Z4Code::full(2), Z4Code::full(2));
    for (Metric m : {Metric::hamming, Metric::gray, Metric::euclidean}) EXPECT_EQ(min_distance(full, m), 1);
    SingletonReport s = singleton_report(full);
    EXPECT_TRUE(s.is_mds);
    EXPECT_TRUE(s.is_mgds);
}

TEST(LinearCode, AllTwoCodeIsMgds) {
    RCode c = RCode::from_generators(RMatrix::from_rows({{2, 2}}));
    EXPECT_TRUE(singleton_report(c).is_mgds);
}

TEST(LinearCode, ProductsOfTheTwoCodeAreSelfDual) {
    RCode two = single(RElement(2));
    for (std::size_t n = 1; n <= 6; ++n) {
        RCode c = power(two, n);
        EXPECT_EQ(c.length(), n);
        EXPECT_EQ(c.size(), BigInt(1) << (2 * n));
        EXPECT_EQ(classify_duality(c).duality, Duality::self_dual) << n;
    }
}

TEST(LinearCode, GrayImageCommutesWithDual) {
    std::mt19937_64 rng(14);
    for (int t = 0; t < 30; ++t) {
        RCode c = random_r_code(1 + t % 3, rng);
        EXPECT_EQ(gray_image(dual(c)), gray_image(c).dual());
        EXPECT_EQ(min_distance(c, Metric::gray), min_distance(gray_image(c), Metric::lee));
    }
}

TEST(LinearCode, DistancesByDirectEnumeration) {
    std::mt19937_64 rng(15);
    for (int t = 0; t < 30; ++t) {
        std::size_t n = 1 + t % 2;
        RCode c = random_r_code(n, rng);
        std::optional<int> dh, dg, de;
        for (const auto& w : oracle::span(c.generators())) {
            int h = 0, g = 0, e = 0;
            for (RElement r : w) {
                h += !r.is_zero();
                g += oracle::gray(r);
                e += oracle::euclid(r.a()) + oracle::euclid(r.a() + r.b());
            }
            if (!h) continue;
            dh = dh ? std::min(*dh, h) : h;
            dg = dg ? std::min(*dg, g) : g;
            de = de ? std::min(*de, e) : e;
        }
        EXPECT_EQ(min_distance(c, Metric::hamming), dh);
        EXPECT_EQ(min_distance(c, Metric::gray), dg);
        EXPECT_EQ(min_distance(c, Metric::euclidean), de);
    }
}

TEST(LinearCode, EstimateIsAnUpperBound) {
    std::mt19937_64 rng(16);
    for (int t = 0; t < 10; ++t) {
        RCode c = random_r_code(3, rng);
        auto exact = min_distance(c, Metric::gray);
        auto est = estimate_min_distance(c, Metric::gray, 200);
        ASSERT_EQ(exact.has_value(), est.has_value());
        if (exact) EXPECT_GE(est->value, *exact);
    }
    EXPECT_STREQ(DistanceEstimate::label, "upper_bound");
}

TEST(LinearCode, CapExceeded) {
    RCode full = RCode::from_crt(Z4Code::full(8), Z4Code::full(8));
    EXPECT_THROW(min_distance(full, Metric::euclidean, 1 << 10), CapExceeded);
}

TEST(LinearCode, IsodualWitness) {
    RCode two = single(RElement(2));
    IsodualWitness id{{0}, {RElement(1)}};
    EXPECT_TRUE(check_isodual(two, id));
    // (1, 0) spans a code whose dual is spanned by (0, 1); only the swap works
    RCode c = RCode::from_generators(RMatrix::from_rows({{1, 0}}));
    EXPECT_FALSE(check_isodual(c, IsodualWitness{{0, 1}, {RElement(1), RElement(1)}}));
    EXPECT_TRUE(check_isodual(c, IsodualWitness{{1, 0}, {RElement(1), RElement(1)}}));
    EXPECT_THROW(check_isodual(c, id), DimensionMismatch);
}

TEST(LinearCode, DirectProduct) {
    RCode two = single(RElement(2));
    RCode p = direct_product(two, two);
    EXPECT_EQ(p.length(), 2u);
    EXPECT_EQ(p.size(), 16);
    EXPECT_EQ(classify_duality(p).duality, Duality::self_dual);
}
