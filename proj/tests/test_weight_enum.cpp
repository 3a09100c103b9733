#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "z4v/text_io.hpp"
#include "z4v/verify.hpp"
#include "z4v/weight_enum.hpp"

using namespace z4v;

TEST(WeightEnum, DistributionMatchesSpan) {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 20; ++t) {
        std::size_t n = 1 + t % 2;
        RCode c = random_r_code(n, rng);
        std::map<int, BigInt> gray;
        for (const auto& w : oracle::span(c.generators())) {
            int g = 0;
            for (RElement r : w) g += oracle::gray(r);
            gray[g] += 1;
        }
        WeightDistribution d = distribution(c, Metric::gray);
        EXPECT_EQ(d.coeffs, gray);
        EXPECT_EQ(d.total(), c.size());
        EXPECT_EQ(d.length_scale, 4 * n);
    }
}

TEST(WeightEnum, GrayOfCodeIsLeeOfImage) {
    std::mt19937_64 rng(22);
    for (int t = 0; t < 30; ++t) {
        RCode c = random_r_code(1 + t % 3, rng);
        EXPECT_EQ(distribution(c, Metric::gray).coeffs, distribution(gray_image(c), Metric::lee).coeffs);
        EXPECT_EQ(distribution(c, Metric::euclidean).coeffs, distribution(gray_image(c), Metric::euclidean).coeffs);
    }
}

TEST(WeightEnum, SymmetrizedSpecializes) {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 20; ++t) {
        RCode c = random_r_code(1 + t % 3, rng);
        SymmetrizedEnumerator swe = symmetrize(complete_enumerator(c));
        EXPECT_EQ(specialize(swe, Metric::gray), distribution(c, Metric::gray));
        EXPECT_EQ(specialize(swe, Metric::hamming), distribution(c, Metric::hamming));
    }
}

TEST(WeightEnum, CompleteEnumeratorCountsSymbols) {
    RCode two = RCode::from_generators(RMatrix::from_rows({{2}}));
    CompleteEnumerator cwe = complete_enumerator(two);
    EXPECT_EQ(cwe.terms.size(), 4u);
    BigInt total = 0;
    for (const auto& [e, count] : cwe.terms) {
        std::uint32_t sum = 0;
        for (auto x : e) sum += x;
        EXPECT_EQ(sum, 1u);
        total += count;
    }
    EXPECT_EQ(total, 4);
}

TEST(WeightEnum, MacWilliamsGray) {
    std::mt19937_64 rng(24);
    for (int t = 0; t < 30; ++t) {
        RCode c = random_r_code(1 + t % 3, rng);
        RCode d = dual(c);
        WeightDistribution g = distribution(c, Metric::gray);
        WeightDistribution predicted = macwilliams_gray(g, c.size());
        EXPECT_EQ(predicted, distribution(d, Metric::gray));
        EXPECT_EQ(macwilliams_gray(predicted, d.size()), g);
    }
}

TEST(WeightEnum, MacWilliamsLeeOverZ4) {
    std::mt19937_64 rng(25);
    for (int t = 0; t < 20; ++t) {
        Z4Code c = gray_image(random_r_code(1 + t % 2, rng));
        EXPECT_EQ(macwilliams_lee(distribution(c, Metric::lee), c.size()), distribution(c.dual(), Metric::lee));
    }
}

TEST(WeightEnum, NonIntegerTransformIsRejected) {
    RCode two = RCode::from_generators(RMatrix::from_rows({{2}}));
    EXPECT_THROW(macwilliams_gray(distribution(two, Metric::gray), 3), NonIntegerTransform);
}

TEST(WeightEnum, PolyString) {
    RCode two = RCode::from_generators(RMatrix::from_rows({{2}}));
    EXPECT_EQ(to_poly_string(distribution(two, Metric::gray)), "1 + 2y^2 + y^4");
}

TEST(WeightEnum, JsonRoundTrip) {
    std::mt19937_64 rng(26);
    for (int t = 0; t < 10; ++t) {
        RCode c = random_r_code(2, rng);
        for (Metric m : {Metric::hamming, Metric::gray, Metric::euclidean}) {
            WeightDistribution d = distribution(c, m);
            nlohmann::json j = distribution_json(d);
            EXPECT_EQ(j["size"], c.size().str());
            EXPECT_EQ(distribution_from_json(nlohmann::json::parse(j.dump())), d);
        }
    }
}
