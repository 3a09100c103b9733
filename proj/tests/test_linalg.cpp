#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "z4v/z4_linalg.hpp"

using namespace z4v;

namespace {

Z4Matrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(0, 3);
    Z4Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = Z4(d(rng));
    return m;
}

} // namespace

TEST(Z4Linalg, SizeAndMembershipAgreeWithSpan) {
    std::mt19937_64 rng(1);
    for (int t = 0; t < 60; ++t) {
        std::size_t n = 1 + t % 5;
        Z4Matrix g = random_matrix(1 + t % 4, n, rng);
        Z4Code c(g);
        auto words = oracle::span(g);
        EXPECT_EQ(c.size(), BigInt(words.size()));
        for (const auto& w : words) EXPECT_TRUE(c.contains(w));
        auto listed = enumerate_codewords(c);
        EXPECT_EQ(std::set<Z4Vector>(listed.begin(), listed.end()), words);
    }
}

TEST(Z4Linalg, CanonicalFormIgnoresRowOperations) {
    std::mt19937_64 rng(2);
    std::uniform_int_distribution<int> d(0, 3);
    for (int t = 0; t < 40; ++t) {
        Z4Matrix g = random_matrix(3, 5, rng);
        Z4Matrix h = g;
        // add a multiple of row 0 to row 1, scale row 2 by a unit, append a combination
        Z4 s(d(rng));
        for (std::size_t j = 0; j < 5; ++j) h(1, j) += s * h(0, j), h(2, j) *= Z4(3);
        Z4Vector extra(5);
        for (std::size_t j = 0; j < 5; ++j) extra[j] = g(0, j) + Z4(2) * g(2, j);
        h.append_row(extra);
        EXPECT_EQ(Z4Code(g), Z4Code(h));
        EXPECT_EQ(howell_form(g), howell_form(h));
    }
}

TEST(Z4Linalg, StandardFormType) {
    Z4Code c(Z4Matrix::from_rows({{1, 1, 1, 1}, {0, 2, 0, 2}, {0, 0, 2, 2}}));
    EXPECT_EQ(c.k1(), 1u);
    EXPECT_EQ(c.k2(), 2u);
    EXPECT_EQ(c.size(), 16);
    EXPECT_EQ(Z4Code::zero(3).log2_size(), 0u);
    EXPECT_EQ(Z4Code::full(3).k1(), 3u);
}

TEST(Z4Linalg, DualByExhaustiveScan) {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 40; ++t) {
        std::size_t n = 1 + t % 4;
        Z4Matrix g = random_matrix(1 + t % 3, n, rng);
        Z4Code c(g);
        Z4Code d = c.dual();
        auto words = oracle::span(g);
        std::size_t count = 0;
        std::size_t total = std::size_t{1} << (2 * n);
        for (std::size_t x = 0; x < total; ++x) {
            Z4Vector w(n);
            for (std::size_t j = 0; j < n; ++j) w[j] = Z4(static_cast<int>((x >> (2 * j)) & 3));
            bool orth = true;
            for (const auto& u : words) orth = orth && oracle::dot(w, u).is_zero();
            EXPECT_EQ(d.contains(w), orth);
            count += orth;
        }
        EXPECT_EQ(d.size(), BigInt(count));
        EXPECT_EQ(d.dual(), c);
    }
}

TEST(Z4Linalg, CapIsEnforced) {
    EXPECT_THROW(enumerate_codewords(Z4Code::full(8), 1000), CapExceeded);
    EXPECT_EQ(enumerate_codewords(Z4Code::full(4), 256).size(), 256u);
}
