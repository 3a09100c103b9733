#include <gtest/gtest.h>

#include "oracles.hpp"
#include "z4v/ring.hpp"

using namespace z4v;

TEST(Ring, MultiplicationMatchesPolynomialRule) {
    for (int i = 0; i < 16; ++i)
        for (int j = 0; j < 16; ++j) {
            RElement p = RElement::from_index(i), q = RElement::from_index(j);
            EXPECT_EQ(p * q, oracle::mul(p, q));
        }
    EXPECT_EQ(RElement::v() * RElement::v(), RElement::v());
}

TEST(Ring, CrtRoundTrip) {
    for (int i = 0; i < 16; ++i) {
        RElement r = RElement::from_index(i);
        EXPECT_EQ(crt_join(crt_split(r)), r);
        EXPECT_EQ(crt_split(crt_join(Z4(i & 3), Z4(i >> 2))), (CrtPair{Z4(i & 3), Z4(i >> 2)}));
    }
}

TEST(Ring, CrtIsARingMap) {
    for (int i = 0; i < 16; ++i)
        for (int j = 0; j < 16; ++j) {
            RElement p = RElement::from_index(i), q = RElement::from_index(j);
            auto s = crt_split(p * q), a = crt_split(p), b = crt_split(q);
            EXPECT_EQ(s.x, a.x * b.x);
            EXPECT_EQ(s.y, a.y * b.y);
        }
}

TEST(Ring, Units) {
    int units = 0;
    for (int i = 0; i < 16; ++i) {
        RElement r = RElement::from_index(i);
        bool has_inverse = false;
        for (int j = 0; j < 16; ++j) has_inverse = has_inverse || r * RElement::from_index(j) == RElement(1);
        EXPECT_EQ(r.is_unit(), has_inverse) << to_string(r);
        units += has_inverse;
    }
    EXPECT_EQ(units, 4);
    for (RElement u : r_units) EXPECT_TRUE(u.is_unit());
}

TEST(Ring, Weights) {
    for (int i = 0; i < 16; ++i) {
        RElement r = RElement::from_index(i);
        auto [x, y] = gray_element(r);
        EXPECT_EQ(weight(r, Metric::gray), oracle::gray(r));
        EXPECT_EQ(weight(r, Metric::euclidean), oracle::euclid(x) + oracle::euclid(y));
        EXPECT_EQ(weight(r, Metric::hamming), r.is_zero() ? 0 : 1);
        EXPECT_LE(weight(r, Metric::gray), 4);
        EXPECT_LE(weight(r, Metric::euclidean), 8);
    }
    EXPECT_EQ(weight(RElement::v(), Metric::gray), 1);
    EXPECT_EQ(weight(RElement(2), Metric::gray), 4);
    EXPECT_EQ(weight(RElement(0, 2), Metric::gray), 2);
    EXPECT_THROW(weight(RElement(1), Metric::lee), Error);
}

TEST(Ring, Conjugation) {
    EXPECT_EQ(conjugate(RElement::v()), RElement(1, 3));
    for (int i = 0; i < 16; ++i) {
        RElement r = RElement::from_index(i);
        EXPECT_EQ(conjugate(conjugate(r)), r);
        auto a = crt_split(r), c = crt_split(conjugate(r));
        EXPECT_EQ(a.x, c.y);
        EXPECT_EQ(a.y, c.x);
    }
}

TEST(Ring, TextRoundTrip) {
    for (int i = 0; i < 16; ++i) {
        RElement r = RElement::from_index(i);
        EXPECT_EQ(parse_element(to_string(r)), r) << to_string(r);
    }
    EXPECT_EQ(to_string(RElement(1, 2)), "1+2v");
    EXPECT_EQ(parse_element("2+v"), RElement(2, 1));
    EXPECT_EQ(parse_element("3v"), RElement(0, 3));
    EXPECT_EQ(parse_element("5"), RElement(1));
    EXPECT_EQ(parse_element("-v"), RElement(0, 3));
    EXPECT_THROW(parse_element("x"), ParseError);
    EXPECT_THROW(parse_metric("taxicab"), ParseError);
}
