#include <gtest/gtest.h>

#include "z4v/poly.hpp"

using namespace z4v;

namespace {

PolyZ4 p(const char* s, std::size_t n = 0) { return parse_poly_z4(s, n); }

} // namespace

TEST(Poly, FreeMultiplication) {
    EXPECT_EQ(p("X + 3") * p("X^2 + X + 1"), p("X^3 + 3"));
    EXPECT_EQ(p("X^3 + 3"), x_n_minus_one(3));
}

TEST(Poly, QuotientRing) {
    EXPECT_EQ(p("1 + 2X", 3).eval_shift(), p("1 + 2X^2", 3));
    PolyZ4 f = p("3 + X + 2X^2", 3);
    EXPECT_TRUE((f + (-f)).is_zero());
    EXPECT_EQ(p("X^2", 3) * p("X", 3), PolyZ4::constant(Z4(1), 3));
    EXPECT_THROW(p("X", 3) + p("X", 5), ModulusMismatch);
    EXPECT_THROW(p("X", 3) * p("X"), ModulusMismatch);
}

TEST(Poly, Reciprocal) {
    EXPECT_EQ(reciprocal(p("X^3 + 3X^2 + 2X + 3")), p("3X^3 + 2X^2 + 3X + 1"));
    EXPECT_EQ(reciprocal(p("X^3 + 3X^2 + 2X + 3"), true), p("X^3 + 2X^2 + X + 3"));
    EXPECT_THROW(reciprocal(p("2 + X"), true), NonUnitLeadingCoeff);
    EXPECT_TRUE(equal_up_to_unit(p("X + 1"), p("3X + 3")));
    EXPECT_FALSE(equal_up_to_unit(p("X + 1"), p("X + 3")));
}

TEST(Poly, Division) {
    auto [q, r] = divmod(p("X^3 + 3"), p("X + 3"));
    EXPECT_EQ(q, p("X^2 + X + 1"));
    EXPECT_TRUE(r.is_zero());
    EXPECT_THROW(exact_quotient(p("X^3 + 3"), p("X + 1")), NotAFactor);
}

TEST(Poly, TextRoundTrip) {
    for (const char* s : {"0", "1", "3 + 2X + X^3", "2X^5"}) EXPECT_EQ(to_string(p(s)), s);
    PolyR r = parse_poly_r("(1+v) + vX^2");
    EXPECT_EQ(parse_poly_r(to_string(r)), r);
    EXPECT_THROW(parse_poly_z4("X^"), ParseError);
}

TEST(Poly, CrtOnPolynomials) {
    PolyR f = parse_poly_r("(1+v) + 2vX + 3X^2", 3);
    auto [x, y] = crt_split(f);
    EXPECT_EQ(crt_join(x, y), f);
    EXPECT_EQ(x, p("2 + 2X + 3X^2", 3));
    EXPECT_EQ(y, p("1 + 3X^2", 3));
}

TEST(Poly, BinaryFactorization) {
    EXPECT_EQ(order_of_two(7), 3u);
    EXPECT_EQ(order_of_two(23), 11u);
    EXPECT_EQ(cyclotomic_cosets(7).size(), 3u);
    EXPECT_EQ(cyclotomic_cosets(15).size(), 5u);
    for (std::size_t n : {1, 3, 5, 7, 9, 15, 21, 23, 31, 35, 39, 45}) {
        auto fs = factor_binary(n);
        PolyF2 prod{1};
        for (const auto& f : fs) prod = f2_mul(prod, f);
        EXPECT_EQ(prod, mod2(x_n_minus_one(n))) << n;
        EXPECT_EQ(fs.size(), cyclotomic_cosets(n).size());
    }
    EXPECT_THROW(factor_binary(7, 3), LimitExceeded);
}

TEST(Poly, HenselLift) {
    for (std::size_t n : {1, 3, 7, 15, 21, 23, 31, 35, 39}) {
        auto bin = factor_binary(n);
        auto fs = z4_factors(n);
        PolyZ4 prod = PolyZ4::constant(Z4(1));
        for (std::size_t i = 0; i < fs.size(); ++i) {
            EXPECT_EQ(mod2(fs[i]), bin[i]);
            EXPECT_EQ(fs[i].leading(), Z4(1));
            prod *= fs[i];
        }
        EXPECT_EQ(prod, x_n_minus_one(n)) << n;
    }
    EXPECT_EQ(hensel_lift(PolyF2{1, 1, 0, 1}, 7), p("X^3 + 2X^2 + X + 3"));
}

TEST(Poly, BezoutIdempotent) {
    PolyZ4 e = bezout_idempotent(p("X + 3"), p("X^2 + X + 1"), 3);
    EXPECT_EQ(e, p("3 + 3X + 3X^2", 3));
    EXPECT_EQ(e * e, e);
    auto fs = z4_factors(7);
    PolyZ4 rest = fs[1] * fs[2];
    PolyZ4 e7 = bezout_idempotent(fs[0], rest, 7);
    EXPECT_EQ(e7 * e7, e7);
    EXPECT_TRUE(divmod((e7 - PolyZ4::constant(Z4(1), 7)).lift(), fs[0]).second.is_zero());
    EXPECT_TRUE(divmod(e7.lift(), rest).second.is_zero());
    EXPECT_THROW(bezout_idempotent(p("X + 3"), p("X + 3"), 3), NotCoprime);
}
