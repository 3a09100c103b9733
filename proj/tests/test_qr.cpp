#include <gtest/gtest.h>

#include <algorithm>

#include "z4v/qr.hpp"
#include "z4v/weight_enum.hpp"

using namespace z4v;

TEST(Qr, Context) {
    for (std::size_t p : {7, 17, 23, 31, 41}) {
        QrContext c = qr_context(p);
        EXPECT_EQ(c.q_set.size(), (p - 1) / 2);
        EXPECT_EQ(c.n_set.size(), (p - 1) / 2);
        for (auto a : c.q_set)
            for (auto b : c.q_set) EXPECT_TRUE(std::count(c.q_set.begin(), c.q_set.end(), a * b % p));
        for (auto a : c.n_set)
            for (auto b : c.q_set) EXPECT_TRUE(std::count(c.n_set.begin(), c.n_set.end(), a * b % p));
        for (std::size_t i = 0; i < p; ++i) EXPECT_EQ(c.J[i], Z4(static_cast<int>(p % 4)));
    }
    QrContext c7 = qr_context(7);
    EXPECT_EQ(c7.q_set, (std::vector<std::size_t>{1, 2, 4}));
    EXPECT_EQ(c7.qr_case, QrCase::one);
    EXPECT_TRUE(c7.r_odd);
    EXPECT_EQ(qr_context(17).qr_case, QrCase::two);
    EXPECT_FALSE(qr_context(17).r_odd);
    EXPECT_THROW(qr_context(5), BadPrime);
    EXPECT_THROW(qr_context(15), BadPrime);
    EXPECT_THROW(qr_context(1009, 1000), BadPrime);
}

TEST(Qr, IdempotentsAtSeven) {
    QrFamily f = build_qr(7);
    auto [x, y] = crt_split(f.e1.idempotent);
    EXPECT_EQ(x, parse_poly_z4("1 + 2X + 2X^2 + 3X^3 + 2X^4 + 3X^5 + 3X^6", 7));
    EXPECT_EQ(y, parse_poly_z4("1 + 3X + 3X^2 + 2X^3 + 3X^4 + 2X^5 + 2X^6", 7));
}

TEST(Qr, IdempotentsAtSeventeen) {
    QrFamily f = build_qr(17);
    QrContext c = qr_context(17);
    PolyZ4 one = PolyZ4::constant(Z4(1), 17);
    EXPECT_EQ(f.d1.idempotent, crt_join(one + c.N, one + c.Q));
}

TEST(Qr, AllGeneratorsIdempotent) {
    for (std::size_t p : {7, 17, 23, 31, 41}) {
        QrFamily f = build_qr(p);
        for (const QrCode* q : {&f.d1, &f.d2, &f.e1, &f.e2}) EXPECT_EQ(q->idempotent * q->idempotent, q->idempotent);
    }
}

TEST(Qr, MuMap) {
    QrContext c = qr_context(7);
    EXPECT_EQ(mu_map(c.Q, 3), c.N);
    EXPECT_EQ(mu_map(c.Q, 2), c.Q);
    EXPECT_EQ(mu_map(c.N, 1), c.N);
    EXPECT_THROW(mu_map(c.Q, 7), NotCoprime);
}

TEST(Qr, StructureReports) {
    for (std::size_t p : {7, 17, 23, 31, 41}) {
        QrReport r = verify_qr_properties(build_qr(p), p == 7);
        for (const auto& item : r.items) EXPECT_TRUE(item.pass) << p << " " << item.id << " " << item.claim;
    }
}

TEST(Qr, ExtensionsAtSeven) {
    QrFamily f = build_qr(7);
    for (const RCode* d : {&f.d1.code, &f.d2.code})
        for (Extension e : {Extension::hat, Extension::tilde}) {
            RCode x = extend(f, *d, e);
            EXPECT_EQ(x.length(), 8u);
            EXPECT_EQ(x.size(), BigInt(1) << 16);
            EXPECT_EQ(dual(x), x);
        }
    EXPECT_THROW(extend(f, f.e1.code, Extension::hat), WrongCode);
}

TEST(Qr, ExtensionsAtSeventeen) {
    QrFamily f = build_qr(17);
    EXPECT_EQ(dual(extend(f, f.d1.code, Extension::hat)), extend(f, f.d2.code, Extension::tilde));
    EXPECT_EQ(dual(extend(f, f.d2.code, Extension::hat)), extend(f, f.d1.code, Extension::tilde));
}
