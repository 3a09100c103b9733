#pragma once

#include <string>
#include <vector>

#include "z4v/cyclic.hpp"

namespace z4v {

enum class QrCase { one, two }; // p = -1 mod 8, p = 1 mod 8

inline constexpr std::size_t default_qr_limit = 1000;

struct QrContext {
    std::size_t p = 0;
    QrCase qr_case = QrCase::one;
    bool r_odd = false; // p = 8r -/+ 1
    std::vector<std::size_t> q_set;
    std::vector<std::size_t> n_set;
    PolyZ4 Q, N, J; // reduced mod X^p - 1
};

bool is_prime(std::size_t n);

// BadPrime unless p is a prime = +-1 mod 8 within the limit.
QrContext qr_context(std::size_t p, std::size_t limit = default_qr_limit);

struct QrCode {
    std::string name;
    PolyR idempotent;
    RCode code;
};

struct QrFamily {
    QrContext ctx;
    QrCode d1, d2, e1, e2;
};

QrFamily build_qr(std::size_t p, std::size_t limit = default_qr_limit);

// X^i -> X^(a i mod n)
PolyZ4 mu_map(const PolyZ4& f, std::size_t a);
PolyR mu_map(const PolyR& f, std::size_t a);
// Coordinate i moves to a i mod n.
RCode mu_map(const RCode& c, std::size_t a);

struct QrItem {
    std::string id;
    std::string claim;
    bool pass = false;
};

struct QrReport {
    std::size_t p = 0;
    std::vector<QrItem> items;
    bool all_pass() const;
};

// Items (i)-(vi) of the QR structure properties for the matching case, checked by
// idempotent algebra and canonical forms. With enumerate = true (feasible at
// p = 7) sizes and codeword sums are also checked by listing codewords.
QrReport verify_qr_properties(const QrFamily& fam, bool enumerate = false);

enum class Extension { hat, tilde };

// Border row over [0 | G_i], G_i a generator matrix of E_i. d must be D1 or D2.
RCode extend(const QrFamily& fam, const RCode& d, Extension flavor);

} // namespace z4v
