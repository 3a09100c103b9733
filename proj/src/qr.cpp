#include "z4v/qr.hpp"

#include <algorithm>
#include <numeric>

namespace z4v {

bool is_prime(std::size_t n) {
    if (n < 2) return false;
    for (std::size_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

QrContext qr_context(std::size_t p, std::size_t limit) {
    if (!is_prime(p)) throw BadPrime(std::to_string(p) + " is not prime");
    if (p % 8 != 1 && p % 8 != 7) throw BadPrime(std::to_string(p) + " is not +-1 mod 8");
    if (p > limit) throw BadPrime(std::to_string(p) + " exceeds the limit " + std::to_string(limit));
    QrContext ctx;
    ctx.p = p;
    ctx.qr_case = p % 8 == 7 ? QrCase::one : QrCase::two;
    std::size_t r = ctx.qr_case == QrCase::one ? (p + 1) / 8 : (p - 1) / 8;
    ctx.r_odd = r % 2 == 1;
    std::vector<bool> residue(p, false);
    for (std::size_t x = 1; x < p; ++x) residue[x * x % p] = true;
    std::vector<Z4> q(p), nn(p), j(p, Z4(static_cast<int>(p % 4)));
    for (std::size_t i = 1; i < p; ++i) {
        (residue[i] ? ctx.q_set : ctx.n_set).push_back(i);
        (residue[i] ? q : nn)[i] = Z4(1);
    }
    ctx.Q = PolyZ4::modular(p, q);
    ctx.N = PolyZ4::modular(p, nn);
    ctx.J = PolyZ4::modular(p, j);
    return ctx;
}

namespace {

struct Idempotents {
    PolyZ4 d1x, d1y, e1x, e1y;
};

Idempotents formulas(const QrContext& c) {
    const std::size_t p = c.p;
    const PolyZ4 one = PolyZ4::constant(Z4(1), p);
    const PolyZ4& Q = c.Q;
    const PolyZ4& N = c.N;
    const Z4 two(2);
    const PolyZ4 a = Q + two * N, b = N + two * Q;        // odd r
    const PolyZ4 ea = one - N + two * Q, eb = one - Q + two * N;
    const PolyZ4 mq = -Q, mn = -N, pn = one + N, pq = one + Q; // even r
    if (c.qr_case == QrCase::one) {
        if (c.r_odd) return {a, b, ea, eb};
        return {mq, mn, pn, pq};
    }
    if (c.r_odd) return {ea, eb, a, b};
    return {pn, pq, mq, mn};
}

QrCode make(std::string name, const PolyZ4& x, const PolyZ4& y, std::size_t p) {
    PolyR e = crt_join(x, y);
    if (!(e * e == e)) throw NotIdempotent(name + " generator " + to_string(e) + " is not idempotent");
    return {std::move(name), e, cyclic_span(std::vector<PolyR>{e}, p)};
}

} // namespace

QrFamily build_qr(std::size_t p, std::size_t limit) {
    QrFamily fam;
    fam.ctx = qr_context(p, limit);
    Idempotents id = formulas(fam.ctx);
    // The second code of each pair swaps the CRT components.
    fam.d1 = make("D1", id.d1x, id.d1y, p);
    fam.d2 = make("D2", id.d1y, id.d1x, p);
    fam.e1 = make("E1", id.e1x, id.e1y, p);
    fam.e2 = make("E2", id.e1y, id.e1x, p);
    return fam;
}

namespace {

template <class T>
Poly<T> mu_poly(const Poly<T>& f, std::size_t a) {
    if (!f.is_modular()) throw ModulusMismatch("mu_a acts on polynomials reduced mod X^n - 1");
    const std::size_t n = f.modulus();
    if (std::gcd(a, n) != 1) throw NotCoprime(std::to_string(a) + " is not coprime to " + std::to_string(n));
    std::vector<T> c(n);
    for (std::size_t i = 0; i < n; ++i) c[a * i % n] = f[i];
    return Poly<T>::modular(n, c);
}

} // namespace

PolyZ4 mu_map(const PolyZ4& f, std::size_t a) { return mu_poly(f, a); }
PolyR mu_map(const PolyR& f, std::size_t a) { return mu_poly(f, a); }

RCode mu_map(const RCode& c, std::size_t a) {
    const std::size_t n = c.length();
    if (std::gcd(a, n) != 1) throw NotCoprime(std::to_string(a) + " is not coprime to " + std::to_string(n));
    const RMatrix& g = c.generators();
    RMatrix out(0, n);
    RVector row(n);
    for (std::size_t i = 0; i < g.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) row[a * j % n] = g(i, j);
        out.append_row(row);
    }
    return RCode::from_generators(out);
}

bool QrReport::all_pass() const {
    return std::all_of(items.begin(), items.end(), [](const QrItem& i) { return i.pass; });
}

namespace {

Z4 coordinate_sum(const Z4Vector& w) {
    Z4 s;
    for (Z4 x : w) s += x;
    return s;
}

} // namespace

QrReport verify_qr_properties(const QrFamily& fam, bool enumerate) {
    const QrContext& c = fam.ctx;
    const std::size_t p = c.p;
    QrReport rep;
    rep.p = p;
    auto add = [&](std::string id, std::string claim, bool pass) {
        rep.items.push_back({std::move(id), std::move(claim), pass});
    };
    const PolyR one = PolyR::constant(RElement(1), p);
    const PolyR J = to_r(c.J);
    const PolyR &d1 = fam.d1.idempotent, &d2 = fam.d2.idempotent, &e1 = fam.e1.idempotent, &e2 = fam.e2.idempotent;
    auto meet = [](const PolyR& x, const PolyR& y) { return x * y; };
    auto join = [](const PolyR& x, const PolyR& y) { return x + y - x * y; };

    add("lemma", "all four generators and J are idempotent",
        d1 * d1 == d1 && d2 * d2 == d2 && e1 * e1 == e1 && e2 * e2 == e2 && J * J == J);

    bool fixes = true, swaps = true;
    for (std::size_t a : c.q_set)
        fixes = fixes && mu_map(d1, a) == d1 && mu_map(d2, a) == d2 && mu_map(e1, a) == e1 && mu_map(e2, a) == e2;
    for (std::size_t a : c.n_set) swaps = swaps && mu_map(d1, a) == d2 && mu_map(e1, a) == e2;
    if (enumerate) {
        for (std::size_t a : c.q_set) fixes = fixes && mu_map(fam.d1.code, a) == fam.d1.code && mu_map(fam.e1.code, a) == fam.e1.code;
        for (std::size_t a : c.n_set) swaps = swaps && mu_map(fam.d1.code, a) == fam.d2.code && mu_map(fam.e1.code, a) == fam.e2.code;
    }
    add("i", "mu_a fixes D_i, E_i for a in Q_p", fixes);
    add("i", "mu_a swaps D_1, D_2 and E_1, E_2 for a in N_p", swaps);

    add("ii", "D1 meet D2 = (J)", meet(d1, d2) == J);
    add("ii", "D1 + D2 = R_p", join(d1, d2) == one);
    add("iii", "E1 meet E2 = 0", meet(e1, e2).is_zero());
    add("iii", "E1 + E2 = (J)^perp", join(e1, e2) == dual_idempotent(J));

    const unsigned big = static_cast<unsigned>(2 * (p + 1)), small = static_cast<unsigned>(2 * (p - 1));
    bool sizes = fam.d1.code.log2_size() == big && fam.d2.code.log2_size() == big &&
                 fam.e1.code.log2_size() == small && fam.e2.code.log2_size() == small;
    if (enumerate) {
        auto count = [](const RCode& r) {
            return BigInt(enumerate_codewords(r.c1()).size()) * enumerate_codewords(r.c2()).size();
        };
        sizes = sizes && count(fam.d1.code) == BigInt(1) << big && count(fam.e1.code) == BigInt(1) << small &&
                count(fam.d2.code) == BigInt(1) << big && count(fam.e2.code) == BigInt(1) << small;
    }
    add("iv", "|D_i| = 4^(p+1), |E_i| = 4^(p-1)", sizes);

    add("v", "D_i = E_i + (J)", join(e1, J) == d1 && join(e2, J) == d2);

    const bool case_one = c.qr_case == QrCase::one;
    const RCode& dual_of_e1 = case_one ? fam.d1.code : fam.d2.code;
    const RCode& dual_of_e2 = case_one ? fam.d2.code : fam.d1.code;
    const PolyR& de1 = case_one ? d1 : d2;
    const PolyR& de2 = case_one ? d2 : d1;
    bool duals = dual_idempotent(e1) == de1 && dual_idempotent(e2) == de2 && dual(fam.e1.code) == dual_of_e1 &&
                 dual(fam.e2.code) == dual_of_e2;
    add("vi", case_one ? "E_i^perp = D_i" : "E1^perp = D2 and E2^perp = D1", duals);
    if (case_one) {
        bool so = meet(e1, d1) == e1 && meet(e2, d2) == e2 &&
                  classify_duality(fam.e1.code).duality != Duality::none &&
                  classify_duality(fam.e2.code).duality != Duality::none;
        add("vi", "E1 and E2 are self-orthogonal", so);
    }

    if (enumerate) {
        bool zero_sum = true;
        for (const RCode* e : {&fam.e1.code, &fam.e2.code})
            for (const Z4Code* z : {&e->c1(), &e->c2()})
                for (const auto& w : enumerate_codewords(*z)) zero_sum = zero_sum && coordinate_sum(w).is_zero();
        add("ext", "every codeword of E_i has coordinate sum 0", zero_sum);
    }

    if (case_one) {
        bool sd = true;
        for (const RCode* d : {&fam.d1.code, &fam.d2.code})
            for (Extension x : {Extension::hat, Extension::tilde})
                sd = sd && classify_duality(extend(fam, *d, x), 0).duality == Duality::self_dual;
        add("ext", "hat and tilde extensions of D_i are self-dual", sd);
    } else {
        bool cross = dual(extend(fam, fam.d1.code, Extension::hat)) == extend(fam, fam.d2.code, Extension::tilde) &&
                     dual(extend(fam, fam.d2.code, Extension::hat)) == extend(fam, fam.d1.code, Extension::tilde);
        add("ext", "hat(D1)^perp = tilde(D2) and hat(D2)^perp = tilde(D1)", cross);
    }
    return rep;
}

RCode extend(const QrFamily& fam, const RCode& d, Extension flavor) {
    const QrCode* e = nullptr;
    if (d == fam.d1.code) e = &fam.e1;
    else if (d == fam.d2.code) e = &fam.e2;
    else throw WrongCode("extension is defined for D1 and D2 only");
    const std::size_t p = fam.ctx.p;
    const bool case_one = fam.ctx.qr_case == QrCase::one;
    RVector border(p + 1, RElement(case_one ? 3 : 1));
    border[0] = RElement(flavor == Extension::hat ? 3 : 1);
    RMatrix g(0, p + 1);
    g.append_row(border);
    const RMatrix& ge = e->code.generators();
    RVector row(p + 1);
    for (std::size_t i = 0; i < ge.rows(); ++i) {
        row[0] = RElement(0);
        std::copy(ge.row(i).begin(), ge.row(i).end(), row.begin() + 1);
        g.append_row(row);
    }
    return RCode::from_generators(g);
}

} // namespace z4v
