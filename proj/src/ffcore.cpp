#include "covercount/ffcore.hpp"

#include <cmath>

namespace covercount {

bool is_prime(i64 n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    for (i64 d = 5; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

FieldCtx FieldCtx::make(i64 p) {
    if (p < 3 || p > (i64(1) << 31)) throw domain_error("p out of range [3, 2^31]");
    if (p % 2 == 0) throw domain_error("p must be odd");
    if (!is_prime(p)) throw domain_error("p must be prime");

    FieldCtx F;
    F.p_ = u32(p);
    F.sq_.assign(size_t(p), -1);
    F.sq_[0] = 0;
    for (u64 x = 1; x < u64(p); ++x) F.sq_[size_t(x * x % u64(p))] = 1;

    // least primitive root: order test against the prime factors of p-1
    std::vector<i64> qs;
    i64 m = p - 1;
    for (i64 q = 2; q * q <= m; ++q) {
        if (m % q == 0) {
            qs.push_back(q);
            while (m % q == 0) m /= q;
        }
    }
    if (m > 1) qs.push_back(m);
    for (u32 g = 2;; ++g) {
        bool ok = true;
        for (i64 q : qs) {
            if (F.pow(g, u64((p - 1) / q)) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            F.g_ = g;
            break;
        }
    }

    F.dlog_.assign(size_t(p), 0);
    u32 v = 1;
    for (u32 e = 0; e + 1 < u32(p); ++e) {
        F.dlog_[v] = e;
        v = F.mul(v, F.g_);
    }

    for (u32 d = 2; d < u32(p); ++d) {
        if (F.sq_[d] == -1) {
            F.d_ = d;
            break;
        }
    }

    if (p <= 63) {
        for (u32 x = 1; x < u32(p); ++x)
            if (F.sq_[x] == -1) F.ns_mask_ |= u64(1) << x;
    }
    return F;
}

u32 FieldCtx::pow(u32 a, u64 e) const {
    u64 r = 1, b = a % p_;
    while (e) {
        if (e & 1) r = r * b % p_;
        b = b * b % p_;
        e >>= 1;
    }
    return u32(r);
}

u32 FieldCtx::inv(u32 a) const {
    if (a == 0) throw domain_error("inverse of 0");
    return pow(a, u64(p_) - 2);
}

Fp2 fp2_add(const FieldCtx& F, Fp2 x, Fp2 y) { return {F.add(x.a, y.a), F.add(x.b, y.b)}; }
Fp2 fp2_sub(const FieldCtx& F, Fp2 x, Fp2 y) { return {F.sub(x.a, y.a), F.sub(x.b, y.b)}; }
Fp2 fp2_neg(const FieldCtx& F, Fp2 x) { return {F.neg(x.a), F.neg(x.b)}; }

Fp2 fp2_mul(const FieldCtx& F, Fp2 x, Fp2 y) {
    // (a1 + b1 s)(a2 + b2 s) = a1 a2 + d b1 b2 + (a1 b2 + a2 b1) s
    u32 aa = F.mul(x.a, y.a);
    u32 bb = F.mul(x.b, y.b);
    return {F.add(aa, F.mul(F.nonresidue(), bb)), F.add(F.mul(x.a, y.b), F.mul(x.b, y.a))};
}

u32 fp2_norm(const FieldCtx& F, Fp2 x) {
    return F.sub(F.mul(x.a, x.a), F.mul(F.nonresidue(), F.mul(x.b, x.b)));
}

Fp2 fp2_inv(const FieldCtx& F, Fp2 x) {
    u32 n = fp2_norm(F, x);
    if (n == 0) throw domain_error("inverse of 0 in F_p^2");
    u32 ni = F.inv(n);
    return {F.mul(x.a, ni), F.mul(F.neg(x.b), ni)};
}

Fp2 frobenius(const FieldCtx& F, Fp2 x) { return {x.a, F.neg(x.b)}; }

GaussInt gauss_pow(GaussInt x, unsigned e) {
    GaussInt r{1, 0};
    while (e--) r = gauss_mul(r, x);
    return r;
}

GaussInt sum_of_two_squares(i64 p) {
    if (!is_prime(p)) throw domain_error("p must be prime");
    if (p % 4 != 1) throw domain_error("p must be 1 mod 4");
    // a odd, b even, a^2 + b^2 = p; the congruence a + bi = 1 mod (2+2i)
    // reads 4 | a - 1 + b and 4 | b - a + 1, and fixes the sign of a.
    for (i64 aa = 1; aa * aa <= p; aa += 2) {
        i64 bb2 = p - aa * aa;
        i64 b = i64(std::llround(std::sqrt(double(bb2))));
        while (b * b < bb2) ++b;
        while (b * b > bb2) --b;
        if (b * b != bb2) continue;
        for (i64 a : {aa, -aa}) {
            if ((a - 1 + b) % 4 == 0 && (b - a + 1) % 4 == 0) return {a, b};
        }
    }
    throw std::logic_error("no two-square decomposition found");
}

}  // namespace covercount
