#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "covercount/util.hpp"

namespace covercount {

// Immutable per-prime context: quadratic-character table, least primitive
// root, discrete logs to that base, and a fixed least nonresidue d so that
// F_{p^2} = F_p[s]/(s^2 - d).  Safe for concurrent reads once built.
class FieldCtx {
  public:
    static FieldCtx make(i64 p);

    u32 p() const { return p_; }
    u32 g() const { return g_; }
    u32 nonresidue() const { return d_; }

    // quadratic character as {+1, 0, -1}; x must be a residue in [0, p)
    int legendre(u32 x) const { return sq_[x]; }
    int legendre_int(i64 x) const { return sq_[reduce(x)]; }
    const std::int8_t* sqtable() const { return sq_.data(); }

    // discrete log base g of x in F_p^*
    u32 dlog(u32 x) const { return dlog_[x]; }

    u32 reduce(i64 x) const {
        i64 r = x % i64(p_);
        return u32(r < 0 ? r + i64(p_) : r);
    }
    u32 add(u32 a, u32 b) const {
        u32 s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    u32 sub(u32 a, u32 b) const { return a >= b ? a - b : a + p_ - b; }
    u32 neg(u32 a) const { return a ? p_ - a : 0; }
    u32 mul(u32 a, u32 b) const { return u32(u64(a) * b % p_); }
    u32 pow(u32 a, u64 e) const;
    u32 inv(u32 a) const;  // throws on 0

    // nonsquares of F_p as a bitmask (bit v set iff v is a nonsquare);
    // only meaningful for p <= 63
    u64 nonsquare_mask() const { return ns_mask_; }

  private:
    FieldCtx() = default;
    u32 p_ = 0, g_ = 0, d_ = 0;
    u64 ns_mask_ = 0;
    std::vector<std::int8_t> sq_;
    std::vector<u32> dlog_;
};

// Element a + b*s of F_{p^2}, s^2 = d (the context's fixed nonresidue).
struct Fp2 {
    u32 a = 0, b = 0;
    bool operator==(const Fp2&) const = default;
    bool is_zero() const { return a == 0 && b == 0; }
};

Fp2 fp2_add(const FieldCtx& F, Fp2 x, Fp2 y);
Fp2 fp2_sub(const FieldCtx& F, Fp2 x, Fp2 y);
Fp2 fp2_neg(const FieldCtx& F, Fp2 x);
Fp2 fp2_mul(const FieldCtx& F, Fp2 x, Fp2 y);
Fp2 fp2_inv(const FieldCtx& F, Fp2 x);  // throws on 0
u32 fp2_norm(const FieldCtx& F, Fp2 x);

// x -> x^p; an involution fixing exactly F_p
Fp2 frobenius(const FieldCtx& F, Fp2 x);

// Gaussian integer a + bi.
struct GaussInt {
    i64 a = 0, b = 0;
    bool operator==(const GaussInt&) const = default;
};

inline GaussInt gauss_mul(GaussInt x, GaussInt y) {
    return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a};
}
inline i128 gauss_norm(GaussInt x) { return i128(x.a) * x.a + i128(x.b) * x.b; }
GaussInt gauss_pow(GaussInt x, unsigned e);

// Writes p = a^2 + b^2 with a + bi = 1 mod (2+2i) and b > 0.
// Requires p prime, p = 1 mod 4.
GaussInt sum_of_two_squares(i64 p);

bool is_prime(i64 n);

}  // namespace covercount
