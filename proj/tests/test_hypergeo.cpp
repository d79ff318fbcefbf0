#include <cmath>
#include <complex>

#include "covercount/hypergeo.hpp"
#include "covercount/modforms.hpp"
#include "doctest.h"

#ifndef COVERCOUNT_DATA_DIR
#define COVERCOUNT_DATA_DIR "data"
#endif

using namespace covercount;

static const std::string kData = COVERCOUNT_DATA_DIR;

namespace {

// definitional double loop written from scratch (independent of the table)
std::complex<double> binom_reference(const FieldCtx& F, u32 ja, u32 jb) {
    const u32 p = F.p();
    const double tau = 6.283185307179586476925286766559;
    std::complex<double> s = 0;
    for (u32 x = 0; x < p; ++x) {
        if (x == 0 || x == 1) continue;  // characters vanish at 0
        double ea = tau * double((u64(ja) * F.dlog(x)) % (p - 1)) / (p - 1);
        double eb = tau * double((u64(jb) * F.dlog(F.sub(x, 1))) % (p - 1)) / (p - 1);
        s += std::complex<double>(std::cos(ea), std::sin(ea)) *
             std::complex<double>(std::cos(eb), -std::sin(eb));
    }
    return s / double(p);
}

}  // namespace

TEST_CASE("jacobi binom against the definitional sum") {
    for (i64 p : {5, 13}) {
        FieldCtx F = FieldCtx::make(p);
        CharacterTable T(F);
        for (u32 ja = 0; ja < F.p() - 1; ++ja)
            for (u32 jb = 0; jb < F.p() - 1; ++jb) {
                auto got = T.jacobi_binom(ja, jb);
                auto want = binom_reference(F, ja, jb);
                CHECK(std::abs(got - want) < 1e-9);
            }
    }
}

TEST_CASE("binom magnitudes at p = 13") {
    // |p*binom| is 0, 1, or sqrt(p), except p-2 for the trivial/trivial pair
    FieldCtx F = FieldCtx::make(13);
    CharacterTable T(F);
    for (u32 ja = 0; ja < 12; ++ja)
        for (u32 jb = 0; jb < 12; ++jb) {
            double m = std::abs(T.jacobi_binom(ja, jb)) * 13.0;
            bool near = std::abs(m) < 1e-9 || std::abs(m - 1) < 1e-9 ||
                        std::abs(m - std::sqrt(13.0)) < 1e-9;
            if (ja == 0 && jb == 0) near = std::abs(m - 11.0) < 1e-9;
            CHECK(near);
        }
}

TEST_CASE("3F2 values") {
    FieldCtx F5 = FieldCtx::make(5);
    CharacterTable T5(F5);
    CHECK(f32(T5, 2).numerator == -1);
    CHECK(f32(T5, 2).scale == 2);
    CHECK(f32(T5, 1).numerator == -6);  // (4a^2-2p)/p^2 with a = 1
    CHECK_THROWS_AS(f32(T5, 0), domain_error);

    FieldCtx F3 = FieldCtx::make(3);
    CharacterTable T3(F3);
    CHECK(f32(T3, 1).numerator == 0);   // p = 3 mod 4
    CHECK(f32(T3, 2).numerator == -1);

    FieldCtx F7 = FieldCtx::make(7);
    CharacterTable T7(F7);
    CHECK(f32(T7, 1).numerator == 0);
}

TEST_CASE("3A2 traces") {
    FieldCtx F5 = FieldCtx::make(5);
    CHECK(a32(F5, 1).a == -2);  // y^2 = (x-1)(x^2+1) has 8 points over F_5
    CHECK_THROWS_AS(a32(F5, 0), domain_error);
    CHECK_THROWS_AS(a32(F5, 4), domain_error);  // -1 mod 5
    FieldCtx F7 = FieldCtx::make(7);
    CHECK(a32(F7, 1).a == 4);   // 4 points over F_7
}

TEST_CASE("FOP identity suite") {
    for (i64 p : {3, 5, 13, 17, 199}) {
        FopReport rep = verify_fop_identity(FieldCtx::make(p));
        INFO("p = ", p);
        CHECK(rep.all_pass);
        CHECK(rep.checks > 0);
    }
}

TEST_CASE("p^2 * 3F2 is an integer for every lambda") {
    for (i64 p : {31, 97}) {
        FieldCtx F = FieldCtx::make(p);
        CharacterTable T(F);
        for (u32 l = 1; l < F.p(); ++l) CHECK_NOTHROW(f32(T, l));  // gates inside
    }
}

TEST_CASE("hypergeometric count of F1 matches the fibration count") {
    for (i64 p : {3, 7, 13, 17, 29}) {
        FieldCtx F = FieldCtx::make(p);
        CHECK(f1_hypergeometric_count(F).count == count_F1_fibrationwise(F).count);
    }
}

TEST_CASE("level-8 weight-6 data satisfies the hypergeometric trace formula") {
    // a_p = -p^4 sum phi(-l) 3F2(l)^2 + p^2 - p b_p for p = 3 mod 4
    QExpansion w6 = load_qexpansion_file(kData + "/level8_weight6.json");
    QExpansion w4 = load_qexpansion_file(kData + "/level8_weight4.json");
    for (i64 p = 3; p <= 199; p += 4) {
        if (!is_prime(p)) continue;
        FieldCtx F = FieldCtx::make(p);
        CharacterTable T(F);
        i128 sum = 0;
        for (u32 l = 2; l < F.p(); ++l) {
            i64 n = f32(T, l).numerator;
            sum += F.legendre(F.neg(l)) * i128(n) * n;
        }
        CHECK(i128(w6.a(u64(p))) == -sum + i128(p) * p - i128(p) * w4.a(u64(p)));
    }
}
