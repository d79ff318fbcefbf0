#include "covercount/fibrations.hpp"
#include "covercount/modforms.hpp"
#include "doctest.h"

#ifndef COVERCOUNT_DATA_DIR
#define COVERCOUNT_DATA_DIR "data"
#endif

using namespace covercount;

static const std::string kData = COVERCOUNT_DATA_DIR;

TEST_CASE("elliptic traces by Legendre sums") {
    FieldCtx F5 = FieldCtx::make(5);
    CHECK(trace_cubic(F5, 0, -1, 0).a == -2);   // y^2 = x^3 - x: 8 points
    CHECK(trace_cubic(F5, -2, 3, 0).a == 0);    // E_1, since 1/2 = 3 mod 5
    FieldCtx F7 = FieldCtx::make(7);
    CHECK(trace_cubic(F7, 0, -1, 0).a == 0);    // supersingular at p = 3 mod 4
    CHECK_THROWS_AS(trace_cubic(F5, 0, 0, 0), domain_error);  // singular

    CHECK(a_lambda(F5, 1).a == 0);
    CHECK(a_lambda(F5, 3).a == -2);  // y^2 = x^3+3x^2+2x has 8 points
    CHECK(a_lambda(F5, 0).a == 0);   // stated convention
    CHECK_THROWS_AS(a_lambda(F5, 4), domain_error);  // lambda = -1

    // Hasse bound across a range
    for (i64 p : {11, 31, 101}) {
        FieldCtx F = FieldCtx::make(p);
        for (i64 l = 1; l <= p - 2; ++l) {
            i64 a = a_lambda(F, l).a;
            CHECK(a * a <= 4 * p);
        }
    }
}

TEST_CASE("kummer counts") {
    FieldCtx F5 = FieldCtx::make(5);
    CHECK(count_kummer(F5, 1) == 116);  // 25 + 90 + 1 + 0
    CHECK(count_kummer(F5, 2) == 60);   // 25 + 30 + 1 + 4, a_{2,5} = 2
    FieldCtx F13 = FieldCtx::make(13);
    i64 a = a_lambda(F13, 1).a;
    CHECK(count_kummer(F13, 1) == 169 + 234 + 1 + a * a);
    CHECK_THROWS_AS(count_kummer(F5, 0), domain_error);
}

TEST_CASE("surface closed forms against brute enumeration") {
    for (i64 p : {3, 5, 7, 11, 13}) {
        FieldCtx F = FieldCtx::make(p);
        for (i64 l = 1; l <= p - 2; ++l) {
            DoubleCoverSpec k = load_template_file(kData + "/k8_template.json", l);
            DoubleCoverSpec ll = load_template_file(kData + "/l8_template.json", l);
            CHECK(count_double_cover(F, k).count == count_K_lambda(F, l));
            CHECK(count_double_cover(F, ll).count == count_L_lambda(F, l));
            // twist relation between K and L
            i128 mid = i128(p) * p + p + 1;
            CHECK(count_K_lambda(F, l) - mid ==
                  F.legendre_int(l) * (count_L_lambda(F, l) - mid));
            // the points off the affine patch are the p+1 projective ones
            CHECK(count_K_lambda(F, l) - count_cover_affine_patch(F, k, 0) == p + 1);
            CHECK(count_L_lambda(F, l) - count_cover_affine_patch(F, ll, 0) == p + 1);
        }
    }
}

TEST_CASE("specific K/L/F values at p = 5") {
    FieldCtx F = FieldCtx::make(5);
    CHECK(count_K_lambda(F, 1) == 26);
    CHECK(count_F_lambda(F, 2) == 624);  // phi(2) = -1, a_{2,5} = 2
    CHECK(count_L_lambda(F, 2) == 32);
    CHECK(count_F_lambda(F, 0) == 625);
    CHECK_THROWS_AS(count_L_lambda(F, 4), domain_error);  // 4 = -1 mod 5
}

TEST_CASE("lambda = -1 surfaces") {
    FieldCtx F5 = FieldCtx::make(5);
    auto m5 = count_minus_one(F5);
    CHECK(m5.k == 25);   // 25 - 5 + 1 + 4
    CHECK(m5.f == 661);  // 625 + 36
    FieldCtx F3 = FieldCtx::make(3);
    CHECK(count_minus_one(F3).f == 81);
    FieldCtx F7 = FieldCtx::make(7);
    CHECK(count_minus_one(F7).k == 57);
    for (i64 p : {3, 5, 7, 11, 13}) {
        FieldCtx F = FieldCtx::make(p);
        DoubleCoverSpec km = load_arrangement_file(kData + "/kminus1.json");
        DoubleCoverSpec lm = load_arrangement_file(kData + "/lminus1.json");
        CHECK(count_double_cover(F, km).count == count_minus_one(F).k);
        CHECK(count_double_cover(F, lm).count == count_minus_one(F).k);
    }
}

TEST_CASE("product decomposition of the affine fibre") {
    // [F_l] = [A_l][B_l] - p^2 [A_l] - p^2 [B_l] + 2p^4 on the nose
    DoubleCoverSpec f1 = load_arrangement_file(kData + "/f1.json");
    std::vector<i64> m0{1, 0, 0, 0, 0, 0}, m1{0, 0, 0, 1, 0, 0};
    for (i64 p : {3, 5, 7}) {
        FieldCtx F = FieldCtx::make(p);
        for (i64 l = 1; l <= p - 2; ++l) {
            DoubleCoverSpec k = load_template_file(kData + "/k8_template.json", l);
            DoubleCoverSpec ll = load_template_file(kData + "/l8_template.json", l);
            i128 A = count_cover_affine_patch(F, k, 0);
            i128 B = count_cover_affine_patch(F, ll, 0);
            i128 Fl = count_fibre(F, f1, m0, m1, F.reduce(l), 1, FibreMode::AffinePatch, 3)
                          .count;
            i128 p2 = i128(p) * p;
            CHECK(Fl == A * B - p2 * A - p2 * B + 2 * p2 * p2);
            CHECK(Fl == count_F_lambda(F, l));
        }
    }
}

TEST_CASE("F1 fibration assembly equals brute force") {
    DoubleCoverSpec f1 = load_arrangement_file(kData + "/f1.json");
    for (i64 p : {3, 5, 7}) {
        FieldCtx F = FieldCtx::make(p);
        CHECK(count_F1_fibrationwise(F).count == count_double_cover(F, f1).count);
    }
    CHECK(count_F1_fibrationwise(FieldCtx::make(3)).count == 365);
    CHECK(count_F1_fibrationwise(FieldCtx::make(5)).count == 3965);
}

TEST_CASE("fibre sum over P^1 minus base locus equals the total") {
    DoubleCoverSpec f1 = load_arrangement_file(kData + "/f1.json");
    std::vector<i64> m0{1, 0, 0, 0, 0, 0}, m1{0, 0, 0, 1, 0, 0};
    for (i64 p : {3, 5}) {
        FieldCtx F = FieldCtx::make(p);
        i128 sum = 0;
        for (i64 l = 0; l < p; ++l)
            sum += count_fibre(F, f1, m0, m1, F.reduce(l), 1, FibreMode::Scheme).count;
        sum += count_fibre(F, f1, m0, m1, 1, 0, FibreMode::Scheme).count;
        i128 base = count_linear_section(F, f1, {{1, 0, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0}});
        CHECK(sum - i128(p) * base == count_double_cover(F, f1).count);
    }
}

TEST_CASE("level-32 closed forms") {
    CHECK(count_K32(FieldCtx::make(3)) == 13);
    CHECK(count_K32(FieldCtx::make(5)) == 25);
    CHECK(count_K32(FieldCtx::make(13)) == 193);

    FieldCtx F5 = FieldCtx::make(5);
    CHECK(count_rho_fibre(F5, 2) == 40);  // 2^3-2 = 6 = 1 mod 5, a square
    CHECK(count_rho_fibre(F5, 1) == 61);
    CHECK(count_rho_fibre(FieldCtx::make(7), 3) == 78);

    CHECK(count_script_L(FieldCtx::make(3)) == 73);
    CHECK(count_script_L(F5) == 249);
    CHECK(count_script_L(FieldCtx::make(13)) == 3113);
    for (i64 p : {3, 5, 7, 11, 13, 31}) {
        FieldCtx F = FieldCtx::make(p);
        CHECK(count_script_L_fibrewise(F) == count_script_L(F));
    }
    for (i64 p : {3, 5, 7, 11}) {
        FieldCtx F = FieldCtx::make(p);
        CHECK(count_script_L_brute(F, kData) == count_script_L(F));
    }
}

TEST_CASE("fibre excess") {
    CHECK(fibre_excess(FieldCtx::make(3), 1) == 48);
    CHECK(fibre_excess(FieldCtx::make(5), 2) == 198);
    CHECK(fibre_excess(FieldCtx::make(13), 1) == 2658);
    CHECK_THROWS_AS(fibre_excess(FieldCtx::make(5), 0), domain_error);
}

TEST_CASE("excess formula against direct fibre comparison") {
    DoubleCoverSpec v32 = load_arrangement_file(kData + "/v32.json");
    DoubleCoverSpec k32 = load_arrangement_file(kData + "/k32.json");
    std::vector<i64> m0{1, 1, 0, 0, 0, 0}, m1{0, 0, 1, 0, 1, 0};
    for (i64 p : {3, 5, 7}) {
        FieldCtx F = FieldCtx::make(p);
        for (i64 l = 1; l < p; ++l) {
            DoubleCoverSpec ll = load_template_file(kData + "/l32_template.json", l);
            i128 qp = count_quotient_product(F, {k32, ll}).record.count;
            i128 fib = count_fibre(F, v32, m0, m1, F.reduce(l), 1, FibreMode::Scheme).count;
            CHECK(qp - fib == fibre_excess(F, l));
        }
    }
}

TEST_CASE("V32 fibration assembly") {
    DoubleCoverSpec v32 = load_arrangement_file(kData + "/v32.json");
    V32FibrationOptions opt{kData, 1};
    for (i64 p : {3, 5, 7}) {
        FieldCtx F = FieldCtx::make(p);
        CHECK(count_V32_fibrationwise(F, opt).count == count_double_cover(F, v32).count);
    }
    CHECK(count_V32_fibrationwise(FieldCtx::make(5), opt).count == 3978);
    CHECK(count_V32_fibrationwise(FieldCtx::make(7), opt).count == 19608);
}

TEST_CASE("product quotient at p = 13 against the fibre") {
    // (K x L_2)/sigma = (p^2+p+1)^2 + a_{3,13} (l+ - l-), checked against
    // the scheme fibre plus the excess term
    FieldCtx F = FieldCtx::make(13);
    DoubleCoverSpec v32 = load_arrangement_file(kData + "/v32.json");
    DoubleCoverSpec k32 = load_arrangement_file(kData + "/k32.json");
    DoubleCoverSpec l2 = load_template_file(kData + "/l32_template.json", 2);
    auto qp = count_quotient_product(F, {k32, l2});
    i128 p2p1 = count_projective_space(13, 2);
    CHECK(qp.record.count == p2p1 * p2p1 + i128(10) * qp.censuses[1].diff());
    std::vector<i64> m0{1, 1, 0, 0, 0, 0}, m1{0, 0, 1, 0, 1, 0};
    i128 fib = count_fibre(F, v32, m0, m1, 2, 1, FibreMode::Scheme).count;
    CHECK(qp.record.count - fib == fibre_excess(F, 2));
}
