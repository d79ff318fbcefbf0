#include "covercount/analysis.hpp"
#include "covercount/quotients.hpp"
#include "doctest.h"

#ifndef COVERCOUNT_DATA_DIR
#define COVERCOUNT_DATA_DIR "data"
#endif

using namespace covercount;

static const std::string kData = COVERCOUNT_DATA_DIR;

namespace {

ProjDeckMap identity_map(int n) {
    ProjDeckMap m;
    m.name = "identity";
    m.matrix.assign(size_t(n) + 1, std::vector<i64>(size_t(n) + 1, 0));
    for (int i = 0; i <= n; ++i) m.matrix[size_t(i)][size_t(i)] = 1;
    return m;
}

}  // namespace

TEST_CASE("binding maps to covers") {
    DoubleCoverSpec f1 = load_arrangement_file(kData + "/f1.json");
    auto maps = load_involutions_file(kData + "/involutions_f1.json");
    REQUIRE(maps.size() == 3);
    for (const auto& m : maps) {
        BoundDeckMap b = bind_map(f1, m);
        CHECK(b.involution);
        CHECK(b.m2_scalar == 1);
        CHECK(b.mu == 1);
        std::vector<bool> hit(12, false);
        for (int t : b.form_perm) hit[size_t(t)] = true;
        for (bool h : hit) CHECK(h);
    }
    DoubleCoverSpec v32 = load_arrangement_file(kData + "/v32.json");
    auto amaps = load_involutions_file(kData + "/involutions_v32.json");
    REQUIRE(amaps.size() == 3);
    for (const auto& m : amaps) {
        BoundDeckMap b = bind_map(v32, m);
        CHECK(b.involution);
        CHECK(b.mu == 1);
    }
    // a map that does not permute the forms is rejected
    ProjDeckMap bad = identity_map(5);
    bad.matrix[0][1] = 1;
    CHECK_THROWS_AS(bind_map(f1, bad), domain_error);
}

TEST_CASE("identity twists recover the plain counts") {
    DoubleCoverSpec f1 = load_arrangement_file(kData + "/f1.json");
    FieldCtx F = FieldCtx::make(3);
    BoundDeckMap id = bind_map(f1, identity_map(5));
    i128 n = count_double_cover(F, f1).count;
    CHECK(twisted_count_brute(F, f1, id, 1).T == n);
    CHECK(twisted_count_h90(F, f1, id, 1).T == n);
    // the deck lift counts the quadratic-twist points; together they double
    // count the base
    i128 t_deck = twisted_count_brute(F, f1, id, -1).T;
    CHECK(n + t_deck == 2 * count_projective_space(3, 5));
}

TEST_CASE("coordinate swap on the bare projective line") {
    FieldCtx F = FieldCtx::make(3);
    std::vector<std::vector<i64>> swap{{0, 1}, {1, 0}};
    CHECK(twisted_count_base_brute(F, 1, swap) == 4);
    ProjDeckMap m;
    m.name = "swap";
    m.matrix = swap;
    CHECK(count_base_quotient(F, 1, m) == 4);  // (4 + 4)/2
}

TEST_CASE("iota_1 quotient at p = 3 has 364 points") {
    DoubleCoverSpec f1 = load_arrangement_file(kData + "/f1.json");
    auto maps = load_involutions_file(kData + "/involutions_f1.json");
    FieldCtx F = FieldCtx::make(3);
    BoundDeckMap b = bind_map(f1, maps[0]);
    i128 n = count_double_cover(F, f1).count;
    i128 t = twisted_count_brute(F, f1, b, 1).T;
    CHECK((n + t) % 2 == 0);
    CHECK((n + t) / 2 == 364);
    // and through the Burnside interface
    CHECK(count_quotient(F, f1, {{identity_map(5), 1}, {maps[0], 1}}).count == 364);
}

TEST_CASE("hilbert-90 path equals the F_p^2 brute path") {
    for (const auto& [vfile, ifile] :
         {std::pair<const char*, const char*>{"f1.json", "involutions_f1.json"},
          {"v32.json", "involutions_v32.json"}}) {
        DoubleCoverSpec spec = load_arrangement_file(kData + "/" + vfile);
        auto maps = load_involutions_file(kData + "/" + ifile);
        FieldCtx F = FieldCtx::make(3);
        for (const auto& m : maps) {
            BoundDeckMap b = bind_map(spec, m);
            for (int eps : {1, -1}) {
                INFO(m.name, " eps=", eps);
                CHECK(twisted_count_h90(F, spec, b, eps).T ==
                      twisted_count_brute(F, spec, b, eps).T);
            }
        }
    }
}

TEST_CASE("trivialization is seed independent") {
    DoubleCoverSpec v32 = load_arrangement_file(kData + "/v32.json");
    auto maps = load_involutions_file(kData + "/involutions_v32.json");
    FieldCtx F = FieldCtx::make(5);
    BoundDeckMap b = bind_map(v32, maps[1]);
    i128 first = twisted_count_h90(F, v32, b, 1, 1).T;
    for (u64 seed : {2, 3, 4, 5}) CHECK(twisted_count_h90(F, v32, b, 1, seed).T == first);
}

TEST_CASE("twisted counts are conjugation invariant") {
    DoubleCoverSpec f1 = load_arrangement_file(kData + "/f1.json");
    auto maps = load_involutions_file(kData + "/involutions_f1.json");
    FieldCtx F = FieldCtx::make(3);
    // conjugate iota_2 by the rotation x_i -> x_{i+1}
    std::vector<std::vector<i64>> R(6, std::vector<i64>(6, 0));
    for (int i = 0; i < 6; ++i) R[size_t(i)][size_t((i + 1) % 6)] = 1;
    std::vector<std::vector<i64>> Rinv(6, std::vector<i64>(6, 0));
    for (int i = 0; i < 6; ++i) Rinv[size_t(i)][size_t((i + 5) % 6)] = 1;
    auto mulm = [](const std::vector<std::vector<i64>>& A,
                   const std::vector<std::vector<i64>>& B) {
        std::vector<std::vector<i64>> C(A.size(), std::vector<i64>(A.size(), 0));
        for (size_t i = 0; i < A.size(); ++i)
            for (size_t j = 0; j < A.size(); ++j)
                for (size_t k = 0; k < A.size(); ++k) C[i][j] += A[i][k] * B[k][j];
        return C;
    };
    ProjDeckMap conj;
    conj.name = "r*iota2*r^-1";
    conj.matrix = mulm(mulm(R, maps[1].matrix), Rinv);
    BoundDeckMap b0 = bind_map(f1, maps[1]);
    BoundDeckMap b1 = bind_map(f1, conj);
    for (int eps : {1, -1})
        CHECK(twisted_count_brute(F, f1, b0, eps).T == twisted_count_brute(F, f1, b1, eps).T);
}

TEST_CASE("alpha1*alpha2 is conjugate to alpha1 and counts agree") {
    DoubleCoverSpec v32 = load_arrangement_file(kData + "/v32.json");
    auto maps = load_involutions_file(kData + "/involutions_v32.json");
    AutGroup g = automorphism_group(v32);
    auto canon = [](std::vector<std::vector<i64>> m) {
        i64 lead = 0;
        for (auto& row : m) {
            for (i64 v : row)
                if (v != 0) {
                    lead = v;
                    break;
                }
            if (lead) break;
        }
        if (lead < 0)
            for (auto& row : m)
                for (i64& v : row) v = -v;
        return m;
    };
    auto mulm = [](const std::vector<std::vector<i64>>& A,
                   const std::vector<std::vector<i64>>& B) {
        std::vector<std::vector<i64>> C(A.size(), std::vector<i64>(A.size(), 0));
        for (size_t i = 0; i < A.size(); ++i)
            for (size_t j = 0; j < A.size(); ++j)
                for (size_t k = 0; k < A.size(); ++k) C[i][j] += A[i][k] * B[k][j];
        return C;
    };
    // find h in the configuration group with h a1 h^-1 = a1 a2
    auto a1 = canon(maps[0].matrix);
    auto a12 = canon(maps[2].matrix);
    bool found = false;
    for (const auto& h : g.elements) {
        auto lhs = canon(mulm(h, a1));
        auto rhs = canon(mulm(a12, h));
        if (lhs == rhs) {
            found = true;
            break;
        }
    }
    CHECK(found);
    FieldCtx F = FieldCtx::make(3);
    BoundDeckMap b1 = bind_map(v32, maps[0]);
    BoundDeckMap b12 = bind_map(v32, maps[2]);
    CHECK(twisted_count_h90(F, v32, b1, 1).T == twisted_count_h90(F, v32, b12, 1).T);
}

TEST_CASE("burnside sums over G4") {
    DoubleCoverSpec v32 = load_arrangement_file(kData + "/v32.json");
    auto maps = load_involutions_file(kData + "/involutions_v32.json");
    FieldCtx F = FieldCtx::make(3);
    std::vector<std::pair<ProjDeckMap, int>> g4{
        {identity_map(5), 1}, {maps[0], 1}, {maps[1], 1}, {maps[2], 1}};
    CountRecord r = count_quotient(F, v32, g4);
    CHECK(r.count == 364);  // CM coefficients vanish at p = 3
    // dropping an element breaks closure
    std::vector<std::pair<ProjDeckMap, int>> notclosed{
        {identity_map(5), 1}, {maps[0], 1}, {maps[1], 1}};
    CHECK_THROWS_AS(count_quotient(F, v32, notclosed), domain_error);
}

TEST_CASE("brute guard rejects large p") {
    DoubleCoverSpec f1 = load_arrangement_file(kData + "/f1.json");
    auto maps = load_involutions_file(kData + "/involutions_f1.json");
    FieldCtx F = FieldCtx::make(11);
    BoundDeckMap b = bind_map(f1, maps[0]);
    CHECK_THROWS_AS(twisted_count_brute(F, f1, b, 1), domain_error);
}

TEST_CASE("the trivial group recovers the cover count") {
    DoubleCoverSpec f1 = load_arrangement_file(kData + "/f1.json");
    FieldCtx F = FieldCtx::make(5);
    CHECK(count_quotient(F, f1, {{identity_map(5), 1}}).count ==
          count_double_cover(F, f1).count);
}
