#include <random>

#include "covercount/analysis.hpp"
#include "doctest.h"

#ifndef COVERCOUNT_DATA_DIR
#define COVERCOUNT_DATA_DIR "data"
#endif

using namespace covercount;

static const std::string kData = COVERCOUNT_DATA_DIR;

TEST_CASE("crepant criterion scan on F1") {
    DoubleCoverSpec f1 = load_arrangement_file(kData + "/f1.json");
    CynkHulekReport rep = cynk_hulek_report(f1);
    CHECK_FALSE(rep.all_ok);
    std::vector<const SubsetReport*> fails;
    for (const auto& s : rep.subsets)
        if (!s.ch_ok) fails.push_back(&s);
    REQUIRE(fails.size() == 1);
    CHECK(fails[0]->subset == std::vector<int>{6, 7, 8, 9, 10, 11});
    CHECK(fails[0]->intersection_dim == 0);
    // the intersection is the single point (-1:1:-1:1:-1:1)
    std::vector<i64> expect{-1, 1, -1, 1, -1, 1};
    normalize_form(expect);
    CHECK(fails[0]->point == expect);
    CHECK_FALSE(fails[0]->near_pencil);
}

TEST_CASE("crepant criterion holds everywhere on V32") {
    DoubleCoverSpec v32 = load_arrangement_file(kData + "/v32.json");
    CynkHulekReport rep = cynk_hulek_report(v32);
    CHECK(rep.all_ok);
    for (const auto& s : rep.subsets)
        if (s.subset.size() <= 2) CHECK(s.near_pencil);
}

TEST_CASE("pairs are always near-pencil") {
    DoubleCoverSpec s;
    s.name = "pair";
    s.arrangement.dim = 2;
    s.arrangement.forms = {{1, 0, 0}, {0, 1, 0}};
    CynkHulekReport rep = cynk_hulek_report(s);
    CHECK(rep.all_ok);
    for (const auto& r : rep.subsets) CHECK(r.near_pencil);
}

TEST_CASE("scan is invariant under form order and unimodular coordinates") {
    DoubleCoverSpec f1 = load_arrangement_file(kData + "/f1.json");
    auto count_fails = [](const CynkHulekReport& r) {
        size_t n = 0;
        for (const auto& s : r.subsets) n += !s.ch_ok;
        return n;
    };
    CynkHulekReport base = cynk_hulek_report(f1);

    DoubleCoverSpec shuffled = f1;
    std::mt19937_64 rng(3);
    std::shuffle(shuffled.arrangement.forms.begin(), shuffled.arrangement.forms.end(), rng);
    CynkHulekReport rs = cynk_hulek_report(shuffled);
    CHECK(rs.all_ok == base.all_ok);
    CHECK(count_fails(rs) == count_fails(base));
    CHECK(rs.subsets.size() == base.subsets.size());

    // unimodular change x_0 -> x_0 + x_2, rest fixed (acts on coefficients)
    DoubleCoverSpec sheared = f1;
    for (auto& f : sheared.arrangement.forms) {
        f[2] += f[0];
        normalize_form(f);
    }
    CynkHulekReport rt = cynk_hulek_report(sheared);
    CHECK(rt.all_ok == base.all_ok);
    CHECK(count_fails(rt) == count_fails(base));
    CHECK(rt.subsets.size() == base.subsets.size());
}

TEST_CASE("ambient too large is rejected") {
    DoubleCoverSpec s;
    s.arrangement.dim = 9;
    s.arrangement.forms = {std::vector<i64>(10, 1)};
    CHECK_THROWS_AS(cynk_hulek_report(s), domain_error);
}

TEST_CASE("automorphisms of the F1 arrangement") {
    DoubleCoverSpec f1 = load_arrangement_file(kData + "/f1.json");
    AutGroup g = automorphism_group(f1);
    CHECK(g.pgl_order == 12);
    CHECK(g.cover_order == 24);
    REQUIRE(g.form_orbits.size() == 2);
    CHECK(g.form_orbits[0] == std::vector<int>{0, 1, 2, 3, 4, 5});
    CHECK(g.form_orbits[1] == std::vector<int>{6, 7, 8, 9, 10, 11});
    CHECK(g.generator_indices.size() >= 1);
    // closure under composition and inverse comes with a consistent
    // multiplication table
    GroupStructure st = analyze_group_structure(g);
    CHECK(st.order == 12);
    CHECK(st.center_order == 2);  // D6 has center of order 2
}

TEST_CASE("automorphisms of the V32 arrangement") {
    DoubleCoverSpec v32 = load_arrangement_file(kData + "/v32.json");
    AutGroup g = automorphism_group(v32);
    CHECK(g.pgl_order == 64);
    GroupStructure st = analyze_group_structure(g);
    CHECK(st.order == 64);
    CHECK(st.splits_c2_x_h);
    CHECK(st.h_center_order == 4);
    CHECK(st.h_center_c2sq);
    CHECK(st.h_mod_center_c2cubed);
}

TEST_CASE("a perturbed arrangement is rigid") {
    std::mt19937_64 rng(12345);
    DoubleCoverSpec s;
    s.name = "generic";
    s.arrangement.dim = 5;
    while (s.arrangement.forms.size() < 12) {
        std::vector<i64> f(6);
        for (auto& c : f) c = i64(rng() % 9) - 4;
        bool nz = false;
        for (i64 c : f) nz |= c != 0;
        if (!nz) continue;
        normalize_form(f);
        bool dup = false;
        for (const auto& g2 : s.arrangement.forms) dup |= g2 == f;
        if (!dup) s.arrangement.forms.push_back(f);
    }
    AutGroup g = automorphism_group(s);
    CHECK(g.pgl_order == 1);
}
