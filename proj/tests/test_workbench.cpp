#include <cstdio>
#include <fstream>

#include "covercount/workbench.hpp"
#include "doctest.h"

#ifndef COVERCOUNT_DATA_DIR
#define COVERCOUNT_DATA_DIR "data"
#endif

using namespace covercount;

static const std::string kData = COVERCOUNT_DATA_DIR;

namespace {
struct TmpCache {
    std::string path;
    explicit TmpCache(const char* name) : path(std::string("wbtest_") + name + ".jsonl") {
        std::remove(path.c_str());
    }
    ~TmpCache() { std::remove(path.c_str()); }
};
}  // namespace

TEST_CASE("cache appends, reloads, and enforces integrity") {
    TmpCache tc("roundtrip");
    {
        CountCache c(tc.path);
        c.record({"f1", 3, "brute", 365, 1.5});
        CHECK(c.lookup("f1", 3, "brute"));
        CHECK_FALSE(c.lookup("f1", 5, "brute"));
    }
    {
        CountCache c(tc.path);
        REQUIRE(c.lookup("f1", 3, "brute"));
        CHECK(c.lookup("f1", 3, "brute")->count == 365);
        CHECK_THROWS_AS(c.record({"f1", 3, "brute", 999, 0.0}), std::runtime_error);
    }
    std::ofstream(tc.path, std::ios::app) << "{not json\n";
    CHECK_THROWS_AS(CountCache(tc.path), std::runtime_error);
}

TEST_CASE("workbench count dispatch and caching") {
    TmpCache tc("dispatch");
    Workbench wb({kData, tc.path, 1, 1});
    CountRecord r = wb.count("f1", 3, "brute");
    CHECK(r.count == 365);
    CHECK(wb.count("v32", 7, "formula").count == 19608);
    CHECK(wb.count("v32", 5, "fibration").count == 3978);
    CHECK_THROWS_AS(wb.count("k32", 5, "fibration"), domain_error);
    // second call serves the cache
    CHECK(wb.count("f1", 3, "brute").count == 365);
    CHECK(wb.cache().size() >= 3);
}

TEST_CASE("claims run and pass on small ranges") {
    TmpCache tc("claims");
    Workbench wb({kData, tc.path, 1, 1});
    VerificationRun r1 = wb.run_claim("thm-count-32", 3, 7);
    CHECK(r1.all_pass);
    CHECK(r1.rows.size() == 3);
    VerificationRun r2 = wb.run_claim("coef-identities", 3, 200);
    CHECK(r2.all_pass);
    VerificationRun r3 = wb.run_claim("cache-integrity", 3, 3);
    CHECK(r3.all_pass);
    CHECK_THROWS_AS(wb.run_claim("no-such-claim", 3, 5), domain_error);
}

TEST_CASE("missing coefficient data degrades to a skip") {
    TmpCache tc("skip");
    Workbench wb({".", tc.path, 1, 1});  // no data files here
    VerificationRun r = wb.run_claim("thm-main-first", 3, 5);
    CHECK(r.skipped);
    CHECK_FALSE(r.skip_reason.empty());
}

TEST_CASE("reports carry every cached row") {
    TmpCache tc("report");
    Workbench wb({kData, tc.path, 1, 1});
    wb.count("v32", 3, "formula");
    wb.count("v32", 3, "fibration");
    std::string md = report_markdown(wb.cache());
    CHECK(md.find("| v32 | 3 | formula | 364 |") != std::string::npos);
    std::string csv = report_csv(wb.cache());
    CHECK(csv.find("v32,3,fibration,364") != std::string::npos);
    std::string js = report_json(wb.cache());
    CHECK(js.find("\"method\": \"formula\"") != std::string::npos);
}

TEST_CASE("verification is deterministic and idempotent") {
    TmpCache tc("idem");
    Workbench wb({kData, tc.path, 1, 7});
    VerificationRun a = wb.run_claim("cross-v32-fib", 3, 7);
    VerificationRun b = wb.run_claim("cross-v32-fib", 3, 7);
    REQUIRE(a.rows.size() == b.rows.size());
    for (size_t i = 0; i < a.rows.size(); ++i) {
        CHECK(a.rows[i].pass);
        CHECK(a.rows[i].predicted == b.rows[i].predicted);
        CHECK(a.rows[i].counted == b.rows[i].counted);
    }
}

TEST_CASE("wide integers round trip through strings") {
    for (const char* s : {"0", "-1", "29583456", "31000862722813",
                          "170141183460469231731687303715884105727",
                          "-170141183460469231731687303715884105727"})
        CHECK(to_string(parse_i128(s)) == s);
    CHECK_THROWS_AS(parse_i128("12x"), domain_error);
    CHECK_THROWS_AS(parse_i128(""), domain_error);
}
