// Acceptance suite: one criterion per block, each printing a single
// PASS/FAIL/SKIP line.  Exact integer equality everywhere; the only
// floating point in the project sits behind the rounding gates of the
// hypergeometric sums.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <vector>

#include "covercount/workbench.hpp"

#ifndef COVERCOUNT_DATA_DIR
#define COVERCOUNT_DATA_DIR "data"
#endif

using namespace covercount;

namespace {

struct Criterion {
    int id;
    std::string description;
    std::vector<std::pair<std::string, std::pair<i64, i64>>> claims;  // claim, [pmin, pmax]
};

int run(Workbench& wb, const Criterion& c) {
    auto t0 = std::chrono::steady_clock::now();
    bool pass = true, skipped = false;
    std::string skip_reason;
    u64 rows = 0;
    std::vector<std::string> failures;
    for (const auto& [claim, range] : c.claims) {
        VerificationRun r = wb.run_claim(claim, range.first, range.second);
        if (r.skipped) {
            skipped = true;
            skip_reason = r.skip_reason;
            continue;
        }
        rows += r.rows.size();
        if (!r.all_pass) {
            pass = false;
            for (const auto& row : r.rows)
                if (!row.pass)
                    failures.push_back(claim + " p=" + std::to_string(row.p) + " " +
                                       row.detail + ": expected " + to_string(row.predicted) +
                                       ", got " + to_string(row.counted));
        }
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char line[512];
    if (skipped && pass)
        std::snprintf(line, sizeof line, "criterion %d: SKIP — %s (%s)", c.id,
                      c.description.c_str(), skip_reason.c_str());
    else
        std::snprintf(line, sizeof line, "criterion %d: %s — %s (%llu rows, %.1fs)", c.id,
                      pass ? "PASS" : "FAIL", c.description.c_str(),
                      (unsigned long long)rows, secs);
    std::cout << line << "\n";
    for (const auto& f : failures) std::cout << "    " << f << "\n";
    return pass ? 0 : 1;
}

}  // namespace

int main() {
    std::string data = COVERCOUNT_DATA_DIR;
    if (const char* env = std::getenv("COVERCOUNT_DATA")) data = env;
    std::string cache = "acceptance_cache.jsonl";
    std::remove(cache.c_str());
    Workbench wb({data, cache, 8, 1});

    std::vector<Criterion> cs = {
        {1,
         "brute [V32]_p equals the CM modular prediction, odd p <= 31",
         {{"thm-count-32", {3, 31}}}},
        {2,
         "brute [F1]_p equals the level-8 modular prediction, odd p <= 31",
         {{"thm-main-first", {3, 31}}}},
        {3,
         "cross-pipeline: fibration = brute (F1 <= 31, V32 <= 19), "
         "hypergeometric = fibration (<= 199), V32 fibration = prediction (<= 199)",
         {{"cross-f1-fib", {3, 31}}, {"cross-f1-hyp", {3, 199}}, {"cross-v32-fib", {3, 199}}}},
        {4,
         "surface counts match the closed forms for all admissible lambda, odd p <= 31",
         {{"surface-formulas", {3, 31}}}},
        {5,
         "finite-field hypergeometric identity suite, odd p <= 499",
         {{"fop-identities", {3, 499}}}},
        {6,
         "quotient counts match the small-prime tables and both descent paths agree",
         {{"prop-count-q-r", {3, 19}},
          {"conj-q2", {3, 19}},
          {"conj-q3", {3, 19}},
          {"conj-count-mod-a1", {3, 19}},
          {"conj-rigid-32", {3, 19}},
          {"h90-equiv", {3, 5}}}},
        {7,
         "crepant-resolution scan and automorphism groups of both arrangements",
         {{"ch-criterion", {3, 3}}, {"aut-orders", {3, 3}}}},
        {8,
         "coefficient-free property suites: product-quotient identity, Weil bounds, "
         "partitioning, Burnside integrality, cache integrity",
         {{"lemma-count-q-dc", {3, 7}},
          {"weil-bounds", {3, 31}},
          {"partition-independence", {3, 31}},
          {"burnside-integrality", {3, 7}},
          {"cache-integrity", {3, 3}},
          {"coef-identities", {3, 499}}}},
    };

    int bad = 0;
    for (const auto& c : cs) bad += run(wb, c);
    std::remove(cache.c_str());
    if (bad) {
        std::cout << bad << " criteria FAILED\n";
        return 1;
    }
    std::cout << "all acceptance criteria passed\n";
    return 0;
}
