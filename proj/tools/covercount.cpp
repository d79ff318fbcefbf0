// Command-line workbench: point counts, claim verification, reports, and
// the arrangement/quotient analyzers.  Exit codes: 0 all pass, 1 a
// verification row failed, 2 configuration or data error.

#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"
#include "covercount/analysis.hpp"
#include "covercount/fibrations.hpp"
#include "covercount/hypergeo.hpp"
#include "covercount/modforms.hpp"
#include "covercount/quotients.hpp"
#include "covercount/workbench.hpp"

#ifndef COVERCOUNT_DATA_DIR
#define COVERCOUNT_DATA_DIR "data"
#endif

using namespace covercount;

namespace {

std::string env_or(const char* name, const std::string& fallback) {
    const char* v = std::getenv(name);
    return v && *v ? v : fallback;
}

void parse_range(const std::string& range, i64& lo, i64& hi) {
    auto colon = range.find(':');
    if (colon == std::string::npos) throw domain_error("--range expects pmin:pmax");
    lo = std::stoll(range.substr(0, colon));
    hi = std::stoll(range.substr(colon + 1));
}

int print_run(const VerificationRun& run) {
    if (run.skipped) {
        std::cout << run.claim << ": SKIPPED (" << run.skip_reason << ")\n";
        return 0;
    }
    for (const auto& row : run.rows)
        std::cout << run.claim << "," << row.p << "," << row.detail << ","
                  << to_string(row.predicted) << "," << to_string(row.counted) << ","
                  << (row.pass ? "pass" : "FAIL") << "," << row.wall_ms << "\n";
    std::cout << run.claim << ": " << (run.all_pass ? "all pass" : "FAILURES") << " ("
              << run.rows.size() << " rows)\n";
    return run.all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-field point-counting workbench for hyperplane double covers"};
    app.require_subcommand(1);

    WorkbenchOptions opt;
    opt.data_dir = env_or("COVERCOUNT_DATA", COVERCOUNT_DATA_DIR);
    opt.cache_path = env_or("COVERCOUNT_CACHE", "pointcounts.jsonl");
    opt.jobs = 1;
    app.add_option("--data-dir", opt.data_dir, "coefficient and arrangement files");
    app.add_option("--cache", opt.cache_path, "JSONL result cache");
    app.add_option("--jobs,-j", opt.jobs, "worker threads");
    app.add_option("--seed", opt.seed, "seed for randomized trivializations");

    // count
    auto* c_cmd = app.add_subcommand("count", "count points of a bundled variety or file");
    std::string variety, method = "brute";
    i64 prime = 0;
    std::string range;
    c_cmd->add_option("variety", variety)->required();
    c_cmd->add_option("--prime,-p", prime);
    c_cmd->add_option("--range", range, "pmin:pmax over odd primes");
    c_cmd->add_option("--method", method, "brute | fibration | formula | hypergeometric");

    // verify
    auto* v_cmd = app.add_subcommand("verify", "verify a registered claim over a prime range");
    std::string claim;
    v_cmd->add_option("claim", claim)->required()->check(CLI::IsMember([] {
        auto v = Workbench::claim_names();
        return std::vector<std::string>(v.begin(), v.end());
    }()));
    i64 pmin = 3, pmax = 19;
    v_cmd->add_option("pmin", pmin);
    v_cmd->add_option("pmax", pmax);

    // report
    auto* r_cmd = app.add_subcommand("report", "dump the cache");
    std::string format = "markdown";
    r_cmd->add_option("--format", format, "markdown | csv | json");

    // forms
    auto* f_cmd = app.add_subcommand("forms", "CSV of modular-form coefficients");
    std::string frange = "3:100";
    f_cmd->add_option("--range", frange);

    // hypergeo
    auto* h_cmd = app.add_subcommand("hypergeo", "CSV of p^2*3F2 and 3A2 values");
    i64 hprime = 13;
    h_cmd->add_option("--prime,-p", hprime)->required();

    // analyze
    auto* a_cmd = app.add_subcommand("analyze", "crepant-resolution scan and automorphisms");
    std::string avariety;
    a_cmd->add_option("variety", avariety)->required();

    // quotient
    auto* q_cmd = app.add_subcommand("quotient", "count a quotient by cover involutions");
    std::string qvariety, qmaps;
    i64 qprime = 3;
    int qeps = 1;
    q_cmd->add_option("variety", qvariety)->required();
    q_cmd->add_option("--maps", qmaps, "comma-separated involution names, or 'g4'")->required();
    q_cmd->add_option("--prime,-p", qprime)->required();
    q_cmd->add_option("--eps", qeps, "deck sign of each lift (+1 or -1)");

    CLI11_PARSE(app, argc, argv);

    try {
        Workbench wb(opt);
        if (*c_cmd) {
            std::vector<i64> ps;
            if (!range.empty()) {
                i64 lo, hi;
                parse_range(range, lo, hi);
                for (i64 p = lo | 1; p <= hi; p += 2)
                    if (is_prime(p)) ps.push_back(p);
            } else if (prime > 0) {
                ps.push_back(prime);
            } else {
                throw domain_error("count needs --prime or --range");
            }
            for (i64 p : ps) {
                CountRecord r = wb.count(variety, p, method);
                std::cout << r.variety_id << "," << r.p << "," << r.method << ","
                          << to_string(r.count) << "\n";
            }
            return 0;
        }
        if (*v_cmd) return print_run(wb.run_claim(claim, pmin, pmax));
        if (*r_cmd) {
            if (format == "markdown")
                std::cout << report_markdown(wb.cache());
            else if (format == "csv")
                std::cout << report_csv(wb.cache());
            else if (format == "json")
                std::cout << report_json(wb.cache()) << "\n";
            else
                throw domain_error("unknown format " + format);
            return 0;
        }
        if (*f_cmd) {
            i64 lo, hi;
            parse_range(frange, lo, hi);
            std::cout << "p,a2p,a3p,a4p,a6p,ap,bp\n";
            for (i64 p = lo | 1; p <= hi; p += 2) {
                if (!is_prime(p)) continue;
                std::cout << p << "," << to_string(cm_coefficient({2}, p)) << ","
                          << to_string(cm_coefficient({3}, p)) << ","
                          << to_string(cm_coefficient({4}, p)) << ","
                          << to_string(cm_coefficient({6}, p));
                if (wb.weight6() && u64(p) <= wb.weight6()->m())
                    std::cout << "," << wb.weight6()->a(u64(p)) << ","
                              << wb.weight4()->a(u64(p));
                else
                    std::cout << ",,";
                std::cout << "\n";
            }
            return 0;
        }
        if (*h_cmd) {
            const FieldCtx& F = wb.field(hprime);
            CharacterTable T(F);
            std::cout << "p,lambda,p2_times_f32,a32\n";
            for (u32 l = 1; l < F.p(); ++l) {
                std::cout << hprime << "," << l << "," << f32(T, l).numerator << ",";
                if (l + 1 != F.p()) std::cout << a32(F, l).a;
                std::cout << "\n";
            }
            return 0;
        }
        if (*a_cmd) {
            DoubleCoverSpec spec = wb.variety(avariety);
            CynkHulekReport rep = cynk_hulek_report(spec);
            size_t fails = 0;
            for (const auto& s : rep.subsets)
                if (!s.ch_ok) ++fails;
            std::cout << spec.name << ": " << rep.subsets.size() << " closed subsets, "
                      << fails << " failing; crepant criterion "
                      << (rep.all_ok ? "holds" : "FAILS") << "\n";
            for (const auto& s : rep.subsets) {
                if (s.ch_ok) continue;
                std::cout << "  failing subset {";
                for (size_t i = 0; i < s.subset.size(); ++i)
                    std::cout << (i ? "," : "") << s.subset[i];
                std::cout << "} dim " << s.intersection_dim;
                if (!s.point.empty()) {
                    std::cout << " point (";
                    for (size_t i = 0; i < s.point.size(); ++i)
                        std::cout << (i ? ":" : "") << s.point[i];
                    std::cout << ")";
                }
                std::cout << "\n";
            }
            AutGroup g = automorphism_group(spec);
            std::cout << "projective stabilizer order " << g.pgl_order
                      << ", cover automorphisms " << g.cover_order << "\n";
            std::cout << "form orbits:";
            for (const auto& orb : g.form_orbits) std::cout << " " << orb.size();
            std::cout << "\ngenerators (x-action):\n";
            for (size_t gi : g.generator_indices) {
                for (const auto& row : g.elements[gi]) {
                    std::cout << "  [";
                    for (size_t i = 0; i < row.size(); ++i)
                        std::cout << (i ? " " : "") << row[i];
                    std::cout << "]\n";
                }
                std::cout << "\n";
            }
            if (g.pgl_order > 2) {
                GroupStructure st = analyze_group_structure(g);
                std::cout << "center order " << st.center_order;
                if (st.splits_c2_x_h)
                    std::cout << "; splits C2 x H with |Z(H)| = " << st.h_center_order;
                std::cout << "\n";
            }
            return 0;
        }
        if (*q_cmd) {
            DoubleCoverSpec spec = wb.variety(qvariety);
            std::string file = opt.data_dir + "/involutions_" + qvariety + ".json";
            auto maps = load_involutions_file(file);
            const FieldCtx& F = wb.field(qprime);
            ProjDeckMap identity;
            identity.name = "identity";
            identity.matrix.assign(size_t(spec.dim()) + 1,
                                   std::vector<i64>(size_t(spec.dim()) + 1, 0));
            for (int i = 0; i <= spec.dim(); ++i) identity.matrix[size_t(i)][size_t(i)] = 1;

            std::vector<std::pair<ProjDeckMap, int>> group{{identity, 1}};
            if (qmaps == "g4") {
                for (size_t i = 0; i < maps.size(); ++i)
                    group.push_back({maps[i], i < 2 ? qeps : 1});
            } else {
                std::stringstream ss(qmaps);
                std::string name;
                while (std::getline(ss, name, ',')) {
                    bool hit = false;
                    for (const auto& m : maps)
                        if (m.name == name) {
                            group.push_back({m, qeps});
                            hit = true;
                        }
                    if (!hit) throw domain_error("unknown involution " + name);
                }
            }
            CountRecord r = count_quotient(F, spec, group, opt.seed, opt.jobs);
            std::cout << r.variety_id << "," << r.p << "," << r.method << ","
                      << to_string(r.count) << "\n";
            return 0;
        }
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
