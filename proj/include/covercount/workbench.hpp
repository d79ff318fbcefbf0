#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "covercount/brute.hpp"
#include "covercount/modforms.hpp"
#include "covercount/util.hpp"

namespace covercount {

// Append-only JSONL cache keyed by (variety, p, method); recomputing a
// cached value must reproduce it exactly or the run aborts.
class CountCache {
  public:
    explicit CountCache(std::string path);

    std::optional<CountRecord> lookup(const std::string& variety, i64 p,
                                      const std::string& method) const;
    // Returns the cached record if one exists (after checking the count
    // matches); otherwise appends and returns the new record.
    CountRecord record(const CountRecord& r);

    size_t size() const { return entries_.size(); }
    const std::map<std::string, CountRecord>& entries() const { return entries_; }
    const std::string& path() const { return path_; }

  private:
    std::string path_;
    std::map<std::string, CountRecord> entries_;
};

struct VerifyRow {
    i64 p = 0;
    std::string detail;
    i128 predicted = 0;
    i128 counted = 0;
    bool pass = false;
    double wall_ms = 0;
};

struct VerificationRun {
    std::string claim;
    std::vector<VerifyRow> rows;
    bool all_pass = true;
    bool skipped = false;
    std::string skip_reason;
};

struct WorkbenchOptions {
    std::string data_dir = "data";
    std::string cache_path = "pointcounts.jsonl";
    int jobs = 1;
    u64 seed = 1;
};

class Workbench {
  public:
    explicit Workbench(WorkbenchOptions opt);

    const FieldCtx& field(i64 p);
    DoubleCoverSpec variety(const std::string& name);  // bundled name or file path

    CountRecord count(const std::string& variety, i64 p, const std::string& method);

    static std::vector<std::string> claim_names();
    VerificationRun run_claim(const std::string& claim, i64 pmin, i64 pmax);

    // nullopt when the coefficient file is absent (with the reason stored)
    const std::optional<QExpansion>& weight6();
    const std::optional<QExpansion>& weight4();
    std::string data_notice() const { return data_notice_; }

    CountCache& cache() { return cache_; }
    const WorkbenchOptions& options() const { return opt_; }

  private:
    WorkbenchOptions opt_;
    CountCache cache_;
    std::map<i64, FieldCtx> fields_;
    bool qexp_loaded_ = false;
    std::optional<QExpansion> w6_, w4_;
    std::string data_notice_;
};

std::string report_markdown(const CountCache& cache);
std::string report_csv(const CountCache& cache);
std::string report_json(const CountCache& cache);

}  // namespace covercount
