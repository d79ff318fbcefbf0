#pragma once

#include <string>
#include <vector>

#include "covercount/ffcore.hpp"
#include "covercount/util.hpp"

namespace covercount {

// CM coefficient oracle for the weight-j newforms attached to powers of the
// Gaussian Hecke character: a_{j,p} = tr (a_p + b_p i)^{j-1} for p = 1 mod 4
// and 0 for p = 3 mod 4.  j = 3 is the level-16 form with quadratic
// nebentypus; j in {2,4,6} are the CM forms of level 32 (metadata only).
struct CMFormId {
    int j;
};

int cm_level(CMFormId id);
i128 cm_coefficient(CMFormId id, i64 p);

struct CoefIdentityReport {
    i64 pmax = 0;
    u64 checked = 0;
    bool all_pass = true;
    std::vector<i64> failures;
};

// a_{3,p} = a_{2,p}^2 - 2p, a_{4,p} = a_{2,p}(a_{3,p} - p),
// a_{6,p} = a_{4,p}a_{3,p} - p^2 a_{2,p} for every odd prime <= pmax.
CoefIdentityReport verify_coef_identities(i64 pmax);

struct QExpansion {
    std::string label;
    int weight = 0;
    int level = 0;
    std::string source_oracle;
    std::vector<i64> coeffs;  // a_1..a_M

    i64 a(u64 n) const;  // 1-based; throws if n == 0 or n > M
    u64 m() const { return coeffs.size(); }
};

// Parses and validates: a_1 = 1, Hecke multiplicativity on coprime pairs,
// the good-prime power recursion, Deligne bounds in exact integers.  The
// first failing index is named in the exception.
QExpansion load_qexpansion(const std::string& json_text);
QExpansion load_qexpansion_file(const std::string& path);

// Sum p^i - a_p - (b_p + phi(-1) p) p  with level-8 eigenvalues a_p, b_p.
i128 predict_f1(const FieldCtx& F, const QExpansion& weight6, const QExpansion& weight4);
// Sum p^i - a_{6,p} - p a_{4,p} - 2 p^2 a_{2,p}  with the CM oracle.
i128 predict_v32(const FieldCtx& F);

}  // namespace covercount
