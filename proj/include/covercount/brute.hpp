#pragma once

#include <optional>
#include <string>
#include <vector>

#include "covercount/arrangement.hpp"
#include "covercount/ffcore.hpp"
#include "covercount/sign_scan.hpp"
#include "covercount/util.hpp"

namespace covercount {

struct SignCensus {
    u64 plus = 0, zero = 0, minus = 0;
    i64 diff() const { return i64(plus) - i64(minus); }
    u64 total() const { return plus + zero + minus; }
    SignCensus& operator+=(const ScanCounts& c) {
        plus += c.plus;
        zero += c.zero;
        minus += c.minus;
        return *this;
    }
};

struct CountRecord {
    std::string variety_id;
    i64 p = 0;
    std::string method;
    i128 count = 0;
    double wall_ms = 0;
};

i128 count_projective_space(i64 p, int n);

// Forms are given as rows of residues; projective forms have dim+1 entries,
// affine forms have the constant term last.  The sign of `twist` (its
// quadratic character) flips plus/minus; twist must be nonzero mod p.
SignCensus census_projective(const FieldCtx& F, const std::vector<std::vector<u32>>& forms,
                             u32 twist, int jobs);
SignCensus census_affine(const FieldCtx& F, const std::vector<std::vector<u32>>& affine_forms,
                         u32 twist, int jobs);

std::vector<std::vector<u32>> reduce_forms(const FieldCtx& F,
                                           const std::vector<std::vector<i64>>& forms);

// Census of twist * prod(forms) over the base projective space of the cover.
SignCensus sign_census(const FieldCtx& F, const DoubleCoverSpec& spec, int jobs = 1);
// Same on the affine patch x_coord = 1.
SignCensus sign_census_affine_patch(const FieldCtx& F, const DoubleCoverSpec& spec, int coord,
                                    int jobs = 1);

// [D]_p for the double cover t^2 = twist*prod(forms): base count + (v+ - v-).
CountRecord count_double_cover(const FieldCtx& F, const DoubleCoverSpec& spec, int jobs = 1);

// Number of points of the double cover on the affine patch x_coord = 1.
i128 count_cover_affine_patch(const FieldCtx& F, const DoubleCoverSpec& spec, int coord,
                              int jobs = 1);

struct QuotientProductResult {
    CountRecord record;
    std::vector<i128> base_counts;
    std::vector<SignCensus> censuses;
};

// (D_1 x ... x D_n)/sigma with sigma negating every cover coordinate:
// prod [S_i] + prod (v_{i,+} - v_{i,-}).
QuotientProductResult count_quotient_product(const FieldCtx& F,
                                             const std::vector<DoubleCoverSpec>& specs,
                                             int jobs = 1);

enum class FibreMode { Scheme, AffinePatch };

// Points of the cover on the locus b*m0(x) - a*m1(x) = 0.  Scheme mode
// counts the whole hyperplane section (base locus included); AffinePatch
// additionally fixes x_patch_coord = 1.
CountRecord count_fibre(const FieldCtx& F, const DoubleCoverSpec& spec,
                        const std::vector<i64>& m0, const std::vector<i64>& m1, u32 a, u32 b,
                        FibreMode mode, int patch_coord = -1, int jobs = 1);

// Points of the cover on the intersection of the given linear constraints.
i128 count_linear_section(const FieldCtx& F, const DoubleCoverSpec& spec,
                          const std::vector<std::vector<i64>>& constraints, int jobs = 1);

// Direct enumeration oracle: walks the product of the base spaces and
// counts the Frobenius-stable sigma-orbits in each fibre.  For two factors
// this is the point count of (D_1 x D_2)/sigma and must agree with
// count_quotient_product; with one factor the quotient collapses to the
// base, and with three or more the orbit count exceeds the double cover
// t^2 = prod f_i that the census identity describes.
i128 quotient_product_oracle(const FieldCtx& F, const std::vector<DoubleCoverSpec>& specs);

}  // namespace covercount
