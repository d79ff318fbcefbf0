#pragma once

#include <complex>
#include <string>
#include <vector>

#include "covercount/brute.hpp"
#include "covercount/ffcore.hpp"
#include "covercount/fibrations.hpp"

namespace covercount {

// Multiplicative characters of F_p^* as powers of a fixed generator
// character chi (chi(g) = zeta, zeta a primitive (p-1)-th root of unity).
// Every character vanishes at 0, the trivial one included.  Caches the
// normalized Jacobi sums binom(phi chi^j, chi^j)^3 that the 3F2 sum needs.
class CharacterTable {
  public:
    explicit CharacterTable(const FieldCtx& F);

    const FieldCtx& field() const { return *F_; }

    // (1/p) sum_x A(x) conj(B)(x-1) for A = chi^ja, B = chi^jb
    std::complex<double> jacobi_binom(u32 ja, u32 jb) const;

    std::complex<double> zeta(u32 e) const { return zeta_[e % (F_->p() - 1)]; }
    const std::vector<std::complex<double>>& binom3() const { return binom3_; }

  private:
    const FieldCtx* F_;
    std::vector<std::complex<double>> zeta_;
    std::vector<std::complex<double>> binom3_;  // binom(phi chi^j, chi^j)^3
};

// Value numerator / p^scale.
struct HyperValue {
    i64 numerator = 0;
    int scale = 2;
};

// 3F2(lambda) = p/(p-1) sum_chi binom(phi chi, chi)^3 chi(lambda); the float
// accumulation is gated: |Im| < 1e-6 and the p^2-scaled value must be within
// 1e-4 of an integer.
HyperValue f32(const CharacterTable& T, i64 lambda);

// Trace of Frobenius of y^2 = (x-1)(x^2+lambda); lambda != 0, -1.
EllipticTrace a32(const FieldCtx& F, i64 lambda);

struct FopRow {
    i64 lambda;
    bool pass;
    std::string what;
};

struct FopReport {
    i64 p = 0;
    bool all_pass = true;
    u64 checks = 0;
    std::vector<FopRow> failures;
};

// Validates, over all admissible lambda: p^2-integrality of 3F2, the
// 3F2 <-> 3A2 evaluation identity, the 3F2(1) special values, the
// square-trace comparison with a_lambda, and the chained evaluation
// 3F2(l) = phi(1-l)(a_{-l}^2 - p)/p^2 for l != 0, 1.
FopReport verify_fop_identity(const FieldCtx& F);

// O(p^2) count of [F_1]_p from hypergeometric data only.
CountRecord f1_hypergeometric_count(const FieldCtx& F);

}  // namespace covercount
