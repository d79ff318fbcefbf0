#pragma once

#include <string>

#include "covercount/arrangement.hpp"
#include "covercount/brute.hpp"
#include "covercount/ffcore.hpp"

namespace covercount {

struct EllipticTrace {
    i64 p = 0;
    std::string label;
    i64 a = 0;  // p + 1 - #E(F_p)
};

// Trace of y^2 = x^3 + A x^2 + B x + C via the Legendre sum; the cubic must
// be nonsingular mod p.
EllipticTrace trace_cubic(const FieldCtx& F, i64 A, i64 B, i64 C);

// Trace of y^2 = x^3 - 2x^2 + (l/(l+1))x; l = 0 returns the trace-0
// convention, l = -1 is rejected.
EllipticTrace a_lambda(const FieldCtx& F, i64 lambda);

// Desingularized Kummer surface of E_l x E_l:
// p^2 + (12 + 6 phi(l)) p + 1 + a^2.
i128 count_kummer(const FieldCtx& F, i64 lambda);

i128 count_K_lambda(const FieldCtx& F, i64 lambda);  // p^2 + 1 + a^2
i128 count_L_lambda(const FieldCtx& F, i64 lambda);  // p^2+p+1 + phi(l)(a^2-p)
i128 count_F_lambda(const FieldCtx& F, i64 lambda);  // p^4 + phi(l)(a^2-p)^2; F_0 = p^4

struct MinusOneCounts {
    i128 k;  // [K_{-1}]_p
    i128 f;  // [F_{-1}]_p
};
MinusOneCounts count_minus_one(const FieldCtx& F);

// Sums the fibre counts of the (x_0:x_3) fibration: O(p^2) total.
CountRecord count_F1_fibrationwise(const FieldCtx& F);

// Level-32 chain.
i128 count_K32(const FieldCtx& F);                     // p^2+p+1+a_{3,p}
i128 count_rho_fibre(const FieldCtx& F, i64 x);        // fibres of rho on script-L
i128 count_rho_fibre_infinity(const FieldCtx& F);
i128 count_script_L(const FieldCtx& F);                // closed form
i128 count_script_L_fibrewise(const FieldCtx& F);      // fibre sum - p*(2p+1)
// Excess of (K x L_l)/sigma over the pi-fibre at l:
// p(p+1)^2 + (p-2) phi(l) a_{3,p}.
i128 fibre_excess(const FieldCtx& F, i64 lambda);

struct V32FibrationOptions {
    std::string data_dir;  // location of l32_template.json and k32.json
    int jobs = 1;
};
CountRecord count_V32_fibrationwise(const FieldCtx& F, const V32FibrationOptions& opt);

// Direct enumeration of the total space of the L_lambda family inside
// P(3,1,1,1) x P^1 (acceptance oracle for count_script_L).
i128 count_script_L_brute(const FieldCtx& F, const std::string& data_dir, int jobs = 1);

}  // namespace covercount
