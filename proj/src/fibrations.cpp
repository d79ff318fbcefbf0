// Closed-form point counts for the surfaces and fivefolds in the two
// modularity chains.  Conventions:
//   a_l = trace of y^2 = x^3 - 2x^2 + (l/(l+1))x           (l != 0, -1)
//   [K_l] = p^2 + 1 + a_l^2
//   [L_l] = p^2 + p + 1 + phi(l)(a_l^2 - p)
//   [F_l] = p^4 + phi(l)(a_l^2 - p)^2, the affine x_3 != 0 fibre
//   [K_{-1}] = p^2 - phi(-1)p + 1 + a^2 with a the trace of y^2 = x^3 - x,
//   [F_{-1}] = p^4 + (2p - a^2)^2 for p = 1 mod 4, p^4 otherwise
// and for the level-32 chain a_{j,p} = tr (a+bi)^{j-1} from the CM oracle.

#include "covercount/fibrations.hpp"

#include <cassert>
#include <chrono>
#include <fstream>
#include <sstream>

#include "covercount/modforms.hpp"

namespace covercount {

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

i64 require_unit(const FieldCtx& F, i64 lambda, bool forbid_minus_one) {
    u32 l = F.reduce(lambda);
    if (l == 0) throw domain_error("lambda = 0 mod p is excluded");
    if (forbid_minus_one && l == F.p() - 1) throw domain_error("lambda = -1 mod p is excluded");
    return i64(l);
}

}  // namespace

EllipticTrace trace_cubic(const FieldCtx& F, i64 A, i64 B, i64 C) {
    u32 a = F.reduce(A), b = F.reduce(B), c = F.reduce(C);
    // disc(x^3+Ax^2+Bx+C) = 18ABC - 4A^3C + A^2B^2 - 4B^3 - 27C^2
    u32 disc = F.sub(
        F.add(F.mul(F.reduce(18), F.mul(a, F.mul(b, c))),
              F.mul(F.mul(a, a), F.mul(b, b))),
        F.add(F.add(F.mul(F.reduce(4), F.mul(F.mul(a, F.mul(a, a)), c)),
                    F.mul(F.reduce(4), F.mul(b, F.mul(b, b)))),
              F.mul(F.reduce(27), F.mul(c, c))));
    if (disc == 0) throw domain_error("singular cubic");
    i64 sum = 0;
    for (u32 x = 0; x < F.p(); ++x) {
        u32 v = F.add(F.mul(F.add(F.mul(F.add(x, a), x), b), x), c);  // x^3+ax^2+bx+c
        sum += F.legendre(v);
    }
    EllipticTrace t;
    t.p = F.p();
    t.a = -sum;
    return t;
}

EllipticTrace a_lambda(const FieldCtx& F, i64 lambda) {
    u32 l = F.reduce(lambda);
    if (l == 0) return {i64(F.p()), "a_0 convention", 0};
    if (l == F.p() - 1) throw domain_error("lambda = -1 has no E_lambda");
    u32 r = F.mul(l, F.inv(F.add(l, 1)));
    EllipticTrace t = trace_cubic(F, -2, i64(r), 0);
    t.label = "E_" + std::to_string(l);
    return t;
}

i128 count_kummer(const FieldCtx& F, i64 lambda) {
    i64 l = require_unit(F, lambda, true);
    i64 a = a_lambda(F, l).a;
    i64 p = F.p();
    return i128(p) * p + (12 + 6 * F.legendre_int(l)) * i128(p) + 1 + i128(a) * a;
}

i128 count_K_lambda(const FieldCtx& F, i64 lambda) {
    i64 l = require_unit(F, lambda, true);
    i64 a = a_lambda(F, l).a;
    return i128(F.p()) * F.p() + 1 + i128(a) * a;
}

i128 count_L_lambda(const FieldCtx& F, i64 lambda) {
    i64 l = require_unit(F, lambda, true);
    i64 a = a_lambda(F, l).a;
    i64 p = F.p();
    return i128(p) * p + p + 1 + F.legendre_int(l) * (i128(a) * a - p);
}

i128 count_F_lambda(const FieldCtx& F, i64 lambda) {
    u32 l = F.reduce(lambda);
    i64 p = F.p();
    if (l == 0) return ipow(p, 4);
    if (l == F.p() - 1) throw domain_error("lambda = -1: use count_minus_one");
    i64 a = a_lambda(F, i64(l)).a;
    i128 d = i128(a) * a - p;
    return ipow(p, 4) + F.legendre(l) * d * d;
}

MinusOneCounts count_minus_one(const FieldCtx& F) {
    i64 p = F.p();
    i64 a = trace_cubic(F, 0, -1, 0).a;  // y^2 = x^3 - x
    MinusOneCounts r;
    r.k = i128(p) * p - F.legendre_int(-1) * i128(p) + 1 + i128(a) * a;
    if (p % 4 == 1) {
        i128 d = 2 * i128(p) - i128(a) * a;
        r.f = ipow(p, 4) + d * d;
    } else {
        r.f = ipow(p, 4);
    }
    return r;
}

CountRecord count_F1_fibrationwise(const FieldCtx& F) {
    auto t0 = std::chrono::steady_clock::now();
    i64 p = F.p();
    i128 total = count_projective_space(p, 4);  // hyperplane x_3 = 0
    total += ipow(p, 4);                        // affine fibre at 0
    for (i64 l = 1; l <= p - 2; ++l) total += count_F_lambda(F, l);
    total += count_minus_one(F).f;
    CountRecord r;
    r.variety_id = "f1";
    r.p = p;
    r.method = "fibration";
    r.count = total;
    r.wall_ms = ms_since(t0);
    return r;
}

i128 count_K32(const FieldCtx& F) {
    i64 p = F.p();
    return i128(p) * p + p + 1 + cm_coefficient({3}, p);
}

i128 count_rho_fibre(const FieldCtx& F, i64 x) {
    i64 p = F.p();
    u32 xr = F.reduce(x);
    u32 cube = F.sub(F.mul(xr, F.mul(xr, xr)), xr);  // x^3 - x
    if (xr == 0) return i128(p) * p + 3 * p + 1;
    if (cube == 0) return 2 * i128(p) * p + 2 * p + 1;  // x = 1 or -1
    return i128(p) * p + 4 * p + 1 + F.legendre(cube) * cm_coefficient({3}, p);
}

i128 count_rho_fibre_infinity(const FieldCtx& F) {
    i64 p = F.p();
    return 2 * i128(p) * p + 2 * p + 1;
}

i128 count_script_L(const FieldCtx& F) {
    i64 p = F.p();
    return ipow(p, 3) + 6 * i128(p) * p - 3 * p + 1 - cm_coefficient({4}, p) -
           i128(p) * cm_coefficient({2}, p);
}

i128 count_script_L_fibrewise(const FieldCtx& F) {
    i64 p = F.p();
    i128 total = count_rho_fibre_infinity(F);
    for (i64 x = 0; x < p; ++x) total += count_rho_fibre(F, x);
    return total - i128(p) * (2 * p + 1);  // base scheme hit once per fibre
}

i128 fibre_excess(const FieldCtx& F, i64 lambda) {
    i64 l = require_unit(F, lambda, false);
    i64 p = F.p();
    return i128(p) * (p + 1) * (p + 1) +
           i128(p - 2) * F.legendre_int(l) * cm_coefficient({3}, p);
}

CountRecord count_V32_fibrationwise(const FieldCtx& F, const V32FibrationOptions& opt) {
    auto t0 = std::chrono::steady_clock::now();
    i64 p = F.p();
    DoubleCoverSpec k32 = load_arrangement_file(opt.data_dir + "/k32.json");
    SignCensus kc = sign_census(F, k32, opt.jobs);
    // the excess formula takes a_{3,p} from the CM oracle; the census of K
    // must reproduce it as k_+ - k_-
    if (i128(kc.diff()) != cm_coefficient({3}, p))
        throw std::logic_error("K census disagrees with the weight-3 CM coefficient");
    i128 p2p1 = count_projective_space(p, 2);
    std::string tpl = [&] {
        std::ifstream in(opt.data_dir + "/l32_template.json");
        if (!in) throw domain_error("cannot open " + opt.data_dir + "/l32_template.json");
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }();

    i128 total = 0;
    std::vector<i128> terms(size_t(p), 0);
    parallel_chunks(u64(p) - 1, opt.jobs, [&](u64 li) {
        i64 l = i64(li) + 1;
        DoubleCoverSpec ll = load_template(tpl, l);
        SignCensus lc = sign_census(F, ll, 1);
        i128 qp = p2p1 * p2p1 + i128(kc.diff()) * lc.diff();
        terms[size_t(l)] = qp - fibre_excess(F, l);
    });
    for (i64 l = 1; l < p; ++l) total += terms[size_t(l)];
    total += 2 * count_projective_space(p, 4);       // fibres at 0 and infinity
    total -= i128(p) * count_projective_space(p, 3); // base locus, hit p+1 times

    CountRecord r;
    r.variety_id = "v32";
    r.p = p;
    r.method = "fibration";
    r.count = total;
    r.wall_ms = ms_since(t0);
    return r;
}

i128 count_script_L_brute(const FieldCtx& F, const std::string& data_dir, int jobs) {
    i64 p = F.p();
    // (u:1) slices: double covers of P^2 with the L_u branch sextic; u = 0
    // degenerates to the whole P^2 under t = 0.
    i128 total = count_projective_space(p, 2);
    for (i64 u = 1; u < p; ++u) {
        DoubleCoverSpec lu = load_template_file(data_dir + "/l32_template.json", u);
        total += count_double_cover(F, lu, jobs).count;
    }
    // (1:0) slice: t is free over the vanishing locus of z0 z1 z2^2 (z2-z1)
    // (z0+2z1-z2), plus the single point (1:0:0:0).
    std::vector<std::vector<u32>> forms = {
        {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, 0, 1}, {0, F.p() - 1, 1}, {1, 2, F.p() - 1}};
    SignCensus c = census_projective(F, forms, 1, jobs);
    total += i128(p) * c.zero + 1;
    return total;
}

}  // namespace covercount
