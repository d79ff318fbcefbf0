#include "covercount/brute.hpp"

#include <cassert>
#include <chrono>

namespace covercount {

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

int twist_sign(const FieldCtx& F, u32 twist) {
    int s = F.legendre(twist);
    if (s == 0) throw domain_error("twist is 0 mod p");
    return s;
}

SignCensus apply_twist(SignCensus c, int sign) {
    if (sign < 0) std::swap(c.plus, c.minus);
    return c;
}

struct FormMatrix {
    // column-major access helpers over m forms in (w) columns
    std::vector<std::vector<u32>> rows;
    u32 m() const { return u32(rows.size()); }
    u32 width() const { return u32(rows[0].size()); }
};

// One enumeration slab: forms evaluated at a start point, an inner stepping
// column, and a list of odometer columns walked p^k times.
void run_slab(const FieldCtx& F, const FormMatrix& fm, const std::vector<u32>& start_vals,
              int inner_col, const std::vector<int>& odo_cols, ScanFn kernel,
              SignCensus& out) {
    const u32 p = F.p();
    const u32 m = fm.m();
    ScanInput in{p, F.sqtable(), F.nonsquare_mask(), m};
    u32 vals[kMaxScanForms], steps[kMaxScanForms];
    for (u32 j = 0; j < m; ++j) {
        vals[j] = start_vals[j];
        steps[j] = inner_col >= 0 ? fm.rows[j][size_t(inner_col)] : 0;
    }
    u32 nsteps = inner_col >= 0 ? p : 1;

    u64 total = 1;
    for (size_t i = 0; i < odo_cols.size(); ++i) total *= p;
    std::vector<u32> digits(odo_cols.size(), 0);

    ScanCounts counts;
    for (u64 it = 0;;) {
        kernel(in, vals, steps, nsteps, counts);
        if (++it == total) break;
        // advance odometer (last column fastest); a wrap from p-1 to 0 also
        // shifts each value by +coef since -(p-1)*c = c mod p
        for (size_t d = odo_cols.size(); d-- > 0;) {
            for (u32 j = 0; j < m; ++j)
                vals[j] = F.add(vals[j], fm.rows[j][size_t(odo_cols[d])]);
            if (++digits[d] < p) break;
            digits[d] = 0;
        }
    }
    out += counts;
}

SignCensus census_run(const FieldCtx& F, const FormMatrix& fm, bool projective, int jobs) {
    const u32 p = F.p();
    const u32 m = fm.m();
    if (m < 1 || m > kMaxScanForms) throw domain_error("unsupported number of forms");
    ScanFn kernel = select_scan_kernel(p);
    const int w = int(fm.width());

    struct Task {
        int patch;   // projective: index of first nonzero coordinate; affine: -1
        int chunk;   // value of the outermost free variable, or -1 if none
    };
    std::vector<Task> tasks;
    if (projective) {
        const int n = w - 1;
        for (int k = 0; k <= n; ++k) {
            int nfree = n - k;
            if (nfree >= 2)
                for (int c = 0; c < int(p); ++c) tasks.push_back({k, c});
            else
                tasks.push_back({k, -1});
        }
    } else {
        const int n = w - 1;  // variables; last column is the constant
        if (n >= 2)
            for (int c = 0; c < int(p); ++c) tasks.push_back({-1, c});
        else
            tasks.push_back({-1, -1});
    }

    std::vector<SignCensus> slots(tasks.size());
    parallel_chunks(tasks.size(), jobs, [&](u64 ti) {
        const Task& t = tasks[ti];
        std::vector<u32> start(m);
        int inner_col;
        std::vector<int> odo;
        if (projective) {
            const int n = w - 1;
            int k = t.patch;
            for (u32 j = 0; j < m; ++j) start[j] = fm.rows[j][size_t(k)];
            if (k == n) {
                inner_col = -1;
            } else {
                inner_col = n;
                if (t.chunk >= 0) {
                    for (u32 j = 0; j < m; ++j)
                        start[j] =
                            F.add(start[j], F.mul(u32(t.chunk), fm.rows[j][size_t(k + 1)]));
                    for (int c = k + 2; c < n; ++c) odo.push_back(c);
                }
            }
        } else {
            const int n = w - 1;
            for (u32 j = 0; j < m; ++j) start[j] = fm.rows[j][size_t(n)];  // constant
            inner_col = n >= 1 ? n - 1 : -1;
            if (t.chunk >= 0) {
                for (u32 j = 0; j < m; ++j)
                    start[j] = F.add(start[j], F.mul(u32(t.chunk), fm.rows[j][0]));
                for (int c = 1; c < n - 1; ++c) odo.push_back(c);
            }
        }
        run_slab(F, fm, start, inner_col, odo, kernel, slots[ti]);
    });

    SignCensus total;
    for (const auto& s : slots) {
        total.plus += s.plus;
        total.zero += s.zero;
        total.minus += s.minus;
    }
    return total;
}

std::vector<std::vector<u32>> substitute(const FieldCtx& F,
                                         const std::vector<std::vector<u32>>& forms,
                                         const std::vector<std::vector<u32>>& sub) {
    // sub maps new coordinates (columns) to old ones (rows)
    std::vector<std::vector<u32>> out;
    out.reserve(forms.size());
    size_t ncols = sub[0].size();
    for (const auto& f : forms) {
        std::vector<u32> g(ncols, 0);
        for (size_t c = 0; c < ncols; ++c) {
            u64 acc = 0;
            for (size_t r = 0; r < f.size(); ++r) acc += u64(f[r]) * sub[r][c];
            g[c] = u32(acc % F.p());
        }
        out.push_back(std::move(g));
    }
    return out;
}

}  // namespace

i128 count_projective_space(i64 p, int n) {
    if (n < 0) throw domain_error("negative dimension");
    i128 s = 0;
    for (int i = 0; i <= n; ++i) s = s * p + 1;
    return s;
}

std::vector<std::vector<u32>> reduce_forms(const FieldCtx& F,
                                           const std::vector<std::vector<i64>>& forms) {
    std::vector<std::vector<u32>> out;
    out.reserve(forms.size());
    for (const auto& f : forms) {
        std::vector<u32> g(f.size());
        bool nonzero = false;
        for (size_t i = 0; i < f.size(); ++i) {
            g[i] = F.reduce(f[i]);
            nonzero |= g[i] != 0;
        }
        if (!nonzero) throw domain_error("form vanishes identically mod p");
        out.push_back(std::move(g));
    }
    return out;
}

SignCensus census_projective(const FieldCtx& F, const std::vector<std::vector<u32>>& forms,
                             u32 twist, int jobs) {
    return apply_twist(census_run(F, {forms}, true, jobs), twist_sign(F, twist));
}

SignCensus census_affine(const FieldCtx& F, const std::vector<std::vector<u32>>& affine_forms,
                         u32 twist, int jobs) {
    return apply_twist(census_run(F, {affine_forms}, false, jobs), twist_sign(F, twist));
}

SignCensus sign_census(const FieldCtx& F, const DoubleCoverSpec& spec, int jobs) {
    if (spec.forms().size() % 2 != 0)
        throw domain_error("projective census needs even total degree");
    return census_projective(F, reduce_forms(F, spec.forms()), twist_residue(F, spec.twist),
                             jobs);
}

SignCensus sign_census_affine_patch(const FieldCtx& F, const DoubleCoverSpec& spec, int coord,
                                    int jobs) {
    auto forms = reduce_forms(F, spec.forms());
    int n = spec.dim();
    if (coord < 0 || coord > n) throw domain_error("bad patch coordinate");
    // columns: variables != coord in order, then the constant slot
    std::vector<std::vector<u32>> sub(size_t(n) + 1, std::vector<u32>(size_t(n) + 1, 0));
    size_t c = 0;
    for (int i = 0; i <= n; ++i)
        if (i != coord) sub[size_t(i)][c++] = 1;
    sub[size_t(coord)][size_t(n)] = 1;
    return census_affine(F, substitute(F, forms, sub), twist_residue(F, spec.twist), jobs);
}

CountRecord count_double_cover(const FieldCtx& F, const DoubleCoverSpec& spec, int jobs) {
    auto t0 = std::chrono::steady_clock::now();
    SignCensus c = sign_census(F, spec, jobs);
    CountRecord r;
    r.variety_id = spec.name;
    r.p = F.p();
    r.method = "brute";
    r.count = count_projective_space(F.p(), spec.dim()) + c.diff();
    r.wall_ms = ms_since(t0);
    return r;
}

i128 count_cover_affine_patch(const FieldCtx& F, const DoubleCoverSpec& spec, int coord,
                              int jobs) {
    SignCensus c = sign_census_affine_patch(F, spec, coord, jobs);
    return ipow(F.p(), unsigned(spec.dim())) + c.diff();
}

QuotientProductResult count_quotient_product(const FieldCtx& F,
                                             const std::vector<DoubleCoverSpec>& specs,
                                             int jobs) {
    if (specs.empty()) throw domain_error("empty product");
    auto t0 = std::chrono::steady_clock::now();
    QuotientProductResult r;
    i128 base_prod = 1, diff_prod = 1;
    std::string name;
    for (const auto& s : specs) {
        SignCensus c = sign_census(F, s, jobs);
        i128 b = count_projective_space(F.p(), s.dim());
        base_prod *= b;
        diff_prod *= c.diff();
        r.base_counts.push_back(b);
        r.censuses.push_back(c);
        if (!name.empty()) name += "x";
        name += s.name;
    }
    r.record.variety_id = "(" + name + ")/sigma";
    r.record.p = F.p();
    r.record.method = "quotient-product";
    r.record.count = base_prod + diff_prod;
    r.record.wall_ms = ms_since(t0);
    return r;
}

CountRecord count_fibre(const FieldCtx& F, const DoubleCoverSpec& spec,
                        const std::vector<i64>& m0, const std::vector<i64>& m1, u32 a, u32 b,
                        FibreMode mode, int patch_coord, int jobs) {
    auto t0 = std::chrono::steady_clock::now();
    const int n = spec.dim();
    if (int(m0.size()) != n + 1 || int(m1.size()) != n + 1)
        throw domain_error("fibration components of wrong length");
    std::vector<u32> h(size_t(n) + 1);
    bool any = false;
    for (int i = 0; i <= n; ++i) {
        h[size_t(i)] = F.sub(F.mul(b, F.reduce(m0[size_t(i)])), F.mul(a, F.reduce(m1[size_t(i)])));
        any |= h[size_t(i)] != 0;
    }
    if (!any) throw domain_error("fibre equation vanishes: map components proportional");

    auto forms = reduce_forms(F, spec.forms());
    u32 tw = twist_residue(F, spec.twist);
    CountRecord r;
    r.variety_id = spec.name + "|fibre";
    r.p = F.p();
    r.method = "fibre-brute";

    if (mode == FibreMode::Scheme) {
        int piv = -1;
        for (int i = 0; i <= n; ++i)
            if (h[size_t(i)] != 0) {
                piv = i;
                break;
            }
        u32 hinv = F.inv(h[size_t(piv)]);
        std::vector<std::vector<u32>> sub(size_t(n) + 1, std::vector<u32>(size_t(n), 0));
        size_t c = 0;
        for (int i = 0; i <= n; ++i) {
            if (i == piv) continue;
            sub[size_t(i)][c] = 1;
            sub[size_t(piv)][c] = F.neg(F.mul(hinv, h[size_t(i)]));
            ++c;
        }
        SignCensus cen =
            apply_twist(census_run(F, {substitute(F, forms, sub)}, true, jobs), twist_sign(F, tw));
        r.count = count_projective_space(F.p(), n - 1) + cen.diff();
    } else {
        int k = patch_coord;
        if (k < 0 || k > n) throw domain_error("bad patch coordinate");
        int piv = -1;
        for (int i = 0; i <= n; ++i)
            if (i != k && h[size_t(i)] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) {
            r.count = 0;  // x_k = 1 is disjoint from the fibre hyperplane
            r.wall_ms = ms_since(t0);
            return r;
        }
        u32 hinv = F.inv(h[size_t(piv)]);
        // columns: free variables (not k, not piv), then constant
        std::vector<std::vector<u32>> sub(size_t(n) + 1, std::vector<u32>(size_t(n), 0));
        size_t c = 0;
        for (int i = 0; i <= n; ++i) {
            if (i == k || i == piv) continue;
            sub[size_t(i)][c] = 1;
            sub[size_t(piv)][c] = F.neg(F.mul(hinv, h[size_t(i)]));
            ++c;
        }
        sub[size_t(k)][size_t(n - 1)] = 1;                                // constant slot
        sub[size_t(piv)][size_t(n - 1)] = F.neg(F.mul(hinv, h[size_t(k)]));
        SignCensus cen = apply_twist(census_run(F, {substitute(F, forms, sub)}, false, jobs),
                                     twist_sign(F, tw));
        r.count = ipow(F.p(), unsigned(n - 1)) + cen.diff();
    }
    r.wall_ms = ms_since(t0);
    return r;
}

i128 count_linear_section(const FieldCtx& F, const DoubleCoverSpec& spec,
                          const std::vector<std::vector<i64>>& constraints, int jobs) {
    const int n = spec.dim();
    std::vector<std::vector<u32>> rows;
    for (const auto& cns : constraints) {
        if (int(cns.size()) != n + 1) throw domain_error("constraint of wrong length");
        std::vector<u32> r(size_t(n) + 1);
        for (int i = 0; i <= n; ++i) r[size_t(i)] = F.reduce(cns[size_t(i)]);
        rows.push_back(std::move(r));
    }
    // row-reduce mod p
    std::vector<int> pivots;
    size_t rr = 0;
    for (int col = 0; col <= n && rr < rows.size(); ++col) {
        size_t sel = rr;
        while (sel < rows.size() && rows[sel][size_t(col)] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[rr], rows[sel]);
        u32 inv = F.inv(rows[rr][size_t(col)]);
        for (auto& x : rows[rr]) x = F.mul(x, inv);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == rr || rows[i][size_t(col)] == 0) continue;
            u32 f = rows[i][size_t(col)];
            for (int c2 = 0; c2 <= n; ++c2)
                rows[i][size_t(c2)] = F.sub(rows[i][size_t(c2)], F.mul(f, rows[rr][size_t(c2)]));
        }
        pivots.push_back(col);
        ++rr;
    }
    int rank = int(pivots.size());
    if (rank == 0) throw domain_error("constraints vanish mod p");
    if (rank == n + 1) return 0;  // empty section

    std::vector<bool> is_piv(size_t(n) + 1, false);
    for (int pcol : pivots) is_piv[size_t(pcol)] = true;
    std::vector<std::vector<u32>> sub(size_t(n) + 1,
                                      std::vector<u32>(size_t(n + 1 - rank), 0));
    size_t c = 0;
    for (int i = 0; i <= n; ++i) {
        if (is_piv[size_t(i)]) continue;
        sub[size_t(i)][c] = 1;
        for (int rnum = 0; rnum < rank; ++rnum)
            sub[size_t(pivots[size_t(rnum)])][c] = F.neg(rows[size_t(rnum)][size_t(i)]);
        ++c;
    }
    auto forms = reduce_forms(F, spec.forms());
    SignCensus cen = apply_twist(census_run(F, {substitute(F, forms, sub)}, true, jobs),
                                 twist_sign(F, twist_residue(F, spec.twist)));
    return count_projective_space(F.p(), n - rank) + cen.diff();
}

i128 quotient_product_oracle(const FieldCtx& F, const std::vector<DoubleCoverSpec>& specs) {
    // Walks every tuple of base points and counts the Frobenius-stable
    // sigma-orbits in the fibre above it: with A = #{s : Frob s = s} and
    // B = #{s : Frob s = -s}, the tuple contributes (A+B)/2.
    struct Factor {
        std::vector<int> codes;  // one entry per base point
    };
    std::vector<Factor> fs;
    for (const auto& spec : specs) {
        Factor fac;
        const int n = spec.dim();
        auto forms = reduce_forms(F, spec.forms());
        u32 tw = twist_residue(F, spec.twist);
        // enumerate P^n(F_p) patch by patch, odometer order
        std::vector<u32> x(size_t(n) + 1, 0);
        for (int k = n; k >= 0; --k) {
            std::fill(x.begin(), x.end(), 0);
            x[size_t(k)] = 1;
            u64 npts = 1;
            for (int i = k + 1; i <= n; ++i) npts *= F.p();
            for (u64 it = 0; it < npts; ++it) {
                u32 prod = tw;
                for (const auto& f : forms) {
                    u64 acc = 0;
                    for (int i = k; i <= n; ++i) acc += u64(f[size_t(i)]) * x[size_t(i)];
                    prod = F.mul(prod, u32(acc % F.p()));
                }
                fac.codes.push_back(F.legendre(prod));
                for (int i = n; i > k; --i) {
                    if (++x[size_t(i)] < F.p()) break;
                    x[size_t(i)] = 0;
                }
            }
        }
        fs.push_back(std::move(fac));
    }
    i128 total = 0;
    std::vector<size_t> idx(fs.size(), 0);
    for (;;) {
        i128 a = 1, b = 1;
        for (size_t i = 0; i < fs.size(); ++i) {
            int code = fs[i].codes[idx[i]];
            a *= code == 0 ? 1 : (code > 0 ? 2 : 0);
            b *= code == 0 ? 1 : (code > 0 ? 0 : 2);
        }
        if ((a + b) % 2 != 0) throw std::logic_error("odd orbit sum");
        total += (a + b) / 2;
        bool done = true;
        for (size_t d = fs.size(); d-- > 0;) {
            if (++idx[d] < fs[d].codes.size()) {
                done = false;
                break;
            }
            idx[d] = 0;
        }
        if (done) break;
    }
    return total;
}

}  // namespace covercount
