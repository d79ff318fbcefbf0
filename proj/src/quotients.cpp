// Quotient point counts via the Burnside-Frobenius identity
//   [V/G]_p = (1/|G|) sum_g #{x : Frob(x) = g x}.
// A lift of a projective involution M to the cover acts by t -> eps*mu*t
// where the branch product pulls back under M to mu^2 times itself.  On a
// weighted point (t : x) with cover weight w the twist condition reads
//   x^p = nu * Mx,   t^p = nu^w * eps * mu * t.
// The brute path enumerates P^n(F_{p^2}) directly; the fast path
// trivializes the twist with C = A + M A^(p) and walks C * P^n(F_p).

#include "covercount/quotients.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include "json.hpp"

namespace covercount {

using nlohmann::json;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

int cover_weight(const DoubleCoverSpec& spec) { return int(spec.forms().size()) / 2; }

std::vector<std::vector<u32>> reduce_matrix(const FieldCtx& F,
                                            const std::vector<std::vector<i64>>& m) {
    std::vector<std::vector<u32>> out(m.size());
    for (size_t i = 0; i < m.size(); ++i) {
        out[i].resize(m[i].size());
        for (size_t j = 0; j < m[i].size(); ++j) out[i][j] = F.reduce(m[i][j]);
    }
    return out;
}

// sqrt in F_p via the discrete-log table; returns 0 hits only x = 0
bool sqrt_mod(const FieldCtx& F, u32 x, u32& out) {
    if (x == 0) {
        out = 0;
        return true;
    }
    u32 d = F.dlog(x);
    if (d % 2 != 0) return false;
    out = F.pow(F.g(), d / 2);
    return true;
}

struct Fp2Tables {
    // indexed by e = a + p*b
    std::vector<Fp2> sqrt;     // gamma with gamma^2 = beta, or delta*gamma^2 = beta
    std::vector<char> is_sq;   // 1 square, 0 nonsquare (beta != 0)
    Fp2 delta;                 // a fixed nonsquare of F_{p^2}
    Fp2 delta_pm1_2;           // delta^((p-1)/2)
};

size_t fp2_index(const FieldCtx& F, Fp2 x) { return size_t(x.a) + size_t(F.p()) * x.b; }

Fp2Tables build_fp2_tables(const FieldCtx& F) {
    const u64 q = u64(F.p()) * F.p();
    Fp2Tables T;
    T.sqrt.assign(q, Fp2{0, 0});
    T.is_sq.assign(q, 0);
    std::vector<char> seen(q, 0);
    for (u64 e = 0; e < q; ++e) {
        Fp2 g{u32(e % F.p()), u32(e / F.p())};
        Fp2 sq = fp2_mul(F, g, g);
        size_t i = fp2_index(F, sq);
        if (!seen[i]) {
            seen[i] = 1;
            T.sqrt[i] = g;
            T.is_sq[i] = 1;
        }
    }
    for (u64 e = 1; e < q; ++e)
        if (!seen[e]) {
            T.delta = Fp2{u32(e % F.p()), u32(e / F.p())};
            break;
        }
    for (u64 e = 1; e < q; ++e) {
        if (seen[e]) continue;
        // beta = delta * gamma^2  <=>  beta/delta is a square
        Fp2 beta{u32(e % F.p()), u32(e / F.p())};
        Fp2 ratio = fp2_mul(F, beta, fp2_inv(F, T.delta));
        T.sqrt[e] = T.sqrt[fp2_index(F, ratio)];
    }
    // delta^((p-1)/2)
    Fp2 acc{1, 0};
    for (u32 i = 0; i < (F.p() - 1) / 2; ++i) acc = fp2_mul(F, acc, T.delta);
    T.delta_pm1_2 = acc;
    return T;
}

// t-solution count for t^2 = beta, t^(p-1) = c (beta, c in F_{p^2}).
u32 t_solutions(const FieldCtx& F, const Fp2Tables& T, Fp2 beta, Fp2 c) {
    if (beta.is_zero()) return 1;
    size_t i = fp2_index(F, beta);
    Fp2 gamma = T.sqrt[i];
    Fp2 cp = fp2_mul(F, frobenius(F, gamma), fp2_inv(F, gamma));
    if (!T.is_sq[i]) cp = fp2_mul(F, cp, T.delta_pm1_2);
    return cp == c ? 2 : 0;
}

}  // namespace

std::vector<ProjDeckMap> load_involutions_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw domain_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    json j = json::parse(ss.str());
    std::vector<ProjDeckMap> out;
    for (const auto& mj : j.at("maps")) {
        ProjDeckMap m;
        m.name = mj.value("name", "");
        m.deck_sign = mj.value("deck_sign", 1);
        m.matrix = mj.at("matrix").get<std::vector<std::vector<i64>>>();
        out.push_back(std::move(m));
    }
    return out;
}

BoundDeckMap bind_map(const DoubleCoverSpec& spec, const ProjDeckMap& map) {
    const int n = spec.dim();
    if (int(map.matrix.size()) != n + 1)
        throw domain_error(map.name + ": matrix size does not match the ambient");
    for (const auto& row : map.matrix)
        if (int(row.size()) != n + 1) throw domain_error(map.name + ": ragged matrix");

    BoundDeckMap b;
    b.map = map;
    const auto& forms = spec.forms();
    i64 gamma = 1;
    std::vector<bool> hit(forms.size(), false);
    for (size_t j = 0; j < forms.size(); ++j) {
        // coefficient vector of form_j composed with M
        std::vector<i64> comp(size_t(n) + 1, 0);
        for (int i = 0; i <= n; ++i)
            for (int r = 0; r <= n; ++r) comp[size_t(i)] += forms[j][size_t(r)] * map.matrix[size_t(r)][size_t(i)];
        std::vector<i64> normed = comp;
        i64 s = normalize_form(normed);
        int target = -1;
        for (size_t k = 0; k < forms.size(); ++k)
            if (forms[k] == normed) {
                target = int(k);
                break;
            }
        if (target < 0 || hit[size_t(target)])
            throw domain_error(map.name + ": does not permute the arrangement");
        hit[size_t(target)] = true;
        b.form_perm.push_back(target);
        b.form_scalars.push_back(s);
        gamma *= s;
    }
    i64 root = i64(std::llround(std::sqrt(double(gamma < 0 ? -gamma : gamma))));
    while (root * root < gamma) ++root;
    while (root * root > gamma) --root;
    if (gamma < 0 || root * root != gamma)
        throw domain_error(map.name + ": branch multiplier is not a perfect square");
    b.mu = root;

    // involution test: M^2 scalar
    i64 sc = 0;
    bool inv = true;
    for (int i = 0; i <= n && inv; ++i)
        for (int j = 0; j <= n && inv; ++j) {
            i64 v = 0;
            for (int r = 0; r <= n; ++r) v += map.matrix[size_t(i)][size_t(r)] * map.matrix[size_t(r)][size_t(j)];
            if (i == j) {
                if (sc == 0) sc = v;
                inv = v == sc && v != 0;
            } else {
                inv = v == 0;
            }
        }
    b.involution = inv;
    b.m2_scalar = inv ? sc : 0;
    return b;
}

TwistedCount twisted_count_brute(const FieldCtx& F, const DoubleCoverSpec& spec,
                                 const BoundDeckMap& g, int eps, int jobs) {
    auto t0 = std::chrono::steady_clock::now();
    const int n = spec.dim();
    const u32 p = F.p();
    if (!g.involution && g.map.name != "identity")
        throw domain_error(g.map.name + ": brute twisted count needs order <= 2");
    double cost = 1;
    for (int i = 0; i < n; ++i) cost *= double(p) * p;
    if (cost > 1e8) throw domain_error("p too large for the F_{p^2} brute path");

    Fp2Tables T = build_fp2_tables(F);
    auto M = reduce_matrix(F, g.map.matrix);
    auto forms = reduce_forms(F, spec.forms());
    u32 tw = twist_residue(F, spec.twist);
    u32 mu = F.reduce(g.mu);
    const int w = cover_weight(spec);
    const u64 q = u64(p) * p;

    // patches of P^n(F_{p^2}): first nonzero coordinate = 1
    i128 total = 0;
    for (int k = 0; k <= n; ++k) {
        u64 npts = 1;
        for (int i = k + 1; i <= n; ++i) npts *= q;
        u64 nchunks = npts > 4096 ? 64 : 1;
        std::vector<i128> chunk_tot(nchunks, 0);
        u64 per = (npts + nchunks - 1) / nchunks;
        parallel_chunks(nchunks, jobs, [&](u64 ci) {
            u64 lo = ci * per, hi = std::min(npts, lo + per);
            std::vector<Fp2> x(size_t(n) + 1, Fp2{0, 0});
            x[size_t(k)] = {1, 0};
            // decode point index lo into coordinates k+1..n
            u64 rem = lo;
            for (int i = n; i > k; --i) {
                u64 e = rem % q;
                rem /= q;
                x[size_t(i)] = {u32(e % p), u32(e / p)};
            }
            i128 acc = 0;
            for (u64 it = lo; it < hi; ++it) {
                // w = Mx, z = Frob(x); accept if z = nu * w
                Fp2 nu{0, 0};
                bool ok = true;
                int first = -1;
                for (int r = 0; r <= n && ok; ++r) {
                    Fp2 acc2{0, 0};
                    for (int c2 = k; c2 <= n; ++c2) {
                        u32 mrc = M[size_t(r)][size_t(c2)];
                        if (mrc == 0) continue;
                        acc2 = fp2_add(F, acc2, {F.mul(mrc, x[size_t(c2)].a), F.mul(mrc, x[size_t(c2)].b)});
                    }
                    Fp2 z = frobenius(F, x[size_t(r)]);
                    if (first < 0) {
                        if (acc2.is_zero() != z.is_zero()) ok = false;
                        else if (!acc2.is_zero()) {
                            first = r;
                            nu = fp2_mul(F, z, fp2_inv(F, acc2));
                        }
                    } else if (!(fp2_mul(F, nu, acc2) == z)) {
                        ok = false;
                    }
                }
                if (ok) {
                    // branch value and the t-condition scalar nu^w * eps * mu
                    Fp2 beta{tw, 0};
                    for (const auto& f : forms) {
                        Fp2 v{0, 0};
                        for (int c2 = k; c2 <= n; ++c2) {
                            u32 fc = f[size_t(c2)];
                            if (fc == 0) continue;
                            v = fp2_add(F, v, {F.mul(fc, x[size_t(c2)].a), F.mul(fc, x[size_t(c2)].b)});
                        }
                        beta = fp2_mul(F, beta, v);
                        if (beta.is_zero()) break;
                    }
                    Fp2 c{eps > 0 ? mu : F.neg(mu), 0};
                    Fp2 nupow{1, 0};
                    for (int i = 0; i < w; ++i) nupow = fp2_mul(F, nupow, nu);
                    c = fp2_mul(F, c, nupow);
                    acc += t_solutions(F, T, beta, c);
                }
                // advance odometer over coordinates k+1..n (last fastest)
                for (int i = n; i > k; --i) {
                    u32& a = x[size_t(i)].a;
                    u32& bb = x[size_t(i)].b;
                    if (++a < p) break;
                    a = 0;
                    if (++bb < p) break;
                    bb = 0;
                }
            }
            chunk_tot[ci] = acc;
        });
        for (auto v : chunk_tot) total += v;
    }
    TwistedCount r;
    r.name = g.map.name;
    r.eps = eps;
    r.T = total;
    r.wall_ms = ms_since(t0);
    return r;
}

namespace {

struct H90Census {
    u64 zero = 0, plus = 0, minus = 0;
};

// Census of the branch values over C * P^n(F_p) for the twisted locus of M.
H90Census h90_census(const FieldCtx& F, const DoubleCoverSpec& spec,
                     const std::vector<std::vector<u32>>& Mnorm, u64 seed, int jobs) {
    const int n = spec.dim();
    const u32 p = F.p();
    std::mt19937_64 rng(seed);
    auto forms = reduce_forms(F, spec.forms());
    u32 tw = twist_residue(F, spec.twist);

    // C = A + M A^(p), retried until invertible
    std::vector<std::vector<Fp2>> C;
    for (int attempt = 0;; ++attempt) {
        if (attempt >= 64) throw std::logic_error("H90 trivialization failed 64 draws");
        std::vector<std::vector<Fp2>> A(size_t(n) + 1, std::vector<Fp2>(size_t(n) + 1));
        for (auto& row : A)
            for (auto& x : row) x = {u32(rng() % p), u32(rng() % p)};
        C.assign(size_t(n) + 1, std::vector<Fp2>(size_t(n) + 1, Fp2{0, 0}));
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n; ++j) {
                Fp2 v = A[size_t(i)][size_t(j)];
                for (int r = 0; r <= n; ++r) {
                    u32 m = Mnorm[size_t(i)][size_t(r)];
                    if (m == 0) continue;
                    Fp2 conj = frobenius(F, A[size_t(r)][size_t(j)]);
                    v = fp2_add(F, v, {F.mul(m, conj.a), F.mul(m, conj.b)});
                }
                C[size_t(i)][size_t(j)] = v;
            }
        // invertibility via Gaussian elimination on a copy
        auto E = C;
        bool sing = false;
        for (int col = 0; col <= n && !sing; ++col) {
            int piv = -1;
            for (int r2 = col; r2 <= n; ++r2)
                if (!E[size_t(r2)][size_t(col)].is_zero()) {
                    piv = r2;
                    break;
                }
            if (piv < 0) {
                sing = true;
                break;
            }
            std::swap(E[size_t(piv)], E[size_t(col)]);
            Fp2 inv = fp2_inv(F, E[size_t(col)][size_t(col)]);
            for (int c2 = 0; c2 <= n; ++c2) E[size_t(col)][size_t(c2)] = fp2_mul(F, E[size_t(col)][size_t(c2)], inv);
            for (int r2 = 0; r2 <= n; ++r2) {
                if (r2 == col || E[size_t(r2)][size_t(col)].is_zero()) continue;
                Fp2 f = E[size_t(r2)][size_t(col)];
                for (int c2 = 0; c2 <= n; ++c2)
                    E[size_t(r2)][size_t(c2)] =
                        fp2_sub(F, E[size_t(r2)][size_t(c2)], fp2_mul(F, f, E[size_t(col)][size_t(c2)]));
            }
        }
        if (!sing) break;
    }

    // forms composed with C
    std::vector<std::vector<Fp2>> fc(forms.size(),
                                     std::vector<Fp2>(size_t(n) + 1, Fp2{0, 0}));
    for (size_t j = 0; j < forms.size(); ++j)
        for (int i = 0; i <= n; ++i) {
            Fp2 v{0, 0};
            for (int r = 0; r <= n; ++r) {
                u32 frc = forms[j][size_t(r)];
                if (frc == 0) continue;
                Fp2 cri = C[size_t(r)][size_t(i)];
                v = fp2_add(F, v, {F.mul(frc, cri.a), F.mul(frc, cri.b)});
            }
            fc[j][size_t(i)] = v;
        }

    const size_t m = forms.size();
    std::vector<H90Census> patch_tot(size_t(n) + 1);
    parallel_chunks(u64(n) + 1, jobs, [&](u64 ki) {
        int k = int(ki);
        u64 npts = 1;
        for (int i = k + 1; i <= n; ++i) npts *= p;
        std::vector<Fp2> vals(m);
        for (size_t j = 0; j < m; ++j) vals[j] = fc[j][size_t(k)];
        std::vector<u32> digits(size_t(n - k), 0);
        H90Census hc;
        for (u64 it = 0;;) {
            Fp2 beta{tw, 0};
            for (size_t j = 0; j < m; ++j) {
                if (vals[j].is_zero()) {
                    beta = {0, 0};
                    break;
                }
                beta = fp2_mul(F, beta, vals[j]);
            }
            if (beta.is_zero())
                ++hc.zero;
            else {
                if (beta.b != 0)
                    throw std::logic_error("twisted branch value escaped F_p");
                if (F.legendre(beta.a) > 0)
                    ++hc.plus;
                else
                    ++hc.minus;
            }
            if (++it == npts) break;
            for (int i = n; i > k; --i) {
                for (size_t j = 0; j < m; ++j) vals[j] = fp2_add(F, vals[j], fc[j][size_t(i)]);
                if (++digits[size_t(i - k - 1)] < p) break;
                digits[size_t(i - k - 1)] = 0;
            }
        }
        patch_tot[size_t(k)] = hc;
    });
    H90Census out;
    for (const auto& hc : patch_tot) {
        out.zero += hc.zero;
        out.plus += hc.plus;
        out.minus += hc.minus;
    }
    return out;
}

// Normalizes M mod p so that M^2 = I exactly; requires the scalar of M^2
// to be a square mod p.  Returns the matrix and the scaling factor used.
std::pair<std::vector<std::vector<u32>>, u32> h90_normalize(const FieldCtx& F,
                                                            const BoundDeckMap& g) {
    if (!g.involution) throw domain_error(g.map.name + ": H90 path needs an involution");
    auto M = reduce_matrix(F, g.map.matrix);
    u32 sc = F.reduce(g.m2_scalar);
    if (sc == 0) throw domain_error(g.map.name + ": involution scalar vanishes mod p");
    u32 root;
    if (!sqrt_mod(F, F.inv(sc), root))
        throw domain_error(g.map.name + ": M^2 scalar is not a square mod p");
    for (auto& row : M)
        for (auto& x : row) x = F.mul(x, root);
    return {M, root};
}

}  // namespace

TwistedCount twisted_count_h90(const FieldCtx& F, const DoubleCoverSpec& spec,
                               const BoundDeckMap& g, int eps, u64 seed, int jobs) {
    auto t0 = std::chrono::steady_clock::now();
    auto [M, root] = h90_normalize(F, g);
    // rescaling M by a multiplies the t-condition scalar by a^w
    const int w = cover_weight(spec);
    u32 aw = F.pow(root, u64(w));
    u32 c = F.mul(aw, F.reduce(g.mu));
    if (eps < 0) c = F.neg(c);

    H90Census hc = h90_census(F, spec, M, seed, jobs);
    i128 T = i128(hc.zero);
    if (c == 1)
        T += 2 * i128(hc.plus);
    else if (c == F.p() - 1)
        T += 2 * i128(hc.minus);
    TwistedCount r;
    r.name = g.map.name;
    r.eps = eps;
    r.T = T;
    r.wall_ms = ms_since(t0);
    return r;
}

i128 twisted_count_base_brute(const FieldCtx& F, int n,
                              const std::vector<std::vector<i64>>& matrix) {
    const u32 p = F.p();
    const u64 q = u64(p) * p;
    double cost = 1;
    for (int i = 0; i < n; ++i) cost *= double(q);
    if (cost > 1e8) throw domain_error("p too large for the F_{p^2} brute path");
    auto M = reduce_matrix(F, matrix);
    i128 total = 0;
    std::vector<Fp2> x(size_t(n) + 1);
    for (int k = 0; k <= n; ++k) {
        std::fill(x.begin(), x.end(), Fp2{0, 0});
        x[size_t(k)] = {1, 0};
        u64 npts = 1;
        for (int i = k + 1; i <= n; ++i) npts *= q;
        for (u64 it = 0; it < npts; ++it) {
            Fp2 nu{0, 0};
            bool ok = true;
            int first = -1;
            for (int r = 0; r <= n && ok; ++r) {
                Fp2 acc{0, 0};
                for (int c2 = k; c2 <= n; ++c2) {
                    u32 m = M[size_t(r)][size_t(c2)];
                    if (m == 0) continue;
                    acc = fp2_add(F, acc, {F.mul(m, x[size_t(c2)].a), F.mul(m, x[size_t(c2)].b)});
                }
                Fp2 z = frobenius(F, x[size_t(r)]);
                if (first < 0) {
                    if (acc.is_zero() != z.is_zero()) ok = false;
                    else if (!acc.is_zero()) {
                        first = r;
                        nu = fp2_mul(F, z, fp2_inv(F, acc));
                    }
                } else if (!(fp2_mul(F, nu, acc) == z)) {
                    ok = false;
                }
            }
            total += ok ? 1 : 0;
            for (int i = n; i > k; --i) {
                if (++x[size_t(i)].a < p) break;
                x[size_t(i)].a = 0;
                if (++x[size_t(i)].b < p) break;
                x[size_t(i)].b = 0;
            }
        }
    }
    return total;
}

i128 count_base_quotient(const FieldCtx& F, int n, const ProjDeckMap& map, u64 seed) {
    (void)seed;
    i128 N = count_projective_space(F.p(), n);
    i128 T = twisted_count_base_brute(F, n, map.matrix);
    if ((N + T) % 2 != 0) throw std::logic_error("odd Burnside sum on the base");
    return (N + T) / 2;
}

std::pair<ProjDeckMap, Rational> compose_maps(const ProjDeckMap& g1, Rational s1,
                                              const ProjDeckMap& g2, Rational s2,
                                              int cover_weight) {
    size_t n = g1.matrix.size();
    ProjDeckMap out;
    out.name = g1.name + "*" + g2.name;
    out.matrix.assign(n, std::vector<i64>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            i64 v = 0;
            for (size_t r = 0; r < n; ++r) v += g1.matrix[i][r] * g2.matrix[r][j];
            out.matrix[i][j] = v;
        }
    // normalize to a primitive matrix with positive leading entry
    i64 g = 0;
    for (const auto& row : out.matrix)
        for (i64 v : row) g = std::gcd(g, v < 0 ? -v : v);
    i64 lead = 0;
    for (const auto& row : out.matrix) {
        for (i64 v : row)
            if (v != 0) {
                lead = v;
                break;
            }
        if (lead) break;
    }
    i64 kappa = lead < 0 ? -g : g;
    for (auto& row : out.matrix)
        for (i64& v : row) v /= kappa;
    // (M, s) ~ (M/kappa, s/kappa^w)
    Rational s{s1.num * s2.num, s1.den * s2.den};
    i64 kw = 1;
    for (int i = 0; i < cover_weight; ++i) kw *= kappa;
    s.den *= kw;
    i64 gg = std::gcd(s.num < 0 ? -s.num : s.num, s.den < 0 ? -s.den : s.den);
    if (gg > 1) {
        s.num /= gg;
        s.den /= gg;
    }
    if (s.den < 0) {
        s.den = -s.den;
        s.num = -s.num;
    }
    return {out, s};
}

CountRecord count_quotient(const FieldCtx& F, const DoubleCoverSpec& spec,
                           const std::vector<std::pair<ProjDeckMap, int>>& group,
                           u64 seed, int jobs) {
    auto t0 = std::chrono::steady_clock::now();
    const int w = cover_weight(spec);
    const size_t n = group.size();
    if (n == 0) throw domain_error("empty group");

    // bind everything, compute cover scalars s = eps * mu
    std::vector<BoundDeckMap> bound;
    std::vector<Rational> scal;
    for (const auto& [m, eps] : group) {
        BoundDeckMap b = bind_map(spec, m);
        scal.push_back({i64(eps) * b.mu, 1});
        bound.push_back(std::move(b));
    }
    auto canon = [](const ProjDeckMap& m) {
        ProjDeckMap c = m;
        i64 g = 0;
        for (const auto& row : c.matrix)
            for (i64 v : row) g = std::gcd(g, v < 0 ? -v : v);
        i64 lead = 0;
        for (const auto& row : c.matrix) {
            for (i64 v : row)
                if (v != 0) {
                    lead = v;
                    break;
                }
            if (lead) break;
        }
        i64 s = lead < 0 ? -g : g;
        for (auto& row : c.matrix)
            for (i64& v : row) v /= s;
        return c;
    };
    auto same = [&](const ProjDeckMap& a, Rational sa, const ProjDeckMap& b, Rational sb) {
        return canon(a).matrix == canon(b).matrix && sa.num * sb.den == sb.num * sa.den;
    };
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            auto [prod, s] = compose_maps(group[i].first, scal[i], group[j].first, scal[j], w);
            bool found = false;
            for (size_t k2 = 0; k2 < n && !found; ++k2)
                found = same(prod, s, group[k2].first, scal[k2]);
            if (!found) throw domain_error("group is not closed under composition");
        }

    i128 sum = 0;
    for (size_t i = 0; i < n; ++i) {
        const auto& b = bound[i];
        bool is_identity = true;
        auto c = canon(b.map);
        for (size_t r = 0; r < c.matrix.size() && is_identity; ++r)
            for (size_t c2 = 0; c2 < c.matrix.size() && is_identity; ++c2)
                is_identity = c.matrix[r][c2] == (r == c2 ? 1 : 0);
        int eps = group[i].second;
        if (is_identity) {
            SignCensus cen = sign_census(F, spec, jobs);
            i128 base = count_projective_space(F.p(), spec.dim());
            i64 smu = eps * b.mu;
            u32 sr = F.reduce(smu);
            if (sr == 1)
                sum += base + cen.diff();
            else if (sr == F.p() - 1)
                sum += base - cen.diff();
            else
                sum += i128(cen.zero);
        } else {
            sum += twisted_count_h90(F, spec, b, eps, seed, jobs).T;
        }
    }
    if (sum % i128(n) != 0) throw std::logic_error("Burnside sum is not divisible by |G|");
    CountRecord r;
    r.variety_id = spec.name + "/G" + std::to_string(n);
    r.p = F.p();
    r.method = "quotient-h90";
    r.count = sum / i128(n);
    r.wall_ms = ms_since(t0);
    return r;
}

}  // namespace covercount
