// Exact-arithmetic arrangement analysis: the crepant-resolution subset scan
// and the projective stabilizer of the dual point set.  Everything here is
// integer or small-rational linear algebra; no floating point.

#include "covercount/analysis.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace covercount {

namespace {

// fraction-free row reduction; returns the rank
int int_rank(std::vector<std::vector<i64>> rows) {
    int rank = 0;
    size_t ncols = rows.empty() ? 0 : rows[0].size();
    for (size_t col = 0; col < ncols && size_t(rank) < rows.size(); ++col) {
        size_t sel = size_t(rank);
        while (sel < rows.size() && rows[sel][col] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[size_t(rank)], rows[sel]);
        for (size_t r = size_t(rank) + 1; r < rows.size(); ++r) {
            if (rows[r][col] == 0) continue;
            i64 a = rows[size_t(rank)][col], b = rows[r][col];
            i64 g = std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
            i64 fa = b / g, fb = a / g;
            for (size_t c = 0; c < ncols; ++c) rows[r][c] = fb * rows[r][c] - fa * rows[size_t(rank)][c];
            i64 gg = 0;
            for (i64 v : rows[r]) gg = std::gcd(gg, v < 0 ? -v : v);
            if (gg > 1)
                for (i64& v : rows[r]) v /= gg;
        }
        ++rank;
    }
    return rank;
}

// rational kernel vector of a rank-n system of rows in n+1 unknowns,
// returned as a primitive integer vector with positive leading entry
std::vector<i64> kernel_point(const std::vector<std::vector<i64>>& rows, int n) {
    // Gauss-Jordan over rationals scaled to integers via cross-multiplication
    std::vector<std::vector<i64>> m = rows;
    std::vector<int> pivcol;
    size_t r = 0;
    for (int col = 0; col <= n && r < m.size(); ++col) {
        size_t sel = r;
        while (sel < m.size() && m[sel][size_t(col)] == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[r], m[sel]);
        for (size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][size_t(col)] == 0) continue;
            i64 a = m[r][size_t(col)], b = m[i][size_t(col)];
            i64 g = std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
            i64 fi = a / g, fr = b / g;
            for (int c = 0; c <= n; ++c) m[i][size_t(c)] = fi * m[i][size_t(c)] - fr * m[r][size_t(c)];
            i64 gg = 0;
            for (i64 v : m[i]) gg = std::gcd(gg, v < 0 ? -v : v);
            if (gg > 1)
                for (i64& v : m[i]) v /= gg;
        }
        pivcol.push_back(col);
        ++r;
    }
    std::vector<bool> ispiv(size_t(n) + 1, false);
    for (int c : pivcol) ispiv[size_t(c)] = true;
    int freec = -1;
    for (int c = 0; c <= n; ++c)
        if (!ispiv[size_t(c)]) {
            freec = c;
            break;
        }
    if (freec < 0) return {};
    // x_free = prod of pivots; x_piv = -row_free_entry * scale / pivot
    std::vector<i64> x(size_t(n) + 1, 0);
    i64 scale = 1;
    for (size_t i = 0; i < pivcol.size(); ++i) scale = std::lcm(scale, std::abs(m[i][size_t(pivcol[i])]));
    x[size_t(freec)] = scale;
    for (size_t i = 0; i < pivcol.size(); ++i)
        x[size_t(pivcol[i])] = -m[i][size_t(freec)] * (scale / m[i][size_t(pivcol[i])]);
    normalize_form(x);
    return x;
}

struct Frac {
    i64 n = 0, d = 1;
    Frac() = default;
    Frac(i64 nn, i64 dd) : n(nn), d(dd) { reduce(); }
    void reduce() {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        i64 g = std::gcd(n < 0 ? -n : n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        if (n == 0) d = 1;
    }
    Frac operator*(const Frac& o) const { return Frac(n * o.n, d * o.d); }
    Frac operator/(const Frac& o) const { return Frac(n * o.d, d * o.n); }
    bool operator==(const Frac& o) const { return n == o.n && d == o.d; }
};

i64 det_bareiss(std::vector<std::vector<i64>> m) {
    size_t n = m.size();
    i64 prev = 1;
    i64 sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t sel = k + 1;
            while (sel < n && m[sel][k] == 0) ++sel;
            if (sel == n) return 0;
            std::swap(m[k], m[sel]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

// adjugate: adj * M = det(M) * I
std::vector<std::vector<i64>> adjugate(const std::vector<std::vector<i64>>& m) {
    size_t n = m.size();
    std::vector<std::vector<i64>> adj(n, std::vector<i64>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            std::vector<std::vector<i64>> minor;
            minor.reserve(n - 1);
            for (size_t r = 0; r < n; ++r) {
                if (r == j) continue;  // adj[i][j] = cofactor C_ji
                std::vector<i64> row;
                row.reserve(n - 1);
                for (size_t c = 0; c < n; ++c)
                    if (c != i) row.push_back(m[r][c]);
                minor.push_back(std::move(row));
            }
            i64 d = minor.empty() ? 1 : det_bareiss(std::move(minor));
            adj[i][j] = ((i + j) % 2 == 0) ? d : -d;
        }
    return adj;
}

std::vector<i64> mat_vec(const std::vector<std::vector<i64>>& m, const std::vector<i64>& v) {
    std::vector<i64> out(m.size(), 0);
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
    return out;
}

std::vector<i64> canonical_matrix(std::vector<std::vector<i64>> m) {
    i64 g = 0;
    for (const auto& row : m)
        for (i64 v : row) g = std::gcd(g, v < 0 ? -v : v);
    i64 lead = 0;
    for (const auto& row : m) {
        for (i64 v : row)
            if (v != 0) {
                lead = v;
                break;
            }
        if (lead) break;
    }
    i64 s = lead < 0 ? -g : g;
    std::vector<i64> flat;
    for (auto& row : m)
        for (i64& v : row) flat.push_back(v / s);
    return flat;
}

}  // namespace

CynkHulekReport cynk_hulek_report(const DoubleCoverSpec& spec) {
    const int n = spec.dim();
    const auto& forms = spec.forms();
    const size_t m = forms.size();
    if (n > 8 || m > 16) throw domain_error("ambient too large for the subset scan");

    std::vector<int> rank_of(size_t(1) << m, 0);
    auto subset_rows = [&](unsigned mask) {
        std::vector<std::vector<i64>> rows;
        for (size_t i = 0; i < m; ++i)
            if (mask & (1u << i)) rows.push_back(forms[i]);
        return rows;
    };
    for (unsigned mask = 1; mask < (1u << m); ++mask) rank_of[mask] = int_rank(subset_rows(mask));

    CynkHulekReport rep;
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
        int rk = rank_of[mask];
        if (rk > n) continue;  // empty intersection: the criterion is vacuous
        bool closed = true;
        for (size_t i = 0; i < m && closed; ++i)
            if (!(mask & (1u << i)) && rank_of[mask | (1u << i)] == rk) closed = false;
        if (!closed) continue;

        SubsetReport sr;
        for (size_t i = 0; i < m; ++i)
            if (mask & (1u << i)) sr.subset.push_back(int(i));
        sr.intersection_dim = n - rk;
        int card = int(sr.subset.size());
        sr.near_pencil = false;
        for (int s : sr.subset) {
            unsigned rest = mask & ~(1u << unsigned(s));
            if (rest == 0 || rank_of[rest] < rk) {
                sr.near_pencil = true;
                break;
            }
        }
        sr.ch_ok = sr.near_pencil || (card / 2 == rk - 1);
        if (sr.intersection_dim == 0) sr.point = kernel_point(subset_rows(mask), n);
        if (!sr.ch_ok) rep.all_ok = false;
        rep.subsets.push_back(std::move(sr));
    }
    return rep;
}

namespace {

struct RatioDSU {
    std::vector<int> parent;
    std::vector<Frac> ratio;  // t_i = ratio[i] * t_root(i)
    explicit RatioDSU(int n) : parent(size_t(n)), ratio(size_t(n), Frac(1, 1)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    std::pair<int, Frac> find(int i) {
        if (parent[size_t(i)] == i) return {i, Frac(1, 1)};
        auto [r, f] = find(parent[size_t(i)]);
        parent[size_t(i)] = r;
        ratio[size_t(i)] = ratio[size_t(i)] * f;
        return {r, ratio[size_t(i)]};
    }
    // impose t_i / t_j = q; false on conflict
    bool merge(int i, int j, Frac q) {
        auto [ri, fi] = find(i);
        auto [rj, fj] = find(j);
        if (ri == rj) return fi / fj == q;
        parent[size_t(ri)] = rj;
        ratio[size_t(ri)] = q * fj / fi;
        return true;
    }
};

struct AutSearch {
    int n;
    std::vector<std::vector<i64>> duals;  // normalized coefficient vectors
    std::vector<int> basis_idx;
    std::vector<std::vector<i64>> adjB;
    std::vector<int> extras;
    std::vector<std::vector<i64>> extra_coords;  // adjB * dual, one per extra
    std::vector<std::vector<int>> extra_supp;

    std::set<std::vector<i64>> found;                      // canonical dual-action matrices
    std::vector<std::vector<std::vector<i64>>> matrices;   // same, unflattened
    std::vector<std::vector<int>> perms;

    std::vector<int> img;        // basis slot -> dual index
    std::vector<bool> used;
    std::vector<std::vector<i64>> elim;  // incremental independence check

    void run();
    void place(int slot);
    void finish_tuple();
};

void AutSearch::run() {
    img.assign(size_t(n) + 1, -1);
    used.assign(duals.size(), false);
    place(0);
}

void AutSearch::place(int slot) {
    if (slot == n + 1) {
        finish_tuple();
        return;
    }
    for (size_t cand = 0; cand < duals.size(); ++cand) {
        if (used[cand]) continue;
        // incremental rank check
        std::vector<std::vector<i64>> saved = elim;
        elim.push_back(duals[cand]);
        if (int_rank(elim) == slot + 1) {
            img[size_t(slot)] = int(cand);
            used[cand] = true;
            place(slot + 1);
            used[cand] = false;
        }
        elim = std::move(saved);
    }
}

void AutSearch::finish_tuple() {
    std::vector<std::vector<i64>> W(size_t(n) + 1, std::vector<i64>(size_t(n) + 1));
    for (int c = 0; c <= n; ++c)
        for (int r = 0; r <= n; ++r) W[size_t(r)][size_t(c)] = duals[size_t(img[size_t(c)])][size_t(r)];
    auto adjW = adjugate(W);

    struct Cand {
        int dual;
        std::vector<i64> coords;
    };
    // candidate images per extra, filtered by support match
    std::vector<std::vector<Cand>> cands(extras.size());
    std::vector<std::vector<i64>> unused_coords(duals.size());
    for (size_t d = 0; d < duals.size(); ++d) {
        if (used[d]) continue;
        unused_coords[d] = mat_vec(adjW, duals[d]);
    }
    for (size_t e = 0; e < extras.size(); ++e) {
        for (size_t d = 0; d < duals.size(); ++d) {
            if (used[d]) continue;
            const auto& c = unused_coords[d];
            bool okmatch = true;
            for (int i = 0; i <= n && okmatch; ++i)
                okmatch = (c[size_t(i)] != 0) == (extra_coords[e][size_t(i)] != 0);
            if (okmatch) cands[e].push_back({int(d), c});
        }
        if (cands[e].empty()) return;
    }

    // assign extras with ratio propagation
    std::vector<bool> eused(duals.size(), false);
    RatioDSU dsu(n + 1);
    auto rec = [&](auto&& self, size_t e, RatioDSU state) -> void {
        if (e == extras.size()) {
            // all scalars must sit in one component
            auto [root0, f0] = state.find(0);
            std::vector<Frac> t(size_t(n) + 1);
            for (int i = 0; i <= n; ++i) {
                auto [r, f] = state.find(i);
                if (r != root0) throw domain_error("no frame: scalars underdetermined");
                t[size_t(i)] = f;
            }
            // N = W * diag(t) * adjB, cleared to a primitive integer matrix
            i64 L = 1;
            for (int i = 0; i <= n; ++i) L = std::lcm(L, t[size_t(i)].d);
            std::vector<std::vector<i64>> N(size_t(n) + 1, std::vector<i64>(size_t(n) + 1, 0));
            for (int r = 0; r <= n; ++r)
                for (int c = 0; c <= n; ++c) {
                    i64 acc = 0;
                    for (int k = 0; k <= n; ++k)
                        acc += W[size_t(r)][size_t(k)] * (t[size_t(k)].n * (L / t[size_t(k)].d)) *
                               adjB[size_t(k)][size_t(c)];
                    N[size_t(r)][size_t(c)] = acc;
                }
            // verify N permutes the dual set; build the permutation
            std::vector<int> perm(duals.size(), -1);
            std::vector<bool> hit(duals.size(), false);
            for (size_t d = 0; d < duals.size(); ++d) {
                std::vector<i64> v = mat_vec(N, duals[d]);
                normalize_form(v);
                int tgt = -1;
                for (size_t k = 0; k < duals.size(); ++k)
                    if (duals[k] == v) {
                        tgt = int(k);
                        break;
                    }
                if (tgt < 0 || hit[size_t(tgt)]) return;  // not an automorphism
                perm[d] = tgt;
                hit[size_t(tgt)] = true;
            }
            auto key = canonical_matrix(N);
            if (found.insert(key).second) {
                std::vector<std::vector<i64>> canonN(size_t(n) + 1,
                                                     std::vector<i64>(size_t(n) + 1));
                for (int r = 0; r <= n; ++r)
                    for (int c = 0; c <= n; ++c) canonN[size_t(r)][size_t(c)] = key[size_t(r) * size_t(n + 1) + size_t(c)];
                matrices.push_back(std::move(canonN));
                perms.push_back(std::move(perm));
            }
            return;
        }
        for (const auto& cd : cands[e]) {
            if (eused[size_t(cd.dual)]) continue;
            RatioDSU next = state;
            bool ok = true;
            const auto& supp = extra_supp[e];
            for (size_t si = 1; si < supp.size() && ok; ++si) {
                int i = supp[0], j = supp[si];
                // t_i cB_i = rho c'_i  =>  t_i/t_j = (c'_i/cB_i)/(c'_j/cB_j)
                Frac q = Frac(cd.coords[size_t(i)], extra_coords[e][size_t(i)]) /
                         Frac(cd.coords[size_t(j)], extra_coords[e][size_t(j)]);
                ok = next.merge(i, j, q);
            }
            if (!ok) continue;
            eused[size_t(cd.dual)] = true;
            self(self, e + 1, next);
            eused[size_t(cd.dual)] = false;
        }
    };
    rec(rec, 0, dsu);
}

}  // namespace

AutGroup automorphism_group(const DoubleCoverSpec& spec) {
    const int n = spec.dim();
    AutSearch S;
    S.n = n;
    S.duals = spec.forms();

    // spanning reference basis among the duals
    std::vector<std::vector<i64>> rows;
    for (size_t i = 0; i < S.duals.size() && int(rows.size()) <= n; ++i) {
        rows.push_back(S.duals[i]);
        if (int_rank(rows) == int(rows.size()))
            S.basis_idx.push_back(int(i));
        else
            rows.pop_back();
    }
    if (int(S.basis_idx.size()) != n + 1)
        throw domain_error("degenerate arrangement: duals do not span");

    std::vector<std::vector<i64>> B(size_t(n) + 1, std::vector<i64>(size_t(n) + 1));
    for (int c = 0; c <= n; ++c)
        for (int r = 0; r <= n; ++r) B[size_t(r)][size_t(c)] = S.duals[size_t(S.basis_idx[size_t(c)])][size_t(r)];
    S.adjB = adjugate(B);

    RatioDSU connect(n + 1);
    for (size_t i = 0; i < S.duals.size(); ++i) {
        if (std::find(S.basis_idx.begin(), S.basis_idx.end(), int(i)) != S.basis_idx.end())
            continue;
        S.extras.push_back(int(i));
        auto c = mat_vec(S.adjB, S.duals[i]);
        std::vector<int> supp;
        for (int k = 0; k <= n; ++k)
            if (c[size_t(k)] != 0) supp.push_back(k);
        for (size_t si = 1; si < supp.size(); ++si) connect.merge(supp[0], supp[si], Frac(1, 1));
        S.extra_coords.push_back(std::move(c));
        S.extra_supp.push_back(std::move(supp));
    }
    auto [root0, f0] = connect.find(0);
    for (int i = 1; i <= n; ++i)
        if (connect.find(i).first != root0)
            throw domain_error("no frame exists (degenerate arrangement)");

    S.run();

    AutGroup g;
    g.pgl_order = S.matrices.size();
    g.cover_order = 2 * g.pgl_order;
    // the stored matrices act on dual vectors; transpose for the x-action
    for (const auto& N : S.matrices) {
        std::vector<std::vector<i64>> M(size_t(n) + 1, std::vector<i64>(size_t(n) + 1));
        for (int r = 0; r <= n; ++r)
            for (int c = 0; c <= n; ++c) M[size_t(r)][size_t(c)] = N[size_t(c)][size_t(r)];
        g.elements.push_back(std::move(M));
    }
    g.form_perms = S.perms;

    // put the identity first
    std::vector<std::vector<i64>> I(size_t(n) + 1, std::vector<i64>(size_t(n) + 1, 0));
    for (int d = 0; d <= n; ++d) I[size_t(d)][size_t(d)] = 1;
    auto ikey = canonical_matrix(I);
    for (size_t i = 0; i < g.elements.size(); ++i) {
        if (canonical_matrix(g.elements[i]) == ikey) {
            std::swap(g.elements[0], g.elements[i]);
            std::swap(g.form_perms[0], g.form_perms[i]);
            break;
        }
    }

    // greedy generating set via closure under matrix multiplication
    auto mul = [&](const std::vector<std::vector<i64>>& a, const std::vector<std::vector<i64>>& b) {
        std::vector<std::vector<i64>> c(a.size(), std::vector<i64>(a.size(), 0));
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < a.size(); ++j) {
                i64 v = 0;
                for (size_t k = 0; k < a.size(); ++k) v += a[i][k] * b[k][j];
                c[i][j] = v;
            }
        return c;
    };
    std::set<std::vector<i64>> closure{canonical_matrix(g.elements[0])};
    std::vector<size_t> closure_members{0};
    for (size_t i = 1; i < g.elements.size(); ++i) {
        if (closure.count(canonical_matrix(g.elements[i]))) continue;
        g.generator_indices.push_back(i);
        // saturate
        std::vector<std::vector<std::vector<i64>>> frontier;
        for (size_t mbr : closure_members) frontier.push_back(g.elements[mbr]);
        frontier.push_back(g.elements[i]);
        closure.insert(canonical_matrix(g.elements[i]));
        closure_members.push_back(i);
        bool grew = true;
        while (grew) {
            grew = false;
            for (size_t a = 0; a < g.elements.size(); ++a) {
                if (!closure.count(canonical_matrix(g.elements[a]))) continue;
                for (size_t b = 0; b < g.elements.size(); ++b) {
                    if (!closure.count(canonical_matrix(g.elements[b]))) continue;
                    auto key = canonical_matrix(mul(g.elements[a], g.elements[b]));
                    if (!closure.count(key)) {
                        closure.insert(key);
                        grew = true;
                    }
                }
            }
        }
        closure_members.clear();
        for (size_t e = 0; e < g.elements.size(); ++e)
            if (closure.count(canonical_matrix(g.elements[e]))) closure_members.push_back(e);
        if (closure.size() == g.elements.size()) break;
    }

    // orbits of the permutation action on forms
    size_t nforms = spec.forms().size();
    std::vector<bool> seen(nforms, false);
    for (size_t s = 0; s < nforms; ++s) {
        if (seen[s]) continue;
        std::vector<int> orbit{int(s)};
        seen[s] = true;
        for (size_t q = 0; q < orbit.size(); ++q)
            for (const auto& perm : g.form_perms) {
                int t = perm[size_t(orbit[q])];
                if (!seen[size_t(t)]) {
                    seen[size_t(t)] = true;
                    orbit.push_back(t);
                }
            }
        std::sort(orbit.begin(), orbit.end());
        g.form_orbits.push_back(std::move(orbit));
    }
    return g;
}

GroupStructure analyze_group_structure(const AutGroup& g) {
    GroupStructure st;
    st.order = g.pgl_order;
    const size_t n = g.elements.size();
    auto mul = [&](size_t a, size_t b) {
        const auto& A = g.elements[a];
        const auto& B = g.elements[b];
        std::vector<std::vector<i64>> C(A.size(), std::vector<i64>(A.size(), 0));
        for (size_t i = 0; i < A.size(); ++i)
            for (size_t j = 0; j < A.size(); ++j) {
                i64 v = 0;
                for (size_t k = 0; k < A.size(); ++k) v += A[i][k] * B[k][j];
                C[i][j] = v;
            }
        auto key = canonical_matrix(C);
        for (size_t e = 0; e < n; ++e)
            if (canonical_matrix(g.elements[e]) == key) return e;
        throw std::logic_error("group not closed");
    };
    // multiplication table
    std::vector<std::vector<size_t>> tab(n, std::vector<size_t>(n));
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b) tab[a][b] = mul(a, b);
    size_t id = 0;
    for (size_t a = 0; a < n; ++a)
        if (tab[a][a] == a) {
            bool isid = true;
            for (size_t b = 0; b < n && isid; ++b) isid = tab[a][b] == b && tab[b][a] == b;
            if (isid) {
                id = a;
                break;
            }
        }

    std::vector<size_t> center;
    for (size_t a = 0; a < n; ++a) {
        bool cent = true;
        for (size_t b = 0; b < n && cent; ++b) cent = tab[a][b] == tab[b][a];
        if (cent) center.push_back(a);
    }
    st.center_order = center.size();

    // K = <squares, commutators>; index-2 subgroups are kernels of
    // characters of G/K
    std::set<size_t> K{id};
    std::vector<size_t> inv(n);
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b)
            if (tab[a][b] == id) inv[a] = b;
    std::vector<size_t> seeds;
    for (size_t a = 0; a < n; ++a) {
        seeds.push_back(tab[a][a]);
        for (size_t b = 0; b < n; ++b) seeds.push_back(tab[tab[tab[a][b]][inv[a]]][inv[b]]);
    }
    bool grew = true;
    for (size_t s : seeds) K.insert(s);
    while (grew) {
        grew = false;
        std::vector<size_t> cur(K.begin(), K.end());
        for (size_t a : cur)
            for (size_t b : cur)
                if (K.insert(tab[a][b]).second) grew = true;
    }
    // cosets of K
    std::vector<std::vector<size_t>> cosets;
    std::vector<int> coset_of(n, -1);
    for (size_t a = 0; a < n; ++a) {
        if (coset_of[a] >= 0) continue;
        std::vector<size_t> cs;
        for (size_t k : K) {
            size_t e = tab[a][k];
            coset_of[e] = int(cosets.size());
            cs.push_back(e);
        }
        cosets.push_back(std::move(cs));
    }
    size_t ncs = cosets.size();

    auto subgroup_center_exponent = [&](const std::set<size_t>& H, u64& zorder, bool& exp2,
                                        bool& quot_c2cubed) {
        std::vector<size_t> zh;
        for (size_t a : H) {
            bool cent = true;
            for (size_t b : H) {
                if (tab[a][b] != tab[b][a]) {
                    cent = false;
                    break;
                }
            }
            if (cent) zh.push_back(a);
        }
        zorder = zh.size();
        exp2 = true;
        for (size_t z : zh)
            if (z != id && tab[z][z] != id) exp2 = false;
        std::set<size_t> ZH(zh.begin(), zh.end());
        quot_c2cubed = H.size() == 8 * ZH.size();
        for (size_t a : H) {
            if (!quot_c2cubed) break;
            if (!ZH.count(tab[a][a])) quot_c2cubed = false;
            for (size_t b : H)
                if (!ZH.count(tab[tab[tab[a][b]][inv[a]]][inv[b]])) {
                    quot_c2cubed = false;
                    break;
                }
        }
    };

    // The coset group G/K is elementary abelian; index-2 subgroups of G are
    // kernels of its nonzero F_2 functionals.  Express every coset over a
    // basis, then sweep the 2^r - 1 functionals.
    std::vector<std::vector<size_t>> ctab(ncs, std::vector<size_t>(ncs));
    for (size_t c = 0; c < ncs; ++c)
        for (size_t d = 0; d < ncs; ++d)
            ctab[c][d] = size_t(coset_of[tab[cosets[c][0]][cosets[d][0]]]);
    size_t cid = size_t(coset_of[id]);
    std::vector<u64> rep(ncs, 0);  // basis-subset expression per coset
    std::vector<size_t> basis;
    {
        std::set<size_t> span{cid};
        std::vector<size_t> span_list{cid};
        for (size_t c = 0; c < ncs; ++c) {
            if (span.count(c)) continue;
            basis.push_back(c);
            std::vector<size_t> added;
            for (size_t s : span_list) {
                size_t nc = ctab[s][c];
                if (span.insert(nc).second) {
                    rep[nc] = rep[s] | (u64(1) << (basis.size() - 1));
                    added.push_back(nc);
                }
            }
            span_list.insert(span_list.end(), added.begin(), added.end());
        }
    }
    size_t r = basis.size();

    for (size_t z : center) {
        if (z == id || tab[z][z] != id) continue;
        for (u64 chi = 1; chi < (u64(1) << r); ++chi) {
            std::set<size_t> H;
            for (size_t a = 0; a < n; ++a)
                if (__builtin_parityll(rep[size_t(coset_of[a])] & chi) == 0) H.insert(a);
            if (H.size() != n / 2 || H.count(z)) continue;
            u64 zo;
            bool e2, qc;
            subgroup_center_exponent(H, zo, e2, qc);
            if (!st.splits_c2_x_h || (e2 && zo == 4)) {
                st.splits_c2_x_h = true;
                st.h_center_order = zo;
                st.h_center_c2sq = e2 && zo == 4;
                st.h_mod_center_c2cubed = qc;
                if (st.h_center_c2sq && qc) return st;
            }
        }
    }
    return st;
}

}  // namespace covercount
