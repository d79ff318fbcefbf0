// AVX2 variant of the sign-scan kernel for p <= 31.
//
// Eight consecutive t values ride in the lanes of one 256-bit vector per
// form.  The mod-p step uses the unsigned-min trick (v+s < 2p, so
// min(v+s, v+s-p) is the reduced value), and the quadratic character comes
// from a nonsquare bitmask shifted per lane with vpsrlvd, which is why the
// kernel is limited to p <= 31.  Zero detection ORs lane compares across
// forms; the character of the product is the XOR of the per-form bits.

#include <immintrin.h>

#include <cassert>

#include "covercount/sign_scan.hpp"

namespace covercount {

void sign_scan_avx2(const ScanInput& in, const u32* base, const u32* step, u32 nsteps,
                    ScanCounts& out) {
    assert(in.p <= 31 && in.m >= 1 && in.m <= kMaxScanForms);
    const u32 p = in.p;
    const u32 m = in.m;

    const __m256i pv = _mm256_set1_epi32(int(p));
    const __m256i lane_idx = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
    __m256i v[kMaxScanForms], st8[kMaxScanForms];
    for (u32 j = 0; j < m; ++j) {
        // base + l*step < 8p: reduce with three halving conditional subtracts
        __m256i val = _mm256_add_epi32(_mm256_set1_epi32(int(base[j])),
                                       _mm256_mullo_epi32(lane_idx,
                                                          _mm256_set1_epi32(int(step[j]))));
        val = _mm256_min_epu32(val, _mm256_sub_epi32(val, _mm256_slli_epi32(pv, 2)));
        val = _mm256_min_epu32(val, _mm256_sub_epi32(val, _mm256_slli_epi32(pv, 1)));
        val = _mm256_min_epu32(val, _mm256_sub_epi32(val, pv));
        v[j] = val;
        st8[j] = _mm256_set1_epi32(int(8 * step[j] % p));
    }
    const __m256i one = _mm256_set1_epi32(1);
    const __m256i nsv = _mm256_set1_epi32(int(in.ns_mask & 0xffffffffu));
    const __m256i zerov = _mm256_setzero_si256();

    u64 plus = 0, zero = 0, minus = 0;
    for (u32 t0 = 0; t0 < nsteps; t0 += 8) {
        __m256i anyzero = zerov, parity = zerov;
        for (u32 j = 0; j < m; ++j) {
            __m256i val = v[j];
            anyzero = _mm256_or_si256(anyzero, _mm256_cmpeq_epi32(val, zerov));
            parity = _mm256_xor_si256(parity,
                                      _mm256_and_si256(_mm256_srlv_epi32(nsv, val), one));
            __m256i nv = _mm256_add_epi32(val, st8[j]);
            v[j] = _mm256_min_epu32(nv, _mm256_sub_epi32(nv, pv));
        }
        unsigned valid = nsteps - t0 >= 8 ? 0xffu : (1u << (nsteps - t0)) - 1u;
        unsigned zb = unsigned(_mm256_movemask_ps(_mm256_castsi256_ps(anyzero))) & valid;
        unsigned nb = unsigned(_mm256_movemask_ps(
                          _mm256_castsi256_ps(_mm256_cmpeq_epi32(parity, one)))) &
                      valid & ~zb;
        zero += unsigned(_mm_popcnt_u32(zb));
        minus += unsigned(_mm_popcnt_u32(nb));
        plus += unsigned(_mm_popcnt_u32(valid)) - unsigned(_mm_popcnt_u32(zb)) -
                unsigned(_mm_popcnt_u32(nb));
    }
    out.plus += plus;
    out.zero += zero;
    out.minus += minus;
}

}  // namespace covercount
