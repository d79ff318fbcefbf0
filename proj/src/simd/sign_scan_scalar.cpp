#include <cassert>
#include <cstdlib>
#include <cstring>

#include "covercount/sign_scan.hpp"

namespace covercount {

void sign_scan_scalar(const ScanInput& in, const u32* base, const u32* step, u32 nsteps,
                      ScanCounts& out) {
    assert(in.m >= 1 && in.m <= kMaxScanForms);
    const u32 p = in.p;
    const std::int8_t* sq = in.sq;
    u32 v[kMaxScanForms];
    std::memcpy(v, base, in.m * sizeof(u32));

    u64 plus = 0, zero = 0, minus = 0;
    for (u32 t = 0; t < nsteps; ++t) {
        int s = 1;
        for (u32 j = 0; j < in.m; ++j) {
            s *= sq[v[j]];
            u32 nv = v[j] + step[j];
            v[j] = nv >= p ? nv - p : nv;
        }
        plus += s > 0;
        zero += s == 0;
        minus += s < 0;
    }
    out.plus += plus;
    out.zero += zero;
    out.minus += minus;
}

static bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(_M_X64)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

std::vector<ScanKernelInfo> available_scan_kernels(u32 p) {
    std::vector<ScanKernelInfo> ks{{"scalar", &sign_scan_scalar}};
#if defined(__x86_64__) || defined(_M_X64)
    if (cpu_has_avx2() && p <= 31) ks.push_back({"avx2", &sign_scan_avx2});
#else
    (void)p;
#endif
    return ks;
}

ScanFn select_scan_kernel(u32 p) {
    const char* want = std::getenv("COVERCOUNT_KERNEL");
    auto ks = available_scan_kernels(p);
    if (want && *want) {
        for (const auto& k : ks)
            if (k.name == want) return k.fn;
        return ks.front().fn;  // unknown or unsupported here: fall back
    }
    return ks.back().fn;
}

}  // namespace covercount
