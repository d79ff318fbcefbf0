#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "covercount/ffcore.hpp"

namespace covercount {

// Inner enumeration kernel. Walks t = 0..nsteps-1 with the j-th linear form
// taking the value (base[j] + t*step[j]) mod p and classifies the product of
// all m form values as a nonzero square, zero, or a nonsquare per t.
// This is the only loop that ever gets hot; everything brute-force in the
// project funnels through it.

inline constexpr unsigned kMaxScanForms = 16;

struct ScanCounts {
    u64 plus = 0, zero = 0, minus = 0;
    ScanCounts& operator+=(const ScanCounts& o) {
        plus += o.plus;
        zero += o.zero;
        minus += o.minus;
        return *this;
    }
};

struct ScanInput {
    u32 p;
    const std::int8_t* sq;  // quadratic-character table, size p
    u64 ns_mask;            // bit v set iff v is a nonsquare (p <= 63 only)
    u32 m;                  // number of forms, 1 <= m <= kMaxScanForms
};

using ScanFn = void (*)(const ScanInput&, const u32* base, const u32* step, u32 nsteps,
                        ScanCounts& out);

void sign_scan_scalar(const ScanInput&, const u32* base, const u32* step, u32 nsteps,
                      ScanCounts& out);
#if defined(__x86_64__) || defined(_M_X64)
// requires p <= 31
void sign_scan_avx2(const ScanInput&, const u32* base, const u32* step, u32 nsteps,
                    ScanCounts& out);
#endif

struct ScanKernelInfo {
    std::string name;
    ScanFn fn;
};

// All kernels usable for this p on this machine, scalar first.
std::vector<ScanKernelInfo> available_scan_kernels(u32 p);

// Preferred kernel for this p; honors COVERCOUNT_KERNEL=scalar|avx2.
ScanFn select_scan_kernel(u32 p);

}  // namespace covercount
