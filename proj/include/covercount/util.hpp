#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace covercount {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using u32 = std::uint32_t;
using i128 = __int128;
using u128 = unsigned __int128;

std::string to_string(i128 v);
i128 parse_i128(const std::string& s);

inline i128 ipow(i128 base, unsigned e) {
    i128 r = 1;
    while (e--) r *= base;
    return r;
}

// Runs fn(chunk) for chunk = 0..nchunks-1 on up to `jobs` threads.
// Results are merged in chunk order by the caller's accumulator, so the
// outcome is independent of the thread count.
void parallel_chunks(u64 nchunks, int jobs, const std::function<void(u64)>& fn);

struct domain_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace covercount
