#include "covercount/util.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace covercount {

std::string to_string(i128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    u128 u = neg ? u128(-(v + 1)) + 1 : u128(v);
    std::string s;
    while (u) {
        s.push_back(char('0' + int(u % 10)));
        u /= 10;
    }
    if (neg) s.push_back('-');
    std::reverse(s.begin(), s.end());
    return s;
}

i128 parse_i128(const std::string& s) {
    if (s.empty()) throw domain_error("empty integer literal");
    size_t i = 0;
    bool neg = false;
    if (s[0] == '-' || s[0] == '+') {
        neg = s[0] == '-';
        i = 1;
    }
    if (i == s.size()) throw domain_error("bad integer literal: " + s);
    i128 v = 0;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw domain_error("bad integer literal: " + s);
        v = v * 10 + (s[i] - '0');
    }
    return neg ? -v : v;
}

void parallel_chunks(u64 nchunks, int jobs, const std::function<void(u64)>& fn) {
    if (jobs < 1) jobs = 1;
    unsigned hw = std::thread::hardware_concurrency();
    jobs = int(std::min<u64>({u64(jobs), nchunks, hw ? u64(hw) * 2 : u64(jobs)}));
    if (jobs <= 1 || nchunks <= 1) {
        for (u64 c = 0; c < nchunks; ++c) fn(c);
        return;
    }
    std::atomic<u64> next{0};
    std::vector<std::thread> pool;
    pool.reserve(size_t(jobs));
    for (int t = 0; t < jobs; ++t)
        pool.emplace_back([&] {
            for (u64 c = next.fetch_add(1); c < nchunks; c = next.fetch_add(1)) fn(c);
        });
    for (auto& th : pool) th.join();
}

}  // namespace covercount
