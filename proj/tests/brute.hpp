#pragma once

#include <cstdint>
#include <vector>

// Test-only brute-force representation oracle.  Enumerates assignments by
// nested recursion straight from the defining formula, independent of the
// bit-table DP it is used to check.

namespace brute {

inline std::vector<int64_t> gonal_values(int64_t m, bool generalized,
                                         int64_t bound) {
    std::vector<int64_t> vals;
    auto formula = [m](int64_t x) {
        return ((m - 2) * x * x - (m - 4) * x) / 2;
    };
    for (int64_t x = 0; formula(x) <= bound; ++x) vals.push_back(formula(x));
    if (generalized)
        for (int64_t x = -1; formula(x) <= bound; --x) vals.push_back(formula(x));
    return vals; // unsorted, may repeat; fine for enumeration
}

inline bool represents_rec(const std::vector<int64_t>& coeffs,
                           const std::vector<int64_t>& vals, std::size_t i,
                           int64_t remaining) {
    if (i == coeffs.size()) return remaining == 0;
    for (int64_t v : vals) {
        int64_t used = coeffs[i] * v;
        if (used > remaining) continue;
        if (represents_rec(coeffs, vals, i + 1, remaining - used)) return true;
    }
    return false;
}

inline bool represents(const std::vector<int64_t>& coeffs, int64_t m,
                       bool generalized, int64_t target) {
    if (target < 0) return false;
    auto vals = gonal_values(m, generalized, target);
    return represents_rec(coeffs, vals, 0, target);
}

} // namespace brute
