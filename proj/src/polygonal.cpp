#include "tight/polygonal.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace tight {

namespace {

// Largest value we allow P_m(x) (and the membership discriminant) to reach.
// Everything past this is rejected as overflow rather than silently wrapped.
constexpr int64_t kValueCap = int64_t(1) << 62;

int64_t isqrt64(int64_t n) {
    assert(n >= 0);
    auto r = static_cast<int64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

} // namespace

int64_t gonal_value(int64_t m, int64_t x) {
    if (m < 3) throw std::invalid_argument("gonal order m must be >= 3");
    __int128 num = (__int128)(m - 2) * x * x - (__int128)(m - 4) * x;
    // The numerator is even and nonnegative for every integer x, m >= 3.
    assert(num % 2 == 0);
    assert(num >= 0);
    __int128 v = num / 2;
    if (v > kValueCap)
        throw std::overflow_error("gonal_value: result exceeds 64-bit range");
    return static_cast<int64_t>(v);
}

GonalSet::GonalSet(int64_t m, bool generalized)
    : m_(m), generalized_(generalized) {
    if (m < 3) throw std::invalid_argument("gonal order m must be >= 3");
}

int64_t GonalSet::value(int64_t x) const {
    if (!generalized_ && x < 0)
        throw std::invalid_argument("negative index in a non-generalized set");
    return gonal_value(m_, x);
}

std::vector<int64_t> GonalSet::values_up_to(int64_t bound) const {
    std::vector<int64_t> out;
    if (bound < 0) return out;
    for (int64_t x = 0;; ++x) {
        int64_t v = gonal_value(m_, x);
        if (v > bound) break;
        out.push_back(v);
    }
    if (generalized_) {
        for (int64_t x = -1;; --x) {
            int64_t v = gonal_value(m_, x);
            if (v > bound) break;
            out.push_back(v);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<int64_t> GonalSet::index_of(int64_t v) const {
    if (v < 0) return std::nullopt;
    // Solve (m-2)x^2 - (m-4)x - 2v = 0:
    //   x = ((m-4) +- sqrt((m-4)^2 + 8(m-2)v)) / (2(m-2))
    __int128 disc128 = (__int128)(m_ - 4) * (m_ - 4) + (__int128)8 * (m_ - 2) * v;
    if (disc128 > kValueCap)
        throw std::overflow_error("index_of: discriminant exceeds 64-bit range");
    int64_t disc = static_cast<int64_t>(disc128);
    int64_t s = isqrt64(disc);
    if (s * s != disc) return std::nullopt;
    int64_t den = 2 * (m_ - 2);
    // Nonnegative root first so the canonical witness matches the ordinary
    // set whenever possible.
    for (int64_t num : {m_ - 4 + s, m_ - 4 - s}) {
        if (num % den != 0) continue;
        int64_t x = num / den;
        if (x < 0 && !generalized_) continue;
        return x;
    }
    return std::nullopt;
}

std::string GonalSet::name() const {
    return (generalized_ ? "GP" : "P") + std::to_string(m_);
}

} // namespace tight
