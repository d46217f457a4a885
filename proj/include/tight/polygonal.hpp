#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// Polygonal number sets: for m >= 3 the x-th m-gonal number is
//
//     P_m(x) = ((m-2)x^2 - (m-4)x) / 2
//
// taken over x >= 0 (ordinary) or all integers x (generalized).
// Membership is answered in O(1) by inverting the quadratic, which keeps
// queries cheap inside sieve loops.

namespace tight {

// All arithmetic is done in 64-bit; inputs whose intermediates would wrap
// are rejected with std::overflow_error instead of wrapping.
int64_t gonal_value(int64_t m, int64_t x);

class GonalSet {
public:
    GonalSet(int64_t m, bool generalized);

    int64_t m() const { return m_; }
    bool generalized() const { return generalized_; }

    // P_m(x); x must be >= 0 when the set is not generalized.
    int64_t value(int64_t x) const;

    // Members of the set that are <= bound, ascending, deduplicated.
    std::vector<int64_t> values_up_to(int64_t bound) const;

    // Witnessing index x with value(x) == v, or nullopt when v is not a
    // member.  When two indices produce v (generalized sets) the
    // nonnegative-root index is returned.
    std::optional<int64_t> index_of(int64_t v) const;

    bool contains(int64_t v) const { return index_of(v).has_value(); }

    // 2 is a member only for the generalized pentagonal set.
    bool contains_two() const { return contains(2); }

    // "P5" or "GP5"; used in reports.
    std::string name() const;

    friend bool operator==(const GonalSet& a, const GonalSet& b) {
        return a.m_ == b.m_ && a.generalized_ == b.generalized_;
    }

private:
    int64_t m_;
    bool generalized_;
};

} // namespace tight
