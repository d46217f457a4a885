#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "tight/polygonal.hpp"

// Exact bounded representation sets
//
//     V_S(a) = { a_1 s_1 + ... + a_k s_k : s_i in S }
//
// computed on [0, B] by a per-variable dynamic program: each variable
// contributes exactly one s_i in S (possibly 0).  The membership table is
// bit-packed and each DP step is a word-level shift-OR, so bounds of 1e5-1e7
// run in seconds.

namespace tight {

// Sorted nondecreasing vector of positive coefficients.  Equality is
// multiset equality; ordering is lexicographic on the sorted form.
class FormVector {
public:
    explicit FormVector(std::vector<int64_t> coeffs);
    FormVector(std::initializer_list<int64_t> coeffs)
        : FormVector(std::vector<int64_t>(coeffs)) {}

    const std::vector<int64_t>& coeffs() const { return coeffs_; }
    std::size_t size() const { return coeffs_.size(); }
    int64_t operator[](std::size_t i) const { return coeffs_[i]; }
    int64_t min() const { return coeffs_.front(); }
    int64_t max() const { return coeffs_.back(); }
    int64_t sum() const;

    // Multiset inclusion: sub <= *this (the subsequence order on sorted
    // vectors).
    bool contains(const FormVector& sub) const;

    FormVector without_index(std::size_t i) const;
    FormVector with(int64_t extra) const;

    // Smallest common super-multiset (per-value max of multiplicities).
    static FormVector merge_max(const FormVector& a, const FormVector& b);

    friend bool operator==(const FormVector& a, const FormVector& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator<(const FormVector& a, const FormVector& b) {
        return a.coeffs_ < b.coeffs_;
    }

    std::string to_string() const;

private:
    std::vector<int64_t> coeffs_;
};

struct Witness {
    std::vector<int64_t> indices; // x_i with sum a_i * P_m(x_i) = value
    int64_t value = 0;
};

class ReprSet {
public:
    int64_t bound() const { return bound_; }

    bool contains(int64_t g) const {
        if (g < 0 || g > bound_) return false;
        return (words_[static_cast<std::size_t>(g >> 6)] >> (g & 63)) & 1;
    }

    // Smallest g in [lo, hi] not in the set.
    std::optional<int64_t> first_missing(int64_t lo, int64_t hi) const;
    std::vector<int64_t> missing(int64_t lo, int64_t hi) const;

    // True when [lo, hi] is fully contained.
    bool covers(int64_t lo, int64_t hi) const { return !first_missing(lo, hi); }

    // All members are also members of other (bounds must match).
    bool subset_of(const ReprSet& other) const;

    // Representation set of (coeffs + one extra variable) on the same bound.
    // Witness layers are not carried over.
    ReprSet extended(int64_t extra_coeff, const GonalSet& S) const;

    // Lexicographically smallest witness (variables left to right in the
    // sorted vector, candidate values of s_i ascending).  Requires the set
    // to have been built with want_witnesses.
    std::optional<Witness> witness(int64_t g) const;

    bool has_witness_layers() const { return !layers_.empty(); }

private:
    friend ReprSet repr_set(const FormVector&, const GonalSet&, int64_t, bool);

    int64_t bound_ = 0;
    std::vector<uint64_t> words_;
    // layers_[i] = bit table of V_S(a_i..a_k); layers_[k] = {0}.  Present
    // only when witnesses were requested.
    std::vector<std::vector<uint64_t>> layers_;
    std::vector<int64_t> coeffs_;
    std::optional<GonalSet> set_;
};

ReprSet repr_set(const FormVector& a, const GonalSet& S, int64_t bound,
                 bool want_witnesses = false);

std::optional<Witness> find_witness(const FormVector& a, const GonalSet& S,
                                    int64_t target);

// Smallest t in [n, bound] not represented, or nullopt when [n, bound] is
// fully covered.
std::optional<int64_t> truant(const FormVector& a, const GonalSet& S,
                              int64_t n, int64_t bound);

// Is u = sum d_i x_i^2 with every x_i odd?  Exhaustive search; the returned
// witness has positive odd entries, found with x_i ascending variable by
// variable.
std::optional<std::vector<int64_t>> odd_square_repr(
    const std::vector<int64_t>& d, int64_t u);

// Cross-check of the two representation engines for triangular forms:
// g is represented by the triangular form a  iff  8g + sum(a) has an
// all-odd diagonal square representation by <a>.  Returns whether the two
// sides agree (a false return is a bug in one of the engines).
bool shift_equiv(const FormVector& a, int64_t g);

} // namespace tight
