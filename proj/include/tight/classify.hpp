#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "tight/polygonal.hpp"
#include "tight/sieve.hpp"
#include "tight/universality.hpp"

// Exhaustive enumeration of all new tight T(n)-universal vectors for a gonal
// set, by escalation over sorted prefixes.
//
// Soundness/completeness sketch (the escalation argument, recorded here
// because it is load-bearing):
//
//   * Every component of a tight vector is >= n and the smallest is exactly
//     n, so the root (n) is the unique sorted 1-prefix.
//   * Let a be the j smallest components of a tight vector c and t the
//     smallest value in [n, B] missed by a.  c represents t, components
//     larger than t cannot contribute, so c's next sorted component lies in
//     [last(a), t].  Hence expanding each prefix with every w in
//     [last, truant] visits all sorted prefixes of every tight vector.
//   * Tight nodes are not expanded: any strict super-multiset of a tight
//     vector is tight but not new.
//   * Forced-component prune: when t < 2*last, a representation of t in any
//     extension uses exactly one new component v with s = 1 (two new
//     components or s >= 2 already exceed t), so v = t - x for some
//     represented x, i.e. v lies in a small computable set D.  A child
//     a+{w} with w not in D can only reach tight vectors that also contain
//     some v in D with v > w; if a+{v} is tight for every such v, those
//     vectors strictly contain a tight vector and are not new, so the child
//     is pruned.
//   * Shape lookahead: every tight vector contains the run (n,...,2n-1),
//     and when 2 is not in S it contains x_n or y_n.  For each applicable
//     shape F, every tight extension of a contains M = merge_max(a, F).  If
//     some one-deletion of M is tight, no extension in that branch is new;
//     if M itself is tight, the only possibly-new extension in the branch
//     is M itself, which is recorded as a candidate.  When every branch
//     concludes, the node is pruned.
//
// Branches that survive all prunes up to depth_cap are reported as an
// unfinished frontier (depth_cap_hit), distinguishing a complete
// classification at this bound from a truncated search.

namespace tight {

struct OutOfCatalog : std::domain_error {
    using std::domain_error::domain_error;
};

struct SearchStats {
    uint64_t visited = 0;
    uint64_t tight_nodes = 0;
    uint64_t lookahead_prunes = 0;
    uint64_t dead_prunes = 0;
    uint64_t forced_child_prunes = 0;
};

struct ClassifiedVector {
    FormVector vec;
    Verdict verdict;
    NewnessReport newness;
};

struct ClassificationReport {
    int64_t m = 3;
    bool generalized = false;
    int64_t n = 1;
    int64_t bound = 0;
    int64_t depth_cap = 0;
    // whether the published classification covers this (set, n) query
    bool in_catalog = false;
    std::vector<ClassifiedVector> vectors; // canonical (lexicographic) order
    SearchStats stats;
    bool depth_cap_hit = false;
    std::vector<FormVector> frontier;
};

constexpr int64_t default_depth_cap(int64_t n) { return 2 * n + 4; }

// All new tight T(n)-universal vectors of length <= depth_cap, verified to
// bound.  Requires bound >= 2n and depth_cap >= n + 2.
ClassificationReport enumerate_new(const GonalSet& S, int64_t n, int64_t bound,
                                   int64_t depth_cap, int threads = 1);

// The classification predicted by the published results, for diffing
// against enumerate_new output.  Throws OutOfCatalog for queries outside
// the covered ranges.
std::vector<FormVector> expected_results(int64_t m, bool generalized, int64_t n);

} // namespace tight
