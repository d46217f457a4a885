#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tight/polygonal.hpp"
#include "tight/sieve.hpp"

// Tight T(n)-universality: a vector a is tight T(n)-universal with respect
// to S when the nonzero values of V_S(a) are exactly the integers >= n.
// Verdicts here are bounded: VerifiedUpTo(B) means every value in [n, B] is
// hit and nothing below n is, which is evidence, not a proof.  A Certified
// verdict additionally carries a constructive certificate: if the base
// vector 1^e1 2^e2 3^e3 represents every nonnegative integer, then for any
// n >= 2*e3 + 3 the scaled vector n^e1,(n+1),...,(2n-1),(2n)^e2 is tight
// T(n)-universal.  The base hypothesis is itself checked only up to a
// bound, which the certificate records.

namespace tight {

// Default verification bound and default bound for base-universality
// hypotheses.
constexpr int64_t kDefaultVerifyBound = 100000;
constexpr int64_t kDefaultBaseBound = 1000000;

struct RangeViolation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct HypothesisNotVerified : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The run (n, n+1, ..., 2n-1) forced into every tight T(n)-universal vector,
// and its two completions: x_n prepends a second n, y_n appends 2n.
FormVector run_vector(int64_t n);
FormVector x_vector(int64_t n);
FormVector y_vector(int64_t n);

enum class CertificateKind { BoundedCheck, ScaledBase };

struct Certificate {
    CertificateKind kind = CertificateKind::BoundedCheck;
    int64_t bound = 0; // BoundedCheck: verification bound
    // ScaledBase fields:
    int64_t e1 = 0, e2 = 0, e3 = 0;
    int64_t base_bound = 0;
    int64_t n = 0;
    std::vector<int64_t> vector;
};

// Re-checks a certificate from scratch (never consults the verdict that
// issued it).
bool validate_certificate(const Certificate& cert, const GonalSet& S);

enum class VerdictStatus { VerifiedUpTo, FailedAt, Certified };

struct Verdict {
    VerdictStatus status = VerdictStatus::FailedAt;
    int64_t bound = 0;
    // FailedAt: the smallest violation.  low_violation marks a represented
    // value in [1, n-1] (as opposed to a missed value in [n, bound]).
    std::optional<int64_t> truant;
    bool low_violation = false;
    std::optional<Certificate> certificate;

    bool passed() const { return status != VerdictStatus::FailedAt; }
};

struct NecessaryReport {
    bool pass = false;
    bool min_is_n = false;
    bool run_present = false;   // (n, n+1, ..., 2n-1) embeds
    bool xn_present = false;
    bool yn_present = false;
    bool dichotomy_required = false; // 2 not in S, so x_n or y_n must embed
    // "x_n" / "y_n" / "prefix-only" when pass
    std::string pattern;
};

// Necessary conditions for tight T(n)-universality: the minimum must be n,
// the run must embed, and when 2 is not in S one of x_n / y_n must embed.
NecessaryReport necessary_conditions(const FormVector& a, const GonalSet& S,
                                     int64_t n);

// Bounded verification with certificate recognition.  Requires bound >= 2n.
// want_certificate controls whether the (memo-cheap but not free) scaled
// base shape recognition runs.
Verdict verify_tight(const FormVector& a, const GonalSet& S, int64_t n,
                     int64_t bound, bool want_certificate = true);

// Builds the scaled vector n^e1,(n+1),...,(2n-1),(2n)^e2 and a ScaledBase
// certificate after checking the base hypothesis V_S(1^e1 2^e2 3^e3) on
// [0, base_bound].  Throws RangeViolation when n < 2*e3+3 and
// HypothesisNotVerified when the base misses a value <= base_bound.
std::pair<FormVector, Certificate> construct_scaled_base(
    int64_t e1, int64_t e2, int64_t e3, const GonalSet& S, int64_t n,
    int64_t base_bound = kDefaultBaseBound);

enum class RemovalKind { Truant, MinRaised, StillTight };

struct RemovalEvidence {
    std::size_t index = 0;
    int64_t removed = 0;
    RemovalKind kind = RemovalKind::StillTight;
    std::optional<int64_t> truant;
};

struct NewnessReport {
    bool is_new = false;
    std::vector<RemovalEvidence> removals;
};

// A tight vector is new when every one-element removal stops being tight.
// One-deletions suffice: any proper sub-multiset embeds into some
// one-deletion and representation sets only shrink under deletion.
NewnessReport is_new(const FormVector& a, const GonalSet& S, int64_t n,
                     int64_t bound);

} // namespace tight
