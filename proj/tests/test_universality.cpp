#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tight/universality.hpp"

using namespace tight;

TEST_CASE("pattern vectors") {
    CHECK(run_vector(3) == FormVector{3, 4, 5});
    CHECK(x_vector(3) == FormVector{3, 3, 4, 5});
    CHECK(y_vector(3) == FormVector{3, 4, 5, 6});
    CHECK(run_vector(1) == FormVector{1});
    CHECK(x_vector(1) == FormVector{1, 1});
    CHECK(y_vector(1) == FormVector{1, 2});
    CHECK(x_vector(11).coeffs() ==
          std::vector<int64_t>{11, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21});
}

TEST_CASE("necessary_conditions") {
    GonalSet tri(3, false);
    auto r = necessary_conditions(FormVector{3, 3, 4, 5}, tri, 3);
    CHECK(r.pass);
    CHECK(r.pattern == "x_n");
    CHECK(r.dichotomy_required);

    auto fail = necessary_conditions(FormVector{4, 4, 6, 7}, tri, 4);
    CHECK_FALSE(fail.pass); // 5 missing from the forced run
    CHECK(fail.min_is_n);
    CHECK_FALSE(fail.run_present);

    GonalSet gp5(5, true);
    auto pent = necessary_conditions(FormVector{7, 8, 9, 10, 11, 12, 13}, gp5, 7);
    CHECK(pent.pass);
    CHECK_FALSE(pent.dichotomy_required); // 2 is a generalized pentagonal number
    CHECK(pent.pattern == "prefix-only");

    auto badmin = necessary_conditions(FormVector{4, 5, 6}, tri, 3);
    CHECK_FALSE(badmin.pass);
}

TEST_CASE("verify_tight") {
    GonalSet tri(3, false);

    auto x4 = verify_tight(FormVector{4, 4, 5, 6, 7}, tri, 4, 10000);
    CHECK(x4.passed());

    auto y3 = verify_tight(FormVector{3, 4, 5, 6}, tri, 3, 10000);
    CHECK(y3.status == VerdictStatus::FailedAt);
    REQUIRE(y3.truant.has_value());
    CHECK(*y3.truant == 16);
    CHECK_FALSE(y3.low_violation);

    GonalSet gp5(5, true);
    auto pent = verify_tight(FormVector{7, 8, 9, 10, 11, 12, 13}, gp5, 7, 10000);
    CHECK(pent.passed());

    // a vector whose minimum undercuts n is flagged as a low violation
    auto low = verify_tight(FormVector{2, 3, 4, 5}, tri, 3, 1000);
    CHECK(low.status == VerdictStatus::FailedAt);
    CHECK(low.low_violation);
    CHECK(*low.truant == 2);

    CHECK_THROWS_AS(verify_tight(FormVector{3, 4, 5}, tri, 3, 5),
                    std::invalid_argument); // bound < 2n
}

TEST_CASE("verify_tight determinism") {
    GonalSet tri(3, false);
    for (int i = 0; i < 3; ++i) {
        auto v = verify_tight(FormVector{3, 4, 5, 6}, tri, 3, 2000);
        CHECK(v.status == VerdictStatus::FailedAt);
        CHECK(*v.truant == 16);
    }
}

TEST_CASE("construct_scaled_base") {
    GonalSet gp7(7, true);
    auto [x11, cert] = construct_scaled_base(2, 0, 4, gp7, 11);
    CHECK(x11 == x_vector(11));
    CHECK(cert.kind == CertificateKind::ScaledBase);
    CHECK(cert.e1 == 2);
    CHECK(cert.e3 == 4);
    CHECK(validate_certificate(cert, gp7));

    // triangular: base 1,2,3^3 gives y_9 at the n = 2m+3 boundary
    GonalSet tri(3, false);
    auto [y9, cert9] = construct_scaled_base(1, 1, 3, tri, 9);
    CHECK(y9 == y_vector(9));
    CHECK(validate_certificate(cert9, tri));

    CHECK_THROWS_AS(construct_scaled_base(1, 0, 1, tri, 4),
                    RangeViolation); // n = 4 < 2*1 + 3

    // base (1,1) misses values; the hypothesis must fail loudly
    CHECK_THROWS_AS(construct_scaled_base(2, 0, 0, tri, 3, 100),
                    HypothesisNotVerified);
}

TEST_CASE("verify_tight attaches a certificate when the shape matches") {
    GonalSet gp7(7, true);
    auto v = verify_tight(x_vector(11), gp7, 11, 1000);
    CHECK(v.status == VerdictStatus::Certified);
    REQUIRE(v.certificate.has_value());
    CHECK(v.certificate->kind == CertificateKind::ScaledBase);
    CHECK(v.certificate->e1 == 2);
    CHECK(v.certificate->e2 == 0);
    CHECK(v.certificate->e3 == 4);
    CHECK(validate_certificate(*v.certificate, gp7));

    // X_3 matches the shape but base (1,1) is not universal: bounded only
    GonalSet tri(3, false);
    auto x3 = verify_tight(FormVector{3, 3, 4, 5}, tri, 3, 1000);
    CHECK(x3.status == VerdictStatus::VerifiedUpTo);
    REQUIRE(x3.certificate.has_value());
    CHECK(x3.certificate->kind == CertificateKind::BoundedCheck);
}

TEST_CASE("certified vectors have no truant well past the base bound") {
    GonalSet gp5(5, true);
    auto v = verify_tight(run_vector(7), gp5, 7, 100000);
    CHECK(v.status == VerdictStatus::Certified);
    REQUIRE(v.certificate.has_value());
    CHECK(v.certificate->e1 == 1);
    CHECK(v.certificate->e2 == 0);
    CHECK(v.certificate->e3 == 2); // base (1,3,3)

    // the certified conclusion holds empirically out to a larger cap
    const int64_t cap = 200000;
    for (auto [vec, S] : {std::pair{run_vector(7), GonalSet(5, true)},
                          std::pair{x_vector(11), GonalSet(7, true)},
                          std::pair{y_vector(11), GonalSet(8, true)}}) {
        auto verdict = verify_tight(vec, S, vec.min(), cap, false);
        CHECK(verdict.passed());
        CHECK_FALSE(verdict.truant.has_value());
    }
}

TEST_CASE("is_new") {
    GonalSet tri(3, false);

    auto x3 = is_new(FormVector{3, 3, 4, 5}, tri, 3, 10000);
    CHECK(x3.is_new);
    REQUIRE(x3.removals.size() == 4);
    for (const auto& ev : x3.removals) CHECK(ev.kind != RemovalKind::StillTight);

    auto sup = is_new(FormVector{3, 3, 4, 5, 6}, tri, 3, 10000);
    CHECK_FALSE(sup.is_new); // contains tight X_3 as a one-deletion
    bool saw_still_tight = false;
    for (const auto& ev : sup.removals)
        if (ev.kind == RemovalKind::StillTight) saw_still_tight = true;
    CHECK(saw_still_tight);

    auto y4 = is_new(FormVector{4, 5, 6, 7, 8}, tri, 4, 10000);
    CHECK(y4.is_new);
    // removing the lone minimal entry is recorded as such
    CHECK(y4.removals[0].kind == RemovalKind::MinRaised);

    // removal evidence re-validates
    FormVector a{3, 4, 5, 6, 7};
    auto rep = is_new(a, tri, 3, 10000);
    for (const auto& ev : rep.removals) {
        if (ev.kind != RemovalKind::Truant) continue;
        auto v = verify_tight(a.without_index(ev.index), tri, 3, 10000);
        CHECK(v.status == VerdictStatus::FailedAt);
        CHECK(v.truant == ev.truant);
    }
}

TEST_CASE("tight verdicts satisfy the necessary conditions") {
    GonalSet tri(3, false);
    std::vector<FormVector> tight_vecs{
        FormVector{3, 3, 4, 5}, FormVector{3, 4, 4, 5, 6},
        FormVector{4, 4, 5, 6, 7}, FormVector{4, 5, 6, 7, 8}};
    for (const auto& a : tight_vecs) {
        int64_t n = a.min();
        CHECK(verify_tight(a, tri, n, 20000).passed());
        CHECK(necessary_conditions(a, tri, n).pass);
    }
}
