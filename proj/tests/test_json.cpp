#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tight/report_json.hpp"

using namespace tight;

namespace {

bool same_verdict(const Verdict& a, const Verdict& b) {
    if (a.status != b.status || a.bound != b.bound || a.truant != b.truant ||
        a.low_violation != b.low_violation)
        return false;
    if (a.certificate.has_value() != b.certificate.has_value()) return false;
    if (!a.certificate) return true;
    const Certificate &ca = *a.certificate, &cb = *b.certificate;
    return ca.kind == cb.kind && ca.bound == cb.bound && ca.e1 == cb.e1 &&
           ca.e2 == cb.e2 && ca.e3 == cb.e3 && ca.base_bound == cb.base_bound &&
           ca.n == cb.n && ca.vector == cb.vector;
}

bool same_newness(const NewnessReport& a, const NewnessReport& b) {
    if (a.is_new != b.is_new || a.removals.size() != b.removals.size())
        return false;
    for (std::size_t i = 0; i < a.removals.size(); ++i) {
        const auto &x = a.removals[i], &y = b.removals[i];
        if (x.index != y.index || x.removed != y.removed || x.kind != y.kind ||
            x.truant != y.truant)
            return false;
    }
    return true;
}

} // namespace

TEST_CASE("verdict JSON round-trips") {
    GonalSet tri(3, false);
    for (auto coeffs : {std::vector<int64_t>{3, 4, 5, 6},
                        std::vector<int64_t>{3, 3, 4, 5},
                        std::vector<int64_t>{4, 5, 6, 7, 8}}) {
        FormVector a(coeffs);
        Verdict v = verify_tight(a, tri, a.min(), 20000);
        Verdict back = verdict_from_json(to_json(v));
        CHECK(same_verdict(v, back));
        // and the serialization itself is stable
        CHECK(to_json(v).dump() == to_json(back).dump());
    }
}

TEST_CASE("certificate JSON round-trips") {
    GonalSet gp7(7, true);
    auto [vec, cert] = construct_scaled_base(2, 0, 4, gp7, 11);
    Certificate back = certificate_from_json(to_json(cert));
    CHECK(back.kind == CertificateKind::ScaledBase);
    CHECK(back.e1 == cert.e1);
    CHECK(back.e3 == cert.e3);
    CHECK(back.vector == cert.vector);
    CHECK(validate_certificate(back, gp7));
}

TEST_CASE("newness JSON round-trips") {
    GonalSet tri(3, false);
    for (auto coeffs : {std::vector<int64_t>{3, 3, 4, 5},
                        std::vector<int64_t>{3, 3, 4, 5, 6}}) {
        NewnessReport r = is_new(FormVector(coeffs), tri, 3, 20000);
        CHECK(same_newness(r, newness_from_json(to_json(r))));
    }
}

TEST_CASE("classification report JSON round-trips losslessly") {
    GonalSet tri(3, false);
    auto report = enumerate_new(tri, 3, 20000, default_depth_cap(3));
    Json j = to_json(report);
    ClassificationReport back = classification_from_json(j);
    CHECK(to_json(back).dump(2) == j.dump(2));
    CHECK(back.vectors.size() == report.vectors.size());
    for (std::size_t i = 0; i < back.vectors.size(); ++i) {
        CHECK(back.vectors[i].vec == report.vectors[i].vec);
        CHECK(same_verdict(back.vectors[i].verdict, report.vectors[i].verdict));
        CHECK(same_newness(back.vectors[i].newness, report.vectors[i].newness));
    }
}
