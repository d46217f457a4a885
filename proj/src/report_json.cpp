#include "tight/report_json.hpp"

namespace tight {

namespace {

std::string removal_kind_name(RemovalKind k) {
    switch (k) {
        case RemovalKind::Truant: return "truant";
        case RemovalKind::MinRaised: return "min_raised";
        case RemovalKind::StillTight: return "still_tight";
    }
    return "?";
}

RemovalKind removal_kind_from_name(const std::string& s) {
    if (s == "truant") return RemovalKind::Truant;
    if (s == "min_raised") return RemovalKind::MinRaised;
    if (s == "still_tight") return RemovalKind::StillTight;
    throw std::invalid_argument("bad removal kind: " + s);
}

} // namespace

std::string verdict_status_name(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::VerifiedUpTo: return "verified_up_to";
        case VerdictStatus::FailedAt: return "failed_at";
        case VerdictStatus::Certified: return "certified";
    }
    return "?";
}

VerdictStatus verdict_status_from_name(const std::string& name) {
    if (name == "verified_up_to") return VerdictStatus::VerifiedUpTo;
    if (name == "failed_at") return VerdictStatus::FailedAt;
    if (name == "certified") return VerdictStatus::Certified;
    throw std::invalid_argument("bad verdict status: " + name);
}

Json to_json(const Certificate& cert) {
    Json j;
    if (cert.kind == CertificateKind::BoundedCheck) {
        j["kind"] = "bounded_check";
        j["bound"] = cert.bound;
        j["n"] = cert.n;
        j["vector"] = cert.vector;
    } else {
        j["kind"] = "scaled_base";
        j["e1"] = cert.e1;
        j["e2"] = cert.e2;
        j["e3"] = cert.e3;
        j["base_bound"] = cert.base_bound;
        j["n"] = cert.n;
        j["vector"] = cert.vector;
    }
    return j;
}

Certificate certificate_from_json(const Json& j) {
    Certificate cert;
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "bounded_check") {
        cert.kind = CertificateKind::BoundedCheck;
        cert.bound = j.at("bound").get<int64_t>();
    } else if (kind == "scaled_base") {
        cert.kind = CertificateKind::ScaledBase;
        cert.e1 = j.at("e1").get<int64_t>();
        cert.e2 = j.at("e2").get<int64_t>();
        cert.e3 = j.at("e3").get<int64_t>();
        cert.base_bound = j.at("base_bound").get<int64_t>();
    } else {
        throw std::invalid_argument("bad certificate kind: " + kind);
    }
    cert.n = j.at("n").get<int64_t>();
    cert.vector = j.at("vector").get<std::vector<int64_t>>();
    return cert;
}

Json to_json(const Verdict& v) {
    Json j;
    j["status"] = verdict_status_name(v.status);
    j["bound"] = v.bound;
    if (v.truant) j["truant"] = *v.truant;
    if (v.status == VerdictStatus::FailedAt) j["low_violation"] = v.low_violation;
    if (v.certificate) j["certificate"] = to_json(*v.certificate);
    return j;
}

Verdict verdict_from_json(const Json& j) {
    Verdict v;
    v.status = verdict_status_from_name(j.at("status").get<std::string>());
    v.bound = j.at("bound").get<int64_t>();
    if (j.contains("truant")) v.truant = j.at("truant").get<int64_t>();
    if (j.contains("low_violation")) v.low_violation = j.at("low_violation").get<bool>();
    if (j.contains("certificate"))
        v.certificate = certificate_from_json(j.at("certificate"));
    return v;
}

Json to_json(const NewnessReport& r) {
    Json j;
    j["is_new"] = r.is_new;
    Json removals = Json::array();
    for (const auto& ev : r.removals) {
        Json e;
        e["index"] = ev.index;
        e["removed"] = ev.removed;
        e["kind"] = removal_kind_name(ev.kind);
        if (ev.truant) e["truant"] = *ev.truant;
        removals.push_back(std::move(e));
    }
    j["removals"] = std::move(removals);
    return j;
}

NewnessReport newness_from_json(const Json& j) {
    NewnessReport r;
    r.is_new = j.at("is_new").get<bool>();
    for (const auto& e : j.at("removals")) {
        RemovalEvidence ev;
        ev.index = e.at("index").get<std::size_t>();
        ev.removed = e.at("removed").get<int64_t>();
        ev.kind = removal_kind_from_name(e.at("kind").get<std::string>());
        if (e.contains("truant")) ev.truant = e.at("truant").get<int64_t>();
        r.removals.push_back(ev);
    }
    return r;
}

Json to_json(const ClassificationReport& r) {
    Json j;
    j["m"] = r.m;
    j["generalized"] = r.generalized;
    j["n"] = r.n;
    j["bound"] = r.bound;
    j["depth_cap"] = r.depth_cap;
    j["in_catalog"] = r.in_catalog;
    Json vectors = Json::array();
    for (const auto& cv : r.vectors) {
        Json v;
        v["coeffs"] = cv.vec.coeffs();
        v["verdict"] = to_json(cv.verdict);
        v["newness"] = to_json(cv.newness);
        vectors.push_back(std::move(v));
    }
    j["vectors"] = std::move(vectors);
    j["stats"] = Json{{"visited", r.stats.visited},
                      {"tight_nodes", r.stats.tight_nodes},
                      {"lookahead_prunes", r.stats.lookahead_prunes},
                      {"dead_prunes", r.stats.dead_prunes},
                      {"forced_child_prunes", r.stats.forced_child_prunes}};
    j["depth_cap_hit"] = r.depth_cap_hit;
    Json frontier = Json::array();
    for (const auto& f : r.frontier) frontier.push_back(f.coeffs());
    j["frontier"] = std::move(frontier);
    return j;
}

ClassificationReport classification_from_json(const Json& j) {
    ClassificationReport r;
    r.m = j.at("m").get<int64_t>();
    r.generalized = j.at("generalized").get<bool>();
    r.n = j.at("n").get<int64_t>();
    r.bound = j.at("bound").get<int64_t>();
    r.depth_cap = j.at("depth_cap").get<int64_t>();
    r.in_catalog = j.at("in_catalog").get<bool>();
    for (const auto& v : j.at("vectors")) {
        r.vectors.push_back(ClassifiedVector{
            FormVector(v.at("coeffs").get<std::vector<int64_t>>()),
            verdict_from_json(v.at("verdict")),
            newness_from_json(v.at("newness"))});
    }
    const auto& s = j.at("stats");
    r.stats.visited = s.at("visited").get<uint64_t>();
    r.stats.tight_nodes = s.at("tight_nodes").get<uint64_t>();
    r.stats.lookahead_prunes = s.at("lookahead_prunes").get<uint64_t>();
    r.stats.dead_prunes = s.at("dead_prunes").get<uint64_t>();
    r.stats.forced_child_prunes = s.at("forced_child_prunes").get<uint64_t>();
    r.depth_cap_hit = j.at("depth_cap_hit").get<bool>();
    for (const auto& f : j.at("frontier"))
        r.frontier.push_back(FormVector(f.get<std::vector<int64_t>>()));
    return r;
}

} // namespace tight
