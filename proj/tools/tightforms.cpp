// tightforms: representations of integers by (generalized) polygonal
// numbers, tight T(n)-universality verdicts, and exhaustive classification
// of new tight T(n)-universal coefficient vectors.
//
// Exit codes: 0 = ran to completion (mathematical negatives included),
// 1 = mismatch against the expected catalog or a nonempty counterexample
// list, 2 = usage error.

#include <CLI11.hpp>

#include <cstdio>
#include <functional>
#include <iostream>
#include <string>

#include "tight/classify.hpp"
#include "tight/oracles.hpp"
#include "tight/polygonal.hpp"
#include "tight/report_json.hpp"
#include "tight/sieve.hpp"
#include "tight/universality.hpp"

using namespace tight;

namespace {

struct Options {
    std::string format = "text";
    int threads = 1;
    uint64_t seed = 12345;
};

std::vector<int64_t> parse_coeffs(const std::string& s) {
    std::vector<int64_t> out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t next = s.find(',', pos);
        if (next == std::string::npos) next = s.size();
        out.push_back(std::stoll(s.substr(pos, next - pos)));
        pos = next + 1;
    }
    if (out.empty()) throw std::invalid_argument("empty coefficient list");
    return out;
}

void emit(const Options& opts, const Json& j, const std::string& text) {
    if (opts.format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

std::string join(const std::vector<int64_t>& v, const char* sep = ",") {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(v[i]);
    }
    return s;
}

int cmd_gonal_list(const Options& opts, int64_t m, bool gen, int64_t bound) {
    GonalSet S(m, gen);
    auto vals = S.values_up_to(bound);
    Json j{{"m", m}, {"generalized", gen}, {"bound", bound}, {"values", vals}};
    emit(opts, j, S.name() + " up to " + std::to_string(bound) + ": " +
                      join(vals, " ") + "\n");
    return 0;
}

int cmd_gonal_member(const Options& opts, int64_t m, bool gen, int64_t target) {
    GonalSet S(m, gen);
    auto idx = S.index_of(target);
    Json j{{"m", m}, {"generalized", gen}, {"n", target},
           {"member", idx.has_value()}};
    if (idx) j["index"] = *idx;
    std::string text = std::to_string(target) +
                       (idx ? " in " + S.name() + " at index " + std::to_string(*idx)
                            : " not in " + S.name()) +
                       "\n";
    emit(opts, j, text);
    return 0;
}

int cmd_repr_set(const Options& opts, int64_t m, bool gen,
                 const std::string& coeffs, int64_t bound, bool witnesses) {
    GonalSet S(m, gen);
    FormVector a(parse_coeffs(coeffs));
    ReprSet rs = repr_set(a, S, bound, witnesses);
    auto missing = rs.missing(0, bound);
    Json j{{"coeffs", a.coeffs()}, {"m", m}, {"generalized", gen},
           {"bound", bound}, {"missing", missing}};
    if (witnesses) {
        Json w = Json::object();
        for (int64_t g = 0; g <= bound; ++g)
            if (auto wit = rs.witness(g)) w[std::to_string(g)] = wit->indices;
        j["witnesses"] = std::move(w);
    }
    std::string text = "V_" + S.name() + a.to_string() + " on [0," +
                       std::to_string(bound) + "]: " +
                       std::to_string(missing.size()) + " missing";
    if (!missing.empty()) {
        text += ":";
        for (std::size_t i = 0; i < missing.size() && i < 50; ++i)
            text += " " + std::to_string(missing[i]);
        if (missing.size() > 50) text += " ...";
    }
    emit(opts, j, text + "\n");
    return 0;
}

int cmd_repr_witness(const Options& opts, int64_t m, bool gen,
                     const std::string& coeffs, int64_t target) {
    GonalSet S(m, gen);
    FormVector a(parse_coeffs(coeffs));
    auto w = find_witness(a, S, target);
    Json j{{"coeffs", a.coeffs()}, {"m", m}, {"generalized", gen},
           {"target", target}, {"found", w.has_value()}};
    if (w) j["indices"] = w->indices;
    emit(opts, j,
         w ? std::to_string(target) + " = " + a.to_string() + " at indices (" +
                 join(w->indices) + ")\n"
           : std::to_string(target) + " not represented\n");
    return 0;
}

int cmd_repr_truant(const Options& opts, int64_t m, bool gen,
                    const std::string& coeffs, int64_t n, int64_t bound) {
    GonalSet S(m, gen);
    FormVector a(parse_coeffs(coeffs));
    auto t = truant(a, S, n, bound);
    Json j{{"coeffs", a.coeffs()}, {"m", m}, {"generalized", gen}, {"n", n},
           {"bound", bound}};
    j["truant"] = t ? Json(*t) : Json(nullptr);
    emit(opts, j,
         t ? std::to_string(*t) + "\n"
           : "none (all of [" + std::to_string(n) + "," +
                 std::to_string(bound) + "] represented)\n");
    return 0;
}

std::string verdict_text(const FormVector& a, const Verdict& v) {
    std::string text = a.to_string() + ": ";
    switch (v.status) {
        case VerdictStatus::FailedAt:
            text += v.low_violation
                        ? "FailedAt " + std::to_string(*v.truant) +
                              " (represented value below n)"
                        : "FailedAt " + std::to_string(*v.truant);
            break;
        case VerdictStatus::VerifiedUpTo:
            text += "VerifiedUpTo " + std::to_string(v.bound);
            break;
        case VerdictStatus::Certified:
            text += "Certified (base 1^" + std::to_string(v.certificate->e1) +
                    " 2^" + std::to_string(v.certificate->e2) + " 3^" +
                    std::to_string(v.certificate->e3) + " checked to " +
                    std::to_string(v.certificate->base_bound) + ")";
            break;
    }
    return text + "\n";
}

int cmd_verify(const Options& opts, int64_t m, bool gen,
               const std::string& coeffs, int64_t n, int64_t bound,
               bool certify) {
    GonalSet S(m, gen);
    FormVector a(parse_coeffs(coeffs));
    Verdict v = verify_tight(a, S, n, bound);
    Json j{{"coeffs", a.coeffs()}, {"m", m}, {"generalized", gen}, {"n", n}};
    Json vj = to_json(v);
    for (auto& [k, val] : vj.items()) j[k] = val;
    std::string text = verdict_text(a, v);
    if (certify && v.certificate) {
        if (validate_certificate(*v.certificate, S))
            text += "certificate re-validated\n";
        else
            text += "certificate FAILED re-validation\n";
    }
    emit(opts, j, text);
    if (certify && v.certificate && !validate_certificate(*v.certificate, S))
        return 1;
    return 0;
}

int cmd_new(const Options& opts, int64_t m, bool gen, const std::string& coeffs,
            int64_t n, int64_t bound) {
    GonalSet S(m, gen);
    FormVector a(parse_coeffs(coeffs));
    Verdict v = verify_tight(a, S, n, bound);
    Json j{{"coeffs", a.coeffs()}, {"m", m}, {"generalized", gen}, {"n", n},
           {"bound", bound}, {"verdict", to_json(v)}};
    if (!v.passed()) {
        j["is_new"] = false;
        j["note"] = "not tight, newness not applicable";
        emit(opts, j, verdict_text(a, v));
        return 0;
    }
    NewnessReport r = is_new(a, S, n, bound);
    Json nj = to_json(r);
    for (auto& [k, val] : nj.items()) j[k] = val;
    std::string text = a.to_string() + (r.is_new ? ": new" : ": not new") + "\n";
    for (const auto& ev : r.removals) {
        text += "  drop a_" + std::to_string(ev.index + 1) + " = " +
                std::to_string(ev.removed) + ": ";
        switch (ev.kind) {
            case RemovalKind::Truant:
                text += "truant " + std::to_string(*ev.truant);
                break;
            case RemovalKind::MinRaised: text += "minimum raised"; break;
            case RemovalKind::StillTight: text += "still tight"; break;
        }
        text += "\n";
    }
    emit(opts, j, text);
    return 0;
}

int cmd_classify(const Options& opts, int64_t m, bool gen, int64_t n,
                 int64_t bound, int64_t depth_cap, bool diff_paper) {
    GonalSet S(m, gen);
    if (depth_cap == 0) depth_cap = default_depth_cap(n);
    ClassificationReport report =
        enumerate_new(S, n, bound, depth_cap, opts.threads);

    std::string text = S.name() + ", n = " + std::to_string(n) + ", bound " +
                       std::to_string(bound) + ": " +
                       std::to_string(report.vectors.size()) +
                       " new tight form(s)\n";
    for (const auto& cv : report.vectors)
        text += "  " + verdict_text(cv.vec, cv.verdict);
    if (report.depth_cap_hit) {
        text += "DEPTH CAP HIT: unfinished branches remain:\n";
        for (const auto& f : report.frontier) text += "  " + f.to_string() + "\n";
    }
    if (!report.in_catalog)
        text += "note: outside the published classification ranges "
                "(exploratory output)\n";

    int rc = 0;
    Json j = to_json(report);
    if (diff_paper) {
        std::vector<FormVector> expected = expected_results(m, gen, n);
        std::vector<FormVector> got;
        for (const auto& cv : report.vectors) got.push_back(cv.vec);
        Json diff = Json::object();
        Json missing = Json::array(), extra = Json::array();
        for (const auto& e : expected)
            if (std::find(got.begin(), got.end(), e) == got.end())
                missing.push_back(e.coeffs());
        for (const auto& g : got)
            if (std::find(expected.begin(), expected.end(), g) == expected.end())
                extra.push_back(g.coeffs());
        bool clean = missing.empty() && extra.empty() && !report.depth_cap_hit;
        diff["matches"] = clean;
        diff["missing"] = std::move(missing);
        diff["extra"] = std::move(extra);
        j["diff"] = std::move(diff);
        text += clean ? "matches the expected classification\n"
                      : "MISMATCH against the expected classification\n";
        if (!clean) rc = 1;
    }
    emit(opts, j, text);
    return rc;
}

int report_counterexamples(const Options& opts, const std::string& check,
                           int64_t bound, const std::vector<int64_t>& bad) {
    Json j{{"check", check}, {"bound", bound}, {"counterexamples", bad}};
    emit(opts, j,
         check + " up to " + std::to_string(bound) + ": " +
             (bad.empty() ? "no counterexamples\n"
                          : std::to_string(bad.size()) +
                                " counterexample(s), first " +
                                std::to_string(bad.front()) + "\n"));
    return bad.empty() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"representations by (generalized) polygonal numbers and "
                 "tight universality classification"};
    app.require_subcommand(1);

    Options opts;
    app.add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--threads", opts.threads, "worker threads for classify")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--seed", opts.seed, "seed for randomized oracle trials")
        ->capture_default_str();

    std::function<int()> action;

    // ---- gonal ----
    auto* gonal = app.add_subcommand("gonal", "polygonal number sets");
    gonal->require_subcommand(1);
    {
        static int64_t m = 3, bound = 100, target = 0;
        static bool gen = false;
        auto* list = gonal->add_subcommand("list", "list members up to a bound");
        list->add_option("--m", m, "gonal order")->required()->check(CLI::Range(int64_t(3), int64_t(1) << 40));
        list->add_flag("--generalized", gen, "index over all integers");
        list->add_option("--bound", bound, "upper bound")->required();
        list->callback([&] { action = [&] { return cmd_gonal_list(opts, m, gen, bound); }; });

        auto* member = gonal->add_subcommand("member", "membership with witnessing index");
        member->add_option("--m", m, "gonal order")->required()->check(CLI::Range(int64_t(3), int64_t(1) << 40));
        member->add_flag("--generalized", gen, "index over all integers");
        member->add_option("N", target, "value to test")->required();
        member->callback([&] { action = [&] { return cmd_gonal_member(opts, m, gen, target); }; });
    }

    // ---- repr ----
    auto* repr = app.add_subcommand("repr", "bounded representation sets");
    repr->require_subcommand(1);
    {
        static int64_t m = 3, bound = 1000, target = 0, n = 1;
        static bool gen = false, witnesses = false;
        static std::string coeffs;

        auto* set = repr->add_subcommand("set", "exact representable set on [0,B]");
        set->add_option("--m", m)->required();
        set->add_flag("--generalized", gen);
        set->add_option("--coeffs", coeffs, "comma-separated coefficients")->required();
        set->add_option("--bound", bound)->required();
        set->add_flag("--witnesses", witnesses, "emit index assignments");
        set->callback([&] { action = [&] { return cmd_repr_set(opts, m, gen, coeffs, bound, witnesses); }; });

        auto* wit = repr->add_subcommand("witness", "one representation, lexicographically smallest");
        wit->add_option("--m", m)->required();
        wit->add_flag("--generalized", gen);
        wit->add_option("--coeffs", coeffs)->required();
        wit->add_option("--target", target)->required();
        wit->callback([&] { action = [&] { return cmd_repr_witness(opts, m, gen, coeffs, target); }; });

        auto* tru = repr->add_subcommand("truant", "smallest missed value in [n,B]");
        tru->add_option("--m", m)->required();
        tru->add_flag("--generalized", gen);
        tru->add_option("--coeffs", coeffs)->required();
        tru->add_option("--n", n)->required();
        tru->add_option("--bound", bound)->required();
        tru->callback([&] { action = [&] { return cmd_repr_truant(opts, m, gen, coeffs, n, bound); }; });
    }

    // ---- verify ----
    {
        static int64_t m = 3, n = 1, bound = kDefaultVerifyBound;
        static bool gen = false, certify = false;
        static std::string coeffs;
        auto* verify = app.add_subcommand("verify", "tight T(n)-universality verdict");
        verify->add_option("--m", m)->required();
        verify->add_flag("--generalized", gen);
        verify->add_option("--coeffs", coeffs)->required();
        verify->add_option("--n", n)->required();
        verify->add_option("--bound", bound)->capture_default_str();
        verify->add_flag("--certify", certify, "re-validate any certificate");
        verify->callback([&] { action = [&] { return cmd_verify(opts, m, gen, coeffs, n, bound, certify); }; });
    }

    // ---- new ----
    {
        static int64_t m = 3, n = 1, bound = kDefaultVerifyBound;
        static bool gen = false;
        static std::string coeffs;
        auto* newcmd = app.add_subcommand("new", "newness report for a tight vector");
        newcmd->add_option("--m", m)->required();
        newcmd->add_flag("--generalized", gen);
        newcmd->add_option("--coeffs", coeffs)->required();
        newcmd->add_option("--n", n)->required();
        newcmd->add_option("--bound", bound)->capture_default_str();
        newcmd->callback([&] { action = [&] { return cmd_new(opts, m, gen, coeffs, n, bound); }; });
    }

    // ---- classify ----
    {
        static int64_t m = 3, n = 1, bound = kDefaultVerifyBound, depth_cap = 0;
        static bool gen = false, sums = false, diff_paper = false;
        auto* classify = app.add_subcommand("classify", "enumerate all new tight forms");
        classify->add_option("--m", m)->required();
        auto* gflag = classify->add_flag("--generalized", gen, "use the generalized set");
        classify->add_flag("--sums", sums, "use the ordinary set (default)")->excludes(gflag);
        classify->add_option("--n", n)->required();
        classify->add_option("--bound", bound)->capture_default_str();
        classify->add_option("--depth-cap", depth_cap, "max vector length (default 2n+4)");
        classify->add_flag("--diff-paper", diff_paper,
                           "compare against the published classification; "
                           "exit 1 on any mismatch");
        classify->callback([&] { action = [&] { return cmd_classify(opts, m, gen, n, bound, depth_cap, diff_paper); }; });
    }

    // ---- oracle ----
    auto* oracle = app.add_subcommand("oracle", "brute-force fact checkers");
    oracle->require_subcommand(1);
    {
        static int64_t bound = 100000, k = 1, p = 3, nmax = 2000;
        static int trials = 10000;
        static std::string preset, name, which;

        auto* residue = oracle->add_subcommand("residue", "ternary residue-class claims");
        residue->add_option("--preset", preset, "p113 | p223 | p334AB")->required();
        residue->add_option("--bound", bound)->capture_default_str();
        residue->callback([&] {
            action = [&] {
                return report_counterexamples(
                    opts, preset, bound,
                    check_residue_claim(residue_preset_from_name(preset), bound));
            };
        });

        auto* f346 = oracle->add_subcommand("f346", "3x^2+4y^2+6z^2 representability");
        f346->add_option("--bound", bound)->capture_default_str();
        f346->callback([&] {
            action = [&] {
                return report_counterexamples(opts, "f346", bound, check_346(bound));
            };
        });

        auto* jones = oracle->add_subcommand("jones", "coprime-solution lemma for x^2+ky^2");
        jones->add_option("--k", k)->required();
        jones->add_option("--p", p)->required();
        jones->add_option("--nmax", nmax)->capture_default_str();
        jones->callback([&] {
            action = [&] {
                std::vector<int64_t> bad;
                for (int64_t target = 1; target <= nmax; ++target)
                    if (!jones_check(k, p, target)) bad.push_back(target);
                return report_counterexamples(
                    opts, "jones(k=" + std::to_string(k) + ",p=" + std::to_string(p) + ")",
                    nmax, bad);
            };
        });

        auto* identity = oracle->add_subcommand("identity", "polynomial identity spot checks");
        identity->add_option("--name", name, "id-346-case9 | id-346-case1 | id-468")->required();
        identity->add_option("--trials", trials)->capture_default_str();
        identity->callback([&] {
            action = [&] {
                bool ok = identity_check(identity_from_name(name), trials, opts.seed);
                Json j{{"check", name}, {"trials", trials}, {"seed", opts.seed}, {"holds", ok}};
                emit(opts, j, name + ": " + (ok ? "holds" : "FAILS") + " on " +
                                  std::to_string(trials) + " trials\n");
                return ok ? 0 : 1;
            };
        });

        auto* dselect = oracle->add_subcommand("dselect", "odd-scalar selection tables");
        dselect->add_option("--which", which, "x3 | y3")->required()
            ->check(CLI::IsMember({"x3", "y3"}));
        dselect->add_option("--bound", bound)->capture_default_str();
        dselect->callback([&] {
            action = [&] {
                auto w = which == "x3" ? DSelect::X3 : DSelect::Y3;
                return report_counterexamples(opts, "dselect-" + which, bound,
                                              check_dselect(w, bound));
            };
        });
    }

    // global flags may appear after the subcommand
    std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
        for (CLI::App* sub : a->get_subcommands([](const CLI::App*) { return true; })) {
            sub->fallthrough();
            enable_fallthrough(sub);
        }
    };
    enable_fallthrough(&app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        return action ? action() : 2;
    } catch (const OutOfCatalog& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const HypothesisFailed& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
