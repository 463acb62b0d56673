// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>

#include "twb/cli.hpp"

namespace {

using namespace twb;
using io::json;
using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = false;
    std::string detail;
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt_seconds(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2fs", s);
    return buf;
}

const std::vector<std::uint64_t> kModuli{1, 2, 3, 4};
const std::vector<std::uint64_t> kXiOrders{1, 2, 3, 4, 9};
const std::vector<unsigned> kWeights{1, 2, 3};

json grid_json() {
    json xi = json::array();
    for (auto o : kXiOrders)
        xi.push_back(json{{"order", o}, {"exponent", o == 1 ? 0 : 1}});
    json base{{"d", kModuli}, {"character", "all"}, {"xi", xi}, {"w1", kWeights}, {"w2", kWeights}, {"m", {1, 2, 3}}};
    json grids = json::array();
    auto add = [&](std::vector<std::string> ids, unsigned n_max) {
        json g = base;
        g["identities"] = ids;
        g["n_max"] = n_max;
        if (ids.front() == "power_sum_series_check")
            g["order"] = 12;
        grids.push_back(std::move(g));
    };
    add({"eq_1_13", "remark_m1", "corollary2", "m1_numbers", "remark_2_11", "corollary4", "eq_2_12"}, 8);
    add({"theorem1", "theorem3"}, 6);
    add({"power_sum_series_check"}, 8);
    return json{{"command", "verify"}, {"grids", grids}};
}

std::vector<GridConfig> grids() {
    std::vector<GridConfig> out;
    const auto cfg = grid_json();
    for (std::size_t i = 0; i < cfg["grids"].size(); ++i)
        out.push_back(io::grid_from_json(cfg["grids"][i], "grids"));
    return out;
}

std::vector<Rational> classical_by_recurrence(std::size_t max_n) {
    std::vector<Rational> b{Rational(1)};
    for (std::size_t n = 1; n <= max_n; ++n) {
        Rational acc = 0;
        for (std::size_t j = 0; j < n; ++j)
            acc += Rational(binomial(n + 1, j)) * b[j];
        b.push_back(-acc / Rational(n + 1));
    }
    return b;
}

Outcome classical_reduction() {
    const auto t0 = Clock::now();
    const auto r = cli::run(json::parse(R"({"command": "compute-numbers", "character": {"modulus": 1, "kind": "principal"},
        "xi": {"order": 1, "exponent": 0}, "k": 1, "n_max": 10})"), {});
    const double secs = seconds_since(t0);
    if (r.exit_code != 0)
        return {false, "exit code " + std::to_string(r.exit_code)};
    const auto values = json::parse(r.output);
    const auto oracle = classical_by_recurrence(10);
    bool ok = values.size() == 11;
    for (std::size_t n = 0; ok && n <= 10; ++n)
        ok = io::rational_from_json(values[n], "n") == oracle[n];
    ok = ok && values[1] == "-1/2" && values[2] == "1/6" && values[4] == "-1/30";
    return {ok && secs < 1.0, "n <= 10 against recurrence, " + fmt_seconds(secs)};
}

Outcome identity_sweep(SweepResult& out) {
    Verifier v;
    const auto t0 = Clock::now();
    out = sweep(v, grids(), 1);
    const double secs = seconds_since(t0);
    std::size_t two_readings = 0, remark_reading_ok = 0, remark_total = 0, unweighted_holds = 0;
    std::size_t eq26_total = 0, eq26_holds = 0;
    for (const auto& rep : out.reports) {
        if (rep.tag == IdentityTag::Remark2_11) {
            ++remark_total;
            remark_reading_ok += rep.any_reading_holds() ? 1 : 0;
            two_readings += rep.readings.size() == 2 ? 1 : 0;
            unweighted_holds += rep.readings.size() == 2 && rep.readings[1].holds ? 1 : 0;
        }
        if (rep.tag == IdentityTag::Theorem1 && rep.readings.size() == 2) {
            ++eq26_total;
            eq26_holds += rep.readings[1].holds ? 1 : 0;
        }
    }
    const auto& s = out.summary;
    const bool ok = s.total > 0 && s.fails == 0 && s.holds == s.total && remark_reading_ok == remark_total &&
                    two_readings == remark_total && secs < 600.0;
    return {ok, std::to_string(s.holds) + "/" + std::to_string(s.total) + " hold, " + std::to_string(s.errors) +
                    " errors; remark_2_11 unweighted reading holds on " + std::to_string(unweighted_holds) + "/" +
                    std::to_string(remark_total) + "; theorem1 inner_twist_fixed reading holds on " +
                    std::to_string(eq26_holds) + "/" + std::to_string(eq26_total) + "; " + fmt_seconds(secs)};
}

Outcome coherence(const SweepResult& swept) {
    Verifier v;
    std::size_t total = 0, agree = 0;
    for (const auto& rep : swept.reports) {
        if ((rep.tag != IdentityTag::Theorem1 && rep.tag != IdentityTag::Theorem3) || rep.params.m != 1)
            continue;
        ++total;
        const auto c = rep.tag == IdentityTag::Theorem1 ? theorem1_vs_remark_m1(v, rep.params)
                                                        : theorem3_vs_remark_2_11(v, rep.params);
        agree += c.holds() ? 1 : 0;
    }
    return {total > 0 && agree == total, std::to_string(agree) + "/" + std::to_string(total) + " instances agree"};
}

Outcome volkenborn_convergence() {
    const auto t0 = Clock::now();
    std::size_t total = 0, passed = 0;
    bool closed_form = false;
    for (std::uint64_t p : {2u, 3u, 5u}) {
        const unsigned levels = p == 5 ? 5 : 7;
        std::vector<RootOfUnity> xis{RootOfUnity::one()};
        if (p <= 3)
            xis.emplace_back(p, 1);
        for (const auto& xi : xis) {
            for (unsigned n = 0; n <= 4; ++n) {
                const auto t = convergence_check(IntegrandSpec{principal(1), xi, n}, p, levels);
                ++total;
                passed += t.pass ? 1 : 0;
                if (p == 3 && n == 1 && xi.is_one()) {
                    closed_form = true;
                    for (unsigned i = 0; i < levels; ++i)
                        closed_form = closed_form && t.valuations[i] == Valuation(Rational(i + 1));
                }
            }
        }
    }
    const double secs = seconds_since(t0);
    return {passed == total && closed_form && secs < 120.0,
            std::to_string(passed) + "/" + std::to_string(total) + " traces pass; closed-form trace " +
                (closed_form ? "exact" : "wrong") + "; " + fmt_seconds(secs)};
}

Outcome galois() {
    std::size_t total = 0, ok = 0;
    for (std::uint64_t L : {3u, 4u, 9u}) {
        std::vector<DirichletCharacter> chars;
        for (std::uint64_t d : {1u, 2u, 3u, 4u, 5u, 7u, 9u})
            for (const auto& chi : enumerate_cyclic(d))
                if (field_contains_root(L, chi.value_order()))
                    chars.push_back(chi);
        for (const auto& chi : chars) {
            for (std::uint64_t e = 0; e < L; ++e) {
                const TwistSpec spec = make_twist(chi, RootOfUnity(L, static_cast<std::int64_t>(e)), L);
                for (unsigned k = 1; k <= 2; ++k) {
                    const auto base = numbers(spec, k, 6).numbers;
                    for (std::int64_t s = 1; s < static_cast<std::int64_t>(L); ++s) {
                        if (std::gcd<std::int64_t>(s, static_cast<std::int64_t>(L)) != 1)
                            continue;
                        const auto image = numbers(conjugate(spec, s), k, 6).numbers;
                        bool same = true;
                        for (std::size_t n = 0; n <= 6; ++n)
                            same = same && conjugate(base[n], s) == image[n];
                        ++total;
                        ok += same ? 1 : 0;
                    }
                }
            }
        }
    }
    return {total > 0 && ok == total, std::to_string(ok) + "/" + std::to_string(total) + " (chi, xi, k, s) cases"};
}

Outcome vanishing_head_property() {
    std::size_t total = 0, ok = 0;
    for (auto d : kModuli) {
        for (const auto& chi : enumerate_cyclic(d)) {
            for (auto o : kXiOrders) {
                const TwistSpec base = make_twist(chi, RootOfUnity(o, o == 1 ? 0 : 1));
                for (unsigned w : kWeights) {
                    const TwistSpec spec = with_xi_power(base, w);
                    if (spec.xi.pow(static_cast<std::int64_t>(d)).normalized().is_one())
                        continue;
                    for (unsigned k = 1; k <= 3; ++k) {
                        ++total;
                        ok += vanishing_head(spec, k, 12).holds ? 1 : 0;
                    }
                }
            }
        }
    }
    return {total > 0 && ok == total, std::to_string(ok) + "/" + std::to_string(total) + " (twist, k) cases"};
}

Outcome determinism() {
    const auto cfg = grid_json();
    const auto a = cli::run(cfg, {});
    const auto b = cli::run(cfg, {});
    const bool ok = a.exit_code == 0 && b.exit_code == 0 && !a.output.empty() && a.output == b.output;
    return {ok, std::to_string(a.output.size()) + " bytes, " + (a.output == b.output ? "identical" : "different")};
}

}  // namespace

int main() {
    int failures = 0;
    auto report = [&](int id, const char* name, const Outcome& o) {
        std::printf("%s %d %s: %s\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.c_str());
        std::fflush(stdout);
        failures += o.pass ? 0 : 1;
    };
    auto guarded = [](const std::function<Outcome()>& f) {
        try {
            return f();
        } catch (const std::exception& e) {
            return Outcome{false, std::string("exception: ") + e.what()};
        }
    };

    report(1, "classical reduction", guarded(classical_reduction));
    SweepResult swept;
    report(2, "identity sweep", guarded([&] { return identity_sweep(swept); }));
    report(3, "cross-checker coherence", guarded([&] { return coherence(swept); }));
    report(4, "volkenborn convergence", guarded(volkenborn_convergence));
    report(5, "galois equivariance", guarded(galois));
    report(6, "vanishing head", guarded(vanishing_head_property));
    report(7, "determinism", guarded(determinism));
    return failures == 0 ? 0 : 1;
}
