#include "twb/cli.hpp"

#include <sstream>

#include "twb/errors.hpp"

namespace twb::cli {

using io::ConfigError;
using io::json;

namespace {

void allow_keys(const json& j, std::initializer_list<std::string_view> allowed) {
    for (const auto& [name, value] : j.items()) {
        bool ok = false;
        for (auto a : allowed)
            ok = ok || a == name;
        if (!ok)
            throw ConfigError(name, "unknown key");
    }
}

unsigned get_unsigned(const json& cfg, const std::string& key, std::optional<unsigned> fallback = std::nullopt) {
    if (!cfg.contains(key)) {
        if (fallback)
            return *fallback;
        throw ConfigError(key, "missing");
    }
    const auto& v = cfg[key];
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0 || v.get<std::int64_t>() > 1'000'000)
        throw ConfigError(key, "expected a nonnegative integer");
    return v.get<unsigned>();
}

std::vector<unsigned> get_unsigned_list(const json& cfg, const std::string& key) {
    const auto& v = cfg[key];
    std::vector<unsigned> out;
    if (v.is_array()) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            json one{{"v", v[i]}};
            try {
                out.push_back(get_unsigned(one, "v"));
            } catch (const ConfigError&) {
                throw ConfigError(key + "[" + std::to_string(i) + "]", "expected a nonnegative integer");
            }
        }
        return out;
    }
    return {get_unsigned(cfg, key)};
}

DirichletCharacter get_character(const json& cfg) {
    if (!cfg.contains("character"))
        return principal(1);
    return io::character_from_json(cfg["character"], "character");
}

RootOfUnity get_xi(const json& cfg) {
    if (!cfg.contains("xi"))
        return RootOfUnity::one();
    return io::root_from_json(cfg["xi"], "xi");
}

TwistSpec get_twist(const json& cfg) {
    const auto chi = get_character(cfg);
    const auto xi = get_xi(cfg);
    try {
        return make_twist(chi, xi);
    } catch (const MathError& e) {
        throw ConfigError("xi", e.what());
    }
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

std::string csv_value(const json& j) { return csv_field(j.is_string() ? j.get<std::string>() : j.dump()); }

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------

RunResult compute_numbers(const json& cfg, Format format) {
    allow_keys(cfg, {"command", "output", "format", "character", "xi", "k", "n_max"});
    const auto spec = get_twist(cfg);
    const unsigned k = get_unsigned(cfg, "k", 1u);
    const unsigned n_max = get_unsigned(cfg, "n_max");
    const auto fam = numbers(spec, k, n_max);
    RunResult r;
    if (format == Format::Csv) {
        std::ostringstream os;
        os << "n,value\n";
        for (unsigned n = 0; n <= n_max; ++n)
            os << n << "," << csv_value(io::to_json(fam.numbers[n])) << "\n";
        r.output = os.str();
    } else {
        json out = json::array();
        for (unsigned n = 0; n <= n_max; ++n)
            out.push_back(io::to_json(fam.numbers[n]));
        r.output = dump(out);
    }
    return r;
}

RunResult compute_polynomial(const json& cfg, Format format) {
    allow_keys(cfg, {"command", "output", "format", "character", "xi", "k", "n"});
    if (format == Format::Csv)
        throw ConfigError("format", "polynomials are emitted as JSON only");
    const auto spec = get_twist(cfg);
    const unsigned k = get_unsigned(cfg, "k", 1u);
    const unsigned n = get_unsigned(cfg, "n");
    RunResult r;
    r.output = dump(io::to_json(polynomial(spec, k, n)));
    return r;
}

RunResult compute_power_sum(const json& cfg, Format format) {
    allow_keys(cfg, {"command", "output", "format", "character", "xi", "k", "n"});
    const auto spec = get_twist(cfg);
    const unsigned k = get_unsigned(cfg, "k");
    const unsigned n = get_unsigned(cfg, "n");
    const auto value = io::to_json(power_sum(spec, k, n));
    RunResult r;
    if (format == Format::Csv)
        r.output = "k,n,value\n" + std::to_string(k) + "," + std::to_string(n) + "," + csv_value(value) + "\n";
    else
        r.output = dump(json{{"k", k}, {"n", n}, {"value", value}});
    return r;
}

std::string params_csv(const IdentityReport& rep) {
    const auto& p = rep.params;
    std::ostringstream os;
    os << tag_name(rep.tag) << "," << p.chi.modulus() << "," << csv_field(p.chi_label) << "," << p.xi.order() << ","
       << p.xi.exponent() << "," << p.n << "," << p.m << "," << p.k << "," << p.w1 << "," << p.w2 << "," << p.order;
    return os.str();
}

RunResult verify(const json& cfg, Format format, unsigned jobs) {
    allow_keys(cfg, {"command", "output", "format", "grid", "grids"});
    std::vector<GridConfig> grids;
    if (cfg.contains("grid"))
        grids.push_back(io::grid_from_json(cfg["grid"], "grid"));
    if (cfg.contains("grids")) {
        const auto& gs = cfg["grids"];
        if (!gs.is_array())
            throw ConfigError("grids", "expected a list");
        for (std::size_t i = 0; i < gs.size(); ++i)
            grids.push_back(io::grid_from_json(gs[i], "grids[" + std::to_string(i) + "]"));
    }
    Verifier verifier;
    SweepResult res;
    try {
        res = sweep(verifier, grids, jobs);
    } catch (const MathError& e) {
        throw ConfigError(cfg.contains("grid") ? "grid.character" : "grids", e.what());
    }

    RunResult r;
    std::ostringstream diag;
    for (const auto& rep : res.reports)
        if (!rep.holds)
            diag << "FAIL " << io::to_json(rep).dump() << "\n";
    r.diagnostics = diag.str();
    r.exit_code = res.summary.fails == 0 ? 0 : 1;

    if (format == Format::Csv) {
        std::ostringstream os;
        os << "identity,d,chi,xi_order,xi_exponent,n,m,k,w1,w2,order,holds,readings_holding,error\n";
        for (const auto& rep : res.reports) {
            std::size_t holding = 0;
            for (const auto& rd : rep.readings)
                holding += rd.holds ? 1 : 0;
            os << params_csv(rep) << "," << (rep.holds ? "true" : "false") << "," << holding << "/"
               << rep.readings.size() << "," << csv_field(rep.error) << "\n";
        }
        r.output = os.str();
    } else {
        json reports = json::array();
        for (const auto& rep : res.reports)
            reports.push_back(io::to_json(rep));
        r.output = dump(json{{"summary", io::to_json(res.summary)}, {"reports", std::move(reports)}});
    }
    return r;
}

RunResult volkenborn(const json& cfg, Format format) {
    allow_keys(cfg, {"command", "output", "format", "p", "character", "xi", "n", "n_max", "levels", "shift"});
    if (!cfg.contains("p"))
        throw ConfigError("p", "missing");
    const auto primes = get_unsigned_list(cfg, "p");
    const auto chi = get_character(cfg);
    std::vector<RootOfUnity> xis{RootOfUnity::one()};
    if (cfg.contains("xi")) {
        xis.clear();
        const auto& x = cfg["xi"];
        if (x.is_array()) {
            for (std::size_t i = 0; i < x.size(); ++i)
                xis.push_back(io::root_from_json(x[i], "xi[" + std::to_string(i) + "]"));
        } else {
            xis.push_back(io::root_from_json(x, "xi"));
        }
    }
    std::vector<unsigned> moments;
    if (cfg.contains("n"))
        moments = get_unsigned_list(cfg, "n");
    else
        for (unsigned n = 0; n <= get_unsigned(cfg, "n_max", 4u); ++n)
            moments.push_back(n);
    const std::optional<unsigned> levels =
        cfg.contains("levels") ? std::optional<unsigned>(get_unsigned(cfg, "levels")) : std::nullopt;
    // 0: convergence traces; otherwise shift-identity traces
    const unsigned shift = cfg.contains("shift") ? get_unsigned(cfg, "shift") : 0;
    if (cfg.contains("shift") && shift == 0)
        throw ConfigError("shift", "must be positive");

    json traces = json::array();
    std::ostringstream csv;
    csv << "p,xi_order,xi_exponent,n,level,valuation,pass\n";
    std::size_t passed = 0, total = 0;
    for (const auto p : primes) {
        // Finer levels cost d p^N terms; the default depth shrinks with p.
        const unsigned depth = levels ? *levels : (p <= 3 ? 7u : 5u);
        for (const auto& xi : xis) {
            for (const auto n : moments) {
                const IntegrandSpec spec{chi, xi, n};
                json records = json::array();
                bool pass = false;
                std::vector<std::pair<unsigned, Valuation>> rows;
                try {
                    if (shift != 0) {
                        const auto t = shift_identity_trace(spec, p, shift, depth);
                        for (const auto& s : t.steps) {
                            rows.emplace_back(s.level, s.valuation);
                            records.push_back(json{{"p", p},
                                                   {"level", s.level},
                                                   {"valuation", io::to_json(s.valuation)},
                                                   {"discrepancy", io::to_json(s.discrepancy)}});
                        }
                        pass = t.pass;
                    } else {
                        const auto t = convergence_check(spec, p, depth);
                        for (std::size_t i = 0; i < t.levels.size(); ++i) {
                            rows.emplace_back(t.levels[i], t.valuations[i]);
                            records.push_back(json{
                                {"p", p}, {"level", t.levels[i]}, {"valuation", io::to_json(t.valuations[i])}});
                        }
                        pass = t.pass;
                    }
                } catch (const MathError& e) {
                    throw ConfigError(e.code() == Errc::UnsupportedField ? "xi" : "levels", e.what());
                }
                ++total;
                passed += pass ? 1 : 0;
                traces.push_back(json{{"p", p},
                                      {"xi", io::to_json(xi)},
                                      {"n", n},
                                      {"pass", pass},
                                      {"records", std::move(records)}});
                for (const auto& [level, val] : rows)
                    csv << p << "," << xi.order() << "," << xi.exponent() << "," << n << "," << level << ","
                        << io::to_json(val).get<std::string>() << "," << (pass ? "true" : "false") << "\n";
            }
        }
    }
    RunResult r;
    r.exit_code = passed == total ? 0 : 1;
    const json summary{{"total", total}, {"pass", passed}, {"fail", total - passed}};
    r.output = format == Format::Csv ? csv.str() : dump(json{{"summary", summary}, {"traces", std::move(traces)}});
    return r;
}

Format parse_format(const json& v) {
    if (v.is_string() && v.get<std::string>() == "json")
        return Format::Json;
    if (v.is_string() && v.get<std::string>() == "csv")
        return Format::Csv;
    throw ConfigError("format", "expected \"json\" or \"csv\"");
}

}  // namespace

RunResult run(const json& config, const RunOptions& options) {
    try {
        if (!config.is_object())
            throw ConfigError("<config>", "expected a JSON object");
        if (!config.contains("command") || !config["command"].is_string())
            throw ConfigError("command", "missing or not a string");
        Format format = Format::Json;
        if (config.contains("format"))
            format = parse_format(config["format"]);
        if (options.format)
            format = *options.format;
        std::optional<std::string> out_path;
        if (config.contains("output")) {
            if (!config["output"].is_string())
                throw ConfigError("output", "expected a path");
            out_path = config["output"].get<std::string>();
        }
        const auto command = config["command"].get<std::string>();
        RunResult r;
        if (command == "compute-numbers")
            r = compute_numbers(config, format);
        else if (command == "compute-polynomial")
            r = compute_polynomial(config, format);
        else if (command == "power-sum")
            r = compute_power_sum(config, format);
        else if (command == "verify")
            r = verify(config, format, std::max(1u, options.jobs));
        else if (command == "volkenborn")
            r = volkenborn(config, format);
        else
            throw ConfigError("command", "unknown command '" + command + "'");
        r.out_path = out_path;
        return r;
    } catch (const ConfigError& e) {
        RunResult r;
        r.exit_code = 2;
        r.diagnostics = "config error at '" + e.key() + "': " + e.what() + "\n";
        return r;
    } catch (const MathError& e) {
        RunResult r;
        r.exit_code = 2;
        r.diagnostics = std::string("config error at 'command': ") + e.what() + "\n";
        return r;
    }
}

RunResult run_text(const std::string& config_text, const RunOptions& options) {
    json config;
    try {
        config = json::parse(config_text);
    } catch (const json::parse_error& e) {
        RunResult r;
        r.exit_code = 2;
        r.diagnostics = std::string("config error at '<config>': ") + e.what() + "\n";
        return r;
    }
    return run(config, options);
}

}  // namespace twb::cli
