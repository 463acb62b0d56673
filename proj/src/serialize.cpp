#include "twb/serialize.hpp"


#include "twb/errors.hpp"

namespace twb::io {

ConfigError::ConfigError(std::string key, const std::string& what)
    : std::runtime_error(what), key_(std::move(key)) {}

namespace {

std::string sub(const std::string& key, std::string_view child) {
    return key.empty() ? std::string(child) : key + "." + std::string(child);
}

std::string sub(const std::string& key, std::size_t index) { return key + "[" + std::to_string(index) + "]"; }

void allow_keys(const json& j, const std::string& key, std::initializer_list<std::string_view> allowed) {
    if (!j.is_object())
        throw ConfigError(key, "expected an object");
    for (const auto& [name, value] : j.items()) {
        bool ok = false;
        for (auto a : allowed)
            ok = ok || a == name;
        if (!ok)
            throw ConfigError(sub(key, name), "unknown key");
    }
}

std::uint64_t unsigned_from_json(const json& j, const std::string& key) {
    if (!j.is_number_integer() || j.get<std::int64_t>() < 0)
        throw ConfigError(key, "expected a nonnegative integer");
    return j.get<std::uint64_t>();
}

std::int64_t integer_from_json(const json& j, const std::string& key) {
    if (!j.is_number_integer())
        throw ConfigError(key, "expected an integer");
    return j.get<std::int64_t>();
}

template <class T, class F>
std::vector<T> list_from_json(const json& j, const std::string& key, F&& one, bool scalar_ok = true) {
    std::vector<T> out;
    if (!j.is_array()) {
        if (!scalar_ok)
            throw ConfigError(key, "expected a list");
        out.push_back(one(j, key));
        return out;
    }
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(one(j[i], sub(key, i)));
    return out;
}

std::vector<unsigned> unsigned_list(const json& j, const std::string& key, unsigned min = 0) {
    return list_from_json<unsigned>(j, key, [min](const json& e, const std::string& k) {
        const auto v = unsigned_from_json(e, k);
        if (v < min || v > 1'000'000)
            throw ConfigError(k, "value out of range");
        return static_cast<unsigned>(v);
    });
}

std::optional<Location> location_or_null(const Reading& r) { return r.mismatch; }

json location_json(const std::optional<Location>& loc) {
    if (!loc)
        return nullptr;
    return json{{"x", loc->x}, {"y", loc->y}};
}

bool uses_m(IdentityTag t) {
    return t == IdentityTag::Theorem1 || t == IdentityTag::Corollary2 || t == IdentityTag::Theorem3 ||
           t == IdentityTag::Corollary4;
}

}  // namespace

// ---------------------------------------------------------------------------
// Output

json to_json(const Rational& q) { return to_string(q); }

json to_json(const CycloElem& e) {
    if (e.field()->conductor() == 1)
        return to_string(e.coeffs().empty() ? Rational(0) : e.coeffs()[0]);
    json coeffs = json::array();
    for (const auto& c : e.coeffs())
        coeffs.push_back(to_string(c));
    return json{{"conductor", e.field()->conductor()}, {"coeffs", std::move(coeffs)}};
}

json to_json(const CycloPoly& p) {
    json out = json::array();
    for (const auto& c : p.coeffs())
        out.push_back(to_json(c));
    return out;
}

json to_json(const BivariatePoly& p) {
    json out = json::array();
    for (const auto& row : p.rows()) {
        json r = json::array();
        for (const auto& c : row)
            r.push_back(to_json(c));
        out.push_back(std::move(r));
    }
    return out;
}

json to_json(const RootOfUnity& r) { return json{{"order", r.order()}, {"exponent", r.exponent()}}; }

json to_json(const DirichletCharacter& chi) {
    json values = json::array();
    for (const auto& v : chi.values())
        values.push_back(v ? to_json(*v) : json(nullptr));
    return json{{"modulus", chi.modulus()}, {"values", std::move(values)}};
}

json to_json(const Side& s) {
    return std::visit([](const auto& v) { return to_json(v); }, s);
}

json to_json(const IdentityReport& r) {
    const auto& p = r.params;
    json params{{"d", p.chi.modulus()}, {"chi", p.chi_label}, {"xi", to_json(p.xi)}, {"n", p.n}};
    switch (r.tag) {
    case IdentityTag::Eq1_13:
        params["k"] = p.k;
        break;
    case IdentityTag::PowerSumSeries:
        params["order"] = p.order;
        break;
    default:
        params["w1"] = p.w1;
        params["w2"] = p.w2;
        if (uses_m(r.tag))
            params["m"] = p.m;
    }
    json out{{"identity", std::string(tag_name(r.tag))}, {"params", std::move(params)}, {"holds", r.holds}};
    if (!r.error.empty()) {
        out["error"] = r.error;
        return out;
    }
    out["lhs"] = to_json(r.lhs);
    out["rhs"] = to_json(r.rhs);
    out["mismatch"] = location_json(r.mismatch);
    if (r.readings.size() > 1) {
        json readings = json::array();
        for (const auto& rd : r.readings) {
            json one{{"name", rd.name}, {"holds", rd.holds}, {"mismatch", location_json(location_or_null(rd))}};
            if (&rd != &r.readings.front()) {
                one["lhs"] = to_json(rd.lhs);
                one["rhs"] = to_json(rd.rhs);
            }
            readings.push_back(std::move(one));
        }
        out["readings"] = std::move(readings);
    }
    return out;
}

json to_json(const SweepSummary& s) {
    return json{{"total", s.total}, {"holds", s.holds}, {"fails", s.fails}, {"errors", s.errors}};
}

json to_json(const Valuation& v) { return v ? json(to_string(*v)) : json("inf"); }

// ---------------------------------------------------------------------------
// Input

Rational rational_from_json(const json& j, const std::string& key) {
    if (j.is_number_integer())
        return Rational(Integer(std::to_string(j.get<std::int64_t>())));
    if (!j.is_string())
        throw ConfigError(key, "expected a \"num/den\" string");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const MathError& e) {
        throw ConfigError(key, e.what());
    }
}

CycloElem elem_from_json(const json& j, const std::string& key) {
    if (!j.is_object())
        return CycloElem(CycloField::rationals(), rational_from_json(j, key));
    allow_keys(j, key, {"conductor", "coeffs"});
    if (!j.contains("conductor") || !j.contains("coeffs"))
        throw ConfigError(key, "needs conductor and coeffs");
    const auto m = unsigned_from_json(j["conductor"], sub(key, "conductor"));
    if (m == 0 || m > 100'000)
        throw ConfigError(sub(key, "conductor"), "conductor out of range");
    const auto field = CycloField::get(m);
    const auto& cj = j["coeffs"];
    if (!cj.is_array() || cj.size() > field->degree())
        throw ConfigError(sub(key, "coeffs"), "expected at most " + std::to_string(field->degree()) + " coefficients");
    std::vector<Rational> c(field->degree());
    for (std::size_t i = 0; i < cj.size(); ++i)
        c[i] = rational_from_json(cj[i], sub(sub(key, "coeffs"), i));
    return CycloElem(field, std::move(c));
}

namespace {

CycloElem elem_in(const json& j, const FieldRef& field, const std::string& key) {
    const auto e = elem_from_json(j, key);
    if (e.field() == field)
        return e;
    if (e.is_rational())
        return CycloElem(field, e.rational_value());
    throw ConfigError(key, "element lies in a different field");
}

}  // namespace

CycloPoly poly_from_json(const json& j, const FieldRef& field, const std::string& key) {
    if (!j.is_array())
        throw ConfigError(key, "expected a list of coefficients");
    std::vector<CycloElem> c;
    for (std::size_t i = 0; i < j.size(); ++i)
        c.push_back(elem_in(j[i], field, sub(key, i)));
    return CycloPoly(field, std::move(c));
}

BivariatePoly bivariate_from_json(const json& j, const FieldRef& field, const std::string& key) {
    if (!j.is_array())
        throw ConfigError(key, "expected a list of rows");
    BivariatePoly out(field);
    const CycloPoly y_one = CycloPoly::constant(CycloElem(field, Rational(1)));
    for (std::size_t i = 0; i < j.size(); ++i) {
        const CycloPoly row = poly_from_json(j[i], field, sub(key, i));
        std::vector<CycloElem> xi(i + 1, CycloElem(field));
        xi[i] = CycloElem(field, Rational(1));
        // x^i * row(y)
        out += BivariatePoly::outer(CycloPoly(field, std::move(xi)), row);
    }
    return out;
}

RootOfUnity root_from_json(const json& j, const std::string& key) {
    allow_keys(j, key, {"order", "exponent"});
    if (!j.contains("order"))
        throw ConfigError(sub(key, "order"), "missing");
    const auto order = unsigned_from_json(j["order"], sub(key, "order"));
    if (order == 0 || order > 100'000)
        throw ConfigError(sub(key, "order"), "order out of range");
    const std::int64_t e = j.contains("exponent") ? integer_from_json(j["exponent"], sub(key, "exponent")) : 1;
    const auto o = static_cast<std::int64_t>(order);
    return RootOfUnity(order, ((e % o) + o) % o);
}

CharacterSelector selector_from_json(const json& j, const std::string& key) {
    CharacterSelector sel;
    if (j.is_string()) {
        if (j.get<std::string>() == "all")
            return sel;
        if (j.get<std::string>() == "principal") {
            sel.kind = CharacterSelector::Kind::Principal;
            return sel;
        }
        throw ConfigError(key, "expected \"all\", \"principal\" or a character object");
    }
    allow_keys(j, key, {"modulus", "kind", "values", "j"});
    if (!j.contains("kind") || !j["kind"].is_string())
        throw ConfigError(sub(key, "kind"), "missing or not a string");
    const auto kind = j["kind"].get<std::string>();
    if (kind == "all") {
        sel.kind = CharacterSelector::Kind::All;
    } else if (kind == "principal") {
        sel.kind = CharacterSelector::Kind::Principal;
    } else if (kind == "index") {
        sel.kind = CharacterSelector::Kind::Index;
        if (!j.contains("j"))
            throw ConfigError(sub(key, "j"), "missing");
        sel.index = unsigned_from_json(j["j"], sub(key, "j"));
    } else if (kind == "table") {
        sel.kind = CharacterSelector::Kind::Table;
        if (!j.contains("values") || !j["values"].is_array() || j["values"].empty())
            throw ConfigError(sub(key, "values"), "expected a nonempty list");
        for (std::size_t i = 0; i < j["values"].size(); ++i) {
            const auto& v = j["values"][i];
            if (v.is_null())
                sel.table.push_back(std::nullopt);
            else
                sel.table.push_back(root_from_json(v, sub(sub(key, "values"), i)));
        }
        if (j.contains("modulus") && unsigned_from_json(j["modulus"], sub(key, "modulus")) != sel.table.size())
            throw ConfigError(sub(key, "modulus"), "does not match the number of values");
    } else {
        throw ConfigError(sub(key, "kind"), "unknown kind '" + kind + "'");
    }
    if (j.contains("modulus") && sel.kind != CharacterSelector::Kind::Table)
        unsigned_from_json(j["modulus"], sub(key, "modulus"));
    return sel;
}

DirichletCharacter character_from_json(const json& j, const std::string& key, std::uint64_t modulus_hint) {
    const auto sel = selector_from_json(j, key);
    std::uint64_t d = modulus_hint;
    if (j.is_object() && j.contains("modulus"))
        d = j["modulus"].get<std::uint64_t>();
    if (d == 0 || d > 100'000)
        throw ConfigError(sub(key, "modulus"), "modulus out of range");
    try {
        switch (sel.kind) {
        case CharacterSelector::Kind::All:
            throw ConfigError(key, "a single character is required here");
        case CharacterSelector::Kind::Principal:
            return principal(d);
        case CharacterSelector::Kind::Table:
            return from_table(sel.table.size(), sel.table);
        case CharacterSelector::Kind::Index: {
            const auto all = enumerate_cyclic(d);
            if (sel.index >= all.size())
                throw ConfigError(sub(key, "j"), "index out of range");
            return all[sel.index];
        }
        }
    } catch (const MathError& e) {
        throw ConfigError(key, e.what());
    }
    throw ConfigError(key, "invalid character");
}

GridConfig grid_from_json(const json& j, const std::string& key) {
    allow_keys(j, key, {"identity", "identities", "d", "character", "xi", "w1", "w2", "m", "n_max", "n", "k", "order"});
    GridConfig g;
    for (const char* name : {"identity", "identities"}) {
        if (!j.contains(name))
            continue;
        auto tags = list_from_json<IdentityTag>(j[name], sub(key, name), [](const json& e, const std::string& k) {
            if (!e.is_string())
                throw ConfigError(k, "expected an identity name");
            const auto t = parse_tag(e.get<std::string>());
            if (!t)
                throw ConfigError(k, "unknown identity '" + e.get<std::string>() + "'");
            return *t;
        });
        g.identities.insert(g.identities.end(), tags.begin(), tags.end());
    }
    if (j.contains("d")) {
        g.d.clear();
        for (auto v : unsigned_list(j["d"], sub(key, "d"), 1))
            g.d.push_back(v);
    }
    if (j.contains("character"))
        g.character = selector_from_json(j["character"], sub(key, "character"));
    if (j.contains("xi"))
        g.xi = list_from_json<RootOfUnity>(j["xi"], sub(key, "xi"), root_from_json);
    if (j.contains("w1"))
        g.w1 = unsigned_list(j["w1"], sub(key, "w1"), 1);
    if (j.contains("w2"))
        g.w2 = unsigned_list(j["w2"], sub(key, "w2"), 1);
    if (j.contains("m"))
        g.m = unsigned_list(j["m"], sub(key, "m"), 1);
    if (j.contains("n_max"))
        g.n_max = static_cast<unsigned>(unsigned_from_json(j["n_max"], sub(key, "n_max")));
    if (j.contains("n"))
        g.n = unsigned_list(j["n"], sub(key, "n"));
    if (j.contains("k"))
        g.k = unsigned_list(j["k"], sub(key, "k"), 1);
    if (j.contains("order"))
        g.order = unsigned_from_json(j["order"], sub(key, "order"));
    return g;
}

}  // namespace twb::io
