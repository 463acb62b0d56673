#pragma once

// JSON forms of the exact types. Fractions are always "num/den" strings.
//
//   element of Q             "num/den"
//   element of Q(zeta_m)     {"conductor": m, "coeffs": ["num/den", ...]}
//   polynomial in x          [element, ...]            (index = power of x)
//   polynomial in x and y    [[element, ...], ...]     (row i = power of x)
//   root of unity            {"order": o, "exponent": e}
//   character value          null | root of unity

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "twb/identities.hpp"
#include "twb/volkenborn.hpp"

namespace twb::io {

using json = nlohmann::json;

/// A malformed or unexpected configuration entry; `key` is a dotted path.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string key, const std::string& what);
    const std::string& key() const { return key_; }

private:
    std::string key_;
};

json to_json(const Rational& q);
json to_json(const CycloElem& e);
json to_json(const CycloPoly& p);
json to_json(const BivariatePoly& p);
json to_json(const RootOfUnity& r);
json to_json(const DirichletCharacter& chi);
json to_json(const Side& s);
json to_json(const IdentityReport& r);
json to_json(const SweepSummary& s);
json to_json(const Valuation& v);

/// Parsers throw ConfigError naming `key` on malformed input.
Rational rational_from_json(const json& j, const std::string& key);
CycloElem elem_from_json(const json& j, const std::string& key);
/// Polynomial coefficients must all share one field; `field` is used when the
/// list is empty or all entries are plain rationals.
CycloPoly poly_from_json(const json& j, const FieldRef& field, const std::string& key);
BivariatePoly bivariate_from_json(const json& j, const FieldRef& field, const std::string& key);
/// Exponents are reduced modulo the order.
RootOfUnity root_from_json(const json& j, const std::string& key);

/// {"modulus": d, "kind": "principal" | "table" | "index", "values": [...], "j": n}.
/// "modulus" may be omitted for tables. The string "all" or {"kind": "all"}
/// selects every character of each modulus (grids only).
CharacterSelector selector_from_json(const json& j, const std::string& key);
/// A single character; "all" is rejected. `modulus_hint` applies when the
/// spec carries no modulus.
DirichletCharacter character_from_json(const json& j, const std::string& key, std::uint64_t modulus_hint = 1);

GridConfig grid_from_json(const json& j, const std::string& key);

}  // namespace twb::io
