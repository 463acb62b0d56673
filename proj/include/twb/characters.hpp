#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twb/cyclotomic.hpp"
#include "twb/root_of_unity.hpp"

namespace twb {

/// Dirichlet character modulo d, stored as a table of root-of-unity tokens
/// (nullopt encodes the value 0). Values stay field-agnostic until they are
/// embedded with value_at().
///
/// The modulus-1 character is identically 1, including at 0.
class DirichletCharacter {
public:
    using Value = std::optional<RootOfUnity>;

    std::uint64_t modulus() const { return values_.size(); }
    const std::vector<Value>& values() const { return values_; }
    /// chi(n mod d).
    const Value& at(std::uint64_t n) const { return values_[n % values_.size()]; }

    /// Least common multiple of the multiplicative orders of all values.
    std::uint64_t value_order() const;

    bool is_principal() const;
    /// All values in {0, 1, -1}.
    bool is_rational_valued() const;

    /// chi^s: every nonzero value raised to the s-th power.
    DirichletCharacter pow(std::int64_t s) const;

    friend DirichletCharacter operator*(const DirichletCharacter& a, const DirichletCharacter& b);
    /// Pointwise equality of the values (not of the tokens).
    friend bool operator==(const DirichletCharacter& a, const DirichletCharacter& b);

    std::string to_string() const;

private:
    friend DirichletCharacter from_table(std::uint64_t, std::vector<DirichletCharacter::Value>);
    explicit DirichletCharacter(std::vector<Value> values) : values_(std::move(values)) {}

    std::vector<Value> values_;
};

DirichletCharacter principal(std::uint64_t d);

/// Validates support, chi(1) = 1 and complete multiplicativity on all pairs.
DirichletCharacter from_table(std::uint64_t d, std::vector<DirichletCharacter::Value> values);

/// True when (Z/dZ)^* is cyclic: d in {1, 2, 4, p^k, 2p^k}.
bool has_cyclic_unit_group(std::uint64_t d);

/// Least primitive root modulo d (requires a cyclic unit group; 1 for d <= 2).
std::uint64_t least_primitive_root(std::uint64_t d);

/// All phi(d) characters: chi_j(g^t) = zeta_{phi(d)}^{jt}, g the least
/// primitive root. Index j is the position in the result.
std::vector<DirichletCharacter> enumerate_cyclic(std::uint64_t d);

/// chi(n mod d) as an element of `field`.
CycloElem value_at(const DirichletCharacter& chi, std::uint64_t n, const FieldRef& field);

}  // namespace twb
