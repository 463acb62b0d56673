#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "twb/rational.hpp"
#include "twb/root_of_unity.hpp"

namespace twb {

/// Integer polynomial, coefficient of x^i at index i.
using IntPoly = std::vector<Integer>;

/// Phi_m, the m-th cyclotomic polynomial.
IntPoly cyclotomic_polynomial(std::uint64_t m);

std::uint64_t euler_phi(std::uint64_t m);

class CycloField;
using FieldRef = std::shared_ptr<const CycloField>;

/// Q(zeta_m) with power basis 1, zeta, ..., zeta^{phi(m)-1}.
///
/// Instances are interned: `get(m)` returns the same object for the same
/// conductor, so fields compare by pointer.
class CycloField {
public:
    static FieldRef get(std::uint64_t conductor);
    static FieldRef rationals() { return get(1); }

    std::uint64_t conductor() const { return conductor_; }
    std::size_t degree() const { return degree_; }
    const IntPoly& minimal_polynomial() const { return minpoly_; }

    /// Coordinates of zeta^j for j mod m.
    std::span<const Integer> zeta_power(std::int64_t j) const;

    CycloField(std::uint64_t conductor, IntPoly minpoly);

private:
    std::uint64_t conductor_;
    std::size_t degree_;
    IntPoly minpoly_;
    // zeta_powers_[j] = x^j mod Phi_m, for 0 <= j < m.
    std::vector<std::vector<Integer>> zeta_powers_;
};

/// Element of Q(zeta_m). Values are immutable once built; all binary
/// operations require both operands to live in the same field.
class CycloElem {
public:
    CycloElem();
    explicit CycloElem(FieldRef field);
    CycloElem(FieldRef field, const Rational& value);
    CycloElem(FieldRef field, std::vector<Rational> coeffs);

    static CycloElem zeta_power(FieldRef field, std::int64_t j);

    const FieldRef& field() const { return field_; }
    std::uint64_t conductor() const { return field_->conductor(); }
    std::span<const Rational> coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    /// Requires is_rational().
    const Rational& rational_value() const;

    CycloElem operator-() const;
    CycloElem& operator+=(const CycloElem& other);
    CycloElem& operator-=(const CycloElem& other);
    CycloElem& operator*=(const CycloElem& other);
    CycloElem& operator*=(const Rational& scalar);

    friend CycloElem operator+(CycloElem a, const CycloElem& b) { return a += b; }
    friend CycloElem operator-(CycloElem a, const CycloElem& b) { return a -= b; }
    friend CycloElem operator*(const CycloElem& a, const CycloElem& b);
    friend CycloElem operator*(CycloElem a, const Rational& q) { return a *= q; }
    friend CycloElem operator*(const Rational& q, CycloElem a) { return a *= q; }

    CycloElem inverse() const;
    friend CycloElem operator/(const CycloElem& a, const CycloElem& b) { return a * b.inverse(); }

    CycloElem pow(long e) const;

    friend bool operator==(const CycloElem& a, const CycloElem& b);

    /// Human-readable form, e.g. "1/2 + -1/1*z + 3/1*z^2".
    std::string to_string() const;

private:
    void require_same_field(const CycloElem& other) const;

    FieldRef field_;
    std::vector<Rational> coeffs_;
};

/// Image under zeta_a -> zeta_b^{b/a}; requires a | b.
CycloElem embed(const CycloElem& e, std::uint64_t b);

/// Whether Q(zeta_conductor) holds the roots of unity of the given order.
/// For odd m, Q(zeta_m) = Q(zeta_2m), so orders dividing 2m qualify.
bool field_contains_root(std::uint64_t conductor, std::uint64_t order);

/// The conductor of Q(zeta_m) itself: m / 2 when m = 2 mod 4.
std::uint64_t canonical_conductor(std::uint64_t m);

/// zeta_order^exponent inside `field`; requires
/// field_contains_root(conductor, multiplicative order of r).
CycloElem as_cyclo(const RootOfUnity& r, const FieldRef& field);

/// Field automorphism zeta -> zeta^s, gcd(s, m) = 1.
CycloElem conjugate(const CycloElem& e, std::int64_t s);

/// Product of all Galois conjugates (resultant with Phi_m); norm(q) = q^phi(m).
Rational norm(const CycloElem& e);

/// nu_p normalized so nu_p(p) = 1; nullopt is +infinity. Defined on rational
/// elements of any field and on every element of fields whose conductor is
/// p^r or 2p^r (a single prime above p).
std::optional<Rational> padic_valuation(const CycloElem& e, std::uint64_t p);

}  // namespace twb
