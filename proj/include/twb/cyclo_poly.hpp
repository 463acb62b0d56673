#pragma once

#include <string>
#include <vector>

#include "twb/cyclotomic.hpp"

namespace twb {

/// Polynomial in one variable over Q(zeta_m); coefficient of x^i at index i.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
class CycloPoly {
public:
    explicit CycloPoly(FieldRef field) : field_(std::move(field)) {}
    CycloPoly(FieldRef field, std::vector<CycloElem> coeffs);

    static CycloPoly constant(const CycloElem& c);
    /// a*x + c
    static CycloPoly affine(const FieldRef& field, const Rational& a, const Rational& c);

    const FieldRef& field() const { return field_; }
    const std::vector<CycloElem>& coeffs() const { return coeffs_; }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    /// Zero when i > degree().
    CycloElem coeff(std::size_t i) const;

    CycloPoly& operator+=(const CycloPoly& other);
    CycloPoly& operator-=(const CycloPoly& other);
    CycloPoly& operator*=(const CycloElem& scalar);
    CycloPoly& operator*=(const Rational& scalar);
    friend CycloPoly operator+(CycloPoly a, const CycloPoly& b) { return a += b; }
    friend CycloPoly operator-(CycloPoly a, const CycloPoly& b) { return a -= b; }
    friend CycloPoly operator*(CycloPoly a, const CycloElem& s) { return a *= s; }
    friend CycloPoly operator*(CycloPoly a, const Rational& s) { return a *= s; }
    friend CycloPoly operator*(const CycloPoly& a, const CycloPoly& b);

    /// p(a*x + c), expanded by Horner's rule over polynomials.
    CycloPoly compose_affine(const Rational& a, const Rational& c) const;

    CycloElem evaluate(const CycloElem& x) const;
    CycloElem evaluate(const Rational& x) const;

    friend bool operator==(const CycloPoly& a, const CycloPoly& b);

    std::string to_string() const;

private:
    void trim();

    FieldRef field_;
    std::vector<CycloElem> coeffs_;
};

}  // namespace twb
