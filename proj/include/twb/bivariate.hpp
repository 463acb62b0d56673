#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "twb/cyclo_poly.hpp"

namespace twb {

/// Polynomial in x and y over Q(zeta_m); coeff(i, j) multiplies x^i y^j.
/// Storage is trimmed so that equality is entry-wise.
class BivariatePoly {
public:
    explicit BivariatePoly(FieldRef field) : field_(std::move(field)) {}

    /// px(x) * py(y)
    static BivariatePoly outer(const CycloPoly& px, const CycloPoly& py);

    const FieldRef& field() const { return field_; }
    /// rows()[i][j] = coeff(i, j)
    const std::vector<std::vector<CycloElem>>& rows() const { return rows_; }
    long x_degree() const { return static_cast<long>(rows_.size()) - 1; }
    long y_degree() const;
    bool is_zero() const { return rows_.empty(); }

    CycloElem coeff(std::size_t i, std::size_t j) const;

    BivariatePoly& operator+=(const BivariatePoly& other);
    BivariatePoly& operator*=(const Rational& scalar);

    CycloElem evaluate(const Rational& x, const Rational& y) const;
    /// The polynomial in x obtained by setting y = 0.
    CycloPoly at_y_zero() const;

    friend bool operator==(const BivariatePoly& a, const BivariatePoly& b);

private:
    void trim();

    FieldRef field_;
    std::vector<std::vector<CycloElem>> rows_;
};

/// First (i, j) in lexicographic order where the coefficients differ.
std::optional<std::pair<std::size_t, std::size_t>> first_difference(const BivariatePoly& a,
                                                                    const BivariatePoly& b);

}  // namespace twb
