#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twb/cyclotomic.hpp"

namespace twb {

/// Power series in t over Q(zeta_m), truncated after t^order.
///
/// Ordinary coefficients are stored: coefficient c_n of t^n, so the EGF
/// coefficient (the multiplier of t^n/n!) is n! * c_n. Binary operations
/// require equal fields and equal orders; nothing is re-truncated silently.
class TruncSeries {
public:
    TruncSeries(FieldRef field, std::size_t order);
    TruncSeries(FieldRef field, std::vector<CycloElem> coeffs);

    static TruncSeries one(const FieldRef& field, std::size_t order);

    const FieldRef& field() const { return field_; }
    std::size_t order() const { return coeffs_.size() - 1; }
    const std::vector<CycloElem>& coeffs() const { return coeffs_; }
    const CycloElem& operator[](std::size_t n) const { return coeffs_[n]; }

    /// Index of the first nonzero coefficient; nullopt if zero to this order.
    std::optional<std::size_t> valuation() const;

    /// Keeps t^0..t^new_order; new_order must not exceed order().
    TruncSeries truncated(std::size_t new_order) const;
    /// Multiplication by t, dropping the coefficient that falls off the end.
    TruncSeries times_t() const;

    TruncSeries operator-() const;
    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator*(TruncSeries a, const CycloElem& s);

    friend bool operator==(const TruncSeries& a, const TruncSeries& b);

private:
    void require_compatible(const TruncSeries& other) const;

    FieldRef field_;
    std::vector<CycloElem> coeffs_;
};

/// e^{a t}: coefficients a^n / n!.
TruncSeries exp_at(const CycloElem& a, std::size_t order);

TruncSeries series_add(const TruncSeries& a, const TruncSeries& b);
TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b);
/// s^k by repeated squaring; s^0 is the constant 1.
TruncSeries series_pow(const TruncSeries& s, unsigned k);

/// Multiplicative inverse; the constant term must be nonzero.
TruncSeries series_invert(const TruncSeries& s);

/// num / den where den may vanish at t = 0: strips t^v (v = valuation of
/// den) from both and multiplies by the inverse of the remaining unit.
/// The result has order order() - v.
TruncSeries divide_cancel(const TruncSeries& num, const TruncSeries& den);

/// n! * c_n.
CycloElem egf_coefficient(const TruncSeries& s, std::size_t n);

}  // namespace twb
