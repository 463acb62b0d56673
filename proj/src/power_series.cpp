#include "twb/power_series.hpp"

#include "twb/errors.hpp"

namespace twb {

TruncSeries::TruncSeries(FieldRef field, std::size_t order)
    : field_(std::move(field)), coeffs_(order + 1, CycloElem(field_)) {}

TruncSeries::TruncSeries(FieldRef field, std::vector<CycloElem> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty())
        throw MathError(Errc::InvalidArgument, "a truncated series needs at least one coefficient");
    for (const auto& c : coeffs_)
        if (c.field() != field_)
            throw MathError(Errc::FieldMismatch, "series coefficient outside its field");
}

TruncSeries TruncSeries::one(const FieldRef& field, std::size_t order) {
    TruncSeries s(field, order);
    s.coeffs_[0] = CycloElem(field, Rational(1));
    return s;
}

std::optional<std::size_t> TruncSeries::valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero())
            return i;
    return std::nullopt;
}

TruncSeries TruncSeries::truncated(std::size_t new_order) const {
    if (new_order > order())
        throw MathError(Errc::OrderExceeded, "cannot extend a series from order " + std::to_string(order()) +
                                                 " to " + std::to_string(new_order));
    return TruncSeries(field_, std::vector<CycloElem>(coeffs_.begin(),
                                                      coeffs_.begin() + static_cast<long>(new_order) + 1));
}

TruncSeries TruncSeries::times_t() const {
    TruncSeries r(field_, order());
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        r.coeffs_[i] = coeffs_[i - 1];
    return r;
}

void TruncSeries::require_compatible(const TruncSeries& other) const {
    if (field_ != other.field_)
        throw MathError(Errc::FieldMismatch, "series over Q(zeta_" + std::to_string(field_->conductor()) +
                                                 ") and Q(zeta_" + std::to_string(other.field_->conductor()) + ")");
    if (order() != other.order())
        throw MathError(Errc::OrderMismatch, "series of orders " + std::to_string(order()) + " and " +
                                                 std::to_string(other.order()));
}

TruncSeries TruncSeries::operator-() const {
    TruncSeries r = *this;
    for (auto& c : r.coeffs_)
        c = -c;
    return r;
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    a.require_compatible(b);
    TruncSeries r = a;
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i)
        r.coeffs_[i] += b.coeffs_[i];
    return r;
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
    a.require_compatible(b);
    TruncSeries r = a;
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i)
        r.coeffs_[i] -= b.coeffs_[i];
    return r;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    a.require_compatible(b);
    const std::size_t n = a.coeffs_.size();
    TruncSeries r(a.field_, a.order());
    for (std::size_t i = 0; i < n; ++i) {
        if (a.coeffs_[i].is_zero())
            continue;
        for (std::size_t j = 0; i + j < n; ++j)
            if (!b.coeffs_[j].is_zero())
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return r;
}

TruncSeries operator*(TruncSeries a, const CycloElem& s) {
    for (auto& c : a.coeffs_)
        c *= s;
    return a;
}

bool operator==(const TruncSeries& a, const TruncSeries& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
}

TruncSeries exp_at(const CycloElem& a, std::size_t order) {
    std::vector<CycloElem> c;
    c.reserve(order + 1);
    c.emplace_back(a.field(), Rational(1));
    for (std::size_t n = 1; n <= order; ++n)
        c.push_back(c.back() * a * Rational(1, static_cast<unsigned long>(n)));
    return TruncSeries(a.field(), std::move(c));
}

TruncSeries series_add(const TruncSeries& a, const TruncSeries& b) { return a + b; }

TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b) { return a * b; }

TruncSeries series_pow(const TruncSeries& s, unsigned k) {
    TruncSeries result = TruncSeries::one(s.field(), s.order());
    TruncSeries base = s;
    while (k > 0) {
        if (k & 1u)
            result = result * base;
        k >>= 1;
        if (k > 0)
            base = base * base;
    }
    return result;
}

TruncSeries series_invert(const TruncSeries& s) {
    if (s[0].is_zero())
        throw MathError(Errc::NonUnitConstantTerm, "series with zero constant term has no inverse");
    const std::size_t n = s.order();
    std::vector<CycloElem> inv;
    inv.reserve(n + 1);
    const CycloElem c0_inv = s[0].inverse();
    inv.push_back(c0_inv);
    // inv_k = -c0^{-1} * sum_{i=1}^{k} c_i inv_{k-i}
    for (std::size_t k = 1; k <= n; ++k) {
        CycloElem acc(s.field());
        for (std::size_t i = 1; i <= k; ++i)
            if (!s[i].is_zero())
                acc += s[i] * inv[k - i];
        inv.push_back(-(acc * c0_inv));
    }
    return TruncSeries(s.field(), std::move(inv));
}

TruncSeries divide_cancel(const TruncSeries& num, const TruncSeries& den) {
    if (num.field() != den.field())
        throw MathError(Errc::FieldMismatch, "divide_cancel across fields");
    if (num.order() != den.order())
        throw MathError(Errc::OrderMismatch, "divide_cancel of orders " + std::to_string(num.order()) +
                                                 " and " + std::to_string(den.order()));
    const auto vd = den.valuation();
    if (!vd)
        throw MathError(Errc::ZeroDenominator, "denominator vanishes to order " + std::to_string(den.order()));
    const auto vn = num.valuation();
    if (vn && *vn < *vd)
        throw MathError(Errc::PoleAtZero, "numerator valuation " + std::to_string(*vn) +
                                              " below denominator valuation " + std::to_string(*vd));
    const std::size_t v = *vd;
    const auto& nc = num.coeffs();
    const auto& dc = den.coeffs();
    TruncSeries n_stripped(num.field(), std::vector<CycloElem>(nc.begin() + static_cast<long>(v), nc.end()));
    TruncSeries d_stripped(den.field(), std::vector<CycloElem>(dc.begin() + static_cast<long>(v), dc.end()));
    return n_stripped * series_invert(d_stripped);
}

CycloElem egf_coefficient(const TruncSeries& s, std::size_t n) {
    if (n > s.order())
        throw MathError(Errc::OrderExceeded, "coefficient " + std::to_string(n) + " of a series of order " +
                                                 std::to_string(s.order()));
    return s[n] * Rational(factorial(n));
}

}  // namespace twb
