#include "twb/cyclo_poly.hpp"

#include <sstream>

#include "twb/errors.hpp"

namespace twb {

CycloPoly::CycloPoly(FieldRef field, std::vector<CycloElem> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_)
        if (c.field() != field_)
            throw MathError(Errc::FieldMismatch, "polynomial coefficient outside its field");
    trim();
}

CycloPoly CycloPoly::constant(const CycloElem& c) { return CycloPoly(c.field(), {c}); }

CycloPoly CycloPoly::affine(const FieldRef& field, const Rational& a, const Rational& c) {
    return CycloPoly(field, {CycloElem(field, c), CycloElem(field, a)});
}

void CycloPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
}

CycloElem CycloPoly::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : CycloElem(field_);
}

CycloPoly& CycloPoly::operator+=(const CycloPoly& other) {
    if (other.field_ != field_)
        throw MathError(Errc::FieldMismatch, "polynomial addition across fields");
    if (coeffs_.size() < other.coeffs_.size())
        coeffs_.resize(other.coeffs_.size(), CycloElem(field_));
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
        coeffs_[i] += other.coeffs_[i];
    trim();
    return *this;
}

CycloPoly& CycloPoly::operator-=(const CycloPoly& other) {
    if (other.field_ != field_)
        throw MathError(Errc::FieldMismatch, "polynomial subtraction across fields");
    if (coeffs_.size() < other.coeffs_.size())
        coeffs_.resize(other.coeffs_.size(), CycloElem(field_));
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
        coeffs_[i] -= other.coeffs_[i];
    trim();
    return *this;
}

CycloPoly& CycloPoly::operator*=(const CycloElem& scalar) {
    for (auto& c : coeffs_)
        c *= scalar;
    trim();
    return *this;
}

CycloPoly& CycloPoly::operator*=(const Rational& scalar) {
    for (auto& c : coeffs_)
        c *= scalar;
    trim();
    return *this;
}

CycloPoly operator*(const CycloPoly& a, const CycloPoly& b) {
    if (a.field_ != b.field_)
        throw MathError(Errc::FieldMismatch, "polynomial product across fields");
    if (a.is_zero() || b.is_zero())
        return CycloPoly(a.field_);
    std::vector<CycloElem> out(a.coeffs_.size() + b.coeffs_.size() - 1, CycloElem(a.field_));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero())
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return CycloPoly(a.field_, std::move(out));
}

CycloPoly CycloPoly::compose_affine(const Rational& a, const Rational& c) const {
    const CycloPoly inner = affine(field_, a, c);
    CycloPoly result(field_);
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        result = result * inner;
        result += constant(coeffs_[i]);
    }
    return result;
}

CycloElem CycloPoly::evaluate(const CycloElem& x) const {
    if (x.field() != field_)
        throw MathError(Errc::FieldMismatch, "evaluation point outside the coefficient field");
    CycloElem acc(field_);
    for (std::size_t i = coeffs_.size(); i-- > 0;)
        acc = acc * x + coeffs_[i];
    return acc;
}

CycloElem CycloPoly::evaluate(const Rational& x) const {
    CycloElem acc(field_);
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc *= x;
        acc += coeffs_[i];
    }
    return acc;
}

bool operator==(const CycloPoly& a, const CycloPoly& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
}

std::string CycloPoly::to_string() const {
    if (coeffs_.empty())
        return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i > 0)
            os << " + ";
        os << "(" << coeffs_[i].to_string() << ")*x^" << i;
    }
    return os.str();
}

}  // namespace twb
