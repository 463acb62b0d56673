#include "twb/bivariate.hpp"

#include <algorithm>

#include "twb/errors.hpp"

namespace twb {

BivariatePoly BivariatePoly::outer(const CycloPoly& px, const CycloPoly& py) {
    if (px.field() != py.field())
        throw MathError(Errc::FieldMismatch, "outer product across fields");
    BivariatePoly r(px.field());
    if (px.is_zero() || py.is_zero())
        return r;
    r.rows_.resize(px.coeffs().size());
    for (std::size_t i = 0; i < px.coeffs().size(); ++i) {
        auto& row = r.rows_[i];
        row.reserve(py.coeffs().size());
        for (const auto& c : py.coeffs())
            row.push_back(px.coeffs()[i] * c);
    }
    r.trim();
    return r;
}

long BivariatePoly::y_degree() const {
    std::size_t width = 0;
    for (const auto& row : rows_)
        width = std::max(width, row.size());
    return static_cast<long>(width) - 1;
}

CycloElem BivariatePoly::coeff(std::size_t i, std::size_t j) const {
    if (i < rows_.size() && j < rows_[i].size())
        return rows_[i][j];
    return CycloElem(field_);
}

void BivariatePoly::trim() {
    for (auto& row : rows_)
        while (!row.empty() && row.back().is_zero())
            row.pop_back();
    while (!rows_.empty() && rows_.back().empty())
        rows_.pop_back();
}

BivariatePoly& BivariatePoly::operator+=(const BivariatePoly& other) {
    if (other.field_ != field_)
        throw MathError(Errc::FieldMismatch, "bivariate addition across fields");
    if (rows_.size() < other.rows_.size())
        rows_.resize(other.rows_.size());
    for (std::size_t i = 0; i < other.rows_.size(); ++i) {
        auto& row = rows_[i];
        const auto& src = other.rows_[i];
        if (row.size() < src.size())
            row.resize(src.size(), CycloElem(field_));
        for (std::size_t j = 0; j < src.size(); ++j)
            row[j] += src[j];
    }
    trim();
    return *this;
}

BivariatePoly& BivariatePoly::operator*=(const Rational& scalar) {
    for (auto& row : rows_)
        for (auto& c : row)
            c *= scalar;
    trim();
    return *this;
}

CycloElem BivariatePoly::evaluate(const Rational& x, const Rational& y) const {
    CycloElem acc(field_);
    for (std::size_t i = rows_.size(); i-- > 0;) {
        CycloElem row_value(field_);
        for (std::size_t j = rows_[i].size(); j-- > 0;) {
            row_value *= y;
            row_value += rows_[i][j];
        }
        acc *= x;
        acc += row_value;
    }
    return acc;
}

CycloPoly BivariatePoly::at_y_zero() const {
    std::vector<CycloElem> c;
    c.reserve(rows_.size());
    for (const auto& row : rows_)
        c.push_back(row.empty() ? CycloElem(field_) : row[0]);
    return CycloPoly(field_, std::move(c));
}

bool operator==(const BivariatePoly& a, const BivariatePoly& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_;
}

std::optional<std::pair<std::size_t, std::size_t>> first_difference(const BivariatePoly& a,
                                                                    const BivariatePoly& b) {
    const auto rows = static_cast<std::size_t>(std::max(a.x_degree(), b.x_degree()) + 1);
    const auto cols = static_cast<std::size_t>(std::max(a.y_degree(), b.y_degree()) + 1);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (!(a.coeff(i, j) == b.coeff(i, j)))
                return std::pair{i, j};
    return std::nullopt;
}

}  // namespace twb
