#include "twb/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "qpoly.hpp"
#include "twb/errors.hpp"

namespace twb {

namespace {

// Exact quotient a / b for monic b.
IntPoly divide_exact(IntPoly a, const IntPoly& b) {
    const std::size_t db = b.size() - 1;
    IntPoly q(a.size() - db);
    for (std::size_t i = a.size(); i-- > db;) {
        const Integer c = a[i];
        q[i - db] = c;
        if (c == 0)
            continue;
        for (std::size_t j = 0; j <= db; ++j)
            a[i - db + j] -= c * b[j];
    }
    for (std::size_t i = 0; i < db; ++i)
        if (a[i] != 0)
            throw MathError(Errc::InvalidArgument, "inexact cyclotomic division");
    return q;
}

struct Registry {
    std::mutex mutex;
    std::map<std::uint64_t, IntPoly> polys;
    std::map<std::uint64_t, FieldRef> fields;
};

Registry& registry() {
    static Registry r;
    return r;
}

IntPoly cyclotomic_locked(Registry& reg, std::uint64_t m) {
    if (auto it = reg.polys.find(m); it != reg.polys.end())
        return it->second;
    IntPoly p(m + 1);
    p[0] = -1;
    p[m] = 1;
    for (std::uint64_t d = 1; d < m; ++d)
        if (m % d == 0)
            p = divide_exact(std::move(p), cyclotomic_locked(reg, d));
    reg.polys.emplace(m, p);
    return p;
}

}  // namespace

IntPoly cyclotomic_polynomial(std::uint64_t m) {
    if (m == 0)
        throw MathError(Errc::InvalidArgument, "cyclotomic polynomial of index 0");
    auto& reg = registry();
    std::lock_guard lock(reg.mutex);
    return cyclotomic_locked(reg, m);
}

std::uint64_t euler_phi(std::uint64_t m) {
    std::uint64_t result = m;
    for (std::uint64_t p = 2; p * p <= m; ++p) {
        if (m % p != 0)
            continue;
        while (m % p == 0)
            m /= p;
        result -= result / p;
    }
    if (m > 1)
        result -= result / m;
    return result;
}

CycloField::CycloField(std::uint64_t conductor, IntPoly minpoly)
    : conductor_(conductor), degree_(minpoly.size() - 1), minpoly_(std::move(minpoly)) {
    zeta_powers_.reserve(conductor_);
    std::vector<Integer> cur(degree_);
    cur[0] = 1;
    for (std::uint64_t j = 0; j < conductor_; ++j) {
        zeta_powers_.push_back(cur);
        // Multiply by x and fold x^deg = -sum minpoly[i] x^i.
        const Integer top = cur.back();
        for (std::size_t i = degree_ - 1; i > 0; --i)
            cur[i] = cur[i - 1] - top * minpoly_[i];
        cur[0] = -top * minpoly_[0];
    }
}

FieldRef CycloField::get(std::uint64_t conductor) {
    if (conductor == 0)
        throw MathError(Errc::InvalidArgument, "cyclotomic field of conductor 0");
    auto& reg = registry();
    std::lock_guard lock(reg.mutex);
    if (auto it = reg.fields.find(conductor); it != reg.fields.end())
        return it->second;
    IntPoly phi = cyclotomic_locked(reg, conductor);
    auto field = std::make_shared<const CycloField>(conductor, std::move(phi));
    reg.fields.emplace(conductor, field);
    return field;
}

std::span<const Integer> CycloField::zeta_power(std::int64_t j) const {
    const auto m = static_cast<std::int64_t>(conductor_);
    auto r = j % m;
    if (r < 0)
        r += m;
    return zeta_powers_[static_cast<std::size_t>(r)];
}

// ---------------------------------------------------------------------------

CycloElem::CycloElem() : CycloElem(CycloField::rationals()) {}

CycloElem::CycloElem(FieldRef field) : field_(std::move(field)), coeffs_(field_->degree()) {}

CycloElem::CycloElem(FieldRef field, const Rational& value) : CycloElem(std::move(field)) {
    coeffs_[0] = value;
    coeffs_[0].canonicalize();
}

CycloElem::CycloElem(FieldRef field, std::vector<Rational> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != field_->degree())
        throw MathError(Errc::InvalidArgument,
                        "expected " + std::to_string(field_->degree()) + " coordinates, got " +
                            std::to_string(coeffs_.size()));
    for (auto& c : coeffs_)
        c.canonicalize();
}

CycloElem CycloElem::zeta_power(FieldRef field, std::int64_t j) {
    CycloElem e(field);
    const auto v = field->zeta_power(j);
    for (std::size_t i = 0; i < v.size(); ++i)
        e.coeffs_[i] = v[i];
    return e;
}

bool CycloElem::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0)
            return false;
    return true;
}

bool CycloElem::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0)
            return false;
    return true;
}

bool CycloElem::is_one() const { return is_rational() && coeffs_[0] == 1; }

const Rational& CycloElem::rational_value() const {
    if (!is_rational())
        throw MathError(Errc::InvalidArgument, "element is not rational: " + to_string());
    return coeffs_[0];
}

void CycloElem::require_same_field(const CycloElem& other) const {
    if (field_ != other.field_)
        throw MathError(Errc::FieldMismatch, "conductors " + std::to_string(conductor()) + " and " +
                                                 std::to_string(other.conductor()));
}

CycloElem CycloElem::operator-() const {
    CycloElem r = *this;
    for (auto& c : r.coeffs_)
        c = -c;
    return r;
}

CycloElem& CycloElem::operator+=(const CycloElem& other) {
    require_same_field(other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] += other.coeffs_[i];
    return *this;
}

CycloElem& CycloElem::operator-=(const CycloElem& other) {
    require_same_field(other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] -= other.coeffs_[i];
    return *this;
}

CycloElem& CycloElem::operator*=(const CycloElem& other) {
    *this = *this * other;
    return *this;
}

CycloElem& CycloElem::operator*=(const Rational& scalar) {
    for (auto& c : coeffs_)
        c *= scalar;
    return *this;
}

CycloElem operator*(const CycloElem& a, const CycloElem& b) {
    a.require_same_field(b);
    const std::size_t n = a.coeffs_.size();
    if (a.is_rational())
        return b * a.coeffs_[0];
    if (b.is_rational())
        return a * b.coeffs_[0];
    std::vector<Rational> prod(2 * n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        if (a.coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < n; ++j)
            if (b.coeffs_[j] != 0)
                prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    CycloElem r(a.field_);
    for (std::size_t k = 0; k < n; ++k)
        r.coeffs_[k] = std::move(prod[k]);
    const auto& field = *a.field_;
    for (std::size_t k = n; k < prod.size(); ++k) {
        if (prod[k] == 0)
            continue;
        const auto v = field.zeta_power(static_cast<std::int64_t>(k));
        for (std::size_t i = 0; i < n; ++i)
            if (v[i] != 0)
                r.coeffs_[i] += prod[k] * v[i];
    }
    return r;
}

CycloElem CycloElem::inverse() const {
    if (is_zero())
        throw MathError(Errc::DivisionByZero, "inverse of zero");
    if (is_rational())
        return CycloElem(field_, 1 / coeffs_[0]);
    detail::QPoly a(coeffs_.begin(), coeffs_.end());
    detail::trim(a);
    detail::QPoly m(field_->minimal_polynomial().begin(), field_->minimal_polynomial().end());
    auto s = detail::inverse_mod(a, m);
    s.resize(field_->degree());
    return CycloElem(field_, std::move(s));
}

CycloElem CycloElem::pow(long e) const {
    if (e < 0)
        return inverse().pow(-e);
    CycloElem result(field_, Rational(1));
    CycloElem base = *this;
    while (e > 0) {
        if (e & 1)
            result *= base;
        e >>= 1;
        if (e > 0)
            base *= base;
    }
    return result;
}

bool operator==(const CycloElem& a, const CycloElem& b) {
    a.require_same_field(b);
    return a.coeffs_ == b.coeffs_;
}

std::string CycloElem::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0)
            continue;
        if (!first)
            os << " + ";
        first = false;
        os << twb::to_string(coeffs_[i]);
        if (i == 1)
            os << "*z";
        else if (i > 1)
            os << "*z^" << i;
    }
    if (first)
        os << "0/1";
    os << " [Q(zeta_" << conductor() << ")]";
    return os.str();
}

// ---------------------------------------------------------------------------

namespace {

// Sum of c_i * zeta^{i * stride} in `target`.
CycloElem remap(const CycloElem& e, const FieldRef& target, std::int64_t stride) {
    std::vector<Rational> out(target->degree());
    const auto src = e.coeffs();
    for (std::size_t i = 0; i < src.size(); ++i) {
        if (src[i] == 0)
            continue;
        const auto v = target->zeta_power(static_cast<std::int64_t>(i) * stride);
        for (std::size_t k = 0; k < v.size(); ++k)
            if (v[k] != 0)
                out[k] += src[i] * v[k];
    }
    return CycloElem(target, std::move(out));
}

}  // namespace

CycloElem embed(const CycloElem& e, std::uint64_t b) {
    const auto a = e.conductor();
    if (b == 0 || b % a != 0)
        throw MathError(Errc::NonDivisibleConductor,
                        std::to_string(a) + " does not divide " + std::to_string(b));
    if (a == b)
        return e;
    return remap(e, CycloField::get(b), static_cast<std::int64_t>(b / a));
}

bool field_contains_root(std::uint64_t conductor, std::uint64_t order) {
    return conductor % order == 0 || (conductor % 2 == 1 && (2 * conductor) % order == 0);
}

std::uint64_t canonical_conductor(std::uint64_t m) { return m % 4 == 2 ? m / 2 : m; }

CycloElem as_cyclo(const RootOfUnity& r, const FieldRef& field) {
    const auto n = r.normalized();
    const auto m = field->conductor();
    if (!field_contains_root(m, n.order()))
        throw MathError(Errc::NonDivisibleConductor, "root " + r.to_string() +
                                                         " does not lie in Q(zeta_" + std::to_string(m) + ")");
    if (m % n.order() == 0)
        return CycloElem::zeta_power(field, static_cast<std::int64_t>(n.exponent() * (m / n.order())));
    // m odd: zeta_{2m}^k = (-1)^k zeta_m^{k(m+1)/2}
    const auto k = n.exponent() * (2 * m / n.order());
    auto e = CycloElem::zeta_power(field, static_cast<std::int64_t>((k % m) * ((m + 1) / 2)));
    return k % 2 == 0 ? e : -e;
}

CycloElem conjugate(const CycloElem& e, std::int64_t s) {
    const auto m = static_cast<std::int64_t>(e.conductor());
    if (std::gcd(((s % m) + m) % m, m) != 1)
        throw MathError(Errc::InvalidArgument,
                        std::to_string(s) + " is not a unit modulo " + std::to_string(m));
    return remap(e, e.field(), s);
}

Rational norm(const CycloElem& e) {
    if (e.is_rational())
        return pow(e.coeffs()[0], static_cast<long>(e.field()->degree()));
    detail::QPoly a(e.coeffs().begin(), e.coeffs().end());
    detail::trim(a);
    const auto& mp = e.field()->minimal_polynomial();
    detail::QPoly phi(mp.begin(), mp.end());
    return detail::resultant(std::move(phi), std::move(a));
}

namespace {

bool is_prime_power_of(std::uint64_t m, std::uint64_t p) {
    while (m % p == 0)
        m /= p;
    return m == 1;
}

}  // namespace

std::optional<Rational> padic_valuation(const CycloElem& e, std::uint64_t p) {
    if (p < 2)
        throw MathError(Errc::InvalidArgument, "valuation at " + std::to_string(p));
    if (e.is_zero())
        return std::nullopt;
    if (e.is_rational())
        return Rational(*p_adic_order(e.coeffs()[0], p));
    const auto m = e.conductor();
    // Q(zeta_{2n}) = Q(zeta_n) for odd n, so 2p^r is as good as p^r.
    const bool supported = is_prime_power_of(m, p) || (p != 2 && m % 2 == 0 && is_prime_power_of(m / 2, p));
    if (!supported)
        throw MathError(Errc::UnsupportedField, "valuation at " + std::to_string(p) + " in Q(zeta_" +
                                                    std::to_string(m) + ") depends on a choice of prime");
    const auto v = p_adic_order(norm(e), p);
    Rational result(Integer(*v), Integer(static_cast<unsigned long>(e.field()->degree())));
    result.canonicalize();
    return result;
}

}  // namespace twb
