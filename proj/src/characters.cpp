#include "twb/characters.hpp"

#include <numeric>
#include <sstream>

#include "twb/errors.hpp"

namespace twb {

namespace {

std::optional<std::uint64_t> odd_prime_base(std::uint64_t n) {
    if (n < 3 || n % 2 == 0)
        return std::nullopt;
    std::uint64_t p = 3;
    while (p * p <= n && n % p != 0)
        p += 2;
    if (n % p != 0)
        p = n;
    while (n % p == 0)
        n /= p;
    if (n != 1)
        return std::nullopt;
    return p;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

bool same(const DirichletCharacter::Value& a, const DirichletCharacter::Value& b) {
    if (!a || !b)
        return !a && !b;
    return a->same_value(*b);
}

}  // namespace

std::uint64_t DirichletCharacter::value_order() const {
    std::uint64_t l = 1;
    for (const auto& v : values_)
        if (v)
            l = std::lcm(l, v->multiplicative_order());
    return l;
}

bool DirichletCharacter::is_principal() const {
    for (const auto& v : values_)
        if (v && !v->is_one())
            return false;
    return true;
}

bool DirichletCharacter::is_rational_valued() const { return value_order() <= 2; }

DirichletCharacter DirichletCharacter::pow(std::int64_t s) const {
    std::vector<Value> out = values_;
    for (auto& v : out)
        if (v)
            v = v->pow(s);
    return DirichletCharacter(std::move(out));
}

DirichletCharacter operator*(const DirichletCharacter& a, const DirichletCharacter& b) {
    if (a.modulus() != b.modulus())
        throw MathError(Errc::InvalidArgument, "product of characters with different moduli");
    std::vector<DirichletCharacter::Value> out(a.values_.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        if (a.values_[i] && b.values_[i])
            out[i] = *a.values_[i] * *b.values_[i];
    return from_table(a.modulus(), std::move(out));
}

bool operator==(const DirichletCharacter& a, const DirichletCharacter& b) {
    if (a.modulus() != b.modulus())
        return false;
    for (std::size_t i = 0; i < a.values_.size(); ++i)
        if (!same(a.values_[i], b.values_[i]))
            return false;
    return true;
}

std::string DirichletCharacter::to_string() const {
    std::ostringstream os;
    os << "chi mod " << modulus() << " [";
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i > 0)
            os << ", ";
        os << (values_[i] ? values_[i]->to_string() : "0");
    }
    os << "]";
    return os.str();
}

DirichletCharacter principal(std::uint64_t d) {
    if (d == 0)
        throw MathError(Errc::InvalidArgument, "character modulus 0");
    std::vector<DirichletCharacter::Value> values(d);
    for (std::uint64_t a = 0; a < d; ++a)
        if (std::gcd(a, d) == 1)
            values[a] = RootOfUnity::one();
    return from_table(d, std::move(values));
}

DirichletCharacter from_table(std::uint64_t d, std::vector<DirichletCharacter::Value> values) {
    if (d == 0 || values.size() != d)
        throw MathError(Errc::InvalidArgument, "table of length " + std::to_string(values.size()) +
                                                   " for modulus " + std::to_string(d));
    for (std::uint64_t a = 0; a < d; ++a) {
        const bool unit = std::gcd(a, d) == 1;
        if (unit != values[a].has_value())
            throw MathError(Errc::WrongSupport, "value at " + std::to_string(a) + " modulo " + std::to_string(d) +
                                                    (unit ? " must be nonzero" : " must be zero"));
    }
    if (!values[1 % d]->is_one())
        throw MathError(Errc::NotNormalized, "chi(1) = " + values[1 % d]->to_string());
    for (std::uint64_t a = 0; a < d; ++a)
        for (std::uint64_t b = a; b < d; ++b) {
            const auto& ab = values[mul_mod(a, b, d)];
            DirichletCharacter::Value prod;
            if (values[a] && values[b])
                prod = *values[a] * *values[b];
            if (!same(ab, prod))
                throw MathError(Errc::NotMultiplicative, "chi(" + std::to_string(a) + "*" + std::to_string(b) +
                                                             ") != chi(" + std::to_string(a) + ")chi(" +
                                                             std::to_string(b) + ") modulo " + std::to_string(d));
        }
    return DirichletCharacter(std::move(values));
}

bool has_cyclic_unit_group(std::uint64_t d) {
    if (d == 1 || d == 2 || d == 4)
        return true;
    if (odd_prime_base(d))
        return true;
    return d % 2 == 0 && odd_prime_base(d / 2).has_value();
}

std::uint64_t least_primitive_root(std::uint64_t d) {
    if (!has_cyclic_unit_group(d))
        throw MathError(Errc::NonCyclicUnitGroup, "no primitive root modulo " + std::to_string(d));
    if (d <= 2)
        return 1;
    const auto phi = euler_phi(d);
    std::vector<std::uint64_t> prime_factors;
    auto rest = phi;
    for (std::uint64_t q = 2; q * q <= rest; ++q)
        if (rest % q == 0) {
            prime_factors.push_back(q);
            while (rest % q == 0)
                rest /= q;
        }
    if (rest > 1)
        prime_factors.push_back(rest);
    auto pow_mod = [d](std::uint64_t b, std::uint64_t e) {
        std::uint64_t r = 1 % d;
        for (; e > 0; e >>= 1, b = mul_mod(b, b, d))
            if (e & 1)
                r = mul_mod(r, b, d);
        return r;
    };
    for (std::uint64_t g = 2; g < d; ++g) {
        if (std::gcd(g, d) != 1)
            continue;
        bool primitive = true;
        for (auto q : prime_factors)
            if (pow_mod(g, phi / q) == 1) {
                primitive = false;
                break;
            }
        if (primitive)
            return g;
    }
    throw MathError(Errc::NonCyclicUnitGroup, "no primitive root modulo " + std::to_string(d));
}

std::vector<DirichletCharacter> enumerate_cyclic(std::uint64_t d) {
    if (d == 0)
        throw MathError(Errc::InvalidArgument, "character modulus 0");
    if (!has_cyclic_unit_group(d))
        throw MathError(Errc::NonCyclicUnitGroup,
                        "unit group modulo " + std::to_string(d) + " is not cyclic; supply a table");
    const auto phi = euler_phi(d);
    const auto g = least_primitive_root(d);
    // discrete log table: log[g^t mod d] = t
    std::vector<std::int64_t> log(d, -1);
    std::uint64_t x = 1 % d;
    for (std::uint64_t t = 0; t < phi; ++t) {
        log[x] = static_cast<std::int64_t>(t);
        x = mul_mod(x, g, d);
    }
    if (d == 1)
        log[0] = 0;
    std::vector<DirichletCharacter> out;
    out.reserve(phi);
    for (std::uint64_t j = 0; j < phi; ++j) {
        std::vector<DirichletCharacter::Value> values(d);
        for (std::uint64_t a = 0; a < d; ++a)
            if (log[a] >= 0)
                values[a] = RootOfUnity(phi, static_cast<std::int64_t>(j) * log[a]);
        out.push_back(from_table(d, std::move(values)));
    }
    return out;
}

CycloElem value_at(const DirichletCharacter& chi, std::uint64_t n, const FieldRef& field) {
    const auto& v = chi.at(n);
    if (!v)
        return CycloElem(field);
    return as_cyclo(*v, field);
}

}  // namespace twb
