#include "twb/root_of_unity.hpp"

#include <numeric>

#include "twb/errors.hpp"

namespace twb {

namespace {

std::uint64_t reduce(std::int64_t e, std::uint64_t m) {
    const auto sm = static_cast<std::int64_t>(m);
    auto r = e % sm;
    if (r < 0)
        r += sm;
    return static_cast<std::uint64_t>(r);
}

}  // namespace

RootOfUnity::RootOfUnity(std::uint64_t order, std::int64_t exponent) : order_(order) {
    if (order == 0)
        throw MathError(Errc::InvalidArgument, "root of unity of order 0");
    exponent_ = reduce(exponent, order);
}

RootOfUnity RootOfUnity::normalized() const {
    const auto g = std::gcd(exponent_, order_);
    RootOfUnity r;
    r.order_ = order_ / g;
    r.exponent_ = exponent_ / g;
    return r;
}

RootOfUnity RootOfUnity::pow(std::int64_t e) const {
    // (exponent * e) mod order without overflow for the small orders used here.
    const auto base = static_cast<__int128>(exponent_) * e;
    auto r = static_cast<std::int64_t>(base % static_cast<__int128>(order_));
    return RootOfUnity(order_, r);
}

RootOfUnity RootOfUnity::operator*(const RootOfUnity& other) const {
    const auto l = std::lcm(order_, other.order_);
    const auto e = exponent_ * (l / order_) + other.exponent_ * (l / other.order_);
    return RootOfUnity(l, static_cast<std::int64_t>(e % l)).normalized();
}

bool RootOfUnity::same_value(const RootOfUnity& other) const {
    return normalized() == other.normalized();
}

std::string RootOfUnity::to_string() const {
    return "zeta_" + std::to_string(order_) + "^" + std::to_string(exponent_);
}

}  // namespace twb
