#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace twb {

/// zeta_order^exponent with 0 <= exponent < order.
///
/// The pair is kept as given; `normalized()` divides out gcd(exponent, order)
/// so that `order` becomes the true multiplicative order.
class RootOfUnity {
public:
    RootOfUnity() = default;
    RootOfUnity(std::uint64_t order, std::int64_t exponent);

    static RootOfUnity one() { return {}; }

    std::uint64_t order() const { return order_; }
    std::uint64_t exponent() const { return exponent_; }

    RootOfUnity normalized() const;
    std::uint64_t multiplicative_order() const { return normalized().order_; }
    bool is_one() const { return exponent_ == 0; }

    RootOfUnity pow(std::int64_t e) const;
    RootOfUnity operator*(const RootOfUnity& other) const;

    /// Compares the complex numbers, not the (order, exponent) tokens.
    bool same_value(const RootOfUnity& other) const;

    auto operator<=>(const RootOfUnity&) const = default;

    std::string to_string() const;

private:
    std::uint64_t order_ = 1;
    std::uint64_t exponent_ = 0;
};

}  // namespace twb
