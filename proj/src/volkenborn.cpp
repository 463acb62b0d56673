#include "twb/volkenborn.hpp"

#include <numeric>

#include "twb/errors.hpp"

namespace twb {

namespace {

bool is_prime(std::uint64_t p) {
    if (p < 2)
        return false;
    for (std::uint64_t q = 2; q * q <= p; ++q)
        if (p % q == 0)
            return false;
    return true;
}

bool is_power_of(std::uint64_t m, std::uint64_t p) {
    while (m % p == 0)
        m /= p;
    return m == 1;
}

TwistSpec validated_twist(const IntegrandSpec& spec, std::uint64_t p) {
    if (!is_prime(p))
        throw MathError(Errc::InvalidArgument, std::to_string(p) + " is not prime");
    if (!spec.chi.is_rational_valued())
        throw MathError(Errc::UnsupportedField, "character values must be 0 or +-1");
    const auto order = spec.xi.normalized().order();
    if (!is_power_of(order, p))
        throw MathError(Errc::UnsupportedField,
                        "xi of order " + std::to_string(order) + " is not a power of " + std::to_string(p));
    return make_twist(spec.chi, spec.xi);
}

// +infinity compares above every rational.
bool valuation_less(const Valuation& a, const Valuation& b) { return a && (!b || *a < *b); }

std::uint64_t ipow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--)
        r *= b;
    return r;
}

// (1 / count) sum_{x < count} chi(x) xi^{x + offset} (x + offset)^n, with the
// rational parts gathered per residue of x + offset modulo order(xi).
CycloElem weighted_average(const TwistSpec& twist, unsigned n, std::uint64_t count, std::uint64_t offset) {
    const std::uint64_t period = twist.xi.normalized().order();
    std::vector<Integer> buckets(period);
    Integer power;
    for (std::uint64_t x = 0; x < count; ++x) {
        const auto& c = twist.chi.at(x);
        if (!c)
            continue;
        const std::uint64_t y = x + offset;
        mpz_ui_pow_ui(power.get_mpz_t(), y, n);
        if (c->normalized().is_one())
            buckets[y % period] += power;
        else
            buckets[y % period] -= power;
    }
    CycloElem acc(twist.ambient);
    for (std::uint64_t r = 0; r < period; ++r)
        if (buckets[r] != 0)
            acc += twist.xi_power(static_cast<std::int64_t>(r)) * Rational(buckets[r]);
    return acc * Rational(Integer(1), Integer(count));
}

}  // namespace

CycloElem riemann_sum(const IntegrandSpec& spec, std::uint64_t p, unsigned level) {
    if (level == 0)
        throw MathError(Errc::InvalidArgument, "level must be at least 1");
    const TwistSpec twist = validated_twist(spec, p);
    return weighted_average(twist, spec.moment, spec.modulus() * ipow(p, level), 0);
}

bool convergence_pass(const std::vector<unsigned>& levels, const std::vector<Valuation>& valuations) {
    bool previous_flat = false;
    for (std::size_t i = 1; i < valuations.size(); ++i) {
        if (levels[i - 1] < kConvergenceStart)
            continue;
        const auto& a = valuations[i - 1];
        const auto& b = valuations[i];
        if (valuation_less(b, a))
            return false;
        const bool strict = valuation_less(a, b) || (!a && !b);
        if (!strict && previous_flat)
            return false;
        previous_flat = !strict;
    }
    return true;
}

ConvergenceTrace convergence_check(const IntegrandSpec& spec, std::uint64_t p, unsigned max_level) {
    if (max_level < 2)
        throw MathError(Errc::InvalidArgument, "max_level must be at least 2");
    const TwistSpec twist = validated_twist(spec, p);
    const CycloElem target = numbers(twist, 1, spec.moment).numbers[spec.moment];
    ConvergenceTrace trace;
    trace.p = p;
    for (unsigned n = 1; n <= max_level; ++n) {
        trace.levels.push_back(n);
        trace.valuations.push_back(padic_valuation(riemann_sum(spec, p, n) - target, p));
    }
    trace.pass = convergence_pass(trace.levels, trace.valuations);
    return trace;
}

ShiftDiscrepancy shift_identity_check(const IntegrandSpec& spec, std::uint64_t p, std::uint64_t shift,
                                      unsigned level) {
    if (spec.moment == 0)
        throw MathError(Errc::InvalidArgument, "the shift identity needs moment >= 1");
    if (shift == 0 || level == 0)
        throw MathError(Errc::InvalidArgument, "shift and level must be positive");
    const TwistSpec twist = validated_twist(spec, p);
    const std::uint64_t count = spec.modulus() * ipow(p, level);
    const std::uint64_t s = shift * spec.modulus();
    const unsigned k = spec.moment;
    ShiftDiscrepancy out;
    out.level = level;
    out.discrepancy = weighted_average(twist, k, count, s) - weighted_average(twist, k, count, 0) -
                      power_sum(twist, k - 1, s - 1) * Rational(k);
    out.valuation = padic_valuation(out.discrepancy, p);
    return out;
}

ShiftTrace shift_identity_trace(const IntegrandSpec& spec, std::uint64_t p, std::uint64_t shift,
                                unsigned max_level) {
    ShiftTrace trace;
    trace.p = p;
    trace.pass = true;
    for (unsigned n = 1; n <= max_level; ++n) {
        trace.steps.push_back(shift_identity_check(spec, p, shift, n));
        if (n > 1 && valuation_less(trace.steps[n - 1].valuation, trace.steps[n - 2].valuation))
            trace.pass = false;
    }
    return trace;
}

}  // namespace twb
