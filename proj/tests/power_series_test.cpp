#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"
#include "twb/errors.hpp"
#include "twb/power_series.hpp"

namespace twb {
namespace {

using testing::q;

TruncSeries rational_series(const FieldRef& f, std::initializer_list<Rational> c) {
    std::vector<CycloElem> v;
    for (const auto& x : c)
        v.emplace_back(f, x);
    return TruncSeries(f, std::move(v));
}

TruncSeries random_series(std::mt19937_64& rng, const FieldRef& f, std::size_t order) {
    std::vector<CycloElem> v;
    for (std::size_t i = 0; i <= order; ++i)
        v.push_back(testing::random_elem(rng, f, 5));
    return TruncSeries(f, std::move(v));
}

TEST(ExpAt, Examples) {
    const auto f = CycloField::rationals();
    EXPECT_EQ(exp_at(q(f, 0), 4), rational_series(f, {1, 0, 0, 0, 0}));
    EXPECT_EQ(exp_at(q(f, 1), 2), rational_series(f, {1, 1, Rational(1, 2)}));
    EXPECT_EQ(exp_at(q(f, 2), 3), rational_series(f, {1, 2, 2, Rational(4, 3)}));
}

TEST(SeriesMul, Examples) {
    const auto f = CycloField::rationals();
    const auto a = rational_series(f, {1, 1, Rational(1, 2)});
    const auto b = rational_series(f, {1, -1, Rational(1, 2)});
    EXPECT_EQ(series_mul(a, b), rational_series(f, {1, 0, 0}));
    EXPECT_EQ(series_pow(a, 0), rational_series(f, {1, 0, 0}));
    EXPECT_EQ(series_pow(rational_series(f, {0, 1, 0, 0}), 2), rational_series(f, {0, 0, 1, 0}));
}

TEST(SeriesMul, RejectsMismatchedOperands) {
    const auto f = CycloField::rationals();
    try {
        series_mul(rational_series(f, {1, 1}), rational_series(f, {1, 1, 1}));
        FAIL();
    } catch (const MathError& e) {
        EXPECT_EQ(e.code(), Errc::OrderMismatch);
    }
    try {
        series_add(rational_series(f, {1, 1}), TruncSeries::one(CycloField::get(3), 1));
        FAIL();
    } catch (const MathError& e) {
        EXPECT_EQ(e.code(), Errc::FieldMismatch);
    }
}

TEST(SeriesInvert, Examples) {
    const auto f = CycloField::rationals();
    EXPECT_EQ(series_invert(rational_series(f, {1, Rational(1, 2), Rational(1, 4)})),
              rational_series(f, {1, Rational(-1, 2), 0}));
    EXPECT_EQ(series_invert(rational_series(f, {2, 0, 0})), rational_series(f, {Rational(1, 2), 0, 0}));
    try {
        series_invert(rational_series(f, {0, 1, 0}));
        FAIL();
    } catch (const MathError& e) {
        EXPECT_EQ(e.code(), Errc::NonUnitConstantTerm);
    }
}

TEST(DivideCancel, ClassicalBernoulliKernel) {
    const auto f = CycloField::rationals();
    const std::size_t n = 6;
    const auto t = TruncSeries::one(f, n).times_t();
    const auto den = exp_at(q(f, 1), n) - TruncSeries::one(f, n);
    const auto b = divide_cancel(t, den);
    EXPECT_EQ(b.order(), n - 1);
    EXPECT_EQ(egf_coefficient(b, 0), q(f, 1));
    EXPECT_EQ(egf_coefficient(b, 1), q(f, -1, 2));
    EXPECT_EQ(egf_coefficient(b, 2), q(f, 1, 6));
}

TEST(DivideCancel, TwistedByMinusOneHasNoPole) {
    const auto f = CycloField::rationals();
    const std::size_t n = 5;
    const auto t = TruncSeries::one(f, n).times_t();
    const auto den = exp_at(q(f, 1), n) * q(f, -1) - TruncSeries::one(f, n);
    EXPECT_EQ(den.valuation(), 0u);
    const auto b = divide_cancel(t, den);
    EXPECT_EQ(b.order(), n);
    EXPECT_EQ(b.valuation(), 1u);
    EXPECT_TRUE(b[0].is_zero());
}

TEST(DivideCancel, Errors) {
    const auto f = CycloField::rationals();
    try {
        divide_cancel(rational_series(f, {1, 0, 0}), rational_series(f, {0, 1, 0}));
        FAIL();
    } catch (const MathError& e) {
        EXPECT_EQ(e.code(), Errc::PoleAtZero);
    }
    try {
        divide_cancel(rational_series(f, {1, 0, 0}), rational_series(f, {0, 0, 0}));
        FAIL();
    } catch (const MathError& e) {
        EXPECT_EQ(e.code(), Errc::ZeroDenominator);
    }
}

TEST(EgfCoefficient, Examples) {
    const auto f = CycloField::get(3);
    const auto e = exp_at(q(f, 1), 7);
    for (std::size_t k = 0; k <= 7; ++k)
        EXPECT_TRUE(egf_coefficient(e, k).is_one());
    const auto z = CycloElem::zeta_power(f, 1);
    EXPECT_EQ(egf_coefficient(exp_at(z, 3), 0), q(f, 1));
    try {
        egf_coefficient(e, 8);
        FAIL();
    } catch (const MathError& err) {
        EXPECT_EQ(err.code(), Errc::OrderExceeded);
    }
}

TEST(SeriesProperties, RingLawsOnRandomSeries) {
    std::mt19937_64 rng(21);
    for (std::uint64_t m : {1, 2, 3, 4, 5, 6}) {
        const auto f = CycloField::get(m);
        for (std::size_t n : {0, 3, 10}) {
            const auto a = random_series(rng, f, n);
            const auto b = random_series(rng, f, n);
            const auto c = random_series(rng, f, n);
            EXPECT_EQ(a * b, b * a);
            EXPECT_EQ((a * b) * c, a * (b * c));
        }
    }
}

TEST(SeriesProperties, InverseAndCancellation) {
    std::mt19937_64 rng(22);
    for (std::uint64_t m : {1, 3, 4, 6}) {
        const auto f = CycloField::get(m);
        for (int trial = 0; trial < 5; ++trial) {
            auto s = random_series(rng, f, 8);
            if (s[0].is_zero())
                continue;
            EXPECT_EQ(series_invert(s) * s, TruncSeries::one(f, 8));

            // den with valuation 2, num arbitrary: divide_cancel(num*den, den) == num to order N - 2.
            const auto num = random_series(rng, f, 8);
            const auto den = s.times_t().times_t();
            EXPECT_EQ(divide_cancel(num * den, den), num.truncated(6));
        }
    }
}

TEST(SeriesProperties, ExponentialsAdd) {
    std::mt19937_64 rng(23);
    const auto f = CycloField::get(5);
    for (int trial = 0; trial < 5; ++trial) {
        const auto a = testing::random_elem(rng, f, 4);
        const auto b = testing::random_elem(rng, f, 4);
        EXPECT_EQ(exp_at(a, 8) * exp_at(b, 8), exp_at(a + b, 8));
    }
}

}  // namespace
}  // namespace twb
