#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"
#include "twb/errors.hpp"
#include "twb/identities.hpp"

namespace twb {
namespace {

using testing::q;

DirichletCharacter legendre3() { return enumerate_cyclic(3).at(1); }

DirichletCharacter chi4() {
    return from_table(4, {std::nullopt, RootOfUnity(1, 0), std::nullopt, RootOfUnity(2, 1)});
}

IdentityParams params(DirichletCharacter chi, RootOfUnity xi, unsigned n, unsigned m, unsigned w1, unsigned w2) {
    IdentityParams p;
    p.chi = std::move(chi);
    p.xi = xi;
    p.n = n;
    p.m = m;
    p.w1 = w1;
    p.w2 = w2;
    return p;
}

IdentityParams swapped(IdentityParams p) {
    std::swap(p.w1, p.w2);
    return p;
}

bool same_side(const Side& a, const Side& b) {
    if (a.index() != b.index())
        return false;
    return std::visit([&](const auto& x) { return x == std::get<std::decay_t<decltype(x)>>(b); }, a);
}

// Theorem 1 side evaluated at a point from scalar Bernoulli values.
CycloElem theorem1_at(const IdentityParams& p, unsigned a, unsigned b, unsigned inner, const Rational& x,
                      const Rational& y) {
    const TwistSpec base = make_twist(p.chi, p.xi);
    const auto sa = with_xi_power(base, a), sb = with_xi_power(base, b), si = with_xi_power(base, inner);
    const auto d = base.modulus();
    CycloElem acc(base.ambient);
    for (unsigned j = 0; j <= p.n; ++j) {
        CycloElem inner_sum(base.ambient);
        for (unsigned k = 0; k <= j; ++k)
            inner_sum += power_sum(sb, k, a * d - 1) * evaluate(polynomial(si, p.m - 1, j - k), Rational(a) * y) *
                         Rational(binomial(j, k));
        acc += evaluate(polynomial(sa, p.m, p.n - j), Rational(b) * x) * inner_sum *
               (Rational(binomial(p.n, j)) * pow(Rational(b), j) * pow(Rational(a), long(p.n) - j - 1));
    }
    return acc;
}

CycloElem theorem3_at(const IdentityParams& p, unsigned a, unsigned b, const Rational& x, const Rational& y) {
    const TwistSpec base = make_twist(p.chi, p.xi);
    const auto sa = with_xi_power(base, a), sb = with_xi_power(base, b);
    CycloElem acc(base.ambient);
    for (unsigned k = 0; k <= p.n; ++k) {
        CycloElem inner(base.ambient);
        for (std::uint64_t i = 0; i < a * base.modulus(); ++i) {
            Rational shift(b * i, a);
            shift.canonicalize();
            inner += sb.weight(i) * evaluate(polynomial(sa, p.m, k), Rational(b) * x + shift);
        }
        acc += evaluate(polynomial(sb, p.m - 1, p.n - k), Rational(a) * y) * inner *
               (Rational(binomial(p.n, k)) * pow(Rational(a), long(k) - 1) * pow(Rational(b), p.n - k));
    }
    return acc;
}

TEST(Eq113, Examples) {
    Verifier v;
    IdentityParams p;
    p.k = 2;
    p.n = 3;
    auto r = v.check(IdentityTag::Eq1_13, p);
    EXPECT_TRUE(r.holds);
    EXPECT_EQ(std::get<CycloElem>(r.lhs), q(CycloField::rationals(), 3));
    EXPECT_EQ(std::get<CycloElem>(r.rhs), q(CycloField::rationals(), 3));

    p.k = 1;
    p.n = 1;
    r = v.check(IdentityTag::Eq1_13, p);
    EXPECT_TRUE(r.holds);
    EXPECT_EQ(std::get<CycloElem>(r.lhs), q(CycloField::rationals(), 1));

    p.chi = chi4();
    p.xi = RootOfUnity(2, 1);
    p.k = 3;
    p.n = 2;
    EXPECT_TRUE(v.check(IdentityTag::Eq1_13, p).holds);
}

TEST(Eq113, ZeroKIsAnError) {
    Verifier v;
    IdentityParams p;
    p.k = 0;
    p.n = 1;
    const auto r = v.check(IdentityTag::Eq1_13, p);
    EXPECT_FALSE(r.holds);
    EXPECT_FALSE(r.error.empty());
}

TEST(Theorem1, ClassicalExample) {
    Verifier v;
    const auto r = v.check(IdentityTag::Theorem1, params(principal(1), RootOfUnity(), 1, 1, 1, 2));
    ASSERT_TRUE(r.error.empty()) << r.error;
    EXPECT_TRUE(r.holds);
    const auto& f = CycloField::rationals();
    const auto expected = CycloPoly(f, {q(f, -1, 2), q(f, 2)});
    for (const Side* s : {&r.lhs, &r.rhs}) {
        const auto& b = std::get<BivariatePoly>(*s);
        // 2x - 1/2 + 2y; the y-free part is the hand-expanded value.
        EXPECT_EQ(b.at_y_zero(), expected);
        EXPECT_EQ(b.y_degree(), 1);
        EXPECT_EQ(b.coeff(0, 1), q(f, 2));
        EXPECT_EQ(b.x_degree(), 1);
        EXPECT_TRUE(b.coeff(1, 1).is_zero());
    }
}

TEST(Theorem1, TwistedExampleAndPointEvaluation) {
    Verifier v;
    const auto p = params(legendre3(), RootOfUnity(2, 1), 4, 2, 2, 3);
    const auto r = v.check(IdentityTag::Theorem1, p);
    ASSERT_TRUE(r.error.empty()) << r.error;
    EXPECT_TRUE(r.holds);
    std::mt19937_64 rng(7);
    const auto& lhs = std::get<BivariatePoly>(r.lhs);
    const auto& rhs = std::get<BivariatePoly>(r.rhs);
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) {
            const Rational x = testing::random_rational(rng), y = testing::random_rational(rng);
            const auto lx = lhs.evaluate(x, y);
            EXPECT_EQ(lx, rhs.evaluate(x, y));
            EXPECT_EQ(lx, theorem1_at(p, 2, 3, 3, x, y));
            EXPECT_EQ(rhs.evaluate(x, y), theorem1_at(p, 3, 2, 2, x, y));
        }
    }
}

TEST(Theorem1, AlternativeReadingIsReported) {
    Verifier v;
    const auto r = v.check(IdentityTag::Theorem1, params(principal(1), RootOfUnity(3, 1), 3, 2, 1, 2));
    ASSERT_EQ(r.readings.size(), 2u);
    EXPECT_EQ(r.readings[0].name, "symmetric");
    EXPECT_EQ(r.readings[1].name, "inner_twist_fixed");
    EXPECT_TRUE(r.readings[0].holds);
    EXPECT_EQ(r.holds, r.readings[0].holds);
    if (!r.readings[1].holds)
        EXPECT_TRUE(r.readings[1].mismatch.has_value());
}

TEST(RemarkM1, Examples) {
    Verifier v;
    const auto& f = CycloField::rationals();
    auto r = v.check(IdentityTag::RemarkM1, params(principal(1), RootOfUnity(), 1, 1, 1, 2));
    EXPECT_TRUE(r.holds);
    EXPECT_EQ(std::get<CycloPoly>(r.lhs), CycloPoly(f, {q(f, -1, 2), q(f, 2)}));

    r = v.check(IdentityTag::RemarkM1, params(chi4(), RootOfUnity(3, 1), 3, 1, 1, 1));
    EXPECT_TRUE(r.holds);
    EXPECT_TRUE(same_side(r.lhs, r.rhs));

    // n = 0: w1^{-1} T_0(w1 - 1) = 1 on both sides for the classical case.
    r = v.check(IdentityTag::RemarkM1, params(principal(1), RootOfUnity(), 0, 1, 2, 3));
    EXPECT_TRUE(r.holds);
    EXPECT_EQ(std::get<CycloPoly>(r.lhs), CycloPoly::constant(q(f, 1)));
}

TEST(Theorem3, Examples) {
    Verifier v;
    const auto p = params(principal(2), RootOfUnity(4, 1), 3, 2, 1, 3);
    const auto r = v.check(IdentityTag::Theorem3, p);
    ASSERT_TRUE(r.error.empty()) << r.error;
    EXPECT_TRUE(r.holds);
    std::mt19937_64 rng(11);
    for (int i = 0; i < 10; ++i) {
        const Rational x = testing::random_rational(rng), y = testing::random_rational(rng);
        EXPECT_EQ(std::get<BivariatePoly>(r.lhs).evaluate(x, y), theorem3_at(p, 1, 3, x, y));
        EXPECT_EQ(std::get<BivariatePoly>(r.rhs).evaluate(x, y), theorem3_at(p, 3, 1, x, y));
    }
}

TEST(Remark211, BothReadings) {
    Verifier v;
    auto r = v.check(IdentityTag::Remark2_11, params(principal(1), RootOfUnity(), 2, 1, 1, 2));
    ASSERT_EQ(r.readings.size(), 2u);
    EXPECT_EQ(r.readings[0].name, "theorem3_literal");
    EXPECT_EQ(r.readings[1].name, "unweighted");
    EXPECT_TRUE(r.readings[0].holds);
    EXPECT_TRUE(r.readings[1].holds);  // xi = 1: the readings coincide

    // Classical multiplication theorem: B_2(2x) = 2 (B_2(x) + B_2(x + 1/2)).
    const auto b2 = polynomial(make_twist(principal(1), RootOfUnity()), 1, 2);
    EXPECT_EQ(std::get<CycloPoly>(r.lhs), b2.compose_affine(Rational(2), 0));
    EXPECT_EQ(std::get<CycloPoly>(r.rhs),
              (b2 + b2.compose_affine(Rational(1), Rational(1, 2))) * Rational(2));

    r = v.check(IdentityTag::Remark2_11, params(principal(1), RootOfUnity(3, 1), 2, 1, 1, 2));
    EXPECT_TRUE(r.readings[0].holds);
    EXPECT_TRUE(r.any_reading_holds());
}

TEST(Eq212, ClassicalBruteForce) {
    Verifier v;
    const auto r = v.check(IdentityTag::Eq2_12, params(principal(1), RootOfUnity(), 2, 1, 1, 2));
    EXPECT_TRUE(r.holds);
    // lhs = B_2(0) = 1/6; rhs = 2 (B_2(0) + B_2(1/2)) = 2 (1/6 - 1/12) = 1/6.
    EXPECT_EQ(std::get<CycloElem>(r.lhs), q(CycloField::rationals(), 1, 6));
    EXPECT_EQ(std::get<CycloElem>(r.rhs), q(CycloField::rationals(), 1, 6));
    EXPECT_TRUE(v.check(IdentityTag::Eq2_12, params(chi4(), RootOfUnity(2, 1), 3, 1, 2, 3)).holds);
}

TEST(Corollaries, Examples) {
    Verifier v;
    for (const auto tag : {IdentityTag::Corollary2, IdentityTag::M1Numbers, IdentityTag::Corollary4}) {
        EXPECT_TRUE(v.check(tag, params(chi4(), RootOfUnity(3, 1), 3, 2, 2, 2)).holds);
        EXPECT_TRUE(v.check(tag, params(principal(1), RootOfUnity(), 4, 1, 1, 3)).holds);
        EXPECT_TRUE(v.check(tag, params(legendre3(), RootOfUnity(2, 1), 4, 2, 2, 3)).holds);
    }
}

std::vector<IdentityParams> small_cases() {
    std::vector<IdentityParams> out;
    const std::vector<std::pair<DirichletCharacter, RootOfUnity>> twists{
        {principal(1), RootOfUnity()}, {principal(1), RootOfUnity(3, 1)}, {legendre3(), RootOfUnity(2, 1)},
        {chi4(), RootOfUnity(4, 1)},   {principal(2), RootOfUnity(9, 2)}};
    for (const auto& [chi, xi] : twists)
        for (unsigned n : {0u, 2u, 3u})
            for (auto [w1, w2] : {std::pair{1u, 2u}, std::pair{3u, 2u}})
                for (unsigned m : {1u, 2u})
                    out.push_back(params(chi, xi, n, m, w1, w2));
    return out;
}

TEST(Properties, SwapSymmetry) {
    Verifier v;
    for (const auto& p : small_cases()) {
        for (const auto tag : all_tags()) {
            if (tag == IdentityTag::Eq1_13 || tag == IdentityTag::PowerSumSeries)
                continue;
            const auto a = v.check(tag, p);
            const auto b = v.check(tag, swapped(p));
            ASSERT_TRUE(a.error.empty()) << a.error;
            EXPECT_TRUE(same_side(a.lhs, b.rhs)) << tag_name(tag);
            EXPECT_TRUE(same_side(a.rhs, b.lhs)) << tag_name(tag);
        }
    }
}

TEST(Properties, EqualWeightsHold) {
    Verifier v;
    for (auto p : small_cases()) {
        p.w2 = p.w1;
        for (const auto tag : all_tags()) {
            if (tag == IdentityTag::Eq1_13 || tag == IdentityTag::PowerSumSeries)
                continue;
            const auto r = v.check(tag, p);
            EXPECT_TRUE(r.holds) << tag_name(tag);
            EXPECT_TRUE(r.any_reading_holds());
        }
    }
}

TEST(Properties, RandomPointSoundness) {
    Verifier v;
    std::mt19937_64 rng(3);
    for (const auto& p : small_cases()) {
        for (const auto tag : {IdentityTag::Theorem1, IdentityTag::Theorem3}) {
            const auto r = v.check(tag, p);
            ASSERT_TRUE(r.holds) << tag_name(tag);
            const auto& lhs = std::get<BivariatePoly>(r.lhs);
            const auto& rhs = std::get<BivariatePoly>(r.rhs);
            for (int i = 0; i < 10; ++i) {
                const Rational x = testing::random_rational(rng), y = testing::random_rational(rng);
                EXPECT_EQ(lhs.evaluate(x, y), rhs.evaluate(x, y));
            }
        }
    }
}

TEST(Properties, SpecializationCoherence) {
    Verifier v;
    for (const auto& p : small_cases()) {
        EXPECT_TRUE(theorem1_vs_corollary2(v, p).holds());
        EXPECT_TRUE(theorem3_vs_corollary4(v, p).holds());
        if (p.m == 1) {
            EXPECT_TRUE(theorem1_vs_remark_m1(v, p).holds());
            EXPECT_TRUE(theorem3_vs_remark_2_11(v, p).holds());
        }
    }
}

TEST(Properties, AllIdentitiesHoldOnSmallCases) {
    Verifier v;
    for (auto p : small_cases()) {
        for (const auto tag : all_tags()) {
            if (tag == IdentityTag::Eq1_13 || tag == IdentityTag::PowerSumSeries) {
                p.n = std::max(p.n, 1u);
                p.k = 2;
            }
            const auto r = v.check(tag, p);
            EXPECT_TRUE(r.holds) << tag_name(tag) << " " << r.error;
        }
    }
}

TEST(Tags, RoundTrip) {
    EXPECT_EQ(all_tags().size(), 10u);
    for (const auto tag : all_tags())
        EXPECT_EQ(parse_tag(tag_name(tag)), tag);
    EXPECT_FALSE(parse_tag("theorem2").has_value());
}

TEST(Sweep, EmptyGrid) {
    Verifier v;
    const auto res = sweep(v, {});
    EXPECT_TRUE(res.reports.empty());
    EXPECT_EQ(res.summary.total, 0u);
    EXPECT_EQ(res.summary.holds, 0u);
}

TEST(Sweep, ClassicalEq113Grid) {
    Verifier v;
    GridConfig g;
    g.identities = {IdentityTag::Eq1_13};
    g.n_max = 4;
    const auto res = sweep(v, {g});
    EXPECT_EQ(res.summary.total, 16u);
    EXPECT_EQ(res.summary.holds, 16u);
    // (k, n) lexicographic
    EXPECT_EQ(res.reports[0].params.k, 1u);
    EXPECT_EQ(res.reports[0].params.n, 1u);
    EXPECT_EQ(res.reports[1].params.n, 2u);
    EXPECT_EQ(res.reports[4].params.k, 2u);
}

TEST(Sweep, ExpansionCollapsesUnusedAxes) {
    GridConfig g;
    g.identities = {IdentityTag::Eq2_12, IdentityTag::Theorem1};
    g.d = {1, 3};
    g.w1 = {1, 2};
    g.w2 = {1, 2};
    g.m = {1, 2, 3};
    g.n_max = 2;
    const auto inst = expand(g);
    // eq_2_12: (1 + 2 characters) * 4 weight pairs * 3 n; theorem1 additionally * 3 m
    EXPECT_EQ(inst.size(), 3u * 4 * 3 + 3u * 4 * 3 * 3);
    EXPECT_EQ(inst.front().tag, IdentityTag::Eq2_12);
    EXPECT_EQ(inst.back().tag, IdentityTag::Theorem1);
}

TEST(Sweep, JobsDoNotChangeResults) {
    GridConfig g;
    g.identities = {IdentityTag::Corollary2, IdentityTag::Eq2_12};
    g.d = {3, 4};
    g.xi = {RootOfUnity(), RootOfUnity(3, 1)};
    g.w1 = {1, 2};
    g.w2 = {2, 3};
    g.n_max = 3;
    Verifier v1, v3;
    const auto a = sweep(v1, {g}, 1);
    const auto b = sweep(v3, {g}, 3);
    ASSERT_EQ(a.reports.size(), b.reports.size());
    EXPECT_EQ(a.summary.holds, a.summary.total);
    for (std::size_t i = 0; i < a.reports.size(); ++i) {
        EXPECT_EQ(a.reports[i].tag, b.reports[i].tag);
        EXPECT_TRUE(same_side(a.reports[i].lhs, b.reports[i].lhs));
    }
}

TEST(Sweep, ErrorsAreRecorded) {
    Verifier v;
    GridConfig g;
    g.identities = {IdentityTag::Theorem1};
    g.w1 = {0, 1};
    g.n = std::vector<unsigned>{1};
    const auto res = sweep(v, {g});
    EXPECT_EQ(res.summary.total, 2u);
    EXPECT_EQ(res.summary.errors, 1u);
    EXPECT_EQ(res.summary.fails, 1u);
    EXPECT_EQ(res.summary.holds, 1u);
}

}  // namespace
}  // namespace twb
