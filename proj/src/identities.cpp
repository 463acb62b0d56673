#include "twb/identities.hpp"

#include <array>
#include <atomic>
#include <thread>

#include "twb/errors.hpp"

namespace twb {

namespace {

constexpr std::array<std::pair<IdentityTag, std::string_view>, 10> kTagNames{{
    {IdentityTag::Eq1_13, "eq_1_13"},
    {IdentityTag::Theorem1, "theorem1"},
    {IdentityTag::RemarkM1, "remark_m1"},
    {IdentityTag::Corollary2, "corollary2"},
    {IdentityTag::M1Numbers, "m1_numbers"},
    {IdentityTag::Theorem3, "theorem3"},
    {IdentityTag::Remark2_11, "remark_2_11"},
    {IdentityTag::Corollary4, "corollary4"},
    {IdentityTag::Eq2_12, "eq_2_12"},
    {IdentityTag::PowerSumSeries, "power_sum_series_check"},
}};

Rational int_pow(unsigned base, long e) { return pow(Rational(base), e); }

Rational ratio(unsigned num, unsigned den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Per-instance view of the parameters: the ambient field and memoized numbers.
class Instance {
public:
    Instance(Verifier& v, const IdentityParams& p) : verifier_(v), base_(make_twist(p.chi, p.xi)) {
        if (p.w1 == 0 || p.w2 == 0)
            throw MathError(Errc::InvalidArgument, "w1 and w2 must be positive");
    }

    const FieldRef& field() const { return base_.ambient; }
    std::uint64_t d() const { return base_.modulus(); }

    TwistSpec twist(unsigned w) const { return with_xi_power(base_, w); }

    /// B^{(order)}_{n, chi, xi^w}
    CycloElem number(unsigned order, unsigned w, std::size_t n) const {
        return (*verifier_.cache().numbers(twist(w), order, std::max<std::size_t>(n, 8)))[n];
    }

    /// B^{(order)}_{n, chi, xi^w}(x)
    CycloPoly polynomial(unsigned order, unsigned w, std::size_t n) const {
        const auto nums = verifier_.cache().numbers(twist(w), order, std::max<std::size_t>(n, 8));
        std::vector<CycloElem> c(n + 1, CycloElem(field()));
        for (std::size_t j = 0; j <= n; ++j)
            c[n - j] = (*nums)[j] * Rational(binomial(n, j));
        return CycloPoly(field(), std::move(c));
    }

    /// T_{0..k_max, chi, xi^w}(upto)
    std::vector<CycloElem> power_sums(unsigned w, unsigned k_max, std::uint64_t upto) const {
        return twb::power_sums(twist(w), k_max, upto);
    }

    /// chi(i) xi^{w i}
    CycloElem weight(unsigned w, std::uint64_t i) const { return twist(w).weight(i); }

private:
    Verifier& verifier_;
    TwistSpec base_;
};

std::optional<Location> mismatch_of(const Side& lhs, const Side& rhs) {
    if (lhs.index() != rhs.index())
        return Location{};
    if (const auto* a = std::get_if<CycloElem>(&lhs)) {
        if (*a == std::get<CycloElem>(rhs))
            return std::nullopt;
        return Location{};
    }
    if (const auto* a = std::get_if<CycloPoly>(&lhs)) {
        const auto& b = std::get<CycloPoly>(rhs);
        const auto len = static_cast<std::size_t>(std::max(a->degree(), b.degree()) + 1);
        for (std::size_t i = 0; i < len; ++i)
            if (!(a->coeff(i) == b.coeff(i)))
                return Location{i, 0};
        return std::nullopt;
    }
    const auto diff = first_difference(std::get<BivariatePoly>(lhs), std::get<BivariatePoly>(rhs));
    if (!diff)
        return std::nullopt;
    return Location{diff->first, diff->second};
}

Reading compare(std::string name, Side lhs, Side rhs) {
    Reading r;
    r.name = std::move(name);
    r.mismatch = mismatch_of(lhs, rhs);
    r.holds = !r.mismatch;
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    return r;
}

IdentityReport make_report(IdentityTag tag, const IdentityParams& p, std::vector<Reading> readings) {
    IdentityReport rep;
    rep.tag = tag;
    rep.params = p;
    rep.holds = readings.front().holds;
    rep.lhs = readings.front().lhs;
    rep.rhs = readings.front().rhs;
    rep.mismatch = readings.front().mismatch;
    rep.readings = std::move(readings);
    return rep;
}

// Theorem 1 side for (a, b) = (w1, w2) or (w2, w1):
//   sum_j C(n,j) b^j a^{n-j-1} B^{(m)}_{n-j,xi^a}(b x)
//         * sum_k C(j,k) T_{k,xi^b}(a d - 1) B^{(m-1)}_{j-k,xi^inner}(a y)
BivariatePoly theorem1_side(const Instance& in, unsigned n, unsigned m, unsigned a, unsigned b, unsigned inner) {
    const auto t = in.power_sums(b, n, a * in.d() - 1);
    BivariatePoly acc(in.field());
    for (unsigned j = 0; j <= n; ++j) {
        CycloPoly px = in.polynomial(m, a, n - j).compose_affine(Rational(b), 0);
        px *= Rational(binomial(n, j)) * int_pow(b, j) * int_pow(a, static_cast<long>(n) - j - 1);
        CycloPoly py(in.field());
        for (unsigned k = 0; k <= j; ++k) {
            if (t[k].is_zero())
                continue;
            py += in.polynomial(m - 1, inner, j - k).compose_affine(Rational(a), 0) * (t[k] * Rational(binomial(j, k)));
        }
        acc += BivariatePoly::outer(px, py);
    }
    return acc;
}

// Same expression with x = y = 0, summed directly over the numbers.
CycloElem corollary2_side(const Instance& in, unsigned n, unsigned m, unsigned a, unsigned b) {
    const auto t = in.power_sums(b, n, a * in.d() - 1);
    CycloElem acc(in.field());
    for (unsigned j = 0; j <= n; ++j) {
        CycloElem inner(in.field());
        for (unsigned k = 0; k <= j; ++k)
            inner += t[k] * in.number(m - 1, b, j - k) * Rational(binomial(j, k));
        acc += in.number(m, a, n - j) * inner *
               (Rational(binomial(n, j)) * int_pow(b, j) * int_pow(a, static_cast<long>(n) - j - 1));
    }
    return acc;
}

// sum_j C(n,j) b^j a^{n-j-1} B_{n-j,xi^a}(b x) T_{j,xi^b}(a d - 1), with
// B_N(b x) expanded coefficient by coefficient: [x^i] = C(N,i) B_{N-i} b^i.
CycloPoly remark_m1_side(const Instance& in, unsigned n, unsigned a, unsigned b) {
    const auto t = in.power_sums(b, n, a * in.d() - 1);
    std::vector<CycloElem> c(n + 1, CycloElem(in.field()));
    for (unsigned j = 0; j <= n; ++j) {
        const unsigned deg = n - j;
        const Rational outer = Rational(binomial(n, j)) * int_pow(b, j) * int_pow(a, static_cast<long>(n) - j - 1);
        for (unsigned i = 0; i <= deg; ++i)
            c[i] += in.number(1, a, deg - i) * t[j] * (outer * Rational(binomial(deg, i)) * int_pow(b, i));
    }
    return CycloPoly(in.field(), std::move(c));
}

CycloElem m1_numbers_side(const Instance& in, unsigned n, unsigned a, unsigned b) {
    const auto t = in.power_sums(b, n, a * in.d() - 1);
    CycloElem acc(in.field());
    for (unsigned j = 0; j <= n; ++j)
        acc += in.number(1, a, n - j) * t[j] *
               (Rational(binomial(n, j)) * int_pow(b, j) * int_pow(a, static_cast<long>(n) - j - 1));
    return acc;
}

// Theorem 3 side:
//   sum_k C(n,k) a^{k-1} b^{n-k} B^{(m-1)}_{n-k,xi^b}(a y)
//         * sum_{i<ad} chi(i) xi^{b i} B^{(m)}_{k,xi^a}(b x + (b/a) i)
BivariatePoly theorem3_side(const Instance& in, unsigned n, unsigned m, unsigned a, unsigned b) {
    BivariatePoly acc(in.field());
    const std::uint64_t range = a * in.d();
    for (unsigned k = 0; k <= n; ++k) {
        CycloPoly py = in.polynomial(m - 1, b, n - k).compose_affine(Rational(a), 0);
        if (py.is_zero())
            continue;
        const CycloPoly bk = in.polynomial(m, a, k);
        CycloPoly px(in.field());
        for (std::uint64_t i = 0; i < range; ++i) {
            const auto w = in.weight(b, i);
            if (w.is_zero())
                continue;
            px += bk.compose_affine(Rational(b), ratio(b * static_cast<unsigned>(i), a)) * w;
        }
        px *= Rational(binomial(n, k)) * int_pow(a, static_cast<long>(k) - 1) * int_pow(b, n - k);
        acc += BivariatePoly::outer(px, py);
    }
    return acc;
}

CycloElem corollary4_side(const Instance& in, unsigned n, unsigned m, unsigned a, unsigned b) {
    CycloElem acc(in.field());
    const std::uint64_t range = a * in.d();
    for (unsigned k = 0; k <= n; ++k) {
        const auto lead = in.number(m - 1, b, n - k);
        if (lead.is_zero())
            continue;
        const CycloPoly bk = in.polynomial(m, a, k);
        CycloElem inner(in.field());
        for (std::uint64_t i = 0; i < range; ++i) {
            const auto w = in.weight(b, i);
            if (!w.is_zero())
                inner += w * bk.evaluate(ratio(b * static_cast<unsigned>(i), a));
        }
        acc += lead * inner * (Rational(binomial(n, k)) * int_pow(a, static_cast<long>(k) - 1) * int_pow(b, n - k));
    }
    return acc;
}

// a^{n-1} sum_{i<ad} chi(i) [xi^{b i}] B_{n,xi^a}(b x + (b/a) i), expanding
// B_n(b x + c) = sum_j C(n,j) B_{n-j} sum_l C(j,l) b^l c^{j-l} x^l directly.
CycloPoly remark_2_11_side(const Instance& in, unsigned n, unsigned a, unsigned b, bool weighted) {
    std::vector<CycloElem> c(n + 1, CycloElem(in.field()));
    const std::uint64_t range = a * in.d();
    for (std::uint64_t i = 0; i < range; ++i) {
        const auto& chi_i = in.weight(0, i);
        if (chi_i.is_zero())
            continue;
        const CycloElem w = weighted ? in.weight(b, i) : chi_i;
        const Rational shift = ratio(b * static_cast<unsigned>(i), a);
        for (unsigned j = 0; j <= n; ++j) {
            const CycloElem bj = in.number(1, a, n - j) * w * Rational(binomial(n, j));
            for (unsigned l = 0; l <= j; ++l) {
                const Rational shift_pow = (j - l == 0) ? Rational(1) : pow(shift, j - l);
                c[l] += bj * (Rational(binomial(j, l)) * int_pow(b, l) * shift_pow);
            }
        }
    }
    CycloPoly out(in.field(), std::move(c));
    out *= int_pow(a, static_cast<long>(n) - 1);
    return out;
}

CycloElem eq_2_12_side(const Instance& in, unsigned n, unsigned a, unsigned b) {
    const CycloPoly bn = in.polynomial(1, a, n);
    CycloElem acc(in.field());
    for (std::uint64_t i = 0; i < a * in.d(); ++i) {
        const auto w = in.weight(b, i);
        if (!w.is_zero())
            acc += w * bn.evaluate(ratio(b * static_cast<unsigned>(i), a));
    }
    return acc * int_pow(a, static_cast<long>(n) - 1);
}

void require_m(const IdentityParams& p) {
    if (p.m == 0)
        throw MathError(Errc::InvalidArgument, "m must be at least 1");
}

}  // namespace

std::string_view tag_name(IdentityTag tag) {
    for (const auto& [t, name] : kTagNames)
        if (t == tag)
            return name;
    return "unknown";
}

std::optional<IdentityTag> parse_tag(std::string_view name) {
    for (const auto& [t, n] : kTagNames)
        if (n == name)
            return t;
    return std::nullopt;
}

const std::vector<IdentityTag>& all_tags() {
    static const std::vector<IdentityTag> tags = [] {
        std::vector<IdentityTag> v;
        for (const auto& [t, name] : kTagNames)
            v.push_back(t);
        return v;
    }();
    return tags;
}

bool IdentityReport::any_reading_holds() const {
    for (const auto& r : readings)
        if (r.holds)
            return true;
    return false;
}

IdentityReport Verifier::check(IdentityTag tag, const IdentityParams& p) {
    try {
        switch (tag) {
        case IdentityTag::Eq1_13: return check_eq_1_13(p);
        case IdentityTag::Theorem1: return check_theorem1(p);
        case IdentityTag::RemarkM1: return check_remark_m1(p);
        case IdentityTag::Corollary2: return check_corollary2(p);
        case IdentityTag::M1Numbers: return check_m1_numbers(p);
        case IdentityTag::Theorem3: return check_theorem3(p);
        case IdentityTag::Remark2_11: return check_remark_2_11(p);
        case IdentityTag::Corollary4: return check_corollary4(p);
        case IdentityTag::Eq2_12: return check_eq_2_12(p);
        case IdentityTag::PowerSumSeries: return check_power_sum_series(p);
        }
        throw MathError(Errc::InvalidArgument, "unknown identity");
    } catch (const std::exception& e) {
        IdentityReport rep;
        rep.tag = tag;
        rep.params = p;
        rep.error = e.what();
        return rep;
    }
}

IdentityReport Verifier::check_eq_1_13(const IdentityParams& p) {
    if (p.k == 0 || p.n == 0)
        throw MathError(Errc::InvalidArgument, "eq_1_13 needs k >= 1 and n >= 1");
    const Instance in(*this, p);
    const auto nd = static_cast<std::uint64_t>(p.n) * in.d();
    const TwistSpec spec = in.twist(1);
    const CycloPoly bk = in.polynomial(1, 1, p.k);
    CycloElem lhs = spec.xi_power(static_cast<std::int64_t>(nd)) * bk.evaluate(Rational(nd)) - in.number(1, 1, p.k);
    lhs *= Rational(1, p.k);
    const CycloElem rhs = power_sum(spec, p.k - 1, nd - 1);
    return make_report(IdentityTag::Eq1_13, p, {compare("literal", lhs, rhs)});
}

IdentityReport Verifier::check_theorem1(const IdentityParams& p) {
    require_m(p);
    const Instance in(*this, p);
    auto lhs = theorem1_side(in, p.n, p.m, p.w1, p.w2, p.w2);
    auto rhs = theorem1_side(in, p.n, p.m, p.w2, p.w1, p.w1);
    // Alternative reading: the swapped side keeps xi^{w2} on the order-(m-1)
    // factor.
    auto rhs_alt = theorem1_side(in, p.n, p.m, p.w2, p.w1, p.w2);
    std::vector<Reading> readings;
    readings.push_back(compare("symmetric", lhs, std::move(rhs)));
    readings.push_back(compare("inner_twist_fixed", std::move(lhs), std::move(rhs_alt)));
    return make_report(IdentityTag::Theorem1, p, std::move(readings));
}

IdentityReport Verifier::check_remark_m1(const IdentityParams& p) {
    const Instance in(*this, p);
    return make_report(IdentityTag::RemarkM1, p,
                       {compare("literal", remark_m1_side(in, p.n, p.w1, p.w2), remark_m1_side(in, p.n, p.w2, p.w1))});
}

IdentityReport Verifier::check_corollary2(const IdentityParams& p) {
    require_m(p);
    const Instance in(*this, p);
    return make_report(IdentityTag::Corollary2, p,
                       {compare("literal", corollary2_side(in, p.n, p.m, p.w1, p.w2),
                                corollary2_side(in, p.n, p.m, p.w2, p.w1))});
}

IdentityReport Verifier::check_m1_numbers(const IdentityParams& p) {
    const Instance in(*this, p);
    return make_report(IdentityTag::M1Numbers, p,
                       {compare("literal", m1_numbers_side(in, p.n, p.w1, p.w2), m1_numbers_side(in, p.n, p.w2, p.w1))});
}

IdentityReport Verifier::check_theorem3(const IdentityParams& p) {
    require_m(p);
    const Instance in(*this, p);
    return make_report(IdentityTag::Theorem3, p,
                       {compare("literal", theorem3_side(in, p.n, p.m, p.w1, p.w2),
                                theorem3_side(in, p.n, p.m, p.w2, p.w1))});
}

IdentityReport Verifier::check_remark_2_11(const IdentityParams& p) {
    const Instance in(*this, p);
    std::vector<Reading> readings;
    readings.push_back(compare("theorem3_literal", remark_2_11_side(in, p.n, p.w1, p.w2, true),
                               remark_2_11_side(in, p.n, p.w2, p.w1, true)));
    readings.push_back(compare("unweighted", remark_2_11_side(in, p.n, p.w1, p.w2, false),
                               remark_2_11_side(in, p.n, p.w2, p.w1, false)));
    return make_report(IdentityTag::Remark2_11, p, std::move(readings));
}

IdentityReport Verifier::check_corollary4(const IdentityParams& p) {
    require_m(p);
    const Instance in(*this, p);
    return make_report(IdentityTag::Corollary4, p,
                       {compare("literal", corollary4_side(in, p.n, p.m, p.w1, p.w2),
                                corollary4_side(in, p.n, p.m, p.w2, p.w1))});
}

IdentityReport Verifier::check_eq_2_12(const IdentityParams& p) {
    const Instance in(*this, p);
    return make_report(IdentityTag::Eq2_12, p,
                       {compare("literal", eq_2_12_side(in, p.n, p.w1, p.w2), eq_2_12_side(in, p.n, p.w2, p.w1))});
}

IdentityReport Verifier::check_power_sum_series(const IdentityParams& p) {
    const Instance in(*this, p);
    const auto cmp = power_sum_series_check(in.twist(1), p.n, p.order);
    Reading r;
    r.name = "literal";
    r.holds = cmp.agree;
    r.lhs = CycloPoly(in.field(), cmp.lhs);
    r.rhs = CycloPoly(in.field(), cmp.rhs);
    if (cmp.first_mismatch)
        r.mismatch = Location{*cmp.first_mismatch, 0};
    return make_report(IdentityTag::PowerSumSeries, p, {std::move(r)});
}

// ---------------------------------------------------------------------------

namespace {

IdentityParams with_m(IdentityParams p, unsigned m) {
    p.m = m;
    return p;
}

Coherence compare_sides(const Side& l1, const Side& r1, const Side& l2, const Side& r2) {
    return Coherence{!mismatch_of(l1, l2), !mismatch_of(r1, r2)};
}

void require_ok(const IdentityReport& r) {
    if (!r.error.empty())
        throw MathError(Errc::InvalidArgument, std::string(tag_name(r.tag)) + ": " + r.error);
}

}  // namespace

Coherence theorem1_vs_remark_m1(Verifier& v, const IdentityParams& p) {
    const auto t1 = v.check(IdentityTag::Theorem1, with_m(p, 1));
    const auto rm = v.check(IdentityTag::RemarkM1, p);
    require_ok(t1);
    require_ok(rm);
    return compare_sides(std::get<BivariatePoly>(t1.lhs).at_y_zero(), std::get<BivariatePoly>(t1.rhs).at_y_zero(),
                         rm.lhs, rm.rhs);
}

Coherence theorem3_vs_remark_2_11(Verifier& v, const IdentityParams& p) {
    const auto t3 = v.check(IdentityTag::Theorem3, with_m(p, 1));
    const auto rm = v.check(IdentityTag::Remark2_11, p);
    require_ok(t3);
    require_ok(rm);
    return compare_sides(std::get<BivariatePoly>(t3.lhs).at_y_zero(), std::get<BivariatePoly>(t3.rhs).at_y_zero(),
                         rm.readings.at(0).lhs, rm.readings.at(0).rhs);
}

Coherence theorem1_vs_corollary2(Verifier& v, const IdentityParams& p) {
    const auto t1 = v.check(IdentityTag::Theorem1, p);
    const auto c2 = v.check(IdentityTag::Corollary2, p);
    require_ok(t1);
    require_ok(c2);
    return compare_sides(std::get<BivariatePoly>(t1.lhs).coeff(0, 0), std::get<BivariatePoly>(t1.rhs).coeff(0, 0),
                         c2.lhs, c2.rhs);
}

Coherence theorem3_vs_corollary4(Verifier& v, const IdentityParams& p) {
    const auto t3 = v.check(IdentityTag::Theorem3, p);
    const auto c4 = v.check(IdentityTag::Corollary4, p);
    require_ok(t3);
    require_ok(c4);
    return compare_sides(std::get<BivariatePoly>(t3.lhs).coeff(0, 0), std::get<BivariatePoly>(t3.rhs).coeff(0, 0),
                         c4.lhs, c4.rhs);
}

// ---------------------------------------------------------------------------
// Sweeps

namespace {

bool uses_m(IdentityTag t) {
    return t == IdentityTag::Theorem1 || t == IdentityTag::Corollary2 || t == IdentityTag::Theorem3 ||
           t == IdentityTag::Corollary4;
}

bool uses_weights(IdentityTag t) { return t != IdentityTag::Eq1_13 && t != IdentityTag::PowerSumSeries; }

std::vector<unsigned> range(unsigned lo, unsigned hi) {
    std::vector<unsigned> v;
    for (unsigned i = lo; i <= hi; ++i)
        v.push_back(i);
    return v;
}

std::vector<std::pair<DirichletCharacter, std::string>> characters_for(const CharacterSelector& sel, std::uint64_t d) {
    using Kind = CharacterSelector::Kind;
    switch (sel.kind) {
    case Kind::Principal:
        return {{principal(d), "principal"}};
    case Kind::Table:
        if (sel.table.size() != d)
            return {};
        return {{from_table(d, sel.table), "table"}};
    case Kind::Index: {
        auto all = enumerate_cyclic(d);
        if (sel.index >= all.size())
            throw MathError(Errc::InvalidArgument, "character index out of range for modulus " + std::to_string(d));
        return {{all[sel.index], "index:" + std::to_string(sel.index)}};
    }
    case Kind::All: {
        std::vector<std::pair<DirichletCharacter, std::string>> out;
        if (!has_cyclic_unit_group(d))
            return {{principal(d), "principal"}};
        auto all = enumerate_cyclic(d);
        for (std::size_t j = 0; j < all.size(); ++j)
            out.emplace_back(all[j], "index:" + std::to_string(j));
        return out;
    }
    }
    return {};
}

}  // namespace

std::vector<SweepInstance> expand(const GridConfig& grid) {
    std::vector<SweepInstance> out;
    for (const IdentityTag tag : grid.identities) {
        const bool eq113 = tag == IdentityTag::Eq1_13;
        const bool needs_positive_n = eq113 || tag == IdentityTag::PowerSumSeries;
        const auto n_values = grid.n ? *grid.n : range(needs_positive_n ? 1 : 0, grid.n_max);
        const auto k_values = eq113 ? (grid.k ? *grid.k : range(1, grid.n_max)) : std::vector<unsigned>{1};
        const auto w1_values = uses_weights(tag) ? grid.w1 : std::vector<unsigned>{1};
        const auto w2_values = uses_weights(tag) ? grid.w2 : std::vector<unsigned>{1};
        const auto m_values = uses_m(tag) ? grid.m : std::vector<unsigned>{1};
        for (const auto d : grid.d) {
            for (const auto& [chi, label] : characters_for(grid.character, d)) {
                for (const auto& xi : grid.xi) {
                    for (const auto w1 : w1_values) {
                        for (const auto w2 : w2_values) {
                            for (const auto m : m_values) {
                                for (const auto k : k_values) {
                                    for (const auto n : n_values) {
                                        IdentityParams p;
                                        p.chi = chi;
                                        p.chi_label = label;
                                        p.xi = xi.normalized();
                                        p.n = n;
                                        p.m = m;
                                        p.k = k;
                                        p.w1 = w1;
                                        p.w2 = w2;
                                        p.order = grid.order;
                                        out.push_back({tag, std::move(p)});
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    return out;
}

SweepResult sweep(Verifier& verifier, const std::vector<GridConfig>& grids, unsigned jobs) {
    std::vector<SweepInstance> instances;
    for (const auto& g : grids) {
        auto part = expand(g);
        std::move(part.begin(), part.end(), std::back_inserter(instances));
    }

    SweepResult result;
    result.reports.resize(instances.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < instances.size(); i = next++)
            result.reports[i] = verifier.check(instances[i].tag, instances[i].params);
    };
    const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(instances.size())));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back(worker);
    }

    auto& s = result.summary;
    s.total = result.reports.size();
    for (const auto& r : result.reports) {
        const bool ok = r.error.empty() && r.holds;
        if (ok) {
            ++s.holds;
        } else {
            ++s.fails;
            if (!r.error.empty())
                ++s.errors;
        }
    }
    return result;
}

}  // namespace twb
