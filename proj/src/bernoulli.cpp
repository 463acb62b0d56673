#include "twb/bernoulli.hpp"

#include <numeric>

#include "twb/errors.hpp"

namespace twb {

CycloElem TwistSpec::weight(std::uint64_t a) const {
    const auto& v = chi.at(a);
    if (!v)
        return CycloElem(ambient);
    return as_cyclo(*v * xi.pow(static_cast<std::int64_t>(a % xi.order())), ambient);
}

CycloElem TwistSpec::xi_power(std::int64_t e) const { return as_cyclo(xi.pow(e), ambient); }

TwistSpec make_twist(const DirichletCharacter& chi, const RootOfUnity& xi) {
    return make_twist(chi, xi, canonical_conductor(std::lcm(xi.multiplicative_order(), chi.value_order())));
}

TwistSpec make_twist(const DirichletCharacter& chi, const RootOfUnity& xi, std::uint64_t conductor) {
    if (conductor == 0 || !field_contains_root(conductor, xi.multiplicative_order()) ||
        !field_contains_root(conductor, chi.value_order()))
        throw MathError(Errc::NonDivisibleConductor,
                        "ambient conductor " + std::to_string(conductor) + " cannot hold " + xi.to_string() +
                            " and values of order " + std::to_string(chi.value_order()));
    return TwistSpec{chi, xi, CycloField::get(conductor)};
}

TwistSpec with_xi_power(const TwistSpec& spec, std::int64_t w) {
    return TwistSpec{spec.chi, spec.xi.pow(w), spec.ambient};
}

TwistSpec conjugate(const TwistSpec& spec, std::int64_t s) {
    // For odd m the automorphism zeta_m -> zeta_m^s sends zeta_2m to zeta_2m^s'
    // with s' the odd lift of s; this matters for values of even order.
    const auto m = static_cast<std::int64_t>(spec.ambient->conductor());
    if (m % 2 == 1 && s % 2 == 0)
        s += m;
    return TwistSpec{spec.chi.pow(s), spec.xi.pow(s), spec.ambient};
}

namespace {

// sum_{a<d} chi(a) xi^a e^{at}
TruncSeries weighted_exponentials(const TwistSpec& spec, std::size_t order) {
    TruncSeries s(spec.ambient, order);
    for (std::uint64_t a = 0; a < spec.modulus(); ++a) {
        const auto w = spec.weight(a);
        if (w.is_zero())
            continue;
        s = s + exp_at(CycloElem(spec.ambient, Rational(a)), order) * w;
    }
    return s;
}

// scale * e^{rate t} - 1
TruncSeries shifted_exponential(const CycloElem& scale, std::uint64_t rate, std::size_t order) {
    const auto& f = scale.field();
    return exp_at(CycloElem(f, Rational(rate)), order) * scale - TruncSeries::one(f, order);
}

}  // namespace

TruncSeries kernel_series(const TwistSpec& spec, std::size_t order) {
    const std::size_t work = order + 1;
    const auto d = spec.modulus();
    const TruncSeries num = weighted_exponentials(spec, work).times_t();
    const TruncSeries den = shifted_exponential(spec.xi_power(static_cast<std::int64_t>(d)), d, work);
    return divide_cancel(num, den).truncated(order);
}

TruncSeries generating_series(const TwistSpec& spec, unsigned k, std::size_t order) {
    if (k == 0)
        return TruncSeries::one(spec.ambient, order);
    return series_pow(kernel_series(spec, order), k);
}

BernoulliFamily numbers(const TwistSpec& spec, unsigned k, std::size_t max_n) {
    const TruncSeries s = generating_series(spec, k, max_n + 2);
    BernoulliFamily family{spec, k, {}};
    family.numbers.reserve(max_n + 1);
    for (std::size_t n = 0; n <= max_n; ++n)
        family.numbers.push_back(egf_coefficient(s, n));
    return family;
}

BernoulliPolynomial polynomial(const BernoulliFamily& family, std::size_t n) {
    if (n > family.max_n())
        throw MathError(Errc::OrderExceeded, "polynomial of degree " + std::to_string(n) + " from " +
                                                 std::to_string(family.max_n() + 1) + " numbers");
    std::vector<CycloElem> coeffs(n + 1, CycloElem(family.spec.ambient));
    for (std::size_t j = 0; j <= n; ++j)
        coeffs[n - j] = family.numbers[j] * Rational(binomial(n, j));
    return CycloPoly(family.spec.ambient, std::move(coeffs));
}

BernoulliPolynomial polynomial(const TwistSpec& spec, unsigned k, std::size_t n) {
    return polynomial(numbers(spec, k, n), n);
}

CycloElem evaluate(const BernoulliPolynomial& poly, const CycloElem& arg) { return poly.evaluate(arg); }

CycloElem evaluate(const BernoulliPolynomial& poly, const Rational& arg) { return poly.evaluate(arg); }

CycloElem power_sum(const TwistSpec& spec, unsigned k, std::uint64_t n) {
    CycloElem acc(spec.ambient);
    for (std::uint64_t l = 0; l <= n; ++l) {
        const auto w = spec.weight(l);
        if (w.is_zero())
            continue;
        // 0^0 = 1
        Integer lk;
        mpz_ui_pow_ui(lk.get_mpz_t(), l, k);
        acc += w * Rational(lk);
    }
    return acc;
}

std::vector<CycloElem> power_sums(const TwistSpec& spec, unsigned k_max, std::uint64_t n) {
    std::vector<CycloElem> out(k_max + 1, CycloElem(spec.ambient));
    // Group by the weight chi(l) xi^l, which is periodic with period lcm(d, order(xi)).
    const auto period = std::lcm(spec.modulus(), spec.xi.order());
    std::vector<std::vector<Integer>> sums(period, std::vector<Integer>(k_max + 1));
    for (std::uint64_t l = 0; l <= n; ++l) {
        auto& row = sums[l % period];
        Integer lk = 1;
        for (unsigned k = 0; k <= k_max; ++k) {
            row[k] += lk;
            lk *= l;
        }
    }
    for (std::uint64_t r = 0; r < period; ++r) {
        const auto w = spec.weight(r);
        if (w.is_zero())
            continue;
        for (unsigned k = 0; k <= k_max; ++k)
            if (sums[r][k] != 0)
                out[k] += w * Rational(sums[r][k]);
    }
    return out;
}

SeriesComparison power_sum_series_check(const TwistSpec& spec, std::uint64_t n, std::size_t order) {
    if (n == 0)
        throw MathError(Errc::InvalidArgument, "power_sum_series_check needs n >= 1");
    const std::size_t work = order + 1;
    const auto d = spec.modulus();
    const auto nd = n * d;
    const TruncSeries head = shifted_exponential(spec.xi_power(static_cast<std::int64_t>(nd)), nd, work);
    const TruncSeries num = head * weighted_exponentials(spec, work);
    const TruncSeries den = shifted_exponential(spec.xi_power(static_cast<std::int64_t>(d)), d, work);
    const TruncSeries lhs = divide_cancel(num, den).truncated(order);

    SeriesComparison out;
    out.rhs = power_sums(spec, static_cast<unsigned>(order), nd - 1);
    for (std::size_t k = 0; k <= order; ++k) {
        out.lhs.push_back(egf_coefficient(lhs, k));
        if (!out.first_mismatch && !(out.lhs.back() == out.rhs[k]))
            out.first_mismatch = k;
    }
    out.agree = !out.first_mismatch;
    return out;
}

HeadValuations vanishing_head(const TwistSpec& spec, unsigned k, std::size_t order) {
    const TruncSeries one = kernel_series(spec, order);
    HeadValuations h;
    h.order_one = one.valuation();
    h.order_k = series_pow(one, k).valuation();
    if (!h.order_k)
        h.holds = true;
    else if (!h.order_one)
        h.holds = false;
    else
        h.holds = *h.order_k >= k * *h.order_one;
    return h;
}

std::shared_ptr<const std::vector<CycloElem>> BernoulliCache::numbers(const TwistSpec& spec, unsigned k,
                                                                      std::size_t max_n) {
    std::string key = std::to_string(spec.ambient->conductor()) + "|" + std::to_string(k) + "|" +
                      spec.xi.normalized().to_string() + "|";
    for (const auto& v : spec.chi.values())
        key += v ? v->normalized().to_string() + "," : "0,";
    {
        std::lock_guard lock(mutex_);
        if (auto it = entries_.find(key); it != entries_.end() && it->second->size() > max_n)
            return it->second;
    }
    // Computed outside the lock; a concurrent duplicate computes the same value.
    auto fam = std::make_shared<const std::vector<CycloElem>>(twb::numbers(spec, k, max_n).numbers);
    std::lock_guard lock(mutex_);
    auto& slot = entries_[key];
    if (!slot || slot->size() < fam->size())
        slot = fam;
    return slot;
}

}  // namespace twb
