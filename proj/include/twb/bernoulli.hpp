#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "twb/characters.hpp"
#include "twb/cyclo_poly.hpp"
#include "twb/power_series.hpp"

namespace twb {

/// A character chi, a twist xi and the field both are embedded in.
struct TwistSpec {
    DirichletCharacter chi;
    RootOfUnity xi;
    FieldRef ambient;

    std::uint64_t modulus() const { return chi.modulus(); }
    /// chi(a) xi^a in the ambient field.
    CycloElem weight(std::uint64_t a) const;
    CycloElem xi_power(std::int64_t e) const;
};

/// Ambient field Q(zeta_L), L = lcm(order(xi), value order of chi), with L
/// reduced to its canonical conductor.
TwistSpec make_twist(const DirichletCharacter& chi, const RootOfUnity& xi);
/// Explicit ambient conductor; the field must contain xi and every value of chi.
TwistSpec make_twist(const DirichletCharacter& chi, const RootOfUnity& xi, std::uint64_t conductor);

/// The same twist with xi replaced by xi^w (same ambient field).
TwistSpec with_xi_power(const TwistSpec& spec, std::int64_t w);

/// Image of the spec under zeta -> zeta^s: (chi^s, xi^s).
TwistSpec conjugate(const TwistSpec& spec, std::int64_t s);

/// t * sum_{a<d} chi(a) xi^a e^{at} / (xi^d e^{dt} - 1), to order N.
TruncSeries kernel_series(const TwistSpec& spec, std::size_t order);

/// kernel_series^k to order N; k = 0 gives the constant 1.
TruncSeries generating_series(const TwistSpec& spec, unsigned k, std::size_t order);

struct BernoulliFamily {
    TwistSpec spec;
    unsigned order_k = 0;
    std::vector<CycloElem> numbers;  // entry n = B^{(k)}_{n, chi, xi}

    std::size_t max_n() const { return numbers.size() - 1; }
};

/// B^{(k)}_{n,chi,xi} for n = 0..max_n, read off a series built with two
/// guard terms (order max_n + 2).
BernoulliFamily numbers(const TwistSpec& spec, unsigned k, std::size_t max_n);

/// B^{(k)}_{n,chi,xi}(x) = sum_j C(n,j) B^{(k)}_j x^{n-j}, from a family with
/// max_n >= n.
using BernoulliPolynomial = CycloPoly;
BernoulliPolynomial polynomial(const BernoulliFamily& family, std::size_t n);
BernoulliPolynomial polynomial(const TwistSpec& spec, unsigned k, std::size_t n);

/// Horner evaluation; an element argument must live in the polynomial's field.
CycloElem evaluate(const BernoulliPolynomial& poly, const CycloElem& arg);
CycloElem evaluate(const BernoulliPolynomial& poly, const Rational& arg);

/// T_{k,chi,xi}(n) = sum_{l=0}^{n} chi(l) xi^l l^k, with 0^0 = 1.
CycloElem power_sum(const TwistSpec& spec, unsigned k, std::uint64_t n);

/// T_{0..k_max}(n) in one pass over l.
std::vector<CycloElem> power_sums(const TwistSpec& spec, unsigned k_max, std::uint64_t n);

struct SeriesComparison {
    bool agree = false;
    std::optional<std::size_t> first_mismatch;
    std::vector<CycloElem> lhs;  // EGF coefficients
    std::vector<CycloElem> rhs;
};

/// (xi^{nd} e^{ndt} - 1) sum_{i<d} chi(i) xi^i e^{it} / (xi^d e^{dt} - 1)
/// against the EGF with coefficients T_{k,chi,xi}(nd - 1), to order N.
SeriesComparison power_sum_series_check(const TwistSpec& spec, std::uint64_t n, std::size_t order);

struct HeadValuations {
    std::optional<std::size_t> order_one;  // nullopt: zero to the tested order
    std::optional<std::size_t> order_k;
    bool holds = false;
};

/// valuation(kernel^k) >= k * valuation(kernel).
HeadValuations vanishing_head(const TwistSpec& spec, unsigned k, std::size_t order);

/// Thread-safe memo of Bernoulli families keyed by (chi, xi, ambient, k).
class BernoulliCache {
public:
    /// Numbers B^{(k)}_0..B^{(k)}_{max_n}; the returned vector may be longer.
    std::shared_ptr<const std::vector<CycloElem>> numbers(const TwistSpec& spec, unsigned k, std::size_t max_n);

private:
    std::mutex mutex_;
    std::map<std::string, std::shared_ptr<const std::vector<CycloElem>>> entries_;
};

}  // namespace twb
