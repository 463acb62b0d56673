#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "twb/bernoulli.hpp"

namespace twb {

/// Integrand chi(x) xi^x x^n on X = lim Z / d p^N Z. Sums over it are only
/// defined for rational-valued chi and xi of p-power order (checked per call).
struct IntegrandSpec {
    DirichletCharacter chi = principal(1);
    RootOfUnity xi;
    unsigned moment = 0;

    std::uint64_t modulus() const { return chi.modulus(); }
};

/// (1 / (d p^N)) sum_{x < d p^N} chi(x) xi^x x^n.
CycloElem riemann_sum(const IntegrandSpec& spec, std::uint64_t p, unsigned level);

/// nullopt stands for +infinity (an exact match).
using Valuation = std::optional<Rational>;

struct ConvergenceTrace {
    std::uint64_t p = 0;
    std::vector<unsigned> levels;
    std::vector<Valuation> valuations;
    bool pass = false;
};

/// Level from which a trace must be monotone.
inline constexpr unsigned kConvergenceStart = 3;

/// True when valuations are nondecreasing from level kConvergenceStart on and
/// no two consecutive steps there are both flat (two infinities count as a
/// strict step).
bool convergence_pass(const std::vector<unsigned>& levels, const std::vector<Valuation>& valuations);

/// nu_p(S_N - B_{n,chi,xi}) for N = 1..max_level (max_level >= 2).
ConvergenceTrace convergence_check(const IntegrandSpec& spec, std::uint64_t p, unsigned max_level);

struct ShiftDiscrepancy {
    unsigned level = 0;
    CycloElem discrepancy;
    Valuation valuation;
};

/// At level N with s = shift * d:
///   D_N = (1/(d p^N)) sum_x chi(x) xi^{x+s} (x+s)^k - S_N - k T_{k-1}(s - 1),
/// k = spec.moment >= 1.
ShiftDiscrepancy shift_identity_check(const IntegrandSpec& spec, std::uint64_t p, std::uint64_t shift,
                                      unsigned level);

struct ShiftTrace {
    std::uint64_t p = 0;
    std::vector<ShiftDiscrepancy> steps;
    bool pass = false;  // valuations nondecreasing in N
};

ShiftTrace shift_identity_trace(const IntegrandSpec& spec, std::uint64_t p, std::uint64_t shift,
                                unsigned max_level);

}  // namespace twb
