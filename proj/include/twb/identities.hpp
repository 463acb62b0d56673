#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "twb/bernoulli.hpp"
#include "twb/bivariate.hpp"

namespace twb {

enum class IdentityTag {
    Eq1_13,          // (xi^{nd} B_k(nd) - B_k) / k = T_{k-1}(nd - 1)
    Theorem1,        // bivariate symmetry with power sums inside
    RemarkM1,        // Theorem1 at m = 1, y = 0
    Corollary2,      // Theorem1 at x = y = 0
    M1Numbers,       // Corollary2 at m = 1
    Theorem3,        // bivariate symmetry with shifted arguments
    Remark2_11,      // Theorem3 at m = 1, y = 0
    Corollary4,      // Theorem3 at x = y = 0
    Eq2_12,          // Corollary4 at m = 1
    PowerSumSeries,  // generating function of T_k(nd - 1)
};

std::string_view tag_name(IdentityTag tag);
std::optional<IdentityTag> parse_tag(std::string_view name);
const std::vector<IdentityTag>& all_tags();

/// One instance of an identity. Fields an identity does not use are ignored
/// (and omitted from serialized reports).
struct IdentityParams {
    DirichletCharacter chi = principal(1);
    std::string chi_label = "principal";
    RootOfUnity xi;
    unsigned n = 0;
    unsigned m = 1;
    unsigned k = 1;       // Eq1_13 only
    unsigned w1 = 1;
    unsigned w2 = 1;
    std::size_t order = 12;  // PowerSumSeries only
};

/// Scalar, polynomial in x (also used for coefficient sequences), or
/// polynomial in x and y.
using Side = std::variant<CycloElem, CycloPoly, BivariatePoly>;

struct Location {
    std::size_t x = 0;
    std::size_t y = 0;
    friend bool operator==(const Location&, const Location&) = default;
};

/// Outcome of one reading of an identity.
struct Reading {
    std::string name;
    bool holds = false;
    Side lhs;
    Side rhs;
    std::optional<Location> mismatch;
};

/// `holds`, `lhs`, `rhs` and `mismatch` describe the primary reading, which
/// is also readings[0]. Identities known in two inconsistent forms carry a
/// second reading. A computation error leaves holds = false and sets `error`.
struct IdentityReport {
    IdentityTag tag = IdentityTag::Eq1_13;
    IdentityParams params;
    bool holds = false;
    Side lhs;
    Side rhs;
    std::optional<Location> mismatch;
    std::vector<Reading> readings;
    std::string error;

    bool any_reading_holds() const;
};

/// Runs identity checks; Bernoulli numbers are memoized across calls, and
/// one Verifier may be shared between threads.
class Verifier {
public:
    IdentityReport check(IdentityTag tag, const IdentityParams& p);

    IdentityReport check_eq_1_13(const IdentityParams& p);
    IdentityReport check_theorem1(const IdentityParams& p);
    IdentityReport check_remark_m1(const IdentityParams& p);
    IdentityReport check_corollary2(const IdentityParams& p);
    IdentityReport check_m1_numbers(const IdentityParams& p);
    IdentityReport check_theorem3(const IdentityParams& p);
    IdentityReport check_remark_2_11(const IdentityParams& p);
    IdentityReport check_corollary4(const IdentityParams& p);
    IdentityReport check_eq_2_12(const IdentityParams& p);
    IdentityReport check_power_sum_series(const IdentityParams& p);

    BernoulliCache& cache() { return cache_; }

private:
    BernoulliCache cache_;
};

/// Agreement between a general identity and its specialization, compared
/// side by side (lhs with lhs, rhs with rhs).
struct Coherence {
    bool lhs_agree = false;
    bool rhs_agree = false;
    bool holds() const { return lhs_agree && rhs_agree; }
};

/// Theorem1 at m = 1 restricted to y = 0 against RemarkM1.
Coherence theorem1_vs_remark_m1(Verifier& v, const IdentityParams& p);
/// Theorem3 at m = 1 restricted to y = 0 against Remark2_11 (weighted reading).
Coherence theorem3_vs_remark_2_11(Verifier& v, const IdentityParams& p);
/// Constant term of Theorem1 against Corollary2.
Coherence theorem1_vs_corollary2(Verifier& v, const IdentityParams& p);
/// Constant term of Theorem3 against Corollary4.
Coherence theorem3_vs_corollary4(Verifier& v, const IdentityParams& p);

// ---------------------------------------------------------------------------
// Sweeps

/// Which characters a grid uses for each modulus d.
struct CharacterSelector {
    enum class Kind { All, Principal, Index, Table };
    Kind kind = Kind::All;
    std::uint64_t index = 0;                         // Kind::Index
    std::vector<DirichletCharacter::Value> table;    // Kind::Table (modulus = size)
};

struct GridConfig {
    std::vector<IdentityTag> identities;
    std::vector<std::uint64_t> d{1};
    CharacterSelector character;
    std::vector<RootOfUnity> xi{RootOfUnity::one()};
    std::vector<unsigned> w1{1};
    std::vector<unsigned> w2{1};
    std::vector<unsigned> m{1};
    unsigned n_max = 0;
    std::optional<std::vector<unsigned>> n;  // overrides the default n range
    std::optional<std::vector<unsigned>> k;  // Eq1_13; default 1..n_max
    std::size_t order = 12;                  // PowerSumSeries
};

struct SweepInstance {
    IdentityTag tag;
    IdentityParams params;
};

/// Cartesian product of the grid in lexicographic order of
/// (identity, d, character, xi, w1, w2, m, k, n).
std::vector<SweepInstance> expand(const GridConfig& grid);

struct SweepSummary {
    std::size_t total = 0;
    std::size_t holds = 0;
    std::size_t fails = 0;
    std::size_t errors = 0;  // counted among fails as well
};

struct SweepResult {
    std::vector<IdentityReport> reports;
    SweepSummary summary;
};

/// Runs every instance of every grid; the report order is the expansion
/// order regardless of `jobs`. Instance errors are recorded, never thrown.
SweepResult sweep(Verifier& verifier, const std::vector<GridConfig>& grids, unsigned jobs = 1);

}  // namespace twb
