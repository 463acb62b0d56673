#pragma once

// Dense polynomials over Q used by the cyclotomic inverse and norm.

#include <utility>
#include <vector>

#include "twb/rational.hpp"

namespace twb::detail {

using QPoly = std::vector<Rational>;

inline void trim(QPoly& p) {
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

/// -1 for the zero polynomial.
inline long degree(const QPoly& p) { return static_cast<long>(p.size()) - 1; }

/// Returns (quotient, remainder); divisor must be trimmed and nonzero.
std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b);

QPoly mul(const QPoly& a, const QPoly& b);
QPoly sub(const QPoly& a, const QPoly& b);

/// Res(f, g) = lc(f)^deg(g) * prod_{f(r)=0} g(r). Inputs trimmed.
Rational resultant(QPoly f, QPoly g);

/// s with s*a = 1 mod m; a and m coprime, trimmed, a nonzero.
QPoly inverse_mod(const QPoly& a, const QPoly& m);

}  // namespace twb::detail
