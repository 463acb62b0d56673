#include "qpoly.hpp"

#include "twb/errors.hpp"

namespace twb::detail {

std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
    trim(a);
    const long db = degree(b);
    if (db < 0)
        throw MathError(Errc::DivisionByZero, "polynomial division by zero");
    if (degree(a) < db)
        return {QPoly{}, std::move(a)};
    QPoly q(static_cast<std::size_t>(degree(a) - db + 1));
    const Rational lead_inv = 1 / b.back();
    for (long i = degree(a); i >= db; --i) {
        const Rational c = a[static_cast<std::size_t>(i)] * lead_inv;
        if (c == 0)
            continue;
        q[static_cast<std::size_t>(i - db)] = c;
        for (long j = 0; j <= db; ++j)
            a[static_cast<std::size_t>(i - db + j)] -= c * b[static_cast<std::size_t>(j)];
    }
    a.resize(static_cast<std::size_t>(db));
    trim(a);
    trim(q);
    return {std::move(q), std::move(a)};
}

QPoly mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty())
        return {};
    QPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

QPoly sub(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        r[i] -= b[i];
    trim(r);
    return r;
}

Rational resultant(QPoly f, QPoly g) {
    Rational acc = 1;
    for (;;) {
        const long n = degree(f);
        const long m = degree(g);
        if (n < 0 || m < 0)
            return 0;
        if (m == 0)
            return acc * pow(g[0], n);
        if (n < m) {
            if ((n * m) % 2 != 0)
                acc = -acc;
            std::swap(f, g);
            continue;
        }
        // Res(f, g) = (-1)^{nm} lc(g)^{n-k} Res(g, f mod g), k = deg(f mod g).
        auto [q, r] = divmod(f, g);
        if (r.empty())
            return 0;
        const long k = degree(r);
        if ((n * m) % 2 != 0)
            acc = -acc;
        acc *= pow(g.back(), n - k);
        f = std::move(g);
        g = std::move(r);
    }
}

QPoly inverse_mod(const QPoly& a, const QPoly& m) {
    // Extended Euclid tracking only the coefficient of a.
    QPoly r0 = m, r1 = divmod(a, m).second;
    QPoly s0{}, s1{Rational(1)};
    while (degree(r1) > 0) {
        auto [q, r] = divmod(r0, r1);
        QPoly s = sub(s0, mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r1.empty())
        throw MathError(Errc::DivisionByZero, "polynomial not invertible modulo the minimal polynomial");
    const Rational c = 1 / r1[0];
    for (auto& x : s1)
        x *= c;
    return divmod(s1, m).second;
}

}  // namespace twb::detail
