#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "jumpwalk/error.hpp"
#include "jumpwalk/jump_model.hpp"
#include "jumpwalk/rational.hpp"

namespace jumpwalk {

/// Exact distribution of the walk at a fixed time: mass[k] = P(X_n = k).
struct ProbVector {
    std::vector<Rational> mass;   // dense, indices 0..K
    std::size_t origin_time = 0;  // the n this vector represents
    std::size_t start = 0;        // conditioning point X_0 = j
};

inline ProbVector point_mass(std::size_t j) {
    ProbVector v;
    v.mass.assign(j + 1, Rational(0));
    v.mass[j] = 1;
    v.start = j;
    return v;
}

/// One transition: interior positions split 1/2 left, 1/2 right; mass at
/// the origin redistributes by the jump law. Total mass is preserved
/// exactly; support grows by at most max(1, N) sites.
inline ProbVector step(const ProbVector& v, const JumpDistribution& d) {
    const std::size_t n_jump = d.max_jump();
    const std::size_t grow = std::max<std::size_t>(1, n_jump);
    ProbVector out;
    out.origin_time = v.origin_time + 1;
    out.start = v.start;
    out.mass.assign(std::max(v.mass.size() + grow, n_jump + 1), Rational(0));

    static const Rational half(1, 2);
    for (std::size_t k = 1; k < v.mass.size(); ++k) {
        if (v.mass[k] == 0) continue;
        Rational flow = half * v.mass[k];
        out.mass[k - 1] += flow;
        out.mass[k + 1] += flow;
    }
    if (v.mass[0] != 0)
        for (std::size_t k = 0; k <= n_jump; ++k) out.mass[k] += v.mass[0] * d.prob(k);

    while (out.mass.size() > 1 && out.mass.back() == 0) out.mass.pop_back();
    return out;
}

inline Rational expected_position(const ProbVector& v) {
    Rational e(0);
    for (std::size_t k = 1; k < v.mass.size(); ++k)
        if (v.mass[k] != 0) e += Rational(static_cast<long>(k)) * v.mass[k];
    return e;
}

/// E(X_n | X_0 = j) by exact evolution of the full distribution.
inline Rational expected_position_dp(const JumpDistribution& d, std::size_t j, std::size_t n) {
    ProbVector v = point_mass(j);
    for (std::size_t t = 0; t < n; ++t) v = step(v, d);
    return expected_position(v);
}

/// One pass up to max(marks), recording E(X_n | X_0 = j) at each mark.
/// Marks must be sorted ascending.
inline std::vector<Rational> expected_positions_dp(const JumpDistribution& d, std::size_t j,
                                                   const std::vector<std::size_t>& marks) {
    std::vector<Rational> out;
    out.reserve(marks.size());
    ProbVector v = point_mass(j);
    std::size_t mi = 0;
    for (std::size_t t = 0;; ++t) {
        while (mi < marks.size() && marks[mi] == t) {
            out.push_back(expected_position(v));
            ++mi;
        }
        if (mi == marks.size()) break;
        v = step(v, d);
    }
    return out;
}

namespace detail {

inline long double horner(const std::vector<Rational>& coeffs, long double x) {
    long double y = to_double(coeffs.back());
    for (std::size_t i = coeffs.size() - 1; i-- > 0;) y = y * x + to_double(coeffs[i]);
    return y;
}

inline long double pow_n(long double x, std::size_t e) {
    long double y = 1.0L;
    while (e--) y *= x;
    return y;
}

}  // namespace detail

/// Validation diagnostic: |closed-form F_j(w, z) - truncated transform of
/// the DP distribution|, where F_j(w, z) = sum_n z^n sum_k P(X_n=k|X_0=j) w^k.
/// Expected to be at most |z|^{n_max+1} / (1 - |z|) for w in [0, 1).
/// Evaluated in extended precision so the reported residual is dominated by
/// the truncation, not by round-off.
inline double f_bivariate_residual(const JumpDistribution& d, std::size_t j, double w, double z,
                                   int n_max) {
    if (n_max < 0)
        throw Error(ErrorCode::TRUNCATION_TOO_SMALL, "n_max must be nonnegative");

    const long double wl = w, zl = z;
    long double closed;
    if (z == 0.0) {
        closed = detail::pow_n(wl, j);
    } else {
        const RationalPoly phi_poly = phi_polynomial(d);
        const auto& phi = phi_poly.coeffs();
        // rho(z) = (1 - sqrt(1-z^2))/z, principal branch on the real interval
        long double rho = (1.0L - std::sqrt(1.0L - zl * zl)) / zl;
        long double phi_rho = detail::horner(phi, rho);
        long double phi_w = detail::horner(phi, wl);
        closed = 2.0L / phi_rho *
                 (detail::pow_n(rho, j + 1) * phi_w - phi_rho * detail::pow_n(wl, j + 1)) /
                 (zl * (wl * wl + 1.0L) - 2.0L * wl);
    }

    ProbVector v = point_mass(j);
    long double partial = 0.0L, zn = 1.0L;
    for (int t = 0;; ++t) {
        long double f = 0.0L, wk = 1.0L;
        for (std::size_t k = 0; k < v.mass.size(); ++k) {
            if (v.mass[k] != 0) f += static_cast<long double>(to_double(v.mass[k])) * wk;
            wk *= wl;
        }
        partial += zn * f;
        if (t == n_max) break;
        zn *= zl;
        v = step(v, d);
    }
    return static_cast<double>(std::fabs(closed - partial));
}

}  // namespace jumpwalk
