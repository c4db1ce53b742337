#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

#include "jumpwalk/error.hpp"
#include "jumpwalk/jump_model.hpp"
#include "jumpwalk/polynomial.hpp"

namespace jumpwalk {

enum class RootClass { EIGENVALUE, RESONANCE, EMBEDDED_RESONANCE };

inline const char* name(RootClass c) {
    switch (c) {
        case RootClass::EIGENVALUE: return "EIGENVALUE";
        case RootClass::RESONANCE: return "RESONANCE";
        case RootClass::EMBEDDED_RESONANCE: return "EMBEDDED_RESONANCE";
    }
    return "UNKNOWN";
}

/// Classified zeros of phi. roots[] lists the zeros of psi first and ends
/// with the exact unit root; lambdas[i] = (roots[i]^2 + 1) / (2 roots[i])
/// is the corresponding point of the discrete spectrum / resonance set.
struct SpectrumReport {
    std::vector<std::complex<double>> roots;
    std::vector<RootClass> classes;
    std::vector<std::complex<double>> lambdas;
    bool squarefree = true;    // pairwise root separation exceeds sep_tol
    double separation = 0.0;   // minimum pairwise distance (inf for degree 1)
};

/// Deflation phi(x) = (x - 1) psi(x), exact. The remainder of the synthetic
/// division must vanish; anything else indicates an inconsistent input.
inline RationalPoly psi_polynomial(const JumpDistribution& d) {
    auto [quotient, remainder] = phi_polynomial(d).divide_linear(Rational(1));
    if (remainder != 0)
        throw Error(ErrorCode::NONZERO_REMAINDER,
                    "phi(1) != 0 while deflating, remainder " + to_string(remainder));
    return quotient;
}

namespace detail {

// Backward-error scale for p evaluated at x: sum |a_k| |x|^k.
inline double eval_scale(const std::vector<double>& coeffs, std::complex<double> x) {
    double ax = std::abs(x), scale = 0.0, p = 1.0;
    for (double c : coeffs) {
        scale += std::fabs(c) * p;
        p *= ax;
    }
    return scale;
}

// A handful of Newton steps; stops as soon as the residual stops improving.
inline std::complex<double> newton_polish(const std::vector<double>& coeffs,
                                          const std::vector<double>& deriv,
                                          std::complex<double> x) {
    double best = std::abs(eval_at(coeffs, x));
    for (int s = 0; s < 8; ++s) {
        std::complex<double> px = eval_at(coeffs, x);
        std::complex<double> dx = eval_at(deriv, x);
        if (!(std::abs(dx) > 0.0)) break;
        std::complex<double> next = x - px / dx;
        double r = std::abs(eval_at(coeffs, next));
        if (!std::isfinite(r) || r >= best) break;
        best = r;
        x = next;
    }
    return x;
}

}  // namespace detail

/// All complex roots by simultaneous Aberth-Ehrlich iteration. Starts from
/// a ring of radius 1 + max |a_k / a_deg| with deterministically scrambled
/// phases, iterates until every root's residual reaches the round-off
/// floor or the largest update drops below tol, then Newton-polishes.
/// Repeated roots come out as tight clusters. Throws NO_CONVERGENCE after
/// 1000 sweeps.
inline std::vector<std::complex<double>> poly_roots(const RationalPoly& p, double tol = 1e-13) {
    const std::size_t deg = p.degree();
    if (deg < 1 || p.is_zero())
        throw Error(ErrorCode::NO_CONVERGENCE, "root finding needs degree >= 1");

    const std::vector<double> coeffs = coeffs_as_double(p);
    const std::vector<double> deriv = coeffs_as_double(p.derivative());

    double ring = 0.0;
    for (std::size_t k = 0; k < deg; ++k)
        ring = std::max(ring, std::fabs(coeffs[k] / coeffs[deg]));
    ring += 1.0;

    std::vector<std::complex<double>> roots(deg);
    std::uint64_t scramble = 0x9E3779B97F4A7C15ull;
    for (std::size_t i = 0; i < deg; ++i) {
        scramble = scramble * 6364136223846793005ull + 1442695040888963407ull;
        double jitter = static_cast<double>(scramble >> 40) / double(1 << 24);
        double theta = 2.0 * M_PI * (static_cast<double>(i) + 0.25 + 0.5 * jitter) /
                       static_cast<double>(deg);
        roots[i] = std::polar(ring, theta);
    }

    constexpr int kMaxSweeps = 1000;
    const double eps = std::numeric_limits<double>::epsilon();
    std::vector<bool> frozen(deg, false);

    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        double max_update = 0.0;
        bool all_frozen = true;
        for (std::size_t i = 0; i < deg; ++i) {
            if (frozen[i]) continue;
            std::complex<double> px = eval_at(coeffs, roots[i]);
            if (std::abs(px) <= 4.0 * eps * detail::eval_scale(coeffs, roots[i])) {
                frozen[i] = true;  // at the attainable accuracy for this root
                continue;
            }
            all_frozen = false;
            std::complex<double> ratio = px / eval_at(deriv, roots[i]);
            std::complex<double> repulsion(0.0, 0.0);
            for (std::size_t k = 0; k < deg; ++k)
                if (k != i) repulsion += 1.0 / (roots[i] - roots[k]);
            std::complex<double> update = ratio / (1.0 - ratio * repulsion);
            if (!std::isfinite(update.real()) || !std::isfinite(update.imag())) update = ratio;
            roots[i] -= update;
            max_update = std::max(max_update, std::abs(update));
        }
        if (all_frozen || (sweep > 0 && max_update < tol)) {
            for (auto& r : roots) r = detail::newton_polish(coeffs, deriv, r);
            return roots;
        }
    }
    throw Error(ErrorCode::NO_CONVERGENCE, "root iteration did not settle in 1000 sweeps");
}

/// Minimum pairwise distance among the computed roots, and whether it
/// clears sep_tol. Degree-1 inputs are square-free by convention.
inline std::pair<bool, double> squarefree_check(const RationalPoly& p, double sep_tol = 1e-7) {
    auto roots = poly_roots(p);
    if (roots.size() < 2) return {true, std::numeric_limits<double>::infinity()};
    double sep = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t k = i + 1; k < roots.size(); ++k)
            sep = std::min(sep, std::abs(roots[i] - roots[k]));
    return {sep > sep_tol, sep};
}

/// Roots of phi classified against the unit circle: inside (up to the
/// eps_circle dead band) they are eigenvalues of the transition operator,
/// outside they are resonances, on the circle embedded resonances inside
/// the essential spectrum [-1, 1]. The unit root is appended exactly; the
/// zeros of psi are solved numerically and polished on phi.
inline SpectrumReport spectrum_report(const JumpDistribution& d, double eps_circle = 1e-9,
                                      double tol = 1e-12) {
    RationalPoly phi = phi_polynomial(d);
    RationalPoly psi = psi_polynomial(d);
    const std::vector<double> phi_coeffs = coeffs_as_double(phi);
    const std::vector<double> phi_deriv = coeffs_as_double(phi.derivative());

    SpectrumReport report;
    if (psi.degree() >= 1) {
        report.roots = poly_roots(psi, tol);
        for (auto& r : report.roots) r = detail::newton_polish(phi_coeffs, phi_deriv, r);
    }
    report.roots.push_back({1.0, 0.0});

    report.separation = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < report.roots.size(); ++i)
        for (std::size_t k = i + 1; k < report.roots.size(); ++k)
            report.separation = std::min(report.separation,
                                         std::abs(report.roots[i] - report.roots[k]));
    report.squarefree = !(report.separation <= 1e-7);

    for (const auto& alpha : report.roots) {
        double mod = std::abs(alpha);
        if (mod < tol)
            throw Error(ErrorCode::ZERO_ROOT,
                        "root at the origin contradicts phi(0) = 1");
        if (mod < 1.0 - eps_circle)
            report.classes.push_back(RootClass::EIGENVALUE);
        else if (mod > 1.0 + eps_circle)
            report.classes.push_back(RootClass::RESONANCE);
        else
            report.classes.push_back(RootClass::EMBEDDED_RESONANCE);
        report.lambdas.push_back((alpha * alpha + 1.0) / (2.0 * alpha));
    }
    return report;
}

}  // namespace jumpwalk
