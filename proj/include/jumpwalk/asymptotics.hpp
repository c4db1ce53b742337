#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "jumpwalk/error.hpp"
#include "jumpwalk/jump_model.hpp"
#include "jumpwalk/spectral.hpp"

namespace jumpwalk {

/// The three-term expansion of E(X_n | X_0 = j) for large n:
/// a sqrt(n) bulk term, a constant shift, and a 1/sqrt(n) correction that
/// carries the starting point (and, in the parity case, an oscillation).
struct AsymptoticBreakdown {
    double term1 = 0.0;  // (2/sqrt(2 pi)) sqrt(n)
    double term2 = 0.0;  // (E(Y^2)-1) / (2 E(Y))
    double term3 = 0.0;  // order 1/sqrt(n), includes the parity oscillation
    double total = 0.0;
    CaseVariant case_variant = CaseVariant::GENERIC;
    int parity_sign = 0;  // (-1)^{n+j+1} when the parity term is active, else 0
};

/// Coefficients of the singular decomposition of H_0. c4 only arises on the
/// root-sum route; the closed-form route does not need it.
struct Constants {
    double c1 = 0.0;
    double c2 = 0.0;
    double c3 = 0.0;
    std::optional<double> c4;
};

struct RootSumConstants {
    std::complex<double> c1, c2, c3, c4;
};

/// Gamma(k/2) for odd k, by the functional equation from Gamma(1/2) = sqrt(pi).
inline double gamma_half_integer(int odd_numerator) {
    double x = 0.5, g = std::sqrt(M_PI);
    while (2 * x < odd_numerator) {
        g *= x;
        x += 1.0;
    }
    while (2 * x > odd_numerator) {
        x -= 1.0;
        g /= x;
    }
    return g;
}

namespace detail {

inline double gamma_real(double x) {
    double twice = 2.0 * x;
    long rounded = std::lround(twice);
    if (std::fabs(twice - static_cast<double>(rounded)) < 1e-9 && (rounded % 2 != 0))
        return gamma_half_integer(static_cast<int>(rounded));
    return std::tgamma(x);
}

// Closed forms for the first three constants, exact in the moments:
//   c1 = -1/12 - E(Y^3)/(6 E(Y)) + (E(Y^2)-1)^2 / (4 E(Y)^2)
//   c2 = (E(Y^2)-1) / (2 E(Y))
//   c3 = 1/2
inline std::array<Rational, 3> constants_closed_form_exact(const JumpDistribution& d) {
    const Rational ey = moment(d, 1);
    if (ey == 0) throw Error(ErrorCode::ZERO_MEAN_JUMP, "closed forms require E(Y) > 0");
    const Rational ey2 = moment(d, 2), ey3 = moment(d, 3);
    const Rational shifted = ey2 - 1;
    Rational c1 = Rational(-1, 12) - ey3 / (6 * ey) + shifted * shifted / (4 * ey * ey);
    Rational c2 = shifted / (2 * ey);
    return {c1, c2, Rational(1, 2)};
}

// Zeros of psi with their partial-fraction weights 1/psi'(alpha). Relies on
// the report layout: psi roots first, exact unit root last.
inline std::vector<std::pair<std::complex<double>, std::complex<double>>> psi_root_weights(
    const JumpDistribution& d, const SpectrumReport& report) {
    const std::vector<double> dpsi = coeffs_as_double(psi_polynomial(d).derivative());
    std::vector<std::pair<std::complex<double>, std::complex<double>>> out;
    for (std::size_t i = 0; i + 1 < report.roots.size(); ++i) {
        const auto& alpha = report.roots[i];
        out.emplace_back(alpha, 1.0 / eval_at(dpsi, alpha));
    }
    return out;
}

}  // namespace detail

inline Constants constants_closed_form(const JumpDistribution& d) {
    auto exact = detail::constants_closed_form_exact(d);
    return {to_double(exact[0]), to_double(exact[1]), to_double(exact[2]), std::nullopt};
}

/// The same constants as sums over the zeros of psi, plus c4:
///   c1 = 2 E(Y) sum 1/psi'(a) * a/(a-1)^3        c3 = E(Y) sum 1/psi'(a) * 1/(a-1)
///   c2 = -E(Y) sum 1/psi'(a) * (a+1)/(a-1)^2     c4 = 2 E(Y) sum 1/psi'(a) * a/(a-1)^2
/// Independent of the closed-form route; imaginary parts cancel because the
/// roots of a real polynomial pair up.
inline RootSumConstants constants_root_sum_complex(const JumpDistribution& d,
                                                   const SpectrumReport& report) {
    if (classify_case(d).variant == CaseVariant::SPECIAL_HALF_HALF)
        throw Error(ErrorCode::NO_PSI_ROOTS, "psi is constant for probs = [1/2, 1/2]");
    if (!report.squarefree)
        throw Error(ErrorCode::A4_VIOLATED, "root sums need simple roots");

    const double ey = to_double(moment(d, 1));
    RootSumConstants cs{};
    for (const auto& [alpha, weight] : detail::psi_root_weights(d, report)) {
        const std::complex<double> am1 = alpha - 1.0;
        cs.c1 += weight * alpha / (am1 * am1 * am1);
        cs.c2 += weight * (alpha + 1.0) / (am1 * am1);
        cs.c3 += weight / am1;
        cs.c4 += weight * alpha / (am1 * am1);
    }
    cs.c1 *= 2.0 * ey;
    cs.c2 *= -ey;
    cs.c3 *= ey;
    cs.c4 *= 2.0 * ey;
    return cs;
}

inline Constants constants_root_sum(const JumpDistribution& d, const SpectrumReport& report) {
    RootSumConstants cs = constants_root_sum_complex(d, report);
    return {cs.c1.real(), cs.c2.real(), cs.c3.real(), cs.c4.real()};
}

/// Three-term expansion of E(X_n | X_0 = j), n >= 1. The parity variant
/// adds (1/2)(-1)^{n+j+1} inside the 1/sqrt(n) bracket; probs = [1] has the
/// exact answer j at every n. Requires simple roots of phi otherwise.
inline AsymptoticBreakdown asymptotic_expectation(const JumpDistribution& d, std::size_t j,
                                                  std::size_t n) {
    if (n == 0)
        throw Error(ErrorCode::NOT_ASYMPTOTIC, "n = 0 is served by the exact routes");

    const CaseTag tag = classify_case(d);
    AsymptoticBreakdown out;
    out.case_variant = tag.variant;
    if (tag.variant == CaseVariant::P0_ONE) {
        out.term2 = static_cast<double>(j);
        out.total = static_cast<double>(j);
        return out;
    }
    if (!squarefree_check(phi_polynomial(d)).first)
        throw Error(ErrorCode::A4_VIOLATED, "phi has a repeated root");

    const Rational ey = moment(d, 1);
    if (ey == 0) throw Error(ErrorCode::ZERO_MEAN_JUMP, "E(Y) = 0 outside the p0 = 1 case");
    const Rational ey2 = moment(d, 2), ey3 = moment(d, 3);
    const Rational shifted = ey2 - 1;
    const Rational j_rat(static_cast<long>(j));

    Rational bracket = Rational(1, 3) - ey3 / (3 * ey) + shifted * shifted / (2 * ey * ey) -
                       j_rat * shifted / ey + j_rat * j_rat;
    Rational parity(0);
    if (tag.variant == CaseVariant::PARITY) {
        out.parity_sign = ((n + j + 1) % 2 == 0) ? 1 : -1;
        parity = Rational(out.parity_sign, 2);
    }

    const double sqrt_2pi = std::sqrt(2.0 * M_PI);
    const double sqrt_n = std::sqrt(static_cast<double>(n));
    out.term1 = 2.0 / sqrt_2pi * sqrt_n;
    out.term2 = to_double(shifted / (2 * ey));
    out.term3 = to_double(bracket + parity) / sqrt_2pi / sqrt_n;
    out.total = out.term1 + out.term2 + out.term3;
    return out;
}

/// Algebraic boundary singularity of a function holomorphic in the disk:
/// near location xi (|xi| = 1) the function is (1 - z/xi)^weight * A(z) plus
/// something holomorphic, and amplitude = A(xi).
struct AlgebraicSingularity {
    std::complex<double> location;
    double weight;
    std::complex<double> amplitude;
};

/// Leading coefficient asymptotics by singularity analysis: the minimal
/// weight w among the singularities contributes
///   [z^n] f ~ (1/Gamma(-w)) sum_i A_i xi_i^{-n} n^{-w-1},
/// the rotation factor xi^{-n} moving each singularity to 1. Weights in
/// the nonnegative integers are not algebraic singularities at all and are
/// rejected.
inline double darboux_predict(std::span<const AlgebraicSingularity> singularities, long n) {
    double wmin = singularities.front().weight;
    for (const auto& s : singularities) {
        long rounded = std::lround(s.weight);
        if (rounded >= 0 && std::fabs(s.weight - static_cast<double>(rounded)) < 1e-9)
            throw Error(ErrorCode::INTEGER_WEIGHT,
                        "weight " + std::to_string(s.weight) + " is a nonnegative integer");
        wmin = std::min(wmin, s.weight);
    }
    std::complex<double> sum(0.0, 0.0);
    for (const auto& s : singularities) {
        if (s.weight > wmin + 1e-12) continue;
        sum += s.amplitude * std::polar(1.0, -static_cast<double>(n) * std::arg(s.location));
    }
    return sum.real() / detail::gamma_real(-wmin) *
           std::pow(static_cast<double>(n), -wmin - 1.0);
}

/// K_a(z) = ((a-1)^2 + (a^2+1)[(1-a) z + sqrt(1-z^2)]) / ((a^2+1) z - 2a),
/// principal square root. Holomorphic in the disk for every root a of phi.
inline std::complex<double> k_alpha(std::complex<double> alpha, std::complex<double> z) {
    const std::complex<double> am1 = alpha - 1.0;
    const std::complex<double> a2p1 = alpha * alpha + 1.0;
    return (am1 * am1 + a2p1 * ((1.0 - alpha) * z + std::sqrt(1.0 - z * z))) /
           (a2p1 * z - 2.0 * alpha);
}

/// Singular decomposition of the generating function H_0, evaluated at z:
///
///   H_0(z) = c1 sqrt((1+z)/(1-z)) + c2/(1-z) + c3 sqrt(1+z)/(1-z)^{3/2} + c4
///          + 2 E(Y) sum_{psi(a)=0} 1/psi'(a) * a/(a-1)^3 * K_a(z).
///
/// Root-sum constants and principal branches throughout. Meant for |z| <= 1/2
/// where the series oracle has an easy tail bound.
inline std::complex<double> decomposition_eval(const JumpDistribution& d,
                                               const SpectrumReport& report,
                                               std::complex<double> z) {
    const CaseTag tag = classify_case(d);
    if (tag.variant == CaseVariant::P0_ONE)
        throw Error(ErrorCode::ZERO_MEAN_JUMP, "decomposition requires E(Y) > 0");
    if (tag.variant == CaseVariant::SPECIAL_HALF_HALF)
        throw Error(ErrorCode::NO_PSI_ROOTS, "decomposition requires psi to have roots");
    if (!report.squarefree)
        throw Error(ErrorCode::A4_VIOLATED, "decomposition needs simple roots");

    const RootSumConstants cs = constants_root_sum_complex(d, report);
    const double ey = to_double(moment(d, 1));

    std::complex<double> value = cs.c1 * std::sqrt((1.0 + z) / (1.0 - z)) +
                                 cs.c2 / (1.0 - z) +
                                 cs.c3 * std::sqrt(1.0 + z) / std::pow(1.0 - z, 1.5) + cs.c4;
    for (const auto& [alpha, weight] : detail::psi_root_weights(d, report)) {
        const std::complex<double> am1 = alpha - 1.0;
        value += 2.0 * ey * weight * alpha / (am1 * am1 * am1) * k_alpha(alpha, z);
    }
    return value;
}

}  // namespace jumpwalk
