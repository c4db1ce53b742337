#pragma once

#include <cstddef>

#include "jumpwalk/jump_model.hpp"
#include "jumpwalk/series.hpp"

namespace jumpwalk {

/// Exact expansion through order M of the generating function
///
///   H_j(z) = sum_n E(X_n | X_0 = j) z^n
///          = 2 E(Y) * rho(z)^{j+1} / ((1-z) phi(rho(z))) + j/(1-z).
///
/// The composition phi(rho) is well defined at finite order because rho has
/// no constant term, and its own constant term is phi(0) = 1, so the series
/// division below is always legal. When E(Y) = 0 the first summand
/// vanishes and the expansion degenerates to the constant-j stream.
inline RationalSeries h_series(const JumpDistribution& d, std::size_t j, int order) {
    if (order < 0) throw Error(ErrorCode::ORDER_NEGATIVE, "series order must be nonnegative");

    const Rational ey = moment(d, 1);
    const Rational j_rat(static_cast<long>(j));
    if (ey == 0)
        return RationalSeries::constant(j_rat, static_cast<std::size_t>(order)).partial_sums();

    RationalSeries rho = rho_series(order);
    RationalSeries phi_rho = compose_polynomial(phi_polynomial(d), rho);
    RationalSeries h = rho.pow(static_cast<unsigned>(j + 1)).divided_by(phi_rho).partial_sums() *
                       Rational(2 * ey);
    for (std::size_t k = 0; k <= h.order(); ++k) h.coeff(k) += j_rat;
    return h;
}

/// E(X_n | X_0 = j) = [z^n] H_j(z), exact. Independent of the DP route.
inline Rational expected_position_series(const JumpDistribution& d, std::size_t j,
                                         std::size_t n) {
    return h_series(d, j, static_cast<int>(n)).coeff(n);
}

}  // namespace jumpwalk
