#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "jumpwalk/error.hpp"
#include "jumpwalk/polynomial.hpp"
#include "jumpwalk/rational.hpp"

namespace jumpwalk {

/// Formal power series truncated at order M (inclusive). All arithmetic is
/// exact through order M and never reads beyond it, so a result of order M
/// carries the same coefficients a full symbolic computation would.
template <typename T>
class TruncatedSeries {
  public:
    explicit TruncatedSeries(std::size_t order) : c_(order + 1, T(0)) {}
    TruncatedSeries(std::vector<T> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) c_.push_back(T(0));
    }

    static TruncatedSeries constant(T value, std::size_t order) {
        TruncatedSeries s(order);
        s.c_[0] = std::move(value);
        return s;
    }

    std::size_t order() const { return c_.size() - 1; }
    const std::vector<T>& coeffs() const { return c_; }
    const T& coeff(std::size_t k) const { return c_[k]; }
    T& coeff(std::size_t k) { return c_[k]; }

    bool operator==(const TruncatedSeries& other) const { return c_ == other.c_; }

    TruncatedSeries operator+(const TruncatedSeries& other) const {
        TruncatedSeries out(common_order(other));
        for (std::size_t k = 0; k <= out.order(); ++k) out.c_[k] = c_[k] + other.c_[k];
        return out;
    }

    TruncatedSeries operator-(const TruncatedSeries& other) const {
        TruncatedSeries out(common_order(other));
        for (std::size_t k = 0; k <= out.order(); ++k) out.c_[k] = c_[k] - other.c_[k];
        return out;
    }

    TruncatedSeries operator*(const T& scalar) const {
        TruncatedSeries out(order());
        for (std::size_t k = 0; k <= order(); ++k) out.c_[k] = c_[k] * scalar;
        return out;
    }

    /// Cauchy product, truncated.
    TruncatedSeries operator*(const TruncatedSeries& other) const {
        const std::size_t M = common_order(other);
        TruncatedSeries out(M);
        for (std::size_t i = 0; i <= M; ++i) {
            if (c_[i] == 0) continue;
            for (std::size_t k = 0; i + k <= M; ++k) {
                if (other.c_[k] == 0) continue;
                out.c_[i + k] += c_[i] * other.c_[k];
            }
        }
        return out;
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    TruncatedSeries reciprocal() const {
        return TruncatedSeries::constant(T(1), order()).divided_by(*this);
    }

    /// Long division: (*this) / divisor, exact through the common order.
    TruncatedSeries divided_by(const TruncatedSeries& divisor) const {
        if (divisor.c_[0] == 0)
            throw std::domain_error("series division requires nonzero constant term");
        const std::size_t M = common_order(divisor);
        TruncatedSeries out(M);
        for (std::size_t n = 0; n <= M; ++n) {
            T s = c_[n];
            for (std::size_t k = 1; k <= n; ++k) {
                if (divisor.c_[k] == 0) continue;
                s -= divisor.c_[k] * out.c_[n - k];
            }
            out.c_[n] = s / divisor.c_[0];
        }
        return out;
    }

    TruncatedSeries pow(unsigned e) const {
        TruncatedSeries out = TruncatedSeries::constant(T(1), order());
        TruncatedSeries base = *this;
        while (e > 0) {
            if (e & 1u) out = out * base;
            e >>= 1;
            if (e) base = base * base;
        }
        return out;
    }

    /// Multiplication by 1/(1-z), i.e. running partial sums. Cheaper than a
    /// full product and used heavily by the generating-function path.
    TruncatedSeries partial_sums() const {
        TruncatedSeries out(order());
        T run(0);
        for (std::size_t k = 0; k <= order(); ++k) {
            run += c_[k];
            out.c_[k] = run;
        }
        return out;
    }

  private:
    std::size_t common_order(const TruncatedSeries& other) const {
        if (order() != other.order())
            throw std::domain_error("truncated series orders do not match");
        return order();
    }

    std::vector<T> c_;
};

using RationalSeries = TruncatedSeries<Rational>;

/// Horner composition p(s) of a polynomial with a series whose constant
/// term vanishes (which makes the composition well defined at finite order).
template <typename T>
TruncatedSeries<T> compose_polynomial(const Polynomial<T>& p, const TruncatedSeries<T>& s) {
    if (s.coeff(0) != T(0))
        throw std::domain_error("composition requires a series with zero constant term");
    auto out = TruncatedSeries<T>::constant(p.coeffs().back(), s.order());
    for (std::size_t i = p.coeffs().size() - 1; i-- > 0;) {
        out = out * s;
        out.coeff(0) += p.coeffs()[i];
    }
    return out;
}

/// Exact expansion of (1+z)^{a/2} (1-z)^{b/2} through order M, by convolving
/// the two generalized-binomial series.
inline RationalSeries binomial_series(int a, int b, int order) {
    if (order < 0) throw Error(ErrorCode::ORDER_NEGATIVE, "series order must be nonnegative");
    const std::size_t M = static_cast<std::size_t>(order);

    // Coefficients of (1+z)^{a/2}: C(a/2, k).
    const Rational half_a = make_rational(a, 2), half_b = make_rational(b, 2);
    std::vector<Rational> plus(M + 1);
    plus[0] = 1;
    for (std::size_t k = 0; k < M; ++k)
        plus[k + 1] = plus[k] * (half_a - Rational(static_cast<long>(k))) /
                      Rational(static_cast<long>(k + 1));

    // Coefficients of (1-z)^{b/2}: (-1)^k C(b/2, k).
    std::vector<Rational> minus(M + 1);
    minus[0] = 1;
    for (std::size_t k = 0; k < M; ++k)
        minus[k + 1] = -minus[k] * (half_b - Rational(static_cast<long>(k))) /
                       Rational(static_cast<long>(k + 1));

    return RationalSeries(std::move(plus)) * RationalSeries(std::move(minus));
}

/// Streaming form of binomial_series for large single coefficients: yields
/// c_0, c_1, ... of (1+z)^P (1-z)^Q in O(1) exact operations per step via
/// the first-order recurrence induced by (1-z^2) f' = [(P-Q) - (P+Q) z] f.
class BinomialCoefficientStream {
  public:
    BinomialCoefficientStream(Rational p_exponent, Rational q_exponent)
        : p_(std::move(p_exponent)), q_(std::move(q_exponent)), prev_(0), cur_(1) {
        p_.canonicalize();
        q_.canonicalize();
    }

    /// Coefficient of z^n where n is the number of next() calls made so far.
    const Rational& current() const { return cur_; }

    const Rational& next() {
        Rational c = ((p_ - q_) * cur_ + (Rational(n_ - 1) - p_ - q_) * prev_) / Rational(n_ + 1);
        prev_ = std::move(cur_);
        cur_ = std::move(c);
        ++n_;
        return cur_;
    }

  private:
    Rational p_, q_;
    Rational prev_, cur_;
    long n_ = 0;
};

/// Exact expansion of rho(z) = (1 - sqrt(1-z^2))/z through order M. Odd
/// series; satisfies z (rho^2 + 1) - 2 rho = 0 at every truncation order.
inline RationalSeries rho_series(int order) {
    if (order < 0) throw Error(ErrorCode::ORDER_NEGATIVE, "series order must be nonnegative");
    const std::size_t M = static_cast<std::size_t>(order);

    // sqrt(1-z^2) = sum_k C(1/2, k) (-1)^k z^{2k}
    std::vector<Rational> root(M + 2, Rational(0));
    Rational c(1);
    for (std::size_t k = 0; 2 * k < root.size(); ++k) {
        root[2 * k] = c;
        c = -c * (Rational(1, 2) - Rational(static_cast<long>(k))) /
            Rational(static_cast<long>(k + 1));
    }

    RationalSeries rho(M);
    for (std::size_t k = 0; k <= M; ++k) rho.coeff(k) = -root[k + 1];
    return rho;
}

}  // namespace jumpwalk
