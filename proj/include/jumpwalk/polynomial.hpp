#pragma once

#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "jumpwalk/error.hpp"
#include "jumpwalk/rational.hpp"

namespace jumpwalk {

/// Dense univariate polynomial, coefficients in ascending powers.
/// Canonical form keeps the trailing coefficient nonzero unless the
/// polynomial is identically zero.
template <typename T>
class Polynomial {
  public:
    Polynomial() : coeffs_{T(0)} {}
    explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

    static Polynomial constant(T value) { return Polynomial(std::vector<T>{std::move(value)}); }

    const std::vector<T>& coeffs() const { return coeffs_; }
    std::size_t degree() const { return coeffs_.size() - 1; }
    bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == T(0); }

    /// Coefficient of x^k, zero beyond the stored range.
    T coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : T(0); }

    bool operator==(const Polynomial& other) const { return coeffs_ == other.coeffs_; }

    Polynomial operator+(const Polynomial& other) const {
        std::vector<T> out(std::max(coeffs_.size(), other.coeffs_.size()), T(0));
        for (std::size_t k = 0; k < out.size(); ++k) out[k] = coeff(k) + other.coeff(k);
        return Polynomial(std::move(out));
    }

    Polynomial operator-(const Polynomial& other) const {
        std::vector<T> out(std::max(coeffs_.size(), other.coeffs_.size()), T(0));
        for (std::size_t k = 0; k < out.size(); ++k) out[k] = coeff(k) - other.coeff(k);
        return Polynomial(std::move(out));
    }

    Polynomial operator*(const Polynomial& other) const {
        if (is_zero() || other.is_zero()) return Polynomial();
        std::vector<T> out(coeffs_.size() + other.coeffs_.size() - 1, T(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            for (std::size_t k = 0; k < other.coeffs_.size(); ++k)
                out[i + k] += coeffs_[i] * other.coeffs_[k];
        return Polynomial(std::move(out));
    }

    /// Horner evaluation at a point of the same coefficient type.
    T operator()(const T& x) const {
        T y = coeffs_.back();
        for (std::size_t i = coeffs_.size() - 1; i-- > 0;) y = y * x + coeffs_[i];
        return y;
    }

    Polynomial derivative() const {
        if (coeffs_.size() == 1) return Polynomial();
        std::vector<T> out(coeffs_.size() - 1, T(0));
        for (std::size_t k = 1; k < coeffs_.size(); ++k) out[k - 1] = coeffs_[k] * T(static_cast<long>(k));
        return Polynomial(std::move(out));
    }

    /// Synthetic division by (x - root): returns quotient and remainder.
    std::pair<Polynomial, T> divide_linear(const T& root) const {
        if (coeffs_.size() == 1) return {Polynomial(), coeffs_[0]};
        std::vector<T> q(coeffs_.size() - 1, T(0));
        T carry = coeffs_.back();
        for (std::size_t k = coeffs_.size() - 1; k-- > 0;) {
            q[k] = carry;
            carry = coeffs_[k] + carry * root;
        }
        return {Polynomial(std::move(q)), carry};
    }

  private:
    void normalize() {
        while (coeffs_.size() > 1 && coeffs_.back() == T(0)) coeffs_.pop_back();
        if (coeffs_.empty()) coeffs_.push_back(T(0));
    }

    std::vector<T> coeffs_;
};

using RationalPoly = Polynomial<Rational>;

/// Coefficients converted to binary64, for numeric evaluation paths.
inline std::vector<double> coeffs_as_double(const RationalPoly& p) {
    std::vector<double> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.push_back(to_double(c));
    return out;
}

inline std::complex<double> eval_at(const std::vector<double>& coeffs, std::complex<double> x) {
    std::complex<double> y(coeffs.back(), 0.0);
    for (std::size_t i = coeffs.size() - 1; i-- > 0;) y = y * x + coeffs[i];
    return y;
}

inline std::complex<double> eval_at(const RationalPoly& p, std::complex<double> x) {
    return eval_at(coeffs_as_double(p), x);
}

}  // namespace jumpwalk
