#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "jumpwalk/error.hpp"
#include "jumpwalk/polynomial.hpp"
#include "jumpwalk/rational.hpp"

namespace jumpwalk {

enum class CaseVariant { P0_ONE, SPECIAL_HALF_HALF, PARITY, GENERIC };

inline const char* name(CaseVariant v) {
    switch (v) {
        case CaseVariant::P0_ONE: return "P0_ONE";
        case CaseVariant::SPECIAL_HALF_HALF: return "SPECIAL_HALF_HALF";
        case CaseVariant::PARITY: return "PARITY";
        case CaseVariant::GENERIC: return "GENERIC";
    }
    return "UNKNOWN";
}

/// Classification of a jump distribution against the model assumptions.
///   a1: p0 < 1 (some forward motion from the origin)
///   a2: some even k carries mass
///   a4: the characteristic polynomial is square-free; filled by the
///       spectral layer, absent until then
struct CaseTag {
    CaseVariant variant;
    bool a1;
    bool a2;
    std::optional<bool> a4;
};

/// Validated jump law at the origin: exact probabilities p_0..p_N in
/// canonical form (trailing zeros trimmed, so p_N > 0 unless N = 0).
class JumpDistribution {
  public:
    /// Validates raw probabilities: nonneg entries, exact sum 1, trims
    /// trailing zeros. Throws EMPTY_INPUT, NEGATIVE_PROBABILITY or
    /// SUM_NOT_ONE.
    static JumpDistribution validate(std::vector<Rational> raw) {
        if (raw.empty()) throw Error(ErrorCode::EMPTY_INPUT, "probability list is empty");
        for (auto& p : raw) p.canonicalize();  // tolerate unreduced input
        Rational sum(0);
        for (const auto& p : raw) {
            if (p < 0)
                throw Error(ErrorCode::NEGATIVE_PROBABILITY,
                            "probability " + to_string(p) + " is negative");
            sum += p;
        }
        if (sum != 1)
            throw Error(ErrorCode::SUM_NOT_ONE, "probabilities sum to " + to_string(sum));
        while (raw.size() > 1 && raw.back() == 0) raw.pop_back();
        return JumpDistribution(std::move(raw));
    }

    const std::vector<Rational>& probs() const { return probs_; }

    /// Largest k with p_k > 0.
    std::size_t max_jump() const { return probs_.size() - 1; }

    Rational prob(std::size_t k) const { return k < probs_.size() ? probs_[k] : Rational(0); }

  private:
    explicit JumpDistribution(std::vector<Rational> probs) : probs_(std::move(probs)) {}

    std::vector<Rational> probs_;
};

/// E(Y^m) = sum p_k k^m, exact. moment(d, 0) == 1.
inline Rational moment(const JumpDistribution& d, unsigned m) {
    Rational out(0);
    mpz_class k(0);
    for (const auto& p : d.probs()) {
        if (p != 0) {
            mpz_class km;
            mpz_pow_ui(km.get_mpz_t(), k.get_mpz_t(), m);
            out += p * Rational(km);
        }
        ++k;
    }
    return out;
}

/// h(x) = sum p_k x^k.
inline RationalPoly h_polynomial(const JumpDistribution& d) {
    return RationalPoly(d.probs());
}

/// phi(x) = x^2 + 1 - 2x h(x). Constant term is always 1 and phi(1) = 0.
inline RationalPoly phi_polynomial(const JumpDistribution& d) {
    std::vector<Rational> c(std::max<std::size_t>(d.max_jump() + 2, 3), Rational(0));
    c[0] = 1;
    c[2] += 1;
    for (std::size_t k = 0; k < d.probs().size(); ++k) c[k + 1] -= 2 * d.probs()[k];
    return RationalPoly(std::move(c));
}

inline CaseTag classify_case(const JumpDistribution& d) {
    const auto& p = d.probs();
    CaseTag tag{};
    tag.a1 = p[0] < 1;
    tag.a2 = false;
    for (std::size_t k = 0; k < p.size(); k += 2)
        if (p[k] > 0) tag.a2 = true;

    if (p.size() == 1 && p[0] == 1)
        tag.variant = CaseVariant::P0_ONE;
    else if (p.size() == 2 && p[0] == Rational(1, 2) && p[1] == Rational(1, 2))
        tag.variant = CaseVariant::SPECIAL_HALF_HALF;
    else if (!tag.a2)
        tag.variant = CaseVariant::PARITY;
    else
        tag.variant = CaseVariant::GENERIC;
    return tag;
}

}  // namespace jumpwalk
