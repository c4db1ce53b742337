#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "jumpwalk/jump_model.hpp"
#include "jumpwalk/rational.hpp"

namespace jumpwalk {

/// Monte Carlo estimate of E(X_n | X_0 = j) with its standard error
/// (sample standard deviation over sqrt(paths), (paths-1) divisor).
/// Identical inputs give identical results, bit for bit.
struct MCEstimate {
    double mean = 0.0;
    double stderr_ = 0.0;
    std::uint64_t paths = 0;
    std::uint64_t seed = 0;
};

/// splitmix64 stream keyed by (seed, path index). Each path owns an
/// independent deterministic stream, so results do not depend on the order
/// in which paths are simulated.
class PathStream {
  public:
    PathStream(std::uint64_t seed, std::uint64_t path_index)
        : state_(mix(seed ^ mix(path_index + 0x9E3779B97F4A7C15ull))) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ull;
        return mix(state_);
    }

  private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

/// Inverse-CDF sampler over the exact cumulative boundaries, compared
/// against a uniform 64-bit draw. Boundary k is floor(cum_k * 2^64); the
/// truncation biases each boundary by less than 2^-64, which is far below
/// anything a feasible number of paths can resolve.
class JumpSampler {
  public:
    explicit JumpSampler(const JumpDistribution& d) {
        mpz_class two64(1);
        two64 <<= 64;
        Rational cum(0);
        // Strictly below 2^64 for every non-final boundary because the last
        // probability is nonzero in canonical form; the final bucket is
        // implicit (anything at or above the last boundary).
        for (std::size_t k = 0; k + 1 < d.probs().size(); ++k) {
            cum += d.probs()[k];
            mpz_class t = (cum.get_num() * two64) / cum.get_den();
            thresholds_.push_back(static_cast<std::uint64_t>(t.get_ui()));
        }
    }

    std::size_t sample(std::uint64_t u) const {
        std::size_t k = 0;
        while (k < thresholds_.size() && u >= thresholds_[k]) ++k;
        return k;
    }

  private:
    std::vector<std::uint64_t> thresholds_;
};

/// Final position after n transitions: +-1 coin flips away from the
/// origin, a draw from the jump law at the origin.
inline std::uint64_t simulate_path(const JumpDistribution&, std::size_t j, std::size_t n,
                                   PathStream& stream, const JumpSampler& sampler) {
    std::uint64_t pos = j;
    for (std::size_t t = 0; t < n; ++t) {
        std::uint64_t u = stream.next_u64();
        if (pos == 0)
            pos = sampler.sample(u);
        else
            pos = (u >> 63) ? pos + 1 : pos - 1;
    }
    return pos;
}

inline std::uint64_t simulate_path(const JumpDistribution& d, std::size_t j, std::size_t n,
                                   PathStream& stream) {
    return simulate_path(d, j, n, stream, JumpSampler(d));
}

/// Mean and standard error over `paths` independent paths. Accumulation is
/// in exact integers, so the reduction order cannot change the outcome.
inline MCEstimate estimate_expectation(const JumpDistribution& d, std::size_t j, std::size_t n,
                                       std::uint64_t paths, std::uint64_t seed) {
    const JumpSampler sampler(d);
    unsigned __int128 sum = 0, sum_sq = 0;
    for (std::uint64_t i = 0; i < paths; ++i) {
        PathStream stream(seed, i);
        std::uint64_t x = simulate_path(d, j, n, stream, sampler);
        sum += x;
        sum_sq += static_cast<unsigned __int128>(x) * x;
    }
    MCEstimate est;
    est.paths = paths;
    est.seed = seed;
    const long double p = static_cast<long double>(paths);
    const long double mean = static_cast<long double>(sum) / p;
    est.mean = static_cast<double>(mean);
    if (paths >= 2) {
        long double variance =
            (static_cast<long double>(sum_sq) - p * mean * mean) / (p - 1.0L);
        if (variance < 0) variance = 0;  // round-off guard for degenerate walks
        est.stderr_ = static_cast<double>(std::sqrt(variance / p));
    }
    return est;
}

}  // namespace jumpwalk
