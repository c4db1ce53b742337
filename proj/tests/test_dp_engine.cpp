#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "jumpwalk/dp_engine.hpp"
#include "jumpwalk/series_engine.hpp"
#include "support/generators.hpp"

using namespace jumpwalk;

namespace {

JumpDistribution table1() {
    return JumpDistribution::validate(
        {Rational(3, 10), Rational(1, 10), Rational(1, 10), Rational(1, 2)});
}

}  // namespace

TEST_CASE("single transitions") {
    JumpDistribution d = table1();

    ProbVector from_one = step(point_mass(1), d);
    CHECK(from_one.origin_time == 1);
    CHECK(from_one.mass == std::vector<Rational>{Rational(1, 2), Rational(0), Rational(1, 2)});

    ProbVector from_origin = step(point_mass(0), d);
    CHECK(from_origin.mass == d.probs());
}

TEST_CASE("mass conservation and support bound") {
    std::mt19937_64 rng(0xD1CEu);
    for (int trial = 0; trial < 20; ++trial) {
        JumpDistribution d = testing::random_distribution(rng, 6);
        std::size_t j = static_cast<std::size_t>(rng() % 4);
        ProbVector v = point_mass(j);
        for (std::size_t n = 1; n <= 25; ++n) {
            v = step(v, d);
            Rational total(0);
            for (const auto& m : v.mass) {
                CHECK(m >= 0);
                total += m;
            }
            CHECK(total == 1);
            CHECK(v.mass.size() - 1 <= std::max(j, d.max_jump()) + n);
        }
    }
}

TEST_CASE("interior walk is a martingale") {
    // start high enough that the origin is unreachable within the horizon
    JumpDistribution d = table1();
    ProbVector v = point_mass(8);
    Rational before = expected_position(v);
    for (int n = 0; n < 7; ++n) {
        REQUIRE(v.mass[0] == 0);
        v = step(v, d);
        CHECK(expected_position(v) == before);
    }
}

TEST_CASE("expected position exact values") {
    JumpDistribution d = table1();
    CHECK(expected_position_dp(d, 0, 1) == Rational(9, 5));

    // two steps from the origin: jump then either a second jump (if at 0)
    // or a fair move, so E = p0 E(Y) + sum_{k>=1} k p_k
    Rational two_step = Rational(3, 10) * Rational(9, 5) +
                        (Rational(1, 10) + 2 * Rational(1, 10) + 3 * Rational(1, 2));
    REQUIRE(two_step == Rational(117, 50));
    CHECK(expected_position_dp(d, 0, 2) == two_step);

    double at_100 = to_double(expected_position_dp(d, 5, 100));
    CHECK(std::round(at_100 * 1e5) / 1e5 == Catch::Approx(9.64614).margin(1e-9));
}

TEST_CASE("pinned walk keeps its expectation at j") {
    JumpDistribution pinned = JumpDistribution::validate({Rational(1)});
    for (std::size_t j : {0u, 1u, 4u}) {
        auto marks = std::vector<std::size_t>{0, 1, 2, 7, 23};
        for (const auto& e : expected_positions_dp(pinned, j, marks))
            CHECK(e == Rational(static_cast<long>(j)));
    }
}

TEST_CASE("dp agrees with the series route") {
    std::mt19937_64 rng(0xACEDu);
    for (int trial = 0; trial < 8; ++trial) {
        JumpDistribution d = testing::random_distribution(rng, 5);
        for (std::size_t j : {0u, 3u})
            CHECK(expected_position_dp(d, j, 40) == expected_position_series(d, j, 40));
    }
}

TEST_CASE("bivariate transform residual") {
    JumpDistribution d = table1();

    SECTION("probability normalization at w = 1") {
        for (double z : {0.2, 0.5, 0.8}) {
            double residual = f_bivariate_residual(d, 2, 1.0, z, 40);
            CHECK(residual <= std::pow(z, 41) / (1.0 - z) + 1e-12);
        }
    }
    SECTION("z = 0 reduces to the starting monomial") {
        CHECK(f_bivariate_residual(d, 3, 0.7, 0.0, 5) == Catch::Approx(0.0).margin(1e-15));
    }
    SECTION("interior point converges to machine precision") {
        CHECK(f_bivariate_residual(d, 0, 0.0, 0.5, 60) < 1e-15);
    }
    SECTION("negative truncation is rejected") {
        CHECK_THROWS_AS(f_bivariate_residual(d, 0, 0.5, 0.5, -1), Error);
    }
}
