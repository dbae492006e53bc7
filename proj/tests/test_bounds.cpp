#include <doctest.h>

#include <cmath>

#include "abctree/bounds.hpp"

using namespace abctree;

TEST_CASE("f_min values") {
    CHECK(std::fabs(f_min(4, 3) - 2.1213203435596424) <= 1e-12);
    CHECK(std::fabs(f_min(6, 4) - 3.5355339059327378) <= 1e-12);
    CHECK(std::fabs(f_min(4, 2) - 2.1642135623730951) <= 1e-12);
    CHECK_THROWS_AS(f_min(4, 0), std::invalid_argument);
    CHECK_THROWS_AS(f_min(4, 5), std::invalid_argument);
    CHECK_THROWS_AS(f_min(0, 1), std::invalid_argument);
}

TEST_CASE("f_min collapses to the path value at gamma = ceil(2n/3)") {
    for (int n = 3; n <= 200; ++n) {
        int g = roman_path_closed_form(n);
        CHECK(std::fabs(f_min(n, g) - (n - 1) / std::sqrt(2.0)) <= 1e-12);
    }
}

TEST_CASE("f_max values") {
    CHECK(std::fabs(f_max(4, 3) - 2.2558543488729690) <= 1e-12);
    CHECK(std::fabs(f_max(6, 4) - 4.1327713157829260) <= 1e-12);
    CHECK_THROWS_AS(f_max(4, 0), std::invalid_argument);
    CHECK_THROWS_AS(f_max(4, 5), std::invalid_argument);
}

TEST_CASE("f_max collapses to the star value at gamma = 2") {
    for (int n = 3; n <= 200; ++n)
        CHECK(std::fabs(f_max(n, 2) - std::sqrt((n - 1.0) * (n - 2.0))) <= 1e-12);
}

TEST_CASE("pendant_delta") {
    CHECK(std::fabs(pendant_delta(3.0) - 0.9258863806689045) <= 1e-12);
    CHECK(std::fabs(pendant_delta(4.0) - 0.9650830494978639) <= 1e-12);
    CHECK(std::fabs(pendant_delta(3.0) - 0.9258) <= 1e-4); // 4-dp anchor
    // tends to 1 from below
    CHECK(std::fabs(pendant_delta(1e6) - 1.0) <= 1e-6);
    CHECK(pendant_delta(1e6) < 1.0 + 1e-9);
    CHECK_THROWS_AS(pendant_delta(2.9), std::invalid_argument);
}

TEST_CASE("neighbor_delta") {
    CHECK(std::fabs(neighbor_delta(3.0, 5.0) - -0.0746512491528717) <= 1e-12);
    CHECK(std::fabs(neighbor_delta(4.0, 9.0) - -0.0558098210576179) <= 1e-12);
    for (double a = 3.0; a <= 50.0; a += 1.0)
        CHECK(neighbor_delta(a, 2.0) == 0.0); // both radicands are exactly 1/2
    CHECK_THROWS_AS(neighbor_delta(2.5, 3.0), std::invalid_argument);
    CHECK_THROWS_AS(neighbor_delta(3.0, 1.5), std::invalid_argument);
}

TEST_CASE("attach_leaf_delta") {
    CHECK(std::fabs(attach_leaf_delta(3.0, 2.0) - 0.9258863806689045) <= 1e-12);
    CHECK(std::fabs(attach_leaf_delta(3.0, 5.0) - 0.8512351315160328) <= 1e-12);
    CHECK(attach_leaf_delta(3.0, 200.0) > xi_floor());
}

TEST_CASE("radical_step") {
    CHECK(radical_step(1.0) == -std::sqrt(2.0)); // exact endpoint
    CHECK(std::fabs(radical_step(2.0) - -1.0352761804100830) <= 1e-12);
    CHECK(std::fabs(radical_step(1e6) - -1.0) <= 1e-6);
    CHECK(radical_step(1e6) < -1.0 + 1e-9);
    CHECK_THROWS_AS(radical_step(0.5), std::invalid_argument);
}

TEST_CASE("radical_step2") {
    CHECK(radical_step2(2.0) == -std::sqrt(6.0)); // exact endpoint
    CHECK(std::fabs(radical_step2(3.0) - (std::sqrt(2.0) - std::sqrt(12.0))) <= 1e-12);
    CHECK(std::fabs(radical_step2(1e6) - -2.0) <= 1e-6);
    CHECK(radical_step2(1e6) < -2.0 + 1e-9);
    CHECK_THROWS_AS(radical_step2(1.5), std::invalid_argument);
}

TEST_CASE("xi_floor") {
    CHECK(std::fabs(xi_floor() - 0.7905694150420948) <= 1e-12);
}
