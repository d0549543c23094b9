#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fibcube/imbalance.hpp"

using namespace fibcube;

namespace {

unsigned oracle_imbalance(const CubeGraph& g, const Edge& e) {
    const std::uint32_t a = g.degree(e.lower);
    const std::uint32_t b = g.degree(e.upper());
    return a > b ? a - b : b - a;
}

}  // namespace

TEST_CASE("constant-time Fibonacci cube classification") {
    CHECK(imbalance_gamma(BitString::parse("1000"), 1) ==
          ImbalanceValue{false, true});  // d(1000)=3, d(0000)=4
    CHECK(imbalance_gamma(BitString::parse("00100"), 3) == ImbalanceValue{true, true});
    CHECK(imbalance_gamma(BitString::parse("10101"), 3) == ImbalanceValue{false, false});
    CHECK(imbalance_gamma(BitString::parse("00100"), 3).value() == 2);
}

TEST_CASE("constant-time Lucas cube classification") {
    CHECK(imbalance_lambda(BitString::parse("10000"), 1).value() == 2);
    CHECK(imbalance_lambda(BitString::parse("10100"), 1) == ImbalanceValue{true, false});
    CHECK(imbalance_lambda(BitString::parse("10100"), 3) == ImbalanceValue{false, true});
}

TEST_CASE("classifier argument validation") {
    CHECK_THROWS_AS(imbalance_gamma(BitString::parse("00100"), 4), std::invalid_argument);
    CHECK_THROWS_AS(imbalance_gamma(BitString::parse("01100"), 2), std::invalid_argument);
    CHECK_THROWS_AS(imbalance_gamma(BitString::parse("00100"), 0), std::out_of_range);
    CHECK_THROWS_AS(imbalance_gamma(BitString::parse("00100"), 6), std::out_of_range);
    CHECK_THROWS_AS(imbalance_lambda(BitString::parse("10001"), 1), std::invalid_argument);
}

TEST_CASE("classifier equals degree differencing on every edge") {
    for (std::uint32_t n = 1; n <= 10; ++n) {
        const CubeGraph gamma = build(Family::Fibonacci, n);
        visit_edges(gamma, [&](const Edge& e) {
            const ImbalanceValue v = imbalance_gamma(e.upper(), e.direction);
            CHECK(v.value() == oracle_imbalance(gamma, e));
        });
        const CubeGraph lambda = build(Family::Lucas, n);
        visit_edges(lambda, [&](const Edge& e) {
            const ImbalanceValue v = imbalance_lambda(e.upper(), e.direction);
            CHECK(v.value() == oracle_imbalance(lambda, e));
        });
    }
}

TEST_CASE("lower endpoints dominate and imbalance never exceeds 2") {
    for (std::uint32_t n = 1; n <= 10; ++n) {
        for (Family f : {Family::Fibonacci, Family::Lucas}) {
            const CubeGraph g = build(f, n);
            visit_edges(g, [&](const Edge& e) {
                CHECK(g.degree(e.lower) >= g.degree(e.upper()));
                CHECK(oracle_imbalance(g, e) <= 2);
            });
        }
    }
}

TEST_CASE("neighbour existence is local to the edge direction") {
    for (std::uint32_t n = 1; n <= 9; ++n) {
        const CubeGraph gamma = build(Family::Fibonacci, n);
        visit_edges(gamma, [&](const Edge& e) {
            const BitString x = e.upper();
            for (std::uint32_t j = 1; j <= n; ++j) {
                if (j + 1 >= e.direction && j <= e.direction + 1)
                    continue;
                CHECK(gamma.contains(x.flip(j)) == gamma.contains(e.lower.flip(j)));
            }
        });
        const CubeGraph lambda = build(Family::Lucas, n);
        visit_edges(lambda, [&](const Edge& e) {
            const BitString x = e.upper();
            for (std::uint32_t j = 1; j <= n; ++j) {
                if (j == e.direction ||
                    j == cyclic_index(static_cast<std::int64_t>(e.direction) - 1, n) ||
                    j == cyclic_index(static_cast<std::int64_t>(e.direction) + 1, n))
                    continue;
                CHECK(lambda.contains(x.flip(j)) == lambda.contains(e.lower.flip(j)));
            }
        });
    }
}

TEST_CASE("irregularity closed forms") {
    CHECK(irr_gamma(1) == 0);
    CHECK(irr_gamma(2) == 2);
    CHECK(irr_gamma(4) == 10);
    CHECK(irr_lambda(3) == 6);
    CHECK(irr_lambda(4) == 8);
    CHECK(irr_lambda(5) == 20);
    CHECK(irr_lambda(2) == 0);  // formula convention below its claimed range
}

TEST_CASE("Fibonacci cube imbalance census") {
    CHECK(gamma_class_census(2) == ImbalanceCensus{0, 2, 0});
    CHECK(gamma_class_census(4) == ImbalanceCensus{2, 6, 2});
    CHECK(gamma_class_census(5) == ImbalanceCensus{5, 10, 5});
    for (std::uint32_t n = 0; n <= 10; ++n) {
        const ImbalanceCensus closed = gamma_class_census(n);
        CHECK(closed == census_by_degrees(build(Family::Fibonacci, n)));
        CHECK(closed.total() == gamma_edge_count(n));
        if (n >= 1)
            CHECK(closed.one + 2 * closed.two == irr_gamma(n));
    }
}

TEST_CASE("Lucas cube imbalance census") {
    CHECK(lambda_class_census(3) == ImbalanceCensus{0, 0, 3});
    CHECK(lambda_class_census(4) == ImbalanceCensus{4, 0, 4});
    CHECK(lambda_class_census(5) == ImbalanceCensus{0, 10, 5});
    CHECK(lambda_class_census(6) == ImbalanceCensus{6, 12, 12});
    CHECK(lambda_class_census(7) == ImbalanceCensus{7, 28, 21});
    for (std::uint32_t n = 0; n <= 10; ++n) {
        const ImbalanceCensus census = lambda_class_census(n);
        CHECK(census == census_by_degrees(build(Family::Lucas, n)));
        CHECK(census.total() == lambda_edge_count(n));
        if (n >= 3)
            CHECK(census.one + 2 * census.two == irr_lambda(n));
    }
}
