#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "fibcube/bijections.hpp"
#include "fibcube/oracle.hpp"

using namespace fibcube;

namespace {

ImbalancedCouple couple(const std::string& lower, std::uint32_t direction, Side side) {
    return ImbalancedCouple{Edge{BitString::parse(lower), direction}, side};
}

}  // namespace

TEST_CASE("couple counts equal the irregularity") {
    CHECK(enumerate_couples(build(Family::Fibonacci, 2)).size() == 2);
    CHECK(enumerate_couples(build(Family::Lucas, 3)).size() == 6);
    CHECK(enumerate_couples(build(Family::Fibonacci, 1)).empty());
    for (std::uint32_t n = 0; n <= 10; ++n)
        for (Family f : {Family::Fibonacci, Family::Lucas}) {
            const CubeGraph g = build(f, n);
            CHECK(enumerate_couples(g).size() == oracle_irregularity(g));
        }
    CHECK_THROWS_AS(enumerate_couples(build(Family::Hypercube, 3)), std::invalid_argument);
}

TEST_CASE("every enumerated couple satisfies the definition") {
    for (std::uint32_t n = 1; n <= 9; ++n)
        for (Family f : {Family::Fibonacci, Family::Lucas}) {
            const CubeGraph g = build(f, n);
            for (const ImbalancedCouple& c : enumerate_couples(g)) {
                const Edge partner = couple_partner_edge(c, f);
                CHECK(partner.lower == c.e.lower);
                CHECK(g.contains(partner.upper()));
                CHECK_FALSE(g.contains(c.e.upper().flip(partner.direction)));
            }
        }
}

TEST_CASE("theta on right couples of the Fibonacci cube") {
    const Edge f1 = theta_gamma_right(couple("00", 1, Side::Right));
    CHECK(f1.lower.to_string() == "0");
    CHECK(f1.direction == 1);

    const Edge f2 = theta_gamma_right(couple("000", 1, Side::Right));  // x = 100
    CHECK(f2.lower.to_string() == "00");
    CHECK(f2.direction == 1);
    CHECK(f2.upper().to_string() == "10");

    const Edge f3 = theta_gamma_right(couple("000", 2, Side::Right));  // x = 010
    CHECK(f3.lower.to_string() == "00");
    CHECK(f3.direction == 2);
    CHECK(f3.upper().to_string() == "01");

    CHECK_THROWS_AS(theta_gamma_right(couple("00", 1, Side::Left)), std::invalid_argument);
}

TEST_CASE("theta inverse rebuilds the couple") {
    const ImbalancedCouple c1 = theta_gamma_right_inverse(Edge{BitString::parse("0"), 1});
    CHECK(c1.e.upper().to_string() == "10");
    CHECK(c1.e.direction == 1);
    CHECK(c1.side == Side::Right);

    const ImbalancedCouple c2 = theta_gamma_right_inverse(Edge{BitString::parse("00"), 1});
    CHECK(c2.e.upper().to_string() == "100");
    const Edge partner = couple_partner_edge(c2, Family::Fibonacci);
    CHECK(partner.upper().to_string() == "010");

    CHECK_THROWS_AS(theta_gamma_right_inverse(Edge{BitString::parse("010"), 3}),
                    std::invalid_argument);  // upper endpoint 011 leaves the cube
}

TEST_CASE("phi on left couples of the Fibonacci cube") {
    const Edge f1 = phi_gamma_left(couple("00", 2, Side::Left));  // x = 01
    CHECK(f1.lower.to_string() == "0");
    CHECK(f1.direction == 1);

    const Edge f2 = phi_gamma_left(couple("000", 3, Side::Left));  // x = 001
    CHECK(f2.lower.to_string() == "00");
    CHECK(f2.direction == 2);
    CHECK(f2.upper().to_string() == "01");

    CHECK_THROWS_AS(phi_gamma_left(couple("000", 3, Side::Right)), std::invalid_argument);
}

TEST_CASE("theta and phi are bijections onto the edges of the smaller cube") {
    for (std::uint32_t n = 2; n <= 12; ++n) {
        const CubeGraph gamma = build(Family::Fibonacci, n);
        const auto couples = enumerate_couples(gamma);
        const auto smaller = edges(build(Family::Fibonacci, n - 1));
        const std::set<Edge> target(smaller.begin(), smaller.end());

        for (Side side : {Side::Right, Side::Left}) {
            std::set<Edge> image;
            u64 total = 0;
            for (const ImbalancedCouple& c : couples) {
                if (c.side != side)
                    continue;
                ++total;
                const Edge f = side == Side::Right ? theta_gamma_right(c) : phi_gamma_left(c);
                image.insert(f);
                const ImbalancedCouple back = side == Side::Right
                                                  ? theta_gamma_right_inverse(f)
                                                  : phi_gamma_left_inverse(f);
                CHECK(back == c);
            }
            CHECK(total == image.size());          // injective
            CHECK(image == target);                // surjective
            CHECK(total == smaller.size());
            for (const Edge& f : smaller) {
                const Edge forward =
                    side == Side::Right
                        ? theta_gamma_right(theta_gamma_right_inverse(f))
                        : phi_gamma_left(phi_gamma_left_inverse(f));
                CHECK(forward == f);
            }
        }
    }
}

TEST_CASE("Lucas couple maps extract the rotated core") {
    CHECK(theta_lambda(couple("0000", 1, Side::Right)).length() == 0);
    CHECK(theta_lambda(couple("00000", 1, Side::Right)).to_string() == "0");

    const ImbalancedCouple c = theta_lambda_inverse(BitString::parse("10"), 1, Side::Right, 6);
    CHECK(c.e.upper().to_string() == "100100");
    const Edge partner = couple_partner_edge(c, Family::Lucas);
    CHECK(partner.upper().to_string() == "010100");

    CHECK_THROWS_AS(theta_lambda(couple("000", 1, Side::Right)), std::invalid_argument);
    CHECK_THROWS_AS(theta_lambda_inverse(BitString::parse("11"), 1, Side::Right, 6),
                    std::invalid_argument);
    CHECK_THROWS_AS(theta_lambda_inverse(BitString::parse("0"), 1, Side::Right, 6),
                    std::invalid_argument);
}

TEST_CASE("Lucas maps are direction-wise bijections onto Fib(n-4)") {
    for (std::uint32_t n = 4; n <= 12; ++n) {
        const CubeGraph lambda = build(Family::Lucas, n);
        const auto couples = enumerate_couples(lambda);
        const auto strings = enumerate(n - 4, StringClass::Fib);
        const std::set<BitString> target(strings.begin(), strings.end());

        for (std::uint32_t i = 1; i <= n; ++i) {
            for (Side side : {Side::Right, Side::Left}) {
                std::set<BitString> image;
                u64 total = 0;
                for (const ImbalancedCouple& c : couples) {
                    if (c.e.direction != i || c.side != side)
                        continue;
                    ++total;
                    const BitString z = theta_lambda(c);
                    image.insert(z);
                    CHECK(theta_lambda_inverse(z, i, side, n) == c);
                }
                CHECK(total == fibonacci(n - 2));
                CHECK(image == target);
                for (const BitString& z : strings)
                    CHECK(theta_lambda(theta_lambda_inverse(z, i, side, n)) == z);
            }
        }
    }
}

TEST_CASE("rotation is an automorphism of the Lucas cube") {
    for (std::uint32_t n = 2; n <= 12; ++n) {
        const CubeGraph lambda = build(Family::Lucas, n);
        for (std::uint32_t i = 1; i <= n; ++i) {
            visit_edges(lambda, [&](const Edge& e) {
                const BitString a = rotate_to_front(e.lower, i);
                const BitString b = rotate_to_front(e.upper(), i);
                CHECK(lambda.contains(a));
                CHECK(lambda.contains(b));
                CHECK(__builtin_popcountll(a.value() ^ b.value()) == 1);
            });
        }
    }
}

TEST_CASE("couple export format") {
    CHECK(couple_line(couple("000", 2, Side::Left)) == "000\t2\tleft");
    CHECK(couple_line(couple("000", 1, Side::Right)) == "000\t1\tright");
}
