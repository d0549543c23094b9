#include "fibcube/bijections.hpp"

#include <stdexcept>

namespace fibcube {

namespace {

std::uint32_t partner_direction(const Edge& e, Side side, Family family) {
    const std::uint32_t n = e.lower.length();
    const std::uint32_t i = e.direction;
    if (family == Family::Lucas) {
        if (n < 2)
            throw std::invalid_argument("no neighbouring direction exists for n < 2");
        const std::int64_t k = static_cast<std::int64_t>(i) + (side == Side::Right ? 1 : -1);
        const std::uint32_t j = cyclic_index(k, n);
        if (j == i)
            throw std::invalid_argument("cyclic neighbour collapses onto the edge direction");
        return j;
    }
    if (side == Side::Right) {
        if (i + 1 > n)
            throw std::invalid_argument("no direction to the right of " + std::to_string(i));
        return i + 1;
    }
    if (i < 2)
        throw std::invalid_argument("no direction to the left of 1");
    return i - 1;
}

// A couple is valid iff e is a canonical edge of the graph, e' exists, and
// the translate of e' across e leaves the vertex set.
void validate_couple(const ImbalancedCouple& c, Family family) {
    const StringClass cls = vertex_class(family);
    const Edge& e = c.e;
    const std::uint32_t n = e.lower.length();
    if (e.direction < 1 || e.direction > n)
        throw std::invalid_argument("edge direction outside [1, n]");
    if (e.lower.bit(e.direction) != 0)
        throw std::invalid_argument("edge is not in canonical (lower, direction) form");
    if (!is_member(e.lower, cls) || !is_member(e.upper(), cls))
        throw std::invalid_argument("couple's edge is not an edge of the graph");
    const std::uint32_t j = partner_direction(e, c.side, family);
    if (!is_member(e.lower.flip(j), cls))
        throw std::invalid_argument("couple's partner edge {y, y+delta_j} is missing");
    if (is_member(e.upper().flip(j), cls))
        throw std::invalid_argument("partner edge is not imbalanced: x+delta_j stays in the graph");
}

void validate_gamma_edge(const Edge& f) {
    const std::uint32_t m = f.lower.length();
    if (f.direction < 1 || f.direction > m)
        throw std::invalid_argument("edge direction outside [1, n]");
    if (f.lower.bit(f.direction) != 0)
        throw std::invalid_argument("edge is not in canonical (lower, direction) form");
    if (!is_fibonacci_string(f.lower) || !is_fibonacci_string(f.upper()))
        throw std::invalid_argument("not an edge of the Fibonacci cube");
}

}  // namespace

const char* to_string(Side s) { return s == Side::Left ? "left" : "right"; }

Edge couple_partner_edge(const ImbalancedCouple& c, Family family) {
    validate_couple(c, family);
    return Edge{c.e.lower, partner_direction(c.e, c.side, family)};
}

std::vector<ImbalancedCouple> enumerate_couples(const CubeGraph& g) {
    if (g.family() != Family::Fibonacci && g.family() != Family::Lucas)
        throw std::invalid_argument("imbalanced couples are defined for the Fibonacci and "
                                    "Lucas cubes only");
    const bool cyclic = g.family() == Family::Lucas;
    const std::uint32_t n = g.n();
    std::vector<ImbalancedCouple> out;
    visit_edges(g, [&](const Edge& e) {
        const BitString y = e.lower;
        const BitString x = e.upper();
        auto probe = [&](std::uint32_t j, Side side) {
            if (g.contains(y.flip(j)) && !g.contains(x.flip(j)))
                out.push_back(ImbalancedCouple{e, side});
        };
        if (cyclic) {
            if (n < 2)
                return;
            const std::uint32_t right = cyclic_index(static_cast<std::int64_t>(e.direction) + 1, n);
            const std::uint32_t left = cyclic_index(static_cast<std::int64_t>(e.direction) - 1, n);
            if (right != e.direction)
                probe(right, Side::Right);
            if (left != e.direction && left != right)
                probe(left, Side::Left);
        } else {
            if (e.direction < n)
                probe(e.direction + 1, Side::Right);
            if (e.direction > 1)
                probe(e.direction - 1, Side::Left);
        }
    });
    return out;
}

Edge theta_gamma_right(const ImbalancedCouple& c) {
    if (c.side != Side::Right)
        throw std::invalid_argument("theta maps right couples; this one is left");
    validate_couple(c, Family::Fibonacci);
    const std::uint32_t i = c.e.direction;
    const BitString shrunk = erase_position(c.e.upper(), i + 1);
    return Edge{shrunk.flip(i), i};
}

ImbalancedCouple theta_gamma_right_inverse(const Edge& f) {
    validate_gamma_edge(f);
    const std::uint32_t i = f.direction;
    const BitString x = insert_position(f.upper(), i + 1, 0);  // "10" at positions i, i+1
    return ImbalancedCouple{Edge{x.flip(i), i}, Side::Right};
}

Edge phi_gamma_left(const ImbalancedCouple& c) {
    if (c.side != Side::Left)
        throw std::invalid_argument("phi maps left couples; this one is right");
    validate_couple(c, Family::Fibonacci);
    const std::uint32_t i = c.e.direction;
    const BitString shrunk = erase_position(c.e.upper(), i - 1);
    return Edge{shrunk.flip(i - 1), i - 1};
}

ImbalancedCouple phi_gamma_left_inverse(const Edge& f) {
    validate_gamma_edge(f);
    const std::uint32_t i = f.direction;
    const BitString x = insert_position(f.upper(), i, 0);  // "01" at positions i, i+1
    return ImbalancedCouple{Edge{x.flip(i + 1), i + 1}, Side::Left};
}

BitString theta_lambda(const ImbalancedCouple& c) {
    const std::uint32_t n = c.e.lower.length();
    if (n < 4)
        throw std::invalid_argument("the Lucas couple maps need n >= 4");
    validate_couple(c, Family::Lucas);
    const BitString rotated = rotate_to_front(c.e.upper(), c.e.direction);
    // rotated reads 100z0 for right couples and 10z00 for left couples
    if (c.side == Side::Right)
        return substring(rotated, 4, n - 1);
    return substring(rotated, 3, n - 2);
}

ImbalancedCouple theta_lambda_inverse(const BitString& z, std::uint32_t direction, Side side,
                                      std::uint32_t n) {
    if (n < 4)
        throw std::invalid_argument("the Lucas couple maps need n >= 4");
    if (z.length() != n - 4)
        throw std::invalid_argument("expected a string of length n - 4");
    if (!is_fibonacci_string(z))
        throw std::invalid_argument(z.to_string() + " is not a Fibonacci string");
    if (direction < 1 || direction > n)
        throw std::out_of_range("direction outside [1, n]");
    const std::uint64_t top = std::uint64_t{1} << (n - 1);
    const BitString rotated =
        side == Side::Right ? BitString(n, top | (z.value() << 1))    // 1 0 0 z 0
                            : BitString(n, top | (z.value() << 2));   // 1 0 z 0 0
    const BitString x = rotate_from_front(rotated, direction);
    return ImbalancedCouple{Edge{x.flip(direction), direction}, side};
}

std::string couple_line(const ImbalancedCouple& c) {
    return c.e.lower.to_string() + "\t" + std::to_string(c.e.direction) + "\t" +
           to_string(c.side);
}

}  // namespace fibcube
