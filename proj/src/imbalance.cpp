#include "fibcube/imbalance.hpp"

#include <stdexcept>

namespace fibcube {

namespace {

void check_upper_endpoint(const BitString& upper, std::uint32_t direction, StringClass cls) {
    const std::uint32_t n = upper.length();
    if (direction < 1 || direction > n)
        throw std::out_of_range("direction " + std::to_string(direction) + " outside [1," +
                                std::to_string(n) + "]");
    if (upper.bit(direction) != 1)
        throw std::invalid_argument("bit " + std::to_string(direction) + " of " +
                                    upper.to_string() + " is not set; not an upper endpoint");
    if (!is_member(upper, cls))
        throw std::invalid_argument(upper.to_string() + " is not a vertex, so {x, x+delta_i} "
                                    "is not an edge");
    // The lower endpoint clears a 1 and therefore stays in the class.
}

// Direct side probes from the definition: the side at j contributes iff
// {y, y+delta_j} is an edge and x+delta_j leaves the graph.  Used below the
// range of the constant-time tables.
ImbalanceValue probe_sides(const BitString& upper, std::uint32_t i, StringClass cls,
                           bool cyclic) {
    const std::uint32_t n = upper.length();
    const BitString lower = upper.flip(i);
    auto imbalanced_at = [&](std::uint32_t j) {
        return is_member(lower.flip(j), cls) && !is_member(upper.flip(j), cls);
    };
    ImbalanceValue r;
    if (cyclic) {
        const std::uint32_t right = cyclic_index(static_cast<std::int64_t>(i) + 1, n);
        const std::uint32_t left = cyclic_index(static_cast<std::int64_t>(i) - 1, n);
        if (right != i)
            r.right = imbalanced_at(right);
        if (left != i && left != right)
            r.left = imbalanced_at(left);
    } else {
        if (i + 1 <= n)
            r.right = imbalanced_at(i + 1);
        if (i >= 2)
            r.left = imbalanced_at(i - 1);
    }
    return r;
}

}  // namespace

ImbalanceValue imbalance_gamma(const BitString& upper, std::uint32_t direction) {
    check_upper_endpoint(upper, direction, StringClass::Fib);
    const std::uint32_t n = upper.length();
    if (n < 4)
        return probe_sides(upper, direction, StringClass::Fib, false);
    ImbalanceValue r;
    r.right = direction == n - 1 || (direction <= n - 2 && upper.bit(direction + 2) == 0);
    r.left = direction == 2 || (direction >= 3 && upper.bit(direction - 2) == 0);
    return r;
}

ImbalanceValue imbalance_lambda(const BitString& upper, std::uint32_t direction) {
    check_upper_endpoint(upper, direction, StringClass::Lucas);
    const std::uint32_t n = upper.length();
    if (n < 4)
        return probe_sides(upper, direction, StringClass::Lucas, true);
    ImbalanceValue r;
    r.right = upper.bit(cyclic_index(static_cast<std::int64_t>(direction) + 2, n)) == 0;
    r.left = upper.bit(cyclic_index(static_cast<std::int64_t>(direction) - 2, n)) == 0;
    return r;
}

u64 irr_gamma(std::uint32_t n) {
    return n == 0 ? 0 : checked_mul(u64{2}, gamma_edge_count(n - 1));
}

u64 irr_lambda(std::uint32_t n) {
    return n < 3 ? 0 : checked_mul(checked_mul(u64{2}, u64{n}), fibonacci(n - 2));
}

ImbalanceCensus census_by_degrees(const CubeGraph& g) {
    ImbalanceCensus census;
    visit_edges(g, [&](const Edge& e) {
        const std::uint32_t dl = g.degree(e.lower);
        const std::uint32_t du = g.degree(e.upper());
        const std::uint32_t imb = dl > du ? dl - du : du - dl;
        switch (imb) {
            case 0: ++census.zero; break;
            case 1: ++census.one; break;
            case 2: ++census.two; break;
            default:
                throw std::logic_error("edge " + edge_list_line(e) + " has imbalance " +
                                       std::to_string(imb) + " > 2");
        }
    });
    return census;
}

ImbalanceCensus gamma_class_census(std::uint32_t n) {
    if (n < 2)
        return census_by_degrees(build(Family::Fibonacci, n));
    ImbalanceCensus c;
    for (std::uint32_t i = 3; i + 2 <= n; ++i)
        c.zero = checked_add(c.zero, checked_mul(fibonacci(i - 2), fibonacci(n - i - 1)));
    c.zero = checked_add(c.zero, checked_mul(u64{2}, fibonacci(n - 2)));
    for (std::uint32_t i = 1; i + 3 <= n; ++i)
        c.one = checked_add(c.one, checked_mul(u64{2}, checked_mul(fibonacci(i), fibonacci(n - i - 2))));
    c.one = checked_add(c.one, checked_mul(u64{2}, fibonacci(n - 1)));
    for (std::uint32_t i = 2; i + 1 <= n; ++i)
        c.two = checked_add(c.two, checked_mul(fibonacci(i - 1), fibonacci(n - i)));
    if (c.total() != gamma_edge_count(n) ||
        checked_add(c.one, checked_mul(u64{2}, c.two)) != irr_gamma(n))
        throw std::logic_error("Fibonacci cube imbalance census failed its internal identities");
    return c;
}

ImbalanceCensus lambda_class_census(std::uint32_t n) {
    ImbalanceCensus c;
    if (n < 5) {
        c = census_by_degrees(build(Family::Lucas, n));
    } else {
        c.zero = checked_mul(u64{n}, fibonacci(n - 5));
        c.one = checked_mul(checked_mul(u64{2}, u64{n}), fibonacci(n - 4));
        c.two = checked_mul(u64{n}, fibonacci(n - 3));
    }
    if (c.total() != lambda_edge_count(n))
        throw std::logic_error("Lucas cube imbalance census does not sum to n F_{n-1}");
    if (n >= 3 && checked_add(c.one, checked_mul(u64{2}, c.two)) != irr_lambda(n))
        throw std::logic_error("Lucas cube imbalance census disagrees with 2 n F_{n-2}");
    return c;
}

}  // namespace fibcube
