#include "fibcube/complement.hpp"

#include <stdexcept>

namespace fibcube {

u64 DegreeCensus::vertex_total() const {
    u64 total = 0;
    for (const auto& [degree, count] : entries)
        total = checked_add(total, count);
    return total;
}

u64 DegreeCensus::degree_sum() const {
    u64 total = 0;
    for (const auto& [degree, count] : entries)
        total = checked_add(total, checked_mul(u64{degree}, count));
    return total;
}

bool same_counts(const DegreeCensus& a, const DegreeCensus& b) {
    if (a.n != b.n)
        return false;
    for (const auto& [degree, count] : a.entries)
        if (count != 0 && (!b.entries.contains(degree) || b.entries.at(degree) != count))
            return false;
    for (const auto& [degree, count] : b.entries)
        if (count != 0 && (!a.entries.contains(degree) || a.entries.at(degree) != count))
            return false;
    return true;
}

u64 complement_vertex_count(std::uint32_t n) {
    return checked_sub(checked_pow2(n), fibonacci(n + 2));
}

u64 complement_vertex_recurrence(std::uint32_t n) {
    if (n == 0)
        return 0;
    u64 prev = 0, cur = 1;  // |V(1)|, |V(2)|
    if (n == 1)
        return prev;
    for (std::uint32_t m = 3; m <= n; ++m) {
        const u64 next = checked_add(checked_add(cur, prev), checked_pow2(m - 2));
        prev = cur;
        cur = next;
    }
    return cur;
}

ComplementEdgeExpressions complement_edge_expressions(std::uint32_t n) {
    if (n > 120)
        throw std::overflow_error("complement edge expressions exceed 128 bits beyond n = 120");
    ComplementEdgeExpressions e;
    if (n == 0)
        return e;
    const u128 qn_edges = checked_mul<u128>(n, checked_pow2_wide(n - 1));

    u128 zero_pairs = 0;
    for (std::uint32_t i = 1; i <= n; ++i)
        zero_pairs = checked_add(zero_pairs,
                                 checked_mul(fibonacci_wide(i + 1), fibonacci_wide(n - i + 2)));
    e.direct = checked_sub(qn_edges, zero_pairs);

    const u128 numerator =
        checked_add(checked_mul<u128>(4 * u128{n}, fibonacci_wide(n + 1)),
                    checked_mul<u128>(3 * u128{n} - 2, fibonacci_wide(n)));
    if (numerator % 5 != 0)
        throw std::logic_error("complement edge-count closed form not divisible by 5");
    e.closed = checked_sub(qn_edges, numerator / 5);

    u128 prev = 0, cur = 0;  // E(1), E(2)
    for (std::uint32_t m = 3; m <= n; ++m) {
        const u128 step = checked_sub(
            checked_mul<u128>(u128{m} + 4, checked_pow2_wide(m - 3)), fibonacci_wide(m + 2));
        const u128 next = checked_add(checked_add(cur, prev), step);
        prev = cur;
        cur = next;
    }
    e.recurrence = cur;

    if (e.direct != e.closed || (n >= 3 && e.direct != e.recurrence))
        throw std::logic_error("the three complement edge-count expressions disagree at n = " +
                               std::to_string(n));
    if (n < 3)
        e.recurrence = e.direct;  // seeds; both are 0
    return e;
}

u64 complement_edge_count(std::uint32_t n) {
    return narrow_to_u64(complement_edge_expressions(n).direct);
}

BlockProfile block_profile(const BitString& x) {
    const std::uint32_t n = x.length();
    BlockProfile p;
    for (std::uint32_t i = 1; i + 1 <= n; ++i) {
        if (x.bit(i) == 1 && x.bit(i + 1) == 1) {
            p.leftmost = i;
            break;
        }
    }
    for (std::uint32_t i = n >= 2 ? n - 1 : 0; i >= 1; --i) {
        if (x.bit(i) == 1 && x.bit(i + 1) == 1) {
            p.rightmost = i;
            break;
        }
    }
    if (p.leftmost == 0)
        throw std::invalid_argument(x.to_string() + " contains no 11 substring");
    return p;
}

std::uint32_t classify_complement_vertex(const BitString& x) {
    const BlockProfile p = block_profile(x);
    const std::uint32_t n = x.length();
    if (p.rightmost == p.leftmost)
        return n - 2;
    if (p.rightmost == p.leftmost + 1)
        return n - 1;
    return n;
}

namespace {

u64 degree_n_vertex_count(std::uint32_t n) {
    u64 total = 0;
    for (std::uint32_t k = 0; k + 4 <= n; ++k)
        total = checked_add(total,
                            checked_mul(checked_pow2(k), gamma_edge_count(n - k - 3)));
    return total;
}

u64 exact_fifth(u64 numerator) {
    if (numerator % 5 != 0)
        throw std::logic_error("degree census closed form not divisible by 5");
    return numerator / 5;
}

}  // namespace

DegreeCensus complement_degree_census(std::uint32_t n) {
    DegreeCensus census{n, {}};
    if (n == 0)
        return census;
    const u64 two_below = gamma_edge_count(n - 1);
    const u64 one_below = n >= 2 ? gamma_edge_count(n - 2) : 0;
    const u64 full = degree_n_vertex_count(n);
    if (n >= 2)
        census.entries[n - 2] = two_below;
    census.entries[n - 1] = one_below;
    census.entries[n] = full;

    if (n >= 2) {
        const u64 r2 = exact_fifth(checked_add(checked_mul(u64{n} - 1, fibonacci(n)),
                                               checked_mul(u64{2} * n, fibonacci(n - 1))));
        const u64 r1 = exact_fifth(checked_add(checked_mul(u64{n} - 2, fibonacci(n - 1)),
                                               checked_mul(u64{2} * n - 2, fibonacci(n - 2))));
        const u64 r0 = checked_sub(
            checked_pow2(n),
            exact_fifth(checked_add(checked_mul(u64{3} * n + 7, fibonacci(n)),
                                    checked_mul(u64{n} + 5, fibonacci(n - 1)))));
        if (r2 != two_below || r1 != one_below || r0 != full)
            throw std::logic_error("degree census closed forms disagree at n = " +
                                   std::to_string(n));
    }
    if (census.vertex_total() != complement_vertex_count(n) ||
        census.degree_sum() != checked_mul(u64{2}, complement_edge_count(n)))
        throw std::logic_error("degree census does not reconcile with the vertex and edge "
                               "counts at n = " + std::to_string(n));
    return census;
}

std::vector<u64> a235996_prefix(std::uint32_t count) {
    std::vector<u64> out;
    out.reserve(count);
    for (std::uint32_t n = 1; n <= count; ++n)
        out.push_back(degree_n_vertex_count(n));
    return out;
}

std::uint32_t embedded_direction(std::uint32_t i) {
    if (i == 1)
        return 4;
    if (i == 4)
        return 1;
    return i;
}

BitString embed_gamma_into_complement(const BitString& x) {
    const std::uint32_t n = x.length();
    if (n < 4)
        throw std::invalid_argument("the embedding needs n >= 4");
    if (!is_fibonacci_string(x))
        throw std::invalid_argument(x.to_string() + " is not a Fibonacci string");
    const std::uint64_t mask = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    BitString complemented(n, ~x.value() & mask);
    const unsigned b1 = complemented.bit(1);
    const unsigned b4 = complemented.bit(4);
    if (b1 != b4)
        complemented = complemented.flip(1).flip(4);
    return complemented;
}

}  // namespace fibcube
