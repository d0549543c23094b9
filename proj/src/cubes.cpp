#include "fibcube/cubes.hpp"

#include <deque>
#include <stdexcept>
#include <unordered_set>

namespace fibcube {

const char* to_string(Family f) {
    switch (f) {
        case Family::Hypercube: return "q";
        case Family::Fibonacci: return "gamma";
        case Family::Lucas: return "lambda";
        case Family::FibComplement: return "gammabar";
    }
    throw std::invalid_argument("unknown family");
}

StringClass vertex_class(Family f) {
    switch (f) {
        case Family::Hypercube: return StringClass::All;
        case Family::Fibonacci: return StringClass::Fib;
        case Family::Lucas: return StringClass::Lucas;
        case Family::FibComplement: return StringClass::NonFib;
    }
    throw std::invalid_argument("unknown family");
}

CubeGraph::CubeGraph(Family family, std::uint32_t n)
    : family_(family), n_(n), vertices_(enumerate(n, vertex_class(family))) {}

std::uint32_t CubeGraph::degree(const BitString& v) const {
    if (!contains(v))
        throw std::invalid_argument("vertex " + v.to_string() + " is not in the " +
                                    std::string(to_string(family_)) + " graph of dimension " +
                                    std::to_string(n_));
    std::uint32_t d = 0;
    for (std::uint32_t i = 1; i <= n_; ++i)
        if (contains(v.flip(i)))
            ++d;
    return d;
}

CubeGraph build(Family family, std::uint32_t n) { return CubeGraph(family, n); }

std::vector<Edge> edges(const CubeGraph& g) {
    std::vector<Edge> out;
    visit_edges(g, [&](const Edge& e) { out.push_back(e); });
    return out;
}

u64 edge_count(const CubeGraph& g) {
    u64 count = 0;
    visit_edges(g, [&](const Edge&) { ++count; });
    return count;
}

u64 edge_count_in_direction(const CubeGraph& g, std::uint32_t direction) {
    u64 count = 0;
    for (const BitString& v : g.vertices())
        if (v.bit(direction) == 0 && g.contains(v.flip(direction)))
            ++count;
    return count;
}

bool is_connected(const CubeGraph& g) {
    const auto& vs = g.vertices();
    if (vs.size() <= 1)
        return true;
    std::unordered_set<std::uint64_t> seen{vs.front().value()};
    std::deque<BitString> queue{vs.front()};
    while (!queue.empty()) {
        BitString v = queue.front();
        queue.pop_front();
        for (std::uint32_t i = 1; i <= g.n(); ++i) {
            BitString w = v.flip(i);
            if (g.contains(w) && seen.insert(w.value()).second)
                queue.push_back(w);
        }
    }
    return seen.size() == vs.size();
}

std::string edge_list_line(const Edge& e) {
    return e.lower.to_string() + "\t" + std::to_string(e.direction) + "\t" +
           e.upper().to_string();
}

u64 QnEdgeCensus::total() const {
    return checked_add(checked_add(none_fib, one_fib), both_fib);
}

EdgeIncidenceClass edge_incidence(const Edge& e) {
    if (e.lower.bit(e.direction) != 0)
        throw std::invalid_argument("edge is not in canonical (lower, direction) form");
    const unsigned fib_ends = static_cast<unsigned>(is_fibonacci_string(e.lower)) +
                              static_cast<unsigned>(is_fibonacci_string(e.upper()));
    if (fib_ends == 0)
        return EdgeIncidenceClass::NoFib;
    return fib_ends == 1 ? EdgeIncidenceClass::OneFib : EdgeIncidenceClass::BothFib;
}

QnEdgeCensus classify_qn_edges(std::uint32_t n) {
    if (n > enumeration_cap())
        throw std::out_of_range("n exceeds the enumeration cap");
    QnEdgeCensus census;
    const u64 limit = u64{1} << n;
    for (u64 v = 0; v < limit; ++v) {
        BitString s(n, v);
        for (std::uint32_t i = 1; i <= n; ++i) {
            if (s.bit(i) != 0)
                continue;
            switch (edge_incidence(Edge{s, i})) {
                case EdgeIncidenceClass::NoFib: ++census.none_fib; break;
                case EdgeIncidenceClass::OneFib: ++census.one_fib; break;
                case EdgeIncidenceClass::BothFib: ++census.both_fib; break;
            }
        }
    }
    const u64 expected_total = n == 0 ? 0 : checked_mul(u64{n}, checked_pow2(n - 1));
    if (census.total() != expected_total ||
        checked_add(census.one_fib, checked_mul(u64{2}, census.both_fib)) !=
            checked_mul(u64{n}, fibonacci(n + 2)))
        throw std::logic_error("Q_n edge classification failed its internal identities");
    return census;
}

u64 gamma_edge_count(std::uint32_t n) {
    u64 total = 0;
    for (std::uint32_t i = 1; i <= n; ++i)
        total = checked_add(total, checked_mul(fibonacci(i), fibonacci(n - i + 1)));
    return total;
}

u64 gamma_edge_count_closed(std::uint32_t n) {
    const u64 numerator = checked_add(checked_mul(u64{n}, fibonacci(n + 1)),
                                      checked_mul(checked_mul(u64{2}, u64{n} + 1), fibonacci(n)));
    if (numerator % 5 != 0)
        throw std::logic_error("Fibonacci cube edge-count closed form not divisible by 5");
    return numerator / 5;
}

u64 gamma_edge_count_recurrence(std::uint32_t n) {
    if (n == 0)
        return 0;
    u64 prev = 0, cur = 1;  // E(0), E(1)
    for (std::uint32_t m = 2; m <= n; ++m) {
        const u64 next = checked_add(checked_add(cur, prev), fibonacci(m));
        prev = cur;
        cur = next;
    }
    return cur;
}

u64 lambda_edge_count(std::uint32_t n) {
    return n == 0 ? 0 : checked_mul(u64{n}, fibonacci(n - 1));
}

}  // namespace fibcube
