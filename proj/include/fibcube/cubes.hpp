#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fibcube/strings.hpp"

namespace fibcube {

enum class Family { Hypercube, Fibonacci, Lucas, FibComplement };

const char* to_string(Family f);
StringClass vertex_class(Family f);

// An edge of an induced subgraph of Q_n in canonical form: `lower` is the
// endpoint with bit 0 at `direction`; the upper endpoint has that bit set.
struct Edge {
    BitString lower;
    std::uint32_t direction = 0;

    BitString upper() const { return lower.flip(direction); }

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Immutable induced subgraph of Q_n over one of the string classes.
// Adjacency is never stored: two vertices are adjacent iff they differ in
// exactly one position and both satisfy the membership predicate, so degree
// and edge queries are membership scans.
class CubeGraph {
public:
    CubeGraph(Family family, std::uint32_t n);

    Family family() const { return family_; }
    std::uint32_t n() const { return n_; }
    const std::vector<BitString>& vertices() const { return vertices_; }

    bool contains(const BitString& v) const {
        return v.length() == n_ && is_member(v, vertex_class(family_));
    }

    // Number of positions whose flip stays in the graph; throws if v is not
    // a vertex.
    std::uint32_t degree(const BitString& v) const;

private:
    Family family_;
    std::uint32_t n_;
    std::vector<BitString> vertices_;
};

CubeGraph build(Family family, std::uint32_t n);

// Yields every edge exactly once, sorted by (direction, lower endpoint).
template <typename Fn>
void visit_edges(const CubeGraph& g, Fn&& fn) {
    for (std::uint32_t i = 1; i <= g.n(); ++i)
        for (const BitString& v : g.vertices())
            if (v.bit(i) == 0 && g.contains(v.flip(i)))
                fn(Edge{v, i});
}

std::vector<Edge> edges(const CubeGraph& g);
u64 edge_count(const CubeGraph& g);
u64 edge_count_in_direction(const CubeGraph& g, std::uint32_t direction);

// Breadth-first reachability from the first vertex; the empty graph and K_1
// count as connected.
bool is_connected(const CubeGraph& g);

// "lower<TAB>direction<TAB>upper"
std::string edge_list_line(const Edge& e);

// How many endpoints of a Q_n edge are Fibonacci strings.  NoFib edges are
// the cube complement's, BothFib edges the Fibonacci cube's.
enum class EdgeIncidenceClass { NoFib, OneFib, BothFib };

EdgeIncidenceClass edge_incidence(const Edge& e);

// Edges of Q_n split by how many endpoints are Fibonacci strings.
// none_fib is the edge set of the cube complement, both_fib the edge set of
// the Fibonacci cube.
struct QnEdgeCensus {
    u64 none_fib = 0;
    u64 one_fib = 0;
    u64 both_fib = 0;

    u64 total() const;

    friend bool operator==(const QnEdgeCensus&, const QnEdgeCensus&) = default;
};

QnEdgeCensus classify_qn_edges(std::uint32_t n);

// |E(Gamma_n)| three ways: the convolution sum F_i * F_{n-i+1}, the
// (n F_{n+1} + 2(n+1) F_n) / 5 closed form, and the recurrence
// E(n) = E(n-1) + E(n-2) + F(n).  Kept as separate routes so they can be
// cross-checked against each other and against adjacency counting.
u64 gamma_edge_count(std::uint32_t n);
u64 gamma_edge_count_closed(std::uint32_t n);
u64 gamma_edge_count_recurrence(std::uint32_t n);

// |E(Lambda_n)| = n * F_{n-1} for n >= 1.
u64 lambda_edge_count(std::uint32_t n);

}  // namespace fibcube
