#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "fibcube/cubes.hpp"

namespace fibcube {

// Multiset of vertex degrees of a graph.
struct DegreeCensus {
    std::uint32_t n = 0;
    std::map<std::uint32_t, u64> entries;  // degree -> number of vertices

    u64 vertex_total() const;
    u64 degree_sum() const;

    friend bool operator==(const DegreeCensus&, const DegreeCensus&) = default;
};

// Equality that treats absent entries as zero counts.
bool same_counts(const DegreeCensus& a, const DegreeCensus& b);

// |V| of the cube complement: 2^n - F_{n+2}.
u64 complement_vertex_count(std::uint32_t n);

// The same count through |V(n)| = |V(n-1)| + |V(n-2)| + 2^{n-2}, seeded by
// |V(1)| = 0, |V(2)| = 1.
u64 complement_vertex_recurrence(std::uint32_t n);

// The three equivalent expressions for |E| of the cube complement, kept wide
// because the count outgrows 64 bits near n = 60:
//   direct:     n 2^{n-1} - sum_i F_{i+1} F_{n-i+2}
//   closed:     n 2^{n-1} - (4n F_{n+1} + (3n-2) F_n) / 5
//   recurrence: E(n) = E(n-1) + E(n-2) + (n+4) 2^{n-3} - F_{n+2}, E(1)=E(2)=0
struct ComplementEdgeExpressions {
    u128 direct = 0;
    u128 closed = 0;
    u128 recurrence = 0;
};

ComplementEdgeExpressions complement_edge_expressions(std::uint32_t n);

// Evaluates all three expressions, verifies they agree, and narrows to u64.
u64 complement_edge_count(std::uint32_t n);

// Positions of the leftmost and rightmost "11" of a string containing one.
struct BlockProfile {
    std::uint32_t leftmost = 0;   // min i with x_i = x_{i+1} = 1
    std::uint32_t rightmost = 0;  // max such i
};

BlockProfile block_profile(const BitString& x);

// Degree of a vertex of the cube complement in O(n), without touching the
// graph: n-2 if the only run of 1s longer than one has length exactly 2,
// n-1 if it has length exactly 3, n otherwise.
std::uint32_t classify_complement_vertex(const BitString& x);

// Degree census of the cube complement from closed forms:
//   degree n-2: |E(Gamma_{n-1})| vertices
//   degree n-1: |E(Gamma_{n-2})| vertices
//   degree n:   sum_{k=0}^{n-4} 2^k |E(Gamma_{n-k-3})| vertices
// Cross-checked internally against the /5 closed forms and the vertex and
// edge totals.
DegreeCensus complement_degree_census(std::uint32_t n);

// Number of degree-n vertices of the cube complement for n = 1..count
// (OEIS A235996).
std::vector<u64> a235996_prefix(std::uint32_t count);

// Embeds the Fibonacci cube into its own cube complement (n >= 4):
// complement every bit, then swap positions 1 and 4.  Edges map to edges
// with the direction relabelled by the same transposition.
BitString embed_gamma_into_complement(const BitString& x);

// The direction relabelling of the embedding: swaps 1 and 4.
std::uint32_t embedded_direction(std::uint32_t i);

}  // namespace fibcube
