#pragma once

#include <cstdint>

#include "fibcube/cubes.hpp"

namespace fibcube {

// Imbalance of an edge {x, y}: |d(x) - d(y)|.  In Fibonacci and Lucas cubes
// the lower endpoint always dominates, the value never exceeds 2, and each
// unit comes from one side: a neighbouring edge of the lower endpoint in
// direction i-1 (left) or i+1 (right, cyclic in the Lucas cube) whose
// translate across the edge leaves the graph.
struct ImbalanceValue {
    bool left = false;
    bool right = false;

    unsigned value() const { return static_cast<unsigned>(left) + static_cast<unsigned>(right); }

    friend bool operator==(const ImbalanceValue&, const ImbalanceValue&) = default;
};

// Constant-time classification of an edge of the Fibonacci cube from the
// upper endpoint x (x has bit 1 at `direction`):
//   right side present  iff  i = n-1, or i <= n-2 and x_{i+2} = 0
//   left side present   iff  i = 2,   or i >= 3   and x_{i-2} = 0
// For n <= 3 the sides are probed directly instead.
ImbalanceValue imbalance_gamma(const BitString& upper, std::uint32_t direction);

// Lucas analogue; both index tests wrap cyclically:
//   right side present iff x at ((i+2-1) mod n)+1 is 0, left side likewise
//   with i-2.
ImbalanceValue imbalance_lambda(const BitString& upper, std::uint32_t direction);

// irr(Gamma_n) = 2 |E(Gamma_{n-1})|; 0 for n = 0.
u64 irr_gamma(std::uint32_t n);

// irr(Lambda_n) = 2 n F_{n-2} for n >= 3; returns 0 below that range (the
// formula is not claimed there -- Lambda_2 actually has irregularity 2,
// available through the brute-force oracle).
u64 irr_lambda(std::uint32_t n);

// Edge counts by imbalance value.
struct ImbalanceCensus {
    u64 zero = 0;
    u64 one = 0;
    u64 two = 0;

    u64 total() const { return checked_add(checked_add(zero, one), two); }

    friend bool operator==(const ImbalanceCensus&, const ImbalanceCensus&) = default;
};

// Closed forms for n >= 2:
//   zero: sum_{i=3}^{n-2} F_{i-2} F_{n-i-1} + 2 F_{n-2}
//   one:  2 sum_{i=1}^{n-3} F_i F_{n-i-2} + 2 F_{n-1}
//   two:  sum_{i=2}^{n-1} F_{i-1} F_{n-i}
// Smaller n fall back to degree differencing over the built graph.
ImbalanceCensus gamma_class_census(std::uint32_t n);

// Closed forms for n >= 5: (n F_{n-5}, 2 n F_{n-4}, n F_{n-3}); n <= 4 falls
// back to degree differencing.
ImbalanceCensus lambda_class_census(std::uint32_t n);

// Degree differencing over an explicit graph; shared by the small-n windows
// above and by the verification oracle.
ImbalanceCensus census_by_degrees(const CubeGraph& g);

}  // namespace fibcube
