#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fibcube/cubes.hpp"

namespace fibcube {

enum class Side { Left, Right };

const char* to_string(Side s);

// A couple (e, e') where e' = {y, y+delta_j} is an imbalanced edge for
// e = {y, y+delta_i}: both edges share the lower endpoint y and the translate
// of e' across e leaves the graph.  j is forced to i-1 (Left) or i+1 (Right),
// cyclically in the Lucas cube, so (e, side) determines the couple.
struct ImbalancedCouple {
    Edge e;     // lower endpoint y and direction i
    Side side;

    friend auto operator<=>(const ImbalancedCouple&, const ImbalancedCouple&) = default;
};

// The edge e' of the couple (its direction depends on the family's index
// arithmetic).
Edge couple_partner_edge(const ImbalancedCouple& c, Family family);

// Every imbalanced couple of a Fibonacci or Lucas cube, in canonical edge
// order (Right before Left per edge).  The count equals the irregularity.
std::vector<ImbalancedCouple> enumerate_couples(const CubeGraph& g);

// Right couples of the Fibonacci cube <-> edges of the next smaller one:
// delete position i+1 of the upper endpoint.  The inverse re-inserts a 0
// after the edge's 1.
Edge theta_gamma_right(const ImbalancedCouple& c);
ImbalancedCouple theta_gamma_right_inverse(const Edge& f);

// Left couples: delete position i-1 of the upper endpoint; the inverse
// inserts a 0 in front of the edge's 1.
Edge phi_gamma_left(const ImbalancedCouple& c);
ImbalancedCouple phi_gamma_left_inverse(const Edge& f);

// Lucas couples in direction i <-> Fibonacci strings of length n-4.
// The direction is rotated to the front (an automorphism of the Lucas cube),
// where the upper endpoint reads 100z0 (Right) or 10z00 (Left); the map
// extracts z.
BitString theta_lambda(const ImbalancedCouple& c);
ImbalancedCouple theta_lambda_inverse(const BitString& z, std::uint32_t direction, Side side,
                                      std::uint32_t n);

// "y<TAB>direction<TAB>side"
std::string couple_line(const ImbalancedCouple& c);

}  // namespace fibcube
