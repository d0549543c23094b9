#pragma once

#include <cstdint>
#include <vector>

#include "fibcube/bitstring.hpp"
#include "fibcube/fib.hpp"

namespace fibcube {

// A Fibonacci string has no "11" substring; a Lucas string additionally may
// not have 1 in both the first and last position (the cyclic condition).
inline bool is_fibonacci_string(const BitString& s) {
    return (s.value() & (s.value() >> 1)) == 0;
}

inline bool is_lucas_string(const BitString& s) {
    if (!is_fibonacci_string(s))
        return false;
    return s.length() == 0 || !(s.bit(1) == 1 && s.bit(s.length()) == 1);
}

// The vertex classes of interest.  Fib0dot / Fib1dot split Fibonacci strings
// by the first character, FibDot0 / FibDot1 by the last, Fib00 requires both
// ends to avoid 1.  The empty string belongs to every "not beginning/ending
// with 1" class.
enum class StringClass {
    All,
    Fib,
    Fib0dot,
    Fib1dot,
    FibDot0,
    FibDot1,
    Fib00,
    Lucas,
    NonFib,
};

const char* to_string(StringClass c);

bool is_member(const BitString& s, StringClass c);

// Full-length scans are guarded by a process-wide cap (default 26) so a
// mistyped n cannot trigger a 2^40 loop.
std::uint32_t enumeration_cap();
void set_enumeration_cap(std::uint32_t cap);

// All length-n members of c in ascending numeric order.
std::vector<BitString> enumerate(std::uint32_t n, StringClass c);

// Closed-form cardinality of each class at length n.
u64 count_class(std::uint32_t n, StringClass c);

// Sum over i of F_{i+1} * F_{n-i+2}: the number of (string, position) pairs
// with a 0 among Fibonacci strings of length n.
u64 total_zeros_in_fib(std::uint32_t n);

}  // namespace fibcube
