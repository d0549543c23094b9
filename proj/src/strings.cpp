#include "fibcube/strings.hpp"

#include <atomic>
#include <stdexcept>

namespace fibcube {

namespace {
std::atomic<std::uint32_t> g_cap{26};
}

std::uint32_t enumeration_cap() { return g_cap.load(); }

void set_enumeration_cap(std::uint32_t cap) {
    if (cap < 1 || cap > 62)
        throw std::invalid_argument("enumeration cap must lie in [1, 62]");
    g_cap.store(cap);
}

const char* to_string(StringClass c) {
    switch (c) {
        case StringClass::All: return "all";
        case StringClass::Fib: return "fib";
        case StringClass::Fib0dot: return "fib0.";
        case StringClass::Fib1dot: return "fib1.";
        case StringClass::FibDot0: return "fib.0";
        case StringClass::FibDot1: return "fib.1";
        case StringClass::Fib00: return "fib00";
        case StringClass::Lucas: return "lucas";
        case StringClass::NonFib: return "nonfib";
    }
    throw std::invalid_argument("unknown string class");
}

bool is_member(const BitString& s, StringClass c) {
    const std::uint32_t n = s.length();
    switch (c) {
        case StringClass::All:
            return true;
        case StringClass::Fib:
            return is_fibonacci_string(s);
        case StringClass::NonFib:
            return !is_fibonacci_string(s);
        case StringClass::Lucas:
            return is_lucas_string(s);
        case StringClass::Fib0dot:
            return is_fibonacci_string(s) && (n == 0 || s.bit(1) == 0);
        case StringClass::Fib1dot:
            return is_fibonacci_string(s) && n >= 1 && s.bit(1) == 1;
        case StringClass::FibDot0:
            return is_fibonacci_string(s) && (n == 0 || s.bit(n) == 0);
        case StringClass::FibDot1:
            return is_fibonacci_string(s) && n >= 1 && s.bit(n) == 1;
        case StringClass::Fib00:
            return is_fibonacci_string(s) && (n == 0 || (s.bit(1) == 0 && s.bit(n) == 0));
    }
    throw std::invalid_argument("unknown string class");
}

std::vector<BitString> enumerate(std::uint32_t n, StringClass c) {
    if (n > enumeration_cap())
        throw std::out_of_range("n = " + std::to_string(n) + " exceeds the enumeration cap " +
                                std::to_string(enumeration_cap()));
    std::vector<BitString> out;
    out.reserve(count_class(n, c));
    const u64 limit = u64{1} << n;
    for (u64 v = 0; v < limit; ++v) {
        BitString s(n, v);
        if (is_member(s, c))
            out.push_back(s);
    }
    return out;
}

u64 count_class(std::uint32_t n, StringClass c) {
    switch (c) {
        case StringClass::All:
            return checked_pow2(n);
        case StringClass::Fib:
            return fibonacci(n + 2);
        case StringClass::NonFib:
            return checked_sub(checked_pow2(n), fibonacci(n + 2));
        case StringClass::Lucas:
            // L_n = F_{n-1} + F_{n+1}; the single length-0 Lucas string is
            // the empty string.  Validated against enumeration in the tests.
            return n == 0 ? 1 : checked_add(fibonacci(n - 1), fibonacci(n + 1));
        case StringClass::Fib0dot:
        case StringClass::FibDot0:
            return fibonacci(n + 1);
        case StringClass::Fib1dot:
        case StringClass::FibDot1:
            return fibonacci(n);
        case StringClass::Fib00:
            return n == 0 ? 1 : fibonacci(n);
    }
    throw std::invalid_argument("unknown string class");
}

u64 total_zeros_in_fib(std::uint32_t n) {
    u64 total = 0;
    for (std::uint32_t i = 1; i <= n; ++i)
        total = checked_add(total, checked_mul(fibonacci(i + 1), fibonacci(n - i + 2)));
    return total;
}

}  // namespace fibcube
