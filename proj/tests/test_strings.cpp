#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "fibcube/strings.hpp"

using namespace fibcube;

namespace {

std::vector<std::string> rendered(std::uint32_t n, StringClass c) {
    std::vector<std::string> out;
    for (const BitString& s : enumerate(n, c))
        out.push_back(s.to_string());
    return out;
}

constexpr StringClass kClasses[] = {
    StringClass::All,     StringClass::Fib,     StringClass::Fib0dot,
    StringClass::Fib1dot, StringClass::FibDot0, StringClass::FibDot1,
    StringClass::Fib00,   StringClass::Lucas,   StringClass::NonFib,
};

}  // namespace

TEST_CASE("membership of the named classes") {
    CHECK(is_member(BitString::parse("101"), StringClass::Fib));
    CHECK_FALSE(is_member(BitString::parse("101"), StringClass::Lucas));
    CHECK(is_member(BitString::parse("0110"), StringClass::NonFib));
    CHECK_FALSE(is_member(BitString::parse("0110"), StringClass::Fib));
    CHECK(is_member(BitString::parse("010"), StringClass::Fib0dot));
    CHECK(is_member(BitString::parse("100"), StringClass::Fib1dot));
    CHECK(is_member(BitString::parse("001"), StringClass::FibDot1));
    CHECK(is_member(BitString::parse("0010"), StringClass::Fib00));
    CHECK_FALSE(is_member(BitString::parse("1"), StringClass::Lucas));
    CHECK(is_member(BitString::parse("0"), StringClass::Lucas));
}

TEST_CASE("the empty string") {
    const BitString eps;
    CHECK(is_member(eps, StringClass::Fib));
    CHECK(is_member(eps, StringClass::Fib0dot));
    CHECK(is_member(eps, StringClass::Fib00));
    CHECK(is_member(eps, StringClass::Lucas));
    CHECK(is_member(eps, StringClass::FibDot0));
    CHECK_FALSE(is_member(eps, StringClass::Fib1dot));
    CHECK_FALSE(is_member(eps, StringClass::FibDot1));
    CHECK_FALSE(is_member(eps, StringClass::NonFib));
    CHECK(enumerate(0, StringClass::Fib).size() == 1);
    CHECK(count_class(0, StringClass::Fib00) == 1);
    CHECK(count_class(0, StringClass::Lucas) == 1);
    CHECK(count_class(0, StringClass::Fib1dot) == 0);
}

TEST_CASE("enumeration is ascending and matches the drawings") {
    CHECK(rendered(3, StringClass::Fib) ==
          std::vector<std::string>{"000", "001", "010", "100", "101"});
    CHECK(rendered(3, StringClass::Lucas) ==
          std::vector<std::string>{"000", "001", "010", "100"});
    CHECK(rendered(3, StringClass::NonFib) == std::vector<std::string>{"011", "110", "111"});
}

TEST_CASE("closed-form counts match enumeration for every class") {
    CHECK(count_class(3, StringClass::Fib) == 5);
    CHECK(count_class(4, StringClass::NonFib) == 8);
    for (std::uint32_t n = 0; n <= 14; ++n)
        for (StringClass c : kClasses)
            CHECK(count_class(n, c) == enumerate(n, c).size());
}

TEST_CASE("class algebra: partitions and inclusions") {
    for (std::uint32_t n = 0; n <= 10; ++n) {
        for (const BitString& s : enumerate(n, StringClass::All)) {
            const bool fib = is_member(s, StringClass::Fib);
            CHECK(fib != is_member(s, StringClass::NonFib));
            if (fib) {
                CHECK(is_member(s, StringClass::Fib0dot) !=
                      is_member(s, StringClass::Fib1dot));
                CHECK(is_member(s, StringClass::FibDot0) !=
                      is_member(s, StringClass::FibDot1));
            }
            if (is_member(s, StringClass::Fib00)) {
                CHECK(is_member(s, StringClass::Fib0dot));
                CHECK(is_member(s, StringClass::FibDot0));
            }
            if (is_member(s, StringClass::Lucas))
                CHECK(fib);
        }
    }
}

TEST_CASE("recursive decomposition of the Fibonacci strings") {
    for (std::uint32_t n = 2; n <= 12; ++n) {
        std::set<BitString> built;
        for (const BitString& s : enumerate(n - 1, StringClass::Fib))
            built.insert(BitString(n, s.value()));
        for (const BitString& s : enumerate(n - 2, StringClass::Fib))
            built.insert(BitString(n, s.value() | (u64{1} << (n - 1))));
        const auto direct = enumerate(n, StringClass::Fib);
        REQUIRE(built.size() == direct.size());
        CHECK(std::equal(built.begin(), built.end(), direct.begin()));
    }
}

TEST_CASE("strings beginning with 1 are shifted strings not beginning with 1") {
    for (std::uint32_t n = 1; n <= 12; ++n) {
        std::set<BitString> built;
        for (const BitString& s : enumerate(n - 1, StringClass::Fib0dot))
            built.insert(BitString(n, s.value() | (u64{1} << (n - 1))));
        const auto direct = enumerate(n, StringClass::Fib1dot);
        REQUIRE(built.size() == direct.size());
        CHECK(std::equal(built.begin(), built.end(), direct.begin()));
    }
}

TEST_CASE("total zeros in Fibonacci strings") {
    CHECK(total_zeros_in_fib(0) == 0);
    CHECK(total_zeros_in_fib(1) == 1);  // Fib_1 = {0, 1} holds a single 0
    CHECK(total_zeros_in_fib(3) == 10);
    for (std::uint32_t n = 0; n <= 14; ++n) {
        u64 brute = 0;
        for (const BitString& s : enumerate(n, StringClass::Fib))
            for (std::uint32_t i = 1; i <= n; ++i)
                brute += s.bit(i) == 0;
        CHECK(total_zeros_in_fib(n) == brute);
    }
}

TEST_CASE("the enumeration cap is enforced and adjustable") {
    CHECK(enumeration_cap() == 26);
    CHECK_THROWS_AS(enumerate(27, StringClass::Fib), std::out_of_range);
    set_enumeration_cap(4);
    CHECK_THROWS_AS(enumerate(5, StringClass::All), std::out_of_range);
    CHECK(enumerate(4, StringClass::All).size() == 16);
    set_enumeration_cap(26);
    CHECK_THROWS_AS(set_enumeration_cap(0), std::invalid_argument);
    CHECK_THROWS_AS(set_enumeration_cap(63), std::invalid_argument);
}

TEST_CASE("Lucas count identity against enumeration") {
    for (std::uint32_t n = 1; n <= 14; ++n)
        CHECK(count_class(n, StringClass::Lucas) ==
              fibonacci(n - 1) + fibonacci(n + 1));
}
